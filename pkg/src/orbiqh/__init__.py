"""Chen-Ruan and orbifold quantum cohomology presentations of toric orbifolds."""
