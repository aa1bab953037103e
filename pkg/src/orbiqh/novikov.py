"""Polynomials in X_1..X_M with Novikov coefficients q^a T^b (a, b rational).

A term is keyed by ``(xexp, qexp, texp)``; the value is its nonzero
rational coefficient.  Polynomials are immutable and hashable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence


class NotHomogeneous(ValueError):
    pass


Key = tuple  # (tuple[int, ...], Fraction, Fraction)


def grevlex_key(e):
    """Sort key: a larger key is a larger monomial in graded reverse lex."""
    return (sum(e), tuple(-x for x in reversed(e)))


class NovikovPolynomial:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping] = None):
        self.nvars = nvars
        clean = {}
        for (x, q, t), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                x = tuple(int(e) for e in x)
                if len(x) != nvars or any(e < 0 for e in x):
                    raise ValueError(f"bad exponent vector {x} for {nvars} variables")
                clean[(x, Fraction(q), Fraction(t))] = c
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {((0,) * nvars, 0, 0): c})

    @classmethod
    def monomial(cls, nvars, coeff=1, x=None, q=0, t=0):
        x = tuple(x) if x is not None else (0,) * nvars
        return cls(nvars, {(x, q, t): coeff})

    @classmethod
    def variable(cls, k, nvars):
        """X_{k+1} (0-based index k)."""
        x = [0] * nvars
        x[k] = 1
        return cls(nvars, {(tuple(x), 0, 0): 1})

    @classmethod
    def from_exponents(cls, nvars, exps: Mapping[int, int], coeff=1, q=0, t=0):
        x = [0] * nvars
        for k, e in exps.items():
            x[k] += e
        return cls(nvars, {(tuple(x), q, t): coeff})

    # -- basic protocol ----------------------------------------------------

    def terms(self) -> dict:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NovikovPolynomial.constant(self.nvars, other)
        if not isinstance(other, NovikovPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, NovikovPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return NovikovPolynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return NovikovPolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return NovikovPolynomial(self.nvars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for (x1, q1, t1), c1 in self._terms.items():
            for (x2, q2, t2), c2 in other._terms.items():
                k = (tuple(a + b for a, b in zip(x1, x2)), q1 + q2, t1 + t2)
                out[k] = out.get(k, 0) + c1 * c2
        return NovikovPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = NovikovPolynomial.constant(self.nvars)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, q=0, t=0) -> "NovikovPolynomial":
        """Multiply by q^q T^t."""
        q, t = Fraction(q), Fraction(t)
        return NovikovPolynomial(self.nvars, {(x, a + q, b + t): c for (x, a, b), c in self._terms.items()})

    def classical_part(self) -> "NovikovPolynomial":
        """Terms free of q and T."""
        return NovikovPolynomial(self.nvars, {k: c for k, c in self._terms.items() if k[1] == 0 and k[2] == 0})

    def variables(self) -> set:
        return {i for (x, _, _) in self._terms for i, e in enumerate(x) if e}

    def __repr__(self):
        return f"NovikovPolynomial({render(self)!r})"

    def __str__(self):
        return render(self)


def valuation_T(p: NovikovPolynomial):
    """Minimal T-exponent; +inf for the zero polynomial."""
    if p.is_zero():
        return math.inf
    return min(t for (_, _, t) in p._terms)


def term_degree(key, ages: Sequence[Fraction]) -> Fraction:
    x, q, _ = key
    return sum((Fraction(a) * e for a, e in zip(ages, x)), Fraction(0)) + q


def degree(p: NovikovPolynomial, ages: Sequence[Fraction]) -> Fraction:
    """Common Q-degree with deg X_k = ages[k], deg q = 1, deg T = 0."""
    degs = {term_degree(k, ages) for k in p._terms}
    if not degs:
        raise NotHomogeneous("the zero polynomial has no degree")
    if len(degs) > 1:
        raise NotHomogeneous(f"term degrees {sorted(degs)}")
    return degs.pop()


def is_homogeneous(p, ages) -> bool:
    try:
        degree(p, ages)
    except NotHomogeneous:
        return p.is_zero()
    return True


# -- text rendering ----------------------------------------------------------

def format_rational(r) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def _fmt_exp(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return str(e.numerator)
    return f"({format_rational(e)})"


def sort_terms(p: NovikovPolynomial, ages=None):
    def key(item):
        (x, q, t), _ = item
        d = term_degree((x, q, t), ages) if ages is not None else 0
        return (-d, tuple(-v for v in _flatten(grevlex_key(x))), t, q)

    return sorted(p._terms.items(), key=key)


def _flatten(k):
    total, rest = k
    return (total,) + rest


def render(p: NovikovPolynomial, ages=None) -> str:
    """Canonical text, e.g. ``X1*X2*X3 - q^2*T^3*X4``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, ((x, q, t), c) in enumerate(sort_terms(p, ages)):
        factors = []
        if q:
            factors.append("q" if q == 1 else f"q^{_fmt_exp(q)}")
        if t:
            factors.append("T" if t == 1 else f"T^{_fmt_exp(t)}")
        for k, e in enumerate(x):
            if e:
                factors.append(f"X{k + 1}" if e == 1 else f"X{k + 1}^{e}")
        mag = abs(c)
        if not factors:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _fmt_coeff(mag) + "*" + "*".join(factors)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


# -- JSON term lists -----------------------------------------------------------

def to_json(p: NovikovPolynomial, ages=None) -> list:
    return [
        {"coeff": format_rational(c), "x": list(x), "q": format_rational(q), "t": format_rational(t)}
        for (x, q, t), c in sort_terms(p, ages)
    ]


def from_json(data: Iterable[Mapping], nvars: int) -> NovikovPolynomial:
    terms: dict = {}
    for d in data:
        k = (tuple(d["x"]), Fraction(d.get("q", "0")), Fraction(d.get("t", "0")))
        terms[k] = terms.get(k, 0) + Fraction(d["coeff"])
    return NovikovPolynomial(nvars, terms)
