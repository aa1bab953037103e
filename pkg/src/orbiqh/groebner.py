"""Reduced Groebner bases, normal forms and quotient ranks.

The core Buchberger routine works on sparse dicts ``{exponent tuple:
coefficient}`` over any exact field (``Fraction`` or elements of sympy's
rational function field).  :class:`GroebnerBasis` wraps it for Novikov
polynomials: fractional q/T exponents are cleared by ``q = Q^alpha``,
``T = S^beta`` and Q, S are treated as invertible elements of QQ(Q, S).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import lcm
from typing import Callable, Sequence

from sympy import QQ
from sympy.polys.fields import field

from .novikov import NovikovPolynomial, grevlex_key, term_degree

PARAMS, Q, S = field("Q,S", QQ)


class InfiniteDimensional(ValueError):
    pass


class NonNovikovCoefficient(ValueError):
    """A coefficient is a rational function that is not a Laurent monomial sum."""


def elimination_key(nblock: int):
    """Block order: the first ``nblock`` variables dominate, grevlex within blocks."""

    def key(e):
        return (grevlex_key(e[:nblock]), grevlex_key(e[nblock:]))

    return key


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lead(p, key):
    return max(p, key=key)


def _monic(p, key):
    m = _lead(p, key)
    c = p[m]
    return {e: v / c for e, v in p.items()}


def _sub_mul(p, c, shift, g):
    """p - c * x^shift * g, in place."""
    for e, v in g.items():
        k = tuple(a + b for a, b in zip(e, shift))
        w = p.get(k, 0) - c * v
        if w != 0:
            p[k] = w
        else:
            p.pop(k, None)


def reduce(p: dict, basis: Sequence[dict], key: Callable) -> dict:
    """Fully reduced remainder of ``p`` modulo ``basis`` (monic polynomials)."""
    heads = [(_lead(g, key), g) for g in basis]
    p = dict(p)
    rem: dict = {}
    while p:
        m = _lead(p, key)
        c = p[m]
        for lm, g in heads:
            if _divides(lm, m):
                _sub_mul(p, c, tuple(a - b for a, b in zip(m, lm)), g)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f, g, key):
    lf, lg = _lead(f, key), _lead(g, key)
    l = tuple(max(a, b) for a, b in zip(lf, lg))
    out: dict = {}
    for e, v in f.items():
        out[tuple(a + b - c for a, b, c in zip(e, l, lf))] = v
    _sub_mul(out, 1, tuple(a - b for a, b in zip(l, lg)), g)
    return out


def buchberger(polys: Sequence[dict], key: Callable = grevlex_key) -> list[dict]:
    """Reduced Groebner basis, sorted by descending leading monomial."""
    basis = [_monic(p, key) for p in polys if p]
    if not basis:
        return []
    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        # normal strategy: smallest lcm first
        def lcm_of(pr):
            a, b = _lead(basis[pr[0]], key), _lead(basis[pr[1]], key)
            return key(tuple(max(x, y) for x, y in zip(a, b)))

        pairs.sort(key=lcm_of)
        i, j = pairs.pop(0)
        li, lj = _lead(basis[i], key), _lead(basis[j], key)
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        l = tuple(max(x, y) for x, y in zip(li, lj))
        # chain criterion
        if any(
            k not in (i, j)
            and _divides(_lead(basis[k], key), l)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        h = reduce(_spoly(basis[i], basis[j], key), basis, key)
        if h:
            basis.append(_monic(h, key))
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return _interreduce(basis, key)


def _interreduce(basis, key):
    basis = sorted(basis, key=lambda g: key(_lead(g, key)))
    minimal = []
    for g in basis:
        lg = _lead(g, key)
        if not any(_divides(_lead(h, key), lg) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        out.append(_monic(reduce(g, others, key), key))
    return sorted(out, key=lambda g: key(_lead(g, key)), reverse=True)


def standard_monomials(leads: Sequence[tuple], nvars: int) -> list[tuple]:
    """Monomials not divisible by any leading monomial; must be finite."""
    if any(not any(m) for m in leads):
        return []  # unit ideal
    bounds = []
    for v in range(nvars):
        pure = [m[v] for m in leads if m[v] and all(e == 0 for k, e in enumerate(m) if k != v)]
        if not pure:
            raise InfiniteDimensional(f"no leading monomial is a pure power of X{v + 1}")
        bounds.append(min(pure))
    out = []
    for e in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(m, e) for m in leads):
            out.append(e)
    return sorted(out, key=grevlex_key)


# -- Novikov-level interface ---------------------------------------------------

def _scales(polys):
    alpha = beta = 1
    for p in polys:
        for (_, q, t), _c in p:
            alpha = lcm(alpha, q.denominator)
            beta = lcm(beta, t.denominator)
    return alpha, beta


def _to_field(p: NovikovPolynomial, alpha, beta) -> dict:
    out: dict = {}
    for (x, q, t), c in p:
        qa, tb = q * alpha, t * beta
        if qa.denominator != 1 or tb.denominator != 1:
            raise ValueError("exponent scale too coarse")
        v = PARAMS(QQ(c.numerator, c.denominator)) * Q ** int(qa) * S ** int(tb)
        w = out.get(x, 0) + v
        if w != 0:
            out[x] = w
        else:
            out.pop(x, None)
    return out


def _frac(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _series_inverse(den: dict, top: int) -> dict:
    """1/den as a Laurent series in (Q, S), exact below S-degree ``top``.

    ``den`` maps (a, b) exponents to rationals.  Its lowest S-degree part must
    be a single monomial, so that den = lead * (1 + e) with e of positive
    S-valuation.
    """
    low = min(b for _, b in den)
    lows = [k for k in den if k[1] == low]
    if len(lows) != 1:
        raise NonNovikovCoefficient("denominator is not a unit of the Novikov ring")
    (la, lb) = lows[0]
    lc = den[lows[0]]
    e = {(a - la, b - lb): c / lc for (a, b), c in den.items() if (a, b) != (la, lb)}
    out = {(0, 0): Fraction(1)}
    power = {(0, 0): Fraction(1)}
    for _ in range(top):
        nxt: dict = {}
        for (a1, b1), c1 in power.items():
            for (a2, b2), c2 in e.items():
                if b1 + b2 < top:
                    k = (a1 + a2, b1 + b2)
                    nxt[k] = nxt.get(k, 0) - c1 * c2
        power = {k: v for k, v in nxt.items() if v}
        if not power:
            break
        for k, v in power.items():
            out[k] = out.get(k, 0) + v
    return {(a - la, b - lb): c / lc for (a, b), c in out.items() if c}


def _from_field(p: dict, nvars, alpha, beta, precision=None) -> NovikovPolynomial:
    """Back-substitute Q = q^(1/alpha), S = T^(1/beta).

    Coefficients whose denominator is not a monomial are Novikov series; they
    are expanded modulo T^precision, or rejected when ``precision`` is None.
    """
    terms: dict = {}
    for x, f in p.items():
        num = {k: _frac(c) for k, c in f.numer.terms()}
        den = {k: _frac(c) for k, c in f.denom.terms()}
        if len(den) == 1:
            ((da, db), dc), = den.items()
            expanded = {(na - da, nb - db): nc / dc for (na, nb), nc in num.items()}
        elif precision is None:
            raise NonNovikovCoefficient(f"coefficient {f} of X^{x} has a non-monomial denominator "
                                        "(a Novikov series); pass a T-precision to truncate")
        else:
            top = int(Fraction(precision) * beta) + 1 - min(b for _, b in num) + min(b for _, b in den)
            inv = _series_inverse(den, max(top, 0))
            expanded = {}
            for (na, nb), nc in num.items():
                for (ia, ib), ic in inv.items():
                    k = (na + ia, nb + ib)
                    expanded[k] = expanded.get(k, 0) + nc * ic
        for (a, b), c in expanded.items():
            t = Fraction(b, beta)
            if precision is not None and t >= precision:
                continue
            k = (x, Fraction(a, alpha), t)
            terms[k] = terms.get(k, 0) + c
    return NovikovPolynomial(nvars, terms)


class GroebnerBasis:
    """Reduced grevlex Groebner basis of an ideal of Novikov polynomials."""

    def __init__(self, generators: Sequence[NovikovPolynomial], nvars: int = None):
        generators = [g for g in generators]
        if nvars is None:
            if not generators:
                raise ValueError("nvars required for an empty generator list")
            nvars = generators[0].nvars
        self.nvars = nvars
        self.generators = tuple(generators)
        self._cache: dict = {}
        self.alpha, self.beta = _scales(self.generators)
        self._basis(self.alpha, self.beta)

    def _basis(self, alpha, beta):
        if (alpha, beta) not in self._cache:
            polys = [_to_field(g, alpha, beta) for g in self.generators]
            self._cache[(alpha, beta)] = buchberger(polys, grevlex_key)
        return self._cache[(alpha, beta)]

    @property
    def leading_monomials(self) -> list[tuple]:
        return [_lead(g, grevlex_key) for g in self._basis(self.alpha, self.beta)]

    @property
    def elements(self) -> list[NovikovPolynomial]:
        return [_from_field(g, self.nvars, self.alpha, self.beta) for g in self._basis(self.alpha, self.beta)]

    @property
    def field_elements(self) -> list[dict]:
        """The reduced basis over QQ(Q, S), with q = Q^alpha and T = S^beta."""
        return self._basis(self.alpha, self.beta)

    def normal_form(self, p: NovikovPolynomial, precision=None) -> NovikovPolynomial:
        """Remainder of ``p``; with ``precision``, exact modulo T^precision."""
        a, b = _scales([p])
        alpha, beta = lcm(a, self.alpha), lcm(b, self.beta)
        basis = self._basis(alpha, beta)
        r = reduce(_to_field(p, alpha, beta), basis, grevlex_key)
        return _from_field(r, self.nvars, alpha, beta, precision)

    def contains(self, p: NovikovPolynomial) -> bool:
        return self.normal_form(p).is_zero()

    def standard_monomials(self) -> list[tuple]:
        if not self._basis(self.alpha, self.beta):
            raise InfiniteDimensional("zero ideal")
        return standard_monomials(self.leading_monomials, self.nvars)

    def quotient_rank(self) -> int:
        return len(self.standard_monomials())

    def quotient_degrees(self, ages) -> list[Fraction]:
        return sorted(term_degree((m, 0, 0), ages) for m in self.standard_monomials())


def groebner_basis(generators, nvars=None) -> GroebnerBasis:
    return GroebnerBasis(generators, nvars)


def normal_form(p, basis: GroebnerBasis, precision=None) -> NovikovPolynomial:
    return basis.normal_form(p, precision)


def is_member(p, generators) -> bool:
    basis = generators if isinstance(generators, GroebnerBasis) else GroebnerBasis(list(generators), p.nvars)
    return basis.contains(p)


def quotient_rank(basis: GroebnerBasis) -> int:
    return basis.quotient_rank()


def quotient_degrees(basis: GroebnerBasis, ages) -> list[Fraction]:
    return basis.quotient_degrees(ages)
