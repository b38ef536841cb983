"""Exact strict-positivity feasibility in a row lattice.

Decides whether some rational ``c`` satisfies ``c @ A >= 1`` componentwise by
Fourier-Motzkin elimination over ``Fraction``.  Every derived inequality
carries its nonnegative multipliers on the original constraints, so an
infeasible run ends with a Farkas refutation ``y >= 0, A y = 0, sum(y) > 0``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm

from .matrix import as_int_matrix, primitive_from_rational


@dataclass(frozen=True)
class PositivityCertificate:
    """Outcome of :func:`strictly_positive_in_rowspace`.

    Exactly one of ``witness`` / ``refutation`` is set.  ``coefficients`` is
    the integer combination of rows giving ``witness``.
    """

    feasible: bool
    coefficients: tuple = None
    witness: tuple = None
    refutation: tuple = None

    def __bool__(self):
        return self.feasible


class _Ineq:
    __slots__ = ("coeffs", "rhs", "mult")

    def __init__(self, coeffs, rhs, mult):
        self.coeffs = coeffs
        self.rhs = rhs
        self.mult = mult

    def key(self):
        # scale so the first nonzero coefficient (or rhs) is +-1 for dedup
        lead = next((abs(c) for c in self.coeffs if c), abs(self.rhs) or 1)
        return (tuple(c / lead for c in self.coeffs), self.rhs / lead)


def _eliminate(ineqs, k):
    pos = [q for q in ineqs if q.coeffs[k] > 0]
    neg = [q for q in ineqs if q.coeffs[k] < 0]
    out = [q for q in ineqs if q.coeffs[k] == 0]
    for p in pos:
        for q in neg:
            a, b = -q.coeffs[k], p.coeffs[k]
            out.append(_Ineq(
                tuple(a * x + b * y for x, y in zip(p.coeffs, q.coeffs)),
                a * p.rhs + b * q.rhs,
                tuple(a * x + b * y for x, y in zip(p.mult, q.mult))))
    seen = {}
    for q in out:
        key = q.key()
        if key not in seen:
            seen[key] = q
    return list(seen.values())


def _pick(lower, upper):
    """A value in [lower, upper] (either end may be None), preferring an
    integer of small magnitude."""
    lo = ceil(lower) if lower is not None else None
    hi = floor(upper) if upper is not None else None
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(min(0, hi))
    if hi is None:
        return Fraction(max(0, lo))
    if lo <= hi:
        return Fraction(min(max(0, lo), hi))
    return lower


def strictly_positive_in_rowspace(A):
    A = as_int_matrix(A)
    r, m = A.shape
    cols = A.columns()
    ineqs = [
        _Ineq(tuple(Fraction(x) for x in cols[j]), Fraction(1),
              tuple(Fraction(int(i == j)) for i in range(m)))
        for j in range(m)
    ]
    stages = []
    for k in reversed(range(r)):
        stages.append(ineqs)
        ineqs = _eliminate(ineqs, k)
    stages.reverse()  # stages[k] involves variables 0..k only

    for q in ineqs:
        if q.rhs > 0:
            y = primitive_from_rational(q.mult)
            return PositivityCertificate(False, refutation=y)
    if m == 0:
        # empty system: every c works, vacuous witness
        return PositivityCertificate(True, coefficients=(0,) * r, witness=())

    c = []
    for k in range(r):
        lower = upper = None
        for q in stages[k]:
            a = q.coeffs[k]
            if a == 0:
                continue
            bound = (q.rhs - sum(q.coeffs[i] * c[i] for i in range(k))) / a
            if a > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        c.append(_pick(lower, upper))
    den = lcm(*(x.denominator for x in c)) if c else 1
    coeffs = tuple(int(x * den) for x in c)
    witness = tuple(sum(coeffs[i] * cols[j][i] for i in range(r))
                    for j in range(m))
    assert all(w >= 1 for w in witness), "elimination back-substitution bug"
    return PositivityCertificate(True, coefficients=coeffs, witness=witness)


def check_refutation(A, y):
    """Verify a Farkas refutation: ``y >= 0``, ``A y = 0``, ``y != 0``."""
    A = as_int_matrix(A)
    return (len(y) == A.ncols and all(t >= 0 for t in y) and any(y)
            and not any(A.apply(y)))
