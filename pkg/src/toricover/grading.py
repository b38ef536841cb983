"""Multigraded polynomial data for Cox ring presentations.

The grading group is ``Z^r + Z/d1 + ... + Z/dk``: the free part is given by
a weight matrix ``Q`` and the torsion part by a :class:`TorsionMatrix` whose
row ``j`` holds residues modulo ``moduli[j]``.
"""

from dataclasses import dataclass
import re

from .errors import (
    EmptyPolynomialError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NotFreeHomogeneousError,
    TextSyntaxError,
)
from .exactla import IntMatrix, as_int_matrix


@dataclass(frozen=True)
class TorsionMatrix:
    moduli: tuple
    entries: IntMatrix

    def __post_init__(self):
        moduli = tuple(int(d) for d in self.moduli)
        entries = as_int_matrix(self.entries, ncols=None)
        if entries.nrows != len(moduli):
            raise LengthMismatchError(
                f"{len(moduli)} moduli but {entries.nrows} torsion rows")
        for d in moduli:
            if d < 2:
                raise ValueError(f"modulus {d} < 2")
        reduced = IntMatrix([[x % d for x in row]
                             for row, d in zip(entries, moduli)],
                            entries.ncols)
        object.__setattr__(self, "moduli", moduli)
        object.__setattr__(self, "entries", reduced)

    @classmethod
    def empty(cls, m):
        return cls((), IntMatrix.zeros(0, m))

    @property
    def ncols(self):
        return self.entries.ncols


@dataclass(frozen=True, order=True)
class MultiDegree:
    free: tuple
    torsion: tuple = ()

    def __str__(self):
        free = "(" + ", ".join(str(x) for x in self.free) + ")"
        if not self.torsion:
            return free
        return free + "; " + ", ".join(str(x) for x in self.torsion)


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in ``num_vars`` variables.

    ``terms`` holds ``(coefficient, exponents)`` pairs with nonzero
    coefficients and distinct exponent vectors, sorted lexicographically
    by decreasing exponent vector (so ``x1`` comes before ``x2``).
    """

    num_vars: int
    terms: tuple

    @classmethod
    def from_terms(cls, num_vars, terms):
        acc = {}
        for coeff, exps in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars:
                raise LengthMismatchError(
                    f"exponent vector of length {len(exps)}, "
                    f"expected {num_vars}")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            acc[exps] = acc.get(exps, 0) + int(coeff)
        return cls(num_vars, tuple((c, e) for e, c in acc.items() if c))

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(
            sorted(((c, tuple(e)) for c, e in self.terms),
                   key=lambda t: t[1], reverse=True)))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (c, exps) in enumerate(self.terms):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            mono = "*".join(factors)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)


@dataclass(frozen=True)
class GradedPresentation:
    Q: IntMatrix
    torsion: TorsionMatrix
    relations: tuple = ()

    def __post_init__(self):
        Q = as_int_matrix(self.Q)
        if Q.rank() != Q.nrows:
            raise ValueError("weight matrix must have full row rank")
        torsion = self.torsion
        if torsion is None:
            torsion = TorsionMatrix.empty(Q.ncols)
        if torsion.ncols != Q.ncols and torsion.moduli:
            raise LengthMismatchError(
                f"torsion matrix has {torsion.ncols} columns, Q has "
                f"{Q.ncols}")
        for p in self.relations:
            if p.num_vars != Q.ncols:
                raise LengthMismatchError(
                    f"relation in {p.num_vars} variables, Q has {Q.ncols}")
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "torsion", torsion)
        object.__setattr__(self, "relations", tuple(self.relations))

    @property
    def num_vars(self):
        return self.Q.ncols


def monomial_degree(p, exponents):
    exponents = tuple(exponents)
    if len(exponents) != p.num_vars:
        raise LengthMismatchError(
            f"exponent vector of length {len(exponents)}, expected "
            f"{p.num_vars}")
    free = p.Q.apply(exponents)
    torsion = tuple(sum(a * e for a, e in zip(row, exponents)) % d
                    for row, d in zip(p.torsion.entries, p.torsion.moduli))
    return MultiDegree(free, torsion)


@dataclass(frozen=True)
class HomogeneityResult:
    homogeneous: bool
    degree: MultiDegree = None
    conflict: tuple = None  # ((term, degree), (term, degree))

    def __bool__(self):
        return self.homogeneous


def is_homogeneous(p, poly):
    if not poly.terms:
        raise EmptyPolynomialError("polynomial has no terms")
    first = poly.terms[0]
    deg = monomial_degree(p, first[1])
    for term in poly.terms[1:]:
        other = monomial_degree(p, term[1])
        if other != deg:
            return HomogeneityResult(False, conflict=((first, deg),
                                                      (term, other)))
    return HomogeneityResult(True, degree=deg)


def cover_grading(p):
    """The same presentation graded by the free part only."""
    free = GradedPresentation(p.Q, TorsionMatrix.empty(p.num_vars),
                              p.relations)
    for rel in p.relations:
        if rel.terms and not is_homogeneous(free, rel):
            raise NotFreeHomogeneousError(
                f"relation {rel} is not homogeneous for the free grading")
    return free


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|([+\-*^]))")


def parse_polynomial(text, m):
    """Parse ``term (('+'|'-') term)*`` where a term is
    ``[integer '*'] factor ('*' factor)*`` and a factor is ``x<i>[^<e>]``.

    A leading sign and bare integer (constant) terms are accepted.  Indices
    are 1-based and must be ``<= m``.
    """
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise TextSyntaxError(f"unexpected character {text[pos]!r}",
                                  1, pos + 1)
        kind = "int" if mt.group(1) else "x" if mt.group(2) else mt.group(3)
        tokens.append((kind, mt.group(1), mt.start(mt.lastindex) + 1))
        pos = mt.end()
    tokens.append(("end", None, len(text) + 1))
    i = 0

    def peek():
        return tokens[i]

    def expect(kind):
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1] or tok[0])
            raise TextSyntaxError(f"expected {kind!r}, found {found}",
                                  1, tok[2])
        i += 1
        return tok

    def factor(exps):
        nonlocal i
        expect("x")
        idx_tok = expect("int")
        idx = int(idx_tok[1])
        if not 1 <= idx <= m:
            raise IndexOutOfRangeError(
                f"variable x{idx} outside x1..x{m}")
        power = 1
        if peek()[0] == "^":
            i += 1
            power = int(expect("int")[1])
        exps[idx - 1] += power

    def term(sign):
        nonlocal i
        coeff = 1
        exps = [0] * m
        if peek()[0] == "int":
            coeff = int(expect("int")[1])
            if peek()[0] != "*":
                return sign * coeff, exps  # constant term
            expect("*")
        factor(exps)
        while peek()[0] == "*":
            i += 1
            factor(exps)
        return sign * coeff, exps

    terms = []
    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if peek()[0] == "-" else 1
        i += 1
    terms.append(term(sign))
    while peek()[0] in ("+", "-"):
        sign = -1 if peek()[0] == "-" else 1
        i += 1
        terms.append(term(sign))
    if peek()[0] != "end":
        raise TextSyntaxError(f"unexpected {peek()[0]!r}", 1, peek()[2])
    return Polynomial.from_terms(m, terms)
