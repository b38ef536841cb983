"""Named fans and presentations used by the tests, demos and CLI."""

from dataclasses import dataclass

from .exactla import IntMatrix
from .fan import SquarefreeMonomialIdeal, fan_from_irrelevant, validate_fan


def projective_plane():
    return validate_fan([[1, 0, -1], [0, 1, -1]], [{1, 2}, {2, 3}, {1, 3}])


def p1xp1():
    """Rays e1, e2, -e2, -e1."""
    return validate_fan([[1, 0, 0, -1], [0, 1, -1, 0]],
                        [{1, 2}, {1, 3}, {3, 4}, {2, 4}])


def p1xp1_quotient():
    """P1 x P1 divided by the Z/2 that fixes the column lattice of index 2."""
    return validate_fan([[1, 1, -1, -1], [1, -1, 1, -1]],
                        [{1, 2}, {1, 3}, {3, 4}, {2, 4}])


def hirzebruch_f1():
    """Rays (1,0), (0,1), (-1,1), (0,-1)."""
    return validate_fan([[1, 0, -1, 0], [0, 1, 1, -1]],
                        [{1, 2}, {2, 3}, {3, 4}, {1, 4}])


QUADRIC_Q = IntMatrix([
    [2, 1, 0, 2, 0, 2, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 2, 2, 2],
])
QUADRIC_TORSION_MODULI = (2,)
QUADRIC_TORSION = IntMatrix([[0, 0, 0, 0, 1, 1, 1, 1]])
QUADRIC_V = IntMatrix([
    [1, 0, 0, 1, -3, 0, -4, 5],
    [0, 1, 0, 1, -3, 0, -3, 4],
    [0, 0, 1, 1, -3, 0, -2, 3],
    [0, 0, 0, 2, -2, 0, -4, 4],
    [0, 0, 0, 0, 0, 1, -2, 1],
])
QUADRIC_V_TILDE = IntMatrix([
    [1, 0, 0, 0, -2, 0, -2, 3],
    [0, 1, 0, 0, -2, 0, -1, 2],
    [0, 0, 1, 0, -2, 0, 0, 1],
    [0, 0, 0, 1, -1, 0, -2, 2],
    [0, 0, 0, 0, 0, 1, -2, 1],
])
QUADRIC_IRRELEVANT = SquarefreeMonomialIdeal(8, frozenset(map(frozenset, [
    {1, 3, 7}, {1, 5, 6}, {1, 5, 7}, {2, 4, 8},
    {2, 5, 6}, {2, 6, 8}, {3, 4, 7}, {3, 4, 8},
    {1, 2, 7, 8}, {1, 3, 6, 8}, {1, 4, 5, 8},
    {2, 3, 6, 7}, {2, 4, 5, 7}, {3, 4, 5, 6},
])))
QUADRIC_RELATION = "x1*x8 + x2*x7 + x3*x6 + x4*x5"


@dataclass(frozen=True)
class QuadricExample:
    """Cox ring data of the quadric example."""

    Q: IntMatrix = QUADRIC_Q
    torsion_moduli: tuple = QUADRIC_TORSION_MODULI
    torsion: IntMatrix = QUADRIC_TORSION
    V: IntMatrix = QUADRIC_V
    V_tilde: IntMatrix = QUADRIC_V_TILDE
    irrelevant: SquarefreeMonomialIdeal = QUADRIC_IRRELEVANT
    relation: str = QUADRIC_RELATION

    def fan(self):
        return fan_from_irrelevant(self.V, self.irrelevant)

    def presentation(self):
        from .grading import GradedPresentation, TorsionMatrix, parse_polynomial

        return GradedPresentation(
            self.Q,
            TorsionMatrix(self.torsion_moduli, self.torsion),
            (parse_polynomial(self.relation, self.Q.ncols),),
        )


def quadric_example():
    return QuadricExample()
