"""End-to-end check of the quadric example with Cl(X) = Z^3 + Z/2."""

from dataclasses import dataclass

from .cones import k_neighborly_dual
from .covering import beta_matrix, class_group, universal_cover
from .errors import ToricoverError
from .exactla import FiniteAbelianGroup, IntMatrix, same_row_lattice
from .fan import irrelevant_ideal, irrelevant_locus_codim, k_neighborly_primal
from .fixtures import QuadricExample
from .galecalc import classify_fan_matrix, gale_dual
from .grading import MultiDegree, is_homogeneous

EXPECTED_CLASS_GROUP = FiniteAbelianGroup(3, (2,))
EXPECTED_DEGREE = MultiDegree((2, 2, 2), (1,))
EXPECTED_COVER_DEGREE = 2
EXPECTED_CODIM = 3


@dataclass(frozen=True)
class CheckResult:
    label: str
    name: str
    passed: bool
    detail: str

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} ({self.label}) {self.name}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failed(self):
        return tuple(c for c in self.checks if not c.passed)

    def lines(self):
        return [c.line() for c in self.checks]


def _gale_of_v(d):
    G = gale_dual(d.V)
    ok = same_row_lattice(G, d.Q)
    return ok, ("row lattices agree" if ok else
                f"gale_dual(V) = {G.tolist()} spans a different lattice than Q")


def _annihilation(d):
    bad = []
    for name, M in (("V", d.V), ("V_tilde", d.V_tilde)):
        prod = d.Q @ M.T
        if not prod.is_zero():
            bad.append(f"Q*{name}^T = {prod.tolist()}")
    return not bad, "; ".join(bad) or "Q*V^T = 0 and Q*V_tilde^T = 0"


def _torsion_compatible(d):
    T = IntMatrix(d.torsion)
    prod = T @ d.V.T
    residues = [[x % mod for x in row]
                for row, mod in zip(prod, d.torsion_moduli)]
    ok = all(x == 0 for row in residues for x in row)
    return ok, ("T*V^T = 0 mod " + ", ".join(map(str, d.torsion_moduli))
                if ok else f"T*V^T mod moduli = {residues}")


def _class_group(d):
    G = class_group(d.V)
    ok = G == EXPECTED_CLASS_GROUP
    return ok, (f"Cl = {G.descriptor()}" if ok else
                f"Cl = {G.descriptor()}, expected "
                f"{EXPECTED_CLASS_GROUP.descriptor()}")


def _cover_matrix(d):
    report = classify_fan_matrix(d.V_tilde)
    twice = gale_dual(gale_dual(d.V))
    same = same_row_lattice(twice, d.V_tilde)
    problems = []
    if not report.is_cf:
        problems.append("V_tilde is not a CF-matrix (failed "
                        + ", ".join(report.failed_labels()) + ")")
    if not same:
        problems.append(f"double Gale dual {twice.tolist()} spans a "
                        "different lattice than V_tilde")
    return not problems, "; ".join(problems) or (
        "V_tilde is CF and equals the double Gale dual up to lattice")


def _cover_degree(d):
    beta = beta_matrix(d.V, d.V_tilde)
    data, _ = universal_cover(d.fan())
    det = abs(beta.det())
    ok = det == data.degree == EXPECTED_COVER_DEGREE
    return ok, (f"|det beta| = {det}, universal cover degree "
                f"{data.degree}, expected {EXPECTED_COVER_DEGREE}")


def _homogeneity(d):
    p = d.presentation()
    result = is_homogeneous(p, p.relations[0])
    if not result:
        (t1, g1), (t2, g2) = result.conflict
        return False, (f"not homogeneous: degrees {g1} and {g2} differ")
    ok = result.degree == EXPECTED_DEGREE
    return ok, (f"homogeneous of degree {result.degree}" if ok else
                f"degree {result.degree} does not match expected "
                f"{EXPECTED_DEGREE}")


def _codim_neighborly(d):
    fan = d.fan()
    codim = irrelevant_locus_codim(irrelevant_ideal(fan))
    primal = k_neighborly_primal(fan, 2)
    dual = k_neighborly_dual(fan, d.Q, 2)
    ok = codim == EXPECTED_CODIM and primal == dual
    return ok, (f"codimension {codim} (expected {EXPECTED_CODIM}); "
                f"2-neighborly primal {primal}, dual {dual}")


CHECKS = (
    ("i", "Gale duality of V and Q", _gale_of_v),
    ("ii", "Q annihilates V and V_tilde", _annihilation),
    ("iii", "torsion grading kills V", _torsion_compatible),
    ("iv", "class group", _class_group),
    ("v", "covering fan matrix", _cover_matrix),
    ("vi", "covering degree", _cover_degree),
    ("vii", "relation homogeneity", _homogeneity),
    ("viii", "irrelevant locus and neighborliness", _codim_neighborly),
)


def verify_example(data=None):
    """Run all eight checks on ``data`` (default: the built-in fixture).

    A check that raises reports the exception as its failure detail.
    """
    d = QuadricExample() if data is None else data
    results = []
    for label, name, fn in CHECKS:
        try:
            ok, detail = fn(d)
        except (ToricoverError, ValueError, AssertionError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(label, name, bool(ok), detail))
    return VerificationReport(tuple(results))
