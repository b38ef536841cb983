"""Command-line front end.

Every subcommand reads positional input files (``-`` for stdin), writes
canonical text or, with ``--json``, one JSON document whose numbers are
decimal strings.  Exit status: 0 success, 1 mathematical check failure,
2 input or parse error.
"""

import argparse
import json
import sys

from . import formats as fmt
from .cones import k_neighborly_dual, nef_cone
from .covering import beta_matrix, class_group, pi1_codim1, universal_cover
from .errors import (
    DimMismatchError,
    IndexOutOfRangeError,
    LengthMismatchError,
    ParseError,
    ToricoverError,
)
from .exactla import hnf, snf
from .fan import (
    fan_from_irrelevant,
    irrelevant_ideal,
    irrelevant_locus_codim,
    is_complete,
    k_neighborly_primal,
    validate_fan,
)
from .galecalc import classify_fan_matrix, classify_weight_matrix, gale_dual
from .grading import cover_grading, is_homogeneous, monomial_degree, parse_polynomial
from .verify import verify_example

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2

_INPUT_ERRORS = (ParseError, IndexOutOfRangeError, LengthMismatchError,
                 DimMismatchError, OSError, UnicodeDecodeError)


class _CheckFailed(Exception):
    """Raised by a handler whose output is complete but reports a failure."""

    def __init__(self, output):
        super().__init__()
        self.output = output


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _matrix(path):
    return fmt.parse_matrix(_read(path))


def _fan(path):
    V, cones = fmt.parse_fan_text(_read(path))
    return validate_fan(V, cones)


def _presentation(path):
    return fmt.parse_presentation(_read(path))


def _bool(value):
    return "true" if value else "false"


# Each handler returns (text, json_object).

def cmd_hnf(args):
    r = hnf(_matrix(args.matrix))
    text = "H\n" + fmt.format_matrix(r.H) + "U\n" + fmt.format_matrix(r.U)
    return text, {"H": fmt.matrix_json(r.H), "U": fmt.matrix_json(r.U)}


def cmd_snf(args):
    r = snf(_matrix(args.matrix))
    text = ("S\n" + fmt.format_matrix(r.S) + "U\n" + fmt.format_matrix(r.U)
            + "W\n" + fmt.format_matrix(r.W))
    return text, {"S": fmt.matrix_json(r.S), "U": fmt.matrix_json(r.U),
                  "W": fmt.matrix_json(r.W),
                  "diagonal": [str(d) for d in r.diagonal]}


def cmd_gale(args):
    G = gale_dual(_matrix(args.matrix))
    return fmt.format_matrix(G), fmt.matrix_json(G)


def cmd_classify(args):
    M = _matrix(args.matrix)
    if args.kind == "fan":
        report = classify_fan_matrix(M)
        flags = [("F", report.is_f), ("CF", report.is_cf)]
    else:
        report = classify_weight_matrix(M)
        flags = [("W", report.is_w)]
    flags.append(("reduced", report.is_reduced))
    lines = [f"{name} {_bool(v)}" for name, v in flags]
    lines += [f"failed {c}: {e}" for c, e in report.failed_conditions]
    obj = {k: (_bool(v) if isinstance(v, bool) else v)
           for k, v in report.as_dict().items()}
    return "\n".join(lines) + "\n", obj


def cmd_validate_fan(args):
    fan = _fan(args.fan)
    return fmt.format_fan(fan), fmt.fan_json(fan)


def cmd_complete(args):
    value = is_complete(_fan(args.fan))
    return _bool(value) + "\n", {"complete": _bool(value)}


def cmd_irr(args):
    ideal = irrelevant_ideal(_fan(args.fan))
    return fmt.format_ideal(ideal), fmt.ideal_json(ideal)


def cmd_fan_from_irr(args):
    V = _matrix(args.matrix)
    ideal = fmt.parse_ideal(_read(args.ideal))
    fan = fan_from_irrelevant(V, ideal)
    return fmt.format_fan(fan), fmt.fan_json(fan)


def cmd_codim(args):
    ideal = fmt.parse_ideal(_read(args.ideal))
    c = irrelevant_locus_codim(ideal)
    return f"{c}\n", {"codim": str(c)}


def _weights(args, fan):
    return _matrix(args.weights) if args.weights else gale_dual(fan.V)


def cmd_neighborly(args):
    fan = _fan(args.fan)
    if args.dual:
        value = k_neighborly_dual(fan, _weights(args, fan), args.k)
    else:
        value = k_neighborly_primal(fan, args.k)
    obj = {"k": str(args.k), "test": "dual" if args.dual else "primal",
           "neighborly": _bool(value)}
    return _bool(value) + "\n", obj


def cmd_nef(args):
    fan = _fan(args.fan)
    cone = nef_cone(fan, _weights(args, fan))
    return fmt.format_cone(cone), fmt.cone_json(cone)


def cmd_classgroup(args):
    G = class_group(_matrix(args.matrix))
    return G.descriptor() + "\n", fmt.group_json(G)


def cmd_pi1(args):
    G = pi1_codim1(_matrix(args.matrix))
    return G.descriptor() + "\n", fmt.group_json(G)


def cmd_cover(args):
    data, cover = universal_cover(_fan(args.fan))
    obj = {"V_tilde": fmt.matrix_json(data.V_tilde),
           "beta": fmt.matrix_json(data.beta),
           "pi1": fmt.group_json(data.pi1), "degree": str(data.degree),
           "cones": fmt.fan_json(cover)["cones"]}
    return fmt.format_covering(data, cover), obj


def cmd_beta(args):
    beta = beta_matrix(_matrix(args.v), _matrix(args.w))
    return fmt.format_matrix(beta), fmt.matrix_json(beta)


def cmd_degree(args):
    data, _ = universal_cover(_fan(args.fan))
    return f"{data.degree}\n", {"degree": str(data.degree)}


def cmd_grade(args):
    p = _presentation(args.presentation)
    poly = parse_polynomial(args.monomial, p.num_vars)
    if len(poly.terms) != 1:
        raise ParseError("expected a single monomial", 1)
    deg = monomial_degree(p, poly.terms[0][1])
    return f"{deg}\n", fmt.degree_json(deg)


def cmd_homogeneous(args):
    p = _presentation(args.presentation)
    polys = ([parse_polynomial(args.poly, p.num_vars)] if args.poly
             else list(p.relations))
    lines, items, ok = [], [], True
    for poly in polys:
        r = is_homogeneous(p, poly)
        if r:
            lines.append(f"homogeneous {r.degree}")
            items.append({"polynomial": str(poly), "homogeneous": "true",
                          "degree": fmt.degree_json(r.degree)})
        else:
            ok = False
            (c1, e1), d1 = r.conflict[0][0], r.conflict[0][1]
            (c2, e2), d2 = r.conflict[1][0], r.conflict[1][1]
            lines.append(f"not homogeneous: exponents {list(e1)} have "
                         f"degree {d1}, exponents {list(e2)} have "
                         f"degree {d2}")
            items.append({"polynomial": str(poly), "homogeneous": "false",
                          "conflict": [
                              {"exponents": [str(x) for x in e1],
                               "degree": fmt.degree_json(d1)},
                              {"exponents": [str(x) for x in e2],
                               "degree": fmt.degree_json(d2)}]})
    text, obj = "\n".join(lines) + "\n", {"relations": items}
    if not ok:
        raise _CheckFailed((text, obj))
    return text, obj


def cmd_cover_grading(args):
    q = cover_grading(_presentation(args.presentation))
    obj = {"Q": fmt.matrix_json(q.Q),
           "relations": [str(r) for r in q.relations]}
    return fmt.format_presentation(q), obj


def cmd_verify_example(args):
    report = verify_example()
    text = "\n".join(report.lines()) + "\n"
    obj = {"passed": _bool(report.passed),
           "checks": [{"label": c.label, "name": c.name,
                       "passed": _bool(c.passed), "detail": c.detail}
                      for c in report.checks]}
    if not report.passed:
        raise _CheckFailed((text, obj))
    return text, obj


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="emit one JSON document")
    common.add_argument("-o", dest="output", metavar="FILE",
                        default=argparse.SUPPRESS, help="write output here")

    parser = argparse.ArgumentParser(
        prog="toricover",
        description="Exact fan-matrix calculus for toric varieties.")
    parser.add_argument("--json", action="store_true",
                        help="emit one JSON document")
    parser.add_argument("-o", dest="output", metavar="FILE",
                        help="write output here")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="COMMAND")

    def add(name, handler, help_text, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for pos in positionals:
            p.add_argument(pos, help="input file or - for stdin")
        p.set_defaults(handler=handler)
        return p

    add("hnf", cmd_hnf, "Hermite normal form H = U A", "matrix")
    add("snf", cmd_snf, "Smith normal form S = U A W", "matrix")
    add("gale", cmd_gale, "saturated Gale dual", "matrix")
    p = add("classify", cmd_classify, "F/CF or W conditions", "matrix")
    p.add_argument("--kind", choices=("fan", "weight"), required=True)
    add("validate-fan", cmd_validate_fan, "validate and canonicalize a fan",
        "fan")
    add("complete", cmd_complete, "completeness of a fan", "fan")
    add("irr", cmd_irr, "irrelevant ideal of a fan", "fan")
    add("fan-from-irr", cmd_fan_from_irr, "fan from an irrelevant ideal",
        "matrix", "ideal")
    add("codim", cmd_codim, "codimension of the irrelevant locus", "ideal")
    p = add("neighborly", cmd_neighborly, "k-neighborliness test", "fan")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--dual", action="store_true",
                   help="use the Nef-cone test on the weight side")
    p.add_argument("--weights", metavar="FILE",
                   help="weight matrix Q (default: Gale dual of V)")
    p = add("nef", cmd_nef, "Nef cone of a fan", "fan")
    p.add_argument("--weights", metavar="FILE",
                   help="weight matrix Q (default: Gale dual of V)")
    add("classgroup", cmd_classgroup, "class group Z^m / L_r(V)", "matrix")
    add("pi1", cmd_pi1, "fundamental group in codimension 1", "matrix")
    add("cover", cmd_cover, "universal 1-covering of a fan", "fan")
    add("beta", cmd_beta, "integer beta with V = beta W", "v", "w")
    add("degree", cmd_degree, "degree of the universal 1-covering", "fan")
    p = add("grade", cmd_grade, "degree of a monomial", "presentation")
    p.add_argument("monomial", help="monomial such as x1*x8")
    p = add("homogeneous", cmd_homogeneous, "homogeneity of relations",
            "presentation")
    p.add_argument("--poly", help="check this polynomial instead")
    add("cover-grading", cmd_cover_grading,
        "presentation with the torsion grading dropped", "presentation")
    add("verify-example", cmd_verify_example,
        "run the built-in quadric example checks")
    return parser


def _emit(args, text, obj, stdout):
    out = json.dumps(obj, indent=2, sort_keys=True) + "\n" if args.json \
        else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        stdout.write(out)


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        text, obj = args.handler(args)
    except _CheckFailed as failure:
        _emit(args, *failure.output, stdout)
        return EXIT_CHECK
    except _INPUT_ERRORS as exc:
        stderr.write(f"toricover: input error: {exc}\n")
        return EXIT_INPUT
    except (ToricoverError, ValueError) as exc:
        stderr.write(f"toricover: {type(exc).__name__}: {exc}\n")
        return EXIT_CHECK
    _emit(args, text, obj, stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
