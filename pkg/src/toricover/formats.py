"""Text formats for matrices, fans, ideals, cones, presentations and
coverings, plus JSON-ready conversions.

Matrix block::

    # optional comments
    ROWS COLS
    a11 a12 ...
    ...

Blank lines and lines starting with ``#`` are ignored everywhere.  Composite
formats are sequences of labeled sections; see each ``parse_*`` function.
"""

from .errors import DimensionMismatchError, ParseError, TextSyntaxError
from .exactla import FiniteAbelianGroup, IntMatrix
from .fan import SquarefreeMonomialIdeal
from .grading import GradedPresentation, TorsionMatrix, parse_polynomial


class _Lines:
    """Significant lines with their 1-based line numbers."""

    def __init__(self, text):
        self.items = []
        for no, line in enumerate(text.splitlines(), 1):
            s = line.strip()
            if s and not s.startswith("#"):
                self.items.append((no, line))
        self.pos = 0
        self.last = len(text.splitlines())

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self, what):
        item = self.peek()
        if item is None:
            raise DimensionMismatchError(f"unexpected end of input, expected "
                                         f"{what}", self.last + 1)
        self.pos += 1
        return item

    def at_end(self):
        return self.pos >= len(self.items)

    def peek_keyword(self):
        item = self.peek()
        return item[1].strip() if item else None


def _ints(no, line):
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        try:
            out.append(int(tok, 10))
        except ValueError:
            raise TextSyntaxError(f"not an integer: {tok!r}", no,
                                  col + 1) from None
        col += len(tok)
    return out


def _read_matrix(lines):
    no, header = lines.next("a 'ROWS COLS' header")
    dims = _ints(no, header)
    if len(dims) != 2 or min(dims) < 0:
        raise TextSyntaxError("header must be two nonnegative integers "
                              "'ROWS COLS'", no, 1)
    nrows, ncols = dims
    rows = []
    for _ in range(nrows):
        no, line = lines.next(f"a row of {ncols} integers")
        row = _ints(no, line)
        if len(row) != ncols:
            raise DimensionMismatchError(
                f"row has {len(row)} entries, expected {ncols}", no)
        rows.append(row)
    return IntMatrix(rows, ncols)


def parse_matrix(text):
    lines = _Lines(text)
    M = _read_matrix(lines)
    if not lines.at_end():
        no, _ = lines.peek()
        raise DimensionMismatchError(
            f"more rows than the declared {M.nrows}", no)
    return M


def format_matrix(M):
    out = [f"{M.nrows} {M.ncols}"]
    out.extend(" ".join(str(x) for x in row) for row in M)
    return "\n".join(out) + "\n"


def _expect_keyword(lines, keyword):
    no, line = lines.next(f"keyword {keyword}")
    if line.strip() != keyword:
        raise TextSyntaxError(f"expected {keyword!r}, found "
                              f"{line.strip()!r}", no, 1)
    return no


def _index_line(no, line):
    idx = _ints(no, line)
    return frozenset(idx)


def parse_fan_text(text):
    """Matrix block, a line ``CONES``, then one line of 1-based ray indices
    per maximal cone.  Returns ``(V, cones)``; validation is separate."""
    lines = _Lines(text)
    V = _read_matrix(lines)
    _expect_keyword(lines, "CONES")
    cones = []
    while not lines.at_end():
        no, line = lines.next("cone")
        cones.append(_index_line(no, line))
    return V, cones


def format_fan(fan):
    out = [format_matrix(fan.V), "CONES\n"]
    out.extend(" ".join(str(i) for i in sorted(c)) + "\n"
               for c in fan.sorted_cones())
    return "".join(out)


def parse_ideal(text):
    """``VARS m`` then one line of 1-based variable indices per generator."""
    lines = _Lines(text)
    no, line = lines.next("'VARS m'")
    parts = line.split()
    if len(parts) != 2 or parts[0] != "VARS":
        raise TextSyntaxError("expected 'VARS m'", no, 1)
    m = _ints(no, parts[1])[0]
    supports = []
    while not lines.at_end():
        no, line = lines.next("generator")
        supports.append(_index_line(no, line))
    return SquarefreeMonomialIdeal(m, frozenset(supports))


def format_ideal(ideal):
    out = [f"VARS {ideal.num_vars}\n"]
    out.extend(" ".join(str(i) for i in sorted(s)) + "\n"
               for s in ideal.sorted_supports())
    return "".join(out)


def _vectors_matrix(vectors, dim):
    return IntMatrix(list(vectors), dim)


def format_cone(cone):
    """Labeled blocks ``GENERATORS`` and ``FACETS``; ``LINEALITY`` and
    ``EQUATIONS`` follow only when nonempty."""
    d = cone.ambient_dim
    out = ["GENERATORS\n", format_matrix(_vectors_matrix(cone.generators, d)),
           "FACETS\n", format_matrix(_vectors_matrix(cone.facets, d))]
    if cone.lineality:
        out += ["LINEALITY\n",
                format_matrix(_vectors_matrix(cone.lineality, d))]
    if cone.equations:
        out += ["EQUATIONS\n",
                format_matrix(_vectors_matrix(cone.equations, d))]
    return "".join(out)


def parse_cone_blocks(text):
    """Inverse of :func:`format_cone` as a dict of label -> IntMatrix."""
    lines = _Lines(text)
    blocks = {}
    while not lines.at_end():
        no, line = lines.next("block label")
        label = line.strip()
        if label not in ("GENERATORS", "FACETS", "LINEALITY", "EQUATIONS"):
            raise TextSyntaxError(f"unknown block {label!r}", no, 1)
        blocks[label] = _read_matrix(lines)
    return blocks


def parse_presentation(text):
    """``Q`` + matrix block, optional ``TORSION`` (moduli line, then one row
    per modulus), then ``RELATIONS`` with one polynomial per line."""
    lines = _Lines(text)
    _expect_keyword(lines, "Q")
    Q = _read_matrix(lines)
    torsion = TorsionMatrix.empty(Q.ncols)
    if lines.peek_keyword() == "TORSION":
        lines.next("TORSION")
        no, line = lines.next("torsion moduli")
        moduli = _ints(no, line)
        rows = []
        for _ in moduli:
            no, line = lines.next("torsion row")
            row = _ints(no, line)
            if len(row) != Q.ncols:
                raise DimensionMismatchError(
                    f"torsion row has {len(row)} entries, expected "
                    f"{Q.ncols}", no)
            rows.append(row)
        try:
            torsion = TorsionMatrix(tuple(moduli), IntMatrix(rows, Q.ncols))
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
    relations = []
    if not lines.at_end():
        _expect_keyword(lines, "RELATIONS")
        while not lines.at_end():
            no, line = lines.next("relation")
            try:
                relations.append(parse_polynomial(line, Q.ncols))
            except TextSyntaxError as exc:
                raise TextSyntaxError(str(exc).split(": ", 1)[-1], no,
                                      exc.column) from None
    return GradedPresentation(Q, torsion, tuple(relations))


def format_presentation(p):
    out = ["Q\n", format_matrix(p.Q)]
    if p.torsion.moduli:
        out.append("TORSION\n")
        out.append(" ".join(str(d) for d in p.torsion.moduli) + "\n")
        out.extend(" ".join(str(x) for x in row) + "\n"
                   for row in p.torsion.entries)
    if p.relations:
        out.append("RELATIONS\n")
        out.extend(f"{rel}\n" for rel in p.relations)
    return "".join(out)


def format_covering(data, cover_fan=None):
    out = ["V_TILDE\n", format_matrix(data.V_tilde),
           "BETA\n", format_matrix(data.beta),
           f"PI1 {data.pi1.descriptor()}\n",
           f"DEGREE {data.degree}\n"]
    if cover_fan is not None:
        out.append("CONES\n")
        out.extend(" ".join(str(i) for i in sorted(c)) + "\n"
                   for c in cover_fan.sorted_cones())
    return "".join(out)


# JSON conversions: every number becomes an exact decimal string.

def matrix_json(M):
    return {"rows": str(M.nrows), "cols": str(M.ncols),
            "entries": [[str(x) for x in row] for row in M]}


def vectors_json(vectors):
    return [[str(x) for x in v] for v in vectors]


def group_json(G):
    return {"free_rank": str(G.free_rank),
            "invariant_factors": [str(d) for d in G.invariant_factors],
            "descriptor": G.descriptor()}


def cone_json(cone):
    return {"ambient_dim": str(cone.ambient_dim),
            "generators": vectors_json(cone.generators),
            "facets": vectors_json(cone.facets),
            "lineality": vectors_json(cone.lineality),
            "equations": vectors_json(cone.equations)}


def fan_json(fan):
    return {"V": matrix_json(fan.V),
            "cones": [[str(i) for i in sorted(c)]
                      for c in fan.sorted_cones()]}


def ideal_json(ideal):
    return {"num_vars": str(ideal.num_vars),
            "supports": [[str(i) for i in sorted(s)]
                         for s in ideal.sorted_supports()]}


def degree_json(deg):
    return {"free": [str(x) for x in deg.free],
            "torsion": [str(x) for x in deg.torsion]}


def parse_group(text):
    return FiniteAbelianGroup.parse(text)
