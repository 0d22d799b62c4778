"""Parametrized families of braid-generator matrices on the hexagon quiver.

A family is a hexagon-quiver representation whose arrow matrices mix integer
constants with named free parameters.  Binding the parameters assembles the
block change-of-basis matrix B; together with a nonzero scalar lambda this
yields the two braid generator matrices

    sigma1 = lambda * B^-1 * D_T * B * D_S
    sigma2 = lambda * D_S * B^-1 * D_T * B

where D_T has eigenvalue blocks (1, rho^2, rho) and D_S has blocks (1, -1).
The braid relation and (sigma1 sigma2)^3 = lambda^6 * I hold identically.

Families come from three builders: explicit construction codes made of the
five base pieces A..E (with mirrors), single-vertex extensions, glue marks
and closure marks, interpreted by ``realize_plan``; the fully generic chart
with every arrow entry free (``generic_family``); and the worked catalog
fixtures reproduced letter for letter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .catalog import (
    FIXTURE_ASSIGNMENTS,
    FIXTURE_PARAM_ORDER,
    CatalogRow,
    catalog_row,
)
from .components import MultiplicityVector, Q0DimVector, beta_of_alpha, is_simple_root
from .field import RHO, EisensteinRational
from .linalg import (
    IDENTITY,
    BlockLayout,
    ExactMatrix,
    SingularMatrixError,
    assemble_blocks,
)

Scalar = Union[EisensteinRational, int, Fraction]
Entry = Union[int, str]
EntryMatrix = tuple[tuple[Entry, ...], ...]

# B row blocks run through the T-eigenspaces, column blocks through the
# S-eigenspaces; the arrow i -> j lands in row block j, column block i.
_ROW_BLOCK_ORDER = (1, 4, 2, 5, 3, 6)
_COL_BLOCK_ORDER = (1, 3, 5, 2, 4, 6)

_PARAM_ALPHABET = "abcdefghijklmnpqrstuvwxyz"  # no 'o': too close to 0


class UnboundParameterError(ValueError):
    """A specialization is missing bindings for some family parameters."""


class CodeParseError(ValueError):
    """A construction code failed to parse; carries the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} (at position {pos} in {text!r})")
        self.text = text
        self.pos = pos


class PlanError(ValueError):
    """A parsed construction code cannot be laid out on the hexagon."""


def _hex_vertex(k: int) -> int:
    return (k - 1) % 6 + 1


def _freeze_matrix(rows: Sequence[Sequence[Entry]]) -> EntryMatrix:
    return tuple(tuple(entry for entry in row) for row in rows)


@dataclass(frozen=True, eq=False)
class CMatrixAssignment:
    """Arrow matrices of a hexagon representation, with named free entries."""

    alpha: MultiplicityVector
    arrows: Mapping[tuple[int, int], EntryMatrix]

    def __post_init__(self) -> None:
        dims = self.alpha.as_tuple()
        frozen: dict[tuple[int, int], EntryMatrix] = {}
        for (i, j), matrix in self.arrows.items():
            if not (1 <= i <= 6 and 1 <= j <= 6 and (j - i) % 6 in (1, 5)):
                raise ValueError(f"({i}, {j}) is not a hexagon arrow")
            rows_n, cols_n = dims[j - 1], dims[i - 1]
            if rows_n == 0 or cols_n == 0:
                raise ValueError(f"arrow ({i}, {j}) touches a zero-dimensional vertex")
            matrix = _freeze_matrix(matrix)
            if len(matrix) != rows_n or any(len(row) != cols_n for row in matrix):
                raise ValueError(
                    f"arrow ({i}, {j}) needs shape {rows_n}x{cols_n}, "
                    f"got {len(matrix)}x{len(matrix[0]) if matrix else 0}"
                )
            for row in matrix:
                for entry in row:
                    if not isinstance(entry, (int, str)):
                        raise ValueError(f"bad entry {entry!r} in arrow ({i}, {j})")
            frozen[(i, j)] = matrix
        object.__setattr__(self, "arrows", frozen)

    @property
    def param_names(self) -> frozenset[str]:
        return frozenset(
            entry
            for matrix in self.arrows.values()
            for row in matrix
            for entry in row
            if isinstance(entry, str)
        )

    @property
    def param_count(self) -> int:
        return len(self.param_names)


def assemble_B(
    assignment: CMatrixAssignment, bindings: Mapping[str, Scalar]
) -> ExactMatrix:
    """Fill the block template with bound arrow matrices."""
    names = assignment.param_names
    missing = sorted(names - bindings.keys())
    if missing:
        raise UnboundParameterError(f"unbound parameters: {', '.join(missing)}")
    unknown = sorted(set(bindings) - names)
    if unknown:
        raise ValueError(f"bindings for unknown parameters: {', '.join(unknown)}")
    dims = assignment.alpha.as_tuple()
    layout = BlockLayout(
        [(f"v{i}", dims[i - 1]) for i in _ROW_BLOCK_ORDER],
        [(f"v{i}", dims[i - 1]) for i in _COL_BLOCK_ORDER],
    )
    blocks: dict[tuple[str, str], object] = {
        (f"v{i}", f"v{i}"): IDENTITY for i in range(1, 7) if dims[i - 1]
    }
    for (i, j), matrix in assignment.arrows.items():
        bound = [
            [bindings[e] if isinstance(e, str) else e for e in row] for row in matrix
        ]
        blocks[(f"v{j}", f"v{i}")] = ExactMatrix(bound)
    return assemble_blocks(layout, blocks)


@dataclass(frozen=True)
class Representation:
    """Exact matrices of the two braid generators, dimension n, center scalar lam."""

    n: int
    sigma1: ExactMatrix
    sigma2: ExactMatrix
    lam: EisensteinRational


def make_representation(
    B: ExactMatrix, alpha: MultiplicityVector, lam: Scalar
) -> Representation:
    lam = EisensteinRational(lam) if not isinstance(lam, EisensteinRational) else lam
    if not lam:
        raise ValueError("lambda must be nonzero")
    dims = alpha.as_tuple()
    n = sum(dims)
    if (B.rows, B.cols) != (n, n):
        raise ValueError(f"B is {B.rows}x{B.cols}, alpha needs {n}x{n}")
    rho2 = RHO * RHO
    d_t = ExactMatrix.diagonal(
        [1] * (dims[0] + dims[3]) + [rho2] * (dims[1] + dims[4]) + [RHO] * (dims[2] + dims[5])
    )
    d_s = ExactMatrix.diagonal(
        [1] * (dims[0] + dims[2] + dims[4]) + [-1] * (dims[1] + dims[3] + dims[5])
    )
    m = B.inverse() @ (d_t @ B)
    return Representation(n=n, sigma1=(m @ d_s) * lam, sigma2=(d_s @ m) * lam, lam=lam)


@dataclass(frozen=True)
class ParamFamily:
    """A construction code (optional), arrow assignment and parameter order."""

    code: Optional[str]
    assignment: CMatrixAssignment
    free_params: tuple[str, ...]

    def __post_init__(self) -> None:
        if set(self.free_params) != self.assignment.param_names:
            raise ValueError("free_params does not match the assignment's parameters")
        if len(set(self.free_params)) != len(self.free_params):
            raise ValueError("duplicate names in free_params")

    @property
    def alpha(self) -> MultiplicityVector:
        return self.assignment.alpha

    @property
    def beta(self) -> Q0DimVector:
        return beta_of_alpha(self.alpha)

    @property
    def n(self) -> int:
        return self.beta.n

    def specialize(self, bindings: Mapping[str, Scalar]) -> ExactMatrix:
        return assemble_B(self.assignment, bindings)

    def representation(
        self, bindings: Mapping[str, Scalar], lam: Scalar
    ) -> Representation:
        return make_representation(self.specialize(bindings), self.alpha, lam)


def generic_family(alpha: MultiplicityVector) -> ParamFamily:
    """Every arrow entry a distinct free parameter (the dense generic chart)."""
    if not is_simple_root(alpha):
        raise ValueError(f"{alpha} is not a simple root")
    dims = alpha.as_tuple()
    arrows: dict[tuple[int, int], EntryMatrix] = {}
    names: list[str] = []
    for i in range(1, 7):
        j = i % 6 + 1
        for src, dst in ((i, j), (j, i)):
            rows_n, cols_n = dims[dst - 1], dims[src - 1]
            if rows_n == 0 or cols_n == 0:
                continue
            matrix = []
            for r in range(rows_n):
                row = []
                for c in range(cols_n):
                    if rows_n == 1 and cols_n == 1:
                        name = f"c{src}{dst}"
                    else:
                        name = f"c{src}{dst}_{r + 1}{c + 1}"
                    names.append(name)
                    row.append(name)
                matrix.append(tuple(row))
            arrows[(src, dst)] = tuple(matrix)
    assignment = CMatrixAssignment(alpha=alpha, arrows=arrows)
    return ParamFamily(code=None, assignment=assignment, free_params=tuple(names))


# ---------------------------------------------------------------------------
# Construction-code interpreter
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PieceSpec:
    letter: str
    mirrored: bool


@dataclass(frozen=True)
class GlueSpec:
    spot: int


@dataclass(frozen=True)
class ClosureSpec:
    dim: int
    spot: int


PlanItem = Union[int, PieceSpec, GlueSpec]


@dataclass(frozen=True)
class FamilyPlan:
    """Parsed construction code: closure mark plus the ordered item list."""

    code: str
    closure: Optional[ClosureSpec]
    items: tuple[PlanItem, ...]


_SUBSCRIPTS = {c: v for v, c in enumerate("₀₁₂₃₄₅₆₇₈₉")}
_MIRROR_MARKS = {"~", "̄", "̅", "¯"}
_GLUE_MARKS = {"*", "•"}
# Base pieces: vertex dimensions plus (forward, backward) matrices along each
# edge in drawing order.  Integer entries are fixed, p<k> entries are the
# piece's free parameters in allocation order.
_PIECE_TEMPLATES: dict[str, tuple[tuple[int, ...], tuple[tuple[EntryMatrix, EntryMatrix], ...]]] = {
    "A": (
        (1, 1),
        ((((1,),), (("p0",),)),),
    ),
    "B": (
        (1, 2, 1),
        (
            (((0,), (1,)), ((1, "p0"),)),
            ((("p1", "p2"),), ((1,), (0,))),
        ),
    ),
    "C": (
        (1, 2, 2),
        (
            (((0,), (1,)), ((1, "p0"),)),
            (((1, 0), (0, 1)), (("p1", "p2"), ("p3", 1))),
        ),
    ),
    "D": (
        (2, 2, 2),
        (
            ((("p0", 0), (0, "p1")), ((1, 0), (0, 1))),
            (((1, 0), (0, 1)), (("p2", 1), ("p3", "p4"))),
        ),
    ),
    "E": (
        (1, 3, 2),
        (
            (((1,), (0,), (0,)), (("p0", 1, "p1"),)),
            (((1, "p2", "p3"), (0, "p4", 1)), ((0, 0), (1, 0), (0, 1))),
        ),
    ),
}


def _piece_dims(spec: PieceSpec) -> tuple[int, ...]:
    dims = _PIECE_TEMPLATES[spec.letter][0]
    return tuple(reversed(dims)) if spec.mirrored else dims


def _piece_param_count(letter: str) -> int:
    count = 0
    for fwd, back in _PIECE_TEMPLATES[letter][1]:
        for matrix in (fwd, back):
            count += sum(1 for row in matrix for e in row if isinstance(e, str))
    return count


def parse_code(code: str) -> FamilyPlan:
    """Parse a construction code like ``1_3C~*6C`` into a plan."""
    text = code
    chars = [(idx, ch) for idx, ch in enumerate(text) if not ch.isspace()]
    if not chars:
        raise CodeParseError("empty code", text, 0)

    def spot_at(k: int, what: str) -> tuple[int, int]:
        # returns (spot, next index into chars)
        if k >= len(chars):
            raise CodeParseError(f"missing vertex number after {what}", text, len(text))
        pos, ch = chars[k]
        if ch in _SUBSCRIPTS:
            value = _SUBSCRIPTS[ch]
        elif ch.isdigit():
            value = int(ch)
        else:
            raise CodeParseError(f"expected a vertex number after {what}", text, pos)
        if not 1 <= value <= 6:
            raise CodeParseError(f"vertex number must be 1..6, got {value}", text, pos)
        return value, k + 1

    k = 0
    closure: Optional[ClosureSpec] = None
    if chars[0][1] in "12" and len(chars) > 1 and (
        chars[1][1] == "_" or chars[1][1] in _SUBSCRIPTS
    ):
        dim = int(chars[0][1])
        k = 2 if chars[1][1] == "_" else 1
        spot, k = spot_at(k, "the closure mark")
        closure = ClosureSpec(dim=dim, spot=spot)

    items: list[PlanItem] = []
    while k < len(chars):
        pos, ch = chars[k]
        if ch in "12":
            items.append(int(ch))
            k += 1
        elif ch in _GLUE_MARKS:
            spot, k = spot_at(k + 1, "a glue mark")
            items.append(GlueSpec(spot=spot))
        elif ch in _PIECE_TEMPLATES:
            mirrored = False
            if k + 1 < len(chars) and chars[k + 1][1] in _MIRROR_MARKS:
                mirrored = True
                k += 1
            items.append(PieceSpec(letter=ch, mirrored=mirrored))
            k += 1
        elif ch.isalpha():
            raise CodeParseError(f"unknown piece {ch!r}", text, pos)
        else:
            raise CodeParseError(f"unexpected character {ch!r}", text, pos)

    piece_idx = [i for i, item in enumerate(items) if isinstance(item, PieceSpec)]
    if not piece_idx:
        raise CodeParseError("code contains no base piece", text, chars[0][0])
    first, last = piece_idx[0], piece_idx[-1]
    for i, item in enumerate(items):
        if isinstance(item, int) and first < i < last:
            raise CodeParseError("extension digit between glued pieces", text, len(text))
        if isinstance(item, GlueSpec) and not (first < i < last):
            raise CodeParseError("glue mark must sit between two pieces", text, len(text))
    for i in range(first, last):
        a, b = items[i], items[i + 1]
        if isinstance(a, PieceSpec) and isinstance(b, PieceSpec):
            raise CodeParseError("adjacent pieces need a glue mark", text, len(text))
        if isinstance(a, GlueSpec) and not isinstance(b, PieceSpec):
            raise CodeParseError("glue mark must be followed by a piece", text, len(text))
    return FamilyPlan(code=text.strip(), closure=closure, items=tuple(items))


def _plan_slots(plan: FamilyPlan) -> tuple[list[tuple[PlanItem, int]], int]:
    """Assign each item its first walk slot; glued pieces share a slot."""
    placed: list[tuple[PlanItem, int]] = []
    slot = 0
    for item in plan.items:
        if isinstance(item, GlueSpec):
            placed.append((item, slot - 1))
        elif isinstance(item, PieceSpec):
            start = slot - 1 if placed and isinstance(placed[-1][0], GlueSpec) else slot
            placed.append((item, start))
            slot = start + len(_piece_dims(item))
        else:
            placed.append((item, slot))
            slot += 1
    return placed, slot


def _walk_dims(plan: FamilyPlan, placed: list[tuple[PlanItem, int]], length: int):
    """Per-slot dimensions, or None when glued ends disagree or are not 1."""
    dims: list[Optional[int]] = [None] * length
    for item, start in placed:
        if isinstance(item, GlueSpec):
            if dims[start] != 1:
                return None
            continue
        item_dims = _piece_dims(item) if isinstance(item, PieceSpec) else (item,)
        for offset, d in enumerate(item_dims):
            here = dims[start + offset]
            if here is None:
                dims[start + offset] = d
            elif here != d or d != 1:
                return None
    return dims


def realize_plan(plan: FamilyPlan, alpha: MultiplicityVector) -> ParamFamily:
    """Tile the hexagon with a parsed code and emit the lemma-template family."""
    placed, length = _plan_slots(plan)
    if plan.closure is not None and length != 5:
        raise PlanError(
            f"code {plan.code!r} covers {length} vertices; a closure needs exactly 5"
        )
    if plan.closure is None and length > 5:
        raise PlanError(f"code {plan.code!r} covers {length} > 5 vertices")
    slot_dims = _walk_dims(plan, placed, length)
    if slot_dims is None:
        raise PlanError(f"code {plan.code!r} glues ends of unequal or non-1 dimension")

    target = alpha.as_tuple()
    glue_specs = [(item, start) for item, start in placed if isinstance(item, GlueSpec)]

    def walk_for(reflected: bool, start: int) -> list[int]:
        step = 1 if reflected else -1
        return [_hex_vertex(start + step * k) for k in range(length)]

    candidates: list[list[int]] = []
    for reflected in (False, True):
        if plan.closure is not None:
            starts = [_hex_vertex(plan.closure.spot + (1 if reflected else -1))]
        else:
            starts = list(range(1, 7))
        for start in starts:
            walk = walk_for(reflected, start)
            if any(walk[s] != item.spot for item, s in glue_specs):
                continue
            full = [0] * 6
            for slot, vertex in enumerate(walk):
                full[vertex - 1] = slot_dims[slot]
            if plan.closure is not None:
                full[plan.closure.spot - 1] = plan.closure.dim
            if tuple(full) != target:
                continue
            if _emit_arrows(plan, placed, walk, dry_run=True) is None:
                continue
            candidates.append(walk)
        if candidates:
            break
    if not candidates:
        raise PlanError(f"code {plan.code!r} does not tile alpha {alpha}")
    walk = candidates[0]

    arrows, names = _emit_arrows(plan, placed, walk, dry_run=False)
    assignment = CMatrixAssignment(alpha=alpha, arrows=arrows)
    return ParamFamily(code=plan.code, assignment=assignment, free_params=tuple(names))


def _name_stream():
    for ch in _PARAM_ALPHABET:
        yield ch
    for ch1 in _PARAM_ALPHABET:
        for ch2 in _PARAM_ALPHABET:
            yield ch1 + ch2


def _emit_arrows(plan: FamilyPlan, placed, walk: list[int], dry_run: bool):
    """Write template matrices onto hexagon arrows; None if no template fits."""
    arrows: dict[tuple[int, int], EntryMatrix] = {}
    names: list[str] = []
    stream = _name_stream()

    def fresh() -> str:
        name = next(stream)
        names.append(name)
        return name

    def substitute(matrix: EntryMatrix, mapping: Mapping[str, str]) -> EntryMatrix:
        return tuple(
            tuple(mapping[e] if isinstance(e, str) else e for e in row)
            for row in matrix
        )

    def put(src: int, dst: int, matrix: EntryMatrix) -> None:
        arrows[(src, dst)] = matrix

    slot_dims: dict[int, int] = {}
    for item, start in placed:
        if isinstance(item, GlueSpec):
            continue
        dims = _piece_dims(item) if isinstance(item, PieceSpec) else (item,)
        for offset, d in enumerate(dims):
            slot_dims[start + offset] = d

    piece_slots = set()
    for item, start in placed:
        if isinstance(item, PieceSpec):
            piece_slots.update(range(start, start + len(_piece_dims(item))))

    for item, start in placed:
        if isinstance(item, GlueSpec):
            continue
        if isinstance(item, PieceSpec):
            if dry_run:
                continue
            base_dims, edges = _PIECE_TEMPLATES[item.letter]
            mapping = {
                f"p{k}": fresh() for k in range(_piece_param_count(item.letter))
            }
            m = len(base_dims)
            for edge in range(m - 1):
                if item.mirrored:
                    # vertex order reversed; matrices kept verbatim
                    back, fwd = edges[m - 2 - edge]
                else:
                    fwd, back = edges[edge]
                put(walk[start + edge], walk[start + edge + 1], substitute(fwd, mapping))
                put(walk[start + edge + 1], walk[start + edge], substitute(back, mapping))
        else:
            # extension: the old end is the neighbouring slot toward the pieces
            old_slot = start + 1 if start < min(piece_slots) else start - 1
            d_new, d_old = item, slot_dims[old_slot]
            if (d_new, d_old) not in {(1, 1), (1, 2), (2, 2)}:
                return None
            if dry_run:
                continue
            new_v, old_v = walk[start], walk[old_slot]
            if (d_new, d_old) == (1, 1):
                put(new_v, old_v, ((1,),))
                put(old_v, new_v, ((fresh(),),))
            elif (d_new, d_old) == (1, 2):
                put(new_v, old_v, ((1,), (fresh(),)))
                put(old_v, new_v, ((fresh(), fresh()),))
            else:
                put(new_v, old_v, ((1, 0), (0, 1)))
                put(old_v, new_v, ((fresh(), fresh()), (fresh(), fresh())))

    if plan.closure is not None:
        j = plan.closure.spot
        jm, jp = _hex_vertex(j - 1), _hex_vertex(j + 1)
        dim_by_vertex = {walk[s]: d for s, d in slot_dims.items()}
        dm, dp = dim_by_vertex[jm], dim_by_vertex[jp]
        if plan.closure.dim == 1:
            if not dry_run:
                if dm == 1:
                    put(jm, j, ((1,),))
                    put(j, jm, ((fresh(),),))
                else:
                    put(jm, j, ((fresh(), fresh()),))
                    put(j, jm, ((1,), (fresh(),)))
                if dp == 1:
                    put(j, jp, ((fresh(),),))
                    put(jp, j, ((fresh(),),))
                else:
                    put(j, jp, ((fresh(),), (fresh(),)))
                    put(jp, j, ((fresh(), fresh()),))
        else:
            # closure by a 2-dimensional vertex
            for nb, d_nb in ((jm, dm), (jp, dp)):
                if d_nb == 2:
                    if not dry_run:
                        put(nb, j, ((1, 0), (0, 1)))
                        put(j, nb, ((fresh(), fresh()), (fresh(), fresh())))
                elif d_nb == 1:
                    if not dry_run:
                        put(j, nb, ((fresh(), fresh()),))
                        put(nb, j, ((fresh(),), (fresh(),)))
                else:
                    return None

    return arrows, names


def exceptional_simple(
    kind: str, lambda_t: Optional[Scalar] = None
) -> "Q0Representation":
    """The six 1-dimensional simples S1..S6 and the three T-families."""
    normalized = kind.strip().upper()
    if normalized in _S_DATA:
        if lambda_t is not None:
            raise ValueError(f"{normalized} takes no parameter")
        beta, arrows = _S_DATA[normalized]
        matrices = {key: ExactMatrix([[1]]) for key in arrows}
        return Q0Representation(beta=Q0DimVector(*beta), arrows=matrices)
    if normalized in _T_DATA:
        if lambda_t is None:
            raise ValueError(f"{normalized} needs its parameter")
        lam = (
            lambda_t
            if isinstance(lambda_t, EisensteinRational)
            else EisensteinRational(lambda_t)
        )
        if lam == 1:
            raise ValueError(f"{normalized} is not simple at parameter 1")
        beta, arrow_keys = _T_DATA[normalized]
        matrices = {
            key: ExactMatrix([[lam if idx == 0 else 1]])
            for idx, key in enumerate(arrow_keys)
        }
        return Q0Representation(beta=Q0DimVector(*beta), arrows=matrices)
    raise ValueError(f"unknown kind {kind!r} (expected S1..S6 or T1..T3)")


@dataclass(frozen=True)
class Q0Representation:
    """Explicit eigenspace dimension vector plus arrow matrices."""

    beta: Q0DimVector
    arrows: Mapping[tuple[str, str], ExactMatrix]


_S_DATA = {
    "S1": ((1, 0, 1, 0, 0), (("a", "x"),)),
    "S2": ((0, 1, 0, 1, 0), (("b", "y"),)),
    "S3": ((1, 0, 0, 0, 1), (("a", "z"),)),
    "S4": ((0, 1, 1, 0, 0), (("b", "x"),)),
    "S5": ((1, 0, 0, 1, 0), (("a", "y"),)),
    "S6": ((0, 1, 0, 0, 1), (("b", "z"),)),
}
# first arrow of each T carries the parameter, the rest carry 1
_T_DATA = {
    "T1": ((1, 1, 0, 1, 1), (("a", "y"), ("a", "z"), ("b", "y"), ("b", "z"))),
    "T2": ((1, 1, 1, 0, 1), (("a", "x"), ("a", "z"), ("b", "x"), ("b", "z"))),
    "T3": ((1, 1, 1, 1, 0), (("a", "x"), ("a", "y"), ("b", "x"), ("b", "y"))),
}


# ---------------------------------------------------------------------------
# Catalog resolution and random specialization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyResolution:
    row: CatalogRow
    family: ParamFamily
    source: str  # "printed" | "code" | "generic"


def family_for_type(type_code: str) -> FamilyResolution:
    """Best available family for a catalog row: printed fixture, code, or generic."""
    row = catalog_row(type_code)
    key = row.type_code
    if key in FIXTURE_ASSIGNMENTS:
        assignment = CMatrixAssignment(alpha=row.alpha, arrows=FIXTURE_ASSIGNMENTS[key])
        family = ParamFamily(
            code=row.code, assignment=assignment, free_params=FIXTURE_PARAM_ORDER[key]
        )
        return FamilyResolution(row=row, family=family, source="printed")
    if row.erratum is not None:
        return FamilyResolution(
            row=row, family=generic_family(row.alpha), source="generic"
        )
    family = realize_plan(parse_code(row.code), row.alpha)
    return FamilyResolution(row=row, family=family, source="code")


def draw_scalar(rng: random.Random, low: int = 1, high: int = 1000) -> EisensteinRational:
    """One random element u + v*rho; the rho coefficient is drawn first."""
    v = rng.randint(low, high)
    u = rng.randint(low, high)
    return EisensteinRational(u, v)


@dataclass(frozen=True)
class Specialization:
    bindings: Mapping[str, EisensteinRational]
    lam: EisensteinRational
    matrix: ExactMatrix
    representation: Representation


def random_specialization(
    family: ParamFamily,
    rng: random.Random,
    low: int = 1,
    high: int = 1000,
    max_retries: int = 1000,
) -> Specialization:
    """Draw every parameter then lambda; redraw when B is singular."""
    for _ in range(max_retries):
        bindings = {name: draw_scalar(rng, low, high) for name in family.free_params}
        lam = draw_scalar(rng, low, high)
        if not lam:
            continue
        try:
            matrix = family.specialize(bindings)
            rep = make_representation(matrix, family.alpha, lam)
        except SingularMatrixError:
            continue
        return Specialization(
            bindings=bindings, lam=lam, matrix=matrix, representation=rep
        )
    raise SingularMatrixError(
        f"no invertible specialization found in {max_retries} draws"
    )
