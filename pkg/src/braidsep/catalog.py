"""Catalog of small simple-representation components and worked parametrizations.

Each row records one component of simples for a total dimension between 6 and
11: its dimension vector, a multiplicity vector of a quiver-moduli chart for
it, a construction code for the family interpreter, and the dimension of the
braid-side variety.  A few printed source rows are internally inconsistent;
those are flagged with an ``erratum`` note, the multiplicity vector is
replaced by the lexicographically smallest consistent one, and the original
values are kept in ``printed_alpha`` for reference.

``FIXTURE_ASSIGNMENTS`` stores four families exactly as printed (parameter
letters included) so they can be reproduced symbol for symbol; the family
interpreter re-derives equivalent parametrizations from the codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .components import MultiplicityVector, Q0DimVector, beta_of_alpha, is_simple_root

Entry = "int | str"


@dataclass(frozen=True)
class CatalogRow:
    type_code: str
    beta: Q0DimVector
    alpha: MultiplicityVector
    code: str
    mirror_pair: bool
    dim_b3: int
    printed_alpha: Optional[tuple[int, ...]] = None
    erratum: Optional[str] = None

    @property
    def n(self) -> int:
        return self.beta.n

    @property
    def dim_gamma(self) -> int:
        return self.dim_b3 - 1


def _row(type_code, beta, alpha, code, mirror_pair, dim_b3, printed_alpha=None, erratum=None):
    return CatalogRow(
        type_code=type_code,
        beta=Q0DimVector(*beta),
        alpha=MultiplicityVector(*alpha),
        code=code,
        mirror_pair=mirror_pair,
        dim_b3=dim_b3,
        printed_alpha=printed_alpha,
        erratum=erratum,
    )


CATALOG: tuple[CatalogRow, ...] = (
    _row("6a", (3, 3, 3, 2, 1), (1, 1, 1, 2, 1, 0), "11B", True, 6),
    _row("6b", (3, 3, 2, 2, 2), (1, 1, 1, 1, 1, 1), "1_1A111", False, 8),
    _row("6c", (4, 2, 2, 2, 2), (1, 1, 2, 1, 1, 0), "1B1", False, 6),
    _row("7a", (4, 3, 3, 3, 1), (2, 2, 1, 1, 1, 0), "C~11", True, 7),
    _row("7b", (4, 3, 3, 2, 2), (2, 1, 1, 1, 1, 1), "1_41B1", False, 9),
    _row("8a", (4, 4, 4, 2, 2), (2, 2, 2, 2, 0, 0), "D2", False, 10),
    _row("8b", (4, 4, 4, 3, 1), (2, 2, 1, 2, 1, 0), "C~*3B", True, 8),
    _row("8c", (4, 4, 3, 3, 2), (2, 2, 1, 1, 1, 1), "1_51C~1", True, 12),
    _row("8d", (5, 3, 3, 3, 2), (2, 1, 1, 1, 2, 1), "1_3B*6B", True, 10),
    _row("9a", (5, 4, 4, 4, 1), (2, 2, 1, 2, 2, 0), "C~*3C", True, 9),
    _row("9b", (5, 4, 4, 3, 2), (2, 1, 1, 2, 2, 1), "1_3C~*6B", True, 13),
    _row("9c", (5, 4, 3, 3, 3), (2, 2, 2, 1, 1, 1), "1_51D1", False, 15),
    _row("9d", (6, 3, 3, 3, 3), (3, 2, 2, 0, 1, 1), "1E2", False, 11),
    _row(
        "10a",
        (5, 5, 5, 4, 1),
        (2, 2, 1, 3, 2, 0),
        "C~*3F~",
        True,
        10,
        erratum="code references an undefined piece F; no usable construction code",
    ),
    _row(
        "10b",
        (5, 5, 5, 3, 2),
        (0, 0, 2, 5, 3, 0),
        "1_5E22",
        True,
        14,
        printed_alpha=(3, 2, 2, 2, 1, 1),
        erratum=(
            "printed multiplicity vector belongs to the (6,5;5,3,3) component; "
            "replaced by the smallest consistent one, which the code cannot tile"
        ),
    ),
    _row("10c", (5, 5, 4, 4, 2), (2, 2, 1, 2, 2, 1), "1_3C~*6C", True, 16),
    _row(
        "10d",
        (5, 5, 4, 3, 3),
        (0, 0, 2, 4, 3, 1),
        "1_5E21",
        False,
        18,
        printed_alpha=(3, 2, 2, 1, 1, 1),
        erratum=(
            "printed multiplicity vector belongs to the (6,4;4,3,3) component; "
            "replaced by the smallest consistent one, which the code cannot tile"
        ),
    ),
    _row("10e", (6, 4, 4, 4, 2), (2, 2, 2, 2, 2, 0), "D22", True, 14),
    _row("10f", (6, 4, 4, 3, 3), (3, 2, 2, 1, 1, 1), "1_41E2", False, 16),
    _row("11a", (6, 5, 5, 5, 1), (3, 2, 0, 2, 3, 1), "E~*6E", True, 11),
    _row("11b", (6, 5, 5, 4, 2), (3, 2, 1, 2, 2, 1), "1_3C~*6E", True, 17),
    _row("11c", (6, 5, 5, 3, 3), (3, 2, 2, 2, 1, 1), "1_5E22", False, 19),
    _row("11d", (6, 5, 4, 4, 3), (2, 2, 2, 2, 2, 1), "1_6D22", True, 21),
    _row("11e", (7, 4, 4, 4, 3), (3, 2, 2, 1, 2, 1), "2_3B*6E", True, 17),
)

_BY_TYPE = {row.type_code: row for row in CATALOG}


def catalog_row(type_code: str) -> CatalogRow:
    try:
        return _BY_TYPE[type_code.lower()]
    except KeyError:
        known = ", ".join(sorted(_BY_TYPE))
        raise ValueError(f"unknown component type {type_code!r} (known: {known})") from None


def catalog_rows(n: Optional[int] = None) -> list[CatalogRow]:
    if n is None:
        return list(CATALOG)
    return [row for row in CATALOG if row.n == n]


# Worked parametrizations, symbol for symbol as printed.  Keys are arrow
# endpoints (i, j) for the arrow i -> j on the hexagon; values are matrices of
# shape alpha_j x alpha_i whose entries are integers or parameter letters.
FIXTURE_ASSIGNMENTS: dict[str, dict[tuple[int, int], tuple[tuple[object, ...], ...]]] = {
    "6a": {
        (1, 2): ((1,),),
        (2, 1): (("a",),),
        (2, 3): (("b",),),
        (3, 2): ((1,),),
        (3, 4): ((1,), (0,)),
        (4, 3): (("c", "d"),),
        (4, 5): ((1, "e"),),
        (5, 4): ((0,), (1,)),
    },
    "6b": {
        (1, 2): ((1,),),
        (1, 6): (("g",),),
        (2, 1): (("a",),),
        (2, 3): (("b",),),
        (3, 2): ((1,),),
        (3, 4): ((1,),),
        (4, 3): (("c",),),
        (4, 5): (("d",),),
        (5, 4): ((1,),),
        (5, 6): ((1,),),
        (6, 1): (("f",),),
        (6, 5): (("e",),),
    },
    "6c": {
        (1, 2): ((1,),),
        (2, 1): (("a",),),
        (2, 3): ((1,), (0,)),
        (3, 2): (("c", "d"),),
        (3, 4): ((1, "e"),),
        (4, 3): ((0,), (1,)),
        (4, 5): (("b",),),
        (5, 4): ((1,),),
    },
    "10c": {
        (1, 2): ((1, 0), (0, 1)),
        (1, 6): ((1, "a"),),
        (2, 1): (("b", "c"), ("d", 1)),
        (2, 3): (("i", "j"),),
        (3, 2): ((1,), ("k",)),
        (3, 4): (("l",), ("m",)),
        (4, 3): (("n", "p"),),
        (4, 5): (("f", "g"), ("h", 1)),
        (5, 4): ((1, 0), (0, 1)),
        (5, 6): ((1, "e"),),
        (6, 1): ((0,), (1,)),
        (6, 5): ((0,), (1,)),
    },
}

# Parameter order as printed, used when specializing the fixtures.
FIXTURE_PARAM_ORDER: dict[str, tuple[str, ...]] = {
    "6a": ("a", "b", "c", "d", "e"),
    "6b": ("a", "b", "c", "d", "e", "f", "g"),
    "6c": ("a", "b", "c", "d", "e"),
    "10c": ("a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "p"),
}


def _check_catalog() -> None:
    for row in CATALOG:
        assert beta_of_alpha(row.alpha) == row.beta, row.type_code
        assert is_simple_root(row.alpha), row.type_code
    for code, arrows in FIXTURE_ASSIGNMENTS.items():
        alpha = _BY_TYPE[code].alpha.as_tuple()
        letters = set()
        for (i, j), rows in arrows.items():
            assert (j - i) % 6 in (1, 5), (code, i, j)
            assert len(rows) == alpha[j - 1] and all(
                len(r) == alpha[i - 1] for r in rows
            ), (code, i, j)
            letters.update(e for r in rows for e in r if isinstance(e, str))
        assert letters == set(FIXTURE_PARAM_ORDER[code]), code
        assert len(FIXTURE_PARAM_ORDER[code]) == _BY_TYPE[code].dim_gamma, code


_check_catalog()
