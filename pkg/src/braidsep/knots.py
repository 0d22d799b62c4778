"""Bundled table of 3-braid knot words and the invertibility sweep.

Entries live in a small JSON file; every braid word is checked at load time
to use only the two generators. The module also carries an independent
Alexander-polynomial calculator (reduced Burau at three strands) so the
bundled data can be re-verified without trusting the file: the closure of
each entry must be a knot and its Alexander coefficients must match the
published vector recorded next to the word.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .braid import BraidWord, SeparationVerdict, parse_braid, separate
from .family import ParamFamily

__all__ = [
    "KnotEntry",
    "KnotFileError",
    "SweepResult",
    "alexander_vector",
    "bundled_knots_path",
    "closure_permutation",
    "closure_is_knot",
    "load_knots",
    "run_invertibility_sweep",
]


class KnotFileError(ValueError):
    """Raised when a knot data file is malformed; names the failing entry."""


@dataclass(frozen=True)
class KnotEntry:
    name: str
    braid: BraidWord
    crossings: int
    source: str


# ---------------------------------------------------------------------------
# Laurent polynomials in one variable over the integers (internal)
# ---------------------------------------------------------------------------

class _Laurent:
    """Sparse integer Laurent polynomial; just enough for 2x2 Burau work."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict[int, int]] = None) -> None:
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def term(cls, coeff: int, power: int = 0) -> "_Laurent":
        return cls({power: coeff})

    def __add__(self, other: "_Laurent") -> "_Laurent":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return _Laurent(out)

    def __sub__(self, other: "_Laurent") -> "_Laurent":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return _Laurent(out)

    def __mul__(self, other: "_Laurent") -> "_Laurent":
        out: dict[int, int] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                key = i + j
                out[key] = out.get(key, 0) + a * b
        return _Laurent(out)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Laurent) and self.coeffs == other.coeffs

    def shift(self, by: int) -> "_Laurent":
        return _Laurent({k + by: v for k, v in self.coeffs.items()})

    def degree_span(self) -> tuple[int, int]:
        keys = self.coeffs.keys()
        return min(keys), max(keys)

    def divide_exact(self, divisor: "_Laurent") -> "_Laurent":
        """Exact division; raises ArithmeticError on a nonzero remainder."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = _Laurent(self.coeffs)
        quotient: dict[int, int] = {}
        d_lo, d_hi = divisor.degree_span()
        lead = divisor.coeffs[d_hi]
        while remainder:
            r_lo, r_hi = remainder.degree_span()
            if r_hi - r_lo < d_hi - d_lo:
                raise ArithmeticError("inexact Laurent division")
            coeff, rem = divmod(remainder.coeffs[r_hi], lead)
            if rem:
                raise ArithmeticError("inexact Laurent division")
            power = r_hi - d_hi
            quotient[power] = coeff
            remainder = remainder - divisor * _Laurent.term(coeff, power)
        return _Laurent(quotient)


_ONE = _Laurent.term(1)
_ZERO = _Laurent()
_T = _Laurent.term(1, 1)

# reduced Burau images of the generators and their inverses (2x2 rows)
_BURAU = {
    (1, 1): ((_Laurent.term(-1, 1), _ONE), (_ZERO, _ONE)),
    (1, -1): ((_Laurent.term(-1, -1), _Laurent.term(1, -1)), (_ZERO, _ONE)),
    (2, 1): ((_ONE, _ZERO), (_T, _Laurent.term(-1, 1))),
    (2, -1): ((_ONE, _ZERO), (_ONE, _Laurent.term(-1, -1))),
}


def _mat_mul(a, b):
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(2)), _ZERO) for j in range(2)
        )
        for i in range(2)
    )


def _burau_image(word: BraidWord):
    out = ((_ONE, _ZERO), (_ZERO, _ONE))
    for gen, exp in word.letters:
        step = _BURAU[(gen, 1 if exp > 0 else -1)]
        for _ in range(abs(exp)):
            out = _mat_mul(out, step)
    return out


def closure_permutation(word: BraidWord) -> tuple[int, int, int]:
    """Strand permutation of the word (image of positions 0, 1, 2)."""
    perm = [0, 1, 2]
    for gen, exp in word.letters:
        if exp % 2:
            i = gen - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


def closure_is_knot(word: BraidWord) -> bool:
    """True when the closure has a single component (a 3-cycle)."""
    perm = closure_permutation(word)
    return perm in ((1, 2, 0), (2, 0, 1))


def alexander_vector(word: BraidWord) -> tuple[int, ...]:
    """Alexander polynomial coefficients of the closure, normalized.

    Computed from the reduced Burau image M as det(I - M) * (1 - t) divided
    by (1 - t^3), shifted to start at degree zero with the sign fixed so the
    first coefficient is positive. Requires the closure to be a knot.
    """
    if not closure_is_knot(word):
        raise ValueError("closure is not a knot (strand permutation is not a 3-cycle)")
    m = _burau_image(word)
    det = (_ONE - m[0][0]) * (_ONE - m[1][1]) - (_ZERO - m[0][1]) * (_ZERO - m[1][0])
    numerator = det * (_ONE - _T)
    denominator = _ONE - _Laurent.term(1, 3)
    delta = numerator.divide_exact(denominator)
    if not delta:
        raise ArithmeticError("zero Alexander polynomial for a knot closure")
    lo, hi = delta.degree_span()
    coeffs = [delta.coeffs.get(k, 0) for k in range(lo, hi + 1)]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    if abs(sum(coeffs)) != 1:
        raise ArithmeticError(f"Alexander value at 1 is {sum(coeffs)}, expected +-1")
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# Data file loading
# ---------------------------------------------------------------------------

def bundled_knots_path() -> Path:
    return Path(str(resources.files("braidsep").joinpath("data/knots.json")))


def load_knots(path: Union[str, Path, None] = None) -> list[KnotEntry]:
    """Read a knot table; `convention` may flip generator signs file-wide."""
    actual = Path(path) if path is not None else bundled_knots_path()
    try:
        payload = json.loads(actual.read_text())
    except json.JSONDecodeError as err:
        raise KnotFileError(f"{actual}: not valid JSON: {err}") from err
    if not isinstance(payload, dict) or "knots" not in payload:
        raise KnotFileError(f"{actual}: expected an object with a 'knots' list")
    convention = payload.get("convention", "paper")
    if convention not in ("paper", "inverse"):
        raise KnotFileError(f"{actual}: unknown convention {convention!r}")
    raw = payload["knots"]
    if not isinstance(raw, list):
        raise KnotFileError(f"{actual}: 'knots' must be a list")
    entries: list[KnotEntry] = []
    for index, item in enumerate(raw):
        def bad(message: str) -> KnotFileError:
            return KnotFileError(f"{actual}: entry {index}: {message}")

        if not isinstance(item, dict):
            raise bad("expected an object")
        missing = {"name", "braid", "crossings", "source"} - item.keys()
        if missing:
            raise bad(f"missing fields: {', '.join(sorted(missing))}")
        if not isinstance(item["name"], str) or not item["name"]:
            raise bad("'name' must be a nonempty string")
        if not isinstance(item["crossings"], int) or item["crossings"] < 0:
            raise bad("'crossings' must be a nonnegative integer")
        if not isinstance(item["source"], str):
            raise bad("'source' must be a string")
        try:
            word = parse_braid(item["braid"])
        except ValueError as err:
            raise bad(f"bad braid word: {err}") from err
        if convention == "inverse":
            word = BraidWord(tuple((gen, -exp) for gen, exp in word.letters))
        entries.append(
            KnotEntry(
                name=item["name"],
                braid=word,
                crossings=item["crossings"],
                source=item["source"],
            )
        )
    return entries


# ---------------------------------------------------------------------------
# Invertibility sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepResult:
    entry: KnotEntry
    verdict: SeparationVerdict


def run_invertibility_sweep(
    entries: Sequence[KnotEntry],
    family: ParamFamily,
    trials: int,
    seed: int,
    low: int = 1,
    high: int = 1000,
) -> list[SweepResult]:
    """Trace-separation verdict for every entry against one family.

    Per-entry seeds are derived from the sweep seed and the entry index, so
    each verdict is reproducible in isolation and independent of how the
    entries are scheduled.
    """
    results = []
    for index, entry in enumerate(entries):
        verdict = separate(
            entry.braid, family, trials, seed * 100003 + index, low, high
        )
        results.append(SweepResult(entry=entry, verdict=verdict))
    return results
