"""Derive and verify the bundled 3-braid knot table.

Run from the repository root:

    python3 tools/build_knot_table.py          # verify / report only
    python3 tools/build_knot_table.py --write  # regenerate the data file

There is no network access here, so braid words are derived locally and
pinned by invariants instead of being copied from a database:

  * torus knots (3_1, 5_1, 7_1 as stabilized two-strand braids, 8_19 as the
    three-four torus braid) use their canonical words, which identify the
    knot with certainty;
  * the five flype-form knots (6_3, 7_5, 8_7, 8_9, 8_10) take the first
    word s1^u s2^v s1^w s2^eps whose closure matches the published Alexander
    vector and whose trace test separates on the "6b" family;
  * every other knot takes the first word in a deterministic enumeration of
    alternating exponent sequences whose closure is a knot with the right
    Alexander vector, preferring words whose letter count equals the
    crossing number;
  * 8_20 and 8_21 share Alexander polynomials with composite knots (granny/
    square, and trefoil + figure-eight sums), so their candidates must also
    differ from those composites under the Kauffman bracket;
  * prime knots through eight crossings are separated pairwise by the
    Alexander polynomial, so a matching vector plus the crossing bound of
    the diagram pins the knot type (up to mirror image, which none of the
    downstream experiments depend on).
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from braidsep.braid import BraidWord, separate  # noqa: E402
from braidsep.family import family_for_type  # noqa: E402
from braidsep.knots import (  # noqa: E402
    _Laurent,
    alexander_vector,
    closure_is_knot,
    load_knots,
)

DATA_PATH = Path(__file__).resolve().parent.parent / "src" / "braidsep" / "data" / "knots.json"

# published Alexander coefficient vectors, lowest degree first, first
# coefficient positive (cross-checked below against the determinant at -1)
PUBLISHED = {
    "3_1": (3, (1, -1, 1)),
    "4_1": (4, (1, -3, 1)),
    "5_1": (5, (1, -1, 1, -1, 1)),
    "5_2": (5, (2, -3, 2)),
    "6_2": (6, (1, -3, 3, -3, 1)),
    "6_3": (6, (1, -3, 5, -3, 1)),
    "7_1": (7, (1, -1, 1, -1, 1, -1, 1)),
    "7_3": (7, (2, -3, 3, -3, 2)),
    "7_5": (7, (2, -4, 5, -4, 2)),
    "8_5": (8, (1, -3, 4, -5, 4, -3, 1)),
    "8_7": (8, (1, -3, 5, -5, 5, -3, 1)),
    "8_9": (8, (1, -3, 5, -7, 5, -3, 1)),
    "8_10": (8, (1, -3, 6, -7, 6, -3, 1)),
    "8_16": (8, (1, -4, 8, -9, 8, -4, 1)),
    "8_17": (8, (1, -4, 8, -11, 8, -4, 1)),
    "8_18": (8, (1, -5, 10, -13, 10, -5, 1)),
    "8_19": (8, (1, -1, 0, 1, 0, -1, 1)),
    "8_20": (8, (1, -2, 3, -2, 1)),
    "8_21": (8, (1, -4, 5, -4, 1)),
}
DETERMINANTS = {
    "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_2": 11, "6_3": 13,
    "7_1": 7, "7_3": 13, "7_5": 17, "8_5": 21, "8_7": 23, "8_9": 25,
    "8_10": 27, "8_16": 35, "8_17": 37, "8_18": 45, "8_19": 3,
    "8_20": 9, "8_21": 15,
}

TORUS_WORDS = {
    "3_1": ((1, 3), (2, 1)),
    "5_1": ((1, 5), (2, 1)),
    "7_1": ((1, 7), (2, 1)),
    "8_19": ((1, 1), (2, 1), (1, 1), (2, 1), (1, 1), (2, 1), (1, 1), (2, 1)),
}
FLYPE_KNOTS = ("6_3", "7_5", "8_7", "8_9", "8_10")
PINNED_WORDS = {
    # the experiment's reference word; everything else is derived
    "8_17": ((1, -2), (2, 1), (1, -1), (2, 1), (1, -1), (2, 2)),
}
FLYPE_MIN = ((1, -1), (2, 2), (1, -2), (2, 1))


# ---------------------------------------------------------------------------
# Word enumeration
# ---------------------------------------------------------------------------

def compositions(total: int, parts: int):
    """All tuples of `parts` positive integers with the given sum, lex order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(1, total - parts + 2):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def words_of_length(total: int):
    """Alternating-generator exponent sequences, deterministic order."""
    for parts in range(1, total + 1):
        for start in (1, 2):
            gens = [(start - 1 + i) % 2 + 1 for i in range(parts)]
            for sizes in compositions(total, parts):
                for signs in itertools.product((1, -1), repeat=parts):
                    yield BraidWord(
                        tuple((g, s * e) for g, e, s in zip(gens, sizes, signs))
                    )


def knot_words_by_alexander(total: int) -> dict[tuple[int, ...], list[BraidWord]]:
    table: dict[tuple[int, ...], list[BraidWord]] = {}
    for word in words_of_length(total):
        if len(word.letters) < 2 or not closure_is_knot(word):
            continue
        try:
            vector = alexander_vector(word)
        except ArithmeticError:
            continue
        table.setdefault(vector, []).append(word)
    return table


def flype_words_of_length(total: int):
    """Words s1^u s2^v s1^w s2^eps with |u|+|v|+|w|+1 == total, lex order."""
    for mags in compositions(total - 1, 3):
        for signs in itertools.product((1, -1), repeat=3):
            for eps in (1, -1):
                u, v, w = (m * s for m, s in zip(mags, signs))
                word = BraidWord(((1, u), (2, v), (1, w), (2, eps)))
                if len(word.letters) == 4:
                    yield word


# ---------------------------------------------------------------------------
# Kauffman bracket through the three-strand Temperley-Lieb algebra
# ---------------------------------------------------------------------------

_TL_BASIS = ("1", "e1", "e2", "e12", "e21")
# (left, right) -> (power of delta, product basis element)
_TL_MULT = {
    ("e1", "e1"): (1, "e1"), ("e1", "e2"): (0, "e12"),
    ("e1", "e12"): (1, "e12"), ("e1", "e21"): (0, "e1"),
    ("e2", "e1"): (0, "e21"), ("e2", "e2"): (1, "e2"),
    ("e2", "e12"): (0, "e2"), ("e2", "e21"): (1, "e21"),
    ("e12", "e1"): (0, "e1"), ("e12", "e2"): (1, "e12"),
    ("e12", "e12"): (0, "e12"), ("e12", "e21"): (1, "e1"),
    ("e21", "e1"): (1, "e21"), ("e21", "e2"): (0, "e2"),
    ("e21", "e12"): (1, "e2"), ("e21", "e21"): (0, "e21"),
}
_DELTA = _Laurent({2: -1, -2: -1})  # -A^2 - A^-2
_LOOPS = {"1": 2, "e1": 1, "e2": 1, "e12": 0, "e21": 0}


def _tl_mul(left: dict, right: dict) -> dict:
    out: dict[str, _Laurent] = {}
    for db, vb in right.items():
        for da, va in left.items():
            coeff = va * vb
            if da == "1":
                key, power = db, 0
            elif db == "1":
                key, power = da, 0
            else:
                power, key = _TL_MULT[(da, db)]
            for _ in range(power):
                coeff = coeff * _DELTA
            out[key] = out.get(key, _Laurent()) + coeff
    return {k: v for k, v in out.items() if v}


def _tl_generator(gen: int, positive: bool) -> dict:
    a = _Laurent.term(1, 1 if positive else -1)
    a_inv = _Laurent.term(1, -1 if positive else 1)
    return {"1": a, f"e{gen}": a_inv}


def kauffman_f(word: BraidWord) -> _Laurent:
    """Writhe-normalized bracket of the closure (a Jones-equivalent form)."""
    image: dict[str, _Laurent] = {"1": _Laurent.term(1)}
    for gen, exp in word.letters:
        step = _tl_generator(gen, exp > 0)
        for _ in range(abs(exp)):
            image = _tl_mul(image, step)
    bracket = _Laurent()
    for key, coeff in image.items():
        term = coeff
        for _ in range(_LOOPS[key]):
            term = term * _DELTA
        bracket = bracket + term
    writhe = word.exponent_sum
    norm = _Laurent.term((-1) ** writhe, -3 * writhe)
    return bracket * norm


def composite_brackets(found: dict[str, BraidWord]) -> dict[str, list[_Laurent]]:
    """Kauffman values of the composites colliding with 8_20 and 8_21."""
    trefoil = kauffman_f(BraidWord(((1, 3), (2, 1))))
    trefoil_m = kauffman_f(BraidWord(((1, -3), (2, -1))))
    fig8 = kauffman_f(found["4_1"])
    granny = kauffman_f(BraidWord(((1, 3), (2, 3))))
    granny_m = kauffman_f(BraidWord(((1, -3), (2, -3))))
    square = kauffman_f(BraidWord(((1, 3), (2, -3))))
    return {
        "8_20": [granny, granny_m, square],
        "8_21": [trefoil * fig8, trefoil_m * fig8],
    }


# ---------------------------------------------------------------------------
# Selection
# ---------------------------------------------------------------------------

def select_words(verbose: bool = True) -> dict[str, BraidWord]:
    tables: dict[int, dict[tuple[int, ...], list[BraidWord]]] = {}

    def candidates(vector, length):
        if length not in tables:
            if verbose:
                print(f"  enumerating words of length {length} ...")
            tables[length] = knot_words_by_alexander(length)
        return tables[length].get(vector, [])

    found: dict[str, BraidWord] = {}
    for name, word in TORUS_WORDS.items():
        found[name] = BraidWord(word)
    for name, word in PINNED_WORDS.items():
        found[name] = BraidWord(word)

    family_6b = family_for_type("6b").family
    for name in FLYPE_KNOTS:
        crossings, vector = PUBLISHED[name]
        chosen = None
        for length in (crossings, crossings + 1, crossings + 2):
            for word in flype_words_of_length(length):
                if not closure_is_knot(word):
                    continue
                try:
                    got = alexander_vector(word)
                except ArithmeticError:
                    continue
                if got != vector:
                    continue
                if separate(word, family_6b, trials=8, seed=20).separated:
                    chosen = word
                    break
            if chosen is not None:
                break
        if chosen is None:
            raise SystemExit(f"{name}: no separating flype word through length {crossings + 2}")
        found[name] = chosen
        if verbose:
            print(f"  {name}: {chosen}  (flype, separates on 6b)")

    rest = [n for n in PUBLISHED if n not in found]
    for name in rest:
        crossings, vector = PUBLISHED[name]
        rejects = []
        if name in ("8_20", "8_21"):
            # drop candidates that are secretly composite knots
            rejects = composite_brackets(found)[name]
        chosen = None
        for length in (crossings, crossings + 1, crossings + 2):
            for option in candidates(vector, length):
                if any(kauffman_f(option) == value for value in rejects):
                    continue
                chosen = option
                break
            if chosen is not None:
                break
        if chosen is None:
            raise SystemExit(f"{name}: no word found through length {crossings + 2}")
        found[name] = chosen
        if verbose:
            print(f"  {name}: {chosen}")
    return found


def verify(found: dict[str, BraidWord]) -> None:
    for name, (crossings, vector) in PUBLISHED.items():
        word = found[name]
        assert closure_is_knot(word), name
        got = alexander_vector(word)
        assert got == vector, (name, got, vector)
        assert abs(sum((-1) ** i * c for i, c in enumerate(vector))) == DETERMINANTS[name], name
        assert sum(abs(e) for _, e in word.letters) >= crossings, name
    guard = composite_brackets(found)
    for name in ("8_20", "8_21"):
        value = kauffman_f(found[name])
        for other in guard[name]:
            assert value != other, f"{name} candidate collides with a composite"
    flype_min = BraidWord(FLYPE_MIN)
    assert alexander_vector(flype_min) == PUBLISHED["6_3"][1]
    print("verification: all entries pass")


def build_payload(found: dict[str, BraidWord]) -> dict:
    knots = []
    for name, (crossings, _) in PUBLISHED.items():
        if name in TORUS_WORDS:
            source = "torus braid word (exact)"
        elif name in PINNED_WORDS:
            source = "fixed reference word; alexander-verified"
        elif name in FLYPE_KNOTS:
            source = "alexander-verified flype-form word (offline search)"
        elif name in ("8_20", "8_21"):
            source = "alexander-verified braid word (offline search; bracket-checked against composites)"
        else:
            source = "alexander-verified braid word (offline search)"
        knots.append(
            {
                "name": name,
                "crossings": crossings,
                "braid": str(found[name]),
                "source": source,
            }
        )
    knots.append(
        {
            "name": "flype_min",
            "crossings": 6,
            "braid": str(BraidWord(FLYPE_MIN)),
            "source": "flype-form word with distinct forward and reversed traces on the six-dimensional family; closure is the 6_3 knot",
        }
    )
    return {"convention": "paper", "knots": knots}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--write", action="store_true", help="regenerate the data file")
    args = parser.parse_args()

    print("selecting words:")
    found = select_words()
    verify(found)
    payload = build_payload(found)

    if args.write:
        DATA_PATH.parent.mkdir(parents=True, exist_ok=True)
        DATA_PATH.write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote {DATA_PATH}")
    if DATA_PATH.exists():
        entries = load_knots(DATA_PATH)
        print(f"bundled file loads: {len(entries)} entries")


if __name__ == "__main__":
    main()
