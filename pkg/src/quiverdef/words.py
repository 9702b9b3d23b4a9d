"""Path-word grammar.

word := term ("*" term)*
term := arrowName ("^-1")?

Words are written with the rightmost term applied first.  "^-1" is only
allowed in the two-letter hybrid shapes:  "z2*z1^-1" (common source) and
"z2^-1*z1" (common target).
"""

from __future__ import annotations

from typing import List, Tuple

ARROW_NAMES = ("alpha", "beta", "gamma", "delta", "eta", "kappa", "lambda")
ARROW_INDEX = {name: i for i, name in enumerate(ARROW_NAMES)}


class WordError(ValueError):
    """Malformed path word; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_word(text: str):
    """Parse a path word.

    Returns ("direct", arrows) with arrows in written order, or
    ("hybrid_source", z2, z1) for "z2*z1^-1", or
    ("hybrid_target", z2, z1) for "z2^-1*z1".
    """
    terms: List[Tuple[str, bool, int]] = []  # (arrow, inverted, position)
    pos = 0
    for chunk in text.split("*"):
        inverted = False
        name = chunk.strip()
        if name.endswith("^-1"):
            inverted = True
            name = name[: -len("^-1")].strip()
        if name not in ARROW_INDEX:
            raise WordError(f"unknown arrow name {name!r}", pos)
        terms.append((name, inverted, pos))
        pos += len(chunk) + 1
    if not terms:
        raise WordError("empty word", 0)
    inversions = [t for t in terms if t[1]]
    if not inversions:
        return ("direct", tuple(t[0] for t in terms))
    if len(terms) != 2 or len(inversions) != 1:
        raise WordError("'^-1' is only allowed in two-letter hybrid words",
                        inversions[0][2])
    (a2, inv2, _), (a1, inv1, p1) = terms
    if inv1:
        return ("hybrid_source", a2, a1)
    # first (leftmost) term inverted: z2^-1*z1
    return ("hybrid_target", a2, a1)


def format_word(parsed) -> str:
    """Inverse of parse_word on its canonical output."""
    kind = parsed[0]
    if kind == "direct":
        return "*".join(parsed[1])
    if kind == "hybrid_source":
        return f"{parsed[1]}*{parsed[2]}^-1"
    if kind == "hybrid_target":
        return f"{parsed[1]}^-1*{parsed[2]}"
    raise ValueError(f"unknown word kind {kind!r}")
