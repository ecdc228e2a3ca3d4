"""Closure bookkeeping for braid words and ASCII braid diagrams.

Joining each top endpoint of a braid to its bottom endpoint closes the word
into a link whose component count equals the cycle count of the word's
symmetric-group image.  Three words get names here; recognition is literal
comparison of the freely reduced letter sequence against the registry, never
a topological equivalence test, so a match means "word matches", not "link
proven equal".
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import (
    BraidWord,
    GeneratorLetter,
    cycle_count,
    exponent_sum,
    free_reduce,
    permutation_image,
    render_braid_word,
)

MAX_RENDER_LETTERS = 64
MAX_RENDER_STRANDS = 8

_REGISTERED_WORDS = {
    "hopf": (2, (GeneratorLetter(1, 1),) * 2),
    "borromean_word": (3, (GeneratorLetter(1, 1), GeneratorLetter(2, -1)) * 3),
    "nus_word": (3, (GeneratorLetter(1, 1), GeneratorLetter(2, 1)) * 3),
}


@dataclass(frozen=True)
class ClosureSummary:
    components: int
    exponent_sum: int
    named_match: str | None


def summarize_closure(word: BraidWord) -> ClosureSummary:
    """Component count, exponent sum, and literal named-word recognition."""
    reduced = free_reduce(word)
    named = None
    for name, (strands, letters) in _REGISTERED_WORDS.items():
        if reduced.strands == strands and reduced.letters == letters:
            named = name
            break
    return ClosureSummary(
        components=cycle_count(permutation_image(word)),
        exponent_sum=exponent_sum(word),
        named_match=named,
    )


def render_braid_ascii(word: BraidWord, ascii_only: bool = False) -> str:
    """Fixed-width diagram: strands run top to bottom, one band per letter.

    A positive letter s_i takes strand i over strand i+1; the continuous
    diagonal in the band's middle row is the over-strand, the broken one the
    under-strand.  The header restates that convention.  With ascii_only the
    verticals are drawn as '|' instead of a box-drawing bar.
    """
    n = word.strands
    if n > MAX_RENDER_STRANDS:
        raise ValueError(f"diagram supports at most {MAX_RENDER_STRANDS} strands, got {n}")
    if len(word.letters) > MAX_RENDER_LETTERS:
        raise ValueError(
            f"diagram supports at most {MAX_RENDER_LETTERS} letters, got {len(word.letters)}"
        )
    bar = "|" if ascii_only else "│"
    width = 4 * (n - 1) + 1

    def row(entries: dict[int, str]) -> str:
        cells = [" "] * width
        for col, ch in entries.items():
            cells[col] = ch
        return "".join(cells).rstrip()

    def bar_row(skip: tuple[int, ...] = ()) -> dict[int, str]:
        return {4 * (i - 1): bar for i in range(1, n + 1) if i not in skip}

    lines = [
        f"braid on {n} strands: {render_braid_word(word) or '(empty word)'}",
        "convention: positive s_i crosses strand i over strand i+1;"
        " the unbroken diagonal is the over-strand",
        row({4 * (i - 1): str(i) for i in range(1, n + 1)}),
        row(bar_row()),
    ]
    for letter in word.letters:
        i = letter.index
        c = 4 * (i - 1)
        over_mid = "\\" if letter.sign > 0 else "/"
        top = bar_row(skip=(i, i + 1))
        top.update({c: "\\", c + 4: "/"})
        mid = bar_row(skip=(i, i + 1))
        mid.update({c + 2: over_mid})
        bottom = bar_row(skip=(i, i + 1))
        bottom.update({c: "/", c + 4: "\\"})
        lines.extend([row(top), row(mid), row(bottom), row(bar_row())])
    return "\n".join(lines)
