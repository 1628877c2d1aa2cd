"""Braid words for 4-plats: parsing, permutations, closure combinatorics.

A word uses the two generators s1, s2 of the 3-string braid group acting on
the rightmost three strands of a 4-strand plat; the leftmost strand is
passive and never crosses anything.  Generator i crosses plat strand
positions (i+1, i+2).  The plat is closed by caps joining positions (1,2)
and (3,4) at both the top and the bottom.

Words are stored as syllables (generator index, nonzero exponent).  The
canonical form merges adjacent syllables with equal index, but nothing in
this module canonicalizes implicitly: operations accept non-canonical words
so that properties like Reidemeister-II insertion can be exercised.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

Perm3 = tuple[int, int, int]

IDENTITY_PERM: Perm3 = (1, 2, 3)

_TOP_OF_STRAND = 0  # node offsets for the closure graph
_BOTTOM_OF_STRAND = 4


class WordParseError(ValueError):
    """Raised for malformed word text; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class Syllable:
    """One run sigma_index^exponent of a braid word."""

    index: int
    exponent: int

    def __post_init__(self):
        if self.index not in (1, 2):
            raise ValueError(f"generator index out of range: {self.index}")
        if self.exponent == 0:
            raise ValueError("syllable exponent must be nonzero")

    @property
    def sign(self) -> int:
        return 1 if self.exponent > 0 else -1

    @property
    def width(self) -> int:
        """Number of crossings the syllable contributes."""
        return abs(self.exponent)

    def __str__(self) -> str:
        if self.exponent == 1:
            return f"s{self.index}"
        return f"s{self.index}^{self.exponent}"


@dataclass(frozen=True)
class Word:
    """An ordered sequence of syllables."""

    syllables: tuple[Syllable, ...] = ()

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Word:
        return cls(tuple(Syllable(i, e) for i, e in pairs))

    @property
    def syllable_count(self) -> int:
        return len(self.syllables)

    @property
    def crossing_count(self) -> int:
        return sum(s.width for s in self.syllables)

    def letters(self) -> Iterator[tuple[int, int]]:
        """Yield one (index, sign) pair per crossing, top to bottom."""
        for s in self.syllables:
            for _ in range(s.width):
                yield s.index, s.sign

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((s.index, s.exponent) for s in self.syllables)

    @property
    def is_canonical(self) -> bool:
        return all(
            self.syllables[k].index != self.syllables[k + 1].index
            for k in range(len(self.syllables) - 1)
        )

    def canonicalize(self) -> Word:
        """Merge adjacent equal-index syllables, dropping full cancellations."""
        stack: list[Syllable] = []
        for s in self.syllables:
            if stack and stack[-1].index == s.index:
                merged = stack[-1].exponent + s.exponent
                stack.pop()
                if merged:
                    stack.append(Syllable(s.index, merged))
            else:
                stack.append(s)
        return Word(tuple(stack))

    def __mul__(self, other: Word) -> Word:
        return Word(self.syllables + other.syllables)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word<{format_word(self)}>"


_SYLLABLE_RE = re.compile(r"s(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    """Parse text like ``s1 s2^-1 s1`` into a canonical Word.

    Omitted exponents mean 1.  Adjacent equal-index syllables are merged
    (and dropped when they cancel), which is the only implicit
    canonicalization in the package.
    """
    syllables: list[Syllable] = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        pos = match.start()
        if not token.startswith("s"):
            raise WordParseError(f"expected syllable like 's1^2', got {token!r}", pos)
        m = _SYLLABLE_RE.match(token)
        if m is None:
            raise WordParseError(f"malformed syllable {token!r}", pos)
        index = int(m.group(1))
        if index not in (1, 2):
            raise WordParseError(f"generator index out of range: s{index}", pos)
        exponent = int(m.group(2)) if m.group(2) is not None else 1
        if exponent == 0:
            raise WordParseError("syllable exponent must be nonzero", pos)
        syllables.append(Syllable(index, exponent))
    return Word(tuple(syllables)).canonicalize()


def format_word(w: Word) -> str:
    return " ".join(str(s) for s in w.syllables)


def permutation_of(w: Word) -> Perm3:
    """The permutation the word induces on the three active strands.

    Strands are numbered by their top endpoints 1..3; the result lists, from
    left to right, the strand number found at each bottom position, i.e.
    [1,2,3] pushed through one transposition (i, i+1) per crossing.
    """
    labels = [1, 2, 3]
    for index, _sign in w.letters():
        labels[index - 1], labels[index] = labels[index], labels[index - 1]
    return (labels[0], labels[1], labels[2])


def compose_perms(first: Perm3, second: Perm3) -> Perm3:
    """Bottom labels after doing `first` then `second` (left to right)."""
    return (first[second[0] - 1], first[second[1] - 1], first[second[2] - 1])


def _bottom_labels4(w: Word) -> list[int]:
    """Top position (0-based) of the strand ending at each bottom position."""
    labels = [0, 1, 2, 3]
    for index, _sign in w.letters():
        p = index  # generator i acts on plat positions (i+1, i+2) -> 0-based (i, i+1)
        labels[p], labels[p + 1] = labels[p + 1], labels[p]
    return labels


def component_count(w: Word) -> int:
    """Number of link components of the 4-plat closure.

    Counts connected components of the pairing graph on the eight strand
    endpoints: caps (1,2),(3,4) on top and bottom plus one edge per strand.
    """
    labels = _bottom_labels4(w)
    parent = list(range(8))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for a, b in ((0, 1), (2, 3)):
        union(_TOP_OF_STRAND + a, _TOP_OF_STRAND + b)
        union(_BOTTOM_OF_STRAND + a, _BOTTOM_OF_STRAND + b)
    for bottom_pos, top_pos in enumerate(labels):
        union(_BOTTOM_OF_STRAND + bottom_pos, _TOP_OF_STRAND + top_pos)
    return len({find(x) for x in range(8)})


def is_knot(w: Word) -> bool:
    return component_count(w) == 1


def is_alternating_standard(w: Word) -> bool:
    """True for words of the shape the closure theory certifies.

    The syllable indices must read 1,2,1,...,1 (odd count, ending on 1) and
    the signs must form one family: all index-1 exponents positive with
    index-2 negative, or the other way around.
    """
    syls = w.syllables
    if len(syls) % 2 == 0:
        return False
    for k, s in enumerate(syls):
        expected_index = 1 if k % 2 == 0 else 2
        if s.index != expected_index:
            return False
    sign1 = syls[0].sign
    for k, s in enumerate(syls):
        expected_sign = sign1 if k % 2 == 0 else -sign1
        if s.sign != expected_sign:
            return False
    return True


def insert_canceling_pair(w: Word, position: int, index: int, sign: int) -> Word:
    """Splice sigma_index^sign sigma_index^-sign at a letter position.

    The result is intentionally NOT canonicalized (it usually has adjacent
    equal-index syllables); ``position`` counts crossings from the top,
    0 <= position <= crossing_count.
    """
    if index not in (1, 2):
        raise ValueError(f"generator index out of range: {index}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    total = w.crossing_count
    if not 0 <= position <= total:
        raise ValueError(f"position {position} out of range 0..{total}")

    pair = (Syllable(index, sign), Syllable(index, -sign))
    out: list[Syllable] = []
    consumed = 0
    inserted = False
    for s in w.syllables:
        if inserted or position > consumed + s.width:
            out.append(s)
            consumed += s.width
            continue
        k = position - consumed
        if k > 0:
            out.append(Syllable(s.index, s.sign * k))
        out.extend(pair)
        if s.width - k > 0:
            out.append(Syllable(s.index, s.sign * (s.width - k)))
        inserted = True
        consumed += s.width
    if not inserted:
        out.extend(pair)
    return Word(tuple(out))
