"""Orientation data for 4-plat knot diagrams.

The closed plat of a knot word is a single curve.  Walking that curve once
assigns every vertical strand segment a direction (up or down), so each
crossing is either *parallel* (both strands run the same vertical way) or
*antiparallel*, and carries a sign from the right-hand rule.  The
per-syllable class is the subscript k used to select transfer matrices:
parallel -> 1, antiparallel -> 2.

Conventions (fixed once for the whole package and calibrated on the
trefoil fixture): in a positive crossing the strand entering from the
upper left passes over.  With that choice a parallel crossing of a
positive generator has sign -1 and an antiparallel one +1; negative
generators flip both signs.  Reversing the arbitrary traversal direction
of the curve changes neither the classes nor the signs.

Two independent routes to the k subscripts are provided:

* ``k_sequence`` walks the diagram (authoritative, works for any knot
  word).
* ``r_sequence_method`` implements the published prefix-relabeling rule
  literally: a row r0 marks the strands that point up at their top
  endpoints, prefix permutations push the row down the braid, and k_i
  compares the row's entries at positions 2 and 3.  The printed rule is
  ambiguous about which positions to compare for index-1 syllables and
  about which cap endpoint starts the relabeling, so its output can
  disagree with the trace; disagreements are reported, never hidden.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import Perm3, Word, component_count, is_alternating_standard, is_knot, permutation_of

DOWN = 1
UP = -1

PARALLEL = "parallel"
ANTIPARALLEL = "antiparallel"

_CAP_PARTNER = {1: 2, 2: 1, 3: 4, 4: 3}


class NotAKnotError(ValueError):
    """Raised when an operation needs a single-component closure."""


@dataclass(frozen=True)
class Crossing:
    """One crossing of the traced diagram."""

    syllable: int            # 0-based syllable index within the word
    generator: int           # 1 or 2
    generator_sign: int      # sign of the syllable exponent
    crossing_class: str      # PARALLEL or ANTIPARALLEL
    sign: int                # oriented crossing sign, +1 or -1


@dataclass(frozen=True)
class OrientedDiagram:
    """Traced orientation of a knot word's plat diagram.

    ``segment_directions`` maps (gap, plat position) to DOWN/UP, where gap g
    is the horizontal slice between crossing g and crossing g+1 (gap 0 is
    above the first crossing, gap C below the last).
    """

    word: Word
    crossings: tuple[Crossing, ...]
    segment_directions: dict[tuple[int, int], int]

    def syllable_classes(self) -> tuple[str, ...]:
        classes: list[str] = []
        for c in self.crossings:
            if c.syllable == len(classes):
                classes.append(c.crossing_class)
        return tuple(classes)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)


def _crossing_layout(w: Word) -> list[tuple[int, int, int]]:
    """Per-crossing (smaller plat position, generator sign, syllable index)."""
    layout = []
    for syl_idx, s in enumerate(w.syllables):
        for _ in range(s.width):
            layout.append((s.index + 1, s.sign, syl_idx))
    return layout


def trace_orientation(w: Word, reverse: bool = False) -> OrientedDiagram:
    """Walk the closed plat curve and classify every crossing.

    Raises NotAKnotError unless the closure has exactly one component (the
    orientation of a multi-component closure is not canonical).  ``reverse``
    starts the walk in the opposite direction; the result must not depend
    on it.
    """
    if component_count(w) != 1:
        raise NotAKnotError("orientation tracing requires a knot (one component)")

    layout = _crossing_layout(w)
    n_crossings = len(layout)
    directions: dict[tuple[int, int], int] = {}
    passes: list[list[int]] = [[] for _ in range(n_crossings)]

    gap, pos = 0, 1
    heading = UP if reverse else DOWN
    for _ in range(4 * (n_crossings + 1)):
        directions[(gap, pos)] = heading
        if heading == DOWN:
            if gap == n_crossings:
                pos = _CAP_PARTNER[pos]
                heading = UP
            else:
                p, _sign, _syl = layout[gap]
                if pos == p or pos == p + 1:
                    passes[gap].append(DOWN)
                    pos = p + 1 if pos == p else p
                gap += 1
        else:
            if gap == 0:
                pos = _CAP_PARTNER[pos]
                heading = DOWN
            else:
                p, _sign, _syl = layout[gap - 1]
                if pos == p or pos == p + 1:
                    passes[gap - 1].append(UP)
                    pos = p + 1 if pos == p else p
                gap -= 1

    if (gap, pos, heading) != (0, 1, UP if reverse else DOWN):
        raise RuntimeError("plat walk did not close up; diagram bookkeeping is broken")

    crossings: list[Crossing] = []
    for idx, (p, sign, syl) in enumerate(layout):
        if len(passes[idx]) != 2:
            raise RuntimeError(f"crossing {idx} was traversed {len(passes[idx])} times")
        parallel = passes[idx][0] == passes[idx][1]
        cls = PARALLEL if parallel else ANTIPARALLEL
        crossing_sign = -sign if parallel else sign
        crossings.append(Crossing(syl, p - 1, sign, cls, crossing_sign))

    classes_by_syllable: dict[int, str] = {}
    for c in crossings:
        prev = classes_by_syllable.setdefault(c.syllable, c.crossing_class)
        if prev != c.crossing_class:
            raise RuntimeError(
                f"crossings of syllable {c.syllable} have mixed orientation classes"
            )

    return OrientedDiagram(w, tuple(crossings), directions)


def k_sequence(w: Word) -> tuple[int, ...]:
    """Orientation subscripts per syllable: parallel -> 1, antiparallel -> 2."""
    diagram = trace_orientation(w)
    return tuple(1 if cls == PARALLEL else 2 for cls in diagram.syllable_classes())


def writhe(w: Word) -> int:
    """Sum of crossing signs of the traced diagram."""
    return trace_orientation(w).writhe


@dataclass(frozen=True)
class RSequenceResult:
    """Output of the literal prefix-relabeling rule plus its diagnostic.

    ``rows`` holds r_0 .. r_n (one row per syllable prefix); ``ks`` is the
    sequence the literal rule produces, ``trace_ks`` the authoritative one.
    """

    word: Word
    permutation: Perm3
    r0: tuple[int, int, int]
    rows: tuple[tuple[int, int, int], ...]
    ks: tuple[int, ...]
    trace_ks: tuple[int, ...]

    @property
    def mismatches(self) -> tuple[int, ...]:
        """1-based syllable numbers where the two methods disagree."""
        return tuple(
            i + 1 for i, (x, y) in enumerate(zip(self.ks, self.trace_ks)) if x != y
        )

    @property
    def agrees(self) -> bool:
        return not self.mismatches

    def diagnostics(self) -> list[str]:
        return [
            f"syllable {i + 1}: trace={t}, rseq={r}"
            for i, (r, t) in enumerate(zip(self.ks, self.trace_ks))
        ]


def r_sequence_method(w: Word) -> RSequenceResult:
    """The published relabeling recipe for the k subscripts, verbatim.

    r0 starts as [1, 2, 3]; the entry at the position where strand 3 ends
    is relabeled to 1 (when that position is 2 or 3).  Each syllable prefix
    permutes the row, and k_i is 1 when the previous row agrees at
    positions 2 and 3, else 2.  The result carries the trace-method
    sequence for comparison; callers should surface ``mismatches``.
    """
    if not is_knot(w):
        raise NotAKnotError("the relabeling rule is defined for knots only")
    if not is_alternating_standard(w):
        raise ValueError("the relabeling rule applies to alternating standard words")

    p_w = permutation_of(w)
    end_of_three = p_w.index(3) + 1
    r0 = [1, 2, 3]
    if end_of_three in (2, 3):
        r0[end_of_three - 1] = 1

    labels = [1, 2, 3]
    rows = [tuple(r0[x - 1] for x in labels)]
    for s in w.syllables:
        for _ in range(s.width):
            labels[s.index - 1], labels[s.index] = labels[s.index], labels[s.index - 1]
        rows.append(tuple(r0[x - 1] for x in labels))

    ks = tuple(
        1 if rows[i][1] == rows[i][2] else 2 for i in range(w.syllable_count)
    )
    return RSequenceResult(
        word=w,
        permutation=p_w,
        r0=(r0[0], r0[1], r0[2]),
        rows=tuple(rows),
        ks=ks,
        trace_ks=k_sequence(w),
    )
