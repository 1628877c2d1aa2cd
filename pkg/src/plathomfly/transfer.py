"""The 3x3 transfer-matrix engine for two-variable invariants of 4-plats.

Every crossing of a standard word contributes one constant 3x3 matrix over
Z[a^-1, a, m^-1, m], selected by its generator (1 or 2), the sign of its
syllable, and the syllable's orientation class k (parallel = 1,
antiparallel = 2).  The ordered product M over the whole word has, in its
second column, the coefficients (f, g, h) of the word's bottom tangle over
the three elementary tangle closures; the knot value is then

    P = f + g * delta + h,      delta = -(a + a^-1) / m,

where delta is the value of the 2-component unlink.  Division by m is the
Laurent monomial m^-1, so the whole pipeline stays in the Laurent ring.

Words outside the alternating standard family still evaluate (with traced
orientation classes) but are flagged uncertified: the closure theorem is
only stated for that family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import Word, is_alternating_standard, is_knot
from .laurent import Poly2, parse_poly2
from .orient import NotAKnotError, k_sequence


@dataclass(frozen=True)
class Matrix3:
    """An exact 3x3 matrix over Poly2."""

    rows: tuple[tuple[Poly2, Poly2, Poly2], ...]

    def __post_init__(self):
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("Matrix3 requires exactly 3x3 entries")

    @classmethod
    def identity(cls) -> Matrix3:
        one, zero = Poly2.one(), Poly2.zero()
        return cls((
            (one, zero, zero),
            (zero, one, zero),
            (zero, zero, one),
        ))

    @classmethod
    def from_strings(cls, rows: tuple[str, str, str]) -> Matrix3:
        return cls(tuple(
            tuple(parse_poly2(cell) for cell in row.split(","))
            for row in rows
        ))

    def __mul__(self, other: Matrix3) -> Matrix3:
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = Poly2.zero()
                for k in range(3):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(tuple(row))
        return Matrix3(tuple(out))

    def __pow__(self, k: int) -> Matrix3:
        # Exponents here are syllable widths; plain repeated multiplication.
        if k < 0:
            raise ValueError("negative matrix powers are not used by the pipeline")
        out = Matrix3.identity()
        for _ in range(k):
            out = out * self
        return out

    def column(self, j: int) -> tuple[Poly2, Poly2, Poly2]:
        return (self.rows[0][j], self.rows[1][j], self.rows[2][j])


@dataclass(frozen=True)
class TangleVector:
    """Coefficients of a tangle over the three elementary closures."""

    f: Poly2
    g: Poly2
    h: Poly2

    def as_tuple(self) -> tuple[Poly2, Poly2, Poly2]:
        return (self.f, self.g, self.h)


# The eight per-crossing constants, keyed (generator index, sign, k).
# Transcribed entry by entry; the inverse identities
# matrix(i,+1,k) * matrix(i,-1,k) == I pin the transcription in the tests.
_MATRIX_STRINGS: dict[tuple[int, int, int], tuple[str, str, str]] = {
    (1, 1, 1): ("1, 0, 0",
                "0, 0, -a^-2",
                "0, 1, -a^-1*m"),
    (1, 1, 2): ("1, 0, -a*m",
                "0, 0, -a^2",
                "0, 1, 0"),
    (1, -1, 1): ("1, 0, 0",
                 "0, -a*m, 1",
                 "0, -a^2, 0"),
    (1, -1, 2): ("1, -a^-1*m, 0",
                 "0, 0, 1",
                 "0, -a^-2, 0"),
    (2, 1, 1): ("-a^-1*m, 0, 1",
                "0, 1, 0",
                "-a^-2, 0, 0"),
    (2, 1, 2): ("0, 0, 1",
                "-a*m, 1, 0",
                "-a^2, 0, 0"),
    (2, -1, 1): ("0, 0, -a^2",
                 "0, 1, 0",
                 "1, 0, -a*m"),
    (2, -1, 2): ("0, 0, -a^-2",
                 "0, 1, -a^-1*m",
                 "1, 0, 0"),
}

GENERATOR_MATRICES: dict[tuple[int, int, int], Matrix3] = {
    key: Matrix3.from_strings(rows) for key, rows in _MATRIX_STRINGS.items()
}

# Value of the 2-component unlink, -(a + a^-1)/m; shared by close_plat and
# split_union so the sign convention cannot drift between them.
DELTA: Poly2 = parse_poly2("-a*m^-1 - a^-1*m^-1")


def generator_matrix(index: int, sign: int, k: int) -> Matrix3:
    """The matrix one crossing contributes, by generator, sign and class."""
    try:
        return GENERATOR_MATRICES[(index, sign, k)]
    except KeyError:
        raise ValueError(
            f"no generator matrix for index={index}, sign={sign}, k={k}"
        ) from None


def transfer_matrix(w: Word, ks: tuple[int, ...]) -> Matrix3:
    """Ordered product of per-syllable matrix powers, left to right."""
    if len(ks) != w.syllable_count:
        raise ValueError(
            f"k-sequence length {len(ks)} != syllable count {w.syllable_count}"
        )
    out = Matrix3.identity()
    for s, k in zip(w.syllables, ks):
        out = out * (generator_matrix(s.index, s.sign, k) ** s.width)
    return out


def fgh(matrix: Matrix3) -> TangleVector:
    """The tangle coefficients: the second column of the transfer product."""
    f, g, h = matrix.column(1)
    return TangleVector(f, g, h)


def close_plat(v: TangleVector) -> Poly2:
    """Close the bottom tangle with the top caps: f + g*delta + h."""
    return v.f + v.g * DELTA + v.h


def homfly(w: Word) -> Poly2:
    """Two-variable invariant of the plat closure of a knot word."""
    return evaluate(w).homfly


@dataclass(frozen=True)
class PlatEvaluation:
    """Everything the pipeline derives from one word."""

    word: Word
    ks: tuple[int, ...]
    fgh: TangleVector
    homfly: Poly2
    certified: bool


def evaluate(w: Word) -> PlatEvaluation:
    """Run the full pipeline on a knot word.

    Raises NotAKnotError for multi-component closures.  ``certified`` is
    False for words outside the alternating standard family; their values
    are computed with traced orientation classes but carry no guarantee.
    """
    if not is_knot(w):
        raise NotAKnotError("the transfer pipeline evaluates knots only")
    ks = k_sequence(w)
    vec = fgh(transfer_matrix(w, ks))
    return PlatEvaluation(
        word=w,
        ks=ks,
        fgh=vec,
        homfly=close_plat(vec),
        certified=is_alternating_standard(w),
    )


def mirror(p: Poly2) -> Poly2:
    """Invariant of the mirror image: substitute a -> a^-1."""
    return p.invert_a()


def connected_sum(p: Poly2, q: Poly2) -> Poly2:
    """The invariant is multiplicative over connected sums."""
    return p * q


def split_union(p: Poly2, q: Poly2) -> Poly2:
    """Distant union of two links gains one unlink factor."""
    return DELTA * p * q
