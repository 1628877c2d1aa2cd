"""Exact sparse Laurent-polynomial arithmetic for knot invariants.

Two coefficient setups are provided:

* ``Poly2``: integer Laurent polynomials in the two skein variables ``a``
  and ``m``, i.e. the ring Z[a, a^-1, m, m^-1].  Every two-variable
  invariant value in this package lives here.
* ``BracketPoly``: Laurent polynomials in the single bracket variable ``A``
  over the Gaussian integers Z[i].  Bracket/Jones values live here; the
  Gaussian carrier is what makes the two-variable -> one-variable
  specialization a ring homomorphism (the substitution has a factor of i).

Polynomials are immutable and canonical: zero coefficients are never
stored, and two values are equal exactly when their term maps are equal.
Coefficients are arbitrary-precision integers throughout; there is no
floating-point mode.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping


class PolyParseError(ValueError):
    """Raised for malformed polynomial text; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


# ---------------------------------------------------------------------------
# Gaussian integers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussInt:
    """An element re + im*i of Z[i]."""

    re: int
    im: int = 0

    def __add__(self, other: GaussInt | int) -> GaussInt:
        other = _as_gauss(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: GaussInt | int) -> GaussInt:
        other = _as_gauss(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: GaussInt | int) -> GaussInt:
        return _as_gauss(other) - self

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        other = _as_gauss(other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __pow__(self, k: int) -> GaussInt:
        if k < 0:
            raise ValueError("negative powers are only defined for units")
        out = GaussInt(1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        op = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        tail = "i" if mag == 1 else f"{mag}i"
        return f"({self.re}{op}{tail})"


def _as_gauss(value: GaussInt | int) -> GaussInt:
    if isinstance(value, GaussInt):
        return value
    if isinstance(value, int):
        return GaussInt(value)
    return NotImplemented  # type: ignore[return-value]


_I = GaussInt(0, 1)
_I_POWERS = (GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1))


def _i_pow(k: int) -> GaussInt:
    """i**k for any integer k (the powers cycle with period 4)."""
    return _I_POWERS[k % 4]


# ---------------------------------------------------------------------------
# Two-variable integer Laurent polynomials
# ---------------------------------------------------------------------------

class Poly2:
    """Sparse Laurent polynomial in a, m over Z, keyed by (a_exp, m_exp).

    Values are immutable; all arithmetic returns new canonical objects with
    no stored zero coefficients.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        data: dict[tuple[int, int], int] = {}
        if terms:
            for (ae, me), coeff in terms.items():
                if coeff:
                    key = (int(ae), int(me))
                    s = data.get(key, 0) + int(coeff)
                    if s:
                        data[key] = s
                    elif key in data:
                        del data[key]
        self._terms = data

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> Poly2:
        return cls()

    @classmethod
    def one(cls) -> Poly2:
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> Poly2:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a_exp: int = 0, m_exp: int = 0, coeff: int = 1) -> Poly2:
        return cls({(a_exp, m_exp): coeff})

    # -- inspection ----------------------------------------------------------

    def terms(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Terms sorted by (a_exp, m_exp) ascending."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, a_exp: int, m_exp: int) -> int:
        return self._terms.get((a_exp, m_exp), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def min_m_exp(self) -> int:
        if not self._terms:
            return 0
        return min(me for _, me in self._terms)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: Poly2 | int) -> Poly2:
        other = _as_poly2(other)
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            s = out.get(key, 0) + coeff
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        result = Poly2.__new__(Poly2)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> Poly2:
        result = Poly2.__new__(Poly2)
        result._terms = {key: -coeff for key, coeff in self._terms.items()}
        return result

    def __sub__(self, other: Poly2 | int) -> Poly2:
        return self + (-_as_poly2(other))

    def __rsub__(self, other: Poly2 | int) -> Poly2:
        return _as_poly2(other) + (-self)

    def __mul__(self, other: Poly2 | int) -> Poly2:
        other = _as_poly2(other)
        out: dict[tuple[int, int], int] = {}
        for (a1, m1), c1 in self._terms.items():
            for (a2, m2), c2 in other._terms.items():
                key = (a1 + a2, m1 + m2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        result = Poly2.__new__(Poly2)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly2:
        if k < 0:
            raise ValueError("negative powers of a general Poly2 are undefined")
        out = Poly2.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- structure maps ------------------------------------------------------

    def invert_a(self) -> Poly2:
        """The involutive ring map a -> a^-1 (mirror image on knot values)."""
        result = Poly2.__new__(Poly2)
        result._terms = {(-ae, me): c for (ae, me), c in self._terms.items()}
        return result

    # -- presentation ---------------------------------------------------------

    def format(self, style: str = "plain") -> str:
        return format_poly2(self, style)

    def __str__(self) -> str:
        return format_poly2(self)

    def __repr__(self) -> str:
        return f"Poly2<{format_poly2(self)}>"

    def to_json(self) -> list[dict[str, int]]:
        return [{"a": ae, "m": me, "c": c} for (ae, me), c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, int]]) -> Poly2:
        return cls({(int(t["a"]), int(t["m"])): int(t["c"]) for t in data})


def _as_poly2(value: Poly2 | int) -> Poly2:
    if isinstance(value, Poly2):
        return value
    if isinstance(value, int):
        return Poly2.constant(value)
    return NotImplemented  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# One-variable Laurent polynomials over Z[i]
# ---------------------------------------------------------------------------

class BracketPoly:
    """Sparse Laurent polynomial in A over the Gaussian integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, GaussInt | int] | None = None):
        data: dict[int, GaussInt] = {}
        if terms:
            for exp, coeff in terms.items():
                g = _as_gauss(coeff)
                if g:
                    prev = data.get(int(exp))
                    g = prev + g if prev is not None else g
                    if g:
                        data[int(exp)] = g
                    elif int(exp) in data:
                        del data[int(exp)]
        self._terms = data

    @classmethod
    def zero(cls) -> BracketPoly:
        return cls()

    @classmethod
    def one(cls) -> BracketPoly:
        return cls({0: GaussInt(1)})

    @classmethod
    def monomial(cls, exp: int, coeff: GaussInt | int = 1) -> BracketPoly:
        return cls({exp: coeff})

    @classmethod
    def loop_value(cls) -> BracketPoly:
        """The bracket value of an extra disjoint circle: -A^2 - A^-2."""
        return cls({2: -1, -2: -1})

    def terms(self) -> tuple[tuple[int, GaussInt], ...]:
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exp: int) -> GaussInt:
        return self._terms.get(exp, GaussInt(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_real(self) -> bool:
        """True when every coefficient has zero imaginary part."""
        return all(c.im == 0 for c in self._terms.values())

    def __add__(self, other: BracketPoly | int) -> BracketPoly:
        other = _as_bracket(other)
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            s = out.get(exp, GaussInt(0)) + coeff
            if s:
                out[exp] = s
            elif exp in out:
                del out[exp]
        result = BracketPoly.__new__(BracketPoly)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> BracketPoly:
        result = BracketPoly.__new__(BracketPoly)
        result._terms = {exp: -c for exp, c in self._terms.items()}
        return result

    def __sub__(self, other: BracketPoly | int) -> BracketPoly:
        return self + (-_as_bracket(other))

    def __rsub__(self, other: BracketPoly | int) -> BracketPoly:
        return _as_bracket(other) + (-self)

    def __mul__(self, other: BracketPoly | GaussInt | int) -> BracketPoly:
        if isinstance(other, (GaussInt, int)):
            g = _as_gauss(other)
            if not g:
                return BracketPoly.zero()
            result = BracketPoly.__new__(BracketPoly)
            result._terms = {exp: c * g for exp, c in self._terms.items()}
            return result
        out: dict[int, GaussInt] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                s = out.get(exp, GaussInt(0)) + c1 * c2
                if s:
                    out[exp] = s
                elif exp in out:
                    del out[exp]
        result = BracketPoly.__new__(BracketPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BracketPoly:
        if k < 0:
            raise ValueError("negative powers of a general BracketPoly are undefined")
        out = BracketPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _as_bracket(other)
        if not isinstance(other, BracketPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def shift(self, exp: int) -> BracketPoly:
        """Multiply by the monomial A**exp."""
        result = BracketPoly.__new__(BracketPoly)
        result._terms = {e + exp: c for e, c in self._terms.items()}
        return result

    def invert_A(self) -> BracketPoly:
        """The mirror map A -> A^-1."""
        result = BracketPoly.__new__(BracketPoly)
        result._terms = {-e: c for e, c in self._terms.items()}
        return result

    def format(self, style: str = "plain") -> str:
        return format_bracket(self, style)

    def __str__(self) -> str:
        return format_bracket(self)

    def __repr__(self) -> str:
        return f"BracketPoly<{format_bracket(self)}>"

    def to_json(self) -> list[dict[str, int]]:
        return [{"A": e, "re": c.re, "im": c.im} for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, int]]) -> BracketPoly:
        return cls({int(t["A"]): GaussInt(int(t["re"]), int(t.get("im", 0))) for t in data})


def _as_bracket(value: BracketPoly | int) -> BracketPoly:
    if isinstance(value, BracketPoly):
        return value
    if isinstance(value, int):
        return BracketPoly({0: value})
    return NotImplemented  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Text grammar (shared by both rings)
#
#   poly  := term (('+'|'-') term)*
#   term  := coeff? ('*'? var ('^' int)?)*
#   coeff := int;  int := '-'? [0-9]+
# ---------------------------------------------------------------------------

def _scan_poly(text: str, variables: str) -> dict[tuple[int, ...], int]:
    i = 0
    n = len(text)
    var_slot = {v: k for k, v in enumerate(variables)}
    acc: dict[tuple[int, ...], int] = {}

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def scan_int(context: str) -> int:
        nonlocal i
        start = i
        if i < n and text[i] in "+-":
            i += 1
        digits_start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == digits_start:
            raise PolyParseError(f"expected integer {context}", min(start, n))
        return int(text[start:i])

    skip_ws()
    first = True
    while i < n:
        sign = 1
        if first:
            if text[i] == "+":
                i += 1
                skip_ws()
            elif text[i] == "-":
                sign = -1
                i += 1
                skip_ws()
        else:
            if text[i] == "+":
                pass
            elif text[i] == "-":
                sign = -1
            else:
                raise PolyParseError("expected '+' or '-' before next term", i)
            i += 1
            skip_ws()

        coeff = 1
        has_coeff = False
        if i < n and text[i].isdigit():
            digits_start = i
            while i < n and text[i].isdigit():
                i += 1
            coeff = int(text[digits_start:i])
            has_coeff = True
            skip_ws()

        exps = [0] * len(variables)
        has_var = False
        while True:
            mark = i
            saw_star = False
            if i < n and text[i] == "*":
                saw_star = True
                i += 1
                skip_ws()
            if i < n and text[i].isalpha():
                name = text[i]
                if name not in var_slot:
                    raise PolyParseError(f"unknown variable {name!r}", i)
                i += 1
                exp = 1
                if i < n and text[i] == "^":
                    i += 1
                    exp = scan_int("after '^'")
                exps[var_slot[name]] += exp
                has_var = True
                skip_ws()
            else:
                if saw_star:
                    raise PolyParseError("expected variable after '*'", min(i, n))
                i = mark
                break

        if not (has_coeff or has_var):
            raise PolyParseError("expected term", min(i, n))
        key = tuple(exps)
        acc[key] = acc.get(key, 0) + sign * coeff
        first = False
        skip_ws()
    return acc


def parse_poly2(text: str) -> Poly2:
    """Parse a two-variable polynomial like ``-2*a^2 + a^2*m^2 - a^4``."""
    raw = _scan_poly(text, "am")
    return Poly2({(ae, me): c for (ae, me), c in raw.items()})


def parse_bracket(text: str) -> BracketPoly:
    """Parse a one-variable polynomial in A with integer coefficients."""
    raw = _scan_poly(text, "A")
    return BracketPoly({exps[0]: c for exps, c in raw.items()})


def _format_terms(items, var_strings, style: str) -> str:
    if not items:
        return "0"
    pieces: list[str] = []
    for idx, (coeff_str, is_negative, vars_part) in enumerate(items):
        if idx == 0:
            head = "-" if is_negative else ""
            pieces.append(head + _join_term(coeff_str, vars_part, style))
        else:
            sep = " - " if is_negative else " + "
            pieces.append(sep + _join_term(coeff_str, vars_part, style))
    return "".join(pieces)


def _join_term(coeff_str: str, vars_part: list[str], style: str) -> str:
    if not vars_part:
        return coeff_str if coeff_str else "1"
    if not coeff_str:
        joined = "*".join(vars_part) if style == "plain" else "".join(vars_part)
        return joined
    if style == "plain":
        return "*".join([coeff_str] + vars_part)
    return coeff_str + "".join(vars_part)


def _var_power(name: str, exp: int, style: str) -> str:
    if exp == 1:
        return name
    if style == "latex":
        return f"{name}^{{{exp}}}"
    return f"{name}^{exp}"


def format_poly2(p: Poly2, style: str = "plain") -> str:
    """Render with terms sorted by (a_exp, m_exp) ascending.

    Styles: ``plain`` (ASCII, '*'-separated, reparseable), ``latex``,
    ``json`` (the list-of-terms schema).
    """
    if style == "json":
        return json.dumps(p.to_json())
    if style not in ("plain", "latex"):
        raise ValueError(f"unknown format style {style!r}")
    items = []
    for (ae, me), c in p.terms():
        vars_part = []
        if ae:
            vars_part.append(_var_power("a", ae, style))
        if me:
            vars_part.append(_var_power("m", me, style))
        mag = abs(c)
        coeff_str = str(mag) if (mag != 1 or not vars_part) else ""
        items.append((coeff_str, c < 0, vars_part))
    return _format_terms(items, None, style)


def format_bracket(p: BracketPoly, style: str = "plain") -> str:
    """Render a BracketPoly; Gaussian coefficients print as (re+imi)."""
    if style == "json":
        return json.dumps(p.to_json())
    if style not in ("plain", "latex"):
        raise ValueError(f"unknown format style {style!r}")
    items = []
    for exp, c in p.terms():
        vars_part = [_var_power("A", exp, style)] if exp else []
        if c.im == 0:
            mag = abs(c.re)
            coeff_str = str(mag) if (mag != 1 or not vars_part) else ""
            items.append((coeff_str, c.re < 0, vars_part))
        else:
            items.append((str(c), False, vars_part))
    return _format_terms(items, None, style)


# ---------------------------------------------------------------------------
# Specialization to the bracket variable
# ---------------------------------------------------------------------------
#
# The one-variable (Jones) invariant is obtained from the two-variable one by
# substituting a and m with expressions in A.  Two candidate substitutions
# exist, differing by the mirror A <-> A^-1:
#
#     (a, m) -> (i*A^4,  i*(A^2 - A^-2))      [a_exponent = +4]
#     (a, m) -> (i*A^-4, i*(A^-2 - A^2))      [a_exponent = -4]
#
# Exactly one of them is consistent with this package's diagram conventions
# (over-strand and smoothing choices in the kauffman module).  The constant
# below was calibrated once by running the trefoil fixture against the
# bracket oracle and is frozen; the calibration test in the suite pins it.

SPECIALIZE_A_EXPONENT = -4


def specialize_to_A(p: Poly2) -> BracketPoly:
    """Map a two-variable value to the bracket ring.

    This is a ring homomorphism.  Negative powers of m are handled by exact
    Laurent division; a ValueError is raised if the division is not exact
    (such inputs are not in the image of any link invariant).
    """
    return _specialize(p, SPECIALIZE_A_EXPONENT)


def _specialize(p: Poly2, a_exponent: int) -> BracketPoly:
    if a_exponent not in (4, -4):
        raise ValueError("a_exponent must be +4 or -4")
    if p.is_zero:
        return BracketPoly.zero()
    half = a_exponent // 2
    m_image = BracketPoly({half: _I, -half: -_I})

    shift = max(0, -p.min_m_exp())
    max_m = max(me for (_, me), _ in p.terms()) + shift
    m_powers = [BracketPoly.one()]
    for _ in range(max_m):
        m_powers.append(m_powers[-1] * m_image)

    num = BracketPoly.zero()
    for (ae, me), c in p.terms():
        scalar = _i_pow(ae) * c
        num = num + m_powers[me + shift].shift(a_exponent * ae) * scalar
    if shift == 0:
        return num

    # m_image factors as unit * A^-2 * (A^4 - 1) with unit = +-i, so dividing
    # by m_image**shift multiplies by the inverse unit power and A^(2*shift),
    # then divides exactly by (A^4 - 1) shift times.
    unit = _I if a_exponent > 0 else -_I
    inv_unit = unit.conjugate()
    out = num.shift(2 * shift) * (inv_unit ** shift)
    for _ in range(shift):
        out = _exact_div_A4_minus_1(out)
    return out


def _exact_div_A4_minus_1(q: BracketPoly) -> BracketPoly:
    """Exact division by (A^4 - 1); raises ValueError on a nonzero remainder."""
    if q.is_zero:
        return q
    terms = dict(q.terms())
    lo = min(terms)
    hi = max(terms)
    width = hi - lo
    arr: list[GaussInt] = [GaussInt(0)] * (width + 1)
    for exp, c in terms.items():
        arr[exp - lo] = c
    quot: dict[int, GaussInt] = {}
    for d in range(width, 3, -1):
        c = arr[d]
        if c:
            quot[d - 4 + lo] = quot.get(d - 4 + lo, GaussInt(0)) + c
            arr[d] = GaussInt(0)
            arr[d - 4] = arr[d - 4] + c
    if any(arr[:4] if width >= 3 else arr):
        raise ValueError("polynomial is not divisible by (A^4 - 1)")
    return BracketPoly(quot)
