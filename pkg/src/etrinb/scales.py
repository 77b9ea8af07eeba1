"""Finite attribute scales, the product space they span, and dominance.

Levels are stored as :class:`fractions.Fraction` so that every comparison and
every index computed downstream is exact. Scales are ascending; a criterion to
be minimised must be negated before it is turned into a scale.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterator, Sequence

from .errors import DimensionError, ResourceCapError, SymbolicScaleError, ValidationError

DEFAULT_ENUM_CAP = 10**8
ENUM_CAP_ENV = "ETRI_ENUM_CAP"


def enumeration_cap() -> int:
    """Cap on product-space enumeration, overridable through ``ETRI_ENUM_CAP``."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None


def parse_rational(value) -> Fraction:
    """Parse ``value`` exactly: ints, Fractions, ``"6.5"``, ``"13/2"``.

    Floats are rejected because their binary expansion is rarely the value
    the user meant.
    """
    if isinstance(value, bool):
        raise ValidationError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValidationError(
            f"refusing float {value!r}; pass the value as a string such as '6.5' or '13/2'"
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"not a rational: {value!r}") from None
    raise ValidationError(f"not a rational: {value!r}")


def _is_decimal_denominator(q: int) -> bool:
    for p in (2, 5):
        while q % p == 0:
            q //= p
    return q == 1


def format_rational(value: Fraction) -> str:
    """Inverse of :func:`parse_rational`.

    Values with a terminating decimal expansion are written as decimals
    (``"6.5"``), everything else as ``"p/q"``.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    if not _is_decimal_denominator(value.denominator):
        return f"{value.numerator}/{value.denominator}"
    q = value.denominator
    digits = 0
    while 10**digits % q:
        digits += 1
    scaled = value * 10**digits
    sign = "-" if scaled < 0 else ""
    scaled = abs(int(scaled))
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")


@dataclass(frozen=True)
class Scale:
    """An ordered finite set of levels for one attribute.

    Numeric scales hold strictly increasing Fractions. Symbolic scales hold
    arbitrary hashable labels whose listed order is the declared order.
    """

    attribute_id: str
    levels: tuple
    name: str = ""
    symbolic: bool = False
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        levels = tuple(self.levels)
        if not levels:
            raise ValidationError(f"scale {self.attribute_id!r} has no levels")
        if not self.symbolic:
            levels = tuple(parse_rational(v) for v in levels)
            for a, b in zip(levels, levels[1:]):
                if not a < b:
                    raise ValidationError(
                        f"scale {self.attribute_id!r} levels must be strictly increasing "
                        f"({format_rational(a)} then {format_rational(b)})"
                    )
        elif len(set(levels)) != len(levels):
            raise ValidationError(f"scale {self.attribute_id!r} has duplicate symbols")
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(levels)})
        if not self.name:
            object.__setattr__(self, "name", str(self.attribute_id))

    @classmethod
    def numeric(cls, attribute_id, levels: Sequence, name: str = "") -> "Scale":
        return cls(attribute_id, tuple(levels), name)

    @classmethod
    def symbols(cls, attribute_id, symbols: Sequence[Hashable], name: str = "") -> "Scale":
        return cls(attribute_id, tuple(symbols), name, symbolic=True)

    @classmethod
    def from_range(cls, attribute_id, start, stop, step, name: str = "") -> "Scale":
        """Levels ``start, start + step, ...`` up to and including ``stop``."""
        start, stop, step = (parse_rational(v) for v in (start, stop, step))
        if step <= 0:
            raise ValidationError("range step must be positive")
        count = math.floor((stop - start) / step) + 1
        return cls(attribute_id, tuple(start + k * step for k in range(count)), name)

    def __len__(self) -> int:
        return len(self.levels)

    def __contains__(self, level) -> bool:
        try:
            return level in self._index
        except TypeError:
            return False

    def index(self, level) -> int:
        try:
            return self._index[level]
        except (KeyError, TypeError):
            raise DimensionError(f"{level!r} is not a level of scale {self.name!r}") from None

    def require_numeric(self) -> None:
        if self.symbolic:
            raise SymbolicScaleError(f"scale {self.name!r} is symbolic; numeric operation refused")

    @property
    def bottom(self):
        return self.levels[0]

    @property
    def top(self):
        return self.levels[-1]


@dataclass(frozen=True)
class ProductSpace:
    """Cartesian product of attribute scales.

    Alternatives are plain tuples of levels, one per attribute.
    """

    scales: tuple

    def __post_init__(self):
        scales = tuple(self.scales)
        if not scales:
            raise ValidationError("a product space needs at least one attribute")
        object.__setattr__(self, "scales", scales)

    @classmethod
    def uniform(cls, n: int, levels: Sequence, prefix: str = "g") -> "ProductSpace":
        return cls(tuple(Scale.numeric(f"{prefix}{i + 1}", levels) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.scales)

    @property
    def shape(self) -> tuple:
        return tuple(len(s) for s in self.scales)

    @property
    def size(self) -> int:
        return math.prod(self.shape)

    @property
    def is_numeric(self) -> bool:
        return not any(s.symbolic for s in self.scales)

    def require_numeric(self) -> None:
        for s in self.scales:
            s.require_numeric()

    def validate(self, x) -> tuple:
        x = tuple(x)
        if len(x) != self.n:
            raise DimensionError(f"alternative has {len(x)} coordinates, space has {self.n}")
        for level, scale in zip(x, self.scales):
            if level not in scale:
                raise DimensionError(f"{level!r} is not a level of scale {scale.name!r}")
        return x

    def coerce(self, x) -> tuple:
        """Parse the coordinates of ``x`` (strings, ints) into scale levels."""
        x = tuple(x)
        if len(x) != self.n:
            raise DimensionError(f"alternative has {len(x)} coordinates, space has {self.n}")
        out = []
        for level, scale in zip(x, self.scales):
            if not scale.symbolic:
                level = parse_rational(level)
            scale.index(level)
            out.append(level)
        return tuple(out)

    def __contains__(self, x) -> bool:
        try:
            self.validate(x)
        except DimensionError:
            return False
        return True

    def index_of(self, x) -> tuple:
        x = tuple(x)
        if len(x) != self.n:
            raise DimensionError(f"alternative has {len(x)} coordinates, space has {self.n}")
        return tuple(s.index(v) for s, v in zip(self.scales, x))

    def at(self, idx) -> tuple:
        return tuple(s.levels[k] for s, k in zip(self.scales, idx))

    def enumerate(self, cap: int | None = None) -> Iterator[tuple]:
        """Yield every alternative once, in lexicographic order of level indices."""
        cap = enumeration_cap() if cap is None else cap
        if self.size > cap:
            raise ResourceCapError(
                f"product space has {self.size} alternatives, above the cap of {cap}",
                size=self.size,
                cap=cap,
            )
        return itertools.product(*(s.levels for s in self.scales))


def dominates(x, y, space: ProductSpace) -> bool:
    """``x`` is at least as good as ``y`` on every attribute."""
    ix = space.index_of(x)
    iy = space.index_of(y)
    return all(a >= b for a, b in zip(ix, iy))


def enumerate_space(space: ProductSpace, cap: int | None = None) -> Iterator[tuple]:
    return space.enumerate(cap)
