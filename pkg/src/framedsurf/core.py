"""Core domain types: surfaces, partitions, homology classes and framings.

A framing of a compact oriented surface with boundary is represented by its
winding number function restricted to a distinguished geometric basis: 2g
oriented simple closed curves x_1, y_1, ..., x_g, y_g paired symplectically,
plus n-1 arcs a_2, ..., a_n running from the first boundary component to each
of the others.  Curve values are integers, arc values are half-integers, and
the boundary values (the signature) must sum to the Euler characteristic
2 - 2g - n.

Half-integers are kept exact: arc values are `Fraction`s with denominator
exactly 2, and mod-2 arithmetic on them is done on doubled integers.  No
floating point is used anywhere in the package.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import (
    BadPartition,
    CoherenceViolation,
    KindMismatch,
    TypeViolation,
)

HalfInt = Fraction  # always with denominator 1 or 2

ABSOLUTE = "absolute"
RELATIVE = "relative"


def as_half_integer(value: Union[int, Fraction]) -> Fraction:
    """Coerce to an exact half-integer in Z + 1/2; reject anything else."""
    v = Fraction(value)
    if v.denominator != 2:
        raise TypeViolation(f"arc winding number must lie in Z + 1/2, got {v}")
    return v


def as_integer(value: Union[int, Fraction]) -> int:
    v = Fraction(value)
    if v.denominator != 1:
        raise TypeViolation(f"curve winding number must be an integer, got {v}")
    return int(v)


@dataclass(frozen=True)
class SurfaceType:
    """Topological type Sigma_{g,n}: genus g with n boundary components."""

    g: int
    n: int

    def __post_init__(self):
        if self.g < 0 or self.n < 0:
            raise ValueError("genus and boundary count must be non-negative")

    @property
    def euler(self) -> int:
        return 2 - 2 * self.g - self.n

    @property
    def homology_rank(self) -> int:
        """Rank of H_1 with the boundary classes [D_2], ..., [D_n] included."""
        return 2 * self.g + max(self.n - 1, 0)


@dataclass(frozen=True)
class PartitionKappa:
    """A partition kappa = (k_1, ..., k_n) of 2g - 2 by positive integers."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise BadPartition("partition must have at least one part")
        if any(p < 1 for p in parts):
            raise BadPartition(f"all parts must be >= 1, got {parts}")
        if sum(parts) % 2 != 0:
            raise BadPartition(f"sum of parts must be even, got {sum(parts)}")

    @classmethod
    def parse(cls, text: str) -> "PartitionKappa":
        try:
            parts = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
        except ValueError as exc:
            raise BadPartition(f"cannot parse partition {text!r}") from exc
        return cls(parts)

    @property
    def g(self) -> int:
        return (sum(self.parts) + 2) // 2

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def gcd(self) -> int:
        return math.gcd(*self.parts) if len(self.parts) > 1 else self.parts[0]

    @property
    def prong_orders(self) -> Tuple[int, ...]:
        """k_i = kappa_i + 1, the prong count at each zero."""
        return tuple(p + 1 for p in self.parts)

    def signature(self) -> Tuple[int, ...]:
        """Boundary signature -1 - kappa of the blown-up surface."""
        return tuple(-1 - p for p in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class HomologyClass:
    """A class in H_1(Sigma) (absolute) or H_1(Sigma, dSigma) (relative).

    Coordinates are over the basis x_1, y_1, ..., x_g, y_g followed by the
    boundary classes [D_2], ..., [D_n] (absolute classes only; note that
    [D_1] = -([D_2] + ... + [D_n])).  A relative class of an arc additionally
    records its ordered endpoint boundary labels (p, q), 1-based; the labels
    carry the incidence data used by the relative intersection pairing and by
    fractional boundary twists.
    """

    surface: SurfaceType
    sympl: Tuple[int, ...]
    boundary: Tuple[int, ...]
    kind: str = ABSOLUTE
    endpoints: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if len(self.sympl) != 2 * self.surface.g:
            raise ValueError("symplectic coordinate length must be 2g")
        if len(self.boundary) != max(self.surface.n - 1, 0):
            raise ValueError("boundary coordinate length must be n-1")
        if self.kind not in (ABSOLUTE, RELATIVE):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == RELATIVE:
            if self.endpoints is None:
                raise ValueError("relative classes must carry endpoints (p, q)")
            p, q = self.endpoints
            if not (1 <= p <= self.surface.n and 1 <= q <= self.surface.n):
                raise ValueError(f"endpoint labels out of range: {self.endpoints}")
        elif self.endpoints is not None:
            raise ValueError("absolute classes must not carry endpoints")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, surface: SurfaceType) -> "HomologyClass":
        return cls(surface, (0,) * (2 * surface.g), (0,) * max(surface.n - 1, 0))

    @classmethod
    def basis_curve(cls, surface: SurfaceType, index: int) -> "HomologyClass":
        """Index 0..2g-1 enumerates x_1, y_1, ..., x_g, y_g."""
        s = [0] * (2 * surface.g)
        s[index] = 1
        return cls(surface, tuple(s), (0,) * max(surface.n - 1, 0))

    @classmethod
    def boundary_class(cls, surface: SurfaceType, label: int) -> "HomologyClass":
        """[D_label] with the boundary oriented so the surface is on its left."""
        nb = max(surface.n - 1, 0)
        b = [0] * nb
        if label == 1:
            b = [-1] * nb
        else:
            b[label - 2] = 1
        return cls(surface, (0,) * (2 * surface.g), tuple(b))

    @classmethod
    def basis_arc(cls, surface: SurfaceType, label: int) -> "HomologyClass":
        """The distinguished arc a_label from boundary 1 to boundary `label`."""
        if label < 2 or label > surface.n:
            raise ValueError(f"arc label must be 2..n, got {label}")
        return cls(
            surface,
            (0,) * (2 * surface.g),
            (0,) * (surface.n - 1),
            kind=RELATIVE,
            endpoints=(1, label),
        )

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        self._check_compatible(other)
        kind = RELATIVE if RELATIVE in (self.kind, other.kind) else ABSOLUTE
        endpoints = self.endpoints if self.kind == RELATIVE else other.endpoints
        return HomologyClass(
            self.surface,
            tuple(a + b for a, b in zip(self.sympl, other.sympl)),
            tuple(a + b for a, b in zip(self.boundary, other.boundary)),
            kind=kind,
            endpoints=endpoints,
        )

    def __neg__(self) -> "HomologyClass":
        if self.kind == RELATIVE:
            p, q = self.endpoints
            endpoints = (q, p)
        else:
            endpoints = None
        return HomologyClass(
            self.surface,
            tuple(-a for a in self.sympl),
            tuple(-a for a in self.boundary),
            kind=self.kind,
            endpoints=endpoints,
        )

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)

    def scaled(self, m: int) -> "HomologyClass":
        if self.kind == RELATIVE:
            raise KindMismatch("cannot scale a relative arc class")
        return HomologyClass(
            self.surface,
            tuple(m * a for a in self.sympl),
            tuple(m * a for a in self.boundary),
        )

    def _check_compatible(self, other: "HomologyClass") -> None:
        if self.surface != other.surface:
            raise ValueError("homology classes on different surfaces")
        if self.kind == RELATIVE and other.kind == RELATIVE:
            raise KindMismatch("cannot add two relative arc classes")

    def incidence(self, label: int) -> int:
        """Signed incidence of a relative class with boundary `label`:
        +1 per arc endpoint arriving at the boundary (terminal end), -1 per
        endpoint leaving it (initial end).  Zero for absolute classes."""
        if self.kind != RELATIVE:
            return 0
        p, q = self.endpoints
        return (1 if q == label else 0) - (1 if p == label else 0)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.sympl) and all(c == 0 for c in self.boundary)


def intersection(a: HomologyClass, b: HomologyClass) -> int:
    """Relative algebraic intersection pairing <a, b>.

    The second argument must be absolute.  On symplectic coordinates
    <x_i, y_i> = 1 = -<y_i, x_i>; boundary classes pair trivially with all
    absolute classes.  An arc pairs with the coordinate [D_j] of `b` through
    its incidence at the j-th boundary (+1 arriving, -1 leaving); the
    crossing at a Delta_1 endpoint needs no separate term because
    [D_1] = -([D_2] + ... + [D_n]) makes it automatic.
    """
    if b.kind != ABSOLUTE:
        raise KindMismatch("second argument of the intersection pairing must be absolute")
    if a.surface != b.surface:
        raise ValueError("classes live on different surfaces")
    g = a.surface.g
    total = 0
    for i in range(g):
        total += a.sympl[2 * i] * b.sympl[2 * i + 1] - a.sympl[2 * i + 1] * b.sympl[2 * i]
    if a.kind == RELATIVE:
        for j in range(2, a.surface.n + 1):
            inc = a.incidence(j)
            if inc:
                total += inc * b.boundary[j - 2]
    return total


@dataclass(frozen=True)
class FramedSurface:
    """A relative framing of Sigma_{g,n}, stored through its winding numbers
    on a distinguished geometric basis.

    signature[i] is the winding number of the i-th boundary component (1-based
    labels elsewhere), curve_values holds (phi(x_1), phi(y_1), ..., phi(y_g)),
    arc_values holds the half-integers (phi(a_2), ..., phi(a_n)).
    """

    surface: SurfaceType
    signature: Tuple[int, ...]
    curve_values: Tuple[int, ...]
    arc_values: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.surface.n < 1:
            raise ValueError("a relative framing needs n >= 1; use AbsoluteFraming")
        if len(self.signature) != self.surface.n:
            raise ValueError("signature length must equal n")
        if len(self.curve_values) != 2 * self.surface.g:
            raise ValueError("curve value length must equal 2g")
        if len(self.arc_values) != self.surface.n - 1:
            raise ValueError("arc value length must equal n-1")
        object.__setattr__(self, "signature", tuple(as_integer(v) for v in self.signature))
        object.__setattr__(
            self, "curve_values", tuple(as_integer(v) for v in self.curve_values)
        )
        object.__setattr__(
            self, "arc_values", tuple(as_half_integer(v) for v in self.arc_values)
        )
        if sum(self.signature) != self.surface.euler:
            raise CoherenceViolation(
                f"boundary winding numbers sum to {sum(self.signature)}, "
                f"homological coherence requires chi = {self.surface.euler}"
            )

    @property
    def holomorphic_type(self) -> bool:
        return all(v <= -1 for v in self.signature)

    def boundary_value(self, label: int) -> int:
        return self.signature[label - 1]

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        """JSON schema: half-integer arc values are encoded doubled, i.e. the
        integer 2*phi(a_j); "p/2"-style strings are accepted on input."""
        return {
            "genus": self.surface.g,
            "boundary": [
                {"label": i + 1, "wn": v} for i, v in enumerate(self.signature)
            ],
            "basis": {
                "xy": list(self.curve_values),
                "arcs": [int(2 * v) for v in self.arc_values],
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FramedSurface":
        g = int(data["genus"])
        boundary = sorted(data["boundary"], key=lambda d: d["label"])
        signature = tuple(int(d["wn"]) for d in boundary)
        xy = tuple(int(v) for v in data["basis"]["xy"])
        arcs = []
        for raw in data["basis"].get("arcs", []):
            if isinstance(raw, str):
                arcs.append(Fraction(raw))
            else:
                arcs.append(Fraction(int(raw), 2))
        surface = SurfaceType(g, len(signature))
        return new_framed_surface(surface, signature, tuple(xy) + tuple(arcs))

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FramedSurface":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class AbsoluteFraming:
    """An absolute framing of a closed surface with n marked points: winding
    numbers of closed curves only, no arc data."""

    surface: SurfaceType  # n counts marked points here
    signature: Tuple[int, ...]
    curve_values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.signature) != self.surface.n:
            raise ValueError("signature length must equal the number of marked points")
        if len(self.curve_values) != 2 * self.surface.g:
            raise ValueError("curve value length must equal 2g")
        if sum(self.signature) != self.surface.euler:
            raise CoherenceViolation(
                f"signature sums to {sum(self.signature)}, expected {self.surface.euler}"
            )


def new_framed_surface(
    surface: SurfaceType,
    signature: Sequence[int],
    basis_values: Sequence[Union[int, Fraction]],
) -> FramedSurface:
    """Validate and build a framed surface from basis data.

    `basis_values` concatenates the 2g integer curve values and the n-1
    half-integer arc values.  Any assignment satisfying the typing and the
    coherence constraint is accepted: such a framing always exists.
    """
    g, n = surface.g, surface.n
    values = list(basis_values)
    if len(values) != 2 * g + (n - 1):
        raise ValueError(
            f"expected {2 * g + n - 1} basis values for Sigma_{{{g},{n}}}, got {len(values)}"
        )
    curve_values = tuple(as_integer(v) for v in values[: 2 * g])
    arc_values = tuple(as_half_integer(v) for v in values[2 * g :])
    return FramedSurface(surface, tuple(signature), curve_values, arc_values)
