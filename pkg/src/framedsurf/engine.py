"""Action of Dehn twists, fractional boundary twists and point pushes on
tracked winding numbers and homology.

Conventions
-----------
The mapping class group acts on framings from the left by pullback:
(f . phi)(x) = phi(f^{-1}(x)).  The engine keeps the tracked objects fixed and
moves the framing, so applying the twist T_a^m updates every tracked object t
by  wn(t) <- wn(t) - m * <t, a> * wn(a),  while the accumulated homology
matrix picks up the forward transvection v -> v + m * <v, a> * [a] on the
left.

The unit fractional twist at a boundary of prong number k_i is normalized so
that, acting forward, it adds +1 to the winding number of an arc arriving at
that boundary (and -1 to one leaving it).  With this normalization the
auxiliary twists T_{D_i}^{1/k_i} T_{d_i}^{-1} (k_i odd, wn(d_i) = -1, d_i
separating off D_i) stabilize every framing of holomorphic type, and the
k_i-th power of the unit screw acts on incident arcs as the inverse of the
engine's transvection twist about the parallel curve.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .core import (
    ABSOLUTE,
    RELATIVE,
    FramedSurface,
    HomologyClass,
    SurfaceType,
    as_half_integer,
    as_integer,
    intersection,
)
from .errors import (
    KindMismatch,
    UnknownBoundary,
    UnknownCurve,
    WrongBoundaryCount,
)

Matrix = Tuple[Tuple[int, ...], ...]


def identity_matrix(dim: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    dim = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(dim)) for j in range(dim))
        for i in range(dim)
    )


def standard_symplectic_form(surface: SurfaceType) -> Matrix:
    """The intersection form J on H_1 coordinates: <x_i, y_i> = 1, boundary
    block zero."""
    dim = surface.homology_rank
    rows = [[0] * dim for _ in range(dim)]
    for i in range(surface.g):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return tuple(tuple(r) for r in rows)


def preserves_form(m: Matrix, j: Matrix) -> bool:
    mt = tuple(zip(*m))
    return mat_mul(mat_mul(mt, j), m) == j


def transvection_matrix(cls: HomologyClass, power: int) -> Matrix:
    """Matrix of v -> v + power * <v, cls> * [cls] on absolute homology."""
    surface = cls.surface
    dim = surface.homology_rank
    coords = list(cls.sympl) + list(cls.boundary)
    rows = []
    for i in range(dim):
        basis = HomologyClass(
            surface,
            tuple(1 if k == i else 0 for k in range(2 * surface.g)),
            tuple(1 if k + 2 * surface.g == i else 0 for k in range(dim - 2 * surface.g)),
        )
        pairing = intersection(basis, cls)
        row = [coords[j] * power * pairing for j in range(dim)]
        row[i] += 1
        # rows here are images of basis vectors; transpose at the end
        rows.append(tuple(row))
    return tuple(zip(*rows))  # column convention: M @ v


def apply_matrix(m: Matrix, cls: HomologyClass) -> HomologyClass:
    coords = list(cls.sympl) + list(cls.boundary)
    new = [sum(m[i][j] * coords[j] for j in range(len(coords))) for i in range(len(coords))]
    g2 = 2 * cls.surface.g
    return HomologyClass(
        cls.surface,
        tuple(new[:g2]),
        tuple(new[g2:]),
        kind=cls.kind,
        endpoints=cls.endpoints,
    )


@dataclass(frozen=True)
class TrackedCurve:
    name: str
    homology: HomologyClass
    wn: int
    separating: bool = False

    def __post_init__(self):
        object.__setattr__(self, "wn", as_integer(self.wn))
        if self.homology.kind != ABSOLUTE:
            raise KindMismatch(f"curve {self.name!r} must carry an absolute class")

    @property
    def admissible(self) -> bool:
        """Nonseparating with winding number zero; its twist preserves the
        framing.  The separating flag is declared by the caller."""
        return (not self.separating) and (not self.homology.is_zero()) and self.wn == 0


@dataclass(frozen=True)
class TrackedArc:
    name: str
    homology: HomologyClass
    wn: Fraction

    def __post_init__(self):
        object.__setattr__(self, "wn", as_half_integer(self.wn))
        if self.homology.kind != RELATIVE:
            raise KindMismatch(f"arc {self.name!r} must carry a relative class")


# -- mapping words ----------------------------------------------------


@dataclass(frozen=True)
class Twist:
    curve: str
    power: int = 1


@dataclass(frozen=True)
class FractionalTwist:
    """T_{D_label}^{power / k_label} where k = |phi(D_label)|."""

    label: int
    power: int = 1


@dataclass(frozen=True)
class Push:
    """Point-push about a loop with the given absolute homology class."""

    loop: HomologyClass


Letter = Union[Twist, FractionalTwist, Push]
MappingWord = Tuple[Letter, ...]


def word_to_json(word: Sequence[Letter]) -> str:
    out = []
    for letter in word:
        if isinstance(letter, Twist):
            out.append({"twist": letter.curve, "pow": letter.power})
        elif isinstance(letter, FractionalTwist):
            out.append({"frac": letter.label, "pow": letter.power})
        elif isinstance(letter, Push):
            out.append(
                {"push": list(letter.loop.sympl) + list(letter.loop.boundary)}
            )
        else:
            raise TypeError(f"unknown letter {letter!r}")
    return json.dumps(out)


def word_from_json(text: str, surface: SurfaceType) -> MappingWord:
    letters: List[Letter] = []
    for item in json.loads(text):
        if "twist" in item:
            letters.append(Twist(item["twist"], int(item.get("pow", 1))))
        elif "frac" in item:
            letters.append(FractionalTwist(int(item["frac"]), int(item.get("pow", 1))))
        elif "push" in item:
            coeffs = [int(c) for c in item["push"]]
            g2 = 2 * surface.g
            letters.append(
                Push(HomologyClass(surface, tuple(coeffs[:g2]), tuple(coeffs[g2:])))
            )
        else:
            raise ValueError(f"unknown word letter {item!r}")
    return tuple(letters)


# -- engine state -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class EngineState:
    """Immutable snapshot: a framing plus named tracked curves and arcs.

    The distinguished basis elements of the framing are always tracked under
    the reserved names x1, y1, ..., xg, yg and a2, ..., an.  homology_action
    accumulates the forward action of the applied word on H_1.
    """

    surface: SurfaceType
    signature: Tuple[int, ...]
    curves: Mapping[str, TrackedCurve]
    arcs: Mapping[str, TrackedArc]
    homology_action: Matrix

    BASIS_CURVE_NAMES = staticmethod(
        lambda g: tuple(
            f"{xy}{i + 1}" for i in range(g) for xy in ("x", "y")
        )
    )

    @classmethod
    def from_framing(cls, framing: FramedSurface) -> "EngineState":
        surface = framing.surface
        curves: Dict[str, TrackedCurve] = {}
        for i in range(2 * surface.g):
            name = ("x" if i % 2 == 0 else "y") + str(i // 2 + 1)
            curves[name] = TrackedCurve(
                name, HomologyClass.basis_curve(surface, i), framing.curve_values[i]
            )
        arcs: Dict[str, TrackedArc] = {}
        for j in range(2, surface.n + 1):
            arcs[f"a{j}"] = TrackedArc(
                f"a{j}",
                HomologyClass.basis_arc(surface, j),
                framing.arc_values[j - 2],
            )
        return cls(
            surface,
            framing.signature,
            curves,
            arcs,
            identity_matrix(surface.homology_rank),
        )

    @property
    def framing(self) -> FramedSurface:
        """The current framing, reassembled from the tracked basis."""
        g, n = self.surface.g, self.surface.n
        curve_values = []
        for i in range(2 * g):
            name = ("x" if i % 2 == 0 else "y") + str(i // 2 + 1)
            curve_values.append(self.curves[name].wn)
        arc_values = [self.arcs[f"a{j}"].wn for j in range(2, n + 1)]
        return FramedSurface(self.surface, self.signature, tuple(curve_values), tuple(arc_values))

    def wn(self, name: str) -> Union[int, Fraction]:
        if name in self.curves:
            return self.curves[name].wn
        if name in self.arcs:
            return self.arcs[name].wn
        raise UnknownCurve(f"nothing tracked under the name {name!r}")

    def all_wns(self) -> Dict[str, Union[int, Fraction]]:
        out: Dict[str, Union[int, Fraction]] = {k: v.wn for k, v in self.curves.items()}
        out.update({k: v.wn for k, v in self.arcs.items()})
        return out

    def track_curve(
        self, name: str, homology: HomologyClass, wn: int, separating: bool = False
    ) -> "EngineState":
        curves = dict(self.curves)
        curves[name] = TrackedCurve(name, homology, wn, separating)
        return replace(self, curves=curves)

    def track_arc(self, name: str, homology: HomologyClass, wn) -> "EngineState":
        arcs = dict(self.arcs)
        arcs[name] = TrackedArc(name, homology, as_half_integer(wn))
        return replace(self, arcs=arcs)

    def prong_number(self, label: int) -> int:
        if not (1 <= label <= self.surface.n):
            raise UnknownBoundary(f"no boundary component labeled {label}")
        k = abs(self.signature[label - 1])
        if k < 1:
            raise UnknownBoundary(
                f"boundary {label} has winding number 0, no prong structure"
            )
        return k


# -- letter actions ----------------------------------------------------


def apply_twist(state: EngineState, curve_name: str, power: int = 1) -> EngineState:
    """Pullback action of T_a^power on all tracked winding numbers."""
    if curve_name not in state.curves:
        raise UnknownCurve(f"no tracked curve named {curve_name!r}")
    a = state.curves[curve_name]
    new_curves = {
        name: replace(c, wn=c.wn - power * intersection(c.homology, a.homology) * a.wn)
        for name, c in state.curves.items()
    }
    new_arcs = {
        name: replace(t, wn=t.wn - power * intersection(t.homology, a.homology) * a.wn)
        for name, t in state.arcs.items()
    }
    action = mat_mul(transvection_matrix(a.homology, power), state.homology_action)
    return replace(state, curves=new_curves, arcs=new_arcs, homology_action=action)


def apply_fractional_twist(state: EngineState, label: int, power: int = 1) -> EngineState:
    """Pullback action of the fractional boundary twist T_{D_label}^{power/k}.

    Arcs incident to the boundary shift by -power per arriving endpoint and
    +power per departing endpoint; curves and the homology action are
    untouched.  When power is a multiple of the prong number k the result
    agrees with the inverse transvection twist about the parallel curve (see
    the module docstring for the sign normalization)."""
    state.prong_number(label)  # validates the label
    new_arcs = {}
    for name, t in state.arcs.items():
        s = t.homology.incidence(label)
        new_arcs[name] = replace(t, wn=t.wn - power * s)
    return replace(state, arcs=new_arcs)


def apply_push(state: EngineState, loop: HomologyClass) -> EngineState:
    """Pullback action of the point-push about `loop` on Sigma_{g,1}:
    wn(t) <- wn(t) - <t, loop> * (2 - 2g).  Trivial on homology."""
    if state.surface.n != 1:
        raise WrongBoundaryCount("the point-push formula is stated for n = 1")
    if loop.kind != ABSOLUTE:
        raise KindMismatch("push loops carry absolute homology classes")
    shift = 2 - 2 * state.surface.g
    new_curves = {
        name: replace(c, wn=c.wn - intersection(c.homology, loop) * shift)
        for name, c in state.curves.items()
    }
    new_arcs = {
        name: replace(t, wn=t.wn - intersection(t.homology, loop) * shift)
        for name, t in state.arcs.items()
    }
    return replace(state, curves=new_curves, arcs=new_arcs)


def curve_arc_sum(state: EngineState, a_name: str, b_name: str, new_name: str) -> EngineState:
    """Track the curve-arc sum of a (curve or arc) with the curve b:
    homology [a] + [b], winding number wn(a) + wn(b) + 1, kind inherited
    from a.  The caller asserts the geometric sum configuration exists."""
    if b_name in state.arcs:
        raise KindMismatch("the second summand must be a curve")
    if b_name not in state.curves:
        raise UnknownCurve(f"no tracked curve named {b_name!r}")
    b = state.curves[b_name]
    if a_name in state.curves:
        a = state.curves[a_name]
        return state.track_curve(new_name, a.homology + b.homology, a.wn + b.wn + 1)
    if a_name in state.arcs:
        a = state.arcs[a_name]
        return state.track_arc(new_name, a.homology + b.homology, a.wn + b.wn + 1)
    raise UnknownCurve(f"nothing tracked under the name {a_name!r}")


def apply_letter(state: EngineState, letter: Letter) -> EngineState:
    if isinstance(letter, Twist):
        return apply_twist(state, letter.curve, letter.power)
    if isinstance(letter, FractionalTwist):
        return apply_fractional_twist(state, letter.label, letter.power)
    if isinstance(letter, Push):
        return apply_push(state, letter.loop)
    raise TypeError(f"unknown letter {letter!r}")


def apply_word(state: EngineState, word: Sequence[Letter]) -> EngineState:
    for letter in word:
        state = apply_letter(state, letter)
    return state


def prong_rotation_image(
    state: EngineState, word: Sequence[Letter]
) -> Tuple[int, ...]:
    """Image of the word in the prong rotation group PR = prod Z/k_i: the
    fractional-twist exponent accumulated at each boundary, mod k_i."""
    totals = [0] * state.surface.n
    for letter in word:
        if isinstance(letter, FractionalTwist):
            totals[letter.label - 1] += letter.power
    return tuple(
        totals[i] % state.prong_number(i + 1) for i in range(state.surface.n)
    )


def stabilizes(state: EngineState, word: Sequence[Letter]) -> bool:
    """True iff the word fixes every tracked winding number.  This is a
    necessary condition for lying in the framed mapping class group, and is
    exact when the tracked set contains a distinguished geometric basis."""
    after = apply_word(state, word)
    return state.all_wns() == after.all_wns()


@dataclass(frozen=True)
class RelationReport:
    homology_match: bool
    wn_match: bool
    note: str = (
        "necessary conditions only: equality of the homology action and of the "
        "winding-number action does not certify equality in the mapping class group"
    )

    @property
    def both(self) -> bool:
        return self.homology_match and self.wn_match


def verify_relation(
    state: EngineState, left: Sequence[Letter], right: Sequence[Letter]
) -> RelationReport:
    ls = apply_word(state, left)
    rs = apply_word(state, right)
    return RelationReport(
        homology_match=(ls.homology_action == rs.homology_action),
        wn_match=(ls.all_wns() == rs.all_wns()),
    )


# -- orbit search ------------------------------------------------------


@dataclass(frozen=True)
class OrbitReport:
    values: frozenset
    gcd: int
    stabilized: bool
    depth: int
    gcd_by_depth: Tuple[int, ...]


def _forward_twist_move(
    cls: HomologyClass, wn, gen: TrackedCurve, power: int
) -> Tuple[HomologyClass, Union[int, Fraction]]:
    pairing = intersection(cls, gen.homology)
    return (
        cls + gen.homology.scaled(power * pairing),
        wn + power * pairing * gen.wn,
    )


def orbit_wn_values(
    state: EngineState,
    curve_name: str,
    generators: Iterable[str],
    depth: int = 12,
    include_sums: bool = True,
    stabilization_window: int = 2,
) -> OrbitReport:
    """Breadth-first search over images of a tracked curve under words in the
    generating twists (forward action), optionally extended by curve-arc sums
    with the generators; collects the winding numbers attained.

    Sum moves assert that the geometric sum configuration exists; for the
    genus-1 invariant they must be disabled (see `arf.arf1`).  The report says
    whether the gcd of collected values was constant over the final
    `stabilization_window + 1` depths.
    """
    if curve_name not in state.curves:
        raise UnknownCurve(f"no tracked curve named {curve_name!r}")
    gens = []
    for name in generators:
        if name not in state.curves:
            raise UnknownCurve(f"generator {name!r} is not a tracked curve")
        gens.append(state.curves[name])

    start = state.curves[curve_name]
    frontier = {(start.homology, start.wn)}
    seen = set(frontier)
    values: Set[int] = {start.wn}
    gcd_by_depth = [_ideal_gcd(values)]

    for _ in range(depth):
        new_frontier = set()
        for cls, wn in frontier:
            for gen in gens:
                for power in (1, -1):
                    moved = _forward_twist_move(cls, wn, gen, power)
                    if moved not in seen:
                        seen.add(moved)
                        new_frontier.add(moved)
                if include_sums:
                    for sign in (1, -1):
                        summed = (
                            cls + gen.homology.scaled(sign),
                            wn + sign * gen.wn + 1,
                        )
                        if summed not in seen:
                            seen.add(summed)
                            new_frontier.add(summed)
        frontier = new_frontier
        values.update(wn for _, wn in frontier)
        gcd_by_depth.append(_ideal_gcd(values))
        if not frontier:
            break

    window = gcd_by_depth[-(stabilization_window + 1) :]
    stabilized = len(set(window)) == 1 and len(gcd_by_depth) > stabilization_window
    return OrbitReport(
        values=frozenset(values),
        gcd=gcd_by_depth[-1],
        stabilized=stabilized,
        depth=len(gcd_by_depth) - 1,
        gcd_by_depth=tuple(gcd_by_depth),
    )


def _ideal_gcd(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g
