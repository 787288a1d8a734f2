"""Curve systems with ribbon data: intersection graphs, regular-neighborhood
boundary tracing, generating-configuration predicates and builders.

A configuration is a set of named curves with pairwise geometric intersection
at most one and no triple points.  The cyclic position of each crossing along
each of its two curves defines a ribbon structure on the underlying 4-valent
graph (vertices = crossings, edges = curve arcs), from which the boundary
circles of a regular neighborhood are traced combinatorially.

Rotation convention: at a crossing of curves u (the `a` slot) and v (the `b`
slot), the counterclockwise order of the four arc ends is

    u-out, v-out, u-in, v-in      for sign +1,
    u-out, v-in,  u-in, v-out     for sign -1.

Flipping the sign is the same as reversing the orientation of v at that
crossing; all quantities tested against the literature (face side counts,
tree shapes, Arf labels) are independent of a global reorientation, so the
shipped builders fix sign conventions freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .arf import arf_of_quadratic_form, maximal_chain_arf
from .core import FramedSurface, PartitionKappa, SurfaceType, new_framed_surface
from .errors import BadPartition, FramedSurfError, RibbonIncomplete
from fractions import Fraction
import json


@dataclass(frozen=True)
class Crossing:
    a: str
    b: str
    sign: int
    pos_a: int
    pos_b: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")
        if self.a == self.b:
            raise ValueError("a curve cannot cross itself in a configuration")

    def position_on(self, curve: str) -> int:
        if curve == self.a:
            return self.pos_a
        if curve == self.b:
            return self.pos_b
        raise KeyError(curve)


@dataclass(frozen=True)
class Configuration:
    """Named curves with declared winding numbers and ribbon crossing data."""

    curves: Tuple[Tuple[str, int], ...]  # (name, wn) in a fixed order
    crossings: Tuple[Crossing, ...]
    ambient: Optional[SurfaceType] = None

    def __post_init__(self):
        names = [name for name, _ in self.curves]
        if len(set(names)) != len(names):
            raise ValueError("curve names must be distinct")
        name_set = set(names)
        seen_pairs = set()
        for c in self.crossings:
            if c.a not in name_set or c.b not in name_set:
                raise ValueError(f"crossing references unknown curve: {c}")
            pair = frozenset((c.a, c.b))
            if pair in seen_pairs:
                raise ValueError(
                    f"curves {c.a}, {c.b} cross more than once; configurations "
                    "require pairwise intersection at most 1"
                )
            seen_pairs.add(pair)
        # ribbon completeness: positions along each curve are 0..d-1, distinct
        for name in names:
            positions = sorted(
                c.position_on(name) for c in self.crossings if name in (c.a, c.b)
            )
            if positions != list(range(len(positions))):
                raise RibbonIncomplete(
                    f"cyclic positions along {name!r} must be 0..{len(positions) - 1}, "
                    f"got {positions}"
                )

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.curves)

    def wn(self, name: str) -> int:
        for n, w in self.curves:
            if n == name:
                return w
        raise KeyError(name)

    def crossings_on(self, name: str) -> List[Crossing]:
        found = [c for c in self.crossings if name in (c.a, c.b)]
        found.sort(key=lambda c: c.position_on(name))
        return found

    def to_json_dict(self) -> dict:
        data = {
            "curves": [{"name": n, "wn": w} for n, w in self.curves],
            "intersections": [
                {"a": c.a, "b": c.b, "sign": c.sign, "pos_a": c.pos_a, "pos_b": c.pos_b}
                for c in self.crossings
            ],
        }
        if self.ambient is not None:
            data["ambient"] = {"g": self.ambient.g, "n": self.ambient.n}
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Configuration":
        curves = tuple((d["name"], int(d.get("wn", 0))) for d in data["curves"])
        crossings = tuple(
            Crossing(
                d["a"], d["b"], int(d.get("sign", 1)), int(d["pos_a"]), int(d["pos_b"])
            )
            for d in data.get("intersections", [])
        )
        ambient = None
        if "ambient" in data:
            ambient = SurfaceType(int(data["ambient"]["g"]), int(data["ambient"]["n"]))
        return cls(curves, crossings, ambient)

    @classmethod
    def from_json(cls, text: str) -> "Configuration":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class IntersectionGraph:
    vertices: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[str]]

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: str) -> List[str]:
        out = []
        for e in self.edges:
            if v in e:
                (other,) = e - {v}
                out.append(other)
        return sorted(out)

    @property
    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    @property
    def is_tree(self) -> bool:
        return self.is_connected and len(self.edges) == len(self.vertices) - 1

    def contains_e6(self) -> bool:
        """Whether the graph contains the E6 Dynkin diagram as a subgraph:
        a vertex with three disjoint branches of depths at least 2, 2, 1.
        Exact for trees (the only case the predicates need)."""
        for v in self.vertices:
            depths = sorted(
                (self._branch_depth(v, w) for w in self.neighbors(v)), reverse=True
            )
            if len(depths) >= 3 and depths[0] >= 2 and depths[1] >= 2 and depths[2] >= 1:
                return True
        return False

    def _branch_depth(self, root: str, start: str) -> int:
        """Longest path (in edges) from `root` going through `start`, not
        returning through root."""
        best = 1
        stack = [(start, root, 1)]
        while stack:
            v, parent, depth = stack.pop()
            for w in self.neighbors(v):
                if w != parent:
                    best = max(best, depth + 1)
                    stack.append((w, v, depth + 1))
        return best


def intersection_graph(config: Configuration) -> IntersectionGraph:
    edges = frozenset(frozenset((c.a, c.b)) for c in config.crossings)
    return IntersectionGraph(config.names, edges)


# -- boundary tracing ---------------------------------------------------

# A dart is one end of a curve arc, addressed by (crossing index, slot) with
# slot in {"a_out", "b_out", "a_in", "b_in"}.

Dart = Tuple[int, str]


def _rotation_order(sign: int) -> Tuple[str, str, str, str]:
    if sign == 1:
        return ("a_out", "b_out", "a_in", "b_in")
    return ("a_out", "b_in", "a_in", "b_out")


def _slot(curve_is_a: bool, direction: str) -> str:
    return ("a_" if curve_is_a else "b_") + direction


def trace_faces(config: Configuration) -> List[List[Dart]]:
    """Boundary circles of the regular neighborhood, as orbits of the
    combinatorial-map face permutation (sigma o alpha).  Curves with no
    crossings are excluded (their annuli are reported separately)."""
    sigma: Dict[Dart, Dart] = {}
    for idx, c in enumerate(config.crossings):
        order = _rotation_order(c.sign)
        for k, slot in enumerate(order):
            sigma[(idx, slot)] = (idx, order[(k + 1) % 4])

    alpha: Dict[Dart, Dart] = {}
    for name in config.names:
        on = config.crossings_on(name)
        if not on:
            continue
        indexed = [(config.crossings.index(c), c) for c in on]
        d = len(indexed)
        for i, (idx, cr) in enumerate(indexed):
            nxt_idx, nxt_cr = indexed[(i + 1) % d]
            tail = (idx, _slot(cr.a == name, "out"))
            head = (nxt_idx, _slot(nxt_cr.a == name, "in"))
            alpha[tail] = head
            alpha[head] = tail

    faces: List[List[Dart]] = []
    visited: Set[Dart] = set()
    for start in sorted(alpha.keys()):
        if start in visited:
            continue
        face = []
        dart = start
        while True:
            face.append(dart)
            visited.add(dart)
            dart = sigma[alpha[dart]]
            if dart == start:
                break
        faces.append(face)
    return faces


@dataclass(frozen=True)
class FaceInfo:
    sides: int
    wn: Optional[int]  # -(sides)/4 when sides is a multiple of 4
    note: str = ""


@dataclass(frozen=True)
class RegionsReport:
    faces: Tuple[FaceInfo, ...]
    isolated_annuli: Tuple[str, ...]
    chi_neighborhood: int
    boundary_circles: int
    disk_face_check: Optional[bool]  # chi(N) + #faces == chi(ambient), if ambient set

    @property
    def side_counts(self) -> Tuple[int, ...]:
        return tuple(sorted(f.sides for f in self.faces))


def complementary_regions(config: Configuration) -> RegionsReport:
    """Trace the complementary faces of the configuration.

    chi(N) of the regular neighborhood equals minus the number of crossings
    (vertices minus edges of the 4-valent graph).  When the configuration
    fills its ambient surface, capping every disk face recovers the ambient
    Euler characteristic: chi(ambient) = chi(N) + #disk faces.
    """
    faces = trace_faces(config)
    infos = []
    for face in faces:
        sides = len(face)
        if sides % 4 == 0:
            infos.append(FaceInfo(sides, -(sides // 4)))
        else:
            infos.append(
                FaceInfo(sides, None, note=f"side count {sides} not a multiple of 4")
            )
    isolated = tuple(
        name for name in config.names if not config.crossings_on(name)
    )
    chi = -len(config.crossings)
    boundary_circles = len(faces) + 2 * len(isolated)
    disk_check = None
    if config.ambient is not None:
        disk_check = chi + len(faces) == config.ambient.euler
    return RegionsReport(
        faces=tuple(infos),
        isolated_annuli=isolated,
        chi_neighborhood=chi,
        boundary_circles=boundary_circles,
        disk_face_check=disk_check,
    )


@dataclass(frozen=True)
class Diagnosis:
    ok: bool
    reasons: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_E_arboreal_spanning(config: Configuration) -> Diagnosis:
    """Whether the configuration is an E-arboreal spanning configuration of
    its ambient surface: the intersection graph is a tree containing E6, the
    curve count is 2g + n - 1, and the regular neighborhood is the whole
    surface (n complementary boundary-parallel faces, matching chi)."""
    if config.ambient is None:
        raise FramedSurfError("spanning predicates need the ambient surface type")
    g, n = config.ambient.g, config.ambient.n
    reasons = []
    graph = intersection_graph(config)
    if not graph.is_tree:
        reasons.append("intersection graph is not a tree")
    if not graph.contains_e6():
        reasons.append("intersection graph contains no E6 subgraph")
    expected = 2 * g + n - 1
    if len(config.names) != expected:
        reasons.append(f"expected {expected} curves for a spanning tree, got {len(config.names)}")
    if not reasons:
        report = complementary_regions(config)
        if report.isolated_annuli:
            reasons.append("configuration has crossing-free curves")
        if len(report.faces) != n:
            reasons.append(
                f"regular neighborhood has {len(report.faces)} boundary circles, ambient has {n}"
            )
        if report.chi_neighborhood != config.ambient.euler:
            reasons.append(
                f"chi(N) = {report.chi_neighborhood} differs from chi(ambient) = {config.ambient.euler}"
            )
    return Diagnosis(not reasons, tuple(reasons))


@dataclass(frozen=True)
class AssemblageReport:
    ok: bool
    h: Optional[int]
    core_size: Optional[int]
    reasons: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _sub_configuration(config: Configuration, names: Sequence[str]) -> Configuration:
    keep = set(names)
    curves = tuple((n, w) for n, w in config.curves if n in keep)
    crossings = []
    per_curve: Dict[str, List[Crossing]] = {n: [] for n in keep}
    for c in config.crossings:
        if c.a in keep and c.b in keep:
            crossings.append(c)
            per_curve[c.a].append(c)
            per_curve[c.b].append(c)
    # renumber positions to the induced cyclic order
    renumbered = {}
    for n in keep:
        ordered = sorted(per_curve[n], key=lambda c: c.position_on(n))
        for i, c in enumerate(ordered):
            renumbered.setdefault(id(c), {})[n] = i
    new_crossings = []
    for c in crossings:
        new_crossings.append(
            Crossing(c.a, c.b, c.sign, renumbered[id(c)][c.a], renumbered[id(c)][c.b])
        )
    return Configuration(curves, tuple(new_crossings))


def is_h_assemblage_type_E(
    config: Configuration, order: Sequence[str], core_size: Optional[int] = None
) -> AssemblageReport:
    """Whether `order` exhibits the configuration as an h-assemblage of type
    E: an E-arboreal spanning core followed by curves each meeting the
    previously built neighborhood in a single arc.

    The single-arc condition is operationalized combinatorially: the
    crossings of each later curve with earlier curves must form one
    cyclically consecutive block in its ribbon order (no crossing with a
    later curve interleaves the block).  Each stage then attaches one band,
    dropping the Euler characteristic by exactly one; crossings beyond the
    first of a stage fill complementary disks.
    """
    if config.ambient is None:
        raise FramedSurfError("assemblage predicates need the ambient surface type")
    if sorted(order) != sorted(config.names):
        raise FramedSurfError("order must list every curve exactly once")
    reasons: List[str] = []

    if core_size is None:
        core_size = 0
        for k in range(len(order), 0, -1):
            sub = _sub_configuration(config, order[:k])
            graph = intersection_graph(sub)
            if graph.is_tree and graph.contains_e6():
                core_size = k
                break
        if core_size == 0:
            return AssemblageReport(False, None, None, ("no E-arboreal prefix found",))
    core = _sub_configuration(config, order[:core_size])
    core_graph = intersection_graph(core)
    if not (core_graph.is_tree and core_graph.contains_e6()):
        reasons.append("declared core is not an E-arboreal tree")
        return AssemblageReport(False, None, core_size, tuple(reasons))
    core_regions = complementary_regions(core)
    chi_core = core_regions.chi_neighborhood
    n_core = len(core_regions.faces)
    h = (2 - chi_core - n_core) // 2

    earlier = list(order[:core_size])
    filled = 0
    for j in range(core_size, len(order)):
        name = order[j]
        on = config.crossings_on(name)
        earlier_flags = [
            (c.a if c.b == name else c.b) in earlier for c in on
        ]
        count_earlier = sum(earlier_flags)
        if count_earlier == 0:
            reasons.append(f"curve {name!r} is disjoint from the earlier neighborhood")
            break
        if not _cyclically_consecutive(earlier_flags):
            reasons.append(
                f"crossings of {name!r} with earlier curves are not consecutive in its ribbon order"
            )
            break
        filled += count_earlier - 1
        earlier.append(name)
    if reasons:
        return AssemblageReport(False, h, core_size, tuple(reasons))

    chi_staged = chi_core - (len(order) - core_size)
    if chi_staged != config.ambient.euler:
        reasons.append(
            f"staged chi = {chi_staged} does not match ambient chi = {config.ambient.euler}"
        )
    full_regions = complementary_regions(config)
    boundary_count = len(full_regions.faces) - filled
    if boundary_count != config.ambient.n:
        reasons.append(
            f"staged boundary count = {boundary_count} does not match ambient n = {config.ambient.n}"
        )
    return AssemblageReport(not reasons, h, core_size, tuple(reasons))


def _cyclically_consecutive(flags: Sequence[bool]) -> bool:
    """Whether the True entries form one consecutive block cyclically."""
    n = len(flags)
    trues = sum(flags)
    if trues in (0, n):
        return True
    # count True->False transitions cyclically; one block means exactly one
    transitions = sum(
        1 for i in range(n) if flags[i] and not flags[(i + 1) % n]
    )
    return transitions == 1


# -- sidedness ----------------------------------------------------------

ONE_SIDED = "one-sided"
TWO_SIDED = "two-sided"
INCONSISTENT = "inconsistent"


def classify_sidedness(phi_p: int, phi_q: int, observed: Sequence[int]) -> str:
    """Classify a pair of disjoint equal-winding arcs between boundaries with
    values phi_p, phi_q from the two observed neighborhood boundary winding
    numbers: one-sided pairs show {1, phi_p + phi_q + 1}, two-sided pairs
    show {phi_p + 1, phi_q + 1}.  One-sided is checked first (the two target
    sets can only coincide if a boundary value is 0)."""
    got = sorted(observed)
    if len(got) != 2:
        raise FramedSurfError("expected exactly two boundary winding numbers")
    if got == sorted((1, phi_p + phi_q + 1)):
        return ONE_SIDED
    if got == sorted((phi_p + 1, phi_q + 1)):
        return TWO_SIDED
    return INCONSISTENT


# -- the generating-configuration builder --------------------------------


class _Builder:
    """Mutable scratch structure: ribbon orders as explicit lists."""

    def __init__(self):
        self.names: List[str] = []
        self.ribbon: Dict[str, List[int]] = {}
        self.cross: List[Tuple[str, str, int]] = []  # (a, b, sign), id = index

    def add_curve(self, name: str):
        self.names.append(name)
        self.ribbon[name] = []

    def add_crossing(self, a: str, b: str, sign: int, gap_a: int, gap_b: int) -> int:
        idx = len(self.cross)
        self.cross.append((a, b, sign))
        self.ribbon[a].insert(gap_a, idx)
        self.ribbon[b].insert(gap_b, idx)
        return idx

    def remove_last_crossing(self):
        idx = len(self.cross) - 1
        a, b, _ = self.cross.pop()
        self.ribbon[a].remove(idx)
        self.ribbon[b].remove(idx)

    def remove_curve(self, name: str):
        assert not self.ribbon[name]
        self.names.remove(name)
        del self.ribbon[name]

    def to_configuration(self, ambient: Optional[SurfaceType] = None) -> Configuration:
        curves = tuple((n, 0) for n in self.names)
        pos: Dict[Tuple[int, str], int] = {}
        for name, order in self.ribbon.items():
            for i, idx in enumerate(order):
                pos[(idx, name)] = i
        crossings = tuple(
            Crossing(a, b, sign, pos[(i, a)], pos[(i, b)])
            for i, (a, b, sign) in enumerate(self.cross)
        )
        return Configuration(curves, crossings, ambient)

    def face_sizes(self) -> List[int]:
        return sorted(f.sides for f in complementary_regions(self.to_configuration()).faces)


def _config_arf(config: Configuration) -> int:
    """Arf invariant of the mod-2 quadratic form q(c) = wn(c) + 1 carried by
    the configuration, with bilinear form the intersection adjacency."""
    names = config.names
    index = {n: i for i, n in enumerate(names)}
    size = len(names)
    gram = [[0] * size for _ in range(size)]
    for c in config.crossings:
        i, j = index[c.a], index[c.b]
        gram[i][j] = gram[j][i] = 1
    q = [(config.wn(n) + 1) % 2 for n in names]
    return arf_of_quadratic_form(gram, q)


def _base_tree_candidates(g: int):
    """Candidate (branch length, branch position, gap) choices for the
    2g-vertex base tree: a spine path plus one branch chain.  Only trees
    leaving a single complementary face and containing E6 are used."""
    for branch_len in range(1, g):
        m = 2 * g - branch_len  # spine length
        for j in range(1, m - 1):
            for gap in (0, 1):
                yield (branch_len, j, gap)


def _build_base(g: int, candidate) -> Optional[_Builder]:
    branch_len, j, gap = candidate
    m = 2 * g - branch_len
    if m < 3:
        return None
    b = _Builder()
    spine = [f"a{i}" for i in range(m)]
    for name in spine:
        b.add_curve(name)
    for i in range(m - 1):
        b.add_crossing(spine[i], spine[i + 1], 1, len(b.ribbon[spine[i]]), 0)
    prev = spine[j]
    for t in range(branch_len):
        name = f"a{m + t}"
        b.add_curve(name)
        b.add_crossing(prev, name, 1, min(gap, len(b.ribbon[prev])), 0)
        prev = name
    if b.face_sizes() != [4 * (2 * g - 1)]:
        return None
    if not intersection_graph(b.to_configuration()).contains_e6():
        return None
    return b


def _viable_splits(b: _Builder, target: int, reservoir: int) -> List[Tuple[str, int]]:
    """All (host, gap) leaf attachments that split a reservoir-sized face
    into exactly {target, reservoir + 4 - target}.

    An attachment on a host arc whose two side darts lie in one face of size
    S at dart distance d produces faces of sizes d + 2 and S - d + 2; arcs
    whose sides lie in two different faces merge them instead."""
    config = b.to_configuration()
    faces = trace_faces(config)
    position: Dict[Dart, Tuple[int, int]] = {}
    for f_idx, face in enumerate(faces):
        for k, dart in enumerate(face):
            position[dart] = (f_idx, k)
    out: List[Tuple[str, int]] = []
    for host in b.names:
        order = b.ribbon[host]
        d_host = len(order)
        if d_host == 0:
            continue
        for gap in range(d_host):
            prev_idx = order[(gap - 1) % d_host]
            next_idx = order[gap % d_host]
            tail = (prev_idx, _slot(b.cross[prev_idx][0] == host, "out"))
            head = (next_idx, _slot(b.cross[next_idx][0] == host, "in"))
            f_tail, p_tail = position[tail]
            f_head, p_head = position[head]
            if f_tail != f_head:
                continue
            size = len(faces[f_tail])
            if size != reservoir:
                continue
            dist = (p_head - p_tail) % size
            if target in (dist + 2, size - dist + 2):
                out.append((host, gap))
    return out


def _try_splits(
    b: _Builder,
    targets: List[int],
    leaf_names: List[str],
    arf_target: Optional[int],
    ambient: SurfaceType,
    reservoir: int,
) -> Optional[Configuration]:
    """Depth-first search over leaf attachments realizing the target face
    sizes, optionally also matching an Arf label.  Deterministic order.

    The Arf label depends only on the tree shape (which hosts the leaves
    attach to), so once a full assignment fails the Arf check, sibling
    candidates on the same host at the last level are skipped."""
    if not targets:
        config = b.to_configuration(ambient)
        if arf_target is not None and _config_arf(config) != arf_target:
            return None
        return config
    target = targets[0]
    leaf = leaf_names[0]
    last_level = len(targets) == 1
    candidates = _viable_splits(b, target, reservoir)
    b.add_curve(leaf)
    failed_hosts: Set[str] = set()
    for host, gap in candidates:
        if host in failed_hosts:
            continue
        b.add_crossing(host, leaf, 1, gap, 0)
        result = _try_splits(
            b, targets[1:], leaf_names[1:], arf_target, ambient, reservoir + 4 - target
        )
        if result is not None:
            return result
        if last_level and arf_target is not None:
            failed_hosts.add(host)
        b.remove_last_crossing()
    b.remove_curve(leaf)
    return None


def build_genset(
    kappa: PartitionKappa, config_type: int = 1
) -> Tuple[Configuration, FramedSurface, Diagnosis]:
    """Construct a generating configuration for the stratum with zero orders
    kappa: an E-arboreal spanning tree of 2g + n - 1 admissible curves on
    Sigma_{g,n} whose complementary faces have side counts 4(kappa_l + 1)
    (one boundary component per face, signature -1 - kappa).

    When gcd(kappa) is even the two configuration types realize the two Arf
    labels (type 1 carries Arf = 1 for g = 0, 3 mod 4 and 0 otherwise, type 2
    the complement); when gcd is odd the types differ only in shape.  The
    construction is search-based and verified before returning; genus below 5
    is allowed but flagged in the diagnosis (the generating-set theorems are
    stated for g >= 5).
    """
    if config_type not in (1, 2):
        raise ValueError("configuration type must be 1 or 2")
    g, n = kappa.g, kappa.n
    if sum(kappa.parts) != 2 * g - 2:
        raise BadPartition("partition does not match its genus")
    if g < 3:
        raise BadPartition("the builder needs g >= 3 to fit an E6 subgraph")

    arf_target: Optional[int] = None
    if kappa.gcd % 2 == 0:
        type1 = 1 if g % 4 in (0, 3) else 0
        arf_target = type1 if config_type == 1 else 1 - type1

    # split off every face except the largest, which stays as the reservoir
    all_sizes = sorted(4 * (p + 1) for p in kappa.parts)
    split_targets = sorted(all_sizes[:-1], reverse=True)

    ambient = SurfaceType(g, n)
    leaf_names = [f"b{i + 1}" for i in range(n - 1)]

    base_candidates = list(_base_tree_candidates(g))
    if config_type == 2:
        base_candidates.reverse()  # type 2 differs in shape even when no Arf label
    for candidate in base_candidates:
        base = _build_base(g, candidate)
        if base is None:
            continue
        config = _try_splits(
            base, split_targets, leaf_names, arf_target, ambient, 4 * (2 * g - 1)
        )
        if config is None:
            continue
        framing = _genset_framing(kappa, config)
        diagnosis = is_E_arboreal_spanning(config)
        notes = list(diagnosis.reasons)
        if g < 5:
            notes.append("warning: g < 5, below the generating-set theorem range")
        return config, framing, Diagnosis(diagnosis.ok, tuple(notes))
    raise FramedSurfError(
        f"no generating configuration found for kappa = {kappa} type {config_type}"
    )


def _genset_framing(kappa: PartitionKappa, config: Configuration) -> FramedSurface:
    """The framed surface induced by the configuration: signature -1 - kappa,
    with canonical basis values realizing the configuration's Arf label when
    gcd(kappa) is even (for odd gcd there is a single orbit and the zero
    representative is returned)."""
    g, n = kappa.g, kappa.n
    label = _config_arf(config) if kappa.gcd % 2 == 0 else 0
    curve_values = [-1] * (2 * g)
    if label == 1:
        curve_values[0] = 0
        curve_values[1] = 0
    arcs = [Fraction(-1, 2)] * (n - 1)
    return new_framed_surface(
        SurfaceType(g, n), kappa.signature(), tuple(curve_values) + tuple(arcs)
    )


def config_arf(config: Configuration) -> int:
    """Public alias: Arf label of an all-admissible configuration."""
    return _config_arf(config)
