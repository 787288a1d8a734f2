"""Connected components of strata of abelian differentials and their
labeled / prong-marked covers, plus prong rotation group arithmetic.

All group computations here are brute-force over the finite abelian group
PR = prod Z/k_i with k_i = kappa_i + 1; sizes stay at desk scale for the
partitions this package handles (|PR| <= 2^14 in the test sweeps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .core import PartitionKappa
from .errors import OutOfClassifiedRange, Unsupported

HYPERELLIPTIC = "hyperelliptic"
EVEN = "even"
ODD = "odd"
NONHYP_UNIQUE = "nonhyp-unique"


@dataclass(frozen=True)
class ComponentDescriptor:
    kind: str
    arf: Optional[int] = None
    labeled_multiplicity: int = 1
    prong_multiplicity: Optional[int] = None

    def __post_init__(self):
        if self.kind in (EVEN, ODD):
            if self.arf is None:
                raise ValueError("spin components carry an Arf label")
        elif self.arf is not None:
            raise ValueError(f"component kind {self.kind} carries no Arf label")


def components(kappa: PartitionKappa) -> Tuple[ComponentDescriptor, ...]:
    """Connected components of the stratum with zero orders kappa, g >= 4:
    a hyperelliptic component exactly for (2g-2) and (g-1, g-1), and one or
    two further components according to the parity of gcd(kappa), labeled by
    the Arf invariant of the induced 2-spin structure when gcd is even."""
    g = kappa.g
    if g <= 3:
        raise OutOfClassifiedRange(
            f"component classification implemented for g >= 4, got g = {g}"
        )
    out: List[ComponentDescriptor] = []
    parts = tuple(sorted(kappa.parts, reverse=True))
    if parts == (2 * g - 2,) or parts == (g - 1, g - 1):
        out.append(ComponentDescriptor(HYPERELLIPTIC))
    if kappa.gcd % 2 == 0:
        out.append(ComponentDescriptor(EVEN, arf=0))
        out.append(ComponentDescriptor(ODD, arf=1))
    else:
        out.append(ComponentDescriptor(NONHYP_UNIQUE))
    return tuple(out)


# -- prong rotation group ----------------------------------------------


@dataclass(frozen=True)
class ProngGroup:
    """PR = prod_i Z/k_i with k_i = kappa_i + 1."""

    orders: Tuple[int, ...]

    def __post_init__(self):
        if any(k < 1 for k in self.orders):
            raise ValueError("prong orders must be positive")

    @classmethod
    def from_kappa(cls, kappa: PartitionKappa) -> "ProngGroup":
        return cls(kappa.prong_orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def elements(self) -> Iterable[Tuple[int, ...]]:
        return product(*(range(k) for k in self.orders))

    def reduce(self, element: Sequence[int]) -> Tuple[int, ...]:
        return tuple(c % k for c, k in zip(element, self.orders))

    def add(self, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
        return tuple((x + y) % k for x, y, k in zip(a, b, self.orders))

    def subgroup_generated(self, generators: Iterable[Sequence[int]]) -> Set[Tuple[int, ...]]:
        gens = [self.reduce(g) for g in generators]
        zero = (0,) * len(self.orders)
        seen = {zero}
        frontier = [zero]
        while frontier:
            new = []
            for el in frontier:
                for g in gens:
                    nxt = self.add(el, g)
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
            frontier = new
        return seen


@dataclass(frozen=True)
class SubgroupDescriptor:
    order: int
    generators: Tuple[Tuple[int, ...], ...]
    group: ProngGroup

    def contains(self, element: Sequence[int]) -> bool:
        return pr_prime_contains(self.group, element)


def pr_prime_contains(pg: ProngGroup, element: Sequence[int]) -> bool:
    """Membership in PR': the sum of coordinates over even-order factors is
    even."""
    el = pg.reduce(element)
    s = sum(c for c, k in zip(el, pg.orders) if k % 2 == 0)
    return s % 2 == 0


def pr_prime(pg: ProngGroup) -> SubgroupDescriptor:
    """The even-parity subgroup PR' with its standard generating families:
    (G1) e_i for k_i odd, (G2) 2 e_i for k_i even, (G3) m (e_i + e_j) for
    k_i, k_j even and m odd."""
    n = len(pg.orders)
    gens: List[Tuple[int, ...]] = []
    even_indices = [i for i, k in enumerate(pg.orders) if k % 2 == 0]
    for i, k in enumerate(pg.orders):
        e = [0] * n
        if k % 2 == 1:
            e[i] = 1
            gens.append(tuple(e))  # (G1)
        else:
            e[i] = 2
            gens.append(tuple(e))  # (G2)
    for a in range(len(even_indices)):
        for b in range(a + 1, len(even_indices)):
            e = [0] * n
            e[even_indices[a]] = 1
            e[even_indices[b]] = 1
            gens.append(tuple(e))  # (G3) with m = 1
    order = pg.order if not even_indices else pg.order // 2
    return SubgroupDescriptor(order=order, generators=tuple(gens), group=pg)


def pr_prime_index(pg: ProngGroup) -> int:
    """[PR : PR'], which is 1 when every k_i is odd and 2 otherwise."""
    return pg.order // pr_prime(pg).order


def boissy_components(kappa: PartitionKappa, base: ComponentDescriptor) -> int:
    """Number of components of the prong-marked cover over one non-
    hyperelliptic labeled component: 1 when gcd(kappa) is even, 2 when odd,
    the two being distinguished by the generalized Arf invariant."""
    if base.kind == HYPERELLIPTIC:
        raise Unsupported("prong-cover counts are stated for non-hyperelliptic bases")
    if kappa.g < 3:
        raise OutOfClassifiedRange("prong-marked classification needs g >= 3")
    return 1 if kappa.gcd % 2 == 0 else 2


@dataclass(frozen=True)
class QuotientDescriptor:
    order: int
    trivial: bool
    pr_prime_order: int
    diagonal_order: int


def quotient_pr_prime(pg: ProngGroup) -> QuotientDescriptor:
    """PR' / <(1, ..., 1)> by brute-force coset enumeration."""
    prime = pr_prime(pg)
    diag = (1,) * len(pg.orders)
    assert pr_prime_contains(pg, diag), "the diagonal always has even parity sum"
    diag_subgroup = pg.subgroup_generated([diag])
    prime_elements = pg.subgroup_generated(prime.generators)
    assert len(prime_elements) == prime.order
    seen: Set[Tuple[int, ...]] = set()
    cosets = 0
    for el in prime_elements:
        if el in seen:
            continue
        cosets += 1
        for d in diag_subgroup:
            seen.add(pg.add(el, d))
    return QuotientDescriptor(
        order=cosets,
        trivial=(cosets == 1),
        pr_prime_order=prime.order,
        diagonal_order=len(diag_subgroup),
    )


def framed_to_absolute_surjective(kappa: PartitionKappa) -> bool:
    """Arithmetic criterion for the relatively framed mapping class group to
    surject onto the absolute one: at most two odd parts, and the set
    {eta_i + 1} union {(upsilon_j + 1)/2} (etas even, upsilons odd) pairwise
    coprime."""
    evens = [p for p in kappa.parts if p % 2 == 0]
    odds = [p for p in kappa.parts if p % 2 == 1]
    if len(odds) > 2:
        return False
    entries = [p + 1 for p in evens] + [(p + 1) // 2 for p in odds]
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            if math.gcd(entries[i], entries[j]) != 1:
                return False
    return True


def shear_generation_obstruction(kappa: PartitionKappa) -> bool:
    """True when cylinder shears cannot generate the labeled monodromy image
    (the negation of the surjectivity criterion, for non-hyperelliptic
    components with g >= 5)."""
    return not framed_to_absolute_surjective(kappa)


@dataclass(frozen=True)
class CoverCountRow:
    component: ComponentDescriptor
    labeled_components: int
    prong_components: int


def cover_component_counts(kappa: PartitionKappa) -> Tuple[CoverCountRow, ...]:
    """Component multiplicities along the tower of covers, per non-
    hyperelliptic component: the labeled cover stays connected over each
    component (the permutation monodromy is all of Sym(kappa)), and the
    prong-marked cover contributes the Boissy count."""
    if kappa.g <= 3:
        raise OutOfClassifiedRange("cover counts implemented for g >= 4")
    rows = []
    for comp in components(kappa):
        if comp.kind == HYPERELLIPTIC:
            continue
        rows.append(
            CoverCountRow(
                component=comp,
                labeled_components=1,
                prong_components=boissy_components(kappa, comp),
            )
        )
    return tuple(rows)


def prototype_arf(kappa: PartitionKappa, config_type: int) -> Optional[int]:
    """Arf label realized by the generating-configuration prototype of the
    given type: when gcd(kappa) is even, type 1 realizes 1 for g = 0, 3
    (mod 4) and 0 for g = 1, 2 (mod 4), and type 2 the complement; when gcd
    is odd there is a single non-hyperelliptic component and no label."""
    if config_type not in (1, 2):
        raise ValueError("configuration type must be 1 or 2")
    if kappa.gcd % 2 == 1:
        return None
    type1 = 1 if kappa.g % 4 in (0, 3) else 0
    return type1 if config_type == 1 else 1 - type1


@dataclass(frozen=True)
class AuxiliaryCurveSpec:
    """Constraints an auxiliary curve must satisfy.  d-curves separate one
    boundary from the rest and carry a pinned winding number; c-curves
    separate a pair of even-signature boundaries and only need odd winding
    number."""

    name: str
    boundaries: Tuple[int, ...]
    wn: Optional[int]
    wn_parity: str
    note: str


@dataclass(frozen=True)
class AbsoluteGeneratingReport:
    kappa: PartitionKappa
    genset_curve_count: int
    d_curves: Tuple[AuxiliaryCurveSpec, ...]
    c_curves: Tuple[AuxiliaryCurveSpec, ...]
    bound_warning: bool


def absolute_generating_descriptor(kappa: PartitionKappa) -> AbsoluteGeneratingReport:
    """Describe the generating set of the absolute framed mapping class
    group: the spanning-configuration curves plus an auxiliary curve system.

    Each zero gets one d-curve whose winding number is -1 when the boundary
    value phi(D_k) = -1-kappa_k is odd and -2 when it is even; each pair of
    boundaries with even phi values gets a c-curve.  The parity criterion via
    phi(D_k) and via the prong number k_k = kappa_k + 1 agree identically
    (phi(D_k) = -k_k); both are recorded in the note."""
    g, n = kappa.g, kappa.n
    sig = kappa.signature()
    d_curves = []
    for idx, (part, phi_d) in enumerate(zip(kappa.parts, sig), start=1):
        k_i = part + 1
        wn = -1 if phi_d % 2 != 0 else -2
        d_curves.append(
            AuxiliaryCurveSpec(
                name=f"d{idx}",
                boundaries=(idx,),
                wn=wn,
                wn_parity="odd" if wn % 2 else "even",
                note=(
                    f"phi(D{idx}) = {phi_d} is {'odd' if phi_d % 2 else 'even'}; "
                    f"prong number k{idx} = {k_i} is {'odd' if k_i % 2 else 'even'} "
                    "(the two parity conventions agree)"
                ),
            )
        )
    c_curves = []
    even_labels = [i + 1 for i, v in enumerate(sig) if v % 2 == 0]
    for a in range(len(even_labels)):
        for b in range(a + 1, len(even_labels)):
            i, j = even_labels[a], even_labels[b]
            c_curves.append(
                AuxiliaryCurveSpec(
                    name=f"c{i}_{j}",
                    boundaries=(i, j),
                    wn=None,
                    wn_parity="odd",
                    note="separates D%d, D%d from the rest; any odd winding number" % (i, j),
                )
            )
    return AbsoluteGeneratingReport(
        kappa=kappa,
        genset_curve_count=2 * g + n - 1,
        d_curves=tuple(d_curves),
        c_curves=tuple(c_curves),
        bound_warning=(g < 5),
    )


# -- partition enumeration ---------------------------------------------


def partitions_of(total: int) -> Iterable[Tuple[int, ...]]:
    """All partitions of `total` into positive parts, reverse-lexicographic,
    parts non-increasing."""

    def rec(remaining: int, maximum: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(remaining, maximum), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(total, total, ())


def stratum_partitions(g: int) -> Iterable[PartitionKappa]:
    for parts in partitions_of(2 * g - 2):
        yield PartitionKappa(parts)
