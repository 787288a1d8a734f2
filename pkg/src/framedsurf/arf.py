"""Arf-type invariants of framings and orbit-equivalence decisions.

The mod-2 Arf invariant of a relative framing is computed from its values on
a distinguished geometric basis:

    Arf(phi) = sum_i (phi(x_i)+1)(phi(y_i)+1)
             + sum_j (phi(a_j)+1/2)(phi(D_j)+1)   (mod 2).

The arc terms are evaluated in doubled arithmetic: (2*phi(a_j)+1) is an even
integer exactly when the term vanishes mod 2, so the product is halved before
reducing.  For genus one with one boundary component the classifying
invariant is instead the non-negative generator of the ideal of winding
numbers of nonseparating simple closed curves; it is computed by the orbit
oracle of the twist engine, not by a closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .core import FramedSurface, SurfaceType
from .engine import EngineState, OrbitReport, orbit_wn_values
from .errors import (
    OutOfClassifiedRange,
    SignatureMismatch,
    Unstabilized,
)

ARF_ONE_PLUS = "1+"  # the special genus-1 type symbol; arithmetic value 1


def arf(framing: FramedSurface) -> int:
    """The mod-2 Arf invariant of a relative framing (any g >= 0, n >= 1)."""
    total = 0
    cv = framing.curve_values
    for i in range(framing.surface.g):
        total += (cv[2 * i] + 1) * (cv[2 * i + 1] + 1)
    for j, arc_value in enumerate(framing.arc_values):
        doubled = int(2 * arc_value) + 1  # 2*(phi(a)+1/2), an odd*... even integer test
        term2 = doubled * (framing.signature[j + 1] + 1)  # = 2 * the real term
        if term2 % 2 != 0:
            raise AssertionError("half-integer Arf term did not double to an integer")
        total += term2 // 2
    return total % 2


def arf1(
    framing: FramedSurface, depth: int = 12, stabilization_window: int = 2
) -> int:
    """Genus-1 invariant for Sigma_{1,1}: the stabilized gcd of winding
    numbers in the twist orbit of the basis curves.

    Oracle-based by design: no closed formula is assumed.  Curve-arc sum
    moves are disabled here because the two basis curves of Sigma_{1,1}
    intersect once, so no sum configuration with them exists on this surface;
    the twist moves alone reach every nonseparating curve.
    """
    if (framing.surface.g, framing.surface.n) != (1, 1):
        raise OutOfClassifiedRange("arf1 is defined for g = 1, n = 1 only")
    from math import gcd as _gcd

    state = EngineState.from_framing(framing)
    ideal_gcd = 0
    for name in ("x1", "y1"):
        report = orbit_wn_values(
            state,
            name,
            generators=("x1", "y1"),
            depth=depth,
            include_sums=False,
            stabilization_window=stabilization_window,
        )
        if not report.stabilized:
            raise Unstabilized(
                f"orbit gcd did not stabilize within depth {depth}: {report.gcd_by_depth}"
            )
        ideal_gcd = _gcd(ideal_gcd, report.gcd)
    return ideal_gcd


def arf_additive_split(
    whole: FramedSurface,
    side1: FramedSurface,
    side2: FramedSurface,
    multicurve_wns: Sequence[int],
) -> int:
    """Residual of the Arf additivity identity along a separating multicurve:

        Arf(whole) - Arf(side1) - Arf(side2) - sum_i (wn(c_i) + 1)   (mod 2).

    Zero for every genuine splitting.  `multicurve_wns` holds the winding
    numbers of the multicurve components as seen from side1 (the mod-2 result
    does not depend on that orientation choice).
    """
    r = len(multicurve_wns)
    if r < 1:
        # identity split: side2 empty is modeled by a trivial side2 framing
        return (arf(whole) - arf(side1) - arf(side2)) % 2
    # signature consistency: side1 and side2 must carry the multicurve values
    # (with opposite orientations) among their boundary components, and the
    # remaining boundary values must match the whole.
    w = sorted(multicurve_wns)
    s1 = sorted(side1.signature)
    s2 = sorted(side2.signature)
    if not _contains_multiset(s1, w):
        raise SignatureMismatch(
            f"side1 signature {side1.signature} does not contain the multicurve values {tuple(multicurve_wns)}"
        )
    if not _contains_multiset(s2, [-v for v in w]):
        raise SignatureMismatch(
            f"side2 signature {side2.signature} does not contain the reversed multicurve values"
        )
    rest = _remove_multiset(s1, w) + _remove_multiset(s2, [-v for v in w])
    if sorted(rest) != sorted(whole.signature):
        raise SignatureMismatch(
            "boundary components of the sides do not reassemble the whole signature"
        )
    residual = arf(whole) - arf(side1) - arf(side2) - sum(v + 1 for v in multicurve_wns)
    return residual % 2


def _contains_multiset(universe: List[int], sub: List[int]) -> bool:
    pool = list(universe)
    for v in sub:
        if v in pool:
            pool.remove(v)
        else:
            return False
    return True


def _remove_multiset(universe: List[int], sub: List[int]) -> List[int]:
    pool = list(universe)
    for v in sub:
        pool.remove(v)
    return pool


def are_equivalent(f1: FramedSurface, f2: FramedSurface) -> bool:
    """Whether two relative framings with the same surface type and boundary
    signature lie in one mapping class group orbit.

    For g >= 2 the Arf invariant is a complete invariant; for (g, n) = (1, 1)
    the genus-1 ideal generator is.  Other low-genus cases are refused."""
    if f1.surface != f2.surface:
        raise SignatureMismatch("framings live on different surface types")
    if f1.signature != f2.signature:
        raise SignatureMismatch("framings must agree on the boundary")
    g, n = f1.surface.g, f1.surface.n
    if g >= 2:
        return arf(f1) == arf(f2)
    if (g, n) == (1, 1):
        return arf1(f1) == arf1(f2)
    raise OutOfClassifiedRange(
        f"orbit classification for (g, n) = ({g}, {n}) is not covered"
    )


@dataclass(frozen=True)
class SeparatingCurveType:
    """Type (g(c), Arf(c)) of a separating curve on Sigma_{g,1}.  The symbol
    1+ marks a genus-1 interior whose ideal invariant is 0; it counts as
    1 in mod-2 arithmetic."""

    genus_side: int
    arf_side: Union[int, str]

    def __post_init__(self):
        if self.genus_side < 1:
            raise ValueError("a separating curve bounds positive genus")
        if self.arf_side not in (0, 1, ARF_ONE_PLUS):
            raise ValueError(f"arf side must be 0, 1 or '1+', got {self.arf_side!r}")
        if self.arf_side == ARF_ONE_PLUS and self.genus_side != 1:
            raise ValueError("the symbol 1+ only occurs for genus-1 interiors")

    @property
    def arf_arithmetic(self) -> int:
        return 1 if self.arf_side == ARF_ONE_PLUS else self.arf_side


def septwist_type_in_admissible(t: SeparatingCurveType, ambient_g: int) -> bool:
    """Whether the twist about a separating curve of this type belongs to the
    admissible subgroup: true for the six listed low-genus families, and for
    every type once the ambient genus is at least 5."""
    if ambient_g >= 5:
        return True
    g, a = t.genus_side, t.arf_side
    if a == 1 and g >= 5 and g % 4 == 1:
        return True  # (1+4k, 1), k >= 1
    if a == 1 and g % 4 == 2:
        return True  # (2+4k, 1), k >= 0
    if a == 0 and g % 4 == 3:
        return True  # (3+4k, 0), k >= 0
    if a == 0 and g >= 4 and g % 4 == 0:
        return True  # (4k, 0), k >= 1
    if (g, a) == (1, ARF_ONE_PLUS):
        return True
    if (g, a) == (3, 1):
        return True
    return False


def maximal_chain_arf(g: int) -> int:
    """Arf invariant of the framing of Sigma_{g,1} carrying a maximal chain
    of admissible curves: 0 for g = 0, 3 (mod 4) and 1 for g = 1, 2 (mod 4)."""
    return 0 if g % 4 in (0, 3) else 1


# -- Arf invariants of quadratic forms over F_2 -------------------------


def arf_of_quadratic_form(gram: Sequence[Sequence[int]], q: Sequence[int]) -> int:
    """Arf invariant of a quadratic refinement q of a bilinear form over F_2.

    `gram` is the mod-2 Gram matrix, `q` the values on the corresponding
    basis; q(u+v) = q(u) + q(v) + <u, v>.  The radical must satisfy q = 0
    (otherwise the Arf invariant is undefined and a ValueError is raised).
    Returns sum q(u_i) q(v_i) over a symplectic basis of the quotient.
    """
    n = len(q)
    basis = [(1 << i, gram_row_mask(gram, i), q[i] & 1) for i in range(n)]
    # vectors as bitmasks over the original basis; keep (vec, pairing-mask, q)
    pool = list(basis)
    arf_total = 0
    while True:
        pair = _find_symplectic_pair(pool)
        if pair is None:
            break
        (u, v) = pair
        arf_total ^= u[2] & v[2]
        pool = _reduce_pool(pool, u, v)
    for vec, mask, qv in pool:
        if mask != 0:
            raise AssertionError("leftover vector pairs nontrivially")
        if qv:
            raise ValueError("quadratic form is nonzero on the radical; Arf undefined")
    return arf_total


def gram_row_mask(gram: Sequence[Sequence[int]], i: int) -> int:
    mask = 0
    for j, x in enumerate(gram[i]):
        if x & 1:
            mask |= 1 << j
    return mask


def _pairing(a, b) -> int:
    return bin(a[1] & b[0]).count("1") & 1


def _find_symplectic_pair(pool):
    for i, u in enumerate(pool):
        for v in pool[i + 1 :]:
            if _pairing(u, v):
                return (u, v)
    return None


def _reduce_pool(pool, u, v):
    out = []
    for w in pool:
        if w is u or w is v:
            continue
        if _pairing(w, v):
            w = _add_vec(w, u)
        if _pairing(w, u):
            w = _add_vec(w, v)
        out.append(w)
    return out


def _add_vec(a, b):
    return (a[0] ^ b[0], a[1] ^ b[1], (a[2] ^ b[2] ^ _pairing(a, b)) & 1)
