"""Dehn-Thurston coordinates: admissibility, arc counts, twist conversions.

A curve on a pants-decomposed surface is a pair of integer vectors
``(q, p)`` indexed by pants curves: ``q[i] >= 0`` is the geometric
intersection number with curve i and ``p[i]`` is the twist about it,
measured against the symmetric dual-curve marking with right twists
positive.  Admissibility:

  (i)  q[i] == 0 implies p[i] >= 0 (then p[i] counts parallel copies);
  (ii) the three intersection numbers at each pants have even sum, a curve
       glued to two slots of the same pants counting twice.

Intersecting a single pants in ``x, y, z`` points forces the arc pattern:
between boundaries X and Y run ``max(0, min((x+y-z)/2, x, y))`` arcs, and
``max(0, (x-y-z)/2)`` arcs run from X back to itself.  At most one boundary
of a pants can carry same-boundary arcs.

Two twist scales are used.  The symmetric twist ``p`` above is what users
supply; the window twist ``phat`` is the strand shift in the annulus once
all crossings are pushed into one window per curve (the form the holonomy
compiler consumes).  They differ by a correction readable off the arc
pattern:

    2*phat[i] = p[i] - q[i] + sum over the two gluing ends of
                #(arcs between that end's slot and its cyclic predecessor)

which applies verbatim when the two ends lie on the same pants.  A
non-integer result means ``(q, p)`` is not realizable as a curve (for fixed
q the realizable p fill one parity class); it is reported, never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import PantsDecomposition, pred


class CoordError(ValueError):
    """Invalid or unrealizable Dehn-Thurston coordinates."""


class ParityViolation(CoordError):
    def __init__(self, pants: int, total: int):
        self.pants = pants
        super().__init__(f"pants {pants}: odd intersection total {total}")


class NegativeTwistOnZeroLength(CoordError):
    def __init__(self, curve: int):
        self.curve = curve
        super().__init__(f"curve {curve}: q=0 needs twist >= 0")


@dataclass(frozen=True)
class DTCoords:
    q: tuple[int, ...]
    p: tuple[int, ...]

    def __post_init__(self):
        if len(self.q) != len(self.p):
            raise CoordError("q and p have different lengths")
        if any(v < 0 for v in self.q):
            raise CoordError("negative intersection number")

    @property
    def xi(self) -> int:
        return len(self.q)

    def total_q(self) -> int:
        return sum(self.q)


def pants_x(surface: PantsDecomposition, coords: DTCoords, pants: int) -> tuple[int, int, int]:
    """Intersection numbers of the curve with the three slots of one pants."""
    data = surface.boundary_data(pants)
    return tuple(0 if data[s] is None else coords.q[data[s]] for s in (0, 1, 2))


def validate(surface: PantsDecomposition, coords: DTCoords) -> None:
    """Raise unless (q, p) satisfies the admissibility conditions."""
    if coords.xi != surface.xi:
        raise CoordError(
            f"coordinate length {coords.xi} does not match {surface.xi} pants curves"
        )
    for i, (qi, pi) in enumerate(zip(coords.q, coords.p)):
        if qi == 0 and pi < 0:
            raise NegativeTwistOnZeroLength(i)
    for pants in range(surface.pants_count):
        total = sum(pants_x(surface, coords, pants))
        if total % 2:
            raise ParityViolation(pants, total)


@dataclass(frozen=True)
class ArcCounts:
    """Arc pattern of a curve inside one pants with slot totals (x0, x1, x2).

    ``dcc[(a, b)]`` counts arcs between the slot-a and slot-b boundaries
    (keys are the three sorted slot pairs); ``scc[a]`` counts arcs from the
    slot-a boundary to itself.
    """

    x: tuple[int, int, int]
    dcc: dict[tuple[int, int], int]
    scc: tuple[int, int, int]

    def dcc_between(self, a: int, b: int) -> int:
        return self.dcc[(min(a, b), max(a, b))]

    def scc_slot(self) -> int | None:
        """The unique slot carrying same-boundary arcs, or None."""
        for s, n in enumerate(self.scc):
            if n:
                return s
        return None

    def total_scc(self) -> int:
        return sum(self.scc)


def arc_counts(x: int, y: int, z: int) -> ArcCounts:
    """Arc pattern for slot totals (x, y, z); the totals must have even sum."""
    if x < 0 or y < 0 or z < 0:
        raise CoordError("negative intersection number")
    if (x + y + z) % 2:
        raise ParityViolation(-1, x + y + z)
    v = (x, y, z)

    def between(a: int, b: int) -> int:
        c = 3 - a - b
        return max(0, min((v[a] + v[b] - v[c]) // 2, v[a], v[b]))

    def same(a: int) -> int:
        b, c = [s for s in (0, 1, 2) if s != a]
        return max(0, (v[a] - v[b] - v[c]) // 2)

    return ArcCounts(
        x=v,
        dcc={(0, 1): between(0, 1), (0, 2): between(0, 2), (1, 2): between(1, 2)},
        scc=(same(0), same(1), same(2)),
    )


def pants_arc_counts(
    surface: PantsDecomposition, coords: DTCoords, pants: int
) -> ArcCounts:
    try:
        return arc_counts(*pants_x(surface, coords, pants))
    except ParityViolation:
        raise ParityViolation(pants, sum(pants_x(surface, coords, pants))) from None


def twist_correction(surface: PantsDecomposition, coords: DTCoords, curve: int) -> int:
    """Sum over the gluing's two ends of #(arcs slot <-> predecessor slot)."""
    g = surface.gluings[curve]
    total = 0
    for pants, slot in (g.end_a, g.end_b):
        counts = pants_arc_counts(surface, coords, pants)
        total += counts.dcc_between(slot, pred(slot))
    return total


def window_twists(surface: PantsDecomposition, coords: DTCoords) -> tuple[int, ...]:
    """Window twists phat from symmetric twists p.

    For q[i] == 0 both twists count parallel copies, so phat[i] = p[i].
    Raises CoordError when the conversion is non-integral, i.e. when (q, p)
    does not name a curve.
    """
    validate(surface, coords)
    phat = []
    for i in range(surface.xi):
        if coords.q[i] == 0:
            phat.append(coords.p[i])
            continue
        num = coords.p[i] - coords.q[i] + twist_correction(surface, coords, i)
        if num % 2:
            raise CoordError(
                f"curve {i}: twist {coords.p[i]} is not realizable with these "
                f"intersection numbers (window twist would be {num}/2)"
            )
        phat.append(num // 2)
    return tuple(phat)


def twist_curve(coords: DTCoords, curve: int, n: int) -> DTCoords:
    """Apply n full right Dehn twists about pants curve `curve`."""
    p = list(coords.p)
    p[curve] += 2 * n * coords.q[curve]
    return DTCoords(coords.q, tuple(p))


def dual_curve_coords(surface: PantsDecomposition, curve: int) -> DTCoords:
    """The dual curve of a pants curve: q=2 there, 0 elsewhere, no twist.

    When the gluing is a self-gluing this is the doubled dual (two parallel
    copies of the once-crossing curve), keeping intersection number 2 in
    every case.
    """
    if not 0 <= curve < surface.xi:
        raise CoordError(f"no pants curve {curve}")
    q = tuple(2 if i == curve else 0 for i in range(surface.xi))
    p = (0,) * surface.xi
    return DTCoords(q, p)


# -- triple-of-intersection-numbers parametrization ------------------------

def triple_from_coords(q: int, p: int) -> tuple[int, int, int]:
    """Per-curve triple (m, s, t): intersections with the pants curve, its
    dual, and the once-twisted dual.  Defined for even p only."""
    if p % 2:
        raise CoordError(f"twist {p} is odd; the triple needs an even twist")
    m = q
    s = abs(p) // 2
    t = abs(p // 2 - q)
    return (m, s, t)


def coords_from_triple(m: int, s: int, t: int) -> tuple[int, int]:
    """Inverse of triple_from_coords; exactly one of the three triangle relations
    m=s+t, s=m+t, t=m+s must hold (two only in degenerate cases, which
    agree)."""
    if min(m, s, t) < 0:
        raise CoordError("triple entries must be non-negative")
    if m == s + t or s == m + t:
        return (m, 2 * s)
    if t == m + s:
        return (m, -2 * s)
    raise CoordError(f"triple {(m, s, t)} satisfies no triangle relation")
