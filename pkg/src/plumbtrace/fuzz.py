"""Random admissible coordinates and an independent embedding oracle.

The sampler draws intersection vectors uniformly, rejecting until every
pants has an even total, then draws twists and repairs each one into the
realizable parity class (for fixed q the realizable twists about a curve
fill one class mod 2, read off the arc pattern).  Streams are deterministic
per seed.

The oracle re-checks the compiler's combinatorial output by geometric
means it does not share with the nesting logic: it realizes every pants arc
as chords in the two hexagon disks of the pants (windows and seams as disk
boundary edges), realizes every matching strand in the infinite-strip cover
of its annulus, detects crossings by endpoint interleaving, and counts
components by walking the endpoint permutation.  A layout or matching bug
upstream shows up as a chord crossing or a component-count mismatch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .dtcoords import (
    DTCoords,
    window_twists,
    pants_arc_counts,
    twist_correction,
    validate,
)
from .standardpos import Layout, Matching, extract_components, layout_endpoints, match_strands
from .surface import PantsDecomposition, pred, succ


@dataclass(frozen=True)
class FuzzConfig:
    surface: PantsDecomposition
    seed: int = 0
    max_q: int = 6
    max_abs_p: int = 8
    count: int = 100
    connected_only: bool = False


def _sample_q(rng: random.Random, surface: PantsDecomposition, max_q: int) -> tuple[int, ...]:
    for _ in range(100_000):
        q = tuple(rng.randint(0, max_q) for _ in range(surface.xi))
        ok = True
        for pants in range(surface.pants_count):
            data = surface.boundary_data(pants)
            total = sum(q[c] for c in data.values() if c is not None)
            if total % 2:
                ok = False
                break
        if ok:
            return q
    raise RuntimeError("could not sample an even intersection vector")


def _repair_p(surface: PantsDecomposition, q: tuple[int, ...], p: list[int]) -> tuple[int, ...]:
    coords = DTCoords(q, tuple(p))
    out = list(p)
    for i in range(surface.xi):
        if q[i] == 0:
            out[i] = abs(out[i])
        else:
            num = out[i] - q[i] + twist_correction(surface, coords, i)
            if num % 2:
                out[i] += 1
    return tuple(out)


def random_coords(cfg: FuzzConfig) -> Iterator[DTCoords]:
    """Deterministic stream of admissible, realizable coordinate vectors."""
    rng = random.Random(cfg.seed)
    produced = 0
    attempts = 0
    while produced < cfg.count:
        attempts += 1
        if attempts > 1000 * max(cfg.count, 1):
            raise RuntimeError("rejection sampling stalled; relax the config")
        q = _sample_q(rng, cfg.surface, cfg.max_q)
        p = [rng.randint(-cfg.max_abs_p, cfg.max_abs_p) for _ in range(cfg.surface.xi)]
        coords = DTCoords(q, _repair_p(cfg.surface, q, p))
        validate(cfg.surface, coords)
        window_twists(cfg.surface, coords)  # must be realizable
        if cfg.connected_only and len(extract_components(cfg.surface, coords)) != 1:
            continue
        produced += 1
        yield coords


# -- chord-diagram oracle ----------------------------------------------------

@dataclass
class OracleReport:
    simple: bool
    components: int
    crossing_pairs: list[tuple]

    @property
    def ok(self) -> bool:
        return self.simple


def _interleaved(circuit_pos: dict, chord1: tuple, chord2: tuple) -> bool:
    """Two chords of one disk cross iff their endpoints interleave along
    the boundary circuit."""
    a1, b1 = circuit_pos[chord1[0]], circuit_pos[chord1[1]]
    c1, c2 = circuit_pos[chord2[0]], circuit_pos[chord2[1]]
    lo, hi = min(a1, b1), max(a1, b1)
    inside1 = lo < c1 < hi
    inside2 = lo < c2 < hi
    return inside1 != inside2


def _pants_disks(surface, coords, layout: Layout, pants: int):
    """Chords and boundary circuits of the two hexagon disks of one pants.

    Point names: ("w", slot, pos) window points, ("s", a, b, k) the k-th
    crossing point on the seam between slots a and b (a -> succ(a) order).
    """
    counts = pants_arc_counts(surface, coords, pants)
    scc_slot = counts.scc_slot()
    s_count = counts.scc[scc_slot] if scc_slot is not None else 0

    # seam crossing points, ordered from the lower-slot end of each seam
    seam_points: dict[tuple[int, int], list] = {}
    for a in (0, 1, 2):
        b = succ(a)
        pts = []
        if scc_slot is not None:
            if a == scc_slot:  # outgoing crossings, outermost (window pos 0) first
                pts = [("s", a, b, k) for k in range(s_count, 0, -1)]
            elif a == succ(scc_slot):  # returning crossings, innermost first
                pts = [("s", a, b, k) for k in range(1, s_count + 1)]
        seam_points[(a, b)] = pts

    white_circuit: list = []
    for slot in (0, 1, 2):
        desc = layout.windows[(pants, slot)]
        white_circuit.extend(("w", slot, pos) for pos in range(len(desc) - 1, -1, -1))
        white_circuit.extend(seam_points[(slot, succ(slot))])

    black_circuit: list = []
    for slot in (0, 2, 1):  # mirrored cusp order; seams traversed backwards
        black_circuit.extend(reversed(seam_points[(pred(slot), slot)]))
    # (black horocycle edges carry no points)

    white_chords: list[tuple] = []
    black_chords: list[tuple] = []
    scc_seen = 0
    for arc in layout.arcs:
        if arc.pants != pants:
            continue
        if arc.kind == "dcc":
            white_chords.append(
                (("w",) + arc.end_out, ("w",) + arc.end_in)
            )
        else:
            scc_seen += 1
            d = arc.end_out[0]
            k = s_count - arc.end_out[1]  # window pos s-k for arc k
            first = ("s", d, succ(d), k)
            second = ("s", succ(d), succ(succ(d)), k)
            white_chords.append((("w",) + arc.end_out, first))
            white_chords.append((second, ("w",) + arc.end_in))
            black_chords.append((first, second))
    assert scc_seen == counts.total_scc()

    return (white_circuit, white_chords), (black_circuit, black_chords)


def _disk_crossings(circuit: list, chords: list[tuple]) -> list[tuple]:
    pos = {pt: k for k, pt in enumerate(circuit)}
    bad = []
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            if set(chords[i]) & set(chords[j]):
                continue
            if _interleaved(pos, chords[i], chords[j]):
                bad.append((chords[i], chords[j]))
    return bad


def _annulus_crossings(
    coords, layout: Layout, matching: Matching, curve: int
) -> list[tuple]:
    """Strand crossings in the infinite-strip cover of one window annulus.

    Strand ends are located through the layout's window-position maps (not
    the strand enumeration), so a corrupted bridge between the two shows up
    here as a crossing.
    """
    q = coords.q[curve]
    period = q + 1  # one spare cell where the transversal arc lives
    strands = []
    for k in range(q):
        partner, wrap = matching.step[(curve, 0, k)]
        u = layout.window_of[(curve, 0, k)][2]
        v = (q - 1 - layout.window_of[partner][2]) + wrap * period
        strands.append((u, v, wrap))
    span = max((abs(w) for _, _, w in strands), default=0) + 2
    bad = []
    for i in range(len(strands)):
        for j in range(i + 1, len(strands)):
            u1, v1, _ = strands[i]
            u2, v2, _ = strands[j]
            for n in range(-span, span + 1):
                du = u1 - (u2 + n * period)
                dv = v1 - (v2 + n * period)
                if du * dv < 0:
                    bad.append(((curve, i), (curve, j), n))
                    break
    return bad


def _component_count(layout: Layout, matching: Matching, coords: DTCoords) -> int:
    nodes = set(matching.step)
    count = 0
    while nodes:
        count += 1
        start = min(nodes)
        node = start
        while True:
            nodes.discard(node)
            partner, _ = matching.step[node]
            nodes.discard(partner)
            node = layout.arc_step[partner][0]
            if node == start:
                break
    count += sum(p for q, p in zip(coords.q, coords.p) if q == 0)
    return count


def oracle_check(
    surface: PantsDecomposition,
    coords: DTCoords,
    layout: Layout | None = None,
    matching: Matching | None = None,
) -> OracleReport:
    """Embedding verdict and component count for one coordinate vector.

    Passing an explicit layout/matching lets negative controls corrupt the
    data and watch the oracle object.
    """
    if layout is None:
        layout = layout_endpoints(surface, coords)
    if matching is None:
        matching = match_strands(surface, coords)

    crossing_pairs: list[tuple] = []
    for pants in range(surface.pants_count):
        for circuit, chords in _pants_disks(surface, coords, layout, pants):
            crossing_pairs.extend(_disk_crossings(circuit, chords))
    for curve in range(surface.xi):
        if coords.q[curve]:
            crossing_pairs.extend(_annulus_crossings(coords, layout, matching, curve))

    return OracleReport(
        simple=not crossing_pairs,
        components=_component_count(layout, matching, coords),
        crossing_pairs=crossing_pairs,
    )


def chord_diagram_oracle(surface: PantsDecomposition, coords: DTCoords) -> OracleReport:
    validate(surface, coords)
    return oracle_check(surface, coords)


def injectivity_scan(
    surface: PantsDecomposition, samples: list[DTCoords]
) -> dict[tuple, list[DTCoords]]:
    """Group distinct coordinate vectors by their multiset of component
    traces; any group with two members is a collision to review (trace
    tuples are not claimed to separate curves, so this flags, not fails)."""
    from .holonomy import trace_of_curve

    buckets: dict[tuple, list[DTCoords]] = {}
    for coords in samples:
        signature = tuple(
            sorted(str(t) for _, t in trace_of_curve(surface, coords))
        )
        buckets.setdefault(signature, []).append(coords)
    return {
        sig: group
        for sig, group in buckets.items()
        if len({(c.q, c.p) for c in group}) > 1
    }
