"""Coordinate admissibility, arc counts, and twist conversions."""

import pytest

from plumbtrace.dtcoords import (
    CoordError,
    DTCoords,
    NegativeTwistOnZeroLength,
    ParityViolation,
    arc_counts,
    coords_from_triple,
    window_twists,
    dual_curve_coords,
    triple_from_coords,
    twist_curve,
    validate,
)
from plumbtrace.surface import (
    SLOT_0,
    SLOT_1,
    SLOT_INF,
    build_surface,
    four_holed_sphere,
    genus_two,
    one_holed_torus,
)


class TestValidate:
    def test_dual_curve_admissible(self):
        validate(four_holed_sphere(), DTCoords((2,), (0,)))

    def test_odd_pants_total_rejected(self):
        with pytest.raises(ParityViolation) as exc:
            validate(four_holed_sphere(), DTCoords((1,), (0,)))
        assert exc.value.pants in (0, 1)

    def test_negative_twist_on_zero_length(self):
        with pytest.raises(NegativeTwistOnZeroLength) as exc:
            validate(four_holed_sphere(), DTCoords((0,), (-1,)))
        assert exc.value.curve == 0

    def test_length_mismatch(self):
        with pytest.raises(CoordError, match="length"):
            validate(genus_two(), DTCoords((2,), (0,)))


class TestArcCounts:
    def test_all_equal(self):
        c = arc_counts(2, 2, 2)
        assert all(v == 1 for v in c.dcc.values())
        assert c.scc == (0, 0, 0)

    def test_single_same_boundary_arc(self):
        c = arc_counts(2, 0, 0)
        assert c.scc == (1, 0, 0)
        assert all(v == 0 for v in c.dcc.values())

    def test_four_two_two(self):
        c = arc_counts(4, 2, 2)
        assert c.dcc_between(0, 1) == 2
        assert c.dcc_between(0, 2) == 2
        assert c.dcc_between(1, 2) == 0
        assert c.scc == (0, 0, 0)

    def test_parity_rejected(self):
        with pytest.raises(ParityViolation):
            arc_counts(1, 0, 0)

    @pytest.mark.parametrize("x", range(0, 41, 4))
    def test_slot_budget_identity(self, x):
        # every even-sum triple up to 40: arcs at a slot add up to its total
        for y in range(0, 41, 2):
            for z in range(x % 2, 41, 2):
                if (x + y + z) % 2:
                    continue
                c = arc_counts(x, y, z)
                for slot, total in enumerate((x, y, z)):
                    others = [s for s in (0, 1, 2) if s != slot]
                    budget = (
                        c.dcc_between(slot, others[0])
                        + c.dcc_between(slot, others[1])
                        + 2 * c.scc[slot]
                    )
                    assert budget == total


def n1_surface():
    """Two pants glued at inf (curve 0) and at slot 1 (curve 1): the second
    curve sits at each inf-slot's predecessor, so a once-crossing curve has
    one arc between them in each pants."""
    return build_surface(
        1, 2, 2,
        [("e", (0, SLOT_INF), (1, SLOT_INF)), ("f", (0, SLOT_1), (1, SLOT_1))],
    )


def n2_surface():
    """One pants carrying a same-boundary arc at curve 0's end, the other
    pants feeding both strands onward through two more curves."""
    return build_surface(
        1, 3, 3,
        [
            ("e", (0, SLOT_INF), (1, SLOT_INF)),
            ("c", (1, SLOT_1), (2, SLOT_0)),
            ("d", (1, SLOT_0), (2, SLOT_1)),
        ],
    )


class TestWindowTwist:
    def test_once_crossing_golden(self):
        # q=1, p=-1 with one predecessor-slot arc in each pants: phat = 0
        phat = window_twists(n1_surface(), DTCoords((1, 1), (-1, -1)))
        assert phat[0] == 0

    def test_twice_crossing_golden(self):
        # q=2, p=1, same-boundary arc on one side, one predecessor arc on
        # the other: phat = 0
        phat = window_twists(n2_surface(), DTCoords((2, 1, 1), (1, 1, 1)))
        assert phat[0] == 0

    def test_four_holed_dual(self):
        # both sides are same-boundary arcs, no correction: phat = -1
        assert window_twists(four_holed_sphere(), DTCoords((2,), (0,))) == (-1,)

    def test_one_holed_torus_single_and_doubled(self):
        s = one_holed_torus()
        assert window_twists(s, DTCoords((1,), (0,))) == (0,)
        assert window_twists(s, DTCoords((2,), (0,))) == (0,)

    def test_zero_length_passthrough(self):
        assert window_twists(four_holed_sphere(), DTCoords((0,), (5,))) == (5,)

    def test_unrealizable_twist_surfaced(self):
        # q=2 dual-type curve on the four-holed sphere needs even p
        with pytest.raises(CoordError, match="not realizable"):
            window_twists(four_holed_sphere(), DTCoords((2,), (1,)))

    def test_equivariant_under_twisting(self):
        s = genus_two()
        coords = DTCoords((1, 1, 2), (1, 1, 0))
        base = window_twists(s, coords)
        for i in range(3):
            twisted = window_twists(s, twist_curve(coords, i, 1))
            expected = tuple(
                base[j] + (coords.q[j] if j == i else 0) for j in range(3)
            )
            assert twisted == expected


class TestTwistCurve:
    def test_single_right_twist(self):
        assert twist_curve(DTCoords((2,), (0,)), 0, 1) == DTCoords((2,), (4,))

    def test_identity(self):
        c = DTCoords((3, 1), (-2, 5))
        assert twist_curve(c, 0, 0) == c

    def test_double_left_twist(self):
        assert twist_curve(DTCoords((3,), (-2,)), 0, -2) == DTCoords((3,), (-14,))

    def test_inverse(self):
        c = DTCoords((3, 2), (1, -4))
        assert twist_curve(twist_curve(c, 1, 5), 1, -5) == c


class TestDualCurve:
    def test_four_holed(self):
        assert dual_curve_coords(four_holed_sphere(), 0) == DTCoords((2,), (0,))

    def test_one_holed_torus_doubled(self):
        assert dual_curve_coords(one_holed_torus(), 0) == DTCoords((2,), (0,))

    def test_extends_by_zero(self):
        assert dual_curve_coords(genus_two(), 1) == DTCoords((0, 2, 0), (0, 0, 0))


class TestTripleConversion:
    @pytest.mark.parametrize(
        "qp,mst",
        [((2, 0), (2, 0, 2)), ((2, 4), (2, 2, 0)), ((0, 0), (0, 0, 0))],
    )
    def test_forward(self, qp, mst):
        assert triple_from_coords(*qp) == mst

    def test_inverse_examples(self):
        assert coords_from_triple(2, 0, 2) == (2, 0)
        assert coords_from_triple(2, 2, 0) == (2, 4)
        # only the middle relation holds: positive twist
        assert coords_from_triple(1, 2, 1) == (1, 4)

    def test_odd_twist_rejected(self):
        with pytest.raises(CoordError, match="odd"):
            triple_from_coords(2, 1)

    def test_no_relation_rejected(self):
        with pytest.raises(CoordError, match="relation"):
            coords_from_triple(5, 1, 1)

    def test_round_trip_exhaustive_triples(self):
        for m in range(21):
            for s in range(21):
                for t in range(21):
                    if m == s + t or s == m + t or t == m + s:
                        q, p = coords_from_triple(m, s, t)
                        if q == 0 and p < 0:
                            continue  # not an admissible coordinate pair
                        assert triple_from_coords(q, p) == (m, s, t)
