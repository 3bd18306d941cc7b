"""Shared fixture surfaces for the test suite."""

from plumbtrace.surface import SLOT_0, SLOT_1, SLOT_INF, build_surface


def n1_surface():
    """Two pants glued along inf (curve 0) and along slot 1 (curve 1); the
    second curve sits at the first's predecessor slot in both pants."""
    return build_surface(
        1, 2, 2,
        [("e", (0, SLOT_INF), (1, SLOT_INF)), ("f", (0, SLOT_1), (1, SLOT_1))],
    )


def n2_surface():
    """Three pants: curve 0 glued at inf-inf, curves 1 and 2 chaining the
    second pants to the third."""
    return build_surface(
        1, 3, 3,
        [
            ("e", (0, SLOT_INF), (1, SLOT_INF)),
            ("c", (1, SLOT_1), (2, SLOT_0)),
            ("d", (1, SLOT_0), (2, SLOT_1)),
        ],
    )
