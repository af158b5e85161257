import math

import numpy as np
import pytest

from sepack import (
    Packing,
    Window,
    build_contact_graph,
    contact_count,
    contains_triangle,
    generate_named,
    generate_triangular,
    is_k_regular,
)
from sepack.errors import InvalidPackingError

from conftest import brute_force_edges

SQRT3 = math.sqrt(3.0)


def grid_packing(nx, ny):
    return Packing([[2.0 * i, 2.0 * j] for i in range(nx) for j in range(ny)])


class TestBuildContactGraph:
    def test_square(self):
        g = build_contact_graph(grid_packing(2, 2))
        assert contact_count(g) == 4

    def test_3x3_grid(self):
        # direct count: 2 * 3 * (3 - 1) = 12 grid edges
        g = build_contact_graph(grid_packing(3, 3))
        assert contact_count(g) == 12

    def test_three_tangent_circles(self):
        p = Packing([[0.0, 0.0], [2.0, 0.0], [1.0, SQRT3]])
        g = build_contact_graph(p)
        assert contact_count(g) == 3

    def test_rejects_invalid_packing(self):
        with pytest.raises(InvalidPackingError):
            build_contact_graph(Packing([[0.0, 0.0], [1.0, 0.0]]))

    def test_empty_and_singleton(self):
        assert contact_count(build_contact_graph(Packing(np.zeros((0, 2))))) == 0
        assert contact_count(build_contact_graph(Packing([[0.0, 0.0]]))) == 0

    def test_matches_brute_force_on_catalog_windows(self):
        for name, l in [("P3", 8), ("K6", 8), ("J16", 5)]:
            p = generate_named(name, l)
            g = build_contact_graph(p)
            got = {(int(i), int(j)) for i, j in g.edges}
            assert got == brute_force_edges(p.centers), name


class TestIsKRegular:
    def test_p1_is_4_regular(self):
        p = generate_named("P1", 12)
        g = build_contact_graph(p)
        assert is_k_regular(g, p, 4).is_regular

    def test_k6_is_3_regular(self):
        p = generate_named("K6", 12)
        g = build_contact_graph(p)
        assert is_k_regular(g, p, 3).is_regular

    def test_p1_is_not_3_regular(self):
        p = generate_named("P1", 12)
        g = build_contact_graph(p)
        verdict = is_k_regular(g, p, 3)
        assert verdict.status == "irregular"
        assert verdict.degree == 4

    def test_empty_interior_inconclusive(self):
        p = Packing(
            [[0.0, 0.0], [2.0, 0.0]], Window([-1.0, -1.0], [3.0, 1.0], margin=50.0)
        )
        verdict = is_k_regular(build_contact_graph(p), p, 1)
        assert verdict.status == "inconclusive"
        assert not verdict.is_regular


class TestContainsTriangle:
    def test_three_tangent_circles(self):
        p = Packing([[0.0, 0.0], [2.0, 0.0], [1.0, SQRT3]])
        assert contains_triangle(build_contact_graph(p)) == (0, 1, 2)

    def test_square_grid_triangle_free(self):
        assert contains_triangle(build_contact_graph(grid_packing(4, 4))) is None

    def test_triangular_lattice_has_triangle(self):
        p = generate_triangular(8)
        triple = contains_triangle(build_contact_graph(p))
        assert triple is not None
        i, j, k = triple
        for a, b in [(i, j), (i, k), (j, k)]:
            assert np.linalg.norm(p.centers[a] - p.centers[b]) == pytest.approx(2.0)

    def test_catalog_windows_triangle_free(self):
        for name in ("P1", "P3", "K6", "K9"):
            p = generate_named(name, 10)
            assert contains_triangle(build_contact_graph(p)) is None, name
