import math

import numpy as np
import pytest

from sepack import (
    Packing,
    Tolerance,
    Window,
    interior_indices,
    min_pairwise_distance,
    rescale_to_contact,
    validate_packing,
)
from sepack.errors import (
    DegenerateInputError,
    MalformedInputError,
    UndefinedDistanceError,
)
from sepack.generators import signed_permutation_orbit

from conftest import brute_force_min_distance, random_rotation, transformed

SQRT2 = math.sqrt(2.0)


class TestTolerance:
    def test_defaults(self):
        tol = Tolerance()
        assert tol.contact == tol.overlap == tol.plane == 1e-9

    @pytest.mark.parametrize("bad", [0.0, -1e-9, 1e-3, 0.5])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            Tolerance(contact=bad)


class TestWindow:
    def test_cube(self):
        w = Window.cube(12, 2, margin=3)
        assert w.dimension == 2
        assert np.all(w.lower == -12) and np.all(w.upper == 12)

    def test_rejects_inverted_bounds(self):
        with pytest.raises(MalformedInputError):
            Window([0.0, 0.0], [1.0, 0.0])

    def test_rejects_negative_margin(self):
        with pytest.raises(MalformedInputError):
            Window([0.0], [1.0], margin=-1)

    def test_interior_mask(self):
        w = Window([0.0, 0.0], [10.0, 10.0], margin=3)
        assert w.interior_mask(np.array([[5.0, 5.0]]))[0]
        assert not w.interior_mask(np.array([[1.0, 5.0]]))[0]


class TestPacking:
    def test_canonical_sort(self):
        p = Packing([[2.0, 0.0], [0.0, 0.0], [0.0, -1.0]])
        assert np.array_equal(
            p.centers, np.array([[0.0, -1.0], [0.0, 0.0], [2.0, 0.0]])
        )

    def test_rejects_ragged_centers(self):
        with pytest.raises(MalformedInputError):
            Packing([[0.0, 0.0], [1.0, 2.0, 3.0]])

    def test_rejects_nonfinite(self):
        with pytest.raises(MalformedInputError):
            Packing([[0.0, np.inf]])

    def test_centers_immutable(self):
        p = Packing([[0.0, 0.0], [2.0, 0.0]])
        with pytest.raises(ValueError):
            p.centers[0, 0] = 5.0


class TestValidatePacking:
    def test_exact_tangency_ok(self):
        assert validate_packing(Packing([[0.0, 0.0], [2.0, 0.0]])).ok

    def test_overlap_reports_pair_and_distance(self):
        verdict = validate_packing(Packing([[0.0, 0.0], [1.0, 0.0]]))
        assert not verdict.ok
        assert verdict.pair == (0, 1)
        assert verdict.distance == pytest.approx(1.0)

    def test_empty_and_single_ok(self):
        assert validate_packing(Packing(np.zeros((0, 2)))).ok
        assert validate_packing(Packing([[0.0, 0.0]])).ok

    def test_invariant_under_isometry(self, rng):
        from sepack import generate_named

        p = generate_named("K6", 8)
        assert validate_packing(p).ok
        for _ in range(5):
            q = transformed(p, random_rotation(2, rng), rng.uniform(-9, 9, 2))
            assert validate_packing(q).ok


class TestMinPairwiseDistance:
    def test_collinear(self):
        assert min_pairwise_distance(Packing([[0.0], [2.0], [5.0]])) == 2.0

    def test_unit_square(self):
        p = Packing([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
        assert min_pairwise_distance(p) == pytest.approx(1.0)

    def test_bitruncated_motif_is_sqrt2(self):
        # motif = signed permutations of (0,1,2) with its body-centered
        # lattice neighbors (cells share vertices, so dedup first);
        # oracle = full quadratic scan
        motif = signed_permutation_orbit(np.array([0.0, 1.0, 2.0]))
        shifts = [np.zeros(3), np.array([2.0, 2.0, 2.0]), np.array([4.0, 0.0, 0.0])]
        pts = np.unique(np.vstack([motif + s for s in shifts]), axis=0)
        oracle = brute_force_min_distance(pts)
        assert oracle == pytest.approx(SQRT2, abs=1e-12)
        assert min_pairwise_distance(Packing(pts)) == pytest.approx(oracle, abs=1e-12)

    def test_requires_two_centers(self):
        with pytest.raises(UndefinedDistanceError):
            min_pairwise_distance(Packing([[0.0, 0.0]]))

    def test_matches_brute_force_on_random_points(self, rng):
        pts = rng.uniform(-5, 5, size=(40, 3))
        assert min_pairwise_distance(Packing(pts)) == pytest.approx(
            brute_force_min_distance(pts), abs=1e-12
        )


class TestRescaleToContact:
    def test_unit_grid_scales_to_two(self):
        p = Packing([[float(i), float(j)] for i in range(3) for j in range(3)])
        q = rescale_to_contact(p)
        assert min_pairwise_distance(q) == pytest.approx(2.0, abs=1e-12)
        assert q.radius == 1.0

    def test_bitruncated_motif_scales_by_sqrt2(self):
        motif = signed_permutation_orbit(np.array([0.0, 1.0, 2.0]))
        q = rescale_to_contact(Packing(motif))
        assert np.allclose(q.centers, Packing(motif * SQRT2).centers, atol=1e-12)
        assert min_pairwise_distance(q) == pytest.approx(2.0, abs=1e-12)

    def test_idempotent(self):
        p = Packing([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]])
        q = rescale_to_contact(rescale_to_contact(p))
        assert np.allclose(q.centers, rescale_to_contact(p).centers, atol=1e-12)

    def test_duplicate_centers_degenerate(self):
        with pytest.raises(DegenerateInputError):
            rescale_to_contact(Packing([[1.0, 1.0], [1.0, 1.0]]))


class TestInteriorIndices:
    def test_margin_band(self):
        w = Window([0.0, 0.0], [10.0, 10.0], margin=3)
        p = Packing([[5.0, 5.0], [1.0, 5.0]], w)
        interior = interior_indices(p)
        inside = p.centers[interior]
        assert [5.0, 5.0] in inside.tolist()
        assert [1.0, 5.0] not in inside.tolist()

    def test_p1_window_interior_is_inner_grid(self):
        from sepack import generate_named

        p = generate_named("P1", 12)
        got = p.centers[interior_indices(p)]
        expected = np.array(
            sorted(
                [x, y]
                for x in range(-12, 13, 2)
                for y in range(-12, 13, 2)
                if abs(x) <= 9 and abs(y) <= 9
            ),
            dtype=float,
        )
        assert np.allclose(got, expected)
