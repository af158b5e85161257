"""Shared brute-force oracles and geometry helpers for the tests.

The oracles are deliberately naive O(n^2)/O(n*m) loops, independent of
the library's accelerated paths.
"""

import numpy as np
import pytest

from sepack import Packing


def brute_force_edges(centers, radius=1.0, tol=1e-9):
    """All touching pairs by direct distance comparison."""
    centers = np.asarray(centers, dtype=float)
    edges = set()
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            dist = np.linalg.norm(centers[i] - centers[j])
            if abs(dist - 2.0 * radius) <= tol:
                edges.add((i, j))
    return edges


def brute_force_min_distance(centers):
    centers = np.asarray(centers, dtype=float)
    best = np.inf
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            best = min(best, float(np.linalg.norm(centers[i] - centers[j])))
    return best


def brute_force_clean_edges(centers, radius=1.0, tol=1e-9):
    """(clean, total) edge counts by direct tangent-plane evaluation."""
    centers = np.asarray(centers, dtype=float)
    edges = sorted(brute_force_edges(centers, radius, tol))
    clean = 0
    for i, j in edges:
        u = centers[j] - centers[i]
        u = u / np.linalg.norm(u)
        b = float(u @ ((centers[i] + centers[j]) / 2.0))
        dirty = False
        for x in centers:
            if abs(float(u @ x) - b) < radius - tol:
                dirty = True
                break
        if not dirty:
            clean += 1
    return clean, len(edges)


def random_rotation(d, rng):
    """Haar-ish random rotation via QR of a Gaussian matrix."""
    m = rng.standard_normal((d, d))
    q, r = np.linalg.qr(m)
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def transformed(p: Packing, rotation, translation) -> Packing:
    """Apply an isometry to all centers (window becomes a bounding box)."""
    centers = p.centers @ rotation.T + translation
    return Packing(centers, None, p.radius, p.label)


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
