"""Tangent-hyperplane separability: per-edge clean tests and the sep measure.

A packing is totally separable when the tangent hyperplane at every
contact misses the interior of every sphere.  For a finite window the
verdict is window-scoped: a violation found is a true violation, while a
clean sweep only certifies the generated crop (the hyperplane is
unbounded, so a finite window cannot refute far-away intersections).

The measure sep(P) is the fraction of contacts whose tangent hyperplane
is clean; it is 0 for inseparable packings and 1 for totally separable
ones.  Grazing contact (distance from a center to the plane exactly equal
to the radius) counts as clean: the plane must meet the open interior to
be dirty, and grid tangent lines legitimately graze neighboring spheres.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .contact import ContactGraph, build_contact_graph
from .core import DEFAULT_TOL, Packing, Tolerance, Window
from .errors import NotAContactError

WINDOW_CERTIFIED = "WindowCertified"
VIOLATION_FOUND = "ViolationFound"
NO_EDGES = "NoEdges"

# edges per chunk in the batched plane test; bounds the (n x chunk)
# distance matrix to a few MB
_CHUNK = 512


@dataclass(frozen=True, eq=False)
class TangentContact:
    """The tangent hyperplane {x : normal . x = offset} of a touching pair."""

    edge: tuple
    normal: np.ndarray
    offset: float

    @property
    def point(self) -> np.ndarray:
        """A point on the hyperplane (the tangency point)."""
        return self.normal * self.offset


def tangent_hyperplane(
    p: Packing, edge: tuple, tol: Tolerance = DEFAULT_TOL
) -> TangentContact:
    """The unique hyperplane through the tangency point of a touching pair,
    normal to the line of centers."""
    i, j = int(edge[0]), int(edge[1])
    xi, xj = p.centers[i], p.centers[j]
    diff = xj - xi
    dist = float(np.linalg.norm(diff))
    if abs(dist - 2.0 * p.radius) > tol.contact:
        raise NotAContactError(
            f"spheres {i} and {j} are at distance {dist}, not touching"
        )
    normal = diff / dist
    offset = float(normal @ ((xi + xj) / 2.0))
    normal.setflags(write=False)
    return TangentContact((i, j), normal, offset)


def plane_hits_interior(
    h: TangentContact, p: Packing, tol: Tolerance = DEFAULT_TOL
) -> int | None:
    """First sphere whose open interior meets the hyperplane, or None.

    A sphere is hit when its center lies strictly closer than
    radius - tol.plane to the plane.
    """
    if p.n_spheres == 0:
        return None
    dist = np.abs(p.centers @ h.normal - h.offset)
    hits = np.flatnonzero(dist < p.radius - tol.plane)
    if len(hits) == 0:
        return None
    return int(hits[0])


@dataclass(frozen=True)
class SeparabilityReport:
    """Per-window separability verdict and the sep ratio.

    ``sep`` is exact (a Fraction); ``violations`` holds (edge, sphere)
    witnesses, one per dirty edge by default or all of them under full
    audit.
    """

    clean_edges: int
    total_edges: int
    sep: Fraction
    violations: tuple
    status: str


def _edge_cleanliness(
    p: Packing, g: ContactGraph, tol: Tolerance, full_audit: bool
) -> tuple[int, list]:
    """Count clean edges and collect violation witnesses.

    Batched: per chunk of edges, the distance of every center to every
    tangent hyperplane is one matrix product.  Per-edge results are
    independent, so the aggregation is order-free.
    """
    edges = g.edges
    if len(edges) == 0:
        return 0, []
    centers = p.centers
    xi = centers[edges[:, 0]]
    xj = centers[edges[:, 1]]
    diff = xj - xi
    normals = diff / np.linalg.norm(diff, axis=1, keepdims=True)
    offsets = np.einsum("ij,ij->i", normals, (xi + xj) / 2.0)

    clean = 0
    violations = []
    for start in range(0, len(edges), _CHUNK):
        u = normals[start : start + _CHUNK]
        b = offsets[start : start + _CHUNK]
        dist = np.abs(centers @ u.T - b)  # (n, chunk)
        hit = dist < p.radius - tol.plane
        dirty = np.any(hit, axis=0)
        clean += int(np.count_nonzero(~dirty))
        for col in np.flatnonzero(dirty):
            e = (int(edges[start + col, 0]), int(edges[start + col, 1]))
            offending = np.flatnonzero(hit[:, col])
            if full_audit:
                violations.extend((e, int(s)) for s in offending)
            else:
                violations.append((e, int(offending[0])))
    return clean, violations


def _report(
    p: Packing, tol: Tolerance, full_audit: bool, empty_status: str
) -> SeparabilityReport:
    g = build_contact_graph(p, tol)
    total = g.edge_count
    if total == 0:
        return SeparabilityReport(0, 0, Fraction(1), (), empty_status)
    clean, violations = _edge_cleanliness(p, g, tol, full_audit)
    sep = Fraction(clean, total)
    status = VIOLATION_FOUND if violations else WINDOW_CERTIFIED
    return SeparabilityReport(clean, total, sep, tuple(violations), status)


def separability_measure(
    p: Packing, tol: Tolerance = DEFAULT_TOL, full_audit: bool = False
) -> SeparabilityReport:
    """sep(P) = fraction of contacts whose tangent hyperplane misses every
    sphere interior in the window.  Status NoEdges when there is nothing
    to measure."""
    return _report(p, tol, full_audit, NO_EDGES)


def certify_total_separability(
    p: Packing, tol: Tolerance = DEFAULT_TOL, full_audit: bool = False
) -> SeparabilityReport:
    """Window-scoped certification of total separability.

    WindowCertified means every edge is clean against every sphere in the
    window (vacuously true for an edgeless packing); ViolationFound is a
    genuine counterexample to total separability.
    """
    return _report(p, tol, full_audit, WINDOW_CERTIFIED)


@dataclass(frozen=True)
class SepSequenceReport:
    """sep values over a growing window sequence (limit approximants).

    ``stable_3dp`` flags whether the last two values agree to three
    decimal places; ``monotone`` whether the whole sequence is
    non-increasing or non-decreasing.
    """

    windows: tuple
    values: tuple
    stable_3dp: bool
    monotone: bool


def sep_measure_sequence(
    family, windows, tol: Tolerance = DEFAULT_TOL
) -> SepSequenceReport:
    """Evaluate sep over concentric windows of increasing half-width.

    ``family`` is either a catalog/reference name (str) or a callable
    mapping a half-width L to a Packing.  The window shape is fixed to
    concentric axis-aligned cubes.
    """
    windows = [float(w) for w in windows]
    if len(windows) < 2 or any(b <= a for a, b in zip(windows, windows[1:])):
        raise ValueError("need at least 2 strictly increasing window half-widths")
    if callable(family):
        make = family
    else:
        from .generators import generate_named

        name = str(family)
        make = lambda l: generate_named(name, l)
    values = []
    for l in windows:
        report = separability_measure(make(l), tol)
        values.append(report.sep)
    floats = [float(v) for v in values]
    stable = round(floats[-1], 3) == round(floats[-2], 3)
    diffs = np.diff(floats)
    monotone = bool(np.all(diffs >= 0) or np.all(diffs <= 0))
    return SepSequenceReport(tuple(windows), tuple(values), stable, monotone)
