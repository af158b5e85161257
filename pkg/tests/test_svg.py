import numpy as np
import pytest

from sepack import Packing, generate_named, render_svg
from sepack.errors import UnsupportedDimensionError


class TestRenderSvg:
    def test_circle_count(self):
        p = generate_named("K6", 6)
        doc = render_svg(p)
        assert doc.count("<circle") == p.n_spheres

    def test_edges_and_tangents_add_lines(self):
        from sepack import build_contact_graph

        p = generate_named("K6", 6)
        m = build_contact_graph(p).edge_count
        doc = render_svg(p, show_edges=True, show_tangents=True)
        assert doc.count("<line") == 2 * m

    def test_deterministic_bytes(self):
        p = generate_named("K9", 8)
        a = render_svg(p, show_edges=True).encode()
        b = render_svg(p, show_edges=True).encode()
        assert a == b

    def test_empty_packing_is_valid_document(self):
        p = Packing(np.zeros((0, 2)))
        doc = render_svg(p)
        assert doc.startswith("<?xml") and doc.rstrip().endswith("</svg>")
        assert "<circle" not in doc

    def test_rejects_3d(self):
        with pytest.raises(UnsupportedDimensionError):
            render_svg(generate_named("J1", 4))
