"""Render the truncated square tiling's circle packing with its contact
graph and tangent lines to an SVG file (defaults to k6.svg)."""

import sys

from sepack import generate_named, render_svg


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "k6.svg"
    packing = generate_named("K6", 10)
    doc = render_svg(packing, show_edges=True, show_tangents=True)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(doc)
    print(f"wrote {out}: {packing.n_spheres} circles with contact edges and tangent lines")


if __name__ == "__main__":
    main()
