"""Command-line front end: construction, rendering, verification, sweeps.

Subcommands: build (3D mesh export), net (SVG of the unfolding), verify
(single-parameter check suite), sweep (grid of verifications, parallel),
crescent (the continuous-n ratio table), subtended (per-rhomb angles).

All outputs are deterministic: fixed float formatting, rows sorted by
parameters, and a sweep that merges worker results in submission order, so
byte-identical files come out regardless of --jobs.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import crescent as crescent_mod
from .unfold import assemble_net, planar_zone
from .verify import (
    max_beta,
    net_overlap_oracle,
    rhomb_subtended_angles,
    run_verification,
    SAMPLES_PER_INTERVAL,
)
from .zonohedron import Params, build

SCHEMA_VERSION = 1
DEFAULT_THETAS = "0,0.5,1,2,5,10,20,30,40,50,60,70,80,85,89,89.5"


def parse_theta(text: str) -> float:
    """Angle in radians from CLI text: bare numbers are degrees, a 'rad'
    suffix switches to radians, an optional 'deg' suffix is accepted."""
    s = text.strip().lower()
    if s.endswith("rad"):
        return float(s[: -len("rad")])
    if s.endswith("deg"):
        s = s[: -len("deg")]
    return math.radians(float(s))


# ---------------------------------------------------------------------------
# exporters


def write_obj(z, stream) -> None:
    stream.write(f"# polar zonohedron n={z.params.n} theta={z.params.theta:.12g} rad\n")
    for v in z.vertices:
        stream.write("v %.12f %.12f %.12f\n" % (v[0], v[1], v[2]))
    for f in z.faces:
        a, b, d, c = (i + 1 for i in f.vertex_ids)
        stream.write(f"f {a} {b} {d} {c}\n")


def mesh_as_dict(z) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "n": z.params.n,
        "theta_rad": z.params.theta,
        "vertices": [[round(x, 15) for x in v] for v in z.vertices.tolist()],
        "faces": [
            {"zone": f.zone, "step": f.step, "vertex_ids": list(f.vertex_ids)}
            for f in z.faces
        ],
    }


def _zone_color(zone_index: int, n: int) -> str:
    if zone_index == 0:
        return "hsl(0, 85%, 55%)"  # the highlighted zone
    hue = round(360.0 * zone_index / n)
    return f"hsl({hue}, 60%, 70%)"


def write_svg(net, stream, zone_index: int | None = None, scale: float = 100.0) -> None:
    zones = net.zones if zone_index is None else (net.zones[zone_index],)
    xs = [p[0] for z in zones for quad in z.corners for p in quad]
    ys = [p[1] for z in zones for quad in z.corners for p in quad]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    pad = 0.05 * max(xmax - xmin, ymax - ymin, 1.0)
    x0, y0 = (xmin - pad) * scale, (ymin - pad) * scale
    w = (xmax - xmin + 2 * pad) * scale
    h = (ymax - ymin + 2 * pad) * scale

    def pt(p) -> tuple[float, float]:
        # SVG y grows downward; flip so the net appears as developed
        return p[0] * scale - x0, h - (p[1] * scale - y0)

    stream.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    stream.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {w:.6f} {h:.6f}">\n'
    )
    for zi, zone in enumerate(net.zones):
        if zone_index is not None and zi != zone_index:
            continue
        color = _zone_color(zi, net.n)
        for quad in zone.corners:
            points = " ".join("%.6f,%.6f" % pt(p) for p in quad)
            stream.write(
                f'<polygon points="{points}" fill="{color}" '
                f'stroke="black" stroke-width="0.5"/>\n'
            )
    ox, oy = pt((0.0, 0.0))
    stream.write(f'<circle cx="{ox:.6f}" cy="{oy:.6f}" r="3" fill="black"/>\n')
    stream.write("</svg>\n")


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _write_csv(path: str | None, header: list[str], rows: list[list]) -> None:
    stream, close = _open_out(path)
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if close:
            stream.close()


# ---------------------------------------------------------------------------
# subcommands


def cmd_build(args) -> int:
    z = build(Params(args.n, parse_theta(args.theta)))
    if args.obj:
        stream, close = _open_out(args.obj)
        try:
            write_obj(z, stream)
        finally:
            if close:
                stream.close()
    if args.json:
        stream, close = _open_out(args.json)
        try:
            json.dump(mesh_as_dict(z), stream, indent=1)
            stream.write("\n")
        finally:
            if close:
                stream.close()
    if not args.obj and not args.json:
        print(
            f"P({z.params.n}, {math.degrees(z.params.theta):g} deg): "
            f"{len(z.vertices)} vertices, {len(z.faces)} faces, "
            f"{len(z.edge_set())} edges"
        )
    return 0


def cmd_net(args) -> int:
    net = assemble_net(args.n, parse_theta(args.theta))
    stream, close = _open_out(args.svg)
    try:
        write_svg(net, stream, zone_index=args.zone)
    finally:
        if close:
            stream.close()
    return 0


def cmd_verify(args) -> int:
    rep = run_verification(args.n, parse_theta(args.theta), args.samples)
    doc = {"schema": SCHEMA_VERSION, **rep.as_dict()}
    if args.json:
        stream, close = _open_out(args.json)
        try:
            json.dump(doc, stream, indent=1)
            stream.write("\n")
        finally:
            if close:
                stream.close()
    if rep.passed:
        print(f"verify n={args.n} theta={args.theta}: pass")
        return 0
    print(f"verify n={args.n} theta={args.theta}: FAIL {rep.failures()}", file=sys.stderr)
    return 1


def _sweep_cell(cell: tuple[int, str, int]) -> list:
    n, theta_text, samples = cell
    theta = parse_theta(theta_text)
    zone = planar_zone(n, theta)
    alpha = zone.alpha
    worst = max_beta(zone, samples)
    overlaps = len(net_overlap_oracle(assemble_net(n, theta)))
    ok = worst <= alpha + 1e-9 and overlaps == 0
    return [
        n,
        theta_text,
        "%.9f" % math.degrees(alpha),
        "%.9f" % math.degrees(worst),
        "%.3e" % (alpha - worst),
        overlaps,
        "pass" if ok else "fail",
    ]


def cmd_sweep(args) -> int:
    thetas = [t.strip() for t in args.thetas.split(",") if t.strip()]
    cells = [
        (n, t, args.samples)
        for n in range(args.n_min, args.n_max + 1)
        for t in sorted(thetas, key=parse_theta)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_cell, cells, chunksize=4))
    else:
        rows = [_sweep_cell(c) for c in cells]
    header = ["n", "theta_deg", "alpha_deg", "max_beta_deg", "margin", "overlap_pairs", "pass"]
    _write_csv(args.csv, header, rows)
    return 0 if all(r[-1] == "pass" for r in rows) else 1


def cmd_crescent(args) -> int:
    ns: list[float] = []
    step = (args.n_max / args.n_min) ** (1.0 / (args.steps - 1))
    for i in range(args.steps):
        ns.append(args.n_min * step**i)
    rows = []
    for n in ns:
        L = crescent_mod.side_from_n(n)
        a = crescent_mod.alpha_from_side(L)
        b = crescent_mod.beta_from_side(L)
        rows.append(["%.6f" % n, "%.12f" % L, "%.12f" % a, "%.12f" % b, "%.12f" % (b / a)])
    _write_csv(args.csv, ["n", "L", "alpha_rad", "beta_rad", "ratio"], rows)
    return 0


def cmd_subtended(args) -> int:
    zone = planar_zone(args.n, parse_theta(args.theta))
    rows = [
        [i + 1, "%.9f" % math.degrees(b)]
        for i, b in enumerate(rhomb_subtended_angles(zone))
    ]
    _write_csv(args.csv, ["i", "beta_deg"], rows)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, required=True, help="number of generators (>= 3)")
    p.add_argument(
        "--theta",
        required=True,
        help="elevation angle: degrees by default, 'rad' suffix for radians",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zonet",
        description="Polar zonohedra, zone unfoldings, and non-overlap verification",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct the solid and export the mesh")
    _add_params(p)
    p.add_argument("--obj", help="write Wavefront OBJ to this path ('-' = stdout)")
    p.add_argument("--json", help="write JSON mesh to this path")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("net", help="render the unfolded net as SVG")
    _add_params(p)
    p.add_argument("--svg", required=True, help="output path ('-' = stdout)")
    p.add_argument("--zone", type=int, default=None, help="render only this zone")
    p.set_defaults(func=cmd_net)

    p = sub.add_parser("verify", help="run the verification suite for one (n, theta)")
    _add_params(p)
    p.add_argument("--json", help="write the JSON report to this path")
    p.add_argument("--samples", type=int, default=SAMPLES_PER_INTERVAL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify a whole parameter grid")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=32)
    p.add_argument("--thetas", default=DEFAULT_THETAS, help="comma-separated theta values")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--samples", type=int, default=SAMPLES_PER_INTERVAL)
    p.add_argument("--csv", help="output path ('-' = stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("crescent", help="beta/alpha ratio table over continuous n")
    p.add_argument("--n-min", type=float, default=3.0)
    p.add_argument("--n-max", type=float, default=1e4)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--csv", help="output path ('-' = stdout)")
    p.set_defaults(func=cmd_crescent)

    p = sub.add_parser("subtended", help="per-rhomb subtended angles from o")
    _add_params(p)
    p.add_argument("--csv", help="output path ('-' = stdout)")
    p.set_defaults(func=cmd_subtended)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"zonet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
