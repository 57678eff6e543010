"""Command-line interface.

Subcommands: render-dyn, render-param, classify, find-case, detect-rings,
verify, serve.  Exit codes: 0 success, 1 domain error, 2 usage error.
Complex literals parse as ``RE{+|-}IMi`` with scientific notation
(``-1.9e-6+3.15e-5i``); pure-real (``1e-6``) and pure-imaginary (``0.5i``)
forms are accepted, as is ``j`` for the unit.
"""

import argparse
import json
import math
import os
import re
import sys

import numpy as np

from . import ENGINE, maps, raster, structure
from .accel import set_workers
from .errors import InvalidParamsError, PreconditionError

_COMPLEX_PROBE = re.compile(r"^[+-]?(\d|\.\d|i$|j$)[\d.eE+\-ij]*$")


def parse_complex(text):
    """Parse 'RE+IMi' / 'RE' / 'IMi' literals ('j' also accepted)."""
    s = str(text).strip().replace(" ", "").lower().replace("i", "j")
    try:
        z = complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"cannot parse complex literal {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise argparse.ArgumentTypeError(f"non-finite complex literal {text!r}")
    return z


def format_complex(z):
    return f"{z.real:g}{z.imag:+g}i"


def _provenance(args):
    # worker count deliberately omitted: results are schedule-independent
    # and provenance must be byte-identical across worker counts
    out = {"engine": ENGINE, "seed": getattr(args, "seed", None)}
    for k, v in sorted(vars(args).items()):
        if k in ("func", "workers"):
            continue
        out[k] = format_complex(v) if isinstance(v, complex) else v
    return out


def _write_outputs(grid, args):
    payload = raster.encode_image(grid, palette=args.palette)
    if args.out:
        with open(args.out, "wb") as f:
            f.write(payload)
    meta = json.loads(raster.encode_meta(grid, min_area=args.min_component_px))
    meta["provenance"] = _provenance(args)
    blob = json.dumps(meta, separators=(",", ":")).encode("ascii")
    if args.meta:
        with open(args.meta, "wb") as f:
            f.write(blob)
    if not args.out and not args.meta:
        sys.stdout.buffer.write(payload)
    else:
        print(json.dumps({"out": args.out, "meta": args.meta,
                          "ambiguousPx": meta["ambiguousPx"]}))


def cmd_render_dyn(args):
    p = maps.MapParams.perturbed(args.a, args.lam)
    spec = raster.PlaneSpec(center=args.center, width=args.width,
                            resolution=args.res, max_iter=args.maxiter,
                            r_escape=args.rescape, plane_kind=raster.DYNAMICAL,
                            params=p, supersample=args.supersample)
    grid = raster.render_dynamical(spec)
    _write_outputs(grid, args)
    return 0


def cmd_render_param(args):
    spec = raster.PlaneSpec(center=args.center, width=args.width,
                            resolution=args.res, max_iter=args.maxiter,
                            r_escape=args.rescape, plane_kind=raster.PARAMETER,
                            a=args.a)
    grid = raster.render_parameter(spec)
    _write_outputs(grid, args)
    return 0


def cmd_classify(args):
    p = maps.MapParams.perturbed(args.a, args.lam)
    regions = structure.locate_regions(p, budget=args.maxiter)
    fate = structure.classify_orbit(args.z, p, regions, args.maxiter,
                                    keep_orbit=args.orbit)
    doc = fate.to_json()
    doc["provenance"] = _provenance(args)
    print(json.dumps(doc, separators=(",", ":")))
    return 0


def cmd_find_case(args):
    from . import experiments
    if args.case == "a" and args.a.imag == 0 and args.center is None:
        report = experiments.caseA_real_search(args.a.real, lam_hi=args.lam_hi,
                                               resolution=args.res)
    else:
        center = args.center if args.center is not None else args.near
        if center is None:
            raise InvalidParamsError("find-case needs --center/--near for this mode")
        spec = raster.PlaneSpec(center=center, width=args.width, resolution=64,
                                plane_kind=raster.PARAMETER, a=args.a)
        report = experiments.find_case(args.a, args.case, spec,
                                       resolution=args.res)
    doc = report.to_json()
    doc["provenance"] = _provenance(args)
    print(json.dumps(doc, separators=(",", ":")))
    return 0


def cmd_detect_rings(args):
    from . import experiments
    bands = experiments.detect_rings(args.a, args.rho_max, n_radii=args.n_radii,
                                     n_angles=args.n_angles)
    doc = {"a": format_complex(args.a), "rhoMax": args.rho_max,
           "bands": [b.to_json() for b in bands],
           "provenance": _provenance(args)}
    text = json.dumps(doc, separators=(",", ":"))
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    print(text)
    return 0


def cmd_verify(args):
    from . import verification
    report = verification.verify_all(only=args.only, seed=args.seed,
                                     goldens_path=args.goldens)
    text = json.dumps(report, separators=(",", ":"))
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    print(text)
    ok = all(c["status"] in ("pass", "skipped") for c in report["criteria"])
    return 0 if ok else 1


def cmd_serve(args):
    import uvicorn

    from .server import create_app
    port = int(os.environ.get("BLASCHKE_PORT", args.port))
    uvicorn.run(create_app(), host=args.host, port=port, log_level="warning")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="blaschke",
                                 description="Singularly perturbed Blaschke product dynamics")
    ap.add_argument("--workers", type=int, default=None, help="numba thread count")
    ap.add_argument("--seed", type=int, default=0, help="rng seed recorded in provenance")
    sub = ap.add_subparsers(dest="command", required=True)

    common_render = dict(center=("--center", parse_complex, 0j),
                         width=("--width", float, 3.0),
                         res=("--res", int, 1024),
                         maxiter=("--maxiter", int, 2000),
                         rescape=("--rescape", float, 10.0))

    def add_render_flags(p):
        for name, (flag, typ, default) in common_render.items():
            p.add_argument(flag, dest=name, type=typ, default=default)
        p.add_argument("--out", default=None, help="PPM output path")
        p.add_argument("--meta", default=None, help="JSON metadata path")
        p.add_argument("--palette", default="paper", choices=raster.PALETTES)
        p.add_argument("--min-component-px", type=int, default=4)

    p = sub.add_parser("render-dyn", help="render a dynamical-plane grid")
    p.add_argument("--a", type=parse_complex, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True)
    p.add_argument("--supersample", action="store_true")
    add_render_flags(p)
    p.set_defaults(func=cmd_render_dyn)

    p = sub.add_parser("render-param", help="render a parameter-plane grid")
    p.add_argument("--a", type=parse_complex, required=True)
    add_render_flags(p)
    p.set_defaults(func=cmd_render_param)

    p = sub.add_parser("classify", help="classify one orbit")
    p.add_argument("--a", type=parse_complex, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True)
    p.add_argument("--z", type=parse_complex, required=True)
    p.add_argument("--maxiter", type=int, default=2000)
    p.add_argument("--orbit", action="store_true", help="include the orbit points")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("find-case", help="search for an escape-case parameter")
    p.add_argument("--a", type=parse_complex, required=True)
    p.add_argument("--case", choices=("a", "b", "c"), required=True)
    p.add_argument("--center", type=parse_complex, default=None)
    p.add_argument("--near", type=parse_complex, default=None)
    p.add_argument("--width", type=float, default=2e-5)
    p.add_argument("--lam-hi", type=float, default=1e-4)
    p.add_argument("--res", type=int, default=1024)
    p.set_defaults(func=cmd_find_case)

    p = sub.add_parser("detect-rings", help="detect parameter-plane ring bands")
    p.add_argument("--a", type=parse_complex, required=True)
    p.add_argument("--rho-max", type=float, default=7e-5)
    p.add_argument("--n-radii", type=int, default=48)
    p.add_argument("--n-angles", type=int, default=96)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_detect_rings)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--only", default=None, help="substring filter on criterion names")
    p.add_argument("--out", default=None)
    p.add_argument("--goldens", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=8321)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)
    return ap


_COMPLEX_FLAGS = ("--lambda", "--a", "--z", "--center", "--near")


def _join_negative_values(argv):
    """Glue '--lambda -1.9e-6+...' into '--lambda=-...' so argparse does not
    read a negative complex literal as an option."""
    out = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in _COMPLEX_FLAGS and i + 1 < len(argv):
            nxt = argv[i + 1]
            if nxt.startswith("-") and _COMPLEX_PROBE.match(nxt.replace("-", "", 1)):
                out.append(f"{tok}={nxt}")
                skip = True
                continue
        out.append(tok)
    return out


def main(argv=None):
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = ap.parse_args(_join_negative_values(list(argv)))
    if args.workers:
        set_workers(args.workers)
    np.random.seed(args.seed)
    try:
        return args.func(args)
    except PreconditionError as e:
        print(json.dumps({"error": "precondition-failure", "check": e.check,
                          "details": e.details}), file=sys.stderr)
        return 1
    except (InvalidParamsError, ValueError, RuntimeError) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
