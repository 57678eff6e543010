"""Stateless HTTP service for the explorer UI.

All endpoints are GET; identical query strings yield byte-identical
responses.  An in-memory LRU keyed by the canonical query memoizes tiles.
Invalid parameters return 400 with the offending field; structural
precondition failures return 422 with the failing check.
"""

import json
import threading
from collections import OrderedDict

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import ENGINE, maps, raster, structure
from .cli import parse_complex
from .errors import InvalidParamsError, PreconditionError

CACHE_CAP = 64


class _TileCache:
    def __init__(self, cap=CACHE_CAP):
        self.cap = cap
        self._data = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                return self._data[key]
        return None

    def put(self, key, value):
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.cap:
                self._data.popitem(last=False)


def _bad(field, message):
    return Response(
        content=json.dumps({"error": "invalid-params", "field": field,
                            "message": message}),
        status_code=400, media_type="application/json")


def _precondition(err):
    return Response(
        content=json.dumps({"error": "precondition-failure", "check": err.check,
                            "details": err.details}),
        status_code=422, media_type="application/json")


class _MissingField(Exception):
    def __init__(self, name):
        super().__init__(name)
        self.field = name


def _q_complex(request, name, default=None):
    raw = request.query_params.get(name)
    if raw is None:
        if default is None:
            raise _MissingField(name)
        return default
    try:
        return parse_complex(raw)
    except Exception as e:
        raise ValueError(str(e)) from None


def _q_float(request, name, default):
    raw = request.query_params.get(name)
    if raw is None:
        return default
    return float(raw)


def _q_int(request, name, default):
    raw = request.query_params.get(name)
    if raw is None:
        return default
    return int(raw)


def create_app():
    app = FastAPI(title="blaschke-dynamics", version=ENGINE.split("/")[-1])
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["GET"],
                       allow_headers=["*"])
    cache = _TileCache()

    def canonical_key(kind, request):
        items = sorted(request.query_params.multi_items())
        return kind + "?" + "&".join(f"{k}={v}" for k, v in items)

    def render_response(grid, request):
        if request.query_params.get("format") == "json":
            return Response(content=raster.encode_meta(grid),
                            media_type="application/json")
        return Response(content=raster.encode_image(
            grid, palette=request.query_params.get("palette", "paper")),
            media_type="image/x-portable-pixmap")

    @app.get("/api/v1/health")
    def health():
        return Response(content="ok", media_type="text/plain")

    @app.get("/api/v1/dynamical")
    def dynamical(request: Request):
        key = canonical_key("dynamical", request)
        hit = cache.get(key)
        if hit is not None:
            return Response(content=hit[0], media_type=hit[1])
        try:
            a = _q_complex(request, "a")
            lam = _q_complex(request, "lambda")
            cx = _q_float(request, "cx", 0.0)
            cy = _q_float(request, "cy", 0.0)
            w = _q_float(request, "w", 3.0)
            res = _q_int(request, "res", 512)
            max_iter = _q_int(request, "maxIter", 2000)
            p = maps.MapParams.perturbed(a, lam)
            spec = raster.PlaneSpec(center=complex(cx, cy), width=w, resolution=res,
                                    max_iter=max_iter, plane_kind=raster.DYNAMICAL,
                                    params=p)
        except _MissingField as e:
            return _bad(e.field, "missing")
        except (ValueError, InvalidParamsError) as e:
            return _bad(_guess_field(str(e)), str(e))
        try:
            grid = raster.render_dynamical(spec)
        except PreconditionError as e:
            return _precondition(e)
        resp = render_response(grid, request)
        cache.put(key, (resp.body, resp.media_type))
        return resp

    @app.get("/api/v1/parameter")
    def parameter(request: Request):
        key = canonical_key("parameter", request)
        hit = cache.get(key)
        if hit is not None:
            return Response(content=hit[0], media_type=hit[1])
        try:
            a = _q_complex(request, "a")
            cx = _q_float(request, "cx", 0.0)
            cy = _q_float(request, "cy", 0.0)
            w = _q_float(request, "w", 1.4e-4)
            res = _q_int(request, "res", 256)
            max_iter = _q_int(request, "maxIter", 2000)
            spec = raster.PlaneSpec(center=complex(cx, cy), width=w, resolution=res,
                                    max_iter=max_iter, plane_kind=raster.PARAMETER,
                                    a=a)
        except _MissingField as e:
            return _bad(e.field, "missing")
        except (ValueError, InvalidParamsError) as e:
            return _bad(_guess_field(str(e)), str(e))
        grid = raster.render_parameter(spec)
        resp = render_response(grid, request)
        cache.put(key, (resp.body, resp.media_type))
        return resp

    @app.get("/api/v1/orbit")
    def orbit(request: Request):
        try:
            a = _q_complex(request, "a")
            lam = _q_complex(request, "lambda")
            x = _q_float(request, "x", None)
            y = _q_float(request, "y", None)
            if x is None or y is None:
                return _bad("x" if x is None else "y", "missing")
            max_iter = _q_int(request, "maxIter", 2000)
            p = maps.MapParams.perturbed(a, lam)
        except _MissingField as e:
            return _bad(e.field, "missing")
        except (ValueError, InvalidParamsError) as e:
            return _bad(_guess_field(str(e)), str(e))
        try:
            regions = structure.locate_regions(p, budget=max_iter)
        except PreconditionError as e:
            return _precondition(e)
        fate = structure.classify_orbit(complex(x, y), p, regions, max_iter,
                                        keep_orbit=True)
        return Response(content=json.dumps(fate.to_json(), separators=(",", ":")),
                        media_type="application/json")

    @app.get("/api/v1/critical")
    def critical(request: Request):
        try:
            a = _q_complex(request, "a")
            lam = _q_complex(request, "lambda", default=0j)
        except _MissingField as e:
            return _bad(e.field, "missing")
        except (ValueError, InvalidParamsError) as e:
            return _bad(_guess_field(str(e)), str(e))
        if not 0 < abs(a) < 1:
            return _bad("a", "need 0 < |a| < 1")
        if lam == 0:
            cm, cp = maps.unperturbed_criticals(a)
            doc = {
                "family": "unperturbed",
                "c_minus": [cm.real, cm.imag],
                "c_plus": [cp.real, cp.imag],
                "z0": [a.real, a.imag],
                "pole": [(1 / a.conjugate()).real, (1 / a.conjugate()).imag],
                "ringCriticals": [], "ringZeros": [],
            }
        else:
            try:
                p = maps.MapParams.perturbed(a, lam)
                cs = structure.critical_set(p)
            except PreconditionError as e:
                return _precondition(e)
            except (InvalidParamsError, RuntimeError) as e:
                return _bad("lambda", str(e))
            doc = {
                "family": "perturbed",
                "c_minus": [cs.c_minus.real, cs.c_minus.imag],
                "c_plus": [cs.c_plus.real, cs.c_plus.imag],
                "z0": [cs.z0.real, cs.z0.imag],
                "pole": [cs.pole_finite.real, cs.pole_finite.imag],
                "ringCriticals": [[z.real, z.imag] for z in cs.ring_criticals],
                "ringZeros": [[z.real, z.imag] for z in cs.zeros_ring],
                "maxResidual": max(cs.residuals.values()),
            }
        return Response(content=json.dumps(doc, separators=(",", ":")),
                        media_type="application/json")

    return app


def _guess_field(message):
    for field in ("resolution", "width", "lambda", "lam", "a", "res"):
        if field in message:
            return "res" if field == "resolution" else field
    return "query"
