"""Exact cut-generating-function toolkit.

Thin convenience layer over the C++ core: every operation speaks the JSON
wire formats (rationals as "p/q" strings), and these wrappers accept and
return parsed Python dicts.
"""

import json as _json

from latcut._core import (  # noqa: F401
    LatcutError,
    __version__,
    schema_version,
)
from latcut import _core


def _dumps(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def classify_scene(scene):
    return _json.loads(_core.classify_scene(_dumps(scene)))


def covering_fraction(scene):
    return _json.loads(_core.covering_fraction(_dumps(scene)))["fraction"]


def lifting_region(scene):
    return _json.loads(_core.lifting_region(_dumps(scene)))


def make_cut(tableau, scene):
    return _json.loads(_core.make_cut(_dumps(tableau), _dumps(scene)))


def check_minimal(pi, b=""):
    return _json.loads(_core.check_minimal(_dumps(pi), b))


def certify_extreme(pi, b=""):
    return _json.loads(_core.certify_extreme(_dumps(pi), b))


def gmi(f):
    return _json.loads(_core.gmi(f))


def trivial_lift(psi, points):
    return _json.loads(_core.trivial_lift(_dumps(psi), _dumps(points)))


def canonical_scene(kind, seed=0):
    return _json.loads(_core.canonical_scene(kind, seed))


def validate_cut(cut, tableau, y_radius=5, w_radius=5, max_lp_calls=100000):
    return _json.loads(
        _core.validate_cut(_dumps(cut), _dumps(tableau), y_radius, w_radius,
                           max_lp_calls))


def render_svg(obj):
    return _core.render_svg(_dumps(obj))
