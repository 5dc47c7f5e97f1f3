"""Geodesic unit-disk boundary covering for simple polygons."""

try:
    from ._geocover import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _geocover import *  # noqa: F401,F403  (in-tree build layout)
