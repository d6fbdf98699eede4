"""Exact arithmetic for the gap structure of <k*alpha> point sets."""

try:
    from ._threegap import *  # noqa: F401,F403
    from ._threegap import __version__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree builds put the module on sys.path
    from _threegap import *  # noqa: F401,F403
    from _threegap import __version__  # noqa: F401
