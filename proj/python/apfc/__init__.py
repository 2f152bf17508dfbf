"""Amplitude phase-field-crystal solver with an analytic elastic-inclusion oracle."""

try:
    from ._apfc import *  # noqa: F401,F403  (installed wheel layout)
    from ._apfc import __version__  # noqa: F401
except ImportError:
    from _apfc import *  # noqa: F401,F403  (in-tree build: module on sys.path)
    from _apfc import __version__  # noqa: F401
