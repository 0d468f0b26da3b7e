"""Legendrian front calculus: invariants, moves, isotopy search and Cost."""

try:
    from ._legfront import *  # noqa: F401,F403  (installed layout)
    from . import _legfront as _impl
except ImportError:  # flat build-tree layout: extension sits next to the package
    from _legfront import *  # noqa: F401,F403
    import _legfront as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
