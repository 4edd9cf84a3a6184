"""Exact rank-r domino tableau combinatorics and Kazhdan-Lusztig cells of type B."""

try:
    from ._core import *  # installed layout
    from . import _core as _impl
except ImportError:  # development layout: the module sits next to the build tree
    from _core import *  # type: ignore
    import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
