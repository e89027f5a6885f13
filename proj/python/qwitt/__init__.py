"""Exact arithmetic for deformed Witt and necklace rings.

Thin wrapper over the C++ core; all values cross the boundary as exact
coefficient strings in the variable q.
"""

try:
    from qwitt._qwitt import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _qwitt import *  # noqa: F401,F403  (in-tree build layout)
