"""Two-factor integral operators on products of complex unit balls.

Thin re-export of the compiled extension. Installed wheels place the
extension inside this package; in a plain build tree it sits on
``PYTHONPATH`` as a top-level module.
"""

try:
    from ._frops import *  # noqa: F401,F403
    from ._frops import __doc__  # noqa: F401
except ImportError:  # build-tree layout
    from _frops import *  # noqa: F401,F403
    from _frops import __doc__  # noqa: F401
