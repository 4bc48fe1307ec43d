"""Structural analysis and exact satisfiability for linear CNF formulas.

Thin package wrapper around the compiled ``_lincnf`` extension. When the
package is installed the extension lives inside it; during in-tree testing
the extension sits on ``PYTHONPATH`` next to the build directory, hence the
fallback import.
"""

try:
    from ._lincnf import *  # noqa: F401,F403
    from ._lincnf import __version__  # noqa: F401
except ImportError:  # in-tree build: extension not packaged yet
    from _lincnf import *  # noqa: F401,F403
    from _lincnf import __version__  # noqa: F401
