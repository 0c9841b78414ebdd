"""Complex structures on products of circle bundles over flag varieties.

Subpackages and modules, bottom up: ``gaussian`` and ``linalg`` (exact
arithmetic), ``rootdata``, ``standardize``, ``hyperbolicity``,
``realization``, ``flow``, ``cohomology``, ``merofield`` and ``workbench``.
"""

__version__ = "0.1.0"
