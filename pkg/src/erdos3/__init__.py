"""Exact computations around the matching problem for 3-uniform families.

Submodules: ``core`` (families and I/O), ``matching`` (exact matching number),
``shifting`` (stable families), ``extremal`` (closed forms and thresholds),
``search`` (exact m(n, s) at small scale), ``weights`` (trace weights),
``board`` (the 11-vertex board check) and ``cli``.
"""

__version__ = "0.1.0"
