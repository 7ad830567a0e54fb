"""Exact modular cohomology of small group algebras.

Computes conjugacy data, the stable center of kG, per-centralizer cohomology
ring models, the cup product on the non-negative part of Tate-Hochschild
cohomology, and verifies finite presentations against bundled reference data.
"""

from .linalg import fp_backend_name

__version__ = "0.1.0"

__all__ = ["fp_backend_name", "__version__"]
