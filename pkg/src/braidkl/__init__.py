"""braidkl: exact Kazhdan-Lusztig polynomials of braid matroids and the
combinatorics behind their leading coefficients (series-parallel matroids,
triangular cacti, deserts, Husimi graphs, Abel-polynomial identities)."""

__version__ = "0.1.0"

from .exact import IntPoly, ResourceCapError
from .klcore import KlTable, inv_kl_poly_braid, kl_poly_braid

__all__ = [
    "IntPoly",
    "KlTable",
    "ResourceCapError",
    "__version__",
    "inv_kl_poly_braid",
    "kl_poly_braid",
]
