"""Matrix-product code workbench: Hermitian hulls, classification and search over GF(q²)."""

__version__ = "0.1.0"
