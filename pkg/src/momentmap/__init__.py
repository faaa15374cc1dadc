"""Complex moments of polynomial conformal maps, their Jacobian, and inversion."""

__version__ = "0.1.0"
