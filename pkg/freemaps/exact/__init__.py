"""Exact scalars, polynomials and trigonometric polynomials."""
