"""Dubrovnik polynomials of rational knots and links."""
