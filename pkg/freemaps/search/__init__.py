"""Numerical search for free loops, with exact certification."""
