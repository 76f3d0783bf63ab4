"""Freeness certificates and the reproduction registry."""
