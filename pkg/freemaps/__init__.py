"""Exact certificates for free maps on tori.

A map is free when its first and second derivatives are linearly
independent at every point.  For the rotation ansatz this reduces to a
single trigonometric determinant that must never vanish.

"""


def main():
    """Define the entrypoint."""
    import sys
    from . import cli

    sys.exit(cli.run())
