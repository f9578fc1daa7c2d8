"""Sign-action quotients of products of three elliptic curves: fixed points, nodes and fundamental groups."""

__version__ = "0.1.0"
