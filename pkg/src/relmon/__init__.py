"""Relative monads, relative distributive laws and their Beck correspondences."""

__version__ = "0.1.0"
