"""Thin subsets of groups: balleans, m-thinness, partitions, colorings, constructions."""

__version__ = "0.1.0"
