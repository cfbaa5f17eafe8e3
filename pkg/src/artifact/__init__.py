"""Exact-arithmetic engine for affine Deligne-Lusztig nonemptiness patterns
in split groups of semisimple rank 1 and 2."""

__version__ = "0.1.0"
