"""Crystal graphs for gl(m|n) over Z2-graded alphabets."""

__version__ = "0.1.0"
