"""Las Vegas N-Queens solver with state pruning and benchmark harness."""

__version__ = "0.1.0"
