"""
Data layer for the Las Vegas N-Queens toolkit.

Top-level modules
-----------------
models.py   Pydantic domain models shared by solvers, analysis, harness and export.
"""
