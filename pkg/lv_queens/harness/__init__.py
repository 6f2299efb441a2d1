"""Experiment harness: seeded trial campaigns and their aggregation."""
