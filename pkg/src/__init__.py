"""Homological fiberedness and homology cylinder invariants package."""
