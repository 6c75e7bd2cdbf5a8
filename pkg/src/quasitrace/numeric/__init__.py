"""Numeric verification layer (double precision)."""
