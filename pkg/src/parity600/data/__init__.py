"""Literal tables of the 60-ray / 75-basis system, used as golden data."""
