"""Logging, regime presets and series file I/O shared by the walk modules."""
