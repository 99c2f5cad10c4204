"""Bundled fixture data."""
