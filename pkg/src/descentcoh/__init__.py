"""Descent 1-cocycles, group factorizations and non-abelian H^1 for finite groups and monoids."""
__version__ = "0.1.0"
