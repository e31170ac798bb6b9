"""Finite group actions on polynomial algebras over prime fields."""
__version__ = "0.1.0"
