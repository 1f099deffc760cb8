"""Exact degrees and images of rational maps via blowup algebras."""

__version__ = "0.1.0"
