"""Pseudo-codewords of binary LDPC codes: cone tests, cover realizations, edge zeta enumeration."""

__version__ = "0.1.0"
