"""Finite Gamma-semigroups and Q-fuzzy ideal theory, checked by exhaustive enumeration."""
