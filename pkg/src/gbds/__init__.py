"""Finite generalized Boolean dynamical systems, their algebras and groupoids."""
