"""Exact Selberg-type integrals dressed with Schur and monomial symmetric polynomials."""
