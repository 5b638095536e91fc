"""Exact toolkit for the VGIT of (2,4) complete intersections and its lattice-side checks.

Modules
-------
core           rationals, monomials, 1-PS, polynomials, truncated series
hm             Hilbert-Mumford indices of pencil and Hilbert points
walls          wall finder, destabilization certificates
singularities  Arnold / A_m recognition of plane curve germs
basin          Luna-slice weights and basins of attraction
lattice        discriminant forms, overlattices, boundary census
divisors       divisor-class bookkeeping in two bases
cli            command-line front end
"""

__version__ = "0.1.0"
