"""rslab: a desk-scale numerical laboratory for Rankin-Selberg L-functions.

The package instantiates, at computable scale, the objects behind standard
zero-free regions for the self-convolution L(s, pi x pi~): prime-ideal
sieves over Q and quadratic fields, unitary Hecke-eigenvalue sources
(trivial, Dirichlet characters, the discriminant cusp form), isobaric
auxiliary sums with their symbolic factorization and pole bookkeeping,
truncated Dirichlet-series evaluation with certified tails, a smoothed
Perron identity checked in both directions, the archimedean conductor
calculus of Weil-group parameters, and the algebra that turns the
upper/lower logarithmic-derivative templates into a zero-free width.
"""

__version__ = "0.1.0"
