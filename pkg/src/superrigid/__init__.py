"""Exact-arithmetic workbench for superalgebra structures: Grassmann jets,
odd Poisson brackets, multilinear super maps, a catalog of small algebras,
and graded-Lie admissibility checks."""

__version__ = "0.1.0"
