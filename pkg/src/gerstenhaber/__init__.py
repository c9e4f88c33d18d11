"""Exact computer algebra for Gerstenhaber algebras and their bicoalgebras.

The package builds, over exact rationals: shuffle products and their quotient
spaces, the tensor / symmetric / shuffle coalgebras with their codifferentials
and classical coboundaries, the bracket extension to the shuffle quotient of a
Gerstenhaber algebra, the packet bicoalgebra with its two compatible
costructures, and the combined coboundary on packet cochains together with
exact cocycle and coboundary decisions.  The concrete algebra of homogeneous
polyvector fields and a scalar 3-cochain on vector fields are included, with a
command line front end (``python -m gerstenhaber.cli`` or the installed
``gerstenhaber`` script).
"""

__version__ = "0.1.0"
