"""Exact computations for compact complex homogeneous spaces with torsion.

Subpackages and modules:

* ``rootsys``  classical root systems in the e-basis
* ``painted``  painted Dynkin diagrams, Koszul forms, c1 = 0 systems
* ``intlat``   integer lattices: SL completion, Smith/Hermite forms, kernels
* ``exforms``  invariant exterior calculus on Lie algebras, CYT and Strominger checks
* ``ssq``      integral cohomology of SU(4)/U(1) via the Borel spectral sequence
* ``cli``      command-line front end
"""

from .errors import DomainError, MathAssertionError, PreconditionError

__all__ = ["DomainError", "MathAssertionError", "PreconditionError"]
__version__ = "0.1.0"
