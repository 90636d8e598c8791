"""prymal: exact-arithmetic verification engine.

Recomputes, over the rationals and with zero tolerance, the intersection
tables of the 27 special surfaces in an abelian fivefold attached to a
tetragonal curve, their E6 lattice structure, the Hilbert polynomials of the
associated surfaces via Riemann-Roch on symmetric powers, the etale
double-cover pushforward, and the Hodge numbers of primal cohomology.
"""

__version__ = "0.1.0"
