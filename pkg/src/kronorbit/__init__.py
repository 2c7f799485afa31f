"""kronorbit: exact linear algebra for Kronecker-quiver orbit categories.

Subpackages compute reflection functors and the square root of the
Auslander-Reiten translate, graded Homs in triangulated orbit categories with
Calabi-Yau checks, Hilbert series and Gorenstein parameters of Veronese
rings, cohomology tables on small projective spaces, and graded matrix
factorizations of the nodal curve.
"""

from .fields import GF, QQ, FieldSpec

__all__ = ["FieldSpec", "QQ", "GF"]
__version__ = "0.1.0"
