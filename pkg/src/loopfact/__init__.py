"""Root-subgroup factorization of unitary matrix loops, specialized to SU(n).

The package is organized in layers:

* ``cartan`` -- exact type-A root system data and the finite Weyl group,
* ``affine_weyl`` -- the affine Weyl group, alcove walks and periodic
  reduced sequences with their flipped-root bookkeeping,
* ``loops`` -- Laurent-polynomial matrix algebra and the loop realization
  of the affine root data (elementary SU(2) blocks, root homomorphisms,
  conjugated embeddings),
* ``birkhoff`` -- triangular (Birkhoff) factorization machinery and block
  Toeplitz determinant evaluation,
* ``factor`` -- forward synthesis from root-subgroup coordinates, inverse
  peeling, and the three-factor decomposition of unitary loops,
* ``cli`` -- batch command-line interface over JSON file formats.
"""

from loopfact.config import RunConfig, DEFAULTS
from loopfact.cartan import CartanData, FiniteWeylElement, build_type_a
from loopfact.affine_weyl import AffineRoot, AffineWeylElement, ReducedSequence
from loopfact.loops import LaurentMatrix
from loopfact.birkhoff import TriangularFactorization

__version__ = "0.1.0"

__all__ = [
    "RunConfig",
    "DEFAULTS",
    "CartanData",
    "FiniteWeylElement",
    "build_type_a",
    "AffineRoot",
    "AffineWeylElement",
    "ReducedSequence",
    "LaurentMatrix",
    "TriangularFactorization",
    "__version__",
]
