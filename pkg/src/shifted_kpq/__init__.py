"""Shifted tableaux and K-theoretic Schur P- and Q-functions.

Submodules:

* ``algebra``: exact polynomials in ``x``, ``y`` and ``beta`` with integer coefficients.
* ``shapes``: strict partitions, shifted skew shapes and ribbons.
* ``tableaux``: set-valued tableaux, plane partitions and bar tableaux.
* ``genfun``: generating polynomials GP, GQ, gp, gq, jp, jq and skew variants.
* ``bender_knuth``: the Bender-Knuth involution on bar tableaux.
* ``identities``: Cauchy identities, Pieri coefficients and structure constants.
* ``suite``: the full invariant battery.
* ``cli``: command-line front end.
"""

from .genfun import genfun, genfun_one_var, is_symmetric
from .shapes import SkewShape, shifted_diagram, strict_partition
from .tableaux import BarTableau, PlanePartition, SetValuedTableau, enumerate_tableaux

__all__ = [
    "BarTableau", "PlanePartition", "SetValuedTableau", "SkewShape",
    "enumerate_tableaux", "genfun", "genfun_one_var", "is_symmetric",
    "shifted_diagram", "strict_partition",
]
