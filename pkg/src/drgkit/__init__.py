"""drgkit: exact workbench for finitely presented graded algebras.

Subpackages cover exact scalars over QQ and QQ(zeta_8), free algebras with
degree-bounded noncommutative Groebner bases, finite-group gradings and the
dual-reflection search, quadratic duals with Frobenius/Koszul certificates,
a commutative Groebner toolbox, and the point/line scheme geometry pipeline.
"""

__version__ = "0.1.0"
