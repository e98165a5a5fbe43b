"""Two-pipeline construction of p-adic triple product L-functions.

Subpackages:
  padic_core     precision-tracked Z_p/Q_p arithmetic and truncated Iwasawa algebras
  qexp_hida      q-expansion pipeline: Hecke operators, ordinary projector, L-values
  quaternion_bal definite-quaternion pipeline: class sets, Brandt matrices, theta elements
  local_reps     Whittaker/Kirillov data and truncated local-integral oracles
  local_factors  closed-form L/epsilon/gamma factors and local zeta values
  cm_anticyclo   CM theta families, anticyclotomic theta elements, factorization checks
  cli            batch driver and report emission
"""

__version__ = "0.1.0"
