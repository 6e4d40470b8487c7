"""Exact computer algebra for degree-p Artin-Schreier symbol algebras.

Subpackages and modules:
  fieldkernel  exact towers of fields over GF(p^k)
  cycalg       symbol algebras, reduced characteristic coefficients,
               rewrite identities, zero-divisor search
  linkage      norm-witness search and the constructive inseparable
               linkage procedure with self-verifying witnesses
  valuation    adic analysis, division certificates, non-linkage
               certificates
  essdim       the trichotomy classifier for cyclically linked pairs
  cli          the command-line front end
"""

__version__ = "0.1.0"
