#!/usr/bin/env python3
"""Reproduce the exceptional-case certification.

Sweeps every prime power q <= 1024, printing the field sizes where the trace
of Frobenius is not pinned down by the two group exponents, the corollary
variant where the group structures themselves stay ambiguous, and the handful
of exception quadruples that survive the parity test.
"""

from hassecount import enumerate_exceptions, exceptional_q_set, parity_filter

full = exceptional_q_set(1024)
print("trace-ambiguity exceptional q (q <= 1024):", sorted(full))

corollary = exceptional_q_set(1024, corollary=True)
print("group-structure exceptional q:            ", sorted(corollary))

print("\nall exception quadruples:")
for q in sorted(full):
    for r in enumerate_exceptions(q):
        print(f"  q={r.q:3d}  M={r.M:2d}  N={r.N:2d}  t={r.t:3d}  t'={r.t_prime:3d}")

print("\nquadruples surviving the cofactor parity test at t':")
for q in sorted(full):
    for r in parity_filter(enumerate_exceptions(q)):
        mp = (q + 1 - r.t_prime) // r.M
        np_ = (q + 1 + r.t_prime) // r.N
        print(f"  q={r.q:3d}  (M,N,t,t') = ({r.M},{r.N},{r.t},{r.t_prime})  cofactors {mp}, {np_}")
