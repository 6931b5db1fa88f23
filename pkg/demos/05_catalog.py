"""Walkthrough: the identity catalog and the verification driver.

Every shipped identity is a pair of side builders checked coefficient by
coefficient under sampled admissible parameters (exact strategy), with a
high-precision numeric fallback where exact truncation is impossible.
"""

from qident import catalog, sample_params, verify_one, verify_suite
from qident.registry import with_injected_fault

print(f"catalog holds {len(catalog())} identities\n")

# verify one identity at a sampled specialization
assignment = sample_params("phi65", seed=7, count=1)[0]
report = verify_one("phi65", assignment, order=30)
print("phi65:", report.status, "at", assignment.formatted())

# a filtered slice of the suite
for r in verify_suite("ft*", order=30, samples=1):
    print(f"{r.id:6s} {r.strategy:8s} {r.status}")

# defect detection: a planted (1 + q^13) factor is pinned to exponent 13
faulty = with_injected_fault("qbinom", 13)
rep = verify_one(faulty, sample_params("qbinom", 1, 1)[0], order=30)
print("\nplanted defect ->", rep.status, "at q^", rep.mismatch_exponent)
