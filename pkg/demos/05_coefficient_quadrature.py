"""Numeric estimation of the coefficients the exact theory leaves open.

Run:  python3 demos/05_coefficient_quadrature.py
"""

from residuum import (
    MonomialSeq,
    closed_form_power_integral,
    multiplicity_ep,
    numeric_coefficients,
    radial_power_integral,
    validate_coffe_numeric,
)
from residuum.report import index_str

print("The quadrature kernel is anchored by a closed form: the plane")
print("integral of |s|^(2(N-1)) / (1+|s|^(2N))^p equals pi/((p-1)N).")
for N, p in ((1, 2), (3, 2), (6, 4)):
    value, err, cells = radial_power_integral(N, p)
    exact = closed_form_power_integral(N, p)
    print(f"  N={N}, p={p}: {value:.12f} vs {exact:.12f}  ({cells} cells)")
print()

B = MonomialSeq(2, ((2, 0), (1, 1), (0, 2)))
print("For the segment (2,0),(1,1),(0,2) at weight one all three entries")
print("share a facet with chart exponents (0,1,2); their coefficients are")
print("strictly between 0 and 1 and symmetric under reversing the segment:")
coeffs = numeric_coefficients(B, (1, 1, 1))
for idx, nc in sorted(coeffs.items()):
    print(f"  C{index_str(idx)} = {nc.estimate:.9f}  (+- {nc.abs_error:.1e})")
print()

print("They satisfy the facet relation 2C + 4C + 2C = 4:")
v = validate_coffe_numeric(B, (1, 1, 1))
print(f"  residual {v.max_residual:.3e}\n")

m = multiplicity_ep(B, (1, 1, 1), numeric=coeffs)
print(f"Folding the estimates into the multiplicity: {m.estimate:.9f}")
print(f"(exact value {m.exact}, error bound {m.abs_error:.1e})\n")

A = MonomialSeq(2, ((5, 0), (4, 1), (2, 2), (0, 3)))
print("The undetermined weight-r case of the 4-term sequence, numerically:")
coeffs = numeric_coefficients(A, (3, 3, 4, 5))
for idx, nc in sorted(coeffs.items()):
    print(f"  C{index_str(idx)} = {nc.estimate:.9f}")
vr = validate_coffe_numeric(A, (3, 3, 4, 5))
print(f"  facet relation residual {vr.max_residual:.3e}")
total = sum(
    abs_det * coeffs[idx].estimate
    for rel in vr.facets
    for idx, abs_det in [(i, d) for i, d in zip(rel.relation.indices, rel.relation.unscaled_dets)]
)
print(f"  numeric multiplicity estimate: {total:.9f}\n")

print("In three variables the per-facet relation is an open question; the")
print("experimental tensor quadrature reports residuals without judging:")
C = MonomialSeq(3, ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)))
v3 = validate_coffe_numeric(C, (1, 1, 1, 1), experimental_n3=True)
for f in v3.facets:
    print(f"  facet {f.relation.facet_normal}: residual {f.residual:.2e} "
          f"(error bound {f.error_bound:.1e})")
