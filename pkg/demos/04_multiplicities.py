"""Weighted multiplicities: exact values and undetermined cases.

Run:  python3 demos/04_multiplicities.py
"""

from residuum import MonomialSeq, multiplicity_ep
from residuum.report import index_str

A = MonomialSeq(2, ((5, 0), (4, 1), (2, 2), (0, 3)))

print("Pairing the current with the generator differentials produces a")
print("point mass whose weight is sum_I C_I |det A_I|. When every")
print("coefficient is forced to 1 the value is exact:\n")
for label, w in (("1", (1, 1, 1, 1)), ("q", (2, 2, 1, 3)), ("s", (2, 1, 1, 2))):
    m = multiplicity_ep(A, w)
    print(f"  weight {label}: multiplicity {m.exact}   ({m.method})")
print()

print("With weight r = (3,3,4,5) three entries share one facet and only")
print("one linear relation constrains their coefficients; the value is")
print("genuinely undetermined by the exact theory:\n")
m = multiplicity_ep(A, (3, 3, 4, 5))
print(f"  exact value: {m.exact}")
for rel in m.constraints:
    terms = " + ".join(
        f"{d} C{index_str(i)}" for d, i in zip(rel.scaled_dets, rel.indices)
    )
    coeffs, rhs = rel.reduced()
    reduced = " + ".join(
        f"{d} C{index_str(i)}" for d, i in zip(coeffs, rel.indices)
    )
    print(f"  constraint: {terms} = {rel.rhs}")
    print(f"  reduced:    {reduced} = {rhs}")
print()

print("Sometimes the constraint system still pins the value down. For the")
print("segment (2,0),(1,1),(0,2) at weight one the weighted sum of unknown")
print("coefficients IS the relation's left side, so the total is forced:")
B = MonomialSeq(2, ((2, 0), (1, 1), (0, 2)))
for w in ((1, 1, 1), (1, 2, 1), (2, 1, 1)):
    m = multiplicity_ep(B, w)
    print(f"  weight {w}: multiplicity {m.exact}   ({m.method})")
print()
print("All three weights give 4: the multiplicity can be weight-independent")
print("even though the current and its annihilator are not.")
