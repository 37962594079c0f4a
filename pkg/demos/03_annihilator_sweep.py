"""Annihilator ideals, their dependence on the weight, and the sweep.

Run:  python3 demos/03_annihilator_sweep.py
"""

from residuum import (
    MonomialSeq,
    ann_independent_of_p,
    annihilator,
    current_independent_of_p,
    enumerate_annihilators,
    proof_weights,
    theorem_a_report,
)
from residuum.report import ideal_str

A = MonomialSeq(2, ((5, 0), (4, 1), (2, 2), (0, 3)))

print("The annihilator of the current is an intersection of pure-power")
print("ideals, one per surviving entry. Different weights can give")
print("incomparable annihilators:\n")
for label, w in (("1", (1, 1, 1, 1)), ("q", (2, 2, 1, 3)), ("r", (3, 3, 4, 5))):
    print(f"  weight {label}: {ideal_str(annihilator(A, w).gens)}")
print()

print("Sweeping all weights up to 6 per entry finds every possibility:")
found = enumerate_annihilators(A, 6)
for ideal, w in found:
    print(f"  {ideal_str(ideal.gens)}   first weight {list(w)}")
print(f"{len(found)} distinct annihilator ideals in total.\n")

print("The current (and the annihilator) is weight-independent exactly for")
print("regular sequences:")
reg = MonomialSeq(2, ((5, 0), (0, 3)))
for name, seq in (("(z1^5, z2^3)", reg), ("the 4-term sequence", A)):
    print(
        f"  {name}: current independent {current_independent_of_p(seq)}, "
        f"annihilator independent {ann_independent_of_p(seq)}"
    )
print()

print("A weight that puts every scaled generator on one compact facet")
print("witnesses the dependence (all nondegenerate indices survive):")
q = proof_weights(A, 1)
print(f"  witness weight: {q}")
print(f"  annihilator there: {ideal_str(annihilator(A, q).gens)}\n")

print("The annihilator always sits in an inclusion chain; the lower bound")
print("is a colon of the integral closure of the n-th power:")
rep = theorem_a_report(A, (2, 2, 1, 3))
print(f"  left  = {ideal_str(rep.left.gens)}")
print(f"  ann   = {ideal_str(rep.ann.gens)}")
print(f"  right = {ideal_str(rep.right.gens)}")
print(f"  left < ann (strict): {rep.left_strict}; ann <= right: {rep.right_included}")
