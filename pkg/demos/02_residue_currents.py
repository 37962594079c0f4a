"""Which entries of a weighted residue current survive, and what they are.

Run:  python3 demos/02_residue_currents.py
"""

from residuum import MonomialSeq, p_essential_indices, residue_current
from residuum.report import index_str

A = MonomialSeq(2, ((5, 0), (4, 1), (2, 2), (0, 3)))

print("A weighted residue current has one entry per n-element subset of")
print("the sequence. An entry survives exactly when the scaled exponents")
print("sit on a common compact facet and the exponent matrix is")
print("nonsingular.\n")

for label, weight in (("1", (1, 1, 1, 1)), ("q", (2, 2, 1, 3)), ("r", (3, 3, 4, 5))):
    ess = p_essential_indices(A, weight)
    names = ", ".join(index_str(i) for i, _ in ess)
    print(f"weight {label} = {weight}: essential indices {names}")
print()

print("Surviving entries are monomial currents. The exponent alpha is the")
print("sum of the UNSCALED generator exponents in the index; the weight")
print("only decides which entries survive:\n")
cur = residue_current(A, (2, 2, 1, 3))
for e in cur.entries:
    if e.vanishes:
        print(f"  {index_str(e.index)}: 0   ({e.reason})")
    else:
        mono = " ^ ".join(f"dbar[1/z{i + 1}^{a}]" for i, a in enumerate(e.alpha))
        kind = "known, = 1" if e.coeff.kind == "known" else f"{e.coeff.kind}"
        print(f"  {index_str(e.index)}: sign {e.sign:+d}, {mono}, coefficient {kind}")
print()

print("In one variable the weight moves the surviving entry around:")
B = MonomialSeq(1, ((1,), (2,)))
for j in (1, 2, 3, 4):
    cur = residue_current(B, (j, 1))
    shape = [
        "0" if e.vanishes else f"dbar[1/z^{e.alpha[0]}]" for e in cur.entries
    ]
    print(f"  weight ({j},1): ({', '.join(shape)})")
