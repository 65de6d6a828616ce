"""Probe: strict Dhat-ach status of parity projections of conjugated d-ach sections."""

from superspace.calculus import apply, frame_derivation
from superspace.chirality import chirality_conditions, is_chiral, scalar_normal_form
from superspace.coeffring import generic_matrix
from superspace.connection import (
    exp_wz,
    generic_vector_superfield,
    induced_D,
    susy_connection,
)
from superspace.grassmann import U4

r = 2
V = generic_vector_superfield(1, r=r, deg=1)
conn = susy_connection(V)

A1p = conn.component(("p", 1))
A2p = conn.component(("p", 2))
print("A_{1'}(12) zero?", A1p.component(12).is_zero())
print("A_{2'}(12) zero?", A2p.component(12).is_zero())
print("A_{1'} masks:", sorted(m for m, c in A1p.terms.items() if c))

eV = exp_wz(V)
eVinv = exp_wz(-V)
seV = eV.parity_conjugate()

n1 = scalar_normal_form(*(generic_matrix(("n1", k), r, 1) for k in range(4)), mode="d-ach")
n2 = scalar_normal_form(*(generic_matrix(("n2", k), r, 1) for k in range(4)), mode="d-ach")

x1 = eVinv * n1 * eV
x2 = eVinv * n2 * seV
xe = x1.even_part()
xo = x2.odd_part()

for tag, s in (("x1 full", x1), ("x1 even", xe), ("x1 odd", x1.odd_part()),
               ("x2 full", x2), ("x2 odd", xo)):
    plain = [induced_D(conn, ("p", i), s).is_zero() for i in (1, 2)]
    twist = [induced_D(conn, ("p", i), s, conjugated=True).is_zero() for i in (1, 2)]
    print(f"{tag}: plain {plain} twisted {twist}")

m = xe + xo
flag, witness = is_chiral(m, "Dhat-ach", conn=conn)
print("m = xe + xo strict Dhat-ach?", flag)
if not flag:
    D1 = induced_D(conn, ("p", 1), xe)
    print("  D_{e_1'}(xe) nonzero masks:", sorted(k for k, c in D1.terms.items() if c))
    want = -(A1p.component(12) * xe.component(0) - xe.component(0) * A1p.component(12))
    print("  D(xe)[12] == -[A_{1'}(12), xe(0)]?", D1.component(12) == want)
