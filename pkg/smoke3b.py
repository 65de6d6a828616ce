"""Timing probe for the connection blocks: find what is slow."""

import time

from superspace.calculus import FRAME_LABELS, apply, frame_derivation, frame_parity
from superspace.coeffring import GaussRational
from superspace.connection import (
    covariant_derivative, covariant_derivative_form, curvature_components,
    curvature_contraction, curvature_commutator, curvature_form,
    gauge_transform, generic_gauge, generic_vector_superfield, induced_D,
    induced_D_alt, induced_D_alt_conj, induced_D_prime, invert_even,
    left_connection_counterexample, left_curvature_tensoriality_report,
    parity_conjugate_connection, susy_connection,
)
from superspace.grassmann import U4, Superfield, generic_superfield

T0 = time.time()


def mark(label):
    print(f"[{time.time() - T0:8.2f}s] {label}", flush=True)


V = generic_vector_superfield(1, r=2, deg=1)
conn = susy_connection(V)
mark("connection built")

s = generic_superfield("sec", gens=U4, r=2, deg=1, shape=(1, 2))
comps = curvature_components(conn)
mark("curvature components (64)")

sE = generic_superfield("sE", gens=U4, r=2, deg=1, shape=(1, 2), parity=0)
sO = generic_superfield("sO", gens=U4, r=2, deg=1, shape=(1, 2), parity=1)
bad = 0
for I in FRAME_LABELS:
    for J in FRAME_LABELS:
        for sec in (sE, sO):
            if curvature_contraction(conn, I, J, sec) != curvature_commutator(conn, I, J, sec):
                bad += 1
mark(f"contraction identity 128 cases, bad={bad}")

Fform = curvature_form(conn)
mark("curvature form")

g = generic_gauge(5, r=2, deg=1)
ginv = invert_even(g)
mark("gauge + inverse")

conn_g = gauge_transform(conn, g)
mark("gauge transform")

ok = curvature_form(conn_g) == Fform.left_mul(ginv).right_mul(g)
mark(f"form-level gauge covariance, ok={ok}")

m = generic_superfield("mat", gens=U4, r=2, deg=1)
mE, mO = m.even_part(), m.odd_part()

t1 = time.time()
for a in (1, 2):
    for mm in (mE, mO):
        lhs = induced_D(conn, ("p", a), mm)
        rhs = induced_D_alt(V, a, mm)
        assert lhs == rhs, (a, mm.parity())
mark("induced_D alt x4")

for a in (1, 2):
    for mm in (mE, mO):
        lhs = induced_D(conn, ("p", a), mm, conjugated=True)
        rhs = induced_D_alt_conj(V, a, mm)
        assert lhs == rhs, (a, mm.parity())
mark("induced_D alt conj x4")

m2f = generic_superfield("mat2", gens=U4, r=2, deg=1)
for lab in (("x", 0), ("p", 1), ("pp", 1)):
    pI = frame_parity(lab)
    for m1 in (mE, mO):
        p1 = m1.parity()
        rhs = induced_D(conn, lab, m1) * m2f
        inner = induced_D(conn, lab, m2f, conjugated=bool(p1))
        term = m1 * inner
        if pI and p1:
            term = -term
        rhs = rhs + term
        assert induced_D(conn, lab, m1 * m2f) == rhs
mark("product rule x6")

for lab in (("x", 0), ("p", 2)):
    lhs = induced_D_prime(conn, lab, m * m2f)
    rhs = induced_D_prime(conn, lab, m) * m2f + m.twisted_by(frame_parity(lab)) * induced_D_prime(conn, lab, m2f)
    assert lhs == rhs
mark("D' product rule x2")

from superspace.forms import Form

for mm in (mE, mO):
    lhs = covariant_derivative_form(conn, s * mm)
    nabla_s = covariant_derivative_form(conn, s)
    rhs = nabla_s.right_mul(mm)
    Dm = {lab: induced_D(conn, lab, mm) for lab in FRAME_LABELS}
    rhs = rhs + Form.from_components(Dm, U4).left_mul(s)
    if mm.is_odd():
        corr = {lab: (conn.component(lab) - conn.component(lab).parity_conjugate()) for lab in FRAME_LABELS}
        rhs = rhs + Form.from_components(corr, U4).left_mul(s * mm)
    assert lhs == rhs, mm.parity()
mark("compatibility (6) x2")

assert parity_conjugate_connection(conn) == susy_connection(V.parity_conjugate())
mark("conj connection")

rep = left_connection_counterexample()
assert rep["matches"] and bool(rep["defect"])
mark("counterexample")

lrep = left_curvature_tensoriality_report()
mark(f"tensoriality report, all_linear={lrep['all_linear']}")

print("done")
