import time, sys
sys.setrecursionlimit(100000)
from superspace.coeffring import GaussRational
from superspace.grassmann import Superfield, generic_superfield
from superspace.calculus import FRAME_LABELS, frame_parity
from superspace.connection import (
    generic_vector_superfield, exp_wz, susy_connection, generic_gauge,
    gauge_transform, invert_even, curvature_form, curvature_components)
from superspace.forms import wedge, exterior_d, Form

t0 = time.perf_counter()
V = generic_vector_superfield(1, 2)
conn = susy_connection(V)
comps = curvature_components(conn)
print(f"setup+comps: {time.perf_counter()-t0:.2f}s")

def stats(f):
    n = 0; mx = 0
    for mask, mc in f.terms.items():
        for row in mc.entries:
            for p in row:
                t = len(p.terms); n += t; mx = max(mx, t)
    return n, mx

for lab in FRAME_LABELS[:3]:
    A = conn.component(lab)
    print(f"A[{lab}]: masks={len(A.terms)} terms(total,max)={stats(A)}")

t0 = time.perf_counter()
g = generic_gauge(1, 2)
ginv = invert_even(g)
print(f"gauge build: {time.perf_counter()-t0:.2f}s  g terms={stats(g)} ginv terms={stats(ginv)}")

t0 = time.perf_counter()
conn_g = gauge_transform(conn, g)
print(f"gauge_transform: {time.perf_counter()-t0:.2f}s")
for lab in FRAME_LABELS[:3]:
    A = conn_g.component(lab)
    print(f"Ag[{lab}]: masks={len(A.terms)} terms(total,max)={stats(A)}")

t0 = time.perf_counter()
F = curvature_form(conn)
print(f"curvature_form(conn): {time.perf_counter()-t0:.2f}s  words={len(F.terms)}")
for w in list(F.terms)[:2]:
    print(f"  F[{w}]: terms={stats(F.terms[w])}")

t0 = time.perf_counter()
Fg = curvature_form(conn_g)
print(f"curvature_form(conn_g): {time.perf_counter()-t0:.2f}s  words={len(Fg.terms)}")

t0 = time.perf_counter()
rhs = F.left_mul(ginv).right_mul(g)
print(f"conjugation: {time.perf_counter()-t0:.2f}s")
t0 = time.perf_counter()
ok = Fg == rhs
print(f"compare: {time.perf_counter()-t0:.2f}s  -> {ok}")
