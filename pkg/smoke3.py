"""Smoke checks for connection.py."""
from fractions import Fraction

from superspace.coeffring import GaussRational, GR_I
from superspace.grassmann import Superfield, U4, generic_superfield
from superspace.calculus import FRAME_LABELS, apply, frame_derivation, frame_parity, sigma
from superspace.forms import evaluate_right, to_coordinate_components
from superspace.connection import (
    HybridConnection, WZ_MASKS, connection_component_formulas, covariant_derivative,
    covariant_derivative_form, curvature_commutator, curvature_components,
    curvature_contraction, curvature_form, curvature_form_from_components,
    dual_derivative, exp_wz, gauge_transform, generic_gauge,
    generic_vector_superfield, induced_D, induced_D_alt, induced_D_alt_conj,
    induced_D_prime, invert_even, is_wz_gauge, left_connection_counterexample,
    left_curvature_tensoriality_report, parity_conjugate_connection,
    susy_connection, theta_components, theta_components_from,
)

ok = 0

def check(name, cond):
    global ok
    if not cond:
        raise SystemExit(f"FAIL: {name}")
    ok += 1
    print(f"  ok {name}")


# --- tiny hand example: V = v theta^1 thetabar^1, constant scalar v ---
v = GaussRational(Fraction(3, 1))
V0 = Superfield.monomial(
    __import__("superspace.coeffring", fromlist=["MatrixCoeff"]).MatrixCoeff(
        [[__import__("superspace.coeffring", fromlist=["PolyScalar"]).PolyScalar.const(v)]]
    ),
    ("theta1", "thetabar1"),
    U4,
)
check("wz gauge accepts hand example", is_wz_gauge(V0))
conn0 = susy_connection(V0)
tb1 = Superfield.odd("thetabar1", U4)
check("A_{1'} = -v thetabar1", conn0.component(("p", 1)) == -tb1.scale(v))
check("A_{2'} = 0", not conn0.component(("p", 2)))
th0 = theta_components(V0)
check("Theta_11 = v", th0[(1, 1)] == Superfield.scalar(v, U4))
for key in ((1, 2), (2, 1), (2, 2)):
    check(f"Theta_{key} = 0", not th0[key])
mi4 = GaussRational(Fraction(0), Fraction(-3, 4))
check("A_0 = -(i/4)v", conn0.component(("x", 0)) == Superfield.scalar(mi4, U4))
check("A_3 = (i/4)v", conn0.component(("x", 3)) == Superfield.scalar(-mi4, U4))
check("A_1 = A_2 = 0", not conn0.component(("x", 1)) and not conn0.component(("x", 2)))

# --- generic WZ V: transcription matches operator computation ---
for seed in (1, 2):
    V = generic_vector_superfield(seed, r=2, deg=1)
    check(f"V[{seed}] wz", is_wz_gauge(V))
    conn = susy_connection(V)
    formula_conn, formula_theta = connection_component_formulas(V)
    th = theta_components(V)
    for key in ((1, 1), (1, 2), (2, 1), (2, 2)):
        check(f"V[{seed}] Theta{key} transcription", th[key] == formula_theta[key])
    check(f"V[{seed}] connection transcription", conn == formula_conn)
    # double-expression for Theta: (e'' e' e^-V)e^V - (e' par-conj e^-V)(e'' e^V)
    em, ep = exp_wz(-V), exp_wz(V)
    for a in (1, 2):
        for b in (1, 2):
            eap = frame_derivation(("p", a), U4)
            ebp = frame_derivation(("pp", b), U4)
            lhs = apply(ebp, apply(eap, em)) * ep
            rhs = apply(eap, em.parity_conjugate()) * apply(ebp, ep)
            check(f"V[{seed}] Theta{(a,b)} alt", th[(a, b)] == lhs - rhs)

V = generic_vector_superfield(1, r=2, deg=1)
conn = susy_connection(V)
em, ep = exp_wz(-V), exp_wz(V)
check("exp(V)exp(-V) = 1", ep * em == Superfield.one(U4, 2))

# nabla_{e_mu} = (i/2) sum sigmabreve {nabla', nabla''} on a generic section
s = generic_superfield("sec", gens=U4, r=2, deg=1, shape=(1, 2))
from superspace.calculus import sigma_half
for mu in range(4):
    acc = Superfield.zero(U4, 1, 2)
    for a in (1, 2):
        for b in (1, 2):
            q = (sigma_half(mu, a, b) * GR_I).scale(Fraction(1, 2))
            if q:
                anticomm = covariant_derivative(conn, ("p", a), covariant_derivative(conn, ("pp", b), s)) \
                    + covariant_derivative(conn, ("pp", b), covariant_derivative(conn, ("p", a), s))
                acc = acc + anticomm.scale(q)
    check(f"nabla_x{mu} from anticommutators", acc == covariant_derivative(conn, ("x", mu), s))

# nabla_{e_a'} s = (e_a'(s e^-V)) e^V
for a in (1, 2):
    eap = frame_derivation(("p", a), U4)
    check(f"nabla_{{e_{a}'}} via exp", covariant_derivative(conn, ("p", a), s) == apply(eap, s * em) * ep)

# --- curvature: fermionic directions are flat as tensor components ---
comps = curvature_components(conn)
fermionic = [("p", 1), ("p", 2), ("pp", 1), ("pp", 2)]
for I in fermionic:
    for J in fermionic:
        # odd-odd pair: the graded-antisymmetric combination -F_IJ - F_JI
        check(f"flat {I}{J}", not (comps[(I, J)] + comps[(J, I)]))
# the raw table entry F_{1'1''} is -Theta_11/2, nonzero for generic V
check("raw F_{1'1''} nonzero", bool(comps[(("p", 1), ("pp", 1))]))

Fform = curvature_form(conn)
check("F = dA - A^A matches component assembly", Fform == curvature_form_from_components(conn))

# contraction identity over all 64 pairs, on homogeneous generic sections
sE = generic_superfield("sE", gens=U4, r=2, deg=1, shape=(1, 2), parity=0)
sO = generic_superfield("sO", gens=U4, r=2, deg=1, shape=(1, 2), parity=1)
allok = True
for I in FRAME_LABELS:
    for J in FRAME_LABELS:
        for sec in (sE, sO):
            if curvature_contraction(conn, I, J, sec) != curvature_commutator(conn, I, J, sec):
                allok = False
                print("MISMATCH", I, J, sec.parity())
check("contraction identity, 128 cases", allok)

# --- gauge covariance ---
g = generic_gauge(5, r=2, deg=1)
ginv = invert_even(g)
check("g g^-1 = 1", g * ginv == Superfield.one(U4, 2))
conn_g = gauge_transform(conn, g)
# the tensor statement is form-level; raw table entries are basis bookkeeping
check(
    "F^{A^g} = g^-1 F g (2-form)",
    curvature_form(conn_g) == curvature_form(conn).left_mul(ginv).right_mul(g),
)
# component shadow: the graded-antisymmetrized combinations conjugate
comps_g = curvature_components(conn_g)
allok = True
for I in FRAME_LABELS:
    for J in FRAME_LABELS:
        sgn = -1 if (frame_parity(I) and frame_parity(J)) else 1
        G = comps[(I, J)].scale(GaussRational(sgn)) - comps[(J, I)]
        Gg = comps_g[(I, J)].scale(GaussRational(sgn)) - comps_g[(J, I)]
        if Gg != ginv * G * g:
            allok = False
            print("GAUGE MISMATCH", I, J)
check("antisymmetrized F^g components conjugate, 64 pairs", allok)

# gauge of covariant derivative: nabla^g_xi s = (nabla_xi(s g^-1)) g
for lab in (("x", 2), ("p", 1), ("pp", 2)):
    lhs = covariant_derivative(conn_g, lab, s)
    rhs = covariant_derivative(conn, lab, s * ginv) * g
    check(f"gauge rule for nabla_{lab}", lhs == rhs)

# --- dual connection pairing ---
t = generic_superfield("tcol", gens=U4, r=2, deg=1, shape=(2, 1))
for lab in (("x", 0), ("p", 2), ("pp", 1)):
    lhs = apply(frame_derivation(lab, U4), s * t)
    rhs = covariant_derivative(conn, lab, s) * t + s.twisted_by(frame_parity(lab)) * dual_derivative(conn, lab, t)
    check(f"pairing rule at {lab}", lhs == rhs)

# --- induced D ---
m = generic_superfield("mat", gens=U4, r=2, deg=1)
mE, mO = m.even_part(), m.odd_part()

# D restricted to scalars is d
f_sc = generic_superfield("fsc", gens=U4, r=1, deg=1)
fid = Superfield.one(U4, 2).scale(GaussRational(0)) + f_sc * Superfield.one(U4, 2)
for lab in (("x", 1), ("p", 1), ("pp", 2)):
    check(
        f"D = d on scalars at {lab}",
        induced_D(conn, lab, fid) == apply(frame_derivation(lab, U4), fid),
    )

# alternative expressions
for a in (1, 2):
    for mm in (mE, mO):
        check(f"D_{{e_{a}'}} alt p={mm.parity()}", induced_D(conn, ("p", a), mm) == induced_D_alt(V, a, mm))
        check(
            f"conj D_{{e_{a}'}} alt p={mm.parity()}",
            induced_D(conn, ("p", a), mm, conjugated=True) == induced_D_alt_conj(V, a, mm),
        )
for b in (1, 2):
    check(
        f"D_{{e_{b}''}} = e_{b}''",
        induced_D(conn, ("pp", b), m) == apply(frame_derivation(("pp", b), U4), m),
    )

# product rule (4): D(m1 m2) = (D m1) m2 + (-1)^{p(eI)p(m1)} m1 (twisted D m2)
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
        check(
            f"product rule {lab} p(m1)={p1}",
            induced_D(conn, lab, m1 * m2f) == rhs,
        )

# D' product rule: D'(m1 m2) = (D' m1) m2 + (twisted m1)(D' m2)
for lab in (("x", 0), ("p", 2)):
    lhs = induced_D_prime(conn, lab, m * m2f)
    rhs = induced_D_prime(conn, lab, m) * m2f + m.twisted_by(frame_parity(lab)) * induced_D_prime(conn, lab, m2f)
    check(f"D' product rule {lab}", lhs == rhs)

# compatibility (6), contracted with e_I:
#   nabla_I(s m) = (nabla_I s) m + twist_I(s) D_I m
#                  + twist_I(s m) (A_I - (-1)^{p_I p_m} conj^{p_m} A_I)
for mm in (mE, mO):
    pm = mm.parity()
    for lab in (("x", 3), ("p", 1), ("pp", 2)):
        pI = frame_parity(lab)
        lhs = covariant_derivative(conn, lab, s * mm)
        AI = conn.component(lab)
        corr = AI - AI.parity_conjugate() if pm else AI.scale(GaussRational(0))
        if pm and pI:
            corr = AI + AI.parity_conjugate()
        rhs = (
            covariant_derivative(conn, lab, s) * mm
            + s.twisted_by(pI) * induced_D(conn, lab, mm)
            + (s * mm).twisted_by(pI) * corr
        )
        check(f"compatibility (6) p={pm} at {lab}", lhs == rhs)

# --- parity conjugate connection = connection of parity-conjugate V ---
check(
    "conj connection = connection of conj V",
    parity_conjugate_connection(conn) == susy_connection(V.parity_conjugate()),
)

# --- counterexample ---
rep = left_connection_counterexample()
check("super line defect = -2 b theta", rep["matches"])
check("defect nonzero", bool(rep["defect"]))

# --- left curvature tensoriality report (record only) ---
lrep = left_curvature_tensoriality_report()
print(f"  left-curvature first-slot linearity outcome: {lrep['all_linear']}")
details = {k: v for k, v in lrep.items() if k != "all_linear"}
fails = [k for k, v in details.items() if not v]
print(f"  failing cases: {len(fails)} of {len(details)}")
if fails:
    evens = [k for k in fails if k[0] == 0]
    print(f"    with even multiplier: {len(evens)}; odd multiplier: {len(fails) - len(evens)}")

print(f"\nall {ok} checks passed")
