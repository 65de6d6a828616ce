"""Smoke checks for forms.py and susy.py before formal tests."""
from fractions import Fraction

from superspace.coeffring import GaussRational, GR_ONE, GR_I, GR_TWO_I
from superspace.grassmann import Superfield, U4, U8, generic_superfield
from superspace.calculus import (
    FRAME_LABELS, frame_derivation, standard_frame, sigma, apply,
)
from superspace.forms import (
    Form, wedge, exterior_d, evaluate_right, dx, dtheta, dthetabar,
    d_superfield, to_coordinate_components,
)
from superspace.susy import SusyParams, finite_susy, linearize, susy_commute_check

ok = 0

def check(name, cond):
    global ok
    if not cond:
        raise SystemExit(f"FAIL: {name}")
    ok += 1
    print(f"  ok {name}")

one = Superfield.one(U4)

# --- e^I(e_J) = delta_IJ over all 64 pairs ---
for K in FRAME_LABELS:
    eK = Form.basis(K, U4)
    for J in FRAME_LABELS:
        val = evaluate_right(eK, frame_derivation(J, U4))
        want = one if J == K else Superfield.zero(U4)
        check(f"e^{K}(e_{J})", val == want)

# --- de^{a'} = de^{b''} = 0 ---
for lab in (("p", 1), ("p", 2), ("pp", 1), ("pp", 2)):
    check(f"d e^{lab} = 0", not exterior_d(Form.basis(lab, U4)))

# --- de^mu = -2i sum sigma^mu e^{a'} ^ e^{b''} ---
for mu in range(4):
    got = exterior_d(Form.basis(("x", mu), U4))
    wantf = Form.zero(U4, 2)
    for a in (1, 2):
        for b in (1, 2):
            w = wedge(Form.basis(("p", a), U4), Form.basis(("pp", b), U4))
            c = sigma(mu, a, b) * GaussRational(Fraction(0), Fraction(-2))
            wantf = wantf + w.right_mul(Superfield.scalar(c, U4))
    check(f"d e^x{mu} structure", got == wantf)

# --- d o d = 0 on a generic scalar superfield ---
f = generic_superfield(101, gens=U4, r=1, deg=1)
check("d(df) = 0", not exterior_d(d_superfield(f)))

# --- wedge symmetry ---
e0 = Form.basis(("x", 0), U4)
e1 = Form.basis(("x", 1), U4)
o1 = Form.basis(("p", 1), U4)
o2 = Form.basis(("pp", 2), U4)
check("e0^e1 = -e1^e0", wedge(e0, e1) == -wedge(e1, e0))
check("o1^o2 = +o2^o1", wedge(o1, o2) == wedge(o2, o1))
check("o1^o1 != 0", bool(wedge(o1, o1)))
check("e0^e0 = 0", not wedge(e0, e0))
check("e0^o1 = -o1^e0", wedge(e0, o1) == -wedge(o1, e0))

# --- coefficient crossing: (e^0 f) ^ (e^1 g) = e^0^e^1 (fg); odd line picks sign
fe = generic_superfield(7, gens=U4, r=1, deg=1, parity=1)
ge = generic_superfield(8, gens=U4, r=1, deg=1)
lhs = wedge(e0.right_mul(fe), e1.right_mul(ge))
rhs = wedge(e0, e1).right_mul(fe * ge)
check("(e0 f)^(e1 g) = e0^e1 fg", lhs == rhs)
lhs2 = wedge(o1.right_mul(fe), o2.right_mul(ge))
rhs2 = wedge(o1, o2).right_mul(fe.parity_conjugate() * ge)
check("(o1 f)^(o2 g) crossing sign", lhs2 == rhs2)

# --- contraction of wedges: (e_I,e_J) <- (e^K ^ e^L) ---
def pair_eval(I, J, K, L):
    w = wedge(Form.basis(K, U4), Form.basis(L, U4))
    return evaluate_right(w, frame_derivation(I, U4), frame_derivation(J, U4))

m2 = Superfield.one(U4).scale(GaussRational(Fraction(-2), Fraction(0)))
check("(o1,o1) <- o1^o1 = -2", pair_eval(("p", 1), ("p", 1), ("p", 1), ("p", 1)) == m2)
check("(e0,e1) <- e0^e1 = 1", pair_eval(("x", 0), ("x", 1), ("x", 0), ("x", 1)) == one)
check("(e1,e0) <- e0^e1 = -1", pair_eval(("x", 1), ("x", 0), ("x", 0), ("x", 1)) == -one)
# full (-1)^{pIpJ} delta_IK delta_JL - delta_IL delta_JK sweep
import itertools
from superspace.calculus import frame_parity
allok = True
for I, J, K, L in itertools.product(FRAME_LABELS, repeat=4):
    got = pair_eval(I, J, K, L)
    coef = 0
    if I == K and J == L:
        coef += -1 if (frame_parity(I) & frame_parity(J)) else 1
    if I == L and J == K:
        coef -= 1
    want = Superfield.one(U4).scale(GaussRational(Fraction(coef), Fraction(0))) if coef else Superfield.zero(U4)
    if got != want:
        allok = False
        print("MISMATCH", I, J, K, L, got, want)
        break
check("4096 pair contractions", allok)

# --- evaluation is left O-linear in the argument: alpha(f xi) = f alpha(xi)
alpha = d_superfield(generic_superfield(9, gens=U4, r=1, deg=1))
xi = frame_derivation(("p", 1), U4)
for par in (0, 1):
    hf = generic_superfield(10 + par, gens=U4, r=1, deg=1, parity=par)
    lhs = evaluate_right(alpha, xi.left_mul(hf))
    want = hf * evaluate_right(alpha, xi)
    check(f"alpha(f xi) = f alpha(xi), p(f)={par}", lhs == want)

# --- dx round trip ---
for mu in range(4):
    comps = to_coordinate_components(dx(mu, U4))
    for k, v in comps.items():
        if k == ("dx", mu):
            check(f"dx{mu} comp {k}", v == one)
        else:
            check(f"dx{mu} comp {k} zero", not v)

# e^mu expressed in coordinate differentials matches its definition
for mu in range(4):
    emu = Form.basis(("x", mu), U4)
    comps = to_coordinate_components(emu)
    rebuilt = Form.zero(U4, 1)
    for a in (1, 2):
        rebuilt = rebuilt + dtheta(a, U4).right_mul(comps[("dtheta", a)])
        rebuilt = rebuilt + dthetabar(a, U4).right_mul(comps[("dthetabar", a)])
        rebuilt = rebuilt + dx(a - 1, U4).right_mul(comps[("dx", a - 1)])
    for mu2 in (2, 3):
        rebuilt = rebuilt + dx(mu2, U4).right_mul(comps[("dx", mu2)])
    check(f"e^x{mu} coordinate rebuild", rebuilt == emu)

# --- susy ---
p = SusyParams("g")
pp = SusyParams("gp", xi=("xia1", "xia2"), etabar=("etaa1", "etaa2"))

th1 = Superfield.odd("theta1", U4)
img = finite_susy(th1, p)
xi1 = Superfield.odd("xi1", img.gens)
check("g(theta1) = theta1 + xi1", img == th1.extend_universe(img.gens) + xi1)

# ring homomorphism on a generic product
f1 = generic_superfield(11, gens=U4, r=2, deg=1)
f2 = generic_superfield(12, gens=U4, r=2, deg=1)
check("g(f1 f2) = g(f1) g(f2)", finite_susy(f1 * f2, p) == finite_susy(f1, p) * finite_susy(f2, p))

# first-order coefficients match the generators
Qs = standard_frame(U4)
fg = generic_superfield(13, gens=U4, r=1, deg=1)
lin = linearize(finite_susy(fg, p), p)
check("lin xi1 = Q1 f", lin["xi1"] == apply(Qs["Q1"], fg))
check("lin xi2 = Q2 f", lin["xi2"] == apply(Qs["Q2"], fg))
check("lin etabar1 = -Qbar1 f", lin["etabar1"] == -apply(Qs["Qbar1"], fg))
check("lin etabar2 = -Qbar2 f", lin["etabar2"] == -apply(Qs["Qbar2"], fg))
ling = linearize(finite_susy(fg, pp), pp)
check("lin' xi1 = e1' f", ling["xia1"] == apply(Qs["e1p"], fg))
check("lin' etabar1 = -e1'' f", ling["etaa1"] == -apply(Qs["e1pp"], fg))

# commutation in both orders
check("g and g' commute", susy_commute_check(fg, p, pp))

# composition: g_{(xi,eta)} with zero shift params acts as identity when the
# parameter names never appear (all terms free of them)
img2 = finite_susy(fg, p)
back = {m: c for m, c in img2.terms.items()}
# restricting the image to U4 must reproduce f plus parameter terms; the
# parameter-free part of g(f) is f itself
xi_bits = 0
for n in p.names:
    xi_bits |= 1 << img2.gens.index(n)
base_part = Superfield(img2.gens, 1, 1, {m: c for m, c in img2.terms.items() if not (m & xi_bits)})
check("param-free part of g(f) is f", base_part.restrict_universe(U4) == fg)

print(f"\nall {ok} checks passed")
