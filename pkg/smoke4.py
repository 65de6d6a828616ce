"""Smoke checks for chirality.py against operator oracles."""
import sys, time

sys.path.insert(0, "src")
t0 = time.time()

from superspace.calculus import apply, frame_derivation, sigma, theta_sigma_thetabar
from superspace.coeffring import GR_I, GaussRational, MatrixCoeff, PolyScalar, grat, generic_matrix
from superspace.connection import (
    exp_wz,
    generic_even_vector_superfield,
    generic_vector_superfield,
    induced_D,
    susy_connection,
)
from superspace.chirality import (
    CHIRAL_MODES,
    azumaya_normal_form,
    chirality_conditions,
    componentwise_D_formula,
    conjugation_characterization,
    coordinate_coefficients,
    is_chiral,
    scalar_normal_form,
)
from superspace.grassmann import Superfield, U4, U8, generic_superfield
from superspace.susy import SusyParams, finite_susy

ok = 0
def check(cond, msg):
    global ok
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)
    ok += 1

Z = Superfield.zero

# --- scalar normal form: spec examples -------------------------------
f = scalar_normal_form(PolyScalar.variable(1), 0, 0, 0, mode="d-ch")
check(f.component(1 | 8).entries[0][0].constant_term() == GR_I, "x1 theta1 tbar2 comp = i")
check(not f.component(15), "x1 top = 0")
check(is_chiral(f, "d-ch")[0], "x1 snf chiral")

z = scalar_normal_form(0, 0, 0, 0, mode="d-ch")
check(z == Z(), "all-zero snf = 0")

# x^0 + i theta sigma^0 thetabar is d-chiral
xf = Superfield.coordinate(0) + theta_sigma_thetabar(0).scale(GR_I)
check(is_chiral(xf, "d-ch")[0], "x0 + i th s0 thb d-chiral")
check(not is_chiral(xf, "d-ach")[0], "... not d-antichiral")

# constants chiral in every mode
cst = Superfield.one(r=2)
V0 = generic_vector_superfield(1)
conn0 = susy_connection(V0)
for mode in CHIRAL_MODES:
    c = conn0 if "Dhat" in mode else None
    check(is_chiral(cst, mode, c)[0], f"const chiral {mode}")

# generic scalar nf passes predicate, both modes, matrix comps
for seed in (1, 2, 3):
    comps = [generic_matrix(("snf", seed, k), 2, 1) for k in range(4)]
    fch = scalar_normal_form(*comps, mode="d-ch")
    fach = scalar_normal_form(*comps, mode="d-ach")
    check(is_chiral(fch, "d-ch")[0], f"snf ch {seed}")
    check(is_chiral(fach, "d-ach")[0], f"snf ach {seed}")
    check(not is_chiral(fch, "d-ach")[0], f"snf ch not ach {seed}")
    # round trip: free components survive
    check(fch.component(0) == comps[0] and fch.component(1) == comps[1]
          and fch.component(2) == comps[2] and fch.component(3) == comps[3],
          f"snf ch free comps {seed}")
    check(fach.component(4) == comps[1] and fach.component(8) == comps[2]
          and fach.component(12) == comps[3], f"snf ach free comps {seed}")

# witness: first failing condition value
bad = Superfield(U4, 1, 1, {4: MatrixCoeff.identity(1)})
flag, wit = is_chiral(bad, "d-ch")
check(not flag and wit is not None and wit, "witness nonzero")
e1pp = frame_derivation(("pp", 1), U4)
check(wit == apply(e1pp, bad), "witness = first condition value")

# contract errors
try:
    is_chiral(cst, "Dhat-ch")
    check(False, "missing connection must raise")
except ValueError:
    check(True, "missing connection raises")
try:
    is_chiral(cst, "nonsense")
    check(False, "unknown mode must raise")
except ValueError:
    check(True, "unknown mode raises")

print(f"scalar block ok ({ok} checks, {time.time()-t0:.2f}s)")

# --- componentwise D formula vs induced_D ----------------------------
t1 = time.time()
for seed in (1, 2):
    V = generic_vector_superfield(seed)
    conn = susy_connection(V)
    m = generic_superfield(("cw", seed), r=2, deg=1)
    me, mo = m.even_part(), m.odd_part()
    for kind in ("p", "pp"):
        sgn = 1 if kind == "p" else -1
        for idx in (1, 2):
            lab = (kind, idx)
            for par, part in ((0, me), (1, mo)):
                lhs = componentwise_D_formula(m, conn, lab, par)
                rhs = induced_D(conn, lab, part)
                if sgn < 0:
                    rhs = -rhs
                check(lhs == rhs, f"cw formula {lab} par{par} seed{seed}")
check(componentwise_D_formula(Z(U4, 2, 2), conn0, ("p", 1), 0) == Z(U4, 2, 2), "cw of 0 = 0")
print(f"componentwise block ok ({ok} checks, {time.time()-t1:.2f}s)")

# --- azumaya normal form ---------------------------------------------
t2 = time.time()
for seed in (1, 2, 3):
    V = generic_vector_superfield(seed)
    Ve = generic_even_vector_superfield(seed)
    conn = susy_connection(V)
    conne = susy_connection(Ve)
    comps = [generic_matrix(("anf", seed, k), 2, 1) for k in range(4)]
    mch = azumaya_normal_form(*comps, conn, mode="Dhat-ch")
    mache = azumaya_normal_form(*comps, conne, mode="Dhat-ach")
    check(is_chiral(mch, "Dhat-ch", conn)[0], f"anf ch passes {seed}")
    check(is_chiral(mache, "Dhat-ach", conne)[0], f"anf ach passes even V {seed}")
    check(is_chiral(azumaya_normal_form(*comps, conne, mode="Dhat-ch"),
                    "Dhat-ch", conne)[0], f"anf ch passes even V {seed}")
    check(is_chiral(mch, "weak-Dhat-ch", conn)[0], f"anf ch weak {seed}")
    check(is_chiral(mache, "weak-Dhat-ach", conne)[0], f"anf ach weak {seed}")
    # Dhat-ch coincides with plain chirality for these connections
    check(is_chiral(mch, "d-ch")[0], f"anf ch is d-ch {seed}")
    check(mch == scalar_normal_form(*comps, mode="d-ch"), f"anf ch = snf {seed}")
    # conjugation characterization agrees
    check(conjugation_characterization(mache, Ve), f"conj char true {seed}")
    check(not conjugation_characterization(mch + generic_superfield(("off", seed), r=2, deg=1), V),
          f"conj char false on generic {seed}")
    # odd-part-bearing V obstructs the antichiral side: there is no
    # antichiral section with this free bottom at all, and the residue of
    # the even part is the commutator with the thetabar-pair component of
    # the antiholomorphic frame coefficient.
    mach = azumaya_normal_form(*comps, conn, mode="Dhat-ach")
    ok9, wit9 = is_chiral(mach, "Dhat-ach", conn)
    check(not ok9 and wit9 is not None, f"gaugino V obstructs ach {seed}")
    D1 = induced_D(conn, ("p", 1), mach.even_part())
    A12 = conn.component(("p", 1)).component(12)
    m0c = mach.component(0)
    check(D1.component(12) == -(A12 * m0c - m0c * A12),
          f"obstruction witness identity {seed}")
print(f"azumaya build block ok ({ok} checks, {time.time()-t2:.2f}s)")

t3 = time.time()
# V = 0 reduction: matrix comps, scalar shape
connz = susy_connection(Z(U4, 2, 2))
comps = [generic_matrix(("red", k), 2, 1) for k in range(4)]
check(azumaya_normal_form(*comps, connz, mode="Dhat-ch") == scalar_normal_form(*comps, mode="d-ch"),
      "V=0 ch reduction")
check(azumaya_normal_form(*comps, connz, mode="Dhat-ach") == scalar_normal_form(*comps, mode="d-ach"),
      "V=0 ach reduction")

# m0 = Id, rest 0 -> constant Id
V = generic_vector_superfield(7)
conn = susy_connection(V)
check(azumaya_normal_form(1, 0, 0, 0, conn, mode="Dhat-ach") == Superfield.one(r=2),
      "m0=Id gives const Id")

# product closure of Dhat-ach (even V, where the builder yields sections)
Ve = generic_even_vector_superfield(7)
conne = susy_connection(Ve)
ca = [generic_matrix(("pc", 0, k), 2, 1) for k in range(4)]
cb = [generic_matrix(("pc", 1, k), 2, 1) for k in range(4)]
ma = azumaya_normal_form(*ca, conne, mode="Dhat-ach")
mb = azumaya_normal_form(*cb, conne, mode="Dhat-ach")
check(is_chiral(ma * mb, "Dhat-ach", conne)[0], "product of ach is ach")
check(is_chiral(ma * mb, "weak-Dhat-ach", conne)[0], "product weakly ach")

# conjugation characterization, V = 0: plain antichirality
fach = scalar_normal_form(*ca, mode="d-ach")
check(conjugation_characterization(fach, Z(U4, 2, 2)), "conj char V=0 = d-ach")

# SUSY invariance of d-chirality in the extended universe: the standard
# transformation preserves it, the primed (frame-side) flow does not.
f4 = scalar_normal_form(*[generic_matrix(("s8", k), 2, 1) for k in range(4)], mode="d-ch")
g8 = finite_susy(f4, SusyParams("g"))
check(g8.gens == U8, "susy extends universe")
check(is_chiral(g8, "d-ch")[0], "finite susy g preserves d-ch")
f4a = scalar_normal_form(*[generic_matrix(("s8a", k), 2, 1) for k in range(4)], mode="d-ach")
check(is_chiral(finite_susy(f4a, SusyParams("g")), "d-ach")[0],
      "finite susy g preserves d-ach")
check(not is_chiral(finite_susy(f4, SusyParams("gp")), "d-ch")[0],
      "frame-side flow breaks d-ch")
print(f"closure block ok ({ok} checks, {time.time()-t3:.2f}s)")
print(f"ALL {ok} checks passed, total {time.time()-t0:.2f}s")
