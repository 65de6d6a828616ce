"""Probe battery: F-term sign, even-V behavior, naive solver for azumaya NF."""

from superspace.calculus import apply, frame_derivation, sigma
from superspace.chirality import (
    azumaya_normal_form,
    chirality_conditions,
    coordinate_coefficients,
    is_chiral,
    scalar_normal_form,
)
from superspace.coeffring import GR_I, MatrixCoeff, generic_matrix, partial_x
from superspace.connection import induced_D, susy_connection, generic_vector_superfield
from superspace.grassmann import U4, Superfield, generic_superfield

WZ_EVEN = [5, 6, 9, 10, 15]
WZ_ALL = [5, 6, 7, 9, 10, 11, 13, 14, 15]


def com(x, y):
    return x * y - y * x


def f_term(conn, mode):
    a, b, bbar = coordinate_coefficients(conn)
    a0 = [ai.component(0) for ai in a]

    def fc(mu, nu):
        return partial_x(a0[nu], mu) - partial_x(a0[mu], nu) - com(a0[mu], a0[nu])

    if mode == "Dhat-ch":
        return fc(0, 3) + fc(1, 2).scale(GR_I)
    return fc(0, 3) - fc(1, 2).scale(GR_I)


def flip_F(anf, conn, mode, m0):
    delta = com(f_term(conn, mode), m0) + com(f_term(conn, mode), m0)
    return anf + Superfield(conn.gens, conn.rank, conn.rank, {15: delta})


def strict_report(m, conn, mode):
    return [bool(v.is_zero()) for _, v in chirality_conditions(m, mode, conn=conn)]


def naive_report(m, conn, frame):
    return [induced_D(conn, (frame, i), m).is_zero() for i in (1, 2)]


def naive_solver_ach(conn, m0, m1d, m2d, m12d):
    """Solve D_{e_1'} m = D_{e_2'} m = 0 triangularly; free at masks 0,4,8,12."""
    gens, r = conn.gens, conn.rank
    comps = {0: m0, 4: m1d, 8: m2d, 12: m12d}
    for deg in range(4):
        layer = [k for k in range(16) if bin(k).count("1") == deg]
        for k in layer:
            for al in (1, 2):
                t = k | (1 << (al - 1))
                if t == k or t in comps:
                    continue
                part = Superfield(gens, r, r, dict(comps))
                resid = induced_D(conn, ("p", al), part).component(k)
                probe = Superfield(gens, r, r, {t: MatrixCoeff.identity(r)})
                s = apply(frame_derivation(("p", al), gens), probe).component(k)
                sc = s.entry(0, 0).constant_term()
                comps[t] = (-resid).scale(sc.conjugate() / (sc * sc.conjugate()))
    return Superfield(gens, r, r, comps)


print("== A. chiral collapse under full generic WZ V ==")
for seed in (1, 2, 3):
    V = generic_vector_superfield(seed)
    conn = susy_connection(V)
    comps = [generic_matrix(("m", seed, k), 2, 1) for k in range(4)]
    anf = azumaya_normal_form(*comps, conn, mode="Dhat-ch")
    snf = scalar_normal_form(*comps, mode="d-ch")
    diff = anf - snf
    masks = sorted(k for k, c in diff.terms.items() if c)
    twoF = com(f_term(conn, "Dhat-ch"), anf.component(0))
    twoF = twoF + twoF
    print(f" seed {seed}: anf-snf masks {masks}; diff[15]==-2[F,m0]? "
          f"{diff.component(15) == -twoF}; snf strict? {strict_report(snf, conn, 'Dhat-ch')}")

print("== B. even-V, F-flipped builders, strict conditions ==")
for seed in (1, 2, 3):
    V = generic_superfield(("wz", seed), r=2, deg=1, masks=WZ_EVEN)
    conn = susy_connection(V)
    comps = [generic_matrix(("m", seed, k), 2, 1) for k in range(4)]
    for mode in ("Dhat-ch", "Dhat-ach"):
        anf = azumaya_normal_form(*comps, conn, mode=mode)
        rep_raw = strict_report(anf, conn, mode)
        anf2 = flip_F(anf, conn, mode, anf.component(0))
        rep_fix = strict_report(anf2, conn, mode)
        print(f" seed {seed} {mode}: raw {rep_raw} flipped {rep_fix}")

print("== C. full generic V, ach: F-flipped display vs naive/strict ==")
for seed in (1, 2, 3):
    V = generic_vector_superfield(seed)
    conn = susy_connection(V)
    comps = [generic_matrix(("m", seed, k), 2, 1) for k in range(4)]
    anf = flip_F(azumaya_normal_form(*comps, conn, mode="Dhat-ach"), conn, "Dhat-ach",
                 comps[0])
    print(f" seed {seed}: naive {naive_report(anf, conn, 'p')} strict {strict_report(anf, conn, 'Dhat-ach')}")
    sol = naive_solver_ach(conn, *comps)
    ok = naive_report(sol, conn, "p")
    d = sol - anf
    dm = sorted(k for k, c in d.terms.items() if c)
    print(f"   solver naive-consistent? {ok}; solver-display masks {dm}")
