"""Hybrid connections on a rank-r module over the four-dimensional superspace.

Sections are row vectors and the connection acts through a right-stored
one-form: nabla s = ds + sA.  The distinguished family studied here is
built from a vector superfield V in Wess-Zumino gauge via

    A_{a'} = (e_{a'} exp(-V)) exp(V),   A_{b''} = 0,
    A_mu   = (i/2) sum_{a,b} sigmabreve_mu^{ab} Theta_{ab},
    Theta_{ab} = e_{b''}(A_{a'}),

expressed in the invariant coframe.  The module provides the construction,
an independent component-by-component transcription of the same data for
cross-checking, curvature in frame components and as a two-form, gauge
transformations, the induced derivations on matrix superfields, and the
super-line counterexample showing why left-stored coefficients break the
graded Leibniz rule.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffring import (
    GR_I,
    GaussRational,
    MatrixCoeff,
    PolyScalar,
    commutator,
)
from .grassmann import OperabilityError, Superfield, U4, ULINE, generic_superfield
from .calculus import (
    FRAME_LABELS,
    Derivation,
    apply,
    bracket,
    frame_derivation,
    frame_parity,
    sigma,
    sigma_half,
)
from .forms import Form, evaluate_right, exterior_d, wedge

T1, T2, TB1, TB2 = 1, 2, 4, 8

# Monomial masks allowed for a vector superfield in Wess-Zumino gauge:
# theta theta-bar mixed quadratics and everything above them.
WZ_MASKS = frozenset(
    {
        T1 | TB1, T1 | TB2, T2 | TB1, T2 | TB2,
        T1 | T2 | TB1, T1 | T2 | TB2,
        T1 | TB1 | TB2, T2 | TB1 | TB2,
        T1 | T2 | TB1 | TB2,
    }
)

_T = {1: T1, 2: T2}
_TB = {1: TB1, 2: TB2}

HALF = Fraction(1, 2)


def _require_base(gens: tuple[str, ...]) -> None:
    if tuple(gens[:4]) != U4:
        raise ValueError("universe must start with the four base odd coordinates")


def is_wz_gauge(V: Superfield) -> bool:
    """True when V is square and supported on the Wess-Zumino monomials."""
    if V.rows != V.cols or tuple(V.gens[:4]) != U4:
        return False
    return all(m in WZ_MASKS for m in V.terms)


def generic_vector_superfield(seed, r: int = 2, deg: int = 1, gens=U4) -> Superfield:
    """Deterministic vector superfield in Wess-Zumino gauge."""
    return generic_superfield(
        ("wz", seed), gens=gens, r=r, deg=deg, masks=sorted(WZ_MASKS)
    )


# Wess-Zumino monomials of even Grassmann parity; a vector superfield
# supported here has parity-homogeneous frame components A_I.
WZ_EVEN_MASKS = frozenset(m for m in WZ_MASKS if bin(m).count("1") % 2 == 0)


def generic_even_vector_superfield(seed, r: int = 2, deg: int = 1, gens=U4) -> Superfield:
    """Deterministic Wess-Zumino vector superfield with vanishing odd part."""
    return generic_superfield(
        ("wz", seed), gens=gens, r=r, deg=deg, masks=sorted(WZ_EVEN_MASKS)
    )


def exp_wz(V: Superfield) -> Superfield:
    """exp(V) for V in Wess-Zumino gauge, where V^3 = 0 exactly."""
    if not is_wz_gauge(V):
        raise OperabilityError("exponential needs a Wess-Zumino gauge argument")
    one = Superfield.one(V.gens, V.rows)
    return one + V + (V * V).scale(GaussRational(HALF))


class HybridConnection:
    """Frame components A_I of a simple hybrid connection nabla s = ds + sA."""

    __slots__ = ("gens", "rank", "comps", "_curv")

    def __init__(self, gens: tuple[str, ...], rank: int, comps: dict):
        _require_base(gens)
        filled = {}
        for lab in FRAME_LABELS:
            c = comps.get(lab)
            if c is None:
                c = Superfield.zero(gens, rank)
            if c.gens != tuple(gens) or c.shape != (rank, rank):
                raise ValueError(f"component {lab} has wrong universe or shape")
            filled[lab] = c
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "comps", filled)
        object.__setattr__(self, "_curv", None)

    def __setattr__(self, name, value):
        raise AttributeError("HybridConnection is immutable")

    def component(self, label) -> Superfield:
        return self.comps[label]

    def one_form(self) -> Form:
        return Form.from_components(self.comps, self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HybridConnection):
            return NotImplemented
        return (
            self.gens == other.gens
            and self.rank == other.rank
            and all(self.comps[l] == other.comps[l] for l in FRAME_LABELS)
        )

    def __str__(self) -> str:
        rows = [f"  {lab}: {self.comps[lab]}" for lab in FRAME_LABELS if self.comps[lab]]
        return "HybridConnection(\n" + "\n".join(rows) + "\n)"


def susy_connection(V: Superfield) -> HybridConnection:
    """The supersymmetry-compatible connection attached to V.

    Computed directly from the defining operator expressions; the
    transcribed closed-form components live in
    connection_component_formulas for cross-checking.
    """
    if not is_wz_gauge(V):
        raise OperabilityError("susy_connection needs a Wess-Zumino gauge argument")
    gens, r = V.gens, V.rows
    em = exp_wz(-V)
    ep = exp_wz(V)
    comps = {}
    for a in (1, 2):
        ed = frame_derivation(("p", a), gens)
        comps[("p", a)] = apply(ed, em) * ep
    theta = theta_components_from(comps[("p", 1)], comps[("p", 2)], gens)
    for mu in range(4):
        acc = Superfield.zero(gens, r)
        for a in (1, 2):
            for b in (1, 2):
                q = (sigma_half(mu, a, b) * GR_I).scale(HALF)
                if q:
                    acc = acc + theta[(a, b)].scale(q)
        comps[("x", mu)] = acc
    return HybridConnection(gens, r, comps)


def theta_components_from(a1p: Superfield, a2p: Superfield, gens) -> dict:
    """Theta_{ab} = e_{b''}(A_{a'}) from the two odd connection components."""
    out = {}
    for a, ap in ((1, a1p), (2, a2p)):
        for b in (1, 2):
            out[(a, b)] = apply(frame_derivation(("pp", b), gens), ap)
    return out


def theta_components(V: Superfield) -> dict:
    """Theta_{ab} of the connection attached to V, by the operator route."""
    conn = susy_connection(V)
    return theta_components_from(conn.component(("p", 1)), conn.component(("p", 2)), V.gens)


# -- transcribed component formulas ----------------------------------------

def connection_component_formulas(V: Superfield):
    """Closed-form components of the connection attached to V.

    Returns (connection, theta) where every coefficient is written out
    monomial by monomial in the components of V, independently of the
    operator computation in susy_connection.
    """
    if not is_wz_gauge(V):
        raise OperabilityError("component formulas need a Wess-Zumino gauge argument")
    gens, r = V.gens, V.rows
    v = {(a, b): V.component(_T[a] | _TB[b]) for a in (1, 2) for b in (1, 2)}
    w = {b: V.component(T1 | T2 | _TB[b]) for b in (1, 2)}
    u = {a: V.component(_T[a] | TB1 | TB2) for a in (1, 2)}
    top = V.component(T1 | T2 | TB1 | TB2)

    def S(a, b, m):
        acc = MatrixCoeff.zero(r, r)
        for mu in range(4):
            acc = acc + m.partial(mu).scale(sigma(mu, a, b))
        return acc

    def SS(a, b, c, d, m):
        return S(a, b, S(c, d, m))

    def i_(m):
        return m.scale(GR_I)

    def h_(m):
        return m.scale(HALF)

    cm = commutator

    theta = {}
    theta[(1, 1)] = {
        0: v[(1, 1)],
        T2: -w[1],
        TB2: u[1],
        T1 | TB1: i_(S(1, 1, v[(1, 1)])),
        T1 | TB2: cm(v[(1, 1)], v[(1, 2)]) - i_(S(1, 2, v[(1, 1)]))
        + i_(S(1, 1, v[(1, 2)])).scale(2),
        T2 | TB1: i_(S(2, 1, v[(1, 1)])),
        T2 | TB2: -top + h_(cm(v[(1, 1)], v[(2, 2)])) + h_(cm(v[(2, 1)], v[(1, 2)]))
        + i_(S(2, 1, v[(1, 2)])) - i_(S(1, 2, v[(2, 1)])) + i_(S(1, 1, v[(2, 2)])),
        T1 | T2 | TB1: i_(S(1, 1, w[1])),
        T1 | T2 | TB2: cm(v[(1, 1)], w[2]) - cm(v[(1, 2)], w[1])
        - i_(S(1, 2, w[1])) + i_(S(1, 1, w[2])).scale(2),
        T1 | TB1 | TB2: i_(S(1, 1, u[1])),
        T2 | TB1 | TB2: i_(S(2, 1, u[1])),
        T1 | T2 | TB1 | TB2: i_(S(1, 1, top)) + i_(S(2, 1, cm(v[(1, 1)], v[(1, 2)])))
        - i_(S(1, 1, cm(v[(1, 1)], v[(2, 2)]))).scale(HALF)
        - i_(S(1, 1, cm(v[(2, 1)], v[(1, 2)]))).scale(HALF)
        + SS(2, 1, 1, 2, v[(1, 1)]) - SS(2, 1, 1, 1, v[(1, 2)])
        - SS(1, 1, 1, 2, v[(2, 1)]) + SS(1, 1, 1, 1, v[(2, 2)]),
    }
    theta[(1, 2)] = {
        0: v[(1, 2)],
        T2: -w[2],
        TB1: -u[1],
        T1 | TB1: -cm(v[(1, 1)], v[(1, 2)]) + i_(S(1, 2, v[(1, 1)])).scale(2)
        - i_(S(1, 1, v[(1, 2)])),
        T1 | TB2: i_(S(1, 2, v[(1, 2)])),
        T2 | TB1: top - h_(cm(v[(1, 1)], v[(2, 2)])) - h_(cm(v[(2, 1)], v[(1, 2)]))
        + i_(S(2, 2, v[(1, 1)])) + i_(S(1, 2, v[(2, 1)])) - i_(S(1, 1, v[(2, 2)])),
        T2 | TB2: i_(S(2, 2, v[(1, 2)])),
        T1 | T2 | TB1: -cm(v[(1, 1)], w[2]) + cm(v[(1, 2)], w[1])
        + i_(S(1, 2, w[1])).scale(2) - i_(S(1, 1, w[2])),
        T1 | T2 | TB2: i_(S(1, 2, w[2])),
        T1 | TB1 | TB2: i_(S(1, 2, u[1])),
        T2 | TB1 | TB2: i_(S(2, 2, u[1])),
        T1 | T2 | TB1 | TB2: i_(S(1, 2, top)) + i_(S(2, 2, cm(v[(1, 1)], v[(1, 2)])))
        - i_(S(1, 2, cm(v[(1, 1)], v[(2, 2)]))).scale(HALF)
        - i_(S(1, 2, cm(v[(2, 1)], v[(1, 2)]))).scale(HALF)
        + SS(2, 2, 1, 2, v[(1, 1)]) - SS(2, 2, 1, 1, v[(1, 2)])
        - SS(1, 2, 1, 2, v[(2, 1)]) + SS(1, 2, 1, 1, v[(2, 2)]),
    }
    theta[(2, 1)] = {
        0: v[(2, 1)],
        T1: w[1],
        TB2: u[2],
        T1 | TB1: i_(S(1, 1, v[(2, 1)])),
        T1 | TB2: top + h_(cm(v[(1, 1)], v[(2, 2)])) + h_(cm(v[(2, 1)], v[(1, 2)]))
        - i_(S(2, 2, v[(1, 1)])) + i_(S(2, 1, v[(1, 2)])) + i_(S(1, 1, v[(2, 2)])),
        T2 | TB1: i_(S(2, 1, v[(2, 1)])),
        T2 | TB2: cm(v[(2, 1)], v[(2, 2)]) - i_(S(2, 2, v[(2, 1)]))
        + i_(S(2, 1, v[(2, 2)])).scale(2),
        T1 | T2 | TB1: i_(S(2, 1, w[1])),
        T1 | T2 | TB2: cm(v[(2, 1)], w[2]) - cm(v[(2, 2)], w[1])
        - i_(S(2, 2, w[1])) + i_(S(2, 1, w[2])).scale(2),
        T1 | TB1 | TB2: i_(S(1, 1, u[2])),
        T2 | TB1 | TB2: i_(S(2, 1, u[2])),
        T1 | T2 | TB1 | TB2: i_(S(2, 1, top)) - i_(S(1, 1, cm(v[(2, 1)], v[(2, 2)])))
        + i_(S(2, 1, cm(v[(1, 1)], v[(2, 2)]))).scale(HALF)
        + i_(S(2, 1, cm(v[(2, 1)], v[(1, 2)]))).scale(HALF)
        + SS(2, 1, 2, 2, v[(1, 1)]) - SS(2, 1, 2, 1, v[(1, 2)])
        - SS(1, 1, 2, 2, v[(2, 1)]) + SS(1, 1, 2, 1, v[(2, 2)]),
    }
    theta[(2, 2)] = {
        0: v[(2, 2)],
        T1: w[2],
        TB1: -u[2],
        T1 | TB1: -top - h_(cm(v[(1, 1)], v[(2, 2)])) - h_(cm(v[(2, 1)], v[(1, 2)]))
        + i_(S(2, 2, v[(1, 1)])) - i_(S(2, 1, v[(1, 2)])) + i_(S(1, 2, v[(2, 1)])),
        T1 | TB2: i_(S(1, 2, v[(2, 2)])),
        T2 | TB1: -cm(v[(2, 1)], v[(2, 2)]) + i_(S(2, 2, v[(2, 1)])).scale(2)
        - i_(S(2, 1, v[(2, 2)])),
        T2 | TB2: i_(S(2, 2, v[(2, 2)])),
        T1 | T2 | TB1: -cm(v[(2, 1)], w[2]) + cm(v[(2, 2)], w[1])
        + i_(S(2, 2, w[1])).scale(2) - i_(S(2, 1, w[2])),
        T1 | T2 | TB2: i_(S(2, 2, w[2])),
        T1 | TB1 | TB2: i_(S(1, 2, u[2])),
        T2 | TB1 | TB2: i_(S(2, 2, u[2])),
        T1 | T2 | TB1 | TB2: i_(S(2, 2, top)) - i_(S(1, 2, cm(v[(2, 1)], v[(2, 2)])))
        + i_(S(2, 2, cm(v[(1, 1)], v[(2, 2)]))).scale(HALF)
        + i_(S(2, 2, cm(v[(2, 1)], v[(1, 2)]))).scale(HALF)
        + SS(2, 2, 2, 2, v[(1, 1)]) - SS(2, 2, 2, 1, v[(1, 2)])
        - SS(1, 2, 2, 2, v[(2, 1)]) + SS(1, 2, 2, 1, v[(2, 2)]),
    }

    a1p = {
        TB1: -v[(1, 1)],
        TB2: -v[(1, 2)],
        T2 | TB1: -w[1],
        T2 | TB2: -w[2],
        TB1 | TB2: -u[1],
        T1 | TB1 | TB2: cm(v[(1, 1)], v[(1, 2)]) + i_(S(1, 1, v[(1, 2)]))
        - i_(S(1, 2, v[(1, 1)])),
        T2 | TB1 | TB2: -top + h_(cm(v[(1, 1)], v[(2, 2)])) + h_(cm(v[(2, 1)], v[(1, 2)]))
        + i_(S(1, 1, v[(2, 2)])) - i_(S(1, 2, v[(2, 1)])),
        T1 | T2 | TB1 | TB2: -cm(v[(1, 1)], w[2]) + cm(v[(1, 2)], w[1])
        + i_(S(1, 2, w[1])) - i_(S(1, 1, w[2])),
    }
    a2p = {
        TB1: -v[(2, 1)],
        TB2: -v[(2, 2)],
        T1 | TB1: w[1],
        T1 | TB2: w[2],
        TB1 | TB2: -u[2],
        T1 | TB1 | TB2: top + h_(cm(v[(1, 1)], v[(2, 2)])) + h_(cm(v[(2, 1)], v[(1, 2)]))
        + i_(S(2, 1, v[(1, 2)])) - i_(S(2, 2, v[(1, 1)])),
        T2 | TB1 | TB2: cm(v[(2, 1)], v[(2, 2)]) + i_(S(2, 1, v[(2, 2)]))
        - i_(S(2, 2, v[(2, 1)])),
        T1 | T2 | TB1 | TB2: -cm(v[(2, 1)], w[2]) + cm(v[(2, 2)], w[1])
        + i_(S(2, 2, w[1])) - i_(S(2, 1, w[2])),
    }

    def field(terms):
        return Superfield(gens, r, r, terms)

    theta_fields = {k: field(t) for k, t in theta.items()}
    comps = {("p", 1): field(a1p), ("p", 2): field(a2p)}
    t11, t12 = theta_fields[(1, 1)], theta_fields[(1, 2)]
    t21, t22 = theta_fields[(2, 1)], theta_fields[(2, 2)]
    mi4 = GaussRational(Fraction(0), Fraction(-1, 4))
    pi4 = GaussRational(Fraction(0), Fraction(1, 4))
    comps[("x", 0)] = (t11 + t22).scale(mi4)
    comps[("x", 1)] = (t12 + t21).scale(pi4)
    comps[("x", 2)] = (t12 - t21).scale(GaussRational(Fraction(-1, 4)))
    comps[("x", 3)] = (t11 - t22).scale(pi4)
    return HybridConnection(gens, r, comps), theta_fields


# -- covariant derivatives --------------------------------------------------

def covariant_derivative(conn: HybridConnection, label, s: Superfield) -> Superfield:
    """nabla_{e_I} s = e_I s + (parity-twisted s) A_I on row sections."""
    if s.cols != conn.rank or s.gens != conn.gens:
        raise ValueError("section has wrong shape or universe")
    ds = apply(frame_derivation(label, conn.gens), s)
    return ds + s.twisted_by(frame_parity(label)) * conn.component(label)


def covariant_derivative_form(conn: HybridConnection, s: Superfield) -> Form:
    """nabla s = ds + sA as a one-form with section-shaped coefficients."""
    comps = {lab: covariant_derivative(conn, lab, s) for lab in FRAME_LABELS}
    return Form.from_components(comps, conn.gens)


def dual_derivative(conn: HybridConnection, label, t: Superfield) -> Superfield:
    """The dual connection on column sections: e_I t - A_I t."""
    if t.rows != conn.rank or t.gens != conn.gens:
        raise ValueError("dual section has wrong shape or universe")
    dt = apply(frame_derivation(label, conn.gens), t)
    return dt - conn.component(label) * t


# -- gauge transformations --------------------------------------------------

def invert_even(g: Superfield) -> Superfield:
    """Exact inverse of an even superfield with constant invertible body."""
    if g.rows != g.cols:
        raise OperabilityError("inverse needs a square superfield")
    if not g.is_even():
        raise OperabilityError("inverse implemented for even superfields only")
    body = g.component(0)
    if not body.is_constant():
        raise OperabilityError(
            "nonconstant bodies invert to rational functions outside this ring"
        )
    b_inv = body.inverse_constant()
    n = g - Superfield.const(body, g.gens)
    u = n.mat_left(b_inv)
    acc = Superfield.one(g.gens, g.rows)
    power = Superfield.one(g.gens, g.rows)
    for _ in range(len(g.gens)):
        power = -(power * u)
        if not power:
            break
        acc = acc + power
    inv = acc.mat_right(b_inv)
    one = Superfield.one(g.gens, g.rows)
    if g * inv != one or inv * g != one:
        raise OperabilityError("inversion failed; input is not invertible")
    return inv


def gauge_transform(conn: HybridConnection, g: Superfield) -> HybridConnection:
    """A^g = (dg^{-1})g + g^{-1}Ag for an even invertible gauge change g."""
    if g.shape != (conn.rank, conn.rank) or g.gens != conn.gens:
        raise ValueError("gauge change has wrong shape or universe")
    ginv = invert_even(g)
    comps = {}
    for lab in FRAME_LABELS:
        d = apply(frame_derivation(lab, conn.gens), ginv)
        comps[lab] = d * g + ginv * conn.component(lab) * g
    return HybridConnection(conn.gens, conn.rank, comps)


def generic_gauge(seed, r: int = 2, deg: int = 1, gens=U4) -> Superfield:
    """Deterministic even gauge change with unimodular constant body."""
    even_masks = [m for m in range(1 << len(gens)) if m and not (m.bit_count() & 1)]
    tail = generic_superfield(("gauge", seed), gens=gens, r=r, deg=deg, masks=even_masks)
    shift = generic_superfield(("gaugebody", seed), gens=gens, r=r, deg=0).component(0)
    upper = [
        [shift.entry(i, j) if j > i else (PolyScalar.one() if i == j else PolyScalar.zero())
         for j in range(r)]
        for i in range(r)
    ]
    body = MatrixCoeff(upper)
    return Superfield.const(body, gens) + tail


# -- curvature --------------------------------------------------------------

def structure_constant(K, I, J) -> GaussRational:
    """c^K_{IJ} for the invariant frame; only mixed odd pairs are nonzero."""
    if K[0] != "x":
        return GaussRational(0)
    if I[0] == "p" and J[0] == "pp":
        a, b = I[1], J[1]
    elif I[0] == "pp" and J[0] == "p":
        a, b = J[1], I[1]
    else:
        return GaussRational(0)
    return sigma(K[1], a, b) * GaussRational(Fraction(0), Fraction(-2))


def curvature_components(conn: HybridConnection) -> dict:
    """F_IJ = (1/2) sum_K c^K_IJ A_K - e_J A_I - (twisted A_I) A_J.

    The 64-entry table is cached on the connection.
    """
    if conn._curv is not None:
        return conn._curv
    out = {}
    for I in FRAME_LABELS:
        AI = conn.component(I)
        for J in FRAME_LABELS:
            acc = Superfield.zero(conn.gens, conn.rank)
            if (I[0], J[0]) in (("p", "pp"), ("pp", "p")):
                for mu in range(4):
                    q = structure_constant(("x", mu), I, J).scale(HALF)
                    if q:
                        acc = acc + conn.component(("x", mu)).scale(q)
            acc = acc - apply(frame_derivation(J, conn.gens), AI)
            acc = acc - AI.twisted_by(frame_parity(J)) * conn.component(J)
            out[(I, J)] = acc
    object.__setattr__(conn, "_curv", out)
    return out


def curvature_form(conn: HybridConnection) -> Form:
    """F = dA - A wedge A."""
    A = conn.one_form()
    return exterior_d(A) - wedge(A, A)


def curvature_form_from_components(conn: HybridConnection) -> Form:
    """sum_{I,J} e^I wedge e^J . F_IJ, assembled from the component table."""
    comps = curvature_components(conn)
    out = Form.zero(conn.gens, 2, conn.rank, conn.rank)
    for (I, J), F in comps.items():
        if F:
            out = out + wedge(Form.basis(I, conn.gens), Form.basis(J, conn.gens)).right_mul(F)
    return out


def curvature_contraction(conn: HybridConnection, I, J, s: Superfield) -> Superfield:
    """(e_I, e_J, s) <- F via the component table, for homogeneous s."""
    p = s.parity()
    if p is None:
        return curvature_contraction(conn, I, J, s.even_part()) + curvature_contraction(
            conn, I, J, s.odd_part()
        )
    comps = curvature_components(conn)
    pi, pj = frame_parity(I), frame_parity(J)
    inner = -comps[(I, J)] if (pi and pj) else comps[(I, J)]
    inner = inner - comps[(J, I)]
    out = s * inner
    if p and (pi ^ pj):
        out = -out
    return out


def curvature_commutator(conn: HybridConnection, I, J, s: Superfield) -> Superfield:
    """([nabla_I, nabla_J} - nabla_{[e_I, e_J}}) s with frame-parity weights."""
    pi, pj = frame_parity(I), frame_parity(J)
    out = covariant_derivative(conn, I, covariant_derivative(conn, J, s))
    second = covariant_derivative(conn, J, covariant_derivative(conn, I, s))
    out = out + second if (pi and pj) else out - second
    for mu in range(4):
        q = structure_constant(("x", mu), I, J)
        if q:
            out = out - covariant_derivative(conn, ("x", mu), s).scale(q)
    return out


def contraction_identity_report(conn: HybridConnection, s: Superfield) -> dict:
    """Compare contraction against operator bracket on every frame pair.

    Shares the first derivatives and the ordered second derivatives across
    pairs, so the full 64-pair sweep costs 8 + 64 covariant derivatives per
    homogeneous part of s.
    """
    parts = [p for p in (s.even_part(), s.odd_part()) if p]
    comps = curvature_components(conn)
    report = {(I, J): True for I in FRAME_LABELS for J in FRAME_LABELS}
    for sec in parts:
        p = sec.parity()
        first = {J: covariant_derivative(conn, J, sec) for J in FRAME_LABELS}
        second = {
            (I, J): covariant_derivative(conn, I, first[J])
            for I in FRAME_LABELS
            for J in FRAME_LABELS
        }
        for I in FRAME_LABELS:
            pi = frame_parity(I)
            for J in FRAME_LABELS:
                pj = frame_parity(J)
                rhs = second[(I, J)]
                rhs = rhs + second[(J, I)] if (pi and pj) else rhs - second[(J, I)]
                for mu in range(4):
                    q = structure_constant(("x", mu), I, J)
                    if q:
                        rhs = rhs - first[("x", mu)].scale(q)
                inner = -comps[(I, J)] if (pi and pj) else comps[(I, J)]
                inner = inner - comps[(J, I)]
                lhs = sec * inner
                if p and (pi ^ pj):
                    lhs = -lhs
                if lhs != rhs:
                    report[(I, J)] = False
    return report


# -- induced derivation on matrix superfields -------------------------------

def induced_D(conn: HybridConnection, label, m: Superfield, conjugated: bool = False) -> Superfield:
    """D_{e_I} m = e_I m - A_I m + m (twisted A_I), the bracket [A_I, m}.

    With conjugated=True the components B_I = (-1)^{p(e_I)} (parity
    conjugate of A_I) replace A_I throughout.
    """
    if m.shape != (conn.rank, conn.rank) or m.gens != conn.gens:
        raise ValueError("matrix argument has wrong shape or universe")
    A = conn.component(label)
    if conjugated:
        A = A.parity_conjugate()
        if frame_parity(label):
            A = -A
    dm = apply(frame_derivation(label, conn.gens), m)
    out = dm - A * m
    me, mo = m.even_part(), m.odd_part()
    if me:
        out = out + me * A
    if mo:
        out = out + mo * A.parity_conjugate()
    return out


def induced_D_prime(conn: HybridConnection, label, m: Superfield) -> Superfield:
    """The plain-commutator variant: e_I m - A_I m + (twisted m) A_I."""
    if m.shape != (conn.rank, conn.rank) or m.gens != conn.gens:
        raise ValueError("matrix argument has wrong shape or universe")
    A = conn.component(label)
    dm = apply(frame_derivation(label, conn.gens), m)
    return dm - A * m + m.twisted_by(frame_parity(label)) * A


def induced_D_alt(V: Superfield, alpha: int, m: Superfield) -> Superfield:
    """Alternative expression for D_{e_{alpha'}} on homogeneous m:

    (parity conj of exp(-V)) ( e_{alpha'}( exp(V) m (m-twisted exp(-V)) ) )
    (m-twisted exp(V)).
    """
    p = m.parity()
    if p is None:
        return induced_D_alt(V, alpha, m.even_part()) + induced_D_alt(V, alpha, m.odd_part())
    em, ep = exp_wz(-V), exp_wz(V)
    inner = ep * m * em.twisted_by(p)
    der = apply(frame_derivation(("p", alpha), V.gens), inner)
    return em.parity_conjugate() * der * ep.twisted_by(p)


def induced_D_alt_conj(V: Superfield, alpha: int, m: Superfield) -> Superfield:
    """Same for the conjugated derivation, with exp(+-V) parity-conjugated."""
    p = m.parity()
    if p is None:
        return induced_D_alt_conj(V, alpha, m.even_part()) + induced_D_alt_conj(
            V, alpha, m.odd_part()
        )
    em, ep = exp_wz(-V), exp_wz(V)
    eps, ems = ep.parity_conjugate(), em.parity_conjugate()
    inner = eps * m * ems.twisted_by(p)
    der = apply(frame_derivation(("p", alpha), V.gens), inner)
    return em * der * eps.twisted_by(p)


def parity_conjugate_connection(conn: HybridConnection) -> HybridConnection:
    """Component table of the parity-conjugate connection:

    (conj A)_I = (-1)^{p(e_I)} (parity conjugate of A_I).
    """
    comps = {}
    for lab in FRAME_LABELS:
        c = conn.component(lab).parity_conjugate()
        if frame_parity(lab):
            c = -c
        comps[lab] = c
    return HybridConnection(conn.gens, conn.rank, comps)


# -- the super-line counterexample ------------------------------------------

def left_connection_counterexample(b: PolyScalar | None = None) -> dict:
    """Leibniz defect of left-stored connection coefficients on the super line.

    The free rank-one module over C^infty(R)[theta] with basis 1 + theta
    carries the naive connection P(xi, f (1+theta)) = (xi f)(1+theta).  For
    odd xi the even/odd decomposition rule produces a defect against the
    graded Leibniz rule; the returned dict carries both sides and the
    defect, which equals -2 b theta for the multiplier b theta.
    """
    if b is None:
        b = PolyScalar.variable(0)
    gens = ULINE
    one = Superfield.one(gens)
    theta = Superfield.odd("theta", gens)
    s1 = one + theta
    s1_inv = one - theta
    d_theta = Derivation.partial_odd("theta", gens)

    def P(s):
        return apply(d_theta, s * s1_inv) * s1

    p_even = P(s1.even_part()).odd_part() + P(s1.odd_part()).even_part()
    p_odd = P(s1.even_part()).even_part() + P(s1.odd_part()).odd_part()
    f = theta.scale(b)
    lhs = P(f * s1)
    rhs = apply(d_theta, f) * s1 - f * (p_even - p_odd)
    defect = rhs - lhs
    expected = theta.scale(b).scale(GaussRational(-2))
    return {
        "P_even": p_even,
        "P_odd": p_odd,
        "lhs": lhs,
        "rhs": rhs,
        "defect": defect,
        "expected": expected,
        "matches": defect == expected,
    }


def left_curvature_tensoriality_report(seed: int = 0, r: int = 2, deg: int = 1) -> dict:
    """Spot-check of first-slot linearity for the left-connection curvature.

    The curvature candidate with the odd correction term

        F(xi1, xi2; s) = ([nabla_xi1, nabla_xi2} - nabla_{[xi1, xi2}}
                          - (1 - (-1)^{p(xi2)}) [A_odd(xi1), xi2}) s

    is evaluated on generic data, and F(f xi1, xi2; s) is compared with
    f F(xi1, xi2; s).  The outcome is reported, not asserted.
    """
    gens = U4
    A = {lab: generic_superfield(("lc", seed, lab), gens=gens, r=r, deg=deg) for lab in FRAME_LABELS}

    def coeff(xi, lab):
        return evaluate_right(Form.basis(lab, gens), xi)

    def a_of(xi):
        acc = Superfield.zero(gens, r)
        for lab in FRAME_LABELS:
            c = coeff(xi, lab)
            if c:
                acc = acc + c * A[lab]
        return acc

    def nabla(xi, s):
        return apply(xi, s) + a_of(xi) * s

    def odd_bracket(a, xi, s):
        # [a, xi} s for odd a: a (xi s) - (-1)^{p(xi)} xi(a s)
        first = a * apply(xi, s)
        second = apply(xi, a * s)
        return first + second if xi.parity() else first - second

    def F(xi1, xi2, s):
        p1, p2 = xi1.parity(), xi2.parity()
        out = nabla(xi1, nabla(xi2, s))
        second = nabla(xi2, nabla(xi1, s))
        out = out + second if (p1 and p2) else out - second
        out = out - nabla(bracket(xi1, xi2), s)
        if p2:
            out = out - odd_bracket(a_of(xi1).odd_part(), xi2, s).scale(2)
        return out

    s = generic_superfield(("lc-s", seed), gens=gens, r=r, deg=deg, shape=(r, 1))
    report = {}
    for p_f in (0, 1):
        f = generic_superfield(("lc-f", seed, p_f), gens=gens, r=1, deg=deg, parity=p_f)
        for l1 in (("x", 0), ("p", 1), ("pp", 2)):
            for l2 in (("x", 1), ("p", 2)):
                xi1 = frame_derivation(l1, gens)
                xi2 = frame_derivation(l2, gens)
                lhs = F(xi1.left_mul(f), xi2, s)
                rhs = f * F(xi1, xi2, s)
                report[(p_f, l1, l2)] = lhs == rhs
    report["all_linear"] = all(v for k, v in report.items() if k != "all_linear")
    return report
