"""Left superderivations on superfields and the invariant frame.

A derivation is a finite sum  xi = sum_I c_I . (basis derivation)  with
scalar superfield coefficients written on the left.  The basis consists of
the four even partials d/dx^mu and one odd partial per Grassmann generator.
Brackets of such operators stay first order, so the super bracket is
computed symbolically in coefficient form and certified separately by
application to test fields.

Sign conventions fixed here and used everywhere downstream:

  sigma^0 = -Id,  sigma^1 = [[0,1],[1,0]],
  sigma^2 = [[0,-i],[i,0]],  sigma^3 = [[1,0],[0,-1]]   (entries sigma^mu_{alpha betadot}),

and the halved tables sighalf_mu^{alpha betadot} with sighalf_2 carrying the
opposite imaginary signs, exactly as in the connection component formulas.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffring import GR_I, GR_MINUS_I, GaussRational, MatrixCoeff, PolyScalar
from .grassmann import (
    OperabilityError,
    Superfield,
    U4,
    mask_parity,
)

_H = Fraction(1, 2)

# sigma^mu_{alpha betadot}, indexed [mu][alpha-1][betadot-1]
PAULI = (
    ((GaussRational(-1), GaussRational(0)), (GaussRational(0), GaussRational(-1))),
    ((GaussRational(0), GaussRational(1)), (GaussRational(1), GaussRational(0))),
    ((GaussRational(0), GaussRational(0, -1)), (GaussRational(0, 1), GaussRational(0))),
    ((GaussRational(1), GaussRational(0)), (GaussRational(0), GaussRational(-1))),
)

# sighalf_mu^{alpha betadot}, indexed [mu][alpha-1][betadot-1]
PAULI_HALF = (
    ((GaussRational(-_H), GaussRational(0)), (GaussRational(0), GaussRational(-_H))),
    ((GaussRational(0), GaussRational(_H)), (GaussRational(_H), GaussRational(0))),
    ((GaussRational(0), GaussRational(0, _H)), (GaussRational(0, -_H), GaussRational(0))),
    ((GaussRational(_H), GaussRational(0)), (GaussRational(0), GaussRational(-_H))),
)


def sigma(mu: int, alpha: int, betadot: int) -> GaussRational:
    """sigma^mu_{alpha betadot} with 1-based spinor indices."""
    return PAULI[mu][alpha - 1][betadot - 1]


def sigma_half(mu: int, alpha: int, betadot: int) -> GaussRational:
    return PAULI_HALF[mu][alpha - 1][betadot - 1]


THETAS = ("theta1", "theta2")
THETABARS = ("thetabar1", "thetabar2")

# Frame labels shared with the forms and connection modules:
# ("x", mu) even, ("p", alpha) and ("pp", betadot) odd.
FRAME_LABELS = (
    ("x", 0), ("x", 1), ("x", 2), ("x", 3),
    ("p", 1), ("p", 2), ("pp", 1), ("pp", 2),
)


def frame_parity(label) -> int:
    return 0 if label[0] == "x" else 1


class Derivation:
    """Left superderivation sum_I c_I d_I with scalar coefficients."""

    __slots__ = ("gens", "coeffs")

    def __init__(self, gens: tuple[str, ...], coeffs: dict):
        clean = {}
        for sym, c in coeffs.items():
            if not isinstance(c, Superfield):
                raise TypeError("derivation coefficients must be superfields")
            if c.shape != (1, 1) or c.gens != tuple(gens):
                raise ValueError("coefficients must be scalar fields over the same universe")
            kind, idx = sym
            if kind == "x":
                if not 0 <= idx <= 3:
                    raise ValueError(f"bad coordinate index {idx}")
            elif kind == "g":
                if idx not in gens:
                    raise ValueError(f"unknown odd generator {idx!r}")
            else:
                raise ValueError(f"unknown basis symbol {sym!r}")
            if c:
                clean[sym] = c
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Derivation is immutable")

    @staticmethod
    def zero(gens=U4) -> "Derivation":
        return Derivation(gens, {})

    @staticmethod
    def partial_x(mu: int, gens=U4) -> "Derivation":
        return Derivation(gens, {("x", mu): Superfield.one(gens)})

    @staticmethod
    def partial_odd(name: str, gens=U4) -> "Derivation":
        return Derivation(gens, {("g", name): Superfield.one(gens)})

    def sym_parity(self, sym) -> int:
        return 0 if sym[0] == "x" else 1

    def parity(self) -> int | None:
        """Declared parity read off the coefficients; None when mixed."""
        seen = set()
        for sym, c in self.coeffs.items():
            pc = c.parity()
            if pc is None:
                return None
            seen.add((pc + self.sym_parity(sym)) & 1)
        if not seen:
            return 0
        return seen.pop() if len(seen) == 1 else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.gens == other.gens and self.coeffs == other.coeffs

    def __add__(self, other: "Derivation") -> "Derivation":
        out = dict(self.coeffs)
        for sym, c in other.coeffs.items():
            out[sym] = out[sym] + c if sym in out else c
        return Derivation(self.gens, out)

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + (-other)

    def __neg__(self) -> "Derivation":
        return Derivation(self.gens, {sym: -c for sym, c in self.coeffs.items()})

    def left_mul(self, f: Superfield) -> "Derivation":
        """f . xi, the module structure on derivations."""
        return Derivation(self.gens, {sym: f * c for sym, c in self.coeffs.items()})

    def scale(self, c) -> "Derivation":
        return Derivation(self.gens, {sym: f.scale(c) for sym, f in self.coeffs.items()})

    def apply_basis(self, sym, f: Superfield) -> Superfield:
        kind, idx = sym
        if kind == "x":
            return f.partial_x(idx)
        bit = f.gens.index(idx)
        out = {}
        for m, c in f.terms.items():
            if m >> bit & 1:
                below = m & ((1 << bit) - 1)
                out[m ^ (1 << bit)] = -c if below.bit_count() & 1 else c
        return Superfield(f.gens, f.rows, f.cols, out)

    def __call__(self, f: Superfield) -> Superfield:
        if f.gens != self.gens:
            raise ValueError("universe mismatch between derivation and field")
        out = Superfield.zero(self.gens, f.rows, f.cols)
        for sym, c in self.coeffs.items():
            out = out + c * self.apply_basis(sym, f)
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        names = {"x": "d/dx", "g": "d/d"}
        return " + ".join(
            f"({c}) {names[sym[0]]}{sym[1]}" for sym, c in sorted(self.coeffs.items(), key=str)
        )

    __repr__ = __str__


def apply(xi: Derivation, f: Superfield) -> Superfield:
    return xi(f)


def bracket(xi: Derivation, zeta: Derivation) -> Derivation:
    """Super bracket [xi, zeta} = xi zeta - (-1)^{p(xi)p(zeta)} zeta xi.

    For first-order operators with homogeneous coefficients the second-order
    parts cancel, leaving the coefficient formula used here.
    """
    p1, p2 = xi.parity(), zeta.parity()
    if p1 is None or p2 is None:
        raise ValueError("bracket requires parity-homogeneous derivations")
    sign = -1 if (p1 and p2) else 1
    out = {}
    for sym, d in zeta.coeffs.items():
        out[sym] = xi(d)
    for sym, c in xi.coeffs.items():
        t = zeta(c)
        if sign < 0:
            out[sym] = out[sym] + t if sym in out else t
        else:
            out[sym] = out[sym] - t if sym in out else -t
    return Derivation(xi.gens, out)


def _odd_field(name: str, gens) -> Superfield:
    return Superfield.odd(name, gens)


def standard_frame(gens=U4) -> dict:
    """The SUSY generators and the invariant frame as named derivations.

    Keys: Q1, Q2, Qbar1, Qbar2, e0..e3, e1p, e2p, e1pp, e2pp.
    """
    if tuple(gens[:4]) != U4:
        raise ValueError("frame needs the four base odd coordinates")
    fr: dict = {}
    for mu in range(4):
        fr[f"e{mu}"] = Derivation.partial_x(mu, gens)
    for alpha in (1, 2):
        # Q_alpha = d/dtheta^alpha - i sum sigma^mu_{alpha betadot} thetabar^betadot d_mu
        qc = {("g", THETAS[alpha - 1]): Superfield.one(gens)}
        ec = {("g", THETAS[alpha - 1]): Superfield.one(gens)}
        for mu in range(4):
            acc = Superfield.zero(gens, 1, 1)
            for bd in (1, 2):
                s = sigma(mu, alpha, bd)
                if s:
                    acc = acc + _odd_field(THETABARS[bd - 1], gens).scale(s)
            if acc:
                qc[("x", mu)] = acc.scale(GR_MINUS_I)
                ec[("x", mu)] = acc.scale(GR_I)
        fr[f"Q{alpha}"] = Derivation(gens, qc)
        fr[f"e{alpha}p"] = Derivation(gens, ec)
    for bd in (1, 2):
        # Qbar_betadot = -d/dthetabar^betadot + i sum theta^alpha sigma^mu_{alpha betadot} d_mu
        qc = {("g", THETABARS[bd - 1]): -Superfield.one(gens)}
        ec = {("g", THETABARS[bd - 1]): -Superfield.one(gens)}
        for mu in range(4):
            acc = Superfield.zero(gens, 1, 1)
            for alpha in (1, 2):
                s = sigma(mu, alpha, bd)
                if s:
                    acc = acc + _odd_field(THETAS[alpha - 1], gens).scale(s)
            if acc:
                qc[("x", mu)] = acc.scale(GR_I)
                ec[("x", mu)] = acc.scale(GR_MINUS_I)
        fr[f"Qbar{bd}"] = Derivation(gens, qc)
        fr[f"e{bd}pp"] = Derivation(gens, ec)
    return fr


def frame_derivation(label, gens=U4) -> Derivation:
    """Invariant-frame derivation for a frame label."""
    fr = standard_frame(gens)
    kind, idx = label
    if kind == "x":
        return fr[f"e{idx}"]
    if kind == "p":
        return fr[f"e{idx}p"]
    if kind == "pp":
        return fr[f"e{idx}pp"]
    raise ValueError(f"unknown frame label {label!r}")


def sandwich(mu: int, left: tuple[str, str], right: tuple[str, str], gens) -> Superfield:
    """sum_{alpha,betadot} left^alpha sigma^mu_{alpha betadot} right^betadot."""
    acc = Superfield.zero(gens, 1, 1)
    for a in (1, 2):
        for b in (1, 2):
            s = sigma(mu, a, b)
            if s:
                acc = acc + (_odd_field(left[a - 1], gens) * _odd_field(right[b - 1], gens)).scale(s)
    return acc


def theta_sigma_thetabar(mu: int, gens=U4) -> Superfield:
    return sandwich(mu, THETAS, THETABARS, gens)


def nilpotent_shift(f: Superfield, shifts) -> Superfield:
    """Substitute x^mu -> x^mu + n^mu for even nilpotent scalar shifts.

    The binomial expansion is exact and finite: each n^mu carries positive
    Grassmann degree, so high powers vanish.
    """
    shifts = list(shifts)
    if len(shifts) != 4:
        raise ValueError("need exactly four shifts")
    gens = f.gens
    for mu, n in enumerate(shifts):
        if n.gens != gens or n.shape != (1, 1):
            raise OperabilityError("shifts must be scalar fields over the same universe")
        if not n.is_even():
            raise OperabilityError(f"shift {mu} is not even")
        if not n.is_nilpotent():
            raise OperabilityError(f"shift {mu} is not nilpotent")
    for i in range(4):
        for j in range(i + 1, 4):
            if shifts[i] * shifts[j] != shifts[j] * shifts[i]:
                raise OperabilityError("shifts must commute")

    xs = [Superfield.coordinate(mu, gens) + shifts[mu] for mu in range(4)]
    pow_cache: list[dict[int, Superfield]] = [{0: Superfield.one(gens)} for _ in range(4)]

    def xpow(mu: int, e: int) -> Superfield:
        if e not in pow_cache[mu]:
            pow_cache[mu][e] = xpow(mu, e - 1) * xs[mu]
        return pow_cache[mu][e]

    def shift_poly(p: PolyScalar) -> Superfield:
        acc = Superfield.zero(gens, 1, 1)
        for exp, c in p.iter_terms():
            term = Superfield.one(gens)
            for mu, e in enumerate(exp):
                if e:
                    term = term * xpow(mu, e)
            acc = acc + term.scale(c)
        return acc

    out = Superfield.zero(gens, f.rows, f.cols)
    for mask, coeff in f.terms.items():
        shifted = Superfield.zero(gens, f.rows, f.cols)
        for i in range(coeff.rows):
            for j in range(coeff.cols):
                p = coeff.entries[i][j]
                if p.is_zero():
                    continue
                s = shift_poly(p)
                for m2, c2 in s.terms.items():
                    unit = [[PolyScalar.zero()] * coeff.cols for _ in range(coeff.rows)]
                    unit[i][j] = c2.entries[0][0]
                    shifted = shifted + Superfield.monomial(MatrixCoeff(unit), m2, gens)
        mono = Superfield(gens, 1, 1, {mask: MatrixCoeff.identity(1)})
        out = out + shifted * mono
    return out


class FrameVector:
    """A derivation expressed in the invariant frame: sum_I u^I e_I."""

    __slots__ = ("gens", "comps")

    def __init__(self, gens: tuple[str, ...], comps: dict):
        clean = {}
        for label, c in comps.items():
            if label not in FRAME_LABELS:
                raise ValueError(f"unknown frame label {label!r}")
            if c.shape != (1, 1) or c.gens != tuple(gens):
                raise ValueError("frame components must be scalar fields")
            if c:
                clean[label] = c
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "comps", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FrameVector is immutable")

    @staticmethod
    def frame(label, gens=U4) -> "FrameVector":
        return FrameVector(gens, {label: Superfield.one(gens)})

    def left_mul(self, f: Superfield) -> "FrameVector":
        return FrameVector(self.gens, {l: f * c for l, c in self.comps.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrameVector):
            return NotImplemented
        return self.gens == other.gens and self.comps == other.comps

    def __add__(self, other: "FrameVector") -> "FrameVector":
        out = dict(self.comps)
        for l, c in other.comps.items():
            out[l] = out[l] + c if l in out else c
        return FrameVector(self.gens, out)

    def as_derivation(self) -> Derivation:
        out = Derivation.zero(self.gens)
        for label, c in self.comps.items():
            out = out + frame_derivation(label, self.gens).left_mul(c)
        return out


def canonical_connection(u: FrameVector, v: FrameVector) -> FrameVector:
    """nabla^can_u v:  O_X-linear in u, graded Leibniz in v, and equal to the
    super bracket [e_I, e_J} on frame pairs.  Only the mixed odd brackets
    {e_alpha', e_betadot''} = -2i sigma^mu e_mu are nonzero."""
    gens = u.gens
    out: dict = {}

    def add(label, val: Superfield):
        if label in out:
            out[label] = out[label] + val
        else:
            out[label] = val

    frame_cache = {l: frame_derivation(l, gens) for l in FRAME_LABELS}
    for lu, cu in u.comps.items():
        pu = frame_parity(lu)
        for lv, cv in v.comps.items():
            # derivative part: u^I (e_I v^J) e_J
            add(lv, cu * frame_cache[lu](cv))
            # structure part: u^I (parity-twisted v^J) [e_I, e_J}
            ku, iu = lu
            kv, iv = lv
            pair = None
            if ku == "p" and kv == "pp":
                pair = (iu, iv)
            elif ku == "pp" and kv == "p":
                pair = (iv, iu)
            if pair is not None:
                tw = cv.twisted_by(pu)
                for mu in range(4):
                    s = sigma(mu, pair[0], pair[1])
                    if s:
                        add(("x", mu), (cu * tw).scale(s * GaussRational(0, -2)))
    return FrameVector(gens, out)
