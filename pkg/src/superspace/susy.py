"""Finite supersymmetry transformations with formal odd parameters.

The transformation g maps x^mu to x^mu + i(theta sigma^mu etabar^t -
xi sigma^mu thetabar^t), theta to theta + xi, thetabar to thetabar +
etabar; the variant gp flips the sign of the x-shift.  Parameters live as
extra odd generators appended to the universe, so the group law becomes a
polynomial identity and composition of two transformations uses disjoint
parameter names.
"""

from __future__ import annotations

from .coeffring import GR_I, GR_MINUS_I, GaussRational
from .grassmann import Superfield, U4
from .calculus import THETAS, THETABARS, nilpotent_shift, sigma


class SusyParams:
    """Which transformation (g or gp) plus the four odd parameter names."""

    __slots__ = ("which", "xi", "etabar")

    def __init__(self, which: str = "g",
                 xi: tuple[str, str] = ("xi1", "xi2"),
                 etabar: tuple[str, str] = ("etabar1", "etabar2")):
        if which not in ("g", "gp"):
            raise ValueError("which must be 'g' or 'gp'")
        names = tuple(xi) + tuple(etabar)
        if len(set(names)) != 4 or any(n in U4 for n in names):
            raise ValueError("parameter names must be four fresh odd generators")
        object.__setattr__(self, "which", which)
        object.__setattr__(self, "xi", tuple(xi))
        object.__setattr__(self, "etabar", tuple(etabar))

    def __setattr__(self, name, value):
        raise AttributeError("SusyParams is immutable")

    @property
    def names(self) -> tuple[str, ...]:
        return self.xi + self.etabar


def finite_susy(f: Superfield, p: SusyParams) -> Superfield:
    """Apply the ring automorphism g (or gp) with p's formal parameters.

    f may already live over an enlarged universe from a previous
    transformation, but must not use p's own parameter names.
    """
    if tuple(f.gens[:4]) != U4:
        raise ValueError("superfield must extend the four base odd coordinates")
    gens = f.gens
    for n in p.names:
        if n in gens:
            bit = 1 << gens.index(n)
            if any(m & bit for m in f.terms):
                raise ValueError(f"superfield already uses parameter {n!r}")
    target = gens + tuple(n for n in p.names if n not in gens)
    f = f.extend_universe(target)

    sgn = GR_I if p.which == "g" else GR_MINUS_I
    shifts = []
    for mu in range(4):
        acc = Superfield.zero(target, 1, 1)
        for al in (1, 2):
            for bd in (1, 2):
                s = sigma(mu, al, bd)
                if not s:
                    continue
                acc = acc + (Superfield.odd(THETAS[al - 1], target)
                             * Superfield.odd(p.etabar[bd - 1], target)).scale(s * sgn)
                acc = acc - (Superfield.odd(p.xi[al - 1], target)
                             * Superfield.odd(THETABARS[bd - 1], target)).scale(s * sgn)
        shifts.append(acc)

    repl = {}
    for i, name in enumerate(target):
        g = Superfield.odd(name, target)
        if name in THETAS:
            g = g + Superfield.odd(p.xi[THETAS.index(name)], target)
        elif name in THETABARS:
            g = g + Superfield.odd(p.etabar[THETABARS.index(name)], target)
        repl[i] = g

    # g(c . theta^m) = c(x + shift) . prod g(theta^bits); the shift refers
    # to the original generators, so it is applied per coefficient.
    out = Superfield.zero(target, f.rows, f.cols)
    for mask, coeff in f.terms.items():
        term = nilpotent_shift(Superfield.const(coeff, target), shifts)
        bit = 0
        m = mask
        while m:
            if m & 1:
                term = term * repl[bit]
            m >>= 1
            bit += 1
        out = out + term
    return out


def linearize(F: Superfield, p: SusyParams) -> dict:
    """Extract the coefficient fields of each degree-1 parameter monomial.

    Writing F = F_0 + sum_a xi^a G_a + sum_b etabar^b H_b + O(2), returns
    {name: coefficient} with the coefficient moved to the left of the
    remaining theta-monomial (base-universe superfield).
    """
    gens = F.gens
    base = tuple(n for n in gens if n not in p.names)
    out = {}
    param_bits = 0
    for n in p.names:
        if n in gens:
            param_bits |= 1 << gens.index(n)
    for name in p.names:
        if name not in gens:
            out[name] = Superfield.zero(base, F.rows, F.cols)
            continue
        bit = 1 << gens.index(name)
        terms = {}
        for m, c in F.terms.items():
            if m & param_bits != bit:
                continue
            rest = m & ~bit
            below = (m & (bit - 1)).bit_count()
            terms[rest] = -c if below & 1 else c
        coll = Superfield(gens, F.rows, F.cols, terms)
        if gens[: len(base)] == base:
            coll = coll.restrict_universe(base)
        out[name] = coll
    return out


def susy_commute_check(f: Superfield, p1: SusyParams, p2: SusyParams) -> bool:
    """g' and g commute: apply in both orders over one common universe."""
    if set(p1.names) & set(p2.names):
        raise ValueError("parameter sets must be disjoint")
    a = finite_susy(finite_susy(f, p1), p2)
    pre = f.extend_universe(f.gens + p1.names)
    b_raw = finite_susy(finite_susy(pre, p2), p1)
    return a == b_raw
