"""Exterior algebra on the invariant coframe with superfield coefficients.

Forms are stored over the invariant basis e^mu (even), e^alpha' and
e^beta'' (odd), with coefficients placed on the RIGHT of each basis word.
The coordinate coframe dx, dtheta, dthetabar is provided by constructors
that expand into the invariant basis.

Sign conventions (all derived from the tensor-algebra definitions):

  - basis swap: w_a ^ w_b = -(-1)^{p(a)p(b)} w_b ^ w_a, so odd-odd pairs
    are symmetric (e^1' ^ e^1' survives) and everything else alternates;
  - coefficient crossing: f . e^I = e^I . (parity-twist^{p(e^I)} f);
  - right-evaluation on derivations follows the permutation-sum formula
    with the Z/2-permutation sign and the parity-crossing exponents.
"""

from __future__ import annotations

import itertools

from .coeffring import GaussRational
from .grassmann import Superfield, U4
from .calculus import (
    Derivation,
    FRAME_LABELS,
    THETAS,
    THETABARS,
    frame_derivation,
    frame_parity,
    sigma,
)

_ORDER = {label: i for i, label in enumerate(FRAME_LABELS)}


def _normalize_word(word):
    """Canonical ordering of a basis word; returns (sign, word) or None."""
    w = list(word)
    sign = 1
    for i in range(1, len(w)):
        j = i
        while j > 0 and _ORDER[w[j - 1]] > _ORDER[w[j]]:
            pa, pb = frame_parity(w[j - 1]), frame_parity(w[j])
            if not (pa and pb):
                sign = -sign
            w[j - 1], w[j] = w[j], w[j - 1]
            j -= 1
    for i in range(1, len(w)):
        if w[i] == w[i - 1] and frame_parity(w[i]) == 0:
            return None
    return sign, tuple(w)


class Form:
    """Degree-k form: sum of basis words with right superfield coefficients."""

    __slots__ = ("gens", "rows", "cols", "degree", "terms")

    def __init__(self, gens, rows, cols, degree, terms):
        clean = {}
        for word, c in terms.items():
            if len(word) != degree:
                raise ValueError("word length does not match degree")
            if c.gens != tuple(gens) or c.shape != (rows, cols):
                raise ValueError("coefficient universe/shape mismatch")
            norm = _normalize_word(word)
            if norm is None:
                continue
            sign, w = norm
            add = -c if sign < 0 else c
            clean[w] = clean[w] + add if w in clean else add
        clean = {w: c for w, c in clean.items() if c}
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    @staticmethod
    def zero(gens=U4, degree: int = 1, rows: int = 1, cols: int | None = None) -> "Form":
        return Form(gens, rows, rows if cols is None else cols, degree, {})

    @staticmethod
    def basis(label, gens=U4, rows: int = 1) -> "Form":
        if label not in FRAME_LABELS:
            raise ValueError(f"unknown coframe label {label!r}")
        return Form(gens, rows, rows, 1, {(label,): Superfield.one(gens, rows)})

    @staticmethod
    def from_components(comps: dict, gens=U4) -> "Form":
        """1-form sum_I e^I . A_I from a label-to-superfield map."""
        shape = None
        for c in comps.values():
            shape = c.shape
            break
        if shape is None:
            return Form.zero(gens, 1)
        return Form(gens, shape[0], shape[1], 1,
                    {(label,): c for label, c in comps.items() if c})

    def component(self, word) -> Superfield:
        word = tuple(word) if isinstance(word, (list, tuple)) and word and isinstance(word[0], tuple) else (word,)
        norm = _normalize_word(word)
        if norm is None:
            return Superfield.zero(self.gens, self.rows, self.cols)
        sign, w = norm
        c = self.terms.get(w)
        if c is None:
            return Superfield.zero(self.gens, self.rows, self.cols)
        return -c if sign < 0 else c

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (self.gens == other.gens and self.degree == other.degree
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Form") -> "Form":
        if self.degree != other.degree:
            raise ValueError("degree mismatch in form addition")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return Form(self.gens, self.rows, self.cols, self.degree, out)

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __neg__(self) -> "Form":
        return Form(self.gens, self.rows, self.cols, self.degree,
                    {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "Form":
        return Form(self.gens, self.rows, self.cols, self.degree,
                    {w: f.scale(c) for w, f in self.terms.items()})

    def right_mul(self, f: Superfield) -> "Form":
        out = {w: c * f for w, c in self.terms.items()}
        probe = next(iter(out.values()), None)
        rows, cols = probe.shape if probe is not None else (self.rows, self.cols)
        return Form(self.gens, rows, cols, self.degree, out)

    def left_mul(self, f: Superfield) -> "Form":
        """f . form: the coefficient crosses the word with a parity twist."""
        out = {}
        for w, c in self.terms.items():
            pw = sum(frame_parity(l) for l in w) & 1
            out[w] = f.twisted_by(pw) * c
        probe = next(iter(out.values()), None)
        rows, cols = probe.shape if probe is not None else (self.rows, self.cols)
        return Form(self.gens, rows, cols, self.degree, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = []
        for w, c in sorted(self.terms.items()):
            sym = "^".join(_label_str(l) for l in w) or "1"
            names.append(f"{sym} . ({c})")
        return "  +  ".join(names)

    __repr__ = __str__


def _label_str(label) -> str:
    kind, idx = label
    if kind == "x":
        return f"ex[{idx}]"
    if kind == "p":
        return f"ef[{idx}']"
    return f"ef[{idx}'']"


def wedge(a: Form, b: Form) -> Form:
    if a.gens != b.gens:
        raise ValueError("universe mismatch in wedge")
    terms: dict = {}
    for w1, f in a.terms.items():
        for w2, g in b.terms.items():
            pw2 = sum(frame_parity(l) for l in w2) & 1
            coeff = f.twisted_by(pw2) * g
            word = w1 + w2
            norm = _normalize_word(word)
            if norm is None or not coeff:
                continue
            sign, w = norm
            add = -coeff if sign < 0 else coeff
            terms[w] = terms[w] + add if w in terms else add
    probe = next(iter(terms.values()), None)
    rows, cols = probe.shape if probe is not None else (a.rows, b.cols)
    return Form(a.gens, rows, cols, a.degree + b.degree, terms)


_STRUCTURE: list[tuple[tuple, tuple, GaussRational]] | None = None


def _structure_terms():
    """de^mu = -2i sum sigma^mu_{ab} e^a' ^ e^b'' ; all other de^I vanish."""
    global _STRUCTURE
    if _STRUCTURE is None:
        out = []
        for mu in range(4):
            for al in (1, 2):
                for bd in (1, 2):
                    s = sigma(mu, al, bd)
                    if s:
                        out.append((("x", mu), (("p", al), ("pp", bd)),
                                    s * GaussRational(0, -2)))
        _STRUCTURE = out
    return _STRUCTURE


def exterior_d(a: Form) -> Form:
    gens = a.gens
    k = a.degree
    terms: dict = {}

    def add(word, coeff):
        if not coeff:
            return
        norm = _normalize_word(word)
        if norm is None:
            return
        sign, w = norm
        val = -coeff if sign < 0 else coeff
        terms[w] = terms[w] + val if w in terms else val

    frame_cache = {l: frame_derivation(l, gens) for l in FRAME_LABELS}
    structure = _structure_terms()
    for word, g in a.terms.items():
        # d on the basis word, one letter at a time
        for j, label in enumerate(word):
            if label[0] != "x":
                continue
            pre_sign = -1 if j & 1 else 1
            for src, pair, c in structure:
                if src != label:
                    continue
                coeff = g.scale(c if pre_sign > 0 else -c)
                add(word[:j] + pair + word[j + 1:], coeff)
        # (-1)^k word ^ dg with dg = sum_I e^I . (e_I g)
        for label in FRAME_LABELS:
            dg = frame_cache[label](g)
            if not dg:
                continue
            add(word + (label,), -dg if k & 1 else dg)
    return Form(gens, a.rows, a.cols, k + 1, terms)


def _eval_basis_one_form(label, xi: Derivation) -> Superfield:
    """(xi) <- e^I for a single invariant coframe element."""
    gens = xi.gens
    kind, idx = label
    if kind == "p":
        return xi(Superfield.odd(THETAS[idx - 1], gens))
    if kind == "pp":
        return -xi(Superfield.odd(THETABARS[idx - 1], gens))
    p_xi = xi.parity()
    out = xi(Superfield.coordinate(idx, gens))
    for al in (1, 2):
        xth = xi(Superfield.odd(THETAS[al - 1], gens))
        if xth:
            for bd in (1, 2):
                s = sigma(idx, al, bd)
                if s:
                    c = s * GaussRational(0, 1)
                    if p_xi:
                        c = -c
                    out = out + (Superfield.odd(THETABARS[bd - 1], gens) * xth).scale(c)
    for bd in (1, 2):
        xtb = xi(Superfield.odd(THETABARS[bd - 1], gens))
        if xtb:
            for al in (1, 2):
                s = sigma(idx, al, bd)
                if s:
                    c = s * GaussRational(0, 1)
                    if p_xi:
                        c = -c
                    out = out + (Superfield.odd(THETAS[al - 1], gens) * xtb).scale(c)
    return out


def evaluate_right(a: Form, *xis: Derivation) -> Superfield:
    """(xi_1, ..., xi_k) <- a, the right-evaluation on derivations."""
    if len(xis) != a.degree:
        raise ValueError(f"need {a.degree} derivations, got {len(xis)}")
    pxs = []
    for xi in xis:
        p = xi.parity()
        if p is None:
            raise ValueError("evaluation needs parity-homogeneous derivations")
        pxs.append(p)

    k = a.degree
    out = Superfield.zero(a.gens, a.rows, a.cols)
    ev_cache: dict = {}

    def ev(label, i):
        if (label, i) not in ev_cache:
            ev_cache[(label, i)] = _eval_basis_one_form(label, xis[i])
        return ev_cache[(label, i)]

    for word, g in a.terms.items():
        ps = [frame_parity(l) for l in word]
        pword = sum(ps) & 1
        for g_hom, pg in ((g.even_part(), 0), (g.odd_part(), 1)):
            if not g_hom:
                continue
            # move the right-stored coefficient to the left of the word
            base = -g_hom if (pg & pword) else g_hom
            for tau in itertools.permutations(range(k)):
                sign = 1
                order = list(tau)
                for i in range(1, k):
                    j = i
                    while j > 0 and order[j - 1] > order[j]:
                        if not (ps[order[j - 1]] and ps[order[j]]):
                            sign = -sign
                        order[j - 1], order[j] = order[j], order[j - 1]
                        j -= 1
                crossing = 0
                acc = pg
                for i in range(k):
                    crossing ^= pxs[i] & acc
                    acc ^= ps[tau[i]]
                term = base
                ok = True
                for i in range(k):
                    e = ev(word[tau[i]], i)
                    if not e:
                        ok = False
                        break
                    term = term * e
                if not ok:
                    continue
                if (sign < 0) != bool(crossing):
                    term = -term
                out = out + term
    return out


def dx(mu: int, gens=U4) -> Form:
    """Coordinate 1-form dx^mu expanded in the invariant coframe."""
    comps = {("x", mu): Superfield.one(gens)}
    for al in (1, 2):
        acc = Superfield.zero(gens, 1, 1)
        for bd in (1, 2):
            s = sigma(mu, al, bd)
            if s:
                acc = acc + Superfield.odd(THETABARS[bd - 1], gens).scale(s * GaussRational(0, 1))
        if acc:
            comps[("p", al)] = acc
    for bd in (1, 2):
        acc = Superfield.zero(gens, 1, 1)
        for al in (1, 2):
            s = sigma(mu, al, bd)
            if s:
                acc = acc + Superfield.odd(THETAS[al - 1], gens).scale(s * GaussRational(0, -1))
        if acc:
            comps[("pp", bd)] = acc
    return Form.from_components(comps, gens)


def dtheta(alpha: int, gens=U4) -> Form:
    return Form.basis(("p", alpha), gens)


def dthetabar(betadot: int, gens=U4) -> Form:
    return -Form.basis(("pp", betadot), gens)


def d_superfield(f: Superfield) -> Form:
    """df = sum_I e^I . (e_I f) in the invariant coframe."""
    from .calculus import frame_derivation
    comps = {}
    for label in FRAME_LABELS:
        v = frame_derivation(label, f.gens)(f)
        if v:
            comps[label] = v
    if not comps:
        return Form.zero(f.gens, 1, f.rows, f.cols)
    return Form.from_components(comps, f.gens)


def to_coordinate_components(a: Form) -> dict:
    """Split a 1-form into coordinate-coframe components.

    Returns {("dx", mu): ..., ("dtheta", alpha): ..., ("dthetabar", bd): ...}
    with a_mu = A_mu, b_alpha = A_alpha' - i sum sigma^mu thetabar A_mu,
    b_betadot = -A_beta'' - i sum sigma^mu theta A_mu.
    """
    if a.degree != 1:
        raise ValueError("coordinate conversion applies to 1-forms")
    gens = a.gens
    zero = Superfield.zero(gens, a.rows, a.cols)
    A = {label: a.terms.get((label,), zero) for label in FRAME_LABELS}
    out = {}
    for mu in range(4):
        out[("dx", mu)] = A[("x", mu)]
    for al in (1, 2):
        acc = A[("p", al)]
        for mu in range(4):
            for bd in (1, 2):
                s = sigma(mu, al, bd)
                if s and A[("x", mu)]:
                    acc = acc - (Superfield.odd(THETABARS[bd - 1], gens) * A[("x", mu)]).scale(
                        s * GaussRational(0, 1))
        out[("dtheta", al)] = acc
    for bd in (1, 2):
        acc = -A[("pp", bd)]
        for mu in range(4):
            for al in (1, 2):
                s = sigma(mu, al, bd)
                if s and A[("x", mu)]:
                    acc = acc - (Superfield.odd(THETAS[al - 1], gens) * A[("x", mu)]).scale(
                        s * GaussRational(0, 1))
        out[("dthetabar", bd)] = acc
    return out
