"""Matrix-valued superfields over a finite Grassmann algebra.

A superfield is a finite sum  f = sum_S  f_S(x) . theta^S  with the
coefficient matrices written to the LEFT of the odd monomials; theta^S runs
over subsets of a fixed ordered tuple of odd generators, stored as bitmasks.
The default universe has the four odd coordinates; SUSY parameters extend it
to eight.  All sign bookkeeping happens in ``mono_mul``: a single
transposition count decides the sign of any product.
"""

from __future__ import annotations

from math import comb

from .coeffring import (
    GR_ONE,
    GR_ZERO,
    GaussRational,
    MatrixCoeff,
    PolyScalar,
    mat_acc_build,
    mat_acc_mul,
    mat_acc_new,
)

# Ordered generator universes.  Positions are bit indices, so the base
# universe embeds into the extended one without remapping masks.
U4 = ("theta1", "theta2", "thetabar1", "thetabar2")
U8 = U4 + ("xi1", "xi2", "etabar1", "etabar2")
ULINE = ("theta",)  # the superline, used by the left-connection counterexample

THETA_BITS = (0, 1)        # theta^1, theta^2 in U4/U8
THETABAR_BITS = (2, 3)     # thetabar^1, thetabar^2
TOP_MASK_U4 = 0b1111


class OperabilityError(ValueError):
    """Raised when inputs violate an operability precondition (parity,
    commutativity, nilpotency)."""


def mono_mul(s_mask: int, t_mask: int) -> tuple[int, int] | None:
    """Product of two Grassmann monomials given as bitmasks.

    Returns (sign, union_mask), or None when a generator repeats.  The sign
    is (-1)^k where k counts the transpositions sorting the concatenation
    S then T into increasing order.
    """
    if s_mask & t_mask:
        return None
    sign = 1
    t = t_mask
    while t:
        low = t & -t
        # generators of S strictly above this T generator must be crossed
        above = s_mask >> (low.bit_length())
        if above.bit_count() & 1:
            sign = -sign
        t ^= low
    return sign, s_mask | t_mask


def mask_degree(mask: int) -> int:
    return mask.bit_count()


def mask_parity(mask: int) -> int:
    return mask.bit_count() & 1


def mask_from_names(gens: tuple[str, ...], names) -> int:
    mask = 0
    for n in names:
        try:
            b = gens.index(n)
        except ValueError:
            raise ValueError(f"generator {n!r} not in universe {gens}") from None
        if mask >> b & 1:
            raise ValueError(f"generator {n!r} repeated")
        mask |= 1 << b
    return mask


def mask_names(gens: tuple[str, ...], mask: int) -> tuple[str, ...]:
    return tuple(g for b, g in enumerate(gens) if mask >> b & 1)


class Superfield:
    """Element of the matrix superfield ring over a fixed odd universe."""

    __slots__ = ("gens", "rows", "cols", "terms")

    def __init__(self, gens: tuple[str, ...], rows: int, cols: int, terms: dict | None = None):
        top = (1 << len(gens)) - 1
        clean: dict[int, MatrixCoeff] = {}
        if terms:
            for mask, coeff in terms.items():
                if mask & ~top:
                    raise ValueError(f"monomial mask {mask:#x} outside universe {gens}")
                if coeff.shape != (rows, cols):
                    raise ValueError(f"coefficient shape {coeff.shape} != ({rows}, {cols})")
                if coeff:
                    clean[int(mask)] = coeff
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Superfield is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(gens=U4, rows: int = 1, cols: int | None = None) -> "Superfield":
        return Superfield(gens, rows, rows if cols is None else cols)

    @staticmethod
    def const(coeff: MatrixCoeff, gens=U4) -> "Superfield":
        return Superfield(gens, coeff.rows, coeff.cols, {0: coeff})

    @staticmethod
    def one(gens=U4, r: int = 1) -> "Superfield":
        return Superfield.const(MatrixCoeff.identity(r), gens)

    @staticmethod
    def scalar(p, gens=U4) -> "Superfield":
        if isinstance(p, (int, GaussRational)):
            p = PolyScalar.const(p)
        return Superfield.const(MatrixCoeff([[p]]), gens)

    @staticmethod
    def coordinate(mu: int, gens=U4) -> "Superfield":
        return Superfield.scalar(PolyScalar.variable(mu), gens)

    @staticmethod
    def odd(name: str, gens=U4, r: int = 1) -> "Superfield":
        mask = mask_from_names(gens, [name])
        return Superfield(gens, r, r, {mask: MatrixCoeff.identity(r)})

    @staticmethod
    def monomial(coeff: MatrixCoeff, names, gens=U4) -> "Superfield":
        mask = names if isinstance(names, int) else mask_from_names(gens, names)
        return Superfield(gens, coeff.rows, coeff.cols, {mask: coeff})

    # -- structure ----------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Superfield):
            return NotImplemented
        return (
            self.gens == other.gens
            and self.shape == other.shape
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.gens, self.shape, frozenset(self.terms.items())))

    def component(self, index) -> MatrixCoeff:
        """Coefficient at a monomial (mask, or iterable of generator names)."""
        mask = index if isinstance(index, int) else mask_from_names(self.gens, index)
        c = self.terms.get(mask)
        return c if c is not None else MatrixCoeff.zero(self.rows, self.cols)

    def body(self) -> MatrixCoeff:
        return self.component(0)

    def even_part(self) -> "Superfield":
        return Superfield(
            self.gens, self.rows, self.cols,
            {m: c for m, c in self.terms.items() if not mask_parity(m)},
        )

    def odd_part(self) -> "Superfield":
        return Superfield(
            self.gens, self.rows, self.cols,
            {m: c for m, c in self.terms.items() if mask_parity(m)},
        )

    def is_even(self) -> bool:
        return all(not mask_parity(m) for m in self.terms)

    def is_odd(self) -> bool:
        return all(mask_parity(m) for m in self.terms)

    def parity(self) -> int | None:
        """0, 1, or None when the field mixes parities."""
        if self.is_zero() or self.is_even():
            return 0
        if self.is_odd():
            return 1
        return None

    def is_nilpotent(self) -> bool:
        return self.body().is_zero()

    def grassmann_degrees(self) -> set[int]:
        return {mask_degree(m) for m in self.terms}

    # -- arithmetic ---------------------------------------------------

    def _require_compatible(self, other: "Superfield"):
        if self.gens != other.gens:
            raise ValueError(f"universe mismatch {self.gens} vs {other.gens}")

    def __add__(self, other: "Superfield") -> "Superfield":
        self._require_compatible(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return Superfield(self.gens, self.rows, self.cols, out)

    def __sub__(self, other: "Superfield") -> "Superfield":
        self._require_compatible(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = -c if s is None else s - c
        return Superfield(self.gens, self.rows, self.cols, out)

    def __neg__(self) -> "Superfield":
        return Superfield(self.gens, self.rows, self.cols, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Superfield") -> "Superfield":
        """Superfield product.

        Coefficients are even ring elements, so they pass through odd
        generators freely; the only sign is the monomial transposition sign.
        A 1x1 factor broadcasts over any shape.
        """
        self._require_compatible(other)
        s11 = self.shape == (1, 1)
        o11 = other.shape == (1, 1)
        if s11 and not o11:
            rows, cols = other.shape
        elif o11 and not s11:
            rows, cols = self.shape
        else:
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply shapes {self.shape} and {other.shape}")
            rows, cols = self.rows, other.cols
        states: dict[int, list] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                st = mono_mul(m1, m2)
                if st is None:
                    continue
                sign, m = st
                state = states.get(m)
                if state is None:
                    state = mat_acc_new(rows, cols)
                    states[m] = state
                mat_acc_mul(state, c1, c2, sign)
        out = {m: mat_acc_build(state) for m, state in states.items()}
        return Superfield(self.gens, rows, cols, out)

    def scale(self, c) -> "Superfield":
        """Multiply every coefficient by a GaussRational or PolyScalar."""
        return Superfield(self.gens, self.rows, self.cols, {m: k.scale(c) for m, k in self.terms.items()})

    def mat_left(self, mat: MatrixCoeff) -> "Superfield":
        """Left-multiply every coefficient by a constant-in-theta matrix."""
        return Superfield.const(mat, self.gens) * self

    def mat_right(self, mat: MatrixCoeff) -> "Superfield":
        return self * Superfield.const(mat, self.gens)

    def parity_conjugate(self) -> "Superfield":
        """The involution: even part unchanged, odd part negated."""
        return Superfield(
            self.gens, self.rows, self.cols,
            {m: (-c if mask_parity(m) else c) for m, c in self.terms.items()},
        )

    def twisted_by(self, parity: int) -> "Superfield":
        """Apply the parity conjugation only when ``parity`` is odd."""
        return self.parity_conjugate() if parity & 1 else self

    def partial_x(self, mu: int) -> "Superfield":
        return Superfield(self.gens, self.rows, self.cols, {m: c.partial(mu) for m, c in self.terms.items()})

    def trace(self) -> "Superfield":
        return Superfield(self.gens, 1, 1, {m: MatrixCoeff([[c.trace()]]) for m, c in self.terms.items()})

    def real_part(self) -> "Superfield":
        return Superfield(self.gens, self.rows, self.cols, {m: c.real_part() for m, c in self.terms.items()})

    def transpose(self) -> "Superfield":
        return Superfield(
            self.gens, self.cols, self.rows,
            {m: MatrixCoeff(list(zip(*c.entries))) for m, c in self.terms.items()},
        )

    def __pow__(self, n: int) -> "Superfield":
        if n < 0:
            raise ValueError("negative superfield power")
        if self.rows != self.cols:
            raise ValueError("powers need a square shape")
        out = Superfield.one(self.gens, self.rows)
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other: "Superfield") -> "Superfield":
        return self * other - other * self

    # -- universe changes ---------------------------------------------

    def extend_universe(self, gens: tuple[str, ...]) -> "Superfield":
        if tuple(gens[: len(self.gens)]) != self.gens:
            raise ValueError("target universe must extend the current one")
        return Superfield(gens, self.rows, self.cols, dict(self.terms))

    def restrict_universe(self, gens: tuple[str, ...]) -> "Superfield":
        if tuple(self.gens[: len(gens)]) != tuple(gens):
            raise ValueError("target universe must be an initial segment")
        top = (1 << len(gens)) - 1
        if any(m & ~top for m in self.terms):
            raise ValueError("field uses generators outside the target universe")
        return Superfield(gens, self.rows, self.cols, dict(self.terms))

    # -- display ------------------------------------------------------

    def block_matrix(self) -> list:
        """4x4 bookkeeping array over the four base odd coordinates.

        Rows follow the theta part (1, theta1, theta2, theta1 theta2) and
        columns the thetabar part (1, thetabar1, thetabar2,
        thetabar1 thetabar2) of the monomial.
        """
        if tuple(self.gens[:4]) != U4 or any(m > TOP_MASK_U4 for m in self.terms):
            raise ValueError("block layout requires the four base odd coordinates")
        return [[self.component(i | (j << 2)) for j in range(4)] for i in range(4)]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (mask_degree(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            names = " ".join(mask_names(self.gens, m))
            cs = str(c) if self.shape != (1, 1) else f"({c.entries[0][0]})"
            parts.append(f"{cs} {names}".strip())
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return [
            {"monomial": " ".join(mask_names(self.gens, m)) or "1", "coeff": c.to_json()}
            for m, c in self.sorted_terms()
        ]


def parity_conjugate(f: Superfield) -> Superfield:
    return f.parity_conjugate()


def sf_mul(f: Superfield, g: Superfield) -> Superfield:
    return f * g


def component(f: Superfield, index) -> MatrixCoeff:
    return f.component(index)


def block_matrix(f: Superfield) -> list:
    return f.block_matrix()


def _check_operable_family(fs) -> None:
    for i, f in enumerate(fs):
        if not f.is_even():
            raise OperabilityError(f"argument {i} is not even")
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if fs[i] * fs[j] != fs[j] * fs[i]:
                raise OperabilityError(f"arguments {i} and {j} do not commute")


def poly_substitute(h: dict, fs) -> Superfield:
    """Direct substitution h(f1..fl) for a polynomial h given as a map from
    exponent tuples to coefficients.  Serves as the oracle for the expansion
    route."""
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one argument")
    gens, r = fs[0].gens, fs[0].rows
    out = Superfield.zero(gens, r, r)
    for exp, c in h.items():
        if len(exp) != len(fs):
            raise ValueError("exponent tuple length does not match argument count")
        term = Superfield.one(gens, r)
        for f, e in zip(fs, exp):
            for _ in range(e):
                term = term * f
        if not isinstance(c, GaussRational):
            c = GaussRational(c)
        out = out + term.scale(c)
    return out


def cinfty_eval_poly(h: dict, fs, check: bool = True) -> Superfield:
    """Evaluate a polynomial operation on even superfields by Taylor
    expansion around the bodies:

        h(f) = sum_d  (1/d!) (partial^d h)(bodies) . (nilpotent parts)^d .

    The sum is finite because the nilpotent parts carry Grassmann degree.
    Agrees with poly_substitute for pairwise commuting even arguments.
    """
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one argument")
    gens, r = fs[0].gens, fs[0].rows
    for f in fs:
        if f.gens != gens or f.shape != (r, r):
            raise ValueError("arguments must share universe and square shape")
    if check:
        _check_operable_family(fs)

    bodies = [Superfield.const(f.body(), gens) for f in fs]
    nils = [f - b for f, b in zip(fs, bodies)]
    l = len(fs)
    maxdeg = [max((exp[i] for exp in h), default=0) for i in range(l)]

    body_pow: list[dict[int, Superfield]] = [{0: Superfield.one(gens, r)} for _ in range(l)]
    nil_pow: list[dict[int, Superfield]] = [{0: Superfield.one(gens, r)} for _ in range(l)]

    def bpow(i: int, e: int) -> Superfield:
        if e not in body_pow[i]:
            body_pow[i][e] = bpow(i, e - 1) * bodies[i]
        return body_pow[i][e]

    def npow(i: int, e: int) -> Superfield:
        if e not in nil_pow[i]:
            nil_pow[i][e] = npow(i, e - 1) * nils[i]
        return nil_pow[i][e]

    def multi_indices(bound):
        if not bound:
            yield ()
            return
        for head in range(bound[0] + 1):
            for tail in multi_indices(bound[1:]):
                yield (head,) + tail

    out = Superfield.zero(gens, r, r)
    for d in multi_indices(maxdeg):
        npart = Superfield.one(gens, r)
        for i, di in enumerate(d):
            if di:
                npart = npart * npow(i, di)
            if npart.is_zero():
                break
        if npart.is_zero():
            continue
        # (1/d!) partial^d h at the bodies, via binomial reindexing
        coeff_field = Superfield.zero(gens, r, r)
        for exp, c in h.items():
            if any(e < di for e, di in zip(exp, d)):
                continue
            mult = 1
            for e, di in zip(exp, d):
                mult *= comb(e, di)
            if not isinstance(c, GaussRational):
                c = GaussRational(c)
            term = Superfield.one(gens, r)
            for i, (e, di) in enumerate(zip(exp, d)):
                if e - di:
                    term = term * bpow(i, e - di)
            coeff_field = coeff_field + term.scale(c.scale(mult))
        out = out + coeff_field * npart
    return out


def generic_superfield(
    seed: int,
    gens=U4,
    r: int = 2,
    deg: int = 1,
    parity: int | None = None,
    shape: tuple[int, int] | None = None,
    masks=None,
) -> Superfield:
    """Deterministic generic superfield for identity checks.

    Every monomial of the universe (optionally filtered by parity or an
    explicit mask list) receives an independent generic matrix coefficient.
    """
    from .coeffring import generic_matrix

    rows, cols = shape if shape is not None else (r, r)
    top = 1 << len(gens)
    chosen = range(top) if masks is None else masks
    terms = {}
    for m in chosen:
        if parity is not None and mask_parity(m) != (parity & 1):
            continue
        terms[m] = generic_matrix(("sf", seed, m), rows, deg, cols=cols)
    return Superfield(gens, rows, cols, terms)
