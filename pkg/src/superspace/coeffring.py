"""Exact coefficient arithmetic for the superspace engine.

Three layers, all immutable and exact:

  * ``GaussRational``  -- numbers a + b*i with arbitrary-precision rational a, b;
  * ``PolyScalar``     -- polynomials in the even coordinates x0..x3 over GaussRational;
  * ``MatrixCoeff``    -- rectangular matrices of PolyScalar (square for ring use).

Matrices of polynomials are the component fields every superfield carries;
rank r >= 2 makes the ring genuinely noncommutative, which is what the
generic-instance identity checks exploit.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, lcm

try:  # pragma: no cover - exercised only where gmpy2 is installed
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover
    _RAT = Fraction

NVARS = 4  # even coordinates x0..x3

ExpTuple = tuple


def _rat(v) -> "_RAT":
    if isinstance(v, float):
        raise TypeError("floating point is not allowed in exact arithmetic")
    return _RAT(v)


def _gr(re, im) -> "GaussRational":
    """Trusted constructor: re, im must already be exact rationals."""
    g = object.__new__(GaussRational)
    object.__setattr__(g, "re", re)
    object.__setattr__(g, "im", im)
    return g


def _rat_str(q) -> str:
    return str(q)


class GaussRational:
    """An exact Gaussian rational re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _rat(re))
        object.__setattr__(self, "im", _rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @staticmethod
    def zero() -> "GaussRational":
        return GaussRational(0, 0)

    @staticmethod
    def one() -> "GaussRational":
        return GaussRational(1, 0)

    @staticmethod
    def i() -> "GaussRational":
        return GaussRational(0, 1)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = GaussRational(other, 0)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other: "GaussRational") -> "GaussRational":
        return _gr(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        return _gr(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussRational":
        return _gr(-self.re, -self.im)

    def __mul__(self, other: "GaussRational") -> "GaussRational":
        a, b, c, d = self.re, self.im, other.re, other.im
        return _gr(a * c - b * d, a * d + b * c)

    def __truediv__(self, other: "GaussRational") -> "GaussRational":
        if not other:
            raise ZeroDivisionError("division by zero GaussRational")
        a, b, c, d = self.re, self.im, other.re, other.im
        n = c * c + d * d
        return _gr((a * c + b * d) / n, (b * c - a * d) / n)

    def conjugate(self) -> "GaussRational":
        return _gr(self.re, -self.im)

    def scale(self, q) -> "GaussRational":
        q = _rat(q)
        return _gr(self.re * q, self.im * q)

    @property
    def is_real(self) -> bool:
        return not self.im

    def __repr__(self) -> str:
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return _rat_str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"({_rat_str(self.re)} {sign} {_rat_str(abs(self.im))} i)"


GR_ZERO = GaussRational(0, 0)
GR_ONE = GaussRational(1, 0)
GR_I = GaussRational(0, 1)
GR_MINUS_I = GaussRational(0, -1)
GR_TWO_I = GaussRational(0, 2)


def grat(re=0, im=0) -> GaussRational:
    """Shorthand constructor accepting ints, Fractions or 'p/q' strings."""
    return GaussRational(re, im)


# Exponent tuples are packed into one int, 8 bits per variable, so that a
# monomial product is a single integer addition.  Two factors of per-variable
# degree <= 127 add without carry; the multiply paths enforce that bound via
# the dcap slot (an upper bound on the per-variable degree).
_SHIFT = 8
_LIMB = (1 << _SHIFT) - 1
_DEG_CAP = _LIMB


def _enc(exp) -> int:
    e = tuple(int(d) for d in exp)
    if len(e) != NVARS or any(d < 0 or d > _DEG_CAP for d in e):
        raise ValueError(f"bad exponent tuple {exp!r}")
    return e[0] | (e[1] << _SHIFT) | (e[2] << (2 * _SHIFT)) | (e[3] << (3 * _SHIFT))


def _dec(key: int) -> ExpTuple:
    return (
        key & _LIMB,
        (key >> _SHIFT) & _LIMB,
        (key >> (2 * _SHIFT)) & _LIMB,
        (key >> (3 * _SHIFT)) & _LIMB,
    )


class PolyScalar:
    """Polynomial in x0..x3 with GaussRational coefficients.

    Terms map packed exponent keys to (re, im) integer numerator pairs over
    one positive denominator ``den``; stripping the gcd of all numerators and
    the denominator makes the representation canonical, so equality is
    structural.  Integer numerators keep the multiply kernel on plain int
    arithmetic.  Instances are treated as immutable after construction.  The
    public constructor and ``iter_terms``/``sorted_terms`` speak exponent
    4-tuples and GaussRational coefficients; the packed keys and the shared
    denominator are an internal detail.
    """

    __slots__ = ("terms", "den", "dcap")

    def __init__(self, terms: dict | None = None):
        gmap: dict = {}
        if terms:
            for exp, c in terms.items():
                if not isinstance(c, GaussRational):
                    c = GaussRational(c)
                if c:
                    k = _enc(exp)
                    s = gmap.get(k)
                    gmap[k] = c if s is None else s + c
        den = 1
        for c in gmap.values():
            if c:
                den = lcm(den, int(c.re.denominator), int(c.im.denominator))
        clean: dict = {}
        dcap = 0
        for k, c in gmap.items():
            if not c:
                continue
            clean[k] = (int(c.re * den), int(c.im * den))
            while k:
                d = k & _LIMB
                if d > dcap:
                    dcap = d
                k >>= _SHIFT
        # den is the lcm of the reduced coefficient denominators, so the
        # numerators and den share no factor and the form is canonical
        if not clean:
            den = 1
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "dcap", dcap)

    def __setattr__(self, name, value):
        raise AttributeError("PolyScalar is immutable")

    @staticmethod
    def _raw(terms: dict, dcap: int, den: int) -> "PolyScalar":
        """Trusted constructor: terms must already map packed keys to nonzero
        (re, im) integer pairs, canonical against positive den, with
        per-variable degrees bounded by dcap."""
        p = object.__new__(PolyScalar)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "den", den)
        object.__setattr__(p, "dcap", dcap)
        return p

    @staticmethod
    def zero() -> "PolyScalar":
        return PolyScalar._raw({}, 0, 1)

    @staticmethod
    def const(c) -> "PolyScalar":
        if not isinstance(c, GaussRational):
            c = GaussRational(c)
        if not c:
            return PolyScalar._raw({}, 0, 1)
        den = lcm(int(c.re.denominator), int(c.im.denominator))
        return PolyScalar._raw({0: (int(c.re * den), int(c.im * den))}, 0, den)

    @staticmethod
    def one() -> "PolyScalar":
        return PolyScalar.const(1)

    @staticmethod
    def variable(mu: int) -> "PolyScalar":
        if not 0 <= mu < NVARS:
            raise ValueError(f"coordinate index {mu} out of range")
        return PolyScalar._raw({1 << (mu * _SHIFT): (1, 0)}, 1, 1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.terms)

    def constant_term(self) -> GaussRational:
        v = self.terms.get(0)
        if v is None:
            return GR_ZERO
        return _gr(_RAT(v[0], self.den), _RAT(v[1], self.den))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyScalar):
            return NotImplemented
        return self.den == other.den and self.terms == other.terms

    def __hash__(self):
        return hash((self.den, frozenset(self.terms.items())))

    def __add__(self, other: "PolyScalar") -> "PolyScalar":
        if not other.terms:
            return self
        if not self.terms:
            return other
        dcap = self.dcap if self.dcap >= other.dcap else other.dcap
        d1, d2 = self.den, other.den
        if d1 == d2:
            out = dict(self.terms)
            den = d1
            for e, (c, d) in other.terms.items():
                s = out.get(e)
                if s is None:
                    out[e] = (c, d)
                else:
                    a = s[0] + c
                    b = s[1] + d
                    if a or b:
                        out[e] = (a, b)
                    else:
                        del out[e]
        else:
            den = lcm(d1, d2)
            f1 = den // d1
            f2 = den // d2
            out = {e: (a * f1, b * f1) for e, (a, b) in self.terms.items()}
            for e, (c, d) in other.terms.items():
                s = out.get(e)
                if s is None:
                    out[e] = (c * f2, d * f2)
                else:
                    a = s[0] + c * f2
                    b = s[1] + d * f2
                    if a or b:
                        out[e] = (a, b)
                    else:
                        del out[e]
        return _canon(out, dcap, den)

    def __sub__(self, other: "PolyScalar") -> "PolyScalar":
        if not other.terms:
            return self
        if not self.terms:
            return -other
        dcap = self.dcap if self.dcap >= other.dcap else other.dcap
        d1, d2 = self.den, other.den
        if d1 == d2:
            out = dict(self.terms)
            den = d1
            for e, (c, d) in other.terms.items():
                s = out.get(e)
                if s is None:
                    out[e] = (-c, -d)
                else:
                    a = s[0] - c
                    b = s[1] - d
                    if a or b:
                        out[e] = (a, b)
                    else:
                        del out[e]
        else:
            den = lcm(d1, d2)
            f1 = den // d1
            f2 = den // d2
            out = {e: (a * f1, b * f1) for e, (a, b) in self.terms.items()}
            for e, (c, d) in other.terms.items():
                s = out.get(e)
                if s is None:
                    out[e] = (-c * f2, -d * f2)
                else:
                    a = s[0] - c * f2
                    b = s[1] - d * f2
                    if a or b:
                        out[e] = (a, b)
                    else:
                        del out[e]
        return _canon(out, dcap, den)

    def __neg__(self) -> "PolyScalar":
        return PolyScalar._raw(
            {e: (-a, -b) for e, (a, b) in self.terms.items()}, self.dcap, self.den
        )

    def __mul__(self, other: "PolyScalar") -> "PolyScalar":
        dcap = self.dcap + other.dcap
        if dcap > _DEG_CAP:
            raise OverflowError("polynomial degree exceeds packed-exponent capacity")
        acc: dict = {}
        _mul_acc(self.terms, other.terms, acc)
        return _norm_acc(acc, dcap, self.den * other.den)

    def __pow__(self, n: int) -> "PolyScalar":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = PolyScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "PolyScalar":
        if not isinstance(c, GaussRational):
            c = GaussRational(c)
        if not c or not self.terms:
            return PolyScalar._raw({}, 0, 1)
        r = lcm(int(c.re.denominator), int(c.im.denominator))
        p = int(c.re * r)
        q = int(c.im * r)
        if q == 0:
            out = {e: (a * p, b * p) for e, (a, b) in self.terms.items()}
        elif p == 0:
            out = {e: (-b * q, a * q) for e, (a, b) in self.terms.items()}
        else:
            out = {e: (a * p - b * q, a * q + b * p) for e, (a, b) in self.terms.items()}
        return _canon(out, self.dcap, self.den * r)

    def partial(self, mu: int) -> "PolyScalar":
        """d/dx^mu."""
        shift = mu * _SHIFT
        out: dict = {}
        for e, (a, b) in self.terms.items():
            d = (e >> shift) & _LIMB
            if d:
                out[e - (1 << shift)] = (a * d, b * d)
        return _canon(out, self.dcap, self.den)

    def iter_terms(self):
        """Yield (exponent 4-tuple, coefficient) pairs."""
        den = self.den
        for e, (a, b) in self.terms.items():
            yield _dec(e), _gr(_RAT(a, den), _RAT(b, den))

    def eval_at(self, point) -> GaussRational:
        """Exact evaluation at a 4-tuple of rationals."""
        pt = [_rat(v) for v in point]
        total = GR_ZERO
        for e, c in self.iter_terms():
            v = _rat(1)
            for d, x in zip(e, pt):
                v *= x**d
            total = total + c.scale(v)
        return total

    def conjugate(self) -> "PolyScalar":
        return PolyScalar._raw(
            {e: (a, -b) for e, (a, b) in self.terms.items()}, self.dcap, self.den
        )

    def real_part(self) -> "PolyScalar":
        out = {e: (a, 0) for e, (a, b) in self.terms.items() if a}
        return _canon(out, self.dcap, self.den)

    def sorted_terms(self):
        return sorted(self.iter_terms(), key=lambda kv: kv[0])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = " ".join(f"x{mu}^{d}" if d > 1 else f"x{mu}" for mu, d in enumerate(e) if d)
            cs = str(c)
            parts.append(f"{cs} {mono}".strip() if mono else cs)
        return " + ".join(parts)

    __repr__ = __str__


def _canon(terms: dict, dcap: int, den: int) -> PolyScalar:
    """Build a canonical PolyScalar from pruned (re, im) tuple terms by
    stripping the common content of the numerators and den."""
    if not terms:
        return PolyScalar._raw({}, 0, 1)
    if den == 1:
        return PolyScalar._raw(terms, dcap, den)
    g = den
    for a, b in terms.values():
        g = gcd(g, a, b)
        if g == 1:
            return PolyScalar._raw(terms, dcap, den)
    return PolyScalar._raw(
        {e: (a // g, b // g) for e, (a, b) in terms.items()}, dcap, den // g
    )


def _norm_acc(acc: dict, dcap: int, den: int) -> PolyScalar:
    """Build a canonical PolyScalar from a raw [re, im] accumulator."""
    terms: dict = {}
    g = den
    for e, v in acc.items():
        a = v[0]
        b = v[1]
        if a or b:
            terms[e] = (a, b)
            if g != 1:
                g = gcd(g, a, b)
    if not terms:
        return PolyScalar._raw({}, 0, 1)
    if g == 1:
        return PolyScalar._raw(terms, dcap, den)
    return PolyScalar._raw(
        {e: (a // g, b // g) for e, (a, b) in terms.items()}, dcap, den // g
    )


def _scaled(terms: dict, f: int) -> dict:
    return {e: (a * f, b * f) for e, (a, b) in terms.items()}


def _mul_acc(terms1: dict, terms2: dict, acc: dict) -> None:
    """Accumulate the product of two term dicts into acc as raw [re, im]
    integer pairs; the caller tracks the common denominator."""
    get = acc.get
    items2 = list(terms2.items())
    for e1, (a, b) in terms1.items():
        if b:
            for e2, (c, d) in items2:
                e = e1 + e2
                s = get(e)
                if s is None:
                    acc[e] = [a * c - b * d, a * d + b * c]
                else:
                    s[0] += a * c - b * d
                    s[1] += a * d + b * c
        else:
            for e2, (c, d) in items2:
                e = e1 + e2
                s = get(e)
                if s is None:
                    acc[e] = [a * c, a * d]
                else:
                    s[0] += a * c
                    s[1] += a * d


PS_ZERO = PolyScalar.zero()
PS_ONE = PolyScalar.one()


def _cell_acc(cell: list, a: PolyScalar, b: PolyScalar, sign: int) -> None:
    """Accumulate sign * a * b into one mutable cell state [den, dcap, acc]."""
    d = a.dcap + b.dcap
    if d > _DEG_CAP:
        raise OverflowError("polynomial degree exceeds packed-exponent capacity")
    if d > cell[1]:
        cell[1] = d
    pden = a.den * b.den
    den = cell[0]
    if den % pden == 0:
        f = den // pden
    else:
        nden = lcm(den, pden)
        g = nden // den
        for v in cell[2].values():
            v[0] *= g
            v[1] *= g
        cell[0] = nden
        f = nden // pden
    if sign < 0:
        f = -f
    if f == 1:
        _mul_acc(a.terms, b.terms, cell[2])
    elif len(a.terms) <= len(b.terms):
        _mul_acc(_scaled(a.terms, f), b.terms, cell[2])
    else:
        _mul_acc(a.terms, _scaled(b.terms, f), cell[2])


def mat_acc_new(rows: int, cols: int) -> list:
    """Fresh mutable accumulator grid for a rows x cols matrix product sum."""
    return [[[1, 0, {}] for _ in range(cols)] for _ in range(rows)]


def mat_acc_mul(state: list, m1: "MatrixCoeff", m2: "MatrixCoeff", sign: int) -> None:
    """Accumulate sign * (m1 @ m2) into state; a 1x1 factor broadcasts."""
    s11 = m1.rows == 1 and m1.cols == 1
    o11 = m2.rows == 1 and m2.cols == 1
    if s11 and not o11:
        p = m1.entries[0][0]
        if not p.terms:
            return
        for srow, row in zip(state, m2.entries):
            for cell, q in zip(srow, row):
                if q.terms:
                    _cell_acc(cell, p, q, sign)
    elif o11 and not s11:
        q = m2.entries[0][0]
        if not q.terms:
            return
        for srow, row in zip(state, m1.entries):
            for cell, p in zip(srow, row):
                if p.terms:
                    _cell_acc(cell, p, q, sign)
    else:
        ocols = list(zip(*m2.entries))
        for srow, row in zip(state, m1.entries):
            for cell, col in zip(srow, ocols):
                for a, b in zip(row, col):
                    if a.terms and b.terms:
                        _cell_acc(cell, a, b, sign)


def mat_acc_build(state: list) -> "MatrixCoeff":
    return MatrixCoeff([[_norm_acc(c[2], c[1], c[0]) for c in row] for row in state])


class MatrixCoeff:
    """Rectangular matrix of PolyScalar entries; square matrices form the
    component ring the superfields are built over."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        ent = tuple(tuple(e if isinstance(e, PolyScalar) else PolyScalar.const(e) for e in row) for row in entries)
        rows = len(ent)
        if rows == 0 or any(len(r) != len(ent[0]) for r in ent):
            raise ValueError("matrix rows must be nonempty and of equal length")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", len(ent[0]))
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixCoeff is immutable")

    @property
    def shape(self):
        return (self.rows, self.cols)

    @staticmethod
    def zero(rows: int, cols: int | None = None) -> "MatrixCoeff":
        cols = rows if cols is None else cols
        return MatrixCoeff([[PS_ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(r: int) -> "MatrixCoeff":
        return MatrixCoeff([[PS_ONE if i == j else PS_ZERO for j in range(r)] for i in range(r)])

    @staticmethod
    def scalar(p, r: int = 1) -> "MatrixCoeff":
        """p times the r x r identity."""
        if not isinstance(p, PolyScalar):
            p = PolyScalar.const(p)
        return MatrixCoeff([[p if i == j else PS_ZERO for j in range(r)] for i in range(r)])

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_constant(self) -> bool:
        return all(e.is_constant() for row in self.entries for e in row)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixCoeff):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def _require_same_shape(self, other: "MatrixCoeff"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "MatrixCoeff") -> "MatrixCoeff":
        self._require_same_shape(other)
        return MatrixCoeff(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "MatrixCoeff") -> "MatrixCoeff":
        self._require_same_shape(other)
        return MatrixCoeff(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "MatrixCoeff":
        return MatrixCoeff([[-a for a in row] for row in self.entries])

    def __mul__(self, other: "MatrixCoeff") -> "MatrixCoeff":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply shapes {self.shape} and {other.shape}")
        state = mat_acc_new(self.rows, other.cols)
        mat_acc_mul(state, self, other, 1)
        return mat_acc_build(state)

    def scale(self, c) -> "MatrixCoeff":
        if isinstance(c, PolyScalar):
            return MatrixCoeff([[a * c for a in row] for row in self.entries])
        return MatrixCoeff([[a.scale(c) for a in row] for row in self.entries])

    def trace(self) -> PolyScalar:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        acc = PS_ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def partial(self, mu: int) -> "MatrixCoeff":
        return MatrixCoeff([[a.partial(mu) for a in row] for row in self.entries])

    def real_part(self) -> "MatrixCoeff":
        return MatrixCoeff([[a.real_part() for a in row] for row in self.entries])

    def eval_at(self, point) -> list:
        return [[a.eval_at(point) for a in row] for row in self.entries]

    def entry(self, i: int, j: int) -> PolyScalar:
        return self.entries[i][j]

    def inverse_constant(self) -> "MatrixCoeff":
        """Exact inverse of a constant square matrix over Q(i).

        Nonconstant polynomial matrices generally invert to rational
        functions, which live outside this ring, so they are rejected.
        """
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        if not self.is_constant():
            raise ValueError("exact inversion requires a constant matrix body")
        n = self.rows
        a = [[self.entries[i][j].constant_term() for j in range(n)] for i in range(n)]
        inv = [[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix body")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            p = a[col][col]
            a[col] = [v / p for v in a[col]]
            inv[col] = [v / p for v in inv[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                    inv[r] = [v - f * w for v, w in zip(inv[r], inv[col])]
        return MatrixCoeff([[PolyScalar.const(c) for c in row] for row in inv])

    def to_json(self):
        return [[str(a) for a in row] for row in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.entries) + "]"

    __repr__ = __str__


def ring_ops(a: MatrixCoeff, b: MatrixCoeff, op: str) -> MatrixCoeff:
    """add | sub | mul on equal-shape (mul: composable) matrices."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def partial_x(p: MatrixCoeff, mu: int) -> MatrixCoeff:
    return p.partial(mu)


def commutator(a: MatrixCoeff, b: MatrixCoeff) -> MatrixCoeff:
    """[a, b] = ab - ba on square matrices of equal rank."""
    if a.shape != b.shape or not a.is_square():
        raise ValueError("commutator needs square matrices of equal rank")
    return a * b - b * a


def trace(a: MatrixCoeff) -> PolyScalar:
    return a.trace()


# Pool of nonzero coefficients for deterministic generic instances.  Small
# numerators and denominators keep the exact arithmetic fast while mixing
# real and imaginary parts.
_COEFF_POOL = (
    GaussRational(1),
    GaussRational(-1),
    GaussRational(2),
    GaussRational(-2),
    GaussRational(3),
    GaussRational(Fraction(1, 2)),
    GaussRational(Fraction(-1, 2)),
    GaussRational(0, 1),
    GaussRational(0, -1),
    GaussRational(1, 1),
    GaussRational(-1, 2),
    GaussRational(Fraction(1, 3), Fraction(-1, 2)),
)


def generic_poly(rng: random.Random, deg: int, density: float = 0.4) -> PolyScalar:
    """Deterministic pseudo-random polynomial with per-variable degree <= deg."""
    exps = []
    e = [0] * NVARS
    while True:
        exps.append(tuple(e))
        mu = 0
        while mu < NVARS:
            e[mu] += 1
            if e[mu] <= deg:
                break
            e[mu] = 0
            mu += 1
        if mu == NVARS:
            break
    terms = {}
    for exp in exps:
        if rng.random() < density:
            terms[exp] = _COEFF_POOL[rng.randrange(len(_COEFF_POOL))]
    if not terms:
        exp = exps[rng.randrange(len(exps))]
        terms[exp] = _COEFF_POOL[rng.randrange(len(_COEFF_POOL))]
    return PolyScalar(terms)


def generic_matrix(seed, r: int, deg: int, cols: int | None = None) -> MatrixCoeff:
    """Deterministic generic matrix: same seed, same matrix.

    The seed may be any repr-stable value (int or tuple of ints/strings)."""
    if r < 1 or deg < 0:
        raise ValueError("need rank >= 1 and degree >= 0")
    rng = random.Random(("matrix", seed, r, deg, cols).__repr__())
    cols = r if cols is None else cols
    return MatrixCoeff([[generic_poly(rng, deg) for _ in range(cols)] for _ in range(r)])
