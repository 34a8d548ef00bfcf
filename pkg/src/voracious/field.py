"""Exact arithmetic in the real cyclotomic field Q(2 cos(pi/M)).

Wall geometry needs exact sign decisions, never floating point.  Everything
the engine computes lives in a single real algebraic extension: with M the
lcm of the finite Coxeter matrix entries, y = 2 cos(pi/M) is an algebraic
integer and 2 cos(pi/m) is an integer polynomial in y for every finite m
dividing M (a Chebyshev-style identity).  Group-element matrices and root
coordinates therefore keep integer coefficients throughout; the occasional
rational shows up only in halved bilinear values.

Scalars are canonical reduced polynomials in y, so equality is coefficient
comparison.  Signs of nonzero scalars are decided by interval evaluation
over an exact rational enclosure of y, bisected until zero is excluded;
the zero test itself is syntactic because the representation is canonical.
"""

from __future__ import annotations

import math
from fractions import Fraction

Coeff = int | Fraction


def _as_coeff(x: Coeff) -> Coeff:
    """Collapse Fractions with denominator 1 to int; same hash, faster arithmetic."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials; den is monic and must divide num."""
    num = list(num)
    d = len(den) - 1
    q = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            q[i - d] = c
            for j in range(d + 1):
                num[i - d + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    cache: dict[int, list[int]] = {}
    for d in _divisors(n):
        p = [-1] + [0] * (d - 1) + [1]
        for e in _divisors(d):
            if e < d:
                p = _poly_divexact(p, cache[e])
        cache[d] = p
    return tuple(cache[n])


def two_cos_minimal_polynomial(modulus: int) -> tuple[int, ...]:
    """Monic integer minimal polynomial of y = 2 cos(pi/M), low degree first.

    For M >= 3 the conjugates of y are the values 2 cos(k pi/M) with k prime
    to 2M, and the polynomial is obtained from the (2M)-th cyclotomic
    polynomial via the z + 1/z substitution; z^j + z^-j is rewritten as a
    polynomial in y through the recurrence p_0 = 2, p_1 = y,
    p_{j+1} = y p_j - p_{j-1}.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if modulus == 1:
        return (2, 1)  # y = -2
    if modulus == 2:
        return (0, 1)  # y = 0
    phi = cyclotomic_polynomial(2 * modulus)
    if list(phi) != list(reversed(phi)):
        raise ArithmeticError("cyclotomic polynomial is not palindromic")
    d = (len(phi) - 1) // 2
    psi = [0] * (d + 1)
    psi[0] = phi[d]
    prev = [2]      # p_0
    cur = [0, 1]    # p_1 = y
    for j in range(1, d + 1):
        c = phi[d + j]
        if c:
            for i, v in enumerate(cur):
                psi[i] += c * v
        nxt = [0] + cur
        for i, v in enumerate(prev):
            nxt[i] -= v
        prev, cur = cur, nxt
    if psi[d] != 1:
        raise ArithmeticError("trace polynomial is not monic")
    return tuple(psi)


def _eval_poly(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def _interval_eval(coeffs, lo: Fraction, hi: Fraction):
    """Horner evaluation with exact interval endpoints."""
    alo = ahi = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        ps = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo = min(ps) + c
        ahi = max(ps) + c
    return alo, ahi


class FieldContext:
    """Shared arithmetic context for one group.

    Holds the minimal polynomial of y = 2 cos(pi/M), lazily grown reduction
    tables for high powers of y, and a rational enclosure of y that only ever
    shrinks.  All refinement steps are exact bisections, so sign queries are
    deterministic under any interleaving.
    """

    def __init__(self, modulus: int):
        self.modulus = modulus
        self.minpoly = two_cos_minimal_polynomial(modulus)
        self.degree = len(self.minpoly) - 1
        self._pows: list[tuple[Coeff, ...]] = []
        self._enclosure: tuple[Fraction, Fraction] | None = None
        if self.degree >= 2:
            self._seed_enclosure()
        d = self.degree
        self.zero = FieldScalar(self, (0,) * d)
        self.one = FieldScalar(self, (1,) + (0,) * (d - 1))
        self._two_cos: dict[int, FieldScalar] = {}

    # -- construction -----------------------------------------------------

    def scalar(self, coeffs) -> FieldScalar:
        """Scalar from y-power coefficients (any length; reduced on entry)."""
        cs: list[Coeff] = []
        for c in coeffs:
            if isinstance(c, Fraction):
                cs.append(_as_coeff(c))
            elif isinstance(c, int):
                cs.append(c)
            else:
                raise TypeError(f"exact coefficient expected, got {type(c).__name__}")
        return FieldScalar(self, self._reduce(cs))

    def rational(self, value) -> FieldScalar:
        return self.scalar([value])

    def from_cos_basis(self, coeffs) -> FieldScalar:
        """Scalar from coefficients over powers of c = cos(pi/M) = y/2."""
        return self.scalar([Fraction(c) / (1 << j) for j, c in enumerate(coeffs)])

    def two_cos_pi_over(self, m: int) -> FieldScalar:
        """The scalar 2 cos(pi/m) for finite m dividing M."""
        got = self._two_cos.get(m)
        if got is not None:
            return got
        if m < 1 or self.modulus % m:
            raise ValueError(f"{m} does not divide the field modulus {self.modulus}")
        j = self.modulus // m
        prev, cur = [2], [0, 1]
        for _ in range(j - 1):
            nxt = [0] + cur
            for i, v in enumerate(prev):
                nxt[i] -= v
            prev, cur = cur, nxt
        val = self.scalar(cur)
        self._two_cos[m] = val
        return val

    # -- reduction --------------------------------------------------------

    def _pow(self, j: int) -> tuple[Coeff, ...]:
        """y^j reduced to degree < d, for j >= d; table grows on demand."""
        d = self.degree
        base = tuple(-c for c in self.minpoly[:d])
        while len(self._pows) <= j - d:
            if not self._pows:
                self._pows.append(base)
                continue
            cur = self._pows[-1]
            nxt = [cur[d - 1] * b for b in base]
            for i in range(d - 1):
                nxt[i + 1] += cur[i]
            self._pows.append(tuple(_as_coeff(c) for c in nxt))
        return self._pows[j - d]

    def _reduce(self, cs) -> tuple[Coeff, ...]:
        d = self.degree
        out = list(cs[:d]) + [0] * max(0, d - len(cs))
        for j in range(d, len(cs)):
            c = cs[j]
            if c:
                pw = self._pow(j)
                for i in range(d):
                    out[i] += c * pw[i]
        return tuple(_as_coeff(c) for c in out)

    # -- signs ------------------------------------------------------------

    def _seed_enclosure(self) -> None:
        yf = 2.0 * math.cos(math.pi / self.modulus)
        for bits in (24, 32, 40, 48, 56):
            eps = Fraction(1, 1 << bits)
            lo, hi = Fraction(yf) - eps, Fraction(yf) + eps
            # y is the largest real root of the (monic) minimal polynomial,
            # so the sign change below certifies the enclosure.
            if _eval_poly(self.minpoly, lo) < 0 < _eval_poly(self.minpoly, hi):
                self._enclosure = (lo, hi)
                return
        raise ArithmeticError("failed to isolate 2 cos(pi/M)")

    def refine_enclosure(self) -> None:
        """One exact bisection step on the enclosure of y."""
        lo, hi = self._enclosure
        mid = (lo + hi) / 2
        v = _eval_poly(self.minpoly, mid)
        if v > 0:
            self._enclosure = (lo, mid)
        elif v < 0:
            self._enclosure = (mid, hi)
        else:  # rational root: only possible in degenerate low-degree cases
            self._enclosure = (mid, mid)

    def sign_of(self, coeffs) -> int:
        if not any(coeffs):
            return 0
        if not any(coeffs[1:]):
            return 1 if coeffs[0] > 0 else -1
        while True:
            lo, hi = self._enclosure
            a, b = _interval_eval(coeffs, lo, hi)
            if a > 0:
                return 1
            if b < 0:
                return -1
            if lo == hi:
                raise ArithmeticError("nonzero scalar evaluated to zero")
            self.refine_enclosure()

    def __repr__(self):
        return f"FieldContext(modulus={self.modulus}, degree={self.degree})"


def _ptrim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _ptrim(out)


def _psub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _ptrim(out)


def _pdivmod(num, den):
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i] / lead
        if c:
            q[i - len(den) + 1] = c
            for j, dj in enumerate(den):
                num[i - len(den) + 1 + j] -= c * dj
    return _ptrim(q), _ptrim(num)


class FieldScalar:
    """Element of Q(2 cos(pi/M)) as a canonical reduced polynomial in y.

    Equality is coefficient equality; <, <=, >, >= and sign() are exact.
    The sign is cached per scalar after its first determination.
    """

    __slots__ = ("ctx", "coeffs", "_sign")

    def __init__(self, ctx: FieldContext, coeffs: tuple[Coeff, ...]):
        self.ctx = ctx
        self.coeffs = coeffs
        self._sign: int | None = None

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.ctx is not self.ctx:
                raise ValueError("mixing scalars from different field contexts")
            return other
        if isinstance(other, (int, Fraction)):
            d = self.ctx.degree
            return FieldScalar(self.ctx, (_as_coeff(other),) + (0,) * (d - 1))
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar(
            self.ctx, tuple(_as_coeff(a + b) for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar(
            self.ctx, tuple(_as_coeff(a - b) for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldScalar(self.ctx, tuple(_as_coeff(-a) for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not any(a[1:]):
            c = a[0]
            if c == 0:
                return self.ctx.zero
            if c == 1:
                return o
            return FieldScalar(self.ctx, tuple(_as_coeff(c * x) for x in b))
        if not any(b[1:]):
            c = b[0]
            if c == 0:
                return self.ctx.zero
            if c == 1:
                return self
            return FieldScalar(self.ctx, tuple(_as_coeff(c * x) for x in a))
        d = self.ctx.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return FieldScalar(self.ctx, self.ctx._reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ctx.one
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> FieldScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if not any(self.coeffs[1:]):
            return self.ctx.rational(Fraction(1) / self.coeffs[0])
        # Extended Euclid against the irreducible minimal polynomial.
        r0 = [Fraction(c) for c in self.ctx.minpoly]
        r1 = _ptrim([Fraction(c) for c in self.coeffs])
        t0: list[Fraction] = []
        t1 = [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _psub(t0, _pmul(q, t1))
            if not r1:
                raise ArithmeticError("minimal polynomial is reducible")
        c = r1[0]
        return self.ctx.scalar([t / c for t in t1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- predicates and order ---------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("scalar is not rational")
        return Fraction(self.coeffs[0])

    def sign(self) -> int:
        s = self._sign
        if s is None:
            s = self.ctx.sign_of(self.coeffs)
            self._sign = s
        return s

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            if other.ctx is not self.ctx:
                return NotImplemented
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return not any(self.coeffs[1:]) and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    # -- presentation -----------------------------------------------------

    def cos_basis(self) -> tuple[Coeff, ...]:
        """Coefficients over powers of c = cos(pi/M); b_j = a_j * 2^j."""
        return tuple(_as_coeff(Fraction(a) * (1 << j)) for j, a in enumerate(self.coeffs))

    def __float__(self):
        y = 2.0 * math.cos(math.pi / self.ctx.modulus)
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * y + float(c)
        return acc

    def __str__(self):
        bs = self.cos_basis()
        if not any(bs):
            return "0"
        parts: list[str] = []
        for j in range(len(bs) - 1, -1, -1):
            b = bs[j]
            if not b:
                continue
            mag = abs(Fraction(b))
            if j == 0:
                core = str(_as_coeff(mag))
            else:
                var = "c" if j == 1 else f"c^{j}"
                if mag == 1:
                    core = var
                elif mag.denominator == 1:
                    core = f"{mag.numerator}{var}"
                else:
                    core = f"({mag}){var}"
            parts.append(("-" if b < 0 else "+", core))
        sign0, core0 = parts[0]
        text = (sign0 if sign0 == "-" else "") + core0
        for sgn, core in parts[1:]:
            text += sgn + core
        return text

    def __repr__(self):
        return f"FieldScalar({self})"
