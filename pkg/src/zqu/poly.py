"""Exact univariate polynomials over Z_q and over R = Z_q + uZ_q.

Coefficients are little-endian with trailing zeros stripped.  An R-polynomial
is a pair of Z_q coefficient streams (a-part, u-part); u^2 = 0 keeps
multiplication a single cross term.  Includes coprimality with exact Bezout
witnesses, quadratic Hensel lifting, and the complete factorization of
x^n - 1 into basic irreducible polynomials.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache, reduce

from . import fppoly
from .errors import LengthNotCoprimeError, NonMonicDivisorError, PolyParseError, PreconditionError
from .ring import RingElem, RingParams


def _strip(seq):
    out = list(seq)
    while out and not out[-1]:
        out.pop()
    return out


@dataclass(frozen=True)
class ZqPoly:
    params: RingParams
    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, params: RingParams, seq) -> "ZqPoly":
        q = params.q
        return cls(params, tuple(_strip([int(c) % q for c in seq])))

    @classmethod
    def zero(cls, params) -> "ZqPoly":
        return cls(params, ())

    @classmethod
    def const(cls, params, c: int) -> "ZqPoly":
        return cls.make(params, [c])

    @classmethod
    def x_pow(cls, params, k: int, c: int = 1) -> "ZqPoly":
        return cls.make(params, [0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "ZqPoly") -> "ZqPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ZqPoly.make(self.params, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "ZqPoly") -> "ZqPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ZqPoly.make(self.params, [self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "ZqPoly":
        return ZqPoly.make(self.params, [-c for c in self.coeffs])

    def __mul__(self, other) -> "ZqPoly":
        if isinstance(other, int):
            return ZqPoly.make(self.params, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return ZqPoly.zero(self.params)
        q = self.params.q
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % q
        return ZqPoly.make(self.params, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "ZqPoly":
        if self.is_zero():
            return self
        return ZqPoly(self.params, (0,) * k + self.coeffs)

    def __divmod__(self, divisor: "ZqPoly"):
        """Long division; the divisor's leading coefficient must be a unit."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        q = self.params.q
        lead = divisor.leading()
        if lead % self.params.p == 0:
            raise NonMonicDivisorError("divisor leading coefficient is not a unit")
        inv = pow(lead, -1, q)
        rem = list(self.coeffs)
        dd = divisor.degree
        quo = [0] * max(len(rem) - dd, 0)
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            c = (rem[-1] * inv) % q
            quo[k] = c
            for i, b in enumerate(divisor.coeffs):
                rem[k + i] = (rem[k + i] - c * b) % q
            rem = _strip(rem)
        return ZqPoly.make(self.params, quo), ZqPoly.make(self.params, rem)

    def __mod__(self, divisor: "ZqPoly") -> "ZqPoly":
        return divmod(self, divisor)[1]

    def __floordiv__(self, divisor: "ZqPoly") -> "ZqPoly":
        return divmod(self, divisor)[0]

    def divides(self, other: "ZqPoly") -> bool:
        return divmod(other, self)[1].is_zero()

    def monic(self) -> "ZqPoly":
        """Scale by the inverse of the (unit) leading coefficient."""
        if self.is_zero():
            raise PreconditionError("zero polynomial has no monic associate")
        lead = self.leading()
        if lead % self.params.p == 0:
            raise PreconditionError("leading coefficient is not a unit")
        return self * pow(lead, -1, self.params.q)

    def residue(self) -> tuple[int, ...]:
        """Coefficients mod p (the image over F_p), stripped."""
        p = self.params.p
        return tuple(_strip([c % p for c in self.coeffs]))

    def eval(self, x: int) -> int:
        q = self.params.q
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % q
        return acc

    def __str__(self):
        return format_zq_poly(self)


@dataclass(frozen=True)
class RPoly:
    params: RingParams
    coeffs: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, params: RingParams, seq) -> "RPoly":
        q = params.q
        pairs = []
        for c in seq:
            if isinstance(c, RingElem):
                pairs.append((c.a, c.b))
            elif isinstance(c, int):
                pairs.append((c % q, 0))
            else:
                a, b = c
                pairs.append((int(a) % q, int(b) % q))
        while pairs and pairs[-1] == (0, 0):
            pairs.pop()
        return cls(params, tuple(pairs))

    @classmethod
    def from_parts(cls, a_part: ZqPoly, u_part: ZqPoly) -> "RPoly":
        n = max(len(a_part.coeffs), len(u_part.coeffs))
        return cls.make(a_part.params, [(a_part[i], u_part[i]) for i in range(n)])

    @classmethod
    def from_zq(cls, poly: ZqPoly) -> "RPoly":
        return cls.make(poly.params, [(c, 0) for c in poly.coeffs])

    @classmethod
    def zero(cls, params) -> "RPoly":
        return cls(params, ())

    @classmethod
    def one(cls, params) -> "RPoly":
        return cls(params, ((1, 0),))

    def a_part(self) -> ZqPoly:
        return ZqPoly.make(self.params, [a for a, _ in self.coeffs])

    def u_part(self) -> ZqPoly:
        return ZqPoly.make(self.params, [b for _, b in self.coeffs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == (1, 0)

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else (0, 0)

    def coefficient(self, i: int) -> RingElem:
        a, b = self[i]
        return RingElem(self.params, a, b)

    def __add__(self, other: "RPoly") -> "RPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        q = self.params.q
        return RPoly.make(
            self.params,
            [((self[i][0] + other[i][0]) % q, (self[i][1] + other[i][1]) % q) for i in range(n)],
        )

    def __sub__(self, other: "RPoly") -> "RPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        q = self.params.q
        return RPoly.make(
            self.params,
            [((self[i][0] - other[i][0]) % q, (self[i][1] - other[i][1]) % q) for i in range(n)],
        )

    def __neg__(self) -> "RPoly":
        return RPoly.make(self.params, [(-a, -b) for a, b in self.coeffs])

    def __mul__(self, other) -> "RPoly":
        q = self.params.q
        if isinstance(other, int):
            other = RingElem(self.params, other % q, 0)
        if isinstance(other, RingElem):
            return RPoly.make(
                self.params,
                [((a * other.a) % q, (a * other.b + b * other.a) % q) for a, b in self.coeffs],
            )
        if self.is_zero() or other.is_zero():
            return RPoly.zero(self.params)
        out = [[0, 0] for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, (a, b) in enumerate(self.coeffs):
            if a == 0 and b == 0:
                continue
            for j, (c, d) in enumerate(other.coeffs):
                out[i + j][0] = (out[i + j][0] + a * c) % q
                out[i + j][1] = (out[i + j][1] + a * d + b * c) % q
        return RPoly.make(self.params, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "RPoly":
        if self.is_zero():
            return self
        return RPoly(self.params, ((0, 0),) * k + self.coeffs)

    def mul_u(self) -> "RPoly":
        return RPoly.make(self.params, [(0, a) for a, _ in self.coeffs])

    def residue(self) -> tuple[int, ...]:
        p = self.params.p
        return tuple(_strip([a % p for a, _ in self.coeffs]))

    def reduce_cyclic(self, n: int) -> "RPoly":
        """Reduce modulo x^n - 1 by folding exponents mod n."""
        q = self.params.q
        acc = [[0, 0] for _ in range(n)]
        for i, (a, b) in enumerate(self.coeffs):
            acc[i % n][0] = (acc[i % n][0] + a) % q
            acc[i % n][1] = (acc[i % n][1] + b) % q
        return RPoly.make(self.params, acc)

    def __str__(self):
        return format_r_poly(self)


def divmod_monic(dividend: RPoly, divisor: RPoly) -> tuple[RPoly, RPoly]:
    """Exact long division by a monic R-polynomial."""
    if divisor.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if not divisor.is_monic():
        raise NonMonicDivisorError(f"divisor {divisor} is not monic")
    q = dividend.params.q
    rem = [list(c) for c in dividend.coeffs]

    def strip_rem():
        while rem and rem[-1] == [0, 0]:
            rem.pop()

    strip_rem()
    dd = divisor.degree
    quo = [[0, 0] for _ in range(max(len(rem) - dd, 0))]
    while rem and len(rem) - 1 >= dd:
        k = len(rem) - 1 - dd
        ca, cb = rem[-1]
        quo[k] = [ca, cb]
        for i, (a, b) in enumerate(divisor.coeffs):
            rem[k + i][0] = (rem[k + i][0] - ca * a) % q
            rem[k + i][1] = (rem[k + i][1] - ca * b - cb * a) % q
        strip_rem()
    return RPoly.make(dividend.params, quo), RPoly.make(dividend.params, rem)


def xn_minus_1(params: RingParams, n: int) -> RPoly:
    return RPoly.make(params, [(-1, 0)] + [(0, 0)] * (n - 1) + [(1, 0)])


def xn_minus_1_zq(params: RingParams, n: int) -> ZqPoly:
    return ZqPoly.make(params, [-1] + [0] * (n - 1) + [1])


def coprime_with_witness(f: RPoly, g: RPoly):
    """Exact Bezout witnesses (a, b) with a*f + b*g = 1 over R, or None.

    Witnesses exist precisely when the residues of f and g are coprime over
    F_p; the lift inverts 1 + p*r + u*t via the finite geometric series in
    p*r and the complement of u*t.
    """
    if f.is_zero() or g.is_zero():
        raise PreconditionError("coprimality is only defined for nonzero polynomials")
    params = f.params
    p, q, s = params.p, params.q, params.s
    d, abar, bbar = fppoly.xgcd(list(f.residue()), list(g.residue()), p)
    if len(d) != 1:
        return None
    a0 = RPoly.make(params, [(c, 0) for c in abar])
    b0 = RPoly.make(params, [(c, 0) for c in bbar])
    delta = a0 * f + b0 * g - RPoly.one(params)
    da, db = delta.a_part(), delta.u_part()
    # delta's a-part vanishes mod p; peel one factor of p off its residues
    r = ZqPoly.make(params, [c // p for c in da.coeffs])
    lam = ZqPoly.const(params, 1)
    term = ZqPoly.const(params, 1)
    minus_pr = ZqPoly.make(params, [-p * c for c in r.coeffs])
    for _ in range(1, s):
        term = term * minus_pr
        lam = lam + term
    lam_r = RPoly.from_zq(lam)
    tau = RPoly.one(params) - (RPoly.from_zq(db * lam)).mul_u()
    kappa = lam_r * tau
    return kappa * a0, kappa * b0


def _hensel_pair(target: ZqPoly, gbar: list[int], hbar: list[int]) -> tuple[ZqPoly, ZqPoly]:
    """Lift a coprime factor pair of `target` mod p to an exact pair mod q.

    Quadratic iteration: the factorization and its Bezout witnesses are
    refined together, doubling precision each step.
    """
    params = target.params
    p, q = params.p, params.q
    d, abar, bbar = fppoly.xgcd(gbar, hbar, p)
    if len(d) != 1:
        raise PreconditionError("factor pair is not coprime mod p")
    G = ZqPoly.make(params, gbar)
    H = ZqPoly.make(params, hbar)
    A = ZqPoly.make(params, abar)
    B = ZqPoly.make(params, bbar)
    one = ZqPoly.const(params, 1)
    precision = p
    while precision < q:
        e = target - G * H
        quo, rem = divmod(B * e, G)
        G = G + rem
        H = H + A * e + quo * H
        delta = A * G + B * H - one
        quo2, rem2 = divmod(B * delta, G)
        B = B - rem2
        A = A - A * delta - quo2 * H
        precision = precision * precision
    assert (target - G * H).is_zero(), "Hensel iteration failed to converge"
    return G, H


def hensel_lift(gbar, params: RingParams) -> ZqPoly:
    """The unique monic lift of an irreducible gbar over F_p to Z_q that still
    divides x^N - 1, N the multiplicative order of gbar's roots."""
    coeffs = [int(c) % params.p for c in (gbar.residue() if isinstance(gbar, (ZqPoly, RPoly)) else gbar)]
    coeffs = _strip(coeffs)
    if not coeffs or coeffs[-1] != 1:
        raise PreconditionError("input must be monic over F_p")
    if len(coeffs) == 1:
        raise PreconditionError("input must have positive degree")
    if coeffs[0] == 0:
        raise PreconditionError("x divides the input; it cannot divide x^N - 1")
    if not fppoly.is_irreducible(coeffs, params.p):
        raise PreconditionError("input is reducible over F_p")
    root_order = fppoly.order_of_x(coeffs, params.p)
    target = xn_minus_1_zq(params, root_order)
    cofactor, rem = fppoly.poly_divmod([c % params.p for c in ([-1] + [0] * (root_order - 1) + [1])], coeffs, params.p)
    assert not rem
    if len(cofactor) == 1:
        return target
    lifted, _ = _hensel_pair(target, coeffs, cofactor)
    return lifted


def lift_factorization(target: ZqPoly, fbars: list[list[int]]) -> list[ZqPoly]:
    """Simultaneously Hensel-lift a full pairwise-coprime monic factorization
    of `target` mod p, by splitting the factor list in halves."""
    if len(fbars) == 1:
        return [target]
    mid = len(fbars) // 2
    left, right = fbars[:mid], fbars[mid:]
    p = target.params.p
    lbar = reduce(lambda x, y: fppoly.mul(x, y, p), left)
    rbar = reduce(lambda x, y: fppoly.mul(x, y, p), right)
    L, R = _hensel_pair(target, lbar, rbar)
    return lift_factorization(L, left) + lift_factorization(R, right)


@dataclass(frozen=True)
class Factorization:
    """x^n - 1 = product of monic basic irreducible factors, in canonical
    order (ascending degree, then coefficient vectors compared from the
    leading end down)."""

    n: int
    params: RingParams
    factors: tuple[RPoly, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.factors)

    def product(self) -> RPoly:
        return reduce(lambda x, y: x * y, self.factors, RPoly.one(self.params))


def _factor_sort_key(f: RPoly):
    return (f.degree, tuple(reversed([a for a, _ in f.coeffs])))


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int, params: RingParams) -> Factorization:
    """Factor x^n - 1 over R into basic irreducibles via cyclotomic cosets
    over F_p followed by a simultaneous Hensel lift."""
    if n < 1:
        raise PreconditionError(f"length n = {n} must be positive")
    if math.gcd(n, params.p) != 1:
        raise LengthNotCoprimeError(
            f"gcd(n, p) = gcd({n}, {params.p}) != 1; length must be prime to p"
        )
    minpolys = fppoly.minimal_polynomials(n, params.p)
    target = xn_minus_1_zq(params, n)
    lifted = lift_factorization(target, minpolys)
    factors = sorted((RPoly.from_zq(f) for f in lifted), key=_factor_sort_key)
    fact = Factorization(n, params, tuple(factors))
    assert (fact.product() - xn_minus_1(params, n)).is_zero(), "factor product mismatch"
    return fact


def is_basic_irreducible(f: RPoly) -> bool:
    if not f.is_monic():
        raise PreconditionError("basic irreducibility is tested for monic polynomials")
    return fppoly.is_irreducible(list(f.residue()), f.params.p)


def is_basic_primitive(f: RPoly) -> bool:
    if not f.is_monic():
        raise PreconditionError("basic primitivity is tested for monic polynomials")
    return fppoly.is_primitive(list(f.residue()), f.params.p)


# ---------------------------------------------------------------------------
# Text grammar and JSON forms.
#
# Z_q-polynomial: terms "c*x^k" in descending powers, "+"-joined; the
# coefficient is omitted when 1 (except for the constant term), "x^1" is
# written "x", and the zero polynomial is "0".
# R-polynomial: "<zqpoly>" or "<zqpoly>+u*(<zqpoly>)".
# JSON form of an R-polynomial: [[a, b], ...] with index = degree.
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\*)?x(?:\^(\d+))?$|^(\d+)$")


def format_zq_poly(poly: ZqPoly) -> str:
    if poly.is_zero():
        return "0"
    terms = []
    for k in range(poly.degree, -1, -1):
        c = poly[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{k}" if c == 1 else f"{c}*x^{k}")
    return "+".join(terms)


def parse_zq_poly(text: str, params: RingParams) -> ZqPoly:
    text = text.replace(" ", "")
    if not text:
        raise PolyParseError("empty polynomial text")
    coeffs: dict[int, int] = {}
    for token in text.split("+"):
        m = _TERM_RE.match(token)
        if not m:
            raise PolyParseError(f"cannot parse polynomial term {token!r}")
        if m.group(3) is not None:
            k, c = 0, int(m.group(3))
        else:
            c = int(m.group(1)) if m.group(1) else 1
            k = int(m.group(2)) if m.group(2) else 1
        coeffs[k] = coeffs.get(k, 0) + c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return ZqPoly.make(params, out)


def format_r_poly(poly: RPoly) -> str:
    a, b = poly.a_part(), poly.u_part()
    if b.is_zero():
        return format_zq_poly(a)
    return f"{format_zq_poly(a)}+u*({format_zq_poly(b)})"


def parse_r_poly(text: str, params: RingParams) -> RPoly:
    text = text.replace(" ", "")
    # bare "u" is accepted as shorthand for "u*(1)"
    text = re.sub(r"(?<![\w*])u(?!\*\()", "u*(1)", text)
    idx = text.find("u*(")
    if idx < 0:
        return RPoly.from_zq(parse_zq_poly(text, params))
    if not text.endswith(")"):
        raise PolyParseError(f"unterminated u-part in {text!r}")
    head = text[:idx].rstrip("+")
    inner = text[idx + 3 : -1]
    a = parse_zq_poly(head, params) if head else ZqPoly.zero(params)
    b = parse_zq_poly(inner, params)
    return RPoly.from_parts(a, b)


def r_poly_to_json(poly: RPoly) -> list[list[int]]:
    return [[a, b] for a, b in poly.coeffs]


def r_poly_from_json(data, params: RingParams) -> RPoly:
    return RPoly.make(params, [(int(a), int(b)) for a, b in data])


def zq_poly_to_json(poly: ZqPoly) -> list[int]:
    return list(poly.coeffs)
