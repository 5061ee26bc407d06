"""Exact arithmetic in R = Z_q + uZ_q (q = p^s, u^2 = 0) and its ideal census.

Elements are stored as least nonnegative residue pairs (a, b) meaning a + bu.
Every operation reduces eagerly, so equality and hashing are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from . import config
from .errors import GuardExceededError, PreconditionError
from .howell import ZqSpan


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class RingParams:
    """The ambient ring R = Z_q + uZ_q with q = p^s."""

    p: int
    s: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise PreconditionError(f"p = {self.p} is not prime")
        if self.p >= 1 << 16:
            raise PreconditionError(f"p = {self.p} exceeds the 16-bit prime bound")
        if self.s < 1:
            raise PreconditionError(f"s = {self.s} must be >= 1")
        if self.q != self.p**self.s:
            raise PreconditionError(f"q = {self.q} is not {self.p}^{self.s}")
        if self.q * self.q >= 1 << 63:
            raise PreconditionError(f"q^2 = {self.q}^2 does not fit a 64-bit word")

    def elem(self, a: int, b: int = 0) -> "RingElem":
        return RingElem(self, a % self.q, b % self.q)

    @property
    def zero(self) -> "RingElem":
        return RingElem(self, 0, 0)

    @property
    def one(self) -> "RingElem":
        return RingElem(self, 1, 0)

    @property
    def u(self) -> "RingElem":
        return RingElem(self, 0, 1)

    def elements(self) -> Iterator["RingElem"]:
        for a in range(self.q):
            for b in range(self.q):
                yield RingElem(self, a, b)

    def __str__(self):
        return f"Z{self.q}+uZ{self.q}"


def make_ring(p: int, s: int) -> RingParams:
    """Build parameters for R = Z_{p^s} + uZ_{p^s}, validating p and overflow."""
    if not isinstance(p, int) or not isinstance(s, int):
        raise PreconditionError("p and s must be integers")
    if not is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    if s < 1:
        raise PreconditionError(f"s = {s} must be >= 1")
    return RingParams(p, s, p**s)


@dataclass(frozen=True)
class RingElem:
    """An element a + bu of R, both coordinates least residues mod q."""

    params: RingParams
    a: int
    b: int

    def _check(self, other: "RingElem") -> None:
        if self.params != other.params:
            raise PreconditionError("mismatched ring parameters")

    def __add__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        q = self.params.q
        return RingElem(self.params, (self.a + other.a) % q, (self.b + other.b) % q)

    def __sub__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        q = self.params.q
        return RingElem(self.params, (self.a - other.a) % q, (self.b - other.b) % q)

    def __neg__(self) -> "RingElem":
        q = self.params.q
        return RingElem(self.params, (-self.a) % q, (-self.b) % q)

    def __mul__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        q = self.params.q
        # u^2 = 0, so (a+bu)(c+du) = ac + (ad+bc)u
        return RingElem(
            self.params,
            (self.a * other.a) % q,
            (self.a * other.b + self.b * other.a) % q,
        )

    def __pow__(self, k: int) -> "RingElem":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.params.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.a % self.params.p != 0

    def residue(self) -> int:
        """Image in the residue field R/(p, u) = F_p."""
        return self.a % self.params.p

    def inverse(self) -> "RingElem":
        if not self.is_unit():
            raise PreconditionError(f"{self} is not a unit")
        q = self.params.q
        ainv = pow(self.a, -1, q)
        # (a+bu)^{-1} = a^{-1} - a^{-2} b u
        return RingElem(self.params, ainv, (-ainv * ainv * self.b) % q)

    def __str__(self):
        if self.a == 0 and self.b == 0:
            return "0"
        if self.b == 0:
            return str(self.a)
        bu = "u" if self.b == 1 else f"{self.b}u"
        if self.a == 0:
            return bu
        return f"{self.a}+{bu}"


def ring_mul(x: RingElem, y: RingElem) -> RingElem:
    return x * y


def is_unit(x: RingElem) -> bool:
    return x.is_unit()


def residue(x: RingElem) -> int:
    return x.residue()


def teichmuller(a: int, p: int, q: int) -> int:
    """The Teichmuller representative of a in Z_q: iterate a -> a^p to a fixed point."""
    t = a % q
    prev = None
    while t != prev:
        prev = t
        t = pow(t, p, q)
    return t


@lru_cache(maxsize=None)
def teichmuller_set(params: RingParams) -> tuple[int, ...]:
    """{0} plus the (p-1)-th roots of unity in Z_q, sorted."""
    return tuple(sorted({teichmuller(a, params.p, params.q) for a in range(params.q)}))


def p_adic_digits(a: int, params: RingParams) -> tuple[int, ...]:
    """Digits (a_0, ..., a_{s-1}) over the Teichmuller set with a = sum a_i p^i mod q."""
    p, q, s = params.p, params.q, params.s
    v = a % q
    digits = []
    for _ in range(s):
        d = teichmuller(v, p, q)
        digits.append(d)
        v = ((v - d) % q) // p
    return tuple(digits)


# Ideal families of R.  Kinds:
#   p_power            (p^i),           0 <= i <= s
#   u_times_p_power    (p^k u),         0 <= k <= s-1
#   p_power_plus_alpha_u  (p^j + alpha*u), 1 <= j <= s-1, alpha != 0
#   p_power_and_u      (p^j, u),        1 <= j <= s-1
# alpha is a residue-field element; over the base ring it is a single
# coefficient, over GR(R, m) a polynomial of degree < m (little-endian tuple).

KIND_P_POWER = "p_power"
KIND_U_P_POWER = "u_times_p_power"
KIND_P_ALPHA_U = "p_power_plus_alpha_u"
KIND_P_AND_U = "p_power_and_u"

_KIND_ORDER = {
    KIND_P_POWER: 0,
    KIND_U_P_POWER: 1,
    KIND_P_ALPHA_U: 2,
    KIND_P_AND_U: 3,
}


@dataclass(frozen=True)
class IdealDescriptor:
    kind: str
    index: int
    alpha: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise PreconditionError(f"unknown ideal family {self.kind!r}")
        if self.kind == KIND_P_ALPHA_U:
            if self.alpha is None or not any(self.alpha):
                raise PreconditionError("alpha must be a nonzero residue-field element")
        elif self.alpha is not None:
            raise PreconditionError(f"family {self.kind} carries no alpha")

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.index, self.alpha or ())

    def is_zero_ideal(self, s: int) -> bool:
        return self.kind == KIND_P_POWER and self.index == s

    def is_unit_ideal(self) -> bool:
        return self.kind == KIND_P_POWER and self.index == 0

    def label(self) -> str:
        if self.kind == KIND_P_POWER:
            return f"(p^{self.index})"
        if self.kind == KIND_U_P_POWER:
            return f"(p^{self.index}*u)" if self.index else "(u)"
        if self.kind == KIND_P_ALPHA_U:
            alpha = ",".join(map(str, self.alpha))
            return f"(p^{self.index}+[{alpha}]*u)"
        return f"(p^{self.index}, u)"


def census_size(p: int, s: int, m: int = 1) -> int:
    """Number of ideals of GR(R, m): 3s + (s-1)(p^m - 1)."""
    return 3 * s + (s - 1) * (p**m - 1)


def _alpha_range(p: int, m: int) -> Iterator[tuple[int, ...]]:
    # nonzero F_{p^m} elements as little-endian coefficient tuples, in
    # ascending integer-encoding order
    for enc in range(1, p**m):
        digits = []
        v = enc
        for _ in range(m):
            digits.append(v % p)
            v //= p
        yield tuple(digits)


def ideal_descriptors(p: int, s: int, m: int = 1) -> list[IdealDescriptor]:
    """All ideal descriptors of GR(R, m) in canonical family/index/alpha order."""
    out = [IdealDescriptor(KIND_P_POWER, i) for i in range(s + 1)]
    out += [IdealDescriptor(KIND_U_P_POWER, k) for k in range(s)]
    for j in range(1, s):
        out += [IdealDescriptor(KIND_P_ALPHA_U, j, alpha) for alpha in _alpha_range(p, m)]
    out += [IdealDescriptor(KIND_P_AND_U, j) for j in range(1, s)]
    out.sort(key=IdealDescriptor.sort_key)
    return out


def enumerate_ideals(params: RingParams) -> list[IdealDescriptor]:
    """The complete ideal list of R itself (extension degree 1)."""
    return ideal_descriptors(params.p, params.s, 1)


def _base_generators(desc: IdealDescriptor, params: RingParams) -> list[RingElem]:
    p = params.p
    if desc.kind == KIND_P_POWER:
        return [params.elem(p**desc.index)]
    if desc.kind == KIND_U_P_POWER:
        return [params.elem(0, p**desc.index)]
    if desc.kind == KIND_P_ALPHA_U:
        (alpha,) = desc.alpha
        return [params.elem(p**desc.index, alpha)]
    return [params.elem(p**desc.index), params.elem(0, 1)]


def ideal_span(desc: IdealDescriptor, params: RingParams) -> ZqSpan:
    """The ideal of R generated by desc, as a Z_q-span of (a, b) vectors."""
    rows = []
    for g in _base_generators(desc, params):
        rows.append((g.a, g.b))
        rows.append((0, g.a))  # u * (a+bu) = a*u
    return ZqSpan.from_rows(rows, params.p, params.s, 2)


def ideal_elements(desc: IdealDescriptor, params: RingParams) -> frozenset[RingElem]:
    """Explicit element set of the ideal; guarded to desk scale."""
    if params.q > config.MAX_ORACLE_Q:
        raise GuardExceededError(
            f"q = {params.q} exceeds the enumeration guard {config.MAX_ORACLE_Q}"
        )
    span = ideal_span(desc, params)
    return frozenset(RingElem(params, a, b) for a, b in span.elements())
