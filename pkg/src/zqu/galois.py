"""Galois extensions GR(R, m) = R[x]/(f(x)) for basic irreducible f.

Elements are residue classes represented by coefficient pairs of degree < m.
Provides the unit-group order, the ideal census of GR(R, m), Teichmuller
lifts, and basic primitive n-th roots of unity for distance-bound work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import config, fppoly
from .errors import GuardExceededError, LengthNotCoprimeError, PreconditionError
from .howell import ZqSpan
from .poly import RPoly, divmod_monic, hensel_lift, is_basic_irreducible, is_basic_primitive
from .ring import IdealDescriptor, KIND_P_ALPHA_U, KIND_P_POWER, KIND_U_P_POWER
from .ring import RingElem, RingParams, ideal_descriptors


@dataclass(frozen=True)
class GaloisRingCtx:
    """GR(R, m) with a fixed monic basic irreducible modulus of degree m."""

    params: RingParams
    modulus: RPoly
    m: int
    primitive: bool

    @property
    def size(self) -> int:
        return (self.params.q ** 2) ** self.m

    @property
    def residue_field_size(self) -> int:
        return self.params.p**self.m

    def zero(self) -> "GrElem":
        return GrElem(self, ((0, 0),) * self.m)

    def one(self) -> "GrElem":
        return self.embed_pair(1, 0)

    def embed_pair(self, a: int, b: int) -> "GrElem":
        q = self.params.q
        pairs = [(a % q, b % q)] + [(0, 0)] * (self.m - 1)
        return GrElem(self, tuple(pairs[: self.m]))

    def embed(self, e: RingElem) -> "GrElem":
        return self.embed_pair(e.a, e.b)

    def from_rpoly(self, poly: RPoly) -> "GrElem":
        rem = divmod_monic(poly, self.modulus)[1] if poly.degree >= self.m else poly
        pairs = [rem[i] for i in range(self.m)]
        return GrElem(self, tuple(pairs))

    @property
    def xi(self) -> "GrElem":
        """The class of x; a basic primitive element when the modulus is
        basic primitive."""
        if not self.primitive:
            raise PreconditionError("modulus is not basic primitive; no designated xi")
        return self.from_rpoly(RPoly.make(self.params, [(0, 0), (1, 0)]))

    def elements(self):
        q = self.params.q
        total = self.size
        for enc in range(total):
            pairs = []
            v = enc
            for _ in range(self.m):
                a = v % q
                v //= q
                b = v % q
                v //= q
                pairs.append((a, b))
            yield GrElem(self, tuple(pairs))


@dataclass(frozen=True)
class GrElem:
    """Element of GR(R, m): coordinates in the basis 1, alpha, ..., alpha^{m-1}."""

    ctx: GaloisRingCtx
    pairs: tuple[tuple[int, int], ...]

    def to_rpoly(self) -> RPoly:
        return RPoly.make(self.ctx.params, self.pairs)

    def is_zero(self) -> bool:
        return all(a == 0 and b == 0 for a, b in self.pairs)

    def __add__(self, other: "GrElem") -> "GrElem":
        q = self.ctx.params.q
        return GrElem(
            self.ctx,
            tuple(
                ((a1 + a2) % q, (b1 + b2) % q)
                for (a1, b1), (a2, b2) in zip(self.pairs, other.pairs)
            ),
        )

    def __sub__(self, other: "GrElem") -> "GrElem":
        q = self.ctx.params.q
        return GrElem(
            self.ctx,
            tuple(
                ((a1 - a2) % q, (b1 - b2) % q)
                for (a1, b1), (a2, b2) in zip(self.pairs, other.pairs)
            ),
        )

    def __mul__(self, other: "GrElem") -> "GrElem":
        prod = self.to_rpoly() * other.to_rpoly()
        return self.ctx.from_rpoly(prod)

    def __pow__(self, k: int) -> "GrElem":
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scalar_mul(self, e: RingElem) -> "GrElem":
        q = self.ctx.params.q
        return GrElem(
            self.ctx,
            tuple(((a * e.a) % q, (a * e.b + b * e.a) % q) for a, b in self.pairs),
        )

    def residue(self) -> tuple[int, ...]:
        """Image in the residue field F_{p^m}, as F_p coordinates."""
        p = self.ctx.params.p
        return tuple(a % p for a, _ in self.pairs)

    def is_unit(self) -> bool:
        return any(self.residue())

    def a_coeffs(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    def __str__(self):
        from .poly import format_r_poly

        return format_r_poly(self.to_rpoly()).replace("x", "α")


def build_ctx(f: RPoly) -> GaloisRingCtx:
    """Context for GR(R, m) = R[x]/(f); f must be monic basic irreducible."""
    if not f.is_monic():
        raise PreconditionError("modulus must be monic")
    if not is_basic_irreducible(f):
        raise PreconditionError("modulus residue is reducible over F_p")
    return GaloisRingCtx(f.params, f, f.degree, is_basic_primitive(f))


def gr_is_unit(e: GrElem) -> bool:
    return e.is_unit()


def unit_group_order(ctx: GaloisRingCtx) -> int:
    p, s, m = ctx.params.p, ctx.params.s, ctx.m
    return (p**m - 1) * p ** ((2 * s - 1) * m)


def gr_ideals(ctx: GaloisRingCtx) -> list[IdealDescriptor]:
    """All ideals of GR(R, m): 3s + (s-1)(p^m - 1) descriptors in canonical order."""
    return ideal_descriptors(ctx.params.p, ctx.params.s, ctx.m)


def descriptor_generators(desc: IdealDescriptor, ctx: GaloisRingCtx) -> list[GrElem]:
    """Realize a descriptor's generators inside GR(R, m)."""
    p = ctx.params.p
    if desc.kind == KIND_P_POWER:
        return [ctx.embed_pair(p**desc.index, 0)]
    if desc.kind == KIND_U_P_POWER:
        return [ctx.embed_pair(0, p**desc.index)]
    if desc.kind == KIND_P_ALPHA_U:
        pairs = [(0, c) for c in desc.alpha] + [(0, 0)] * ctx.m
        gen = RPoly.make(ctx.params, pairs[: ctx.m])
        return [ctx.embed_pair(p**desc.index, 0) + ctx.from_rpoly(gen)]
    return [ctx.embed_pair(p**desc.index, 0), ctx.embed_pair(0, 1)]


def _gr_vector(e: GrElem) -> list[int]:
    # coordinates in Z_q^{2m}: a-parts then b-parts
    return [a for a, _ in e.pairs] + [b for _, b in e.pairs]


def gr_span_of_elements(ctx: GaloisRingCtx, gens: list[GrElem]) -> ZqSpan:
    """The ideal generated by `gens` as a Z_q-span inside Z_q^{2m}.

    Multiplier rows alpha^i * g and u * alpha^i * g suffice: any scalar
    sum_i (a_i + b_i u) alpha^i acts through them Z_q-linearly.
    """
    alpha = ctx.from_rpoly(RPoly.make(ctx.params, [(0, 0), (1, 0)])) if ctx.m > 1 else ctx.one()
    u = ctx.params.u
    rows = []
    for g in gens:
        acc = g
        for _ in range(ctx.m):
            rows.append(_gr_vector(acc))
            rows.append(_gr_vector(acc.scalar_mul(u)))
            acc = acc * alpha
    return ZqSpan.from_rows(rows, ctx.params.p, ctx.params.s, 2 * ctx.m)


def gr_ideal_span(desc: IdealDescriptor, ctx: GaloisRingCtx) -> ZqSpan:
    return gr_span_of_elements(ctx, descriptor_generators(desc, ctx))


def gr_ideal_elements(desc: IdealDescriptor, ctx: GaloisRingCtx) -> frozenset[GrElem]:
    if ctx.size > config.MAX_CENSUS_SIZE:
        raise GuardExceededError(
            f"|GR(R, m)| = {ctx.size} exceeds the census guard {config.MAX_CENSUS_SIZE}"
        )
    span = gr_ideal_span(desc, ctx)
    m = ctx.m
    out = set()
    for vec in span.elements():
        pairs = tuple((vec[i], vec[m + i]) for i in range(m))
        out.add(GrElem(ctx, pairs))
    return frozenset(out)


@lru_cache(maxsize=None)
def nth_root_of_unity(n: int, params: RingParams) -> tuple[GaloisRingCtx, GrElem]:
    """A canonical basic primitive n-th root of unity.

    The context modulus is the Hensel lift of the canonical primitive
    polynomial of degree m = ord_n(p); zeta = xi^{(p^m - 1)/n}.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    if math.gcd(n, params.p) != 1:
        raise LengthNotCoprimeError(f"gcd({n}, {params.p}) != 1")
    m = fppoly.multiplicative_order(params.p, n)
    pi = fppoly.smallest_primitive(params.p, m)
    modulus = RPoly.from_zq(hensel_lift(list(pi), params))
    ctx = build_ctx(modulus)
    zeta = ctx.xi ** ((params.p**m - 1) // n)
    return ctx, zeta


def eval_at(g: RPoly, e: GrElem, ctx: GaloisRingCtx) -> GrElem:
    """Horner evaluation of an R-polynomial at a Galois-ring element."""
    acc = ctx.zero()
    for i in range(g.degree, -1, -1):
        acc = acc * e + ctx.embed_pair(*g[i])
    return acc


def gr_teichmuller(e: GrElem) -> GrElem:
    """Teichmuller representative: iterate z -> z^{p^m} to its fixed point."""
    step = e.ctx.params.p ** e.ctx.m
    t = e
    prev = None
    while t != prev:
        prev = t
        t = t**step
    return t


def gr_teichmuller_set(ctx: GaloisRingCtx) -> list[GrElem]:
    """{0} plus the (p^m - 1)-th roots of unity of GR(R, m).

    Obtained as powers of the Teichmuller lift of a residue-field generator,
    so no discrete logarithms are needed.
    """
    p, m = ctx.params.p, ctx.m
    if ctx.primitive:
        gen = ctx.xi
    else:
        field = fppoly.FpExt(p, ctx.modulus.residue())
        gen_res = None
        for cand in field.elements():
            if any(cand) and field.element_order(cand) == p**m - 1:
                gen_res = cand
                break
        lifted = RPoly.make(ctx.params, [(c, 0) for c in gen_res])
        gen = gr_teichmuller(ctx.from_rpoly(lifted))
    out = [ctx.zero()]
    acc = ctx.one()
    for _ in range(p**m - 1):
        out.append(acc)
        acc = acc * gen
    return out


def gr_zq_padic_digits(e: GrElem) -> list[GrElem]:
    """p-adic digits of the Z_q-part of e over the Teichmuller set."""
    ctx = e.ctx
    p, s = ctx.params.p, ctx.params.s
    v = GrElem(ctx, tuple((a, 0) for a, _ in e.pairs))
    digits = []
    for _ in range(s):
        d = gr_teichmuller(v)
        digits.append(d)
        diff = v - d
        v = GrElem(ctx, tuple((a // p, 0) for a, _ in diff.pairs))
    return digits
