"""Cyclic codes of length n over R as ideals (or Z_q[x]-spans) of R[x]/(x^n-1).

The CRT idempotent system splits the ambient ring along the basic irreducible
factors of x^n - 1; each component is an ideal of a Galois extension GR(R, m)
and is identified against the complete ideal census.  On top of that sit the
canonical generator pair (f0 + u*f1, u*g1), cardinality, minimum generating
sets, freeness, and BCH-style distance certificates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator, Optional, Sequence

from . import config
from .errors import (
    EnumerationBudgetError,
    GeneratorHypothesesError,
    LengthNotCoprimeError,
    PreconditionError,
)
from .galois import GaloisRingCtx, build_ctx, eval_at, gr_ideal_span, gr_ideals, gr_span_of_elements, nth_root_of_unity
from .howell import ZqSpan
from .poly import (
    Factorization,
    RPoly,
    ZqPoly,
    divmod_monic,
    factor_xn_minus_1,
    xn_minus_1,
    xn_minus_1_zq,
)
from .ring import (
    IdealDescriptor,
    KIND_P_ALPHA_U,
    KIND_P_POWER,
    KIND_U_P_POWER,
    RingParams,
)


@dataclass(frozen=True)
class CrtSystem:
    """Factorization of x^n - 1 with Bezout witnesses and orthogonal idempotents."""

    n: int
    params: RingParams
    factorization: Factorization
    cofactors: tuple[RPoly, ...]  # (x^n - 1) / f_l
    witnesses: tuple[tuple[RPoly, RPoly], ...]  # a_l f_l + b_l fhat_l = 1
    idempotents: tuple[RPoly, ...]  # e_l = b_l fhat_l mod (x^n - 1)

    @property
    def t(self) -> int:
        return len(self.factorization.factors)


@lru_cache(maxsize=None)
def build_crt(n: int, params: RingParams) -> CrtSystem:
    """Idempotent system for R[x]/(x^n - 1); requires gcd(n, p) = 1."""
    from .poly import coprime_with_witness

    fact = factor_xn_minus_1(n, params)
    cofactors = []
    witnesses = []
    idempotents = []
    whole = xn_minus_1(params, n)
    for f in fact.factors:
        fhat, rem = divmod_monic(whole, f)
        assert rem.is_zero()
        w = coprime_with_witness(f, fhat)
        if w is None:
            raise RuntimeError("factor and cofactor unexpectedly not coprime")
        a, b = w
        cofactors.append(fhat)
        witnesses.append((a, b))
        idempotents.append((b * fhat).reduce_cyclic(n))
    return CrtSystem(n, params, fact, tuple(cofactors), tuple(witnesses), tuple(idempotents))


def count_cyclic_codes(n: int, params: RingParams) -> int:
    """Product over the factor degrees of the per-component ideal counts."""
    fact = factor_xn_minus_1(n, params)
    p, s = params.p, params.s
    return reduce(
        lambda acc, eps: acc * ((p**eps - 1) * (s - 1) + 3 * s), fact.degrees, 1
    )


MODE_IDEAL = "ideal"
MODE_MODULE = "module"


def _word_vector(poly: RPoly, n: int) -> list[int]:
    # element of Z_q^{2n}: a-coordinates then u-coordinates
    return [poly[i][0] for i in range(n)] + [poly[i][1] for i in range(n)]


def _vector_poly(vec: Sequence[int], n: int, params: RingParams) -> RPoly:
    return RPoly.make(params, [(vec[i], vec[n + i]) for i in range(n)])


class CyclicCode:
    """A cyclic code of length n over R, given by generators and a closure mode.

    In "ideal" mode the code is the ideal of R[x]/(x^n - 1) generated by the
    generators; in "module" mode it is only their Z_q[x]-span (closed under
    the cyclic shift and Z_q scaling, but not under multiplication by u).
    """

    def __init__(self, n: int, params: RingParams, generators: Sequence[RPoly],
                 closure_mode: str = MODE_IDEAL):
        if n < 1:
            raise PreconditionError("length must be positive")
        if math.gcd(n, params.p) != 1:
            raise LengthNotCoprimeError(f"gcd({n}, {params.p}) != 1")
        if closure_mode not in (MODE_IDEAL, MODE_MODULE):
            raise PreconditionError(f"unknown closure mode {closure_mode!r}")
        self.n = n
        self.params = params
        self.generators = tuple(g.reduce_cyclic(n) for g in generators)
        self.closure_mode = closure_mode
        self._span: Optional[ZqSpan] = None
        self._components: Optional[tuple[IdealDescriptor, ...]] = None
        self._canonical = None

    # -- element-set machinery -------------------------------------------

    def span(self) -> ZqSpan:
        """The code as a Z_q-span in Z_q^{2n} (this is exactly the element set)."""
        if self._span is None:
            rows = []
            for g in self.generators:
                for i in range(self.n):
                    shifted = g.shift(i).reduce_cyclic(self.n)
                    rows.append(_word_vector(shifted, self.n))
                    if self.closure_mode == MODE_IDEAL:
                        rows.append(_word_vector(shifted.mul_u(), self.n))
            self._span = ZqSpan.from_rows(rows, self.params.p, self.params.s, 2 * self.n)
        return self._span

    def fingerprint(self) -> tuple:
        return self.span().fingerprint()

    def same_elements(self, other: "CyclicCode") -> bool:
        return self.fingerprint() == other.fingerprint()

    def cardinality(self) -> tuple[int, int]:
        """|C| as (p, exponent)."""
        return self.params.p, self.span().size_exponent()

    def contains(self, word) -> bool:
        if isinstance(word, RPoly):
            word = _word_vector(word.reduce_cyclic(self.n), self.n)
        return self.span().contains(word)

    def words(self) -> Iterator[RPoly]:
        for vec in self.span().elements():
            yield _vector_poly(vec, self.n, self.params)

    # -- CRT components ----------------------------------------------------

    def crt(self) -> CrtSystem:
        return build_crt(self.n, self.params)

    def components(self) -> tuple[IdealDescriptor, ...]:
        """Identify the component ideal of GR(R, eps_l) at every factor."""
        if self.closure_mode != MODE_IDEAL:
            raise PreconditionError("components are defined for ideal closure only")
        if self._components is None:
            crt = self.crt()
            out = []
            for l, f in enumerate(crt.factorization.factors):
                ctx = _component_ctx(f)
                reduced = [divmod_monic(g, f)[1] for g in self.generators]
                span = gr_span_of_elements(ctx, [ctx.from_rpoly(r) for r in reduced])
                desc = _component_lookup(ctx).get(span.fingerprint())
                if desc is None:
                    raise RuntimeError("component ideal missing from census")
                out.append(desc)
            self._components = tuple(out)
        return self._components

    @classmethod
    def from_components(cls, n: int, params: RingParams,
                        descriptors: Sequence[IdealDescriptor]) -> "CyclicCode":
        """Build the ideal with the given component at each factor, realizing
        generators as multiples of the CRT cofactors."""
        crt = build_crt(n, params)
        if len(descriptors) != crt.t:
            raise PreconditionError(f"expected {crt.t} component descriptors")
        p = params.p
        gens = []
        for desc, fhat in zip(descriptors, crt.cofactors):
            if desc.is_zero_ideal(params.s):
                continue
            if desc.kind == KIND_P_POWER:
                gens.append((fhat * (p**desc.index)).reduce_cyclic(n))
            elif desc.kind == KIND_U_P_POWER:
                gens.append((fhat.mul_u() * (p**desc.index)).reduce_cyclic(n))
            elif desc.kind == KIND_P_ALPHA_U:
                alpha = RPoly.make(params, [(0, c) for c in desc.alpha])
                gen = fhat * (p**desc.index) + alpha * fhat
                gens.append(gen.reduce_cyclic(n))
            else:  # (p^j, u)
                gens.append((fhat * (p**desc.index)).reduce_cyclic(n))
                gens.append(fhat.mul_u().reduce_cyclic(n))
        return cls(n, params, gens, MODE_IDEAL)

    # -- canonical generators ----------------------------------------------

    def canonical(self) -> "CanonicalGenerators":
        if self.closure_mode != MODE_IDEAL:
            raise PreconditionError("canonical generators require ideal closure")
        if self._canonical is None:
            self._canonical = _canonical_form(self)
        return self._canonical

    def minimum_generating_set(self) -> list[RPoly]:
        """x^i (f0 + u f1) for i < n - k0 and x^j u g1 for j < k0 - k1."""
        can = self.canonical()
        if not can.hypotheses_ok:
            raise GeneratorHypothesesError(
                "canonical generators do not satisfy the divisor-chain hypotheses "
                f"(g1 | f0: {can.g1_divides_f0}, f0 | x^n-1: {can.f0_divides_xn1}, "
                f"g1 | x^n-1: {can.g1_divides_xn1})"
            )
        f = RPoly.from_parts(can.f0, can.f1)
        ug1 = RPoly.from_zq(can.g1).mul_u()
        beta = [f.shift(i) for i in range(self.n - can.k0)]
        beta += [ug1.shift(j) for j in range(can.k0 - can.k1)]
        return [b.reduce_cyclic(self.n) for b in beta]

    # -- freeness and BCH ----------------------------------------------------

    def is_free(self) -> Optional[RPoly]:
        """The monic divisor g of x^n - 1 with C = (g), if one exists."""
        crt = self.crt()
        target = self.fingerprint()
        for mask in range(1 << crt.t):
            g = RPoly.one(self.params)
            for l in range(crt.t):
                if mask & (1 << l):
                    g = g * crt.factorization.factors[l]
            cand = CyclicCode(self.n, self.params, [g], MODE_IDEAL)
            if cand.fingerprint() == target:
                return g.reduce_cyclic(self.n) if g.degree < self.n else g
        return None

    def bch_bound(self) -> "BchCertificate":
        g = self.is_free()
        if g is None:
            raise PreconditionError("BCH certificate requires a free code")
        return bch_bound_of(g, self.n, self.params)

    # -- serialization --------------------------------------------------------

    def to_descriptor(self) -> dict:
        from .poly import format_r_poly, r_poly_to_json, zq_poly_to_json

        out = {
            "n": self.n,
            "p": self.params.p,
            "s": self.params.s,
            "closure_mode": self.closure_mode,
            "generators": [r_poly_to_json(g) for g in self.generators],
            "generator_texts": [format_r_poly(g) for g in self.generators],
        }
        warnings = []
        if self.closure_mode == MODE_IDEAL:
            can = self.canonical()
            out["canonical"] = {
                "f0": zq_poly_to_json(can.f0),
                "f1": zq_poly_to_json(can.f1),
                "g1": zq_poly_to_json(can.g1),
            }
            out["components"] = [
                {
                    "l": l + 1,
                    "family": desc.kind,
                    "index": desc.index,
                    "alpha": list(desc.alpha) if desc.alpha is not None else None,
                }
                for l, desc in enumerate(self.components())
            ]
            if not can.hypotheses_ok:
                warnings.append(
                    "canonical generators violate the divisor-chain hypotheses; "
                    "the q^(2n-k0-k1) cardinality formula does not apply"
                )
        else:
            out["canonical"] = None
            out["components"] = None
            warnings.append("module closure: canonical generators and components undefined")
        base, exp = self.cardinality()
        out["cardinality"] = {"base": base, "exponent": exp}
        if self.closure_mode == MODE_MODULE:
            ideal_twin = CyclicCode(self.n, self.params, self.generators, MODE_IDEAL)
            _, ideal_exp = ideal_twin.cardinality()
            out["ideal_closure_cardinality"] = {"base": base, "exponent": ideal_exp}
            if ideal_exp != exp:
                warnings.append(
                    f"ideal closure of the same generators is strictly larger "
                    f"({base}^{ideal_exp} vs {base}^{exp}); the two closure semantics disagree"
                )
        g = self.is_free()
        out["free"] = g is not None
        if g is not None:
            cert = bch_bound_of(g, self.n, self.params)
            out["bch"] = {"b": cert.b, "delta": cert.delta}
        else:
            out["bch"] = None
        out["warnings"] = warnings
        return out


# -- component census helpers ------------------------------------------------


@lru_cache(maxsize=None)
def _component_ctx(f: RPoly) -> GaloisRingCtx:
    return build_ctx(f)


@lru_cache(maxsize=None)
def _component_lookup(ctx: GaloisRingCtx) -> dict[tuple, IdealDescriptor]:
    out = {}
    for desc in gr_ideals(ctx):
        span = gr_ideal_span(desc, ctx)
        out[span.fingerprint()] = desc
    return out


def components_of(code: CyclicCode) -> list["ComponentIdeal"]:
    return [ComponentIdeal(l + 1, desc) for l, desc in enumerate(code.components())]


@dataclass(frozen=True)
class ComponentIdeal:
    l: int  # 1-based factor index
    descriptor: IdealDescriptor


def code_from_components(n: int, params: RingParams,
                         components: Sequence[ComponentIdeal]) -> CyclicCode:
    ordered = sorted(components, key=lambda c: c.l)
    if [c.l for c in ordered] != list(range(1, len(ordered) + 1)):
        raise PreconditionError("component list must cover factors 1..t exactly once")
    return CyclicCode.from_components(n, params, [c.descriptor for c in ordered])


def enumerate_cyclic_codes(n: int, params: RingParams,
                           limit: Optional[int] = None) -> Iterator[CyclicCode]:
    """All cyclic codes in canonical component order (may be budget-guarded)."""
    total = count_cyclic_codes(n, params)
    cap = limit if limit is not None else config.DEFAULT_ENUM_BUDGET
    if total > cap and limit is None:
        raise EnumerationBudgetError(
            f"{total} codes exceed the enumeration budget {cap}; pass an explicit limit"
        )
    crt = build_crt(n, params)
    per_factor = [
        gr_ideals(_component_ctx(f)) for f in crt.factorization.factors
    ]
    produced = 0
    for combo in itertools.product(*per_factor):
        if produced >= cap:
            return
        yield CyclicCode.from_components(n, params, list(combo))
        produced += 1


# -- canonical generators ------------------------------------------------------


@dataclass(frozen=True)
class CanonicalGenerators:
    """C = (f0 + u f1, u g1) with monic f0, g1 and deg f1 < deg g1.

    k0 = deg f0 and k1 = deg g1 feed the q^(2n - k0 - k1) cardinality count,
    which is only valid when the divisor-chain hypotheses hold (see flags).
    """

    f0: ZqPoly
    f1: ZqPoly
    g1: ZqPoly
    k0: int
    k1: int
    g1_divides_f0: bool
    f0_divides_xn1: bool
    g1_divides_xn1: bool

    @property
    def hypotheses_ok(self) -> bool:
        return self.g1_divides_f0 and self.f0_divides_xn1 and self.g1_divides_xn1

    def predicted_size_exponent(self, n: int, s: int) -> int:
        """log_p |C| according to the generator-count formula."""
        return s * (2 * n - self.k0 - self.k1)


def _psi_exponent(desc: IdealDescriptor, s: int) -> int:
    # exponent i with psi(component) = (p^i) in GR(q, eps)
    if desc.kind == KIND_P_POWER:
        return desc.index
    if desc.kind == KIND_U_P_POWER:
        return s
    return desc.index


def _u_quotient_exponent(desc: IdealDescriptor, s: int) -> int:
    # exponent j with {h : u*h in component} = (p^j) in GR(q, eps)
    if desc.kind == KIND_P_POWER:
        return desc.index
    if desc.kind == KIND_U_P_POWER:
        return desc.index
    if desc.kind == KIND_P_ALPHA_U:
        return min(desc.index, s - desc.index)
    return 0


def _chain_generator(exponents: Sequence[int], crt: CrtSystem) -> ZqPoly:
    """Monic generator of the ideal with component (p^{e_l}) at each factor:
    unit-normalized sum of p^e * (product of factors with exponent > e)."""
    params = crt.params
    zq_factors = [f.a_part() for f in crt.factorization.factors]
    acc = ZqPoly.zero(params)
    for e in range(params.s):
        g_e = ZqPoly.const(params, 1)
        for exp, f in zip(exponents, zq_factors):
            if exp > e:
                g_e = g_e * f
        acc = acc + ZqPoly.const(params, params.p**e) * g_e
    if acc.is_zero():  # all exponents are s and s == ... cannot happen: g_e >= 1
        raise RuntimeError("chain generator collapsed to zero")
    return acc.monic()


def _canonical_form(code: CyclicCode) -> CanonicalGenerators:
    params = code.params
    n, s = code.n, params.s
    crt = code.crt()
    comps = code.components()
    i_exps = [_psi_exponent(d, s) for d in comps]
    j_exps = [_u_quotient_exponent(d, s) for d in comps]
    f0 = _chain_generator(i_exps, crt)
    g1 = _chain_generator(j_exps, crt)

    # f1: only the (p^j + alpha u) components contribute a u-part;
    # assembled through the Z_q-side idempotents and reduced mod g1.
    f1 = ZqPoly.zero(params)
    for desc, f, e_l, i_exp in zip(comps, crt.factorization.factors, crt.idempotents, i_exps):
        if desc.kind != KIND_P_ALPHA_U:
            continue
        f_zq = f.a_part()
        f0_mod = f0 % f_zq
        unit_part = ZqPoly.make(params, [c // params.p**i_exp for c in f0_mod.coeffs])
        alpha = ZqPoly.make(params, desc.alpha)
        contrib = (alpha * unit_part) % f_zq
        f1 = f1 + contrib * e_l.a_part()
    f1 = _reduce_cyclic_zq(f1, n)
    if g1.degree == 0:
        f1 = ZqPoly.zero(params)
    else:
        f1 = f1 % g1

    xn1 = xn_minus_1_zq(params, n)
    can = CanonicalGenerators(
        f0=f0,
        f1=f1,
        g1=g1,
        k0=f0.degree,
        k1=g1.degree,
        g1_divides_f0=g1.divides(f0),
        f0_divides_xn1=f0.divides(xn1),
        g1_divides_xn1=g1.divides(xn1),
    )
    # The pair must regenerate the code exactly.
    pair = CyclicCode(
        n, params,
        [RPoly.from_parts(can.f0, can.f1), RPoly.from_zq(can.g1).mul_u()],
        MODE_IDEAL,
    )
    if pair.fingerprint() != code.fingerprint():
        raise RuntimeError("canonical generator pair does not regenerate the code")
    return can


def _reduce_cyclic_zq(poly: ZqPoly, n: int) -> ZqPoly:
    q = poly.params.q
    acc = [0] * n
    for i, c in enumerate(poly.coeffs):
        acc[i % n] = (acc[i % n] + c) % q
    return ZqPoly.make(poly.params, acc)


# -- BCH bound ---------------------------------------------------------------


@dataclass(frozen=True)
class BchCertificate:
    """Verified consecutive roots zeta^b .. zeta^{b+delta-2} of a free code's
    generator, certifying minimum Hamming distance >= delta."""

    n: int
    b: int
    delta: int
    root_exponents: tuple[int, ...]
    ctx: GaloisRingCtx


def bch_bound_of(g: RPoly, n: int, params: RingParams) -> BchCertificate:
    """Longest cyclic run of consecutive root exponents of g at powers of a
    basic primitive n-th root of unity; delta = run length + 1."""
    ctx, zeta = nth_root_of_unity(n, params)
    is_root = []
    acc = ctx.one()
    for _ in range(n):
        is_root.append(eval_at(g, acc, ctx).is_zero())
        acc = acc * zeta
    if all(is_root):
        return BchCertificate(n, 0, n + 1, tuple(range(n)), ctx)
    best_len, best_b = 0, 0
    for b in range(n):
        if is_root[b] and is_root[b - 1]:
            continue  # not the start of a run
        length = 0
        while length < n and is_root[(b + length) % n]:
            length += 1
        if length > best_len:
            best_len, best_b = length, b
    if best_len == 0:
        return BchCertificate(n, 0, 1, (), ctx)
    exps = tuple((best_b + i) % n for i in range(best_len))
    return BchCertificate(n, best_b, best_len + 1, exps, ctx)
