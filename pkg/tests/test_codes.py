import json

import pytest

from zqu.codes import (
    CyclicCode,
    build_crt,
    code_from_components,
    components_of,
    count_cyclic_codes,
    enumerate_cyclic_codes,
)
from zqu.errors import (
    EnumerationBudgetError,
    GeneratorHypothesesError,
    LengthNotCoprimeError,
    PreconditionError,
)
from zqu.poly import RPoly, factor_xn_minus_1, format_zq_poly, parse_r_poly
from zqu.ring import IdealDescriptor, KIND_U_P_POWER, make_ring

from helpers import code_element_set, rotate

R4 = make_ring(2, 2)
R8 = make_ring(2, 3)
R9 = make_ring(3, 2)

Z8_GEN = "x^10+6*x^9+x^8+6*x^7+3*x^5+7*x^4+4*x^3+7*x^2+5*x+1"
Z4_GENS = ["3*x^3+x^2+2*x+1", "0+u*(x+3)"]


def code(params, n, texts, mode="ideal"):
    return CyclicCode(n, params, [parse_r_poly(t, params) for t in texts], mode)


@pytest.fixture(scope="module")
def all63():
    return list(enumerate_cyclic_codes(3, R4))


# -- CRT system -----------------------------------------------------------------


@pytest.mark.parametrize("n,params", [(3, R4), (1, R4), (7, R4), (15, R8), (5, R9)])
def test_crt_idempotent_identities(n, params):
    crt = build_crt(n, params)
    total = RPoly.zero(params)
    for i, e in enumerate(crt.idempotents):
        total = total + e
        assert ((e * e).reduce_cyclic(n) - e).is_zero()
        for e2 in crt.idempotents[i + 1 :]:
            assert (e * e2).reduce_cyclic(n).is_zero()
    assert (total - RPoly.one(params)).is_zero()


def test_crt_single_factor():
    crt = build_crt(1, R4)
    assert crt.t == 1
    assert crt.idempotents[0] == RPoly.one(R4)


# -- counting and enumeration ------------------------------------------------------


def test_count_examples():
    assert count_cyclic_codes(3, R4) == 63
    assert count_cyclic_codes(1, R4) == 7
    assert count_cyclic_codes(7, R4) == 7 * 13 * 13


def test_enumeration_distinct_and_complete(all63):
    assert len(all63) == 63
    fingerprints = {c.fingerprint() for c in all63}
    assert len(fingerprints) == 63
    element_sets = {code_element_set(c) for c in all63}
    assert len(element_sets) == 63


def test_enumeration_includes_reference_codes(all63):
    f2 = str(factor_xn_minus_1(3, R4).factors[1])
    fingerprints = {c.fingerprint() for c in all63}
    for texts in ([], ["1"], ["u"], ["2", "u"], [f2]):
        assert CyclicCode(3, R4, [parse_r_poly(t, R4) for t in texts]).fingerprint() in fingerprints
    # (2 f_1, u f_1, f_2) from the published table of all 63 codes
    f1p, f2p = factor_xn_minus_1(3, R4).factors
    mixed = CyclicCode(3, R4, [f1p * 2, f1p.mul_u(), f2p])
    assert mixed.fingerprint() in fingerprints


def test_enumeration_limit():
    few = list(enumerate_cyclic_codes(7, R4, limit=5))
    assert len(few) == 5


def test_enumeration_n7_fingerprint_sample():
    sample = list(enumerate_cyclic_codes(7, R4, limit=120))
    fingerprints = {c.fingerprint() for c in sample}
    assert len(fingerprints) == 120


def test_enumeration_n1_embeds_base_ring_ideals():
    from zqu.ring import enumerate_ideals, ideal_elements

    codes1 = list(enumerate_cyclic_codes(1, R4))
    assert len(codes1) == 7
    sets = set()
    for c in codes1:
        sets.add(frozenset((v[0], v[1]) for v in code_element_set(c)))
    ring_sets = {
        frozenset((e.a, e.b) for e in ideal_elements(d, R4))
        for d in enumerate_ideals(R4)
    }
    assert sets == ring_sets


def test_enumeration_budget_error_via_env(monkeypatch):
    import zqu.config as config

    monkeypatch.setattr(config, "DEFAULT_ENUM_BUDGET", 10)
    with pytest.raises(EnumerationBudgetError):
        list(enumerate_cyclic_codes(3, R4))


def test_rejects_bad_length():
    with pytest.raises(LengthNotCoprimeError):
        CyclicCode(6, R4, [])


# -- components ---------------------------------------------------------------------


def test_components_round_trip(all63):
    for c in all63:
        comps = components_of(c)
        again = code_from_components(3, R4, comps)
        assert again.fingerprint() == c.fingerprint()
        assert [x.descriptor for x in components_of(again)] == [x.descriptor for x in comps]


def test_components_examples():
    zero = CyclicCode(3, R4, [])
    assert all(d.is_zero_ideal(R4.s) for d in zero.components())
    whole = code(R4, 3, ["1"])
    assert all(d.is_unit_ideal() for d in whole.components())
    crt = build_crt(3, R4)
    u_fhat1 = CyclicCode(3, R4, [crt.cofactors[0].mul_u()])
    descs = u_fhat1.components()
    assert descs[0] == IdealDescriptor(KIND_U_P_POWER, 0)
    assert descs[1].is_zero_ideal(R4.s)


def test_components_require_ideal_mode():
    c = code(R4, 7, Z4_GENS, "module")
    with pytest.raises(PreconditionError):
        c.components()


# -- canonical generators --------------------------------------------------------------


def test_canonical_free_code():
    c = code(R8, 15, [Z8_GEN])
    can = c.canonical()
    assert format_zq_poly(can.f0) == Z8_GEN
    assert format_zq_poly(can.g1) == Z8_GEN
    assert can.f1.is_zero()
    assert can.hypotheses_ok


def test_canonical_u_code():
    can = code(R4, 3, ["u"]).canonical()
    assert format_zq_poly(can.f0) == "x^3+3"  # x^3 - 1 in least residues
    assert can.g1.degree == 0 and format_zq_poly(can.g1) == "1"
    assert can.f1.is_zero()
    assert can.k0 == 3 and can.k1 == 0


def test_canonical_zero_code():
    can = CyclicCode(3, R4, []).canonical()
    assert format_zq_poly(can.f0) == "x^3+3"
    assert format_zq_poly(can.g1) == "x^3+3"
    assert can.f1.is_zero()


def test_canonical_z4_length7_ideal():
    c = code(R4, 7, Z4_GENS)
    can = c.canonical()
    assert format_zq_poly(can.f0) == "x^3+3*x^2+2*x+3"
    assert format_zq_poly(can.g1) == "1"
    u = parse_r_poly("u", R4)
    assert c.contains(u)


def test_canonical_invariants(all63):
    n = 3
    for c in all63:
        can = c.canonical()
        assert can.f0.is_monic() and can.g1.is_monic()
        assert can.f1.is_zero() or can.f1.degree < can.g1.degree
        assert can.k0 >= can.k1
        # u*f0 lies in (u*g1)
        u_f0 = RPoly.from_zq(can.f0).mul_u()
        g1_code = CyclicCode(n, R4, [RPoly.from_zq(can.g1).mul_u()])
        assert g1_code.contains(u_f0)


def test_canonical_requires_ideal_mode():
    with pytest.raises(PreconditionError):
        code(R4, 7, Z4_GENS, "module").canonical()


# -- cardinality -------------------------------------------------------------------


def test_cardinality_examples():
    base, exp = code(R8, 15, [Z8_GEN]).cardinality()
    assert base**exp == 8**10 == 64**5
    assert CyclicCode(3, R4, []).cardinality() == (2, 0)
    assert code(R4, 7, Z4_GENS, "module").cardinality() == (2, 20)
    assert code(R4, 7, Z4_GENS, "ideal").cardinality() == (2, 22)


def test_cardinality_matches_element_sets_and_components(all63):
    from zqu.codes import _component_ctx
    from zqu.galois import gr_ideal_span

    crt = build_crt(3, R4)
    for c in all63:
        base, exp = c.cardinality()
        assert base**exp == len(code_element_set(c))
        total = 1
        for desc, f in zip(c.components(), crt.factorization.factors):
            total *= gr_ideal_span(desc, _component_ctx(f)).size()
        assert base**exp == total


def test_theorem_style_count_only_under_hypotheses(all63):
    matching = 0
    for c in all63:
        can = c.canonical()
        predicted = can.predicted_size_exponent(3, R4.s)
        base, exp = c.cardinality()
        if can.hypotheses_ok:
            assert exp == predicted
            matching += 1
    assert matching == 9  # 3 divisor-type component choices per factor


# -- minimum generating sets --------------------------------------------------------


def test_min_gen_set_free_code():
    c = code(R8, 15, [Z8_GEN])
    beta = c.minimum_generating_set()
    g = parse_r_poly(Z8_GEN, R8)
    assert beta == [g.shift(i).reduce_cyclic(15) for i in range(5)]


def test_min_gen_set_whole_ring():
    c = code(R4, 3, ["1"])
    beta = c.minimum_generating_set()
    assert beta == [RPoly.one(R4).shift(i) for i in range(3)]


def test_min_gen_set_spans(all63):
    from helpers import additive_closure

    for c in all63:
        can = c.canonical()
        if not can.hypotheses_ok:
            continue
        beta = c.minimum_generating_set()
        vecs = []
        for m in beta:
            vecs.append([m[i][0] for i in range(3)] + [m[i][1] for i in range(3)])
            vecs.append([0, 0, 0] + [m[i][0] for i in range(3)])
        span = additive_closure(vecs, 4) if vecs else frozenset({(0,) * 6})
        assert len(span) == len(code_element_set(c))


def test_min_gen_set_rejects_non_divisor_chain():
    c = code(R4, 3, ["2"])
    with pytest.raises(GeneratorHypothesesError):
        c.minimum_generating_set()


# -- freeness ----------------------------------------------------------------------


def test_is_free_examples():
    c = code(R8, 15, [Z8_GEN])
    g = c.is_free()
    assert g == parse_r_poly(Z8_GEN, R8)
    assert code(R4, 3, ["u"]).is_free() is None
    f2 = factor_xn_minus_1(3, R4).factors[1]
    quotient_code = CyclicCode(3, R4, [f2])
    assert quotient_code.is_free() == f2
    assert code(R4, 7, Z4_GENS, "module").is_free() is None
    assert code(R4, 7, Z4_GENS, "ideal").is_free() is None


def test_free_codes_have_independent_bases():
    from zqu.howell import ZqSpan

    for n, params in [(3, R4), (7, R4)]:
        crt = build_crt(n, params)
        for mask in range(1 << crt.t):
            g = RPoly.one(params)
            for l in range(crt.t):
                if mask & (1 << l):
                    g = g * crt.factorization.factors[l]
            d = g.degree
            rows = []
            for i in range(n - d):
                sh = g.shift(i).reduce_cyclic(n)
                rows.append([sh[k][0] for k in range(n)] + [sh[k][1] for k in range(n)])
                rows.append([0] * n + [sh[k][0] for k in range(n)])
            expected_exp = 2 * (n - d) * params.s
            if rows:
                span = ZqSpan.from_rows(rows, params.p, params.s, 2 * n)
                assert span.size_exponent() == expected_exp
            c = CyclicCode(n, params, [g])
            assert c.is_free() is not None
            assert c.cardinality() == (params.p, expected_exp)


# -- BCH ----------------------------------------------------------------------------


def test_bch_reference_chain():
    cert = code(R8, 15, [Z8_GEN]).bch_bound()
    assert cert.b == 1 and cert.delta == 7
    assert cert.root_exponents == (1, 2, 3, 4, 5, 6)


def test_bch_single_root():
    f1 = factor_xn_minus_1(3, R4).factors[0]  # x - 1
    cert = CyclicCode(3, R4, [f1]).bch_bound()
    assert cert.delta == 2 and cert.b == 0
    assert cert.root_exponents == (0,)


def test_bch_zero_code_capped():
    cert = CyclicCode(3, R4, []).bch_bound()
    assert cert.delta == 4  # n + 1
    assert cert.root_exponents == (0, 1, 2)


def test_bch_no_roots():
    cert = code(R4, 3, ["1"]).bch_bound()
    assert cert.delta == 1 and cert.root_exponents == ()


def test_bch_requires_free():
    with pytest.raises(PreconditionError):
        code(R4, 3, ["u"]).bch_bound()


# -- membership and shifts -------------------------------------------------------------


def test_contains_examples():
    zero = RPoly.zero(R4)
    for c in [code(R4, 3, ["u"]), code(R4, 7, Z4_GENS)]:
        assert c.contains(zero)
    ideal7 = code(R4, 7, Z4_GENS)
    assert ideal7.contains(parse_r_poly("u", R4))
    g = parse_r_poly(Z8_GEN, R8)
    c = CyclicCode(15, R8, [g])
    assert c.contains(g.shift(1).reduce_cyclic(15))
    assert not c.contains(RPoly.one(R8))


def test_cyclic_shift_closure(all63):
    for c in all63[:20]:
        members = list(code_element_set(c))[:40]
        for vec in members:
            a, b = vec[:3], vec[3:]
            shifted = list(rotate(list(a), 1)) + list(rotate(list(b), 1))
            assert c.contains(shifted)


# -- JSON descriptor -------------------------------------------------------------------


def test_descriptor_schema_round_trip(all63):
    for c in all63[:10] + [code(R4, 7, Z4_GENS, "module")]:
        desc = c.to_descriptor()
        text = json.dumps(desc, indent=2)
        assert json.loads(text) == desc
        assert set(desc) >= {
            "n", "p", "s", "closure_mode", "generators", "canonical",
            "components", "cardinality", "free", "bch", "warnings",
        }
