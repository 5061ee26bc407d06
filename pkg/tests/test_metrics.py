import pytest
from hypothesis import given, settings, strategies as st

from zqu.codes import CyclicCode, build_crt
from zqu.errors import DistanceUndefinedError, UnsupportedMetricError
from zqu.metrics import (
    WordR,
    gray_hamming_weight,
    gray_map,
    hamming_weight,
    lee_weight,
    lee_weight_z4,
    min_distance,
    phi_map,
    weight_of,
)
from zqu.poly import RPoly, parse_r_poly
from zqu.ring import make_ring

from helpers import brute_min_weight, code_element_set, hamming_pairs, lee_pairs

R4 = make_ring(2, 2)
R8 = make_ring(2, 3)

Z8_GEN = "x^10+6*x^9+x^8+6*x^7+3*x^5+7*x^4+4*x^3+7*x^2+5*x+1"
Z4_GENS = ["3*x^3+x^2+2*x+1", "0+u*(x+3)"]


def code(params, n, texts, mode="ideal"):
    return CyclicCode(n, params, [parse_r_poly(t, params) for t in texts], mode)


# -- weights --------------------------------------------------------------------


def test_hamming_weight_examples():
    assert hamming_weight(WordR(R4, ((0, 0),) * 5)) == 0
    g = parse_r_poly(Z8_GEN, R8)
    assert hamming_weight(WordR.from_rpoly(g * 4, 15)) == 7
    assert hamming_weight(WordR(R4, ((1, 0),) * 6)) == 6


def test_phi_examples():
    assert phi_map(WordR(R4, ((2, 3),))) == (3, 1)
    assert phi_map(WordR(R4, ((0, 0),))) == (0, 0)
    with pytest.raises(UnsupportedMetricError):
        phi_map(WordR(R8, ((1, 0),)))


def test_phi_preserves_lee_weight_per_symbol():
    for a in range(4):
        for b in range(4):
            w = WordR(R4, ((a, b),))
            assert lee_weight_z4(phi_map(w)) == lee_weight(w)


def test_phi_is_additive_per_symbol():
    for a1 in range(4):
        for b1 in range(4):
            for a2 in range(4):
                for b2 in range(4):
                    x = WordR(R4, ((a1, b1),))
                    y = WordR(R4, ((a2, b2),))
                    sa, sb = (a1 + a2) % 4, (b1 + b2) % 4
                    summed = phi_map(WordR(R4, ((sa, sb),)))
                    pointwise = tuple(
                        (u + v) % 4 for u, v in zip(phi_map(x), phi_map(y))
                    )
                    assert summed == pointwise


def test_lee_and_gray_examples():
    assert lee_weight_z4((2,)) == 2 and gray_map((2,)) == (1, 1)
    assert lee_weight_z4((1, 3)) == 2 and gray_map((1, 3)) == (0, 1, 1, 0)
    assert gray_map((0, 1, 2, 3)) == (0, 0, 0, 1, 1, 1, 1, 0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=14))
def test_gray_hamming_equals_lee(v):
    assert sum(gray_map(v)) == lee_weight_z4(v)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=10))
def test_word_weight_functions_agree(pairs):
    w = WordR(R4, tuple(pairs))
    assert weight_of(w, "hamming") == hamming_pairs(pairs)
    assert weight_of(w, "lee") == lee_pairs(pairs)
    assert weight_of(w, "gray-hamming") == lee_pairs(pairs)
    assert gray_hamming_weight(w) == lee_weight(w)


# -- minimum distance -----------------------------------------------------------


def test_reference_z4_length7_code():
    module = code(R4, 7, Z4_GENS, "module")
    lee = min_distance(module, "lee")
    assert lee.value == 4 and lee.exhaustive
    assert lee.words_scanned == 2**20 - 1
    assert weight_of(lee.witness, "lee") == 4
    assert module.contains(lee.witness.to_rpoly())
    gray = min_distance(module, "gray-hamming")
    assert gray.value == 4


def test_witness_only_upper_bound_brackets_reference_distance():
    c = code(R8, 15, [Z8_GEN])
    cert = c.bch_bound()
    w = hamming_weight(WordR.from_rpoly(parse_r_poly(Z8_GEN, R8) * 4, 15))
    assert cert.delta == 7 and w == 7  # lower and upper bound meet


def test_budgeted_scan_is_upper_bound():
    c = code(R8, 15, [Z8_GEN])
    report = min_distance(c, "hamming", budget=1 << 12)
    assert not report.exhaustive
    assert report.words_scanned == 1 << 12
    assert report.value >= 7
    assert weight_of(report.witness, "hamming") == report.value
    assert c.contains(report.witness.to_rpoly())


@pytest.mark.parametrize("mode", ["ideal", "module"])
@pytest.mark.parametrize(
    "texts,n",
    [
        (["u"], 3),
        (["x^2+x+1"], 3),
        (["2", "u"], 3),
        (["x+3+u*(2)"], 3),
        (["2*x+2+u*(x)"], 5),
    ],
)
def test_min_distance_matches_brute_force(texts, n, mode):
    c = code(R4, n, texts, mode)
    report = min_distance(c, "hamming")
    assert report.exhaustive
    assert report.value == brute_min_weight(c, hamming_pairs)
    assert report.words_scanned == len(code_element_set(c)) - 1
    lee = min_distance(c, "lee")
    assert lee.value == brute_min_weight(c, lee_pairs)


def test_min_distance_shift_invariance():
    base = code(R4, 7, Z4_GENS, "module")
    shifted_gens = [parse_r_poly(t, R4).shift(2).reduce_cyclic(7) for t in Z4_GENS]
    shifted = CyclicCode(7, R4, shifted_gens, "module")
    for metric in ("hamming", "lee"):
        assert min_distance(base, metric).value == min_distance(shifted, metric).value


def test_zero_code_distance_undefined():
    with pytest.raises(DistanceUndefinedError):
        min_distance(CyclicCode(3, R4, []), "hamming")


def test_lee_requires_q4():
    c = code(R8, 15, [Z8_GEN])
    with pytest.raises(UnsupportedMetricError):
        min_distance(c, "lee")
    with pytest.raises(UnsupportedMetricError):
        min_distance(c, "gray-hamming")
    with pytest.raises(UnsupportedMetricError):
        min_distance(c, "euclidean")


def test_threads_deterministic():
    c = code(R4, 7, Z4_GENS, "module")
    single = min_distance(c, "lee", threads=1)
    multi = min_distance(c, "lee", threads=4)
    assert (single.value, single.witness) == (multi.value, multi.witness)
    assert single.words_scanned == multi.words_scanned


def test_bch_delta_bounded_by_exact_distance():
    for n in (3, 7):
        crt = build_crt(n, R4)
        for mask in range(1 << crt.t):
            g = RPoly.one(R4)
            for l in range(crt.t):
                if mask & (1 << l):
                    g = g * crt.factorization.factors[l]
            if g.degree == n:
                continue  # zero code
            c = CyclicCode(n, R4, [g])
            if c.span().size() - 1 > 1 << 22:
                continue
            cert = c.bch_bound()
            exact = min_distance(c, "hamming")
            assert exact.exhaustive
            assert cert.delta <= exact.value


def test_report_serialization():
    c = code(R4, 3, ["u"])
    report = min_distance(c, "hamming")
    data = report.to_json()
    assert data["metric"] == "hamming"
    assert data["value"] == report.value
    assert isinstance(data["witness"], str)
