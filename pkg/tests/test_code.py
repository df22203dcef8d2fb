import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import naive_loads
from linecodes.code import (
    AdditiveLineCode,
    CodeParameters,
    brute_force_min_weight,
    code_parameters,
    concatenated_binary_generator,
    griesmer_holds,
    griesmer_max_n,
    griesmer_sum,
    hyperplane_loads,
    hyperplane_profile,
    lambda_k,
    quaternary_generator_matrix,
    s_k,
    sum_code,
    weight_distribution,
)
from linecodes.constructions import all_lines_code, spread_code, three_cover_code, variant_code
from linecodes.errors import DegenerateCodeError, OracleRefusedError, UsageError
from linecodes.geometry import Line


def gf4_codeword_weights(gen: np.ndarray) -> list:
    """Weights of all 2^l F_2-combinations of the GF(4) rows (addition is XOR of bit pairs)."""
    l, n = gen.shape
    out = []
    for combo in range(1, 1 << l):
        word = np.zeros(n, dtype=np.uint8)
        for i in range(l):
            if (combo >> i) & 1:
                word ^= gen[i]
        out.append(int(np.count_nonzero(word)))
    return out


def test_hyperplane_profile_examples():
    fano = all_lines_code(3)
    for h in range(1, 8):
        prof = hyperplane_profile(fano, h)
        assert (prof.inside, prof.outside) == (1, 6)
    spread = spread_code(4)
    for h in range(1, 16):
        assert hyperplane_profile(spread, h).inside == 1
    single = AdditiveLineCode.from_lines(3, [Line(1, 2, 3)])
    prof = hyperplane_profile(single, 1)
    assert (prof.inside, prof.outside) == (0, 1)
    with pytest.raises(UsageError):
        hyperplane_profile(single, 0)


@pytest.mark.parametrize(
    "code, expected",
    [
        (three_cover_code(5), (31, 5, 24, 7)),
        (three_cover_code(7), (127, 7, 96, 31)),
        (all_lines_code(4), (35, 4, 28, 7)),
    ],
)
def test_code_parameters(code, expected):
    for strategy in ("scan", "dual", "auto"):
        p = code_parameters(code, strategy)
        assert (p.n, p.two_k, p.d, p.s) == expected


@pytest.mark.parametrize(
    "code",
    [all_lines_code(3), all_lines_code(4), spread_code(6), three_cover_code(5), variant_code(2), variant_code(3)],
)
def test_loads_match_naive(code):
    expected = naive_loads(code)
    for strategy in ("scan", "dual"):
        assert hyperplane_loads(code, strategy).tolist() == expected


def test_degenerate_code_raises():
    single = AdditiveLineCode.from_lines(3, [Line(1, 2, 3)])
    with pytest.raises(DegenerateCodeError):
        code_parameters(single)


def test_weight_distribution_examples():
    assert weight_distribution(all_lines_code(3)) == {6: 7}
    assert set(weight_distribution(variant_code(2))) == {8, 9}
    assert set(weight_distribution(variant_code(3))) == {32, 33}
    dist = weight_distribution(variant_code(2))
    assert sum(dist.values()) == 31


def test_quaternary_generator_single_line():
    code = AdditiveLineCode.from_lines(2, [Line(1, 2, 3)])
    gen = quaternary_generator_matrix(code)
    # symbol u + 2v encodes u + v*w: row 0 is 1, row 1 is w
    assert gen.tolist() == [[1], [2]]


@pytest.mark.parametrize(
    "code, shape, weight",
    [(all_lines_code(3), (3, 7), 6), (spread_code(4), (4, 5), 4)],
)
def test_quaternary_generator_weights(code, shape, weight):
    gen = quaternary_generator_matrix(code)
    assert gen.shape == shape
    assert set(gf4_codeword_weights(gen)) == {weight}


@pytest.mark.parametrize("code", [variant_code(2), three_cover_code(5), all_lines_code(4)])
def test_quaternary_codewords_match_outside_counts(code):
    gen = quaternary_generator_matrix(code)
    weights = gf4_codeword_weights(gen)
    outside = [code.n - x for x in naive_loads(code)[1:]]
    assert weights == outside


@pytest.mark.parametrize(
    "code, binary",
    [(spread_code(4), (15, 4, 8)), (all_lines_code(3), (21, 3, 12)), (three_cover_code(5), (93, 5, 48))],
)
def test_concatenated_parameters(code, binary):
    gen = concatenated_binary_generator(code)
    assert gen.shape == (binary[1], binary[0])
    assert brute_force_min_weight(gen) == binary[2]


def test_concatenation_doubles_every_weight():
    code = variant_code(2)
    qgen = quaternary_generator_matrix(code)
    bgen = concatenated_binary_generator(code).astype(np.int64)
    for combo in range(1, 1 << code.l):
        sel = np.array([(combo >> i) & 1 for i in range(code.l)])
        bword = (sel @ bgen) % 2
        qword = np.bitwise_xor.reduce(qgen[sel.astype(bool)], axis=0)
        assert int(bword.sum()) == 2 * int(np.count_nonzero(qword))


def test_brute_force_small_inputs():
    assert brute_force_min_weight(np.array([[0, 0, 0], [1, 1, 1]])) == 3
    assert brute_force_min_weight(np.array([[1, 1, 1]])) == 3
    assert brute_force_min_weight(np.array([[1, 1, 0, 0], [0, 1, 1, 0]])) == 2
    with pytest.raises(OracleRefusedError):
        brute_force_min_weight(np.eye(21, dtype=np.uint8))
    with pytest.raises(UsageError):
        brute_force_min_weight(np.zeros((2, 3), dtype=np.uint8))


def _griesmer_oracle(k, d):
    return sum(math.ceil(Fraction(d, 2**i)) for i in range(k))


def test_griesmer_examples():
    assert _griesmer_oracle(5, 48) == 93 == griesmer_sum(5, 48)
    assert griesmer_holds(93, 5, 48)
    assert _griesmer_oracle(5, 50) == 99
    assert not griesmer_holds(93, 5, 50)
    assert _griesmer_oracle(4, 8) == 15
    assert griesmer_holds(15, 4, 8)
    with pytest.raises(UsageError):
        griesmer_holds(0, 1, 1)


def _max_n_oracle(two_k, s):
    # upward scan well past the 7s ceiling, reference only
    ok = [n for n in range(s + 1, 10 * s + 10) if _griesmer_oracle(two_k, 2 * (n - s)) <= 3 * n]
    return max(ok) if ok else None


@pytest.mark.parametrize("two_k, s, expected", [(7, 31, 127), (5, 7, 31), (4, 1, 5)])
def test_griesmer_max_n_examples(two_k, s, expected):
    assert griesmer_max_n(two_k, s) == expected == _max_n_oracle(two_k, s)


@pytest.mark.parametrize("two_k", range(3, 9))
@pytest.mark.parametrize("s", [1, 2, 3, 5, 7, 12, 21, 31])
def test_griesmer_max_n_against_scan(two_k, s):
    assert griesmer_max_n(two_k, s) == _max_n_oracle(two_k, s)


def test_lambda_examples():
    assert lambda_k(3) == Fraction(7)
    assert lambda_k(4) == Fraction(5)
    assert lambda_k(5) == Fraction(31, 7)
    assert lambda_k(6) == Fraction(21, 5)
    assert lambda_k(7) == Fraction(127, 31)
    assert lambda_k(8) == Fraction(85, 21)


@pytest.mark.parametrize("two_k", range(3, 25))
def test_lambda_closed_forms(two_k):
    lam = lambda_k(two_k)
    assert lam == 4 + Fraction(3, 2 ** (two_k - 2) - 1)
    raw_num, raw_den = 2**two_k - 1, 2 ** (two_k - 2) - 1
    assert math.gcd(raw_num, raw_den) == (3 if two_k % 2 == 0 else 1)
    if two_k % 2 == 0:
        assert lam.denominator == raw_den // 3
    assert (s_k(two_k) * lam).denominator == 1
    assert s_k(two_k) == lam.denominator


def test_s_k_examples():
    assert s_k(5) == 7
    assert s_k(6) == 5
    assert s_k(7) == 31
    assert s_k(3) == 1 and s_k(4) == 1 and s_k(8) == 21
    with pytest.raises(UsageError):
        s_k(2)


def test_sum_code():
    c = three_cover_code(5)
    doubled = sum_code(c, c)
    p = code_parameters(doubled)
    assert (p.n, p.two_k, p.d, p.s) == (62, 5, 48, 14)
    sp = spread_code(4)
    p = code_parameters(sum_code(sp, sp))
    assert (p.n, p.d) == (10, 8)
    v = variant_code(2)
    assert sum_code(c, v).n == c.n + v.n
    assert code_parameters(sum_code(c, v)).d >= 24 + 8
    with pytest.raises(UsageError):
        sum_code(c, sp)


def test_code_validation():
    with pytest.raises(UsageError):
        AdditiveLineCode(3, ())
    with pytest.raises(UsageError):
        AdditiveLineCode(3, ((Line(1, 2, 3), 0),))
    with pytest.raises(UsageError):
        AdditiveLineCode(2, ((Line(1, 4, 5), 1),))
    with pytest.raises(UsageError):
        CodeParameters(5, 4, 4, 2)


def test_from_lines_accumulates():
    code = AdditiveLineCode.from_lines(3, [Line(1, 2, 3), Line(1, 2, 3), Line(1, 4, 5)])
    assert code.n == 3
    assert dict(code.lines) == {Line(1, 2, 3): 2, Line(1, 4, 5): 1}


def test_parameters_str():
    assert str(code_parameters(three_cover_code(5))) == "[31,2.5,24]_4"
    assert str(code_parameters(spread_code(4))) == "[5,2,4]_4"
