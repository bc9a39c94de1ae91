from fractions import Fraction

import pytest

import cycdenum


def test_golden_waves():
    w = cycdenum.waves([1, 3, 6])
    assert sorted(w) == [1, 2, 3, 6]
    assert w[1] == [[Fraction(127, 216), Fraction(5, 18), Fraction(1, 36)]]
    assert w[2] == [[Fraction(-1, 24)], [Fraction(1, 24)]]
    assert w[3][2] == [Fraction(31, 108), Fraction(1, 18)]


def test_denumerant_matches_dp():
    counts = cycdenum.dp_count([2, 5, 7], 80)
    for t in range(81):
        assert cycdenum.denumerant([2, 5, 7], t) == counts[t]
    assert cycdenum.denumerant([1, 3, 6], 1789682) == 88971554961


def test_float_backend():
    fw = cycdenum.float_waves([1, 3, 6])
    comps, imag = fw[2]
    assert comps[0][0] == pytest.approx(-1 / 24, abs=1e-12)
    assert imag < 1e-12
    assert cycdenum.float_denumerant([1, 3, 6], 14) == pytest.approx(9.0, abs=1e-9)


def test_cyclotomic_and_json():
    assert cycdenum.cyclotomic_poly(6) == [1, -1, 1]
    doc = cycdenum.waves_json([1, 2])
    assert doc["backend"] == "exact"
    assert doc["combined"]["period"] == 2


@pytest.mark.parametrize("bad", [[2, 4], [1, 1], [0, 1], []])
def test_invalid_sequences(bad):
    with pytest.raises(ValueError):
        cycdenum.waves(bad)


def test_selftest():
    passed, checks, text = cycdenum.selftest(random_sequences=2)
    assert passed
    assert checks > 0
    assert "checks executed" in text
