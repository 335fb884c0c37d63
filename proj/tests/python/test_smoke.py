import pytest

import commat


def test_identity_3x3_uses_21_multiplications():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    product, report = commat.multiply(eye, eye)
    assert product == eye
    assert report["strategy"] == "paper-general"
    assert report["predicted"] == report["observed"] == 21


def test_row_times_3x3():
    product, report = commat.multiply([[1, 2, 3]], [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert product == [[30, 36, 42]]
    assert report["observed"] == 9


def test_big_integers_round_trip():
    big = 123456789012345678901234567890
    product, _ = commat.multiply([[big, -1]], [[big], [3]], strategy="naive")
    assert product == [[big * big - 3]]


def test_modular():
    product, report = commat.multiply([[1, 2], [3, 4]], [[1, 2], [3, 4]], modulus=101)
    assert product == [[7, 10], [15, 22]]
    assert report["strategy"] == "waksman-even"
    with pytest.raises(commat.ExactHalveUnavailable):
        commat.multiply([[1, 2], [3, 3]], [[1, 2], [3, 3]], strategy="waksman-even", modulus=4)


def test_counts_and_choice():
    assert commat.predict_count("paper-general", 3, 3, 3) == 21
    assert commat.predict_count("waksman-odd", 3, 3, 4) == 30
    assert commat.choose_strategy(3, 3, 3) == "paper-general"
    assert commat.choose_strategy(4, 4, 4, halving=False) == "winograd-even"
    assert commat.count_audit("paper-general", 4, 5, 6)["observed"] == 84
    rows = commat.count_table(3, 3, 4)
    assert {"l": 3, "n": 3, "m": 4, "paper": 28, "waksman_odd": 30, "naive": 36, "delta": 2} in rows
    assert "paper-general" in commat.strategies


def test_verification():
    assert commat.symbolic_verify("paper-general", 2, 5, 4)["pass"]
    r = commat.randomized_check("paper-general", 3, 3, 3, trials=200, seed=42)
    assert r["pass"] and r["equal"] == 200


def test_errors():
    with pytest.raises(commat.ShapeError):
        commat.multiply([[1, 2]], [[1, 2]])
    with pytest.raises(commat.ShapeError):
        commat.multiply([[1, 2], [3]], [[1], [2]])
    with pytest.raises(commat.UnsupportedShape):
        commat.multiply([[1, 2]], [[1], [2]], strategy="core3")
    with pytest.raises(ValueError):
        commat.multiply([[1]], [[1]], strategy="strassen")
    with pytest.raises(TypeError):
        commat.multiply([[1.5]], [[1]])
    assert issubclass(commat.ShapeError, commat.CommatError)
