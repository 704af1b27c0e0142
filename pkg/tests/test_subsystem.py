"""Deriving subsystem codes and their parameter records."""

from fractions import Fraction

import numpy as np
import pytest

from subsystem_codes.codes import AdditiveCode, dual_symp, intersect
from subsystem_codes.gf import FieldSpec
from subsystem_codes.known import bacon_shor_code, five_qubit_code
from subsystem_codes.subsystem import (ParamRecord, PurityError, analysis_report,
                                       bracket_params, derive, is_pure_to)


def test_five_qubit():
    code = derive(five_qubit_code())
    assert code.params() == (5, 2, 1, 3)
    assert code.case == "a"            # K > 1, so D^perp_s strictly contains C
    assert code.is_pure
    assert code.swt_c == 4
    assert bracket_params(code).bracket() == "[[5,1,0,3]]_2"


def test_bacon_shor():
    code = derive(bacon_shor_code())
    assert code.params() == (9, 2, 16, 3)
    assert code.d_method == "exhaustive"
    assert code.purity == ("impure", 2)
    assert bracket_params(code).bracket() == "[[9,1,4,3]]_2"
    assert not is_pure_to(code, 3)
    assert is_pure_to(code, 2)


def test_dimension_formula_random():
    rng = np.random.default_rng(30)
    for p, m in [(2, 1), (3, 1), (2, 2)]:
        field = FieldSpec(p, m)
        for _ in range(20):
            n = int(rng.integers(1, 4))
            gens = rng.integers(0, field.q, size=(3, 2 * n))
            C = AdditiveCode(n, field, gens)
            if C.rank == 0:
                continue
            code = derive(C, distance_mode="skip")
            D = intersect(C, dual_symp(C))
            # K * R = q^n / |D|, K / R = q^n / |C|
            assert code.k_exp + code.r_exp == n * m - D.rank_p
            assert code.k_exp - code.r_exp == n * m - C.rank_p
            assert code.case == ("b" if code.k_exp == 0 else "a")


def test_case_b_distance_over_dual():
    # C = D^perp_s: a self-dual-like stabilizer with K = 1
    f = FieldSpec(2)
    C = AdditiveCode(1, f, [[1, 0], [0, 1]])
    code = derive(C)
    assert code.case == "b"
    assert code.K == 1
    assert code.d == 1


def test_k1_codes_are_pure():
    # every K = 1 code the deriver accepts must be pure (d is computed
    # over the whole dual of the radical in that case)
    f = FieldSpec(2)
    rng = np.random.default_rng(31)
    seen = 0
    while seen < 10:
        gens = rng.integers(0, 2, size=(4, 4))
        C = AdditiveCode(2, f, gens)
        if C.rank == 0:
            continue
        code = derive(C)
        if code.K == 1:
            assert code.is_pure
            seen += 1


def test_distance_modes():
    C = five_qubit_code()
    exact = derive(C, distance_mode="exact")
    wit = derive(C, distance_mode="witness")
    skip = derive(C, distance_mode="skip")
    assert exact.d == 3 and exact.d_method == "exhaustive"
    assert wit.d_method == "witness" and wit.d >= 3
    assert skip.d is None
    with pytest.raises(ValueError):
        derive(C, distance_mode="bogus")


def test_auto_downgrade(monkeypatch):
    C = bacon_shor_code()
    code = derive(C, threshold=8)       # force witness fallback
    assert code.d_method == "witness"
    assert code.d >= 3                  # upper bound can only overestimate
    from subsystem_codes.codes import EnumerationLimitError
    with pytest.raises(EnumerationLimitError):
        derive(C, distance_mode="exact", threshold=8)


def test_param_record_validation():
    with pytest.raises(ValueError):
        ParamRecord(n=3, q=2, k=3, r=1)      # K*R > q^n
    rec = ParamRecord(n=5, q=4, k=Fraction(1, 2), r=0, d=2)
    assert rec.bracket() == "[[5,1/2,0,2]]_4"
    assert rec.to_json()["k"] == "1/2"


def test_analysis_report_shape():
    rep = analysis_report(derive(five_qubit_code()))
    assert rep["bracket"] == "[[5,1,0,3]]_2"
    assert rep["purity"]["kind"] == "pure"
    assert rep["distance"]["method"] == "exhaustive"
    assert rep["params"]["K"] == 2
