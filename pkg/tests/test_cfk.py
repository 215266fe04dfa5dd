import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotfloer import cfk, models
from knotfloer.cfk import Complex, Generator, direct_sum, dual, tensor, validate
from knotfloer.errors import InvalidComplexError
from knotfloer.laurent import LaurentPoly, compose_power, mul
from oracles import dsquared_zero, filtered_graded_reduced, homology_dim, mutated


def test_unknot_and_trefoil_validate(trefoil):
    assert validate(models.unknot()).ok
    assert validate(trefoil).ok


def test_reversed_arrow_is_not_filtered(trefoil):
    entry = trefoil.entries()[0]
    bad = mutated(trefoil, entry, "reverse")
    assert "FILTERED" in validate(bad).kinds()


def test_reduced_and_graded_violations():
    gens = [Generator("a", 0, 0, 1), Generator("b", 0, 0, 0)]
    assert validate(Complex(gens, {"a": [("b", 0)]})).kinds() == {"REDUCED"}
    gens = [Generator("a", 1, 0, 1), Generator("b", 0, 0, -1)]
    assert validate(Complex(gens, {"a": [("b", 0)]})).kinds() == {"GRADED"}


def test_dsquared_violation():
    gens = [Generator("a", 2, 2, 1), Generator("b", 1, 2, 0), Generator("c", 1, 1, -1)]
    report = validate(Complex(gens, {"a": [("b", 0)], "b": [("c", 0)]}))
    assert report.kinds() == {"D_SQUARED"}


def test_unknown_and_duplicate_ids():
    with pytest.raises(InvalidComplexError):
        Complex([Generator("a", 0, 0, 0)], {"a": [("zz", 0)]})
    with pytest.raises(InvalidComplexError):
        Complex([Generator("a", 0, 0, 0), Generator("a", 1, 1, 1)], {})


def test_repeated_entries_cancel():
    gens = [Generator("a", 1, 0, 1), Generator("b", 0, 0, 0)]
    c = Complex(gens, {"a": [("b", 0), ("b", 0)]})
    assert c.d("a") == frozenset()


def test_dual_trefoil(trefoil):
    d = dual(trefoil)
    assert sorted(g.maslov for g in d.generators) == [-1, 0, 0]
    assert validate(d).ok
    assert dual(d) == trefoil


def test_graded_slice_examples():
    u = models.unknot()
    assert cfk.graded_slice(u, 0) == [("g", 0)]
    assert cfk.graded_slice(u, 1) == []
    c2 = models.cable_model(2)
    even = [g for g in c2.generators if g.maslov % 2 == 0]
    sl = cfk.graded_slice(c2, 0)
    assert len(sl) == len(even) == 4
    assert {g for g, _ in sl} == {"y_2", "y'_1", "y'_2", "y_1"}


def test_homology_examples():
    assert cfk.homology_dims(models.unknot()) == {0: 1, 1: 0}
    assert cfk.homology_dims(models.box()) == {0: 0, 1: 0}
    for n in range(2, 6):
        for bits in itertools.product((0, 1), repeat=n - 1):
            assert cfk.homology_dims(models.cable_model(n, bits)) == {0: 1, 1: 0}


def test_knotlike_examples(trefoil):
    assert cfk.is_knotlike(trefoil)
    assert cfk.is_knotlike(models.torus_staircase(3, 4))
    assert not cfk.is_knotlike(models.box())
    assert cfk.is_knotlike(direct_sum(trefoil, models.box()))


def test_hat_table_examples(trefoil):
    assert cfk.hat_table(trefoil) == {(1, 0): 1, (0, -1): 1, (-1, -2): 1}
    t2 = cfk.hat_table(models.cable_model(2))
    assert len(t2) == 7 and sum(t2.values()) == 7
    assert t2[(-1, -2)] == 1


def test_delta_examples(trefoil):
    t = LaurentPoly.monomial(1)
    assert cfk.delta_from_complex(trefoil) == t - 1 + LaurentPoly.monomial(-1)
    assert cfk.delta_from_complex(models.unknot()) == LaurentPoly.const(1)
    for n in range(2, 7):
        assert cfk.delta_from_complex(models.cable_model(n)) == LaurentPoly({n: 1, 0: -1, -n: 1})


def test_delta_rejects_non_knot():
    with pytest.raises(InvalidComplexError):
        cfk.delta_from_complex(Complex([Generator("a", 0, 0, 0), Generator("b", 0, 1, 0)], {}))


def test_json_roundtrip_is_canonical(zoo):
    for c in zoo[:12]:
        text = cfk.to_json(c)
        back = cfk.from_json(text)
        assert back == c
        assert cfk.to_json(back) == text
        data = json.loads(text)
        assert set(data) == {"name", "generators", "differential"}


def test_malformed_json():
    with pytest.raises(InvalidComplexError):
        cfk.from_json("{")
    with pytest.raises(InvalidComplexError):
        cfk.from_json('{"generators": [{"id": "a"}]}')


def test_zoo_valid_and_dsquared_dense(zoo):
    for c in zoo:
        assert validate(c).ok, c.name
        assert dsquared_zero(c)
        assert filtered_graded_reduced(c)


def test_constructions_preserve_validity_and_homology(zoo):
    knotlike = [c for c in zoo if cfk.is_knotlike(c)]
    for a, b in itertools.combinations(knotlike[:10], 2):
        assert cfk.homology_dims(tensor(a, b)) == {0: 1, 1: 0}
        assert validate(direct_sum(a, b)).ok


def test_homology_matches_dense_oracle(zoo):
    for c in zoo:
        dims = cfk.homology_dims(c)
        assert dims == {0: homology_dim(c, 0), 1: homology_dim(c, 1)}


def test_hat_total_rank_counts_generators(zoo):
    for c in zoo:
        assert sum(cfk.hat_table(c).values()) == len(c)


def test_delta_tensor_and_dual(knot_zoo):
    for a, b in itertools.combinations(knot_zoo[:8], 2):
        assert cfk.delta_from_complex(tensor(a, b)) == mul(cfk.delta_from_complex(a), cfk.delta_from_complex(b))
    for c in knot_zoo:
        assert cfk.delta_from_complex(dual(c)) == cfk.delta_from_complex(c)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(range(9)), st.sampled_from(range(9)), st.integers(-2, 2), st.integers(-2, 2))
def test_tensor_with_shifted_box_stays_valid(i, j, si, sj):
    from conftest import base_zoo

    base = base_zoo()
    c = tensor(base[i], direct_sum(base[j], models.box(si, sj, 1)))
    assert validate(c).ok
    assert dsquared_zero(c)
