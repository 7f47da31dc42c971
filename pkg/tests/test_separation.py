import pytest

from oracle import NaiveSpace
from hstar.ladder import Family, ladder
from hstar.separation import (
    Normality,
    hstar_normal_characterization,
    is_normal_variant,
    normality_failure,
)
from hstar.space import discrete, indiscrete, sierpinski


def test_example_space_is_normal_in_every_sense(E3):
    for v in Normality:
        assert is_normal_variant(E3, v)
    for form in (1, 2, 3):
        assert hstar_normal_characterization(E3, form)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_discrete_normal(n):
    assert all(is_normal_variant(discrete(n), v) for v in Normality)


def test_sierpinski_normal():
    # closed sets: ∅, {q}, X; every disjoint pair involves ∅
    assert is_normal_variant(sierpinski(), Normality.NORMAL)


def test_indiscrete_all_forms():
    for n in (1, 2, 3):
        for form in (1, 2, 3):
            assert hstar_normal_characterization(indiscrete(n), form)


def test_bad_form():
    with pytest.raises(ValueError):
        hstar_normal_characterization(discrete(1), 4)


def test_three_forms_agree(upto4):
    assert len(upto4) == 389
    for sp in upto4:
        forms = {hstar_normal_characterization(sp, k) for k in (1, 2, 3)}
        assert len(forms) == 1, sp


def test_hierarchy(upto4):
    for sp in upto4:
        n, g, h = (is_normal_variant(sp, v) for v in Normality)
        assert (not n or g) and (not g or h)


def test_matches_naive_oracle(upto4):
    for sp in upto4:
        ns = NaiveSpace(sp.n, sp.opens)
        assert is_normal_variant(sp, Normality.NORMAL) == ns.normal_wrt(ns.opens)
        assert is_normal_variant(sp, Normality.HSTAR_NORMAL) == ns.normal_wrt(ns.hstar_open())
        assert is_normal_variant(sp, Normality.G_NORMAL) == ns.normal_wrt(ns.comp(ns.g_closed()))


def test_failure_witness_is_unseparable(upto4):
    for sp in upto4:
        bad = normality_failure(sp, Normality.NORMAL)
        if bad is None:
            continue
        a, b = bad
        assert a & b == 0 and sp.is_closed(a) and sp.is_closed(b)
        fam = ladder(sp).members(Family.OPEN)
        assert not any(a & ~u == 0 and b & ~v == 0 and not u & v for u in fam for v in fam)
        break
    else:
        pytest.fail("no non-normal space found")
