import itertools

import pytest
from hypothesis import given, strategies as st

from oracle import NaiveSpace, bits, frozen
from hstar.atlas import enumerate_maps, spaces_upto
from hstar.maps import (
    CHARACTERIZATIONS,
    DomainMismatch,
    MapProperty,
    PreconditionUnmet,
    SpaceMap,
    almost_hstar_irresolute_nbhd,
    characterization_check,
    check_map_property,
    compose,
    ghstar_open_characterization,
)
from hstar.space import sierpinski, validate_topology

MP = MapProperty
SMALL = list(spaces_upto(2)) + [validate_topology(3, [0, 1, 3, 7]), validate_topology(3, [0, 4, 7])]


def test_identity_properties(upto3):
    for sp in upto3:
        m = SpaceMap.identity(sp)
        for p in (MP.CONTINUOUS, MP.HSTAR_IRRESOLUTE, MP.STRONGLY_HSTAR_OPEN,
                  MP.STRONGLY_HSTAR_CLOSED):
            assert check_map_property(m, p)
        assert characterization_check(m, "L2.3") == (True, True)


def test_quasi_hstar_closed_identity_when_classes_coincide(E1):
    # images of H*-closed sets are the sets themselves; closed only if H*-closed = closed
    m = SpaceMap.identity(E1)
    assert check_map_property(m, MP.QUASI_HSTAR_CLOSED) is False
    sp = validate_topology(2, [0, 1, 2, 3])
    assert check_map_property(SpaceMap.identity(sp), MP.QUASI_HSTAR_CLOSED)


def test_constant_maps_continuous(upto3):
    for X in upto3[:10]:
        for Y in upto3[-10:]:
            for c in range(Y.n):
                assert check_map_property(SpaceMap.constant(X, Y, c), MP.CONTINUOUS)


def test_collapse_onto_sierpinski(E1):
    phi = SpaceMap(E1, sierpinski(), (0, 0, 1, 1))
    assert check_map_property(phi, MP.CONTINUOUS)
    assert phi.preimage(0b01) == 0b0011


def test_swap_not_continuous():
    assert not check_map_property(SpaceMap(sierpinski(), sierpinski(), (1, 0)), MP.CONTINUOUS)


def test_compose_examples(E1):
    s = sierpinski()
    ident = SpaceMap.identity(E1)
    assert compose(ident, ident) == ident
    f = SpaceMap(E1, s, (0, 0, 1, 1))
    assert compose(f, SpaceMap.constant(s, s, 1)) == SpaceMap.constant(E1, s, 1)
    swap = SpaceMap(s, s, (1, 0))
    assert compose(f, swap).table == (1, 1, 0, 0)


def test_compose_domain_mismatch(E1):
    f = SpaceMap(E1, sierpinski(), (0, 0, 1, 1))
    with pytest.raises(DomainMismatch):
        compose(f, SpaceMap.identity(E1))


def test_bad_tables(E1):
    with pytest.raises(ValueError):
        SpaceMap(E1, sierpinski(), (0, 1))
    with pytest.raises(ValueError):
        SpaceMap(E1, sierpinski(), (0, 1, 2, 0))


def test_t27_needs_surjection(E1):
    with pytest.raises(PreconditionUnmet):
        characterization_check(SpaceMap.constant(E1, sierpinski(), 0), "T2.7")


def test_unknown_characterization(E1):
    with pytest.raises(ValueError):
        characterization_check(SpaceMap.identity(E1), "T9.9")


def test_ghstar_open_characterization_edges(upto3):
    for sp in upto3:
        assert ghstar_open_characterization(sp, sp.full) == (True, True)
        assert ghstar_open_characterization(sp, 0) == (True, True)


def test_ghstar_open_characterization_exhaustive(upto4):
    for sp in upto4:
        for a in range(1 << sp.n):
            lhs, rhs = ghstar_open_characterization(sp, a)
            assert lhs == rhs


@pytest.mark.parametrize("which", ["T2.2", "L3.4"])
def test_characterizations_agree_up_to_three_points(upto3, which):
    for X in upto3:
        for Y in upto3:
            for m in enumerate_maps(X, Y):
                lhs, rhs = characterization_check(m, which)
                assert lhs == rhs, m


def test_all_characterizations_return_pairs(E1):
    m = SpaceMap(E1, sierpinski(), (0, 0, 1, 1))
    for which in CHARACTERIZATIONS:
        out = characterization_check(m, which)
        assert len(out) == 2 and all(isinstance(v, bool) for v in out)


# -- independent oracle for the map classes ----------------------------------

def _naive_props(m):
    X, Y = NaiveSpace(m.domain.n, m.domain.opens), NaiveSpace(m.codomain.n, m.codomain.opens)
    t = m.table

    def img(a):
        return frozenset(t[i] for i in a)

    def pre(b):
        return frozenset(i for i in X.X if t[i] in b)

    def fwd(src, dst):
        return all(img(a) in dst for a in src)

    def bwd(src, dst):
        return all(pre(b) in dst for b in src)

    out = {
        MP.CONTINUOUS: bwd(Y.opens, X.opens),
        MP.CLOSED_MAP: fwd(X.closeds, Y.closeds),
        MP.OPEN_MAP: fwd(X.opens, Y.opens),
        MP.R_MAP: bwd(Y.regular_open(), X.regular_open()),
        MP.COMPLETELY_CONTINUOUS: bwd(Y.opens, X.regular_open()),
        MP.RC_CONTINUOUS: bwd(Y.regular_closed(), X.regular_closed()),
        MP.STRONGLY_HSTAR_OPEN: fwd(X.hstar_open(), Y.hstar_open()),
        MP.STRONGLY_HSTAR_CLOSED: fwd(X.hstar_closed(), Y.hstar_closed()),
        MP.HSTAR_CLOSED_MAP: fwd(X.closeds, Y.hstar_closed()),
        MP.HSTARG_CLOSED_MAP: fwd(X.closeds, Y.hstarg_closed()),
        MP.GHSTAR_CLOSED_MAP: fwd(X.closeds, Y.ghstar_closed()),
        MP.QUASI_HSTAR_CLOSED: fwd(X.hstar_closed(), Y.closeds),
        MP.HSTAR_HSTARG_CLOSED: fwd(X.hstar_closed(), Y.hstarg_closed()),
        MP.HSTAR_GHSTAR_CLOSED: fwd(X.hstar_closed(), Y.ghstar_closed()),
        MP.ALMOST_GHSTAR_CLOSED: fwd(X.regular_closed(), Y.ghstar_closed()),
        MP.ALMOST_HSTARG_CLOSED: fwd(X.regular_closed(), Y.hstarg_closed()),
        MP.HSTAR_GHSTAR_CONTINUOUS: bwd(Y.hstar_closed(), X.ghstar_closed()),
        MP.HSTAR_IRRESOLUTE: bwd(Y.hstar_open(), X.hstar_open()),
        MP.ALMOST_HSTAR_IRRESOLUTE: all(
            pre(s) <= X.hstar_int(X.hstar_cl(pre(s))) for s in Y.hstar_open()
        ),
        MP.SURJECTIVE: set(t) == set(range(m.codomain.n)),
        MP.INJECTIVE: len(set(t)) == len(t),
    }
    out[MP.BIJECTIVE] = out[MP.SURJECTIVE] and out[MP.INJECTIVE]
    return out


def test_every_property_matches_oracle():
    for X, Y in itertools.product(SMALL, repeat=2):
        for m in enumerate_maps(X, Y):
            want = _naive_props(m)
            assert set(want) == set(MapProperty)
            for p, v in want.items():
                assert check_map_property(m, p) == v, (m, p)


def test_neighbourhood_form_matches_oracle():
    for X, Y in itertools.product(SMALL, repeat=2):
        NX, NY = NaiveSpace(X.n, X.opens), NaiveSpace(Y.n, Y.opens)
        for m in enumerate_maps(X, Y):
            t = m.table
            ok = True
            for x in NX.X:
                for v in NY.subsets:
                    if t[x] not in NY.hstar_int(v):
                        continue
                    pv = frozenset(i for i in NX.X if t[i] in v)
                    if x not in NX.hstar_int(NX.hstar_cl(pv)):
                        ok = False
            assert almost_hstar_irresolute_nbhd(m) == ok


@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.data())
def test_image_preimage_galois(X, Y, data):
    table = tuple(data.draw(st.integers(0, Y.n - 1)) for _ in range(X.n))
    m = SpaceMap(X, Y, table)
    a = data.draw(st.integers(0, X.full))
    b = data.draw(st.integers(0, Y.full))
    # image(A) ⊆ B  iff  A ⊆ preimage(B)
    assert (m.image(a) & ~b == 0) == (a & ~m.preimage(b) == 0)
    assert m.preimage(Y.full ^ b) == X.full ^ m.preimage(b)
    assert bits(frozenset(table[i] for i in frozen(X.n, a))) == m.image(a)
