import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from serreweights.char_arith import LocalPlace, make_character
from serreweights.cyclotomic import CyclotomicInt
from serreweights.errors import DecompositionError, UnsupportedPlaceError, ValidationError
from serreweights.finite_field import field
from serreweights.weight_core import (
    WeightMultiset,
    all_weights,
    brauer_character,
    canonicalize_weight,
    conjugacy_classes,
    decompose_brauer,
    describe_generator,
    induced_ps_character,
    involution_prime,
    jh_principal_series,
    jh_sym,
    multiset_from_json,
    sym_power_character,
)

P3, P5 = LocalPlace(3), LocalPlace(5)
P25 = LocalPlace(5, 1, 2)


def wt(place, r, w):
    return canonicalize_weight(place, r if isinstance(r, tuple) else (r,), w)


def test_canonicalize_examples():
    assert wt(P25, (1, 1), 24).w == (0, 0)
    assert wt(P25, (0, 0), 4).w == (4, 0)
    with pytest.raises(ValidationError):
        wt(P5, 6, 0)


def test_weight_counts_and_labels():
    assert len(all_weights(P5)) == 20
    assert len(all_weights(P25)) == 25 * 24
    assert wt(P5, 2, 2).label() == "det^2*Sym^2"
    assert wt(P5, 0, 1).dim == 1


def test_involution_examples():
    assert involution_prime(wt(P5, 1, 0)) == wt(P5, 3, 1)
    assert involution_prime(wt(P5, 4, 2)) == wt(P5, 0, 2)
    assert all(involution_prime(involution_prime(s)) == s for s in all_weights(P5))
    with pytest.raises(UnsupportedPlaceError):
        involution_prime(wt(P25, (0, 0), 0))


def test_jh_sym_examples():
    assert jh_sym(5, 6) == WeightMultiset([wt(P5, 0, 1), wt(P5, 2, 0), wt(P5, 2, 2)])
    assert jh_sym(5, 3) == WeightMultiset([wt(P5, 3, 0)])
    assert jh_sym(3, 3) == WeightMultiset([wt(P3, 1, 0), wt(P3, 1, 1)])
    with pytest.raises(ValidationError):
        jh_sym(5, -1)


def test_finite_field_generator_is_primitive():
    F = field(3, 2)
    assert F.modulus_coefficients() == [2, 1, 1]
    powers = {F.power(F.generator, k) for k in range(8)}
    assert len(powers) == 8
    assert describe_generator(3, 1)["generator"] == "x"


def test_cyclotomic_arithmetic():
    z = CyclotomicInt.zeta(8)
    assert (z * z * z * z) == CyclotomicInt.integer(8, -1)
    assert (z + z) - z == z
    assert CyclotomicInt.from_powers(3, {0: 1, 1: 1, 2: 1}).is_zero()


def test_class_count():
    for p, f in [(3, 1), (5, 1), (3, 2)]:
        q = p**f
        assert len(conjugacy_classes(p, f)) == q * q - q


def test_brauer_examples():
    s1 = brauer_character(wt(P3, 1, 0))
    assert int(s1.at("z", 1)) == 2
    assert int(s1.at("s", 1, 2)) == 0
    assert int(brauer_character(wt(P3, 0, 1)).at("s", 1, 2)) == -1


def test_induced_ps_examples():
    one = make_character(P3, 1, 0)
    chi = make_character(P3, 1, 1)
    c = induced_ps_character((one, one))
    assert int(c.at("z", 1)) == 4 and int(c.at("z", 2)) == 4
    assert int(c.at("s", 1, 2)) == 2
    assert all(c.at(k.kind, *k.elements).is_zero() for k in c.classes if k.kind == "e")
    assert int(induced_ps_character((chi, one)).at("s", 1, 2)) == 0


def test_decompose_examples():
    one = make_character(P3, 1, 0)
    assert decompose_brauer(induced_ps_character((one, one))) == WeightMultiset([wt(P3, 0, 0), wt(P3, 2, 0)])
    for place in (P3, P5):
        for s in all_weights(place):
            assert dict(decompose_brauer(brauer_character(s))) == {s: 1}
    assert decompose_brauer(sym_power_character(5, 6)) == jh_sym(5, 6)


def test_decompose_detects_virtual_and_non_lattice():
    a, b = all_weights(P3)[:2]
    virtual = brauer_character(a) - brauer_character(b)
    assert decompose_brauer(virtual).virtual
    one = make_character(P3, 1, 0)
    c = induced_ps_character((one, one))
    values = list(c.values)
    values[0] = values[0] + CyclotomicInt.integer(values[0].n, 1)
    broken = type(c)(c.place, tuple(values))
    with pytest.raises(DecompositionError):
        decompose_brauer(broken)


def test_principal_series_examples():
    one, chi = make_character(P3, 1, 0), make_character(P3, 1, 1)
    assert jh_principal_series((chi, chi)) == WeightMultiset([wt(P3, 0, 1), wt(P3, 2, 1)])
    assert jh_principal_series((chi, one)).dim == 4
    P9 = LocalPlace(3, 1, 2)
    o9 = make_character(P9, 1, 0)
    assert jh_principal_series((o9, o9)) == WeightMultiset([wt(P9, (0, 0), 0), wt(P9, (2, 2), 0)])


def test_multiset_json_round_trip():
    ms = jh_sym(7, 40)
    assert multiset_from_json(LocalPlace(7), ms.to_json()) == ms


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(0, 400))
def test_jh_sym_conserves_dimension(p, m):
    assert jh_sym(p, m).dim == m + 1
    assert not jh_sym(p, m).virtual


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 1), (5, 1), (3, 2)]), st.lists(st.integers(0, 10**6), min_size=1, max_size=6), st.data())
def test_decompose_inverts_random_sums(pf, picks, data):
    place = LocalPlace(pf[0], 1, pf[1])
    ws = all_weights(place)
    chosen = [ws[i % len(ws)] for i in picks]
    mults = [data.draw(st.integers(-3, 3)) for _ in chosen]
    c = brauer_character(chosen[0]).scale(0)
    want = {}
    for s, m in zip(chosen, mults):
        c = c + brauer_character(s).scale(m)
        want[s] = want.get(s, 0) + m
    assert dict(decompose_brauer(c)) == {s: m for s, m in want.items() if m}
