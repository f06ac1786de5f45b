import random
from fractions import Fraction

import pytest
from hypothesis import given

from tleib.classify import (
    DegenerateStratum,
    OrbitLabel,
    UnknownLabel,
    all_labels,
    canonical,
    classify,
    delta,
    invariants,
    isomorphic,
    realize,
    representative,
    sample_member,
    subset,
    witness_residual,
)
from tleib.families import TLeib5Params, TLeib6Params
from tleib.scalar import Scalar, nth_root
from tleib.transform import AdaptedTransform, random_adapted, transform_params_oracle
from tests.conftest import random_nonzero, tleib5_params, tleib6_params, zero_inflated


def L(*vals):
    return (TLeib5Params if len(vals) == 4 else TLeib6Params)(*vals)


# -- labels ---------------------------------------------------------------


def test_label_parse_and_print():
    lab = OrbitLabel.parse("U6_14")
    assert lab == OrbitLabel(6, 14)
    assert str(lab) == "U6_14" and lab.notation == "U_6^14"
    assert OrbitLabel.parse("U_5^3") == OrbitLabel(5, 3)


@pytest.mark.parametrize("text", ["U5_10", "U7_1", "U6_0", "X5_1", "U5"])
def test_bad_labels(text):
    with pytest.raises(UnknownLabel):
        OrbitLabel.parse(text)


def test_label_counts():
    assert len(all_labels(5)) == 9 and len(all_labels(6)) == 19
    lengths = {str(lab): len(lab.invariant_names) for lab in all_labels() if lab.parametric}
    assert lengths == {"U5_1": 1, "U6_1": 2, "U6_2": 1, "U6_7": 2, "U6_8": 1, "U6_11": 1}


# -- delta and subsets ------------------------------------------------------


def test_delta_examples():
    assert delta(L(1, 0, 1, 0)) == 4
    assert delta(L(0, 0, 0, 0)) == 0
    assert delta(L(1, 2, 1, 5)) == 0


@pytest.mark.parametrize(
    "vals, index",
    [
        ((0, 0, 0, 0), 9),
        ((1, 0, 1, 0), 2),
        ((0, 1, 0, 1), 4),
        ((1, 2, 1, 0), 3),
        ((7, 0, 1, 1), 1),
        ((0, 0, 0, 1), 8),
    ],
)
def test_subset5_examples(vals, index):
    assert subset(L(*vals)) == OrbitLabel(5, index)


@pytest.mark.parametrize(
    "vals, index",
    [
        ((0, 0, 0, 0, 0, 0), 19),
        ((1, 0, 0, 1, 0, 1), 3),
        ((0, 1, 0, 0, 1, 0), 14),
        ((5, 0, 1, 2, 3, 1), 1),
        ((1, 2, 1, 0, 0, 0), 13),
        ((1, 2, 1, 0, 1, 0), 11),
    ],
)
def test_subset6_examples(vals, index):
    assert subset(L(*vals)) == OrbitLabel(6, index)


@given(tleib5_params)
def test_partition5_total(p):
    assert 1 <= subset(p).index <= 9


@given(tleib6_params)
def test_partition6_total(p):
    assert 1 <= subset(p).index <= 19


def test_labels_are_orbit_invariant():
    rng = random.Random(77)
    for dim in (5, 6):
        for _ in range(300):
            p = zero_inflated(rng, dim)
            q = transform_params_oracle(p, random_adapted(dim, p, rng))
            assert subset(q) == subset(p)


# -- invariants -----------------------------------------------------------


def test_invariants5_example():
    assert invariants(L(1, 0, 1, 1)) == {"I1": 4}


def test_representative_invariant_scales():
    rng = random.Random(3)
    for _ in range(20):
        l1, l2 = random_nonzero(rng), random_nonzero(rng)
        assert invariants(L(l1, 0, 1, 1)) == {"I1": 4 * l1}
        assert invariants(L(l1, 0, 1, l2, 0, 1)) == {"I1": l1, "I2": 8 * l2**3}
        assert invariants(L(0, 1, 0, l1, 0, 1)) == {"I1": l1**3}
        assert invariants(L(l1, l2, 1, 1, 0, 0)) == {"I1": 4 * l1, "I2": l2**2}
        assert invariants(L(l1, 1, 0, 1, 0, 0)) == {"I1": 8 * l1**3}
        assert invariants(L(l1, 0, 1, 0, 1, 0)) == {"I1": 4 * l1}


def test_single_orbits_have_no_invariants():
    for lab in all_labels():
        if not lab.parametric:
            assert invariants(representative(lab)) == {}


# -- canonical forms ------------------------------------------------------


def test_canonical5_examples():
    canon, w = canonical(L(1, 0, 1, 0))
    assert canon == L(1, 0, 1, 0)
    assert transform_params_oracle(L(1, 0, 1, 0), w) == canon
    assert canonical(L(4, 0, 1, 1))[0] == L(4, 0, 1, 1)
    canon, w = canonical(L(0, 1, 0, 0))
    assert canon == L(0, 1, 0, 0) and w.A[0] ** 2 == 1


def test_canonical6_examples():
    for vals in ((1, 0, 0, 1, 0, 1), (0, 0, 0, 0, 1, 0)):
        assert canonical(L(*vals))[0] == L(*vals)


def test_u61_family_fixed_point():
    rng = random.Random(12)
    hits = 0
    while hits < 20:
        l1, l2 = random_nonzero(rng), random_nonzero(rng)
        if nth_root(l2**3, 3) != l2:
            continue  # keep lambda2 that is the principal root of its own cube
        hits += 1
        p = L(l1, 0, 1, l2, 0, 1)
        canon, w = canonical(p)
        assert canon == p
        assert transform_params_oracle(p, w) == p


def test_representatives_fixed():
    for lab in all_labels():
        if lab.parametric:
            continue
        p = representative(lab)
        r = classify(p)
        assert r.label == lab and r.canonical == p and not r.degenerate


@pytest.mark.parametrize("lab", all_labels(), ids=str)
def test_witness_validity(lab):
    rng = random.Random(lab.dim * 100 + lab.index)
    for _ in range(10):
        p = sample_member(lab, rng)
        r = classify(p)
        assert r.label == lab
        if r.witness.exact:
            assert transform_params_oracle(p, r.witness) == r.canonical
        else:
            assert witness_residual(p, r) < 1e-9


def test_representative_requires_lambdas():
    with pytest.raises(ValueError):
        representative(OrbitLabel(6, 1), [1])


# -- degenerate strata ----------------------------------------------------


def test_degenerate_u61():
    p = L(3, 2, 1, 1, 0, 1)  # 2*b11 - b01*b23 = 0
    r = classify(p)
    assert r.label == OrbitLabel(6, 1)
    assert r.degenerate and r.canonical is None and r.witness is None
    assert r.invariants == {"I1": None, "I2": None}
    with pytest.raises(DegenerateStratum):
        canonical(p)


def test_degenerate_u62():
    p = L(2, 2, 0, 1, 0, 1)  # b01 - b23*b00 = 0
    r = classify(p)
    assert r.label == OrbitLabel(6, 2) and r.degenerate
    assert r.invariants == {"I1": None}


# -- isomorphism ----------------------------------------------------------


def test_iso_reflexive_examples():
    p = L(1, 0, 1, 0)
    assert isomorphic(p, p)[0] is True
    assert isomorphic(L(1, 0, 1, 0), L(0, 0, 1, 0))[0] is False


def test_iso_orbit_closure_with_witness():
    rng = random.Random(21)
    for dim in (5, 6):
        for _ in range(40):
            p = zero_inflated(rng, dim)
            q = transform_params_oracle(p, random_adapted(dim, p, rng))
            answer, cert = isomorphic(p, q)
            if cert.a.degenerate:
                assert answer is None
                continue
            assert answer is True
            if cert.witness is not None:
                image = transform_params_oracle(p, cert.witness)
                assert all(abs(x.to_complex() - y.to_complex()) < 1e-7 * max(1, abs(y)) for x, y in zip(image.as_tuple(), q.as_tuple()))


def test_iso_equivalence_relation():
    rng = random.Random(31)
    for lab in all_labels():
        rep = representative(lab, [random_nonzero(rng) for _ in lab.invariant_names])
        a, b, c = (transform_params_oracle(rep, random_adapted(lab.dim, rep, rng)) for _ in range(3))
        assert isomorphic(a, a)[0] is True
        assert isomorphic(a, b)[0] is isomorphic(b, a)[0] is True
        assert isomorphic(b, c)[0] is True and isomorphic(a, c)[0] is True


def test_iso_distinguishes_invariants():
    assert isomorphic(L(1, 0, 1, 1), L(2, 0, 1, 1))[0] is False


def test_iso_cube_root_branches():
    # lambda2 and omega*lambda2 share invariants and are joined by an explicit map
    omega = nth_root(1, 3, 1)
    assert not omega.exact
    l2 = Scalar(2)
    a = L(Scalar(1).to_approx(), 0, 1, l2.to_approx(), 0, 1)
    b = L(Scalar(1).to_approx(), 0, 1, omega * l2, 0, 1)
    answer, cert = isomorphic(a, b)
    assert answer is True
    w = AdaptedTransform.from_generators(6, A0=omega, A1=0, B1=omega)
    image = transform_params_oracle(a, w)
    assert abs(image.b12.to_complex() - (omega * omega * l2).to_complex()) < 1e-12


def test_iso_degenerate_pairs():
    p = L(3, 2, 1, 1, 0, 1)
    assert isomorphic(p, p)[0] is None
    assert isomorphic(p, L(3, 0, 1, 1, 0, 1))[0] is False


def test_iso_rejects_mixed_dims():
    with pytest.raises(ValueError):
        isomorphic(L(0, 0, 0, 0), L(0, 0, 0, 0, 0, 0))


# -- realization ----------------------------------------------------------


@pytest.mark.parametrize("lab", [lab for lab in all_labels() if lab.parametric], ids=str)
def test_realize(lab):
    rng = random.Random(lab.index)
    for n in range(30):
        values = [random_nonzero(rng) if n % 5 else Scalar(0) for _ in lab.invariant_names]
        p = realize(lab, values)
        assert subset(p) == lab
        assert list(invariants(p).values()) == values


def test_realize_single_orbit():
    assert realize(OrbitLabel(5, 9), []) == L(0, 0, 0, 0)
    with pytest.raises(ValueError):
        realize(OrbitLabel(5, 9), [1])


def test_approx_input_classifies():
    p = L(*(Scalar(Fraction(v, 3)).to_approx() for v in (1, 2, 5, 7, 11, 13)))
    r = classify(p)
    assert r.label == OrbitLabel(6, 1)
    assert witness_residual(p, r) < 1e-9
