import pytest
from hypothesis import given, strategies as st

from qlocus.alphabets import Alphabet
from qlocus.gysin import (
    BlockSymmetryError,
    FlagSetup,
    GrassmannSetup,
    RepeatedPushforward,
    flag_pushforward,
    grassmann_pushforward,
    pushforward_degree_factor,
    verify_pushforward_coefficient,
    verify_pushforward_special,
)
from qlocus.partitions import Partition, rectangle, subpartitions
from qlocus.polyring import Ring, is_symmetric, product
from qlocus.schur import schur_s


def line_setup(e):
    ring = Ring([("a", e)])
    return ring, GrassmannSetup(ring, tuple(range(e)), 1)


def test_rank_one_quotient_pushforward_is_a_complete_sym():
    # push of a1^k along G^1(E) is (a1^k - a2^k)/(a1 - a2) and its
    # higher-rank analogues: the complete symmetric function h_{k-r}
    ring, setup = line_setup(2)
    a1 = ring.variable(0)
    a2 = ring.variable(1)
    assert grassmann_pushforward(ring.one, setup).is_zero()
    assert grassmann_pushforward(a1, setup) == 1
    assert grassmann_pushforward(a1**3, setup) == a1 * a1 + a1 * a2 + a2 * a2


def test_pushforward_of_quotient_schur_shifts_the_shape():
    # pi_*(s_{I + (r)^q}(Q)) = s_I(E) on G^q(E) with r = e - q
    e, q, r = 4, 2, 2
    ring = Ring([("a", e)])
    setup = GrassmannSetup(ring, tuple(range(e)), q)
    Q = Alphabet(ring, tuple(range(q)))
    E = Alphabet(ring, tuple(range(e)))
    for I in subpartitions(rectangle(2, 2)):
        shifted = I.add(rectangle(q, r))
        assert grassmann_pushforward(schur_s(shifted, Q), setup) == schur_s(I, E), I
    # too-low degrees die
    assert grassmann_pushforward(schur_s(Partition((1,)), Q), setup).is_zero()


def test_pushforward_is_linear():
    ring, setup = line_setup(3)
    a1 = ring.variable(0)
    p1, p2 = a1**4, a1**2
    lhs = grassmann_pushforward(p1.scale(2) + p2.scale(-7), setup)
    assert lhs == grassmann_pushforward(p1, setup).scale(2) + grassmann_pushforward(
        p2, setup
    ).scale(-7)


def test_projection_formula():
    # classes pulled back from the base factor out of the push-forward
    ring, setup = line_setup(3)
    a1 = ring.variable(0)
    base = schur_s(Partition((2, 1)), Alphabet(ring, (0, 1, 2)))
    assert grassmann_pushforward(a1**3 * base, setup) == (
        grassmann_pushforward(a1**3, setup) * base
    )


def test_pushforward_drops_degree_by_the_fibre_dimension():
    e, q = 4, 2
    ring = Ring([("a", e)])
    setup = GrassmannSetup(ring, tuple(range(e)), q)
    Q = Alphabet(ring, tuple(range(q)))
    P = schur_s(Partition((4, 3)), Q)
    got = grassmann_pushforward(P, setup)
    assert got.total_degree() == P.total_degree() - q * (e - q)


def test_pushforward_rejects_asymmetric_input():
    ring = Ring([("a", 3)])
    setup = GrassmannSetup(ring, (0, 1, 2), 2)
    with pytest.raises(BlockSymmetryError):
        grassmann_pushforward(ring.variable(0), setup)  # quotient part a1, a2
    setup1 = GrassmannSetup(ring, (0, 1, 2), 1)
    with pytest.raises(BlockSymmetryError):
        grassmann_pushforward(ring.variable(1), setup1)  # sub part a2, a3


def test_trivial_fibres_are_the_identity():
    ring = Ring([("a", 3)])
    P = schur_s(Partition((2,)), Alphabet(ring, (0, 1, 2))) + 3
    for q in (0, 3):
        setup = GrassmannSetup(ring, (0, 1, 2), q)
        assert grassmann_pushforward(P, setup) == P


def test_setup_validation():
    ring = Ring([("a", 2)])
    with pytest.raises(ValueError):
        GrassmannSetup(ring, (0, 1), 3)
    with pytest.raises(ValueError):
        GrassmannSetup(ring, (0, 0), 1)


@given(st.data())
def test_repeated_pushforward_matches_direct(data):
    e, q = 3, 1
    ring = Ring([("a", e)])
    setup = GrassmannSetup(ring, tuple(range(e)), q)
    gens = [ring.variable(i) for i in range(e)]
    factor = product(ring, (gens[0] + gens[j] for j in range(q, e)))
    pusher = RepeatedPushforward(setup, factor)
    k = data.draw(st.integers(min_value=0, max_value=5))
    P = gens[0] ** k
    assert pusher.push(P) == grassmann_pushforward(factor * P, setup)


def test_degree_factor_values():
    assert pushforward_degree_factor(3, 1, Partition(())) == 1
    assert pushforward_degree_factor(4, 1, Partition(())) == 0  # odd parity
    assert pushforward_degree_factor(4, 2, Partition(())) == 2
    assert pushforward_degree_factor(6, 2, Partition(())) == 3
    assert pushforward_degree_factor(4, 2, Partition((2,))) == 1
    assert pushforward_degree_factor(5, 3, Partition((2, 1))) == 1


@pytest.mark.parametrize(
    "e,q,parts",
    [
        (3, 1, ()),
        (3, 1, (2,)),
        (4, 2, ()),
        (4, 2, (2,)),
        (4, 2, (2, 1)),
        (5, 2, (3, 1)),
    ],
)
def test_pushforward_coefficient_formula(e, q, parts):
    chk = verify_pushforward_coefficient(Partition(parts), e, q)
    assert chk.ok, (e, q, parts, chk.d)


def test_pushforward_coefficient_rejects_bad_shapes():
    with pytest.raises(ValueError):
        verify_pushforward_coefficient(Partition((2, 2)), 4, 2)
    with pytest.raises(ValueError):
        verify_pushforward_coefficient(Partition((3, 2, 1)), 4, 2)


def test_pushforward_special_cases():
    # full-length I keeps the Q-polynomial on the nose
    applicable, ok = verify_pushforward_special(3, 1, Partition((2,)))
    assert applicable and ok
    applicable, ok = verify_pushforward_special(4, 2, Partition((3, 1)))
    assert applicable and ok
    # one-short I: survives for even e - q, dies for odd
    applicable, ok = verify_pushforward_special(4, 2, Partition((2,)))
    assert applicable and ok
    applicable, ok = verify_pushforward_special(4, 1, Partition(()))
    assert applicable and ok
    applicable, ok = verify_pushforward_special(4, 2, Partition(()))
    assert not applicable and ok


def test_flag_setup_validation_and_parts():
    fs = FlagSetup((0, 1, 2), (3,), 1)
    assert fs.f == 3 and fs.n == 1
    assert fs.s_vars() == (0, 1)
    assert fs.fq_vars() == (2,)
    with pytest.raises(ValueError):
        FlagSetup((0, 1), (2,), 1)  # needs 2p < f


def test_flag_pushforward_trivial_stage():
    # p = 0 flags add no fibre directions at all
    ring = Ring([("f", 3), ("k", 1)])
    fs = FlagSetup(ring.block("f"), ring.block("k"), 0)
    P = schur_s(Partition((2, 1)), Alphabet(ring, ring.block("f")))
    assert flag_pushforward(P, fs, ring) == P


def test_flag_pushforward_drops_the_right_degree():
    # relative dimension p*n + p*(f - p); pinned instance on Fl_{2,3}
    ring = Ring([("f", 3), ("k", 1)])
    fs = FlagSetup(ring.block("f"), ring.block("k"), 1)
    f3 = ring.variable(2)
    k = ring.variable(3)
    P = f3**4 * k
    got = flag_pushforward(P, fs, ring)
    assert got.total_degree() == P.total_degree() - (1 * 1 + 1 * 2)
    assert is_symmetric(got, ring.block("f"))
    e1 = sum((ring.variable(i) for i in range(4)), ring.zero)
    assert got == k * e1  # s_1(K) s_1(E)
