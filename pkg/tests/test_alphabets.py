from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qlocus.alphabets import (
    Alphabet,
    VirtualAlphabet,
    complete_sym,
    difference,
    make_model,
    q_sym,
)
from qlocus.polyring import Ring, is_symmetric, product


def test_alphabet_basics():
    ring = Ring([("a", 3)])
    A = Alphabet(ring, ring.block("a"))
    assert A.size == 3
    assert [str(r) for r in A.roots()] == ["a1", "a2", "a3"]
    assert [str(r) for r in A.dual().roots()] == ["-a1", "-a2", "-a3"]
    assert A.dual().dual().roots()[0] == A.roots()[0]
    with pytest.raises(ValueError):
        Alphabet(ring, (0, 0))


def test_complete_sym_small_cases():
    ring = Ring([("a", 2)])
    a1, a2 = ring.variable(0), ring.variable(1)
    A = Alphabet(ring, ring.block("a"))
    assert complete_sym(0, A) == 1
    assert complete_sym(-1, A).is_zero()
    assert complete_sym(1, A) == a1 + a2
    assert complete_sym(2, A) == a1 * a1 + a1 * a2 + a2 * a2


def test_complete_sym_of_difference():
    # {x} - {-x, -d}: series (1+xt)(1+dt)/(1-xt), degree 2 term 2x^2 + 2xd
    ring = Ring([("x", 1), ("d", 1)])
    x, d = ring.variable(0), ring.variable(1)
    X = Alphabet(ring, ring.block("x"))
    D = Alphabet(ring, ring.block("d"))
    v = VirtualAlphabet((X,), (X.dual(), D.dual()))
    assert complete_sym(1, v) == x * 2 + d
    assert complete_sym(2, v) == x * x * 2 + x * d * 2


def test_complete_sym_self_difference_vanishes():
    ring = Ring([("a", 3)])
    A = Alphabet(ring, ring.block("a"))
    v = difference(A, A)
    assert complete_sym(0, v) == 1
    for i in range(1, 5):
        assert complete_sym(i, v).is_zero()


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=5))
def test_complete_sym_duality_sign(n, i):
    # s_i of the negated alphabet is (-1)^i times s_i composed with a -> -a,
    # which for a homogeneous degree-i polynomial is just a global sign twist
    ring = Ring([("a", n)])
    A = Alphabet(ring, ring.block("a"))
    flip = {j: -ring.variable(j) for j in range(n)}
    from qlocus.polyring import apply_substitution

    assert complete_sym(i, A.dual()) == apply_substitution(complete_sym(i, A), flip)


@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=5))
def test_whitney_sum_formula(f, n, i):
    # under a surjection, s_i(E) = sum_j s_j(F) s_{i-j}(K)
    ctx = make_model("surjection", f + n, f)
    lhs = complete_sym(i, ctx.E)
    rhs = ctx.ring.zero
    for j in range(i + 1):
        rhs = rhs + complete_sym(j, ctx.F) * complete_sym(i - j, ctx.K)
    assert lhs == rhs


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=6))
def test_q_sym_known_series(n, i):
    # prod (1+at)/(1-at) = (sum e_j t^j)(sum h_j t^j), so
    # q_i = sum_j e_j h_{i-j}
    ring = Ring([("a", n)])
    A = Alphabet(ring, ring.block("a"))
    roots = A.roots()
    # elementary symmetric functions by direct expansion of prod (1 + a t)
    e = [ring.one] + [ring.zero] * i
    for a in roots:
        for d in range(i, 0, -1):
            e[d] = e[d] + a * e[d - 1]
    rhs = ring.zero
    for j in range(i + 1):
        rhs = rhs + e[j] * complete_sym(i - j, A)
    assert q_sym(i, A) == rhs


def test_q_sym_one_variable():
    ring = Ring([("a", 1)])
    a = ring.variable(0)
    A = Alphabet(ring, ring.block("a"))
    assert q_sym(0, A) == 1
    assert q_sym(1, A) == a * 2
    assert q_sym(3, A) == (a**3) * 2


def test_q_sym_is_symmetric():
    ring = Ring([("a", 3)])
    A = Alphabet(ring, ring.block("a"))
    for i in range(1, 5):
        assert is_symmetric(q_sym(i, A), ring.block("a"))


def test_q_sym_rejects_virtual_input():
    ring = Ring([("a", 2), ("b", 2)])
    A = Alphabet(ring, ring.block("a"))
    B = Alphabet(ring, ring.block("b"))
    with pytest.raises(TypeError):
        q_sym(2, difference(A, B))


def test_model_context_surjection():
    ctx = make_model("surjection", 5, 3)
    assert ctx.n == 2
    assert ctx.ring.names == ["f1", "f2", "f3", "k1", "k2"]
    assert ctx.e_minus_f() is ctx.K
    assert ctx.bundle("E-F") is ctx.K
    assert ctx.E.variables == ctx.F.variables + ctx.K.variables


def test_model_context_independent():
    ctx = make_model("independent", 4, 2)
    assert ctx.K is None
    v = ctx.e_minus_f()
    assert isinstance(v, VirtualAlphabet)
    with pytest.raises(KeyError):
        ctx.bundle("K")


def test_model_context_validation():
    with pytest.raises(ValueError):
        make_model("diagonal", 3, 2)
    with pytest.raises(ValueError):
        make_model("surjection", 2, 3)


def test_surjection_and_independent_models_agree():
    # s_i(E - F) computed virtually must equal s_i(K) after the roots of E
    # are identified with (roots of F) + (roots of K)
    from qlocus.polyring import apply_substitution

    sur = make_model("surjection", 4, 2)
    ind = make_model("independent", 4, 2)
    fv = ind.ring.block("f")
    ev = ind.ring.block("e")
    mapping = {}
    for i, j in zip(fv, sur.ring.block("f")):
        mapping[i] = sur.ring.variable(j)
    for i, j in zip(ev, sur.ring.block("f") + sur.ring.block("k")):
        mapping[i] = sur.ring.variable(j)
    for i in range(4):
        lhs = apply_substitution(complete_sym(i, ind.e_minus_f()), mapping, sur.ring)
        assert lhs == complete_sym(i, sur.K)
