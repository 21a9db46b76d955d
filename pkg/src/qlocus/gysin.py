"""Gysin push-forwards along Grassmannian and two-step flag bundles.

The push-forward along G^q(E) -> X is the classical symmetrizing
operator: with Chern roots a_1..a_e of E, the first q designated as the
quotient part,

    pi_*(P) = sum over cosets sigma of S_e/(S_q x S_r) of
              sigma( P / prod_{i<=q<j} (a_i - a_j) ).

We clear denominators once: over the common denominator
V = prod_{i<j}(a_i - a_j), the coset for a q-subset T contributes
sign(T) * sigma_T(P) * V_T where V_T keeps exactly the factors with both
indices on the same side of T, and the total is exactly divisible by V.

Everything stays in the polynomial ring; there are no rational functions
anywhere, and a P that is not symmetric in each designated part is
rejected rather than symmetrized.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .alphabets import Alphabet
from .partitions import Partition, staircase
from .polyring import Poly, Ring, apply_permutation, exact_div, is_symmetric, product
from .schur import schur_p, schur_q, schur_s


class BlockSymmetryError(ValueError):
    """Input to a symmetrizing operator is not symmetric in a designated
    variable group."""


@dataclass(frozen=True)
class GrassmannSetup:
    """Push-forward data for G^q(E) -> X.

    ``variables`` are the Chern roots of E in a fixed order; the first
    ``q`` positions are the quotient part of the initial designation.
    """

    ring: Ring
    variables: tuple[int, ...]
    q: int

    def __post_init__(self):
        if not 0 <= self.q <= len(self.variables):
            raise ValueError(f"q={self.q} out of range for {len(self.variables)} roots")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("designated roots must be distinct")

    @property
    def e(self) -> int:
        return len(self.variables)


def _coset_data(setup: GrassmannSetup):
    """Per-coset (permutation, sign, same-side Vandermonde factor), plus
    the full Vandermonde; cached on the ring."""
    cache = getattr(setup.ring, "_gysin_cache", None)
    if cache is None:
        cache = setup.ring._gysin_cache = {}
    key = (setup.variables, setup.q)
    got = cache.get(key)
    if got is not None:
        return got
    ring = setup.ring
    vs = setup.variables
    e, q = setup.e, setup.q
    gens = [ring.variable(i) for i in vs]
    vandermonde = product(ring, (gens[i] - gens[j] for i in range(e) for j in range(i + 1, e)))
    cosets = []
    for T in combinations(range(e), q):
        inT = set(T)
        comp = [i for i in range(e) if i not in inT]
        # designated position i goes to slot target[i]
        target = list(T) + comp
        perm = list(range(ring.nvars))
        for i, t in enumerate(target):
            perm[vs[i]] = vs[t]
        sign = -1 if sum(t - i for i, t in enumerate(T)) % 2 else 1
        same_side = product(
            ring,
            (
                gens[i] - gens[j]
                for i in range(e)
                for j in range(i + 1, e)
                if (i in inT) == (j in inT)
            ),
        )
        cosets.append((perm, sign, same_side))
    got = (vandermonde, cosets)
    cache[key] = got
    return got


def grassmann_pushforward(P: Poly, setup: GrassmannSetup) -> Poly:
    """Push forward a class along G^q(E) -> X.

    ``P`` must be symmetric separately in the quotient part and in the
    complementary part of the designated roots.
    """
    ring = setup.ring
    vs = setup.variables
    if not is_symmetric(P, vs[: setup.q]):
        raise BlockSymmetryError("not symmetric in the quotient roots")
    if not is_symmetric(P, vs[setup.q :]):
        raise BlockSymmetryError("not symmetric in the complementary roots")
    vandermonde, cosets = _coset_data(setup)
    total = ring.zero
    for perm, sign, same_side in cosets:
        term = apply_permutation(P, perm) * same_side
        total = total + (term if sign > 0 else -term)
    if total.is_zero():
        return total
    return exact_div(total, vandermonde)


class RepeatedPushforward:
    """Push-forwards of ``factor * P`` for one fixed factor and many P.

    Precomputes, for every coset, the signed product of the permuted
    factor with the same-side Vandermonde part, so each subsequent class
    costs one small multiplication per coset plus a single division.
    """

    def __init__(self, setup: GrassmannSetup, factor: Poly):
        self.setup = setup
        self.vandermonde, cosets = _coset_data(setup)
        self.weights = []
        for perm, sign, same_side in cosets:
            w = apply_permutation(factor, perm) * same_side
            self.weights.append((perm, w if sign > 0 else -w))

    def push(self, P: Poly) -> Poly:
        ring = self.setup.ring
        total = ring.zero
        for perm, w in self.weights:
            total = total + apply_permutation(P, perm) * w
        if total.is_zero():
            return total
        return exact_div(total, self.vandermonde)


@dataclass(frozen=True)
class FlagSetup:
    """Two-step flag bundle Fl_{f-p, e-p}(F, E) -> X in the surjection
    model, presented as an inner Grassmannian over an outer one.

    Chern roots: ``f_vars`` for F, ``k_vars`` for the kernel of E -> F.
    The outer stage is G^p(F) (sub S of rank f-p, the first f-p roots of
    F); the inner stage is G_n(C) for the rank n+p cokernel C = E/S,
    whose roots are the last p roots of F together with the kernel roots.
    ``2p < f`` is required.
    """

    f_vars: tuple[int, ...]
    k_vars: tuple[int, ...]
    p: int

    def __post_init__(self):
        if not 0 <= 2 * self.p < len(self.f_vars):
            raise ValueError(f"need 0 <= 2p < f, got p={self.p}, f={len(self.f_vars)}")

    @property
    def f(self) -> int:
        return len(self.f_vars)

    @property
    def n(self) -> int:
        return len(self.k_vars)

    def s_vars(self) -> tuple[int, ...]:
        return self.f_vars[: self.f - self.p]

    def fq_vars(self) -> tuple[int, ...]:
        return self.f_vars[self.f - self.p :]


def flag_pushforward(P: Poly, fs: FlagSetup, ring: Ring) -> Poly:
    """Push forward along the two-step flag: first the inner G_n(C)
    (quotient part: the roots of C/R), then the outer G^p(F)."""
    inner = GrassmannSetup(ring, fs.fq_vars() + fs.k_vars, fs.p)
    outer = GrassmannSetup(ring, fs.fq_vars() + fs.s_vars(), fs.p)
    return grassmann_pushforward(grassmann_pushforward(P, inner), outer)


@dataclass
class PushforwardCheck:
    """Outcome of one instance of the Q/P push-forward formula on
    G^q(E): pi_*(c_top(R ⊗ Q) P_I(Q)) against d * P_I(E)."""

    e: int
    q: int
    I: Partition
    d: int
    computed: Poly
    expected: Poly

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


def pushforward_degree_factor(e: int, q: int, I: Partition) -> int:
    """The integer d: zero when (q - k)(e - q) is odd, otherwise
    binomial(floor((e-k)/2), floor((q-k)/2)) with k the length of I."""
    k = I.length
    r = e - q
    if ((q - k) * r) % 2:
        return 0
    return math.comb((e - k) // 2, (q - k) // 2)


def verify_pushforward_coefficient(
    I: Partition, e: int, q: int, _cache: dict = {}
) -> PushforwardCheck:
    """Exercise pi_*(c_top(R ⊗ Q) P_I(Q)) = d P_I(E) on G^q(E) by brute
    force on a fresh e-variable ring (shared across calls per (e, q))."""
    if not I.is_strict() or I.length > q:
        raise ValueError(f"need a strict partition with at most q={q} parts, got {I}")
    got = _cache.get((e, q))
    if got is None:
        ring = Ring([("a", e)])
        setup = GrassmannSetup(ring, tuple(range(e)), q)
        gens = [ring.variable(i) for i in range(e)]
        ctop_rq = product(ring, (gens[i] + gens[j] for j in range(q) for i in range(q, e)))
        got = (ring, RepeatedPushforward(setup, ctop_rq))
        _cache[(e, q)] = got
    ring, pusher = got
    quotient = Alphabet(ring, tuple(range(q)))
    total = Alphabet(ring, tuple(range(e)))
    computed = pusher.push(schur_p(I, quotient))
    d = pushforward_degree_factor(e, q, I)
    expected = schur_p(I, total).scale(d)
    return PushforwardCheck(e, q, I, d, computed, expected)


def verify_pushforward_special(e: int, q: int, I: Partition) -> tuple[bool, bool]:
    """The two boundary cases with their own closed forms:

    * length(I) = q:     pi_*(c_top(R ⊗ Q) Q_I(Q)) = Q_I(E)
    * length(I) = q - 1: the same with P gives P_I(E) for even e - q,
                         and 0 for odd e - q.

    Returns (applicable, ok).
    """
    k = I.length
    r = e - q
    ring = Ring([("a", e)])
    setup = GrassmannSetup(ring, tuple(range(e)), q)
    gens = [ring.variable(i) for i in range(e)]
    ctop_rq = product(ring, (gens[i] + gens[j] for j in range(q) for i in range(q, e)))
    quotient = Alphabet(ring, tuple(range(q)))
    total = Alphabet(ring, tuple(range(e)))
    if k == q:
        lhs = grassmann_pushforward(ctop_rq * schur_q(I, quotient), setup)
        return True, lhs == schur_q(I, total)
    if k == q - 1:
        lhs = grassmann_pushforward(ctop_rq * schur_p(I, quotient), setup)
        want = schur_p(I, total) if r % 2 == 0 else ring.zero
        return True, lhs == want
    return False, True
