"""Closed-form cohomology classes of symmetric and skew-symmetric
degeneracy loci, with independent derivation routes for cross-checking.

For a generic morphism phi: E* -> E (e = rank E) that is symmetric or
skew-symmetric and factors through a subbundle F of rank f, the locus
D_r where rank(phi) <= r has a class expressible as

    sum over I in the (e-f) x (f-r) box of
        [Q or P]_{staircase + I}(F) * s_{CĨ}(E - F)

with the staircase and the Q/P flavour depending on the symmetry type
and the parity of r.  The same class is also computable as a Gysin
push-forward from a Grassmannian bundle of kernels, which is the
brute-force check; a mnemonic reindexing of the sum and a Schur-pair
expansion over independent E and F round out the interfaces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alphabets import Alphabet, ModelContext, VirtualAlphabet, make_model
from .chern import (
    ctop_sym2,
    ctop_wedge2,
    skew_schur_sum,
    staircase_schur_sum,
    tensor_sum_product,
)
from .gysin import FlagSetup, GrassmannSetup, flag_pushforward, grassmann_pushforward
from .partitions import Partition, complement_conjugate, rectangle_partitions, staircase
from .polyring import Poly, Ring, apply_substitution, product
from .schur import (
    SchurPairExpansion,
    expand_schur_basis,
    expand_schur_pair,
    schur_difference_split,
    schur_p,
    schur_q,
    schur_s,
)


@dataclass(frozen=True)
class LocusProblem:
    """Ranks and symmetry type of one degeneracy problem.

    e >= f >= 1 and 0 <= r <= f; for skew morphisms the rank drops in
    steps of two, so e = f forces r even.
    """

    e: int
    f: int
    r: int
    symmetry: str  # "sym" | "skew"

    def __post_init__(self):
        if self.symmetry not in ("sym", "skew"):
            raise ValueError(f"symmetry must be 'sym' or 'skew', got {self.symmetry!r}")
        if not self.e >= self.f >= 1:
            raise ValueError(f"need e >= f >= 1, got e={self.e}, f={self.f}")
        if not 0 <= self.r <= self.f:
            raise ValueError(f"need 0 <= r <= f, got r={self.r}")
        if self.symmetry == "skew" and self.e == self.f and self.r % 2:
            raise ValueError("skew with e=f requires even r")

    @property
    def n(self) -> int:
        return self.e - self.f

    @property
    def q(self) -> int:
        return self.f - self.r


def expected_codim(problem: LocusProblem) -> int:
    """q(2n + q + 1)/2 in the symmetric case, q(2n + q - 1)/2 in the
    skew case, with q = f - r and n = e - f."""
    q, n = problem.q, problem.n
    if problem.symmetry == "sym":
        return q * (2 * n + q + 1) // 2
    return q * (2 * n + q - 1) // 2


@dataclass(frozen=True)
class ClassExpression:
    """A sum of coeff * [Q|P]_K(F) * s_L(E-F) terms with strict K."""

    kind: str  # "Q" | "P"
    terms: tuple[tuple[Partition, Partition, int], ...]

    @staticmethod
    def build(kind: str, terms) -> "ClassExpression":
        merged: dict[tuple[Partition, Partition], int] = {}
        for K, L, c in terms:
            merged[(K, L)] = merged.get((K, L), 0) + c
        ordered = sorted(
            ((K, L, c) for (K, L), c in merged.items() if c),
            key=lambda t: (t[0].parts, t[1].parts),
            reverse=True,
        )
        return ClassExpression(kind, tuple(ordered))

    def term_set(self) -> set[tuple[Partition, Partition, int]]:
        return set(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for K, L, c in self.terms:
            factors = []
            if abs(c) != 1 or (not K.length and not L.length):
                factors.append(str(abs(c)))
            if K.length:
                factors.append(f"{self.kind}{K}(F)")
            if L.length:
                factors.append(f"s{L}(E-F)")
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def to_structured(self) -> dict:
        return {
            "kind": self.kind,
            "terms": [
                {"K": list(K.parts), "L": list(L.parts), "coeff": c}
                for K, L, c in self.terms
            ],
        }


def class_of(problem: LocusProblem) -> ClassExpression:
    """The closed-form class of D_r.

    * symmetric:            Q_{rho_q + I}(F) s_{CĨ}(E-F),  I in the q x n box
    * skew, r even:         P_{rho_{q-1} + I}(F) s_{CĨ}(E-F), same box
    * skew, r odd (n >= 1): P_{rho_q + J}(F) s_{CJ̃}(E-F),  J in the q x (n-1) box
    """
    q, n = problem.q, problem.n
    if problem.symmetry == "sym":
        kind, stair, cols = "Q", q, n
    elif problem.r % 2 == 0:
        kind, stair, cols = "P", q - 1, n
    else:
        kind, stair, cols = "P", q, n - 1
    rho = staircase(stair)
    terms = [
        (rho.add(I), complement_conjugate(I, cols, q), 1)
        for I in rectangle_partitions(q, cols)
    ]
    return ClassExpression.build(kind, terms)


def class_via_mnemonic(problem: LocusProblem) -> ClassExpression:
    """Reindexed form of the same sum: the coefficient of s_{Ĩ}(E-F) is
    [Q|P]_{T - I}(F) with I written with increasing parts, where

    * symmetric:    T = (e-r, ..., n+1)
    * skew, r even: T = (e-r-1, ..., n)

    No such reindexing is defined for skew loci with odd r.
    """
    q, n = problem.q, problem.n
    if problem.symmetry == "sym":
        kind, T = "Q", tuple(range(problem.e - problem.r, n, -1))
    elif problem.r % 2 == 0:
        kind, T = "P", tuple(range(problem.e - problem.r - 1, n - 1, -1))
    else:
        raise ValueError("no mnemonic form for skew loci with odd r")
    terms = []
    for I in rectangle_partitions(q, n):
        inc = tuple(reversed(I.padded(q)))
        K = Partition(tuple(t - i for t, i in zip(T, inc)))
        terms.append((K, I.conjugate(), 1))
    return ClassExpression.build(kind, terms)


def expression_to_poly(expr: ClassExpression, ctx: ModelContext) -> Poly:
    """Evaluate on Chern roots; the result is always integral."""
    qp = schur_q if expr.kind == "Q" else schur_p
    emf = ctx.e_minus_f()
    total = ctx.ring.zero
    for K, L, c in expr.terms:
        total = total + (qp(K, ctx.F) * schur_s(L, emf)).scale(c)
    if not total.is_integral():
        raise ArithmeticError("class evaluation produced non-integer coefficients")
    return total


def class_via_pushforward(problem: LocusProblem, ctx: ModelContext) -> Poly:
    """Independent derivation of the class in the surjection model:

        pi_*( c_top(K ⊗ Q) c_top(R ⊗ Q) c_top(S²Q or ∧²Q) )

    over the Grassmannian bundle G^q(F) of corank-q quotients of F, with
    R the tautological subbundle, Q the quotient and K the kernel of
    E -> F.  The kernel of the degenerate form is the preimage of R.
    """
    if ctx.mode != "surjection":
        raise ValueError("push-forward derivation needs the surjection model")
    if (ctx.e, ctx.f) != (problem.e, problem.f):
        raise ValueError("context ranks do not match the problem")
    q = problem.q
    ring = ctx.ring
    fv = ring.block("f")
    gens = [ring.variable(i) for i in fv]
    quotient = Alphabet(ring, fv[:q])
    ctop_kq = tensor_sum_product(ctx.K, quotient) if ctx.n else ring.one
    ctop_rq = product(ring, (gens[i] + gens[j] for j in range(q) for i in range(q, problem.f)))
    top = ctop_sym2(quotient) if problem.symmetry == "sym" else ctop_wedge2(quotient)
    setup = GrassmannSetup(ring, fv, q)
    out = grassmann_pushforward(ctop_kq * ctop_rq * top, setup)
    if not out.is_integral():
        raise ArithmeticError("push-forward produced non-integer coefficients")
    return out


def class_schur_pair_expansion(problem: LocusProblem) -> SchurPairExpansion:
    """The class as sum of coeff * s_I(F) * s_J(E) with E, F independent.

    Works term by term: Q/P_K(F) is a polynomial in f variables, and
    s_L(E - F) splits as a signed sum of s_mu(E) times a skew
    S-polynomial of F, so only small f-variable polynomials are ever
    expanded in the S-basis.  Agrees with a literal two-alphabet greedy
    expansion of the evaluated class.
    """
    ring = Ring([("f", problem.f)])
    F = Alphabet(ring, tuple(range(problem.f)))
    expr = class_of(problem)
    qp = schur_q if expr.kind == "Q" else schur_p
    pairs: dict[tuple[Partition, Partition], int] = {}
    for K, L, c in expr.terms:
        base = qp(K, F).scale(c)
        for mu, f_part in schur_difference_split(L, F, max_a_length=problem.e):
            piece = base * f_part
            if piece.is_zero():
                continue
            for iota, c2 in expand_schur_basis(piece, F).items():
                key = (iota, mu)
                v = pairs.get(key, 0) + c2
                if v:
                    pairs[key] = v
                else:
                    del pairs[key]
    return SchurPairExpansion(pairs)


def projective_degree(e_twists, f_twists, r: int, symmetry: str) -> tuple[int, int]:
    """Codimension and degree of D_r for E = sum of O(e_i), F = sum of
    O(f_j) over projective space: substitute root -> twist * h and read
    the coefficient of h^codim."""
    problem = LocusProblem(len(e_twists), len(f_twists), r, symmetry)
    codim = expected_codim(problem)
    ctx = make_model("independent", problem.e, problem.f)
    P = expression_to_poly(class_of(problem), ctx)
    hring = Ring([("h", 1)])
    h = hring.variable(0)
    mapping = {}
    for i, v in enumerate(ctx.ring.block("f")):
        mapping[v] = h.scale(int(f_twists[i]))
    for i, v in enumerate(ctx.ring.block("e")):
        mapping[v] = h.scale(int(e_twists[i]))
    value = apply_substitution(P, mapping, hring)
    degree = value.coefficient_of(0, codim).constant()
    if value != hring.variable(0) ** codim * degree:
        raise ArithmeticError("class did not evaluate to a pure power of h")
    return codim, int(degree)


# -- push-forward identities along the kernel flag --------------------


@dataclass
class IdentityCheck:
    """Three members of one push-forward identity: the staircase-sum
    integrand and its skew-Schur rewriting, both pushed down the flag,
    against the closed form; optionally the same push-forward computed
    through the ambient product of Grassmannians."""

    kind: str  # "sym" | "skew"
    f: int
    p: int
    n: int
    lhs: Poly
    middle: Poly
    rhs: Poly
    via_product: Poly | None = None

    @property
    def ok(self) -> bool:
        if not (self.lhs == self.rhs and self.middle == self.rhs):
            return False
        return self.via_product is None or self.via_product == self.rhs


def _flag_model(f: int, p: int, n: int):
    ctx = make_model("surjection", f + n, f)
    fs = FlagSetup(ctx.ring.block("f"), ctx.ring.block("k"), p)
    s_dual = Alphabet(ctx.ring, fs.s_vars(), negated=True)
    r_dual = Alphabet(ctx.ring, fs.s_vars() + fs.k_vars, negated=True)
    rs_diff = VirtualAlphabet((r_dual,), (s_dual,))
    e_dual = ctx.E.dual()
    f_dual = ctx.F.dual()
    ef_diff = VirtualAlphabet((e_dual,), (f_dual,))
    return ctx, fs, s_dual, rs_diff, f_dual, ef_diff


def verify_identity_sym(f: int, p: int, n: int, cross_check: bool = False) -> IdentityCheck:
    """Push two equal integrands down Fl_{f-p, e-p}(F, E) and compare
    with the closed staircase sum in F* and E* - F*:

      2^{-p}  * [Q-staircase sum over the (f-p) x n box on S*, R*-S*] * s_{rho_{p-1}}(S*)
      2^{f-2p} * [skew sum over T = (e-p, ..., n+1) on S*, R*-S*]    * s_{rho_{p-1}}(S*)
      == [Q-staircase sum over the (f-2p) x n box on F*, E*-F*].
    """
    e = f + n
    ctx, fs, s_dual, rs_diff, f_dual, ef_diff = _flag_model(f, p, n)
    mult = schur_s(staircase(p - 1), s_dual)
    member1 = staircase_schur_sum("Q", f - p, f - p, n, s_dual, rs_diff) * mult
    member1 = member1.scale(Fraction(1, 2**p))
    T = Partition(tuple(range(e - p, n, -1)))
    member2 = (skew_schur_sum(T, s_dual, rs_diff) * mult).scale(2 ** (f - 2 * p))
    lhs = flag_pushforward(member1, fs, ctx.ring)
    middle = flag_pushforward(member2, fs, ctx.ring)
    rhs = staircase_schur_sum("Q", f - 2 * p, f - 2 * p, n, f_dual, ef_diff)
    via = _identity_via_product("sym", f, p, n, ctx) if cross_check else None
    return IdentityCheck("sym", f, p, n, lhs, middle, rhs, via)


def verify_identity_skew(f: int, p: int, n: int, cross_check: bool = False) -> IdentityCheck:
    """Skew analogue of :func:`verify_identity_sym`:

      [P-staircase sum over the (f-p) x n box on S*, R*-S*] * s_{rho_p}(S*)
      [skew sum over T = (e-p-1, ..., n) on S*, R*-S*]      * s_{rho_p}(S*)
      == [P-staircase sum over the (f-2p) x n box on F*, E*-F*]

    with staircases rho_{f-p-1} and rho_{f-2p-1}.
    """
    e = f + n
    ctx, fs, s_dual, rs_diff, f_dual, ef_diff = _flag_model(f, p, n)
    mult = schur_s(staircase(p), s_dual)
    member1 = staircase_schur_sum("P", f - p - 1, f - p, n, s_dual, rs_diff) * mult
    T = Partition(tuple(range(e - p - 1, n - 1, -1)))
    member2 = skew_schur_sum(T, s_dual, rs_diff) * mult
    lhs = flag_pushforward(member1, fs, ctx.ring)
    middle = flag_pushforward(member2, fs, ctx.ring)
    rhs = staircase_schur_sum("P", f - 2 * p - 1, f - 2 * p, n, f_dual, ef_diff)
    via = _identity_via_product("skew", f, p, n, ctx) if cross_check else None
    return IdentityCheck("skew", f, p, n, lhs, middle, rhs, via)


def _identity_via_product(kind: str, f: int, p: int, n: int, ctx: ModelContext) -> Poly:
    """Evaluate the identity's left member through the product of
    Grassmannians G_{f-p}(F) x G_{e-p}(E) instead of the flag.

    The flag embeds in the product as the zero locus of S' -> E/R', so
    the push-forward picks up the factor c_top(S'* ⊗ E/R').  The result,
    a symmetric function pair in fresh alphabets, is mapped back onto
    the Chern roots of F and E.
    """
    e = f + n
    ring = Ring([("u", f), ("v", e)])
    u = ring.block("u")
    v = ring.block("v")
    s_dual = Alphabet(ring, u[: f - p], negated=True)
    r_dual = Alphabet(ring, v[: e - p], negated=True)
    rs_diff = VirtualAlphabet((r_dual,), (s_dual,))
    correction = tensor_sum_product(s_dual, Alphabet(ring, v[e - p :]))
    if kind == "sym":
        mult = schur_s(staircase(p - 1), s_dual)
        integrand = staircase_schur_sum("Q", f - p, f - p, n, s_dual, rs_diff) * mult
        integrand = integrand.scale(Fraction(1, 2**p))
    else:
        mult = schur_s(staircase(p), s_dual)
        integrand = staircase_schur_sum("P", f - p - 1, f - p, n, s_dual, rs_diff) * mult
    integrand = integrand * correction
    pushed = grassmann_pushforward(integrand, GrassmannSetup(ring, u[f - p :] + u[: f - p], p))
    pushed = grassmann_pushforward(pushed, GrassmannSetup(ring, v[e - p :] + v[: e - p], p))
    pairs = expand_schur_pair(pushed, Alphabet(ring, u), Alphabet(ring, v))
    total = ctx.ring.zero
    for (I, J), c in pairs.coeffs.items():
        total = total + (schur_s(I, ctx.F) * schur_s(J, ctx.E)).scale(c)
    return total
