"""Top Chern classes of tensor-type constructions, in closed form.

Each class has a closed-form expression in Schur S/Q/P polynomials and a
literal product-of-linear-forms oracle over the Chern roots; agreement of
the two is the main correctness check.

For a subbundle F of E (presented by a surjection model with kernel K),
``E v F`` denotes the rank f(f+1)/2 + fn bundle of "symmetrized pairs"
whose roots are the pairwise sums x_i + x_j (i <= j) of F-roots together
with the sums x_i + y_j of an F-root and a K-root; ``E ^ F`` is its
alternating cousin with i < j.
"""
from __future__ import annotations

from .alphabets import Alphabet, ModelContext
from .partitions import Partition, complement_conjugate, rectangle_partitions, staircase, subpartitions
from .polyring import Poly, product
from .schur import schur_p, schur_q, schur_s, schur_skew


def ctop_tensor(a: Alphabet, b: Alphabet) -> Poly:
    """c_top(A ⊗ B) = sum over I in the e x f box of s_I(A) s_{CĨ}(B)."""
    e, f = a.size, b.size
    total = a.ring.zero
    for I in rectangle_partitions(e, f):
        total = total + schur_s(I, a) * schur_s(complement_conjugate(I, f, e), b)
    return total


def staircase_schur_sum(kind: str, stair: int, rows: int, cols: int, a: Alphabet, d) -> Poly:
    """The recurring shape

        sum over I in the rows x cols box of
            [Q or P]_{rho_stair + I}(a) * s_{CĨ}(d)

    where CĨ is the complement of the conjugate inside the transposed
    box.  All closed-form classes here (E v F, E ^ F, the degeneracy
    classes and their push-forward identities) are instances.
    """
    qp = schur_q if kind == "Q" else schur_p
    rho = staircase(stair)
    total = a.ring.zero
    for I in rectangle_partitions(rows, cols):
        total = total + qp(rho.add(I), a) * schur_s(complement_conjugate(I, cols, rows), d)
    return total


def skew_schur_sum(T: Partition, a: Alphabet, d) -> Poly:
    """sum over J ⊂ T of s_{T/J}(a) * s_{J̃}(d)."""
    total = a.ring.zero
    for J in subpartitions(T):
        total = total + schur_skew(T, J, a) * schur_s(J.conjugate(), d)
    return total


def ctop_sym2(a: Alphabet) -> Poly:
    """c_top(S²A) = Q_{rho_e}(A) = 2^e s_{rho_e}(A)."""
    return schur_q(staircase(a.size), a)


def ctop_wedge2(a: Alphabet) -> Poly:
    """c_top(∧²A) = P_{rho_{e-1}}(A) = s_{rho_{e-1}}(A)."""
    return schur_p(staircase(a.size - 1), a)


def _require_split(ctx: ModelContext):
    if ctx.mode != "surjection":
        raise ValueError("this construction needs the surjection model (F ⊂ E)")


def ctop_vee(ctx: ModelContext) -> Poly:
    """c_top(E v F) = sum over I in the f x n box of
    Q_{rho_f + I}(F) * s_{CĨ}(E - F)."""
    return staircase_schur_sum("Q", ctx.f, ctx.f, ctx.n, ctx.F, ctx.e_minus_f())


def ctop_wedge(ctx: ModelContext) -> Poly:
    """c_top(E ^ F) = sum over I in the f x n box of
    P_{rho_{f-1} + I}(F) * s_{CĨ}(E - F)."""
    return staircase_schur_sum("P", ctx.f - 1, ctx.f, ctx.n, ctx.F, ctx.e_minus_f())


def ctop_vee_skew(ctx: ModelContext) -> Poly:
    """Skew-Schur form of c_top(E v F):
    2^f * sum over J ⊂ T of s_{T/J}(F) s_{J̃}(E - F), T = (e, ..., n+1)."""
    T = Partition(tuple(range(ctx.e, ctx.n, -1)))
    return skew_schur_sum(T, ctx.F, ctx.e_minus_f()).scale(2**ctx.f)


def ctop_wedge_skew(ctx: ModelContext) -> Poly:
    """Skew-Schur form of c_top(E ^ F):
    sum over J ⊂ T of s_{T/J}(F) s_{J̃}(E - F), T = (e-1, ..., n)."""
    T = Partition(tuple(range(ctx.e - 1, ctx.n - 1, -1)))
    return skew_schur_sum(T, ctx.F, ctx.e_minus_f())


def pair_sum_product(a: Alphabet, strict: bool) -> Poly:
    """Product of (a_i + a_j) over i < j (strict) or i <= j."""
    roots = a.roots()
    return product(
        a.ring,
        (
            roots[i] + roots[j]
            for i in range(len(roots))
            for j in range(i + 1 if strict else i, len(roots))
        ),
    )


def tensor_sum_product(a: Alphabet, b: Alphabet) -> Poly:
    """Product of (a_i + b_j) over all root pairs."""
    return product(a.ring, (x + y for x in a.roots() for y in b.roots()))


def ctop_product_oracle(ctx: ModelContext, kind: str) -> Poly:
    """Literal linear-factor product for c_top(E v F) or c_top(E ^ F) in
    the surjection model: the roots are x_i + x_j over F-root pairs
    (i <= j for "vee", i < j for "wedge") and x_i + y_j across F and K."""
    _require_split(ctx)
    if kind not in ("vee", "wedge"):
        raise ValueError(f"unknown kind {kind!r}")
    return pair_sum_product(ctx.F, kind == "wedge") * tensor_sum_product(ctx.F, ctx.K)
