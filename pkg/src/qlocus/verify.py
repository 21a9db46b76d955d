"""Named verification suites: every identity the library implements,
checked by brute-force polynomial arithmetic over bounded rank ranges.

Each case is exact — a polynomial identity either holds or it does not —
so a suite returns a flat list of :class:`CaseResult` and the CLI turns
them into ``CASE <name> <params> : PASS/FAIL`` lines.
"""
from __future__ import annotations

from dataclasses import dataclass

from .alphabets import Alphabet, VirtualAlphabet, difference, make_model
from .chern import (
    ctop_product_oracle,
    ctop_sym2,
    ctop_tensor,
    ctop_vee,
    ctop_vee_skew,
    ctop_wedge,
    ctop_wedge2,
    ctop_wedge_skew,
    pair_sum_product,
    tensor_sum_product,
)
from .gysin import (
    GrassmannSetup,
    grassmann_pushforward,
    verify_pushforward_coefficient,
    verify_pushforward_special,
)
from .locus import (
    LocusProblem,
    class_of,
    class_schur_pair_expansion,
    class_via_mnemonic,
    class_via_pushforward,
    expression_to_poly,
    projective_degree,
    verify_identity_skew,
    verify_identity_sym,
)
from .partitions import Partition, rectangle, staircase, strict_partitions_bounded
from .polyring import Ring, product
from .schur import expand_schur_pair, schur_p, schur_q, schur_s


@dataclass(frozen=True)
class CaseResult:
    name: str
    params: str
    ok: bool

    def render(self) -> str:
        return f"CASE {self.name} {self.params} : {'PASS' if self.ok else 'FAIL'}"


def suite_schur(max_n: int = 4) -> list[CaseResult]:
    out = []
    # resultant: s_{(m)^n}(A - B) = prod (a_i - b_j)
    for n in range(1, max_n):
        for m in range(1, max_n):
            ring = Ring([("a", n), ("b", m)])
            A = Alphabet(ring, ring.block("a"))
            B = Alphabet(ring, ring.block("b"))
            lhs = schur_s(rectangle(n, m), difference(A, B))
            rhs = product(ring, (x - y for x in A.roots() for y in B.roots()))
            out.append(CaseResult("schur.resultant", f"n={n} m={m}", lhs == rhs))
    # Q/P staircase products
    for n in range(1, max_n + 1):
        ring = Ring([("a", n)])
        A = Alphabet(ring, ring.block("a"))
        pq = pair_sum_product(A, strict=False)
        ok = schur_q(staircase(n), A) == pq and pq == schur_s(staircase(n), A).scale(2**n)
        out.append(CaseResult("schur.q-staircase", f"n={n}", ok))
        pp = pair_sum_product(A, strict=True)
        ok = schur_p(staircase(n - 1), A) == pp and pp == schur_s(staircase(n - 1), A)
        out.append(CaseResult("schur.p-staircase", f"n={n}", ok))
    # rectangle factorization: s_{(m)^n + I}(A - B) = s_{(m)^n}(A - B) s_I(A)
    for n, m, I in [(2, 2, Partition((2, 1))), (3, 1, Partition((2, 2))), (2, 3, Partition((3,)))]:
        ring = Ring([("a", n), ("b", m)])
        A = Alphabet(ring, ring.block("a"))
        d = difference(A, Alphabet(ring, ring.block("b")))
        lhs = schur_s(rectangle(n, m).add(I), d)
        rhs = schur_s(rectangle(n, m), d) * schur_s(I, A)
        out.append(CaseResult("schur.rect-factor", f"n={n} m={m} I={I}", lhs == rhs))
    # staircase factorization on a rank-k alphabet:
    # Q_{rho_k + I}(A) = Q_{rho_k}(A) s_I(A) for l(I) <= k (the Q-version
    # needs the staircase length to match the rank; one row longer, both
    # sides vanish)
    for k in range(1, max_n):
        ring = Ring([("a", k)])
        A = Alphabet(ring, ring.block("a"))
        base = schur_q(staircase(k), A)
        for I in [Partition((1,)), Partition((2, 1)), Partition((2, 2)), Partition((3, 1, 1))]:
            if I.length > k:
                continue
            lhs = schur_q(staircase(k).add(I), A)
            out.append(
                CaseResult("schur.stair-factor", f"k={k} I={I}", lhs == base * schur_s(I, A))
            )
        J = Partition((1,) * (k + 1))
        ok = schur_q(staircase(k).add(J), A).is_zero() and schur_s(J, A).is_zero()
        out.append(CaseResult("schur.stair-factor-vanish", f"k={k}", ok))
    return out


def suite_chern(max_f: int = 3, max_n: int = 2) -> list[CaseResult]:
    out = []
    for f in range(1, max_f + 1):
        for n in range(0, max_n + 1):
            ctx = make_model("surjection", f + n, f)
            for kind, closed, skewform in (
                ("vee", ctop_vee, ctop_vee_skew),
                ("wedge", ctop_wedge, ctop_wedge_skew),
            ):
                oracle = ctop_product_oracle(ctx, kind)
                ok = closed(ctx) == oracle and skewform(ctx) == oracle
                out.append(CaseResult(f"chern.{kind}-threeway", f"f={f} n={n}", ok))
    for e, fr in [(2, 2), (3, 2), (3, 3)]:
        ring = Ring([("a", e), ("b", fr)])
        A = Alphabet(ring, ring.block("a"))
        B = Alphabet(ring, ring.block("b"))
        ok = ctop_tensor(A, B) == tensor_sum_product(A, B)
        out.append(CaseResult("chern.tensor", f"e={e} f={fr}", ok))
    for e in range(1, max_f + 2):
        ring = Ring([("a", e)])
        A = Alphabet(ring, ring.block("a"))
        ok = ctop_sym2(A) == pair_sum_product(A, strict=False)
        ok = ok and ctop_wedge2(A) == pair_sum_product(A, strict=True)
        out.append(CaseResult("chern.square", f"e={e}", ok))
    return out


def suite_gysin(max_e: int = 5, max_weight: int = 5) -> list[CaseResult]:
    out = []
    for e in range(1, max_e + 1):
        for q in range(0, e + 1):
            for I in strict_partitions_bounded(max_weight, q, max_weight):
                chk = verify_pushforward_coefficient(I, e, q)
                out.append(
                    CaseResult("gysin.pushforward", f"e={e} q={q} I={I} d={chk.d}", chk.ok)
                )
    for e in range(1, max_e + 1):
        for q in range(1, e + 1):
            for I in strict_partitions_bounded(6, q, 6):
                if I.length not in (q, q - 1) or I.length == 0:
                    continue
                applicable, ok = verify_pushforward_special(e, q, I)
                if applicable:
                    out.append(CaseResult("gysin.boundary", f"e={e} q={q} I={I}", ok))
    # linearity and the projection formula on a fixed instance
    ring = Ring([("a", 3)])
    a0, a1, a2 = (ring.variable(i) for i in range(3))
    setup = GrassmannSetup(ring, (0, 1, 2), 1)
    P, Q = a0**3, a0 * (a1 + a2)
    lin = grassmann_pushforward(P.scale(3) - Q.scale(2), setup) == grassmann_pushforward(
        P, setup
    ).scale(3) - grassmann_pushforward(Q, setup).scale(2)
    out.append(CaseResult("gysin.linearity", "e=3 q=1", lin))
    sym_factor = (a0 + a1 + a2) ** 2
    proj = grassmann_pushforward(P * sym_factor, setup) == grassmann_pushforward(
        P, setup
    ) * sym_factor
    out.append(CaseResult("gysin.projection-formula", "e=3 q=1", proj))
    return out


def suite_locus(max_e: int = 4) -> list[CaseResult]:
    out = []
    worked = {
        (4, 3, 2, "sym"): "Q[2](F) + Q[1](F)*s[1](E-F)",
        (5, 3, 2, "sym"): "Q[3](F) + Q[2](F)*s[1](E-F) + Q[1](F)*s[1,1](E-F)",
        (4, 3, 2, "skew"): "P[1](F) + s[1](E-F)",
        (5, 3, 2, "skew"): "P[2](F) + P[1](F)*s[1](E-F) + s[1,1](E-F)",
        (5, 4, 2, "skew"): "P[2,1](F) + P[2](F)*s[1](E-F) + P[1](F)*s[2](E-F)",
        (4, 2, 1, "skew"): "P[2](F) + P[1](F)*s[1](E-F)",
    }
    for (e, f, r, sym), want in worked.items():
        got = str(class_of(LocusProblem(e, f, r, sym)))
        out.append(CaseResult("locus.example", f"e={e} f={f} r={r} {sym}", got == want))
    for e in range(1, max_e + 1):
        for f in range(1, e + 1):
            for r in range(0, f + 1):
                for sym in ("sym", "skew"):
                    if sym == "skew" and e == f and r % 2:
                        continue
                    prob = LocusProblem(e, f, r, sym)
                    params = f"e={e} f={f} r={r} {sym}"
                    if not (sym == "skew" and r % 2):
                        ok = class_of(prob).term_set() == class_via_mnemonic(prob).term_set()
                        out.append(CaseResult("locus.mnemonic", params, ok))
                    ctx = make_model("surjection", e, f)
                    direct = expression_to_poly(class_of(prob), ctx)
                    pushed = class_via_pushforward(prob, ctx)
                    out.append(CaseResult("locus.pushforward", params, direct == pushed))
    # Porteous: r = f-1 gives s_{e-f+1}(F - E*)
    for e in range(1, max_e + 1):
        for f in range(1, e + 1):
            ctx = make_model("surjection", e, f)
            got = expression_to_poly(class_of(LocusProblem(e, f, f - 1, "sym")), ctx)
            want = schur_s(Partition((e - f + 1,)), VirtualAlphabet((ctx.F,), (ctx.E.dual(),)))
            out.append(CaseResult("locus.porteous", f"e={e} f={f} r={f-1}", got == want))
    # Pfaffian loci: skew, n = 1, r even: s_{rho_{e-r-1}}(E)
    for e, f, r in [(3, 2, 0), (5, 4, 2)]:
        ctx = make_model("surjection", e, f)
        got = expression_to_poly(class_of(LocusProblem(e, f, r, "skew")), ctx)
        out.append(
            CaseResult("locus.pfaffian", f"e={e} f={f} r={r}", got == schur_s(staircase(e - r - 1), ctx.E))
        )
    # projective degrees of the classical examples
    degree_table = [
        ((1, 1, 1, 1), (1, 1, 1), 2, "skew", 1, 4),
        ((1, 1, 1, 1, 1), (1, 1, 1), 2, "skew", 2, 16),
        ((1, 1, 1), (1, 1), 1, "skew", 1, 2),
        ((1, 1, 1, 1), (1, 1), 1, "skew", 2, 8),
    ]
    for et, ft, r, sym, c_want, d_want in degree_table:
        got = projective_degree(et, ft, r, sym)
        out.append(
            CaseResult("locus.degree", f"e={len(et)} f={len(ft)} r={r} {sym}", got == (c_want, d_want))
        )
    # Schur-pair expansion against the literal two-alphabet greedy
    for e, f, r, sym in [(4, 3, 2, "sym"), (5, 4, 2, "skew"), (5, 3, 1, "skew")]:
        prob = LocusProblem(e, f, r, sym)
        ctx = make_model("independent", e, f)
        fast = class_schur_pair_expansion(prob)
        lit = expand_schur_pair(expression_to_poly(class_of(prob), ctx), ctx.F, ctx.E)
        out.append(CaseResult("locus.schur-pair", f"e={e} f={f} r={r} {sym}", fast == lit))
    return out


def suite_identities(max_f: int = 4, max_p: int = 1, max_n: int = 1) -> list[CaseResult]:
    out = []
    for f in range(1, max_f + 1):
        for p in range(0, max_p + 1):
            if 2 * p >= f:
                continue
            for n in range(0, max_n + 1):
                chk = verify_identity_sym(f, p, n)
                out.append(CaseResult("identity.sym", f"f={f} p={p} n={n}", chk.ok))
                chk = verify_identity_skew(f, p, n)
                out.append(CaseResult("identity.skew", f"f={f} p={p} n={n}", chk.ok))
    return out


SUITES = {
    "schur": suite_schur,
    "chern": suite_chern,
    "gysin": suite_gysin,
    "locus": suite_locus,
    "identities": suite_identities,
}


def run_suites(names, **bounds) -> list[CaseResult]:
    """Run the named suites with any applicable bound overrides.

    Recognized bounds: max_e, max_f, max_n, max_p, max_weight; each suite
    picks up the ones it understands.
    """
    accepted = {
        "schur": {"max_n"},
        "chern": {"max_f", "max_n"},
        "gysin": {"max_e", "max_weight"},
        "locus": {"max_e"},
        "identities": {"max_f", "max_p", "max_n"},
    }
    out = []
    for name in names:
        fn = SUITES[name]
        kw = {k: v for k, v in bounds.items() if v is not None and k in accepted[name]}
        out.extend(fn(**kw))
    return out
