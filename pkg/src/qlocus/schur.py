"""Schur S-, Q- and P-polynomials of alphabets, and expansions into them.

S-polynomials of (virtual) alphabets are Jacobi-Trudi determinants in
the complete symmetric functions.  Q-polynomials are built from the
one-row series by the classical Pfaffian-style recurrences:

* two rows, i > j:  Q_(i,j) = Q_i Q_j + 2 * sum_{p=1..j} (-1)^p Q_{i+p} Q_{j-p}
* odd length:       expansion with signs over (i_p, rest)
* even length >= 4: expansion with signs over the pairs (i_1, i_p)

and P_I is Q_I divided by 2^length, which is always exact.
"""
from __future__ import annotations

import os
import pickle
from fractions import Fraction

from .alphabets import Alphabet, _as_virtual, complete_sym, q_sym
from .partitions import Partition, subpartitions
from .polyring import SHIFT, Poly, Ring

# Optional on-disk memo of Q-polynomial coefficient tables, keyed by
# (alphabet size, partition) in a ring-independent form.
_persistent_q: dict | None = None
_CACHE_BASENAME = "qpoly-cache.pkl"


def load_persistent_cache(cache_dir: str) -> None:
    """Enable the on-disk Q-table cache; stale versions are discarded."""
    global _persistent_q
    from . import __version__

    _persistent_q = {}
    path = os.path.join(cache_dir, _CACHE_BASENAME)
    try:
        with open(path, "rb") as fh:
            blob = pickle.load(fh)
        if blob.get("version") == __version__:
            _persistent_q = blob["tables"]
    except (OSError, pickle.PickleError, KeyError, EOFError):
        pass


def save_persistent_cache(cache_dir: str) -> None:
    if _persistent_q is None:
        return
    from . import __version__

    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, _CACHE_BASENAME)
    with open(path, "wb") as fh:
        pickle.dump({"version": __version__, "tables": _persistent_q}, fh)


def _persistent_get(a: Alphabet, I: Partition) -> Poly | None:
    if _persistent_q is None:
        return None
    table = _persistent_q.get((a.size, I.parts))
    if table is None:
        return None
    ring = a.ring
    terms = {}
    for exps, c in table.items():
        key = 0
        for e, v in zip(exps, a.variables):
            key |= e << (SHIFT * v)
        terms[key] = c
    poly = Poly(ring, terms)
    return -poly if (a.negated and I.weight % 2) else poly


def _persistent_put(a: Alphabet, I: Partition, value: Poly) -> None:
    if _persistent_q is None:
        return
    ring = a.ring
    pos = {v: i for i, v in enumerate(a.variables)}
    table = {}
    sign = -1 if (a.negated and I.weight % 2) else 1
    for key, c in value.terms.items():
        exps = [0] * a.size
        for i, e in enumerate(ring.unpack(key)):
            if e:
                exps[pos[i]] = e
        table[tuple(exps)] = c * sign
    _persistent_q[(a.size, I.parts)] = table


def determinant(ring: Ring, rows: list[list[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials, expanded row by row
    over column subsets."""
    k = len(rows)
    if k == 0:
        return ring.one
    dp = {0: ring.one}
    for r in range(k):
        ndp: dict[int, Poly] = {}
        for mask, val in dp.items():
            for c in range(k):
                bit = 1 << c
                if mask & bit:
                    continue
                entry = rows[r][c]
                if entry.is_zero():
                    continue
                term = val * entry
                if bin(mask >> (c + 1)).count("1") & 1:  # inversions added
                    term = -term
                key = mask | bit
                acc = ndp.get(key)
                ndp[key] = term if acc is None else acc + term
        dp = ndp
        if not dp:
            return ring.zero
    return dp.get((1 << k) - 1, ring.zero)


def schur_s(I: Partition, v) -> Poly:
    """Jacobi-Trudi: det [ s_{i_p - p + q} ]_{1<=p,q<=length}."""
    v = _as_virtual(v)
    ring = v.ring
    key = ("s", v.sig(), I.parts)
    got = ring.qcache.get(key)
    if got is None:
        k = I.length
        rows = [
            [complete_sym(I.parts[p] - (p + 1) + (q + 1), v) for q in range(k)]
            for p in range(k)
        ]
        got = determinant(ring, rows)
        ring.qcache[key] = got
    return got


def schur_skew(lam: Partition, mu: Partition, v) -> Poly:
    """Skew S-polynomial det [ s_{lam_p - mu_q - p + q} ]; requires mu ⊂ lam."""
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    v = _as_virtual(v)
    ring = v.ring
    key = ("sk", v.sig(), lam.parts, mu.parts)
    got = ring.qcache.get(key)
    if got is None:
        k = lam.length
        rows = [
            [complete_sym(lam.part(p) - mu.part(q) - p + q, v) for q in range(1, k + 1)]
            for p in range(1, k + 1)
        ]
        got = determinant(ring, rows)
        ring.qcache[key] = got
    return got


def schur_q(I: Partition, a: Alphabet) -> Poly:
    """Q-polynomial of a strict partition on a genuine alphabet."""
    if not I.is_strict():
        raise ValueError(f"Q-polynomials are indexed by strict partitions, got {I}")
    ring = a.ring
    key = ("Q", a.sig(), I.parts)
    got = ring.qcache.get(key)
    if got is not None:
        return got
    got = _persistent_get(a, I)
    if got is not None:
        ring.qcache[key] = got
        return got
    k = I.length
    if k == 0:
        out = ring.one
    elif k == 1:
        out = q_sym(I.parts[0], a)
    elif k == 2:
        i, j = I.parts
        out = q_sym(i, a) * q_sym(j, a)
        for p in range(1, j + 1):
            term = q_sym(i + p, a) * q_sym(j - p, a)
            out = out + term.scale(2 if p % 2 == 0 else -2)
    elif k % 2 == 1:
        out = ring.zero
        for p in range(1, k + 1):
            term = q_sym(I.parts[p - 1], a) * schur_q(I.remove_part(p), a)
            out = out + (term if p % 2 == 1 else -term)
    else:
        out = ring.zero
        for p in range(2, k + 1):
            head = schur_q(Partition((I.parts[0], I.parts[p - 1])), a)
            rest = schur_q(Partition(I.parts[1 : p - 1] + I.parts[p:]), a)
            term = head * rest
            out = out + (term if p % 2 == 0 else -term)
    ring.qcache[key] = out
    _persistent_put(a, I, out)
    return out


def schur_p(I: Partition, a: Alphabet) -> Poly:
    """P-polynomial: Q_I / 2^length(I), an exact division."""
    out = schur_q(I, a).scale(Fraction(1, 2 ** I.length))
    if not out.is_integral():
        raise ArithmeticError(f"P-polynomial {I} came out non-integral")
    return out


# -- expansions -------------------------------------------------------


def _block_exponents(ring: Ring, key: int, variables: tuple[int, ...]) -> tuple[int, ...]:
    exps = ring.unpack(key)
    return tuple(exps[i] for i in variables)


def expand_schur_basis(P: Poly, a: Alphabet) -> dict[Partition, int | Fraction]:
    """Write a symmetric polynomial of one alphabet in the S-basis.

    Greedy elimination of the leading monomial: for symmetric input the
    leading exponent vector is a partition, and subtracting that
    S-polynomial strictly lowers the leading term.
    """
    ring = P.ring
    work = P
    out: dict[Partition, int | Fraction] = {}
    while not work.is_zero():
        lead = work.leading_key()
        exps = ring.unpack(lead)
        if any(exps[i] for i in range(ring.nvars) if i not in a.variables):
            raise ValueError("polynomial involves variables outside the alphabet")
        shape = _block_exponents(ring, lead, a.variables)
        if any(x < y for x, y in zip(shape, shape[1:])):
            raise ValueError("leading exponent is not a partition; input not symmetric?")
        lam = Partition(shape)
        c = work.terms[lead]
        out[lam] = c
        work = work - schur_s(lam, a).scale(c)
        if not work.is_zero() and ring.sort_key(work.leading_key()) >= ring.sort_key(lead):
            raise RuntimeError("expansion failed to make progress")
    return out


def expand_schur_pair(P: Poly, a: Alphabet, b: Alphabet) -> "SchurPairExpansion":
    """Write a polynomial symmetric in each of two disjoint alphabets as
    sum of coeff * s_I(a) * s_J(b), by greedy leading-term elimination."""
    ring = P.ring
    if set(a.variables) & set(b.variables):
        raise ValueError("alphabets overlap")
    work = P
    out: dict[tuple[Partition, Partition], int | Fraction] = {}
    while not work.is_zero():
        lead = work.leading_key()
        exps = ring.unpack(lead)
        outside = set(range(ring.nvars)) - set(a.variables) - set(b.variables)
        if any(exps[i] for i in outside):
            raise ValueError("polynomial involves variables outside both alphabets")
        sa = _block_exponents(ring, lead, a.variables)
        sb = _block_exponents(ring, lead, b.variables)
        for shape in (sa, sb):
            if any(x < y for x, y in zip(shape, shape[1:])):
                raise ValueError("leading exponent is not a partition pair; input not block-symmetric?")
        I, J = Partition(sa), Partition(sb)
        c = work.terms[lead]
        out[(I, J)] = c
        work = work - (schur_s(I, a) * schur_s(J, b)).scale(c)
        if not work.is_zero() and ring.sort_key(work.leading_key()) >= ring.sort_key(lead):
            raise RuntimeError("expansion failed to make progress")
    return SchurPairExpansion(out)


class SchurPairExpansion:
    """An integer (or rational) combination of products s_I(A) * s_J(B)."""

    def __init__(self, coeffs: dict):
        self.coeffs = {pair: c for pair, c in coeffs.items() if c}

    def __eq__(self, other):
        return isinstance(other, SchurPairExpansion) and self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    def scaled(self, c) -> "SchurPairExpansion":
        return SchurPairExpansion({p: v * c for p, v in self.coeffs.items()})

    def sorted_items(self):
        """Terms in decreasing (|I|+|J|, then lexicographic) order."""
        return sorted(
            self.coeffs.items(),
            key=lambda kv: (
                kv[0][0].weight + kv[0][1].weight,
                kv[0][0].parts,
                kv[0][1].parts,
            ),
            reverse=True,
        )

    def render(self, label_a: str = "F", label_b: str = "E") -> str:
        lines = []
        for (I, J), c in self.sorted_items():
            factors = [str(c)]
            if I.length:
                factors.append(f"s{I}({label_a})")
            if J.length:
                factors.append(f"s{J}({label_b})")
            lines.append(" * ".join(factors))
        return "\n".join(lines)

    def to_poly(self, a: Alphabet, b: Alphabet) -> Poly:
        ring = a.ring
        total = ring.zero
        for (I, J), c in self.coeffs.items():
            total = total + (schur_s(I, a) * schur_s(J, b)).scale(c)
        return total


def schur_difference_split(L: Partition, b: Alphabet, max_a_length: int | None = None):
    """Decompose s_L(A - B) without touching the alphabet A:

        s_L(A - B) = sum over mu ⊂ L of (-1)^{|L|-|mu|} s_mu(A) * s_{L~/mu~}(B)

    (~ denoting conjugates).  Returns a list of (mu, polynomial in B).
    Partitions mu longer than ``max_a_length`` are dropped, which is the
    vanishing of s_mu on an alphabet of that size.
    """
    Lc = L.conjugate()
    out = []
    for mu in subpartitions(L):
        if max_a_length is not None and mu.length > max_a_length:
            continue
        sign = -1 if (L.weight - mu.weight) % 2 else 1
        skew = schur_skew(Lc, mu.conjugate(), b)
        if not skew.is_zero():
            out.append((mu, skew.scale(sign)))
    return out
