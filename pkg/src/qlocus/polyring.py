"""Exact sparse multivariate polynomials over the rationals.

Variables live in named blocks declared once per :class:`Ring` (one ring
per computation).  A monomial is stored as a single integer with six bits
per variable, so multiplying monomials is integer addition; coefficients
are Python ints, silently widened to :class:`fractions.Fraction` when a
division forces it and narrowed back once the denominator clears.

The term order everywhere (leading terms, canonical rendering, exact
division) is graded reverse lexicographic with respect to the global
variable order, larger degrees first.
"""
from __future__ import annotations

import heapq
from fractions import Fraction

SHIFT = 6                 # bits per exponent field
MAX_EXP = (1 << SHIFT) - 1  # 63; enough for every computation done here


class NonDivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _norm(c):
    """Collapse Fractions with unit denominator back to int."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Ring:
    """An ordered family of variable blocks, e.g. ``[("f", 3), ("k", 1)]``.

    Blocks of size one render as the bare block name (``h``); larger
    blocks append a 1-based index (``f1``, ``f2``, ...).
    """

    def __init__(self, blocks):
        self.blocks: dict[str, tuple[int, ...]] = {}
        self.names: list[str] = []
        pos = 0
        for name, size in blocks:
            if name in self.blocks:
                raise ValueError(f"duplicate block {name!r}")
            if size < 0:
                raise ValueError("block size must be nonnegative")
            self.blocks[name] = tuple(range(pos, pos + size))
            if size == 1:
                self.names.append(name)
            else:
                self.names.extend(f"{name}{i + 1}" for i in range(size))
            pos += size
        self.nvars = pos
        self.zero = Poly(self, {})
        self.one = Poly(self, {0: 1})
        self._vcache = [Poly(self, {1 << (SHIFT * i): 1}) for i in range(pos)]
        self.qcache: dict = {}   # schur_q memo, keyed elsewhere
        self.scache: dict = {}   # complete-sym series memo

    def block(self, name: str) -> tuple[int, ...]:
        return self.blocks[name]

    def variable(self, i: int) -> "Poly":
        return self._vcache[i]

    def const(self, c) -> "Poly":
        c = _norm(c)
        return Poly(self, {0: c} if c else {})

    def poly(self, terms: dict) -> "Poly":
        """Canonicalize a raw {packed key: coefficient} mapping."""
        return Poly(self, {k: _norm(c) for k, c in terms.items() if c})

    def monomial(self, exps, c=1) -> "Poly":
        """Monomial from a full-length exponent sequence."""
        return self.poly({self.pack(exps): c})

    # -- packed-key helpers -------------------------------------------

    def pack(self, exps) -> int:
        k = 0
        for i, e in enumerate(exps):
            if not 0 <= e <= MAX_EXP:
                raise OverflowError(f"exponent {e} out of range")
            k |= e << (SHIFT * i)
        return k

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> (SHIFT * i)) & MAX_EXP for i in range(self.nvars))

    def key_degree(self, key: int) -> int:
        d = 0
        while key:
            d += key & MAX_EXP
            key >>= SHIFT
        return d

    def _invkey(self, key: int):
        """Heap key: grevlex-larger monomials compare smaller."""
        e = self.unpack(key)
        return (-sum(e), e[::-1])

    def sort_key(self, key: int):
        """Grevlex sort key; sort descending to get the canonical order."""
        e = self.unpack(key)
        return (sum(e), tuple(-x for x in reversed(e)))


class Poly:
    """Sparse polynomial; ``terms`` maps packed monomial keys to nonzero
    int or Fraction coefficients.  Instances are treated as immutable."""

    __slots__ = ("ring", "terms", "_deg")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._deg = None

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(not isinstance(c, Fraction) for c in self.terms.values())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return isinstance(other, Poly) and self.ring is other.ring and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = _norm(c)
        if not c:
            return self.ring.zero
        return Poly(self.ring, {k: _norm(v * c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.total_degree() + other.total_degree() > MAX_EXP:
            raise OverflowError("product degree exceeds the packed-exponent bound")
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                v = get(k, 0) + ca * cb
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Poly(self.ring, {k: _norm(c) for k, c in out.items()} if out else out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure -----------------------------------------------------

    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        if self._deg is None:
            kd = self.ring.key_degree
            self._deg = max((kd(k) for k in self.terms), default=-1)
        return self._deg

    def leading_key(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=self.ring.sort_key)

    def coefficient_of(self, var: int, power: int) -> "Poly":
        """Coefficient of ``var**power`` as a polynomial in the remaining
        variables."""
        shift = SHIFT * var
        out = {}
        for k, c in self.terms.items():
            if (k >> shift) & MAX_EXP == power:
                out[k - (power << shift)] = c
        return Poly(self.ring, out)

    def total_degree_component(self, d: int) -> "Poly":
        kd = self.ring.key_degree
        return Poly(self.ring, {k: c for k, c in self.terms.items() if kd(k) == d})

    def constant(self):
        """The coefficient of the constant monomial."""
        return self.terms.get(0, 0)

    # -- rendering -----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        keys = sorted(self.terms, key=ring.sort_key, reverse=True)
        pieces = []
        for k in keys:
            c = self.terms[k]
            exps = ring.unpack(k)
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(ring.names[i])
                elif e > 1:
                    factors.append(f"{ring.names[i]}^{e}")
            mono = "*".join(factors)
            ac = -c if c < 0 else c
            if not mono:
                body = str(ac)
            elif ac == 1:
                body = mono
            else:
                body = f"{ac}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self):
        s = str(self)
        return f"<Poly {s if len(s) <= 60 else s[:57] + '...'}>"


def exact_div(num: Poly, den: Poly) -> Poly:
    """Exact quotient ``num / den``; raises NonDivisibleError if ``den``
    does not divide ``num``.

    Standard leading-term elimination in grevlex order with a lazy-deletion
    heap; since an exact quotient exists iff every intermediate leading
    term is divisible by the leading term of ``den``, no full reduction is
    needed.
    """
    ring = num.ring
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ring.zero
    dk = den.leading_key()
    dc = den.terms[dk]
    dexp = ring.unpack(dk)
    work = dict(num.terms)
    invkey = ring._invkey
    heap = [(invkey(k), k) for k in work]
    heapq.heapify(heap)
    unpack = ring.unpack
    dterms = list(den.terms.items())
    quotient: dict = {}
    while heap:
        _, k = heapq.heappop(heap)
        c = work.get(k)
        if not c:
            continue
        ke = unpack(k)
        if any(a < b for a, b in zip(ke, dexp)):
            raise NonDivisibleError("leading term not divisible")
        qc = _norm(Fraction(c) / dc) if (isinstance(c, Fraction) or isinstance(dc, Fraction) or c % dc) else c // dc
        diff = k - dk
        quotient[diff] = qc
        for k2, c2 in dterms:
            kk = k2 + diff
            old = work.get(kk)
            if old is None:
                work[kk] = -qc * c2
                heapq.heappush(heap, (invkey(kk), kk))
            else:
                v = old - qc * c2
                if v:
                    work[kk] = v
                else:
                    del work[kk]
    if any(work.values()):
        raise NonDivisibleError("nonzero remainder")
    return ring.poly(quotient)


def apply_permutation(P: Poly, perm) -> Poly:
    """Relabel variables: exponent of variable i moves to ``perm[i]``.

    ``perm`` is a full-length bijection of variable positions.
    """
    ring = P.ring
    if sorted(perm) != list(range(ring.nvars)):
        raise ValueError("not a permutation of the variables")
    shifts = [SHIFT * p for p in perm]
    out = {}
    for k, c in P.terms.items():
        nk = 0
        i = 0
        while k:
            e = k & MAX_EXP
            if e:
                nk |= e << shifts[i]
            k >>= SHIFT
            i += 1
        out[nk] = c
    return Poly(ring, out)


def apply_substitution(P: Poly, mapping: dict, target: Ring | None = None) -> Poly:
    """Substitute polynomials for variables.

    ``mapping`` sends variable positions of ``P.ring`` to polynomials in
    ``target`` (default: the same ring).  Unmapped variables are carried
    over unchanged, which requires ``target`` to be the source ring.
    """
    ring = P.ring
    if target is None:
        target = ring
    powers: dict[tuple[int, int], Poly] = {}

    def power(i: int, e: int) -> Poly:
        got = powers.get((i, e))
        if got is None:
            got = mapping[i] ** e
            powers[(i, e)] = got
        return got

    total = target.zero
    for k, c in P.terms.items():
        exps = ring.unpack(k)
        carried = 0
        piece = None
        for i, e in enumerate(exps):
            if not e:
                continue
            if i in mapping:
                piece = power(i, e) if piece is None else piece * power(i, e)
            else:
                if target is not ring:
                    raise ValueError(f"variable {ring.names[i]} has no image")
                carried |= e << (SHIFT * i)
        term = Poly(target, {carried: c})
        total = total + (term if piece is None else term * piece)
    return total


def is_symmetric(P: Poly, variables) -> bool:
    """True when ``P`` is invariant under all permutations of the listed
    variables (checked on adjacent transpositions)."""
    variables = list(variables)
    n = P.ring.nvars
    for a, b in zip(variables, variables[1:]):
        perm = list(range(n))
        perm[a], perm[b] = perm[b], perm[a]
        if apply_permutation(P, perm).terms != P.terms:
            return False
    return True


def product(ring: Ring, factors) -> Poly:
    """Product of an iterable of polynomials (1 for the empty product)."""
    result = ring.one
    for f in factors:
        result = result * f
    return result
