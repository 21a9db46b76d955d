"""Alphabets of Chern roots and their generating series.

An :class:`Alphabet` is an ordered tuple of ring variables, optionally
with all signs flipped (the roots of a dual bundle).  A
:class:`VirtualAlphabet` is a formal difference of alphabets; only the
complete symmetric series is defined for it.

Two evaluation models are used everywhere:

* ``surjection`` — one variable block ``f`` for F and one block ``k``
  for the kernel K, with E presented as the concatenation F + K, so that
  s_i(E - F) is literally s_i(K);
* ``independent`` — separate blocks ``e`` and ``f`` with E - F a genuine
  virtual difference.
"""
from __future__ import annotations

from dataclasses import dataclass

from .polyring import Poly, Ring


@dataclass(frozen=True, eq=False)
class Alphabet:
    """An ordered set of Chern-root variables, possibly negated."""

    ring: Ring
    variables: tuple[int, ...]
    negated: bool = False

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("alphabet variables must be distinct")

    @property
    def size(self) -> int:
        return len(self.variables)

    def dual(self) -> "Alphabet":
        return Alphabet(self.ring, self.variables, not self.negated)

    def roots(self) -> list[Poly]:
        vs = [self.ring.variable(i) for i in self.variables]
        return [-v for v in vs] if self.negated else vs

    def sig(self) -> tuple:
        return ("A", self.variables, self.negated)


@dataclass(frozen=True, eq=False)
class VirtualAlphabet:
    """Formal difference (sum of ``pos``) - (sum of ``neg``)."""

    pos: tuple[Alphabet, ...]
    neg: tuple[Alphabet, ...] = ()

    @property
    def ring(self) -> Ring:
        return (self.pos + self.neg)[0].ring

    def dual(self) -> "VirtualAlphabet":
        return VirtualAlphabet(
            tuple(a.dual() for a in self.pos), tuple(a.dual() for a in self.neg)
        )

    def sig(self) -> tuple:
        return ("V", tuple(a.sig() for a in self.pos), tuple(a.sig() for a in self.neg))


def difference(a: Alphabet, b: Alphabet) -> VirtualAlphabet:
    return VirtualAlphabet((a,), (b,))


def _as_virtual(v) -> VirtualAlphabet:
    if isinstance(v, Alphabet):
        return VirtualAlphabet((v,))
    return v


def _complete_series(v: VirtualAlphabet, upto: int) -> list[Poly]:
    """Coefficients of the series prod 1/(1-a t) * prod (1-b t) up to t^upto."""
    ring = v.ring
    s = [ring.one] + [ring.zero] * upto
    for alph in v.pos:
        for a in alph.roots():
            for d in range(1, upto + 1):
                s[d] = s[d] + a * s[d - 1]
    for alph in v.neg:
        for b in alph.roots():
            for d in range(upto, 0, -1):
                s[d] = s[d] - b * s[d - 1]
    return s


def complete_sym(i: int, v) -> Poly:
    """s_i of an alphabet or virtual alphabet: the degree-i coefficient of
    the product of geometric series of the positive roots times the
    linear factors of the negative roots."""
    v = _as_virtual(v)
    ring = v.ring
    if i < 0:
        return ring.zero
    key = ("h", v.sig())
    series = ring.scache.get(key)
    if series is None or len(series) <= i:
        series = _complete_series(v, max(i, 8))
        ring.scache[key] = series
    return series[i]


def q_sym(i: int, a: Alphabet) -> Poly:
    """Degree-i coefficient of prod (1+a t)/(1-a t); the one-row Q-function.

    Only genuine alphabets are valid here: the series of a virtual
    difference is not a Q-function and is rejected.
    """
    if not isinstance(a, Alphabet):
        raise TypeError("Q-functions are defined for genuine alphabets only")
    ring = a.ring
    if i < 0:
        return ring.zero
    key = ("q", a.sig())
    series = ring.scache.get(key)
    if series is None or len(series) <= i:
        upto = max(i, 8)
        s = [ring.one] + [ring.zero] * upto
        for root in a.roots():
            for d in range(1, upto + 1):
                s[d] = s[d] + root * s[d - 1]
            for d in range(upto, 0, -1):
                s[d] = s[d] + root * s[d - 1]
        series = s
        ring.scache[key] = series
    return series[i]


class ModelContext:
    """A ring with the bundle alphabets of one evaluation model."""

    def __init__(self, mode: str, e: int, f: int):
        if mode not in ("surjection", "independent"):
            raise ValueError(f"unknown model {mode!r}")
        if not e >= f >= 0:
            raise ValueError(f"need e >= f >= 0, got e={e}, f={f}")
        self.mode = mode
        self.e = e
        self.f = f
        self.n = e - f
        if mode == "surjection":
            self.ring = Ring([("f", f), ("k", self.n)])
            fv = self.ring.block("f")
            kv = self.ring.block("k")
            self.F = Alphabet(self.ring, fv)
            self.K = Alphabet(self.ring, kv)
            self.E = Alphabet(self.ring, fv + kv)
        else:
            self.ring = Ring([("f", f), ("e", e)])
            self.F = Alphabet(self.ring, self.ring.block("f"))
            self.E = Alphabet(self.ring, self.ring.block("e"))
            self.K = None

    def e_minus_f(self):
        """The alphabet of E - F: the kernel block under a surjection,
        a virtual difference otherwise."""
        if self.mode == "surjection":
            return self.K
        return difference(self.E, self.F)

    def bundle(self, name: str):
        table = {"E": self.E, "F": self.F, "E-F": self.e_minus_f()}
        if self.mode == "surjection":
            table["K"] = self.K
        got = table.get(name)
        if got is None:
            raise KeyError(f"no bundle {name!r} in {self.mode} model")
        return got


def make_model(mode: str, e: int, f: int) -> ModelContext:
    return ModelContext(mode, e, f)
