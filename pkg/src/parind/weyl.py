"""Weyl group engine.

Elements are stored canonically as the permutation they induce on the full
root set; a reduced word (the lexicographically least one) rides along as a
readable witness.  Everything is enumerated up front, which is fine for the
desk-scale groups this package targets.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .errors import GroupTooLarge, InputError, InvalidNesting, WitnessMissing
from .rootsys import RootSystem, phi_split

DEFAULT_GROUP_BOUND = 10 ** 7
GUARD_ENV = "PARIND_GUARD_WEYL"


def group_bound() -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return DEFAULT_GROUP_BOUND
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{GUARD_ENV} must be an integer, got {raw!r}") from None


def weyl_order(rs: RootSystem) -> int:
    """|W| from the height distribution of the positive roots.

    The number of positive roots of height k equals the number of exponents
    that are >= k, and |W| is the product of (exponent + 1).
    """
    counts = Counter(sum(r) for r in rs.positive_roots)
    order = 1
    for k in sorted(counts):
        order *= (k + 1) ** (counts[k] - counts.get(k + 1, 0))
    return order


@dataclass(frozen=True, eq=False)
class WeylElement:
    perm: tuple
    word: tuple
    group: "WeylGroup" = field(repr=False)
    idx: int = field(default=-1, repr=False)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.mul(self, other)

    def __str__(self):
        return format_word(self.word)

    def __repr__(self):
        return f"WeylElement({format_word(self.word)})"

    @property
    def length(self) -> int:
        return len(self.word)

    def inverse(self) -> "WeylElement":
        return self.group.inverse(self)

    def act(self, k: int) -> int:
        """Image of the root with index ``k``."""
        return self.perm[k]

    def __call__(self, r):
        rs = self.group.rs
        return rs.roots[self.perm[rs.root_index(r)]]

    def inversions(self) -> int:
        npos = self.group.rs.npos
        return sum(1 for k in range(npos) if self.perm[k] >= npos)


def format_word(word) -> str:
    return "*".join(f"s{i + 1}" for i in word) if word else "e"


class WeylGroup:
    """All of W, in (length, lexicographic word) order."""

    def __init__(self, rs: RootSystem, bound: Optional[int] = None):
        if bound is None:
            bound = group_bound()
        order = weyl_order(rs)
        if order > bound:
            raise GroupTooLarge(f"|W| = {order} exceeds the group-size guard {bound}")
        self.rs = rs
        n = len(rs.roots)
        tables = rs.tables
        ident = tuple(range(n))
        perms = [ident]
        words = [()]
        seen = {ident: 0}
        level = [0]
        while level:
            nxt = []
            for e in level:
                p, wd = perms[e], words[e]
                for i, t in enumerate(tables):
                    q = tuple(p[t[k]] for k in range(n))
                    if q not in seen:
                        seen[q] = len(perms)
                        perms.append(q)
                        words.append(wd + (i,))
                        nxt.append(seen[q])
            level = nxt
        self._index = seen
        self.elements = [WeylElement(p, w, self, k) for k, (p, w) in enumerate(zip(perms, words))]
        self._inv = []
        for p in perms:
            inv = [0] * n
            for k, v in enumerate(p):
                inv[v] = k
            self._inv.append(seen[tuple(inv)])
        self._bruhat = {}
        self._subgroups = {}
        self._gens = [self.from_perm(t) for t in tables]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def generators(self) -> list:
        return list(self._gens)

    def from_perm(self, perm) -> WeylElement:
        return self.elements[self._index[tuple(perm)]]

    def element(self, word) -> WeylElement:
        """Element from a word: a string like ``"s1*s2"``/``"e"`` or a list of 0-based indices."""
        if isinstance(word, str):
            word = parse_word(word, self.rs.rank)
        w = self.identity
        for i in word:
            w = self.mul(w, self._gens[i])
        return w

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        pa, pb = a.perm, b.perm
        return self.elements[self._index[tuple(pa[k] for k in pb)]]

    def inverse(self, a: WeylElement) -> WeylElement:
        return self.elements[self._inv[a.idx]]

    def is_left_descent(self, i: int, w: WeylElement) -> bool:
        # s_i w < w  iff  w^{-1}(a_i) < 0
        return self.elements[self._inv[w.idx]].perm[i] >= self.rs.npos

    def is_right_descent(self, w: WeylElement, i: int) -> bool:
        return w.perm[i] >= self.rs.npos

    def left_mul(self, i: int, w: WeylElement) -> WeylElement:
        t = self.rs.tables[i]
        return self.elements[self._index[tuple(t[k] for k in w.perm)]]

    def subgroup(self, J: Iterable[int]) -> tuple:
        """Elements of the standard parabolic subgroup W_J, in group order."""
        J = frozenset(getattr(J, "members", J))
        if J not in self._subgroups:
            gens = [self._gens[j] for j in sorted(J)]
            seen = {self.identity.idx}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in gens:
                        v = self.mul(w, g)
                        if v.idx not in seen:
                            seen.add(v.idx)
                            nxt.append(v)
                frontier = nxt
            self._subgroups[J] = tuple(self.elements[k] for k in sorted(seen))
        return self._subgroups[J]

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        """Bruhat comparison by the lifting property.

        With s a left descent of w: if s is also a left descent of u then
        u <= w iff su <= sw, otherwise u <= w iff u <= sw.
        """
        key = (u.idx, w.idx)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        if u.idx == w.idx:
            res = True
        elif u.length >= w.length:
            res = False
        else:
            s = next(i for i in range(self.rs.rank) if self.is_left_descent(i, w))
            sw = self.left_mul(s, w)
            if self.is_left_descent(s, u):
                res = self.bruhat_leq(self.left_mul(s, u), sw)
            else:
                res = self.bruhat_leq(u, sw)
        self._bruhat[key] = res
        return res


def parse_word(text: str, rank: int) -> tuple:
    text = text.strip()
    if text in ("e", "1", ""):
        return ()
    out = []
    for tok in text.split("*"):
        tok = tok.strip()
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise InputError(f"cannot parse Weyl word token {tok!r}")
        i = int(tok[1:]) - 1
        if not 0 <= i < rank:
            raise InputError(f"generator {tok} out of range for rank {rank}")
        out.append(i)
    return tuple(out)


@lru_cache(maxsize=64)
def _cached_group(rs: RootSystem, bound: int) -> WeylGroup:
    return WeylGroup(rs, bound)


def generate_weyl(rs: RootSystem, bound: Optional[int] = None) -> WeylGroup:
    return _cached_group(rs, group_bound() if bound is None else bound)


def _set(s) -> frozenset:
    return frozenset(getattr(s, "members", s))


def longest_element(rs: RootSystem, J=None) -> WeylElement:
    W = generate_weyl(rs)
    J = rs.delta if J is None else _set(J)
    return max(W.subgroup(J), key=lambda w: (w.length, w.idx))


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    return u.group.bruhat_leq(u, w)


@dataclass(frozen=True)
class CosetRepSet:
    delta_q: frozenset
    reps: tuple

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __contains__(self, w):
        return w in self.reps


def is_min_left_coset_rep(w: WeylElement, Q) -> bool:
    """w is minimal in W_Q w, i.e. w^{-1}(a) > 0 for every a in Q."""
    W = w.group
    return not any(W.is_left_descent(i, w) for i in _set(Q))


def is_min_right_coset_rep(w: WeylElement, J) -> bool:
    return not any(w.group.is_right_descent(w, j) for j in _set(J))


def min_coset_reps(rs: RootSystem, Q) -> CosetRepSet:
    Q = _set(Q)
    W = generate_weyl(rs)
    return CosetRepSet(Q, tuple(w for w in W if is_min_left_coset_rep(w, Q)))


def double_coset_reps(rs: RootSystem, I, J) -> list:
    """Minimal representatives of W_I \\ W / W_J, longest first, identity last.

    Every prefix of the returned list is an upper set in Bruhat order, so the
    corresponding unions of (P, P_1)-double cosets are open.
    """
    I, J = _set(I), _set(J)
    W = generate_weyl(rs)
    reps = [w for w in W if is_min_left_coset_rep(w, I) and is_min_right_coset_rep(w, J)]
    reps.sort(key=lambda w: (-w.length, w.word))
    return reps


def product_set(rs: RootSystem, M, M1) -> frozenset:
    """The set W_M * W_M1, by enumeration."""
    W = generate_weyl(rs)
    return frozenset(a * b for a in W.subgroup(_set(M)) for b in W.subgroup(_set(M1)))


def separating_root(rs: RootSystem, M, M1, w: WeylElement, products=None):
    """A positive root b outside the Levi of M1 with w(b) in -Phi_N.

    Returns ``None`` when w lies in W_M W_M1.  For any other w such a root
    always exists; the smallest one in root order is returned.  Raises
    ``WitnessMissing`` if the search fails.
    """
    M, M1 = _set(M), _set(M1)
    if products is None:
        products = product_set(rs, M, M1)
    if w in products:
        return None
    _, phi_n = phi_split(rs, M)
    _, phi_n1 = phi_split(rs, M1)
    phi_n = frozenset(phi_n)
    for b in phi_n1:
        img = w.perm[b]
        if not rs.is_positive(img) and rs.negate(img) in phi_n:
            return rs.roots[b]
    raise WitnessMissing(f"no separating root for w={w} with M={sorted(M)}, M1={sorted(M1)}")


def check_separating_root(rs: RootSystem, M, M1, w: WeylElement, beta) -> bool:
    """Independent re-check that ``beta`` is a positive root off M1 with w(beta) in -Phi_N."""
    M, M1 = _set(M), _set(M1)
    beta = tuple(beta)
    if not all(c >= 0 for c in beta) or rs.support(beta) <= M1:
        return False
    image = w(beta)
    if not all(c <= 0 for c in image):
        return False
    return not rs.support(image) <= M


def filtration_cells(rs: RootSystem, Q, Q1) -> list:
    """Walk ^QW removing a Bruhat-minimal element at each step.

    Returns ``(w_A, contributes)`` pairs where ``contributes`` says whether
    w_A is also minimal in its W_Q1 coset.  The remaining elements after any
    prefix form an upper set.
    """
    Q, Q1 = _set(Q), _set(Q1)
    if not Q <= Q1:
        raise InvalidNesting(f"{sorted(Q)} is not contained in {sorted(Q1)}")
    reps = min_coset_reps(rs, Q).reps
    return [(w, is_min_left_coset_rep(w, Q1)) for w in reps]
