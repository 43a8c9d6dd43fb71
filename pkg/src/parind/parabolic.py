"""Standard parabolic subgroups as subsets of the simple roots.

A :class:`ParabolicSet` is the set of simple roots of a standard parabolic
subgroup of some ambient standard Levi (given itself as a subset of the
simple roots; the whole group is the full set).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .errors import MixedAmbient
from .rootsys import RootSystem


@dataclass(frozen=True)
class ParabolicSet:
    rs: RootSystem = field(repr=False)
    members: frozenset
    ambient: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        object.__setattr__(self, "ambient", frozenset(self.ambient))
        if not self.members <= self.ambient:
            extra = self.rs.label_list(self.members - self.ambient)
            raise MixedAmbient(f"{extra} lie outside the ambient Levi {self.rs.label_list(self.ambient)}")
        if not self.ambient <= self.rs.delta:
            raise MixedAmbient("ambient Levi is not a subset of the simple roots")

    def __le__(self, other: "ParabolicSet") -> bool:
        _same_rs(self, other)
        return self.members <= other.members

    def __lt__(self, other: "ParabolicSet") -> bool:
        _same_rs(self, other)
        return self.members < other.members

    def __contains__(self, i) -> bool:
        return i in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    @property
    def is_full(self) -> bool:
        return self.members == self.ambient

    def labels(self) -> list:
        return self.rs.label_list(self.members)

    def retag(self, ambient: Iterable[int]) -> "ParabolicSet":
        return ParabolicSet(self.rs, self.members, frozenset(ambient))

    def __str__(self):
        return "{" + ",".join(self.labels()) + "}"

    def __repr__(self):
        return f"ParabolicSet({self}, ambient={{{','.join(self.rs.label_list(self.ambient))}}})"


def parabolic(rs: RootSystem, members: Iterable = (), ambient: Optional[Iterable] = None) -> ParabolicSet:
    """Build from labels (``"a1"``) or 0-based indices."""
    members = rs.indices(members)
    ambient = rs.delta if ambient is None else rs.indices(getattr(ambient, "members", ambient))
    return ParabolicSet(rs, members, ambient)


def _same_rs(a: ParabolicSet, b: ParabolicSet):
    if a.rs != b.rs:
        raise MixedAmbient("parabolic sets live in different root systems")


def _same_ambient(a: ParabolicSet, b: ParabolicSet):
    _same_rs(a, b)
    if a.ambient != b.ambient:
        raise MixedAmbient(f"ambient Levis differ: {a.rs.label_list(a.ambient)} vs "
                           f"{b.rs.label_list(b.ambient)}")


def meet(P: ParabolicSet, P1: ParabolicSet) -> ParabolicSet:
    _same_ambient(P, P1)
    return ParabolicSet(P.rs, P.members & P1.members, P.ambient)


def join(P: ParabolicSet, P1: ParabolicSet) -> ParabolicSet:
    _same_ambient(P, P1)
    return ParabolicSet(P.rs, P.members | P1.members, P.ambient)


def levi_intersection(P: ParabolicSet, M1: ParabolicSet) -> ParabolicSet:
    """P intersected with the Levi M1, as a standard parabolic of M1."""
    _same_rs(P, M1)
    return ParabolicSet(P.rs, P.members & M1.members, M1.members)


def all_subsets(s: Iterable[int]):
    """Subsets of ``s`` ordered by size, then lexicographically."""
    s = sorted(s)
    for k in range(len(s) + 1):
        for c in combinations(s, k):
            yield frozenset(c)


def between(lower: frozenset, upper: frozenset):
    """All sets X with lower <= X <= upper, in (size, lex) order."""
    for extra in all_subsets(upper - lower):
        yield lower | extra


def subset_key(s: Iterable[int]):
    s = sorted(s)
    return (len(s), s)
