"""Upper sets of a Boolean lattice and their Hasse diagram.

Subsets of the ground set are handled as bitmasks internally; families are
returned as frozensets of frozensets of ground elements.
"""
from __future__ import annotations

from .errors import UpsetGuard

UPSET_GUARD = 20


def _antichains(n: int):
    masks = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), m))
    chosen: list = []

    def rec(start):
        yield tuple(chosen)
        for k in range(start, len(masks)):
            m = masks[k]
            if all((m & c) != c and (m & c) != m for c in chosen):
                chosen.append(m)
                yield from rec(k + 1)
                chosen.pop()

    yield from rec(0)


def upper_set_masks(n: int, guard: int = UPSET_GUARD) -> list:
    """All upper sets of the power set of an n-element set, as frozensets of masks."""
    if n > guard:
        raise UpsetGuard(f"index set of size {n} exceeds the upper-set guard {guard}")
    full = 1 << n
    out = []
    for ac in _antichains(n):
        out.append(frozenset(x for x in range(full) if any(x & m == m for m in ac)))
    return out


def _decode(mask: int, ground: tuple) -> frozenset:
    return frozenset(g for b, g in enumerate(ground) if mask >> b & 1)


def family_key(family) -> tuple:
    subs = sorted((len(s), sorted(s)) for s in family)
    return (len(subs), subs)


def upper_sets(ground, guard: int = UPSET_GUARD) -> list:
    """Upper sets of the power set of ``ground`` in a fixed order (by size, then members)."""
    ground = tuple(sorted(ground))
    fams = [frozenset(_decode(m, ground) for m in fam) for fam in upper_set_masks(len(ground), guard)]
    fams.sort(key=family_key)
    return fams


def minimal_members(family) -> list:
    """Minimal sets of an upper set (its generating antichain), sorted."""
    mins = [s for s in family if not any(t < s for t in family)]
    return sorted(mins, key=lambda s: (len(s), sorted(s)))


def hasse_edges(families: list) -> list:
    """Covering pairs ``(i, j)``: families[j] is families[i] plus one set.

    In the lattice of upper sets a cover removes exactly one minimal member.
    """
    pos = {f: k for k, f in enumerate(families)}
    edges = []
    for j, fam in enumerate(families):
        for m in minimal_members(fam):
            i = pos.get(fam - {m})
            if i is not None:
                edges.append((i, j))
    edges.sort()
    return edges


def _fmt_set(s, labels) -> str:
    return "{" + ",".join(labels[i] for i in sorted(s)) + "}"


def to_dot(families: list, edges: list, labels, socle: int, top: int, name: str = "lattice") -> str:
    """Hasse diagram in DOT.  Nodes show the generating markers of each subrepresentation.

    The whole representation (whose cosocle is the marker {}) sits at the top,
    zero at the bottom; the socle node is highlighted.
    """
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for k, fam in enumerate(families):
        gens = minimal_members(fam)
        text = "0" if not gens else " + ".join("<" + _fmt_set(s, labels) + ">" for s in gens)
        attrs = [f'label="{text}"']
        if k == socle:
            attrs.append('style=filled fillcolor="lightblue" xlabel="socle"')
        elif k == top:
            attrs.append('style=filled fillcolor="lightyellow" xlabel="cosocle {}"')
        lines.append(f"  n{k} [{' '.join(attrs)}];")
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
