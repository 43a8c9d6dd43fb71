"""Finite crystallographic root systems built from Cartan data.

Conventions: the Cartan matrix has entries ``A[i][j] = <a_i, a_j^vee>``
(Bourbaki), so the simple reflection acts by

    s_i(r) = r - <r, a_i^vee> a_i,   <r, a_i^vee> = sum_j r_j A[j][i].

Roots are integer coordinate tuples over the simple roots.  Positive roots
are ordered by height, then by coordinates in decreasing lexicographic order
so that the simple roots come out as ``a1, a2, ...``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidCartanMatrix, NonFiniteType, UnknownRoot

Root = tuple  # tuple[int, ...]

DEFAULT_ROOT_BOUND = 10_000


@dataclass(frozen=True)
class CartanDatum:
    matrix: tuple
    labels: tuple = ()
    name: str = ""

    def __post_init__(self):
        matrix = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", matrix)
        n = len(matrix)
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise InvalidCartanMatrix(f"row {i} has length {len(row)}, expected {n}")
            if row[i] != 2:
                raise InvalidCartanMatrix(f"diagonal entry ({i},{i}) is {row[i]}, expected 2")
            for j, x in enumerate(row):
                if i != j and x > 0:
                    raise InvalidCartanMatrix(f"off-diagonal entry ({i},{j}) is positive")
                if (x == 0) != (matrix[j][i] == 0):
                    raise InvalidCartanMatrix(f"entries ({i},{j}) and ({j},{i}) must vanish together")
        labels = tuple(self.labels) if self.labels else tuple(f"a{i + 1}" for i in range(n))
        if len(labels) != n:
            raise InvalidCartanMatrix(f"{len(labels)} labels for rank {n}")
        if len(set(labels)) != n:
            raise InvalidCartanMatrix("root labels must be distinct")
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return len(self.matrix)


# ---------------------------------------------------------------------------
# named types, Bourbaki numbering

def _chain(n):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = -1
    return m


def named_cartan_matrix(letter: str, n: int) -> list:
    letter = letter.upper()
    if n < 1:
        raise InvalidCartanMatrix(f"rank of type {letter} must be positive")
    if letter == "A":
        return _chain(n)
    if letter == "B":
        if n < 2:
            raise InvalidCartanMatrix("type B needs rank >= 2")
        m = _chain(n)
        m[n - 2][n - 1] = -2
        return m
    if letter == "C":
        if n < 2:
            raise InvalidCartanMatrix("type C needs rank >= 2")
        m = _chain(n)
        m[n - 1][n - 2] = -2
        return m
    if letter == "D":
        if n < 3:
            raise InvalidCartanMatrix("type D needs rank >= 3")
        m = _chain(n)
        m[n - 2][n - 1] = m[n - 1][n - 2] = 0
        m[n - 3][n - 1] = m[n - 1][n - 3] = -1
        return m
    if letter == "E":
        if n not in (6, 7, 8):
            raise InvalidCartanMatrix("type E needs rank 6, 7 or 8")
        m = [[0] * n for _ in range(n)]
        edges = [(0, 2), (2, 3), (1, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i in range(n):
            m[i][i] = 2
        for i, j in edges:
            m[i][j] = m[j][i] = -1
        return m
    if letter == "F":
        if n != 4:
            raise InvalidCartanMatrix("type F needs rank 4")
        m = _chain(4)
        m[1][2] = -2
        return m
    if letter == "G":
        if n != 2:
            raise InvalidCartanMatrix("type G needs rank 2")
        return [[2, -1], [-3, 2]]
    raise InvalidCartanMatrix(f"unknown Cartan type {letter!r}")


def block_diagonal(blocks: Sequence[Sequence[Sequence[int]]]) -> list:
    n = sum(len(b) for b in blocks)
    m = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                m[off + i][off + j] = b[i][j]
        off += k
    return m


_TYPE_RE = re.compile(r"^([A-Ga-g])_?(\d+)$")


def cartan_from_type(name: str) -> CartanDatum:
    """Parse ``"A2"``, ``"B3"``, ``"A1xA2"`` (products separated by ``x``)."""
    name = name.strip()
    if not name:
        raise InvalidCartanMatrix("empty Cartan type")
    blocks = []
    for part in re.split(r"[x×*]", name):
        m = _TYPE_RE.match(part.strip())
        if not m:
            raise InvalidCartanMatrix(f"cannot parse Cartan type component {part!r}")
        blocks.append(named_cartan_matrix(m.group(1), int(m.group(2))))
    return CartanDatum(matrix=block_diagonal(blocks), name=name)


def cartan_from_spec(spec) -> CartanDatum:
    """Accept ``{"type": "A", "rank": 2}``, ``{"type": "A1xA1"}``,
    ``{"matrix": [[...]], "labels": [...]}`` or a bare type string."""
    if isinstance(spec, str):
        return cartan_from_type(spec)
    if not isinstance(spec, dict):
        raise InvalidCartanMatrix("cartan must be an object or a type string")
    unknown = set(spec) - {"type", "rank", "matrix", "labels"}
    if unknown:
        raise InvalidCartanMatrix(f"unknown cartan fields: {sorted(unknown)}")
    labels = spec.get("labels") or ()
    if "matrix" in spec:
        if "type" in spec or "rank" in spec:
            raise InvalidCartanMatrix("give either a matrix or a type, not both")
        matrix = spec["matrix"]
        if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
            raise InvalidCartanMatrix("matrix must be a list of lists")
        for row in matrix:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise InvalidCartanMatrix("matrix entries must be integers")
        return CartanDatum(matrix=matrix, labels=tuple(labels))
    if "type" not in spec:
        raise InvalidCartanMatrix("cartan needs 'type' or 'matrix'")
    letter = spec["type"]
    if not isinstance(letter, str):
        raise InvalidCartanMatrix("cartan type must be a string")
    if "rank" in spec:
        rank = spec["rank"]
        if not isinstance(rank, int) or isinstance(rank, bool):
            raise InvalidCartanMatrix("rank must be an integer")
        datum = CartanDatum(matrix=named_cartan_matrix(letter, rank), labels=tuple(labels),
                            name=f"{letter.upper()}{rank}")
    else:
        base = cartan_from_type(letter)
        datum = CartanDatum(matrix=base.matrix, labels=tuple(labels), name=base.name)
    return datum


# ---------------------------------------------------------------------------

@dataclass(eq=False)
class RootSystem:
    """A reduced root system together with its simple reflection tables.

    ``roots`` lists the positive roots followed by their negatives in the
    same order, so root index ``k < npos`` is positive and ``k + npos`` is
    its negative.  ``tables[i][k]`` is the index of ``s_i(roots[k])``.
    """

    cartan: CartanDatum
    positive_roots: tuple
    roots: tuple = field(repr=False)
    tables: tuple = field(repr=False)
    index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def npos(self) -> int:
        return len(self.positive_roots)

    @property
    def labels(self) -> tuple:
        return self.cartan.labels

    @property
    def delta(self) -> frozenset:
        return frozenset(range(self.rank))

    @property
    def name(self) -> str:
        if self.cartan.name:
            return self.cartan.name
        return "cartan" + json.dumps([list(r) for r in self.cartan.matrix], separators=(",", ":"))

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan.matrix == other.cartan.matrix \
            and self.cartan.labels == other.cartan.labels

    def __hash__(self):
        return hash((self.cartan.matrix, self.cartan.labels))

    def __repr__(self):
        return f"RootSystem({self.name})"

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def root_index(self, r) -> int:
        try:
            return self.index[tuple(r)]
        except KeyError:
            raise UnknownRoot(f"{tuple(r)} is not a root") from None

    def is_positive(self, k: int) -> bool:
        return k < self.npos

    def negate(self, k: int) -> int:
        return k + self.npos if k < self.npos else k - self.npos

    def pairing(self, r, i: int) -> int:
        """``<r, a_i^vee>`` for a coordinate vector ``r``."""
        A = self.cartan.matrix
        return sum(c * A[j][i] for j, c in enumerate(r))

    def support(self, r) -> frozenset:
        return frozenset(j for j, c in enumerate(r) if c)

    def label_index(self, label) -> int:
        if isinstance(label, int) and not isinstance(label, bool):
            if 0 <= label < self.rank:
                return label
            raise UnknownRoot(f"simple root index {label} out of range")
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownRoot(f"unknown simple root label {label!r}") from None

    def indices(self, labels: Iterable) -> frozenset:
        return frozenset(self.label_index(x) for x in labels)

    def label_list(self, subset: Iterable[int]) -> list:
        return [self.labels[i] for i in sorted(subset)]

    def format_root(self, r) -> str:
        if isinstance(r, int):
            r = self.roots[r]
        sign = "-" if any(c < 0 for c in r) else ""
        terms = []
        for j, c in enumerate(r):
            c = abs(c)
            if c:
                terms.append((str(c) if c > 1 else "") + self.labels[j])
        return sign + "+".join(terms)


def build_root_system(datum: CartanDatum, bound: int = DEFAULT_ROOT_BOUND) -> RootSystem:
    n = datum.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    A = datum.matrix

    def refl(r, i):
        p = sum(c * A[j][i] for j, c in enumerate(r))
        return tuple(c - p if j == i else c for j, c in enumerate(r))

    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                s = refl(r, i)
                if s in seen or all(c <= 0 for c in s):
                    continue
                if any(c < 0 for c in s):
                    raise NonFiniteType(f"reflection produced a mixed-sign vector {s}")
                seen.add(s)
                nxt.append(s)
                if 2 * len(seen) > bound:
                    raise NonFiniteType(
                        f"root closure exceeded {bound} roots; the matrix is not of finite type")
        frontier = nxt

    positive = tuple(sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r))))
    negative = tuple(tuple(-c for c in r) for r in positive)
    roots = positive + negative
    index = {r: k for k, r in enumerate(roots)}
    tables = []
    for i in range(n):
        row = []
        for r in roots:
            s = refl(r, i)
            if s not in index:
                raise NonFiniteType(f"s_{i + 1}({r}) = {s} is not a root")
            row.append(index[s])
        tables.append(tuple(row))
    return RootSystem(cartan=datum, positive_roots=positive, roots=roots,
                      tables=tuple(tables), index=index)


def root_system(spec, bound: int = DEFAULT_ROOT_BOUND) -> RootSystem:
    """Convenience constructor from a type string, description dict, matrix or datum."""
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, CartanDatum):
        return build_root_system(spec, bound)
    if isinstance(spec, (list, tuple)):
        return build_root_system(CartanDatum(matrix=spec), bound)
    return build_root_system(cartan_from_spec(spec), bound)


def reflect(rs: RootSystem, simple_index: int, r) -> Root:
    k = rs.root_index(r)
    return rs.roots[rs.tables[simple_index][k]]


def orthogonal_subsets(rs: RootSystem, I: Iterable[int], J: Iterable[int]) -> bool:
    A = rs.cartan.matrix
    I, J = _members(I), _members(J)
    return all(A[i][j] == 0 and A[j][i] == 0 for i in I for j in J)


def phi_split(rs: RootSystem, levi: Iterable[int]):
    """Split the positive roots into those of the Levi and those of the unipotent radical.

    Returns two tuples of root indices (in root order).
    """
    levi = _members(levi)
    inside, outside = [], []
    for k, r in enumerate(rs.positive_roots):
        (inside if rs.support(r) <= levi else outside).append(k)
    return tuple(inside), tuple(outside)


def _members(s) -> frozenset:
    return frozenset(getattr(s, "members", s))
