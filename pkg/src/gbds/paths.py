"""The topological graph of a system and its boundary path space.

Vertices are the atoms plus an empty vertex (written None). There is an
edge e^l_c for every letter l and atom c below the ideal of l; its source
is c and its range is the unique atom b with c below theta_l(b), or the
empty vertex when there is none.

A finite path e^{l_1}_{c_1} ... e^{l_n}_{c_n} is composable when each c_{i+1}
lies below theta_{l_{i+1}}(c_i). Because atom images are disjoint, a path of
positive length is determined by its label word and its last atom.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .dynamics import Gbds, Word
from .errors import DomainError, UsageError
from .lattice import AtomSet

Edge = tuple[str, int]


@dataclass(frozen=True)
class FinitePath:
    """A finite path given by its range vertex and its edges."""

    base: int | None
    edges: tuple[Edge, ...] = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> Word:
        return tuple(l for l, _ in self.edges)

    @property
    def end(self) -> int | None:
        """The source vertex d(mu)."""
        return self.edges[-1][1] if self.edges else self.base

    def atom_at(self, k: int) -> int | None:
        """Vertex after k edges (k = 0 gives the range vertex)."""
        return self.edges[k - 1][1] if k else self.base

    def prefix(self, n: int) -> "FinitePath":
        return FinitePath(self.base, self.edges[:n])

    def sort_key(self):
        return (len(self.edges), -1 if self.base is None else self.base, self.edges)


@dataclass(frozen=True)
class Cylinder:
    """N(word, A): boundary paths labelled by word whose vertex after it lies in A."""

    word: Word
    atoms: AtomSet


@dataclass(frozen=True)
class TopologicalGraph:
    vertices: tuple[int | None, ...]
    edges: tuple[Edge, ...]
    source: dict
    range: dict


def edge_range(sys: Gbds, edge: Edge) -> int | None:
    return sys.pre(edge[0], edge[1])


def all_edges(sys: Gbds) -> list[Edge]:
    return [(l, c) for l in sys.alphabet for c in AtomSet(sys.algebra, sys.ideal_bits(l))]


def build_graph(sys: Gbds) -> TopologicalGraph:
    edges = all_edges(sys)
    return TopologicalGraph(
        vertices=tuple(sys.atoms()) + (None,),
        edges=tuple(edges),
        source={e: e[1] for e in edges},
        range={e: edge_range(sys, e) for e in edges},
    )


def edges_into_range(sys: Gbds, vertex: int | None) -> list[Edge]:
    """Edges whose range is the given vertex."""
    out = []
    for l in sys.alphabet:
        if vertex is None:
            bits = sys.ideal_bits(l) & ~sys.theta_word_bits((l,), sys.algebra.full_mask)
        else:
            bits = sys.atom_image(l, vertex)
        out.extend((l, c) for c in AtomSet(sys.algebra, bits))
    return out


def singular_vertices(sys: Gbds) -> list[int]:
    """Atoms moved by no letter."""
    return [a for a in sys.atoms() if sys.is_singular_atom(a)]


# -- finite paths ------------------------------------------------------------------------

def path_from_word(sys: Gbds, word: Sequence[str], end: int) -> FinitePath | None:
    """The unique path with the given labels and last vertex, if any."""
    w = sys.check_word(word)
    if not w:
        return FinitePath(end, ())
    if not sys.word_ideal_bits(w) >> end & 1:
        return None
    atoms = [end]
    for l in reversed(w[1:]):
        atoms.append(sys.pre(l, atoms[-1]))
    atoms.reverse()
    base = sys.pre(w[0], atoms[0])
    return FinitePath(base, tuple(zip(w, atoms)))


def path_from_edges(sys: Gbds, edges: Sequence[Edge]) -> FinitePath:
    """Build a path from composable edges, computing its range vertex."""
    edges = tuple((sys.check_word((l,))[0], int(c)) for l, c in edges)
    if not edges:
        raise UsageError("use FinitePath(vertex) for paths of length zero")
    l0, c0 = edges[0]
    if not sys.ideal_bits(l0) >> c0 & 1:
        raise DomainError(f"e^{l0}_{c0} is not an edge")
    for (_, a), (l, c) in zip(edges, edges[1:]):
        if not sys.atom_image(l, a) >> c & 1:
            raise DomainError("edges are not composable")
    return FinitePath(sys.pre(l0, c0), edges)


def is_valid_path(sys: Gbds, p: FinitePath) -> bool:
    if not p.edges:
        return p.base is None or p.base in sys.atoms()
    try:
        q = path_from_edges(sys, p.edges)
    except (DomainError, UsageError):
        return False
    return q.base == p.base


def children(sys: Gbds, p: FinitePath) -> list[FinitePath]:
    """One-edge extensions of a finite path."""
    if not p.edges:
        return [FinitePath(p.base, (e,)) for e in edges_into_range(sys, p.base)]
    end = p.end
    return [
        FinitePath(p.base, p.edges + ((l, c),))
        for l in sys.alphabet
        for c in AtomSet(sys.algebra, sys.atom_image(l, end))
    ]


def is_finite_boundary(sys: Gbds, p: FinitePath) -> bool:
    """A finite path is a boundary path when it ends at a singular atom."""
    return p.end is not None and sys.is_singular_atom(p.end)


def finite_paths(sys: Gbds, max_len: int, include_empty_vertex: bool = False) -> list[FinitePath]:
    """All finite paths of length at most max_len, by length then lexicographically."""
    level = [FinitePath(a) for a in sys.atoms()]
    if include_empty_vertex:
        level.append(FinitePath(None))
    out = list(level)
    # length-one paths may start at the empty vertex even if it is not listed
    roots = level if include_empty_vertex else level + [FinitePath(None)]
    nxt = [c for p in roots for c in children(sys, p)]
    for _ in range(max_len):
        out.extend(nxt)
        nxt = [c for p in nxt for c in children(sys, p)]
    return sorted(out, key=FinitePath.sort_key)


# -- filter transport (ultrafilters represented by their atom) ----------------------------

@dataclass(frozen=True)
class AtomFilter:
    """The ultrafilter of the ideal I_carrier generated by an atom below its generator."""

    carrier: Word
    atom: int


def _in_ideal(sys: Gbds, word: Word, atom: int) -> bool:
    return bool(sys.word_ideal_bits(word) >> atom & 1)


def transport(sys: Gbds, kind: str, alpha: Sequence[str], beta: Sequence[str], F: AtomFilter) -> AtomFilter | None:
    """The maps g_{(alpha)beta}, h_{[alpha]beta} and f_{alpha[beta]} on ultrafilters.

    g restricts from I_beta to I_{alpha beta}; h goes back by taking the
    up-set; f pulls back along theta_beta into I_alpha, giving None (the empty
    vertex) when alpha is empty and no atom maps onto F.
    """
    a, b = sys.check_word(alpha), sys.check_word(beta)
    ab = a + b
    if not _in_ideal(sys, F.carrier, F.atom):
        raise DomainError("filter atom is not below the carrier ideal")
    if kind == "g":
        if F.carrier != b:
            raise UsageError("g expects a filter on I_beta")
        if not _in_ideal(sys, ab, F.atom):
            raise DomainError("filter misses I_{alpha beta}")
        return AtomFilter(ab, F.atom)
    if kind == "h":
        if F.carrier != ab:
            raise UsageError("h expects a filter on I_{alpha beta}")
        return AtomFilter(b, F.atom)
    if kind == "f":
        if F.carrier != ab:
            raise UsageError("f expects a filter on I_{alpha beta}")
        gen = sys.word_ideal_bits(a)
        for x in AtomSet(sys.algebra, gen):
            if sys.theta_word_bits(b, 1 << x) >> F.atom & 1:
                return AtomFilter(a, x)
        if a:
            raise DomainError("no preimage inside I_alpha")
        return None
    raise UsageError(f"unknown transport kind {kind!r}")


def range_by_transport(sys: Gbds, p: FinitePath) -> int | None:
    """r(mu) computed as f_{0[alpha]}(g_{(alpha_1..n-1)alpha_n}(eta_n))."""
    if not p.edges:
        return p.base
    w = p.labels
    eta = AtomFilter((w[-1],), p.end)
    moved = transport(sys, "g", w[:-1], w[-1:], eta)
    back = transport(sys, "f", (), w, moved)
    return None if back is None else back.atom


# -- boundary paths ------------------------------------------------------------------------

def _primitive(period: tuple[Edge, ...]) -> tuple[Edge, ...]:
    n = len(period)
    for p in range(1, n + 1):
        if n % p == 0 and period[:p] * (n // p) == period:
            return period[:p]
    return period


@dataclass(frozen=True)
class BoundaryPath:
    """A finite boundary path (empty period) or an eventually periodic infinite path.

    Infinite paths are kept canonical: the period is primitive and the prefix
    is as short as possible, so equal paths compare equal.
    """

    prefix: FinitePath
    period: tuple[Edge, ...] = ()

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def base(self) -> int | None:
        return self.prefix.base

    @property
    def length(self) -> int | None:
        return self.prefix.length if self.is_finite else None

    def edge(self, i: int) -> Edge:
        """The i-th edge, counting from 0."""
        n = self.prefix.length
        if i < n:
            return self.prefix.edges[i]
        if self.is_finite:
            raise IndexError("finite path too short")
        return self.period[(i - n) % len(self.period)]

    def has_length_at_least(self, n: int) -> bool:
        return not self.is_finite or self.prefix.length >= n

    def truncate(self, n: int) -> FinitePath:
        """First n edges (the whole path if it is shorter)."""
        if self.is_finite:
            return self.prefix.prefix(n)
        return FinitePath(self.prefix.base, tuple(self.edge(i) for i in range(n)))

    def atom_at(self, k: int) -> int | None:
        return self.prefix.base if k == 0 else self.edge(k - 1)[1]

    def labels(self, n: int) -> Word:
        return tuple(self.edge(i)[0] for i in range(n))

    def unrolled(self, n: int) -> tuple[FinitePath, tuple[Edge, ...]]:
        """Equivalent (prefix, period) with prefix length at least n."""
        if self.is_finite:
            return self.prefix, ()
        k = max(n, self.prefix.length)
        pre = self.truncate(k)
        p = len(self.period)
        shift = (k - self.prefix.length) % p
        return pre, self.period[shift:] + self.period[:shift]

    def sort_key(self):
        return (self.prefix.sort_key(), self.period)


def canonical(prefix: FinitePath, period: Sequence[Edge] = ()) -> BoundaryPath:
    period = tuple(period)
    if not period:
        return BoundaryPath(prefix, ())
    period = _primitive(period)
    edges = prefix.edges
    while edges and edges[-1] == period[-1]:
        edges = edges[:-1]
        period = (period[-1],) + period[:-1]
    return BoundaryPath(FinitePath(prefix.base, edges), period)


def make_boundary_path(sys: Gbds, prefix: FinitePath, period: Sequence[Edge] = ()) -> BoundaryPath:
    """Validated canonical boundary path."""
    period = tuple(period)
    if not is_valid_path(sys, prefix):
        raise DomainError("prefix is not a path")
    if not period:
        if not is_finite_boundary(sys, prefix):
            raise DomainError("finite boundary paths must end at a singular atom")
        return BoundaryPath(prefix, ())
    cur = prefix.end
    if cur is None:
        raise DomainError("an infinite path cannot loop at the empty vertex")
    for l, c in period:
        if not sys.atom_image(l, cur) >> c & 1:
            raise DomainError("period does not continue the path")
        cur = c
    l0, c0 = period[0]
    if not sys.atom_image(l0, cur) >> c0 & 1:
        raise DomainError("period is not a loop")
    return canonical(prefix, period)


@dataclass(frozen=True)
class BoundaryEnumeration:
    finite: tuple[FinitePath, ...]
    prefixes: tuple[FinitePath, ...]
    infinite: tuple[BoundaryPath, ...]


def boundary_paths(sys: Gbds, depth: int, infinite: bool = True) -> BoundaryEnumeration:
    """Finite boundary paths up to the depth, regular-ended prefixes of exactly that
    length, and eventually periodic paths whose prefix plus period fit in the depth."""
    if depth < 0:
        raise UsageError("depth must be nonnegative")
    paths = finite_paths(sys, depth)
    finite = tuple(p for p in paths if is_finite_boundary(sys, p))
    prefixes = tuple(p for p in paths if p.length == depth and not is_finite_boundary(sys, p))
    inf: set[BoundaryPath] = set()
    if infinite:
        for p in paths:
            if p.end is None:
                continue
            budget = depth - p.length
            if budget < 1:
                continue
            for q in _loops_at(sys, p.end, budget):
                inf.add(canonical(p, q.edges))
    return BoundaryEnumeration(finite, prefixes, tuple(sorted(inf, key=BoundaryPath.sort_key)))


def _loops_at(sys: Gbds, vertex: int, max_len: int) -> Iterator[FinitePath]:
    level = [FinitePath(vertex)]
    for _ in range(max_len):
        level = [c for p in level for c in children(sys, p)]
        for p in level:
            if p.end == vertex:
                yield p


def in_cylinder(sys: Gbds, mu: BoundaryPath, cyl: Cylinder) -> bool:
    w = cyl.word
    if not mu.has_length_at_least(len(w)):
        return False
    if mu.labels(len(w)) != tuple(w):
        return False
    a = mu.atom_at(len(w))
    return a is not None and a in cyl.atoms


def loop_checks(sys: Gbds, p: FinitePath) -> tuple[bool, bool | None]:
    """(is the path a loop, does the loop have no entrance); the second is None for non-loops."""
    if not p.edges or p.base is None or p.base != p.end:
        return False, None
    for i, e in enumerate(p.edges):
        into = edges_into_range(sys, p.atom_at(i))
        if into != [e]:
            return True, False
    return True, True


# -- walks: deterministic representatives and finiteness -------------------------------------

def representative(sys: Gbds, p: FinitePath) -> BoundaryPath:
    """A boundary path extending p, following the least edge at every step."""
    if is_finite_boundary(sys, p):
        return BoundaryPath(p, ())
    cur = p
    if not p.edges:
        ch = children(sys, p)
        if not ch:
            raise DomainError("no boundary path extends this vertex")
        cur = ch[0]
    seen: dict[int, int] = {}
    extra: list[Edge] = []
    start_len = cur.length
    while True:
        end = cur.end
        if sys.is_singular_atom(end):
            return BoundaryPath(cur, ())
        if end in seen:
            i = seen[end]
            pre = cur.prefix(start_len + i)
            return canonical(pre, cur.edges[start_len + i:])
        seen[end] = len(extra)
        nxt = children(sys, cur)[0]
        extra.append(nxt.edges[-1])
        cur = nxt


def out_degree(sys: Gbds, atom: int) -> int:
    return sum(len(AtomSet(sys.algebra, sys.atom_image(l, atom))) for l in sys.alphabet)


def _successors(sys: Gbds, atom: int) -> set[int]:
    out: set[int] = set()
    for l in sys.alphabet:
        out.update(AtomSet(sys.algebra, sys.atom_image(l, atom)))
    return out


def reachable_atoms(sys: Gbds, starts: Iterable[int]) -> set[int]:
    seen, todo = set(), list(starts)
    while todo:
        a = todo.pop()
        if a in seen:
            continue
        seen.add(a)
        todo.extend(_successors(sys, a))
    return seen


def cyclic_atoms(sys: Gbds) -> set[int]:
    """Atoms lying on some cycle of the graph."""
    return {a for a in sys.atoms() if a in reachable_atoms(sys, _successors(sys, a))}


def walk_points(sys: Gbds, p: FinitePath) -> list[BoundaryPath] | None:
    """All boundary paths extending p when there are finitely many, else None.

    There are finitely many exactly when every reachable atom lying on a cycle
    has a single outgoing edge; otherwise one can wind around a cycle any
    number of times before leaving it, or branch inside it.
    """
    if not p.edges:
        if is_finite_boundary(sys, p):
            return [BoundaryPath(p, ())]
        start = children(sys, p)
    else:
        start = [p]
    cyc = cyclic_atoms(sys)
    reach = reachable_atoms(sys, [q.end for q in start])
    if any(out_degree(sys, a) != 1 for a in reach & cyc):
        return None
    out: set[BoundaryPath] = set()
    stack: list[tuple[FinitePath, dict[int, int]]] = [(q, {}) for q in start]
    while stack:
        cur, seen = stack.pop()
        end = cur.end
        if end in seen:
            i = seen[end]
            out.add(canonical(cur.prefix(i), cur.edges[i:]))
            continue
        if sys.is_singular_atom(end):
            out.add(BoundaryPath(cur, ()))
            continue
        seen = {**seen, end: cur.length}
        stack.extend((c, seen) for c in children(sys, cur))
    return sorted(out, key=BoundaryPath.sort_key)


def all_points_if_finite(sys: Gbds) -> list[BoundaryPath] | None:
    """The whole boundary path space when it is finite, else None."""
    pts: set[BoundaryPath] = set()
    for a in sys.atoms():
        if sys.is_singular_atom(a):
            pts.add(BoundaryPath(FinitePath(a), ()))
    for e in all_edges(sys):
        r = edge_range(sys, e)
        got = walk_points(sys, FinitePath(r, (e,)))
        if got is None:
            return None
        pts.update(got)
    return sorted(pts, key=BoundaryPath.sort_key)
