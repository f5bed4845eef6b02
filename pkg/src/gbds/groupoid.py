"""The partial action of the free group on the boundary path space and the
transformation groupoid it generates.

Compact open subsets of the boundary path space are stored at a fixed depth
m: a set of length-m path classes (all boundary paths beginning with that
prefix) together with the finitely many finite boundary paths of length < m.
Refining to a common depth makes set operations and equality exact, which is
what turns the groupoid model into an equality oracle for the algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .dynamics import Gbds, Word, condition_L, has_no_exits, is_cycle
from .errors import DomainError, UsageError
from .genalg import AlgElement, GenTriple
from .lattice import AtomSet
from .paths import (
    BoundaryPath,
    Cylinder,
    FinitePath,
    _primitive,
    canonical,
    children,
    cyclic_atoms,
    edges_into_range,
    is_finite_boundary,
    out_degree,
    path_from_word,
    reachable_atoms,
    representative,
    walk_points,
)
from .scalar import Scalar

Syllable = tuple[str, int]


# -- free group --------------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupElem:
    """A freely reduced word in the letters and their formal inverses."""

    syllables: tuple[Syllable, ...] = ()

    @staticmethod
    def reduce(raw: Iterable[Syllable]) -> "GroupElem":
        stack: list[Syllable] = []
        for letter, e in raw:
            if e not in (1, -1):
                raise UsageError("exponents must be 1 or -1")
            if stack and stack[-1] == (letter, -e):
                stack.pop()
            else:
                stack.append((letter, e))
        return GroupElem(tuple(stack))

    @classmethod
    def from_words(cls, alpha: Sequence[str], beta: Sequence[str] = ()) -> "GroupElem":
        """reduce(alpha beta^{-1})"""
        return cls.reduce([(l, 1) for l in alpha] + [(l, -1) for l in reversed(beta)])

    def inverse(self) -> "GroupElem":
        return GroupElem(tuple((l, -e) for l, e in reversed(self.syllables)))

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        return GroupElem.reduce(self.syllables + other.syllables)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def split(self) -> tuple[Word, Word] | None:
        """(alpha, beta) with self = alpha beta^{-1}, or None if not of that shape."""
        syl = self.syllables
        i = 0
        while i < len(syl) and syl[i][1] == 1:
            i += 1
        if any(e == 1 for _, e in syl[i:]):
            return None
        return tuple(l for l, _ in syl[:i]), tuple(l for l, _ in reversed(syl[i:]))

    def sort_key(self):
        return (len(self.syllables), self.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "∅"
        return "".join(l if e == 1 else f"{l}^-1" for l, e in self.syllables)


IDENTITY = GroupElem()


# -- compact open sets --------------------------------------------------------------------------

class CompactOpen:
    """A compact open subset of the boundary path space, at a fixed depth."""

    __slots__ = ("sys", "depth", "keys")

    def __init__(self, sys: Gbds, depth: int, keys: Iterable[FinitePath]):
        self.sys = sys
        self.depth = depth
        self.keys = frozenset(keys)

    @classmethod
    def empty(cls, sys: Gbds) -> "CompactOpen":
        return cls(sys, 0, ())

    @classmethod
    def cylinder(cls, sys: Gbds, word: Sequence[str], atoms: AtomSet) -> "CompactOpen":
        w = sys.check_word(word)
        keys = []
        for c in atoms:
            p = FinitePath(c) if not w else path_from_word(sys, w, c)
            if p is not None:
                keys.append(p)
        return cls(sys, len(w), keys)

    @classmethod
    def whole(cls, sys: Gbds) -> "CompactOpen":
        keys = [FinitePath(a) for a in sys.atoms()]
        if edges_into_range(sys, None):
            keys.append(FinitePath(None))
        return cls(sys, 0, keys)

    def refine(self, depth: int) -> "CompactOpen":
        if depth < self.depth:
            raise UsageError("cannot refine to a smaller depth")
        keys, d = set(self.keys), self.depth
        while d < depth:
            nxt = set()
            for k in keys:
                if k.length < d:
                    nxt.add(k)
                    continue
                if is_finite_boundary(self.sys, k):
                    nxt.add(k)
                nxt.update(children(self.sys, k))
            keys, d = nxt, d + 1
        return CompactOpen(self.sys, depth, keys)

    def _pair(self, other: "CompactOpen") -> tuple[frozenset, frozenset, int]:
        if other.sys is not self.sys:
            raise UsageError("sets belong to different systems")
        m = max(self.depth, other.depth)
        return self.refine(m).keys, other.refine(m).keys, m

    def __and__(self, other: "CompactOpen") -> "CompactOpen":
        a, b, m = self._pair(other)
        return CompactOpen(self.sys, m, a & b)

    def __or__(self, other: "CompactOpen") -> "CompactOpen":
        a, b, m = self._pair(other)
        return CompactOpen(self.sys, m, a | b)

    def __sub__(self, other: "CompactOpen") -> "CompactOpen":
        a, b, m = self._pair(other)
        return CompactOpen(self.sys, m, a - b)

    def complement(self) -> "CompactOpen":
        return CompactOpen.whole(self.sys) - self

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompactOpen):
            return NotImplemented
        a, b, _ = self._pair(other)
        return a == b

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.keys)

    def __contains__(self, mu: BoundaryPath) -> bool:
        if mu.is_finite and mu.prefix.length < self.depth:
            return mu.prefix in self.keys
        return mu.truncate(self.depth) in self.keys

    def sorted_keys(self) -> list[FinitePath]:
        return sorted(self.keys, key=FinitePath.sort_key)

    def __repr__(self) -> str:
        return f"CompactOpen(depth={self.depth}, keys={self.sorted_keys()})"


# -- the partial action ------------------------------------------------------------------------------

def _words(sys: Gbds, t: GroupElem) -> tuple[Word, Word] | None:
    split = t.split()
    if split is None:
        return None
    alpha, beta = split
    if not sys.in_W(alpha) or not sys.in_W(beta):
        return None
    return split


def _key_in_domain(sys: Gbds, alpha: Word, beta: Word, p: FinitePath) -> bool:
    """Does the class (or point) p lie in U_{alpha beta^{-1}}?  Needs |p| >= |alpha|."""
    if p.length < len(alpha) or p.labels[: len(alpha)] != alpha:
        return False
    c = p.atom_at(len(alpha))
    return c is not None and bool(sys.word_ideal_bits(beta) >> c & 1)


def in_domain(sys: Gbds, t: GroupElem, mu: BoundaryPath) -> bool:
    """mu lies in U_t."""
    if t.is_identity:
        return True
    if any(l not in sys.alphabet for l, _ in t.syllables):
        return False
    ab = _words(sys, t)
    if ab is None:
        return False
    alpha, beta = ab
    if not mu.has_length_at_least(len(alpha)):
        return False
    return _key_in_domain(sys, alpha, beta, mu.truncate(len(alpha)))


def domain_set(sys: Gbds, t: GroupElem) -> CompactOpen:
    """U_t as a compact open set."""
    if t.is_identity:
        return CompactOpen.whole(sys)
    ab = _words(sys, t)
    if ab is None:
        return CompactOpen.empty(sys)
    alpha, beta = ab
    return CompactOpen.cylinder(sys, alpha, AtomSet(sys.algebra, sys.word_ideal_bits(beta)))


def _graft(sys: Gbds, alpha: Word, beta: Word, p: FinitePath) -> FinitePath:
    """Replace the beta-prefix of p by an alpha-prefix ending at the same atom."""
    c = p.atom_at(len(beta))
    tail = p.edges[len(beta):]
    if not alpha:
        return FinitePath(c, tail)
    atoms = [c]
    for l in reversed(alpha[1:]):
        atoms.append(sys.pre(l, atoms[-1]))
    atoms.reverse()
    return FinitePath(sys.pre(alpha[0], atoms[0]), tuple(zip(alpha, atoms)) + tail)


def apply_phi(sys: Gbds, t: GroupElem, mu: BoundaryPath) -> BoundaryPath:
    """phi_t(mu) for mu in U_{t^{-1}}."""
    if t.is_identity:
        return mu
    if not in_domain(sys, t.inverse(), mu):
        raise DomainError(f"path is not in the domain of phi_{t}")
    alpha, beta = _words(sys, t)
    pre, period = mu.unrolled(len(beta))
    return canonical(_graft(sys, alpha, beta, pre), period)


def phi_set(sys: Gbds, t: GroupElem, U: CompactOpen) -> CompactOpen:
    """phi_t(U intersected with U_{t^{-1}})."""
    if t.is_identity:
        return U
    ab = _words(sys, t)
    if ab is None:
        return CompactOpen.empty(sys)
    alpha, beta = ab
    R = U.refine(max(U.depth, len(beta)))
    keys = [_graft(sys, alpha, beta, k) for k in R.keys if _key_in_domain(sys, beta, alpha, k)]
    return CompactOpen(sys, R.depth - len(beta) + len(alpha), keys)


@dataclass(frozen=True)
class GroupoidPoint:
    """(t, mu) with mu in U_t; range mu and source phi_{t^{-1}}(mu)."""

    t: GroupElem
    mu: BoundaryPath

    def range(self) -> BoundaryPath:
        return self.mu

    def source(self, sys: Gbds) -> BoundaryPath:
        return apply_phi(sys, self.t.inverse(), self.mu)

    def inverse(self, sys: Gbds) -> "GroupoidPoint":
        return GroupoidPoint(self.t.inverse(), self.source(sys))

    def compose(self, sys: Gbds, other: "GroupoidPoint") -> "GroupoidPoint":
        if self.source(sys) != other.mu:
            raise DomainError("points are not composable")
        return GroupoidPoint(self.t * other.t, self.mu)


def make_point(sys: Gbds, t: GroupElem, mu: BoundaryPath) -> GroupoidPoint:
    if not in_domain(sys, t, mu):
        raise DomainError("path is not in U_t")
    return GroupoidPoint(t, mu)


# -- functions on the groupoid -------------------------------------------------------------------------

class GroupoidFn:
    """A finite sum of scalar multiples of indicators of compact open bisections {t} x U."""

    __slots__ = ("sys", "parts")

    def __init__(self, sys: Gbds, parts: Mapping[GroupElem, Sequence[tuple[CompactOpen, Scalar]]] | None = None):
        self.sys = sys
        self.parts: dict[GroupElem, list[tuple[CompactOpen, Scalar]]] = {}
        for t, items in (parts or {}).items():
            for U, c in items:
                self.add_term(t, U, c)

    def add_term(self, t: GroupElem, U: CompactOpen, c) -> None:
        c = Scalar.coerce(c)
        if not c or not U:
            return
        self.parts.setdefault(t, []).append((U, c))

    def check_supports(self) -> bool:
        """Every support lies inside the domain U_t."""
        return all(not (U - domain_set(self.sys, t)) for t, items in self.parts.items() for U, _ in items)

    def values(self, t: GroupElem) -> tuple[int, dict[FinitePath, Scalar]]:
        """Coefficient of each class at the common depth of the t-component."""
        items = self.parts.get(t, [])
        m = max((U.depth for U, _ in items), default=0)
        out: dict[FinitePath, Scalar] = {}
        for U, c in items:
            for k in U.refine(m).keys:
                out[k] = out.get(k, Scalar(0)) + c
        return m, {k: v for k, v in out.items() if v}

    def evaluate(self, point: GroupoidPoint) -> Scalar:
        total = Scalar(0)
        for U, c in self.parts.get(point.t, []):
            if point.mu in U:
                total = total + c
        return total

    def __add__(self, other: "GroupoidFn") -> "GroupoidFn":
        out = GroupoidFn(self.sys, self.parts)
        for t, items in other.parts.items():
            for U, c in items:
                out.add_term(t, U, c)
        return out

    def scale(self, c) -> "GroupoidFn":
        c = Scalar.coerce(c)
        return GroupoidFn(self.sys, {t: [(U, c * a) for U, a in items] for t, items in self.parts.items()})

    def group_elements(self) -> list[GroupElem]:
        return sorted(self.parts, key=GroupElem.sort_key)


def kappa(x: AlgElement) -> GroupoidFn:
    """s_{alpha,A} s*_{beta,A}  maps to the indicator of {alpha beta^{-1}} x N(alpha, A)."""
    f = GroupoidFn(x.sys)
    for tr, c in x.sorted_terms():
        t = GroupElem.from_words(tr.left, tr.right)
        f.add_term(t, CompactOpen.cylinder(x.sys, tr.left, tr.atoms), c)
    return f


def kappa_triple(sys: Gbds, tr: GenTriple, c=1) -> GroupoidFn:
    return kappa(AlgElement.of(sys, tr, Scalar.coerce(c)))


def fn_equal(f: GroupoidFn, g: GroupoidFn) -> bool:
    """Pointwise equality, decided on the classes of the common refinement."""
    for t in set(f.parts) | set(g.parts):
        mf = max((U.depth for U, _ in f.parts.get(t, [])), default=0)
        mg = max((U.depth for U, _ in g.parts.get(t, [])), default=0)
        m = max(mf, mg)
        vf = _values_at(f, t, m)
        vg = _values_at(g, t, m)
        if vf != vg:
            return False
    return True


def _values_at(f: GroupoidFn, t: GroupElem, m: int) -> dict[FinitePath, Scalar]:
    out: dict[FinitePath, Scalar] = {}
    for U, c in f.parts.get(t, []):
        for k in U.refine(m).keys:
            out[k] = out.get(k, Scalar(0)) + c
    return {k: v for k, v in out.items() if v}


def fn_is_zero(f: GroupoidFn) -> bool:
    return fn_equal(f, GroupoidFn(f.sys))


def convolve(f: GroupoidFn, g: GroupoidFn) -> GroupoidFn:
    """Convolution product: supports U at s and V at t give U and phi_s(V) at st."""
    if f.sys is not g.sys:
        raise UsageError("functions belong to different systems")
    sys = f.sys
    out = GroupoidFn(sys)
    for s, fs in f.parts.items():
        for t, gt in g.parts.items():
            st = s * t
            for V, b in gt:
                moved = phi_set(sys, s, V)
                if not moved:
                    continue
                for U, a in fs:
                    W = U & moved
                    if W:
                        out.add_term(st, W, a * b)
    return out


def fn_adjoint(f: GroupoidFn) -> GroupoidFn:
    out = GroupoidFn(f.sys)
    for t, items in f.parts.items():
        ti = t.inverse()
        for U, c in items:
            out.add_term(ti, phi_set(f.sys, ti, U), c.conjugate())
    return out


# -- isotropy -----------------------------------------------------------------------------------------

def is_isotropy_direct(sys: Gbds, t: GroupElem, mu: BoundaryPath) -> bool:
    """(t, mu) is a groupoid point with equal range and source."""
    return in_domain(sys, t, mu) and apply_phi(sys, t.inverse(), mu) == mu


def iso_contains(sys: Gbds, t: GroupElem, mu: BoundaryPath) -> bool:
    """(t, mu) lies in the isotropy bundle, via the conjugated-loop description.

    A nonunit t is isotropy at mu exactly when t = delta gamma^{+-1} delta^{-1},
    mu follows delta and then repeats a loop labelled gamma forever.
    """
    if t.is_identity:
        return True
    if any(l not in sys.alphabet for l, _ in t.syllables):
        return False
    ab = t.split()
    if ab is None or mu.is_finite:
        return False
    alpha, beta = ab
    if alpha[: len(beta)] == beta:
        delta, gamma = beta, alpha[len(beta):]
    elif beta[: len(alpha)] == alpha:
        delta, gamma = alpha, beta[len(alpha):]
    else:
        return False
    if not gamma:
        return False
    n, k = len(delta), len(gamma)
    if mu.labels(n + k) != delta + gamma:
        return False
    if mu.atom_at(n) != mu.atom_at(n + k):
        return False
    loop = tuple(mu.edge(i) for i in range(n, n + k))
    return canonical(mu.truncate(n), loop) == mu


def cylinder_points(sys: Gbds, cyl: Cylinder) -> list[BoundaryPath] | None:
    """All points of N(word, A) when finitely many, else None."""
    pts: list[BoundaryPath] = []
    for c in cyl.atoms:
        p = FinitePath(c) if not cyl.word else path_from_word(sys, cyl.word, c)
        if p is None:
            continue
        got = walk_points(sys, p)
        if got is None:
            return None
        pts.extend(got)
    return pts


def cylinder_in_fix(sys: Gbds, t: GroupElem, cyl: Cylinder) -> bool:
    """Every point of the cylinder is fixed by the isotropy element t, by enumeration.

    For t different from the unit the fixed points are finitely many, so an
    infinite cylinder can never be inside.
    """
    if t.is_identity:
        return True
    pts = cylinder_points(sys, cyl)
    if pts is None:
        return False
    return all(is_isotropy_direct(sys, t, mu) for mu in pts)


def _bisection_words(sys: Gbds, t: GroupElem, cyl: Cylinder) -> tuple[Word, Word]:
    alpha = sys.check_word(cyl.word)
    rest = t.inverse() * GroupElem.from_words(alpha)
    split = rest.split()
    if split is None or split[1]:
        raise UsageError("t is not of the form alpha beta^{-1} for the cylinder word alpha")
    beta = split[0]
    A = cyl.atoms
    if not A:
        raise UsageError("empty cylinder")
    if A.bits & ~(sys.word_ideal_bits(alpha) & sys.word_ideal_bits(beta)):
        raise UsageError("cylinder set is not in I_alpha ∩ I_beta")
    return alpha, beta


def bisection_in_iso_interior(sys: Gbds, t: GroupElem, cyl: Cylinder) -> bool:
    """{t} x N(alpha, A) lies in the interior of the isotropy, by the cycle criterion."""
    alpha, beta = _bisection_words(sys, t, cyl)
    if t.is_identity:
        return True
    A = cyl.atoms
    if alpha[: len(beta)] == beta:
        gamma = alpha[len(beta):]
    elif beta[: len(alpha)] == alpha:
        gamma = beta[len(alpha):]
    else:
        return False
    if not gamma:
        return False
    A2 = A & sys.theta_word(gamma, A)
    if not A2 or not (is_cycle(sys, gamma, A2) and has_no_exits(sys, gamma, A2)):
        return False
    return CompactOpen.cylinder(sys, alpha, A) == CompactOpen.cylinder(sys, alpha, A2)


def bisection_in_iso_direct(sys: Gbds, t: GroupElem, cyl: Cylinder) -> bool:
    _bisection_words(sys, t, cyl)
    return cylinder_in_fix(sys, t, cyl)


# -- effectiveness and its equivalents ------------------------------------------------------------------

def isolated_infinite_point(sys: Gbds) -> tuple[GroupElem, Cylinder, BoundaryPath] | None:
    """An atom from which exactly one path leaves, infinitely; gives a cylinder N(0,{c})
    which is a single point fixed by its nonunit isotropy."""
    for c in sys.atoms():
        reach = reachable_atoms(sys, [c])
        if not all(out_degree(sys, a) == 1 for a in reach):
            continue
        mu = representative(sys, FinitePath(c))
        pre_labels, per_labels = mu.prefix.labels, tuple(l for l, _ in mu.period)
        g = GroupElem.from_words(pre_labels + per_labels, pre_labels)
        return g, Cylinder((), sys.algebra.atom(c)), mu
    return None


def topologically_free(sys: Gbds) -> tuple[bool, tuple[GroupElem, Cylinder, BoundaryPath] | None]:
    """No nonunit t fixes a whole basic cylinder.

    Fixed sets of nonunit elements are finite and finite boundary paths move,
    so a cylinder inside Fix(t) shrinks to a single isolated infinite point.
    """
    w = isolated_infinite_point(sys)
    if w is None:
        return True, None
    g, cyl, mu = w
    if not (cylinder_in_fix(sys, g, cyl) and is_isotropy_direct(sys, g, mu)):
        raise AssertionError("isolated point is not fixed by its isotropy")
    return False, w


def basic_bisections(sys: Gbds, bound: int) -> Iterator[tuple[GroupElem, Cylinder]]:
    """Nonunit bisections {alpha beta^{-1}} x N(alpha, {c}) with comparable alpha, beta up to the bound."""
    for alpha in sys.words(bound):
        if not sys.in_W(alpha):
            continue
        betas = [alpha[:i] for i in range(len(alpha))]
        betas += [alpha + g for g in sys.words(bound - len(alpha), 1)]
        for beta in betas:
            if not sys.in_W(beta):
                continue
            t = GroupElem.from_words(alpha, beta)
            allowed = sys.word_ideal_bits(alpha) & sys.word_ideal_bits(beta)
            for c in AtomSet(sys.algebra, allowed):
                yield t, Cylinder(alpha, sys.algebra.atom(c))


def effective(sys: Gbds, bound: int | None = None) -> tuple[bool, tuple[GroupElem, Cylinder] | None]:
    """Every basic bisection inside the isotropy interior is a unit bisection."""
    b = max(sys.algebra.atom_count, 3) if bound is None else bound
    for t, cyl in basic_bisections(sys, b):
        if bisection_in_iso_interior(sys, t, cyl):
            return False, (t, cyl)
    return True, None


def interior_isotropy_elements(sys: Gbds, bound: int) -> set[GroupElem]:
    """Group elements t carrying a basic bisection in the isotropy interior (words up to the bound)."""
    return {t for t, cyl in basic_bisections(sys, bound) if bisection_in_iso_interior(sys, t, cyl)}


@dataclass(frozen=True)
class ShadowWitness:
    cls: FinitePath
    point: BoundaryPath


def _path_to(sys: Gbds, start: FinitePath, target: int) -> FinitePath | None:
    """Shortest extension of start ending at target (breadth first)."""
    if start.end == target:
        return start
    seen = {start.end}
    level = [start]
    while level:
        nxt = []
        for p in level:
            for q in children(sys, p):
                if q.end == target:
                    return q
                if q.end not in seen:
                    seen.add(q.end)
                    nxt.append(q)
        level = nxt
    return None


def _two_loops(sys: Gbds, x: int, scc: set[int]) -> tuple[tuple, tuple] | None:
    """Two loops at x inside its strongly connected component with different first edges."""
    firsts = [q for q in children(sys, FinitePath(x)) if q.end in scc]
    loops = []
    for q in firsts:
        back = _path_to(sys, q, x)
        if back is not None:
            loops.append(back.edges)
        if len(loops) == 2:
            return loops[0], loops[1]
    return None


def _long_primitive_point(sys: Gbds, cls: FinitePath, depth: int) -> BoundaryPath | None:
    reach = reachable_atoms(sys, [cls.end])
    cyc = cyclic_atoms(sys)
    for x in sorted(reach & cyc):
        scc = {y for y in reachable_atoms(sys, [x]) if x in reachable_atoms(sys, [y])}
        loops = _two_loops(sys, x, scc)
        if loops is None:
            continue
        u, v = loops
        lead = _path_to(sys, cls, x)
        k = 1
        while True:
            q = u * k + v
            if len(_primitive(q)) > depth:
                return canonical(lead, q)
            k += 1
    return None


def principal_shadow(sys: Gbds, depth: int = 2) -> tuple[bool, list[ShadowWitness]]:
    """Every depth-m class contains a point with no nonunit isotropy of word length <= depth.

    Finite boundary paths have trivial isotropy; otherwise a point whose
    primitive period is longer than the depth is used.
    """
    from .paths import boundary_paths

    if depth < 1:
        raise UsageError("depth must be at least 1")
    e = boundary_paths(sys, depth, infinite=False)
    witnesses = [ShadowWitness(p, BoundaryPath(p, ())) for p in e.finite]
    singular = {a for a in sys.atoms() if sys.is_singular_atom(a)}
    for p in e.prefixes:
        reach = reachable_atoms(sys, [p.end])
        hit = sorted(reach & singular)
        if hit:
            q = _path_to(sys, p, hit[0])
            witnesses.append(ShadowWitness(p, BoundaryPath(q, ())))
            continue
        mu = _long_primitive_point(sys, p, depth)
        if mu is None:
            return False, witnesses
        witnesses.append(ShadowWitness(p, mu))
    return True, witnesses


@dataclass(frozen=True)
class EffectivenessReport:
    condition_L: bool
    topologically_free: bool
    effective: bool
    principal_shadow: bool
    witness_cycle: tuple | None = None
    witness_fixed: tuple | None = None
    witness_bisection: tuple | None = None

    @property
    def consistent(self) -> bool:
        return self.condition_L == self.topologically_free == self.effective == self.principal_shadow


def effectiveness_suite(sys: Gbds, shadow_depth: int = 2, bound: int | None = None) -> EffectivenessReport:
    L = condition_L(sys)
    tf, fixed = topologically_free(sys)
    eff, bis = effective(sys, bound)
    ps, _ = principal_shadow(sys, shadow_depth)
    return EffectivenessReport(L.holds, tf, eff, ps, L.witness, fixed, bis)
