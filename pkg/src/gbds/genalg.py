"""Finite linear combinations of standard generators s_{alpha,A} s*_{beta,A}.

A generator is stored as a triple (alpha, A, beta). Products of triples are
computed by the rewriting rules coming from the defining relations; the
result of such rewriting is a syntactic normal form only. Equality in the
algebra is decided by the groupoid model (see groupoid.fn_equal).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from .dynamics import Gbds, Word, has_no_exits, is_cycle
from .errors import DomainError, UsageError
from .lattice import AtomSet
from .paths import BoundaryPath, Cylinder, boundary_paths, in_cylinder, representative
from .scalar import ONE, Scalar


@dataclass(frozen=True)
class GenTriple:
    """The generator s_{left,atoms} s*_{right,atoms}."""

    left: Word
    atoms: AtomSet
    right: Word

    @property
    def is_diagonal(self) -> bool:
        return self.left == self.right

    def adjoint(self) -> "GenTriple":
        return GenTriple(self.right, self.atoms, self.left)

    def sort_key(self):
        return (len(self.left), self.left, self.atoms.bits, len(self.right), self.right)

    def __repr__(self) -> str:
        fmt = lambda w: "".join(w) or "∅"
        return f"({fmt(self.left)},{self.atoms!r},{fmt(self.right)})"


def make_triple(sys: Gbds, left: Sequence[str], atoms: AtomSet, right: Sequence[str] = ()) -> GenTriple:
    """Validated triple; the set must be nonempty and lie in both word ideals."""
    a, b = sys.check_word(left), sys.check_word(right)
    sys._own(atoms)
    if not atoms:
        raise DomainError("generator with empty set is zero")
    allowed = sys.word_ideal_bits(a) & sys.word_ideal_bits(b)
    if atoms.bits & ~allowed:
        raise DomainError(f"{atoms!r} is not in I_{''.join(a) or '∅'} ∩ I_{''.join(b) or '∅'}")
    return GenTriple(a, atoms, b)


def _strip(word: Word, prefix: Word) -> Word | None:
    n = len(prefix)
    return word[n:] if word[:n] == prefix else None


def triple_mul(sys: Gbds, x: GenTriple, y: GenTriple) -> GenTriple | None:
    """Product of two generators, None when it is zero."""
    alpha, A, beta = x.left, x.atoms, x.right
    gamma, B, delta = y.left, y.atoms, y.right
    if beta == gamma:
        C = A & B
        return GenTriple(alpha, C, delta) if C else None
    rest = _strip(beta, gamma)
    if rest is not None:
        C = A & sys.theta_word(rest, B)
        return GenTriple(alpha, C, delta + rest) if C else None
    rest = _strip(gamma, beta)
    if rest is not None:
        C = B & sys.theta_word(rest, A)
        return GenTriple(alpha + rest, C, delta) if C else None
    return None


class StarProduct(NamedTuple):
    """Result of s*_{beta,A} s_{gamma,B}: kind is 'diag', 'star', 'plain' or 'zero'."""

    kind: str
    word: Word
    atoms: AtomSet | None


def star_left_mul(sys: Gbds, beta: Sequence[str], A: AtomSet, gamma: Sequence[str], B: AtomSet) -> StarProduct:
    """s*_{beta,A} s_{gamma,B} as p_C, s*_{beta',C}, s_{gamma',C} or 0."""
    beta, gamma = sys.check_word(beta), sys.check_word(gamma)
    if beta == gamma:
        C = A & B
        return StarProduct("diag", (), C) if C else StarProduct("zero", (), None)
    rest = _strip(beta, gamma)
    if rest is not None:
        C = A & sys.theta_word(rest, B)
        return StarProduct("star", rest, C) if C else StarProduct("zero", (), None)
    rest = _strip(gamma, beta)
    if rest is not None:
        C = B & sys.theta_word(rest, A)
        return StarProduct("plain", rest, C) if C else StarProduct("zero", (), None)
    return StarProduct("zero", (), None)


class AlgElement:
    """A finite linear combination of generators with nonzero exact coefficients."""

    __slots__ = ("sys", "terms")

    def __init__(self, sys: Gbds, terms: Mapping[GenTriple, Scalar] | None = None):
        self.sys = sys
        clean: dict[GenTriple, Scalar] = {}
        for t, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if c:
                clean[t] = c
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, sys: Gbds) -> "AlgElement":
        return cls(sys)

    @classmethod
    def gen(cls, sys: Gbds, left: Sequence[str], atoms: AtomSet, right: Sequence[str] = (), coeff=ONE) -> "AlgElement":
        if not atoms:
            return cls(sys)
        return cls(sys, {make_triple(sys, left, atoms, right): coeff})

    @classmethod
    def p(cls, sys: Gbds, atoms: AtomSet) -> "AlgElement":
        return cls.gen(sys, (), atoms, ())

    @classmethod
    def s(cls, sys: Gbds, word: Sequence[str], atoms: AtomSet) -> "AlgElement":
        return cls.gen(sys, word, atoms, ())

    @classmethod
    def of(cls, sys: Gbds, triple: GenTriple, coeff=ONE) -> "AlgElement":
        return cls(sys, {triple: coeff})

    # arithmetic

    def _same(self, other: "AlgElement") -> None:
        if other.sys is not self.sys:
            raise UsageError("elements belong to different systems")

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._same(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, Scalar(0)) + c
        return AlgElement(self.sys, out)

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.sys, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + (-other)

    def scale(self, c) -> "AlgElement":
        c = Scalar.coerce(c)
        return AlgElement(self.sys, {t: c * v for t, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgElement):
            return self.scale(other)
        self._same(other)
        out: dict[GenTriple, Scalar] = {}
        for x, a in self.terms.items():
            for y, b in other.terms.items():
                z = triple_mul(self.sys, x, y)
                if z is not None:
                    out[z] = out.get(z, Scalar(0)) + a * b
        return AlgElement(self.sys, out)

    def __rmul__(self, other):
        return self.scale(other)

    def adjoint(self) -> "AlgElement":
        return AlgElement(self.sys, {t.adjoint(): c.conjugate() for t, c in self.terms.items()})

    # inspection

    def __eq__(self, other) -> bool:
        """Syntactic equality of normal forms (not algebra equality)."""
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.sys is other.sys and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_diagonal(self) -> bool:
        return all(t.is_diagonal for t in self.terms)

    def sorted_terms(self) -> list[tuple[GenTriple, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def max_word_len(self) -> int:
        return max((max(len(t.left), len(t.right)) for t in self.terms), default=0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{t!r}" for t, c in self.sorted_terms())


def adjoint(x: AlgElement) -> AlgElement:
    return x.adjoint()


# -- normality and the abelian core --------------------------------------------------

def core_form(sys: Gbds, x: GenTriple) -> int | None:
    """Which of the three commuting generator shapes x has, if any.

    1: alpha = beta; 2: alpha = beta gamma; 3: beta = alpha gamma, where in
    the last two cases (gamma, A) is a cycle without exits.
    """
    if x.left == x.right:
        return 1
    gamma = _strip(x.left, x.right)
    if gamma and is_cycle(sys, gamma, x.atoms) and has_no_exits(sys, gamma, x.atoms):
        return 2
    gamma = _strip(x.right, x.left)
    if gamma and is_cycle(sys, gamma, x.atoms) and has_no_exits(sys, gamma, x.atoms):
        return 3
    return None


def is_normal_generator(sys: Gbds, x: GenTriple) -> bool:
    """Sufficient condition for x x* = x* x."""
    return core_form(sys, x) is not None


def core_membership(sys: Gbds, x: GenTriple) -> bool:
    """x is one of the generators of the abelian core."""
    return core_form(sys, x) is not None


# -- diagonal families -------------------------------------------------------------------

def diag_leq(sys: Gbds, u: GenTriple, v: GenTriple) -> bool:
    """(alpha,A,alpha) <= (beta,B,beta) iff alpha = beta alpha' and A below theta_alpha'(B)."""
    rest = _strip(u.left, v.left)
    return rest is not None and u.atoms <= sys.theta_word(rest, v.atoms)


def _require_diagonal(items: Iterable[GenTriple]) -> list[GenTriple]:
    out = list(items)
    for t in out:
        if not t.is_diagonal:
            raise UsageError(f"{t!r} is not diagonal")
    return out


def _venn_cells(sets: Sequence[AtomSet]) -> list[AtomSet]:
    """Nonempty sets of the form (meet of some) minus (join of the rest), at least one meet."""
    if not sets:
        return []
    alg = sets[0].algebra
    by_sig: dict[int, int] = {}
    for a in range(alg.atom_count):
        sig = 0
        for i, s in enumerate(sets):
            if a in s:
                sig |= 1 << i
        if sig:
            by_sig[sig] = by_sig.get(sig, 0) | 1 << a
    return [AtomSet(alg, bits) for _, bits in sorted(by_sig.items())]


def refine_family(sys: Gbds, family: Iterable[GenTriple]) -> list[GenTriple]:
    """A family whose members pairwise multiply to zero or are comparable, with every
    original member a disjoint union of same-word members, using only the original words."""
    fam = _require_diagonal(family)
    if any(not t.atoms for t in fam):
        raise UsageError("zero element in family")
    if not fam:
        return []
    m = max(len(t.left) for t in fam)
    if m == 0:
        cells = _venn_cells(sorted({t.atoms for t in fam}, key=lambda s: s.bits))
        return sorted((GenTriple((), c, ()) for c in cells), key=GenTriple.sort_key)
    lower = refine_family(sys, [t for t in fam if len(t.left) < m])
    top = [t for t in fam if len(t.left) == m]
    out = list(lower)
    for alpha in sorted({t.left for t in top}):
        d = set()
        for t in lower + top:
            rest = _strip(alpha, t.left)
            if rest is not None:
                img = sys.theta_word(rest, t.atoms)
                if img:
                    d.add(img)
        for c in _venn_cells(sorted(d, key=lambda s: s.bits)):
            out.append(GenTriple(alpha, c, alpha))
    return sorted(set(out), key=GenTriple.sort_key)


def is_refined(sys: Gbds, family: Sequence[GenTriple]) -> bool:
    for u, v in combinations(family, 2):
        if triple_mul(sys, u, v) is not None and not diag_leq(sys, u, v) and not diag_leq(sys, v, u):
            return False
    return True


def orthogonalize(sys: Gbds, family: Sequence[GenTriple]) -> dict[GenTriple, AlgElement]:
    """q_u = P_u * prod over v < u of (P_u - P_v), expanded into generators."""
    fam = sorted(set(_require_diagonal(family)), key=GenTriple.sort_key)
    if not is_refined(sys, fam):
        raise UsageError("family is not refined: refine_family it first")
    out = {}
    for u in fam:
        pu = AlgElement.of(sys, u)
        q = pu
        for v in fam:
            if v != u and diag_leq(sys, v, u):
                q = q * (pu - AlgElement.of(sys, v))
        out[u] = q
    return out


def character_eval(sys: Gbds, mu: BoundaryPath, x: AlgElement) -> Scalar:
    """Value of the character at mu on a diagonal element."""
    total = Scalar(0)
    for t, c in x.terms.items():
        if not t.is_diagonal:
            raise UsageError(f"{t!r} is not diagonal")
        if in_cylinder(sys, mu, Cylinder(t.left, t.atoms)):
            total = total + c
    return total


def class_representatives(sys: Gbds, depth: int) -> list[BoundaryPath]:
    """One boundary path for each way of agreeing to the given depth."""
    e = boundary_paths(sys, depth, infinite=False)
    return [BoundaryPath(p, ()) for p in e.finite] + [representative(sys, p) for p in e.prefixes]


def diag_is_zero(sys: Gbds, x: AlgElement) -> bool:
    """Evaluate every character on representatives deep enough for x."""
    return all(not character_eval(sys, mu, x) for mu in class_representatives(sys, x.max_word_len()))


def min_witness_nonzero(sys: Gbds, family: Sequence[GenTriple], mu: BoundaryPath) -> GenTriple:
    """The least member of the family whose cylinder contains mu; its q is nonzero at mu."""
    fam = _require_diagonal(family)
    matches = [u for u in fam if in_cylinder(sys, mu, Cylinder(u.left, u.atoms))]
    if not matches:
        raise DomainError("no member of the family contains the path")
    for u, v in combinations(matches, 2):
        if not diag_leq(sys, u, v) and not diag_leq(sys, v, u):
            raise UsageError("matches are not totally ordered: refine the family first")
    w = next(u for u in matches if all(diag_leq(sys, u, v) for v in matches))
    q = orthogonalize(sys, family)[w]
    if character_eval(sys, mu, q) != ONE:
        raise AssertionError("minimal witness does not evaluate to one")
    return w
