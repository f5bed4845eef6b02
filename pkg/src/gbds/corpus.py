"""Seeded random systems and samplers, plus the per-system invariant suite."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .dynamics import (
    Gbds,
    condition_L,
    condition_L_bruteforce,
    is_ultrafilter_cycle,
    is_ultrafilter_cycle_by_definition,
    meets_own_image_everywhere,
)
from .genalg import AlgElement, GenTriple, orthogonalize, refine_family, triple_mul
from .groupoid import convolve, effectiveness_suite, fn_equal, fn_is_zero, kappa
from .lattice import Algebra, AtomSet
from .paths import finite_paths, loop_checks, range_by_transport
from .scalar import Scalar


def random_system(rng: random.Random, max_atoms: int = 4, max_letters: int = 3, min_atoms: int = 1) -> Gbds:
    """Atoms 1..n, letters a, b, c...; each target atom picks at most one source atom,
    which keeps atom images disjoint; ideals are the ranges plus random extra atoms."""
    n = rng.randint(min_atoms, max_atoms)
    k = rng.randint(1, max_letters)
    alg = Algebra(tuple(str(i + 1) for i in range(n)))
    letters = tuple("abcdefgh"[:k])
    images, ideals = {}, {}
    for l in letters:
        row = [0] * n
        for target in range(n):
            src = rng.randrange(n + 1)
            if src < n:
                row[src] |= 1 << target
        images[l] = row
        rng_bits = 0
        for m in row:
            rng_bits |= m
        extra = rng.getrandbits(n) if rng.random() < 0.5 else 0
        ideals[l] = rng_bits | extra
    return Gbds(alg, letters, images, ideals)


def corpus(seed: int, count: int, max_atoms: int = 4, max_letters: int = 3) -> list[Gbds]:
    rng = random.Random(seed)
    return [random_system(rng, max_atoms, max_letters) for _ in range(count)]


def _random_word(rng: random.Random, sys: Gbds, max_len: int) -> tuple[str, ...]:
    return tuple(rng.choice(sys.alphabet) for _ in range(rng.randint(0, max_len)))


def random_subset(rng: random.Random, bits: int) -> int:
    """A random nonempty subset of a nonempty bitset."""
    atoms = [i for i in range(bits.bit_length()) if bits >> i & 1]
    while True:
        out = 0
        for a in atoms:
            if rng.random() < 0.5:
                out |= 1 << a
        if out:
            return out


def random_triple(rng: random.Random, sys: Gbds, max_len: int = 3, diagonal: bool = False) -> GenTriple:
    """A uniformly shaped random generator (retries until the ideals meet)."""
    while True:
        alpha = _random_word(rng, sys, max_len)
        beta = alpha if diagonal else _random_word(rng, sys, max_len)
        allowed = sys.word_ideal_bits(alpha) & sys.word_ideal_bits(beta)
        if allowed:
            return GenTriple(alpha, AtomSet(sys.algebra, random_subset(rng, allowed)), beta)


def random_scalar(rng: random.Random) -> Scalar:
    return Scalar(rng.randint(-3, 3), rng.choice([0, 0, rng.randint(-2, 2)]))


def random_element(rng: random.Random, sys: Gbds, max_terms: int = 4, max_len: int = 2) -> AlgElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        t = random_triple(rng, sys, max_len)
        terms[t] = terms.get(t, Scalar(0)) + random_scalar(rng)
    return AlgElement(sys, terms)


def product_oracle_agrees(sys: Gbds, x: GenTriple, y: GenTriple) -> bool:
    """kappa(x) * kappa(y) equals kappa of the rewritten product."""
    z = triple_mul(sys, x, y)
    lhs = convolve(kappa(AlgElement.of(sys, x)), kappa(AlgElement.of(sys, y)))
    rhs = kappa(AlgElement.of(sys, z)) if z is not None else kappa(AlgElement.zero(sys))
    return fn_equal(lhs, rhs)


def orthogonalization_sound(sys: Gbds, family: list[GenTriple]) -> bool:
    """Refine, orthogonalize and check orthogonality and reconstruction with the oracle."""
    from .genalg import diag_leq

    refined = refine_family(sys, family)
    q = orthogonalize(sys, refined)
    kq = {u: kappa(q[u]) for u in refined}
    for i, u in enumerate(refined):
        for v in refined[i + 1:]:
            if not fn_is_zero(convolve(kq[u], kq[v])):
                return False
    for u in set(family) | set(refined):
        below = AlgElement.zero(sys)
        for w in refined:
            if diag_leq(sys, w, u):
                below = below + q[w]
        if not fn_equal(kappa(AlgElement.of(sys, u)), kappa(below)):
            return False
    return True


@dataclass
class SuiteResult:
    checks: dict[str, list[int]] = field(default_factory=dict)

    def record(self, name: str, ok: bool) -> None:
        c = self.checks.setdefault(name, [0, 0])
        c[0] += ok
        c[1] += 1

    @property
    def ok(self) -> bool:
        return all(p == n for p, n in self.checks.values())


def invariant_suite(sys: Gbds, rng: random.Random, pairs: int = 20, families: int = 5, out: SuiteResult | None = None) -> SuiteResult:
    """Run every cross-checked invariant once on a system."""
    res = out or SuiteResult()
    for _ in range(pairs):
        x, y = random_triple(rng, sys), random_triple(rng, sys)
        res.record("product oracle", product_oracle_agrees(sys, x, y))
    for _ in range(families):
        fam = [random_triple(rng, sys, 2, diagonal=True) for _ in range(rng.randint(1, 6))]
        res.record("orthogonalization", orthogonalization_sound(sys, fam))
    for w in sys.words(3, 1):
        for a in sys.atoms():
            f = is_ultrafilter_cycle(sys, w, a)
            res.record(
                "ultrafilter cycle lemma",
                f == is_ultrafilter_cycle_by_definition(sys, w, a) == meets_own_image_everywhere(sys, w, a),
            )
    for p in finite_paths(sys, 3):
        if p.length:
            res.record("range transport", range_by_transport(sys, p) == p.base)
            is_loop, _ = loop_checks(sys, p)
            res.record("loop vs ultrafilter cycle", is_loop == is_ultrafilter_cycle(sys, p.labels, p.end))
    L = condition_L(sys)
    res.record("condition L search vs brute force", L.holds == (condition_L_bruteforce(sys) is None))
    rep = effectiveness_suite(sys)
    res.record("L = free = effective = principal", rep.consistent)
    res.record("relations (i)-(iv)", relations_hold(sys))
    return res


def relations_hold(sys: Gbds) -> bool:
    """The defining relations of a representation hold under kappa, exhaustively."""
    return all(ok for _, ok in relation_checks(sys))


def relation_checks(sys: Gbds):
    """Yield (name, holds) for every instance of relations (i)-(iv)."""
    alg = sys.algebra
    P = lambda A: AlgElement.p(sys, A)
    S = lambda l, A: AlgElement.s(sys, (l,), A)
    K = kappa
    elems = list(alg.elements())
    yield "(i) p_0 = 0", fn_is_zero(K(P(alg.bottom)))
    for A, B in product(elems, repeat=2):
        yield "(i) meet", fn_equal(K(P(A & B)), convolve(K(P(A)), K(P(B))))
        yield "(i) join", fn_equal(K(P(A | B)), K(P(A) + P(B) - P(A & B)))
    for l in sys.alphabet:
        ideal = AtomSet(alg, sys.ideal_bits(l))
        for A in elems:
            for B in elems:
                if not B <= ideal:
                    continue
                lhs = convolve(K(P(A)), K(S(l, B)))
                rhs = convolve(K(S(l, B)), K(P(sys.theta(l, A))))
                yield "(ii)", fn_equal(lhs, rhs)
    for l, m in product(sys.alphabet, repeat=2):
        for B in elems:
            if not B <= AtomSet(alg, sys.ideal_bits(l)):
                continue
            for C in elems:
                if not C <= AtomSet(alg, sys.ideal_bits(m)):
                    continue
                lhs = convolve(K(S(l, B).adjoint()), K(S(m, C)))
                rhs = K(P(B & C)) if l == m else K(AlgElement.zero(sys))
                yield "(iii)", fn_equal(lhs, rhs)
    for A in elems:
        if not A or not sys.is_regular(A):
            continue
        total = AlgElement.zero(sys)
        for l in sys.delta(A):
            sa = S(l, sys.theta(l, A))
            total = total + sa * sa.adjoint()
        gtotal = None
        for l in sys.delta(A):
            sa = K(S(l, sys.theta(l, A)))
            term = convolve(sa, K(S(l, sys.theta(l, A)).adjoint()))
            gtotal = term if gtotal is None else gtotal + term
        yield "(iv)", fn_equal(K(P(A)), gtotal) and fn_equal(K(P(A)), K(total))
