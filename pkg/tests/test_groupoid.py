import random

import pytest
from hypothesis import given, settings, strategies as st

from gbds.corpus import random_element, random_system, random_triple
from gbds.errors import DomainError, UsageError
from gbds.genalg import AlgElement, make_triple
from gbds.groupoid import (
    CompactOpen,
    GroupElem,
    GroupoidFn,
    apply_phi,
    basic_bisections,
    bisection_in_iso_direct,
    bisection_in_iso_interior,
    convolve,
    cylinder_in_fix,
    domain_set,
    effectiveness_suite,
    fn_adjoint,
    fn_equal,
    fn_is_zero,
    in_domain,
    interior_isotropy_elements,
    is_isotropy_direct,
    iso_contains,
    kappa,
    make_point,
    phi_set,
    principal_shadow,
)
from gbds.paths import BoundaryPath, Cylinder, FinitePath, boundary_paths

seeds = st.integers(min_value=0, max_value=10**9)
G = GroupElem.from_words


def points(sys, depth=3):
    e = boundary_paths(sys, depth)
    return [BoundaryPath(p) for p in e.finite] + list(e.infinite)


def test_reduce():
    a, ai, b = ("a", 1), ("a", -1), ("b", -1)
    assert GroupElem.reduce([a, ai]).is_identity
    assert GroupElem.reduce([a, ("b", 1), ("b", -1)]) == GroupElem((a,))
    assert GroupElem.reduce([a, b]).syllables == (a, b)
    assert G("ab", "cb").split() == (("a",), ("c",))
    assert GroupElem.reduce([ai, a]).is_identity
    assert GroupElem(((("a"), -1), ("b", 1))).split() is None


def test_in_domain_examples(F1, F4):
    loop = BoundaryPath(FinitePath(0), (("a", 0),))
    assert in_domain(F1, GroupElem(), loop)
    assert in_domain(F1, G("a"), loop)
    assert not in_domain(F4, G("b"), BoundaryPath(FinitePath(1)))
    # U_{a^{-1}} needs the range vertex inside I_a
    assert in_domain(F4, G("", "a"), BoundaryPath(FinitePath(1)))
    assert not in_domain(F4, G("", "a"), BoundaryPath(FinitePath(None, (("a", 0), ("a", 1)))))


def test_apply_phi_examples(F1, F4):
    loop = BoundaryPath(FinitePath(0), (("a", 0),))
    assert apply_phi(F1, G("a"), loop) == loop
    mu = BoundaryPath(FinitePath(None, (("a", 0), ("a", 1))))
    assert apply_phi(F4, G("", "a"), mu) == BoundaryPath(FinitePath(0, (("a", 1),)))
    with pytest.raises(DomainError):
        apply_phi(F4, G("a"), mu)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_partial_action_laws(seed):
    rng = random.Random(seed)
    s = random_system(rng)
    pts = points(s)
    elems = [G(a, b) for a in s.words(2) for b in s.words(2)]
    for mu in pts:
        for t in elems:
            if in_domain(s, t.inverse(), mu):
                nu = apply_phi(s, t, mu)
                assert in_domain(s, t, nu)
                assert apply_phi(s, t.inverse(), nu) == mu
        for t in rng.sample(elems, min(6, len(elems))):
            for r in rng.sample(elems, min(6, len(elems))):
                if in_domain(s, t.inverse(), mu) and in_domain(s, r.inverse(), apply_phi(s, t, mu)):
                    rt = r * t
                    assert in_domain(s, rt.inverse(), mu)
                    assert apply_phi(s, rt, mu) == apply_phi(s, r, apply_phi(s, t, mu))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_phi_set_matches_pointwise(seed):
    rng = random.Random(seed)
    s = random_system(rng)
    x = random_triple(rng, s)
    U = CompactOpen.cylinder(s, x.left, x.atoms)
    t = G(*(tuple(rng.choice(s.alphabet) for _ in range(rng.randint(0, 2))) for _ in range(2)))
    image = phi_set(s, t, U)
    for mu in points(s, 4):
        inside = mu in U and in_domain(s, t.inverse(), mu)
        if inside:
            assert apply_phi(s, t, mu) in image
    for mu in points(s, 4):
        if mu in image:
            back = apply_phi(s, t.inverse(), mu)
            assert back in U


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_groupoid_laws(seed):
    rng = random.Random(seed)
    s = random_system(rng)
    pts = points(s)
    elems = [G(a, b) for a in s.words(2) for b in s.words(2)]
    arrows = [make_point(s, t, mu) for mu in pts for t in elems if in_domain(s, t, mu)]
    for p in rng.sample(arrows, min(15, len(arrows))):
        inv = p.inverse(s)
        unit = p.compose(s, inv)
        assert unit.t.is_identity and unit.mu == p.mu
        for q in arrows:
            if q.mu == p.source(s):
                pq = p.compose(s, q)
                assert pq.range() == p.range() and pq.source(s) == q.source(s)


def test_compact_open_algebra(F2):
    v = F2.algebra.top
    whole = CompactOpen.whole(F2)
    Na, Nb = CompactOpen.cylinder(F2, "a", v), CompactOpen.cylinder(F2, "b", v)
    assert (Na | Nb) == whole
    assert not (Na & Nb)
    assert whole - Na == Nb
    assert Na.complement() == Nb
    assert Na.refine(3) == Na


def test_kappa_examples(F1, F2):
    v = F1.algebra.top
    p = AlgElement.p(F1, v)
    ss = AlgElement.gen(F1, "a", v, "a")
    assert fn_equal(kappa(p), kappa(ss))
    assert kappa(AlgElement.zero(F1)).parts == {}
    assert not fn_equal(kappa(AlgElement.p(F2, v)), kappa(AlgElement.gen(F2, "a", v, "a")))
    s_a = AlgElement.s(F1, "a", v)
    assert fn_equal(convolve(kappa(s_a), kappa(s_a.adjoint())), kappa(ss))
    assert fn_is_zero(convolve(kappa(s_a), kappa(AlgElement.zero(F1))))


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_kappa_supports_lie_in_domains(seed):
    rng = random.Random(seed)
    s = random_system(rng)
    assert kappa(random_element(rng, s, 4, 3)).check_supports()


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_oracle_agreement_on_elements(seed):
    """convolve(kappa x, kappa y) = kappa(x y) for sums of up to four generators."""
    rng = random.Random(seed)
    s = random_system(rng)
    x, y = random_element(rng, s), random_element(rng, s)
    assert fn_equal(convolve(kappa(x), kappa(y)), kappa(x * y))


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_kappa_respects_adjoint(seed):
    rng = random.Random(seed)
    s = random_system(rng)
    x = random_element(rng, s)
    assert fn_equal(fn_adjoint(kappa(x)), kappa(x.adjoint()))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_fn_equal_matches_pointwise_evaluation(seed):
    rng = random.Random(seed)
    s = random_system(rng, max_atoms=3)
    x, y = random_element(rng, s, 3, 2), random_element(rng, s, 3, 2)
    f, g = kappa(x), kappa(y)
    eq = fn_equal(f, g)
    if not eq:
        return
    from gbds.groupoid import GroupoidPoint

    for t in set(f.parts) | set(g.parts):
        for mu in points(s, 4):
            if in_domain(s, t, mu):
                p = GroupoidPoint(t, mu)
                assert f.evaluate(p) == g.evaluate(p)


def test_iso_contains_examples(F1, F3, F4):
    loop = BoundaryPath(FinitePath(0), (("a", 0),))
    assert iso_contains(F1, GroupElem(), loop)
    assert iso_contains(F1, G("a"), loop)
    assert iso_contains(F1, G("", "a"), loop)
    assert not iso_contains(F1, G("aa", "b"), loop)
    mu3 = BoundaryPath(FinitePath(0), (("a", 1), ("a", 0)))
    assert not iso_contains(F3, G("a"), mu3)
    assert iso_contains(F3, G("aa"), mu3)
    for mu in points(F4):
        for a in F4.words(3):
            for b in F4.words(3):
                t = G(a, b)
                if not t.is_identity:
                    assert not iso_contains(F4, t, mu)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_iso_contains_matches_direct(seed):
    s = random_system(random.Random(seed))
    elems = {G(a, b) for a in s.words(3) for b in s.words(3)}
    for mu in points(s):
        for t in elems:
            assert iso_contains(s, t, mu) == is_isotropy_direct(s, t, mu)


def test_bisection_examples(F1, F2):
    v = F1.algebra.top
    assert bisection_in_iso_interior(F1, GroupElem(), Cylinder((), v))
    assert bisection_in_iso_interior(F1, G("a"), Cylinder(("a",), v))
    assert not bisection_in_iso_interior(F2, G("a"), Cylinder(("a",), v))
    with pytest.raises(UsageError):
        bisection_in_iso_interior(F2, G("b"), Cylinder(("a",), v))


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_bisection_criterion_matches_enumeration(seed):
    s = random_system(random.Random(seed))
    for t, cyl in basic_bisections(s, 3):
        assert bisection_in_iso_interior(s, t, cyl) == bisection_in_iso_direct(s, t, cyl)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_iso_interior_sandwich(seed):
    s = random_system(random.Random(seed), max_atoms=3)
    for t, cyl in basic_bisections(s, 2):
        if bisection_in_iso_interior(s, t, cyl):
            for mu in points(s, 4):
                from gbds.paths import in_cylinder

                if in_cylinder(s, mu, cyl):
                    assert iso_contains(s, t, mu)


def test_effectiveness_fixtures(F1, F2, F3, F4):
    for sys, expected in ((F1, False), (F2, True), (F3, False), (F4, True)):
        r = effectiveness_suite(sys)
        assert r.consistent
        assert r.condition_L is expected


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_effectiveness_equivalences(seed):
    s = random_system(random.Random(seed))
    r = effectiveness_suite(s)
    assert r.consistent, r
    if r.condition_L:
        assert interior_isotropy_elements(s, 3) == set()


def test_principal_shadow(F1, F2, F4):
    ok, wit = principal_shadow(F2, 2)
    assert ok and len(wit) == 4
    for w in wit:
        assert w.point.truncate(2) == w.cls
        assert len(w.point.period) > 2
    assert not principal_shadow(F1, 2)[0]
    assert principal_shadow(F4, 2)[0]


def test_normality_oracle_detects_non_normal(F1, F2):
    v = F2.algebra.top
    for sys, normal in ((F1, True), (F2, False)):
        x = AlgElement.s(sys, "a", v)
        k, ks = kappa(x), kappa(x.adjoint())
        assert fn_equal(convolve(k, ks), convolve(ks, k)) is normal
