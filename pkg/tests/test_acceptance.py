"""Acceptance criteria 1-9, each reported on one PASS/FAIL line."""
import random
import time
from itertools import combinations

from conftest import ACCEPTANCE_LINES

from gbds.corpus import (
    corpus,
    orthogonalization_sound,
    product_oracle_agrees,
    random_subset,
    random_triple,
    relation_checks,
)
from gbds.dynamics import (
    condition_L,
    cycles,
    is_ultrafilter_cycle,
    is_ultrafilter_cycle_by_definition,
    meets_own_image_everywhere,
)
from gbds.errors import DomainError
from gbds.fixtures import FIXTURES
from gbds.genalg import AlgElement, GenTriple, character_eval, core_form, make_triple
from gbds.groupoid import (
    GroupElem,
    bisection_in_iso_direct,
    bisection_in_iso_interior,
    convolve,
    effectiveness_suite,
    fn_equal,
    kappa,
)
from gbds.lattice import AtomSet
from gbds.paths import Cylinder, all_points_if_finite, finite_paths, loop_checks

FIX = {name: make() for name, make in sorted(FIXTURES.items())}


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_criterion_1_product_oracle():
    start = time.perf_counter()
    rng = random.Random(1)
    passed = total = 0
    for sys in FIX.values():
        for _ in range(1000):
            x, y = random_triple(rng, sys), random_triple(rng, sys)
            passed += product_oracle_agrees(sys, x, y)
            total += 1
    for sys in corpus(101, 100, max_atoms=3):
        for _ in range(20):
            x, y = random_triple(rng, sys), random_triple(rng, sys)
            passed += product_oracle_agrees(sys, x, y)
            total += 1
    elapsed = time.perf_counter() - start
    ok = passed == total and elapsed < 60
    report(1, ok, f"{passed}/{total} generator pairs agree, {elapsed:.1f} s (limit 60 s)")
    assert ok


def test_criterion_2_orthogonalization():
    rng = random.Random(2)
    systems = list(FIX.values()) + corpus(202, 46)
    passed = 0
    samples = 500
    for i in range(samples):
        sys = systems[i % len(systems)]
        fam = [random_triple(rng, sys, 2, diagonal=True) for _ in range(rng.randint(1, 6))]
        passed += orthogonalization_sound(sys, fam)
    report(2, passed == samples, f"{passed}/{samples} families orthogonal with exact reconstruction")
    assert passed == samples


def test_criterion_3_ultrafilter_cycle_lemma():
    passed = total = positives = 0
    for sys in list(FIX.values()) + corpus(303, 100):
        for w in sys.words(4, 1):
            for a in sys.atoms():
                fast = is_ultrafilter_cycle(sys, w, a)
                ok = fast == is_ultrafilter_cycle_by_definition(sys, w, a) == meets_own_image_everywhere(sys, w, a)
                passed += ok
                positives += fast
                total += 1
    report(3, passed == total, f"{passed}/{total} (word, ultrafilter) pairs agree, {positives} cycles")
    assert passed == total and positives


def test_criterion_4_loops_are_ultrafilter_cycles():
    passed = total = loops = 0
    for sys in list(FIX.values()) + corpus(404, 100):
        for p in finite_paths(sys, 4):
            if not p.length:
                continue
            is_loop, _ = loop_checks(sys, p)
            passed += is_loop == is_ultrafilter_cycle(sys, p.labels, p.end)
            loops += is_loop
            total += 1
    report(4, passed == total, f"{passed}/{total} paths of length <= 4 agree, {loops} loops")
    assert passed == total and loops


def _core_samples(sys, rng, n):
    """Up to n generators of each core form (1), (2), (3)."""
    out = {1: set(), 2: set(), 3: set()}
    for _ in range(n):
        out[1].add(random_triple(rng, sys, 2, diagonal=True))
    cyc = [c for c in cycles(sys, sys.algebra.atom_count) if c.no_exit_atoms]
    for _ in range(4 * n if cyc else 0):
        c = rng.choice(cyc)
        A = AtomSet(sys.algebra, random_subset(rng, c.no_exit_atoms.bits))
        beta = tuple(rng.choice(sys.alphabet) for _ in range(rng.randint(0, 2)))
        try:
            x = make_triple(sys, beta + c.word, A, beta)
        except DomainError:
            continue
        x = x if rng.random() < 0.5 else x.adjoint()
        out[core_form(sys, x)].add(x)
    return {k: sorted(v, key=GenTriple.sort_key)[:n] for k, v in out.items()}


def test_criterion_5_abelian_core():
    rng = random.Random(5)
    cases = {(1, 1): "i", (1, 2): "ii", (1, 3): "iii", (2, 3): "iv", (3, 3): "v", (2, 2): "vi"}
    counts = dict.fromkeys(cases.values(), 0)
    normal_ok = normal_total = comm_ok = 0
    systems = list(FIX.values()) + [s for s in corpus(505, 120) if not condition_L(s).holds][:30]
    for sys in systems:
        samples = _core_samples(sys, rng, 6)
        K = {x: kappa(AlgElement.of(sys, x)) for xs in samples.values() for x in xs}
        Ks = {x: kappa(AlgElement.of(sys, x.adjoint())) for x in K}
        for x in K:
            normal_total += 1
            normal_ok += fn_equal(convolve(K[x], Ks[x]), convolve(Ks[x], K[x]))
        for (f, g), name in cases.items():
            for x in samples[f]:
                for y in samples[g]:
                    counts[name] += 1
                    comm_ok += fn_equal(convolve(K[x], K[y]), convolve(K[y], K[x]))
    pairs = sum(counts.values())
    ok = normal_ok == normal_total and comm_ok == pairs and all(counts.values())
    strata = ", ".join(f"({k}) {v}" for k, v in counts.items())
    report(5, ok, f"{normal_ok}/{normal_total} normal, {comm_ok}/{pairs} pairs commute; strata {strata}")
    assert ok


def test_criterion_6_condition_L_equivalence():
    expected = {"F1": False, "F2": True, "F3": False, "F4": True}
    bad = []
    fixtures_ok = True
    for name, sys in FIX.items():
        r = effectiveness_suite(sys)
        fixtures_ok &= r.consistent and r.condition_L is expected[name]
    systems = corpus(606, 200)
    held = 0
    for i, sys in enumerate(systems):
        r = effectiveness_suite(sys)
        held += r.condition_L
        if not (r.consistent and r.condition_L == r.topologically_free == r.effective):
            bad.append(i)
    ok = fixtures_ok and not bad
    report(6, ok, f"fixtures as expected: {fixtures_ok}; {200 - len(bad)}/200 corpus systems consistent ({held} with L)")
    assert ok, bad


def test_criterion_7_core_is_diagonal_under_L():
    systems = [s for s in list(FIX.values()) + corpus(707, 150) if condition_L(s).holds]
    checked = units = 0
    offenders = []
    for sys in systems:
        words = [w for w in sys.words(3) if sys.in_W(w)]
        for alpha in words:
            for beta in words:
                t = GroupElem.from_words(alpha, beta)
                allowed = sys.word_ideal_bits(alpha) & sys.word_ideal_bits(beta)
                for c in AtomSet(sys.algebra, allowed):
                    cyl = Cylinder(alpha, sys.algebra.atom(c))
                    inside = bisection_in_iso_interior(sys, t, cyl)
                    checked += 1
                    if inside:
                        units += 1
                        if not t.is_identity or not bisection_in_iso_direct(sys, t, cyl):
                            offenders.append((sys, t, cyl))
    ok = not offenders and checked and units
    report(7, bool(ok), f"{len(systems)} systems with L, {checked} bisections, {units} inside (all units)")
    assert ok


def test_criterion_8_spectrum():
    F4, F1 = FIX["F4"], FIX["F1"]
    pts = all_points_if_finite(F4)
    projections = [
        GenTriple(w, F4.algebra.atom(c), w)
        for w in F4.words(2)
        for c in AtomSet(F4.algebra, F4.word_ideal_bits(w))
    ]
    separated = all(
        any(
            character_eval(F4, mu, AlgElement.of(F4, q)) != character_eval(F4, nu, AlgElement.of(F4, q))
            for q in projections
        )
        for mu, nu in combinations(pts, 2)
    )
    f4_ok = pts is not None and len(pts) == 3 and separated

    one = all_points_if_finite(F1)
    v = F1.algebra.top
    p = kappa(AlgElement.p(F1, v))
    diag = [GenTriple(w, v, w) for w in F1.words(4)]
    f1_ok = (
        one is not None
        and len(one) == 1
        and all(fn_equal(kappa(AlgElement.of(F1, d)), p) for d in diag)
        and all(character_eval(F1, one[0], AlgElement.of(F1, d)).re == 1 for d in diag)
    )
    report(8, f4_ok and f1_ok, f"F4: {len(pts or [])} points, separated: {separated}; F1: {len(one or [])} point, D one-dimensional: {f1_ok}")
    assert f4_ok and f1_ok


def test_criterion_9_representation_relations():
    passed = total = 0
    failures = []
    for name, sys in FIX.items():
        for rel, ok in relation_checks(sys):
            passed += ok
            total += 1
            if not ok:
                failures.append((name, rel))
    report(9, passed == total, f"{passed}/{total} relation instances hold on F1-F4")
    assert passed == total, failures
