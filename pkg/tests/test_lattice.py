from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from gbds.errors import UsageError
from gbds.lattice import (
    Algebra,
    AtomSet,
    Ideal,
    Ultrafilter,
    is_filter,
    is_maximal_filter,
    is_prime_filter,
    join,
    leq,
    meet,
    meets_every_nonzero_criterion,
    relcomp,
    up_set,
    zero_set,
)

ALG = Algebra(("1", "2", "3"))
bitsets = st.integers(min_value=0, max_value=7).map(lambda b: AtomSet(ALG, b))


def test_basic_operations():
    a, b = ALG.from_names(["1", "2"]), ALG.from_names(["2", "3"])
    assert meet(a, b) == ALG.from_names(["2"])
    assert join(a, b) == ALG.top
    assert relcomp(a, b) == ALG.from_names(["1"])
    assert leq(ALG.from_names(["2"]), a)
    assert not leq(a, b)
    assert list(a) == [0, 1]
    assert len(a) == 2 and a.names() == ("1", "2")


def test_mismatched_algebras_rejected():
    other = Algebra(("x",))
    with pytest.raises(UsageError):
        ALG.top & other.top


def test_duplicate_atom_names_rejected():
    with pytest.raises(UsageError):
        Algebra(("v", "v"))


@given(bitsets, bitsets, bitsets)
def test_boolean_algebra_laws(x, y, z):
    assert x & (y | z) == (x & y) | (x & z)
    assert x | (y & z) == (x | y) & (x | z)
    assert (x - y) | (x & y) == x
    assert ((x - y) & y) == ALG.bottom
    assert (x <= y) == ((x & y) == x)
    assert x.complement().complement() == x


@given(bitsets)
def test_ultrafilter_membership_is_atom_membership(x):
    for u in ALG.ultrafilters():
        assert (x in u) == (u.atom in x)
    assert zero_set(x) == {u.atom for u in ALG.ultrafilters() if x not in u}


def _all_families(alg):
    elems = list(alg.elements())
    for r in range(len(elems) + 1):
        for fam in combinations(elems, r):
            yield frozenset(fam), elems


def test_ultrafilter_characterisations_exhaustive():
    """On a 3-atom algebra every set of elements is checked: maximal filters,
    prime filters, the meet criterion and the atom ultrafilters coincide."""
    atom_ufs = {u.members() for u in ALG.ultrafilters()}
    seen = set()
    for fam, elems in _all_families(ALG):
        maximal = is_maximal_filter(fam, elems)
        assert maximal == is_prime_filter(fam, elems) == meets_every_nonzero_criterion(fam, elems)
        assert maximal == (fam in atom_ufs)
        if maximal:
            seen.add(fam)
    assert seen == atom_ufs


def test_filters_are_principal():
    for fam, elems in _all_families(Algebra(("1", "2"))):
        if is_filter(fam, elems):
            least = min(fam, key=len)
            assert fam == up_set([least], elems)


def test_ideal():
    g = ALG.from_names(["1", "3"])
    I = Ideal(g)
    assert ALG.from_names(["3"]) in I
    assert ALG.from_names(["2"]) not in I
    assert len(I.members()) == 4
    assert [u.atom for u in I.ultrafilters()] == [0, 2]


def test_ultrafilter_members():
    u = Ultrafilter(ALG, 1)
    assert len(u.members()) == 4
    assert all(1 in m for m in u.members())
