"""Generalized Boolean dynamical systems on a finite Boolean algebra.

A system is an alphabet of letters, each acting on the algebra by a map
determined by its values on atoms (images of distinct atoms are disjoint),
together with a principal ideal for each letter that contains the range of
its action. Words act left to right: theta_{uv} = theta_v o theta_u.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import UsageError, ValidationError
from .lattice import Algebra, AtomSet, Ultrafilter

Word = tuple[str, ...]


class Gbds:
    """A finite generalized Boolean dynamical system."""

    def __init__(
        self,
        algebra: Algebra,
        alphabet: Sequence[str],
        images: Mapping[str, Sequence[AtomSet | int]],
        ideals: Mapping[str, AtomSet | int] | None = None,
    ):
        self.algebra = algebra
        self.alphabet: tuple[str, ...] = tuple(alphabet)
        if not self.alphabet:
            raise ValidationError("the alphabet is empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValidationError("duplicate letters in the alphabet")
        n = algebra.atom_count
        full = algebra.full_mask
        self._img: dict[str, tuple[int, ...]] = {}
        self._pre: dict[str, tuple[int | None, ...]] = {}
        for letter in self.alphabet:
            row = images.get(letter)
            if row is None:
                row = [0] * n
            if len(row) != n:
                raise ValidationError(f"letter {letter!r}: expected an image for each of {n} atoms")
            masks = tuple(r.bits if isinstance(r, AtomSet) else int(r) for r in row)
            seen = 0
            pre: list[int | None] = [None] * n
            for a, m in enumerate(masks):
                if m & ~full:
                    raise ValidationError(f"letter {letter!r}: image of atom {algebra.names[a]!r} leaves the algebra")
                if m & seen:
                    raise ValidationError(f"letter {letter!r}: non-disjoint atom images")
                seen |= m
                for c in AtomSet(algebra, m):
                    pre[c] = a
            self._img[letter] = masks
            self._pre[letter] = tuple(pre)
        unknown = set(images) - set(self.alphabet)
        if unknown:
            raise ValidationError(f"actions given for unknown letters {sorted(unknown)}")
        self._gen: dict[str, int] = {}
        self.defaulted_ideals: tuple[str, ...] = ()
        defaulted = []
        ideals = ideals or {}
        for letter in self.alphabet:
            rng = self._theta_bits(letter, full)
            if letter in ideals:
                g = ideals[letter]
                g = g.bits if isinstance(g, AtomSet) else int(g)
                if g & ~full:
                    raise ValidationError(f"ideal of {letter!r} leaves the algebra")
                if rng & ~g:
                    raise ValidationError(
                        f"θ_{letter}(B) ⊈ I_{letter}: the range of {letter!r} is not inside its ideal"
                    )
                self._gen[letter] = g
            else:
                self._gen[letter] = rng
                defaulted.append(letter)
        unknown = set(ideals) - set(self.alphabet)
        if unknown:
            raise ValidationError(f"ideals given for unknown letters {sorted(unknown)}")
        self.defaulted_ideals = tuple(defaulted)

    # -- basic maps on bitsets ------------------------------------------------

    def _check_letter(self, letter: str) -> None:
        if letter not in self._img:
            raise UsageError(f"unknown letter {letter!r}")

    def check_word(self, word: Iterable[str]) -> Word:
        w = tuple(word)
        for letter in w:
            self._check_letter(letter)
        return w

    def _theta_bits(self, letter: str, bits: int) -> int:
        masks = self._img[letter]
        out, i = 0, 0
        while bits:
            if bits & 1:
                out |= masks[i]
            bits >>= 1
            i += 1
        return out

    def theta_word_bits(self, word: Word, bits: int) -> int:
        for letter in word:
            if not bits:
                return 0
            bits = self._theta_bits(letter, bits)
        return bits

    def atom_image(self, letter: str, atom: int) -> int:
        return self._img[letter][atom]

    def pre(self, letter: str, atom: int) -> int | None:
        """The atom whose image under the letter contains the given atom."""
        self._check_letter(letter)
        return self._pre[letter][atom]

    def ideal_bits(self, letter: str) -> int:
        return self._gen[letter]

    # -- public operations ----------------------------------------------------

    def _own(self, element: AtomSet) -> None:
        if not isinstance(element, AtomSet) or element.algebra != self.algebra:
            raise UsageError("element does not belong to this system's algebra")

    def theta(self, letter: str, element: AtomSet) -> AtomSet:
        self._check_letter(letter)
        self._own(element)
        return AtomSet(self.algebra, self._theta_bits(letter, element.bits))

    def theta_word(self, word: Iterable[str], element: AtomSet) -> AtomSet:
        w = self.check_word(word)
        self._own(element)
        return AtomSet(self.algebra, self.theta_word_bits(w, element.bits))

    def ideal(self, letter: str) -> AtomSet:
        self._check_letter(letter)
        return AtomSet(self.algebra, self._gen[letter])

    def word_ideal_bits(self, word: Word) -> int:
        if not word:
            return self.algebra.full_mask
        return self.theta_word_bits(word[1:], self._gen[word[0]])

    def word_ideal_gen(self, word: Iterable[str]) -> AtomSet:
        """Generator of the ideal attached to a word; the top element for the empty word."""
        w = self.check_word(word)
        return AtomSet(self.algebra, self.word_ideal_bits(w))

    def in_W(self, word: Iterable[str]) -> bool:
        w = tuple(word)
        if any(letter not in self._img for letter in w):
            return False
        return self.word_ideal_bits(w) != 0

    def delta_bits(self, bits: int) -> tuple[str, ...]:
        return tuple(l for l in self.alphabet if self._theta_bits(l, bits))

    def delta(self, element: AtomSet) -> tuple[str, ...]:
        """Letters acting nontrivially on the element."""
        self._own(element)
        return self.delta_bits(element.bits)

    def is_regular(self, element: AtomSet) -> bool:
        """Every nonzero piece of the element is moved by some letter and finitely many letters do so."""
        self._own(element)
        return all(self.delta_bits(1 << a) for a in element)

    def is_singular_atom(self, atom: int) -> bool:
        return not self.delta_bits(1 << atom)

    def atoms(self) -> range:
        return range(self.algebra.atom_count)

    def words(self, max_len: int, min_len: int = 0) -> Iterator[Word]:
        for n in range(min_len, max_len + 1):
            yield from product(self.alphabet, repeat=n)

    def __repr__(self) -> str:
        return f"Gbds(atoms={list(self.algebra.names)}, alphabet={list(self.alphabet)})"


# -- cycles, exits and Condition (L) -------------------------------------------------

def is_cycle(sys: Gbds, word: Sequence[str], element: AtomSet) -> bool:
    """theta_word fixes every element below the given one."""
    w = sys.check_word(word)
    sys._own(element)
    if not w or not element:
        return False
    if element.bits & ~sys.word_ideal_bits(w):
        return False
    return all(sys.theta_word_bits(w, 1 << a) == 1 << a for a in element)


def first_exit(sys: Gbds, word: Sequence[str], element: AtomSet) -> tuple[int, int] | None:
    """First (position, atom) violating the no-exit condition, or None.

    At every position t (cyclically) each atom below theta_{word[:t]}(A)
    must be moved by exactly the next letter word[t] and by no other.
    """
    w = sys.check_word(word)
    n = len(w)
    bits = element.bits
    for t in range(n):
        if t:
            bits = sys._theta_bits(w[t - 1], bits)
        for a in AtomSet(sys.algebra, bits):
            if sys.delta_bits(1 << a) != (w[t],):
                return (t, a)
    return None


def has_no_exits(sys: Gbds, word: Sequence[str], element: AtomSet) -> bool:
    return first_exit(sys, word, element) is None


@dataclass(frozen=True)
class ConditionLResult:
    holds: bool
    witness: tuple[Word, AtomSet] | None
    # one entry per base set explored: (base set, reason the forced walk stopped)
    certificate: tuple[tuple[AtomSet, str], ...]

    def __bool__(self) -> bool:
        return self.holds


def _forced_walk(sys: Gbds, start: int) -> tuple[Word | None, str]:
    """Follow the only possible no-exit trajectory from a base set."""
    atoms = list(AtomSet(sys.algebra, start))
    cur = start
    tracked = tuple(1 << a for a in atoms)
    identity = tracked
    seen = {(cur, tracked)}
    word: list[str] = []
    while True:
        letters = None
        for a in AtomSet(sys.algebra, cur):
            d = sys.delta_bits(1 << a)
            if len(d) != 1:
                return None, "exit" if d else "sink"
            if letters is None:
                letters = d
            elif letters != d:
                return None, "exit"
        letter = letters[0]
        word.append(letter)
        cur = sys._theta_bits(letter, cur)
        tracked = tuple(sys._theta_bits(letter, b) for b in tracked)
        if cur == start and tracked == identity:
            return tuple(word), "cycle"
        if (cur, tracked) in seen:
            return None, "revisit"
        seen.add((cur, tracked))


def condition_L(sys: Gbds) -> ConditionLResult:
    """Condition (L): no cycle without exits.

    No-exit cycles force the next letter at every step, so a deterministic
    walk from each nonempty base set decides the question.
    """
    cert = []
    for base in sys.algebra.nonempty_elements():
        word, reason = _forced_walk(sys, base.bits)
        cert.append((base, reason))
        if word is not None:
            return ConditionLResult(False, (word, base), tuple(cert))
    return ConditionLResult(True, None, tuple(cert))


def condition_L_bruteforce(sys: Gbds, max_len: int | None = None) -> tuple[Word, AtomSet] | None:
    """Exhaustive search for a no-exit cycle; returns a witness or None.

    A minimal no-exit cycle on a single atom has length at most the number
    of atoms, so that is the default bound.
    """
    bound = sys.algebra.atom_count if max_len is None else max_len
    for w in sys.words(bound, 1):
        for base in sys.algebra.nonempty_elements():
            if is_cycle(sys, w, base) and has_no_exits(sys, w, base):
                return w, base
    return None


@dataclass(frozen=True)
class CycleInfo:
    word: Word
    cycle_atoms: AtomSet  # atoms fixed by theta_word; every nonempty subset is a cycle
    no_exit_atoms: AtomSet  # the subsets of these are the no-exit cycles


def cycles(sys: Gbds, max_len: int) -> list[CycleInfo]:
    """All words up to max_len carrying a cycle, with their no-exit part."""
    out = []
    for w in sys.words(max_len, 1):
        fixed = [a for a in sys.atoms() if sys.theta_word_bits(w, 1 << a) == 1 << a]
        if not fixed:
            continue
        cyc = sys.algebra.from_indices(fixed)
        ne = sys.algebra.from_indices(a for a in fixed if has_no_exits(sys, w, sys.algebra.atom(a)))
        out.append(CycleInfo(w, cyc, ne))
    return out


# -- ultrafilter cycles ----------------------------------------------------------------

def _as_atom(sys: Gbds, xi: Ultrafilter | int) -> int:
    if isinstance(xi, Ultrafilter):
        if xi.algebra != sys.algebra:
            raise UsageError("ultrafilter belongs to a different algebra")
        return xi.atom
    return int(xi)


def is_ultrafilter_cycle(sys: Gbds, word: Sequence[str], xi: Ultrafilter | int) -> bool:
    """theta_word(A) lies in xi for every A in xi (word nonempty)."""
    w = sys.check_word(word)
    a = _as_atom(sys, xi)
    if not w or not sys.in_W(w) or not sys.word_ideal_bits(w) >> a & 1:
        return False
    return bool(sys.theta_word_bits(w, 1 << a) >> a & 1)


def is_ultrafilter_cycle_by_definition(sys: Gbds, word: Sequence[str], xi: Ultrafilter | int) -> bool:
    """Same predicate, checked over every member of the ultrafilter."""
    w = sys.check_word(word)
    a = _as_atom(sys, xi)
    if not w:
        return False
    return all(
        sys.theta_word_bits(w, e.bits) >> a & 1
        for e in sys.algebra.elements()
        if e.bits >> a & 1
    )


def meets_own_image_everywhere(sys: Gbds, word: Sequence[str], xi: Ultrafilter | int) -> bool:
    """Every member A of xi satisfies A and theta_word(A) intersect nontrivially."""
    w = sys.check_word(word)
    a = _as_atom(sys, xi)
    if not w:
        return False
    return all(
        e.bits & sys.theta_word_bits(w, e.bits)
        for e in sys.algebra.elements()
        if e.bits >> a & 1
    )
