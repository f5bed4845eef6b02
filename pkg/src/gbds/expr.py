"""Text syntax for words, group elements, cylinders and algebra elements.

    element := term (('+' | '-') term)*
    term    := scalar '*'? gen | gen
    gen     := word '.' '{' atoms '}' ('|' word)?
    scalar  := 2 | 1/2 | (2+1i) | (-i)

`e` (or `∅`) is the empty word; letters are matched against the alphabet,
optionally separated by '·'. `(2+1i)*a.{v}|aa` is (2+i) s_{a,{v}} s*_{aa,{v}}.
Group elements are written like `a b^-1` or `aab^-1`, where `^-1` inverts
the letter just before it.
"""
from __future__ import annotations

import re
from functools import lru_cache

from .dynamics import Gbds, Word
from .errors import ParseError
from .genalg import AlgElement, GenTriple, make_triple
from .groupoid import GroupElem
from .lattice import AtomSet
from .paths import BoundaryPath, Cylinder, FinitePath
from .scalar import ONE, Scalar, format_scalar, parse_scalar

_IDENT = re.compile(r"[A-Za-z0-9_]+")
_NUMBER = re.compile(r"\d+(?:/\d+)?")


def _segment(sys: Gbds, run: str, pos: int) -> Word:
    letters = sys.alphabet

    @lru_cache(maxsize=None)
    def parses(i: int) -> list[tuple[str, ...]]:
        if i == len(run):
            return [()]
        out = []
        for l in letters:
            if run.startswith(l, i):
                for rest in parses(i + len(l)):
                    out.append((l,) + rest)
                    if len(out) > 1:
                        return out
        return out

    found = parses(0)
    if not found:
        raise ParseError(f"{run!r} is not a word over the alphabet", pos)
    if len(found) > 1:
        raise ParseError(f"{run!r} splits into letters in more than one way; use '·' between letters", pos)
    return found[0]


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def ws(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.eat(ch):
            got = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {got!r}", self.i, self.text)

    def match(self, pattern: re.Pattern) -> str | None:
        self.ws()
        m = pattern.match(self.text, self.i)
        if not m:
            return None
        self.i = m.end()
        return m.group(0)

    def done(self) -> bool:
        return self.peek() == ""


def _word(sys: Gbds, cur: _Cursor) -> Word:
    if cur.eat("∅"):
        return ()
    letters: list[str] = []
    while True:
        pos = cur.i
        run = cur.match(_IDENT)
        if run is None:
            if letters:
                raise ParseError("expected a letter after '·'", cur.i, cur.text)
            raise ParseError("expected a word", cur.i, cur.text)
        if run == "e" and "e" not in sys.alphabet and not letters:
            return ()
        letters.extend(_segment(sys, run, pos))
        if not cur.eat("·"):
            return tuple(letters)


def _atoms(sys: Gbds, cur: _Cursor) -> AtomSet:
    cur.expect("{")
    bits = 0
    if not cur.eat("}"):
        while True:
            pos = cur.i
            name = cur.match(_IDENT)
            if name is None or name not in sys.algebra.names:
                raise ParseError(f"unknown atom {name!r}" if name else "expected an atom name", pos, cur.text)
            bits |= 1 << sys.algebra.index(name)
            if cur.eat("}"):
                break
            cur.expect(",")
    return AtomSet(sys.algebra, bits)


def _scalar(cur: _Cursor) -> Scalar | None:
    cur.ws()
    start = cur.i
    if cur.peek() == "(":
        end = cur.text.find(")", cur.i)
        if end < 0:
            raise ParseError("unclosed '('", cur.i, cur.text)
        cur.i = end + 1
        try:
            return parse_scalar(cur.text[start:end + 1])
        except ParseError:
            raise ParseError("malformed scalar", start, cur.text) from None
    num = cur.match(_NUMBER)
    return parse_scalar(num) if num else None


def _finish(cur: _Cursor) -> None:
    if not cur.done():
        raise ParseError(f"unexpected {cur.peek()!r}", cur.i, cur.text)


def parse_word(sys: Gbds, text: str) -> Word:
    cur = _Cursor(text)
    w = _word(sys, cur)
    _finish(cur)
    return w


def parse_element(sys: Gbds, text: str) -> AlgElement:
    cur = _Cursor(text)
    total = AlgElement.zero(sys)
    if text.strip() == "0":
        return total
    sign = -1 if cur.eat("-") else 1
    if sign == 1:
        cur.eat("+")
    while True:
        coeff = _scalar(cur)
        if coeff is not None:
            cur.eat("*")
        pos = cur.i
        left = _word(sys, cur)
        cur.expect(".")
        atoms = _atoms(sys, cur)
        right: Word = ()
        if cur.eat("|"):
            right = _word(sys, cur)
        c = (coeff if coeff is not None else ONE) * sign
        if atoms:
            try:
                tr = make_triple(sys, left, atoms, right)
            except ValueError as exc:
                raise ParseError(str(exc), pos, text) from None
            total = total + AlgElement.of(sys, tr, c)
        if cur.eat("+"):
            sign = 1
        elif cur.eat("-"):
            sign = -1
        else:
            break
    _finish(cur)
    return total


def parse_group_elem(sys: Gbds, text: str) -> GroupElem:
    cur = _Cursor(text)
    syl: list[tuple[str, int]] = []
    if cur.eat("∅"):
        _finish(cur)
        return GroupElem()
    while not cur.done():
        pos = cur.i
        run = cur.match(_IDENT)
        if run is None:
            if cur.eat("·"):
                continue
            raise ParseError(f"unexpected {cur.peek()!r}", cur.i, text)
        if run == "e" and "e" not in sys.alphabet:
            continue
        letters = _segment(sys, run, pos)
        syl.extend((l, 1) for l in letters)
        if cur.text.startswith("^-1", cur.i) or cur.text.startswith("^{-1}", cur.i):
            cur.i += 3 if cur.text.startswith("^-1", cur.i) else 5
            l, _ = syl.pop()
            syl.append((l, -1))
    return GroupElem.reduce(syl)


def parse_cylinder(sys: Gbds, text: str) -> Cylinder:
    cur = _Cursor(text)
    w = _word(sys, cur)
    cur.expect(".")
    atoms = _atoms(sys, cur)
    _finish(cur)
    return Cylinder(w, atoms)


# -- printing --------------------------------------------------------------------------

def format_word(sys: Gbds, word: Word) -> str:
    if not word:
        return "∅" if "e" in sys.alphabet else "e"
    sep = "" if all(len(l) == 1 for l in sys.alphabet) else "·"
    return sep.join(word)


def format_atoms(sys: Gbds, atoms: AtomSet) -> str:
    return "{" + ",".join(atoms.names()) + "}"


def format_triple(sys: Gbds, t: GenTriple) -> str:
    s = f"{format_word(sys, t.left)}.{format_atoms(sys, t.atoms)}"
    if t.right:
        s += "|" + format_word(sys, t.right)
    return s


def format_element(x: AlgElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for t, c in x.sorted_terms():
        g = format_triple(x.sys, t)
        neg = not c.im and c.re < 0
        mag = -c if neg else c
        coef = "" if mag == ONE else format_scalar(mag) + "*"
        parts.append(("-" if neg else "+", coef + g))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_group_elem(sys: Gbds, t: GroupElem) -> str:
    if t.is_identity:
        return "e" if "e" not in sys.alphabet else "∅"
    sep = "" if all(len(l) == 1 for l in sys.alphabet) else "·"
    return sep.join(l if e == 1 else f"{l}^-1" for l, e in t.syllables)


def format_cylinder(sys: Gbds, c: Cylinder) -> str:
    return f"{format_word(sys, c.word)}.{format_atoms(sys, c.atoms)}"


def format_vertex(sys: Gbds, v: int | None) -> str:
    return "∅" if v is None else sys.algebra.names[v]


def format_edges(sys: Gbds, edges) -> str:
    return " ".join(f"e^{l}_{sys.algebra.names[c]}" for l, c in edges)


def format_path(sys: Gbds, p: FinitePath) -> str:
    if not p.edges:
        return f"[{format_vertex(sys, p.base)}]"
    return format_edges(sys, p.edges)


def format_boundary(sys: Gbds, mu: BoundaryPath) -> str:
    if mu.is_finite:
        return format_path(sys, mu.prefix)
    head = format_edges(sys, mu.prefix.edges) + " " if mu.prefix.edges else f"[{format_vertex(sys, mu.base)}] "
    return head + "(" + format_edges(sys, mu.period) + ")^∞"
