"""Reading and writing system descriptions (YAML, or JSON as a subset).

    atoms: [1, 2]
    alphabet: [a]
    actions:
      a: {1: [2], 2: []}
    ideals:            # optional, defaults to the range of each letter
      a: [1, 2]
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Any

import yaml

from .dynamics import Gbds
from .errors import ParseError, ValidationError
from .lattice import Algebra

_LETTER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_ATOM = re.compile(r"^[A-Za-z0-9_]+$")


def _name(x: Any, where: str) -> str:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ValidationError(f"{where}: expected a name, got {x!r}")
    return str(x)


def _names(x: Any, where: str) -> list[str]:
    if x is None:
        return []
    if not isinstance(x, list):
        raise ValidationError(f"{where}: expected a list")
    return [_name(v, f"{where}[{i}]") for i, v in enumerate(x)]


def system_from_data(data: Any) -> Gbds:
    if not isinstance(data, dict):
        raise ValidationError("top level: expected a mapping with atoms, alphabet and actions")
    unknown = set(data) - {"atoms", "alphabet", "actions", "ideals", "name"}
    if unknown:
        raise ValidationError(f"top level: unknown keys {sorted(map(str, unknown))}")
    atoms = _names(data.get("atoms"), "atoms")
    for a in atoms:
        if not _ATOM.match(a):
            raise ValidationError(f"atoms: {a!r} is not a valid atom name")
    if not atoms:
        raise ValidationError("atoms: at least one atom is required")
    if len(set(atoms)) != len(atoms):
        raise ValidationError("atoms: duplicate atom names")
    letters = _names(data.get("alphabet"), "alphabet")
    for l in letters:
        if not _LETTER.match(l):
            raise ValidationError(f"alphabet: {l!r} is not a valid letter name")
    alg = Algebra(tuple(atoms))

    def atomset(x, where):
        bits = 0
        for n in _names(x, where):
            if n not in atoms:
                raise ValidationError(f"{where}: unknown atom {n!r}")
            bits |= 1 << atoms.index(n)
        return bits

    actions = data.get("actions") or {}
    if not isinstance(actions, dict):
        raise ValidationError("actions: expected a mapping from letters to atom images")
    images = {}
    for l, row in actions.items():
        l = _name(l, "actions")
        if l not in letters:
            raise ValidationError(f"actions: unknown letter {l!r}")
        row = row or {}
        if not isinstance(row, dict):
            raise ValidationError(f"actions.{l}: expected a mapping from atoms to lists of atoms")
        masks = [0] * len(atoms)
        for a, img in row.items():
            a = _name(a, f"actions.{l}")
            if a not in atoms:
                raise ValidationError(f"actions.{l}: unknown atom {a!r}")
            masks[atoms.index(a)] = atomset(img, f"actions.{l}.{a}")
        images[l] = masks
    ideals_raw = data.get("ideals") or {}
    if not isinstance(ideals_raw, dict):
        raise ValidationError("ideals: expected a mapping from letters to atom lists")
    ideals = {}
    for l, g in ideals_raw.items():
        l = _name(l, "ideals")
        if l not in letters:
            raise ValidationError(f"ideals: unknown letter {l!r}")
        ideals[l] = atomset(g, f"ideals.{l}")
    return Gbds(alg, letters, images, ideals)


def parse_system_text(text: str) -> Gbds:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        problem = getattr(exc, "problem", None) or str(exc)
        raise ParseError(f"syntax error{where}: {problem}") from None
    return system_from_data(data)


def load_system(path: str | Path) -> Gbds:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_system_text(text)


def system_to_data(sys: Gbds) -> dict:
    names = sys.algebra.names
    return {
        "atoms": list(names),
        "alphabet": list(sys.alphabet),
        "actions": {
            l: {names[a]: [names[c] for c in range(len(names)) if sys.atom_image(l, a) >> c & 1] for a in sys.atoms()}
            for l in sys.alphabet
        },
        "ideals": {l: list(sys.ideal(l).names()) for l in sys.alphabet},
    }


def dump_system(sys: Gbds) -> str:
    return yaml.safe_dump(system_to_data(sys), sort_keys=False, allow_unicode=True)
