"""Line-oriented text formats for posets and bound quivers.

Poset files hold one cover per line (``a < b``); a line with a single name
declares an element without covers.  Quiver files use the directives
``vertex v``, ``arrow name: u -> v`` and ``relation c1*p1 + c2*p2`` with
``.``-separated arrow paths.  ``#`` starts a comment in both.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poset, Quiver, Relation, poset_from_covers
from .exceptions import InputError, ParseError

QUIVER_DIRECTIVES = ("vertex", "arrow", "relation")


@dataclass(frozen=True)
class QuiverSpec:
    quiver: Quiver
    relations: tuple[Relation, ...]


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def detect_format(text: str) -> str:
    """``"quiver"`` if the first directive is a quiver keyword, else ``"poset"``."""
    for _, line in _lines(text):
        return "quiver" if line.split()[0] in QUIVER_DIRECTIVES else "poset"
    return "poset"


def parse_poset(text: str) -> Poset:
    elements: list[str] = []
    seen = set()
    covers = []

    def add(name, no):
        if not name:
            raise ParseError("empty element name", no)
        if name not in seen:
            seen.add(name)
            elements.append(name)

    for no, line in _lines(text):
        if line.split()[0] in QUIVER_DIRECTIVES:
            raise ParseError(f"quiver directive in a poset file: {line!r}", no)
        if "<" in line:
            parts = [p.strip() for p in line.split("<")]
            if len(parts) != 2:
                raise ParseError(f"expected 'a < b', got {line!r}", no)
            for name in parts:
                add(name, no)
            covers.append((parts[0], parts[1]))
        else:
            add(line, no)
    try:
        return poset_from_covers(elements, covers)
    except InputError as exc:
        raise ParseError(str(exc), None) from None


_ARROW = re.compile(r"^arrow\s+(\S+?)\s*:\s*(\S+)\s*->\s*(\S+)$")
_TERM = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*\s*)?([^\s+*-][^\s+*]*)")


def _parse_relation(body: str, no: int) -> Relation:
    body = body.strip()
    if not body:
        raise ParseError("empty relation", no)
    terms = []
    pos = 0
    first = True
    while pos < len(body):
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos == len(body):
            break
        m = _TERM.match(body, pos)
        if m is None or (not first and not m.group(1)):
            raise ParseError(f"cannot read relation term at {body[pos:]!r}", no)
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(int(m.group(2))) if m.group(2) else Fraction(1)
        path = tuple(m.group(3).split("."))
        if any(not p for p in path):
            raise ParseError(f"bad path {m.group(3)!r}", no)
        terms.append((sign * coeff, path))
        pos = m.end()
        first = False
    # merge repeated paths
    merged: dict[tuple[str, ...], Fraction] = {}
    for c, p in terms:
        merged[p] = merged.get(p, Fraction(0)) + c
    rel = Relation(tuple((c, p) for p, c in merged.items() if c != 0))
    if not rel.terms:
        raise ParseError("relation has no nonzero coefficient", no)
    return rel


def parse_quiver(text: str) -> QuiverSpec:
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    relations: list[tuple[int, Relation]] = []
    for no, line in _lines(text):
        word = line.split()[0]
        if word == "vertex":
            names = line.split()[1:]
            if not names:
                raise ParseError("vertex directive without a name", no)
            for v in names:
                if v in vertices:
                    raise ParseError(f"duplicate vertex {v!r}", no)
                vertices.append(v)
        elif word == "arrow":
            m = _ARROW.match(line)
            if m is None:
                raise ParseError(f"expected 'arrow name: u -> v', got {line!r}", no)
            name, s, t = m.groups()
            for v in (s, t):
                if v not in vertices:
                    raise ParseError(f"arrow {name} uses undeclared vertex {v!r}", no)
            if any(a[0] == name for a in arrows):
                raise ParseError(f"duplicate arrow {name!r}", no)
            arrows.append((name, s, t))
        elif word == "relation":
            relations.append((no, _parse_relation(line[len("relation"):], no)))
        else:
            raise ParseError(f"unknown directive {word!r}", no)
    quiver = Quiver.build(vertices, arrows)
    for no, rel in relations:
        try:
            rel.endpoints(quiver)
        except InputError as exc:
            raise ParseError(str(exc), no) from None
    return QuiverSpec(quiver, tuple(r for _, r in relations))


def parse_input(text: str, fmt: str | None = None):
    """Parse either format; returns ``("poset", Poset)`` or ``("quiver", QuiverSpec)``."""
    fmt = fmt or detect_format(text)
    if fmt == "poset":
        return fmt, parse_poset(text)
    if fmt == "quiver":
        return fmt, parse_quiver(text)
    raise InputError(f"unknown format {fmt!r}")


def format_poset(p: Poset) -> str:
    """Covers in element order, then elements that take part in no cover.

    If reading the covers back would change the element order, every
    element is first declared on its own line.
    """
    lines = [f"{x} < {y}" for x, y in p.covers]
    covered = {x for c in p.covers for x in c}
    lonely = [x for x in p.elements if x not in covered]
    inferred = list(dict.fromkeys([x for c in p.covers for x in c] + lonely))
    if inferred != list(p.elements):
        return "\n".join(list(p.elements) + lines) + "\n"
    lines += lonely
    return "\n".join(lines) + ("\n" if lines else "")


def format_quiver(spec: QuiverSpec) -> str:
    lines = [f"vertex {v}" for v in spec.quiver.vertices]
    lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in spec.quiver.arrows]
    for rel in spec.relations:
        parts = []
        for k, (c, path) in enumerate(rel.terms):
            if c.denominator != 1:
                raise InputError("only integer coefficients can be written")
            sign = "-" if c < 0 else "+"
            mag = abs(c.numerator)
            term = ".".join(path) if mag == 1 else f"{mag}*{'.'.join(path)}"
            parts.append(("-" if sign == "-" else "") + term if k == 0 else f"{sign} {term}")
        lines.append("relation " + " ".join(parts))
    return "\n".join(lines) + "\n"
