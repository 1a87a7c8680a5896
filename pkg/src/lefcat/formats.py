"""Line-oriented text formats for categories and functors.

Category file::

    # the parallel pair
    objects: a b          # or a count, ``objects: 2``, naming objects 0 and 1
    mor alpha: a -> b
    mor beta: a -> b
    comp g . f = h        # one line per composable pair

Functor file::

    obj a -> a
    mor alpha -> beta
    mor gamma -> id(b)
"""

from __future__ import annotations

import hashlib
import re

from .category import (Category, CategoryError, Functor, Identity, build_category,
                       build_functor)

NAME = r"[\w'+*^]+"
_OBJECTS = re.compile(r"objects\s*:\s*(.*)$")
_MOR = re.compile(rf"mor\s+({NAME})\s*:\s*({NAME})\s*->\s*({NAME})$")
_COMP = re.compile(rf"comp\s+({NAME})\s*\.\s*({NAME})\s*=\s*({NAME})$")
_OBJ_MAP = re.compile(rf"obj\s+({NAME})\s*->\s*({NAME})$")
_MOR_MAP = re.compile(rf"mor\s+({NAME})\s*->\s*(?:id\(\s*({NAME})\s*\)|({NAME}))$")

INSTANCE_SEPARATOR = "---"


class ParseError(CategoryError):
    def __init__(self, message: str, line: int = 0, column: int = 0, where=None):
        prefix = f"line {line}, column {column}: " if line else ""
        super().__init__(prefix + message, where)
        self.line = line
        self.column = column


class UnknownName(ParseError):
    pass


class Incomplete(ParseError):
    pass


def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if stripped:
            yield number, len(body) - len(body.lstrip()) + 1, stripped


def _relocate(exc: CategoryError, line: int, column: int = 1):
    err = type(exc)(f"line {line}, column {column}: {exc}", exc.where)
    err.line, err.column = line, column
    return err


def parse_category(text: str) -> Category:
    object_names: list[str] | None = None
    header_line = 0
    morphisms: list[tuple[str, int, int]] = []
    mor_lines: list[int] = []
    mor_index: dict[str, int] = {}
    comps: dict[tuple[int, int], int] = {}
    comp_lines: dict[tuple[int, int], int] = {}

    def obj(name, line, col):
        try:
            return object_names.index(name)
        except ValueError:
            raise UnknownName(f"unknown object {name!r}", line, col) from None

    def mor(name, line, col):
        try:
            return mor_index[name]
        except KeyError:
            raise UnknownName(f"unknown morphism {name!r}", line, col) from None

    for line, col, body in _lines(text):
        if m := _OBJECTS.match(body):
            if object_names is not None:
                raise ParseError("duplicate objects header", line, col)
            spec = m.group(1).split()
            if len(spec) == 1 and spec[0].isdigit():
                object_names = [str(i) for i in range(int(spec[0]))]
            else:
                object_names = spec
                if any(not re.fullmatch(NAME, n) for n in spec):
                    raise ParseError("bad object name", line, col)
            if len(set(object_names)) != len(object_names):
                raise ParseError("duplicate object name", line, col)
            header_line = line
            continue
        if object_names is None:
            raise ParseError("expected 'objects:' header first", line, col)
        if m := _MOR.match(body):
            name, s, t = m.groups()
            if name in mor_index:
                raise ParseError(f"duplicate morphism name {name!r}", line, col)
            mor_index[name] = len(morphisms)
            morphisms.append((name, obj(s, line, col), obj(t, line, col)))
            mor_lines.append(line)
        elif m := _COMP.match(body):
            g, f, h = (mor(n, line, col) for n in m.groups())
            if (g, f) in comps:
                raise ParseError("duplicate composite", line, col)
            comps[g, f] = h
            comp_lines[g, f] = line
        else:
            raise ParseError(f"cannot parse {body!r}", line, col)
    if object_names is None:
        raise ParseError("missing 'objects:' header", 1, 1)
    try:
        return build_category(len(object_names), [(s, t) for _, s, t in morphisms], comps,
                              object_names, [n for n, _, _ in morphisms])
    except CategoryError as exc:
        where = exc.where
        if isinstance(where, tuple) and where[:2] in comp_lines:
            line = comp_lines[where[:2]]
        elif isinstance(where, tuple) and len(where) == 2 and \
                all(isinstance(w, int) and w < len(mor_lines) for w in where):
            line = max(mor_lines[w] for w in where)
        elif isinstance(where, int) and where < len(mor_lines):
            line = mor_lines[where]
        else:
            line = header_line
        raise _relocate(exc, line) from None


def serialize_category(cat: Category) -> str:
    names = [cat.object_name(x) for x in cat.objects]
    if names == [str(x) for x in cat.objects]:
        out = [f"objects: {cat.n_objects}"]
    else:
        out = ["objects: " + " ".join(names)]
    for m in cat.morphisms:
        out.append(f"mor {cat.morphism_name(m)}: {names[cat.src[m]]} -> {names[cat.tgt[m]]}")
    for (g, f), h in sorted(cat.compose_table.items(), key=lambda item: (item[0][1], item[0][0])):
        out.append(f"comp {cat.morphism_name(g)} . {cat.morphism_name(f)} = "
                   f"{cat.morphism_name(h)}")
    return "\n".join(out) + "\n"


def parse_functor(text: str, source: Category, target: Category | None = None) -> Functor:
    target = target if target is not None else source
    src_obj = {source.object_name(x): x for x in source.objects}
    tgt_obj = {target.object_name(x): x for x in target.objects}
    src_mor = {source.morphism_name(m): m for m in source.morphisms}
    tgt_mor = {target.morphism_name(m): m for m in target.morphisms}
    object_map: dict[int, int] = {}
    morphism_map: dict[int, object] = {}
    lines_of: dict[object, int] = {}

    def look(table, name, kind, line, col):
        try:
            return table[name]
        except KeyError:
            raise UnknownName(f"unknown {kind} {name!r}", line, col) from None

    for line, col, body in _lines(text):
        if m := _OBJ_MAP.match(body):
            x = look(src_obj, m.group(1), "source object", line, col)
            if x in object_map:
                raise ParseError(f"object {m.group(1)!r} mapped twice", line, col)
            object_map[x] = look(tgt_obj, m.group(2), "target object", line, col)
        elif m := _MOR_MAP.match(body):
            a = look(src_mor, m.group(1), "source morphism", line, col)
            if a in morphism_map:
                raise ParseError(f"morphism {m.group(1)!r} mapped twice", line, col)
            if m.group(2) is not None:
                morphism_map[a] = Identity(look(tgt_obj, m.group(2), "target object", line, col))
            else:
                morphism_map[a] = look(tgt_mor, m.group(3), "target morphism", line, col)
            lines_of[a] = line
        else:
            raise ParseError(f"cannot parse {body!r}", line, col)
    for x in source.objects:
        if x not in object_map:
            raise Incomplete(f"no image given for object {source.object_name(x)!r}")
    for a in source.morphisms:
        if a not in morphism_map:
            raise Incomplete(f"no image given for morphism {source.morphism_name(a)!r}")
    try:
        return build_functor(source, target, [object_map[x] for x in source.objects],
                             [morphism_map[a] for a in source.morphisms])
    except CategoryError as exc:
        where = exc.where
        key = where[1] if isinstance(where, tuple) else where
        raise _relocate(exc, lines_of.get(key, 0)) from None


def serialize_functor(F: Functor) -> str:
    src, tgt = F.source, F.target
    out = [f"obj {src.object_name(x)} -> {tgt.object_name(y)}"
           for x, y in enumerate(F.object_map)]
    for a, image in enumerate(F.morphism_map):
        rhs = (f"id({tgt.object_name(image.at)})" if isinstance(image, Identity)
               else tgt.morphism_name(image))
        out.append(f"mor {src.morphism_name(a)} -> {rhs}")
    return "\n".join(out) + "\n"


def serialize_instance(F: Functor) -> str:
    """An endofunctor and its category as one text block."""
    return serialize_category(F.source) + INSTANCE_SEPARATOR + "\n" + serialize_functor(F)


def parse_instance(text: str) -> Functor:
    head, sep, tail = text.partition("\n" + INSTANCE_SEPARATOR + "\n")
    if not sep:
        raise ParseError(f"missing '{INSTANCE_SEPARATOR}' separator line")
    cat = parse_category(head + "\n")
    return parse_functor(tail, cat)


def instance_digest(F: Functor) -> str:
    return hashlib.sha256(serialize_instance(F).encode()).hexdigest()
