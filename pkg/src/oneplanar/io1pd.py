"""The ``.1pd`` text format: one drawing per file.

Line-oriented, UTF-8, ``#`` starts a comment.  Directives:

    1pd 1                   header with format version (optional on input)
    mode simple|multigraph  defaults to simple
    vertex ID
    edge EID U V            endpoints in record order (end 0, end 1)
    rot VID EID.END ...     clockwise rotation; END in {0,1} names which
                            endpoint record anchors the half-edge
    cross E.EEND F.FEND     clockwise around the crossing the segments run
                            E-toward-EEND, F-toward-FEND, E-other, F-other

Identifiers are ``[A-Za-z0-9_-]+`` and must be declared before use (all
vertices before the edges that join them, and so on); the serializer always
writes documents that way.  Serialized output is canonical: identifiers
ascending, every rotation starting at its smallest half-edge, crossings in
canonical form.  parse(serialize(d)) is structurally equal to d.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import (
    CombinatorialDrawing,
    CrossingRecord,
    HalfEdge,
    validate,
    _canonical_cycle,
)

FORMAT_VERSION = 1

_IDENT = re.compile(r"^[A-Za-z0-9_-]+$")
_HALF = re.compile(r"^([A-Za-z0-9_-]+)\.([01])$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


@dataclass
class DrawingDocument:
    """Parsed form of a ``.1pd`` file."""

    version: int = FORMAT_VERSION
    mode: str = "simple"
    vertices: list[str] = field(default_factory=list)
    edges: list[tuple[str, str, str]] = field(default_factory=list)
    rotations: list[tuple[str, list[HalfEdge]]] = field(default_factory=list)
    crossings: list[CrossingRecord] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)


def _tokenize(line: str) -> list[tuple[str, int]]:
    out = []
    for part in re.finditer(r"\S+", line):
        tok = part.group(0)
        if tok.startswith("#"):
            break
        out.append((tok, part.start() + 1))
    return out


def parse_document(text: str) -> DrawingDocument:
    """Parse and resolve a document; raises ParseError with line/column."""
    doc = DrawingDocument()
    saw_directive = False
    vertices: set[str] = set()
    edges: set[str] = set()
    rotated: set[str] = set()

    def ident(tok: str, line: int, col: int, what: str) -> str:
        if not _IDENT.match(tok):
            raise ParseError(f"bad {what} identifier {tok!r}", line, col)
        return tok

    def half(tok: str, line: int, col: int) -> HalfEdge:
        m = _HALF.match(tok)
        if not m:
            raise ParseError(f"expected EDGE.END token, got {tok!r}", line, col)
        if m.group(1) not in edges:
            raise ParseError(f"undeclared edge {m.group(1)!r}", line, col)
        return HalfEdge(m.group(1), int(m.group(2)))

    def known_vertex(tok: str, line: int, col: int) -> str:
        ident(tok, line, col, "vertex")
        if tok not in vertices:
            raise ParseError(f"undeclared vertex {tok!r}", line, col)
        return tok

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            doc.comments.append(stripped[1:].strip())
        toks = _tokenize(raw)
        if not toks:
            continue
        (word, col0), args = toks[0], toks[1:]
        if word == "1pd":
            if saw_directive:
                raise ParseError("header must come before any other directive", lineno, col0)
            if len(args) != 1 or not args[0][0].isdigit():
                raise ParseError("header needs a numeric version", lineno, col0)
            doc.version = int(args[0][0])
            if doc.version != FORMAT_VERSION:
                raise ParseError(f"unsupported format version {doc.version}", lineno, args[0][1])
        elif word == "mode":
            if len(args) != 1 or args[0][0] not in ("simple", "multigraph"):
                raise ParseError("mode must be 'simple' or 'multigraph'", lineno, col0)
            doc.mode = args[0][0]
        elif word == "vertex":
            if len(args) != 1:
                raise ParseError("vertex line needs exactly one identifier", lineno, col0)
            v = ident(args[0][0], lineno, args[0][1], "vertex")
            if v in vertices:
                raise ParseError(f"duplicate vertex {v!r}", lineno, args[0][1])
            vertices.add(v)
            doc.vertices.append(v)
        elif word == "edge":
            if len(args) != 3:
                raise ParseError("edge line needs EID U V", lineno, col0)
            eid = ident(args[0][0], lineno, args[0][1], "edge")
            if eid in edges:
                raise ParseError(f"duplicate edge {eid!r}", lineno, args[0][1])
            u = known_vertex(args[1][0], lineno, args[1][1])
            v = known_vertex(args[2][0], lineno, args[2][1])
            edges.add(eid)
            doc.edges.append((eid, u, v))
        elif word == "rot":
            if len(args) < 2:
                raise ParseError("truncated rotation line: need VID and half-edges", lineno, col0)
            vid = known_vertex(args[0][0], lineno, args[0][1])
            if vid in rotated:
                raise ParseError(f"duplicate rotation for vertex {vid!r}", lineno, args[0][1])
            rotated.add(vid)
            doc.rotations.append((vid, [half(t, lineno, c) for t, c in args[1:]]))
        elif word == "cross":
            if len(args) != 2:
                raise ParseError("cross line needs exactly two half-edge tokens", lineno, col0)
            first = half(args[0][0], lineno, args[0][1])
            second = half(args[1][0], lineno, args[1][1])
            if first.edge == second.edge:
                raise ParseError(
                    "self-crossing forbidden: a cross line must name two distinct edges",
                    lineno,
                    args[1][1],
                )
            doc.crossings.append(CrossingRecord(first, second))
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, col0)
        saw_directive = saw_directive or word != "1pd"
    return doc


def document_to_drawing(doc: DrawingDocument) -> CombinatorialDrawing:
    return CombinatorialDrawing(
        doc.vertices,
        {eid: (u, v) for eid, u, v in doc.edges},
        dict(doc.rotations),
        doc.crossings,
        mode=doc.mode,
    )


def parse(text: str) -> CombinatorialDrawing:
    """Parse a ``.1pd`` document into a drawing.

    Syntax problems, duplicate identifiers and dangling references raise
    ParseError with a line number; the drawing itself is not validated
    beyond structure (run :func:`oneplanar.validate` for that).
    """
    return document_to_drawing(parse_document(text))


def serialize(d: CombinatorialDrawing) -> str:
    """Canonical ``.1pd`` document for an accepted drawing."""
    validate(d).raise_if_rejected()
    for name in list(d.vertices) + list(d.edges):
        if not _IDENT.match(name):
            raise ValueError(f"identifier {name!r} cannot be written to the text format")
    out = [f"1pd {FORMAT_VERSION}", f"mode {d.mode}"]
    for v in d.vertices:
        out.append(f"vertex {v}")
    for e, (u, v) in d.edges.items():
        out.append(f"edge {e} {u} {v}")
    for v in d.vertices:
        rot = _canonical_cycle(d.rotations[v])
        if rot:
            out.append("rot " + v + " " + " ".join(h.token() for h in rot))
    for rec in d.crossings:  # already canonical and sorted
        out.append(f"cross {rec.first.token()} {rec.second.token()}")
    return "\n".join(out) + "\n"


def load(path) -> CombinatorialDrawing:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save(d: CombinatorialDrawing, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(d))
