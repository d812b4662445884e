"""Text formats: lattice/poset/hom declaration files and prefix terms.

Lattice files are line oriented; ``#`` starts a comment.  The first
effective line names the kind.  Examples of the three kinds:

    poset                      lattice                   hom
    elements: t u v            elements: 0 a b 1         dom.elements: 0 u 1
    covers: t<u t<v            leq: 0<a 0<b a<1 b<1      dom.leq: 0<u u<1
                                                         cod.elements: 0 1
                                                         cod.leq: 0<1
                                                         map: 0->0 u->1 1->1

A ``poset`` file describes the base; the lattice is its downsets and
elements are written as subset literals like ``{t,u}``.  A ``lattice``
file lists the elements themselves with their order; it is canonicalized
through the join-irreducible representation, and validation failures
(not a lattice, not distributive) carry the witness.  A fourth kind,
``plterm``, holds a single line ``term: (...)``.

PL terms are parenthesized prefix expressions over the generators ``a``
and ``b``::

    term  := a | b | 0 | (op term ...) | (NAT term)
    op    := add | sub | neg | join | meet | abs | pos | negpart | diff

``(NAT term)`` is scalar multiplication; ``add``, ``join``, ``meet``
accept two or more operands.  Terms for lexicographic elements extend
the grammar with ``cK`` (basis vector at chain position K), ``zero``,
``(pl PLTERM)``, and the ops add | sub | neg | join | meet | abs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .homs import LatHom
from .lexgroup import LexPL
from .order import (DLat, LatticeError, Poset, RawLattice, birkhoff_iso,
                    downset_lattice)
from .plfun import (PLFun, pl_abs, pl_add, pl_diff, pl_generators, pl_join,
                    pl_meet, pl_neg, pl_negpart, pl_pos, pl_scale, pl_sub)


class ParseError(Exception):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "") + ": "
        super().__init__(where + msg)


@dataclass(frozen=True)
class ParsedLattice:
    """A lattice plus the user-facing element naming from its source file."""

    lat: DLat
    kind: str                 # "poset" | "lattice"
    names: dict               # declared element name -> element mask (lattice kind)

    def resolve(self, token: str) -> int:
        """Element lookup: declared name, or a {x,y} subset literal."""
        if token in self.names:
            return self.names[token]
        if token.startswith("{") and token.endswith("}"):
            inner = token[1:-1]
            parts = [p for p in inner.split(",") if p]
            mask = 0
            labels = list(self.lat.base.labels)
            for p in parts:
                if p not in labels:
                    raise ParseError(f"unknown base element {p!r} in {token!r}")
                mask |= 1 << labels.index(p)
            return self.lat.check_member(mask)
        raise ParseError(f"unknown element {token!r}")

    def display(self, mask: int) -> str:
        for name, m in self.names.items():
            if m == mask:
                return name
        return self.lat.fmt(mask)


@dataclass(frozen=True)
class ParsedHom:
    hom: LatHom
    dom: ParsedLattice
    cod: ParsedLattice


def _effective_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _fields(lines: list[tuple[int, str]]) -> dict[str, tuple[int, str]]:
    out = {}
    for no, line in lines:
        if ":" not in line:
            raise ParseError(f"expected 'key: values', got {line!r}", no)
        key, _, rest = line.partition(":")
        key = key.strip()
        if key in out:
            raise ParseError(f"duplicate key {key!r}", no)
        out[key] = (no, rest.strip())
    return out


def _parse_relation(no: int, text: str, names: list[str], sep: str) -> list[tuple[int, int]]:
    pairs = []
    for tok in text.split():
        if sep not in tok:
            raise ParseError(f"expected '<a>{sep}<b>', got {tok!r}", no)
        a, _, b = tok.partition(sep)
        for x in (a, b):
            if x not in names:
                raise ParseError(f"undeclared element {x!r}", no, text.find(tok) + 1)
        pairs.append((names.index(a), names.index(b)))
    return pairs


def _parse_poset_lattice(kind: str, fields: dict, prefix: str = "") -> ParsedLattice:
    def get(key, required=True):
        full = prefix + key
        if full not in fields:
            if required:
                raise ParseError(f"missing {full!r} declaration")
            return None
        return fields[full]

    no, raw = get("elements")
    names = raw.split()
    if len(set(names)) != len(names):
        raise ParseError("element names must be distinct", no)
    if kind == "poset":
        entry = get("covers", required=False)
        pairs = _parse_relation(entry[0], entry[1], names, "<") if entry else []
        try:
            poset = Poset.from_pairs(len(names), pairs, names)
        except LatticeError as e:
            raise ParseError(str(e), no) from e
        return ParsedLattice(downset_lattice(poset), "poset", {})
    # explicit lattice: close the declared order, build and canonicalize
    entry = get("leq", required=False)
    pairs = _parse_relation(entry[0], entry[1], names, "<") if entry else []
    try:
        poset = Poset.from_pairs(len(names), pairs, names)  # rejects cycles
        raw_lat = RawLattice.from_order(len(names), poset.leq, names)
        _, lat, iso = birkhoff_iso(raw_lat)
    except LatticeError as e:
        raise ParseError(str(e), no) from e
    return ParsedLattice(lat, "lattice", {names[k]: iso[k] for k in range(len(names))})


def parse_lattice_text(text: str):
    """Parse a declaration file; returns ParsedLattice, ParsedHom, or PLFun."""
    lines = _effective_lines(text)
    if not lines:
        raise ParseError("empty file")
    no, kind = lines[0]
    if kind not in ("poset", "lattice", "hom", "plterm"):
        raise ParseError(f"unknown kind {kind!r} (want poset|lattice|hom|plterm)", no)
    fields = _fields(lines[1:])
    if kind in ("poset", "lattice"):
        return _parse_poset_lattice(kind, fields)
    if kind == "plterm":
        if "term" not in fields:
            raise ParseError("missing 'term' declaration")
        return parse_pl_term(fields["term"][1])
    dom = _parse_poset_lattice("lattice", fields, "dom.")
    cod = _parse_poset_lattice("lattice", fields, "cod.")
    no, raw = fields.get("map", (None, None))
    if raw is None:
        raise ParseError("missing 'map' declaration")
    table = {}
    for tok in raw.split():
        if "->" not in tok:
            raise ParseError(f"expected 'x->y', got {tok!r}", no)
        x, _, y = tok.partition("->")
        try:
            table[dom.resolve(x)] = cod.resolve(y)
        except ParseError as e:
            raise ParseError(f"{e} (in map entry {tok!r})", no) from e
    missing = [m for m in dom.lat.elements if m not in table]
    if missing:
        raise ParseError(f"map does not cover element {dom.display(missing[0])}", no)
    try:
        hom = LatHom.from_mapping(dom.lat, cod.lat, table)
    except LatticeError as e:
        raise ParseError(str(e), no) from e
    return ParsedHom(hom, dom, cod)


def parse_lattice_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_lattice_text(fh.read())


# -- prefix terms -----------------------------------------------------------

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _tokenize(text: str) -> list[tuple[str, int]]:
    toks = []
    for m in _TOKEN.finditer(text):
        toks.append((m.group(), m.start() + 1))
    return toks


class _Tokens:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else (None, None)

    def next(self):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of term")
        self.k += 1
        return tok

    def done(self):
        return self.k >= len(self.toks)


_PL_UNARY = {"neg": pl_neg, "abs": pl_abs, "pos": pl_pos, "negpart": pl_negpart}
_PL_NARY = {"add": pl_add, "join": pl_join, "meet": pl_meet}
_PL_BINARY = {"sub": pl_sub, "diff": pl_diff}


def parse_pl_term(text: str) -> PLFun:
    ts = _Tokens(text)
    val = _pl_expr(ts)
    if not ts.done():
        tok, col = ts.peek()
        raise ParseError(f"trailing input {tok!r}", col=col)
    return val


def _pl_expr(ts: _Tokens) -> PLFun:
    a, b = pl_generators()
    tok, col = ts.next()
    if tok == "a":
        return a
    if tok == "b":
        return b
    if tok == "0":
        return PLFun.zero()
    if tok != "(":
        raise ParseError(f"expected term, got {tok!r}", col=col)
    op, opcol = ts.next()
    if op in _PL_UNARY:
        arg = _pl_expr(ts)
        _close(ts)
        return _PL_UNARY[op](arg)
    if op in _PL_BINARY:
        lhs = _pl_expr(ts)
        rhs = _pl_expr(ts)
        _close(ts)
        return _PL_BINARY[op](lhs, rhs)
    if op in _PL_NARY:
        args = [_pl_expr(ts)]
        while ts.peek()[0] != ")":
            args.append(_pl_expr(ts))
        _close(ts)
        out = args[0]
        for x in args[1:]:
            out = _PL_NARY[op](out, x)
        return out
    if op is not None and op.isdigit():
        arg = _pl_expr(ts)
        _close(ts)
        return pl_scale(int(op), arg)
    raise ParseError(f"unknown operation {op!r}", col=opcol)


def _close(ts: _Tokens):
    tok, col = ts.next()
    if tok != ")":
        raise ParseError(f"expected ')', got {tok!r}", col=col)


def parse_glambda_term(text: str, chain_len: int) -> LexPL:
    """Lexicographic-product terms: cK, zero, (pl PLTERM), and group ops."""
    ts = _Tokens(text)
    val = _gl_expr(ts, chain_len)
    if not ts.done():
        tok, col = ts.peek()
        raise ParseError(f"trailing input {tok!r}", col=col)
    return val


def _gl_expr(ts: _Tokens, n: int) -> LexPL:
    tok, col = ts.next()
    if tok == "zero":
        return LexPL.zero(n)
    if tok and re.fullmatch(r"c\d+", tok):
        pos = int(tok[1:])
        if pos >= n:
            raise ParseError(f"basis position {pos} out of range for chain of length {n}", col=col)
        return LexPL.basis(n, pos)
    if tok != "(":
        raise ParseError(f"expected term, got {tok!r}", col=col)
    op, opcol = ts.next()
    if op == "pl":
        # the rest up to the matching ')' is a PL term
        f = _pl_expr(ts)
        _close(ts)
        return LexPL.from_pl(n, f)
    if op == "neg":
        arg = _gl_expr(ts, n)
        _close(ts)
        return -arg
    if op == "abs":
        arg = _gl_expr(ts, n)
        _close(ts)
        return arg.abs()
    if op in ("add", "sub", "join", "meet"):
        lhs = _gl_expr(ts, n)
        rhs = _gl_expr(ts, n)
        _close(ts)
        return {"add": lhs.__add__, "sub": lhs.__sub__,
                "join": lhs.join, "meet": lhs.meet}[op](rhs)
    if op is not None and op.isdigit():
        arg = _gl_expr(ts, n)
        _close(ts)
        return arg.scale(int(op))
    raise ParseError(f"unknown operation {op!r}", col=opcol)
