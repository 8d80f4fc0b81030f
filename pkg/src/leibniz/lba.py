"""LBA text format for algebras, modules, cochains and matrices.

    algebra L1
    dim 7
    basis J Pp Pm T X1 X2 X3
    field gaussian
    [J,Pp] = i*Pp
    [X3,T] = 1/2*i*X2
    end

``module <name> over <algebra>`` blocks hold ``(v,x) = ...`` lines,
``cochain <name> over <algebra>`` blocks hold ``f(x,y) = ...`` lines and
``matrix <name> rows r cols c`` blocks hold ``r`` lines of ``c`` scalars.
Omitted products are zero; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import Algebra
from .cohomology import Cochain2
from .linalg import Matrix
from .modules import RightModule
from .scalar import GaussianRational, ScalarParseError, as_scalar, format_scalar, parse_scalar

__all__ = [
    "LbaError",
    "LbaDocument",
    "format_combination",
    "parse_combination",
    "parse",
    "format",
    "format_algebra",
    "format_module",
    "format_cochain",
    "format_matrix",
]

Sparse = Dict[int, GaussianRational]
Block = Union[Algebra, RightModule, Cochain2, Matrix]

_LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"\d+(?:\s*/\s*\d+)?")


class LbaError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0) -> None:
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + message)


# linear combinations ---------------------------------------------------------


def _coef_text(c: GaussianRational) -> Tuple[str, str]:
    """(sign, magnitude prefix) so that a term reads ``sign + prefix + label``."""
    if c.is_real():
        r = c.real
        sign = "-" if r < 0 else "+"
        m = abs(r)
        return sign, "" if m == 1 else format_scalar(m) + "*"
    if c.real == 0:
        m = c.imag
        sign = "-" if m < 0 else "+"
        m = abs(m)
        return sign, "i*" if m == 1 else format_scalar(m) + "*i*"
    return "+", "(" + format_scalar(c) + ")*"


def format_combination(vec: Mapping[int, object], labels: Sequence[str]) -> str:
    """Canonical text of ``sum c_k labels[k]`` in index order; ``0`` if empty."""
    parts = []
    for k in sorted(vec):
        c = as_scalar(vec[k])
        if not c:
            continue
        sign, pre = _coef_text(c)
        if not parts:
            parts.append(("-" if sign == "-" else "") + pre + labels[k])
        else:
            parts.append(f" {sign} {pre}{labels[k]}")
    return "".join(parts) if parts else "0"


class _Scanner:
    def __init__(self, text: str, line: int, col0: int) -> None:
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0

    def err(self, msg: str, at: Optional[int] = None) -> LbaError:
        return LbaError(msg, self.line, self.col0 + (self.pos if at is None else at) + 1)

    def ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.take(ch):
            raise self.err(f"expected {ch!r}")

    def label(self) -> Tuple[str, int]:
        self.ws()
        m = _LABEL.match(self.text, self.pos)
        if not m:
            raise self.err("expected a basis label")
        at = self.pos
        self.pos = m.end()
        return m.group(), at

    def number(self) -> Optional[Tuple[GaussianRational, int]]:
        self.ws()
        m = _NUMBER.match(self.text, self.pos)
        if not m:
            return None
        at = self.pos
        self.pos = m.end()
        try:
            return parse_scalar(m.group()), at
        except ScalarParseError as e:
            raise self.err(e.args[0] if e.args else "bad number", at) from None

    def at_end(self) -> bool:
        return self.peek() == ""


def _parse_term_coef(s: _Scanner) -> Optional[GaussianRational]:
    """Coefficient with its trailing ``*``, or None when the term is a bare label."""
    ch = s.peek()
    if ch == "(":
        s.pos += 1
        start = s.pos
        while s.pos < len(s.text) and s.text[s.pos] != ")":
            s.pos += 1
        if s.pos >= len(s.text):
            raise s.err("unclosed '('", start - 1)
        body = s.text[start : s.pos]
        s.pos += 1
        try:
            c = parse_scalar(body)
        except ScalarParseError as e:
            raise s.err(f"bad scalar: {e.args[0]}", start + e.pos) from None
        s.expect("*")
        return c
    got = s.number()
    if got is not None:
        c, _ = got
        s.expect("*")
        if s.peek() == "i":
            save = s.pos
            s.pos += 1
            if s.take("*"):
                return c * as_scalar("i")
            s.pos = save
        return c
    if ch == "i":
        save = s.pos
        s.pos += 1
        if s.take("*"):
            return as_scalar("i")
        s.pos = save
    return None


def parse_combination(
    text: str, labels: Sequence[str], line: int = 0, col0: int = 0
) -> Sparse:
    """Inverse of ``format_combination``; unknown labels raise ``LbaError``."""
    s = _Scanner(text, line, col0)
    idx = {lbl: k for k, lbl in enumerate(labels)}
    out: Sparse = {}
    if s.peek() == "0":
        save = s.pos
        s.pos += 1
        if s.at_end():
            return out
        s.pos = save
    first = True
    while True:
        sign = 1
        if s.take("-"):
            sign = -1
        elif not first:
            s.expect("+")
            if s.take("-"):
                sign = -1
        coef = _parse_term_coef(s)
        c = as_scalar(sign) if coef is None else coef * sign
        lbl, at = s.label()
        if lbl not in idx:
            raise s.err(f"index out of range: unknown basis label {lbl!r}", at)
        k = idx[lbl]
        out[k] = out.get(k, as_scalar(0)) + c
        if not out[k]:
            del out[k]
        first = False
        if s.at_end():
            return out
        if s.peek() not in "+-":
            raise s.err("expected '+' or '-'")


# document -------------------------------------------------------------------


@dataclass
class LbaDocument:
    """Ordered named blocks: ``(kind, name, object)``."""

    sections: List[Tuple[str, str, Block]] = field(default_factory=list)

    def add(self, kind: str, name: str, obj: Block) -> None:
        if any(n == name for _, n, _ in self.sections):
            raise LbaError(f"duplicate definition of {name!r}")
        self.sections.append((kind, name, obj))

    def get(self, name: str) -> Block:
        for _, n, obj in self.sections:
            if n == name:
                return obj
        raise KeyError(name)

    def of_kind(self, kind: str) -> List[Block]:
        return [obj for k, _, obj in self.sections if k == kind]

    def names(self) -> List[str]:
        return [n for _, n, _ in self.sections]

    def __len__(self) -> int:
        return len(self.sections)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LbaDocument) or len(self) != len(other):
            return False
        for (k1, n1, o1), (k2, n2, o2) in zip(self.sections, other.sections):
            if k1 != k2 or n1 != n2 or not _same(o1, o2):
                return False
        return True


def _same(a: Block, b: Block) -> bool:
    if isinstance(a, Matrix):
        return isinstance(b, Matrix) and a.shape == b.shape and a.data == b.data
    return a == b


# formatting -----------------------------------------------------------------


def format_algebra(a: Algebra) -> str:
    lines = [f"algebra {a.name}", f"dim {a.dim}", "basis " + " ".join(a.labels), f"field {a.field_tag}"]
    for (i, j), v in sorted(a.products().items()):
        lines.append(f"[{a.labels[i]},{a.labels[j]}] = {format_combination(v, a.labels)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def format_module(m: RightModule) -> str:
    lines = [f"module {m.name} over {m.base.name}", f"dim {m.mdim}", "basis " + " ".join(m.labels)]
    for (p, j), v in sorted(m.actions().items()):
        lines.append(f"({m.labels[p]},{m.base.labels[j]}) = {format_combination(v, m.labels)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def format_cochain(f: Cochain2) -> str:
    b = f.base
    lines = [f"cochain {f.name} over {b.name}"]
    for (i, j), v in sorted(f.values().items()):
        lines.append(f"f({b.labels[i]},{b.labels[j]}) = {format_combination(v, b.labels)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def format_matrix(name: str, m: Matrix) -> str:
    r, c = m.shape
    lines = [f"matrix {name} rows {r} cols {c}"]
    for i in range(r):
        lines.append(" ".join(format_scalar(x) for x in m.row(i)))
    lines.append("end")
    return "\n".join(lines) + "\n"


def format(doc: Union[LbaDocument, Block, Sequence]) -> str:
    """Canonical text of a document, a single object, or a list of objects."""
    if isinstance(doc, LbaDocument):
        items = [(obj, name) for _, name, obj in doc.sections]
    elif isinstance(doc, (Algebra, RightModule, Cochain2)):
        items = [(doc, None)]
    else:
        items = [(o, None) if not isinstance(o, tuple) else (o[1], o[0]) for o in doc]
    out = []
    for obj, name in items:
        if isinstance(obj, Algebra):
            out.append(format_algebra(obj))
        elif isinstance(obj, RightModule):
            out.append(format_module(obj))
        elif isinstance(obj, Cochain2):
            out.append(format_cochain(obj if name is None else obj.renamed(name)))
        elif isinstance(obj, Matrix):
            out.append(format_matrix(name or "M", obj))
        else:
            raise TypeError(f"cannot format {type(obj).__name__}")
    return "\n".join(out)


# parsing --------------------------------------------------------------------

Resolver = Callable[[str], Optional[Algebra]]


def _strip(raw: str) -> str:
    k = raw.find("#")
    return raw if k < 0 else raw[:k]


_PRODUCT = {
    "algebra": re.compile(r"\s*\[\s*([^\],\s]+)\s*,\s*([^\]\s]+)\s*\]\s*="),
    "module": re.compile(r"\s*\(\s*([^),\s]+)\s*,\s*([^)\s]+)\s*\)\s*="),
    "cochain": re.compile(r"\s*[A-Za-z_][A-Za-z0-9_]*\s*\(\s*([^),\s]+)\s*,\s*([^)\s]+)\s*\)\s*="),
}


class _Parser:
    def __init__(self, text: str, resolve: Optional[Resolver]) -> None:
        self.lines = text.splitlines()
        self.n = 0
        self.resolve = resolve
        self.doc = LbaDocument()

    def next_line(self) -> Optional[Tuple[int, str]]:
        while self.n < len(self.lines):
            self.n += 1
            body = _strip(self.lines[self.n - 1])
            if body.strip():
                return self.n, body
        return None

    def base(self, name: str, line: int, col: int) -> Algebra:
        for k, nm, obj in self.doc.sections:
            if nm == name and k == "algebra":
                return obj
        found = self.resolve(name) if self.resolve else None
        if found is None:
            raise LbaError(f"unknown base algebra {name!r}", line, col)
        return found

    def run(self) -> LbaDocument:
        while True:
            got = self.next_line()
            if got is None:
                return self.doc
            ln, body = got
            words = body.split()
            col = body.index(words[0]) + 1
            head = words[0]
            if head == "algebra" and len(words) == 2:
                kind, name, obj = "algebra", words[1], self.algebra(words[1], ln)
            elif head == "module" and len(words) == 4 and words[2] == "over":
                b = self.base(words[3], ln, body.index(words[3]) + 1)
                kind, name, obj = "module", words[1], self.module(words[1], b, ln)
            elif head == "cochain" and len(words) == 4 and words[2] == "over":
                b = self.base(words[3], ln, body.index(words[3]) + 1)
                kind, name, obj = "cochain", words[1], self.cochain(words[1], b, ln)
            elif head == "matrix" and len(words) == 6 and words[2] == "rows" and words[4] == "cols":
                try:
                    r, c = int(words[3]), int(words[5])
                except ValueError:
                    raise LbaError("matrix sizes must be integers", ln, col) from None
                kind, name, obj = "matrix", words[1], self.matrix(r, c, ln)
            else:
                raise LbaError(f"expected a block header, got {body.strip()!r}", ln, col)
            if name in self.doc.names():
                raise LbaError(f"duplicate definition of {name!r}", ln, col)
            self.doc.sections.append((kind, name, obj))

    def _dim_basis(self, header_line: int) -> Tuple[int, List[str]]:
        got = self.next_line()
        if got is None:
            raise LbaError("unexpected end of input, expected 'dim'", header_line, 1)
        ln, body = got
        w = body.split()
        if w[0] != "dim" or len(w) != 2 or not w[1].isdigit():
            raise LbaError("expected 'dim <n>'", ln, body.index(w[0]) + 1)
        n = int(w[1])
        got = self.next_line()
        if got is None:
            raise LbaError("unexpected end of input, expected 'basis'", ln, 1)
        ln, body = got
        w = body.split()
        if w[0] != "basis":
            raise LbaError("expected 'basis <labels>'", ln, body.index(w[0]) + 1)
        labels = w[1:]
        if len(labels) != n:
            raise LbaError(f"dim {n} but {len(labels)} basis labels", ln, 1)
        for lbl in labels:
            if not _LABEL.fullmatch(lbl) or lbl == "i":
                raise LbaError(f"invalid basis label {lbl!r}", ln, body.index(lbl) + 1)
        if len(set(labels)) != n:
            raise LbaError("basis labels are not distinct", ln, 1)
        return n, labels

    def _body(self, kind: str, header_line: int, labels_in: Sequence[str], labels_out: Sequence[str], allow_field: bool):
        table: Dict[Tuple[int, int], Sparse] = {}
        field_tag = None
        in_idx = {lbl: k for k, lbl in enumerate(labels_in)}
        out_idx = {lbl: k for k, lbl in enumerate(labels_out)}
        while True:
            got = self.next_line()
            if got is None:
                raise LbaError("unexpected end of input, missing 'end'", header_line, 1)
            ln, body = got
            s = body.strip()
            if s == "end":
                return table, field_tag
            if allow_field and s.split()[0] == "field":
                w = s.split()
                if len(w) != 2 or w[1] not in ("rational", "gaussian"):
                    raise LbaError("expected 'field rational' or 'field gaussian'", ln, body.index("field") + 1)
                field_tag = w[1]
                continue
            m = _PRODUCT[kind].match(body)
            if not m:
                raise LbaError(f"malformed {kind} line", ln, len(body) - len(body.lstrip()) + 1)
            x, y = m.group(1), m.group(2)
            if x not in in_idx:
                raise LbaError(f"index out of range: unknown label {x!r}", ln, m.start(1) + 1)
            if y not in out_idx:
                raise LbaError(f"index out of range: unknown label {y!r}", ln, m.start(2) + 1)
            key = (in_idx[x], out_idx[y])
            if key in table:
                raise LbaError(f"duplicate definition of ({x},{y})", ln, m.start(1) + 1)
            table[key] = parse_combination(body[m.end() :], labels_in, ln, m.end())

    def algebra(self, name: str, ln: int) -> Algebra:
        n, labels = self._dim_basis(ln)
        table, tag = self._body("algebra", ln, labels, labels, True)
        try:
            return Algebra(name, labels, table, tag)
        except ValueError as e:
            raise LbaError(str(e), ln, 1) from None

    def module(self, name: str, base: Algebra, ln: int) -> RightModule:
        n, labels = self._dim_basis(ln)
        table, _ = self._body("module", ln, labels, base.labels, False)
        return RightModule(name, base, labels, table)

    def cochain(self, name: str, base: Algebra, ln: int) -> Cochain2:
        table, _ = self._body("cochain", ln, base.labels, base.labels, False)
        return Cochain2(base, table, name)

    def matrix(self, r: int, c: int, ln: int) -> Matrix:
        rows = []
        while True:
            got = self.next_line()
            if got is None:
                raise LbaError("unexpected end of input, missing 'end'", ln, 1)
            lnum, body = got
            if body.strip() == "end":
                break
            toks = body.split()
            if len(toks) != c:
                raise LbaError(f"expected {c} entries, got {len(toks)}", lnum, 1)
            row = []
            for t in toks:
                try:
                    row.append(parse_scalar(t))
                except ScalarParseError as e:
                    raise LbaError(f"bad scalar {t!r}: {e.args[0]}", lnum, body.index(t) + e.pos + 1) from None
            rows.append(row)
        if len(rows) != r:
            raise LbaError(f"expected {r} rows, got {len(rows)}", ln, 1)
        return Matrix(rows, c)


def parse(text: str, externals: Union[None, Mapping[str, Algebra], Resolver] = None) -> LbaDocument:
    """Parse LBA text.  Base algebras resolve in-document first, then via ``externals``."""
    if isinstance(externals, Mapping):
        resolve = externals.get
    else:
        resolve = externals
    return _Parser(text, resolve).run()
