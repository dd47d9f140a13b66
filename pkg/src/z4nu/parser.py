"""Polynomial expressions over R, such as ``z^3+z^2+z+1+v*(z+3)``.

Accepted syntax (whitespace is ignored, integers are read mod 4)::

    expr   := term ('+' term)*
    term   := factor ('*'? factor)*
    factor := uint | 'v' | 'z' ('^' uint)? | '(' expr ')'

This covers the documented grammar (``coef``, ``coef*factor``, ``factor``
with ``coef`` one of ``uint``, ``uint+uint*v``, ``v``, ``uint*v``) and also
accepts juxtaposition such as ``2v`` or ``2(z+1)``.  ``ν`` is read as ``v``.
"""

from dataclasses import dataclass

from .poly import PolyR
from .ring import RElem, format_relem


class ParseError(ValueError):
    def __init__(self, text, pos, expected):
        self.text = text
        self.pos = pos
        self.expected = tuple(expected)
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {' or '.join(self.expected)}, found {found}")


@dataclass(frozen=True)
class _Tok:
    kind: str   # int | v | z | + | * | ^ | ( | ) | end
    value: int
    pos: int


def _tokens(text):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Tok("int", int(text[i:j]), i))
            i = j
        elif ch in "vν":
            out.append(_Tok("v", 0, i))
            i += 1
        elif ch in "z+*^()":
            out.append(_Tok(ch, 0, i))
            i += 1
        else:
            raise ParseError(text, i, ["integer", "'v'", "'z'", "'+'", "'*'", "'^'", "'('", "')'"])
    out.append(_Tok("end", 0, len(text)))
    return out


class _Parser:
    """Builds a small tree: ('num', k) | ('v',) | ('z', e) | ('add', l, r) | ('mul', l, r)."""

    _FACTOR_START = ("int", "v", "z", "(")

    def __init__(self, text):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind, expected):
        t = self.peek()
        if t.kind != kind:
            raise ParseError(self.text, t.pos, expected)
        self.i += 1
        return t

    def parse(self):
        tree = self.expr()
        self.take("end", ["'+'", "'*'", "end of input"])
        return tree

    def expr(self):
        node = self.term()
        while self.peek().kind == "+":
            self.i += 1
            node = ("add", node, self.term())
        return node

    def term(self):
        node = self.factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.i += 1
                node = ("mul", node, self.factor())
            elif kind in self._FACTOR_START:
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self):
        t = self.peek()
        if t.kind == "int":
            self.i += 1
            return ("num", t.value % 4)
        if t.kind == "v":
            self.i += 1
            return ("v",)
        if t.kind == "z":
            self.i += 1
            if self.peek().kind == "^":
                self.i += 1
                return ("z", self.take("int", ["exponent"]).value)
            return ("z", 1)
        if t.kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")", ["'+'", "'*'", "')'"])
            return node
        raise ParseError(self.text, t.pos, ["integer", "'v'", "'z'", "'('"])


def parse_tree(text):
    return _Parser(text).parse()


def _eval_poly(node, n, theta):
    kind = node[0]
    if kind == "num":
        return PolyR.constant(RElem(node[1], 0), n, theta)
    if kind == "v":
        return PolyR.constant(RElem(0, 1), n, theta)
    if kind == "z":
        return PolyR.constant(RElem(1, 0), n, theta).shift(node[1])
    left, right = _eval_poly(node[1], n, theta), _eval_poly(node[2], n, theta)
    return left + right if kind == "add" else left * right


def parse_poly(text, n, theta):
    """The polynomial denoted by ``text``, reduced mod z^n - 1."""
    return _eval_poly(parse_tree(text), n, theta)


class _NeedsTheta(Exception):
    pass


def _eval_const(node):
    kind = node[0]
    if kind == "num":
        return RElem(node[1], 0)
    if kind == "v":
        return RElem(0, 1)
    if kind == "z":
        raise _NeedsTheta("'z' is not allowed in a ring element")
    left, right = _eval_const(node[1]), _eval_const(node[2])
    if kind == "add":
        return left + right
    if left.b and right.b:
        raise _NeedsTheta("v*v is undefined before v^2 is known")
    return RElem(left.a * right.a, left.a * right.b + left.b * right.a)


def parse_relem(text):
    """A ring element a + vb written without z, e.g. ``2+3v`` (used for values of v^2)."""
    try:
        return _eval_const(parse_tree(text))
    except _NeedsTheta as exc:
        raise ParseError(text, 0, [f"a linear expression in v ({exc})"]) from None


def format_poly(f):
    """Text for ``f`` that :func:`parse_poly` reads back exactly (ascending powers)."""
    terms = []
    for j, c in enumerate(f.coeffs):
        mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
        if c.a:
            if not mono:
                terms.append(str(c.a))
            else:
                terms.append(mono if c.a == 1 else f"{c.a}*{mono}")
        if c.b:
            vb = "v" if c.b == 1 else f"{c.b}*v"
            terms.append(vb if not mono else f"{vb}*{mono}")
    return "+".join(terms) if terms else "0"


def format_theta(theta):
    return format_relem(theta.value)
