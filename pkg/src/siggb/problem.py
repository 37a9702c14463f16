"""Problem files and the cyclic/katsura benchmark families.

File format, one directive per line (``#`` starts a comment)::

    field 7
    vars x y
    order lex
    polys
    x^2 - 1
    x*y - 1

``order`` is optional (default grevlex).  Variables are listed largest first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .field import FieldError, PrimeField
from .poly import MAX_EXPONENT, ORDER_KINDS, MonomialOrder, Polynomial, PolyRing

BENCHMARK_PRIME = 32003

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|(\+)|(-))")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ProblemParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, col {col}: " if line else ""
        super().__init__(where + message)


@dataclass
class ProblemFile:
    characteristic: int
    vars: tuple
    order: str = "grevlex"
    polys: list = field(default_factory=list)

    @property
    def ring(self) -> PolyRing:
        return make_ring(self.characteristic, self.vars, self.order)


def make_ring(p: int, names, order: str = "grevlex") -> PolyRing:
    return PolyRing(PrimeField(p), MonomialOrder(order, len(names)), tuple(names))


def _tokens(text: str, lineno: int, offset: int = 0):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            while text[pos].isspace():
                pos += 1
            raise ProblemParseError(f"unexpected character {text[pos]!r}", lineno,
                                    offset + pos + 1)
        col = offset + m.start(m.lastindex) + 1
        yield m.lastindex, m.group(m.lastindex), col
        pos = m.end()


def parse_polynomial(text: str, ring: PolyRing, lineno: int = 0, offset: int = 0) -> Polynomial:
    """Parse ``c*x^a*y - z + 3`` style text into ``ring``."""
    index = {name: i for i, name in enumerate(ring.names)}
    toks = list(_tokens(text, lineno, offset))
    if not toks:
        raise ProblemParseError("empty polynomial", lineno, offset + 1)
    terms = []
    i = 0
    n = len(toks)

    def expect_factor(i):
        if i >= n:
            col = toks[-1][2] + len(toks[-1][1])
            raise ProblemParseError("malformed term: missing factor", lineno, col)
        kind, val, col = toks[i]
        if kind == 1:
            return int(val), None, i + 1
        if kind == 2:
            if val not in index:
                raise ProblemParseError(f"unknown variable {val!r}", lineno, col)
            exp = 1
            if i + 1 < n and toks[i + 1][0] == 3:
                if i + 2 >= n or toks[i + 2][0] != 1:
                    raise ProblemParseError("malformed term: exponent expected", lineno,
                                            toks[i + 1][2])
                exp = int(toks[i + 2][1])
                if exp > MAX_EXPONENT:
                    raise ProblemParseError(f"exponent {exp} too large", lineno, toks[i + 2][2])
                return 1, (index[val], exp), i + 3
            return 1, (index[val], exp), i + 1
        raise ProblemParseError(f"malformed term near {val!r}", lineno, col)

    while i < n:
        sign = 1
        if toks[i][0] in (5, 6):
            sign = -1 if toks[i][0] == 6 else 1
            i += 1
        elif terms:
            raise ProblemParseError("malformed term: '+' or '-' expected", lineno, toks[i][2])
        coeff = sign
        exps = [0] * ring.n
        c, var, i = expect_factor(i)
        coeff *= c
        if var:
            exps[var[0]] += var[1]
        while i < n and toks[i][0] == 4:
            c, var, i = expect_factor(i + 1)
            coeff *= c
            if var:
                exps[var[0]] += var[1]
        if i < n and toks[i][0] not in (5, 6):
            raise ProblemParseError(f"malformed term near {toks[i][1]!r}", lineno, toks[i][2])
        if any(e > MAX_EXPONENT for e in exps):
            raise ProblemParseError("exponent too large", lineno, offset + 1)
        terms.append((tuple(exps), coeff))
    return ring.from_terms(terms)


def parse_problem(text: str) -> ProblemFile:
    p = names = None
    order = "grevlex"
    polys_at = None
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if polys_at is not None:
            break
        words = line.split()
        head = words[0]
        col = line.index(head) + 1
        if head == "field":
            if len(words) != 2 or not words[1].isdigit():
                raise ProblemParseError("usage: field <prime>", lineno, col)
            p = int(words[1])
            try:
                PrimeField(p)
            except FieldError as exc:
                raise ProblemParseError(str(exc), lineno, line.index(words[1]) + 1) from None
        elif head == "vars":
            names = tuple(words[1:])
            if not names:
                raise ProblemParseError("no variables declared", lineno, col)
            for nm in names:
                if not _NAME.match(nm):
                    raise ProblemParseError(f"bad variable name {nm!r}", lineno,
                                            line.index(nm) + 1)
            if len(set(names)) != len(names):
                raise ProblemParseError("duplicate variable name", lineno, col)
        elif head == "order":
            if len(words) != 2 or words[1] not in ORDER_KINDS:
                raise ProblemParseError("usage: order lex|grlex|grevlex", lineno, col)
            order = words[1]
        elif head == "polys":
            if len(words) != 1:
                raise ProblemParseError("'polys' takes no arguments", lineno, col)
            polys_at = lineno
        else:
            raise ProblemParseError(f"unknown directive {head!r}", lineno, col)
    if p is None:
        raise ProblemParseError("missing 'field' line")
    if names is None:
        raise ProblemParseError("missing 'vars' line")
    if polys_at is None:
        raise ProblemParseError("missing 'polys' section")
    ring = make_ring(p, names, order)
    polys = []
    for lineno in range(polys_at + 1, len(lines) + 1):
        raw = lines[lineno - 1]
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        polys.append(parse_polynomial(line, ring, lineno))
    if not polys:
        raise ProblemParseError("empty polynomial list", polys_at, 1)
    return ProblemFile(p, names, order, polys)


def format_problem(pf: ProblemFile) -> str:
    lines = [f"field {pf.characteristic}", "vars " + " ".join(pf.vars),
             f"order {pf.order}", "polys"]
    lines.extend(str(f) for f in pf.polys)
    return "\n".join(lines) + "\n"


def cyclic(n: int, p: int = BENCHMARK_PRIME) -> ProblemFile:
    names = tuple(f"x{i + 1}" for i in range(n))
    ring = make_ring(p, names)
    x = ring.gens()
    polys = []
    for k in range(1, n):
        acc = ring.zero()
        for i in range(n):
            term = ring.one()
            for j in range(k):
                term = term * x[(i + j) % n]
            acc = acc + term
        polys.append(acc)
    prod = ring.one()
    for xi in x:
        prod = prod * xi
    polys.append(prod - ring.one())
    return ProblemFile(p, names, "grevlex", polys)


def katsura(n: int, p: int = BENCHMARK_PRIME) -> ProblemFile:
    names = tuple(f"u{i}" for i in range(n + 1))
    ring = make_ring(p, names)
    u = ring.gens()

    def var(l):
        l = abs(l)
        return u[l] if l <= n else None

    polys = []
    lin = u[0] - ring.one()
    for i in range(1, n + 1):
        lin = lin + u[i].scale(2)
    polys.append(lin)
    for m in range(n):
        acc = ring.zero()
        for l in range(-n, n + 1):
            a, b = var(l), var(m - l)
            if a is not None and b is not None:
                acc = acc + a * b
        polys.append(acc - u[m])
    return ProblemFile(p, names, "grevlex", polys)


def gen_benchmark(family: str, n: int) -> ProblemFile:
    if not 2 <= n <= 7:
        raise ValueError(f"benchmark size {n} outside 2..7")
    if family == "cyclic":
        return cyclic(n)
    if family == "katsura":
        return katsura(n)
    raise ValueError(f"unknown benchmark family {family!r}")
