"""Text format for ideals and primes.

Grammar for an ideal::

    ideal    := monomial (',' monomial)*
    monomial := factor ('*'? factor)*
    factor   := var ('^' nat)?
    var      := 'x[i,j]' | declared name | letter digit*

Whitespace is ignored and one surrounding pair of parentheses is allowed.
Adjacent variables multiply, so ``xyz`` is the product of x, y and z and
``x1y2`` is x1 times y2.  When a variable list is given (either a leading
``vars: a,b,c;`` header or an explicit argument), names are matched greedily
against it instead, which permits multi-letter names.  Variables are
collected in order of first appearance unless declared.

Printing uses ``^`` and ``*`` and the canonical generator order, and
``parse_ideal(render_ideal(I)) == I`` whenever the ideal's variable names
fit the grammar.
"""

from __future__ import annotations

import re

from .monomials import Monomial, MonomialIdeal, Prime, Ring, minimalize

_POLAR_TOKEN = re.compile(r"x\[\d+,\d+\]")
_PLAIN_NAME = re.compile(r"[A-Za-z][0-9]*")
_HEADER = re.compile(r"^\s*vars\s*:\s*(?P<names>[^;\n]*)(?:;|\n|$)")


class ParseError(ValueError):
    """Syntax error in the ideal grammar, with a character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _split_names(text: str) -> list[str]:
    return [n for n in text.replace(",", " ").split() if n]


def _strip_parens(text: str) -> str:
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        inner = stripped[1:-1]
        if "(" not in inner and ")" not in inner:
            return inner
    return stripped


def _tokenize(
    body: str, declared: list[str] | None
) -> list[tuple[str, str | int, int]]:
    """Tokens are (kind, value, position); kinds: name, power, comma, star."""
    by_length = sorted(declared, key=len, reverse=True) if declared else None
    tokens: list[tuple[str, str | int, int]] = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch.isspace():
            i += 1
            continue
        if ch == ",":
            tokens.append(("comma", ",", i))
            i += 1
            continue
        if ch == "*":
            tokens.append(("star", "*", i))
            i += 1
            continue
        if ch == "^":
            j = i + 1
            while j < len(body) and body[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("expected digits after '^'", i + 1)
            value = int(body[i + 1 : j])
            if value == 0:
                raise ParseError("exponent must be positive", i + 1)
            tokens.append(("power", value, i))
            i = j
            continue
        polar = _POLAR_TOKEN.match(body, i)
        if polar is not None:
            tokens.append(("name", polar.group(0), i))
            i = polar.end()
            continue
        if ch.isalpha():
            if by_length is not None:
                for candidate in by_length:
                    if body.startswith(candidate, i):
                        tokens.append(("name", candidate, i))
                        i += len(candidate)
                        break
                else:
                    raise ParseError(f"unknown variable starting at {body[i:i+8]!r}", i)
                continue
            plain = _PLAIN_NAME.match(body, i)
            tokens.append(("name", plain.group(0), i))
            i = plain.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def _parse_terms(
    body: str, declared: list[str] | None
) -> tuple[list[str], list[list[tuple[str, int]]]]:
    tokens = _tokenize(body, declared)
    names: list[str] = list(declared) if declared else []
    seen = set(names)
    monomials: list[list[tuple[str, int]]] = []
    current: list[tuple[str, int]] = []
    pos = 0
    expecting_name = True
    for kind, value, position in tokens:
        pos = position
        if kind == "name":
            assert isinstance(value, str)
            if value not in seen:
                seen.add(value)
                names.append(value)
            current.append((value, 1))
            expecting_name = False
        elif kind == "power":
            if not current or expecting_name:
                raise ParseError("'^' needs a variable in front", position)
            name, old = current[-1]
            if old != 1:
                raise ParseError("double exponent", position)
            current[-1] = (name, int(value))
        elif kind == "star":
            if expecting_name:
                raise ParseError("'*' needs a variable in front", position)
            expecting_name = True
        elif kind == "comma":
            if not current:
                raise ParseError("empty generator", position)
            monomials.append(current)
            current = []
            expecting_name = True
    if tokens and tokens[-1][0] == "star":
        raise ParseError("dangling '*'", tokens[-1][2])
    if not current:
        raise ParseError("empty generator", pos + 1 if tokens else 0)
    monomials.append(current)
    return names, monomials


def parse_ideal(text: str, variables: list[str] | None = None) -> MonomialIdeal:
    """Parse the ideal grammar above into a minimalized ideal.

    An explicit ``variables`` list overrides any ``vars:`` header in the
    text; either one fixes both the tokenization and the ring order.
    """
    stripped = text.strip()
    declared = list(variables) if variables else None
    header = _HEADER.match(stripped)
    if header is not None:
        header_names = _split_names(header.group("names"))
        if declared is None:
            declared = header_names
        stripped = stripped[header.end() :]
    body = _strip_parens(stripped)
    if not body:
        raise ParseError("empty ideal", 0)
    names, raw = _parse_terms(body, declared)
    ring = Ring(tuple(names))
    gens = []
    for factors in raw:
        exps = [0] * len(ring)
        for name, e in factors:
            exps[ring.index(name)] += e
        gens.append(Monomial(ring, tuple(exps)))
    result = minimalize(gens, ring)
    assert isinstance(result, MonomialIdeal)
    return result


def parse_prime(text: str, ring: Ring) -> Prime:
    """A comma- or space-separated list of variables of the ring."""
    names = _split_names(_strip_parens(text))
    if not names:
        raise ParseError("empty prime", 0)
    for n in names:
        if n not in ring:
            raise ParseError(f"{n!r} is not a variable of {ring}", text.find(n))
    return Prime(ring, tuple(names))


def render_ideal(ideal: MonomialIdeal) -> str:
    """Canonical, re-parseable generator list (no parentheses)."""
    return ", ".join(str(g) for g in ideal.gens)


def render_prime(p: Prime) -> str:
    return ", ".join(p.variables)
