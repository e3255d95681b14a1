"""Read/write utilities: the polynomial text grammar and JSON reports.

Polynomials are read with the grammar

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := [integer] (['*'] var ['^' integer])*
    var   := 'x' | 'y' | 'z'

where whitespace is ignored and integer coefficients are reduced modulo p.
Printing always emits ``*`` between factors, so that printed polynomials
parse back to themselves.
"""

import json
import re
from pathlib import Path

from koszulx.classes.field import GF, PrimeField
from koszulx.classes.monomial import VARIABLES
from koszulx.classes.polynomial import Polynomial
from koszulx.exception import PolynomialParseError

__all__ = [
    "REPORT_SCHEMA",
    "parse_polynomial",
    "parse_polynomials",
    "read_polynomials",
    "format_polynomial",
    "format_polynomials",
    "dump_report",
    "load_report",
]

REPORT_SCHEMA = "kv-report/1"

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<name>[A-Za-z])|(?P<op>[-+*^])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise PolynomialParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list of one polynomial."""

    def __init__(self, text: str, field: PrimeField, offset: int = 0) -> None:
        self.field = field
        self.offset = offset
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def take(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str, pos: int) -> PolynomialParseError:
        return PolynomialParseError(message, self.offset + pos)

    def expression(self) -> Polynomial:
        result: dict = {}
        p = self.field.p
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        while True:
            coeff, exps = self.term()
            result[exps] = (result.get(exps, 0) + sign * coeff) % p
            kind, value, pos = self.peek()
            if kind == "end":
                break
            if kind != "op" or value not in "+-":
                raise self.error(f"unexpected {value!r}, expected '+' or '-'", pos)
            self.take()
            sign = -1 if value == "-" else 1
        return Polynomial({m: c for m, c in result.items() if c}, self.field)

    def term(self) -> tuple[int, tuple[int, int, int]]:
        coeff = 1
        exps = [0, 0, 0]
        seen = False
        kind, value, _ = self.peek()
        if kind == "int":
            self.take()
            coeff = int(value)
            seen = True
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                if not seen:
                    raise self.error("'*' without a left factor", pos)
                self.take()
                kind, value, pos = self.peek()
                if kind != "name":
                    raise self.error("expected a variable after '*'", pos)
            elif kind != "name":
                break
            self.take()
            if value not in VARIABLES:
                raise self.error(f"unknown variable {value!r}", pos)
            exponent = 1
            kind, hat, _ = self.peek()
            if kind == "op" and hat == "^":
                self.take()
                kind, digits, pos = self.peek()
                if kind != "int":
                    raise self.error("expected an exponent after '^'", pos)
                self.take()
                exponent = int(digits)
            exps[VARIABLES.index(value)] += exponent
            seen = True
        if not seen:
            _, value, pos = self.peek()
            raise self.error(f"expected a term, got {value or 'end of input'!r}", pos)
        return self.field.reduce(coeff), tuple(exps)


def parse_polynomial(text: str, field: PrimeField | None = None) -> Polynomial:
    """Return the polynomial written in `text`.

    Parameters
    ----------
    text : str
        A polynomial in the grammar of this module, such as ``"x^2*y + 3z^3"``.
    field : PrimeField, optional
        Coefficient field, GF(p) for the default characteristic if omitted.

    Returns
    -------
    Polynomial
        The parsed polynomial.

    Raises
    ------
    PolynomialParseError
        If the text does not conform to the grammar or uses a variable other
        than x, y, z; the error carries the offending position.

    Examples
    --------
    >>> str(parse_polynomial("y - 2*x"))
    '-2*x + y'
    >>> str(parse_polynomial("x^2*y + 3z^3"))
    'x^2*y + 3*z^3'
    """
    return _Parser(text, field if field is not None else GF()).expression()


def parse_polynomials(text: str, field: PrimeField | None = None) -> list[Polynomial]:
    """Return the polynomials of a comma or newline separated list.

    Blank entries are skipped; error positions refer to the whole text.

    Raises
    ------
    PolynomialParseError
        If an entry does not parse, or there is no entry at all.

    Examples
    --------
    >>> [str(f) for f in parse_polynomials("xy, xz, yz")]
    ['x*y', 'x*z', 'y*z']
    """
    field = field if field is not None else GF()
    polynomials = []
    start = 0
    for piece in re.split(r"[,\n]", text):
        if piece.strip():
            polynomials.append(_Parser(piece, field, offset=start).expression())
        start += len(piece) + 1
    if not polynomials:
        raise PolynomialParseError("no polynomial given", 0)
    return polynomials


def read_polynomials(path, field: PrimeField | None = None) -> list[Polynomial]:
    """Read polynomials from a file, one per line; ``#`` starts a comment."""
    lines = Path(path).read_text().splitlines()
    body = "\n".join(line.split("#", 1)[0] for line in lines)
    return parse_polynomials(body, field)


def format_polynomial(f: Polynomial) -> str:
    """Return `f` in the grammar accepted by :func:`parse_polynomial`."""
    return str(f)


def format_polynomials(polynomials) -> str:
    """Return a comma separated list of polynomials."""
    return ", ".join(format_polynomial(f) for f in polynomials)


def dump_report(report, path=None) -> str:
    """Serialize a report to canonical JSON.

    Keys are sorted, so equal reports give byte-identical documents.

    Parameters
    ----------
    report : dict or object with ``to_dict``
        The report.
    path : str or Path, optional
        File to write the document to.

    Returns
    -------
    str
        The JSON document.
    """
    data = report.to_dict() if hasattr(report, "to_dict") else report
    text = json.dumps(data, sort_keys=True, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def load_report(source) -> dict:
    """Load a JSON report from a string or a file path.

    Raises
    ------
    ValueError
        If the document does not carry the ``kv-report/1`` schema tag.
    """
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        source = Path(source).read_text()
    data = json.loads(source)
    if data.get("schema") != REPORT_SCHEMA:
        raise ValueError(f"not a {REPORT_SCHEMA} document: schema {data.get('schema')!r}")
    return data
