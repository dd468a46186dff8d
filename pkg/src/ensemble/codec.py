"""Line-oriented ensemble text format.

    ensemble "<name>"
    povm
    element <alpha> <rx> <ry> <rz>

'#' starts a comment outside the quoted name. A `povm` line opens a new POVM,
`element` lines attach to the open one. Parsing is syntax-only; validity is
checked by `validate`.
"""
import json
import re
from typing import List, Optional

from models import Ensemble, Povm, QubitOperator
from operators import RationalSyntaxError, format_rational, parse_rational
from .errors import EnsembleSemanticError, EnsembleSyntaxError

_TOKEN = re.compile(r"\S+")
_DECODER = json.JSONDecoder()


def serialize(e: Ensemble) -> str:
    lines: List[str] = [f"ensemble {json.dumps(e.name, ensure_ascii=False)}"]
    for povm in e.povms:
        lines.append("povm")
        for m in povm.elements:
            values = " ".join(format_rational(c) for c in m.coefficients)
            lines.append(f"element {values}")
    return "\n".join(lines) + "\n"


def _parse_name(line: str, line_no: int, start: int) -> str:
    quote = line.find('"', start)
    if quote < 0:
        raise EnsembleSyntaxError("ensemble name must be a double-quoted string", line_no, start + 1)
    if line[start:quote].strip():
        raise EnsembleSyntaxError("unexpected text before ensemble name", line_no, start + 1)
    try:
        name, end = _DECODER.raw_decode(line, quote)
    except json.JSONDecodeError as e:
        raise EnsembleSyntaxError(f"bad quoted name: {e.msg}", line_no, e.pos + 1)
    rest = line[end:].strip()
    if rest and not rest.startswith("#"):
        raise EnsembleSyntaxError("unexpected text after ensemble name", line_no, end + 1)
    return name


def parse(text: str) -> Ensemble:
    name: Optional[str] = None
    povms: List[List[QubitOperator]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.lstrip()
        indent = len(raw) - len(stripped)

        if stripped.startswith("ensemble") and stripped[len("ensemble"):len("ensemble") + 1] in (" ", "\t", '"'):
            if name is not None:
                raise EnsembleSemanticError("duplicate ensemble statement", line_no, indent + 1)
            if povms:
                raise EnsembleSemanticError("ensemble statement must come first", line_no, indent + 1)
            name = _parse_name(raw, line_no, indent + len("ensemble"))
            continue

        body = raw.split("#", 1)[0]
        tokens = list(_TOKEN.finditer(body))
        if not tokens:
            continue

        keyword = tokens[0].group()
        column = tokens[0].start() + 1

        if keyword == "povm":
            if len(tokens) > 1:
                raise EnsembleSyntaxError("'povm' takes no arguments", line_no, tokens[1].start() + 1)
            if name is None:
                raise EnsembleSemanticError("'povm' before ensemble statement", line_no, column)
            povms.append([])
        elif keyword == "element":
            if not povms:
                raise EnsembleSemanticError("'element' outside of a povm", line_no, column)
            values = tokens[1:]
            coefficients = []
            for token in values:
                try:
                    coefficients.append(parse_rational(token.group()))
                except RationalSyntaxError as e:
                    raise EnsembleSyntaxError(str(e), line_no, token.start() + 1)
            if len(coefficients) != 4:
                raise EnsembleSemanticError(
                    f"'element' needs 4 rationals (alpha rx ry rz), got {len(coefficients)}",
                    line_no, column,
                )
            alpha, rx, ry, rz = coefficients
            povms[-1].append(QubitOperator(alpha=alpha, r=(rx, ry, rz)))
        elif keyword == "ensemble":
            raise EnsembleSyntaxError("ensemble name must be a double-quoted string", line_no, column)
        else:
            raise EnsembleSyntaxError(f"unknown statement '{keyword}'", line_no, column)

    if name is None:
        raise EnsembleSemanticError("missing ensemble statement", 1, 1)

    return Ensemble(name=name, povms=[Povm(elements=elements) for elements in povms])
