"""Reader for state files.

Text grammar (UTF-8, '#' starts a comment, ';' separates statements like a
line break):

    dims 2 2 2
    +1 |001>
    1/2-3/4 i |010>
    -a |100>

Kets are digit strings when every local dimension is at most 10, otherwise
comma-separated indices (|0,12,3>). Indices are 0-based, party 1 first.
A document starting with '{' is read as the structured JSON form
{"dims": [...], "terms": [{"coeff": "...", "ket": [...]}]}.
"""

import json
import logging
from fractions import Fraction
from typing import Iterator, Optional

import regex
from pydantic import ValidationError

from ..models.amplitude import Amplitude, is_parameter_name
from ..models.gaussian_rational import ONE, GaussianRational
from ..models.qudit_dims import QuditDims
from ..models.state_document import StateDocument
from ..models.state_tensor import MultiIndex, StateTensor
from ..util.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    StateSyntaxError,
)
from . import state_builder

RATIONAL = r"\d+(?:/\d+)?"
GAUSSIAN_REGEX = regex.compile(
    rf"(?P<re_sign>[+-]?)(?P<re>{RATIONAL})(?:(?P<im_sign>[+-])(?P<im>{RATIONAL})?\*?i)?"
    rf"|(?P<im_only_sign>[+-]?)(?P<im_only>{RATIONAL})?\*?i"
)
PARAMETER_REGEX = regex.compile(
    r"(?P<sign>[+-]?)(?:(?P<scale>\([^()]*\)|[^*()]+)\*)?(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
)
TERM_REGEX = regex.compile(r"(?P<coeff>[^|]*)\|(?P<ket>[^|>]*)>")
DIGIT_KET_REGEX = regex.compile(r"[0-9]+")
INDEX_REGEX = regex.compile(r"\s*[0-9]+\s*")
WHITESPACE_REGEX = regex.compile(r"\s+")


def _signed(sign: str, magnitude: str) -> Fraction:
    value = Fraction(magnitude)
    return -value if sign == "-" else value


def parse_gaussian(text: str) -> GaussianRational:
    """Parse `p`, `p/q`, `p/q+r/s i`, `r/s i`, `i`, `-i` (whitespace tolerant)."""
    compact = WHITESPACE_REGEX.sub("", text)
    match = GAUSSIAN_REGEX.fullmatch(compact)
    if not match:
        raise StateSyntaxError(f"invalid Gaussian rational {text!r}")
    try:
        if match.group("re") is not None:
            real = _signed(match.group("re_sign"), match.group("re"))
            imag = Fraction(0)
            if match.group("im_sign"):
                imag = _signed(match.group("im_sign"), match.group("im") or "1")
        else:
            real = Fraction(0)
            imag = _signed(match.group("im_only_sign"), match.group("im_only") or "1")
    except ZeroDivisionError:
        raise StateSyntaxError(f"zero denominator in {text!r}")
    return GaussianRational(real, imag)


def parse_coefficient(text: str) -> Amplitude:
    """Parse a term coefficient: a Gaussian rational, `[+-]name`,
    `<gaussian>*name` or `(<gaussian>)*name`. Empty or sign-only means +-1."""
    compact = WHITESPACE_REGEX.sub("", text)
    if compact in ("", "+"):
        return Amplitude(gaussian=ONE)
    if compact == "-":
        return Amplitude(gaussian=-ONE)
    if GAUSSIAN_REGEX.fullmatch(compact):
        return Amplitude(gaussian=parse_gaussian(compact))
    match = PARAMETER_REGEX.fullmatch(compact)
    if not match or not is_parameter_name(match.group("name")):
        raise StateSyntaxError(f"invalid coefficient {text.strip()!r}")
    scale = ONE
    if match.group("scale"):
        scale = parse_gaussian(match.group("scale").strip("()"))
    if match.group("sign") == "-":
        scale = -scale
    if scale.is_zero():
        raise StateSyntaxError(f"parameter {match.group('name')} scaled by zero")
    return Amplitude(param=match.group("name"), scale=scale)


def parse_ket(text: str, dims: QuditDims) -> MultiIndex:
    """Parse the inside of |...> into 0-based indices, party 1 first."""
    text = text.strip()
    if "," in text:
        parts = text.split(",")
        if not all(INDEX_REGEX.fullmatch(part) for part in parts):
            raise StateSyntaxError(f"invalid ket |{text}>")
        index = tuple(int(part) for part in parts)
    else:
        if not DIGIT_KET_REGEX.fullmatch(text):
            raise StateSyntaxError(f"invalid ket |{text}>")
        if not dims.digit_kets():
            raise StateSyntaxError(
                f"ket |{text}> must use comma-separated indices when a local dimension exceeds 10"
            )
        index = tuple(int(ch) for ch in text)
    if len(index) != dims.n:
        raise DimensionMismatchError(
            f"ket |{text}> has {len(index)} components, dims declares {dims.n} parties"
        )
    return state_builder.check_index(index, dims)


def _statements(text: str) -> Iterator[tuple[int, int, str]]:
    """Yield (line, column, statement) for every nonempty statement."""
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        offset = 0
        for piece in content.split(";"):
            stripped = piece.strip()
            if stripped:
                column = offset + len(piece) - len(piece.lstrip()) + 1
                yield line_number, column, stripped
            offset += len(piece) + 1


def _parse_dims(statement: str, line: int, column: int) -> QuditDims:
    tokens = statement.split()
    if tokens[0] != "dims":
        raise StateSyntaxError("expected 'dims d1 d2 ... dn' first", line, column)
    if not all(DIGIT_KET_REGEX.fullmatch(token) for token in tokens[1:]):
        raise StateSyntaxError("dimensions must be positive integers", line, column)
    try:
        return QuditDims(dims=tuple(int(token) for token in tokens[1:]))
    except ValidationError as e:
        raise StateSyntaxError(e.errors()[0]["msg"], line, column)


def _with_location(error: Exception, line: int, column: int) -> Exception:
    """Same error type, message prefixed with the statement location."""
    if isinstance(error, StateSyntaxError):
        return StateSyntaxError(str(error), line, column)
    return type(error)(f"line {line}, column {column}: {error}")


def _parse_text(text: str) -> StateTensor:
    dims: Optional[QuditDims] = None
    terms = []
    for line, column, statement in _statements(text):
        if dims is None:
            dims = _parse_dims(statement, line, column)
            continue
        match = TERM_REGEX.fullmatch(statement)
        if not match:
            raise StateSyntaxError(
                f"expected '<coeff> |<ket>>', got {statement!r}", line, column
            )
        try:
            amplitude = parse_coefficient(match.group("coeff"))
            index = parse_ket(match.group("ket"), dims)
        except (StateSyntaxError, DimensionMismatchError, IndexOutOfRangeError) as e:
            raise _with_location(e, line, column)
        terms.append((index, amplitude))
    if dims is None:
        raise StateSyntaxError("empty state file, expected 'dims d1 d2 ... dn'", 1, 1)
    logging.debug(f"parsed {len(terms)} raw terms over dims {dims.dims}")
    return state_builder.build_state(dims, terms)


def _parse_structured(text: str) -> StateTensor:
    try:
        document = StateDocument.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise StateSyntaxError(e.msg, e.lineno, e.colno)
    except ValidationError as e:
        error = e.errors()[0]
        location = "/".join(str(part) for part in error["loc"])
        raise StateSyntaxError(f"invalid state document at {location}: {error['msg']}")
    try:
        dims = QuditDims(dims=tuple(document.dims))
    except ValidationError as e:
        raise StateSyntaxError(f"invalid dims: {e.errors()[0]['msg']}")
    terms = []
    for position, term in enumerate(document.terms):
        try:
            amplitude = parse_coefficient(str(term.coeff))
            if isinstance(term.ket, str):
                index = parse_ket(term.ket, dims)
            else:
                index = state_builder.check_index(term.ket, dims)
        except (StateSyntaxError, DimensionMismatchError, IndexOutOfRangeError) as e:
            raise type(e)(f"term {position}: {e}")
        terms.append((index, amplitude))
    return state_builder.build_state(dims, terms)


def parse_state(text: str) -> StateTensor:
    """Parse a state document (text grammar or structured JSON) into a StateTensor.

    Args:
        text (str): document contents

    Returns:
        StateTensor: merged state, zero terms dropped
    """
    text = text.lstrip("\ufeff")
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    return _parse_text(text)
