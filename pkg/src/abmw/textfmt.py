"""Text form shared by Hecke and BMW elements: ``coeff * word + coeff * word``."""

from __future__ import annotations

from typing import Callable, List, Sequence, Tuple, TypeVar

from .errors import ParseError
from .scalars import ONE, Scalar, ScalarError

W = TypeVar("W")


def _split_top(text: str) -> List[Tuple[int, str]]:
    # split on + and - outside parentheses and brackets; a sign right after
    # '^', '*' or '/' belongs to an exponent or factor
    chunks, depth, cur, sign = [], 0, "", 1
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-":
            last = cur.strip()[-1:]
            if not last:
                sign = -sign if ch == "-" else sign
                continue
            if last not in "^*/":
                chunks.append((sign, cur))
                cur, sign = "", (-1 if ch == "-" else 1)
                continue
        cur += ch
    if depth != 0:
        raise ParseError("unbalanced parentheses")
    chunks.append((sign, cur))
    return [(s, c.strip()) for s, c in chunks if c.strip()]


def parse_terms(text: str, parse_word: Callable[[str], W]) -> List[Tuple[Scalar, W]]:
    text = text.strip()
    if not text:
        raise ParseError("empty expression")
    out = []
    for sign, chunk in _split_top(text):
        coeff, word = _split_coeff(chunk, parse_word)
        out.append((coeff * sign, word))
    return out


def _split_coeff(chunk: str, parse_word):
    depth = 0
    for i, ch in enumerate(chunk):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "*" and depth == 0:
            # the last top-level '*' that is followed by a word
            rest = chunk[i + 1:]
            try:
                w = parse_word(rest.strip())
            except ParseError:
                continue
            try:
                return Scalar.parse(chunk[:i]), w
            except ScalarError as e:
                raise ParseError(str(e)) from None
    if chunk.startswith("("):
        depth = 0
        for i, ch in enumerate(chunk):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                head, rest = chunk[: i + 1], chunk[i + 1:].strip()
                break
        if rest:
            try:
                return Scalar.parse(head), parse_word(rest)
            except ScalarError as e:
                raise ParseError(str(e)) from None
    try:
        return ONE, parse_word(chunk)
    except ParseError as word_err:
        try:
            return Scalar.parse(chunk), parse_word("1")
        except ScalarError:
            raise word_err from None


def format_terms(items: Sequence[Tuple[Scalar, str]]) -> str:
    if not items:
        return "0"
    parts = []
    for coeff, word in items:
        if word == "1":
            body, neg = str(coeff), False
            if body.startswith("-") and "+" not in body and " - " not in body:
                body, neg = body[1:], True
        elif coeff == ONE:
            body, neg = word, False
        elif coeff == -ONE:
            body, neg = word, True
        else:
            c = str(coeff)
            neg = False
            if c.startswith("-") and " " not in c:
                c, neg = c[1:], True
            if " " in c and not (c.startswith("(") and c.endswith(")") and c.count("(") == 1):
                c = f"({c})"
            body = f"{c} * {word}"
        parts.append((neg, body))
    s = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        s += (" - " if neg else " + ") + body
    return s
