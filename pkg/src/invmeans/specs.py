"""Textual mean expressions: parse strings into means and pairs.

Grammar (colon-separated, recursive operands parenthesized)::

    expr   := atom
            | "power:" num
            | "stolarsky:" num ":" num
            | "proj:" cone
            | "mt:" mean ":" num
            | "nt:" mean ":" mean ":" mean ":" num
            | "pair:" mean ":" mean ":" mean ":" num
    mean   := expr that is not a pair; parenthesize when it contains ":"
    atom   := arithmetic | geometric | harmonic | logarithmic
            | min | max | proj1 | proj2
    cone   := full | empty | lower | upper | mixed

"pair:..." produces a MeanPair, everything else a Mean.  Parse errors
carry the character position of the offending token; range violations
from the underlying constructors (e.g. stolarsky:1:1) surface verbatim.
"""
from __future__ import annotations

import math

from .complement import MeanPair, general_base, general_pair, self_complement_base
from .errors import InvalidMeanSpec
from .means import CLASSICAL_NAMES, Mean, classical, power_mean, stolarsky
from .projective import BUILTIN_CONE_NAMES, builtin_cone, projective_mean

__all__ = ["parse_mean_spec", "parse_mean", "parse_pair"]


def _is_single_group(s: str) -> bool:
    if not (s.startswith("(") and s.endswith(")")):
        return False
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return i == len(s) - 1
    return False


def _strip_parens(s: str, offset: int) -> tuple[str, int]:
    while _is_single_group(s):
        s = s[1:-1]
        offset += 1
    return s, offset


def _split_top(s: str, offset: int) -> list[tuple[str, int]]:
    """Split on colons outside parentheses, keeping absolute offsets."""
    parts: list[tuple[str, int]] = []
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidMeanSpec("unbalanced ')'", offset + i)
        elif ch == ":" and depth == 0:
            parts.append((s[start:i], offset + start))
            start = i + 1
    if depth != 0:
        raise InvalidMeanSpec("unbalanced '('", offset + s.index("("))
    parts.append((s[start:], offset + start))
    return parts


def _number(token: str, pos: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise InvalidMeanSpec(f"expected a number, got {token!r}", pos) from None
    if not math.isfinite(value):
        raise InvalidMeanSpec(f"expected a finite number, got {token!r}", pos)
    return value


def _expect_arity(head: str, rest: list, count: int, pos: int) -> None:
    if len(rest) != count:
        plural = "argument" if count == 1 else "arguments"
        raise InvalidMeanSpec(
            f"{head!r} expects {count} {plural}, got {len(rest)}", pos
        )


def _parse_mean_arg(token: str, pos: int) -> Mean:
    result = _parse(token, pos)
    if isinstance(result, MeanPair):
        raise InvalidMeanSpec("a pair expression cannot be used as a mean", pos)
    return result


def _parse(s: str, offset: int) -> Mean | MeanPair:
    s, offset = _strip_parens(s, offset)
    if not s:
        raise InvalidMeanSpec("empty mean specification", offset)
    parts = _split_top(s, offset)
    head, head_pos = parts[0]
    rest = parts[1:]
    if not rest:
        if head in CLASSICAL_NAMES:
            return classical(head)
        raise InvalidMeanSpec(f"unknown mean identifier {head!r}", head_pos)
    if head == "power":
        _expect_arity(head, rest, 1, head_pos)
        return power_mean(_number(*rest[0]))
    if head == "stolarsky":
        _expect_arity(head, rest, 2, head_pos)
        return stolarsky(_number(*rest[0]), _number(*rest[1]))
    if head == "proj":
        _expect_arity(head, rest, 1, head_pos)
        cone_name, cone_pos = rest[0]
        if cone_name not in BUILTIN_CONE_NAMES:
            raise InvalidMeanSpec(f"unknown cone name {cone_name!r}", cone_pos)
        return projective_mean(builtin_cone(cone_name))
    if head == "mt":
        _expect_arity(head, rest, 2, head_pos)
        base = _parse_mean_arg(*rest[0])
        return self_complement_base(base, _number(*rest[1]))
    if head in ("nt", "pair"):
        _expect_arity(head, rest, 4, head_pos)
        m = _parse_mean_arg(*rest[0])
        c = _parse_mean_arg(*rest[1])
        d = _parse_mean_arg(*rest[2])
        t = _number(*rest[3])
        if head == "nt":
            return general_base(m, c, d, t)
        return general_pair(m, c, d, t)
    raise InvalidMeanSpec(f"unknown constructor {head!r}", head_pos)


def parse_mean_spec(s: str) -> Mean | MeanPair:
    """Parse a textual expression into a Mean or MeanPair."""
    if not isinstance(s, str):
        raise InvalidMeanSpec("mean specification must be a string")
    return _parse(s, 0)


def parse_mean(s: str) -> Mean:
    """Parse an expression that must denote a single mean."""
    result = parse_mean_spec(s)
    if isinstance(result, MeanPair):
        raise InvalidMeanSpec(f"{s!r} specifies a pair, expected a single mean")
    return result


def parse_pair(s: str) -> MeanPair:
    """Parse an expression that must denote a pair (head "pair:")."""
    result = parse_mean_spec(s)
    if not isinstance(result, MeanPair):
        raise InvalidMeanSpec(f"{s!r} specifies a single mean, expected pair:...")
    return result
