#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Text grammars of fields and their elements.

Element expressions are integer polynomials (Laurent in ``pi``) in the
symbols ``pi`` and ``g`` with ``+ - * ^`` and parentheses, e.g.
``g*pi^-2 + 3*pi``. They are parsed by sympy and then evaluated by a
restricted walker, so nothing but those constructs is ever accepted.

Field descriptors::

    equichar(k=<int>,prec=<int>)
    mixed(k=<int>,eis="<monic Eisenstein polynomial in z>",prec=<int>)
"""

import re
from typing import Dict, Tuple

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from kodaira.core.errors import ParseError
from kodaira.fields.local import EQUICHAR, MIXED, Elem, FieldCtx
from kodaira.fields.residue import ResCtx, ResElem

PI = sympy.Symbol("pi")
G = sympy.Symbol("g")
Z = sympy.Symbol("z")

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_ALLOWED_CHARS = re.compile(r"^[0-9a-z\s\+\-\*\^\(\)]*$")
_IDENTIFIER = re.compile(r"[a-z]+")
_DESCRIPTOR = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$")
_KEY_VALUE = re.compile(r'\s*(\w+)\s*=\s*("[^"]*"|[^,]+)\s*(?:,|$)')


def _sympify(text: str, symbols: Dict[str, sympy.Symbol]) -> sympy.Expr:
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty expression")
    if not _ALLOWED_CHARS.match(text):
        raise ParseError("unexpected character in {!r}".format(text))
    for name in _IDENTIFIER.findall(text):
        if name not in symbols:
            raise ParseError(
                "unknown symbol {!r} in {!r}; expected one of {}".format(
                    name, text, sorted(symbols)
                )
            )
    try:
        return parse_expr(
            text,
            local_dict=dict(symbols),
            transformations=_TRANSFORMATIONS,
            evaluate=True,
        )
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise ParseError("cannot parse {!r}: {}".format(text, e))


def _to_elem(ctx: FieldCtx, node: sympy.Expr) -> Elem:
    if isinstance(node, sympy.Integer):
        return ctx.from_int(int(node))
    if isinstance(node, sympy.Rational):
        return ctx.from_int(int(node.p)) / ctx.from_int(int(node.q))
    if node == PI:
        return ctx.pi()
    if node == G:
        return ctx.gen()
    if isinstance(node, sympy.Add):
        result = ctx.zero()
        for arg in node.args:
            result = result + _to_elem(ctx, arg)
        return result
    if isinstance(node, sympy.Mul):
        result = ctx.one()
        for arg in node.args:
            result = result * _to_elem(ctx, arg)
        return result
    if isinstance(node, sympy.Pow) and isinstance(node.exp, sympy.Integer):
        return _to_elem(ctx, node.base) ** int(node.exp)
    raise ParseError("unsupported construct {}".format(node))


def parse_elem(ctx: FieldCtx, text: str) -> Elem:
    r"""Parse an element expression into an exact element of :p:`ctx`.

    .. code:: py

        ctx = parse_field('mixed(k=1,eis="z^3-2",prec=64)')
        parse_elem(ctx, "2 + 3*pi").valuation()  # 1
    """
    return _to_elem(ctx, _sympify(text, {"pi": PI, "g": G}))


def _to_res(ctx: ResCtx, node: sympy.Expr) -> ResElem:
    if isinstance(node, sympy.Integer):
        return ctx.element(int(node) & 1)
    if node == G:
        return ctx.gen()
    if isinstance(node, sympy.Add):
        result = ctx.zero()
        for arg in node.args:
            result = result + _to_res(ctx, arg)
        return result
    if isinstance(node, sympy.Mul):
        result = ctx.one()
        for arg in node.args:
            result = result * _to_res(ctx, arg)
        return result
    if isinstance(node, sympy.Pow) and isinstance(node.exp, sympy.Integer):
        return _to_res(ctx, node.base) ** int(node.exp)
    raise ParseError("unsupported residue construct {}".format(node))


def res_parse(ctx: ResCtx, text: str) -> ResElem:
    r"""Parse a residue element written in ``g``, e.g. ``g^2+1``."""
    return _to_res(ctx, _sympify(text, {"g": G}))


def parse_eisenstein(text: str) -> Tuple[int, ...]:
    r"""Lower coefficients :math:`(e_0, \dots, e_{E-1})` of a monic integer
    polynomial in ``z``.
    """
    expr = _sympify(text, {"z": Z})
    try:
        poly = sympy.Poly(expr, Z)
    except sympy.PolynomialError as e:
        raise ParseError("{!r} is not a polynomial in z: {}".format(text, e))
    coeffs = poly.all_coeffs()
    if poly.degree() < 1 or coeffs[0] != 1:
        raise ParseError("{!r} is not monic of positive degree".format(text))
    if not all(c.is_Integer for c in coeffs):
        raise ParseError("{!r} has non-integer coefficients".format(text))
    return tuple(int(c) for c in reversed(coeffs[1:]))


def _descriptor_args(text: str) -> Tuple[str, Dict[str, str]]:
    match = _DESCRIPTOR.match(text)
    if match is None:
        raise ParseError("malformed field descriptor {!r}".format(text))
    args: Dict[str, str] = {}
    body = match.group(2)
    position = 0
    while position < len(body.strip()):
        kv = _KEY_VALUE.match(body, position)
        if kv is None or kv.end() == position:
            raise ParseError("malformed arguments in {!r}".format(text))
        args[kv.group(1)] = kv.group(2).strip().strip('"')
        position = kv.end()
    return match.group(1), args


def _int_arg(args: Dict[str, str], key: str, default: int) -> int:
    if key not in args:
        return default
    try:
        return int(args[key])
    except ValueError:
        raise ParseError("{}={!r} is not an integer".format(key, args[key]))


def parse_field(descriptor: str, precision: int = -1) -> FieldCtx:
    r"""Parse a field descriptor.

    :param descriptor: ``equichar(k=..,prec=..)`` or
        ``mixed(k=..,eis="..",prec=..)``.
    :param precision: overrides ``prec`` when positive.
    """
    regime, args = _descriptor_args(descriptor)
    unknown = set(args) - {"k", "prec", "eis"}
    if unknown:
        raise ParseError(
            "unknown descriptor keys {} in {!r}".format(
                sorted(unknown), descriptor
            )
        )
    k = _int_arg(args, "k", 1)
    prec = precision if precision > 0 else _int_arg(args, "prec", 64)
    try:
        residue = ResCtx.for_degree(k)
    except ValueError as e:
        raise ParseError(str(e))
    if regime == EQUICHAR:
        if "eis" in args:
            raise ParseError("equichar descriptors take no eis=")
        return FieldCtx(regime=EQUICHAR, residue=residue, precision=prec)
    if regime == MIXED:
        if "eis" not in args:
            raise ParseError("mixed descriptors need eis=")
        return FieldCtx(
            regime=MIXED,
            residue=residue,
            precision=prec,
            eisenstein=parse_eisenstein(args["eis"]),
        )
    raise ParseError("unknown regime {!r}".format(regime))
