"""Declarative pipeline DSL: document format, parser, validator, interpreter."""

from .syntax import (
    Attr,
    BatchParams,
    Binary,
    BufferDecl,
    BufferRef,
    Call,
    ExprPart,
    Index,
    Lit,
    Name,
    Node,
    Program,
    PromptTemplate,
    Ternary,
    TextPart,
    Unary,
    expr_to_str,
    template_to_str,
)
from .parser import parse_expr, parse_program, parse_template, program_to_document, program_to_obj
from .validator import infer_type, validate_program
from .interp import Scope, eval_expr, render_prompt

__all__ = [
    "Attr",
    "BatchParams",
    "Binary",
    "BufferDecl",
    "BufferRef",
    "Call",
    "ExprPart",
    "Index",
    "Lit",
    "Name",
    "Node",
    "Program",
    "PromptTemplate",
    "Ternary",
    "TextPart",
    "Unary",
    "Scope",
    "eval_expr",
    "expr_to_str",
    "infer_type",
    "parse_expr",
    "parse_program",
    "parse_template",
    "program_to_document",
    "program_to_obj",
    "render_prompt",
    "template_to_str",
    "validate_program",
]
