"""Statement and expression tree for the supported SQL dialect.

All nodes are frozen-ish dataclasses with structural equality, so
``parse(print(ast)) == ast`` is a meaningful round-trip property.  The
rewriter and optimizer produce new trees instead of mutating in place.

Conversion-function invocations are ordinary function calls whose names end
in ``ToUniversal`` / ``FromUniversal``; helpers at the bottom of this module
build and recognize them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union


# --- expressions -------------------------------------------------------------

class Expr:
    """Marker base class for expression nodes."""


@dataclass(frozen=True)
class ColumnRef(Expr):
    name: str
    qualifier: Optional[str] = None

    def key(self) -> tuple[Optional[str], str]:
        return (self.qualifier.lower() if self.qualifier else None, self.name.lower())


@dataclass(frozen=True)
class Literal(Expr):
    value: Union[int, float, str, None]


@dataclass(frozen=True)
class Comparison(Expr):
    op: str  # one of = <> < <= > >=
    left: Expr
    right: Expr


@dataclass(frozen=True)
class And(Expr):
    terms: tuple[Expr, ...]


@dataclass(frozen=True)
class Or(Expr):
    terms: tuple[Expr, ...]


@dataclass(frozen=True)
class Not(Expr):
    term: Expr


@dataclass(frozen=True)
class InList(Expr):
    expr: Expr
    items: tuple[Expr, ...]
    negated: bool = False


@dataclass(frozen=True)
class Arith(Expr):
    op: str  # + - * /
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg(Expr):
    term: Expr


@dataclass(frozen=True)
class FuncCall(Expr):
    """Scalar function call (conversion functions, SUBSTR)."""

    name: str
    args: tuple[Expr, ...]


@dataclass(frozen=True)
class AggCall(Expr):
    func: str  # COUNT SUM AVG MIN MAX
    arg: Optional[Expr]  # None means COUNT(*)

    @property
    def is_count_star(self) -> bool:
        return self.arg is None


@dataclass(frozen=True)
class CaseExpr(Expr):
    whens: tuple[tuple[Expr, Expr], ...]
    else_: Optional[Expr] = None


@dataclass(frozen=True)
class Exists(Expr):
    query: "Query"


@dataclass(frozen=True)
class InSubquery(Expr):
    expr: Expr
    query: "Query"
    negated: bool = False


@dataclass(frozen=True)
class ScalarSubquery(Expr):
    query: "Query"


@dataclass(frozen=True)
class Star(Expr):
    """`SELECT *` marker; only valid as the sole select item."""


# --- query -------------------------------------------------------------------

@dataclass(frozen=True)
class SelectItem:
    expr: Expr
    alias: Optional[str] = None


class FromItem:
    """Marker base class for FROM entries."""


@dataclass(frozen=True)
class BaseTable(FromItem):
    name: str
    alias: Optional[str] = None

    @property
    def effective_alias(self) -> str:
        return self.alias or self.name


@dataclass(frozen=True)
class SubQuery(FromItem):
    query: "Query"
    alias: str

    @property
    def effective_alias(self) -> str:
        return self.alias


@dataclass(frozen=True)
class Join(FromItem):
    left: FromItem
    right: FromItem
    condition: Expr


@dataclass(frozen=True)
class OrderItem:
    expr: Expr
    descending: bool = False


@dataclass(frozen=True)
class Query:
    select: tuple[SelectItem, ...]
    from_items: tuple[FromItem, ...] = ()
    where: Optional[Expr] = None
    group_by: tuple[Expr, ...] = ()
    having: Optional[Expr] = None
    order_by: tuple[OrderItem, ...] = ()
    distinct: bool = False


# --- statements ----------------------------------------------------------------

class Statement:
    """Marker base class for statements."""


@dataclass(frozen=True)
class QueryStatement(Statement):
    query: Query


class Generality(Enum):
    GLOBAL = "GLOBAL"
    TENANT_SPECIFIC = "SPECIFIC"


class Comparability(Enum):
    COMPARABLE = "COMPARABLE"
    CONVERTIBLE = "CONVERTIBLE"
    TENANT_SPECIFIC = "SPECIFIC"


@dataclass(frozen=True)
class ColumnClause:
    name: str
    type_name: str  # INTEGER | DECIMAL | TEXT | VARCHAR(n) (normalized upstream)
    not_null: bool = False
    comparability: Optional[Comparability] = None  # None: dialect default applies
    conversion_pair: Optional[str] = None


@dataclass(frozen=True)
class ConstraintClause:
    kind: str  # PRIMARY_KEY | FOREIGN_KEY | CHECK
    name: str
    columns: tuple[str, ...] = ()
    ref_table: Optional[str] = None
    ref_columns: tuple[str, ...] = ()
    check: Optional[Expr] = None


@dataclass(frozen=True)
class CreateTable(Statement):
    name: str
    columns: tuple[ColumnClause, ...]
    constraints: tuple[ConstraintClause, ...] = ()
    generality: Optional[Generality] = None  # None: dialect default (global)


@dataclass(frozen=True)
class CreateView(Statement):
    name: str
    query: Query
    generality: Optional[Generality] = None


@dataclass(frozen=True)
class DropTable(Statement):
    name: str


@dataclass(frozen=True)
class DropView(Statement):
    name: str


@dataclass(frozen=True)
class AlterTable(Statement):
    table: str
    add_constraint: Optional[ConstraintClause] = None
    drop_constraint: Optional[str] = None


@dataclass(frozen=True)
class Insert(Statement):
    table: str
    columns: tuple[str, ...]
    rows: tuple[tuple[Expr, ...], ...] = ()  # VALUES form
    query: Optional[Query] = None  # INSERT ... SELECT form


@dataclass(frozen=True)
class Update(Statement):
    table: str
    assignments: tuple[tuple[str, Expr], ...]
    where: Optional[Expr] = None


@dataclass(frozen=True)
class Delete(Statement):
    table: str
    where: Optional[Expr] = None


ALL_GRANTEE = "ALL"


@dataclass(frozen=True)
class Grant(Statement):
    rights: tuple[str, ...]
    table: str
    grantee: Union[int, str]  # tenant id or ALL_GRANTEE


@dataclass(frozen=True)
class Revoke(Statement):
    rights: tuple[str, ...]
    table: str
    grantee: Union[int, str]


@dataclass(frozen=True)
class SimpleScope:
    """Explicit ttid list; the empty list denotes the full tenant set."""

    ttids: tuple[int, ...]


@dataclass(frozen=True)
class ComplexScope:
    from_items: tuple[FromItem, ...]
    where: Optional[Expr] = None


ScopeSpec = Union[SimpleScope, ComplexScope]


@dataclass(frozen=True)
class SetScope(Statement):
    scope: ScopeSpec


# --- construction helpers -----------------------------------------------------

def conj(*terms: Optional[Expr]) -> Optional[Expr]:
    """AND together terms, flattening nested ANDs and dropping Nones.

    Rewritten trees keep conjunctions flat so the printed text re-parses to
    the identical tree (n-ary And nodes round-trip, nested ones would not).
    """
    flat: list[Expr] = []
    for t in terms:
        if t is None:
            continue
        if isinstance(t, And):
            flat.extend(t.terms)
        else:
            flat.append(t)
    if not flat:
        return None
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


_CONV_NAME = re.compile(r"^(.*)(to|from)universal$", re.IGNORECASE)


def conversion_call_parts(expr: Expr) -> Optional[tuple[str, str, Expr, Expr]]:
    """Return (pair, direction, value, tenant) if expr is a conversion call."""
    if not isinstance(expr, FuncCall) or len(expr.args) != 2:
        return None
    m = _CONV_NAME.match(expr.name)
    if not m or not m.group(1):
        return None
    return (m.group(1).lower(), m.group(2).lower(), expr.args[0], expr.args[1])


def to_universal_call(pair: str, value: Expr, tenant: Expr) -> FuncCall:
    return FuncCall(f"{pair}ToUniversal", (value, tenant))


def from_universal_call(pair: str, value: Expr, tenant: Expr) -> FuncCall:
    return FuncCall(f"{pair}FromUniversal", (value, tenant))


def is_conversion_call(expr: Expr) -> bool:
    return conversion_call_parts(expr) is not None


def walk(node) -> list:
    """Yield node and all descendant AST nodes (expressions, queries, items)."""
    out = []
    stack = [node]
    while stack:
        n = stack.pop()
        out.append(n)
        if isinstance(n, (Comparison, Arith)):
            stack.extend((n.left, n.right))
        elif isinstance(n, (And, Or)):
            stack.extend(n.terms)
        elif isinstance(n, (Not, Neg)):
            stack.append(n.term)
        elif isinstance(n, InList):
            stack.append(n.expr)
            stack.extend(n.items)
        elif isinstance(n, FuncCall):
            stack.extend(n.args)
        elif isinstance(n, AggCall):
            if n.arg is not None:
                stack.append(n.arg)
        elif isinstance(n, CaseExpr):
            for cond, val in n.whens:
                stack.extend((cond, val))
            if n.else_ is not None:
                stack.append(n.else_)
        elif isinstance(n, Exists):
            stack.append(n.query)
        elif isinstance(n, InSubquery):
            stack.extend((n.expr, n.query))
        elif isinstance(n, ScalarSubquery):
            stack.append(n.query)
        elif isinstance(n, Query):
            stack.extend(item.expr for item in n.select)
            stack.extend(n.from_items)
            if n.where is not None:
                stack.append(n.where)
            stack.extend(n.group_by)
            if n.having is not None:
                stack.append(n.having)
            stack.extend(o.expr for o in n.order_by)
        elif isinstance(n, SubQuery):
            stack.append(n.query)
        elif isinstance(n, Join):
            stack.extend((n.left, n.right, n.condition))
    return out


def count_conversion_calls(node) -> int:
    return sum(1 for n in walk(node) if isinstance(n, Expr) and is_conversion_call(n))
