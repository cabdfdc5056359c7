"""AST node types for ADL compilation units, plus the visitor base class.

Node equality is structural: source positions are excluded from comparison,
so ``parse(pretty_print(ast)) == ast`` is the round-trip test the printer
must satisfy.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .diagnostics import SourcePos

MAX_SEQUENCE_DEPTH = 8

PRIMITIVE_TYPES = (
    "boolean",
    "octet",
    "short",
    "long",
    "long long",
    "float",
    "double",
    "string",
)


class Category(enum.Enum):
    PLAIN = "plain"
    DATA_OBJECT = "DataObject"
    CONTAINED_OBJECT = "ContainedObject"
    COLLECTION_OBJECT = "CollectionObject"
    EXTERN = "extern"


CATEGORY_KEYWORDS = {
    "DataObject": Category.DATA_OBJECT,
    "ContainedObject": Category.CONTAINED_OBJECT,
    "CollectionObject": Category.COLLECTION_OBJECT,
}


class Cardinality(enum.Enum):
    ONE = "one"
    MANY = "many"


class Visibility(enum.Enum):
    PUBLIC = "public"
    PRIVATE = "private"


def _pos_field() -> SourcePos:
    return field(compare=False)  # type: ignore[return-value]


# --- type references ---------------------------------------------------------


@dataclass(frozen=True)
class PrimitiveType:
    name: str  # one of PRIMITIVE_TYPES
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class NamedType:
    name: str  # possibly qualified, e.g. "Evt::Track"
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class SequenceType:
    element: TypeRef
    pos: SourcePos = _pos_field()


TypeRef = PrimitiveType | NamedType | SequenceType


def sequence_depth(type_ref: TypeRef) -> int:
    depth = 0
    while isinstance(type_ref, SequenceType):
        depth += 1
        type_ref = type_ref.element
    return depth


# --- declarations -------------------------------------------------------------


@dataclass(frozen=True)
class AttributeDecl:
    type: TypeRef
    name: str
    visibility: Visibility
    persistent: bool
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class RelationshipDecl:
    cardinality: Cardinality
    target: str  # scoped class name
    name: str
    inverse: str  # qualified member name, e.g. "Vertex::tracks"
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class Param:
    type: TypeRef
    name: str
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class MethodDecl:
    return_type: TypeRef | None  # None for void
    name: str
    params: tuple[Param, ...]
    is_const: bool
    pos: SourcePos = _pos_field()


ClassMember = AttributeDecl | RelationshipDecl | MethodDecl


@dataclass(frozen=True)
class ClassDecl:
    name: str
    category: Category
    bases: tuple[str, ...]  # scoped class names, declaration order
    members: tuple[ClassMember, ...]
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class ExternDecl:
    name: str
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class EnumDecl:
    name: str
    enumerators: tuple[str, ...]
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class TypedefDecl:
    alias: str
    type: TypeRef
    pos: SourcePos = _pos_field()


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    members: tuple[Declaration, ...]
    pos: SourcePos = _pos_field()


Declaration = ModuleDecl | ClassDecl | ExternDecl | EnumDecl | TypedefDecl


@dataclass(frozen=True)
class CompilationUnit:
    declarations: tuple[Declaration, ...]
    pos: SourcePos = _pos_field()


AstNode = (
    CompilationUnit
    | Declaration
    | ClassMember
    | Param
    | PrimitiveType
    | NamedType
    | SequenceType
)


class AstVisitor:
    """Dispatches ``visit(node)`` to ``visit_<nodeclass>`` methods.

    Subclasses override the hooks they care about; the default hooks walk
    into children so a partial visitor still sees the whole tree.
    """

    def visit(self, node: AstNode):
        method = getattr(self, "visit_" + type(node).__name__.lower(), None)
        if method is None:
            return self.generic_visit(node)
        return method(node)

    def generic_visit(self, node: AstNode) -> None:
        for child in child_nodes(node):
            self.visit(child)

    def visit_compilationunit(self, node: CompilationUnit):
        return self.generic_visit(node)

    def visit_moduledecl(self, node: ModuleDecl):
        return self.generic_visit(node)


def child_nodes(node: AstNode) -> tuple[AstNode, ...]:
    if isinstance(node, CompilationUnit):
        return node.declarations
    if isinstance(node, ModuleDecl):
        return node.members
    if isinstance(node, ClassDecl):
        return node.members
    if isinstance(node, AttributeDecl):
        return (node.type,)
    if isinstance(node, MethodDecl):
        children: tuple[AstNode, ...] = node.params
        if node.return_type is not None:
            children = (node.return_type,) + children
        return children
    if isinstance(node, Param):
        return (node.type,)
    if isinstance(node, TypedefDecl):
        return (node.type,)
    if isinstance(node, SequenceType):
        return (node.element,)
    return ()
