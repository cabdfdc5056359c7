"""The meta-object representation: a reflection-style model of all described
classes, filled from the AST by a visitor and resolved in a second pass.

``build_model`` aggregates any number of compilation units (duplicate
fully-qualified names are errors; modules merge).  ``resolve`` binds every
type reference, linearizes inheritance, verifies relationship inverses, and
assigns ClassIds.  A resolved model is immutable by convention and safe for
concurrent reads; all emitters consume it, never the AST.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import ast, typedesc
from .diagnostics import Diagnostic, SourcePos, error
from .typedesc import TypeDesc

FNV_OFFSET_BASIS = 0x811C9DC5
FNV_PRIME = 0x01000193

FRAMEWORK_CATEGORIES = (
    ast.Category.DATA_OBJECT,
    ast.Category.CONTAINED_OBJECT,
    ast.Category.COLLECTION_OBJECT,
)

# Categories whose classes may own relationship endpoints.
LINKABLE_CATEGORIES = (ast.Category.DATA_OBJECT, ast.Category.CONTAINED_OBJECT)


def compute_class_id(qualified_name: str) -> int:
    """Stable 32-bit identifier for a class: FNV-1a over the UTF-8 name.

    Deterministic across runs and platforms.  Collisions within one model
    are detected by ``resolve`` and reported as errors.
    """
    if not qualified_name:
        raise ValueError("class name must be non-empty")
    value = FNV_OFFSET_BASIS
    for byte in qualified_name.encode("utf-8"):
        value ^= byte
        value = (value * FNV_PRIME) & 0xFFFFFFFF
    return value


# --- model nodes ---------------------------------------------------------------


@dataclass
class MetaAttribute:
    name: str
    declared_type: ast.TypeRef
    visibility: ast.Visibility
    persistent: bool
    pos: SourcePos
    type: TypeDesc | None = None  # bound by resolve

    @property
    def private(self) -> bool:
        return self.visibility is ast.Visibility.PRIVATE


@dataclass
class MetaMethod:
    name: str
    declared_return: ast.TypeRef | None
    declared_params: tuple[ast.Param, ...]
    is_const: bool
    pos: SourcePos
    return_type: TypeDesc | None = None  # None also encodes void; see returns_void
    params: list[tuple[str, TypeDesc]] = field(default_factory=list)

    @property
    def returns_void(self) -> bool:
        return self.declared_return is None


@dataclass
class MetaRelationship:
    name: str
    cardinality: ast.Cardinality
    declared_target: str
    declared_inverse: str
    pos: SourcePos
    owner: "MetaClass" = None  # type: ignore[assignment]
    target: "MetaClass | None" = None
    inverse_name: str = ""  # member name on the target class

    def inverse(self) -> "MetaRelationship":
        assert self.target is not None
        return self.target.own_relationship(self.inverse_name)


@dataclass
class MetaClass:
    qualified_name: str
    declared_category: ast.Category
    pos: SourcePos
    declared_bases: tuple[str, ...] = ()
    bases: list["MetaClass"] = field(default_factory=list)
    attributes: list[MetaAttribute] = field(default_factory=list)
    methods: list[MetaMethod] = field(default_factory=list)
    relationships: list[MetaRelationship] = field(default_factory=list)
    category: ast.Category = ast.Category.PLAIN  # effective, set by resolve
    class_id: int | None = None

    def __post_init__(self) -> None:
        self.category = self.declared_category

    @property
    def name(self) -> str:
        return self.qualified_name.rsplit("::", 1)[-1]

    @property
    def module_path(self) -> tuple[str, ...]:
        return tuple(self.qualified_name.split("::")[:-1])

    def own_attribute(self, name: str) -> MetaAttribute | None:
        return next((a for a in self.attributes if a.name == name), None)

    def own_relationship(self, name: str) -> MetaRelationship | None:
        return next((r for r in self.relationships if r.name == name), None)

    def __hash__(self) -> int:
        return id(self)

    def __eq__(self, other: object) -> bool:
        return self is other


@dataclass
class MetaEnum:
    qualified_name: str
    enumerators: tuple[str, ...]
    pos: SourcePos


@dataclass
class MetaTypedef:
    qualified_name: str
    declared_type: ast.TypeRef
    pos: SourcePos
    type: TypeDesc | None = None


@dataclass
class MetaModule:
    name: str
    qualified_name: str
    pos: SourcePos
    members: list[object] = field(default_factory=list)  # nested modules / classes / enums / typedefs


Declaration = MetaClass | MetaEnum | MetaTypedef | MetaModule


class MetaModel:
    """Aggregated declarations of one or more compilation units."""

    def __init__(self) -> None:
        self.modules: dict[str, MetaModule] = {}
        self.class_index: dict[str, MetaClass] = {}
        self.enum_index: dict[str, MetaEnum] = {}
        self.typedef_index: dict[str, MetaTypedef] = {}
        self.resolved = False
        self._by_fqn: dict[str, Declaration] = {}
        self._order: list[Declaration] = []

    def classes(self) -> list[MetaClass]:
        """All classes in declaration order (externs included)."""
        return [d for d in self._order if isinstance(d, MetaClass)]

    def enums(self) -> list[MetaEnum]:
        return [d for d in self._order if isinstance(d, MetaEnum)]

    def find_class(self, qualified_name: str) -> MetaClass | None:
        return self.class_index.get(qualified_name)


# --- building ------------------------------------------------------------------


class _ModelBuilder(ast.AstVisitor):
    """Visitor that walks compilation units and fills a MetaModel."""

    def __init__(self, model: MetaModel) -> None:
        self.model = model
        self.scope: list[str] = []
        self.diagnostics: list[Diagnostic] = []

    def qualify(self, name: str) -> str:
        return "::".join(self.scope + [name])

    def register(self, name: str, decl: Declaration, pos: SourcePos) -> bool:
        fqn = self.qualify(name)
        existing = self.model._by_fqn.get(fqn)
        if existing is not None:
            self.diagnostics.append(
                error(
                    "duplicate-def",
                    f"duplicate definition of '{fqn}' (first defined at {existing.pos})",
                    pos,
                )
            )
            return False
        self.model._by_fqn[fqn] = decl
        self.model._order.append(decl)
        if self.scope:
            parent = self.model._by_fqn["::".join(self.scope)]
            assert isinstance(parent, MetaModule)
            parent.members.append(decl)
        return True

    def visit_moduledecl(self, node: ast.ModuleDecl) -> None:
        fqn = self.qualify(node.name)
        existing = self.model._by_fqn.get(fqn)
        if existing is None:
            module = MetaModule(node.name, fqn, node.pos)
            self.register(node.name, module, node.pos)
            if not self.scope:
                self.model.modules[node.name] = module
        elif not isinstance(existing, MetaModule):
            self.diagnostics.append(
                error(
                    "duplicate-def",
                    f"duplicate definition of '{fqn}' (first defined at {existing.pos})",
                    node.pos,
                )
            )
            return
        self.scope.append(node.name)
        for member in node.members:
            self.visit(member)
        self.scope.pop()

    def visit_classdecl(self, node: ast.ClassDecl) -> None:
        cls = MetaClass(
            self.qualify(node.name),
            node.category,
            node.pos,
            declared_bases=node.bases,
        )
        member_names: dict[str, SourcePos] = {}
        for member in node.members:
            if member.name in member_names:
                self.diagnostics.append(
                    error(
                        "duplicate-member",
                        f"duplicate member '{member.name}' in class '{cls.qualified_name}' "
                        f"(first declared at {member_names[member.name]})",
                        member.pos,
                    )
                )
                continue
            member_names[member.name] = member.pos
            if isinstance(member, ast.AttributeDecl):
                cls.attributes.append(
                    MetaAttribute(member.name, member.type, member.visibility, member.persistent, member.pos)
                )
            elif isinstance(member, ast.RelationshipDecl):
                rel = MetaRelationship(
                    member.name, member.cardinality, member.target, member.inverse, member.pos
                )
                rel.owner = cls
                cls.relationships.append(rel)
            else:
                cls.methods.append(
                    MetaMethod(member.name, member.return_type, member.params, member.is_const, member.pos)
                )
        if self.register(node.name, cls, node.pos):
            self.model.class_index[cls.qualified_name] = cls

    def visit_externdecl(self, node: ast.ExternDecl) -> None:
        cls = MetaClass(self.qualify(node.name), ast.Category.EXTERN, node.pos)
        if self.register(node.name, cls, node.pos):
            self.model.class_index[cls.qualified_name] = cls

    def visit_enumdecl(self, node: ast.EnumDecl) -> None:
        decl = MetaEnum(self.qualify(node.name), node.enumerators, node.pos)
        if self.register(node.name, decl, node.pos):
            self.model.enum_index[decl.qualified_name] = decl

    def visit_typedefdecl(self, node: ast.TypedefDecl) -> None:
        decl = MetaTypedef(self.qualify(node.alias), node.type, node.pos)
        if self.register(node.alias, decl, node.pos):
            self.model.typedef_index[decl.qualified_name] = decl


def build_model(units: list[ast.CompilationUnit]) -> tuple[MetaModel, list[Diagnostic]]:
    """Aggregate compilation units into an unresolved MetaModel."""
    model = MetaModel()
    builder = _ModelBuilder(model)
    for unit in units:
        builder.visit(unit)
    return model, builder.diagnostics


# --- resolution ----------------------------------------------------------------


class _Resolver:
    def __init__(self, model: MetaModel) -> None:
        self.model = model
        self.diagnostics: list[Diagnostic] = []
        self._linearized: dict[int, list[MetaClass]] = {}

    def err(self, code: str, message: str, pos: SourcePos) -> None:
        self.diagnostics.append(error(code, message, pos))

    # -- name lookup --

    def lookup(self, name: str, scope: tuple[str, ...]) -> Declaration | None:
        """Resolve ``name`` from a module scope.

        Qualified or not, the first segment is searched innermost-out along
        the scope chain, then at the root.  As a last resort a unique
        suffix match across the whole model is accepted; multiple matches
        are ambiguous (reported by the caller via ``AmbiguousName``).
        """
        by_fqn = self.model._by_fqn
        for depth in range(len(scope), -1, -1):
            prefix = list(scope[:depth])
            candidate = "::".join(prefix + [name])
            if candidate in by_fqn:
                return by_fqn[candidate]
        suffix_hits = [fqn for fqn in by_fqn if fqn == name or fqn.endswith("::" + name)]
        if len(suffix_hits) > 1:
            raise AmbiguousName(name, sorted(suffix_hits))
        if suffix_hits:
            return by_fqn[suffix_hits[0]]
        return None

    def _lookup_reporting(self, name: str, scope: tuple[str, ...], pos: SourcePos) -> Declaration | None:
        try:
            found = self.lookup(name, scope)
        except AmbiguousName as amb:
            self.err(
                "ambiguous-name",
                f"ambiguous type name '{name}': matches {', '.join(amb.candidates)}",
                pos,
            )
            return None
        if found is None:
            self.err("unknown-type", f"unknown type '{name}'", pos)
        return found

    # -- passes --

    def resolve_bases(self) -> None:
        for cls in self.model.classes():
            for base_name in cls.declared_bases:
                found = self._lookup_reporting(base_name, cls.module_path, cls.pos)
                if found is None:
                    continue
                if not isinstance(found, MetaClass) or found.declared_category is ast.Category.EXTERN:
                    kind = "extern type" if isinstance(found, MetaClass) else "non-class declaration"
                    self.err(
                        "bad-base",
                        f"'{cls.qualified_name}' cannot inherit from {kind} '{base_name}'",
                        cls.pos,
                    )
                    continue
                cls.bases.append(found)

    def detect_inheritance_cycles(self) -> None:
        WHITE, GRAY, BLACK = 0, 1, 2
        color: dict[int, int] = {}

        def walk(cls: MetaClass) -> None:
            color[id(cls)] = GRAY
            for base in cls.bases:
                state = color.get(id(base), WHITE)
                if state == GRAY:
                    self.err(
                        "inherit-cycle",
                        f"inheritance cycle involving '{base.qualified_name}'",
                        cls.pos,
                    )
                elif state == WHITE:
                    walk(base)
            color[id(cls)] = BLACK

        for cls in self.model.classes():
            if color.get(id(cls), WHITE) == WHITE:
                walk(cls)

    def linearize(self, cls: MetaClass) -> list[MetaClass]:
        cached = self._linearized.get(id(cls))
        if cached is None:
            cached = self._linearized[id(cls)] = linearization(cls)
        return cached

    def resolve_categories(self) -> None:
        for cls in self.model.classes():
            if cls.declared_category is ast.Category.EXTERN:
                continue
            inherited = {
                c.declared_category
                for c in self.linearize(cls)
                if c.declared_category not in (ast.Category.PLAIN, ast.Category.EXTERN)
            }
            if len(inherited) > 1:
                names = ", ".join(sorted(c.value for c in inherited))
                self.err(
                    "category-conflict",
                    f"'{cls.qualified_name}' inherits conflicting categories: {names}",
                    cls.pos,
                )
            elif inherited:
                cls.category = next(iter(inherited))

    def resolve_typedefs(self) -> None:
        resolving: set[str] = set()
        done: set[str] = set()

        def chase(td: MetaTypedef) -> TypeDesc | None:
            if td.qualified_name in done:
                return td.type
            if td.qualified_name in resolving:
                self.err("typedef-cycle", f"typedef cycle involving '{td.qualified_name}'", td.pos)
                return None
            resolving.add(td.qualified_name)
            td.type = self.resolve_type(td.declared_type, td.qualified_name.split("::")[:-1], chase)
            resolving.discard(td.qualified_name)
            done.add(td.qualified_name)
            return td.type

        for td in self.model.typedef_index.values():
            chase(td)

    def resolve_type(
        self,
        declared: ast.TypeRef,
        scope: list[str] | tuple[str, ...],
        typedef_chase=None,
    ) -> TypeDesc | None:
        if isinstance(declared, ast.PrimitiveType):
            return typedesc.primitive(declared.name)
        if isinstance(declared, ast.SequenceType):
            element = self.resolve_type(declared.element, scope, typedef_chase)
            return None if element is None else typedesc.sequence_of(element)
        found = self._lookup_reporting(declared.name, tuple(scope), declared.pos)
        if found is None:
            return None
        if isinstance(found, MetaEnum):
            return TypeDesc("enum", name=found.qualified_name)
        if isinstance(found, MetaTypedef):
            if typedef_chase is not None:
                return typedef_chase(found)
            return found.type
        if isinstance(found, MetaClass):
            kind = "extern" if found.declared_category is ast.Category.EXTERN else "class"
            return TypeDesc(kind, name=found.qualified_name)
        self.err("unknown-type", f"'{declared.name}' is a module, not a type", declared.pos)
        return None

    def resolve_members(self) -> None:
        for cls in self.model.classes():
            scope = cls.module_path
            for attr in cls.attributes:
                attr.type = self.resolve_type(attr.declared_type, scope)
                if attr.type is not None:
                    self.check_value_type(attr.type, attr.pos, f"attribute '{attr.name}'")
            for method in cls.methods:
                if method.declared_return is not None:
                    method.return_type = self.resolve_type(method.declared_return, scope)
                method.params = []
                seen_params: set[str] = set()
                for param in method.declared_params:
                    if param.name in seen_params:
                        self.err(
                            "duplicate-member",
                            f"duplicate parameter '{param.name}' in method '{method.name}'",
                            param.pos,
                        )
                    seen_params.add(param.name)
                    ptype = self.resolve_type(param.type, scope)
                    if ptype is not None:
                        method.params.append((param.name, ptype))

    def check_value_type(self, desc: TypeDesc, pos: SourcePos, what: str) -> None:
        """Framework-category classes cannot be embedded by value."""
        while desc.kind == "sequence":
            desc = desc.element
        if desc.kind == "class":
            target = self.model.class_index[desc.name]
            if target.category in FRAMEWORK_CATEGORIES:
                self.err(
                    "framework-value-type",
                    f"{what} embeds '{desc.name}' ({target.category.value}) by value; "
                    "framework objects are reached through relationships",
                    pos,
                )

    def check_inherited_members(self) -> None:
        reported: set[tuple[str, str, str]] = set()
        for cls in self.model.classes():
            owner_of: dict[str, MetaClass] = {}
            for ancestor in self.linearize(cls):
                members = (
                    [(a.name, a.pos) for a in ancestor.attributes]
                    + [(m.name, m.pos) for m in ancestor.methods]
                    + [(r.name, r.pos) for r in ancestor.relationships]
                )
                for member_name, member_pos in members:
                    prior = owner_of.get(member_name)
                    if prior is None:
                        owner_of[member_name] = ancestor
                        continue
                    key = (prior.qualified_name, ancestor.qualified_name, member_name)
                    if key in reported:
                        continue
                    reported.add(key)
                    if ancestor is cls:
                        self.err(
                            "duplicate-member",
                            f"member '{member_name}' of '{cls.qualified_name}' collides with "
                            f"member inherited from '{prior.qualified_name}'",
                            member_pos,
                        )
                    else:
                        self.err(
                            "duplicate-member",
                            f"'{cls.qualified_name}' inherits member '{member_name}' from both "
                            f"'{prior.qualified_name}' and '{ancestor.qualified_name}'",
                            cls.pos,
                        )

    def resolve_relationships(self) -> None:
        for cls in self.model.classes():
            for rel in cls.relationships:
                if cls.category not in LINKABLE_CATEGORIES:
                    self.err(
                        "relationship-category",
                        f"class '{cls.qualified_name}' ({cls.category.value}) cannot declare "
                        "relationships; only DataObject and ContainedObject classes can",
                        rel.pos,
                    )
                    continue
                found = self._lookup_reporting(rel.declared_target, cls.module_path, rel.pos)
                if found is None:
                    continue
                if not isinstance(found, MetaClass) or found.category not in LINKABLE_CATEGORIES:
                    self.err(
                        "bad-inverse",
                        f"relationship '{rel.name}' targets '{rel.declared_target}', which is not "
                        "a DataObject or ContainedObject class",
                        rel.pos,
                    )
                    continue
                rel.target = found
                qualifier, _, member = rel.declared_inverse.rpartition("::")
                rel.inverse_name = member
                try:
                    qual_decl = self.lookup(qualifier, cls.module_path)
                except AmbiguousName:
                    qual_decl = None
                if qual_decl is not found:
                    self.err(
                        "bad-inverse",
                        f"inverse qualifier '{qualifier}' does not name the target class "
                        f"'{found.qualified_name}'",
                        rel.pos,
                    )

    def check_inverse_closure(self) -> None:
        for cls in self.model.classes():
            for rel in cls.relationships:
                if rel.target is None:
                    continue
                partner = rel.target.own_relationship(rel.inverse_name)
                if partner is None:
                    self.err(
                        "bad-inverse",
                        f"target class '{rel.target.qualified_name}' declares no relationship "
                        f"'{rel.inverse_name}'",
                        rel.pos,
                    )
                    continue
                if partner.target is not cls or partner.inverse_name != rel.name:
                    self.err(
                        "bad-inverse",
                        f"asymmetric relationship inverse: '{cls.qualified_name}::{rel.name}' names "
                        f"'{rel.target.qualified_name}::{rel.inverse_name}', which does not point back",
                        rel.pos,
                    )

    def check_embedding_cycles(self) -> None:
        """A plain struct embedded by value must not contain itself."""
        GRAY, BLACK = 1, 2
        state: dict[str, int] = {}

        def direct_embeds(cls: MetaClass) -> list[str]:
            names = []
            for ancestor in self.linearize(cls):
                for attr in ancestor.attributes:
                    if attr.type is not None and attr.type.kind == "class":
                        names.append(attr.type.name)
            return names

        def walk(name: str, pos: SourcePos) -> None:
            if state.get(name) == BLACK:
                return
            if state.get(name) == GRAY:
                self.err("embed-cycle", f"'{name}' embeds itself by value", pos)
                return
            state[name] = GRAY
            cls = self.model.class_index.get(name)
            if cls is not None:
                for embedded in direct_embeds(cls):
                    walk(embedded, cls.pos)
            state[name] = BLACK

        for cls in self.model.classes():
            walk(cls.qualified_name, cls.pos)

    def assign_class_ids(self) -> None:
        by_id: dict[int, MetaClass] = {}
        for cls in self.model.classes():
            cls.class_id = compute_class_id(cls.qualified_name)
            other = by_id.get(cls.class_id)
            if other is not None:
                self.err(
                    "classid-collision",
                    f"ClassId collision between '{other.qualified_name}' and "
                    f"'{cls.qualified_name}' (0x{cls.class_id:08x})",
                    cls.pos,
                )
            else:
                by_id[cls.class_id] = cls


class AmbiguousName(Exception):
    def __init__(self, name: str, candidates: list[str]) -> None:
        super().__init__(name)
        self.name = name
        self.candidates = candidates


def resolve(model: MetaModel) -> tuple[MetaModel, list[Diagnostic]]:
    """Bind names, verify the model, and assign ClassIds.

    Idempotent: resolving a resolved model is a no-op.  On errors the model
    is left unresolved and the diagnostics say why.
    """
    if model.resolved:
        return model, []
    resolver = _Resolver(model)
    resolver.resolve_bases()
    resolver.detect_inheritance_cycles()
    if resolver.diagnostics:
        return model, resolver.diagnostics
    resolver.resolve_categories()
    resolver.resolve_typedefs()
    resolver.resolve_members()
    resolver.check_inherited_members()
    resolver.resolve_relationships()
    resolver.check_inverse_closure()
    resolver.check_embedding_cycles()
    resolver.assign_class_ids()
    if resolver.diagnostics:
        return model, resolver.diagnostics
    model.resolved = True
    return model, []


# --- reflection queries ----------------------------------------------------------


def linearization(cls: MetaClass) -> list[MetaClass]:
    """Ancestors-first class order: depth-first, left-to-right, repeated
    ancestors kept at their first visit only."""
    seen: set[int] = set()
    order: list[MetaClass] = []

    def visit(c: MetaClass) -> None:
        if id(c) in seen:
            return
        seen.add(id(c))
        for base in c.bases:
            visit(base)
        order.append(c)

    visit(cls)
    return order


def attributes_of(cls: MetaClass, include_inherited: bool = False) -> list[MetaAttribute]:
    """Attributes in wire order: base-class attributes first, linearization
    order, then the class's own."""
    if not include_inherited:
        return list(cls.attributes)
    result: list[MetaAttribute] = []
    for ancestor in linearization(cls):
        result.extend(ancestor.attributes)
    return result


def relationships_of(cls: MetaClass, include_inherited: bool = False) -> list[MetaRelationship]:
    if not include_inherited:
        return list(cls.relationships)
    result: list[MetaRelationship] = []
    for ancestor in linearization(cls):
        result.extend(ancestor.relationships)
    return result


def methods_of(cls: MetaClass, include_inherited: bool = False) -> list[MetaMethod]:
    if not include_inherited:
        return list(cls.methods)
    result: list[MetaMethod] = []
    for ancestor in linearization(cls):
        result.extend(ancestor.methods)
    return result


def is_kind_of(cls: MetaClass, ancestor_name: str) -> bool:
    """Reflexive, transitive ancestry test.

    ``ancestor_name`` may be a fully qualified class name, an unqualified
    class name (matched against the last segment), or a framework category
    name such as ``DataObject``.
    """
    simple = "::" not in ancestor_name
    for ancestor in linearization(cls):
        if ancestor.qualified_name == ancestor_name:
            return True
        if simple and ancestor.name == ancestor_name:
            return True
        if ancestor.category.value == ancestor_name:
            return True
    return False
