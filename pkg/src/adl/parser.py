"""Recursive-descent parser for ADL.

The grammar is a closed subset of IDL-style declarations (documented in
``docs/language.md``): modules, classes with single/multiple inheritance and
framework categories, attributes with ``private``/``persistent`` modifiers,
methods with a ``const`` qualifier, enums, typedefs, ``extern`` opaque types,
and bidirectional ``relationship`` declarations.  IDL constructs outside the
subset are rejected with a diagnostic naming the construct.

Errors are recovered at the next ``;`` or ``}`` so a file yields as many
diagnostics as it has problems; the returned unit covers everything that
parsed.
"""

from __future__ import annotations

from . import ast
from .diagnostics import Diagnostic, SourcePos, error
from .lexer import Token, TokenKind, tokenize

# Rejected constructs that open a braced body: skip the whole body on recovery.
_BRACED_CONSTRUCTS = {
    "interface": "interface (declare classes with 'class')",
    "struct": "struct",
    "union": "union",
    "exception": "exception",
    "valuetype": "valuetype",
    "abstract": "abstract valuetype",
    "custom": "custom valuetype",
    "native": "native type",
}

_REJECTED_TYPES = {
    "any": "any type",
    "unsigned": "unsigned type",
    "wchar": "wide character type",
    "fixed": "fixed-point type",
}

_PARAM_MODES = ("in", "out", "inout")


class _Recover(Exception):
    """Internal signal: a diagnostic was recorded, resync and continue."""


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.i = 0
        self.diagnostics: list[Diagnostic] = []

    # --- token plumbing ---

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def at_end(self) -> bool:
        return self.peek().kind is TokenKind.END

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if not self.at_end():
            self.i += 1
        return tok

    def at_keyword(self, *words: str) -> bool:
        tok = self.peek()
        return tok.kind is TokenKind.KEYWORD and tok.text in words

    def at_punct(self, text: str) -> bool:
        return self.peek().is_punct(text)

    def accept_punct(self, text: str) -> bool:
        if self.at_punct(text):
            self.advance()
            return True
        return False

    def fail(self, message: str, pos: SourcePos | None = None) -> _Recover:
        self.diagnostics.append(error("syntax", message, pos or self.peek().start))
        return _Recover()

    def unsupported(self, construct: str, pos: SourcePos | None = None) -> None:
        self.diagnostics.append(
            error(
                "unsupported-construct",
                f"unsupported IDL construct: {construct}",
                pos or self.peek().start,
            )
        )

    def expect_punct(self, text: str, context: str) -> Token:
        if self.at_punct(text):
            return self.advance()
        raise self.fail(f"expected '{text}' {context}, found {self.peek()}")

    def expect_ident(self, context: str) -> Token:
        tok = self.peek()
        if tok.kind is TokenKind.IDENT:
            return self.advance()
        if tok.kind is TokenKind.KEYWORD:
            raise self.fail(f"expected identifier {context}, found reserved word '{tok.text}'")
        raise self.fail(f"expected identifier {context}, found {tok}")

    def synchronize(self) -> None:
        """Skip to just past the next ';', or stop before '}' / end of input."""
        while not self.at_end():
            if self.at_punct(";"):
                self.advance()
                return
            if self.at_punct("}"):
                return
            self.advance()

    def skip_braced(self) -> None:
        """Skip a rejected braced construct including its body and trailing ';'."""
        depth = 0
        while not self.at_end():
            tok = self.peek()
            if tok.is_punct("{"):
                depth += 1
            elif tok.is_punct("}"):
                depth -= 1
                if depth <= 0:
                    self.advance()
                    self.accept_punct(";")
                    return
            elif tok.is_punct(";") and depth == 0:
                self.advance()
                return
            self.advance()

    # --- grammar ---

    def parse_unit(self) -> ast.CompilationUnit:
        start = self.peek().start
        decls: list[ast.Declaration] = []
        while not self.at_end():
            if self.at_punct("}") or self.at_punct(";"):
                self.diagnostics.append(error("syntax", f"unexpected {self.peek()}", self.peek().start))
                self.advance()
                continue
            decl = self.parse_declaration()
            if decl is not None:
                decls.append(decl)
        return ast.CompilationUnit(tuple(decls), start)

    def parse_declaration(self) -> ast.Declaration | None:
        tok = self.peek()
        try:
            if self.at_keyword("module"):
                return self.parse_module()
            if self.at_keyword("class"):
                return self.parse_class()
            if self.at_keyword("enum"):
                return self.parse_enum()
            if self.at_keyword("typedef"):
                return self.parse_typedef()
            if self.at_keyword("extern"):
                return self.parse_extern()
            if tok.kind is TokenKind.KEYWORD and tok.text in _BRACED_CONSTRUCTS:
                self.unsupported(_BRACED_CONSTRUCTS[tok.text])
                self.advance()
                self.skip_braced()
                return None
            if self.at_keyword("oneway"):
                self.unsupported("oneway operation")
                self.advance()
                self.synchronize()
                return None
            if self.at_keyword("const"):
                self.unsupported("constant declaration")
                self.advance()
                self.synchronize()
                return None
            raise self.fail(f"expected a declaration, found {tok}")
        except _Recover:
            self.synchronize()
            return None

    def parse_module(self) -> ast.ModuleDecl:
        start = self.advance().start  # 'module'
        name = self.expect_ident("after 'module'").text
        self.expect_punct("{", "to open module body")
        members: list[ast.Declaration] = []
        while not self.at_end() and not self.at_punct("}"):
            decl = self.parse_declaration()
            if decl is not None:
                members.append(decl)
        self.expect_punct("}", "to close module body")
        self.expect_punct(";", "after module body")
        return ast.ModuleDecl(name, tuple(members), start)

    def parse_class(self) -> ast.ClassDecl:
        start = self.advance().start  # 'class'
        name = self.expect_ident("after 'class'").text
        category = ast.Category.PLAIN
        bases: list[str] = []
        if self.accept_punct(":"):
            while True:
                tok = self.peek()
                if tok.kind is TokenKind.KEYWORD and tok.text in ast.CATEGORY_KEYWORDS:
                    self.advance()
                    declared = ast.CATEGORY_KEYWORDS[tok.text]
                    if category is not ast.Category.PLAIN and declared is not category:
                        self.diagnostics.append(
                            error(
                                "conflicting-category",
                                f"conflicting class categories '{category.value}' and '{tok.text}'",
                                tok.start,
                            )
                        )
                    elif declared is category:
                        self.diagnostics.append(
                            error("duplicate-modifier", f"category '{tok.text}' given twice", tok.start)
                        )
                    else:
                        category = declared
                else:
                    bases.append(self.parse_scoped_name("as base class name"))
                if not self.accept_punct(","):
                    break
        self.expect_punct("{", "to open class body")
        members: list[ast.ClassMember] = []
        while not self.at_end() and not self.at_punct("}"):
            try:
                member = self.parse_member()
            except _Recover:
                self.synchronize()
                continue
            if member is not None:
                members.append(member)
        self.expect_punct("}", "to close class body")
        self.expect_punct(";", "after class body")
        return ast.ClassDecl(name, category, tuple(bases), tuple(members), start)

    def parse_member(self) -> ast.ClassMember | None:
        tok = self.peek()
        if self.at_keyword("relationship"):
            return self.parse_relationship()
        if self.at_keyword("readonly"):
            self.unsupported("readonly attribute")
            self.advance()
            self.synchronize()
            return None
        if self.at_keyword("attribute"):
            self.unsupported("attribute declaration (write '<type> <name>;')")
            self.advance()
            self.synchronize()
            return None
        if self.at_keyword("oneway"):
            self.unsupported("oneway operation")
            self.advance()
            self.synchronize()
            return None
        if self.at_keyword("const"):
            self.unsupported("constant declaration")
            self.advance()
            self.synchronize()
            return None

        visibility = ast.Visibility.PUBLIC
        persistent = False
        saw_private = saw_persistent = False
        while self.at_keyword("private", "persistent"):
            word = self.advance()
            if word.text == "private":
                if saw_private:
                    self.diagnostics.append(
                        error("duplicate-modifier", "modifier 'private' given twice", word.start)
                    )
                saw_private = True
                visibility = ast.Visibility.PRIVATE
            else:
                if saw_persistent:
                    self.diagnostics.append(
                        error("duplicate-modifier", "modifier 'persistent' given twice", word.start)
                    )
                saw_persistent = True
                persistent = True
        has_modifiers = saw_private or saw_persistent

        if self.at_keyword("void"):
            if has_modifiers:
                raise self.fail("modifiers 'private'/'persistent' apply to attributes only", tok.start)
            self.advance()
            return self.parse_method(None, tok.start)

        decl_type = self.parse_type_spec()
        name_tok = self.expect_ident("as member name")
        if self.at_punct("("):
            if has_modifiers:
                raise self.fail("modifiers 'private'/'persistent' apply to attributes only", tok.start)
            return self.parse_method(decl_type, tok.start, name_tok.text)
        self.expect_punct(";", "after attribute declaration")
        return ast.AttributeDecl(decl_type, name_tok.text, visibility, persistent, tok.start)

    def parse_method(
        self, return_type: ast.TypeRef | None, start: SourcePos, name: str | None = None
    ) -> ast.MethodDecl:
        if name is None:
            name = self.expect_ident("as method name").text
        self.expect_punct("(", "to open parameter list")
        params: list[ast.Param] = []
        if not self.at_punct(")"):
            while True:
                params.append(self.parse_param())
                if not self.accept_punct(","):
                    break
        self.expect_punct(")", "to close parameter list")
        is_const = False
        if self.at_keyword("const"):
            self.advance()
            is_const = True
        if self.at_keyword("raises"):
            self.unsupported("raises clause")
            self.advance()
            if self.accept_punct("("):
                while not self.at_end() and not self.accept_punct(")"):
                    self.advance()
        self.expect_punct(";", "after method declaration")
        return ast.MethodDecl(return_type, name, tuple(params), is_const, start)

    def parse_param(self) -> ast.Param:
        start = self.peek().start
        if self.at_keyword(*_PARAM_MODES):
            mode = self.advance()
            self.unsupported(f"parameter mode '{mode.text}'", mode.start)
        param_type = self.parse_type_spec()
        name = self.expect_ident("as parameter name").text
        return ast.Param(param_type, name, start)

    def parse_relationship(self) -> ast.RelationshipDecl:
        start = self.advance().start  # 'relationship'
        card_tok = self.peek()
        if card_tok.kind is TokenKind.IDENT and card_tok.text in ("one", "many"):
            self.advance()
            cardinality = ast.Cardinality(card_tok.text)
        else:
            raise self.fail(f"expected cardinality 'one' or 'many', found {card_tok}")
        target = self.parse_scoped_name("as relationship target class")
        name = self.expect_ident("as relationship name").text
        inv_tok = self.peek()
        if not (inv_tok.kind is TokenKind.IDENT and inv_tok.text == "inverse"):
            raise self.fail(f"expected 'inverse', found {inv_tok}")
        self.advance()
        inverse = self.parse_scoped_name("as inverse member name")
        if "::" not in inverse:
            raise self.fail(
                f"inverse must be qualified as TargetClass::member, got '{inverse}'", inv_tok.start
            )
        self.expect_punct(";", "after relationship declaration")
        return ast.RelationshipDecl(cardinality, target, name, inverse, start)

    def parse_enum(self) -> ast.EnumDecl:
        start = self.advance().start  # 'enum'
        name = self.expect_ident("after 'enum'").text
        self.expect_punct("{", "to open enumerator list")
        enumerators = [self.expect_ident("as enumerator").text]
        while self.accept_punct(","):
            enumerators.append(self.expect_ident("as enumerator").text)
        self.expect_punct("}", "to close enumerator list")
        self.expect_punct(";", "after enum declaration")
        return ast.EnumDecl(name, tuple(enumerators), start)

    def parse_typedef(self) -> ast.TypedefDecl:
        start = self.advance().start  # 'typedef'
        aliased = self.parse_type_spec()
        alias = self.expect_ident("as typedef alias").text
        self.expect_punct(";", "after typedef")
        return ast.TypedefDecl(alias, aliased, start)

    def parse_extern(self) -> ast.ExternDecl:
        start = self.advance().start  # 'extern'
        name = self.expect_ident("after 'extern'").text
        self.expect_punct(";", "after extern declaration")
        return ast.ExternDecl(name, start)

    def parse_scoped_name(self, context: str) -> str:
        parts = [self.expect_ident(context).text]
        while self.at_punct("::"):
            self.advance()
            parts.append(self.expect_ident("after '::'").text)
        return "::".join(parts)

    def parse_type_spec(self, depth: int = 0) -> ast.TypeRef:
        tok = self.peek()
        if tok.kind is TokenKind.KEYWORD:
            if tok.text in _REJECTED_TYPES:
                self.unsupported(_REJECTED_TYPES[tok.text], tok.start)
                self.advance()
                raise _Recover()
            if tok.text == "sequence":
                self.advance()
                self.expect_punct("<", "after 'sequence'")
                if depth + 1 > ast.MAX_SEQUENCE_DEPTH:
                    self.diagnostics.append(
                        error(
                            "sequence-depth",
                            f"sequence nesting deeper than {ast.MAX_SEQUENCE_DEPTH} levels",
                            tok.start,
                        )
                    )
                element = self.parse_type_spec(depth + 1)
                if self.at_punct(","):
                    self.unsupported("bounded sequence")
                    self.advance()
                    while not self.at_end() and not self.at_punct(">"):
                        self.advance()
                self.expect_punct(">", "to close sequence type")
                return ast.SequenceType(element, tok.start)
            if tok.text == "long":
                self.advance()
                if self.at_keyword("long"):
                    self.advance()
                    return ast.PrimitiveType("long long", tok.start)
                return ast.PrimitiveType("long", tok.start)
            if tok.text in ("boolean", "octet", "short", "float", "double", "string"):
                self.advance()
                return ast.PrimitiveType(tok.text, tok.start)
            if tok.text == "void":
                raise self.fail("'void' is only valid as a method return type", tok.start)
            raise self.fail(f"expected a type, found reserved word '{tok.text}'")
        if tok.kind is TokenKind.IDENT:
            name = self.parse_scoped_name("as type name")
            return ast.NamedType(name, tok.start)
        raise self.fail(f"expected a type, found {tok}")


def parse(tokens: list[Token]) -> tuple[ast.CompilationUnit, list[Diagnostic]]:
    """Parse a token list (ending in end-of-input) into a compilation unit.

    Returns the unit covering everything that parsed plus all diagnostics;
    the parse succeeded iff no diagnostic has error severity.
    """
    parser = _Parser(tokens)
    unit = parser.parse_unit()
    return unit, parser.diagnostics


def parse_source(source: str, file: str = "<string>") -> tuple[ast.CompilationUnit, list[Diagnostic]]:
    """Tokenize and parse in one step; lexer diagnostics come first."""
    tokens, lex_diags = tokenize(source, file)
    unit, parse_diags = parse(tokens)
    return unit, lex_diags + parse_diags
