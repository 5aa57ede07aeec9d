"""Lightweight declaration parsing for C, C++, Java, and C# source.

This is deliberately not a full parser.  Comments, strings, and preprocessor
lines are blanked, the remainder is tokenized, and a brace-depth statement
machine classifies each ``;``/``{`` terminated statement as a class header,
function header, or variable declaration.  Statements that do not match the
small declaration grammar are skipped; expression-level constructs are never
interpreted.  Macro-generated and template-instantiated names therefore only
appear when they are lexically present.

Known gaps, accepted by design: K&R C definitions, raw string literals,
function-pointer declarators, and declarations inside control-statement
headers (for-loop inits) are skipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .model import Category, Language

NAME = "name"
NUM = "num"
PUNCT = "punct"

_TOKEN_RE = re.compile(
    r"(?P<name>[A-Za-z_$][A-Za-z0-9_$]*)"
    r"|(?P<num>\.?[0-9][0-9A-Za-z_.]*)"
    r"|(?P<punct>::|->|\.\.\.|[^\sA-Za-z0-9_$])"
)

# Statements starting with one of these never yield declarations.
CONTROL_KEYWORDS = frozenset(
    """
    if else for while do switch case default try catch finally return break
    continue goto throw throws assert delete new using import package
    typedef sizeof foreach lock checked unchecked fixed yield
    """.split()
)

CLASS_KEYWORDS = frozenset({"class", "struct", "union", "interface", "enum", "record"})

# Leading modifiers stripped before a statement is interpreted; type
# qualifiers such as const/volatile/unsigned stay part of the type text.
SPECIFIERS = frozenset(
    """
    public private protected static final abstract native synchronized
    transient strictfp virtual inline extern explicit friend constexpr
    consteval constinit register mutable override sealed internal readonly
    partial params ref out async typename
    """.split()
)

RESERVED = (
    CONTROL_KEYWORDS
    | CLASS_KEYWORDS
    | SPECIFIERS
    | frozenset(
        """
        auto bool boolean byte char const decimal double extends float
        implements instanceof int long namespace nullptr object operator
        sbyte short signed string super this true false uint ulong unsigned
        ushort var void volatile where
        """.split()
    )
)

# Tokens a well-formed type text may contain besides names and numbers.
_TYPE_PUNCT = frozenset({"::", "*", "&", "<", ">", ",", ".", "[", "]", "...", "^"})


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int


@dataclass(frozen=True)
class RawDecl:
    """One declaration as found in the text, before corpus-level filtering."""

    name: str
    category: Category
    type_name: str | None
    line: int
    enclosing: tuple[str, ...]  # class/function names wrapping this declaration


def sanitize(text: str, language: Language) -> str:
    """Blank comments, string/char literals, preprocessor lines, and Java
    annotations while preserving every line break."""
    out = list(text)
    n = len(text)
    i = 0

    def blank(a: int, b: int) -> None:
        for k in range(a, min(b, n)):
            if out[k] != "\n":
                out[k] = " "

    while i < n:
        ch = text[i]
        nxt = text[i + 1] if i + 1 < n else ""
        if ch == "/" and nxt == "/":
            j = text.find("\n", i)
            j = n if j == -1 else j
            blank(i, j)
            i = j
        elif ch == "/" and nxt == "*":
            j = text.find("*/", i + 2)
            j = n if j == -1 else j + 2
            blank(i, j)
            i = j
        elif ch == '"' or ch == "'":
            quote = ch
            j = i + 1
            while j < n and text[j] != quote:
                if text[j] == "\\":
                    j += 1
                elif text[j] == "\n":
                    break  # unterminated literal: stop at the line end
                j += 1
            blank(i, j + 1)
            i = j + 1
        elif ch == "#" and language in (Language.C, Language.CPP, Language.CSHARP):
            start = text.rfind("\n", 0, i) + 1
            if text[start:i].strip() == "":
                j = i
                while j < n:
                    eol = text.find("\n", j)
                    eol = n if eol == -1 else eol
                    if text[eol - 1 : eol] == "\\":
                        j = eol + 1
                    else:
                        j = eol
                        break
                blank(i, j)
                i = j
            else:
                i += 1
        elif ch == "@" and language in (Language.JAVA, Language.CSHARP):
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] in "_.$"):
                j += 1
            k = j
            while k < n and text[k] in " \t":
                k += 1
            if k < n and text[k] == "(":
                depth = 0
                while k < n:
                    if text[k] == "(":
                        depth += 1
                    elif text[k] == ")":
                        depth -= 1
                        if depth == 0:
                            k += 1
                            break
                    k += 1
                j = k
            blank(i, j)
            i = j
        else:
            i += 1
    return "".join(out)


def tokenize(text: str) -> list[Token]:
    tokens = []
    line = 1
    pos = 0
    for match in _TOKEN_RE.finditer(text):
        line += text.count("\n", pos, match.start())
        pos = match.start()
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(), line))
    return tokens


def _strip_specifiers(tokens: list[Token]) -> list[Token]:
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.kind == NAME and tok.text in SPECIFIERS:
            i += 1
        elif tok.text == ":" and i > 0:
            # access label residue such as "public:" already consumed
            i += 1
        elif tok.text == "<" and i == 0:
            # leading generic parameter group: <T> T transform(...)
            depth = 0
            j = i
            while j < len(tokens):
                if tokens[j].text == "<":
                    depth += 1
                elif tokens[j].text == ">":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if j == len(tokens):
                break
            i = j + 1
        else:
            break
    return tokens[i:]


def _strip_template_prefix(tokens: list[Token]) -> list[Token]:
    if tokens and tokens[0].text == "template":
        depth = 0
        for j in range(1, len(tokens)):
            if tokens[j].text == "<":
                depth += 1
            elif tokens[j].text == ">":
                depth -= 1
                if depth == 0:
                    return _strip_template_prefix(tokens[j + 1 :])
        return []
    return tokens


_OPEN = {"(": ")", "[": "]", "{": "}", "<": ">"}
_CLOSE = {v: k for k, v in _OPEN.items()}


def _split_top_level(tokens: list[Token], sep: str) -> list[list[Token]]:
    chunks: list[list[Token]] = [[]]
    depth = 0
    for tok in tokens:
        if tok.text in _OPEN:
            depth += 1
        elif tok.text in _CLOSE:
            depth = max(0, depth - 1)
        if tok.text == sep and depth == 0:
            chunks.append([])
        else:
            chunks[-1].append(tok)
    return chunks


def _cut_at_top_level(tokens: list[Token], sep: str) -> list[Token]:
    depth = 0
    for i, tok in enumerate(tokens):
        if tok.text in _OPEN:
            depth += 1
        elif tok.text in _CLOSE:
            depth = max(0, depth - 1)
        elif tok.text == sep and depth == 0:
            return tokens[:i]
    return tokens


def _find_top_level(tokens: list[Token], text: str) -> int:
    depth = 0
    for i, tok in enumerate(tokens):
        if tok.text == text and depth == 0:
            return i
        if tok.text in "([{":
            depth += 1
        elif tok.text in ")]}":
            depth -= 1
    return -1


def _join_type(tokens: list[Token]) -> str:
    parts: list[str] = []
    no_space_before = {"<", ">", ",", "[", "]", "::", ".", "*", "&", "..."}
    no_space_after = {"<", ",", "::", ".", "~"}
    prev = ""
    for tok in tokens:
        if parts and tok.text not in no_space_before and prev not in no_space_after:
            parts.append(" ")
        parts.append(tok.text)
        prev = tok.text
    return "".join(parts).strip()


def _valid_type_tokens(tokens: list[Token]) -> bool:
    if not any(t.kind == NAME and t.text not in SPECIFIERS for t in tokens):
        return False
    angle = square = 0
    for tok in tokens:
        if tok.kind == PUNCT and tok.text not in _TYPE_PUNCT:
            return False
        if tok.kind == NAME and tok.text in CONTROL_KEYWORDS:
            return False
        if tok.text == "<":
            angle += 1
        elif tok.text == ">":
            angle -= 1
            if angle < 0:
                return False
        elif tok.text == "[":
            square += 1
        elif tok.text == "]":
            square -= 1
    return angle == 0 and square >= 0


def _parse_declarator(
    chunk: list[Token], type_tokens: list[Token] | None
) -> tuple[Token, str, bool] | None:
    """Parse one declarator chunk into (name token, type text, is_array).

    For the first declarator the chunk holds ``type declarator``; follow-up
    declarators reuse ``type_tokens`` from the first.
    """
    chunk = _cut_at_top_level(chunk, "=")
    chunk = _cut_at_top_level(chunk, ":")  # bitfields, labels
    if not chunk:
        return None
    # Locate the declarator name: the last top-level NAME token.
    depth = 0
    name_idx = -1
    for i, tok in enumerate(chunk):
        if tok.text in _OPEN:
            depth += 1
        elif tok.text in _CLOSE:
            depth = max(0, depth - 1)
        elif tok.kind == NAME and depth == 0:
            name_idx = i
    if name_idx == -1:
        return None
    name_tok = chunk[name_idx]
    if name_tok.text in RESERVED:
        return None
    trailing = chunk[name_idx + 1 :]
    is_array = any(t.text == "[" for t in trailing)
    if any(t.text not in {"[", "]", "..."} and t.kind != NUM and t.kind != NAME for t in trailing):
        return None
    if type_tokens is None:
        type_tokens = [t for t in chunk[:name_idx] if t.text not in SPECIFIERS]
        if not _valid_type_tokens(type_tokens):
            return None
    type_text = _join_type(type_tokens)
    if is_array:
        type_text += "[]"
    return name_tok, type_text, is_array


def _parse_variable_decl(tokens: list[Token]) -> list[tuple[Token, str]]:
    """Parse ``type declarator[, declarator ...]`` into (name, type) pairs."""
    results: list[tuple[Token, str]] = []
    chunks = _split_top_level(tokens, ",")
    shared_type: list[Token] | None = None
    for idx, chunk in enumerate(chunks):
        if idx == 0:
            parsed = _parse_declarator(chunk, None)
            if parsed is None:
                return []
            name_tok, type_text, _ = parsed
            base = type_text[:-2] if type_text.endswith("[]") else type_text
            shared_type = [Token(NAME, base, name_tok.line)]
            results.append((name_tok, type_text))
        else:
            parsed = _parse_declarator(chunk, shared_type)
            if parsed is not None:
                results.append((parsed[0], parsed[1]))
    return results


def _parse_parameters(tokens: list[Token]) -> list[tuple[Token, str]]:
    params: list[tuple[Token, str]] = []
    for chunk in _split_top_level(tokens, ","):
        chunk = [t for t in chunk if t.text not in SPECIFIERS or t.kind != NAME]
        if not chunk or (len(chunk) == 1 and chunk[0].text in {"void", "..."}):
            continue
        parsed = _parse_declarator(chunk, None)
        if parsed is not None:
            params.append((parsed[0], parsed[1]))
    return params


@dataclass
class _Ctx:
    kind: str  # file / namespace / class / function / block
    name: str | None = None
    extra_names: tuple[str, ...] = ()  # qualifier classes of out-of-line methods


class DeclarationParser:
    """Single-file statement machine producing :class:`RawDecl` entries."""

    def __init__(self, language: Language):
        self.language = language
        self.decls: list[RawDecl] = []
        self._stack: list[_Ctx] = [_Ctx("file")]

    # -- helpers -------------------------------------------------------

    def _enclosing_names(self) -> tuple[str, ...]:
        names: list[str] = []
        for ctx in self._stack:
            names.extend(ctx.extra_names)
            if ctx.name:
                names.append(ctx.name)
        return tuple(names)

    def _scope_kind(self) -> str:
        for ctx in reversed(self._stack):
            if ctx.kind in ("file", "namespace", "class", "function", "enum"):
                return ctx.kind
        return "file"

    def _emit(self, name_tok: Token, category: Category, type_text: str | None) -> None:
        self.decls.append(
            RawDecl(
                name=name_tok.text,
                category=category,
                type_name=type_text or None,
                line=name_tok.line,
                enclosing=self._enclosing_names(),
            )
        )

    # -- statement classification --------------------------------------

    def _classify_class_header(self, tokens: list[Token]) -> str | None:
        """Return the declared type name for a class-like header, if any."""
        for i, tok in enumerate(tokens):
            if tok.kind == NAME and tok.text in CLASS_KEYWORDS:
                for follow in tokens[i + 1 :]:
                    if follow.kind == NAME and follow.text not in RESERVED:
                        return follow.text
                    if follow.text in {":", "{", "<", "("}:
                        break
                    if follow.kind == NAME and follow.text in CLASS_KEYWORDS:
                        continue
                return None
        return None

    def _has_class_keyword(self, tokens: list[Token]) -> bool:
        # "class" may appear inside template args; only a top-level keyword
        # before any paren counts.
        depth = 0
        for tok in tokens:
            if tok.text in _OPEN:
                depth += 1
            elif tok.text in _CLOSE:
                depth = max(0, depth - 1)
            elif depth == 0 and tok.kind == NAME and tok.text in CLASS_KEYWORDS:
                return True
        return False

    def _function_header(
        self, tokens: list[Token]
    ) -> tuple[Token, str | None, list[tuple[Token, str]], tuple[str, ...]] | None:
        """Recognize ``rettype name ( params ) trailer`` headers."""
        open_idx = _find_top_level(tokens, "(")
        if open_idx <= 0:
            return None
        depth = 0
        close_idx = -1
        for i in range(open_idx, len(tokens)):
            if tokens[i].text == "(":
                depth += 1
            elif tokens[i].text == ")":
                depth -= 1
                if depth == 0:
                    close_idx = i
                    break
        if close_idx == -1:
            return None
        name_tok = tokens[open_idx - 1]
        if name_tok.kind != NAME or name_tok.text in RESERVED:
            return None
        before = tokens[:open_idx - 1]
        qualifier_names: list[str] = []
        while len(before) >= 2 and before[-1].text in {"::", "."} and before[-2].kind == NAME:
            qualifier_names.append(before[-2].text)
            before = before[:-2]
        before = [t for t in before if t.text not in SPECIFIERS]
        if before and before[-1].text == "~":
            return None  # destructor: compiler-mandated name
        ret_type: str | None
        if before:
            if not _valid_type_tokens(before):
                return None
            ret_type = _join_type(before)
        else:
            # Constructors carry no return type; anything else without one
            # is a call, not a declaration.
            enclosing = self._scope_class_name()
            if name_tok.text != enclosing and not qualifier_names:
                return None
            ret_type = None
        if qualifier_names and self._scope_kind() in ("function", "block"):
            return None  # qualified call inside a body
        params = _parse_parameters(tokens[open_idx + 1 : close_idx])
        return name_tok, ret_type, params, tuple(reversed(qualifier_names))

    def _scope_class_name(self) -> str | None:
        for ctx in reversed(self._stack):
            if ctx.kind in ("class", "enum"):
                return ctx.name
        return None

    # -- event handlers --------------------------------------------------

    def open_brace(self, tokens: list[Token]) -> str:
        """Classify a ``{``-terminated header; returns swallow mode."""
        tokens = _strip_template_prefix(_strip_specifiers(tokens))
        if not tokens:
            self._stack.append(_Ctx("block"))
            return "push"
        first = tokens[0]
        if _find_top_level(tokens, "=") != -1:
            return "swallow"
        # typedef struct { ... } headers open a class scope, so the class
        # check runs before the control-keyword bail.
        if self._has_class_keyword(tokens):
            name = self._classify_class_header(tokens)
            kind = "enum" if any(t.text == "enum" for t in tokens) else "class"
            if name:
                line = next(t.line for t in tokens if t.text == name)
                self._emit(Token(NAME, name, line), Category.CLASS, None)
            self._stack.append(_Ctx(kind, name))
            return "push"
        if first.kind == NAME and first.text in CONTROL_KEYWORDS:
            self._stack.append(_Ctx("block"))
            return "push"
        if first.kind == NAME and first.text == "namespace":
            name = tokens[1].text if len(tokens) > 1 and tokens[1].kind == NAME else None
            self._stack.append(_Ctx("namespace", name))
            return "push"
        if first.kind == NAME and first.text == "extern":
            self._stack.append(_Ctx("namespace"))
            return "push"
        header = self._function_header(tokens)
        if header is not None and self._scope_kind() in ("file", "namespace", "class", "enum"):
            name_tok, ret_type, params, qualifiers = header
            enclosing = self._enclosing_names() + qualifiers
            self.decls.append(
                RawDecl(name_tok.text, Category.FUNCTION, ret_type, name_tok.line, enclosing)
            )
            self._stack.append(_Ctx("function", name_tok.text, qualifiers))
            for param_tok, param_type in params:
                self._emit(param_tok, Category.PARAMETER, param_type)
            return "push"
        if (
            _find_top_level(tokens, "(") == -1
            and sum(1 for t in tokens if t.kind == NAME) >= 2
        ):
            return "swallow"  # brace initializer: int x{0};
        self._stack.append(_Ctx("block"))
        return "push"

    def close_brace(self) -> None:
        if len(self._stack) > 1:
            self._stack.pop()

    def statement(self, tokens: list[Token]) -> None:
        tokens = _strip_template_prefix(_strip_specifiers(tokens))
        if not tokens:
            return
        first = tokens[0]
        if first.kind != NAME and first.text != "~":
            return
        if first.text in CONTROL_KEYWORDS or first.text in {"friend", "operator"}:
            return
        if self._has_class_keyword(tokens) and _find_top_level(tokens, "(") == -1:
            # forward declaration (class Foo;) or struct variable
            if any(t.text in CLASS_KEYWORDS for t in tokens[:1]):
                decls = _parse_variable_decl(tokens)
                if len([t for t in tokens if t.kind == NAME]) <= 2:
                    return  # bare forward declaration
                self._emit_variables(decls)
                return
        scope = self._scope_kind()
        header = self._function_header(tokens)
        if header is not None and scope in ("file", "namespace", "class", "enum"):
            name_tok, ret_type, params, qualifiers = header
            if ret_type is None and scope in ("file", "namespace") and not qualifiers:
                return  # macro invocation at file scope
            enclosing = self._enclosing_names() + qualifiers
            self.decls.append(
                RawDecl(name_tok.text, Category.FUNCTION, ret_type, name_tok.line, enclosing)
            )
            for param_tok, param_type in params:
                self.decls.append(
                    RawDecl(
                        name=param_tok.text,
                        category=Category.PARAMETER,
                        type_name=param_type or None,
                        line=param_tok.line,
                        enclosing=enclosing + (name_tok.text,),
                    )
                )
            return
        if _find_top_level(tokens, "(") != -1 and header is None:
            return  # call or unsupported declarator shape
        if header is not None and scope in ("function", "block"):
            # Type name(args); inside a body reads as a constructor-style
            # local when the header has a return type.
            name_tok, ret_type, _params, _qualifiers = header
            if ret_type is not None:
                self._emit(name_tok, Category.DECLARATION, ret_type)
            return
        decls = _parse_variable_decl(tokens)
        self._emit_variables(decls)

    def _emit_variables(self, decls: list[tuple[Token, str]]) -> None:
        scope = self._scope_kind()
        if scope in ("file", "namespace"):
            category = Category.DECLARATION
        elif scope in ("class", "enum"):
            category = Category.ATTRIBUTE
        else:
            category = Category.DECLARATION
        for name_tok, type_text in decls:
            self._emit(name_tok, category, type_text)

    # -- driver ----------------------------------------------------------

    def feed(self, tokens: Iterable[Token]) -> None:
        buffer: list[Token] = []
        swallow_depth = 0
        stream: Iterator[Token] = iter(tokens)
        for tok in stream:
            if swallow_depth:
                if tok.text == "{":
                    swallow_depth += 1
                elif tok.text == "}":
                    swallow_depth -= 1
                continue
            if tok.text == "{":
                mode = self.open_brace(buffer)
                if mode == "swallow":
                    swallow_depth = 1
                    # keep the statement head: declaration ends at `;`
                    buffer = _cut_at_top_level(buffer, "=") or buffer
                    continue
                buffer = []
            elif tok.text == "}":
                self.close_brace()
                buffer = []
            elif tok.text == ";":
                self.statement(buffer)
                buffer = []
            else:
                buffer.append(tok)
        if buffer:
            self.statement(buffer)


def parse_source(text: str, language: Language) -> list[RawDecl]:
    """Extract declarations from one source file's text."""
    cleaned = sanitize(text, language)
    parser = DeclarationParser(language)
    parser.feed(tokenize(cleaned))
    return parser.decls
