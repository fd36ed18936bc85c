"""Tokenizer and recursive-descent parser for the choreography grammar.

Grammar (whitespace-insensitive, // line comments):
  chor   := choice
  choice := par ( "+" par )*
  par    := seq ( "||" seq )*
  seq    := star ( ";" star )*
  star   := atom ( "*" )*
  atom   := "0" | ident "->" ident ":" ident | ident ident "?" ident | "(" chor ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .chor import Chor, Choice, Interaction, Loop, Par, PendingReceive, Seq, Skip


class ParseError(ValueError):
    """Syntax or well-formedness error with source position."""

    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.col = col
        self.expected = frozenset(expected)
        text = f"{message} at line {line}, column {col}"
        if expected:
            text += " (expected " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(text)


class PendingNotAllowed(ParseError):
    """A pending receive appeared without the allow_pending flag."""


class SelfCommunication(ParseError):
    """A participant communicates with itself."""


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TWO_CHAR = {"->": "ARROW", "||": "PARBAR"}
_ONE_CHAR = {";": "SEMI", "+": "PLUS", "*": "STAR", ":": "COLON",
             "?": "QUESTION", "(": "LPAREN", ")": "RPAREN", "0": "ZERO"}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        two = text[i:i + 2]
        if two in _TWO_CHAR:
            tokens.append(_Token(_TWO_CHAR[two], two, line, col))
            i += 2
            col += 2
            continue
        if ch in _ONE_CHAR:
            tokens.append(_Token(_ONE_CHAR[ch], ch, line, col))
            i += 1
            col += 1
            continue
        m = _IDENT.match(text, i)
        if m:
            word = m.group(0)
            tokens.append(_Token("IDENT", word, line, col))
            i = m.end()
            col += len(word)
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


_SHOW = {"ARROW": "'->'", "PARBAR": "'||'", "SEMI": "';'", "PLUS": "'+'",
         "STAR": "'*'", "COLON": "':'", "QUESTION": "'?'", "LPAREN": "'('",
         "RPAREN": "')'", "ZERO": "'0'", "IDENT": "identifier", "EOF": "end of input"}


class _Parser:
    def __init__(self, tokens: list[_Token], allow_pending: bool):
        self.tokens = tokens
        self.pos = 0
        self.allow_pending = allow_pending

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at(self, kind: str) -> bool:
        return self.tokens[self.pos].kind == kind

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {_SHOW[tok.kind]}", tok.line, tok.col,
                             (_SHOW[kind],))
        return self.take()

    def chor(self) -> Chor:
        c = self.par()
        while self.at("PLUS"):
            self.take()
            c = Choice(c, self.par())
        return c

    def par(self) -> Chor:
        c = self.seq()
        while self.at("PARBAR"):
            self.take()
            c = Par(c, self.seq())
        return c

    def seq(self) -> Chor:
        c = self.star()
        while self.at("SEMI"):
            self.take()
            c = Seq(c, self.star())
        return c

    def star(self) -> Chor:
        c = self.atom()
        while self.at("STAR"):
            self.take()
            c = Loop(c)
        return c

    def atom(self) -> Chor:
        tok = self.peek()
        if tok.kind == "ZERO":
            self.take()
            return Skip()
        if tok.kind == "LPAREN":
            self.take()
            c = self.chor()
            self.expect("RPAREN")
            return c
        if tok.kind == "IDENT":
            first = self.take()
            if self.at("ARROW"):
                self.take()
                target = self.expect("IDENT")
                self.expect("COLON")
                msg = self.expect("IDENT")
                if first.text == target.text:
                    raise SelfCommunication(
                        f"participant {first.text!r} communicates with itself",
                        first.line, first.col)
                return Interaction(first.text, target.text, msg.text)
            if self.at("IDENT"):
                second = self.take()
                self.expect("QUESTION")
                msg = self.expect("IDENT")
                if not self.allow_pending:
                    raise PendingNotAllowed(
                        "pending receives are only accepted with allow_pending",
                        first.line, first.col)
                if first.text == second.text:
                    raise SelfCommunication(
                        f"participant {first.text!r} communicates with itself",
                        first.line, first.col)
                return PendingReceive(first.text, second.text, msg.text)
            nxt = self.peek()
            raise ParseError(f"unexpected {_SHOW[nxt.kind]}", nxt.line, nxt.col,
                             ("'->'", "identifier"))
        raise ParseError(f"unexpected {_SHOW[tok.kind]}", tok.line, tok.col,
                         ("'0'", "identifier", "'('"))


def parse(text: str, allow_pending: bool = False) -> Chor:
    """Parse a choreography; pending receives (a b?x) need allow_pending."""
    parser = _Parser(_tokenize(text), allow_pending)
    c = parser.chor()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ParseError(f"unexpected {_SHOW[tok.kind]}", tok.line, tok.col,
                         ("end of input",))
    return c
