# -*- coding: utf-8 -*-
"""
表达式解析器
============
递归下降解析，文法：

    program := ('let' NAME '=' expr ';')* expr
    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := primary ('^' ('-1' | INT))*
    primary := NUMBER | NAME | 'trunc' '(' expr ',' INT ')' | '(' expr ')' | '-' factor

NUMBER 为整数或 p/q 分数；NAME 为字母 x1…xg 或 let 绑定的名字。
空白不敏感。trunc(e, D) 把 e 展开为 D 阶截断幂级数，作为级数原子。

知识点：
--------
1. 先用正则把文本切成记号，每个记号记住字符位置，报错时给出位置
2. 不含求逆的 let 绑定直接展开成 nc 多项式原子，含求逆的绑定作为子树代入
3. 字母数 g 取显式给定值，或者文本中出现的最大字母下标与外部原子的字母数
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Union

from exactmath import ExprSyntaxError, ONE, parse_scalar
from freealg import NcPoly, PolyLike

from .evaluator import expand_to_poly, expand_to_series
from .expr import Atom, Const, Inverse, MeroExpr, Product, Sum, is_inversion_free

# 配置日志
logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r"(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*()^=;,])")
LETTER_RE = re.compile(r"x(\d+)$")
RESERVED = {"let", "trunc"}


@dataclass
class Token:
    """词法记号：kind 为 number / name / op / eof"""
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    """
    切分记号

    Raises:
        ExprSyntaxError: 遇到非法字符
    """
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = TOKEN_RE.match(text, pos)
        if not match:
            raise ExprSyntaxError(f"非法字符 {text[pos]!r}", pos)
        tokens.append(Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, atoms: Mapping[str, Union[PolyLike, MeroExpr]], g: Optional[int]):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.env: Dict[str, MeroExpr] = {}
        for name, value in atoms.items():
            self.env[name] = Atom(name, value) if isinstance(value, NcPoly) else value
        self.g = self._letter_count(g)

    def _letter_count(self, g: Optional[int]) -> int:
        highest = 0
        for tok in self.tokens:
            match = LETTER_RE.match(tok.text) if tok.kind == "name" else None
            if not match or tok.text in self.env:
                continue
            j = int(match.group(1))
            if j < 1:
                raise ExprSyntaxError(f"字母下标从 1 开始: {tok.text}", tok.pos)
            if g is not None and j > g:
                raise ExprSyntaxError(f"字母 {tok.text} 超出 g = {g}", tok.pos)
            highest = max(highest, j)
        if g is not None:
            return g
        outer = [a.poly.g for a in self.env.values() if isinstance(a, Atom)]
        return max([highest, 1] + outer)

    # ========== 记号游标 ==========

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ("op", "name") and tok.text == text

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            wanted = text or kind
            found = tok.text or "输入结束"
            raise ExprSyntaxError(f"期望 {wanted!r}，得到 {found!r}", tok.pos)
        return self.advance()

    # ========== 文法 ==========

    def program(self) -> MeroExpr:
        while self.at("let"):
            self.binding()
        result = self.expr()
        if self.peek().kind != "eof":
            tok = self.peek()
            raise ExprSyntaxError(f"多余的输入 {tok.text!r}", tok.pos)
        return result

    def binding(self) -> None:
        self.advance()
        tok = self.expect("name")
        if tok.text in RESERVED or LETTER_RE.match(tok.text):
            raise ExprSyntaxError(f"不能绑定保留名 {tok.text!r}", tok.pos)
        self.expect("op", "=")
        rhs = self.expr()
        self.expect("op", ";")
        if is_inversion_free(rhs):
            self.env[tok.text] = Atom(tok.text, expand_to_poly(rhs, self.g))
        else:
            self.env[tok.text] = rhs
        logger.debug(f"let {tok.text} = {rhs}")

    def expr(self) -> MeroExpr:
        sign = 1
        if self.at("-") or self.at("+"):
            sign = -1 if self.advance().text == "-" else 1
        terms = [(sign, self.term())]
        while self.at("+") or self.at("-"):
            sign = 1 if self.advance().text == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> MeroExpr:
        factors = [self.factor()]
        while self.at("*"):
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> MeroExpr:
        base = self.primary()
        while self.at("^"):
            self.advance()
            if self.at("-"):
                self.advance()
                tok = self.expect("number")
                if tok.text != "1":
                    raise ExprSyntaxError("只支持 ^-1 形式的负指数", tok.pos)
                base = Inverse(base)
                continue
            tok = self.expect("number")
            if "/" in tok.text:
                raise ExprSyntaxError("指数必须是整数", tok.pos)
            k = int(tok.text)
            if k == 0:
                base = Const(ONE)
            elif k > 1:
                base = Product((base,) * k)
        return base

    def primary(self) -> MeroExpr:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return Const(parse_scalar(tok.text))
        if self.at("("):
            self.advance()
            inner = self.expr()
            self.expect("op", ")")
            return inner
        if self.at("-"):
            self.advance()
            return Sum(((-1, self.factor()),))
        if tok.kind == "name":
            if tok.text == "trunc":
                return self.truncation()
            self.advance()
            if tok.text in self.env:
                return self.env[tok.text]
            match = LETTER_RE.match(tok.text)
            if match:
                return Atom(tok.text, NcPoly.letter(self.g, int(match.group(1))))
            raise ExprSyntaxError(f"未定义的原子 {tok.text!r}", tok.pos)
        raise ExprSyntaxError(f"期望一个因子，得到 {tok.text or '输入结束'!r}", tok.pos)

    def truncation(self) -> MeroExpr:
        start = self.advance().pos
        self.expect("op", "(")
        inner = self.expr()
        self.expect("op", ",")
        tok = self.expect("number")
        if "/" in tok.text:
            raise ExprSyntaxError("截断阶必须是整数", tok.pos)
        close = self.expect("op", ")")
        name = self.text[start:close.pos + 1]
        return Atom(name, expand_to_series(inner, int(tok.text), self.g))


def parse(text: str, atoms: Optional[Mapping[str, Union[PolyLike, MeroExpr]]] = None,
          g: Optional[int] = None) -> MeroExpr:
    """
    解析表达式（可带 let 前言）

    Args:
        text: 表达式文本
        atoms: 预先注册的原子（名字 → NcPoly/NcSeries 或子表达式）
        g: 字母数，None 时自动推断

    Returns:
        语法树

    Raises:
        ExprSyntaxError: 语法错误，position 为出错字符的下标
    """
    return _Parser(text, atoms or {}, g).program()
