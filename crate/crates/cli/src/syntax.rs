//! Lexer and recursive-descent parser for gint scripts.

use std::fmt;

use crate::ast::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(&'static str),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

const SYMBOLS: [&str; 20] = [
    "..", "==", "!=", "<=", ">=", "+", "-", "*", "/", "^", "(", ")", "[", "]", ",", ";", "=", "<", ">", "!",
];

const KEYWORDS: [&str; 11] = [
    "ring", "ideal", "module", "poly", "let", "option", "check", "assert", "expect", "true", "false",
];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: start.0,
                col: start.1,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            let n = s.parse().map_err(|_| ParseError {
                line: start.0,
                col: start.1,
                msg: format!("integer literal `{s}` is too large"),
            })?;
            out.push(Token {
                tok: Tok::Int(n),
                line: start.0,
                col: start.1,
            });
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
            Some(s) => {
                out.push(Token {
                    tok: Tok::Sym(s),
                    line: start.0,
                    col: start.1,
                });
                i += s.len();
                col += s.len();
            }
            None => {
                return Err(ParseError {
                    line,
                    col,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

pub fn parse_script(src: &str) -> Result<Script, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let mut statements = Vec::new();
    let mut lines = Vec::new();
    while p.peek() != &Tok::Eof {
        lines.push(p.toks[p.pos].line);
        statements.push(p.statement()?);
    }
    Ok(Script { statements, lines })
}

/// Parse a single expression, e.g. from a command line flag.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let t = &self.toks[self.pos];
        Err(ParseError {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        })
    }

    fn describe(&self) -> String {
        match self.peek() {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Sym(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Tok::Sym(s) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<(), ParseError> {
        if self.eat(sym) {
            Ok(())
        } else {
            self.err(format!("expected `{sym}`, found {}", self.describe()))
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        if self.peek() == &Tok::Eof {
            Ok(())
        } else {
            self.err(format!("unexpected {}", self.describe()))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if !is_keyword(&s) => {
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected identifier, found {}", self.describe())),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Tok::Ident(s) if s == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.err(format!("expected a statement, found {}", self.describe())),
        };
        let stmt = match kw.as_str() {
            "option" => {
                self.pos += 1;
                let name = self.ident()?;
                self.expect("=")?;
                let value = self.expr()?;
                Stmt::Option { name, value }
            }
            "ring" => {
                self.pos += 1;
                let name = self.ident()?;
                self.expect("=")?;
                Stmt::Ring {
                    name,
                    spec: self.ring_spec()?,
                }
            }
            "ideal" | "module" | "poly" | "let" => {
                self.pos += 1;
                let kind = match kw.as_str() {
                    "ideal" => BindKind::Ideal,
                    "module" => BindKind::Module,
                    "poly" => BindKind::Poly,
                    _ => BindKind::Let,
                };
                let name = self.ident()?;
                self.expect("=")?;
                Stmt::Bind {
                    kind,
                    name,
                    value: self.expr()?,
                }
            }
            "check" => {
                self.pos += 1;
                let name = self.ident()?;
                let call = self.call_args(name)?;
                let expect = if self.keyword("expect") {
                    let Tok::Ident(s) = self.next() else {
                        return self.err("expected pass, fail or hypotheses_not_met");
                    };
                    match Expect::from_keyword(&s) {
                        Some(e) => Some(e),
                        None => {
                            self.pos -= 1;
                            return self.err(format!("unknown expectation `{s}`"));
                        }
                    }
                } else {
                    None
                };
                Stmt::Check { call, expect }
            }
            "assert" => {
                self.pos += 1;
                Stmt::Assert(self.expr()?)
            }
            _ => return self.err(format!("unknown statement `{kw}`")),
        };
        self.expect(";")?;
        Ok(stmt)
    }

    fn ring_spec(&mut self) -> Result<RingSpec, ParseError> {
        if !self.keyword("poly") {
            return self.err(format!("expected `poly(...)`, found {}", self.describe()));
        }
        self.expect("(")?;
        let mut spec = RingSpec {
            field: None,
            vars: Vec::new(),
            order: None,
        };
        let mut seen_vars = false;
        loop {
            if self.eat(")") {
                break;
            }
            let key = self.ident()?;
            self.expect("=")?;
            match key.as_str() {
                "field" => match self.next() {
                    Tok::Int(p) => spec.field = Some(p),
                    _ => {
                        self.pos -= 1;
                        return self.err("field must be an integer (0 for the rationals)");
                    }
                },
                "vars" => {
                    self.expect("[")?;
                    while !self.eat("]") {
                        spec.vars.push(self.var_item()?);
                        if !self.eat(",") {
                            self.expect("]")?;
                            break;
                        }
                    }
                    seen_vars = true;
                }
                "order" => spec.order = Some(self.ident()?),
                _ => {
                    self.pos -= 2;
                    return self.err(format!("unknown ring option `{key}`"));
                }
            }
            if !self.eat(",") {
                self.expect(")")?;
                break;
            }
        }
        if !seen_vars {
            return self.err("ring declaration needs `vars=[...]`");
        }
        Ok(spec)
    }

    fn var_item(&mut self) -> Result<VarItem, ParseError> {
        let a = self.ident()?;
        if !self.eat("..") {
            return Ok(VarItem::Name(a));
        }
        let b = self.ident()?;
        let split = |s: &str| {
            let cut = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
            let (p, d) = s.split_at(cut);
            (p.to_string(), d.parse::<u32>().ok())
        };
        match (split(&a), split(&b)) {
            ((pa, Some(lo)), (pb, Some(hi))) if pa == pb && !pa.is_empty() && lo <= hi => {
                Ok(VarItem::Range { prefix: pa, lo, hi })
            }
            _ => self.err(format!("invalid variable range `{a}..{b}`")),
        }
    }

    fn call_args(&mut self, name: String) -> Result<Call, ParseError> {
        self.expect("(")?;
        let mut args = Vec::new();
        while !self.eat(")") {
            let kw = match (self.peek().clone(), &self.toks[self.pos + 1].tok) {
                (Tok::Ident(k), Tok::Sym("=")) if !is_keyword(&k) => Some(k),
                _ => None,
            };
            if let Some(k) = kw {
                self.pos += 2;
                args.push(Arg::Kw(k, self.expr()?));
            } else {
                if args.iter().any(|a| matches!(a, Arg::Kw(..))) {
                    return self.err("positional argument after keyword argument");
                }
                args.push(Arg::Pos(self.expr()?));
            }
            if !self.eat(",") {
                self.expect(")")?;
                break;
            }
        }
        Ok(Call { name, args })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let l = self.additive()?;
        let op = match self.peek() {
            Tok::Sym("==") => BinOp::Eq,
            Tok::Sym("!=") => BinOp::Ne,
            Tok::Sym("<") => BinOp::Lt,
            Tok::Sym("<=") => BinOp::Le,
            Tok::Sym(">") => BinOp::Gt,
            Tok::Sym(">=") => BinOp::Ge,
            _ => return Ok(l),
        };
        self.pos += 1;
        let r = self.additive()?;
        Ok(Expr::Binary(op, Box::new(l), Box::new(r)))
    }

    fn additive(&mut self) -> Result<Expr, ParseError> {
        let mut l = self.multiplicative()?;
        loop {
            let op = match self.peek() {
                Tok::Sym("+") => BinOp::Add,
                Tok::Sym("-") => BinOp::Sub,
                _ => return Ok(l),
            };
            self.pos += 1;
            let r = self.multiplicative()?;
            l = Expr::Binary(op, Box::new(l), Box::new(r));
        }
    }

    fn multiplicative(&mut self) -> Result<Expr, ParseError> {
        let mut l = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Sym("*") => BinOp::Mul,
                Tok::Sym("/") => BinOp::Div,
                _ => return Ok(l),
            };
            self.pos += 1;
            let r = self.unary()?;
            l = Expr::Binary(op, Box::new(l), Box::new(r));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat("-") {
            return Ok(Expr::Unary(UnOp::Neg, Box::new(self.unary()?)));
        }
        if self.eat("!") {
            return Ok(Expr::Unary(UnOp::Not, Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat("^") {
            let exp = self.power()?;
            return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) if s == "true" || s == "false" => {
                self.pos += 1;
                Ok(Expr::Bool(s == "true"))
            }
            Tok::Ident(s) if !is_keyword(&s) => {
                self.pos += 1;
                if matches!(self.peek(), Tok::Sym("(")) {
                    Ok(Expr::Call(self.call_args(s)?))
                } else {
                    Ok(Expr::Ident(s))
                }
            }
            Tok::Sym("(") => {
                self.pos += 1;
                if self.eat(")") {
                    return Ok(Expr::Ideal(Vec::new()));
                }
                let first = self.expr()?;
                if self.eat(")") {
                    return Ok(first);
                }
                let mut gens = vec![first];
                while self.eat(",") {
                    if matches!(self.peek(), Tok::Sym(")")) {
                        break;
                    }
                    gens.push(self.expr()?);
                }
                self.expect(")")?;
                Ok(Expr::Ideal(gens))
            }
            Tok::Sym("[") => {
                self.pos += 1;
                let mut items = Vec::new();
                while !self.eat("]") {
                    items.push(self.expr()?);
                    if !self.eat(",") {
                        self.expect("]")?;
                        break;
                    }
                }
                Ok(Expr::List(items))
            }
            _ => self.err(format!("expected an expression, found {}", self.describe())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ring_and_bindings() {
        let s = parse_script(
            "ring R = poly(field=32003, vars=[x0..x3]);\n\
             # skew lines\n\
             ideal I = intersect((x0,x1),(x2,x3));\n\
             module M = quotient(I);\n\
             check very_proper(M, M) expect fail;\n\
             assert deg(tensor_r(M,M)) == 2;",
        )
        .unwrap();
        assert_eq!(s.statements.len(), 5);
        assert_eq!(s.lines, vec![1, 3, 4, 5, 6]);
        let Stmt::Ring { spec, .. } = &s.statements[0] else { panic!() };
        assert_eq!(spec.var_names(), vec!["x0", "x1", "x2", "x3"]);
    }

    #[test]
    fn precedence_and_grouping() {
        let e = parse_expr("-x0^2 + 3*(x1 - x2)").unwrap();
        assert_eq!(e.to_string(), "-x0^2 + 3*(x1 - x2)");
        assert_eq!(parse_expr("(x0)").unwrap(), Expr::Ident("x0".into()));
        assert_eq!(parse_expr("(x0,)").unwrap(), Expr::Ideal(vec![Expr::Ident("x0".into())]));
        assert_eq!(parse_expr("()").unwrap(), Expr::Ideal(vec![]));
    }

    #[test]
    fn error_positions() {
        let e = parse_script("ring R = poly(vars=[x]);\nideal I = (x, ;").unwrap_err();
        assert_eq!((e.line, e.col), (2, 15));
        let e = parse_script("assert 1 == 1").unwrap_err();
        assert!(e.msg.contains("`;`"));
    }

    #[test]
    fn empty_script() {
        assert!(parse_script("  # nothing\n").unwrap().statements.is_empty());
    }
}
