//! Syntax tree of gint scripts and its pretty printer.
//!
//! `Display` emits one statement per line with the minimal parentheses
//! needed; parsing the output gives back an identical tree.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Stmt>,
    /// 1-based source line of each statement.
    pub lines: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Option { name: String, value: Expr },
    Ring { name: String, spec: RingSpec },
    Bind { kind: BindKind, name: String, value: Expr },
    Check { call: Call, expect: Option<Expect> },
    Assert(Expr),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BindKind {
    Ideal,
    Module,
    Poly,
    Let,
}

impl BindKind {
    pub fn keyword(self) -> &'static str {
        match self {
            BindKind::Ideal => "ideal",
            BindKind::Module => "module",
            BindKind::Poly => "poly",
            BindKind::Let => "let",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Pass,
    Fail,
    HypothesesNotMet,
}

impl Expect {
    pub fn keyword(self) -> &'static str {
        match self {
            Expect::Pass => "pass",
            Expect::Fail => "fail",
            Expect::HypothesesNotMet => "hypotheses_not_met",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "pass" => Some(Expect::Pass),
            "fail" => Some(Expect::Fail),
            "hypotheses_not_met" => Some(Expect::HypothesesNotMet),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    /// Characteristic; `0` for the rationals.
    pub field: Option<u64>,
    pub vars: Vec<VarItem>,
    pub order: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarItem {
    Name(String),
    /// `x0..x5`
    Range { prefix: String, lo: u32, hi: u32 },
}

impl RingSpec {
    pub fn var_names(&self) -> Vec<String> {
        let mut out = Vec::new();
        for v in &self.vars {
            match v {
                VarItem::Name(n) => out.push(n.clone()),
                VarItem::Range { prefix, lo, hi } => out.extend((*lo..=*hi).map(|i| format!("{prefix}{i}"))),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Call {
    pub name: String,
    pub args: Vec<Arg>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Pos(Expr),
    Kw(String, Expr),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
            BinOp::Lt => "<",
            BinOp::Le => "<=",
            BinOp::Gt => ">",
            BinOp::Ge => ">=",
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge => 1,
            BinOp::Add | BinOp::Sub => 2,
            BinOp::Mul | BinOp::Div => 3,
            BinOp::Pow => 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnOp {
    Neg,
    Not,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Bool(bool),
    Ident(String),
    Call(Call),
    /// `(a, b, ...)`; one generator is written `(a,)`.
    Ideal(Vec<Expr>),
    List(Vec<Expr>),
    Unary(UnOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

const ATOM: u8 = 6;
const UNARY: u8 = 4;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Binary(op, _, _) => op.prec(),
            Expr::Unary(..) => UNARY,
            _ => ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Bool(b) => write!(f, "{b}"),
            Expr::Ident(s) => write!(f, "{s}"),
            Expr::Call(c) => write!(f, "{c}"),
            Expr::Ideal(gens) => {
                write!(f, "(")?;
                write_list(f, gens)?;
                if gens.len() == 1 {
                    write!(f, ",")?;
                }
                write!(f, ")")
            }
            Expr::List(items) => {
                write!(f, "[")?;
                write_list(f, items)?;
                write!(f, "]")
            }
            Expr::Unary(op, e) => {
                write!(f, "{}", if *op == UnOp::Neg { "-" } else { "!" })?;
                e.write_at(f, UNARY)
            }
            Expr::Binary(op, l, r) => {
                let p = op.prec();
                let (lmin, rmin) = match op {
                    BinOp::Pow => (ATOM, p),
                    _ if p == 1 => (2, 2),
                    _ => (p, p + 1),
                };
                l.write_at(f, lmin)?;
                if p == 1 {
                    write!(f, " {} ", op.symbol())?;
                } else if matches!(op, BinOp::Add | BinOp::Sub) {
                    write!(f, " {} ", op.symbol())?;
                } else {
                    write!(f, "{}", op.symbol())?;
                }
                r.write_at(f, rmin)
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[Expr]) -> fmt::Result {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        e.write_at(f, 0)?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl fmt::Display for Call {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match a {
                Arg::Pos(e) => write!(f, "{e}")?,
                Arg::Kw(k, e) => write!(f, "{k}={e}")?,
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for VarItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarItem::Name(n) => write!(f, "{n}"),
            VarItem::Range { prefix, lo, hi } => write!(f, "{prefix}{lo}..{prefix}{hi}"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly(")?;
        if let Some(p) = self.field {
            write!(f, "field={p}, ")?;
        }
        write!(f, "vars=[")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")?;
        if let Some(o) = &self.order {
            write!(f, ", order={o}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Option { name, value } => write!(f, "option {name} = {value};"),
            Stmt::Ring { name, spec } => write!(f, "ring {name} = {spec};"),
            Stmt::Bind { kind, name, value } => write!(f, "{} {name} = {value};", kind.keyword()),
            Stmt::Check { call, expect } => {
                write!(f, "check {call}")?;
                if let Some(e) = expect {
                    write!(f, " expect {}", e.keyword())?;
                }
                write!(f, ";")
            }
            Stmt::Assert(e) => write!(f, "assert {e};"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
