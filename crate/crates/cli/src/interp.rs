//! Statement-by-statement evaluation of a parsed script.

use std::collections::HashMap;
use std::fmt;

use gint_core::criteria::{self, CheckReport, SplitMode};
use gint_core::modalg::{self, DEFAULT_SECTIONS_CAP};
use gint_core::random::{random_complete_intersection, random_determinantal, seeded_rng};
use gint_core::resolve::homological_data;
use gint_core::{
    buchberger, Error, Field, FreeModule, MonomialOrder, PolyRing, Polynomial, Presentation, PrimeField,
    Rationals, Ring, Submodule,
};
use rand_chacha::ChaCha8Rng;

use crate::ast::*;
use crate::report::{RunError, StatementReport};

pub const DEFAULT_FIELD: u64 = 32003;
pub const DEFAULT_WINDOW: (i64, i64) = (-5, 5);
const PARAMETER_TRIALS: usize = 64;

/// Settings coming from the command line; they override script options.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub degree_cap: Option<u32>,
    pub field: Option<u64>,
}

#[derive(Clone, Debug)]
pub enum Value<K: Field> {
    Int(i64),
    Bool(bool),
    Poly(Polynomial<K>),
    Ideal(Submodule<K>),
    Module(Presentation<K>),
    List(Vec<Value<K>>),
}

impl<K: Field> Value<K> {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Int(_) => "int",
            Value::Bool(_) => "bool",
            Value::Poly(_) => "poly",
            Value::Ideal(_) => "ideal",
            Value::Module(_) => "module",
            Value::List(_) => "list",
        }
    }
}

/// Failure of one statement.
#[derive(Clone, Debug)]
pub enum EvalError {
    Usage(String),
    Algebra(Error),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Usage(m) => write!(f, "{m}"),
            EvalError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Algebra(e)
    }
}

impl EvalError {
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            EvalError::Algebra(
                Error::DegreeCapExceeded { .. }
                    | Error::VariableCapExceeded { .. }
                    | Error::WindowTooLarge(_)
                    | Error::SectionsNotStable { .. }
            )
        )
    }
}

type EResult<T> = std::result::Result<T, EvalError>;

fn usage<T>(msg: impl Into<String>) -> EResult<T> {
    Err(EvalError::Usage(msg.into()))
}

/// Outcome of running every statement.
pub struct Execution {
    pub field: String,
    pub seed: Option<u64>,
    pub statements: Vec<StatementReport>,
    pub error: Option<RunError>,
    /// Module bindings at the end of the run, rendered for `invariants`.
    pub modules: Vec<(String, ModuleSummary)>,
}

/// Invariants of one module binding.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ModuleSummary {
    pub generator_degrees: Vec<i32>,
    pub relations: usize,
    pub hilbert: gint_core::HilbertData,
    pub betti: Option<gint_core::BettiTable>,
    pub betti_grid: Option<String>,
    pub pd: Option<i64>,
    pub depth: Option<i64>,
    pub is_cm: Option<bool>,
    pub ext_dims: Vec<i64>,
}

/// Run `script` with field chosen from the options, the ring declaration,
/// or the default prime.
pub fn execute(script: &Script, opts: &RunOptions, summarize: Option<&str>) -> Execution {
    let declared = script.statements.iter().find_map(|s| match s {
        Stmt::Ring { spec, .. } => spec.field,
        _ => None,
    });
    let p = opts.field.or(declared).unwrap_or(DEFAULT_FIELD);
    if p == 0 {
        return Interp::new(Rationals, opts).run(script, summarize);
    }
    match u32::try_from(p).ok().and_then(PrimeField::new) {
        Some(k) => Interp::new(k, opts).run(script, summarize),
        None => Execution {
            field: format!("{p}"),
            seed: opts.seed,
            statements: Vec::new(),
            error: Some(RunError {
                line: 0,
                statement: String::new(),
                message: format!("field characteristic {p} is not a prime below 2^31"),
                cap_exceeded: false,
            }),
            modules: Vec::new(),
        },
    }
}

/// Every module binding of a script over a prime field, sorted by name.
pub fn module_bindings(script: &Script, opts: &RunOptions) -> Result<Vec<(String, Presentation<PrimeField>)>, String> {
    let declared = script.statements.iter().find_map(|s| match s {
        Stmt::Ring { spec, .. } => spec.field,
        _ => None,
    });
    let p = opts.field.or(declared).unwrap_or(DEFAULT_FIELD);
    let k = u32::try_from(p)
        .ok()
        .and_then(PrimeField::new)
        .ok_or_else(|| format!("{p} is not a supported prime"))?;
    let mut it = Interp::new(k, opts);
    if let (_, Some(e)) = it.run_statements(script) {
        return Err(e.message);
    }
    let mut out: Vec<_> = it
        .env
        .into_iter()
        .filter_map(|(n, v)| match v {
            Value::Module(m) => Some((n, m)),
            _ => None,
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

struct Interp<K: Field> {
    field: K,
    opts: RunOptions,
    ring: Option<Ring<K>>,
    ring_name: Option<String>,
    env: HashMap<String, Value<K>>,
    script_seed: Option<u64>,
    window: (i64, i64),
    rng: Option<ChaCha8Rng>,
}

impl<K: Field> Interp<K> {
    fn new(field: K, opts: &RunOptions) -> Self {
        Self {
            field,
            opts: opts.clone(),
            ring: None,
            ring_name: None,
            env: HashMap::new(),
            script_seed: None,
            window: DEFAULT_WINDOW,
            rng: None,
        }
    }

    fn seed(&self) -> Option<u64> {
        self.opts.seed.or(self.script_seed)
    }

    fn run_statements(&mut self, script: &Script) -> (Vec<StatementReport>, Option<RunError>) {
        let mut statements = Vec::new();
        let mut error = None;
        for (stmt, &line) in script.statements.iter().zip(&script.lines) {
            match self.statement(stmt) {
                Ok(Some(mut rep)) => {
                    rep.line = line;
                    statements.push(rep);
                }
                Ok(None) => {}
                Err(e) => {
                    error = Some(RunError {
                        line,
                        statement: stmt.to_string(),
                        message: e.to_string(),
                        cap_exceeded: e.is_cap(),
                    });
                    break;
                }
            }
        }
        (statements, error)
    }

    fn run(mut self, script: &Script, summarize: Option<&str>) -> Execution {
        let (statements, mut error) = self.run_statements(script);
        let mut modules = Vec::new();
        if let Some(name) = summarize {
            match self.env.get(name) {
                Some(Value::Module(m)) => match summary(m) {
                    Ok(s) => modules.push((name.to_string(), s)),
                    Err(e) => {
                        error.get_or_insert(RunError {
                            line: 0,
                            statement: String::new(),
                            message: e.to_string(),
                            cap_exceeded: e.is_cap(),
                        });
                    }
                },
                _ => {
                    error.get_or_insert(RunError {
                        line: 0,
                        statement: String::new(),
                        message: format!("no module named `{name}`"),
                        cap_exceeded: false,
                    });
                }
            }
        }
        Execution {
            field: self.field.name(),
            seed: self.seed(),
            statements,
            error,
            modules,
        }
    }

    fn ring(&self) -> EResult<&Ring<K>> {
        match &self.ring {
            Some(r) => Ok(r),
            None => usage("no ring declared yet"),
        }
    }

    fn statement(&mut self, stmt: &Stmt) -> EResult<Option<StatementReport>> {
        match stmt {
            Stmt::Option { name, value } => {
                let v = self.eval(value)?;
                match (name.as_str(), v) {
                    ("seed", Value::Int(s)) if s >= 0 => {
                        self.script_seed = Some(s as u64);
                        self.rng = None;
                    }
                    ("window", Value::List(items)) if items.len() == 2 => {
                        self.window = (as_int(&items[0])?, as_int(&items[1])?);
                    }
                    ("degree_cap", Value::Int(c)) if c > 0 => {
                        if self.opts.degree_cap.is_none() {
                            self.opts.degree_cap = Some(c as u32);
                            if let Some(r) = &self.ring {
                                self.ring = Some(r.with_degree_cap(c as u32));
                            }
                        }
                    }
                    (n, v) => return usage(format!("invalid option `{n}` = {}", v.type_name())),
                }
                Ok(None)
            }
            Stmt::Ring { name, spec } => {
                if self.ring.is_some() {
                    return usage("a script declares exactly one ring");
                }
                let order = match spec.order.as_deref() {
                    None | Some("grevlex") => MonomialOrder::GRevLex,
                    Some("deglex") => MonomialOrder::DegLex,
                    Some("lex") => MonomialOrder::Lex,
                    Some(o) => return usage(format!("unknown monomial order `{o}`")),
                };
                let names = spec.var_names();
                if let Some(v) = names.iter().find(|v| crate::syntax::is_keyword(v)) {
                    return usage(format!("`{v}` is reserved"));
                }
                let mut ring = PolyRing::new(self.field.clone(), names, order)?;
                if let Some(cap) = self.opts.degree_cap {
                    ring = ring.with_degree_cap(cap);
                }
                self.ring = Some(ring);
                self.ring_name = Some(name.clone());
                Ok(None)
            }
            Stmt::Bind { kind, name, value } => {
                let ring = self.ring()?.clone();
                if self.env.contains_key(name) || ring.var_index(name).is_some() || self.ring_name.as_deref() == Some(name) {
                    return usage(format!("`{name}` is already defined"));
                }
                let v = self.eval(value)?;
                let v = match (kind, v) {
                    (BindKind::Ideal, Value::Ideal(i)) => Value::Ideal(i),
                    (BindKind::Ideal, Value::Poly(f)) => Value::Ideal(Submodule::ideal(&ring, &[f])?),
                    (BindKind::Module, Value::Module(m)) => Value::Module(m),
                    (BindKind::Poly, Value::Poly(f)) => Value::Poly(f),
                    (BindKind::Poly, Value::Int(n)) => Value::Poly(self.constant(n)?),
                    (BindKind::Let, v) => v,
                    (k, v) => return usage(format!("cannot bind a {} as {}", v.type_name(), k.keyword())),
                };
                self.env.insert(name.clone(), v);
                Ok(None)
            }
            Stmt::Check { call, expect } => {
                let report = self.check(call)?;
                let passed = match expect {
                    Some(e) => e.keyword() == report.conclusion.as_str(),
                    None => true,
                };
                Ok(Some(StatementReport {
                    line: 0,
                    statement: stmt.to_string(),
                    kind: "check".into(),
                    passed,
                    expected: expect.map(|e| e.keyword().to_string()),
                    detail: None,
                    report: Some(report),
                }))
            }
            Stmt::Assert(e) => {
                let (passed, detail) = self.assertion(e)?;
                Ok(Some(StatementReport {
                    line: 0,
                    statement: stmt.to_string(),
                    kind: "assert".into(),
                    passed,
                    expected: None,
                    detail: Some(detail),
                    report: None,
                }))
            }
        }
    }

    fn assertion(&mut self, e: &Expr) -> EResult<(bool, String)> {
        if let Expr::Binary(op, l, r) = e {
            if matches!(op, BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge) {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                let holds = self.compare(*op, &a, &b)?;
                let detail = format!("{} {} {}", self.show(&a), op.symbol(), self.show(&b));
                return Ok((holds, detail));
            }
        }
        match self.eval(e)? {
            Value::Bool(b) => Ok((b, b.to_string())),
            v => usage(format!("assert needs a bool, found {}", v.type_name())),
        }
    }

    fn show(&self, v: &Value<K>) -> String {
        match v {
            Value::Int(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Poly(f) => match &self.ring {
                Some(r) => f.display(r),
                None => "?".into(),
            },
            Value::Ideal(i) => {
                let r = i.ambient().ring().clone();
                let gens: Vec<String> = i.polys().iter().map(|f| f.display(&r)).collect();
                format!("({})", gens.join(", "))
            }
            Value::Module(m) => format!(
                "module with generators in degrees {:?} and {} relations",
                m.generators().gen_degrees(),
                m.relations().len()
            ),
            Value::List(items) => {
                let s: Vec<String> = items.iter().map(|x| self.show(x)).collect();
                format!("[{}]", s.join(", "))
            }
        }
    }

    fn constant(&self, n: i64) -> EResult<Polynomial<K>> {
        let r = self.ring()?;
        Ok(Polynomial::constant(r, self.field.from_i64(n)))
    }

    fn compare(&self, op: BinOp, a: &Value<K>, b: &Value<K>) -> EResult<bool> {
        use std::cmp::Ordering;
        let ord: Option<Ordering> = match (a, b) {
            (Value::Int(x), Value::Int(y)) => Some(x.cmp(y)),
            _ => None,
        };
        if let Some(o) = ord {
            return Ok(match op {
                BinOp::Eq => o == Ordering::Equal,
                BinOp::Ne => o != Ordering::Equal,
                BinOp::Lt => o == Ordering::Less,
                BinOp::Le => o != Ordering::Greater,
                BinOp::Gt => o == Ordering::Greater,
                _ => o != Ordering::Less,
            });
        }
        let eq = match (a, b) {
            (Value::Bool(x), Value::Bool(y)) => x == y,
            (Value::Poly(x), Value::Poly(y)) => x == y,
            (Value::Poly(x), Value::Int(n)) | (Value::Int(n), Value::Poly(x)) => *x == self.constant(*n)?,
            (Value::Ideal(x), Value::Ideal(y)) => {
                x.ambient().same_as(y.ambient()) && buchberger(x)? == buchberger(y)?
            }
            (Value::Module(x), Value::Module(y)) => {
                x.ring().same_ring(y.ring()) && x.same_canonical(y)?
            }
            _ => {
                return usage(format!(
                    "cannot compare {} with {}",
                    a.type_name(),
                    b.type_name()
                ))
            }
        };
        match op {
            BinOp::Eq => Ok(eq),
            BinOp::Ne => Ok(!eq),
            _ => usage(format!("`{}` needs integers", op.symbol())),
        }
    }

    fn eval(&mut self, e: &Expr) -> EResult<Value<K>> {
        match e {
            Expr::Int(n) => match i64::try_from(*n) {
                Ok(n) => Ok(Value::Int(n)),
                Err(_) => usage(format!("integer {n} out of range")),
            },
            Expr::Bool(b) => Ok(Value::Bool(*b)),
            Expr::Ident(name) => {
                if let Some(v) = self.env.get(name) {
                    return Ok(v.clone());
                }
                let r = self.ring()?;
                match r.var_index(name) {
                    Some(i) => Ok(Value::Poly(r.var(i))),
                    None => usage(format!("undefined identifier `{name}`")),
                }
            }
            Expr::Ideal(gens) => {
                let ring = self.ring()?.clone();
                let mut polys = Vec::new();
                for g in gens {
                    polys.push(self.poly_of(g)?);
                }
                Ok(Value::Ideal(Submodule::ideal(&ring, &polys)?))
            }
            Expr::List(items) => Ok(Value::List(
                items.iter().map(|x| self.eval(x)).collect::<EResult<_>>()?,
            )),
            Expr::Unary(UnOp::Neg, x) => match self.eval(x)? {
                Value::Int(n) => Ok(Value::Int(n.checked_neg().ok_or_else(overflow)?)),
                Value::Poly(f) => Ok(Value::Poly(f.neg(self.ring()?))),
                v => usage(format!("cannot negate a {}", v.type_name())),
            },
            Expr::Unary(UnOp::Not, x) => match self.eval(x)? {
                Value::Bool(b) => Ok(Value::Bool(!b)),
                v => usage(format!("`!` needs a bool, found {}", v.type_name())),
            },
            Expr::Binary(op, l, r) => {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                match op {
                    BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge => {
                        Ok(Value::Bool(self.compare(*op, &a, &b)?))
                    }
                    _ => self.arith(*op, a, b),
                }
            }
            Expr::Call(c) => self.call(c),
        }
    }

    fn poly_of(&mut self, e: &Expr) -> EResult<Polynomial<K>> {
        match self.eval(e)? {
            Value::Poly(f) => Ok(f),
            Value::Int(n) => self.constant(n),
            v => usage(format!("expected a polynomial, found {}", v.type_name())),
        }
    }

    fn arith(&self, op: BinOp, a: Value<K>, b: Value<K>) -> EResult<Value<K>> {
        let ring = self.ring()?.clone();
        let k = &self.field;
        match (op, a, b) {
            (BinOp::Add, Value::Int(x), Value::Int(y)) => Ok(Value::Int(x.checked_add(y).ok_or_else(overflow)?)),
            (BinOp::Sub, Value::Int(x), Value::Int(y)) => Ok(Value::Int(x.checked_sub(y).ok_or_else(overflow)?)),
            (BinOp::Mul, Value::Int(x), Value::Int(y)) => Ok(Value::Int(x.checked_mul(y).ok_or_else(overflow)?)),
            (BinOp::Pow, Value::Int(x), Value::Int(y)) => {
                let e = u32::try_from(y).map_err(|_| EvalError::Usage("negative exponent".into()))?;
                Ok(Value::Int(x.checked_pow(e).ok_or_else(overflow)?))
            }
            (BinOp::Pow, Value::Poly(f), Value::Int(y)) => {
                let e = u32::try_from(y).map_err(|_| EvalError::Usage("negative exponent".into()))?;
                Ok(Value::Poly(f.pow(&ring, e)))
            }
            (BinOp::Add, Value::Ideal(x), Value::Ideal(y)) => {
                let mut g = x.polys();
                g.extend(y.polys());
                Ok(Value::Ideal(Submodule::ideal(&ring, &g)?))
            }
            (BinOp::Mul, Value::Ideal(x), Value::Ideal(y)) => {
                let mut g = Vec::new();
                for a in x.polys() {
                    for b in y.polys() {
                        g.push(a.mul(&ring, &b));
                    }
                }
                Ok(Value::Ideal(Submodule::ideal(&ring, &g)?))
            }
            (op, a, b) => {
                let to_poly = |v: Value<K>| -> EResult<Polynomial<K>> {
                    match v {
                        Value::Poly(f) => Ok(f),
                        Value::Int(n) => Ok(Polynomial::constant(&ring, k.from_i64(n))),
                        v => usage(format!("`{}` is not defined for a {}", op.symbol(), v.type_name())),
                    }
                };
                let (f, g) = (to_poly(a)?, to_poly(b)?);
                let out = match op {
                    BinOp::Add => f.add(&ring, &g),
                    BinOp::Sub => f.sub(&ring, &g),
                    BinOp::Mul => f.mul(&ring, &g),
                    BinOp::Div => {
                        if !g.is_constant() || g.is_zero() {
                            return usage("division is only by nonzero constants");
                        }
                        let c = k.inv(&g.terms()[0].1).ok_or_else(|| EvalError::Usage("division by zero".into()))?;
                        f.scale(&ring, &c)
                    }
                    _ => return usage(format!("`{}` needs integer exponent", op.symbol())),
                };
                Ok(Value::Poly(out))
            }
        }
    }

    fn random_rng(&mut self, kw_seed: Option<u64>) -> EResult<ChaCha8Rng> {
        if let Some(s) = kw_seed {
            return Ok(seeded_rng(s));
        }
        if self.rng.is_none() {
            match self.seed() {
                Some(s) => self.rng = Some(seeded_rng(s)),
                None => return usage("randomized statements need a seed (option seed = N; or --seed N)"),
            }
        }
        // advance the script stream; each call gets its own child generator
        use rand::RngCore;
        let child = self.rng.as_mut().expect("initialized").next_u64();
        Ok(seeded_rng(child))
    }

    fn call(&mut self, c: &Call) -> EResult<Value<K>> {
        let mut pos = Vec::new();
        let mut kw = HashMap::new();
        for a in &c.args {
            match a {
                Arg::Pos(e) => pos.push(self.eval(e)?),
                Arg::Kw(k, e) => {
                    let v = self.eval(e)?;
                    if kw.insert(k.clone(), v).is_some() {
                        return usage(format!("duplicate keyword `{k}`"));
                    }
                }
            }
        }
        let args = Args { name: &c.name, pos, kw };
        self.builtin(args)
    }

    fn builtin(&mut self, a: Args<'_, K>) -> EResult<Value<K>> {
        let ring = self.ring()?.clone();
        let v = match a.name {
            "quotient" => {
                a.arity(1)?;
                Value::Module(modalg::quotient_module(&a.ideal(0)?)?)
            }
            "image" => {
                a.arity(1)?;
                Value::Module(modalg::ideal_module(&a.ideal(0)?)?)
            }
            "syzygy" => {
                a.arity(2)?;
                let k = a.usize(1)?;
                match &a.pos[0] {
                    Value::Ideal(i) => Value::Module(modalg::syzygy_module(i, k)?),
                    Value::Module(m) => Value::Module(modalg::syzygy_of_module(m, k)?),
                    v => return usage(format!("syzygy needs an ideal or module, found {}", v.type_name())),
                }
            }
            "free" => {
                let twists = a.pos.iter().map(as_int).collect::<EResult<Vec<i64>>>()?;
                let twists: Vec<i32> = twists.into_iter().map(|t| t as i32).collect();
                Value::Module(Presentation::free(FreeModule::new(&ring, twists)))
            }
            "tensor_r" => {
                a.arity(2)?;
                Value::Module(modalg::tensor_over_ring(&a.module(0)?, &a.module(1)?)?)
            }
            "join" => {
                a.arity(2)?;
                Value::Module(modalg::join_over_field(&a.module(0)?, &a.module(1)?)?)
            }
            "diagonal" => {
                a.arity(2)?;
                let ctx = modalg::DiagonalContext::new(&ring)?;
                let j = ctx.join(&a.module(0)?, &a.module(1)?)?;
                Value::Module(ctx.reduce(&j)?)
            }
            "hom" => {
                a.arity(2)?;
                Value::Module(modalg::hom_modules(&a.module(0)?, &a.module(1)?)?)
            }
            "dual" => {
                a.arity(1)?;
                Value::Module(modalg::dual(&a.module(0)?)?)
            }
            "ext" => {
                a.arity(2)?;
                Value::Module(modalg::ext_module(&a.module(0)?, a.int(1)?)?)
            }
            "sat" => {
                a.arity(1)?;
                Value::Module(modalg::saturate(&a.module(0)?)?)
            }
            "h0" => {
                a.arity(1)?;
                Value::Module(modalg::sections_h0(&a.module(0)?, DEFAULT_SECTIONS_CAP)?)
            }
            "shift" => {
                a.arity(2)?;
                Value::Module(a.module(0)?.shift(a.int(1)? as i32))
            }
            "sum" => {
                a.arity(2)?;
                Value::Module(a.module(0)?.direct_sum(&a.module(1)?)?)
            }
            "mod" => {
                a.arity(2)?;
                Value::Module(a.module(0)?.mod_element(&self.poly_arg(&a, 1)?)?)
            }
            "colon" => {
                a.arity(2)?;
                Value::Module(modalg::colon(&a.module(0)?, &self.poly_arg(&a, 1)?)?)
            }
            "intersect" => {
                let ideals = (0..a.pos.len()).map(|i| a.ideal(i)).collect::<EResult<Vec<_>>>()?;
                Value::Ideal(modalg::intersect_ideals(&ring, &ideals)?)
            }
            "ann" => {
                a.arity(1)?;
                Value::Ideal(modalg::annihilator(&a.module(0)?)?)
            }
            "random_ci" => {
                a.arity(0)?;
                let degs = a.kw_int_list("degrees")?;
                let mut rng = self.random_rng(a.kw_seed()?)?;
                Value::Module(random_complete_intersection(&ring, &degs, &mut rng)?)
            }
            "random_det" => {
                a.arity(0)?;
                let codim = match a.kw.get("codim") {
                    Some(v) => as_int(v)? as usize,
                    None => return usage("random_det needs codim=N"),
                };
                let mut rng = self.random_rng(a.kw_seed()?)?;
                Value::Module(random_determinantal(&ring, codim, &mut rng)?)
            }
            "random_form" => {
                a.arity(1)?;
                let d = a.usize(0)? as u32;
                let mut rng = self.random_rng(a.kw_seed()?)?;
                Value::Poly(gint_core::random::random_forms(&ring, &[d], &mut rng).remove(0))
            }
            "parameter" => {
                a.arity(2)?;
                let m = a.module(0)?;
                let d = a.usize(1)? as u32;
                let mut rng = self.random_rng(a.kw_seed()?)?;
                Value::Poly(modalg::find_parameter(&m, d, &[], PARAMETER_TRIALS, &mut rng)?)
            }
            "deg" => Value::Int(a.one_module()?.degree()),
            "dim" => Value::Int(a.one_module()?.dim()),
            "depth" => Value::Int(homological_data(&a.one_module()?)?.depth),
            "pd" => Value::Int(homological_data(&a.one_module()?)?.pd),
            "cm_type" => Value::Int(homological_data(&a.one_module()?)?.cm_type as i64),
            "ngens" => Value::Int(a.one_module()?.generators().rank() as i64),
            "hilbert" => {
                a.arity(2)?;
                Value::Int(a.module(0)?.hilbert().value(a.int(1)?) as i64)
            }
            "betti" => {
                a.arity(3)?;
                let h = homological_data(&a.module(0)?)?;
                Value::Int(h.betti.get(a.usize(1)?, a.int(2)? as i32) as i64)
            }
            "ext_dim" => {
                a.arity(2)?;
                Value::Int(modalg::ext_module(&a.module(0)?, a.int(1)?)?.dim())
            }
            "is_cm" => Value::Bool(homological_data(&a.one_module()?)?.is_cm),
            "is_zero" => Value::Bool(a.one_module()?.is_zero()),
            "is_free" => {
                let m = a.one_module()?;
                Value::Bool(m.is_zero() || homological_data(&m)?.pd == 0)
            }
            "is_saturated" => Value::Bool(modalg::is_saturated(&a.one_module()?)?),
            "is_regular" => {
                a.arity(2)?;
                Value::Bool(modalg::is_regular(&a.module(0)?, &self.poly_arg(&a, 1)?)?)
            }
            "same" => {
                a.arity(2)?;
                let (m, n) = (a.module(0)?, a.module(1)?);
                Value::Bool(m.ring().same_ring(n.ring()) && m.same_canonical(&n)?)
            }
            "unmixed" => Value::Bool(criteria::module_is_unmixed(&a.one_module()?)?),
            "maximal" => Value::Bool(criteria::maximal_module_flags(&a.one_module()?)?.is_maximal),
            "torsion_free" => Value::Bool(criteria::maximal_module_flags(&a.one_module()?)?.is_torsion_free),
            "reflexive" => Value::Bool(criteria::maximal_module_flags(&a.one_module()?)?.is_reflexive),
            "proper" => {
                a.arity(2)?;
                Value::Bool(criteria::intersects_properly(&a.module(0)?, &a.module(1)?)?.passed())
            }
            "very_proper" => {
                a.arity(2)?;
                Value::Bool(criteria::very_proper(&a.module(0)?, &a.module(1)?)?)
            }
            other => return usage(format!("unknown function `{other}`")),
        };
        Ok(v)
    }

    fn poly_arg(&self, a: &Args<'_, K>, i: usize) -> EResult<Polynomial<K>> {
        match &a.pos[i] {
            Value::Poly(f) => Ok(f.clone()),
            Value::Int(n) => self.constant(*n),
            v => usage(format!("{}: argument {} must be a polynomial, found {}", a.name, i + 1, v.type_name())),
        }
    }

    fn check(&mut self, c: &Call) -> EResult<CheckReport> {
        let inputs: Vec<String> = c.args.iter().map(|a| match a {
            Arg::Pos(e) => e.to_string(),
            Arg::Kw(k, e) => format!("{k}={e}"),
        }).collect();
        let mut pos = Vec::new();
        let mut kw = HashMap::new();
        for a in &c.args {
            match a {
                Arg::Pos(e) => pos.push(self.eval(e)?),
                Arg::Kw(k, e) => {
                    kw.insert(k.clone(), self.eval(e)?);
                }
            }
        }
        let a = Args { name: &c.name, pos, kw };
        let two = |a: &Args<'_, K>| -> EResult<(Presentation<K>, Presentation<K>)> {
            a.arity(2)?;
            Ok((a.module(0)?, a.module(1)?))
        };
        let mut rep = match c.name.as_str() {
            "unmixed" => criteria::is_unmixed(&a.one_module()?)?,
            "maximal" => criteria::maximal_check(&a.one_module()?)?,
            "torsion_free" => criteria::torsion_free_check(&a.one_module()?)?,
            "reflexive" => criteria::reflexive_check(&a.one_module()?)?,
            "proper" => {
                let (m, n) = two(&a)?;
                criteria::intersects_properly(&m, &n)?
            }
            "very_proper" => {
                let (m, n) = two(&a)?;
                criteria::intersects_very_properly(&m, &n)?
            }
            "bezout" => {
                let (m, n) = two(&a)?;
                criteria::bezout_check(&m, &n)?
            }
            "depth_formula" => {
                let (m, n) = two(&a)?;
                criteria::depth_formula_check(&m, &n)?
            }
            "cm_lifting" => {
                let (m, n) = two(&a)?;
                criteria::cm_lifting_check(&m, &n)?
            }
            "type_product" => {
                let (m, n) = two(&a)?;
                criteria::type_product_check(&m, &n)?
            }
            "betti_join" => {
                let (m, n) = two(&a)?;
                criteria::betti_join_check(&m, &n)?
            }
            "kunneth" => {
                let (m, n) = two(&a)?;
                let (lo, hi) = match a.kw.get("window") {
                    Some(Value::List(w)) if w.len() == 2 => (as_int(&w[0])?, as_int(&w[1])?),
                    Some(_) => return usage("window must be [lo, hi]"),
                    None => self.window,
                };
                criteria::kunneth_check(&m, &n, lo..=hi)?
            }
            "degree_hypersurface" => {
                a.arity(2)?;
                criteria::degree_hypersurface_check(&a.module(0)?, &self.poly_arg(&a, 1)?)?
            }
            "hyperplane_lift" => {
                a.arity(2)?;
                criteria::hyperplane_lift_check(&a.module(0)?, &self.poly_arg(&a, 1)?)?
            }
            "splitting" => match a.pos.len() {
                1 => criteria::splitting_check(&a.module(0)?, &SplitMode::EndVanishing)?,
                2 => criteria::splitting_check(&a.module(0)?, &SplitMode::TensorSplit(a.module(1)?))?,
                _ => return usage("splitting takes one or two modules"),
            },
            other => return usage(format!("unknown check `{other}`")),
        };
        rep.inputs = inputs;
        rep.seed = self.seed();
        Ok(rep)
    }
}

fn overflow() -> EvalError {
    EvalError::Usage("integer overflow".into())
}

fn as_int<K: Field>(v: &Value<K>) -> EResult<i64> {
    match v {
        Value::Int(n) => Ok(*n),
        v => usage(format!("expected an integer, found {}", v.type_name())),
    }
}

struct Args<'a, K: Field> {
    name: &'a str,
    pos: Vec<Value<K>>,
    kw: HashMap<String, Value<K>>,
}

impl<K: Field> Args<'_, K> {
    fn arity(&self, n: usize) -> EResult<()> {
        if self.pos.len() == n {
            Ok(())
        } else {
            usage(format!("{} takes {n} positional arguments, got {}", self.name, self.pos.len()))
        }
    }

    fn module(&self, i: usize) -> EResult<Presentation<K>> {
        match &self.pos[i] {
            Value::Module(m) => Ok(m.clone()),
            v => usage(format!("{}: argument {} must be a module, found {}", self.name, i + 1, v.type_name())),
        }
    }

    fn one_module(&self) -> EResult<Presentation<K>> {
        self.arity(1)?;
        self.module(0)
    }

    fn ideal(&self, i: usize) -> EResult<Submodule<K>> {
        match &self.pos[i] {
            Value::Ideal(s) => Ok(s.clone()),
            v => usage(format!("{}: argument {} must be an ideal, found {}", self.name, i + 1, v.type_name())),
        }
    }

    fn int(&self, i: usize) -> EResult<i64> {
        as_int(&self.pos[i])
    }

    fn usize(&self, i: usize) -> EResult<usize> {
        usize::try_from(self.int(i)?).map_err(|_| EvalError::Usage(format!("{}: argument {} must be nonnegative", self.name, i + 1)))
    }

    fn kw_seed(&self) -> EResult<Option<u64>> {
        match self.kw.get("seed") {
            None => Ok(None),
            Some(v) => Ok(Some(as_int(v)? as u64)),
        }
    }

    fn kw_int_list(&self, key: &str) -> EResult<Vec<u32>> {
        match self.kw.get(key) {
            Some(Value::List(items)) => items
                .iter()
                .map(|v| as_int(v).map(|n| n as u32))
                .collect(),
            _ => usage(format!("{} needs {key}=[...]", self.name)),
        }
    }
}

fn summary<K: Field>(m: &Presentation<K>) -> EResult<ModuleSummary> {
    let hom = if m.is_zero() { None } else { Some(homological_data(m)?) };
    Ok(ModuleSummary {
        generator_degrees: m.generators().gen_degrees(),
        relations: m.relations().len(),
        hilbert: m.hilbert().clone(),
        betti_grid: hom.as_ref().map(|h| h.betti.to_grid()),
        betti: hom.as_ref().map(|h| h.betti.clone()),
        pd: hom.as_ref().map(|h| h.pd),
        depth: hom.as_ref().map(|h| h.depth),
        is_cm: hom.as_ref().map(|h| h.is_cm),
        ext_dims: modalg::ext_dims(m)?,
    })
}
