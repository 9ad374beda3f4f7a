use gint_cli::ast::*;
use gint_cli::{corpus, parse_script};
use proptest::prelude::*;

fn ident() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,5}".prop_filter("keyword", |s| !gint_cli::syntax::is_keyword(s))
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u64..1000).prop_map(Expr::Int),
        any::<bool>().prop_map(Expr::Bool),
        ident().prop_map(Expr::Ident),
    ];
    leaf.prop_recursive(4, 24, 4, |inner| {
        let op = prop_oneof![
            Just(BinOp::Add),
            Just(BinOp::Sub),
            Just(BinOp::Mul),
            Just(BinOp::Div),
            Just(BinOp::Pow),
            Just(BinOp::Eq),
            Just(BinOp::Le),
        ];
        prop_oneof![
            (op, inner.clone(), inner.clone()).prop_map(|(o, l, r)| Expr::Binary(o, Box::new(l), Box::new(r))),
            (prop_oneof![Just(UnOp::Neg), Just(UnOp::Not)], inner.clone())
                .prop_map(|(o, e)| Expr::Unary(o, Box::new(e))),
            prop::collection::vec(inner.clone(), 0..3).prop_map(Expr::Ideal),
            prop::collection::vec(inner.clone(), 0..3).prop_map(Expr::List),
            (ident(), prop::collection::vec(inner.clone(), 0..3), prop::option::of((ident(), inner)))
                .prop_map(|(name, pos, kw)| {
                    let mut args: Vec<Arg> = pos.into_iter().map(Arg::Pos).collect();
                    if let Some((k, e)) = kw {
                        args.push(Arg::Kw(k, e));
                    }
                    Expr::Call(Call { name, args })
                }),
        ]
    })
}

fn stmt() -> impl Strategy<Value = Stmt> {
    prop_oneof![
        (ident(), expr()).prop_map(|(name, value)| Stmt::Option { name, value }),
        (
            prop_oneof![Just(BindKind::Ideal), Just(BindKind::Module), Just(BindKind::Poly), Just(BindKind::Let)],
            ident(),
            expr()
        )
            .prop_map(|(kind, name, value)| Stmt::Bind { kind, name, value }),
        expr().prop_map(Stmt::Assert),
        (
            ident(),
            prop::collection::vec(expr(), 0..3),
            prop::option::of(prop_oneof![Just(Expect::Pass), Just(Expect::Fail), Just(Expect::HypothesesNotMet)])
        )
            .prop_map(|(name, pos, expect)| Stmt::Check {
                call: Call { name, args: pos.into_iter().map(Arg::Pos).collect() },
                expect
            }),
        (ident(), prop::option::of(0u64..100), prop::option::of(Just("lex".to_string())), 1u32..4).prop_map(
            |(name, field, order, n)| Stmt::Ring {
                name,
                spec: RingSpec {
                    field,
                    vars: vec![VarItem::Range { prefix: "x".into(), lo: 0, hi: n }, VarItem::Name("t".into())],
                    order
                }
            }
        ),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pretty_printed_scripts_reparse_identically(stmts in prop::collection::vec(stmt(), 0..6)) {
        let lines = (1..=stmts.len()).collect();
        let script = Script { statements: stmts, lines };
        let text = script.to_string();
        let back = parse_script(&text).unwrap();
        prop_assert_eq!(back, script);
    }
}

#[test]
fn corpus_scripts_round_trip() {
    for (name, text) in corpus::CORPUS {
        let a = parse_script(text).unwrap();
        let b = parse_script(&a.to_string()).unwrap();
        assert_eq!(a.statements, b.statements, "{name}");
    }
}

#[test]
fn empty_script_passes() {
    let r = gint_cli::run_text("empty", "", &Default::default(), false);
    assert!(r.passed);
    assert!(r.statements.is_empty());
    assert_eq!(r.status(), gint_cli::Status::Pass);
}

#[test]
fn undefined_identifier_is_reported_with_line() {
    let r = gint_cli::run_text(
        "undef",
        "ring R = poly(vars=[x, y]);\n\nmodule M = quotient(J);\n",
        &Default::default(),
        false,
    );
    let e = r.error.unwrap();
    assert_eq!(e.line, 3);
    assert!(e.message.contains("`J`"));
}

#[test]
fn rationals_and_division() {
    let r = gint_cli::run_text(
        "q",
        "ring R = poly(field=0, vars=[x, y]);\npoly f = x/2 + y/3;\nassert 6*f == 3*x + 2*y;\n",
        &Default::default(),
        false,
    );
    assert!(r.passed, "{:?}", r.statements);
    assert_eq!(r.field, "QQ");
}
