//! Scripts bundled with the binary.

pub const CORPUS: [(&str, &str); 8] = [
    ("example_1_3", include_str!("../corpus/example_1_3.gint")),
    ("example_4_6", include_str!("../corpus/example_4_6.gint")),
    ("example_6_2", include_str!("../corpus/example_6_2.gint")),
    ("remark_5_6", include_str!("../corpus/remark_5_6.gint")),
    ("bezout_random", include_str!("../corpus/bezout_random.gint")),
    ("kunneth_small", include_str!("../corpus/kunneth_small.gint")),
    ("betti_join", include_str!("../corpus/betti_join.gint")),
    ("splitting", include_str!("../corpus/splitting.gint")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    CORPUS.iter().map(|(n, _)| *n)
}

pub fn get(name: &str) -> Option<&'static str> {
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}
