#![allow(dead_code)]

use proptest::prelude::*;
use ucycle::class::{parse_classes, DEFAULT_BUDGET};
use ucycle::digraph::local_degree;
use ucycle::witness::{
    lag_cycle, letter_status, ranking_collapse_path, status_swap_path, validate_path, LetterStatus,
    WitnessPath,
};
use ucycle::{build_digraph, degree_profile, ClassSpec, Letter, Word};

pub const MILLION: u64 = 1_000_000;

/// Equitable `(m, n)` with `3 <= n <= 5`, `m > n`, `m mod n != 0` and `n^m <= 10^6`.
pub fn equitable_matrix() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for n in 3u32..=5 {
        let mut m = n + 1;
        while (n as u64).pow(m) <= MILLION {
            if m % n != 0 {
                out.push((m, n));
            }
            m += 1;
        }
    }
    out
}

pub fn password_example() -> ClassSpec {
    ClassSpec::Password { m: 4, n: 4, classes: parse_classes("1,2;3").unwrap() }
}

/// Every spec that must admit a U-cycle.
pub fn existence_matrix() -> Vec<ClassSpec> {
    let mut specs = vec![
        ClassSpec::Surjection { k: 4, n: 3 },
        ClassSpec::Surjection { k: 5, n: 3 },
        ClassSpec::Injection { k: 2, n: 4 },
        ClassSpec::Injection { k: 3, n: 5 },
    ];
    specs.extend((3..=6).map(|n| ClassSpec::AlmostOnto { n }));
    specs.extend((3..=4).map(|n| ClassSpec::NonBijection { n }));
    specs.extend(equitable_matrix().into_iter().map(|(m, n)| ClassSpec::Equitable { m, n }));
    specs.push(ClassSpec::SInequitable { m: 7, n: 3, s: 2 });
    specs.push(ClassSpec::SInequitable { m: 9, n: 4, s: 2 });
    specs.extend((3..=5).map(|m| ClassSpec::Ranking { m }));
    specs.push(password_example());
    specs
}

/// Every spec that must not admit a U-cycle.
pub fn negative_matrix() -> Vec<ClassSpec> {
    vec![
        ClassSpec::Injection { k: 3, n: 3 },
        ClassSpec::Injection { k: 4, n: 4 },
        ClassSpec::Equitable { m: 6, n: 3 },
        ClassSpec::Equitable { m: 8, n: 4 },
        ClassSpec::Equitable { m: 4, n: 2 },
    ]
}

/// Uniform-ish small specs used by the exhaustive cross-checks.
pub fn small_specs() -> Vec<ClassSpec> {
    let mut specs = Vec::new();
    for n in 1..=4 {
        for m in 1..=5 {
            specs.push(ClassSpec::Plain { m, n });
            specs.push(ClassSpec::Equitable { m, n });
            for s in 1..=2 {
                specs.push(ClassSpec::SInequitable { m, n, s });
            }
            if m <= n {
                specs.push(ClassSpec::Injection { k: m, n });
            }
            if m >= n {
                specs.push(ClassSpec::Surjection { k: m, n });
            }
        }
        if n >= 2 {
            specs.push(ClassSpec::AlmostOnto { n });
            specs.push(ClassSpec::NonBijection { n });
        }
    }
    specs.extend((1..=6).map(|m| ClassSpec::Ranking { m }));
    for classes in ["1;2", "1,2;3", "1;2;3", "1,2;2,3", "4"] {
        for m in 1..=5 {
            specs.push(ClassSpec::Password { m, n: 4, classes: parse_classes(classes).unwrap() });
        }
    }
    specs
}

/// The `(in, out)` degree a proof predicts for `vertex`, or `None` when the
/// proof makes no claim about it.
pub fn predicted_degree(spec: &ClassSpec, vertex: &Word) -> Option<usize> {
    match spec {
        ClassSpec::AlmostOnto { n } => {
            let mut seen = vec![0usize; *n as usize];
            for &l in vertex.letters() {
                seen[l as usize - 1] += 1;
            }
            match seen.iter().filter(|&&c| c > 1).map(|c| c - 1).sum::<usize>() {
                0 => Some(*n as usize - 1),
                1 => Some(2),
                _ => None,
            }
        }
        ClassSpec::Equitable { m, n } => {
            let k = (m % n) as usize;
            if k == 0 || m <= n {
                return None;
            }
            let status = letter_status(spec, vertex).ok()?;
            if status.contains(&LetterStatus::Deficient) {
                Some(1)
            } else {
                Some(*n as usize - k + 1)
            }
        }
        ClassSpec::Ranking { .. } => Some(if vertex.letters().contains(&1) { 2 } else { 1 }),
        ClassSpec::Password { n, classes, .. } => {
            let missing: Vec<&Vec<u16>> =
                classes.iter().filter(|c| !c.iter().any(|l| vertex.letters().contains(l))).collect();
            match missing.as_slice() {
                [] => Some(*n as usize),
                [only] => Some(only.len()),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Vertices of the full digraph whose degree differs from the prediction,
/// plus the number of vertices a prediction covered.
pub fn degree_claim_violations(spec: &ClassSpec) -> (usize, Vec<String>) {
    let g = build_digraph(spec, DEFAULT_BUDGET).unwrap();
    let n = spec.alphabet();
    let mut checked = 0;
    let mut bad = Vec::new();
    for row in degree_profile(&g).rows {
        if let Some(d) = predicted_degree(spec, &row.vertex) {
            checked += 1;
            if (row.in_degree, row.out_degree) != (d, d) {
                bad.push(format!(
                    "{spec} vertex {} has ({}, {}), predicted {d}",
                    row.vertex.render(n),
                    row.in_degree,
                    row.out_degree
                ));
            }
        }
    }
    (checked, bad)
}

/// Equitable{16,6}: the digraph is far too large to build, so sample vertices
/// by shuffling fixed histograms and compute their degrees locally.
pub fn sampled_equitable_16_6(samples: u32) -> Vec<String> {
    use proptest::strategy::{Just, Strategy, ValueTree};
    use proptest::test_runner::TestRunner;

    let spec = ClassSpec::Equitable { m: 16, n: 6 };
    // equitable vertex: three super letters (3) and three normal letters (2)
    let equitable: Vec<u16> = [1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 5, 5, 6, 6].to_vec();
    // inequitable vertex: a member word missing one copy of a normal letter
    let inequitable: Vec<u16> = [1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 6].to_vec();
    let mut runner = TestRunner::deterministic();
    let mut bad = Vec::new();
    for (base, expected) in [(equitable, 3usize), (inequitable, 1usize)] {
        let strategy = Just(base).prop_shuffle();
        for _ in 0..samples {
            let v = Word(strategy.new_tree(&mut runner).unwrap().current());
            let local = local_degree(&spec, v.letters());
            if predicted_degree(&spec, &v) != Some(expected) || local != (expected, expected) {
                bad.push(format!("{spec} vertex {} has {local:?}, predicted {expected}", v.render(6)));
            }
        }
    }
    bad
}

fn words(vs: &[&str]) -> Vec<Word> {
    vs.iter().map(|s| Word::parse(s).unwrap()).collect()
}

/// The four displayed paths, each as (label, class, path, expected end).
pub fn reference_paths() -> Vec<(&'static str, ClassSpec, WitnessPath, Word)> {
    let ao = ClassSpec::AlmostOnto { n: 6 };
    let swap = WitnessPath {
        class: ao.clone(),
        vertices: words(&[
            "12345", "23451", "34512", "45125", "51253", "12534", "25341", "53412", "34125", "41254",
            "12543",
        ]),
    };
    let eq16 = ClassSpec::Equitable { m: 16, n: 6 };
    let status =
        status_swap_path(&eq16, &Word::parse("512625454331466").unwrap(), 4, 1).unwrap();
    let shown_status = words(&[
        "512625454331466",
        "126254543314661",
        "262545433146615",
        "625454331466152",
        "254543314661521",
        "545433146615212",
        "454331466152126",
        "543314661521265",
    ]);
    assert_eq!(status.vertices, shown_status);
    let eq8 = ClassSpec::Equitable { m: 8, n: 3 };
    let lag = lag_cycle(&eq8, &Word::parse("1122333").unwrap(), 2).unwrap();
    let rank = ClassSpec::Ranking { m: 7 };
    let collapse = ranking_collapse_path(&rank, &Word::parse("532147").unwrap()).unwrap();
    let shown: Vec<String> = collapse.vertices.iter().take(13).map(|v| v.render(7)).collect();
    assert_eq!(
        shown,
        [
            "532147", "321476", "214765", "147653", "476531", "765311", "653114", "531147", "311476",
            "114765", "147651", "476511", "765111"
        ]
    );
    vec![
        ("almost-onto swap 12345 -> 12543", ao, swap, Word::parse("12543").unwrap()),
        ("equitable status swap from 512625454331466", eq16, status, Word::parse("543314661521265").unwrap()),
        ("equitable lag cycle of 1122333", eq8, lag, Word::parse("1122333").unwrap()),
        ("ranking collapse 532147 -> 111111", rank, collapse, Word::parse("111111").unwrap()),
    ]
}

pub fn path_ok(class: &ClassSpec, path: &WitnessPath, end: &Word) -> bool {
    validate_path(class, path).valid && path.end() == end
}

/// `(m, n)` with `m mod n = k >= 1` and an equitable vertex of length `m - 1`.
pub fn equitable_vertex(min_k: u32) -> impl Strategy<Value = (ClassSpec, Word)> {
    (2u32..8, 1u32..4)
        .prop_flat_map(move |(n, r)| (Just(n), Just(r), min_k.max(1)..n.max(min_k.max(1) + 1)))
        .prop_filter("k < n", |(n, _, k)| k < n)
        .prop_flat_map(|(n, r, k)| {
            let m = r * n + k;
            let letters: Vec<Letter> = (1..=n as Letter).collect();
            (Just((m, n, r, k)), Just(letters).prop_shuffle())
        })
        .prop_flat_map(|((m, n, r, k), order)| {
            // the first k - 1 letters of `order` are super
            let mut v = Vec::new();
            for (idx, &l) in order.iter().enumerate() {
                let c = if (idx as u32) < k - 1 { r + 1 } else { r };
                v.extend(std::iter::repeat_n(l, c as usize));
            }
            (Just(ClassSpec::Equitable { m, n }), Just(v).prop_shuffle())
        })
        .prop_map(|(spec, v)| (spec, Word(v)))
}

pub fn letters_with(spec: &ClassSpec, v: &Word, status: LetterStatus) -> Vec<Letter> {
    letter_status(spec, v)
        .unwrap()
        .into_iter()
        .enumerate()
        .filter(|(_, s)| *s == status)
        .map(|(i, _)| i as Letter + 1)
        .collect()
}

/// A random ranking of `m` items, then one of its two `(m-1)`-windows.
pub fn ranking_vertex() -> impl Strategy<Value = (ClassSpec, Word)> {
    (3usize..9)
        .prop_flat_map(|m| (Just(m), prop::collection::vec(0usize..9, m), any::<bool>()))
        .prop_map(|(m, keys, front)| {
            let word: Vec<Letter> =
                keys.iter().map(|k| 1 + keys.iter().filter(|x| *x < k).count() as Letter).collect();
            let v = if front { word[..m - 1].to_vec() } else { word[1..].to_vec() };
            (ClassSpec::Ranking { m: m as u32 }, Word(v))
        })
}

pub fn has_repeat(v: &Word) -> bool {
    let mut s = v.0.clone();
    s.sort_unstable();
    s.windows(2).any(|p| p[0] == p[1])
}

/// Passing cycles of length at most 700: the two displayed strings and every
/// generated matrix cycle that short.
pub fn short_cycles() -> Vec<(ClassSpec, Vec<Letter>)> {
    use ucycle::format::parse_cycle;
    let mut out = vec![
        (ClassSpec::Plain { m: 3, n: 2 }, parse_cycle("11100010", 2).unwrap()),
        (ClassSpec::Ranking { m: 3 }, parse_cycle("1113212213123", 3).unwrap()),
    ];
    for spec in existence_matrix() {
        let c = ucycle::generate(&spec, DEFAULT_BUDGET).unwrap();
        if c.len() <= 700 {
            out.push((spec, c.canonical()));
        }
    }
    out
}

/// `(spec, position, letter)` substitutions of `cycle` that still verify.
pub fn surviving_mutations(spec: &ClassSpec, cycle: &[Letter]) -> Vec<(usize, Letter)> {
    let n = spec.alphabet() as Letter;
    let mut survivors = Vec::new();
    let mut mutated = cycle.to_vec();
    for i in 0..cycle.len() {
        for l in (1..=n).filter(|&l| l != cycle[i]) {
            mutated[i] = l;
            if ucycle::verify_ucycle(spec, &mutated, DEFAULT_BUDGET).unwrap().passed() {
                survivors.push((i, l));
            }
        }
        mutated[i] = cycle[i];
    }
    survivors
}

/// `--class ... --m ... --n ...` flags that reproduce `spec` on the command line.
pub fn cli_flags(spec: &ClassSpec) -> Vec<String> {
    let value = serde_json::to_value(spec).unwrap();
    let mut args: Vec<String> = vec!["--class".into(), spec.name().into()];
    for key in ["m", "n", "k", "s"] {
        if let Some(v) = value.get(key) {
            args.push(format!("--{key}"));
            args.push(v.to_string());
        }
    }
    if let ClassSpec::Password { classes, .. } = spec {
        args.push("--classes".into());
        args.push(ucycle::class::format_classes(classes));
    }
    args
}

/// Runs the CLI in-process and returns `(exit code, stdout, stderr)`.
pub fn cli<S: AsRef<str>>(args: &[S]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ucycle".to_string()).chain(args.iter().map(|a| a.as_ref().to_string()));
    let code = ucycle::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn scratch_file(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("ucycle-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name.replace(['{', '}', '=', ',', '"', ';'], "_"))
}
