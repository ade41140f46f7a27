//! The verify suites: each reproduces a family of known values or
//! cross-checks two independent routes, reporting one assertion per line.

use tourney::entropy::{
    closed_form_c3, closed_form_tt3, power_sums, renyi_exact, renyi_numeric,
};
use tourney::enumeration::{
    distinct_entropy_value_count, enumerate_regular, enumerate_score_sequences,
    enumerate_tournaments, EnumerationBudget,
};
use tourney::order::labeled_family;
use tourney::spectral::{self, IntMatrix};
use tourney::walks::{
    entropy_upper_bounds, von_neumann_eigen, von_neumann_series, von_neumann_walk, Digraph,
    WalkConfig,
};
use tourney::Tournament;

use crate::input::AnyError;
use crate::report::{Report, Source};

pub const SUITES: [&str; 6] = [
    "small-tables",
    "extremal-23",
    "regular-h4",
    "spectra",
    "walks",
    "counts",
];

pub struct VerifyOpts {
    pub long: bool,
    pub trials: u64,
    pub seed: u64,
    pub epsilon: f64,
    pub shards: usize,
}

pub fn run(suite: &str, opts: &VerifyOpts) -> Result<Report, AnyError> {
    match suite {
        "small-tables" => Ok(small_tables()),
        "extremal-23" => Ok(extremal_23(opts)),
        "regular-h4" => Ok(regular_h4(opts)),
        "spectra" => Ok(spectra()),
        "walks" => Ok(walks(opts)),
        "counts" => Ok(counts()),
        other => Err(format!("unknown suite {other:?}; expected one of {SUITES:?}").into()),
    }
}

fn budget(opts: &VerifyOpts) -> EnumerationBudget {
    EnumerationBudget {
        max_n: if opts.long { 13 } else { 8 },
        parallel_shards: opts.shards,
        ..EnumerationBudget::default()
    }
}

/// Power-sum rows for every 4- and 5-tournament class, plus the two
/// 3-tournament closed forms.
fn small_tables() -> Report {
    let mut report = Report::new("small-tables");

    let four_expected = [
        ("TK4", (12, 21)),
        ("TO4", (12, 27)),
        ("TS4", (10, 12)),
        ("TT4", (14, 36)),
    ];
    let mut four: Vec<(String, (i64, i64))> = labeled_family(4)
        .unwrap()
        .iter()
        .map(|(l, t)| {
            let s = power_sums(t);
            (l.clone(), (s.raw2, s.raw3))
        })
        .collect();
    four.sort();
    for ((label, expected), (_, actual)) in four_expected.iter().zip(&four) {
        report.check_eq(
            format!("four-row-{label}"),
            Source::Reference,
            format!("{expected:?}"),
            format!("{actual:?}"),
        );
    }

    let five_expected: [(&str, (i64, i64, i64)); 12] = [
        ("A", (28, 91, 328)),
        ("B", (28, 85, 280)),
        ("C", (28, 79, 208)),
        ("D", (26, 64, 138)),
        ("E", (26, 76, 258)),
        ("R5", (20, 25, -20)),
        ("TT5", (30, 100, 354)),
        ("U1", (24, 55, 116)),
        ("U2", (24, 55, 120)),
        ("UR1", (22, 40, 46)),
        ("UR2", (22, 40, 46)),
        ("UR3", (22, 40, 50)),
    ];
    let mut five: Vec<(String, (i64, i64, i64))> = labeled_family(5)
        .unwrap()
        .iter()
        .map(|(l, t)| {
            let s = power_sums(t);
            (l.clone(), (s.raw2, s.raw3, s.raw4))
        })
        .collect();
    five.sort();
    for ((label, expected), (_, actual)) in five_expected.iter().zip(&five) {
        report.check_eq(
            format!("five-row-{label}"),
            Source::Reference,
            format!("{expected:?}"),
            format!("{actual:?}"),
        );
    }

    let c3 = Tournament::consecutive_rotational(3).unwrap();
    let tt3 = Tournament::transitive(3).unwrap();

    let h3 = renyi_numeric(&c3, 3.0).unwrap();
    report.check_eq(
        "cycle3-alpha3-undefined",
        Source::Reference,
        "UNDEFINED(NONPOSITIVE_SUM)".to_string(),
        h3.to_string(),
    );

    let expected = (1.0 - 6.0 * 3f64.log2()) / (1.0 - 12.0);
    let closed = closed_form_c3(12.0).unwrap().value().unwrap();
    let numeric = renyi_numeric(&c3, 12.0).unwrap().value().unwrap();
    report.check(
        "cycle3-alpha12-closed-form",
        Source::Reference,
        format!("{expected:.12}"),
        format!("{closed:.12}"),
        (closed - expected).abs() < 1e-12,
    );
    report.check(
        "cycle3-alpha12-numeric-vs-closed",
        Source::Computed,
        format!("{closed:.12}"),
        format!("{numeric:.12}"),
        (numeric - closed).abs() < 1e-10,
    );

    let limit = 3f64.log2() - 1.0;
    let tt3_50 = closed_form_tt3(50.0).unwrap().value().unwrap();
    let tt3_numeric = renyi_numeric(&tt3, 50.0).unwrap().value().unwrap();
    report.check(
        "trans3-alpha50-numeric-vs-closed",
        Source::Computed,
        format!("{tt3_50:.9}"),
        format!("{tt3_numeric:.9}"),
        (tt3_numeric - tt3_50).abs() < 1e-9,
    );
    // Gap to the limit is (log2(3) - 1 + log2(1 + 2^-a)) / (a - 1): it must
    // shrink monotonically and fall below 1e-3 once a - 1 > 585.
    let gaps: Vec<f64> = [50.0, 100.0, 200.0, 400.0, 800.0]
        .iter()
        .map(|&a| (renyi_numeric(&tt3, a).unwrap().value().unwrap() - limit).abs())
        .collect();
    let shrinking = gaps.windows(2).all(|w| w[1] < w[0]);
    report.check(
        "trans3-approaches-limit",
        Source::Reference,
        format!("gaps decreasing, final < 1e-3 (limit {limit:.6})"),
        format!("gap(50) {:.2e}, gap(800) {:.2e}", gaps[0], gaps[4]),
        shrinking && gaps[4] < 1e-3,
    );

    let ts4 = labeled_family(4)
        .unwrap()
        .into_iter()
        .find(|(l, _)| l == "TS4")
        .unwrap()
        .1;
    let expected = -(10f64 / 36.0).log2();
    let actual = renyi_exact(&ts4, 2).unwrap().value().unwrap();
    report.check(
        "strong4-h2-value",
        Source::Computed,
        format!("{expected:.12}"),
        format!("{actual:.12}"),
        (actual - expected).abs() < 1e-12,
    );

    report
}

/// Class counts, score-sequence counts, and distinct-value censuses.
fn counts() -> Report {
    let mut report = Report::new("counts");
    let budget = EnumerationBudget::default();

    let expected_classes: [u64; 8] = [1, 1, 2, 4, 12, 56, 456, 6880];
    for (n, &expected) in (1..=8).zip(&expected_classes) {
        let actual = enumerate_tournaments(n, &budget).unwrap().len() as u64;
        report.check_eq(format!("class-count-n{n}"), Source::Reference, expected, actual);
    }

    let expected_seqs: [u64; 9] = [1, 2, 4, 9, 22, 59, 167, 490, 1486];
    for (n, &expected) in (2..=10).zip(&expected_seqs) {
        let actual = enumerate_score_sequences(n).unwrap().len() as u64;
        report.check_eq(format!("score-seq-count-n{n}"), Source::Reference, expected, actual);
    }

    let expected_h2: [u64; 9] = [1, 2, 3, 6, 9, 15, 21, 31, 41];
    for (n, &expected) in (2..=10).zip(&expected_h2) {
        let actual = distinct_entropy_value_count(n, 2, &budget).unwrap();
        report.check_eq(format!("h2-distinct-n{n}"), Source::Reference, expected, actual);
        let closed = if n % 2 == 1 {
            (n + 1) * n * (n - 1) / 24 + 1
        } else {
            let half = n / 2 + 1;
            2 * (half * (half - 1) * (half - 2) / 6) + 1
        } as u64;
        report.check_eq(format!("h2-closed-form-n{n}"), Source::Computed, closed, actual);
    }

    report.check_eq(
        "h3-distinct-n4",
        Source::Reference,
        4,
        distinct_entropy_value_count(4, 3, &budget).unwrap(),
    );
    report.check_eq(
        "h4-distinct-n5",
        Source::Reference,
        11,
        distinct_entropy_value_count(5, 4, &budget).unwrap(),
    );
    report
}

fn sorted_labels(items: &[usize]) -> String {
    let labels: Vec<String> = items.iter().map(|i| format!("#{i}")).collect();
    format!("{{{}}}", labels.join(","))
}

/// Extremal classes of H2 and H3 over all n-tournaments for n = 4..7:
/// balanced scores maximize, transitive minimizes.
fn extremal_23(opts: &VerifyOpts) -> Report {
    let mut report = Report::new("extremal-23");
    let budget = budget(opts);
    for n in 4..=7 {
        let classes = enumerate_tournaments(n, &budget).unwrap();
        let sums: Vec<_> = classes.iter().map(power_sums).collect();
        for alpha in [2u32, 3] {
            // H_alpha falls as the power sum grows, so argmax H = argmin raw.
            let min = sums.iter().map(|s| s.raw(alpha)).min().unwrap();
            let max = sums.iter().map(|s| s.raw(alpha)).max().unwrap();
            let argmax_h: Vec<usize> = (0..classes.len())
                .filter(|&i| sums[i].raw(alpha) == min)
                .collect();
            let argmin_h: Vec<usize> = (0..classes.len())
                .filter(|&i| sums[i].raw(alpha) == max)
                .collect();
            let balanced: Vec<usize> = (0..classes.len())
                .filter(|&i| classes[i].is_regular() || classes[i].is_nearly_regular())
                .collect();
            let transitive: Vec<usize> = (0..classes.len())
                .filter(|&i| classes[i].is_transitive())
                .collect();
            report.check_eq(
                format!("argmax-h{alpha}-n{n}-is-balanced"),
                Source::Reference,
                sorted_labels(&balanced),
                sorted_labels(&argmax_h),
            );
            report.check_eq(
                format!("argmin-h{alpha}-n{n}-is-transitive"),
                Source::Reference,
                sorted_labels(&transitive),
                sorted_labels(&argmin_h),
            );
        }
    }
    report
}

/// Regular-tournament counts, fourth-power-sum extremes, and the
/// transitive-4-subtournament lower bounds.
fn regular_h4(opts: &VerifyOpts) -> Report {
    let mut report = Report::new("regular-h4");
    let budget = budget(opts);
    let mut orders = vec![(5usize, 1usize), (7, 3), (9, 15)];
    if opts.long {
        orders.push((11, 1223));
    }
    for &(n, expected_count) in &orders {
        let classes = enumerate_regular(n, &budget).unwrap();
        report.check_eq(
            format!("regular-count-n{n}"),
            Source::Reference,
            expected_count,
            classes.len(),
        );

        let raw4: Vec<i64> = classes.iter().map(|t| power_sums(t).raw4).collect();
        let min = *raw4.iter().min().unwrap();
        let max = *raw4.iter().max().unwrap();
        let argmin: Vec<usize> = (0..classes.len()).filter(|&i| raw4[i] == min).collect();
        let argmax: Vec<usize> = (0..classes.len()).filter(|&i| raw4[i] == max).collect();
        let special: Vec<usize> = (0..classes.len())
            .filter(|&i| {
                if n % 4 == 3 {
                    classes[i].is_doubly_regular()
                } else {
                    classes[i].is_quasi_doubly_regular()
                }
            })
            .collect();
        let consecutive = Tournament::consecutive_rotational(n).unwrap().canonicalize();
        let rotational: Vec<usize> = (0..classes.len())
            .filter(|&i| classes[i].bits() == consecutive.bits())
            .collect();
        let kind = if n % 4 == 3 { "doubly-regular" } else { "quasi-doubly-regular" };
        report.check_eq(
            format!("h4-max-n{n}-is-{kind}"),
            Source::Reference,
            sorted_labels(&special),
            sorted_labels(&argmin),
        );
        report.check_eq(
            format!("h4-min-n{n}-is-consecutive-rotational"),
            Source::Reference,
            sorted_labels(&rotational),
            sorted_labels(&argmax),
        );

        // t4 >= n*m*C(k,2) for n = 4k+3, t4 >= n*k*(k-1)^2 for n = 4k+1,
        // with equality exactly on the extremal classes above.
        let m = (n - 1) / 2;
        let (k, bound) = if n % 4 == 3 {
            let k = (n - 3) / 4;
            (k, (n * m * k * k.saturating_sub(1) / 2) as u64)
        } else {
            let k = (n - 1) / 4;
            (k, (n * k * k.saturating_sub(1) * k.saturating_sub(1)) as u64)
        };
        let _ = k;
        let t4: Vec<u64> = classes
            .iter()
            .map(|t| t.count_c4_t4().unwrap().t4)
            .collect();
        let all_above = t4.iter().all(|&v| v >= bound);
        report.check(
            format!("t4-lower-bound-n{n}"),
            Source::Reference,
            format!("all >= {bound}"),
            format!("min = {}", t4.iter().min().unwrap()),
            all_above,
        );
        let tight: Vec<usize> = (0..classes.len()).filter(|&i| t4[i] == bound).collect();
        report.check_eq(
            format!("t4-equality-n{n}-is-{kind}"),
            Source::Reference,
            sorted_labels(&special),
            sorted_labels(&tight),
        );
    }

    // The strict seven-vertex chain between the three regular classes.
    let seven = enumerate_regular(7, &budget).unwrap();
    let raw4: Vec<i64> = seven.iter().map(|t| power_sums(t).raw4).collect();
    let qr = Tournament::quadratic_residue_tournament(7).unwrap().canonicalize();
    let rot = Tournament::consecutive_rotational(7).unwrap().canonicalize();
    let qr_raw4 = seven
        .iter()
        .zip(&raw4)
        .find(|(t, _)| t.bits() == qr.bits())
        .map(|(_, &v)| v)
        .unwrap();
    let rot_raw4 = seven
        .iter()
        .zip(&raw4)
        .find(|(t, _)| t.bits() == rot.bits())
        .map(|(_, &v)| v)
        .unwrap();
    let middle = raw4
        .iter()
        .copied()
        .find(|&v| v != qr_raw4 && v != rot_raw4)
        .unwrap();
    report.check(
        "seven-chain-strict",
        Source::Reference,
        "147 < middle < 175".to_string(),
        format!("{qr_raw4} < {middle} < {rot_raw4}"),
        qr_raw4 == 147 && rot_raw4 == 175 && qr_raw4 < middle && middle < rot_raw4,
    );
    report
}

/// Exact spectra: the doubly regular closed form and agreement of the
/// three power-sum routes.
fn spectra() -> Report {
    let mut report = Report::new("spectra");

    for p in [7usize, 11] {
        let t = Tournament::quadratic_residue_tournament(p).unwrap();
        let spectrum = spectral::normalized_spectrum(
            &IntMatrix::laplacian(&t),
            spectral::DEFAULT_TOL,
        )
        .unwrap();
        let expected = spectral::doubly_regular_spectrum(p).unwrap();
        let worst = spectrum
            .eigenvalues()
            .iter()
            .zip(expected.eigenvalues())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        report.check(
            format!("qr{p}-spectrum-closed-form"),
            Source::Reference,
            "max deviation < 1e-8".to_string(),
            format!("{worst:.3e}"),
            worst < 1e-8,
        );
    }

    let budget = EnumerationBudget::default();
    for n in 3..=6 {
        let classes = enumerate_tournaments(n, &budget).unwrap();
        let mut exact_match = true;
        let mut worst = 0.0f64;
        for t in &classes {
            let sums = power_sums(t);
            let l = IntMatrix::laplacian(t);
            let spectrum = spectral::normalized_spectrum(&l, spectral::DEFAULT_TOL).unwrap();
            for alpha in 2u32..=4 {
                let trace = spectral::power_sum_trace(&l, alpha).unwrap();
                exact_match &= sums.f(alpha) == &trace;
                let s = spectrum.complex_power_sum(alpha as f64);
                let f = rational_to_f64(sums.f(alpha));
                worst = worst.max((s.re - f).abs()).max(s.im.abs());
            }
        }
        report.check(
            format!("power-sums-vs-trace-n{n}"),
            Source::Computed,
            "exact equality".to_string(),
            if exact_match { "exact equality" } else { "mismatch" }.to_string(),
            exact_match,
        );
        report.check(
            format!("power-sums-vs-eigensolver-n{n}"),
            Source::Computed,
            "max deviation < 1e-8".to_string(),
            format!("{worst:.3e}"),
            worst < 1e-8,
        );
    }
    report
}

fn rational_to_f64(r: &num::BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap()
}

/// Series, eigenvalue, and Monte Carlo routes to the von Neumann entropy,
/// plus the acyclic-equality and log bounds.
fn walks(opts: &VerifyOpts) -> Report {
    let mut report = Report::new("walks");

    let k2 = Digraph::undirected(2, &[(0, 1)]).unwrap();
    let p3 = Digraph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
    let tt3 = Digraph::from_tournament(&Tournament::transitive(3).unwrap());
    let tt4 = Digraph::from_tournament(&Tournament::transitive(4).unwrap());
    for (name, graph) in [("k2", &k2), ("p3", &p3), ("tt3", &tt3), ("tt4", &tt4)] {
        let series = von_neumann_series(graph, 1e-7).unwrap();
        let eigen = von_neumann_eigen(graph).unwrap();
        report.check(
            format!("series-vs-eigen-{name}"),
            Source::Computed,
            format!("{eigen:.9}"),
            format!("{series:.9}"),
            (series - eigen).abs() < 1e-6,
        );
    }

    let expected = 2.0 - 0.75 * 3f64.log2();
    let actual = von_neumann_eigen(&p3).unwrap();
    report.check(
        "p3-closed-value",
        Source::Reference,
        format!("{expected:.9}"),
        format!("{actual:.9}"),
        (actual - expected).abs() < 1e-9,
    );

    let tt5 = Digraph::from_tournament(&Tournament::transitive(5).unwrap());
    let series = von_neumann_series(&tt5, 1e-7).unwrap();
    let bound = entropy_upper_bounds(&tt5).unwrap().degree_bound;
    report.check(
        "acyclic-equality-tt5",
        Source::Computed,
        format!("{bound:.10}"),
        format!("{series:.10}"),
        (series - bound).abs() < 1e-9,
    );

    let c3 = Digraph::from_tournament(&Tournament::consecutive_rotational(3).unwrap());
    let r5 = Digraph::from_tournament(&Tournament::consecutive_rotational(5).unwrap());
    for (name, graph) in [("c3", &c3), ("r5", &r5)] {
        let series = von_neumann_series(graph, 1e-9).unwrap();
        let bounds = entropy_upper_bounds(graph).unwrap();
        report.check(
            format!("degree-bound-strict-{name}"),
            Source::Reference,
            format!("< {:.9}", bounds.degree_bound),
            format!("{series:.9}"),
            series < bounds.degree_bound,
        );
        report.check(
            format!("log-bound-strict-{name}"),
            Source::Reference,
            format!("< {:.9}", bounds.log_bound),
            format!("{series:.9}"),
            series < bounds.log_bound,
        );
    }

    let series = von_neumann_series(&c3, 1e-9).unwrap();
    let config = WalkConfig {
        trials: opts.trials,
        max_length: 100_000,
        seed: opts.seed,
    };
    let est = von_neumann_walk(&c3, &config, opts.epsilon).unwrap();
    report.check(
        "monte-carlo-c3-within-3-sigma",
        Source::Computed,
        format!("{series:.6} +/- {:.1e}", 3.0 * est.stderr),
        format!("{:.6}", est.estimate),
        (est.estimate - series).abs() <= 3.0 * est.stderr,
    );
    report
}
