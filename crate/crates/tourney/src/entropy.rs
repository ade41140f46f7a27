//! Renyi entropies of tournaments.
//!
//! For a tournament the trace-normalized Laplacian spectrum has the exact
//! integer power sums
//!
//! * `raw2 = sum s_i^2`,
//! * `raw3 = sum s_i^3 - 3 c3(T)`,
//! * `raw4 = tr(D^4) - 4 tr(D A^3) + tr(A^4)`,
//!
//! with `f_a = raw_a / C(n,2)^a`, so entropy comparisons for `a = 2, 3, 4`
//! reduce to integer comparisons. `H_a = log2(f_a)/(1-a)` and the companion
//! functional `H*_a = -f_a` are both decreasing in `f_a`, hence order
//! tournaments identically; the logarithm only enters at presentation time.
//!
//! A power sum can vanish or go negative (`f_4(R_5) = -20/10^4`), so an
//! undefined entropy is a first-class value here, never an error.

use num::complex::Complex64;
use num::{BigInt, BigRational, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::spectral::{self, IntMatrix};
use crate::tournament::Tournament;

/// Why an entropy value failed to exist.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UndefinedReason {
    /// The power sum is zero or negative, so its logarithm does not exist.
    NonpositiveSum,
    /// The power sum kept a non-negligible imaginary part.
    NonrealSum,
    /// The Laplacian trace is zero, so the spectrum cannot be normalized.
    ZeroTrace,
}

/// A Renyi entropy: either a real number or an explicit non-value.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum EntropyValue {
    Defined(f64),
    Undefined(UndefinedReason),
}

impl EntropyValue {
    pub fn value(&self) -> Option<f64> {
        match self {
            Self::Defined(v) => Some(*v),
            Self::Undefined(_) => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, Self::Defined(_))
    }

    pub fn reason_str(&self) -> &'static str {
        match self {
            Self::Defined(_) => "OK",
            Self::Undefined(UndefinedReason::NonpositiveSum) => "NONPOSITIVE_SUM",
            Self::Undefined(UndefinedReason::NonrealSum) => "NONREAL_SUM",
            Self::Undefined(UndefinedReason::ZeroTrace) => "ZERO_TRACE",
        }
    }
}

impl std::fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Defined(v) => write!(f, "{v}"),
            Self::Undefined(_) => write!(f, "UNDEFINED({})", self.reason_str()),
        }
    }
}

impl Serialize for EntropyValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EntropyValue", 2)?;
        s.serialize_field("value", &self.value())?;
        s.serialize_field("reason", self.reason_str())?;
        s.end()
    }
}

/// Exact spectral power sums of a tournament for exponents 2, 3, 4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSums {
    pub raw2: i64,
    pub raw3: i64,
    pub raw4: i64,
    pub f2: BigRational,
    pub f3: BigRational,
    pub f4: BigRational,
}

impl PowerSums {
    pub fn raw(&self, alpha: u32) -> i64 {
        match alpha {
            2 => self.raw2,
            3 => self.raw3,
            4 => self.raw4,
            _ => panic!("raw power sums cover alpha in 2..=4"),
        }
    }

    pub fn f(&self, alpha: u32) -> &BigRational {
        match alpha {
            2 => &self.f2,
            3 => &self.f3,
            4 => &self.f4,
            _ => panic!("power sums cover alpha in 2..=4"),
        }
    }
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// `raw2`, `raw3` from the score sequence and 3-cycle count; `raw4` from the
/// four-trace identity over small integer matrices. Exact for all n here.
pub fn power_sums(t: &Tournament) -> PowerSums {
    let n = t.n();
    let scores = t.scores_by_vertex();
    let raw2: i64 = scores.iter().map(|&s| (s * s) as i64).sum();
    let raw3: i64 = scores.iter().map(|&s| (s as i64).pow(3)).sum::<i64>()
        - 3 * t.count_3cycles() as i64;

    let a = t.adjacency();
    let a2 = mat_mul(n, &a, &a);
    let a3 = mat_mul(n, &a2, &a);
    let a4 = mat_mul(n, &a3, &a);
    let tr_d4: i64 = scores.iter().map(|&s| (s as i64).pow(4)).sum();
    let tr_da3: i64 = (0..n).map(|i| scores[i] as i64 * a3[i * n + i]).sum();
    let tr_a4: i64 = (0..n).map(|i| a4[i * n + i]).sum();
    let raw4 = tr_d4 - 4 * tr_da3 + tr_a4;

    let pairs = BigInt::from((n * (n - 1) / 2) as i64);
    let f = |raw: i64, alpha: u32| BigRational::new(BigInt::from(raw), pairs.pow(alpha));
    PowerSums {
        raw2,
        raw3,
        raw4,
        f2: f(raw2, 2),
        f3: f(raw3, 3),
        f4: f(raw4, 4),
    }
}

fn renyi_from_f(f: &BigRational, alpha: f64) -> EntropyValue {
    if f <= &BigRational::zero() {
        return EntropyValue::Undefined(UndefinedReason::NonpositiveSum);
    }
    let v = f.to_f64().expect("power sum fits f64");
    EntropyValue::Defined(v.log2() / (1.0 - alpha))
}

/// `H_a = log2(f_a)/(1-a)` from the exact power sum, `a in {2, 3, 4}`.
pub fn renyi_exact(t: &Tournament, alpha: u32) -> Result<EntropyValue> {
    if !(2..=4).contains(&alpha) {
        return Err(Error::BadAlpha(alpha as f64, "exact route covers alpha in {2, 3, 4}"));
    }
    Ok(renyi_from_f(power_sums(t).f(alpha), alpha as f64))
}

/// `H*_a = -f_a`, exact for any integer `a >= 2`. Decreasing in `f_a`, so it
/// ranks tournaments exactly as `H_a` does wherever the latter is defined.
pub fn h_star(t: &Tournament, alpha: u32) -> Result<BigRational> {
    match alpha {
        0 | 1 => Err(Error::BadAlpha(alpha as f64, "H* needs an integer alpha >= 2")),
        2..=4 => Ok(-power_sums(t).f(alpha).clone()),
        _ => Ok(-spectral::power_sum_trace(&IntMatrix::laplacian(t), alpha)?),
    }
}

const IMAG_TOL: f64 = 1e-9;
/// Relative guard deciding when a computed power sum counts as nonpositive:
/// compare against the sum of eigenvalue moduli, the natural scale.
const POSITIVITY_GUARD: f64 = 1e-12;

fn classify_power_sum(s: Complex64, scale: f64, alpha: f64) -> EntropyValue {
    if s.re <= POSITIVITY_GUARD * scale {
        EntropyValue::Undefined(UndefinedReason::NonpositiveSum)
    } else if s.im.abs() > IMAG_TOL {
        EntropyValue::Undefined(UndefinedReason::NonrealSum)
    } else {
        EntropyValue::Defined(s.re.log2() / (1.0 - alpha))
    }
}

/// `H_a` for real `a > 0`, `a != 1`, via the numeric spectrum with
/// principal-branch powers (conjugate pairs contribute `2 r^a cos(a theta)`).
pub fn renyi_numeric(t: &Tournament, alpha: f64) -> Result<EntropyValue> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha == 1.0 {
        return Err(Error::BadAlpha(alpha, "Renyi entropy needs alpha > 0, alpha != 1"));
    }
    let spectrum = match spectral::normalized_spectrum(&IntMatrix::laplacian(t), spectral::DEFAULT_TOL) {
        Ok(s) => s,
        Err(Error::ZeroTrace) => {
            return Ok(EntropyValue::Undefined(UndefinedReason::ZeroTrace));
        }
        Err(e) => return Err(e),
    };
    let s = spectrum.complex_power_sum(alpha);
    Ok(classify_power_sum(s, spectrum.modulus_power_sum(alpha), alpha))
}

/// `H_a(C_3) = log2(2 (1/sqrt 3)^a cos(pi a / 6)) / (1 - a)`; undefined
/// whenever the cosine is zero or negative (e.g. exactly at `a = 3`).
pub fn closed_form_c3(alpha: f64) -> Result<EntropyValue> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha == 1.0 {
        return Err(Error::BadAlpha(alpha, "Renyi entropy needs alpha > 0, alpha != 1"));
    }
    let modulus = 2.0 * 3f64.powf(-alpha / 2.0);
    let s = modulus * (std::f64::consts::PI * alpha / 6.0).cos();
    Ok(classify_power_sum(Complex64::new(s, 0.0), modulus, alpha))
}

/// `H_a(TT_3) = log2((1/3)^a + (2/3)^a) / (1 - a)`; defined for all valid
/// `a` and converging to `log2(3) - 1` as `a` grows.
pub fn closed_form_tt3(alpha: f64) -> Result<EntropyValue> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha == 1.0 {
        return Err(Error::BadAlpha(alpha, "Renyi entropy needs alpha > 0, alpha != 1"));
    }
    let s = 3f64.powf(-alpha) + (2f64 / 3.0).powf(alpha);
    Ok(classify_power_sum(Complex64::new(s, 0.0), s, alpha))
}

/// One balancing step: pick the lexicographically least pair `(i, j)` with
/// `s_i + 2 <= s_j` and shift one win from `j` to `i`, either by reversing
/// the arc `j -> i` or, when `i` already beats `j`, by reversing a 2-path
/// `j -> u -> i` (which exists whenever the scores differ by two). Returns
/// `None` once all scores differ by at most one.
pub fn regularize_step(t: &Tournament) -> Option<Tournament> {
    let n = t.n();
    let scores = t.scores_by_vertex();
    for i in 0..n {
        for j in 0..n {
            if j == i || scores[i] + 2 > scores[j] {
                continue;
            }
            if t.beats(j, i) {
                return Some(t.reverse_arc(j, i).expect("distinct in-range pair"));
            }
            let u = (0..n)
                .find(|&u| u != i && u != j && t.beats(j, u) && t.beats(u, i))
                .expect("a 2-path from j to i exists when s_j >= s_i + 2");
            let step = t.reverse_arc(j, u).expect("distinct in-range pair");
            return Some(step.reverse_arc(u, i).expect("distinct in-range pair"));
        }
    }
    None
}

/// One unbalancing step: reverse the arc between the least pair of vertices
/// sharing a score `s`, which raises `raw2` by exactly 2 and `raw3` by
/// exactly `6 s + 3`. Returns `None` exactly on transitive tournaments.
pub fn transitivize_step(t: &Tournament) -> Option<Tournament> {
    let n = t.n();
    let scores = t.scores_by_vertex();
    for i in 0..n {
        for j in i + 1..n {
            if scores[i] == scores[j] {
                return Some(t.reverse_arc(i, j).expect("distinct in-range pair"));
            }
        }
    }
    None
}

/// Shannon entropy `sum p_i log2(1/p_i)` of a probability vector, with the
/// convention `0 log(1/0) = 0`.
pub fn shannon(dist: &[f64]) -> Result<f64> {
    if dist.is_empty() {
        return Err(Error::BadDistribution("empty vector".into()));
    }
    let mut sum = 0.0;
    for &p in dist {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::BadDistribution(format!("entry {p} is not a probability")));
        }
        sum += p;
    }
    if (sum - 1.0).abs() > 1e-12 {
        return Err(Error::BadDistribution(format!("entries sum to {sum}, not 1")));
    }
    Ok(dist
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.recip().log2())
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::power_sum_trace;

    fn ts4() -> Tournament {
        Tournament::from_arcs(4, &[(0, 1), (1, 2), (1, 3), (0, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn to4() -> Tournament {
        Tournament::from_arcs(4, &[(3, 0), (3, 1), (3, 2), (0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn u1() -> Tournament {
        // Two dominant vertices over a 3-cycle arranged to differ from u2
        // only beyond the score sequence.
        Tournament::from_arcs(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (3, 4),
                (4, 0),
                (4, 2),
            ],
        )
        .unwrap()
    }

    fn u2() -> Tournament {
        // Transitive except for the reversed extreme arc.
        Tournament::from_arcs(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 0),
            ],
        )
        .unwrap()
    }

    fn b7() -> Tournament {
        Tournament::from_arcs(
            7,
            &[
                (0, 3),
                (0, 4),
                (0, 6),
                (1, 0),
                (1, 6),
                (1, 5),
                (2, 0),
                (2, 1),
                (2, 6),
                (3, 1),
                (3, 2),
                (3, 5),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 0),
                (5, 2),
                (5, 4),
                (6, 3),
                (6, 4),
                (6, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn power_sums_table_values() {
        let p = power_sums(&to4());
        assert_eq!((p.raw2, p.raw3), (12, 27));

        let p = power_sums(&u1());
        assert_eq!((p.raw2, p.raw3, p.raw4), (24, 55, 116));
        let p = power_sums(&u2());
        assert_eq!((p.raw2, p.raw3, p.raw4), (24, 55, 120));

        let r5 = Tournament::consecutive_rotational(5).unwrap();
        let p = power_sums(&r5);
        assert_eq!((p.raw2, p.raw3, p.raw4), (20, 25, -20));
    }

    #[test]
    fn transitive_raw2_closed_form() {
        for n in 2..=8usize {
            let p = power_sums(&Tournament::transitive(n).unwrap());
            let expect = (n * (n - 1) * (2 * n - 1) / 6) as i64;
            assert_eq!(p.raw2, expect);
        }
    }

    #[test]
    fn raw2_parity_matches_pair_count() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 2..=10 {
            for _ in 0..20 {
                let t = Tournament::random(n, &mut rng).unwrap();
                let pairs = (n * (n - 1) / 2) as i64;
                assert_eq!(power_sums(&t).raw2 % 2, pairs % 2, "{t}");
            }
        }
    }

    #[test]
    fn power_sums_match_trace_oracle() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=10 {
            for _ in 0..10 {
                let t = Tournament::random(n, &mut rng).unwrap();
                let p = power_sums(&t);
                let l = IntMatrix::laplacian(&t);
                for alpha in 2..=4u32 {
                    assert_eq!(p.f(alpha), &power_sum_trace(&l, alpha).unwrap(), "{t} a={alpha}");
                }
            }
        }
    }

    #[test]
    fn power_sums_match_spectrum_route() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for n in 3..=8 {
            for _ in 0..5 {
                let t = Tournament::random(n, &mut rng).unwrap();
                let spec = spectral::normalized_spectrum(
                    &IntMatrix::laplacian(&t),
                    spectral::DEFAULT_TOL,
                )
                .unwrap();
                let p = power_sums(&t);
                for alpha in 2..=4u32 {
                    let s = spec.complex_power_sum(alpha as f64);
                    let exact = p.f(alpha).to_f64().unwrap();
                    assert!((s.re - exact).abs() < 1e-8, "{t} a={alpha}");
                    assert!(s.im.abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn renyi_exact_examples() {
        let h2 = renyi_exact(&ts4(), 2).unwrap().value().unwrap();
        assert!((h2 + (10f64 / 36.0).log2()).abs() < 1e-12);

        let r5 = Tournament::consecutive_rotational(5).unwrap();
        assert_eq!(
            renyi_exact(&r5, 4).unwrap(),
            EntropyValue::Undefined(UndefinedReason::NonpositiveSum)
        );

        assert!(renyi_exact(&ts4(), 5).is_err());
    }

    #[test]
    fn transitive_minimizes_h2_among_4_tournaments() {
        // The four isomorphism classes of 4-tournaments by score sequence.
        let tk4 =
            Tournament::from_arcs(4, &[(1, 2), (2, 3), (3, 1), (1, 0), (2, 0), (3, 0)]).unwrap();
        let tt4 = Tournament::transitive(4).unwrap();
        let h2 = |t: &Tournament| renyi_exact(t, 2).unwrap().value().unwrap();
        for other in [ts4(), to4(), tk4] {
            assert!(h2(&tt4) < h2(&other));
        }
    }

    #[test]
    fn h_star_seven_vertex_chain() {
        let qr7 = Tournament::quadratic_residue_tournament(7).unwrap();
        let r7 = Tournament::consecutive_rotational(7).unwrap();
        let b = b7();
        assert_eq!(b.score_sequence().scores(), &[3, 3, 3, 3, 3, 3, 3]);

        let h = |t: &Tournament| h_star(t, 4).unwrap();
        assert!(h(&r7) < h(&b));
        assert!(h(&b) < h(&qr7));

        let h4 = |t: &Tournament| renyi_exact(t, 4).unwrap().value().unwrap();
        assert!(h4(&r7) < h4(&b));
        assert!(h4(&b) < h4(&qr7));
    }

    #[test]
    fn h_star_closed_forms() {
        let tt3 = Tournament::transitive(3).unwrap();
        assert_eq!(h_star(&tt3, 5).unwrap(), BigRational::new((-33).into(), 243.into()));
        let p = power_sums(&ts4());
        assert_eq!(h_star(&ts4(), 2).unwrap(), BigRational::new((-p.raw2).into(), 36.into()));
        assert!(h_star(&tt3, 1).is_err());
    }

    #[test]
    fn numeric_matches_exact_and_closed_forms() {
        let tt3 = Tournament::transitive(3).unwrap();
        let numeric = renyi_numeric(&tt3, 2.0).unwrap().value().unwrap();
        assert!((numeric - (9f64 / 5.0).log2()).abs() < 1e-10);
        let exact = renyi_exact(&tt3, 2).unwrap().value().unwrap();
        assert!((numeric - exact).abs() < 1e-10);

        let c3 = Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        for alpha in [0.5, 2.0, 2.9, 3.1, 12.0] {
            let a = renyi_numeric(&c3, alpha).unwrap();
            let b = closed_form_c3(alpha).unwrap();
            match (a, b) {
                (EntropyValue::Defined(x), EntropyValue::Defined(y)) => {
                    assert!((x - y).abs() < 1e-9, "alpha={alpha}: {x} vs {y}")
                }
                (a, b) => assert_eq!(a, b, "alpha={alpha}"),
            }
        }
        assert!(renyi_numeric(&c3, 1.0).is_err());
        assert!(renyi_numeric(&c3, 0.0).is_err());
        assert!(renyi_numeric(&c3, -2.0).is_err());
    }

    #[test]
    fn c3_closed_form_asymptote_and_value() {
        assert_eq!(
            closed_form_c3(3.0).unwrap(),
            EntropyValue::Undefined(UndefinedReason::NonpositiveSum)
        );
        // Divergence from the left of alpha = 3.
        let ladder: Vec<f64> = [1e-4, 1e-6, 1e-8]
            .iter()
            .map(|eps| closed_form_c3(3.0 - eps).unwrap().value().unwrap())
            .collect();
        assert!(ladder[0] < ladder[1] && ladder[1] < ladder[2]);
        assert!(ladder[2] > 14.0);
        // Exact value at alpha = 12 and the limit along alpha = 12k.
        let h12 = closed_form_c3(12.0).unwrap().value().unwrap();
        let expect = (1.0 - 6.0 * 3f64.log2()) / (1.0 - 12.0);
        assert!((h12 - expect).abs() < 1e-12);
        let limit = 3f64.sqrt().log2();
        assert!((closed_form_c3(1200.0).unwrap().value().unwrap() - limit).abs() < 1e-2);
    }

    #[test]
    fn tt3_closed_form_limit_and_tiny_sums_stay_defined() {
        let limit = 3f64.log2() - 1.0;
        assert!((closed_form_tt3(200.0).unwrap().value().unwrap() - limit).abs() < 1e-2);
        // The power sum at alpha = 50 is ~1.6e-9 yet genuinely positive.
        let tt3 = Tournament::transitive(3).unwrap();
        let v = renyi_numeric(&tt3, 50.0).unwrap();
        assert!(v.is_defined());
        let c = closed_form_tt3(50.0).unwrap().value().unwrap();
        assert!((v.value().unwrap() - c).abs() < 1e-6);
    }

    #[test]
    fn regularize_reaches_regular() {
        let tt3 = Tournament::transitive(3).unwrap();
        let step = regularize_step(&tt3).unwrap();
        assert_eq!(step.score_sequence().scores(), &[1, 1, 1]);

        let mut t = Tournament::transitive(7).unwrap();
        let mut prev = power_sums(&t).raw2;
        while let Some(next) = regularize_step(&t) {
            let raw2 = power_sums(&next).raw2;
            assert!(raw2 < prev);
            assert_eq!(next.score_sequence().scores().iter().sum::<usize>(), 21);
            prev = raw2;
            t = next;
        }
        assert!(t.is_regular());
    }

    #[test]
    fn regularize_step_decrement_is_exact() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let t = Tournament::random(8, &mut rng).unwrap();
            let Some(next) = regularize_step(&t) else {
                continue;
            };
            let scores = t.scores_by_vertex();
            let (mut i, mut j) = (usize::MAX, usize::MAX);
            'outer: for a in 0..8 {
                for b in 0..8 {
                    if b != a && scores[a] + 2 <= scores[b] {
                        (i, j) = (a, b);
                        break 'outer;
                    }
                }
            }
            let drop = 2 * (scores[j] as i64 - scores[i] as i64 - 1);
            assert_eq!(power_sums(&t).raw2 - power_sums(&next).raw2, drop);
        }
    }

    #[test]
    fn transitivize_trajectories() {
        let c3 = Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let next = transitivize_step(&c3).unwrap();
        assert!(next.is_transitive());
        assert_eq!(power_sums(&c3).raw2, 3);
        assert_eq!(power_sums(&next).raw2, 5);
        assert_eq!(power_sums(&next).raw3 - power_sums(&c3).raw3, 9);

        assert!(transitivize_step(&Tournament::transitive(6).unwrap()).is_none());

        let mut t = Tournament::consecutive_rotational(5).unwrap();
        let mut steps = 0;
        while let Some(next) = transitivize_step(&t) {
            let s = t.scores_by_vertex();
            let m = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .find(|&(i, j)| s[i] == s[j])
                .map(|(i, _)| s[i] as i64)
                .unwrap();
            assert_eq!(power_sums(&next).raw2 - power_sums(&t).raw2, 2);
            assert_eq!(power_sums(&next).raw3 - power_sums(&t).raw3, 6 * m + 3);
            t = next;
            steps += 1;
        }
        assert!(t.is_transitive());
        assert_eq!(steps, 5);
    }

    #[test]
    fn shannon_values() {
        assert!((shannon(&[0.25; 4]).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(shannon(&[1.0, 0.0, 0.0]).unwrap(), 0.0);
        let tt3_scores = [0.0, 1.0 / 3.0, 2.0 / 3.0];
        assert!((shannon(&tt3_scores).unwrap() - (3f64.log2() - 2.0 / 3.0)).abs() < 1e-12);
        assert!(shannon(&[0.5, 0.6]).is_err());
        assert!(shannon(&[-0.1, 1.1]).is_err());
        assert!(shannon(&[]).is_err());
    }

    #[test]
    fn entropy_value_display_and_json() {
        let defined = EntropyValue::Defined(1.5);
        assert_eq!(defined.to_string(), "1.5");
        let undef = EntropyValue::Undefined(UndefinedReason::NonpositiveSum);
        assert_eq!(undef.to_string(), "UNDEFINED(NONPOSITIVE_SUM)");
        let json = serde_json::to_string(&undef).unwrap();
        assert_eq!(json, r#"{"value":null,"reason":"NONPOSITIVE_SUM"}"#);
    }
}
