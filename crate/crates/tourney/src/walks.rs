//! Lazy random walks on digraphs and the von Neumann entropy.
//!
//! Scaling the Laplacian by `1/g` (`g` the total out-degree) gives
//! `M = (I - L/g)^t`, the column-stochastic transition matrix of the lazy
//! walk that moves to each out-neighbor with probability `1/g` and stays
//! put otherwise. The von Neumann entropy of the digraph is the series
//!
//! `S = (1/ln 2) (n - 1 - sum_{j>=2} tr(M^j) / (j (j-1)))`
//!
//! where `tr(M^j)` is a sum of `j`-step return probabilities, so `S` can be
//! computed by matrix powers or estimated by simulating walks. All moduli
//! of `M`'s eigenvalues are at most 1, giving the absolute tail bound
//! `sum_{j>J} |tr(M^j)|/(j(j-1)) <= n/J` used for truncation; when the
//! powers of `M` stop changing, the remaining tail telescopes to `c/J`
//! exactly and the series is completed in closed form.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entropy::shannon;
use crate::error::{Error, Result};
use crate::spectral::{self, IntMatrix};
use crate::tournament::Tournament;

/// A loopless digraph without parallel arcs.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "DigraphRepr", into = "DigraphRepr")]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    g: usize,
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<DigraphRepr> for Digraph {
    type Error = Error;

    fn try_from(repr: DigraphRepr) -> Result<Self> {
        Digraph::new(repr.n, &repr.arcs)
    }
}

impl From<Digraph> for DigraphRepr {
    fn from(d: Digraph) -> Self {
        Self { n: d.n, arcs: d.arcs }
    }
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::VertexCount(0, usize::MAX));
        }
        let mut sorted: Vec<(usize, usize)> = arcs.to_vec();
        sorted.sort_unstable();
        let mut out = vec![Vec::new(); n];
        for window in sorted.windows(2) {
            if window[0] == window[1] {
                return Err(Error::DuplicatePair(window[0].0, window[0].1));
            }
        }
        for &(u, v) in &sorted {
            if u == v {
                return Err(Error::Loop(u));
            }
            if u >= n {
                return Err(Error::VertexRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexRange(v, n));
            }
            out[u].push(v);
        }
        let g = sorted.len();
        Ok(Self { n, arcs: sorted, out, g })
    }

    /// Every arc of the tournament as a digraph.
    pub fn from_tournament(t: &Tournament) -> Self {
        Self::new(t.n(), &t.arcs()).expect("tournaments are valid digraphs")
    }

    /// Undirected graph: both orientations of every edge.
    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut arcs = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Self::new(n, &arcs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total out-degree; the common scale of the lazy walk.
    pub fn g(&self) -> usize {
        self.g
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::laplacian_of_arcs(self.n, self.arcs.iter().copied())
    }

    /// True when every arc has its reverse, i.e. the digraph is a graph.
    pub fn is_symmetric(&self) -> bool {
        self.arcs
            .iter()
            .all(|&(u, v)| self.arcs.binary_search(&(v, u)).is_ok())
    }

    pub fn is_acyclic(&self) -> bool {
        // Iterative three-color depth-first search.
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; self.n];
        for root in 0..self.n {
            if color[root] != WHITE {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            color[root] = GRAY;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if let Some(&w) = self.out[v].get(*next) {
                    *next += 1;
                    match color[w] {
                        GRAY => return false,
                        WHITE => {
                            color[w] = GRAY;
                            stack.push((w, 0));
                        }
                        _ => {}
                    }
                } else {
                    color[v] = BLACK;
                    stack.pop();
                }
            }
        }
        true
    }

    /// Out-degree distribution `d_i / g`.
    pub fn degree_distribution(&self) -> Result<Vec<f64>> {
        if self.g == 0 {
            return Err(Error::Arcless);
        }
        Ok(self
            .out
            .iter()
            .map(|o| o.len() as f64 / self.g as f64)
            .collect())
    }
}

/// Column-stochastic transition matrix of the lazy walk, row-major;
/// `entry(r, c)` is the probability of stepping to `r` from `c`.
#[derive(Clone, Debug)]
pub struct MarkovMatrix {
    n: usize,
    m: Vec<f64>,
}

impl MarkovMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, r: usize, c: usize) -> f64 {
        self.m[r * self.n + c]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.m[i * self.n + i]).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.m[i * n + k];
                if aik != 0.0 {
                    for j in 0..n {
                        m[i * n + j] += aik * other.m[k * n + j];
                    }
                }
            }
        }
        Self { n, m }
    }

    fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m
            .iter()
            .zip(&other.m)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `M = (I - L/g)^t`: move along each out-arc with probability `1/g`,
/// stay with the remaining `1 - d_k/g`.
pub fn markov_matrix(graph: &Digraph) -> Result<MarkovMatrix> {
    let n = graph.n();
    let g = graph.g();
    if g == 0 {
        return Err(Error::Arcless);
    }
    let mut m = vec![0.0f64; n * n];
    let p = 1.0 / g as f64;
    for c in 0..n {
        m[c * n + c] = 1.0 - graph.out_degree(c) as f64 * p;
        for &r in graph.out_neighbors(c) {
            m[r * n + c] = p;
        }
    }
    for c in 0..n {
        debug_assert!(((0..n).map(|r| m[r * n + c]).sum::<f64>() - 1.0).abs() < 1e-12);
    }
    Ok(MarkovMatrix { n, m })
}

/// Diagonal of `M^j`: the `j`-step return probabilities.
pub fn return_probabilities(graph: &Digraph, j: usize) -> Result<Vec<f64>> {
    let m = markov_matrix(graph)?;
    let n = m.order();
    let mut power = MarkovMatrix {
        n,
        m: {
            let mut id = vec![0.0; n * n];
            for i in 0..n {
                id[i * n + i] = 1.0;
            }
            id
        },
    };
    for _ in 0..j {
        power = power.mul(&m);
    }
    Ok((0..n).map(|k| power.entry(k, k)).collect())
}

/// Hard cap on explicitly multiplied powers; past this the powers of every
/// lazy walk matrix encountered in practice have long stabilized.
const SERIES_STEP_CAP: usize = 1 << 20;
const STABLE_EPS: f64 = 1e-15;

/// Von Neumann entropy by the trace series, truncated once the tail bound
/// `n/J` drops below `epsilon` — or completed exactly when the powers of
/// `M` stabilize, since the constant-trace tail telescopes to `c/j`.
pub fn von_neumann_series(graph: &Digraph, epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0) {
        return Err(Error::BadWalkConfig(format!("epsilon {epsilon} must be positive")));
    }
    let m = markov_matrix(graph)?;
    let n = graph.n();
    let cap = ((n as f64 / epsilon).ceil() as usize).max(2);
    let mut correction = 0.0f64;
    let mut power = m.clone();
    let mut j = 1usize;
    while j < cap {
        let next = power.mul(&m);
        let stable = power.max_abs_diff(&next) <= STABLE_EPS;
        power = next;
        j += 1;
        correction += power.trace() / (j * (j - 1)) as f64;
        if stable {
            // tr(M^k) is constant from here on; sum c/(k(k-1)) telescopes.
            correction += power.trace() / j as f64;
            break;
        }
        if j >= SERIES_STEP_CAP {
            break;
        }
    }
    Ok(((n - 1) as f64 - correction) / std::f64::consts::LN_2)
}

/// Von Neumann entropy straight from the spectrum, available when the
/// normalized Laplacian spectrum is real within 1e-9.
pub fn von_neumann_eigen(graph: &Digraph) -> Result<f64> {
    let l = graph.laplacian();
    let spectrum = spectral::normalized_spectrum(&l, spectral::DEFAULT_TOL)?;
    let worst = spectrum.max_imag();
    if worst > 1e-9 {
        return Err(Error::NonRealSpectrum(worst));
    }
    Ok(spectrum
        .eigenvalues()
        .iter()
        .filter(|z| z.re > 0.0)
        .map(|z| z.re * z.re.recip().log2())
        .sum())
}

/// Von Neumann entropy through the full complex spectrum:
/// `-sum Re(mu log2 mu)` over nonzero eigenvalues of the normalized
/// Laplacian. Conjugate pairs cancel the imaginary parts, so this extends
/// [`von_neumann_eigen`] to digraphs with non-real spectra and agrees with
/// the series form eigenvalue by eigenvalue.
pub fn von_neumann_complex(graph: &Digraph) -> Result<f64> {
    let l = graph.laplacian();
    let spectrum = spectral::normalized_spectrum(&l, spectral::DEFAULT_TOL)?;
    let acc: f64 = spectrum
        .eigenvalues()
        .iter()
        .filter(|z| z.norm() > 1e-12)
        .map(|z| -(z * z.ln()).re)
        .sum();
    Ok(acc / std::f64::consts::LN_2)
}

/// Monte Carlo walk parameters. `max_length` caps the truncation length
/// that the tail bound would otherwise dictate.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct WalkConfig {
    pub trials: u64,
    pub max_length: usize,
    pub seed: u64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        Self {
            trials: 100_000,
            max_length: 10_000,
            seed: 0,
        }
    }
}

/// Monte Carlo estimate with its sampling standard error.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct WalkEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub trials: u64,
    pub truncation: usize,
    pub seed: u64,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Estimates the entropy series by simulating lazy walks: trial `t` starts
/// at vertex `t mod n` and accumulates `1/(j(j-1))` whenever step `j`
/// returns to the start. Per-trial generators are derived from the seed, so
/// the result is byte-identical regardless of thread scheduling.
pub fn von_neumann_walk(
    graph: &Digraph,
    config: &WalkConfig,
    epsilon: f64,
) -> Result<WalkEstimate> {
    if config.trials == 0 {
        return Err(Error::BadWalkConfig("trials must be positive".into()));
    }
    if config.max_length < 2 {
        return Err(Error::BadWalkConfig(
            "max_length must be at least 2 steps".into(),
        ));
    }
    if !(epsilon > 0.0) {
        return Err(Error::BadWalkConfig(format!("epsilon {epsilon} must be positive")));
    }
    let n = graph.n();
    let g = graph.g() as u64;
    if g == 0 {
        return Err(Error::Arcless);
    }
    let truncation = ((n as f64 / epsilon).ceil() as usize).clamp(2, config.max_length);

    let trials = config.trials as usize;
    let mut weights = vec![0.0f64; trials];
    let simulate = |t: usize| -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(config.seed ^ t as u64));
        let start = t % n;
        let mut v = start;
        let mut w = 0.0f64;
        for j in 1..=truncation {
            let x = rng.gen_range(0..g) as usize;
            if x < graph.out_degree(v) {
                v = graph.out_neighbors(v)[x];
            }
            if j >= 2 && v == start {
                w += 1.0 / (j * (j - 1)) as f64;
            }
        }
        w
    };
    if trials >= 256 {
        weights
            .par_iter_mut()
            .enumerate()
            .for_each(|(t, slot)| *slot = simulate(t));
    } else {
        for (t, slot) in weights.iter_mut().enumerate() {
            *slot = simulate(t);
        }
    }

    // Per-trial statistic y_t = (n - 1 - n w_t)/ln 2; reduce sequentially
    // so the result does not depend on the parallel schedule.
    let scale = n as f64 / std::f64::consts::LN_2;
    let base = (n - 1) as f64 / std::f64::consts::LN_2;
    let mean_w: f64 = weights.iter().sum::<f64>() / trials as f64;
    let estimate = base - scale * mean_w;
    let var_w: f64 = weights
        .iter()
        .map(|w| (w - mean_w) * (w - mean_w))
        .sum::<f64>()
        / (trials.max(2) - 1) as f64;
    let stderr = scale * (var_w / trials as f64).sqrt();
    Ok(WalkEstimate {
        estimate,
        stderr,
        trials: config.trials,
        truncation,
        seed: config.seed,
    })
}

/// The two upper bounds on the von Neumann entropy of a digraph, plus the
/// acyclicity flag deciding when the degree bound is attained.
#[derive(Clone, Debug, Serialize)]
pub struct EntropyBounds {
    pub degree_bound: f64,
    pub log_bound: f64,
    pub is_acyclic: bool,
}

pub fn entropy_upper_bounds(graph: &Digraph) -> Result<EntropyBounds> {
    let dist = graph.degree_distribution()?;
    Ok(EntropyBounds {
        degree_bound: shannon(&dist)?,
        log_bound: (graph.n() as f64).log2(),
        is_acyclic: graph.is_acyclic(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn tt(n: usize) -> Digraph {
        Digraph::from_tournament(&Tournament::transitive(n).unwrap())
    }

    #[test]
    fn digraph_validation() {
        assert!(matches!(Digraph::new(2, &[(0, 0)]), Err(Error::Loop(0))));
        assert!(matches!(
            Digraph::new(2, &[(0, 1), (0, 1)]),
            Err(Error::DuplicatePair(0, 1))
        ));
        assert!(matches!(
            Digraph::new(2, &[(0, 2)]),
            Err(Error::VertexRange(2, 2))
        ));
        let p3 = Digraph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.g(), 4);
        assert!(p3.is_symmetric());
        assert!(!c3().is_symmetric());
        let json = serde_json::to_string(&c3()).unwrap();
        let back: Digraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c3());
    }

    #[test]
    fn acyclicity() {
        assert!(tt(5).is_acyclic());
        assert!(!c3().is_acyclic());
        assert!(Digraph::new(3, &[(0, 1), (0, 2)]).unwrap().is_acyclic());
        assert!(!Digraph::undirected(2, &[(0, 1)]).unwrap().is_acyclic());
    }

    #[test]
    fn markov_matrix_shapes() {
        let m = markov_matrix(&c3()).unwrap();
        for i in 0..3 {
            assert!((m.entry(i, i) - 2.0 / 3.0).abs() < 1e-15);
            assert!((m.entry((i + 1) % 3, i) - 1.0 / 3.0).abs() < 1e-15);
            let col: f64 = (0..3).map(|r| m.entry(r, i)).sum();
            assert!((col - 1.0).abs() < 1e-12);
        }
        assert!((m.trace() - 2.0).abs() < 1e-15);

        let single = Digraph::new(2, &[(0, 1)]).unwrap();
        let m = markov_matrix(&single).unwrap();
        assert_eq!(m.entry(1, 0), 1.0);
        assert_eq!(m.entry(0, 0), 0.0);
        assert_eq!(m.entry(1, 1), 1.0);

        assert!(matches!(
            markov_matrix(&Digraph::new(2, &[]).unwrap()),
            Err(Error::Arcless)
        ));
    }

    #[test]
    fn scaled_family_is_column_stochastic() {
        use rand::SeedableRng;
        // (I - S L)^t stays column-stochastic for any s_i >= d_i.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let t = Tournament::random(6, &mut rng).unwrap();
            let d = Digraph::from_tournament(&t);
            let n = d.n();
            let s: Vec<u64> = (0..n)
                .map(|v| d.out_degree(v) as u64 + rng.gen_range(0..4))
                .collect();
            let mut m = vec![0.0f64; n * n];
            for c in 0..n {
                let sc = s[c].max(1) as f64;
                m[c * n + c] = 1.0 - d.out_degree(c) as f64 / sc;
                for &r in d.out_neighbors(c) {
                    m[r * n + c] = 1.0 / sc;
                }
            }
            for c in 0..n {
                let col: f64 = (0..n).map(|r| m[r * n + c]).sum();
                assert!((col - 1.0).abs() < 1e-12);
                assert!((0..n).all(|r| (0.0..=1.0).contains(&m[r * n + c])));
            }
        }
    }

    #[test]
    fn return_probability_values() {
        assert_eq!(return_probabilities(&c3(), 0).unwrap(), vec![1.0; 3]);
        let one = return_probabilities(&c3(), 1).unwrap();
        for p in one {
            assert!((p - 2.0 / 3.0).abs() < 1e-15);
        }
        // Acyclic walks never return: the diagonal is the stay probability.
        let t = tt(4);
        let gtot = t.g() as f64;
        for j in 0..=6 {
            let rp = return_probabilities(&t, j).unwrap();
            for (k, p) in rp.iter().enumerate() {
                let stay = 1.0 - t.out_degree(k) as f64 / gtot;
                assert!((p - stay.powi(j as i32)).abs() < 1e-12, "j={j} k={k}");
            }
        }
    }

    #[test]
    fn eigen_route_closed_forms() {
        let k2 = Digraph::undirected(2, &[(0, 1)]).unwrap();
        assert!(von_neumann_eigen(&k2).unwrap().abs() < 1e-12);

        let p3 = Digraph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        let expect = 2.0 - 0.75 * 3f64.log2();
        assert!((von_neumann_eigen(&p3).unwrap() - expect).abs() < 1e-10);

        let tt3 = tt(3);
        let expect = (1.0 / 3.0) * 3f64.log2() + (2.0 / 3.0) * 1.5f64.log2();
        assert!((von_neumann_eigen(&tt3).unwrap() - expect).abs() < 1e-10);

        assert!(matches!(
            von_neumann_eigen(&c3()),
            Err(Error::NonRealSpectrum(_))
        ));
    }

    #[test]
    fn series_matches_eigen_and_tolerates_truncation() {
        let p3 = Digraph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        let eigen = von_neumann_eigen(&p3).unwrap();
        let series = von_neumann_series(&p3, 1e-6).unwrap();
        assert!((series - eigen).abs() < 1e-6 + 1e-9, "{series} vs {eigen}");

        let k2 = Digraph::undirected(2, &[(0, 1)]).unwrap();
        assert!(von_neumann_series(&k2, 1e-8).unwrap().abs() < 1e-8);

        let tt3 = tt(3);
        let eigen = von_neumann_eigen(&tt3).unwrap();
        let series = von_neumann_series(&tt3, 1e-8).unwrap();
        assert!((series - eigen).abs() < 1e-8);

        let coarse = von_neumann_series(&c3(), 1e-3).unwrap();
        let fine = von_neumann_series(&c3(), 1e-6).unwrap();
        assert!((coarse - fine).abs() < 2e-3);
        assert!(von_neumann_series(&c3(), 0.0).is_err());
    }

    #[test]
    fn complex_route_extends_the_real_one() {
        // Real spectra: the complex form reduces to the eigen form.
        let p3 = Digraph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        let real = von_neumann_eigen(&p3).unwrap();
        let complex = von_neumann_complex(&p3).unwrap();
        assert!((complex - real).abs() < 1e-12, "{complex} vs {real}");
        let tt4 = tt(4);
        let real = von_neumann_eigen(&tt4).unwrap();
        let complex = von_neumann_complex(&tt4).unwrap();
        assert!((complex - real).abs() < 1e-12);

        // Non-real spectra: the eigen form refuses, the complex form must
        // still agree with the series.
        for g in [
            c3(),
            Digraph::from_tournament(&Tournament::consecutive_rotational(5).unwrap()),
            Digraph::from_tournament(&Tournament::quadratic_residue_tournament(7).unwrap()),
        ] {
            assert!(matches!(von_neumann_eigen(&g), Err(Error::NonRealSpectrum(_))));
            let series = von_neumann_series(&g, 1e-9).unwrap();
            let complex = von_neumann_complex(&g).unwrap();
            assert!((series - complex).abs() < 1e-10, "{series} vs {complex}");
        }
    }

    #[test]
    fn acyclic_series_equals_degree_bound() {
        for n in 3..=6 {
            let t = tt(n);
            let bounds = entropy_upper_bounds(&t).unwrap();
            assert!(bounds.is_acyclic);
            let series = von_neumann_series(&t, 1e-7).unwrap();
            assert!(
                (series - bounds.degree_bound).abs() < 1e-9,
                "n={n}: {series} vs {}",
                bounds.degree_bound
            );
        }
    }

    #[test]
    fn bounds_are_bounds() {
        let g = c3();
        let bounds = entropy_upper_bounds(&g).unwrap();
        assert!(!bounds.is_acyclic);
        let series = von_neumann_series(&g, 1e-7).unwrap();
        assert!(series < bounds.degree_bound);
        assert!(series < bounds.log_bound);
        assert!((bounds.log_bound - 3f64.log2()).abs() < 1e-15);
    }

    #[test]
    fn walk_is_reproducible_and_unbiased() {
        let config = WalkConfig {
            trials: 200_000,
            max_length: 4000,
            seed: 42,
        };
        let est1 = von_neumann_walk(&c3(), &config, 1e-3).unwrap();
        let est2 = von_neumann_walk(&c3(), &config, 1e-3).unwrap();
        assert_eq!(est1.estimate, est2.estimate);
        assert_eq!(est1.stderr, est2.stderr);
        assert!(est1.stderr > 0.0);

        let series = von_neumann_series(&c3(), 1e-9).unwrap();
        assert!(
            (est1.estimate - series).abs() <= 3.0 * est1.stderr,
            "{} vs {series} (sigma {})",
            est1.estimate,
            est1.stderr
        );

        let single = WalkConfig {
            trials: 1,
            max_length: 50,
            seed: 7,
        };
        let a = von_neumann_walk(&c3(), &single, 1e-1).unwrap();
        let b = von_neumann_walk(&c3(), &single, 1e-1).unwrap();
        assert_eq!(a.estimate, b.estimate);
    }

    #[test]
    fn walk_matches_acyclic_bound() {
        let t = tt(4);
        let bound = entropy_upper_bounds(&t).unwrap().degree_bound;
        let config = WalkConfig {
            trials: 200_000,
            max_length: 4000,
            seed: 5,
        };
        let est = von_neumann_walk(&t, &config, 1e-3).unwrap();
        assert!(
            (est.estimate - bound).abs() <= 3.0 * est.stderr + 4.0 / 4000.0,
            "{} vs {bound} (sigma {})",
            est.estimate,
            est.stderr
        );
    }

    #[test]
    fn empirical_return_rates_match_traces() {
        use rand::SeedableRng;
        let mut seed_rng = ChaCha8Rng::seed_from_u64(99);
        for case in 0..3 {
            let t = Tournament::random(4, &mut seed_rng).unwrap();
            let d = Digraph::from_tournament(&t);
            let g = d.g() as u64;
            let trials = 40_000usize;
            let jmax = 10usize;
            let mut counts = vec![0u64; jmax + 1];
            for trial in 0..trials {
                let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(1000 + trial as u64));
                let start = trial % 4;
                let mut v = start;
                for j in 1..=jmax {
                    let x = rng.gen_range(0..g) as usize;
                    if x < d.out_degree(v) {
                        v = d.out_neighbors(v)[x];
                    }
                    if v == start {
                        counts[j] += 1;
                    }
                }
            }
            for j in 2..=jmax {
                let tr: f64 = return_probabilities(&d, j).unwrap().iter().sum();
                let emp = 4.0 * counts[j] as f64 / trials as f64;
                let sigma = 4.0 * (0.25 / trials as f64).sqrt();
                assert!(
                    (tr - emp).abs() < 5.0 * sigma,
                    "case={case} j={j}: {tr} vs {emp}"
                );
            }
        }
    }

    #[test]
    fn walk_config_validation() {
        let bad = WalkConfig {
            trials: 0,
            ..WalkConfig::default()
        };
        assert!(von_neumann_walk(&c3(), &bad, 1e-2).is_err());
        let bad = WalkConfig {
            max_length: 1,
            ..WalkConfig::default()
        };
        assert!(von_neumann_walk(&c3(), &bad, 1e-2).is_err());
        let arcless = Digraph::new(3, &[]).unwrap();
        assert!(von_neumann_walk(&arcless, &WalkConfig::default(), 1e-2).is_err());
        assert!(entropy_upper_bounds(&arcless).is_err());
    }
}
