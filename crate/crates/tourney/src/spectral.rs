//! Exact characteristic polynomials of Laplacians and their complex roots.
//!
//! The combinatorial side stays exact: Laplacians are integer matrices,
//! characteristic polynomials come from the Faddeev–LeVerrier recurrence in
//! arbitrary precision, and multiple roots are separated by an exact
//! square-free factorization (Yun's algorithm over rationals) before any
//! floating point is touched. The Aberth–Ehrlich iteration then only ever
//! sees simple roots, so it converges quadratically and the closed-form
//! spectra of doubly regular tournaments are reproduced to near machine
//! precision despite their multiplicity-(n-1)/2 eigenvalues.

use num::complex::Complex64;
use num::{BigInt, BigRational, Integer, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Default residual tolerance for root finding.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Dense square matrix with exact integer entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    a: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            a: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.a[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::Dimension(row.len(), n));
            }
            a.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(Self { n, a })
    }

    /// Laplacian `D - A` of the digraph with the given arcs: out-degrees on
    /// the diagonal, `-1` at `(i, j)` per arc `i -> j`. Zero row sums.
    pub fn laplacian_of_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut m = Self::zero(n);
        for (u, v) in arcs {
            debug_assert!(u != v && u < n && v < n);
            m.a[u * n + u] += 1;
            m.a[u * n + v] -= 1;
        }
        m
    }

    /// Laplacian of a tournament; trace is `C(n,2)`.
    pub fn laplacian(t: &Tournament) -> Self {
        let n = t.n();
        Self::laplacian_of_arcs(n, (0..n).flat_map(|u| t.out_neighbors(u).map(move |v| (u, v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.n + j]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self.a[i * self.n + i]).sum()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension(self.n, other.n));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = &self.a[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.a[k * n + j];
                    if !b.is_zero() {
                        out.a[i * n + j] += aik * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn add_scaled_identity(&mut self, c: &BigInt) {
        for i in 0..self.n {
            self.a[i * self.n + i] += c;
        }
    }
}

/// `1 / tr(L)`, the factor scaling a Laplacian to unit trace.
pub fn normalization_constant(laplacian: &IntMatrix) -> Result<BigRational> {
    let tr = laplacian.trace();
    if tr <= BigInt::zero() {
        return Err(Error::ZeroTrace);
    }
    Ok(BigRational::new(BigInt::one(), tr))
}

/// Monic characteristic polynomial `det(lambda I - M)` with exact integer
/// coefficients, ascending by degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `lambda^k`.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().expect("coefficient fits f64"), 0.0);
        }
        acc
    }
}

/// Faddeev–LeVerrier recurrence; every division is exact in integers.
pub fn char_poly(m: &IntMatrix) -> CharPoly {
    let n = m.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return CharPoly { coeffs };
    }
    let mut mk = m.clone();
    coeffs[n - 1] = -mk.trace();
    for k in 2..=n {
        mk.add_scaled_identity(&coeffs[n - k + 1]);
        mk = m.mul(&mk).expect("square");
        let tr = mk.trace();
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division is exact");
        coeffs[n - k] = -q;
    }
    CharPoly { coeffs }
}

/// A multiset of complex eigenvalues plus the residual tolerance they were
/// verified against. Non-real members occur in exactly conjugate pairs.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<Complex64>,
    residual_tol: f64,
}

impl Spectrum {
    fn new(mut eigenvalues: Vec<Complex64>, residual_tol: f64) -> Self {
        eigenvalues.sort_by(|a, b| {
            (a.re, a.im)
                .partial_cmp(&(b.re, b.im))
                .expect("finite eigenvalues")
        });
        Self {
            eigenvalues,
            residual_tol,
        }
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn residual_tol(&self) -> f64 {
        self.residual_tol
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn sum(&self) -> Complex64 {
        self.eigenvalues.iter().sum()
    }

    /// `sum lambda^alpha` with the principal branch (`0^alpha = 0`).
    pub fn complex_power_sum(&self, alpha: f64) -> Complex64 {
        self.eigenvalues
            .iter()
            .map(|z| {
                if z.norm() == 0.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    z.powf(alpha)
                }
            })
            .sum()
    }

    /// `sum |lambda|^alpha`, the natural scale of the power sum.
    pub fn modulus_power_sum(&self, alpha: f64) -> f64 {
        self.eigenvalues.iter().map(|z| z.norm().powf(alpha)).sum()
    }

    /// Every eigenvalue multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            eigenvalues: self.eigenvalues.iter().map(|z| z * factor).collect(),
            residual_tol: self.residual_tol,
        }
    }

    /// Largest |Im| over the multiset.
    pub fn max_imag(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }
}

/// All complex roots of `p` with multiplicity.
///
/// Multiplicities come from the exact square-free factorization, the known
/// root 0 is deflated exactly, and each numeric root is verified against
/// `|p(root)| <= tol * max|coeff| * max(1,|root|)^deg`.
pub fn roots(p: &CharPoly, tol: f64) -> Result<Spectrum> {
    let deg = p.degree();
    if deg == 0 {
        return Err(Error::Empty("polynomial of degree zero has no roots"));
    }
    let rational: Vec<BigRational> = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    let mut all = Vec::with_capacity(deg);
    for (factor, multiplicity) in squarefree_factors(&RatPoly::new(rational)) {
        let mut simple = aberth_roots(&factor)?;
        pair_conjugates(&mut simple)?;
        for z in simple {
            for _ in 0..multiplicity {
                all.push(z);
            }
        }
    }
    if all.len() != deg {
        return Err(Error::NonConvergence(format!(
            "square-free factorization produced {} roots for degree {}",
            all.len(),
            deg
        )));
    }
    let scale: f64 = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().expect("coefficient fits f64").abs())
        .fold(0.0, f64::max);
    for &z in &all {
        let residual = p.eval_complex(z).norm();
        let bound = tol * scale * z.norm().max(1.0).powi(deg as i32);
        if residual > bound {
            return Err(Error::NonConvergence(format!(
                "root {z} has residual {residual:.3e} > {bound:.3e}"
            )));
        }
    }
    Ok(Spectrum::new(all, tol))
}

/// Spectrum of the trace-normalized matrix: roots of the characteristic
/// polynomial of `m`, scaled by `1/tr(m)`.
pub fn normalized_spectrum(m: &IntMatrix, tol: f64) -> Result<Spectrum> {
    let tr = m.trace();
    if tr <= BigInt::zero() {
        return Err(Error::ZeroTrace);
    }
    let spec = roots(&char_poly(m), tol)?;
    Ok(spec.scaled(1.0 / tr.to_f64().expect("trace fits f64")))
}

/// Closed-form normalized Laplacian spectrum of a doubly regular
/// tournament: `{0} ∪ {(1 ± i/sqrt(n))/(n-1), each (n-1)/2 times}`.
pub fn doubly_regular_spectrum(n: usize) -> Result<Spectrum> {
    if n % 4 != 3 {
        return Err(Error::NotDoublyRegularOrder(n));
    }
    let m = (n - 1) / 2;
    let re = 1.0 / (n as f64 - 1.0);
    let im = re / (n as f64).sqrt();
    let mut eigenvalues = vec![Complex64::new(0.0, 0.0)];
    for _ in 0..m {
        eigenvalues.push(Complex64::new(re, im));
        eigenvalues.push(Complex64::new(re, -im));
    }
    Ok(Spectrum::new(eigenvalues, DEFAULT_TOL))
}

/// `sum lambda^k` over the normalized spectrum of `laplacian`, computed
/// exactly as `tr(L^k) / tr(L)^k` by integer matrix powers. This is the
/// brute-force oracle the combinatorial power sums are checked against.
pub fn power_sum_trace(laplacian: &IntMatrix, k: u32) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::BadAlpha(0.0, "power sums need k >= 1"));
    }
    let tr = laplacian.trace();
    if tr <= BigInt::zero() {
        return Err(Error::ZeroTrace);
    }
    let mut power = laplacian.clone();
    for _ in 1..k {
        power = power.mul(laplacian)?;
    }
    Ok(BigRational::new(power.trace(), tr.pow(k)))
}

// ---------------------------------------------------------------------------
// Exact polynomial arithmetic over the rationals.

#[derive(Clone, Debug, PartialEq)]
struct RatPoly {
    /// Ascending coefficients; no trailing zeros unless the zero polynomial.
    c: Vec<BigRational>,
}

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.len() > 1 && c.last().map_or(false, Zero::is_zero) {
            c.pop();
        }
        Self { c }
    }

    fn zero() -> Self {
        Self {
            c: vec![BigRational::zero()],
        }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn degree(&self) -> usize {
        self.c.len() - 1
    }

    fn lead(&self) -> &BigRational {
        self.c.last().expect("nonempty")
    }

    fn monic(&self) -> Self {
        let l = self.lead();
        if l.is_zero() || l.is_one() {
            return self.clone();
        }
        Self::new(self.c.iter().map(|x| x / l).collect())
    }

    fn derivative(&self) -> Self {
        if self.c.len() == 1 {
            return Self::zero();
        }
        Self::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, x)| x * BigRational::from(BigInt::from(i as i64 + 1)))
                .collect(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.c.len().max(other.c.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, x) in self.c.iter().enumerate() {
            out[i] += x;
        }
        for (i, x) in other.c.iter().enumerate() {
            out[i] -= x;
        }
        Self::new(out)
    }

    /// Quotient and remainder; divisor must be nonzero.
    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree();
        if self.degree() < dd || self.is_zero() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.c.clone();
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / divisor.lead();
            if !q.is_zero() {
                for (i, d) in divisor.c.iter().enumerate() {
                    let prod = &q * d;
                    rem[k + i] -= prod;
                }
            }
            quot[k] = q;
        }
        (Self::new(quot), Self::new(rem))
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "exact polynomial division");
        q
    }
}

/// Monic gcd by the Euclidean algorithm; gcd with zero is the other input.
fn poly_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// Yun's square-free factorization: pairs `(factor, multiplicity)` with
/// distinct monic square-free factors whose powers multiply to `p/lead`.
fn squarefree_factors(p: &RatPoly) -> Vec<(RatPoly, usize)> {
    let p = p.monic();
    if p.degree() == 0 {
        return Vec::new();
    }
    let dp = p.derivative();
    let g = poly_gcd(&p, &dp);
    if g.degree() == 0 {
        return vec![(p, 1)];
    }
    let mut out = Vec::new();
    let mut w = p.div_exact(&g);
    let y = dp.div_exact(&g);
    let mut z = y.sub(&w.derivative());
    let mut i = 1usize;
    while w.degree() > 0 {
        let h = poly_gcd(&w, &z);
        if h.degree() > 0 {
            out.push((h.clone(), i));
        }
        w = w.div_exact(&h);
        let y = z.div_exact(&h);
        z = y.sub(&w.derivative());
        i += 1;
        assert!(i <= p.degree() + 1, "square-free decomposition stalled");
    }
    debug_assert_eq!(
        out.iter().map(|(f, m)| f.degree() * m).sum::<usize>(),
        p.degree()
    );
    out
}

// ---------------------------------------------------------------------------
// Aberth–Ehrlich simultaneous iteration on a square-free factor.

const ABERTH_CAP: usize = 500;

fn aberth_roots(factor: &RatPoly) -> Result<Vec<Complex64>> {
    let mut coeffs: Vec<f64> = factor
        .c
        .iter()
        .map(|x| x.to_f64().ok_or_else(|| Error::NonConvergence("coefficient overflow".into())))
        .collect::<Result<_>>()?;
    // Deflate known roots at zero exactly (trailing zero coefficients).
    let mut zeros = 0usize;
    while coeffs.len() > 1 && coeffs[0] == 0.0 {
        coeffs.remove(0);
        zeros += 1;
    }
    debug_assert!(zeros <= 1, "square-free factor has at most one zero root");
    let deg = coeffs.len() - 1;
    let mut out = vec![Complex64::new(0.0, 0.0); zeros];
    if deg == 0 {
        return Ok(out);
    }
    // Initial guesses on a circle inside the Cauchy root bound, offset to
    // break conjugate symmetry.
    let lead = coeffs[deg];
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.41;
            Complex64::from_polar(radius * 0.8, theta)
        })
        .collect();
    // Evaluates p, p', and the modulus sum sum |c_k| |x|^k whose rounding
    // noise floors how small |p(x)| can meaningfully get in f64.
    let eval = |x: Complex64| -> (Complex64, Complex64, f64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        let mut s = 0.0f64;
        let ax = x.norm();
        for c in coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
            s = s * ax + c.abs();
        }
        (p, dp, s)
    };
    for _ in 0..ABERTH_CAP {
        let mut done = true;
        for i in 0..deg {
            let (p, dp, scale) = eval(z[i]);
            // At the evaluation noise floor the root cannot improve further.
            if p.norm() <= 4.0 * f64::EPSILON * scale {
                continue;
            }
            let w = if dp.norm() == 0.0 {
                Complex64::new(1e-8, 1e-8)
            } else {
                p / dp
            };
            let mut repulse = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    repulse += (z[i] - z[j]).finv();
                }
            }
            let delta = w / (Complex64::new(1.0, 0.0) - w * repulse);
            z[i] -= delta;
            if delta.norm() > 1e-13 * (1.0 + z[i].norm()) {
                done = false;
            }
        }
        if done {
            out.extend_from_slice(&z);
            return Ok(out);
        }
    }
    Err(Error::NonConvergence(format!(
        "Aberth iteration cap {ABERTH_CAP} reached on degree {deg} factor"
    )))
}

/// Rewrites near-conjugate pairs as exact conjugates and flattens noise
/// imaginary parts on real roots. Errors if the multiset cannot be paired.
fn pair_conjugates(roots: &mut [Complex64]) -> Result<()> {
    let tau = |z: &Complex64| 1e-9 * (1.0 + z.norm());
    let mut pos: Vec<usize> = Vec::new();
    let mut neg: Vec<usize> = Vec::new();
    for (i, z) in roots.iter_mut().enumerate() {
        if z.im.abs() <= tau(z) {
            z.im = 0.0;
        } else if z.im > 0.0 {
            pos.push(i);
        } else {
            neg.push(i);
        }
    }
    if pos.len() != neg.len() {
        return Err(Error::NonConvergence(
            "unpaired complex roots of a real polynomial".into(),
        ));
    }
    // Greedy nearest matching: sorting by coordinates is fragile when two
    // pairs share a real part up to solver noise.
    for &a in &pos {
        let z = roots[a];
        let (slot, &b) = neg
            .iter()
            .enumerate()
            .min_by(|(_, &x), (_, &y)| {
                let dx = (z - roots[x].conj()).norm();
                let dy = (z - roots[y].conj()).norm();
                dx.partial_cmp(&dy).expect("finite")
            })
            .expect("pos and neg have equal length");
        let w = roots[b];
        if (z - w.conj()).norm() > 1e-6 * (1.0 + z.norm()) {
            return Err(Error::NonConvergence(format!(
                "roots {z} and {w} do not pair as conjugates"
            )));
        }
        let mean = (z + w.conj()) / 2.0;
        roots[a] = mean;
        roots[b] = mean.conj();
        neg.swap_remove(slot);
    }
    Ok(())
}
