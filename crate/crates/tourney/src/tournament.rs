//! Tournament representation, construction, predicates, and counting.
//!
//! A tournament on `n` vertices stores one orientation bit per unordered
//! pair. The packed form used for serialization and canonical forms is
//! row-major over pairs `i < j` in the order (0,1), (0,2), ..., (n-2,n-1);
//! bit `k` of the packed integer is pair number `k`, set iff `i -> j`.
//! That layout is stable: serialized forms and canonical byte strings may
//! be persisted and compared across runs.

use std::fmt;

use num::{BigInt, BigRational};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::canon;
use crate::error::{Error, Result};

/// Largest supported vertex count: out-neighborhoods fit in `u16` and the
/// packed pair bits fit in `u128` (C(16,2) = 120).
pub const MAX_N: usize = 16;

/// A tournament: an orientation of the complete graph on `n` vertices.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tournament {
    n: u8,
    /// `rows[v]` is the out-neighborhood of `v` as a bitmask.
    /// Invariant: for u != v exactly one of `rows[u]` bit v, `rows[v]` bit u
    /// is set; diagonal bits clear; bits at index >= n clear.
    rows: [u16; MAX_N],
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::VertexCount(n, MAX_N));
    }
    Ok(())
}

/// Index of pair `{i, j}`, `i < j`, in the row-major pair order.
fn pair_index(i: usize, j: usize, n: usize) -> u32 {
    debug_assert!(i < j && j < n);
    (i * (2 * n - i - 1) / 2 + (j - i - 1)) as u32
}

pub(crate) fn pair_count(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

impl Tournament {
    /// Builds a tournament from an explicit arc list covering every
    /// unordered pair exactly once.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        check_n(n)?;
        let mut rows = [0u16; MAX_N];
        let mut seen = [0u16; MAX_N];
        for &(u, v) in arcs {
            if u == v {
                return Err(Error::Loop(u));
            }
            if u >= n {
                return Err(Error::VertexRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexRange(v, n));
            }
            let (a, b) = (u.min(v), u.max(v));
            if seen[a] & (1 << b) != 0 {
                return Err(Error::DuplicatePair(a, b));
            }
            seen[a] |= 1 << b;
            rows[u] |= 1 << v;
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if seen[a] & (1 << b) == 0 {
                    return Err(Error::MissingPair(a, b));
                }
            }
        }
        Ok(Self { n: n as u8, rows })
    }

    /// Builds a tournament from packed pair bits (bit `k` = pair `k` in the
    /// row-major order, set iff the lower-indexed endpoint wins).
    /// Assembles a tournament from prebuilt adjacency rows. The caller
    /// guarantees exactly one arc per pair and no bits at or above `n`.
    pub(crate) fn from_rows_unchecked(n: u8, rows: [u16; MAX_N]) -> Self {
        debug_assert!((0..n as usize).all(|i| {
            (0..n as usize).all(|j| {
                if i == j {
                    rows[i] >> j & 1 == 0
                } else {
                    (rows[i] >> j & 1) ^ (rows[j] >> i & 1) == 1
                }
            })
        }));
        Self { n, rows }
    }

    pub fn from_bits(n: usize, bits: u128) -> Result<Self> {
        check_n(n)?;
        let pairs = pair_count(n);
        if pairs < 128 && bits >> pairs != 0 {
            return Err(Error::Parse(format!(
                "bits 0x{bits:x} exceed the {pairs} pairs of an {n}-tournament"
            )));
        }
        let mut rows = [0u16; MAX_N];
        for i in 0..n {
            for j in (i + 1)..n {
                if bits >> pair_index(i, j, n) & 1 == 1 {
                    rows[i] |= 1 << j;
                } else {
                    rows[j] |= 1 << i;
                }
            }
        }
        Ok(Self { n: n as u8, rows })
    }

    /// The transitive tournament: `v_i -> v_j` iff `i > j`, scores (0,...,n-1).
    pub fn transitive(n: usize) -> Result<Self> {
        check_n(n)?;
        let mut rows = [0u16; MAX_N];
        for i in 0..n {
            rows[i] = (1u16 << i) - 1;
        }
        Ok(Self { n: n as u8, rows })
    }

    /// The rotational tournament of the symbol: `i -> j` iff
    /// `(j - i) mod n` is a member. Always regular.
    pub fn rotational(symbol: &RotationalSymbol) -> Self {
        let n = symbol.n();
        let mut rows = [0u16; MAX_N];
        for i in 0..n {
            for &d in symbol.members() {
                rows[i] |= 1 << ((i + d) % n);
            }
        }
        Self { n: n as u8, rows }
    }

    /// The rotational tournament with symbol {1, ..., (n-1)/2}.
    pub fn consecutive_rotational(n: usize) -> Result<Self> {
        let members: Vec<usize> = (1..=n.saturating_sub(1) / 2).collect();
        Ok(Self::rotational(&RotationalSymbol::new(n, &members)?))
    }

    /// The rotational tournament whose symbol is the set of nonzero
    /// quadratic residues mod `p`, for prime `p = 3 (mod 4)`. Doubly regular.
    pub fn quadratic_residue_tournament(p: usize) -> Result<Self> {
        if p % 4 != 3 || !is_prime(p) {
            return Err(Error::NotQrPrime(p));
        }
        check_n(p)?;
        let mut members: Vec<usize> = (1..p).map(|i| i * i % p).collect();
        members.sort_unstable();
        members.dedup();
        Ok(Self::rotational(&RotationalSymbol::new(p, &members)?))
    }

    /// A uniformly random labeled tournament: each pair is a fair coin.
    pub fn random(n: usize, rng: &mut impl rand::Rng) -> Result<Self> {
        check_n(n)?;
        let pairs = pair_count(n);
        let mut bits = 0u128;
        for k in 0..pairs {
            if rng.gen::<bool>() {
                bits |= 1 << k;
            }
        }
        Self::from_bits(n, bits)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// True iff the arc `u -> v` is present.
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Out-neighborhood of `v` as a bitmask.
    pub fn out_mask(&self, v: usize) -> u16 {
        self.rows[v]
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.rows[v];
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(u)
            }
        })
    }

    /// Out-degrees indexed by vertex (unsorted).
    pub fn scores_by_vertex(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.out_degree(v)).collect()
    }

    /// Sorted out-degrees; always satisfies Landau's condition.
    pub fn score_sequence(&self) -> ScoreSequence {
        let mut s = self.scores_by_vertex();
        s.sort_unstable();
        debug_assert!(ScoreSequence::is_landau(&s));
        ScoreSequence { scores: s }
    }

    /// Packed pair bits in the stable row-major order.
    pub fn bits(&self) -> u128 {
        let n = self.n();
        let mut bits = 0u128;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.beats(i, j) {
                    bits |= 1 << pair_index(i, j, n);
                }
            }
        }
        bits
    }

    /// The tournament with every arc reversed.
    pub fn converse(&self) -> Self {
        let n = self.n();
        let mut rows = [0u16; MAX_N];
        for u in 0..n {
            for v in 0..n {
                if u != v && !self.beats(u, v) {
                    rows[u] |= 1 << v;
                }
            }
        }
        Self { n: self.n, rows }
    }

    /// Reverses the single arc between `u` and `v`.
    pub fn reverse_arc(&self, u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::Loop(u));
        }
        let n = self.n();
        if u >= n {
            return Err(Error::VertexRange(u, n));
        }
        if v >= n {
            return Err(Error::VertexRange(v, n));
        }
        let (w, l) = if self.beats(u, v) { (u, v) } else { (v, u) };
        let mut rows = self.rows;
        rows[w] &= !(1 << l);
        rows[l] |= 1 << w;
        Ok(Self { n: self.n, rows })
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::Parse("permutation length mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n {
                return Err(Error::VertexRange(p, n));
            }
            if seen[p] {
                return Err(Error::DuplicateVertex(p));
            }
            seen[p] = true;
        }
        let mut rows = [0u16; MAX_N];
        for u in 0..n {
            for v in self.out_neighbors(u) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Self { n: self.n, rows })
    }

    /// The subtournament induced by the listed vertices, relabeled 0..k in
    /// list order.
    pub fn induced_subtournament(&self, verts: &[usize]) -> Result<Self> {
        let n = self.n();
        let k = verts.len();
        if k == 0 {
            return Err(Error::Empty("vertex subset"));
        }
        let mut seen = [false; MAX_N];
        for &v in verts {
            if v >= n {
                return Err(Error::VertexRange(v, n));
            }
            if seen[v] {
                return Err(Error::DuplicateVertex(v));
            }
            seen[v] = true;
        }
        let mut rows = [0u16; MAX_N];
        for a in 0..k {
            for b in 0..k {
                if a != b && self.beats(verts[a], verts[b]) {
                    rows[a] |= 1 << b;
                }
            }
        }
        Ok(Self { n: k as u8, rows })
    }

    /// Number of 3-element subsets inducing the 3-cycle, via
    /// `C(n,3) - sum C(s_i, 2)`.
    pub fn count_3cycles(&self) -> u64 {
        let n = self.n() as u64;
        let transitive_triples: u64 = (0..self.n())
            .map(|v| {
                let d = self.out_degree(v) as u64;
                d * d.saturating_sub(1) / 2
            })
            .sum();
        n * n.saturating_sub(1) * n.saturating_sub(2) / 6 - transitive_triples
    }

    /// Counts of the four 4-vertex subtournament types, classified by the
    /// induced score sequence (type is score-determined at n = 4).
    pub fn count_c4_t4(&self) -> Result<FourCounts> {
        let n = self.n();
        if n < 4 {
            return Err(Error::VertexCount(n, MAX_N));
        }
        let mut counts = FourCounts::default();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        let mask = (1u16 << a) | (1 << b) | (1 << c) | (1 << d);
                        let mut s = [0u8; 4];
                        for (idx, v) in [a, b, c, d].into_iter().enumerate() {
                            s[idx] = (self.rows[v] & mask).count_ones() as u8;
                        }
                        s.sort_unstable();
                        match s {
                            [1, 1, 2, 2] => counts.c4 += 1,
                            [0, 1, 2, 3] => counts.t4 += 1,
                            [1, 1, 1, 3] => counts.to4 += 1,
                            [0, 2, 2, 2] => counts.tk4 += 1,
                            _ => unreachable!("4-tournament score sequence"),
                        }
                    }
                }
            }
        }
        Ok(counts)
    }

    pub fn is_regular(&self) -> bool {
        let n = self.n();
        n % 2 == 1 && (0..n).all(|v| self.out_degree(v) == (n - 1) / 2)
    }

    pub fn is_nearly_regular(&self) -> bool {
        let n = self.n();
        if n % 2 != 0 {
            return false;
        }
        let low = (0..n).filter(|&v| self.out_degree(v) == n / 2 - 1).count();
        let high = (0..n).filter(|&v| self.out_degree(v) == n / 2).count();
        low == n / 2 && high == n / 2
    }

    pub fn is_transitive(&self) -> bool {
        self.count_3cycles() == 0
    }

    /// Regular with `|N+(x) ∩ N+(y)| = k` for every pair, where `n = 4k+3`.
    pub fn is_doubly_regular(&self) -> bool {
        let n = self.n();
        if n % 4 != 3 || !self.is_regular() {
            return false;
        }
        let k = ((n - 3) / 4) as u32;
        self.pair_outset_intersections()
            .all(|common| common == k)
    }

    /// Regular with `n = 4k+1` and every pair intersection in {k-1, k}.
    /// For n = 1 the condition is vacuous.
    pub fn is_quasi_doubly_regular(&self) -> bool {
        let n = self.n();
        if n % 4 != 1 || !self.is_regular() {
            return false;
        }
        let k = ((n - 1) / 4) as u32;
        self.pair_outset_intersections()
            .all(|common| common + 1 == k || common == k)
    }

    fn pair_outset_intersections(&self) -> impl Iterator<Item = u32> + '_ {
        let n = self.n();
        (0..n).flat_map(move |x| {
            ((x + 1)..n).map(move |y| (self.rows[x] & self.rows[y]).count_ones())
        })
    }

    /// Landau's hierarchy score `(12/(n^3-n)) * sum (s_i - (n-1)/2)^2`,
    /// exact. An affine image of the degree power sum, so it orders
    /// tournaments of equal `n` exactly as `H_2` in reverse.
    pub fn hierarchy(&self) -> Result<BigRational> {
        let n = self.n();
        if n < 2 {
            return Err(Error::VertexCount(n, MAX_N));
        }
        // sum (s - (n-1)/2)^2 = sum (2s - n + 1)^2 / 4
        let num: i64 = (0..n)
            .map(|v| {
                let t = 2 * self.out_degree(v) as i64 - n as i64 + 1;
                t * t
            })
            .sum();
        let n = n as i64;
        Ok(BigRational::new(
            BigInt::from(3 * num),
            BigInt::from(n * n * n - n),
        ))
    }

    /// Canonical byte string: equal iff tournaments are isomorphic.
    pub fn canonical_form(&self) -> CanonicalForm {
        CanonicalForm {
            n: self.n,
            bits: canon::canonical_bits(self),
        }
    }

    /// The canonically labeled representative of the isomorphism class.
    pub fn canonicalize(&self) -> Self {
        let form = self.canonical_form();
        Self::from_bits(form.n as usize, form.bits).expect("canonical bits round-trip")
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }

    /// Stable one-line text form, e.g. `n=4 bits=2b`.
    pub fn to_text(&self) -> String {
        let width = (pair_count(self.n()) as usize).div_ceil(4).max(1);
        format!("n={} bits={:0width$x}", self.n, self.bits())
    }

    /// Parses the `to_text` form.
    pub fn from_text(line: &str) -> Result<Self> {
        let mut n = None;
        let mut bits = None;
        for field in line.split_whitespace() {
            if let Some(v) = field.strip_prefix("n=") {
                n = Some(
                    v.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad n: {e}")))?,
                );
            } else if let Some(v) = field.strip_prefix("bits=") {
                bits = Some(
                    u128::from_str_radix(v, 16)
                        .map_err(|e| Error::Parse(format!("bad bits: {e}")))?,
                );
            } else {
                return Err(Error::Parse(format!("unexpected field {field:?}")));
            }
        }
        match (n, bits) {
            (Some(n), Some(bits)) => Self::from_bits(n, bits),
            _ => Err(Error::Parse("expected `n=<n> bits=<hex>`".into())),
        }
    }

    /// Arc list sorted by unordered pair, each pair oriented as stored.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut arcs = Vec::with_capacity(pair_count(n) as usize);
        for i in 0..n {
            for j in (i + 1)..n {
                arcs.push(if self.beats(i, j) { (i, j) } else { (j, i) });
            }
        }
        arcs
    }

    /// 0/1 adjacency matrix, row-major.
    pub fn adjacency(&self) -> Vec<i64> {
        let n = self.n();
        let mut a = vec![0i64; n * n];
        for u in 0..n {
            for v in self.out_neighbors(u) {
                a[u * n + v] = 1;
            }
        }
        a
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({})", self.to_text())
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct TournamentRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for Tournament {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TournamentRepr {
            n: self.n(),
            arcs: self.arcs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tournament {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TournamentRepr::deserialize(deserializer)?;
        Tournament::from_arcs(repr.n, &repr.arcs).map_err(D::Error::custom)
    }
}

/// Canonical form of a tournament: `n` plus the packed bits of the least
/// labeling found by the refinement search.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// 17-byte stable encoding: n then little-endian bits.
    pub fn bytes(&self) -> [u8; 17] {
        let mut out = [0u8; 17];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.bits.to_le_bytes());
        out
    }
}

/// Counts of the four 4-tournament types among the 4-subsets: the strong
/// type (score sequence (1,1,2,2)), the transitive type (0,1,2,3), the
/// one-beats-cycle type (1,1,1,3), and the cycle-beats-one type (0,2,2,2).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct FourCounts {
    pub c4: u64,
    pub t4: u64,
    pub to4: u64,
    pub tk4: u64,
}

impl FourCounts {
    pub fn total(&self) -> u64 {
        self.c4 + self.t4 + self.to4 + self.tk4
    }
}

/// A sorted tournament score sequence satisfying Landau's condition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ScoreSequence {
    scores: Vec<usize>,
}

impl ScoreSequence {
    /// Validates a nondecreasing list against Landau's condition
    /// (prefix sums at least C(k,2), equality at k = n).
    pub fn new(scores: Vec<usize>) -> Result<Self> {
        if scores.is_empty() {
            return Err(Error::Empty("score sequence"));
        }
        if scores.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotScoreSequence(format!(
                "{scores:?} is not nondecreasing"
            )));
        }
        if !Self::is_landau(&scores) {
            return Err(Error::NotScoreSequence(format!(
                "{scores:?} violates Landau's condition"
            )));
        }
        Ok(Self { scores })
    }

    /// Landau's condition on a nondecreasing list.
    pub fn is_landau(scores: &[usize]) -> bool {
        let mut sum = 0usize;
        for (k, &s) in scores.iter().enumerate() {
            sum += s;
            if 2 * sum < k * (k + 1) {
                return false;
            }
        }
        let n = scores.len();
        2 * scores.iter().sum::<usize>() == n * (n - 1)
    }

    pub fn n(&self) -> usize {
        self.scores.len()
    }

    pub fn scores(&self) -> &[usize] {
        &self.scores
    }
}

/// Symbol of a rotational tournament: an odd modulus `n` and a set of
/// (n-1)/2 differences containing exactly one of `d`, `n-d` for each `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RotationalSymbol {
    n: usize,
    members: Vec<usize>,
}

impl RotationalSymbol {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        if n % 2 == 0 || n < 3 {
            return Err(Error::InvalidSymbol(format!("modulus {n} must be odd, >= 3")));
        }
        check_n(n)?;
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != members.len() {
            return Err(Error::InvalidSymbol("duplicate members".into()));
        }
        if sorted.len() != (n - 1) / 2 {
            return Err(Error::InvalidSymbol(format!(
                "need exactly {} members, got {}",
                (n - 1) / 2,
                sorted.len()
            )));
        }
        for &d in &sorted {
            if d == 0 || d >= n {
                return Err(Error::InvalidSymbol(format!("member {d} outside 1..{n}")));
            }
            if sorted.binary_search(&(n - d)).is_ok() {
                return Err(Error::InvalidSymbol(format!(
                    "both {d} and {} present",
                    n - d
                )));
            }
        }
        Ok(Self { n, members: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn c3() -> Tournament {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// The strong 4-tournament from the figure: a->b, b->c, b->d, a->c,
    /// c->d, d->a.
    pub(crate) fn ts4() -> Tournament {
        Tournament::from_arcs(4, &[(0, 1), (1, 2), (1, 3), (0, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn from_arcs_validates() {
        assert!(matches!(
            Tournament::from_arcs(3, &[(0, 1), (1, 2)]),
            Err(Error::MissingPair(0, 2))
        ));
        assert!(matches!(
            Tournament::from_arcs(3, &[(0, 1), (1, 0), (1, 2), (2, 0)]),
            Err(Error::DuplicatePair(0, 1))
        ));
        assert!(matches!(
            Tournament::from_arcs(2, &[(0, 0), (0, 1)]),
            Err(Error::Loop(0))
        ));
        assert!(matches!(
            Tournament::from_arcs(2, &[(0, 2), (0, 1)]),
            Err(Error::VertexRange(2, 2))
        ));
        let single = Tournament::from_arcs(1, &[]).unwrap();
        assert_eq!(single.n(), 1);
    }

    #[test]
    fn transitive_scores() {
        let t = Tournament::transitive(5).unwrap();
        assert_eq!(t.score_sequence().scores(), &[0, 1, 2, 3, 4]);
        assert!(t.is_transitive());
        assert!(t.beats(3, 1) && !t.beats(1, 3));
    }

    #[test]
    fn rotational_is_regular() {
        let sym = RotationalSymbol::new(7, &[1, 2, 4]).unwrap();
        let qr7 = Tournament::rotational(&sym);
        assert_eq!(qr7.score_sequence().scores(), &[3; 7]);
        assert!(qr7.is_regular());
        // i -> j iff (j - i) mod 7 in {1,2,4}
        assert!(qr7.beats(5, 2) && !qr7.beats(2, 5));
    }

    #[test]
    fn symbol_validation() {
        assert!(RotationalSymbol::new(6, &[1, 2]).is_err());
        assert!(RotationalSymbol::new(7, &[1, 2]).is_err());
        assert!(RotationalSymbol::new(7, &[1, 2, 5]).is_err());
        assert!(RotationalSymbol::new(7, &[0, 2, 4]).is_err());
        assert!(RotationalSymbol::new(7, &[1, 2, 4]).is_ok());
    }

    #[test]
    fn quadratic_residue_doubly_regular() {
        for p in [3usize, 7, 11] {
            let t = Tournament::quadratic_residue_tournament(p).unwrap();
            assert!(t.is_doubly_regular(), "QR_{p}");
        }
        assert!(Tournament::quadratic_residue_tournament(5).is_err());
        assert!(Tournament::quadratic_residue_tournament(9).is_err());
        assert!(Tournament::quadratic_residue_tournament(15).is_err());
    }

    #[test]
    fn qr11_pair_intersections_all_two() {
        let t = Tournament::quadratic_residue_tournament(11).unwrap();
        for x in 0..11 {
            for y in (x + 1)..11 {
                let common = (t.out_mask(x) & t.out_mask(y)).count_ones();
                assert_eq!(common, 2, "pair ({x},{y})");
            }
        }
    }

    #[test]
    fn predicates_on_small_cases() {
        assert!(c3().is_regular());
        assert!(c3().is_doubly_regular()); // k = 0 degenerate
        assert!(!c3().is_transitive());
        let tt4 = Tournament::transitive(4).unwrap();
        assert!(tt4.is_transitive());
        assert!(!tt4.is_regular());
        assert!(!tt4.is_nearly_regular());
        assert!(ts4().is_nearly_regular());
        let r5 = Tournament::consecutive_rotational(5).unwrap();
        assert!(r5.is_quasi_doubly_regular());
        assert!(!r5.is_doubly_regular());
    }

    #[test]
    fn count_3cycles_matches_brute_force() {
        let cases = [
            (c3(), 1),
            (ts4(), 2),
            (Tournament::transitive(6).unwrap(), 0),
            (Tournament::quadratic_residue_tournament(7).unwrap(), 14),
            (Tournament::consecutive_rotational(7).unwrap(), 14),
        ];
        for (t, expect) in cases {
            assert_eq!(t.count_3cycles(), expect, "{t}");
            assert_eq!(brute_force_3cycles(&t), expect, "{t} brute force");
        }
    }

    pub(crate) fn brute_force_3cycles(t: &Tournament) -> u64 {
        let n = t.n();
        let mut count = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let sub = t.induced_subtournament(&[a, b, c]).unwrap();
                    let cyclic = (0..3).all(|v| sub.out_degree(v) == 1);
                    if cyclic {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn four_type_counts() {
        let tt5 = Tournament::transitive(5).unwrap();
        let counts = tt5.count_c4_t4().unwrap();
        assert_eq!((counts.c4, counts.t4, counts.to4, counts.tk4), (0, 5, 0, 0));

        let qr7 = Tournament::quadratic_residue_tournament(7).unwrap();
        let counts = qr7.count_c4_t4().unwrap();
        assert_eq!(counts.t4, 0);
        assert_eq!(counts.total(), 35);

        let r7 = Tournament::consecutive_rotational(7).unwrap();
        assert_eq!(r7.count_c4_t4().unwrap().t4, 7);

        assert!(c3().count_c4_t4().is_err());
    }

    #[test]
    fn induced_outsets() {
        let qr7 = Tournament::quadratic_residue_tournament(7).unwrap();
        let outset: Vec<usize> = qr7.out_neighbors(0).collect();
        let sub = qr7.induced_subtournament(&outset).unwrap();
        assert!(sub.is_isomorphic(&c3()));

        let r7 = Tournament::consecutive_rotational(7).unwrap();
        let outset: Vec<usize> = r7.out_neighbors(0).collect();
        let sub = r7.induced_subtournament(&outset).unwrap();
        assert!(sub.is_isomorphic(&Tournament::transitive(3).unwrap()));

        assert!(qr7.induced_subtournament(&[0, 0]).is_err());
        assert!(qr7.induced_subtournament(&[7]).is_err());
        assert_eq!(qr7.induced_subtournament(&[3]).unwrap().n(), 1);
    }

    #[test]
    fn hierarchy_values() {
        let tt3 = Tournament::transitive(3).unwrap();
        assert_eq!(tt3.hierarchy().unwrap(), BigRational::from(BigInt::from(1)));
        let fifth = BigRational::new(BigInt::from(1), BigInt::from(5));
        assert_eq!(ts4().hierarchy().unwrap(), fifth);
        let r5 = Tournament::consecutive_rotational(5).unwrap();
        assert_eq!(r5.hierarchy().unwrap(), BigRational::from(BigInt::from(0)));
        assert!(Tournament::transitive(1).unwrap().hierarchy().is_err());
    }

    #[test]
    fn landau_validation() {
        assert!(ScoreSequence::new(vec![0, 1, 2]).is_ok());
        assert!(ScoreSequence::new(vec![1, 1, 1]).is_ok());
        assert!(ScoreSequence::new(vec![0, 0, 2]).is_err());
        assert!(ScoreSequence::new(vec![2, 1, 0]).is_err());
        assert!(ScoreSequence::new(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn text_round_trip() {
        for t in [
            c3(),
            ts4(),
            Tournament::transitive(1).unwrap(),
            Tournament::quadratic_residue_tournament(11).unwrap(),
        ] {
            let line = t.to_text();
            assert_eq!(Tournament::from_text(&line).unwrap(), t);
        }
        assert!(Tournament::from_text("n=3").is_err());
        assert!(Tournament::from_text("n=3 bits=ff").is_err());
        assert!(Tournament::from_text("n=3 bits=2 junk=1").is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = Tournament::quadratic_residue_tournament(7).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: Tournament = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        let cycle: Tournament =
            serde_json::from_str(r#"{"n":3,"arcs":[[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(cycle, c3());
        assert!(serde_json::from_str::<Tournament>(r#"{"n":3,"arcs":[[0,1],[1,2]]}"#).is_err());
    }

    #[test]
    fn bits_layout_is_stable() {
        // Pair order (0,1),(0,2),(1,2): C3 = 0->1, 1->2, 2->0 sets bits 0 and 2.
        assert_eq!(c3().bits(), 0b101);
        assert_eq!(c3().to_text(), "n=3 bits=5");
    }

    #[test]
    fn converse_and_reverse() {
        let t = ts4();
        let c = t.converse();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(t.beats(u, v), c.beats(v, u));
                }
            }
        }
        let r = t.reverse_arc(0, 1).unwrap();
        assert!(r.beats(1, 0));
        assert_eq!(r.reverse_arc(1, 0).unwrap(), t);
    }
}
