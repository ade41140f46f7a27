//! Partial orders that the Rényi entropies induce on sets of tournaments,
//! with Hasse-diagram extraction and DOT/CSV export.
//!
//! For a fixed order `n` the entropy `H_α` is a decreasing function of the
//! exact power sum `f_α`, so `T₁ <_α T₂` (lower entropy) exactly when
//! `f_α(T₁) > f_α(T₂)`. Comparisons are made on exact rationals — two
//! tournaments are incomparable precisely when their power sums coincide,
//! and that must be decidable, never a floating-point coin flip.

use num::BigRational;

use crate::entropy::{power_sums, PowerSums};
use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Outcome of comparing two elements under `<_α`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    /// Strictly lower entropy: first `<_α` second.
    Less,
    /// Strictly higher entropy: second `<_α` first.
    Greater,
    /// Equal exact power sums; the order cannot separate them.
    Incomparable,
}

/// The strict order `<_α` on a list of same-order tournaments.
///
/// Equal-value elements form classes; the quotient is a chain, listed from
/// the least element (largest `f_α`, lowest entropy) upward.
pub struct EntropyOrder {
    alpha: u32,
    labels: Vec<String>,
    sums: Vec<PowerSums>,
    classes: Vec<Vec<usize>>,
}

impl EntropyOrder {
    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn power_sums(&self, i: usize) -> &PowerSums {
        &self.sums[i]
    }

    fn value(&self, i: usize) -> &BigRational {
        self.sums[i].f(self.alpha)
    }

    /// Exact comparison under `<_α`: larger power sum means lower entropy.
    pub fn relation(&self, i: usize, j: usize) -> Relation {
        match self.value(i).cmp(self.value(j)) {
            std::cmp::Ordering::Greater => Relation::Less,
            std::cmp::Ordering::Less => Relation::Greater,
            std::cmp::Ordering::Equal => Relation::Incomparable,
        }
    }

    /// Equal-value classes, ascending in `<_α` (the quotient chain).
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_labels(&self) -> Vec<Vec<&str>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&i| self.labels[i].as_str()).collect())
            .collect()
    }

    /// Covering pairs of the quotient by equal-value classes — its
    /// transitive reduction. The quotient is a chain, so the covers are
    /// exactly the consecutive class pairs.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        (1..self.classes.len()).map(|k| (k - 1, k)).collect()
    }

    /// DOT rendering, bottom-up. `merged` collapses each equal-value class
    /// into one node listing all labels; otherwise every element gets its
    /// own node, classes share a rank, and covers expand to all member
    /// pairs — the twin-node style.
    pub fn to_dot(&self, merged: bool) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        if merged {
            for (k, class) in self.classes.iter().enumerate() {
                let label: Vec<&str> = class.iter().map(|&i| self.labels[i].as_str()).collect();
                out.push_str(&format!("  c{k} [label=\"{}\"];\n", label.join(", ")));
            }
            for (a, b) in self.hasse_edges() {
                out.push_str(&format!("  c{a} -> c{b};\n"));
            }
        } else {
            for class in &self.classes {
                for &i in class {
                    out.push_str(&format!("  v{i} [label=\"{}\"];\n", self.labels[i]));
                }
                if class.len() > 1 {
                    let members: Vec<String> = class.iter().map(|&i| format!("v{i}")).collect();
                    out.push_str(&format!("  {{ rank=same; {}; }}\n", members.join("; ")));
                }
            }
            for (a, b) in self.hasse_edges() {
                for &i in &self.classes[a] {
                    for &j in &self.classes[b] {
                        out.push_str(&format!("  v{i} -> v{j};\n"));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// CSV of `(label, raw2, raw3, raw4)` in chain order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,raw2,raw3,raw4\n");
        for class in &self.classes {
            for &i in class {
                let s = &self.sums[i];
                out.push_str(&format!("{},{},{},{}\n", self.labels[i], s.raw2, s.raw3, s.raw4));
            }
        }
        out
    }
}

/// Builds `<_α` over tournaments labeled by their list position.
pub fn build_order(ts: &[Tournament], alpha: u32) -> Result<EntropyOrder> {
    let items: Vec<(String, Tournament)> = ts
        .iter()
        .enumerate()
        .map(|(i, t)| (format!("t{i}"), *t))
        .collect();
    build_labeled_order(&items, alpha)
}

/// Builds `<_α` with caller-supplied labels.
pub fn build_labeled_order(items: &[(String, Tournament)], alpha: u32) -> Result<EntropyOrder> {
    if !(2..=4).contains(&alpha) {
        return Err(Error::BadAlpha(
            alpha as f64,
            "exact order comparison needs alpha in 2..=4",
        ));
    }
    if items.is_empty() {
        return Err(Error::Empty("tournament list"));
    }
    let n = items[0].1.n();
    if let Some((_, other)) = items.iter().find(|(_, t)| t.n() != n) {
        return Err(Error::MixedOrder(n, other.n()));
    }
    let labels: Vec<String> = items.iter().map(|(l, _)| l.clone()).collect();
    let sums: Vec<PowerSums> = items.iter().map(|(_, t)| power_sums(&t.clone())).collect();

    // Chain order: descending f, i.e. ascending entropy; ties grouped.
    let mut idx: Vec<usize> = (0..items.len()).collect();
    idx.sort_by(|&a, &b| {
        sums[b]
            .f(alpha)
            .cmp(sums[a].f(alpha))
            .then_with(|| a.cmp(&b))
    });
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in idx {
        match classes.last_mut() {
            Some(class) if sums[class[0]].f(alpha) == sums[i].f(alpha) => class.push(i),
            _ => classes.push(vec![i]),
        }
    }
    for class in &mut classes {
        class.sort_by(|&a, &b| labels[a].cmp(&labels[b]).then(a.cmp(&b)));
    }
    Ok(EntropyOrder { alpha, labels, sums, classes })
}

/// Name of a 4-tournament class; score sequences separate all four.
pub fn four_class_label(t: &Tournament) -> Option<&'static str> {
    match t.score_sequence().scores() {
        [1, 1, 2, 2] => Some("TS4"),
        [0, 2, 2, 2] => Some("TK4"),
        [1, 1, 1, 3] => Some("TO4"),
        [0, 1, 2, 3] => Some("TT4"),
        _ => None,
    }
}

/// Name of a 5-tournament class, keyed by its power-sum triple. The triple
/// pins every class except the `UR₁`/`UR₂` twins, which share
/// `(22, 40, 46)` and are told apart only as isomorphism classes — they
/// get `None` here.
pub fn five_class_label(t: &Tournament) -> Option<&'static str> {
    if t.n() != 5 {
        return None;
    }
    let s = power_sums(t);
    match (s.raw2, s.raw3, s.raw4) {
        (30, 100, 354) => Some("TT5"),
        (28, 91, 328) => Some("A"),
        (28, 85, 280) => Some("B"),
        (28, 79, 208) => Some("C"),
        (26, 64, 138) => Some("D"),
        (26, 76, 258) => Some("E"),
        (24, 55, 116) => Some("U1"),
        (24, 55, 120) => Some("U2"),
        (22, 40, 50) => Some("UR3"),
        (20, 25, -20) => Some("R5"),
        _ => None,
    }
}

/// All 4- or 5-tournament classes under their conventional names. The two
/// classes no invariant separates (`UR₁`, `UR₂`) are assigned in canonical
/// form order, which fixes the labeling deterministically.
pub fn labeled_family(n: usize) -> Result<Vec<(String, Tournament)>> {
    let budget = crate::enumeration::EnumerationBudget::default();
    let classes = crate::enumeration::enumerate_tournaments(n, &budget)?;
    let mut items = Vec::with_capacity(classes.len());
    let mut twin = 0usize;
    for t in classes {
        let label = match n {
            4 => four_class_label(&t).map(str::to_owned),
            5 => five_class_label(&t).map(str::to_owned),
            _ => None,
        };
        let label = label.unwrap_or_else(|| {
            if n == 5 {
                twin += 1;
                format!("UR{twin}")
            } else {
                format!("t{}", items.len())
            }
        });
        items.push((label, t));
    }
    Ok(items)
}
