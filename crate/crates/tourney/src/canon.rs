//! Canonical labeling of tournaments by equitable refinement and
//! individualization.
//!
//! The canonical form is the minimum, over every labeling the search
//! visits, of the packed pair bits of the relabeled tournament. The search
//! explores an isomorphism-invariant tree: refine the ordered partition to
//! equitability, then branch on every vertex of the first non-singleton
//! cell. Cells split by out-degree into a splitter cell, subcells ordered
//! by ascending count; both the splitter schedule and the subcell order
//! depend only on the partition shape, never on vertex labels, so
//! isomorphic inputs visit corresponding leaves and take the same minimum.
//!
//! At desk scale (n <= 16) automorphism groups of tournaments are tiny
//! (odd order), so the tree stays within a few hundred leaves even for
//! rotational and doubly regular inputs.

use crate::tournament::{pair_count, Tournament, MAX_N};

/// Packed pair bits of the canonical labeling of `t`.
pub(crate) fn canonical_bits(t: &Tournament) -> u128 {
    let n = t.n();
    if n <= 2 {
        // One class each: the single bit, if any, is forced to 1 -> 0 ... no:
        // n = 2 has two labelings; the minimum clears the bit.
        return 0;
    }
    let mut rows = [0u16; MAX_N];
    for v in 0..n {
        rows[v] = t.out_mask(v);
    }
    let mut best = u128::MAX;
    let full: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
    search(&rows, n, vec![full], &mut best);
    debug_assert!(best != u128::MAX);
    best
}

fn search(rows: &[u16; MAX_N], n: usize, mut cells: Vec<u16>, best: &mut u128) {
    refine(rows, &mut cells);
    if let Some(idx) = cells.iter().position(|c| c.count_ones() > 1) {
        let cell = cells[idx];
        let mut m = cell;
        while m != 0 {
            let v = m & m.wrapping_neg();
            m &= m - 1;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..idx]);
            child.push(v);
            child.push(cell & !v);
            child.extend_from_slice(&cells[idx + 1..]);
            search(rows, n, child, best);
        }
    } else {
        let bits = encode(rows, n, &cells);
        if bits < *best {
            *best = bits;
        }
    }
}

/// Equitable refinement of an ordered partition. Restarts from the first
/// splitter after every split; terminates because splits strictly increase
/// the cell count.
fn refine(rows: &[u16; MAX_N], cells: &mut Vec<u16>) {
    'stable: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() <= 1 {
                    continue;
                }
                // Group cell members by out-count into the splitter.
                let mut keys: [u16; MAX_N + 1] = [0; MAX_N + 1];
                let mut distinct = 0u32;
                let mut m = cell;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let k = (rows[v] & splitter).count_ones() as usize;
                    if keys[k] == 0 {
                        distinct += 1;
                    }
                    keys[k] |= 1 << v;
                }
                if distinct > 1 {
                    let groups = keys.iter().filter(|&&g| g != 0).copied();
                    cells.splice(c..=c, groups.collect::<Vec<u16>>());
                    continue 'stable;
                }
            }
        }
        return;
    }
}

/// Bits of the relabeled tournament where the vertex in cell position `p`
/// receives label `p`. Requires a discrete partition.
fn encode(rows: &[u16; MAX_N], n: usize, cells: &[u16]) -> u128 {
    debug_assert_eq!(cells.len(), n);
    let mut old = [0usize; MAX_N];
    for (p, c) in cells.iter().enumerate() {
        old[p] = c.trailing_zeros() as usize;
    }
    let mut bits = 0u128;
    let mut k = 0u32;
    for i in 0..n {
        for j in (i + 1)..n {
            if rows[old[i]] >> old[j] & 1 == 1 {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, pair_count(n));
    bits
}
