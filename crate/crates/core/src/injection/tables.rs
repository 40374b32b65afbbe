//! Literal reference rows for Ξ: highest weights, subalgebra Dynkin labels,
//! charges and signs. Used as test fixtures only.
//!
//! The printed tables give generic rows valid for every large enough rank,
//! together with a few rows whose entries depend on `n`. A row is emitted
//! only in the ranks where its label pattern is meaningful; the result is
//! flagged complete when the rows exhaust Ξ.

use std::collections::BTreeMap;

use super::xi::{expected_cardinality, XiEntry, XiSet};
use super::{Family, Injection};
use crate::error::{Error, Result};
use crate::rootsys::Weight;

/// Largest rank with stored reference rows.
pub const TABLE_MAX_RANK: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub weight: Weight,
    pub labels: Vec<i64>,
    pub charge: i64,
    pub sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableXi {
    pub rows: Vec<TableRow>,
    /// True when the rows cover every element of Ξ.
    pub complete: bool,
}

impl TableXi {
    pub fn xi_set(&self, inj: &Injection) -> XiSet {
        XiSet::new(
            inj,
            self.rows
                .iter()
                .map(|r| XiEntry {
                    weight: r.weight.clone(),
                    sign: r.sign,
                })
                .collect(),
        )
    }
}

fn pm(even: bool) -> Option<i8> {
    Some(if even { 1 } else { -1 })
}

fn parity(k: usize) -> Option<i8> {
    pm(k.is_multiple_of(2))
}

struct Builder {
    n: usize,
    /// Number of weight coordinates.
    dim: usize,
    /// Number of subalgebra labels.
    rank: usize,
    rows: BTreeMap<Weight, TableRow>,
}

impl Builder {
    fn new(n: usize, dim: usize, rank: usize) -> Self {
        let mut b = Builder {
            n,
            dim,
            rank,
            rows: BTreeMap::new(),
        };
        b.add_full(vec![0; dim], vec![0; rank], 0, None);
        b
    }

    fn add_full(&mut self, coords: Vec<i64>, labels: Vec<i64>, charge: i64, sign: Option<i8>) {
        let weight = Weight::from_ints(&coords);
        let row = TableRow {
            weight: weight.clone(),
            labels,
            charge,
            sign,
        };
        if let Some(old) = self.rows.get(&weight) {
            assert_eq!(old, &row, "conflicting reference rows at {weight}");
            return;
        }
        self.rows.insert(weight, row);
    }

    /// A row given by a weight prefix and a label prefix, both padded with
    /// zeros; labels are truncated to the subalgebra rank.
    fn add(&mut self, weight: &[i64], labels: &[i64], charge: i64, sign: Option<i8>) {
        if weight.len() > self.n {
            return;
        }
        let mut coords = weight.to_vec();
        coords.resize(self.dim, 0);
        let mut l = labels.to_vec();
        l.resize(self.rank.max(l.len()), 0);
        l.truncate(self.rank);
        self.add_full(coords, l, charge, sign);
    }

    /// Labels that are zero except for `value` at 1-based position `pos`.
    fn unit_labels(&self, pos: usize, value: i64) -> Vec<i64> {
        let mut l = vec![0; self.rank];
        l[pos - 1] = value;
        l
    }

    fn finish(self, expected: usize) -> TableXi {
        let rows: Vec<TableRow> = self.rows.into_values().collect();
        TableXi {
            complete: rows.len() == expected,
            rows,
        }
    }
}

/// `(k, 1, ..., 1)` with `ones` trailing ones, padded to `n`.
fn head_ones(n: usize, k: i64, ones: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[0] = k;
    for c in v.iter_mut().skip(1).take(ones) {
        *c = 1;
    }
    v
}

fn table_rows(inj: &Injection) -> TableXi {
    let n = inj.n;
    let ni = n as i64;
    let expected = expected_cardinality(inj.family, n);
    match inj.family {
        Family::AA => {
            let mut b = Builder::new(n, n + 1, n - 1);
            let full = |prefix: &[i64], last: i64| {
                let mut v = prefix.to_vec();
                v.resize(n, 0);
                v.push(last);
                v
            };
            if n >= 2 {
                b.add_full(full(&[1], -1), b.unit_labels(1, 1), 1, Some(1));
            }
            if n >= 3 {
                b.add_full(full(&[1, 1], -2), b.unit_labels(2, 1), 2, Some(-1));
            }
            b.add_full(full(&vec![1; n], -ni), vec![0; n - 1], ni, parity(n + 1));
            b.finish(expected)
        }
        Family::AB => {
            let mut b = Builder::new(n, n, n - 1);
            b.add(&[1], &[1], 1, Some(1));
            b.add(&[2, 1], &[1, 1], 3, Some(-1));
            b.add(&[2, 2], &[0, 2], 4, Some(1));
            b.add(&[3, 1, 1], &[2, 0, 1], 5, Some(1));
            b.add(&[3, 2, 1], &[1, 1, 1], 6, Some(-1));
            b.add(&[3, 3, 2], &[0, 1, 2], 8, Some(1));
            b.add(&[3, 3, 3], &[0, 0, 3], 9, Some(-1));
            let mut w = vec![ni; n];
            w[n - 1] = ni - 1;
            b.add(&w, &b.unit_labels(n - 1, 1), ni * ni - 1, parity((n * n + n) / 2));
            b.add(&vec![ni; n], &[], ni * ni, parity((n * n + n + 2) / 2));
            if n == 2 {
                add_worked_b2(&mut b);
            }
            if n == 4 {
                add_worked_b4(&mut b);
            }
            b.finish(expected)
        }
        Family::AC => {
            let mut b = Builder::new(n, n, n - 1);
            b.add(&[2], &[2], 2, Some(1));
            b.add(&[3, 1], &[2, 1], 4, Some(-1));
            b.add(&[3, 3], &[0, 3], 6, Some(1));
            b.add(&[4, 1, 1], &[3, 0, 1], 6, Some(1));
            b.add(&[4, 3, 1], &[1, 2, 1], 8, Some(-1));
            b.add(&[4, 4, 2], &[0, 2, 2], 10, Some(1));
            b.add(&[4, 4, 4], &[0, 0, 4], 12, Some(-1));
            let mut w = vec![ni + 1; n];
            w[n - 1] = ni - 1;
            b.add(&w, &b.unit_labels(n - 1, 2), ni * ni + ni - 2, parity((n * n + n) / 2));
            b.add(&vec![ni + 1; n], &[], ni * ni + ni, parity((n * n + n + 2) / 2));
            b.finish(expected)
        }
        Family::AD => {
            let mut b = Builder::new(n, n, n - 1);
            b.add(&[1, 1], &[0, 1], 2, Some(1));
            b.add(&[2, 1, 1], &[1, 0, 1], 4, Some(-1));
            b.add(&[2, 2, 2], &[0, 0, 2], 6, Some(1));
            b.add(&[3, 1, 1, 1], &[2, 0, 0, 1], 6, Some(1));
            b.add(&[3, 2, 2, 1], &[1, 0, 1, 1], 8, Some(-1));
            b.add(&[3, 3, 2, 2], &[0, 1, 0, 2], 10, Some(1));
            b.add(&[3, 3, 3, 3], &[0, 0, 0, 3], 12, Some(-1));
            let mut w = vec![ni - 1; n];
            w[n - 2] = ni - 2;
            w[n - 1] = ni - 2;
            b.add(&w, &b.unit_labels(n - 2, 1), ni * ni - ni - 2, parity((n * n - n) / 2));
            b.add(&vec![ni - 1; n], &[], ni * ni - ni, parity((n * n - n + 2) / 2));
            b.finish(expected)
        }
        Family::BB => {
            let mut b = Builder::new(n, n, n - 1);
            // (k, 1^k) with label 1 at position k, while ω_k is a prefix
            // weight of B_{n-1}.
            for (k, sign) in [(1usize, 1i8), (2, -1), (3, 1)] {
                if k + 2 <= n {
                    b.add(&head_ones(n, k as i64, k), &b.unit_labels(k, 1), k as i64, Some(sign));
                }
            }
            if n >= 3 {
                let mut w = head_ones(n, ni - 2, n - 2);
                w[n - 1] = 0;
                b.add(&w, &b.unit_labels(n - 2, 1), ni - 2, parity(n - 1));
                let mut w = head_ones(n, ni + 1, n - 2);
                w[n - 1] = 0;
                b.add(&w, &b.unit_labels(n - 2, 1), ni + 1, parity(n + 2));
                b.add(&head_ones(n, 2 * ni - 2, 1), &b.unit_labels(1, 1), 2 * ni - 2, Some(-1));
            }
            b.add(&head_ones(n, ni - 1, n - 1), &b.unit_labels(n - 1, 2), ni - 1, parity(n));
            b.add(&head_ones(n, ni, n - 1), &b.unit_labels(n - 1, 2), ni, parity(n + 1));
            b.add(&head_ones(n, 2 * ni - 1, 0), &[], 2 * ni - 1, Some(1));
            b.finish(expected)
        }
        Family::CC => {
            let mut b = Builder::new(n, n, n - 1);
            for (k, sign) in [(1usize, 1i8), (2, -1), (3, 1)] {
                if k < n {
                    b.add(&head_ones(n, k as i64, k), &b.unit_labels(k, 1), k as i64, Some(sign));
                }
            }
            b.add(&head_ones(n, ni - 1, n - 1), &b.unit_labels(n - 1, 1), ni - 1, parity(n));
            b.add(&head_ones(n, ni + 1, n - 1), &b.unit_labels(n - 1, 1), ni + 1, parity(n + 1));
            if n >= 3 {
                let mut w = head_ones(n, ni + 2, n - 2);
                w[n - 1] = 0;
                b.add(&w, &b.unit_labels(n - 2, 1), ni + 2, parity(n + 2));
            }
            b.add(&head_ones(n, 2 * ni - 1, 1), &b.unit_labels(1, 1), 2 * ni - 1, Some(-1));
            b.add(&head_ones(n, 2 * ni, 0), &[], 2 * ni, Some(1));
            b.finish(expected)
        }
        Family::DD => {
            let mut b = Builder::new(n, n, n - 1);
            for (k, sign) in [(1usize, 1i8), (2, -1)] {
                if k + 3 <= n {
                    b.add(&head_ones(n, k as i64, k), &b.unit_labels(k, 1), k as i64, Some(sign));
                }
            }
            let two_spinors = |pos: usize, b: &Builder| {
                let mut l = b.unit_labels(pos, 1);
                l[pos] = 1;
                l
            };
            if n >= 4 {
                b.add(&head_ones(n, ni - 3, n - 3), &b.unit_labels(n - 3, 1), ni - 3, parity(n - 2));
                b.add(&head_ones(n, ni + 1, n - 3), &b.unit_labels(n - 3, 1), ni + 1, parity(n + 2));
                b.add(&head_ones(n, 2 * ni - 3, 1), &b.unit_labels(1, 1), 2 * ni - 3, Some(1));
            }
            b.add(&head_ones(n, ni - 2, n - 2), &two_spinors(n - 2, &b), ni - 2, parity(n - 1));
            let mut w = head_ones(n, ni - 1, n - 1);
            w[n - 1] = -1;
            b.add(&w, &b.unit_labels(n - 2, 2), ni - 1, parity(n));
            b.add(&head_ones(n, ni - 1, n - 1), &b.unit_labels(n - 1, 2), ni - 1, parity(n));
            b.add(&head_ones(n, ni, n - 2), &two_spinors(n - 2, &b), ni, parity(n + 1));
            b.add(&head_ones(n, 2 * ni - 2, 0), &[], 2 * ni - 2, Some(-1));
            b.finish(expected)
        }
    }
}

/// The B2 list: ([1],1) +, ([1],3) -, ([0],4) +.
fn add_worked_b2(b: &mut Builder) {
    b.add(&[1, 0], &[1], 1, Some(1));
    b.add(&[2, 1], &[1], 3, Some(-1));
    b.add(&[2, 2], &[0], 4, Some(1));
}

/// The sixteen highest weights for `A3 ⊕ u(1) ⊂ B4`, paired with the
/// separately printed (labels, charge, sign) list.
fn add_worked_b4(b: &mut Builder) {
    const WEIGHTS: [[i64; 4]; 15] = [
        [1, 0, 0, 0],
        [2, 1, 0, 0],
        [2, 2, 0, 0],
        [3, 1, 1, 0],
        [3, 2, 1, 0],
        [3, 3, 2, 0],
        [3, 3, 3, 0],
        [4, 1, 1, 1],
        [4, 2, 1, 1],
        [4, 3, 2, 1],
        [4, 3, 3, 1],
        [4, 4, 2, 2],
        [4, 4, 3, 2],
        [4, 4, 4, 3],
        [4, 4, 4, 4],
    ];
    const SIGNED: [([i64; 3], i64, i8); 15] = [
        ([1, 0, 0], 1, 1),
        ([1, 1, 0], 3, -1),
        ([0, 2, 0], 4, 1),
        ([2, 0, 1], 5, 1),
        ([1, 1, 1], 6, -1),
        ([3, 0, 0], 7, -1),
        ([0, 1, 2], 8, 1),
        ([2, 1, 0], 8, 1),
        ([0, 0, 3], 9, -1),
        ([1, 1, 1], 10, -1),
        ([1, 0, 2], 11, 1),
        ([0, 2, 0], 12, 1),
        ([0, 1, 1], 13, -1),
        ([0, 0, 1], 15, 1),
        ([0, 0, 0], 16, -1),
    ];
    for w in WEIGHTS {
        let labels = [w[0] - w[1], w[1] - w[2], w[2] - w[3]];
        let charge: i64 = w.iter().sum();
        let (_, _, sign) = SIGNED
            .iter()
            .find(|(l, q, _)| *l == labels && *q == charge)
            .expect("every listed weight has a listed label entry");
        b.add(&w, &labels, charge, Some(*sign));
    }
}

/// Stored reference rows for `inj`, for ranks up to [`TABLE_MAX_RANK`].
pub fn xi_table_reference(inj: &Injection) -> Result<TableXi> {
    if inj.n > TABLE_MAX_RANK {
        return Err(Error::Unsupported(format!(
            "no reference rows stored for rank {} (max {TABLE_MAX_RANK})",
            inj.n
        )));
    }
    Ok(table_rows(inj))
}
