//! The set Ξ of highest weights whose g~-diagrams tile the fan, built from
//! subset sums of complement roots or from the closed-form sequences.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use super::{Family, Injection};
use crate::error::{Error, Result};
use crate::rootsys::Weight;

/// Largest complement for which Ω is enumerated.
pub const OMEGA_ROOT_GUARD: usize = 24;

/// One subset sum of complement roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaEntry {
    pub weight: Weight,
    /// Number of summands.
    pub size: usize,
}

impl OmegaEntry {
    /// `(-1)^{k+1}`; the empty sum carries no sign.
    pub fn sign(&self) -> Option<i8> {
        sign_for(self.size)
    }
}

fn sign_for(count: usize) -> Option<i8> {
    match count {
        0 => None,
        k if k % 2 == 1 => Some(1),
        _ => Some(-1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiEntry {
    pub weight: Weight,
    pub sign: Option<i8>,
}

/// Ξ in canonical order: the zero weight first, then by level and, within
/// a level, lexicographically descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiSet {
    pub entries: Vec<XiEntry>,
}

impl XiSet {
    pub fn new(inj: &Injection, mut entries: Vec<XiEntry>) -> Self {
        entries.sort_by_key(|e| (e.weight.dot4(&inj.level_vector), Reverse(e.weight.clone())));
        XiSet { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, XiEntry> {
        self.entries.iter()
    }

    pub fn get(&self, k: &Weight) -> Option<&XiEntry> {
        self.entries.iter().find(|e| &e.weight == k)
    }

    /// Entries other than the unsigned zero weight.
    pub fn signed(&self) -> impl Iterator<Item = (&Weight, i8)> + '_ {
        self.entries
            .iter()
            .filter_map(|e| e.sign.map(|s| (&e.weight, s)))
    }
}

/// Expected `|Ξ|` for a family at rank `n`.
pub fn expected_cardinality(family: Family, n: usize) -> usize {
    match family {
        Family::AA => n + 1,
        Family::AB | Family::AC => 1 << n,
        Family::AD => 1 << (n - 1),
        Family::BB | Family::CC | Family::DD => 2 * n,
    }
}

/// All subset sums of the complement roots, the empty sum included.
pub fn omega_set(inj: &Injection) -> Result<Vec<OmegaEntry>> {
    let roots = &inj.complement_roots;
    check_omega_guard(roots.len())?;
    let mut out = Vec::with_capacity(1 << roots.len());
    let mut stack = vec![(0usize, Weight::zero(inj.g.dim), 0usize)];
    while let Some((next, sum, size)) = stack.pop() {
        if next == roots.len() {
            out.push(OmegaEntry { weight: sum, size });
            continue;
        }
        stack.push((next + 1, &sum + &roots[next], size + 1));
        stack.push((next + 1, sum, size));
    }
    Ok(out)
}

fn check_omega_guard(len: usize) -> Result<()> {
    if len > OMEGA_ROOT_GUARD {
        return Err(Error::guard(
            "complement roots for subset enumeration",
            len as u128,
            OMEGA_ROOT_GUARD as u128,
        ));
    }
    Ok(())
}

/// Net signed count of every g~-dominant subset sum.
fn dominant_net(inj: &Injection) -> Result<BTreeMap<Weight, i64>> {
    let roots = &inj.complement_roots;
    check_omega_guard(roots.len())?;
    let mut net: BTreeMap<Weight, i64> = BTreeMap::new();
    fn rec(
        inj: &Injection,
        roots: &[Weight],
        next: usize,
        sum: Weight,
        size: usize,
        net: &mut BTreeMap<Weight, i64>,
    ) {
        if next == roots.len() {
            if size > 0 && inj.sub.is_dominant(&sum) {
                *net.entry(sum).or_insert(0) += sign_for(size).unwrap() as i64;
            }
            return;
        }
        rec(inj, roots, next + 1, &sum + &roots[next], size + 1, net);
        rec(inj, roots, next + 1, sum, size, net);
    }
    rec(inj, roots, 0, Weight::zero(inj.g.dim), 0, &mut net);
    net.retain(|_, c| *c != 0);
    Ok(net)
}

/// Ξ as the charge-wise maximal survivors of the cancelled dominant part
/// of Ω.
pub fn xi_set_via_omega(inj: &Injection) -> Result<XiSet> {
    let net = dominant_net(inj)?;
    let mut entries = vec![XiEntry {
        weight: Weight::zero(inj.g.dim),
        sign: None,
    }];
    for (k, c) in &net {
        let q = inj.charge(k);
        let dominated = net
            .keys()
            .any(|o| o != k && inj.charge(o) == q && inj.sub.dominates(o, k));
        if dominated {
            continue;
        }
        let sign = match c {
            1 => 1,
            -1 => -1,
            _ => {
                return Err(Error::Inconsistency(format!(
                    "net multiplicity {c} at maximal weight {k} of {}",
                    inj.family
                )))
            }
        };
        entries.push(XiEntry {
            weight: k.clone(),
            sign: Some(sign),
        });
    }
    Ok(XiSet::new(inj, entries))
}

/// Ξ from the ordered root sequences and the doubling rule.
pub fn xi_set_closed_form(inj: &Injection) -> Result<XiSet> {
    let n = inj.n;
    let dim = inj.g.dim;
    let zero = Weight::zero(dim);
    let mut entries = vec![XiEntry {
        weight: zero.clone(),
        sign: None,
    }];
    let mut push = |weight: Weight, count: usize| {
        entries.push(XiEntry {
            weight,
            sign: sign_for(count),
        })
    };
    match inj.family {
        Family::AA | Family::BB | Family::CC | Family::DD => {
            let mut sum = zero.clone();
            for (k, a) in inj.complement_roots.iter().enumerate() {
                sum = &sum + a;
                push(sum.clone(), k + 1);
            }
            if inj.family == Family::DD {
                let mut ints = vec![1i64; n];
                ints[0] = n as i64 - 1;
                ints[n - 1] = -1;
                push(Weight::from_ints(&ints), n - 1);
            }
        }
        Family::AB | Family::AC | Family::AD => {
            let (p1, tail) = match inj.family {
                Family::AB => (1, 1),
                Family::AC => (2, 1),
                _ => (1, 2),
            };
            let top = if inj.family == Family::AD { n - 2 } else { n - 1 };
            // seq[i] = (ξ_i, number of roots summed); seq[0] is zero.
            let mut first = vec![0i64; n];
            first[0] = p1;
            if inj.family == Family::AD {
                first[1] = 1;
            }
            let mut seq: Vec<(Vec<i64>, usize)> = vec![(vec![0; n], 0), (first, 1)];
            for k in 1..=top {
                let mut head = vec![0i64; n];
                head[0] = p1 + k as i64;
                for c in head.iter_mut().take(k + tail).skip(1) {
                    *c = 1;
                }
                let block: Vec<(Vec<i64>, usize)> = (0..1usize << k)
                    .map(|i| {
                        let (xi, count) = &seq[i];
                        let mut out = head.clone();
                        for j in 1..n {
                            out[j] += xi[j - 1];
                        }
                        debug_assert!(i == 0 || xi[n - 1] == 0);
                        (out, k + 1 + count)
                    })
                    .collect();
                seq.extend(block);
            }
            for (ints, count) in seq.into_iter().skip(1) {
                push(Weight::from_ints(&ints), count);
            }
        }
    }
    Ok(XiSet::new(inj, entries))
}

/// Ξ by both routes, with a consistency check between them.
pub fn xi_set_checked(inj: &Injection) -> Result<XiSet> {
    let closed = xi_set_closed_form(inj)?;
    if inj.complement_roots.len() <= OMEGA_ROOT_GUARD {
        let omega = xi_set_via_omega(inj)?;
        if omega != closed {
            let bad = omega
                .iter()
                .find(|e| closed.get(&e.weight) != Some(e))
                .or_else(|| closed.iter().find(|e| omega.get(&e.weight) != Some(e)))
                .map(|e| e.weight.to_string())
                .unwrap_or_default();
            return Err(Error::Inconsistency(format!(
                "subset and closed-form constructions of Ξ disagree at {bad} for {}{}",
                inj.family, inj.n
            )));
        }
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn b2_omega() {
        let inj = Injection::new(Family::AB, 2).unwrap();
        let omega = omega_set(&inj).unwrap();
        assert_eq!(omega.len(), 8);
        let at = |k: &str| {
            let mut s: Vec<Option<i8>> = omega.iter().filter(|e| e.weight == w(k)).map(|e| e.sign()).collect();
            s.sort();
            s
        };
        assert_eq!(at("1,1"), vec![Some(-1), Some(1)]);
        assert_eq!(at("2,2"), vec![Some(1)]);
        assert_eq!(at("0,0"), vec![None]);
    }

    #[test]
    fn b2_xi() {
        let inj = Injection::new(Family::AB, 2).unwrap();
        let xi = xi_set_via_omega(&inj).unwrap();
        let got: Vec<(String, Option<i8>)> = xi.iter().map(|e| (e.weight.to_string(), e.sign)).collect();
        assert_eq!(
            got,
            vec![
                ("(0,0)".into(), None),
                ("(1,0)".into(), Some(1)),
                ("(2,1)".into(), Some(-1)),
                ("(2,2)".into(), Some(1)),
            ]
        );
        assert_eq!(xi, xi_set_closed_form(&inj).unwrap());
    }

    #[test]
    fn closed_form_endpoints() {
        for n in 2..=5 {
            let ab = xi_set_closed_form(&Injection::new(Family::AB, n).unwrap()).unwrap();
            let last = ab.entries.last().unwrap();
            assert_eq!(last.weight, Weight::from_ints(&vec![n as i64; n]));
            let expected = if ((n * n + n + 2) / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(last.sign, Some(expected));

            let aa = xi_set_closed_form(&Injection::new(Family::AA, n).unwrap()).unwrap();
            let mut top = vec![1i64; n + 1];
            top[n] = -(n as i64);
            let e = aa.get(&Weight::from_ints(&top)).unwrap();
            assert_eq!(e.sign, Some(if n % 2 == 1 { 1 } else { -1 }));
        }
        let ad = xi_set_closed_form(&Injection::new(Family::AD, 4).unwrap()).unwrap();
        assert_eq!(ad.entries[1].weight, w("1,1,0,0"));
    }

    #[test]
    fn cardinalities() {
        for f in Family::ALL {
            for n in f.min_rank()..=6 {
                let inj = Injection::new(f, n).unwrap();
                assert_eq!(xi_set_closed_form(&inj).unwrap().len(), expected_cardinality(f, n), "{f} {n}");
            }
        }
    }
}
