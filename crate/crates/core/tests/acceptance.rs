//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! All arithmetic is exact, so every comparison has zero tolerance. The
//! only tolerances are wall-clock limits: 0.1 s for the B2 example, 5 s
//! for the B4 example, 300 s for the engine agreement suite.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use fanbranch::branching::{
    branch, branch_factorized_traced, kostant_heckman, kostant_heckman_recursive,
    verify_result, BranchingResult, CheckStatus, EngineOptions, Method,
};
use fanbranch::charalg::expand_complement_product;
use fanbranch::injection::{
    expected_cardinality, fan_direct, fan_via_xi, xi_set_closed_form, xi_set_via_omega, xi_table_reference,
    Family, Injection,
};
use fanbranch::reps::{anomalous_weights, character, weyl_denominator};
use fanbranch::{RootSystem, Series, Weight, Q};

const B2_LIMIT: Duration = Duration::from_millis(100);
const B4_LIMIT: Duration = Duration::from_secs(5);
const SUITE_LIMIT: Duration = Duration::from_secs(300);

type Table = BTreeMap<(Vec<i64>, Q), u64>;
type Branched = Vec<(Injection, Weight, BranchingResult)>;

fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

fn table(r: &BranchingResult) -> Table {
    r.terms
        .iter()
        .map(|t| ((t.labels.clone(), t.charge), t.multiplicity))
        .collect()
}

fn entries(rows: &[(u64, &[i64], i64)]) -> Table {
    rows.iter()
        .map(|(m, l, q)| ((l.to_vec(), Q::from_integer(*q)), *m))
        .collect()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

/// Runs a criterion, catching panics as failures.
fn report(id: u32, title: &str, f: impl FnOnce() -> Result<String, String> + std::panic::UnwindSafe) -> bool {
    let outcome = std::panic::catch_unwind(f).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into()))
    });
    match outcome {
        Ok(note) => {
            println!("criterion {id} PASS  {title}: {note}");
            true
        }
        Err(why) => {
            println!("criterion {id} FAIL  {title}: {why}");
            false
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_checks_pass(inj: &Injection, lam: &Weight, r: &BranchingResult) -> Result<(), String> {
    for c in verify_result(inj, lam, r) {
        ensure(c.status != CheckStatus::Failed, || {
            format!("check {} failed for {lam}: {}", c.name, c.detail.clone().unwrap_or_default())
        })?;
    }
    Ok(())
}

fn criterion_1() -> Result<String, String> {
    let inj = Injection::from_tokens("B2", "A1xU1").unwrap();
    let lam = inj.g.dynkin_to_e(&[2, 1]).unwrap();
    let (r, elapsed) = timed(|| branch(&inj, &lam, Method::Fan).unwrap());
    let expected = entries(&[
        (1, &[2], 3),
        (1, &[2], -3),
        (1, &[3], 2),
        (1, &[3], -2),
        (1, &[1], 2),
        (1, &[1], -2),
        (2, &[2], 1),
        (2, &[2], -1),
        (1, &[0], 1),
        (1, &[0], -1),
        (2, &[1], 0),
        (1, &[3], 0),
    ]);
    ensure(table(&r) == expected, || format!("got {:?}", table(&r)))?;
    ensure(r.dimension == 40, || format!("dimension {}", r.dimension))?;
    all_checks_pass(&inj, &lam, &r)?;
    ensure(elapsed < B2_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "12 terms exact, final term read as ([2],-3), dim 40, {:.3} ms",
        elapsed.as_secs_f64() * 1e3
    ))
}

/// The decomposition as printed: 35 terms.
const B4_PRINTED: &[(u64, &[i64], i64)] = &[
    (1, &[0, 1, 1], 5),
    (1, &[0, 2, 0], 4),
    (1, &[1, 0, 1], 4),
    (2, &[1, 1, 0], 3),
    (1, &[0, 0, 1], 3),
    (1, &[1, 0, 2], 3),
    (1, &[0, 2, 1], 3),
    (1, &[2, 0, 0], 2),
    (2, &[0, 1, 0], 2),
    (1, &[0, 0, 2], 2),
    (2, &[1, 1, 1], 2),
    (2, &[1, 0, 0], 1),
    (2, &[2, 0, 1], 1),
    (3, &[0, 1, 1], 1),
    (1, &[1, 1, 2], 1),
    (1, &[1, 2, 0], 1),
    (1, &[0, 0, 0], 0),
    (3, &[1, 0, 1], 0),
    (2, &[0, 2, 0], 0),
    (1, &[2, 0, 2], 0),
    (1, &[2, 1, 0], 0),
    (1, &[0, 1, 2], 0),
    (2, &[1, 0, 2], -1),
    (2, &[0, 0, 1], -1),
    (2, &[1, 1, 1], -2),
    (1, &[2, 0, 0], -2),
    (2, &[0, 1, 0], -2),
    (1, &[0, 0, 2], -2),
    (1, &[1, 2, 0], -3),
    (1, &[2, 0, 1], -3),
    (1, &[1, 0, 0], -3),
    (2, &[0, 1, 1], -3),
    (1, &[1, 0, 1], -4),
    (1, &[0, 2, 0], -4),
    (1, &[1, 1, 0], -5),
];

/// Mirror images of the printed charge 1 terms 3([0,1,1],1), ([1,1,2],1),
/// ([1,2,0],1), absent from the printed list.
const B4_MIRRORS: &[(u64, &[i64], i64)] = &[(3, &[1, 1, 0], -1), (1, &[2, 1, 1], -1), (1, &[0, 2, 1], -1)];

fn criterion_2() -> Result<String, String> {
    let inj = Injection::from_tokens("B4", "A3xU1").unwrap();
    let lam = inj.g.dynkin_to_e(&[0, 1, 1, 0]).unwrap();
    let (r, elapsed) = timed(|| branch(&inj, &lam, Method::Fan).unwrap());
    let got = table(&r);
    let printed = entries(B4_PRINTED);
    ensure(printed.len() == 35, || "fixture size".into())?;
    for (k, m) in &printed {
        ensure(got.get(k) == Some(m), || format!("printed term {m} x {k:?}: got {:?}", got.get(k)))?;
    }
    let extra: Table = got
        .iter()
        .filter(|(k, _)| !printed.contains_key(*k))
        .map(|(k, m)| (k.clone(), *m))
        .collect();
    ensure(extra == entries(B4_MIRRORS), || format!("unexpected extra terms {extra:?}"))?;
    let dim_sum: u64 = r
        .components
        .iter()
        .map(|(mu, m)| inj.sub.weyl_dim(mu).unwrap() * m)
        .sum();
    ensure(dim_sum == 1650 && r.dimension == 1650, || format!("dimension sum {dim_sum}"))?;
    all_checks_pass(&inj, &lam, &r)?;
    ensure(elapsed < B4_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "all 35 printed terms exact, plus 3 charge -1 mirror terms the printed list omits; sum n*dim = 1650; {:.1} ms",
        elapsed.as_secs_f64() * 1e3
    ))
}

fn criterion_3() -> Result<String, String> {
    let inj = Injection::from_tokens("B4", "A3xU1").unwrap();
    let lam = w("2,2,1,0");
    let (_, trace) = branch_factorized_traced(&inj, &lam, EngineOptions::default()).unwrap();
    ensure(trace.levels.len() == 11, || format!("{} levels", trace.levels.len()))?;
    let level = |a: i64| trace.level(a).unwrap();
    let zeroth: &[(&str, i64)] = &[
        ("2,2,1,0", 1),
        ("2,2,-1,2", -1),
        ("2,0,3,0", -1),
        ("2,0,-1,4", 1),
        ("2,-2,3,2", 1),
        ("2,-2,1,4", -1),
        ("1,3,1,0", -1),
        ("1,3,-1,2", 1),
        ("1,0,4,0", 1),
        ("1,0,-1,5", -1),
        ("1,-2,4,2", -1),
        ("1,-2,1,5", 1),
    ];
    for (k, v) in zeroth {
        let got = level(0).n_tilde.get(&w(k)).copied().unwrap_or(0);
        ensure(got == *v, || format!("level 0 n~{k} = {got}, expected {v}"))?;
    }
    let first = BTreeMap::from([(w("2,2,0,0"), 1), (w("2,1,1,0"), 1)]);
    ensure(level(1).recorded == first, || format!("level 1 {:?}", level(1).recorded))?;
    let second = BTreeMap::from([(w("2,1,0,0"), 2), (w("1,1,1,0"), 1), (w("2,1,1,-1"), 1), (w("2,2,0,-1"), 1)]);
    ensure(level(2).recorded == second, || format!("level 2 {:?}", level(2).recorded))?;
    let third = level(3).n_tilde.get(&w("1,1,0,0")).copied().unwrap_or(0);
    ensure(third == 2, || format!("level 3 n~(1,1,0,0) = {third}"))?;
    // The relation behind the third-level value.
    let rel = trace.n_tilde(&w("1,1,1,0")) + trace.n_tilde(&w("2,1,0,0"))
        - 2 * trace.n_tilde(&w("2,2,1,0"))
        - trace.n_tilde(&w("1,3,1,0"));
    ensure(rel == 2, || format!("third-level relation gives {rel}"))?;

    let b2 = Injection::from_tokens("B2", "A1xU1").unwrap();
    let (_, t2) = branch_factorized_traced(&b2, &w("5/2,1/2"), EngineOptions::default()).unwrap();
    ensure(t2.level(0).unwrap().n_tilde.get(&w("-1/2,7/2")) == Some(&-1), || "B2 level 0".into())?;
    let b2_levels = [
        (1, vec![("5/2,-1/2", 1), ("3/2,1/2", 1)]),
        (2, vec![("1/2,1/2", 1), ("3/2,-1/2", 2)]),
        (3, vec![("1/2,-1/2", 2), ("3/2,-3/2", 1)]),
    ];
    for (a, expect) in b2_levels {
        let expect: BTreeMap<Weight, u64> = expect.into_iter().map(|(k, v)| (w(k), v)).collect();
        ensure(t2.level(a).unwrap().recorded == expect, || format!("B2 level {a}"))?;
    }
    Ok("12 zeroth-level values, levels 1-3 of B4 and levels 0-3 of B2 exact".into())
}

fn criterion_4() -> Result<String, String> {
    let mut rows = 0;
    for f in Family::ALL {
        for n in f.min_rank()..=6 {
            let inj = Injection::new(f, n).unwrap();
            let closed = xi_set_closed_form(&inj).unwrap();
            let omega = xi_set_via_omega(&inj).unwrap();
            let card = expected_cardinality(f, n);
            ensure(closed.len() == card && omega.len() == card, || format!("{f}{n}: cardinality"))?;
            if n > 5 {
                continue;
            }
            ensure(omega == closed, || format!("{f}{n}: subset and closed-form routes differ"))?;
            let t = xi_table_reference(&inj).unwrap();
            for r in &t.rows {
                let e = closed.get(&r.weight).ok_or_else(|| format!("{f}{n}: table row {} missing", r.weight))?;
                ensure(e.sign == r.sign, || format!("{f}{n}: sign at {}", r.weight))?;
                ensure(inj.sub_labels(&r.weight).unwrap() == r.labels, || format!("{f}{n}: labels at {}", r.weight))?;
                ensure(inj.charge(&r.weight) == Q::from_integer(r.charge), || format!("{f}{n}: charge at {}", r.weight))?;
                rows += 1;
            }
            if t.complete {
                ensure(t.xi_set(&inj) == closed, || format!("{f}{n}: complete table differs"))?;
            }
        }
    }
    Ok(format!("7 families, n <= 5 three-way equal ({rows} table rows), cardinalities n <= 6"))
}

fn criterion_5() -> Result<String, String> {
    for f in Family::ALL {
        for n in f.min_rank()..=5 {
            let inj = Injection::new(f, n).unwrap();
            let xi = xi_set_closed_form(&inj).unwrap();
            let via = fan_via_xi(&inj, &xi).map_err(|e| format!("{f}{n}: {e}"))?;
            ensure(via == fan_direct(&inj).unwrap(), || format!("{f}{n}"))?;
        }
    }
    let inj = Injection::from_tokens("B4", "A3xU1").unwrap();
    let fan = fan_direct(&inj).unwrap();
    let listed: &[(&str, i64)] = &[
        ("1,0,0,0", 1),
        ("0,1,0,0", 1),
        ("0,0,1,0", 1),
        ("0,0,0,1", 1),
        ("2,1,0,0", -1),
        ("2,0,1,0", -1),
        ("2,0,0,1", -1),
        ("1,0,0,2", -1),
        ("0,1,0,2", -1),
        ("0,0,1,2", -1),
        ("1,2,0,0", -1),
        ("0,2,1,0", -1),
        ("0,2,0,1", -1),
        ("1,0,2,0", -1),
        ("0,1,2,0", -1),
        ("0,0,2,1", -1),
        ("1,1,1,0", -2),
        ("1,1,0,1", -2),
        ("1,0,1,1", -2),
        ("0,1,1,1", -2),
    ];
    for (g, s) in listed {
        ensure(fan.signed(&w(g)) == *s, || format!("B4 fan at {g}: {}", fan.signed(&w(g))))?;
    }
    // The listed weights exhaust the two lowest nonempty levels (1 and 3).
    let low: Vec<_> = fan.entries().into_iter().filter(|(g, _)| fan.level(g) <= Q::from(3)).collect();
    ensure(low.len() == listed.len(), || format!("{} weights on levels <= 3", low.len()))?;
    ensure(fan.signed(&w("4,4,4,4")) == -1, || "deepest weight".into())?;
    Ok("fan_direct = fan_via_xi for 7 families n <= 5; B4 listed 20 weights and signs exact".into())
}

/// Evenly spread dominant weights with label sum at most 4.
fn suite_weights(rank: usize, count: usize) -> Vec<Vec<i64>> {
    fn rec(prefix: &mut Vec<i64>, rank: usize, left: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == rank {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=left {
            prefix.push(v);
            rec(prefix, rank, left - v, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    rec(&mut Vec::new(), rank, 4, &mut all);
    all.sort_by_key(|l| (l.iter().sum::<i64>(), l.clone()));
    if all.len() <= count {
        return all;
    }
    (0..count).map(|i| all[i * all.len() / count].clone()).collect()
}

fn criterion_6() -> (Result<String, String>, Branched) {
    let mut kept = Vec::new();
    let start = Instant::now();
    let mut runs = 0;
    let outcome = (|| {
        for f in Family::ALL {
            for n in f.min_rank()..=4 {
                let inj = Injection::new(f, n).unwrap();
                for labels in suite_weights(n, 20) {
                    let lam = inj.g.dynkin_to_e(&labels).unwrap();
                    let results: Vec<BranchingResult> = Method::ALL
                        .iter()
                        .map(|&m| branch(&inj, &lam, m).map_err(|e| format!("{f}{n} {labels:?} {m}: {e}")))
                        .collect::<Result<_, _>>()?;
                    for r in &results[1..] {
                        ensure(r.terms == results[0].terms, || {
                            format!("{f}{n} {labels:?}: {} differs from fan", r.method)
                        })?;
                    }
                    runs += 1;
                    kept.push((inj.clone(), lam, results.into_iter().next().unwrap()));
                }
            }
        }
        let elapsed = start.elapsed();
        ensure(elapsed < SUITE_LIMIT, || format!("took {elapsed:?}"))?;
        Ok(format!(
            "{runs} weights (rank 2: all 15 with label sum <= 4, ranks 3-4: 20) x 4 engines identical, {:.1} s",
            elapsed.as_secs_f64()
        ))
    })();
    (outcome, kept)
}

fn criterion_7(branched: &[(Injection, Weight, BranchingResult)]) -> Result<String, String> {
    let series = [Series::A, Series::B, Series::C, Series::D];
    let mut systems = Vec::new();
    for s in series {
        for r in 1..=4 {
            if let Ok(rs) = RootSystem::new(s, r) {
                systems.push(rs);
            }
        }
    }
    for rs in &systems {
        let psi0 = anomalous_weights(rs, &Weight::zero(rs.dim)).unwrap();
        ensure(weyl_denominator(rs).unwrap() == psi0.to_formal(rs.dim), || format!("denominator {rs}"))?;
    }
    let mut identities = 0;
    for rs in &systems {
        for labels in suite_weights(rs.rank, usize::MAX) {
            if labels.iter().sum::<i64>() > 3 {
                continue;
            }
            let hw = rs.dynkin_to_e(&labels).unwrap();
            let mut lhs = character(rs, &hw).unwrap();
            for a in &rs.positive_roots {
                lhs = lhs.times_one_minus(a);
            }
            ensure(lhs == anomalous_weights(rs, &hw).unwrap().to_formal(rs.dim), || {
                format!("character identity {rs} {labels:?}")
            })?;
            identities += 1;
        }
    }
    for (inj, lam, r) in branched {
        all_checks_pass(inj, lam, r)?;
    }
    let mut kh = 0;
    for n in [2, 3] {
        let inj = Injection::new(Family::AB, n).unwrap();
        let mut coords = vec![-1i64; n];
        loop {
            let eta = Weight::from_ints(&coords);
            if coords.iter().sum::<i64>() <= 6 {
                let direct = kostant_heckman(&inj, &eta).unwrap() as i64;
                let rec = kostant_heckman_recursive(&inj, &eta).unwrap();
                ensure(direct == rec, || format!("partition function at {eta}: {direct} vs {rec}"))?;
                kh += 1;
            }
            let mut i = 0;
            while i < n && coords[i] == 6 {
                coords[i] = -1;
                i += 1;
            }
            if i == n {
                break;
            }
            coords[i] += 1;
        }
    }
    // Sanity of the product expansion the fan uses.
    let p = expand_complement_product(&Injection::new(Family::AB, 2).unwrap().complement_roots).unwrap();
    ensure(p.coefficient(&Weight::zero(2)) == 1, || "constant term".into())?;
    Ok(format!(
        "denominator identity on {} systems, {identities} character identities, pointwise identity on {} branchings, {kh} partition values",
        systems.len(),
        branched.len()
    ))
}

fn criterion_8() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_fanbranch");
    let commands: &[&[&str]] = &[
        &["branch", "--algebra", "B4", "--sub", "A3xU1", "--hw", "0,1,1,0"],
        &["branch", "--algebra", "B4", "--sub", "A3xU1", "--hw", "0,1,1,0", "--format", "json"],
        &["branch", "--algebra", "B2", "--sub", "A1xU1", "--hw", "2,1", "--trace"],
        &["branch", "--algebra", "A3", "--sub", "A2xU1", "--hw", "1,0,1", "--charge-norm", "integerized"],
        &["fan", "--algebra", "B4", "--sub", "A3xU1"],
        &["xi", "--algebra", "D5", "--sub", "D4xU1", "--format", "json"],
        &["verify", "--algebra", "C3", "--sub", "A2xU1", "--hw", "1,1,0"],
    ];
    for args in commands {
        let run = || Command::new(bin).args(*args).output().unwrap();
        let (a, b) = (run(), run());
        ensure(a.status.success(), || format!("{args:?} exited {:?}", a.status))?;
        ensure(a.stdout == b.stdout && a.stderr == b.stderr, || format!("{args:?} not deterministic"))?;
    }
    Ok(format!("{} commands byte-identical across two runs", commands.len()))
}

fn main() {
    let mut ok = true;
    ok &= report(1, "B2 worked example", criterion_1);
    ok &= report(2, "B4 worked example", criterion_2);
    ok &= report(3, "recursion intermediates", criterion_3);
    ok &= report(4, "Xi fixtures", criterion_4);
    ok &= report(5, "fan identity", criterion_5);
    let (six, branched) = criterion_6();
    ok &= report(6, "four-engine agreement", move || six);
    ok &= report(7, "property suites", std::panic::AssertUnwindSafe(|| criterion_7(&branched)));
    ok &= report(8, "determinism", criterion_8);
    if !ok {
        std::process::exit(1);
    }
}
