//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use bbq_core::bilinear::{brute_force_search, build_bilinear, search, BilinearSpec, SearchOptions};
use bbq_core::biquandle::{alexander_biquandle, check_axioms, omega, FiniteBiquandle};
use bbq_core::invariant::{counting_invariant, enumerate_colorings, phi_bb, phi_specialize};
use bbq_core::link::{builtin_link, parse_gauss, LinkDiagram, Sign, BUILTIN_LINKS};
use bbq_core::modular::ModVector;

const BB1: &str = "4,2,3,3,[[0,2],[2,0]]";

const ALEXANDER_GOLDEN: &str = "
3
3 2 1 3 2 1
1 3 2 1 3 2
2 1 3 2 1 3
2 2 2 2 2 2
1 1 1 1 1 1
3 3 3 3 3 3
";

/// The twelve reference rows at cardinality up to 27.
const TABLE_GOLDEN: [&str; 12] = [
    "3,2,2,2,[[0,0],[0,0]]",
    "3,2,2,2,[[0,1],[2,0]]",
    "4,2,1,3,[[2,0],[2,2]]",
    "4,2,1,3,[[2,1],[1,2]]",
    "4,2,3,1,[[2,0],[2,2]]",
    "4,2,3,1,[[2,1],[1,2]]",
    "4,2,3,3,[[0,0],[0,0]]",
    "4,2,3,3,[[0,2],[2,0]]",
    "4,2,3,3,[[0,1],[3,0]]",
    "5,2,4,4,[[0,0],[0,0]]",
    "5,2,4,4,[[0,1],[4,0]]",
    "3,3,2,2,[[0,0,0],[0,0,0],[0,0,0]]",
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn bbq(args: &[&str]) -> (Option<i32>, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_bbq"))
        .args(args)
        .env_remove("BBQ_CARRIER_BOUND")
        .output()
        .expect("run bbq");
    (o.status.code(), String::from_utf8(o.stdout).unwrap())
}

fn normalize(text: &str) -> Vec<Vec<&str>> {
    text.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>())
        .filter(|l| !l.is_empty())
        .collect()
}

fn table_specs(k: usize) -> Vec<BilinearSpec> {
    let (code, out) = bbq(&["table", "--max-cardinality", &k.to_string()]);
    assert_eq!(code, Some(0), "table {k} failed");
    out.lines()
        .filter_map(|l| l.split_whitespace().next().filter(|s| s.contains('[')))
        .map(|s| s.parse().unwrap())
        .collect()
}

fn reidemeister_codes() -> Vec<&'static str> {
    vec!["", "O1+U1+", "O1-U1-", "O1+U2-U1+O2-"]
}

fn test_diagrams() -> Vec<(String, LinkDiagram)> {
    let mut out: Vec<(String, LinkDiagram)> = BUILTIN_LINKS
        .iter()
        .map(|n| (n.to_string(), builtin_link(n).unwrap()))
        .collect();
    for code in reidemeister_codes().into_iter().skip(1) {
        out.push((code.to_string(), parse_gauss(code).unwrap()));
    }
    out
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let (code, out) = bbq(&["matrix", "--alexander", "3,2,1"]);
    let elapsed = start.elapsed();
    if code != Some(0) {
        return Err(format!("exit {code:?}"));
    }
    if normalize(&out) != normalize(ALEXANDER_GOLDEN) {
        return Err(format!("matrix differs:\n{out}"));
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("6x6 block matrix reproduced in {elapsed:.0?}"))
}

fn criterion2() -> Outcome {
    let golden: BTreeSet<String> = TABLE_GOLDEN.iter().map(|s| s.to_string()).collect();
    let found: BTreeSet<String> = table_specs(27).iter().map(|s| s.to_string()).collect();
    let small = (table_specs(8).len(), table_specs(9).len());
    if small != (0, 2) {
        return Err(format!("K=8,9 gave {small:?} entries, expected (0, 2)"));
    }
    if found == golden {
        return Ok("exactly the 12 reference entries".into());
    }
    let extra: Vec<_> = found.difference(&golden).collect();
    let missing: Vec<_> = golden.difference(&found).collect();
    Err(format!(
        "{} entries; extra {extra:?}; missing {missing:?}",
        found.len()
    ))
}

fn criterion3() -> Outcome {
    let (code, out) = bbq(&["verify", "--spec", BB1]);
    let axioms = code == Some(0) && out.lines().filter(|l| l.ends_with(": pass")).count() == 4;
    let w = omega(3, 3, 4).map_err(|e| e.to_string())?;
    match (axioms, w == 1) {
        (true, true) => Ok("all four axioms pass; omega(3,3,4) = 1".into()),
        (true, false) => Err(format!("axioms pass, but omega(3,3,4) = {w}, expected 1")),
        (false, _) => Err(format!("verify exit {code:?}:\n{out}")),
    }
}

fn criterion4() -> Outcome {
    let spec: BilinearSpec = BB1.parse().unwrap();
    let d = builtin_link("trefoil").unwrap();
    let phi = phi_bb(&d, &spec).map_err(|e| e.to_string())?;
    let hom = counting_invariant(&d, &build_bilinear(&spec).unwrap());
    let expected = "q z + 3 q z^2 + 12 q^2 z^4";
    let (code, out) = bbq(&["invariant", "--link", "trefoil", "--spec", BB1]);
    let cli_expected = format!("phi = {expected}\nhom = 16\n");
    if phi.to_string() != expected || hom != 16 {
        return Err(format!("phi = {phi}, hom = {hom}"));
    }
    if code != Some(0) || out != cli_expected {
        return Err(format!("cli printed {out:?}"));
    }
    Ok(format!("phi = {phi}, hom = {hom}"))
}

fn criterion5() -> Outcome {
    let specs = table_specs(27);
    let mut pairs = 0;
    for spec in &specs {
        let q = build_bilinear(spec).unwrap();
        for name in BUILTIN_LINKS {
            let d = builtin_link(name).unwrap();
            let phi = phi_bb(&d, spec).map_err(|e| e.to_string())?;
            let count = counting_invariant(&d, &q);
            if phi_specialize(&phi, 1, 1) != count as i128 {
                return Err(format!("{name} under {spec}: phi(1,1) != {count}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (link, spec) pairs"))
}

/// All `N^S` assignments tested against every crossing.
fn oracle_colorings(d: &LinkDiagram, q: &FiniteBiquandle) -> Vec<Vec<usize>> {
    let (n, s) = (q.size(), d.semiarc_count());
    let mut found = Vec::new();
    let mut color = vec![0usize; s];
    for mut code in 0..n.pow(s as u32) {
        for c in color.iter_mut().rev() {
            *c = code % n;
            code /= n;
        }
        let ok = d.crossings().values().all(|x| {
            let (u, o) = (color[x.under_in], color[x.over_in]);
            let (uo, oo) = match x.sign {
                Sign::Positive => (q.up(u, o), q.low(o, u)),
                Sign::Negative => (q.upbar(u, o), q.lowbar(o, u)),
            };
            color[x.under_out] == uo && color[x.over_out] == oo
        });
        if ok {
            found.push(color.clone());
        }
    }
    found
}

fn criterion6() -> Outcome {
    for (n, m) in [(2u32, 2usize), (3, 2)] {
        for (exclude_symplectic, up_to_isomorphism) in [(true, true), (false, false)] {
            let opts = SearchOptions {
                exclude_symplectic,
                up_to_isomorphism,
                ..SearchOptions::default()
            };
            let pruned = search(n, m, &opts).map_err(|e| e.to_string())?;
            let brute = brute_force_search(n, m, &opts).map_err(|e| e.to_string())?;
            if pruned != brute {
                return Err(format!(
                    "(Z_{n})^{m}: pruned {} vs brute {}",
                    pruned.len(),
                    brute.len()
                ));
            }
        }
    }
    let mut targets: Vec<(String, FiniteBiquandle)> = table_specs(27)
        .into_iter()
        .map(|s| (s.to_string(), build_bilinear(&s).unwrap()))
        .collect();
    for (n, s, t) in [(3, 2, 1), (5, 2, 3), (7, 3, 5)] {
        targets.push((
            format!("alexander({n},{s},{t})"),
            alexander_biquandle(n, s, t).unwrap(),
        ));
    }
    let mut checked = 0;
    for (qname, q) in &targets {
        for (dname, d) in test_diagrams() {
            if (q.size() as u64).saturating_pow(d.semiarc_count() as u32) > 1_000_000 {
                continue;
            }
            let fast: Vec<Vec<usize>> = enumerate_colorings(&d, q)
                .into_iter()
                .map(|c| c.assignment)
                .collect();
            if fast != oracle_colorings(&d, q) {
                return Err(format!(
                    "{dname} by {qname}: enumeration differs from oracle"
                ));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "searches agree on (Z_2)^2, (Z_3)^2; {checked} coloring sets match the oracle"
    ))
}

fn criterion7() -> Outcome {
    let mut specs = Vec::new();
    let raw = SearchOptions {
        exclude_symplectic: false,
        up_to_isomorphism: false,
        ..SearchOptions::default()
    };
    for (n, m) in [
        (2u32, 2usize),
        (3, 2),
        (4, 2),
        (5, 2),
        (2, 3),
        (3, 3),
        (2, 4),
    ] {
        specs.extend(search(n, m, &raw).map_err(|e| e.to_string())?);
    }
    for spec in &specs {
        check_structure_laws(spec).map_err(|e| format!("{spec}: {e}"))?;
    }
    Ok(format!("{} emitted specs", specs.len()))
}

fn check_structure_laws(spec: &BilinearSpec) -> Result<(), String> {
    let n = spec.modulus();
    let inv = |x: u32| (1..n.get()).find(|y| n.mul(x, *y) == 1).unwrap();
    let (alpha, beta) = (spec.alpha(), spec.beta());
    let (ai, bi) = (inv(alpha), inv(beta));
    let w = n.add(
        n.sub(n.mul(ai, ai), n.mul(n.mul(ai, ai), n.mul(bi, bi))),
        n.neg(n.mul(ai, beta)),
    );
    let diag = n.sub(bi, alpha);
    let rows = spec.form().rows();
    for (i, row) in rows.iter().enumerate() {
        if row[i] != diag {
            return Err(format!("A[{i}][{i}] = {} != {diag}", row[i]));
        }
    }
    let q = build_bilinear(spec).map_err(|e| e.to_string())?;
    if !check_axioms(&q).all_pass() {
        return Err("emitted spec fails the axioms".into());
    }
    let elems: Vec<ModVector> = (0..q.size())
        .map(|i| q.carrier().vector(i).unwrap().clone())
        .collect();
    let index = |v: Vec<u32>| {
        elems
            .iter()
            .position(|e| e.coords() == v.as_slice())
            .unwrap()
    };
    let f = |x: &ModVector, y: &ModVector| {
        let mut s = 0;
        for (i, xi) in x.coords().iter().enumerate() {
            for (j, yj) in y.coords().iter().enumerate() {
                s = n.add(s, n.mul(*xi, n.mul(rows[i][j], *yj)));
            }
        }
        s
    };
    let lin = |a: u32, x: &ModVector, b: u32, y: &ModVector| -> Vec<u32> {
        x.coords()
            .iter()
            .zip(y.coords())
            .map(|(p, r)| n.add(n.mul(a, *p), n.mul(b, *r)))
            .collect()
    };
    for (a, x) in elems.iter().enumerate() {
        // up(a, a) = alpha a + (beta^-1 - alpha) a
        if q.up(a, a) != index(lin(alpha, x, diag, x)) {
            return Err(format!("up(a,a) != alpha a + (beta^-1 - alpha) a at a={x}"));
        }
        for (b, y) in elems.iter().enumerate() {
            if q.upbar(a, b) != index(lin(ai, x, n.mul(w, f(x, y)), y)) {
                return Err(format!("upbar({x},{y}) is not alpha^-1 x + omega f(x,y) y"));
            }
            if q.low(q.lowbar(a, b), b) != a || q.lowbar(q.low(a, b), b) != a {
                return Err(format!("low and lowbar are not inverse at ({x},{y})"));
            }
        }
    }
    Ok(())
}

fn criterion8() -> Outcome {
    let mut specs = table_specs(27);
    specs.push(BB1.parse().unwrap());
    for spec in &specs {
        let q = build_bilinear(spec).unwrap();
        let mut values = Vec::new();
        for code in reidemeister_codes() {
            let d = parse_gauss(code).unwrap();
            let phi = phi_bb(&d, spec).map_err(|e| e.to_string())?;
            values.push((code, phi, counting_invariant(&d, &q)));
        }
        let (_, ref_phi, ref_count) = &values[0];
        for (code, phi, count) in &values[1..] {
            if phi != ref_phi || count != ref_count {
                return Err(format!(
                    "{spec}: {code:?} gives {phi} / {count}, unknot gives {ref_phi} / {ref_count}"
                ));
            }
        }
    }
    Ok(format!(
        "{} codes agree under {} biquandles",
        reidemeister_codes().len(),
        specs.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("Alexander golden matrix", criterion1),
        ("table at cardinality 27", criterion2),
        ("bb1 verification", criterion3),
        ("trefoil golden invariant", criterion4),
        ("specialization", criterion5),
        ("oracle equivalences", criterion6),
        ("structure laws", criterion7),
        ("Reidemeister invariance", criterion8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
