//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails. All comparisons are exact.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use koszul::cohomology::{
    build_cf, coboundary1, coboundary2, is_cocycle, ModuleStructure, DEFAULT_TRIPLE_BOUND,
};
use koszul::parse::{parse_degrees, parse_perm, parse_word, render_degrees};
use koszul::verify::{lift_parity, MinWordOracle};
use koszul::words::relators;
use koszul::{
    act, is_morphism, kappa, kappa_exponent, morphism_bruteforce, Degree, GradedSequence,
    Permutation, Sign, Word, DEFAULT_EXHAUSTIVE_BOUND,
};

type Outcome = Result<String, String>;

const SEED: u64 = 20_240_601;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_koszul"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seq(d: &[i64]) -> GradedSequence {
    GradedSequence::from_degrees(d).unwrap()
}

fn pattern_degrees(rng: &mut ChaCha8Rng, n: usize, mask: u32) -> Vec<i64> {
    (0..n).map(|k| lift_parity(rng, (mask >> k) & 1 == 1, 50)).collect()
}

struct Table {
    elements: Vec<Permutation>,
    mul: Vec<usize>,
}

impl Table {
    fn new(n: usize) -> Self {
        let elements: Vec<Permutation> = Permutation::all(n).collect();
        let mut mul = Vec::new();
        for a in &elements {
            for b in &elements {
                mul.push((a * b).rank());
            }
        }
        Table { elements, mul }
    }

    fn order(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }
}

/// 1. kappa(rho, f) = (-1)^{z1z4+z3z4+z2z5+z2z4+z2z3}, and `example` prints
/// exactly those terms.
fn example_reproduction() -> Outcome {
    let rho = Permutation::from_one_line(&[2, 5, 3, 1, 4]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100 {
        let z: Vec<i64> = (0..5).map(|_| rng.gen_range(-50..=50)).collect();
        let big_z = z[0] * z[3] + z[2] * z[3] + z[1] * z[4] + z[1] * z[3] + z[1] * z[2];
        let expected = if big_z.rem_euclid(2) == 0 { Sign::Plus } else { Sign::Minus };
        let got = kappa(&rho, &seq(&z)).unwrap();
        ensure(got == expected, || format!("degrees {z:?}: kappa = {got}, (-1)^Z = {expected}"))?;
    }
    let out = bin().arg("example").output().unwrap();
    ensure(out.status.success(), || format!("`example` exited with {}", out.status))?;
    let stdout = String::from_utf8(out.stdout).unwrap();
    let line = stdout
        .lines()
        .find(|l| l.starts_with("Z = "))
        .ok_or("`example` printed no `Z = ` line")?;
    let terms: BTreeSet<&str> = line["Z = ".len()..].split(" + ").collect();
    let want: BTreeSet<&str> = ["z1z4", "z3z4", "z2z5", "z2z4", "z2z3"].into_iter().collect();
    ensure(terms == want, || format!("`example` printed {line:?}"))?;
    Ok(format!("100 random degree vectors agree; {line}"))
}

/// 2. Cocycle rule and generator values, exhaustive over sigma, tau and base
/// points g = pi(f), one degree vector per parity pattern, n = 2..5.
fn characterization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut checked: u64 = 0;
    for n in 2..=5 {
        let t = Table::new(n);
        let order = t.order();
        for mask in 0..(1u32 << n) {
            let d = pattern_degrees(&mut rng, n, mask);
            let f = seq(&d);
            let bases: Vec<GradedSequence> =
                t.elements.iter().map(|pi| act(pi, &f).unwrap()).collect();
            // row[pi][sigma] = kappa(sigma, pi(f))
            let rows: Vec<Vec<Sign>> = bases
                .iter()
                .map(|g| t.elements.iter().map(|s| kappa(s, g).unwrap()).collect())
                .collect();
            for pi in 0..order {
                for s in 0..order {
                    for tau in 0..order {
                        let lhs = rows[pi][t.mul(s, tau)];
                        let rhs = rows[t.mul(tau, pi)][s] * rows[pi][tau];
                        ensure(lhs == rhs, || {
                            format!(
                                "degrees {d:?}, g = {}(f), sigma = {}, tau = {}",
                                t.elements[pi], t.elements[s], t.elements[tau]
                            )
                        })?;
                        checked += 1;
                    }
                }
                let g = &bases[pi];
                for i in 1..n {
                    let si = Permutation::adjacent(n, i).unwrap();
                    let prod = g.get(i - 1).degree.value() * g.get(i).degree.value();
                    let expected = if prod.rem_euclid(2) == 0 { Sign::Plus } else { Sign::Minus };
                    ensure(rows[pi][si.rank()] == expected, || {
                        format!("kappa(s{i}, {g}) with degrees {d:?}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} identities, zero failures"))
}

/// 3. Bubble-sort path, inversion-sum exponent and breadth-first minimal word
/// agree on all of S_n, n = 2..5.
fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut checked = 0u64;
    for n in 2..=5 {
        let bfs = MinWordOracle::new(n).unwrap();
        for mask in 0..(1u32 << n) {
            for _ in 0..3 {
                let d = pattern_degrees(&mut rng, n, mask);
                let g = seq(&d);
                for sigma in Permutation::all(n) {
                    let a = kappa(&sigma, &g).unwrap();
                    let b = Sign::from_exponent(kappa_exponent(&sigma, &g).unwrap());
                    let c = bfs.kappa(&sigma, &g).unwrap();
                    ensure(a == b && b == c, || {
                        format!("sigma = {sigma}, degrees {d:?}: {a} / {b} / {c}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (sigma, g) pairs, zero disagreements"))
}

/// 4. Relators, conjugated relators and products of them never change the
/// word-level sign; 1000 random words per n = 2..4.
fn well_definedness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    for n in 2..=4 {
        let rels = relators(n).unwrap();
        for _ in 0..1000 {
            let mask = rng.gen_range(0..(1u32 << n));
            let g = seq(&pattern_degrees(&mut rng, n, mask));
            let w = Word::random(n, 32, &mut rng).unwrap();
            let before = w.kappa(&g).unwrap();
            let mut current = w.clone();
            for _ in 0..3 {
                let x = Word::random(n, 16, &mut rng).unwrap();
                let r = &rels[rng.gen_range(0..rels.len())];
                let conj = &(&x * r) * &x.inverse();
                ensure(conj.kappa(&g).unwrap() == Sign::Plus, || {
                    format!("kappa(x r x^-1, {g}) != +1 for x = {x}, r = {r}")
                })?;
                let cut = rng.gen_range(0..=current.len());
                let head = Word::new(n, current.letters()[..cut].to_vec()).unwrap();
                let tail = Word::new(n, current.letters()[cut..].to_vec()).unwrap();
                current = &(&head * &conj) * &tail;
                ensure(current.kappa(&g).unwrap() == before, || {
                    format!("inserting {conj} into {w} changed the sign at {g}")
                })?;
            }
            for r in &rels {
                ensure(r.kappa(&g).unwrap() == Sign::Plus, || format!("kappa({r}, {g}) != +1"))?;
            }
        }
    }
    Ok("3000 words, every relator and conjugated relator evaluates to +1".to_owned())
}

/// 5. morphism_bruteforce agrees with the parity criterion on every parity
/// pattern, and |f| = (1,1,0) gives the non-morphism witness.
fn morphism_criterion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut patterns = 0;
    for n in 2..=5 {
        for mask in 0..(1u32 << n) {
            let d: Vec<Degree> = pattern_degrees(&mut rng, n, mask).into_iter().map(Degree).collect();
            let brute = morphism_bruteforce(&d, DEFAULT_EXHAUSTIVE_BOUND).unwrap();
            let odd = (0..n).filter(|k| (mask >> k) & 1 == 1).count();
            let stated = odd == 0 || odd == 1 || odd == n;
            ensure(brute == stated && is_morphism(&d).unwrap() == stated, || {
                format!("degrees {d:?}: bruteforce {brute}, criterion {stated}")
            })?;
            patterns += 1;
        }
    }
    // The composite of (1,2) and (2,3) that moves f to (f3, f1, f2). Under the
    // left-action convention this is (1 2)(2 3) = [2,3,1] = s1 s2.
    let f = seq(&[1, 1, 0]);
    let s1 = parse_perm("(1 2)", 3).unwrap();
    let s2 = parse_perm("(2 3)", 3).unwrap();
    let comp = &s1 * &s2;
    let moved = act(&comp, &f).unwrap();
    ensure(moved.labels() == ["f3", "f1", "f2"], || format!("composite moves f to {moved}"))?;
    let whole = kappa(&comp, &f).unwrap();
    let split = kappa(&s2, &f).unwrap() * kappa(&s1, &f).unwrap();
    ensure(whole != split, || format!("kappa({comp}, f) = {whole} equals the product {split}"))?;
    Ok(format!(
        "{patterns} parity patterns agree; |f| = (1,1,0): kappa({comp}, f) = {whole} != kappa((2,3), f) kappa((1,2), f) = {split}"
    ))
}

/// 6. Coboundary identity, cocycle criterion, c_f = d(u), non-symmetry.
fn cohomology() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let mut triples = 0u64;
    for n in 2..=4 {
        let t = Table::new(n);
        let order = t.order();
        for mask in 0..(1u32 << n) {
            let d = pattern_degrees(&mut rng, n, mask);
            let f = seq(&d);
            let cf = build_cf(&f, DEFAULT_EXHAUSTIVE_BOUND).unwrap();
            let odd = (0..n).filter(|k| (mask >> k) & 1 == 1).count();
            let criterion = odd <= 1 || odd == n;
            for u in [ModuleStructure::Trivial, ModuleStructure::Signature] {
                let delta = coboundary2(&cf, u).unwrap();
                for s in 0..order {
                    let u_s = if u == ModuleStructure::Signature {
                        t.elements[s].signature()
                    } else {
                        Sign::Plus
                    };
                    for tau in 0..order {
                        for r in 0..order {
                            let lhs = delta.eval_by_rank(s, tau, r);
                            let rhs = u_s * cf.get_by_rank(s, tau).inverse();
                            ensure(lhs == rhs, || {
                                format!("degrees {d:?}, u = {}, ranks ({s},{tau},{r})", u.name())
                            })?;
                            triples += 1;
                        }
                    }
                }
                // u = 1 iff at most one odd degree, u = sgn iff all odd
                let right_u = match u {
                    ModuleStructure::Trivial => odd <= 1,
                    ModuleStructure::Signature => odd == n,
                };
                let cocycle = is_cocycle(&f, u, DEFAULT_TRIPLE_BOUND).unwrap();
                ensure(cocycle == (criterion && right_u), || {
                    format!("degrees {d:?}, u = {}: is_cocycle = {cocycle}", u.name())
                })?;
                if cocycle {
                    let v = cf.column(&Permutation::identity(n)).unwrap();
                    ensure(coboundary1(&v, u).unwrap() == cf, || {
                        format!("degrees {d:?}: d(c_f(-, e)) != c_f for u = {}", u.name())
                    })?;
                }
            }
        }
    }
    let cf = build_cf(&seq(&[1, 1, 0]), DEFAULT_EXHAUSTIVE_BOUND).unwrap();
    let e = Permutation::identity(3);
    let s1 = Permutation::adjacent(3, 1).unwrap();
    let (a, b) = (cf.get(&e, &s1).unwrap(), cf.get(&s1, &e).unwrap());
    ensure(a == Sign::Plus && b == Sign::Minus, || format!("c_f(e,s1) = {a}, c_f(s1,e) = {b}"))?;
    Ok(format!(
        "{triples} coboundary evaluations; c_f(e,s1) = {a} != c_f(s1,e) = {b} for |f| = (1,1,0)"
    ))
}

/// 7. All-even degrees give +1, all-odd give the signature, and even shifts
/// (including into negative degrees) change nothing.
fn degenerate_cases() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    for n in 2..=5 {
        for _ in 0..4 {
            let even = seq(&pattern_degrees(&mut rng, n, 0));
            let odd = seq(&pattern_degrees(&mut rng, n, (1 << n) - 1));
            let mask = rng.gen_range(0..(1u32 << n));
            let mixed = pattern_degrees(&mut rng, n, mask);
            let shifted: Vec<i64> = mixed.iter().map(|&x| x + 2 * rng.gen_range(-500..=500i64)).collect();
            let negative: Vec<i64> = mixed.iter().map(|&x| x - 1000).collect();
            for sigma in Permutation::all(n) {
                ensure(kappa(&sigma, &even).unwrap() == Sign::Plus, || {
                    format!("{sigma} at all-even {even:?}")
                })?;
                ensure(kappa(&sigma, &odd).unwrap() == sigma.signature(), || {
                    format!("{sigma} at all-odd {odd:?}")
                })?;
                let k = kappa(&sigma, &seq(&mixed)).unwrap();
                ensure(
                    k == kappa(&sigma, &seq(&shifted)).unwrap()
                        && k == kappa(&sigma, &seq(&negative)).unwrap(),
                    || format!("{sigma}: {mixed:?} vs {shifted:?} vs {negative:?}"),
                )?;
            }
        }
    }
    Ok("n = 2..5, all sigma".to_owned())
}

/// 8. Round trips, exit statuses, and `verify --n 5`.
fn cli_contract() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    for n in 2..=5 {
        for sigma in Permutation::all(n) {
            ensure(parse_perm(&sigma.to_string(), n).unwrap() == sigma, || format!("one-line {sigma}"))?;
            ensure(parse_perm(&sigma.cycle_string(), n).unwrap() == sigma, || {
                format!("cycles {}", sigma.cycle_string())
            })?;
        }
        for _ in 0..200 {
            let w = Word::random(n, 32, &mut rng).unwrap();
            ensure(parse_word(&w.to_string(), n).unwrap() == w, || format!("word {w}"))?;
            let d: Vec<Degree> = (0..n).map(|_| Degree(rng.gen_range(-1_000_000..=1_000_000))).collect();
            ensure(parse_degrees(&render_degrees(&d)).unwrap() == d, || format!("degrees {d:?}"))?;
        }
    }

    let cases: &[(&[&str], i32)] = &[
        (&["sign", "--degrees", "1,1,1,1,1", "--perm", "[2,5,3,1,4]"], 0),
        (&["check-morphism", "--degrees", "0,2,4"], 0),
        (&["check-morphism", "--degrees", "1,1,0"], 1),
        (&["check-cocycle", "--degrees", "1,1,0"], 1),
        (&["sign", "--degrees", "1,", "--perm", "[1,2]"], 2),
        (&["sign", "--degrees", "1,2,3", "--perm", "[1,1,2]"], 2),
        (&["frobnicate"], 2),
        (&["sign", "--degrees", "1,2", "--perm", "[2,1]", "--bogus"], 2),
        (&["table", "--degrees", "1,1,1,1,1,1,1"], 3),
        (&["verify", "--n", "7"], 3),
    ];
    for (args, want) in cases {
        let out = bin().args(*args).output().unwrap();
        ensure(out.status.code() == Some(*want), || {
            format!("koszul {}: exit {:?}, expected {want}", args.join(" "), out.status.code())
        })?;
    }
    let out = bin()
        .args(["sign", "--degrees", "1,1,1,1,1", "--perm", "[2,5,3,1,4]"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    ensure(text.contains("sign: -1") && text.contains("exponent_mod2: 1"), || text.clone())?;
    let out = bin()
        .args(["--json", "sign", "--degrees", "1,1,1,1,1", "--perm", "[2,5,3,1,4]"])
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    ensure(doc["sign"] == -1 && doc["exponent_mod2"] == 1 && doc["n"] == 5, || doc.to_string())?;

    let out = bin().args(["verify", "--n", "5"]).output().unwrap();
    ensure(out.status.code() == Some(0), || {
        format!("verify --n 5 exited {:?}:\n{}", out.status.code(), String::from_utf8_lossy(&out.stdout))
    })?;
    Ok(format!("round trips for n = 2..5, {} exit-status cases, verify --n 5 exits 0", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 example reproduction", example_reproduction),
        ("2 characterization", characterization),
        ("3 oracle equivalence", oracle_equivalence),
        ("4 well-definedness on the free group", well_definedness),
        ("5 morphism criterion", morphism_criterion),
        ("6 cohomology", cohomology),
        ("7 degenerate and edge behaviour", degenerate_cases),
        ("8 CLI contract", cli_contract),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_owned()));
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", 8 - failures, 8);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
