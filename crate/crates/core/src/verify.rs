//! Exhaustive and sampled verification of the sign map's identities.
//!
//! [`run_suite`] sweeps `n = 2..=n_max`. Every parity pattern in `{0,1}^n` is
//! lifted to integer degree vectors (random values in `[-50, 50]` plus one
//! large-magnitude lift), and each identity is checked over all of `S_n` for
//! `n <= 5` and over random samples at `n = 6`. Besides the bubble-sort path
//! behind [`kappa`], two independent oracles are used: the inversion-sum
//! exponent [`kappa_exponent`] and [`kappa_bruteforce_minword`], which finds a
//! shortest generator word by breadth-first search.

use std::collections::VecDeque;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cohomology::{
    build_cf, coboundary1, coboundary2_in, is_cocycle, is_cocycle_auto, CocycleCheck,
    ModuleStructure, OneCochain, SymmetricGroup, TwoCochain,
};
use crate::words::relators;
use crate::{
    act, is_constant_one, is_morphism, kappa, kappa_exponent, kappa_terms, morphism_bruteforce,
    Degree, Error, Generator, GradedSequence, Permutation, Result, Sign, Word,
    DEFAULT_EXHAUSTIVE_BOUND,
};

/// Largest `n` swept over all of `S_n`; above it permutations are sampled.
pub const EXHAUSTIVE_SUITE_BOUND: usize = 5;
/// Largest `n` accepted by [`kappa_bruteforce_minword`].
pub const MINWORD_BOUND: usize = 5;
/// Default length cap for random words.
pub const DEFAULT_MAX_WORD_LEN: usize = 32;

/// Degrees of the worked example are lifted from this range.
pub const DEGREE_RANGE: i64 = 50;

/// The worked example's permutation, `g = (f4, f1, f3, f5, f2) = rho(f)`.
pub const EXAMPLE_PERM: [usize; 5] = [2, 5, 3, 1, 4];
/// The exponent of `kappa(rho, f)` as pairs `(i, j)` standing for `z_i z_j`.
pub const EXAMPLE_TERMS: [(usize, usize); 5] = [(1, 4), (3, 4), (2, 5), (2, 4), (2, 3)];

/// Shortest-word oracle for `S_n`, built by breadth-first search from the
/// identity along right multiplication by the `s_i`.
#[derive(Debug, Clone)]
pub struct MinWordOracle {
    n: usize,
    /// `(parent rank, generator index)` for every non-identity rank.
    parent: Vec<Option<(usize, usize)>>,
}

impl MinWordOracle {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("n must be at least 2, got {n}")));
        }
        Error::check_bound(n, MINWORD_BOUND)?;
        let order: usize = (1..=n).product();
        let mut parent = vec![None; order];
        let mut seen = vec![false; order];
        let id = Permutation::identity(n);
        seen[id.rank()] = true;
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let from = p.rank();
            for i in 1..n {
                let next = &p * &Permutation::adjacent(n, i)?;
                let r = next.rank();
                if !seen[r] {
                    seen[r] = true;
                    parent[r] = Some((from, i));
                    queue.push_back(next);
                }
            }
        }
        Ok(MinWordOracle { n, parent })
    }

    /// A shortest word `s_{i_1} ... s_{i_m}` with product `sigma`.
    pub fn word(&self, sigma: &Permutation) -> Result<Word> {
        Error::check_len(self.n, sigma.len())?;
        let mut letters = Vec::new();
        let mut r = sigma.rank();
        while let Some((p, i)) = self.parent[r] {
            letters.push(Generator::s(i));
            r = p;
        }
        letters.reverse();
        Word::new(self.n, letters)
    }

    pub fn kappa(&self, sigma: &Permutation, g: &GradedSequence) -> Result<Sign> {
        self.word(sigma)?.kappa(g)
    }
}

/// `kappa(sigma, g)` evaluated on a breadth-first shortest word; `n <= 5`.
pub fn kappa_bruteforce_minword(sigma: &Permutation, g: &GradedSequence) -> Result<Sign> {
    Error::check_len(sigma.len(), g.len())?;
    MinWordOracle::new(sigma.len())?.kappa(sigma, g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub population: String,
    pub passed: u64,
    pub failed: u64,
    pub first_counterexample: Option<String>,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verification suite: n = {}..={}, seed = {}",
            self.n_min, self.n_max, self.seed
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{} {:<40} passed {:>10}  failed {:>4}  [{}]",
                if c.ok() { "PASS" } else { "FAIL" },
                c.name,
                c.passed,
                c.failed,
                c.population
            )?;
            if let Some(cx) = &c.first_counterexample {
                writeln!(f, "       first counterexample: {cx}")?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.ok()).count();
        write!(
            f,
            "{} of {} checks passed",
            self.checks.len() - failed,
            self.checks.len()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n_max: usize,
    /// Random lifts per parity pattern, on top of one large-magnitude lift.
    pub degree_samples: usize,
    pub seed: u64,
    /// Random words per `n` for the free-group checks.
    pub words_per_n: usize,
    pub max_word_len: usize,
    /// Random tuples per degree vector where a sweep is sampled.
    pub samples_per_check: usize,
}

impl SuiteConfig {
    pub fn new(n_max: usize, degree_samples: usize, seed: u64) -> Self {
        SuiteConfig {
            n_max,
            degree_samples,
            seed,
            words_per_n: 1000,
            max_word_len: DEFAULT_MAX_WORD_LEN,
            samples_per_check: 2000,
        }
    }
}

pub fn run_suite(n_max: usize, degree_samples: usize, seed: u64) -> Result<SuiteReport> {
    run_suite_with(&SuiteConfig::new(n_max, degree_samples, seed))
}

pub fn run_suite_with(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.n_max < 2 {
        return Err(Error::Domain(format!(
            "n_max must be at least 2, got {}",
            config.n_max
        )));
    }
    Error::check_bound(config.n_max, DEFAULT_EXHAUSTIVE_BOUND)?;
    let mut suite = Suite {
        config,
        rng: ChaCha8Rng::seed_from_u64(config.seed),
        checks: Vec::new(),
    };
    for n in 2..=config.n_max {
        suite.sweep_n(n)?;
        suite.words_n(n)?;
    }
    suite.special_cases()?;
    Ok(SuiteReport {
        seed: config.seed,
        n_min: 2,
        n_max: config.n_max,
        checks: suite.checks,
    })
}

/// Random integer in `[-range, range]` with the given parity.
pub fn lift_parity<R: Rng + ?Sized>(rng: &mut R, odd: bool, range: i64) -> i64 {
    let v = rng.gen_range(-range..=range);
    if (v.rem_euclid(2) == 1) == odd {
        v
    } else if v < range {
        v + 1
    } else {
        v - 1
    }
}

/// Degree lifts of one parity pattern (bit `k` of `mask` is the parity of
/// `|f_{k+1}|`): `samples` lifts from `[-50, 50]` followed by one lift with
/// magnitudes around `10^15`.
pub fn lift_pattern<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    mask: u32,
    samples: usize,
) -> Vec<Vec<Degree>> {
    let bit = |k: usize| (mask >> k) & 1 == 1;
    let mut out: Vec<Vec<Degree>> = (0..samples.max(1))
        .map(|_| (0..n).map(|k| Degree(lift_parity(rng, bit(k), DEGREE_RANGE))).collect())
        .collect();
    out.push(
        (0..n)
            .map(|k| Degree(lift_parity(rng, bit(k), 1_000_000_000_000_000)))
            .collect(),
    );
    out
}

fn render_degrees(d: &[Degree]) -> String {
    crate::parse::render_degrees(d)
}

fn render_perm(p: &Permutation) -> String {
    format!("{} = {}", p, p.cycle_string())
}

/// Accumulates one [`CheckResult`] per name, in first-use order.
struct Suite<'a> {
    config: &'a SuiteConfig,
    rng: ChaCha8Rng,
    checks: Vec<CheckResult>,
}

impl Suite<'_> {
    fn record(&mut self, name: &str, population: &str, ok: bool, cx: impl FnOnce() -> String) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(CheckResult {
                    name: name.to_owned(),
                    population: population.to_owned(),
                    passed: 0,
                    failed: 0,
                    first_counterexample: None,
                });
                self.checks.len() - 1
            }
        };
        let c = &mut self.checks[idx];
        if ok {
            c.passed += 1;
        } else {
            c.failed += 1;
            if c.first_counterexample.is_none() {
                c.first_counterexample = Some(cx());
            }
        }
    }

    fn sweep_n(&mut self, n: usize) -> Result<()> {
        let exhaustive = n <= EXHAUSTIVE_SUITE_BOUND;
        let group = SymmetricGroup::new(n, DEFAULT_EXHAUSTIVE_BOUND)?;
        let minword = if n <= MINWORD_BOUND {
            Some(MinWordOracle::new(n)?)
        } else {
            None
        };
        self.module_morphisms(n, &group);
        for mask in 0..(1u32 << n) {
            let lifts = lift_pattern(&mut self.rng, n, mask, self.config.degree_samples);
            for (lift_idx, degrees) in lifts.iter().enumerate() {
                let f = GradedSequence::from_degrees(degrees)?;
                let mut orbit = Orbit::new(&f, &group);
                let ctx = Ctx {
                    n,
                    group: &group,
                    degrees,
                    exhaustive,
                    primary: lift_idx == 0,
                };
                self.oracles(&ctx, &mut orbit, minword.as_ref())?;
                self.action_identities(&ctx, &mut orbit)?;
                self.parity(&ctx, &f)?;
                if ctx.primary {
                    self.morphism(&ctx, &mut orbit)?;
                    self.cohomology(&ctx, &f, &mut orbit)?;
                }
            }
        }
        Ok(())
    }

    fn sample_or_all(&mut self, order: usize, exhaustive: bool) -> Vec<usize> {
        if exhaustive {
            (0..order).collect()
        } else {
            (0..self.config.samples_per_check.min(order))
                .map(|_| self.rng.gen_range(0..order))
                .collect()
        }
    }

    fn oracles(&mut self, ctx: &Ctx, orbit: &mut Orbit, minword: Option<&MinWordOracle>) -> Result<()> {
        let f = orbit.base(0).clone();
        let population = "sigma over S_n (sampled at n = 6), every lift of every parity pattern";
        for s in self.sample_or_all(ctx.group.order(), ctx.exhaustive) {
            let sigma = ctx.group.element(s);
            let k = orbit.get(s, 0)?;
            let z = kappa_exponent(sigma, &f)?;
            self.record("oracle.inversion_sum", &population, k == Sign::from_exponent(z), || {
                format!("sigma={} degrees=[{}]", render_perm(sigma), render_degrees(ctx.degrees))
            });
            if let Some(m) = minword {
                let b = m.kappa(sigma, &f)?;
                self.record("oracle.bfs_minword", &population, k == b, || {
                    format!("sigma={} degrees=[{}]", render_perm(sigma), render_degrees(ctx.degrees))
                });
            }
        }
        Ok(())
    }

    /// Identities of the action: generator values, the cocycle rule, the
    /// inverse rule, the inverse-pair lemma and base-point independence.
    fn action_identities(&mut self, ctx: &Ctx, orbit: &mut Orbit) -> Result<()> {
        let order = ctx.group.order();
        let n = ctx.n;
        let full = ctx.exhaustive && ctx.primary;
        let base_points = if full {
            (0..order).collect()
        } else {
            let mut v = vec![0];
            v.extend(self.sample_or_all(order, false).into_iter().take(8));
            v
        };

        // generator values and the inverse-pair lemma
        for &pi in &base_points {
            let g = orbit.base(pi).clone();
            let par = g.parities();
            for i in 1..n {
                let si = Permutation::adjacent(n, i)?;
                let expected = Sign::from_exponent((par[i - 1] & par[i]) as u8);
                let got = orbit.get(si.rank(), pi)?;
                self.record(
                    "kappa.generator_values",
                    "s_i at base points g = pi(f); all pi for n <= 5 (first lift), sampled otherwise",
                    got == expected,
                    || format!("i={i} g={g} degrees=[{}]", render_degrees(&g.degrees())),
                );
                let s = Word::generator(n, Generator::s(i))?;
                let s_inv = Word::generator(n, Generator::s_inv(i))?;
                let lhs = s.kappa(&s_inv.act(&g)?)? * s_inv.kappa(&g)?;
                let rhs = s_inv.kappa(&s.act(&g)?)? * s.kappa(&g)?;
                self.record(
                    "lemma.inverse_pairs",
                    "s_i and s_i^-1 at base points g = pi(f); all pi for n <= 5 (first lift), sampled otherwise",
                    lhs.is_plus() && rhs.is_plus(),
                    || format!("i={i} g={g} degrees=[{}]", render_degrees(&g.degrees())),
                );
            }
        }

        // cocycle rule kappa(sigma tau, g) = kappa(sigma, tau(g)) kappa(tau, g)
        let population = "all sigma, tau, pi in S_n with g = pi(f) for n <= 5 (first lift per parity pattern), sampled otherwise";
        let mut triples = Vec::new();
        if full {
            for &pi in &base_points {
                for s in 0..order {
                    for t in 0..order {
                        triples.push((s, t, pi));
                    }
                }
            }
        } else {
            for _ in 0..self.config.samples_per_check {
                let pi = *base_points.choose(&mut self.rng).expect("nonempty");
                triples.push((self.rng.gen_range(0..order), self.rng.gen_range(0..order), pi));
            }
        }
        for &(s, t, pi) in &triples {
            let lhs = orbit.get(ctx.group.mul(s, t), pi)?;
            let rhs = orbit.get(s, ctx.group.mul(t, pi))? * orbit.get(t, pi)?;
            self.record("kappa.cocycle_rule", &population, lhs == rhs, || {
                format!(
                    "sigma={} tau={} g=pi(f) pi={} degrees=[{}]",
                    render_perm(ctx.group.element(s)),
                    render_perm(ctx.group.element(t)),
                    render_perm(ctx.group.element(pi)),
                    render_degrees(ctx.degrees)
                )
            });
        }

        // inverse rule kappa(sigma^-1, g) = kappa(sigma, sigma^-1(g))
        for &pi in &base_points {
            for s in self.sample_or_all(order, ctx.exhaustive) {
                let inv = ctx.group.inv(s);
                let lhs = orbit.get(inv, pi)?;
                let rhs = orbit.get(s, ctx.group.mul(inv, pi))?;
                self.record(
                    "kappa.inverse_rule",
                    "sigma over S_n (sampled at n = 6) at base points g = pi(f)",
                    lhs == rhs,
                    || {
                        format!(
                            "sigma={} pi={} degrees=[{}]",
                            render_perm(ctx.group.element(s)),
                            render_perm(ctx.group.element(pi)),
                            render_degrees(ctx.degrees)
                        )
                    },
                );
            }
        }

        // base-point independence: re-basing at f' = pi(f) reaches the same
        // sequences and the same signs
        if ctx.primary {
            let f = orbit.base(0).clone();
            let rebase: Vec<usize> = if n <= 3 {
                (0..order).collect()
            } else {
                self.sample_or_all(order, false).into_iter().take(2).collect()
            };
            for pi in rebase {
                let f_prime = act(ctx.group.element(pi), &f)?;
                let rhos: Vec<usize> = self.sample_or_all(order, ctx.exhaustive).into_iter().take(120).collect();
                for rho in rhos {
                    let g = act(ctx.group.element(rho), &f_prime)?;
                    let same_point = ctx.group.mul(rho, pi);
                    let mut ok = &g == orbit.base(same_point);
                    let sigmas: Vec<usize> = self.sample_or_all(order, n <= 4).into_iter().take(24).collect();
                    for s in sigmas {
                        ok &= kappa(ctx.group.element(s), &g)? == orbit.get(s, same_point)?;
                    }
                    self.record(
                        "kappa.base_point_independence",
                        "re-based f' = pi(f), one lift per parity pattern",
                        ok,
                        || {
                            format!(
                                "pi={} rho={} degrees=[{}]",
                                render_perm(ctx.group.element(pi)),
                                render_perm(ctx.group.element(rho)),
                                render_degrees(ctx.degrees)
                            )
                        },
                    );
                }
            }
        }
        Ok(())
    }

    /// Parity invariance and the all-even / all-odd degenerate cases.
    fn parity(&mut self, ctx: &Ctx, f: &GradedSequence) -> Result<()> {
        let n = ctx.n;
        let shifts: Vec<i64> = (0..n).map(|_| 2 * self.rng.gen_range(-1000..=1000)).collect();
        let shifted = f.map_degrees(|i, d| Degree(d.0.wrapping_add(shifts[i])));
        let reduced = f.map_degrees(|_, d| Degree(d.parity() as i64));
        let odd = f.parities().iter().filter(|&&b| b).count();
        for s in self.sample_or_all(ctx.group.order(), ctx.exhaustive) {
            let sigma = ctx.group.element(s);
            let k = kappa(sigma, f)?;
            let ok = k == kappa(sigma, &shifted)? && k == kappa(sigma, &reduced)?;
            self.record(
                "kappa.parity_invariance",
                "sigma over S_n (sampled at n = 6), even shifts in [-2000, 2000]",
                ok,
                || {
                    format!(
                        "sigma={} degrees=[{}] shifted=[{}]",
                        render_perm(sigma),
                        render_degrees(ctx.degrees),
                        render_degrees(&shifted.degrees())
                    )
                },
            );
            if odd == 0 {
                self.record(
                    "kappa.all_even_trivial",
                    "sigma over S_n (sampled at n = 6), all-even degrees",
                    k.is_plus(),
                    || format!("sigma={} degrees=[{}]", render_perm(sigma), render_degrees(ctx.degrees)),
                );
            }
            if odd == n {
                self.record(
                    "kappa.all_odd_signature",
                    "sigma over S_n (sampled at n = 6), all-odd degrees",
                    k == sigma.signature(),
                    || format!("sigma={} degrees=[{}]", render_perm(sigma), render_degrees(ctx.degrees)),
                );
            }
        }
        Ok(())
    }

    fn morphism(&mut self, ctx: &Ctx, orbit: &mut Orbit) -> Result<()> {
        let n = ctx.n;
        let order = ctx.group.order();
        let predicted = is_morphism(ctx.degrees)?;
        let brute = if ctx.exhaustive {
            morphism_bruteforce(ctx.degrees, DEFAULT_EXHAUSTIVE_BOUND)?
        } else {
            // sampled pairs can only refute
            let mut hom = true;
            for _ in 0..self.config.samples_per_check {
                let (s, t) = (self.rng.gen_range(0..order), self.rng.gen_range(0..order));
                hom &= orbit.get(ctx.group.mul(s, t), 0)? == orbit.get(s, 0)? * orbit.get(t, 0)?;
            }
            hom
        };
        let population = "one lift of every parity pattern in {0,1}^n";
        let agree = if ctx.exhaustive {
            brute == predicted
        } else {
            predicted <= brute
        };
        self.record("morphism.criterion", &population, agree, || {
            format!(
                "degrees=[{}] bruteforce={brute} parity={predicted}",
                render_degrees(ctx.degrees)
            )
        });

        let mut constant = true;
        for s in self.sample_or_all(order, ctx.exhaustive) {
            constant &= orbit.get(s, 0)?.is_plus();
        }
        let predicted_one = is_constant_one(ctx.degrees)?;
        self.record(
            "morphism.constant_one",
            &population,
            if ctx.exhaustive {
                constant == predicted_one
            } else {
                predicted_one <= constant
            },
            || format!("degrees=[{}] constant={constant}", render_degrees(ctx.degrees)),
        );

        // kappa(-, g) is a morphism for one g iff for all, and then they coincide
        if n <= 4 {
            let base_hom = is_hom_row(ctx.group, |s| orbit.get(s, 0))?;
            let mut ok = true;
            for pi in 0..order {
                let hom = is_hom_row(ctx.group, |s| orbit.get(s, pi))?;
                ok &= hom == base_hom;
                if hom {
                    for s in 0..order {
                        ok &= orbit.get(s, pi)? == orbit.get(s, 0)?;
                    }
                }
            }
            self.record("morphism.base_point_transfer", &population, ok, || {
                format!("degrees=[{}]", render_degrees(ctx.degrees))
            });
        }
        Ok(())
    }

    fn module_morphisms(&mut self, n: usize, group: &SymmetricGroup) {
        let order = group.order();
        let exhaustive = n <= EXHAUSTIVE_SUITE_BOUND;
        let pairs: Vec<(usize, usize)> = if exhaustive {
            (0..order).flat_map(|s| (0..order).map(move |t| (s, t))).collect()
        } else {
            (0..self.config.samples_per_check)
                .map(|_| (self.rng.gen_range(0..order), self.rng.gen_range(0..order)))
                .collect()
        };
        for u in [ModuleStructure::Trivial, ModuleStructure::Signature] {
            for &(s, t) in &pairs {
                let hom = u.eval(group.element(group.mul(s, t)))
                    == u.eval(group.element(s)) * u.eval(group.element(t));
                self.record(
                    "cohomology.module_is_morphism",
                    "u in {1, sgn}; all pairs of S_n for n <= 5, sampled at n = 6",
                    hom,
                    || {
                        format!(
                            "u={} sigma={} tau={}",
                            u.name(),
                            render_perm(group.element(s)),
                            render_perm(group.element(t))
                        )
                    },
                );
            }
        }
    }

    fn cohomology(&mut self, ctx: &Ctx, f: &GradedSequence, orbit: &mut Orbit) -> Result<()> {
        let n = ctx.n;
        let group = ctx.group;
        let order = group.order();
        let population = "one lift of every parity pattern";
        let dense = if ctx.exhaustive {
            Some(build_cf(f, DEFAULT_EXHAUSTIVE_BOUND)?)
        } else {
            None
        };
        let full = n <= 4;
        let triple_population = format!("all triples of S_n for n <= 4, sampled for n >= 5; {population}");

        let mut triples = Vec::new();
        if full {
            for s in 0..order {
                for t in 0..order {
                    for r in 0..order {
                        triples.push((s, t, r));
                    }
                }
            }
        } else {
            for _ in 0..self.config.samples_per_check {
                triples.push((
                    self.rng.gen_range(0..order),
                    self.rng.gen_range(0..order),
                    self.rng.gen_range(0..order),
                ));
            }
        }

        // c_f(sigma tau, rho) = c_f(sigma, tau rho) c_f(tau, rho)
        for &(s, t, r) in &triples {
            let lhs = cf_value(dense.as_ref(), orbit, group.mul(s, t), r)?;
            let rhs = cf_value(dense.as_ref(), orbit, s, group.mul(t, r))?
                * cf_value(dense.as_ref(), orbit, t, r)?;
            self.record("cohomology.characterizing_recursion", &triple_population, lhs == rhs, || {
                format!("ranks=({s},{t},{r}) degrees=[{}]", render_degrees(ctx.degrees))
            });
        }

        // d(c_f)(sigma, tau, rho) = u(sigma) c_f(sigma, tau)^-1
        for u in [ModuleStructure::Trivial, ModuleStructure::Signature] {
            let delta = match &dense {
                Some(cf) => Some(coboundary2_in(cf, u, group)?),
                None => None,
            };
            for &(s, t, r) in &triples {
                let value = match &delta {
                    Some(d) => d.eval_by_rank(s, t, r),
                    None => {
                        u.eval(group.element(s))
                            * orbit.get(t, r)?
                            * orbit.get(group.mul(s, t), r)?.inverse()
                            * orbit.get(s, group.mul(t, r))?
                            * orbit.get(s, t)?.inverse()
                    }
                };
                let closed = u.eval(group.element(s)) * cf_value(dense.as_ref(), orbit, s, t)?.inverse();
                self.record(
                    "cohomology.coboundary_identity",
                    &format!("both u; {triple_population}"),
                    value == closed,
                    || {
                        format!(
                            "u={} ranks=({s},{t},{r}) degrees=[{}]",
                            u.name(),
                            render_degrees(ctx.degrees)
                        )
                    },
                );
            }
        }

        // non-symmetry witness: c_f(e, s_1) = +1, c_f(s_1, e) = (-1)^{|f_1||f_2|}
        let e = 0;
        let s1 = Permutation::adjacent(n, 1)?.rank();
        let par = f.parities();
        let mut ok = cf_value(dense.as_ref(), orbit, e, s1)?.is_plus()
            && cf_value(dense.as_ref(), orbit, s1, e)? == Sign::from_exponent((par[0] & par[1]) as u8);
        if let (Some(cf), true) = (&dense, par[0] && par[1]) {
            ok &= !cf.is_symmetric();
        }
        self.record("cohomology.non_symmetry", population, ok, || {
            format!("degrees=[{}]", render_degrees(ctx.degrees))
        });

        if !full {
            return Ok(());
        }
        let cf = dense.as_ref().expect("dense table for n <= 4");
        let criterion = is_morphism(ctx.degrees)?;
        let derived = ModuleStructure::from_degrees(ctx.degrees);
        for u in [ModuleStructure::Trivial, ModuleStructure::Signature] {
            let cocycle = is_cocycle(f, u, DEFAULT_EXHAUSTIVE_BOUND)?;
            let expected = criterion && derived == Some(u);
            self.record(
                "cohomology.cocycle_criterion",
                &format!("both u, n <= 4; {population}"),
                cocycle == expected,
                || {
                    format!(
                        "u={} degrees=[{}] cocycle={cocycle} expected={expected}",
                        u.name(),
                        render_degrees(ctx.degrees)
                    )
                },
            );
            if cocycle {
                let v = cf.column(&Permutation::identity(n))?;
                let same_as_u = v == OneCochain::from_module(u, n, DEFAULT_EXHAUSTIVE_BOUND)?;
                let boundary = coboundary1(&v, u)?;
                self.record(
                    "cohomology.coboundary_of_u",
                    "cocycle cases, n <= 4",
                    same_as_u && &boundary == cf,
                    || format!("u={} degrees=[{}]", u.name(), render_degrees(ctx.degrees)),
                );
                let odd = par.iter().filter(|&&b| b).count();
                let kind_ok = match u {
                    ModuleStructure::Trivial => odd <= 1,
                    ModuleStructure::Signature => odd == n,
                };
                self.record("cohomology.module_kind", "cocycle cases, n <= 4", kind_ok, || {
                    format!("u={} degrees=[{}]", u.name(), render_degrees(ctx.degrees))
                });
            }
        }
        let auto = is_cocycle_auto(f, DEFAULT_EXHAUSTIVE_BOUND)?;
        let ok = match auto {
            CocycleCheck::NoAdmissibleModule => !criterion,
            CocycleCheck::Checked { cocycle, .. } => cocycle == criterion,
        };
        self.record("cohomology.auto_module_agrees", &format!("n <= 4; {population}"), ok, || {
            format!("degrees=[{}] result={auto:?}", render_degrees(ctx.degrees))
        });
        Ok(())
    }

    fn words_n(&mut self, n: usize) -> Result<()> {
        let rels = relators(n)?;
        let population = format!("{} random words per n", self.config.words_per_n);
        let max_len = self.config.max_word_len;
        for _ in 0..self.config.words_per_n {
            let mask = self.rng.gen_range(0..(1u32 << n));
            let degrees: Vec<Degree> = (0..n)
                .map(|k| Degree(lift_parity(&mut self.rng, (mask >> k) & 1 == 1, DEGREE_RANGE)))
                .collect();
            let f = GradedSequence::from_degrees(&degrees)?;
            let pi = random_perm(&mut self.rng, n);
            let g = act(&pi, &f)?;
            let cx_g = format!("g={g} degrees=[{}]", render_degrees(&g.degrees()));

            let x = Word::random(n, max_len, &mut self.rng)?;
            let y = Word::random(n, max_len, &mut self.rng)?;
            let r = rels.choose(&mut self.rng).expect("relators are nonempty");
            let conj = &(&x * r) * &x.inverse();

            for rel in &rels {
                let k = rel.kappa(&g)?;
                self.record("words.relators", "every relator at random base points", k.is_plus(), || {
                    format!("r={rel} {cx_g}")
                });
            }
            let k = conj.kappa(&g)?;
            self.record("words.conjugated_relators", &population, k.is_plus(), || {
                format!("x={x} r={r} {cx_g}")
            });

            // a = product of conjugated relators
            let mut a = Word::identity(n)?;
            for _ in 0..self.rng.gen_range(1..=3) {
                let z = Word::random(n, max_len / 2, &mut self.rng)?;
                let r = rels.choose(&mut self.rng).expect("relators are nonempty");
                a = &a * &(&(&z * r) * &z.inverse());
            }
            let ax = &a * &y;
            let same = ax.kappa(&g)? == y.kappa(&g)?;
            self.record("words.normal_closure_absorption", &population, same, || {
                format!("a={a} x={y} {cx_g}")
            });

            // insert a conjugated relator in the middle of y
            let cut = self.rng.gen_range(0..=y.len());
            let head = Word::new(n, y.letters()[..cut].to_vec())?;
            let tail = Word::new(n, y.letters()[cut..].to_vec())?;
            let w2 = &(&head * &conj) * &tail;
            let ok = w2.project() == y.project()
                && w2.kappa(&g)? == y.kappa(&g)?
                && y.kappa(&g)? == kappa(&y.project(), &g)?;
            self.record("words.decomposition_independence", &population, ok, || {
                format!("w1={y} w2={w2} {cx_g}")
            });

            let red = x.reduce();
            let ok = red.is_reduced()
                && red.reduce() == red
                && red.project() == x.project()
                && red.kappa(&g)? == x.kappa(&g)?;
            self.record("words.free_reduction", &population, ok, || format!("x={x} {cx_g}"));

            // kappa(xy, g) = kappa(x, y(g)) kappa(y, g) and kappa(x^-1, g) = kappa(x, x^-1(g))
            let lhs = (&x * &y).kappa(&g)?;
            let rhs = x.kappa(&y.act(&g)?)? * y.kappa(&g)?;
            let inv_ok = x.inverse().kappa(&g)? == x.kappa(&x.inverse().act(&g)?)?;
            self.record("words.product_rule", &population, lhs == rhs && inv_ok, || {
                format!("x={x} y={y} {cx_g}")
            });
        }
        Ok(())
    }

    fn special_cases(&mut self) -> Result<()> {
        let n_max = self.config.n_max;
        if n_max >= 3 {
            // |f| = (1,1,0): kappa(-, f) is not a morphism; the composite
            // sending f to (f3, f1, f2) is [2,3,1] = s1 s2
            let f = GradedSequence::from_degrees(&[1i64, 1, 0])?;
            let s1 = Permutation::adjacent(3, 1)?;
            let s2 = Permutation::adjacent(3, 2)?;
            let comp = &s1 * &s2;
            let moved = act(&comp, &f)?;
            let ok = moved.labels() == ["f3", "f1", "f2"]
                && kappa(&comp, &f)? != kappa(&s2, &f)? * kappa(&s1, &f)?
                && !is_morphism(&f.degrees())?
                && !morphism_bruteforce(&f.degrees(), DEFAULT_EXHAUSTIVE_BOUND)?;
            self.record("morphism.counterexample_110", "|f| = (1,1,0)", ok, || {
                format!("composite={} moved={moved}", render_perm(&comp))
            });

            // base-point sensitivity at the diagonal
            let f_prime = act(&s2, &f)?;
            let ok = kappa(&s1, &f)? == Sign::Minus && kappa(&s1, &f_prime)? == Sign::Plus;
            self.record("kappa.diagonal_sensitivity", "|f| = (1,1,0), f' = (f1,f3,f2)", ok, || {
                format!("f'={f_prime}")
            });
        }
        if n_max >= 5 {
            let rho = Permutation::from_one_line(&EXAMPLE_PERM)?;
            let population = "rho = [2,5,3,1,4], 100 random degree vectors in [-50,50]^5";
            for _ in 0..100 {
                let z: Vec<i64> = (0..5)
                    .map(|_| self.rng.gen_range(-DEGREE_RANGE..=DEGREE_RANGE))
                    .collect();
                let exponent: i64 = EXAMPLE_TERMS.iter().map(|&(i, j)| z[i - 1] * z[j - 1]).sum();
                let f = GradedSequence::from_degrees(&z)?;
                let expected = Sign::from_exponent(exponent.rem_euclid(2) as u8);
                self.record("example.bubble_sort", population, kappa(&rho, &f)? == expected, || {
                    format!("degrees={z:?}")
                });
            }
            let f = GradedSequence::from_degrees(&[0i64; 5])?;
            let mut got: Vec<(usize, usize)> = kappa_terms(&rho, &f)?
                .iter()
                .map(|(a, b)| (label_index(a), label_index(b)))
                .collect();
            got.sort_unstable();
            let mut want = EXAMPLE_TERMS.to_vec();
            want.sort_unstable();
            self.record("example.symbolic_terms", "rho = [2,5,3,1,4]", got == want, || {
                format!("terms={got:?}")
            });
        }
        Ok(())
    }
}

fn cf_value(dense: Option<&TwoCochain>, orbit: &mut Orbit, sigma: usize, rho: usize) -> Result<Sign> {
    match dense {
        Some(cf) => Ok(cf.get_by_rank(sigma, rho)),
        None => orbit.get(sigma, rho),
    }
}

fn label_index(label: &str) -> usize {
    label.trim_start_matches('f').parse().unwrap_or(0)
}

struct Ctx<'a> {
    n: usize,
    group: &'a SymmetricGroup,
    degrees: &'a [Degree],
    exhaustive: bool,
    /// The first lift of each parity pattern gets the costlier sweeps.
    primary: bool,
}

fn random_perm<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffle is a bijection")
}

fn is_hom_row(group: &SymmetricGroup, mut row: impl FnMut(usize) -> Result<Sign>) -> Result<bool> {
    let order = group.order();
    let values: Vec<Sign> = (0..order).map(&mut row).collect::<Result<_>>()?;
    Ok((0..order).all(|s| (0..order).all(|t| values[group.mul(s, t)] == values[s] * values[t])))
}

/// `kappa(sigma, pi(f))` by `(rank sigma, rank pi)`, computed on first use.
struct Orbit<'a> {
    f: &'a GradedSequence,
    group: &'a SymmetricGroup,
    bases: Vec<Option<GradedSequence>>,
    cells: Vec<Option<Sign>>,
}

impl<'a> Orbit<'a> {
    fn new(f: &'a GradedSequence, group: &'a SymmetricGroup) -> Self {
        let order = group.order();
        Orbit {
            f,
            group,
            bases: vec![None; order],
            cells: vec![None; order * order],
        }
    }

    fn base(&mut self, pi: usize) -> &GradedSequence {
        if self.bases[pi].is_none() {
            self.bases[pi] = Some(act(self.group.element(pi), self.f).expect("lengths agree"));
        }
        self.bases[pi].as_ref().expect("just filled")
    }

    fn get(&mut self, sigma: usize, pi: usize) -> Result<Sign> {
        let idx = sigma * self.group.order() + pi;
        if let Some(s) = self.cells[idx] {
            return Ok(s);
        }
        let sigma_p = self.group.element(sigma).clone();
        let s = kappa(&sigma_p, self.base(pi))?;
        self.cells[idx] = Some(s);
        Ok(s)
    }
}
