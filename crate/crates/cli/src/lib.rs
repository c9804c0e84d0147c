//! Command-line front end for the `koszul` library.
//!
//! Every command writes one document to standard output (plain text, or JSON
//! with `--json`) and diagnostics to standard error. Exit statuses:
//!
//! | status | meaning |
//! |-------:|---------|
//! | 0 | success, or the checked predicate holds |
//! | 1 | the checked predicate is false, or the verification suite failed |
//! | 2 | parse or usage error |
//! | 3 | resource bound exceeded |
//!
//! Indices in all input and output are 1-based.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use koszul::cohomology::{
    build_cf, coboundary1, is_cocycle, CocycleCheck, ModuleStructure, DEFAULT_TRIPLE_BOUND,
};
use koszul::parse::{parse_degrees, parse_perm, parse_word, render_degrees};
use koszul::verify::{run_suite, EXAMPLE_PERM};
use koszul::{
    act, decompose_adjacent, is_constant_one, is_morphism, kappa, kappa_exponent, kappa_terms,
    morphism_bruteforce, odd_count, Degree, Error, GradedSequence, Permutation,
    DEFAULT_EXHAUSTIVE_BOUND,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const PARITY_RULE: &str =
    "kappa(-, f) is a group morphism iff all degrees share a parity or exactly one is odd; \
     it is constantly +1 iff at most one degree is odd";

#[derive(Debug, Parser)]
#[command(name = "koszul", version, about = "Koszul signs of permutations of graded symbols")]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// kappa(P, Q(f)) and its exponent mod 2.
    Sign {
        /// Degrees of f = (f1, ..., fn), e.g. `1,0,-3`.
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        /// `[a1,...,an]` (sigma(i) = ai) or cycles such as `(2 3)(1 2)`.
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        /// Evaluate at g = Q(f) instead of f.
        #[arg(long, allow_hyphen_values = true)]
        base_order: Option<String>,
    },
    /// kappa of a generator word such as `s1 s2^-1 s1`.
    SignWord {
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        base_order: Option<String>,
    },
    /// kappa(sigma, f) for every sigma in S_n, by lexicographic rank.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        #[arg(long, allow_hyphen_values = true)]
        base_order: Option<String>,
        /// Emit the 2-cochain c_f as (sigma_rank, rho_rank, sign) records.
        #[arg(long)]
        cochain: bool,
        /// Write the table to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Whether kappa(-, f) is a group morphism.
    CheckMorphism {
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
    },
    /// Whether c_f is a 2-cocycle for a module structure u.
    CheckCocycle {
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        #[arg(long, value_enum, default_value_t = ModuleChoice::Auto)]
        u: ModuleChoice,
    },
    /// The n = 5 bubble-sort example, symbolically.
    Example {
        /// Also evaluate the sign at these degrees.
        #[arg(long, allow_hyphen_values = true)]
        degrees: Option<String>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Random degree lifts per parity pattern.
        #[arg(long, default_value_t = 2)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleChoice {
    Auto,
    One,
    Sgn,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(status: i32, stdout: String) -> Self {
        Outcome {
            status,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn exit_status(err: &Error) -> i32 {
    match err {
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Parse { .. } | Error::Dimension { .. } | Error::Domain(_) => EXIT_USAGE,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Sign {
            degrees,
            perm,
            base_order,
        } => sign(cli.json, degrees, perm, base_order.as_deref()),
        Command::SignWord {
            degrees,
            word,
            base_order,
        } => sign_word(cli.json, degrees, word, base_order.as_deref()),
        Command::Table {
            degrees,
            base_order,
            cochain,
            output,
        } => table(cli.json, degrees, base_order.as_deref(), *cochain, output.as_ref()),
        Command::CheckMorphism { degrees } => check_morphism(cli.json, degrees),
        Command::CheckCocycle { degrees, u } => check_cocycle(cli.json, degrees, *u),
        Command::Example { degrees } => example(cli.json, degrees.as_deref()),
        Command::Verify { n, trials, seed } => verify(cli.json, *n, *trials, *seed),
    };
    match result {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            status: exit_status(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render(json: bool, doc: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn degree_values(d: &[Degree]) -> Vec<i64> {
    d.iter().map(|d| d.value()).collect()
}

/// `f` from the degrees and `g = Q(f)`.
fn base_point(degrees: &str, base_order: Option<&str>) -> koszul::Result<(Vec<Degree>, Permutation, GradedSequence)> {
    let d = parse_degrees(degrees)?;
    let f = GradedSequence::from_degrees(&d)?;
    let q = match base_order {
        Some(text) => parse_perm(text, d.len())?,
        None => Permutation::identity(d.len()),
    };
    let g = act(&q, &f)?;
    Ok((d, q, g))
}

fn sign(json: bool, degrees: &str, perm: &str, base_order: Option<&str>) -> koszul::Result<Outcome> {
    let (d, q, g) = base_point(degrees, base_order)?;
    let sigma = parse_perm(perm, d.len())?;
    let s = kappa(&sigma, &g)?;
    let z = kappa_exponent(&sigma, &g)?;
    let doc = json!({
        "n": d.len(),
        "degrees": degree_values(&d),
        "perm": sigma.one_line(),
        "base_order": q.one_line(),
        "g": g.labels(),
        "sign": s.to_i32(),
        "exponent_mod2": z,
    });
    let text = format!(
        "n: {}\ndegrees: {}\nperm: {} = {}\nbase_order: {}\ng: {}\nsign: {}\nexponent_mod2: {}\n",
        d.len(),
        render_degrees(&d),
        sigma,
        sigma.cycle_string(),
        q,
        g,
        s,
        z
    );
    Ok(Outcome::ok(EXIT_OK, render(json, doc, text)))
}

fn sign_word(json: bool, degrees: &str, word: &str, base_order: Option<&str>) -> koszul::Result<Outcome> {
    let (d, q, g) = base_point(degrees, base_order)?;
    let w = parse_word(word, d.len())?;
    let s = w.kappa(&g)?;
    let image = w.project();
    let doc = json!({
        "n": d.len(),
        "degrees": degree_values(&d),
        "word": w.to_string(),
        "reduced": w.reduce().to_string(),
        "projection": image.one_line(),
        "base_order": q.one_line(),
        "g": g.labels(),
        "sign": s.to_i32(),
        "exponent_mod2": s.exponent(),
    });
    let text = format!(
        "n: {}\ndegrees: {}\nword: {}\nreduced: {}\nprojection: {} = {}\nbase_order: {}\ng: {}\nsign: {}\nexponent_mod2: {}\n",
        d.len(),
        render_degrees(&d),
        w,
        w.reduce(),
        image,
        image.cycle_string(),
        q,
        g,
        s,
        s.exponent()
    );
    Ok(Outcome::ok(EXIT_OK, render(json, doc, text)))
}

fn table(
    json: bool,
    degrees: &str,
    base_order: Option<&str>,
    cochain: bool,
    output: Option<&PathBuf>,
) -> koszul::Result<Outcome> {
    let (d, q, g) = base_point(degrees, base_order)?;
    Error::check_bound(d.len(), DEFAULT_EXHAUSTIVE_BOUND)?;
    let body = if cochain {
        let cf = build_cf(&g, DEFAULT_EXHAUSTIVE_BOUND)?;
        let doc = json!({
            "n": d.len(),
            "degrees": degree_values(&d),
            "base_order": q.one_line(),
            "records": cf.records().map(|(s, r, v)| json!([s, r, v.to_i32()])).collect::<Vec<_>>(),
        });
        let mut text = String::from("# sigma_rank rho_rank sign\n");
        for (s, r, v) in cf.records() {
            writeln!(text, "{s} {r} {v}").expect("write to string");
        }
        render(json, doc, text)
    } else {
        let mut rows = Vec::new();
        let mut text = String::from("# rank perm cycles sign\n");
        for (rank, sigma) in Permutation::all(d.len()).enumerate() {
            let s = kappa(&sigma, &g)?;
            writeln!(text, "{rank} {sigma} {} {s}", sigma.cycle_string()).expect("write to string");
            rows.push(json!({ "rank": rank, "perm": sigma.one_line(), "sign": s.to_i32() }));
        }
        let doc = json!({
            "n": d.len(),
            "degrees": degree_values(&d),
            "base_order": q.one_line(),
            "rows": rows,
        });
        render(json, doc, text)
    };
    match output {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| {
                Error::Domain(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(Outcome {
                status: EXIT_OK,
                stdout: String::new(),
                stderr: format!("wrote {}\n", path.display()),
            })
        }
        None => Ok(Outcome::ok(EXIT_OK, body)),
    }
}

fn check_morphism(json: bool, degrees: &str) -> koszul::Result<Outcome> {
    let d = parse_degrees(degrees)?;
    let verdict = is_morphism(&d)?;
    let constant = is_constant_one(&d)?;
    let brute = match morphism_bruteforce(&d, DEFAULT_EXHAUSTIVE_BOUND) {
        Ok(b) => Some(b),
        Err(Error::Resource { .. }) => None,
        Err(e) => return Err(e),
    };
    let odd = odd_count(&d);
    let doc = json!({
        "n": d.len(),
        "degrees": degree_values(&d),
        "odd_count": odd,
        "morphism": verdict,
        "constant_one": constant,
        "bruteforce": brute,
        "criterion": PARITY_RULE,
    });
    let brute_text = match brute {
        Some(b) => b.to_string(),
        None => format!("skipped (n > {DEFAULT_EXHAUSTIVE_BOUND})"),
    };
    let text = format!(
        "degrees: {}\nodd degrees: {odd} of {}\nmorphism: {verdict}\nconstant_one: {constant}\nbruteforce: {brute_text}\ncriterion: {PARITY_RULE}\n",
        render_degrees(&d),
        d.len()
    );
    let ok = verdict && brute.map_or(true, |b| b == verdict);
    Ok(Outcome::ok(
        if ok { EXIT_OK } else { EXIT_FALSE },
        render(json, doc, text),
    ))
}

fn check_cocycle(json: bool, degrees: &str, choice: ModuleChoice) -> koszul::Result<Outcome> {
    let d = parse_degrees(degrees)?;
    let f = GradedSequence::from_degrees(&d)?;
    Error::check_bound(d.len(), DEFAULT_TRIPLE_BOUND)?;
    let derived = ModuleStructure::from_degrees(&d);
    let check = match choice {
        ModuleChoice::Auto => match derived {
            None => CocycleCheck::NoAdmissibleModule,
            Some(module) => CocycleCheck::Checked {
                module,
                cocycle: is_cocycle(&f, module, DEFAULT_TRIPLE_BOUND)?,
            },
        },
        ModuleChoice::One | ModuleChoice::Sgn => {
            let module = if choice == ModuleChoice::One {
                ModuleStructure::Trivial
            } else {
                ModuleStructure::Signature
            };
            CocycleCheck::Checked {
                module,
                cocycle: is_cocycle(&f, module, DEFAULT_TRIPLE_BOUND)?,
            }
        }
    };
    let coboundary = match check {
        CocycleCheck::Checked {
            module,
            cocycle: true,
        } => {
            let cf = build_cf(&f, DEFAULT_EXHAUSTIVE_BOUND)?;
            let u = cf.column(&Permutation::identity(d.len()))?;
            Some(coboundary1(&u, module)? == cf)
        }
        _ => None,
    };
    let module_name = match check {
        CocycleCheck::NoAdmissibleModule => "none",
        CocycleCheck::Checked { module, .. } => module.name(),
    };
    let explanation = match check {
        CocycleCheck::NoAdmissibleModule => {
            "the generator values (-1)^{|f_i||f_{i+1}|} disagree, so no module structure is determined by the degrees".to_owned()
        }
        _ => format!(
            "c_f is a 2-cocycle iff kappa(-, f) is a morphism and u is read off the degrees (parity morphism: {}, degrees give u = {})",
            is_morphism(&d)?,
            derived.map_or("none", ModuleStructure::name)
        ),
    };
    let doc = json!({
        "n": d.len(),
        "degrees": degree_values(&d),
        "u": module_name,
        "cocycle": check.is_cocycle(),
        "coboundary_of_u": coboundary,
        "explanation": explanation,
    });
    let text = format!(
        "degrees: {}\nu: {module_name}\ncocycle: {}\ncoboundary_of_u: {}\nexplanation: {explanation}\n",
        render_degrees(&d),
        check.is_cocycle(),
        coboundary.map_or("n/a".to_owned(), |b| b.to_string()),
    );
    Ok(Outcome::ok(
        if check.is_cocycle() { EXIT_OK } else { EXIT_FALSE },
        render(json, doc, text),
    ))
}

/// `f1` -> `z1`.
fn z_name(label: &str) -> String {
    format!("z{}", label.trim_start_matches('f'))
}

fn example(json: bool, degrees: Option<&str>) -> koszul::Result<Outcome> {
    let rho = Permutation::from_one_line(&EXAMPLE_PERM)?;
    let d = match degrees {
        Some(text) => {
            let d = parse_degrees(text)?;
            Error::check_len(5, d.len())?;
            Some(d)
        }
        None => None,
    };
    let f = GradedSequence::from_degrees(&d.clone().unwrap_or_else(|| vec![Degree(0); 5]))?;
    let g = act(&rho, &f)?;
    let word = decompose_adjacent(&rho);

    // bubble-sort steps, rightmost letter first
    let mut steps = Vec::new();
    let mut state = f.clone();
    for letter in word.letters().iter().rev() {
        let i = letter.index;
        let (a, b) = (state.get(i - 1).label.clone(), state.get(i).label.clone());
        let mut pair = [z_name(&a), z_name(&b)];
        pair.sort_by_key(|z| z[1..].parse::<usize>().unwrap_or(0));
        steps.push((letter.to_string(), format!("{}{}", pair[0], pair[1])));
        state = act(&Permutation::adjacent(5, i)?, &state)?;
    }
    let mut terms: Vec<String> = kappa_terms(&rho, &f)?
        .iter()
        .map(|(a, b)| {
            let mut pair = [z_name(a), z_name(b)];
            pair.sort_by_key(|z| z[1..].parse::<usize>().unwrap_or(0));
            format!("{}{}", pair[0], pair[1])
        })
        .collect();
    terms.sort();
    let z_line = format!("Z = {}", terms.join(" + "));

    let evaluated = match &d {
        Some(d) => Some((kappa(&rho, &f)?, render_degrees(d))),
        None => None,
    };
    let doc = json!({
        "rho": rho.one_line(),
        "g": g.labels(),
        "word": word.to_string(),
        "steps": steps.iter().map(|(l, t)| json!({ "generator": l, "term": t })).collect::<Vec<_>>(),
        "terms": terms,
        "z": z_line,
        "degrees": d.as_deref().map(degree_values),
        "sign": evaluated.as_ref().map(|(s, _)| s.to_i32()),
    });
    let mut text = String::new();
    writeln!(text, "rho = {rho} = {} (one-line form)", rho.cycle_string()).expect("write");
    writeln!(text, "g = rho(f) = {g}").expect("write");
    writeln!(text, "bubble-sort word: rho = {word}").expect("write");
    for (k, (l, t)) in steps.iter().enumerate() {
        writeln!(text, "  step {}: {l} swaps two symbols, term {t}", k + 1).expect("write");
    }
    writeln!(text, "kappa(rho, f) = (-1)^Z with z_i = |f_i|").expect("write");
    writeln!(text, "{z_line}").expect("write");
    if let Some((s, rendered)) = &evaluated {
        writeln!(text, "at degrees {rendered}: kappa(rho, f) = {s}").expect("write");
    }
    Ok(Outcome::ok(EXIT_OK, render(json, doc, text)))
}

fn verify(json: bool, n: usize, trials: usize, seed: u64) -> koszul::Result<Outcome> {
    let report = run_suite(n, trials, seed)?;
    let status = if report.all_passed() { EXIT_OK } else { EXIT_FALSE };
    let doc = serde_json::to_value(&report).expect("report serializes");
    let mut text = report.to_string();
    text.push('\n');
    Ok(Outcome::ok(status, render(json, doc, text)))
}
