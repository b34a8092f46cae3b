use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, Sign};
use raising_core::combinatorics::tableaux::{enumerate_k_bitableaux, enumerate_k_tableaux};
use raising_core::element::{Basis, RingElement};
use raising_core::hall_littlewood::{
    giambelli_v, last_row_recursion_v, mirror_v, pieri_v_element, pieri_v_oracle,
};
use raising_core::hyperoctahedral::{
    compatible_pair, count_reduced_words, grassmannian_element, is_skew, partition_of, reduced_words, schubert_bh,
    skew_element, stanley_a, stanley_c, SignedPermutation,
};
use raising_core::json::bigint;
use raising_core::pairs::PairSet;
use raising_core::partition::{IntegerVector, KStrict, Partition};
use raising_core::report::IdentityReport;
use raising_core::theta::{skew_f, skew_f_q_expansion, theta, ThetaMode};
use raising_core::type_a::{giambelli_u, mirror_u, pieri_u, pieri_u_oracle, toprow_recursion_u};
use raising_core::type_c::{giambelli_w, mirror_w, pieri_w_element, pieri_w_oracle, toprow_recursion_w};
use raising_core::verify::{Bounds, Exec, Suite, ALL_SUITES};
use raising_core::Error;
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "raising", version, about = "Raising operators, Pieri rules and theta polynomials")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq, Debug)]
enum Ring {
    A,
    Hl,
    C,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq, Debug)]
enum Mode {
    Raising,
    Tableau,
    Reduction,
}

#[derive(Args)]
struct RingArgs {
    #[arg(long, value_enum)]
    ring: Ring,
    /// Needed for `--ring c`.
    #[arg(long)]
    k: Option<usize>,
    /// Substitute this integer for t (ring hl).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a Giambelli polynomial in generator monomials.
    Giambelli {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        index: IntegerVector,
        /// Denominator pair set such as `12,13,23` (ring c); defaults to C(index).
        #[arg(long)]
        dset: Option<PairSet>,
    },
    /// Multiply a basis element by a generator.
    Pieri {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        lambda: Partition,
        /// Also compute the product in the ring and compare.
        #[arg(long)]
        check: bool,
    },
    /// Check the lowering mirror sum (and raising sums for ring a).
    Mirror {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        lambda: Partition,
        /// Highest degree for the raising sums of ring a.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Check the recursion for a new top row `p` (rings a, c) or a new last
    /// row `p` (ring hl).
    Recursion {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        lambda: Partition,
    },
    /// Theta polynomial in `x_1..x_m` and `y_1..y_k`.
    Theta {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Mode::Reduction)]
        mode: Mode,
    },
    /// Skew function of a pair of k-strict partitions.
    #[command(name = "skewF")]
    SkewF {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Schur Q-function expansion of a skew function.
    Qexpand {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
    },
    /// List k-tableaux of a skew shape.
    Tableaux {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long)]
        max_entry: usize,
        /// Keep only tableaux using each entry once.
        #[arg(long)]
        standard: bool,
    },
    /// List k-bitableaux of a shape.
    Bitableaux {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Type C Stanley function, or the type A one with `--type-a`.
    Stanley {
        #[arg(long, allow_hyphen_values = true)]
        w: SignedPermutation,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        type_a: bool,
    },
    /// Billey-Haiman Schubert polynomial.
    Schubert {
        #[arg(long, allow_hyphen_values = true)]
        w: SignedPermutation,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Grassmannian element of a partition, or the partition of an element.
    Grassmannian {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "w", required_unless_present = "w")]
        lambda: Option<Partition>,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<SignedPermutation>,
    },
    /// Reduced words of a signed permutation.
    ReducedWords {
        #[arg(long, allow_hyphen_values = true)]
        w: SignedPermutation,
        #[arg(long)]
        count: bool,
    },
    /// Decide whether `w` is a skew element, or whether `(lambda, mu)` is a
    /// compatible pair.
    SkewCheck {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "lambda")]
        w: Option<SignedPermutation>,
        #[arg(long, conflicts_with = "w", requires = "mu")]
        lambda: Option<Partition>,
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// Run an identity sweep (`all` runs every suite).
    Verify {
        suite: String,
        /// Largest k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_p: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        sequential: bool,
    },
}

/// What a command produced: text, JSON, and whether its checks held.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, ok: true }
    }

    fn report(r: &IdentityReport) -> Self {
        Output { text: r.to_string(), json: r.to_json(), ok: r.holds() }
    }
}

/// A rejected invocation, reported with exit status 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Run = Result<Output, Usage>;

fn need_k(ring: &RingArgs) -> Result<usize, Usage> {
    ring.k.ok_or_else(|| Usage("--k is required for --ring c".into()))
}

fn kstrict(k: usize, lam: &Partition) -> Result<KStrict, Usage> {
    Ok(KStrict::new(k, lam.clone())?)
}

fn specialize(e: RingElement, ring: &RingArgs) -> RingElement {
    match ring.t {
        Some(t) => e.specialize_t(t),
        None => e,
    }
}

fn element(e: &RingElement) -> Output {
    Output::new(e.to_string(), e.to_json())
}

fn giambelli(ring: &RingArgs, index: &IntegerVector, dset: Option<&PairSet>) -> Run {
    if dset.is_some() && ring.ring != Ring::C {
        return Err(Usage("--dset applies to --ring c only".into()));
    }
    let e = match ring.ring {
        Ring::A => giambelli_u(index),
        Ring::Hl => giambelli_v(index),
        Ring::C => giambelli_w(index, dset, need_k(ring)?)?,
    };
    Ok(element(&specialize(e, ring)))
}

fn pieri(ring: &RingArgs, p: usize, lambda: &Partition, check: bool) -> Run {
    let (rule, oracle) = match ring.ring {
        Ring::A => {
            let mut rule = RingElement::zero(Basis::U, None);
            for mu in pieri_u(p, lambda) {
                rule.add_int_term(mu, 1);
            }
            (rule, if check { Some(pieri_u_oracle(p, lambda)?) } else { None })
        }
        Ring::Hl => (pieri_v_element(p, lambda), if check { Some(pieri_v_oracle(p, lambda)?) } else { None }),
        Ring::C => {
            let lam = kstrict(need_k(ring)?, lambda)?;
            (pieri_w_element(p, &lam), if check { Some(pieri_w_oracle(p, &lam)?) } else { None })
        }
    };
    let rule = specialize(rule, ring);
    match oracle {
        None => Ok(element(&rule)),
        Some(o) => Ok(Output::report(&IdentityReport::new(
            format!("Pieri rule against the ring product for p={p}, lambda={lambda}"),
            rule,
            specialize(o, ring),
        ))),
    }
}

fn mirror(ring: &RingArgs, lambda: &Partition, cap: Option<usize>) -> Run {
    match ring.ring {
        Ring::A => {
            let r = mirror_u(lambda, cap);
            let mut text = r.downward.to_string();
            for up in &r.upward {
                text.push('\n');
                text.push_str(&up.to_string());
            }
            let json = json!({
                "holds": r.holds(),
                "downward": r.downward.to_json(),
                "upward": r.upward.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
            });
            Ok(Output { text, json, ok: r.holds() })
        }
        Ring::Hl => Ok(Output::report(&mirror_v(lambda))),
        Ring::C => Ok(Output::report(&mirror_w(&kstrict(need_k(ring)?, lambda)?))),
    }
}

fn recursion(ring: &RingArgs, p: usize, lambda: &Partition) -> Run {
    let r = match ring.ring {
        Ring::A => toprow_recursion_u(p, lambda)?,
        Ring::Hl => last_row_recursion_v(&lambda.to_i64(), p as i64),
        Ring::C => toprow_recursion_w(p, &kstrict(need_k(ring)?, lambda)?)?,
    };
    Ok(Output::report(&r))
}

fn poly_output(p: &raising_core::poly::Poly) -> Output {
    Output::new(p.to_string(), p.to_json())
}

fn q_expansion_output(q: &std::collections::BTreeMap<Partition, BigInt>) -> Output {
    let mut terms: Vec<(&Partition, &BigInt)> = q.iter().collect();
    terms.sort_by(|a, b| b.0.cmp(a.0));
    let text = if terms.is_empty() {
        "0".to_string()
    } else {
        terms
            .iter()
            .map(|(p, c)| if **c == BigInt::from(1) { format!("Q_({p})") } else { format!("{c}*Q_({p})") }).collect::<Vec<_>>().join(" + ")
    };
    let json = json!({
        "terms": terms.iter().map(|(p, c)| json!({"index": p.parts(), "coeff": bigint(c)})).collect::<Vec<_>>(),
        "nonnegative": q.values().all(|c| c.sign() != Sign::Minus),
    });
    Output::new(text, json)
}

fn tableaux(k: usize, lambda: &Partition, mu: &Partition, max_entry: usize, standard: bool) -> Run {
    let (lam, mu) = (kstrict(k, lambda)?, kstrict(k, mu)?);
    let list: Vec<_> = enumerate_k_tableaux(&lam, &mu, max_entry)?
        .filter(|t| !standard || t.content().iter().all(|&c| c == 1))
        .collect();
    let text = list.iter().map(|t| format!("{t}  n={}", t.n)).collect::<Vec<_>>().join("\n");
    let json = json!({
        "count": list.len(),
        "tableaux": list.iter().map(|t| json!({"rows": t.to_string(), "n": t.n, "content": t.content()})).collect::<Vec<_>>(),
    });
    Ok(Output::new(format!("{text}\n{} tableaux", list.len()).trim_start().to_string(), json))
}

fn bitableaux(k: usize, lambda: &Partition, m: usize) -> Run {
    let list = enumerate_k_bitableaux(&kstrict(k, lambda)?, m)?;
    let text = list.iter().map(|t| format!("{t}  n={}", t.n())).collect::<Vec<_>>().join("\n");
    let json = json!({
        "count": list.len(),
        "bitableaux": list.iter().map(|t| json!({"rows": t.to_string(), "n": t.n()})).collect::<Vec<_>>(),
    });
    Ok(Output::new(format!("{text}\n{} bitableaux", list.len()).trim_start().to_string(), json))
}

fn grassmannian(k: usize, n: usize, lambda: Option<&Partition>, w: Option<&SignedPermutation>) -> Run {
    match (lambda, w) {
        (Some(lam), _) => {
            let w = grassmannian_element(&kstrict(k, lam)?, n)?;
            Ok(Output::new(w.to_string(), json!({"k": k, "n": n, "lambda": lam.parts(), "w": w.window()})))
        }
        (None, Some(w)) => {
            let w = w.extended(n);
            let lam = partition_of(&w, k)?;
            Ok(Output::new(
                lam.partition().to_string(),
                json!({"k": k, "n": n, "lambda": lam.partition().parts(), "w": w.window()}),
            ))
        }
        (None, None) => Err(Usage("one of --lambda or --w is required".into())),
    }
}

fn reduced(w: &SignedPermutation, count: bool) -> Run {
    if count {
        let c = count_reduced_words(w);
        return Ok(Output::new(c.to_string(), json!({"w": w.window(), "count": bigint(&c)})));
    }
    let words = reduced_words(w);
    let text = words
        .iter()
        .map(|word| word.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(text, json!({"w": w.window(), "count": words.len(), "words": words})))
}

fn skew_check(k: usize, n: usize, w: Option<&SignedPermutation>, lambda: Option<&Partition>, mu: Option<&Partition>) -> Run {
    if let (Some(lam), Some(mu)) = (lambda, mu) {
        let (l, m) = (kstrict(k, lam)?, kstrict(k, mu)?);
        let ok = compatible_pair(&l, &m, n)?;
        let mut json = json!({"lambda": lam.parts(), "mu": mu.parts(), "compatible": ok});
        let mut text = format!("({lam})/({mu}) compatible: {ok}");
        if ok {
            let e = skew_element(&l, &m, n)?;
            json["w"] = json!(e.window());
            text.push_str(&format!("\nw = {e}"));
        }
        return Ok(Output::new(text, json));
    }
    let w = w.ok_or_else(|| Usage("--w or --lambda with --mu is required".into()))?;
    match is_skew(w, k, n) {
        Some((lam, mu)) => Ok(Output::new(
            format!("skew: lambda = ({}), mu = ({})", lam.partition(), mu.partition()),
            json!({"w": w.window(), "skew": true, "lambda": lam.partition().parts(), "mu": mu.partition().parts()}),
        )),
        None => Ok(Output::new(format!("not skew in B_{n}"), json!({"w": w.window(), "skew": false}))),
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: &str,
    k: Option<usize>,
    max_size: Option<usize>,
    max_len: Option<usize>,
    max_p: Option<usize>,
    m: Option<usize>,
    n: Option<usize>,
    sequential: bool,
) -> Run {
    let suites: Vec<Suite> = if suite == "all" {
        ALL_SUITES.to_vec()
    } else {
        vec![Suite::from_name(suite).ok_or_else(|| {
            let names: Vec<&str> = ALL_SUITES.iter().map(|s| s.name()).collect();
            Usage(format!("unknown suite '{suite}'; expected one of: all, {}", names.join(", ")))
        })?]
    };
    let exec = if sequential { Exec::Sequential } else { Exec::default() };
    let mut text = Vec::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for s in suites {
        let d = s.default_bounds();
        let bounds = Bounds {
            max_k: k.unwrap_or(d.max_k),
            max_size: max_size.unwrap_or(d.max_size),
            max_len: max_len.unwrap_or(d.max_len),
            max_p: max_p.unwrap_or(d.max_p),
            m: m.unwrap_or(d.m),
            n: n.unwrap_or(d.n),
        };
        let report = s.run(&bounds, exec);
        ok &= report.passed();
        text.push(report.to_string());
        reports.push(report.to_json());
    }
    Ok(Output { text: text.join("\n"), json: json!({"passed": ok, "suites": reports}), ok })
}

fn mode(m: Mode) -> ThetaMode {
    match m {
        Mode::Raising => ThetaMode::Raising,
        Mode::Tableau => ThetaMode::Tableau,
        Mode::Reduction => ThetaMode::Reduction,
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Giambelli { ring, index, dset } => giambelli(ring, index, dset.as_ref()),
        Command::Pieri { ring, p, lambda, check } => pieri(ring, *p, lambda, *check),
        Command::Mirror { ring, lambda, cap } => mirror(ring, lambda, *cap),
        Command::Recursion { ring, p, lambda } => recursion(ring, *p, lambda),
        Command::Theta { k, lambda, m, mode: md } => Ok(poly_output(&theta(&kstrict(*k, lambda)?, *m, mode(*md)))),
        Command::SkewF { k, lambda, mu, m } => Ok(poly_output(&skew_f(&kstrict(*k, lambda)?, &kstrict(*k, mu)?, *m)?)),
        Command::Qexpand { k, lambda, mu } => {
            Ok(q_expansion_output(&skew_f_q_expansion(&kstrict(*k, lambda)?, &kstrict(*k, mu)?)?))
        }
        Command::Tableaux { k, lambda, mu, max_entry, standard } => tableaux(*k, lambda, mu, *max_entry, *standard),
        Command::Bitableaux { k, lambda, m } => bitableaux(*k, lambda, *m),
        Command::Stanley { w, m, type_a } => {
            let p = if *type_a { stanley_a(w, *m)? } else { stanley_c(w, *m) };
            Ok(poly_output(&p))
        }
        Command::Schubert { w, m } => Ok(poly_output(&schubert_bh(w, *m))),
        Command::Grassmannian { k, n, lambda, w } => grassmannian(*k, *n, lambda.as_ref(), w.as_ref()),
        Command::ReducedWords { w, count } => reduced(w, *count),
        Command::SkewCheck { k, n, w, lambda, mu } => skew_check(*k, *n, w.as_ref(), lambda.as_ref(), mu.as_ref()),
        Command::Verify { suite, k, max_size, max_len, max_p, m, n, sequential } => {
            verify(suite, *k, *max_size, *max_len, *max_p, *m, *n, *sequential)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => emit(&out.text),
                Format::Json => emit(&serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
