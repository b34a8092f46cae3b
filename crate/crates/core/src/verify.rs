//! Sweeps that check families of identities over ranges of shapes.
//!
//! Every suite builds a list of cases and evaluates them independently; with
//! the `parallel` feature the cases run on the rayon pool, otherwise (or with
//! [`Exec::Sequential`]) they run in order. Results are returned in case order
//! either way.

use crate::combinatorics::strips::{components, rim, Adjacency};
use crate::combinatorics::kstrip::n_strip;
use crate::combinatorics::tableaux::{count_standard_k_tableaux, enumerate_k_tableaux};
use crate::element::{Basis, RingElement};
use crate::error::{Error, Result};
use crate::hall_littlewood::{mirror_v, pieri_v_element, pieri_v_oracle};
use crate::hyperoctahedral::{
    c_factor, compatible_pair, count_reduced_words, grassmannian_element, schubert_bh, skew_element, stanley_c,
    stanley_coproduct, unimodal_factorizations, SignedPermutation,
};
use crate::partition::{grassmannian_index_set, k_strict_partitions, partitions, strict_partitions, IntegerVector, KStrict, Partition};
use crate::poly::{Poly, Vars};
use crate::theta::{is_nonnegative, master_identities, skew_f, skew_f_q_expansion, theta, ThetaMode};
use crate::type_a::{giambelli_u, jacobi_trudi, mirror_u, pieri_u, pieri_u_oracle};
use crate::type_c::{giambelli_w, mirror_w, pfaffian_w, pieri_w_element, pieri_w_oracle};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Outcome of one case of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

impl CaseResult {
    pub fn pass(label: impl Into<String>) -> Self {
        CaseResult { label: label.into(), ok: true, detail: String::new() }
    }

    pub fn check(label: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        let detail = if ok { String::new() } else { detail() };
        CaseResult { label: label.into(), ok, detail }
    }

    fn from_result(label: String, r: Result<CaseResult>) -> Self {
        r.unwrap_or_else(|e| CaseResult { label, ok: false, detail: e.to_string() })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.ok)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "passed": self.passed(),
            "cases": self.cases.len(),
            "failures": self.failures().map(|c| serde_json::json!({"case": c.label, "detail": c.detail})).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        write!(
            f,
            "{}: {} cases, {} failed ({:.2?})",
            self.suite,
            self.cases.len(),
            failed,
            self.elapsed
        )?;
        for c in self.failures() {
            write!(f, "\n  {}: {}", c.label, c.detail)?;
        }
        Ok(())
    }
}

/// Evaluates `check` on every item, keeping the item order.
pub fn run_cases<T, F>(items: &[T], exec: Exec, check: F) -> Vec<CaseResult>
where
    T: Sync,
    F: Fn(&T) -> CaseResult + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(&check).collect()
        }
        _ => items.iter().map(check).collect(),
    }
}

/// Ranges for a sweep. Fields a suite does not use are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_k: usize,
    pub max_size: usize,
    pub max_len: usize,
    pub max_p: usize,
    pub m: usize,
    pub n: usize,
}

/// A named family of identity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PieriA,
    PieriHl,
    PieriC,
    MirrorA,
    MirrorHl,
    MirrorC,
    RimStrips,
    JacobiTrudi,
    Pfaffian,
    TableauTheta,
    Master,
    Abprop,
    Stdcor,
    Unimodal,
    Coproduct,
    NilCoxeter,
}

pub const ALL_SUITES: [Suite; 16] = [
    Suite::PieriA,
    Suite::PieriHl,
    Suite::PieriC,
    Suite::MirrorA,
    Suite::MirrorHl,
    Suite::MirrorC,
    Suite::RimStrips,
    Suite::JacobiTrudi,
    Suite::Pfaffian,
    Suite::TableauTheta,
    Suite::Master,
    Suite::Abprop,
    Suite::Stdcor,
    Suite::Unimodal,
    Suite::Coproduct,
    Suite::NilCoxeter,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::PieriA => "pieri-a",
            Suite::PieriHl => "pieri-hl",
            Suite::PieriC => "pieri-c",
            Suite::MirrorA => "mirror-a",
            Suite::MirrorHl => "mirror-hl",
            Suite::MirrorC => "mirror-c",
            Suite::RimStrips => "rim-strips",
            Suite::JacobiTrudi => "jacobi-trudi",
            Suite::Pfaffian => "pfaffian",
            Suite::TableauTheta => "tableau-theta",
            Suite::Master => "master",
            Suite::Abprop => "abprop",
            Suite::Stdcor => "stdcor",
            Suite::Unimodal => "unimodal",
            Suite::Coproduct => "coproduct",
            Suite::NilCoxeter => "nilcoxeter",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        ALL_SUITES.iter().copied().find(|s| s.name() == name)
    }

    /// The ranges used when the caller gives none.
    pub fn default_bounds(self) -> Bounds {
        let b = Bounds { max_k: 2, max_size: 6, max_len: 4, max_p: 3, m: 2, n: 4 };
        match self {
            Suite::PieriA => Bounds { max_size: 8, max_p: 4, ..b },
            Suite::PieriHl => Bounds { max_size: 6, max_p: 3, ..b },
            Suite::PieriC => Bounds { max_size: 8, max_len: 4, max_p: 4, ..b },
            Suite::MirrorA | Suite::MirrorHl => Bounds { max_size: 6, ..b },
            Suite::MirrorC => Bounds { max_size: 7, ..b },
            Suite::RimStrips => Bounds { max_size: 7, ..b },
            Suite::JacobiTrudi => Bounds { max_size: 8, ..b },
            Suite::Pfaffian => Bounds { max_size: 10, max_len: 4, ..b },
            Suite::TableauTheta => Bounds { max_size: 5, m: 2, ..b },
            Suite::Master => Bounds { max_size: 5, m: 2, ..b },
            Suite::Abprop => Bounds { max_k: 1, m: 3, n: 4, ..b },
            Suite::Stdcor => Bounds { max_k: 2, max_size: 6, n: 4, ..b },
            Suite::Unimodal => Bounds { max_k: 1, max_size: 6, m: 3, n: 4, ..b },
            Suite::Coproduct => Bounds { max_size: 5, m: 2, n: 3, ..b },
            Suite::NilCoxeter => Bounds { max_k: 2, m: 2, n: 4, ..b },
        }
    }

    pub fn run(self, bounds: &Bounds, exec: Exec) -> SuiteReport {
        let start = Instant::now();
        let cases = match self {
            Suite::PieriA => pieri_a(bounds, exec),
            Suite::PieriHl => pieri_hl(bounds, exec),
            Suite::PieriC => pieri_c(bounds, exec),
            Suite::MirrorA => mirror_a(bounds, exec),
            Suite::MirrorHl => mirror_hl(bounds, exec),
            Suite::MirrorC => mirror_c(bounds, exec),
            Suite::RimStrips => rim_strips(bounds, exec),
            Suite::JacobiTrudi => jacobi_trudi_suite(bounds, exec),
            Suite::Pfaffian => pfaffian_suite(bounds, exec),
            Suite::TableauTheta => tableau_theta(bounds, exec),
            Suite::Master => master(bounds, exec),
            Suite::Abprop => abprop(bounds, exec),
            Suite::Stdcor => stdcor(bounds, exec),
            Suite::Unimodal => unimodal(bounds, exec),
            Suite::Coproduct => coproduct(bounds, exec),
            Suite::NilCoxeter => nilcoxeter(bounds, exec),
        };
        SuiteReport { suite: self.name().to_string(), cases, elapsed: start.elapsed() }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions).collect()
}

fn k_strict_up_to(k: usize, max_size: usize, max_len: usize) -> Vec<KStrict> {
    (0..=max_size)
        .flat_map(|n| k_strict_partitions(n, k))
        .filter(|l| l.len() <= max_len)
        .map(|l| KStrict::new(k, l).expect("enumerated k-strict"))
        .collect()
}

fn with_p<T: Clone>(items: Vec<T>, max_p: usize) -> Vec<(T, usize)> {
    items.into_iter().flat_map(|x| (1..=max_p).map(move |p| (x.clone(), p))).collect()
}

fn pieri_a(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases = with_p(partitions_up_to(b.max_size), b.max_p);
    run_cases(&cases, exec, |(lam, p)| {
        let label = format!("p={p} lambda={lam}");
        CaseResult::from_result(
            label.clone(),
            pieri_u_oracle(*p, lam).map(|oracle| {
                let mut rule = RingElement::zero(Basis::U, None);
                for mu in pieri_u(*p, lam) {
                    rule.add_int_term(mu, 1);
                }
                CaseResult::check(label, rule == oracle, || format!("rule {rule} vs ring {oracle}"))
            }),
        )
    })
}

fn pieri_hl(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases = with_p(partitions_up_to(b.max_size), b.max_p);
    run_cases(&cases, exec, |(lam, p)| {
        let label = format!("p={p} lambda={lam}");
        CaseResult::from_result(
            label.clone(),
            pieri_v_oracle(*p, lam).map(|oracle| {
                let rule = pieri_v_element(*p, lam);
                CaseResult::check(label, rule == oracle, || format!("rule {rule} vs ring {oracle}"))
            }),
        )
    })
}

fn pieri_c(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let shapes: Vec<KStrict> = (0..=b.max_k).flat_map(|k| k_strict_up_to(k, b.max_size, b.max_len)).collect();
    let cases = with_p(shapes, b.max_p);
    run_cases(&cases, exec, |(lam, p)| {
        let label = format!("k={} p={p} lambda={}", lam.k(), lam.partition());
        CaseResult::from_result(
            label.clone(),
            pieri_w_oracle(*p, lam).map(|oracle| {
                let rule = pieri_w_element(*p, lam);
                CaseResult::check(label, rule == oracle, || format!("rule {rule} vs ring {oracle}"))
            }),
        )
    })
}

fn mirror_a(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases = partitions_up_to(b.max_size);
    run_cases(&cases, exec, |lam| {
        let r = mirror_u(lam, None);
        CaseResult::check(format!("lambda={lam}"), r.holds(), || r.downward.difference().to_string())
    })
}

fn mirror_hl(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases = partitions_up_to(b.max_size);
    run_cases(&cases, exec, |lam| {
        let r = mirror_v(lam);
        CaseResult::check(format!("lambda={lam}"), r.holds(), || r.difference().to_string())
    })
}

fn mirror_c(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases: Vec<KStrict> = (0..=b.max_k).flat_map(|k| k_strict_up_to(k, b.max_size, usize::MAX)).collect();
    run_cases(&cases, exec, |lam| {
        let r = mirror_w(lam);
        CaseResult::check(format!("k={} lambda={}", lam.k(), lam.partition()), r.holds(), || r.difference().to_string())
    })
}

/// Boxes of the shifted diagram: row `r` occupies columns `r..r + lambda_r - 1`.
fn shifted_cells(lam: &Partition) -> std::collections::BTreeSet<(usize, usize)> {
    lam.parts().iter().enumerate().flat_map(|(i, &l)| (0..l).map(move |j| (i + 1, i + 1 + j))).collect()
}

fn shifted_rim(lam: &Partition) -> std::collections::BTreeSet<(usize, usize)> {
    let cells = shifted_cells(lam);
    cells.iter().copied().filter(|&(r, c)| !cells.contains(&(r + 1, c + 1))).collect()
}

/// For `k` beyond `|lambda|` the k-strip relation is the rim condition on
/// ordinary diagrams; at `k = 0` it is the rim condition on shifted diagrams.
/// Both sides of each mirror sum are also compared at these extremes.
fn rim_strips(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let mut cases: Vec<(KStrict, bool)> = Vec::new();
    for lam in partitions_up_to(b.max_size) {
        let k = lam.size() + 1;
        cases.push((KStrict::new(k, lam.clone()).expect("large k"), false));
        if lam.is_strict() {
            cases.push((KStrict::new(0, lam).expect("strict"), true));
        }
    }
    run_cases(&cases, exec, |(lam, shifted)| {
        let k = lam.k();
        let outer = lam.partition();
        let label = format!("k={k} lambda={outer}");
        for mu in crate::partition::subpartitions(outer) {
            if !mu.is_k_strict(k) {
                continue;
            }
            let (cells, edge) = if *shifted {
                let inner = shifted_cells(&mu);
                let skew: std::collections::BTreeSet<_> = shifted_cells(outer).difference(&inner).copied().collect();
                let ok = skew.is_subset(&shifted_rim(outer));
                (skew, ok)
            } else {
                let skew: std::collections::BTreeSet<_> = outer.minus(&mu).into_iter().collect();
                let ok = skew.is_subset(&rim(outer));
                (skew, ok)
            };
            let want = edge.then(|| components(&cells, Adjacency::Edge).len() as u32);
            let got = n_strip(outer, &mu, k);
            if got != want {
                return CaseResult::check(label, false, || format!("mu={mu}: strip gives {got:?}, rim gives {want:?}"));
            }
        }
        let r = mirror_w(lam);
        CaseResult::check(label, r.holds(), || r.difference().to_string())
    })
}

fn jacobi_trudi_suite(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases = partitions_up_to(b.max_size);
    run_cases(&cases, exec, |lam| {
        let a = IntegerVector::from(lam);
        let (jt, raising) = (jacobi_trudi(&a), giambelli_u(&a));
        CaseResult::check(format!("lambda={lam}"), jt == raising, || format!("{jt} vs {raising}"))
    })
}

fn pfaffian_suite(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases: Vec<Partition> =
        (0..=b.max_size).flat_map(strict_partitions).filter(|l| l.len() <= b.max_len).collect();
    run_cases(&cases, exec, |lam| {
        let label = format!("lambda={lam}");
        let r = pfaffian_w(lam).and_then(|pf| {
            let g = giambelli_w(&IntegerVector::from(lam), None, 0)?;
            Ok(CaseResult::check(label.clone(), pf == g, || format!("{pf} vs {g}")))
        });
        CaseResult::from_result(label, r)
    })
}

fn tableau_theta(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let shapes: Vec<KStrict> = (0..=b.max_k).flat_map(|k| k_strict_up_to(k, b.max_size, usize::MAX)).collect();
    let cases: Vec<(KStrict, usize)> = shapes.into_iter().flat_map(|l| (0..=b.m).map(move |m| (l.clone(), m))).collect();
    run_cases(&cases, exec, |(lam, m)| {
        let raising = theta(lam, *m, ThetaMode::Raising);
        let tableau = theta(lam, *m, ThetaMode::Tableau);
        let reduction = theta(lam, *m, ThetaMode::Reduction);
        CaseResult::check(
            format!("k={} lambda={} m={m}", lam.k(), lam.partition()),
            raising == tableau && tableau == reduction,
            || format!("raising {raising}; tableau {tableau}; reduction {reduction}"),
        )
    })
}

fn master(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases: Vec<KStrict> = (0..=b.max_k).flat_map(|k| k_strict_up_to(k, b.max_size, usize::MAX)).collect();
    run_cases(&cases, exec, |lam| {
        let label = format!("k={} lambda={}", lam.k(), lam.partition());
        let r = master_identities(lam, b.m, b.m).map(|ids| {
            let bad: Vec<String> = ids.iter().filter(|i| !i.holds()).map(|i| i.name.clone()).collect();
            CaseResult::check(label.clone(), bad.is_empty(), || bad.join("; "))
        });
        CaseResult::from_result(label, r)
    })
}

/// Pairs `mu ⊆ lambda` in `P(k, n)`.
fn index_pairs(k: usize, n: usize) -> Vec<(KStrict, KStrict)> {
    let set: Vec<KStrict> =
        grassmannian_index_set(k, n).into_iter().map(|l| KStrict::new(k, l).expect("k-strict")).collect();
    let mut out = Vec::new();
    for lam in &set {
        for mu in &set {
            if lam.partition().contains(mu.partition()) {
                out.push((lam.clone(), mu.clone()));
            }
        }
    }
    out
}

fn abprop(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases: Vec<(KStrict, KStrict)> = (b.max_k.min(1)..=b.max_k).flat_map(|k| index_pairs(k, b.n)).collect();
    run_cases(&cases, exec, |(lam, mu)| {
        let label = format!("k={} {}/{}", lam.k(), lam.partition(), mu.partition());
        let r = (|| -> Result<CaseResult> {
            let f = skew_f(lam, mu, b.m)?;
            let compatible = compatible_pair(lam, mu, b.n)?;
            let standard = count_standard_k_tableaux(lam, mu)? > BigInt::from(0);
            let nonzero = !f.is_zero();
            if nonzero != compatible || compatible != standard {
                return Ok(CaseResult::check(label.clone(), false, || {
                    format!("skew_f nonzero {nonzero}, compatible {compatible}, standard tableau {standard}")
                }));
            }
            if !nonzero {
                return Ok(CaseResult::pass(label.clone()));
            }
            let w = skew_element(lam, mu, b.n)?;
            let fw = stanley_c(&w, b.m);
            if fw != f {
                return Ok(CaseResult::check(label.clone(), false, || format!("F_[{w}] = {fw} but skew_f = {f}")));
            }
            let q = skew_f_q_expansion(lam, mu)?;
            Ok(CaseResult::check(label.clone(), is_nonnegative(&q), || format!("negative Q-coefficient in {q:?}")))
        })();
        CaseResult::from_result(label, r)
    })
}

/// `coefficient of x_1 ... x_r in F_w`, read off the product of `r` factors
/// `C(x_i)` restricted to multilinear terms.
fn multilinear_coefficient(w: &SignedPermutation) -> BigInt {
    let r = w.length();
    let f = stanley_c(w, r);
    f.coeff(&vec![1; r])
}

fn stdcor(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let mut cases: Vec<(KStrict, KStrict)> = Vec::new();
    for k in 1..=b.max_k {
        for (lam, mu) in index_pairs(k, b.n) {
            let r = lam.partition().size() - mu.partition().size();
            if r <= b.max_size && compatible_pair(&lam, &mu, b.n).unwrap_or(false) {
                cases.push((lam, mu));
            }
        }
    }
    run_cases(&cases, exec, |(lam, mu)| {
        let label = format!("k={} {}/{}", lam.k(), lam.partition(), mu.partition());
        let r = (|| -> Result<CaseResult> {
            let w = skew_element(lam, mu, b.n)?;
            let words = count_reduced_words(&w);
            let standard = count_standard_k_tableaux(lam, mu)?;
            let coeff = multilinear_coefficient(&w) >> w.length();
            Ok(CaseResult::check(label.clone(), words == standard && standard == coeff, || {
                format!("reduced words {words}, standard tableaux {standard}, scaled coefficient {coeff}")
            }))
        })();
        CaseResult::from_result(label, r)
    })
}

/// The multiset of weights `prod n_{u_j}` over unimodal factorizations, keyed
/// by the content they match, against `2^{n(T) - r}` over k-tableaux.
fn unimodal(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let mut cases: Vec<(KStrict, KStrict, usize)> = Vec::new();
    for k in b.max_k.min(1)..=b.max_k {
        for (lam, mu) in index_pairs(k, b.n) {
            let size = lam.partition().size() - mu.partition().size();
            if size == 0 || size > b.max_size || !compatible_pair(&lam, &mu, b.n).unwrap_or(false) {
                continue;
            }
            for r in 1..=b.m.min(size) {
                cases.push((lam.clone(), mu.clone(), r));
            }
        }
    }
    run_cases(&cases, exec, |(lam, mu, r)| {
        let r = *r;
        let label = format!("k={} {}/{} r={r}", lam.k(), lam.partition(), mu.partition());
        let res = (|| -> Result<CaseResult> {
            let w = skew_element(lam, mu, b.n)?;
            let mut from_words: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for f in unimodal_factorizations(&w, r) {
                let content: Vec<usize> = f.iter().rev().map(|(u, _)| u.length()).collect();
                from_words.entry(content).or_default().push(f.iter().map(|(_, n)| n).product());
            }
            let mut from_tableaux: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for t in enumerate_k_tableaux(lam, mu, r)? {
                let content = t.content();
                if content.contains(&0) {
                    continue;
                }
                let e = t.n.checked_sub(r as u32).ok_or_else(|| Error::Invalid(format!("n(T) < r for {t}")))?;
                from_tableaux.entry(content).or_default().push(1usize << e);
            }
            for v in from_words.values_mut().chain(from_tableaux.values_mut()) {
                v.sort_unstable();
            }
            Ok(CaseResult::check(label.clone(), from_words == from_tableaux, || {
                format!("factorizations {from_words:?} vs tableaux {from_tableaux:?}")
            }))
        })();
        CaseResult::from_result(label, res)
    })
}

fn all_elements(n: usize) -> Vec<SignedPermutation> {
    let mut out = vec![SignedPermutation::identity(n)];
    let mut seen: std::collections::BTreeSet<SignedPermutation> = out.iter().cloned().collect();
    let mut i = 0;
    while i < out.len() {
        for a in 0..n {
            let next = out[i].times_generator(a);
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
        i += 1;
    }
    out
}

fn coproduct(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    let cases: Vec<SignedPermutation> =
        all_elements(b.n).into_iter().filter(|w| w.length() <= b.max_size).collect();
    run_cases(&cases, exec, |w| {
        let label = format!("w={w}");
        let r = stanley_coproduct(w, b.m, b.m)
            .map(|id| CaseResult::check(label.clone(), id.holds(), || id.difference().to_string()));
        CaseResult::from_result(label, r)
    })
}

/// C-factor commutation for every rank up to `n`, then theta polynomials
/// against Billey-Haiman polynomials of Grassmannian elements.
fn nilcoxeter(b: &Bounds, exec: Exec) -> Vec<CaseResult> {
    #[derive(Clone)]
    enum Case {
        Commute(usize),
        Theta(KStrict, usize),
    }
    let mut cases: Vec<Case> = (1..=b.n).map(Case::Commute).collect();
    for k in 0..=b.max_k.min(b.n) {
        for lam in grassmannian_index_set(k, b.n) {
            for m in 0..=b.m {
                cases.push(Case::Theta(KStrict::new(k, lam.clone()).expect("k-strict"), m));
            }
        }
    }
    run_cases(&cases, exec, |case| match case {
        Case::Commute(n) => {
            let vars = Vars::xs(2);
            let a = c_factor(*n, &Poly::x(vars, 1));
            let c = c_factor(*n, &Poly::x(vars, 2));
            CaseResult::check(format!("commute n={n}"), a.mul(&c) == c.mul(&a), || "products differ".into())
        }
        Case::Theta(lam, m) => {
            let label = format!("k={} lambda={} m={m}", lam.k(), lam.partition());
            let r = grassmannian_element(lam, b.n).and_then(|w| {
                let s = schubert_bh(&w, *m);
                let th = theta(lam, *m, ThetaMode::Reduction).embed(s.vars(), 0)?;
                Ok(CaseResult::check(label.clone(), s == th, || format!("schubert {s} vs theta {th}")))
            });
            CaseResult::from_result(label, r)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(suite: Suite) -> Bounds {
        let b = suite.default_bounds();
        Bounds { max_size: b.max_size.min(4), max_p: b.max_p.min(2), m: b.m.min(2), n: b.n.min(3), ..b }
    }

    #[test]
    fn every_suite_passes_on_small_ranges() {
        for suite in ALL_SUITES {
            let report = suite.run(&small(suite), Exec::default());
            assert!(report.passed(), "{report}");
            assert!(!report.cases.is_empty(), "{suite}");
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let b = small(Suite::PieriC);
        let a = Suite::PieriC.run(&b, Exec::Sequential);
        let p = Suite::PieriC.run(&b, Exec::Parallel);
        assert_eq!(a.cases, p.cases);
    }

    #[test]
    fn names_round_trip() {
        for s in ALL_SUITES {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }
}
