//! One line per acceptance criterion. Runs as a plain binary so the lines are
//! always printed; exits nonzero if any criterion fails.

use num_bigint::BigInt;
use raising_core::combinatorics::tableaux::{enumerate_k_bitableaux, enumerate_k_tableaux};
use raising_core::element::{from_int_terms, Basis};
use raising_core::hyperoctahedral::{
    grassmannian_element, is_reduced_word, partition_of, reduced_words, tableau_word, SignedPermutation,
};
use raising_core::partition::{IntegerVector, KStrict, Partition};
use raising_core::poly::{Poly, Vars};
use raising_core::theta::{skew_f, theta, ThetaMode};
use raising_core::type_c::{giambelli_w, pieri_w_element, pieri_w_oracle, toprow_recursion_w};
use raising_core::verify::{Exec, Suite};
use std::time::{Duration, Instant};

fn ks(k: usize, s: &str) -> KStrict {
    KStrict::new(k, s.parse().unwrap()).unwrap()
}

fn sp(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.notes.push(what.into());
        }
    }

    fn suites(&mut self, suites: &[Suite], limit: Option<Duration>) {
        for &s in suites {
            let report = s.run(&s.default_bounds(), Exec::default());
            self.notes.push(format!("{} {} cases in {:.2?}", s, report.cases.len(), report.elapsed));
            if !report.passed() {
                self.ok = false;
                self.notes.push(report.to_string());
            }
            if let Some(limit) = limit {
                self.expect(report.elapsed < limit, format!("{s} exceeded {limit:?}"));
            }
        }
    }
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let got = giambelli_w(&IntegerVector::from(vec![6, 2, 1]), None, 2).unwrap();
    let want = from_int_terms(Basis::WMonomial, Some(2), &[("6,2,1", 1), ("6,3", -1), ("7,1,1", -2), ("8,1", 4), ("9", -2)]);
    o.expect(got == want, format!("W_621 = {got}"));
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let ex1 = from_int_terms(Basis::W, Some(1), &[("3,2,1,1,1", 1), ("4,2,1,1", 2), ("6,2", 1)]);
    let ex2 = from_int_terms(Basis::W, Some(1), &[("6", 2), ("5,1", 4), ("4,2", 1), ("4,1,1", 2), ("3,2,1", 1)]);
    for (p, lam, want) in [(1, "3,2,1,1", ex1), (3, "2,1", ex2)] {
        let lam = ks(1, lam);
        let rule = pieri_w_element(p, &lam);
        let oracle = pieri_w_oracle(p, &lam).unwrap();
        o.expect(rule == want, format!("rule gives {rule}"));
        o.expect(oracle == want, format!("ring gives {oracle}"));
        o.expect(rule.sorted_terms() == oracle.sorted_terms(), "term lists differ");
    }
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let lam = ks(2, "4,2,1");
    let got = pieri_w_element(7, &lam);
    let want = from_int_terms(
        Basis::W,
        Some(2),
        &[
            ("7,4,2,1", 1),
            ("8,3,2,1", 2),
            ("8,4,2", 2),
            ("9,2,2,1", 2),
            ("9,3,1,1", 2),
            ("9,3,2", 4),
            ("10,2,1,1", 2),
            ("10,2,2", 4),
            ("10,3,1", 4),
            ("11,2,1", 4),
            ("11,3", 2),
            ("12,2", 2),
        ],
    );
    o.expect(got == want, format!("w_7 W_421 = {got}"));
    o.expect(pieri_w_oracle(7, &lam).unwrap() == want, "ring product differs");
    let rec = toprow_recursion_w(7, &lam).unwrap();
    o.expect(rec.holds() && rec.difference().is_zero(), rec.to_string());
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let lam = ks(1, "3,1");
    let vars = Vars::new(2, 1, false);
    let mut want = Poly::zero(vars);
    for (e, c) in [
        ([3, 1, 0], 4),
        ([2, 2, 0], 8),
        ([1, 3, 0], 4),
        ([3, 0, 1], 2),
        ([2, 1, 1], 8),
        ([1, 2, 1], 8),
        ([0, 3, 1], 2),
        ([2, 0, 2], 2),
        ([1, 1, 2], 4),
        ([0, 2, 2], 2),
    ] {
        want.add_term(e.to_vec(), BigInt::from(c));
    }
    for mode in [ThetaMode::Raising, ThetaMode::Reduction, ThetaMode::Tableau] {
        let got = theta(&lam, 2, mode);
        o.expect(got == want, format!("{mode:?} gives {got}"));
    }
    let bitab = enumerate_k_bitableaux(&lam, 2).unwrap();
    let by_n = |n: u32| bitab.iter().filter(|b| b.n() == n).count();
    o.expect(bitab.len() == 12, format!("{} bitableaux", bitab.len()));
    o.expect((by_n(3), by_n(2), by_n(1)) == (1, 7, 4), format!("n split {:?}", (by_n(3), by_n(2), by_n(1))));
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    for (k, n, lam, win) in
        [(3, 7, "8,5,2,1", "1,4,7,-5,-2,3,6"), (3, 7, "8,6,5,2", "1,6,7,-5,-3,-2,4"), (1, 3, "4,1", "2,-3,1")]
    {
        let lam = ks(k, lam);
        let w = grassmannian_element(&lam, n).unwrap();
        o.expect(w == sp(win), format!("w_{} = {w}", lam.partition()));
        o.expect(partition_of(&w, k).ok() == Some(lam.clone()), format!("round trip of {w}"));
    }
    let word = [1, 0, 2, 1, 0, 4, 3, 2, 1, 0, 3, 2, 1, 5, 4, 3, 2, 6, 5, 4, 3];
    o.expect(is_reduced_word(&word, &sp("1,6,7,-5,-3,-2,4")), "21-letter word not reduced");
    let rows: [&[usize]; 4] = [&[1, 5, 9, 12, 13, 14, 15, 16], &[2, 6, 10, 17, 18, 19], &[3, 7, 11, 20, 21], &[4, 8]];
    let chain: Vec<Partition> = (0..=21)
        .map(|e| Partition::new(rows.iter().map(|r| r.iter().filter(|&&x| x <= e).count()).collect()).unwrap())
        .collect();
    o.expect(tableau_word(&chain, 3, 7).ok().as_deref() == Some(&word[..]), "tableau word differs");
    let w = sp("2,-3,1");
    let words = reduced_words(&w);
    let expected = vec![vec![1, 2, 1, 0, 1], vec![2, 1, 0, 2, 1], vec![2, 1, 2, 0, 1]];
    o.expect(words == expected, format!("reduced words {words:?}"));
    let mut from_tableaux: Vec<Vec<usize>> = enumerate_k_tableaux(&ks(1, "4,1"), &ks(1, ""), 5)
        .unwrap()
        .filter(|t| t.content().iter().all(|&c| c == 1))
        .map(|t| tableau_word(&t.chain, 1, 3).unwrap())
        .collect();
    from_tableaux.sort();
    o.expect(from_tableaux == expected, format!("tableau words {from_tableaux:?}"));
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    o.suites(&[Suite::PieriA, Suite::PieriHl, Suite::PieriC], Some(Duration::from_secs(120)));
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    o.suites(&[Suite::MirrorHl, Suite::MirrorC, Suite::MirrorA, Suite::RimStrips], None);
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    o.suites(&[Suite::JacobiTrudi, Suite::Pfaffian], None);
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    o.suites(&[Suite::Abprop, Suite::Stdcor, Suite::Unimodal], None);
    o
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new();
    o.suites(&[Suite::Master], None);
    for (lam, mu) in [("3,2", "3"), ("5,4,1,1", "4,3")] {
        let f = skew_f(&ks(1, lam), &ks(1, mu), 3).unwrap();
        o.expect(f.is_zero(), format!("F_{lam}/{mu} = {f}"));
    }
    o
}

fn criterion_11() -> Outcome {
    let mut o = Outcome::new();
    o.suites(&[Suite::NilCoxeter, Suite::Coproduct], None);
    o
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 11] = [
        ("W_621 in B^(2)", criterion_1, Duration::from_secs(1)),
        ("w_1 W_3211 and w_3 W_21 by rule and by ring", criterion_2, Duration::from_secs(5)),
        ("w_7 W_421 and the top row recursion", criterion_3, Duration::from_secs(10)),
        ("theta_31 in three modes, 12 bitableaux", criterion_4, Duration::MAX),
        ("Grassmannian dictionary and reduced words", criterion_5, Duration::MAX),
        ("Giambelli and Pieri sweeps", criterion_6, Duration::MAX),
        ("mirror identities", criterion_7, Duration::MAX),
        ("Jacobi-Trudi and Pfaffian", criterion_8, Duration::MAX),
        ("skew functions, compatible pairs, reduced word counts", criterion_9, Duration::MAX),
        ("master identities and vanishing skew functions", criterion_10, Duration::MAX),
        ("nilCoxeter commutation and Schubert = theta", criterion_11, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if elapsed >= *limit {
            outcome.expect(false, format!("took {elapsed:.2?}, limit {limit:?}"));
        }
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {status} {name} ({elapsed:.2?})", i + 1);
        for note in &outcome.notes {
            println!("    {note}");
        }
        if !outcome.ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
