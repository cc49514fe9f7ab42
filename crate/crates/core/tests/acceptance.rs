//! Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
//! Run with `cargo test -p kpschur --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use kpschur::algebra::{p_to_schur, schur_to_p, PSeries, SchurSeries};
use kpschur::bernstein::{apply_word, bernstein, bernstein_compose, Method};
use kpschur::kp::{
    grassmannian_table, pde_for_pair, reduce_to_log, residue_check, CoeffTable, Derivative,
    DiffExpr, FactoredPde, Matrix, Monomial, Residue, Target,
};
use kpschur::partition::{enumerate_partitions, partitions_of};
use kpschur::plucker::{
    classical_relation, evaluate, normalize, relation_set, symmetric_relation_auto, Verdict,
};
use kpschur::{part, rat, Partition};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const SEEDS: std::ops::Range<u64> = 0..20;

fn random_matrix(seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<i64>> = (0..3)
        .map(|_| (0..7).map(|_| rng.gen_range(-5..=5)).collect())
        .collect();
    Matrix::from_integers(&rows).unwrap()
}

fn bernstein_routes() -> Outcome {
    let mut n = 0;
    for lambda in enumerate_partitions(7) {
        let closed = bernstein(&lambda, 9, Method::Closed);
        let definitional = bernstein(&lambda, 9, Method::Definitional);
        let survivor = bernstein(&lambda, 9, Method::Survivor);
        ensure!(
            closed == definitional,
            "closed vs definitional differ at {lambda}"
        );
        ensure!(closed == survivor, "closed vs survivor differ at {lambda}");
        n += 1;
    }
    Ok(format!(
        "{n} partitions, three routes identical at max weight 9"
    ))
}

fn constructor_identity() -> Outcome {
    let mut n = 0;
    for lambda in enumerate_partitions(8) {
        let word: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
        let built = bernstein_compose(&word, 8).map_err(|e| format!("{lambda}: {e}"))?;
        ensure!(
            built == SchurSeries::basis(lambda.clone()),
            "compose({lambda}) = {built}"
        );
        n += 1;
    }
    Ok(format!("{n} partitions rebuilt from the vacuum"))
}

fn anticommutation() -> Outcome {
    let (mut direct, mut widened) = (0, 0);
    for lambda in enumerate_partitions(5) {
        let s = SchurSeries::basis(lambda.clone());
        for i in -3i64..=3 {
            for j in -3i64..=3 {
                let lhs = apply_word(&[i, j], &s, 9);
                let rhs = apply_word(&[j - 1, i + 1], &s, 9);
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) => {
                        ensure!(l == -r, "B_{i}B_{j} on {lambda}");
                        direct += 1;
                    }
                    (Err(_), Err(_)) => {
                        let l = apply_word(&[i, j], &s, 11).map_err(|e| e.to_string())?;
                        let r = apply_word(&[j - 1, i + 1], &s, 11).map_err(|e| e.to_string())?;
                        ensure!(l == -r, "B_{i}B_{j} on {lambda} at max weight 11");
                        widened += 1;
                    }
                    _ => return Err(format!("only one side of B_{i}B_{j} on {lambda} overflows")),
                }
            }
        }
    }
    Ok(format!(
        "{direct} cases exact at weight 9, {widened} overflow on both sides and agree at weight 11"
    ))
}

fn plucker_forms() -> Outcome {
    let mut n = 0;
    for a in 0..=4 {
        for alpha in partitions_of(a) {
            for b in 0..=5 {
                for beta in partitions_of(b) {
                    let sym = symmetric_relation_auto(&alpha, &beta);
                    for m in 1..=6 {
                        let Ok(cls) = classical_relation(m, &alpha, &beta) else {
                            continue;
                        };
                        let stability = if m % 2 == 1 { rat(1, 1) } else { rat(-1, 1) };
                        ensure!(
                            sym.combined()
                                .same_terms(&cls.combined().scaled(&stability)),
                            "m={m}, α={alpha}, β={beta}"
                        );
                        ensure!(
                            normalize(&sym).same_terms(&normalize(&cls)),
                            "normalized m={m}, α={alpha}, β={beta}"
                        );
                        n += 1;
                    }
                }
            }
        }
    }
    ensure!(
        normalize(&symmetric_relation_auto(&part![1], &part![1])).is_zero(),
        "α=β=(1) is not redundant"
    );
    let canonical = normalize(&symmetric_relation_auto(&part![], &part![1, 1, 1]));
    let text = canonical.to_string();
    ensure!(
        text == "a[-]*a[2,2] - a[1]*a[2,1] + a[2]*a[1,1] = 0",
        "canonical relation renders as {text}"
    );
    ensure!(
        normalize(&symmetric_relation_auto(&part![2], &part![1])).same_terms(&canonical),
        "α=(2), β=(1) is not the canonical relation"
    );
    Ok(format!(
        "{n} admissible (m, α, β) agree; worked example reproduced"
    ))
}

fn check_table(table: &CoeffTable, label: &str) -> Result<usize, String> {
    let verdicts = residue_check(table);
    ensure!(!verdicts.is_empty(), "{label}: no pairs checked");
    let residue = Residue::new(table);
    for v in &verdicts {
        ensure!(
            v.verdict == Verdict::Holds,
            "{label}: ({}, {}) {:?}",
            v.alpha,
            v.beta,
            v.verdict
        );
        let direct = evaluate(&symmetric_relation_auto(&v.alpha, &v.beta), table.series())
            .map_err(|e| e.to_string())?;
        ensure!(
            residue.coefficient(&v.alpha, &v.beta) == Some(direct),
            "{label}: residue and relation disagree at ({}, {})",
            v.alpha,
            v.beta
        );
    }
    Ok(verdicts.len())
}

fn positive_tau() -> Outcome {
    let mut pairs = 0;
    for lambda in enumerate_partitions(4) {
        pairs += check_table(
            &CoeffTable::from_series(SchurSeries::basis(lambda.clone()), 8),
            &format!("δ_{lambda}"),
        )?;
    }
    for seed in SEEDS {
        let table = grassmannian_table(&random_matrix(seed), 8).map_err(|e| e.to_string())?;
        pairs += check_table(&table, &format!("seed {seed}"))?;
    }
    Ok(format!(
        "{pairs} pair checks over 12 single-Schur and 20 Grassmannian tables"
    ))
}

fn negative_tau() -> Outcome {
    let table = CoeffTable::from_series(
        SchurSeries::from_terms(None, [(part![], rat(1, 1)), (part![2, 2], rat(1, 1))]),
        4,
    );
    let canonical = normalize(&symmetric_relation_auto(&part![], &part![1, 1, 1]));
    let failing: Vec<_> = relation_set(4)
        .into_iter()
        .filter_map(|r| match evaluate(&r, table.series()) {
            Ok(v) if v != rat(0, 1) => Some((r, v)),
            _ => None,
        })
        .collect();
    ensure!(
        failing.len() == 1,
        "{} relations fail on 1 + s_(2,2)",
        failing.len()
    );
    ensure!(
        failing[0].0.same_terms(&canonical),
        "wrong relation fails: {}",
        failing[0].0
    );
    ensure!(failing[0].1 == rat(1, 1), "value {}", failing[0].1);
    for v in residue_check(&table) {
        if let Verdict::Fails(_) = v.verdict {
            let r = normalize(&symmetric_relation_auto(&v.alpha, &v.beta));
            ensure!(
                r.same_terms(&canonical),
                "pair ({}, {}) fails outside the canonical relation",
                v.alpha,
                v.beta
            );
        }
    }

    let support: Vec<Partition> = enumerate_partitions(7)
        .into_iter()
        .filter(|l| l.length() <= 3 && l.first() <= 4)
        .collect();
    for seed in SEEDS {
        let mut table = grassmannian_table(&random_matrix(seed), 8).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let target = support.choose(&mut rng).unwrap().clone();
        table
            .bump(target.clone(), rat(1, 1))
            .map_err(|e| e.to_string())?;
        let caught = residue_check(&table)
            .iter()
            .any(|v| matches!(v.verdict, Verdict::Fails(_)));
        ensure!(caught, "seed {seed}: bumping a_{target} goes unnoticed");
    }
    Ok("1 + s_(2,2) fails only the canonical relation, value 1; 20/20 mutations caught".into())
}

fn printed_equation() -> Outcome {
    let d = |v: &[usize]| Derivative::new(v.to_vec());
    let mut expected = DiffExpr::zero(Target::Tau);
    for (l, r, c) in [
        (d(&[]), d(&[1, 1, 1, 1]), rat(1, 12)),
        (d(&[]), d(&[1, 3]), rat(-1, 1)),
        (d(&[]), d(&[2, 2]), rat(1, 1)),
        (d(&[1]), d(&[1, 1, 1]), rat(-1, 3)),
        (d(&[1]), d(&[3]), rat(1, 1)),
        (d(&[1, 1]), d(&[1, 1]), rat(1, 4)),
        (d(&[2]), d(&[2]), rat(-1, 1)),
    ] {
        expected.add_term(Monomial::new(vec![l, r]), c);
    }
    let raw = pde_for_pair(&Partition::empty(), &part![1, 1, 1]);
    let normalized = raw.with_leading(&rat(1, 12));
    ensure!(normalized == expected, "expanded equation: {normalized}");

    let factored = FactoredPde::new(&symmetric_relation_auto(
        &Partition::empty(),
        &part![1, 1, 1],
    ))
    .to_string();
    let printed = "1/12*t*(t_1111 - 12*t_13 + 12*t_22) - 1/3*t_1*(t_111 - 3*t_3) + 1/4*(t_11 + 2*t_2)*(t_11 - 2*t_2) = 0";
    ensure!(factored == printed, "factored form: {factored}");

    let mut kp = DiffExpr::zero(Target::LogTau);
    kp.add_term(Monomial::new(vec![d(&[1, 1, 1, 1])]), rat(1, 12));
    kp.add_term(Monomial::new(vec![d(&[1, 3])]), rat(-1, 1));
    kp.add_term(Monomial::new(vec![d(&[2, 2])]), rat(1, 1));
    kp.add_term(Monomial::new(vec![d(&[1, 1]), d(&[1, 1])]), rat(1, 2));
    let reduced = reduce_to_log(&normalized);
    ensure!(reduced == kp, "log form: {reduced}");
    ensure!(
        reduced.to_string() == "1/12*F_1111 - F_13 + F_22 + 1/2*F_11^2 = 0",
        "log text: {reduced}"
    );
    Ok("τ-equation and its log form reproduce term for term".into())
}

fn basis_golden() -> Outcome {
    let p = |terms: &[(&[usize], i64, i64)]| {
        PSeries::from_terms(
            None,
            terms
                .iter()
                .map(|(k, n, d)| (Partition::from_unsorted(k.to_vec()), rat(*n, *d))),
        )
    };
    let golden = [
        (part![], p(&[(&[], 1, 1)])),
        (part![1], p(&[(&[1], 1, 1)])),
        (part![2], p(&[(&[1, 1], 1, 2), (&[2], 1, 2)])),
        (part![1, 1], p(&[(&[1, 1], 1, 2), (&[2], -1, 2)])),
        (part![2, 1], p(&[(&[1, 1, 1], 1, 3), (&[3], -1, 3)])),
        (
            part![2, 2],
            p(&[(&[1, 1, 1, 1], 1, 12), (&[3, 1], -4, 12), (&[2, 2], 3, 12)]),
        ),
    ];
    for (lambda, want) in &golden {
        let got = schur_to_p(lambda);
        ensure!(&got == want, "s_{lambda} = {got}");
    }
    let mut n = 0;
    for lambda in enumerate_partitions(8) {
        ensure!(
            p_to_schur(&schur_to_p(&lambda)) == SchurSeries::basis(lambda.clone()),
            "round trip at {lambda}"
        );
        n += 1;
    }
    Ok(format!("6 golden expansions, {n} round trips"))
}

fn code_fidelity() -> Outcome {
    let code = part![6, 5, 5, 4, 1].code().to_string();
    ensure!(code == "RURRRURUURU", "code {code}");
    let mut n = 0;
    for lambda in enumerate_partitions(10) {
        let c = lambda.code();
        for i in 1..=12 {
            let up = lambda.switch_up(i);
            ensure!(up == c.flip_right_step(i), "{lambda}^({i})");
            ensure!(
                lambda.switch_down(i) == c.flip_up_step(i),
                "{lambda}^(-{i})"
            );
            let k = lambda.u_steps(i) + 1;
            ensure!(
                up.switch_down(k) == lambda,
                "inverse law at {lambda}, i={i}"
            );
            ensure!(
                lambda.conjugate().switch_up(i) == lambda.switch_down(i).conjugate(),
                "conjugation law at {lambda}, i={i}"
            );

            // the converse direction: start from β = λ and step down.
            let below = lambda.switch_down(i);
            let bound = lambda.weight() + i + 2;
            let found = (1..=bound)
                .filter(|&j| below.switch_up(j) == lambda)
                .collect::<Vec<_>>();
            ensure!(
                found.len() == 1,
                "{lambda}^(-{i}) has {} preimages",
                found.len()
            );
            ensure!(
                below.u_steps(found[0]) + 1 == i,
                "inverse law converse at {lambda}, k={i}"
            );
            n += 1;
        }
    }
    Ok(format!(
        "code string matches; {n} (λ, i) cases of closed forms, inverse and conjugation laws"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 bernstein routes agree", bernstein_routes),
        ("2 compose builds s_λ", constructor_identity),
        ("3 anticommutation", anticommutation),
        ("4 plucker forms agree", plucker_forms),
        ("5 positive tau tables", positive_tau),
        ("6 negative tau tables", negative_tau),
        ("7 printed equation", printed_equation),
        ("8 basis conversion", basis_golden),
        ("9 code fidelity", code_fidelity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({secs:.1}s)");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
