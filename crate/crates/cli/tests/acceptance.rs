//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the lines always
//! reach the terminal.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use acm_gonality::quadform::{c_squared, cayley_number, cayley_positive, q_lambda};
use acm_gonality::{
    destabilizer_search, enumerate_s_basic, enumerate_s_minimal, link_hvector, predict_gonality,
    scan_exceptions, secant_degree, verify_quadform_bounds, BiliaisonType, HVector, PencilClass,
    PicardModel, SecantTag, Speciality, DELTA_POS_A, DELTA_POS_B,
};
use num_rational::Ratio;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! expect_eq {
    ($label:expr, $left:expr, $right:expr) => {{
        let (l, r) = ($left, $right);
        if l != r {
            return Err(format!("{}: got {:?}, expected {:?}", $label, l, r));
        }
    }};
}

fn h(text: &str) -> HVector {
    text.parse().expect("literal h-vector")
}

fn lambda(text: &str) -> BiliaisonType {
    text.parse().expect("literal type")
}

fn classes(model: &PicardModel, k: i64) -> Result<Vec<(i64, Vec<i64>, i64)>, String> {
    destabilizer_search(model, k)
        .map(|found| found.into_iter().map(|c| (c.c, c.a, c.x)).collect())
        .map_err(|e| e.to_string())
}

fn generic_walkthrough() -> Outcome {
    let hv = h("1,2,3,4,5,6,7,4,3");
    let inv = hv.invariants();
    expect_eq!(
        "(d, g, s, e)",
        (inv.d, inv.g, inv.s, inv.e),
        (35, 130, 7, Speciality::Finite(6))
    );
    let m = PicardModel::new(&hv).map_err(|e| e.to_string())?;
    expect_eq!("linked", m.linked.values().to_vec(), vec![1, 2, 3, 4, 2, 2]);
    let degrees: Vec<i64> = m.components.iter().map(|c| c.degree).collect();
    let qs: Vec<i64> = m.components.iter().map(|c| c.q).collect();
    expect_eq!("component degrees", degrees, vec![3, 11]);
    expect_eq!("q", qs, vec![86, 86]);
    expect_eq!("phi_12", m.phi[0][1], -9);
    expect_eq!(
        "phi(C,C)",
        (m.phi_cc(), m.phi(&m.c_class, &m.c_class)),
        (154, 154)
    );
    expect_eq!(
        "C^2",
        c_squared(inv.d, inv.g, inv.s).map_err(|e| e.to_string())?,
        153
    );
    expect_eq!(
        "classes at k = 31",
        classes(&m, 31)?,
        vec![(-1, vec![0, 0], -7)]
    );
    let report = predict_gonality(&hv).map_err(|e| e.to_string())?;
    expect_eq!("gonality", report.gonality, Some(31));
    Ok(())
}

fn secant_walkthrough() -> Outcome {
    let hv = h("1,2,3,4,5,3,2");
    let inv = hv.invariants();
    expect_eq!(
        "(d, g, s, e)",
        (inv.d, inv.g, inv.s, inv.e),
        (20, 48, 5, Speciality::Finite(4))
    );
    let m = PicardModel::new(&hv).map_err(|e| e.to_string())?;
    expect_eq!("linked", m.linked.values().to_vec(), vec![1, 2, 1, 1]);
    let qs: Vec<i64> = m.components.iter().map(|c| c.q).collect();
    expect_eq!("q", qs, vec![16, 16]);
    expect_eq!("phi_12", m.phi[0][1], -1);
    expect_eq!("phi(C,C)", m.phi_cc(), 30);
    expect_eq!(
        "C^2",
        c_squared(inv.d, inv.g, inv.s).map_err(|e| e.to_string())?,
        74
    );
    expect_eq!(
        "C.L",
        secant_degree(&m, SecantTag::CaseA).map_err(|e| e.to_string())?,
        7
    );
    expect_eq!(
        "classes at k = 13",
        classes(&m, 13)?,
        vec![(-1, vec![1, 0], -4)]
    );
    let top = destabilizer_search(&m, 13).map_err(|e| e.to_string())?;
    expect_eq!(
        "class at k = 13",
        top[0].classification,
        PencilClass::LineMinusH(1)
    );
    expect_eq!("classes at k = 12", classes(&m, 12)?, vec![]);
    let r = predict_gonality(&hv).map_err(|e| e.to_string())?;
    expect_eq!(
        "(gonality, unique, clifford)",
        (r.gonality, r.unique_pencil, r.clifford),
        (Some(13), true, Some(11))
    );
    Ok(())
}

fn exception_lists() -> Outcome {
    let scan = |k_offset| -> Result<Vec<(i64, i64, i64)>, String> {
        Ok(scan_exceptions(4, 8, 45, k_offset)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|x| (x.s, x.d, x.g))
            .collect())
    };
    expect_eq!("k = d - 5", scan(5)?, DELTA_POS_A.to_vec());
    // the printed list b) has 16 entries
    let b = scan(4)?;
    expect_eq!("k = d - 4", b.clone(), DELTA_POS_B.to_vec());
    expect_eq!("list b size", b.len(), 16);
    let beyond = scan_exceptions(9, 9, 60, 4).map_err(|e| e.to_string())?;
    expect_eq!("s = 9", beyond.len(), 0);
    Ok(())
}

fn quadform_suite() -> Outcome {
    let start = Instant::now();
    for s in 4..=10 {
        let report = verify_quadform_bounds(s).map_err(|e| e.to_string())?;
        for c in &report.checks {
            if !c.passed {
                return Err(format!("s = {s}, {} failed: {:?}", c.name, c.witnesses));
            }
        }
        // the residue-class bound covers every type with at least two parts
        expect_eq!(
            format!("s = {s} residue rows"),
            report.bounds.len() as i64,
            (1i64 << (s - 1)) - s
        );
        if !report.passed() {
            return Err(format!("s = {s}: residue-class bound failed"));
        }
    }
    expect_eq!(
        "q((1,2), 5)",
        q_lambda(&lambda("(1,2)"), 5).map_err(|e| e.to_string())?,
        34
    );
    expect_eq!(
        "q((1,3), 5)",
        q_lambda(&lambda("(1,3)"), 5).map_err(|e| e.to_string())?,
        36
    );
    expect_eq!(
        "q((3), 6)",
        q_lambda(&lambda("(3)"), 6).map_err(|e| e.to_string())?,
        45
    );
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(())
}

fn liaison() -> Outcome {
    for s in 1..=8 {
        let minimal = enumerate_s_minimal(s);
        let basic = enumerate_s_basic(s);
        let expected = 1usize << (s - 1);
        expect_eq!(
            format!("s = {s} counts"),
            (minimal.len(), basic.len()),
            (expected, expected)
        );
        for lam in &minimal {
            let hv = lam.to_hvector();
            let there = link_hvector(&hv, s, s).map_err(|e| e.to_string())?;
            expect_eq!(
                format!("s = {s}, {lam} involution"),
                link_hvector(&there, s, s).map_err(|e| e.to_string())?,
                hv
            );
        }
        let image: BTreeSet<BiliaisonType> = basic
            .iter()
            .map(|b| link_hvector(b, s, s).map(|l| BiliaisonType::from_hvector(&l)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let all: BTreeSet<BiliaisonType> = minimal.into_iter().collect();
        expect_eq!(format!("s = {s} bijection"), image, all);
    }
    Ok(())
}

fn cayley() -> Outcome {
    expect_eq!("C(9, 10)", cayley_number(9, 10), Ratio::from_integer(0));
    for d in 10i64..=20 {
        // g = d(d-3)/6 + 1 taken as an exact rational so every d counts
        let g = Ratio::new(d * (d - 3), 6) + 1;
        let value = Ratio::new((d - 2) * (d - 3) * (d - 3) * (d - 4), 12)
            - g * (Ratio::from_integer(d * d - 7 * d + 13) - g) / 2;
        let closed = Ratio::new(d * (d - 3) * (d - 6) * (d - 9), 72);
        expect_eq!(format!("identity at d = {d}"), value, closed);
        if d * (d - 3) % 6 == 0 {
            expect_eq!(
                format!("C({d}, g_max)"),
                cayley_number(d, d * (d - 3) / 6 + 1),
                closed
            );
        }
        for g in 0..=d * (d - 3) / 6 + 1 {
            if !cayley_positive(d, g) {
                return Err(format!(
                    "C({d}, {g}) = {} is not positive",
                    cayley_number(d, g)
                ));
            }
        }
    }
    Ok(())
}

fn headless_cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_acmgon");
    for args in [
        &["verify", "--s-max", "10"][..],
        &["scan", "--k-offset", "4", "--d-max", "45"],
        &["examples"],
    ] {
        let out = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!(
                "acmgon {} exited with {}",
                args.join(" "),
                out.status
            ));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("degree-35 walkthrough", generic_walkthrough),
        ("degree-20 walkthrough", secant_walkthrough),
        ("exception-list regeneration", exception_lists),
        ("quadratic-form bound suite, s = 4..10", quadform_suite),
        ("liaison involution and bijection, s <= 8", liaison),
        ("Cayley number checks", cayley),
        ("headless verify && scan && examples", headless_cli),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
