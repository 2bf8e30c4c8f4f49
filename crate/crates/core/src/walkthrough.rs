//! Two fully worked curves, recomputed end to end. Each number that a reader
//! would check by hand gets its own line.

use serde::Serialize;

use crate::error::Result;
use crate::gonality::{destabilizer_search, predict_gonality, secant_degree, PencilClass};
use crate::hvector::{HVector, SecantTag};
use crate::picard::PicardModel;
use crate::quadform::{c_squared, delta_e};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkthroughCheck {
    pub example: &'static str,
    pub quantity: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

struct Sheet {
    example: &'static str,
    rows: Vec<WalkthroughCheck>,
}

impl Sheet {
    fn row(&mut self, quantity: &'static str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.rows.push(WalkthroughCheck {
            example: self.example,
            quantity,
            expected,
            actual,
            pass,
        });
    }
}

fn fmt_classes(model: &PicardModel, k: i64) -> Result<String> {
    let found = destabilizer_search(model, k)?;
    Ok(found
        .iter()
        .map(|c| {
            let a: Vec<String> = c.a.iter().map(|v| v.to_string()).collect();
            format!(
                "c={} a=({}) x={} {}",
                c.c,
                a.join(","),
                c.x,
                c.classification
            )
        })
        .collect::<Vec<_>>()
        .join("; "))
}

/// A degree-35 curve on a septic surface; the linked curve splits into
/// components of degrees 3 and 11 and the gonality is `d - 4`.
fn generic_curve() -> Result<Vec<WalkthroughCheck>> {
    let mut sheet = Sheet {
        example: "generic",
        rows: Vec::new(),
    };
    let h: HVector = "1,2,3,4,5,6,7,4,3".parse()?;
    let inv = h.invariants();
    sheet.row("d", 35, inv.d);
    sheet.row("g", 130, inv.g);
    sheet.row("s", 7, inv.s);
    sheet.row("t", 7, inv.t.unwrap_or(-1));
    sheet.row("e", 6, inv.e);
    sheet.row("case", "Generic", format!("{:?}", h.multisecant_case().tag));
    let m = PicardModel::new(&h)?;
    sheet.row("linked h-vector", "1,2,3,4,2,2", &m.linked);
    sheet.row("linked type", "(1,2,5,6)", &m.linked_lambda);
    let pieces: Vec<String> = m.components.iter().map(|c| c.lambda.to_string()).collect();
    sheet.row("pieces", "(1,2) (5,6)", pieces.join(" "));
    let degrees: Vec<String> = m.components.iter().map(|c| c.degree.to_string()).collect();
    sheet.row("component degrees", "3 11", degrees.join(" "));
    let qs: Vec<String> = m.components.iter().map(|c| c.q.to_string()).collect();
    sheet.row("q_i", "86 86", qs.join(" "));
    sheet.row("phi_12", -9, m.phi[0][1]);
    let w: Vec<String> = m
        .components
        .iter()
        .map(|c| (c.q - c.b).to_string())
        .collect();
    sheet.row("q_i - b_i", "77 77", w.join(" "));
    sheet.row("phi(C,C) from d, g", 154, m.phi_cc());
    sheet.row(
        "phi(C,C) on the lattice",
        154,
        m.phi(&m.c_class, &m.c_class),
    );
    sheet.row("C^2", 153, c_squared(inv.d, inv.g, inv.s)?);
    sheet.row("Delta at k = 31", 29, delta_e(inv.d, inv.g, inv.s, 31));
    sheet.row(
        "classes at k = 31",
        "c=-1 a=(0,0) x=-7 MinusH",
        fmt_classes(&m, 31)?,
    );
    sheet.row(
        "classes at k = 30",
        "c=-1 a=(0,0) x=-7 MinusH",
        fmt_classes(&m, 30)?,
    );
    let report = predict_gonality(&h)?;
    sheet.row("gonality", 31, report.gonality.unwrap_or(-1));
    sheet.row("clifford", 29, report.clifford.unwrap_or(-1));
    sheet.row("unique pencil", false, report.unique_pencil);
    Ok(sheet.rows)
}

/// A degree-20 curve on a quintic with a 7-secant line: linked curve is a
/// line plus a plane quartic, gonality `d - 7` with a unique pencil.
fn secant_curve() -> Result<Vec<WalkthroughCheck>> {
    let mut sheet = Sheet {
        example: "secant",
        rows: Vec::new(),
    };
    let h: HVector = "1,2,3,4,5,3,2".parse()?;
    let inv = h.invariants();
    sheet.row("d", 20, inv.d);
    sheet.row("g", 48, inv.g);
    sheet.row("s", 5, inv.s);
    sheet.row("t", 5, inv.t.unwrap_or(-1));
    sheet.row("e", 4, inv.e);
    let case = h.multisecant_case();
    sheet.row("case", "CaseA", format!("{:?}", case.tag));
    sheet.row("l", 7, case.l.unwrap_or(-1));
    let m = PicardModel::new(&h)?;
    sheet.row("linked h-vector", "1,2,1,1", &m.linked);
    let linked_inv = m.linked.invariants();
    sheet.row("linked degree", 5, linked_inv.d);
    sheet.row("linked genus", 3, linked_inv.g);
    let pieces: Vec<String> = m.components.iter().map(|c| c.lambda.to_string()).collect();
    sheet.row("pieces", "(1) (4)", pieces.join(" "));
    let qs: Vec<String> = m.components.iter().map(|c| c.q.to_string()).collect();
    sheet.row("q_i", "16 16", qs.join(" "));
    sheet.row("phi_12", -1, m.phi[0][1]);
    let w: Vec<String> = m
        .components
        .iter()
        .map(|c| (c.q - c.b).to_string())
        .collect();
    sheet.row("q_i - b_i", "15 15", w.join(" "));
    sheet.row("phi(C,C)", 30, m.phi_cc());
    sheet.row("phi(C,L)", -15, m.phi(&m.c_class, &m.unit(0)));
    sheet.row("C.L", 7, secant_degree(&m, SecantTag::CaseA)?);
    sheet.row("C^2", 74, c_squared(inv.d, inv.g, inv.s)?);
    sheet.row("Delta at k = 13", 22, delta_e(inv.d, inv.g, inv.s, 13));
    sheet.row(
        "classes at k = 13",
        format!("c=-1 a=(1,0) x=-4 {}", PencilClass::LineMinusH(1)),
        fmt_classes(&m, 13)?,
    );
    sheet.row("classes at k = 12", "", fmt_classes(&m, 12)?);
    let report = predict_gonality(&h)?;
    sheet.row("gonality", 13, report.gonality.unwrap_or(-1));
    sheet.row("clifford", 11, report.clifford.unwrap_or(-1));
    sheet.row("unique pencil", true, report.unique_pencil);
    Ok(sheet.rows)
}

pub fn walkthrough() -> Result<Vec<WalkthroughCheck>> {
    let mut rows = generic_curve()?;
    rows.extend(secant_curve()?);
    Ok(rows)
}
