use farey_index::bcz::{in_farey_triangle, orbit as bcz_orbit};
use farey_index::farey::{totient_summatory, DenominatorWalker};
use farey_index::geometry::{Point2, Rational};
use serde_json::json;

use super::{CmdError, CmdResult};
use crate::args::OrbitArgs;
use crate::output::{Output, Table};

pub fn orbit(args: &OrbitArgs) -> CmdResult {
    let q = args.q;
    let default_start = args.x.is_none() && args.y.is_none();
    let x = args
        .x
        .as_ref()
        .map_or_else(|| Rational::new(1, q), |e| e.0.clone());
    let y = args.y.as_ref().map_or_else(Rational::one, |e| e.0.clone());
    let steps = match args.steps {
        Some(s) => s,
        None => totient_summatory(q)?,
    };
    let steps = usize::try_from(steps).map_err(|_| CmdError::Usage("--steps too large".into()))?;
    let start = Point2::new(x, y);
    if !in_farey_triangle(&start) {
        return Err(CmdError::Usage(format!(
            "start ({}, {}) is not in the Farey triangle",
            start.x, start.y
        )));
    }
    let state = bcz_orbit(&start, steps)?;

    // from (1/Q, 1) the orbit runs through consecutive Farey denominators
    let mut walker = default_start
        .then(|| DenominatorWalker::new(q))
        .transpose()?;
    let mut header = vec!["r", "L_r", "kappa"];
    if walker.is_some() {
        header.push("nu");
    }
    let mut table = Table::new(header);
    let mut passed = true;
    for (r, l) in state.ls.iter().enumerate() {
        let mut row = vec![r.to_string(), l.to_ratio_string()];
        let kappa = r.checked_sub(1).and_then(|i| state.kappas.get(i)).copied();
        row.push(kappa.map_or_else(|| "-".into(), |k| k.to_string()));
        if let Some(w) = walker.as_mut() {
            match kappa {
                Some(k) => {
                    passed &= k == w.index();
                    row.push(w.index().to_string());
                    w.advance();
                }
                None => row.push("-".into()),
            }
        }
        table.push(row);
    }
    let lines = table.rows.iter().map(|r| r.join(" ")).collect();
    let data = json!({
        "Q": q,
        "L": state.ls.iter().map(Rational::to_ratio_string).collect::<Vec<_>>(),
        "kappa": state.kappas,
        "matches_farey_index": default_start.then_some(passed),
    });
    Ok(Output {
        lines,
        table,
        data,
        passed,
    })
}
