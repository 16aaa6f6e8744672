use farey_index::bcz::{autocorrelation_constant, b_alpha};
use farey_index::stats::{
    autocorrelation_record, format_real, lower_upper_records, moment_record_with_constant,
    partial_sum_record, second_moment_record, StatRecord, Workers,
};
use serde_json::json;

use super::{CmdError, CmdResult};
use crate::args::{ConvergeArgs, Stat};
use crate::output::{Output, Table};

fn row(r: &StatRecord) -> Vec<String> {
    vec![
        r.order.to_string(),
        r.kind.to_string(),
        r.parameter.to_string(),
        r.exact.to_string(),
        r.prediction.to_string(),
        r.ratio().map(format_real).unwrap_or_else(|| "-".into()),
        r.deviation().map(format_real).unwrap_or_else(|| "-".into()),
        r.error_form.to_string(),
    ]
}

pub fn converge(args: &ConvergeArgs, workers: Workers) -> CmdResult {
    if !args.q_list.windows(2).all(|w| w[0] < w[1]) {
        return Err(CmdError::Usage(
            "--q-list must be strictly ascending".into(),
        ));
    }
    if args.stat == Stat::SecondMoment && args.q_list[0] < 2 {
        return Err(CmdError::Usage("second-moment needs Q >= 2".into()));
    }

    // constants are evaluated once and shared by every order
    let a_h = match args.stat {
        Stat::SH => args
            .h
            .iter()
            .map(|&h| Ok((h, autocorrelation_constant(h)?.value)))
            .collect::<Result<Vec<_>, CmdError>>()?,
        _ => Vec::new(),
    };
    let b = match args.stat {
        Stat::Moment => args
            .alpha
            .iter()
            .map(|a| {
                Ok(if a.0 == 1.0 {
                    (a.0, 1.5)
                } else {
                    (a.0, b_alpha(a.0, args.tol)?.value())
                })
            })
            .collect::<Result<Vec<_>, CmdError>>()?,
        _ => Vec::new(),
    };

    let mut records = Vec::new();
    for &q in &args.q_list {
        eprintln!("converge: Q = {q}");
        match args.stat {
            Stat::SH => {
                for (h, a) in &a_h {
                    for t in &args.t {
                        records.push(autocorrelation_record(q, *h, t.0, a, workers)?);
                    }
                }
            }
            Stat::Moment => {
                for &(alpha, b) in &b {
                    records.push(moment_record_with_constant(q, alpha, b, workers)?);
                }
            }
            Stat::Lu => {
                for &k in &args.k {
                    for t in &args.t {
                        records.extend(lower_upper_records(q, k, t.0, workers)?);
                    }
                }
            }
            Stat::Partial => {
                for t in &args.t {
                    records.push(partial_sum_record(q, t.0, workers)?);
                }
            }
            Stat::SecondMoment => records.push(second_moment_record(q, workers)?),
        }
    }

    let mut table = Table::new([
        "Q",
        "stat",
        "param",
        "exact",
        "prediction",
        "ratio",
        "abs_dev",
        "error_form",
    ]);
    for r in &records {
        table.push(row(r));
    }
    let lines = std::iter::once(table.header.join(" "))
        .chain(table.rows.iter().map(|r| r.join(" ")))
        .collect();
    let data = json!({
        "rows": records.iter().map(|r| json!({
            "Q": r.order,
            "stat": r.kind.to_string(),
            "param": r.parameter.to_string(),
            "exact": r.exact.to_string(),
            "prediction": r.prediction.to_string(),
            "ratio": r.ratio(),
            "abs_dev": r.deviation(),
            "error_form": r.error_form,
        })).collect::<Vec<_>>(),
    });
    Ok(Output {
        lines,
        table,
        data,
        passed: true,
    })
}
