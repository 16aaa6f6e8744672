use farey_index::bcz::intersection_area_table;
use farey_index::geometry::Rational;
use serde_json::json;

use super::CmdResult;
use crate::args::TablesArgs;
use crate::output::{Output, Table};
use crate::published;

/// How a tail row or column continues past the block, from its first entry
/// beyond it: the full starred area, nothing, or neither.
fn tail_cell(entry: &Rational, star: &Rational, family: &str) -> String {
    if entry.is_zero() {
        "0/1".to_string()
    } else if entry == star {
        family.to_string()
    } else {
        "irregular".to_string()
    }
}

pub fn tables(args: &TablesArgs) -> CmdResult {
    let (h, m) = (args.h, args.size);
    eprintln!("tables: h = {h}, M = {m}");
    let t = intersection_area_table(h, m + 1)?;
    let edge = m as usize;
    // area(T_{M+1}*) = area(T^h T_{M+1}*)
    let star = Rational::new(2, (m + 1) * (m + 2));

    let mut header = vec!["m".to_string()];
    header.extend((1..=m).map(|n| n.to_string()));
    header.push("n>M".into());
    let mut table = Table::new(header);
    let mut rows_json = Vec::new();
    for (i, entries) in t[..edge].iter().enumerate() {
        let mut row = vec![(i + 1).to_string()];
        row.extend(entries[..edge].iter().map(Rational::to_ratio_string));
        row.push(tail_cell(&entries[edge], &star, "2/(n(n+1))"));
        rows_json.push(row[1..].to_vec());
        table.push(row);
    }
    let mut last = vec!["m>M".to_string()];
    last.extend(
        t[edge][..edge]
            .iter()
            .map(|e| tail_cell(e, &star, "2/(m(m+1))")),
    );
    last.push(if t[edge][edge].is_zero() {
        "0/1".into()
    } else {
        "irregular".into()
    });
    rows_json.push(last[1..].to_vec());
    table.push(last);

    let mut mismatches = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if let Some(expected) = published::entry(h, i, j) {
                let got = &t[i as usize - 1][j as usize - 1];
                if *got != expected {
                    mismatches.push(format!("({i}, {j}): computed {got}, published {expected}"));
                }
            }
        }
    }
    let symmetric = (0..=edge).all(|i| (0..i).all(|j| t[i][j] == t[j][i]));
    if !symmetric {
        mismatches.push("table is not symmetric".into());
    }
    for line in &mismatches {
        eprintln!("tables: mismatch {line}");
    }
    let passed = mismatches.is_empty();
    let lines = table.rows.iter().map(|r| r.join(" ")).collect::<Vec<_>>();
    let data = json!({
        "h": h,
        "M": m,
        "columns": table.header[1..].to_vec(),
        "rows": rows_json,
        "symmetric": symmetric,
        "mismatches": mismatches,
    });
    Ok(Output {
        lines,
        table,
        data,
        passed,
    })
}
