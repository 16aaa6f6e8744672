use std::f64::consts::PI;

use farey_index::bcz::{farey_triangle, region_polygon};
use farey_index::farey::totient_summatory;
use farey_index::geometry::ConvexPolygon;
use farey_index::stats::{format_real, visible_points_count};
use serde_json::json;

use super::CmdResult;
use crate::args::VisibleArgs;
use crate::output::{Output, Table};

pub fn visible(args: &VisibleArgs) -> CmdResult {
    let (name, region) = match (args.k, args.square) {
        (Some(k), _) => (format!("T_{k}"), region_polygon(k)),
        (None, true) => ("unit_square".to_string(), ConvexPolygon::unit_square()),
        (None, false) => ("farey_triangle".to_string(), farey_triangle()),
    };
    let q = args.q;
    let count = visible_points_count(&region, q);
    let area = region.area();
    let prediction = 6.0 * area.to_f64() * (q as f64).powi(2) / (PI * PI);
    let ratio = count as f64 / prediction;

    let mut lines = vec![
        format!("region = {name}, area = {area}, Q = {q}"),
        format!("count = {count}"),
        format!("prediction = {}", format_real(prediction)),
        format!("ratio = {}", format_real(ratio)),
    ];
    // the triangle holds exactly one visible point per Farey fraction
    let mut passed = true;
    let mut farey = None;
    if args.k.is_none() && !args.square {
        let n = totient_summatory(q)?;
        passed = n == count;
        farey = Some(n);
        lines.push(format!(
            "N(Q) = {n} ({})",
            if passed { "matches" } else { "MISMATCH" }
        ));
    }
    let mut table = Table::new(["region", "Q", "area", "count", "prediction", "ratio"]);
    table.push(vec![
        name.clone(),
        q.to_string(),
        area.to_ratio_string(),
        count.to_string(),
        format_real(prediction),
        format_real(ratio),
    ]);
    let data = json!({
        "region": name,
        "Q": q,
        "area": area.to_ratio_string(),
        "count": count,
        "prediction": prediction,
        "ratio": ratio,
        "farey_count": farey,
    });
    Ok(Output {
        lines,
        table,
        data,
        passed,
    })
}
