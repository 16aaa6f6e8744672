use farey_index::bcz::{
    autocorrelation_constant, b_alpha, lower_frequency, upper_frequency, upper_lower_triangles,
};
use farey_index::geometry::{ratio, Rational};
use farey_index::stats::format_real;
use serde_json::json;

use super::{CmdError, CmdResult};
use crate::args::ConstantsArgs;
use crate::output::{Output, Table};

pub fn constants(args: &ConstantsArgs) -> CmdResult {
    if args.h.is_empty() || args.alpha.is_empty() {
        return Err(CmdError::Usage(
            "--h and --alpha need at least one value".into(),
        ));
    }
    let mut lines = Vec::new();
    let mut table = Table::new(["constant", "parameter", "value", "approx"]);
    let mut a_json = Vec::new();
    for &h in &args.h {
        eprintln!("constants: A({h})");
        let a = autocorrelation_constant(h)?;
        let v = a.value.to_ratio_string();
        lines.push(format!(
            "A({h}) = {} (~{})",
            a.value,
            format_real(a.value.to_f64())
        ));
        table.push(vec![
            "A".into(),
            h.to_string(),
            v.clone(),
            format_real(a.value.to_f64()),
        ]);
        a_json.push(json!({
            "h": h,
            "value": v,
            "approx": a.value.to_f64(),
            "cutoff": a.cutoff,
            "block_sum": a.block_sum.to_ratio_string(),
            "full_tail_rows": a.full_tail_rows,
            "full_tail_columns": a.full_tail_columns,
        }));
    }

    let mut b_json = Vec::new();
    for alpha in &args.alpha {
        let b = b_alpha(alpha.0, args.tol)?;
        let exact = (alpha.0 == 1.0).then(|| ratio(3, 2));
        match &exact {
            Some(e) => lines.push(format!("B({}) = {e} (exact)", alpha.0)),
            None => lines.push(format!(
                "B({}) = {} (terms {}, tail estimate {}, tail bound {})",
                alpha.0,
                format_real(b.value()),
                b.cutoff,
                format_real(b.tail_estimate),
                format_real(b.tail_bound)
            )),
        }
        let value = exact
            .as_ref()
            .map(Rational::to_ratio_string)
            .unwrap_or_else(|| format_real(b.value()));
        table.push(vec![
            "B".into(),
            alpha.0.to_string(),
            value.clone(),
            format_real(b.value()),
        ]);
        b_json.push(json!({
            "alpha": alpha.0,
            "value": value,
            "approx": b.value(),
            "terms": b.cutoff,
            "partial_sum": b.partial_sum,
            "tail_estimate": b.tail_estimate,
            "tail_bound": b.tail_bound,
        }));
    }

    let mut passed = true;
    let mut f_json = Vec::new();
    for k in 1..=args.k {
        let (upper, lower) = upper_lower_triangles(k);
        let two = ratio(2, 1);
        let (l, u) = (lower_frequency(k), upper_frequency(k));
        let (l_geo, u_geo) = (&two * lower.area(), &two * upper.area());
        let ok = l == l_geo && u == u_geo;
        passed &= ok;
        lines.push(format!(
            "l_{k} = {l}, u_{k} = {u} ({})",
            if ok {
                "matches 2·area of the triangles"
            } else {
                "MISMATCH with triangle areas"
            }
        ));
        table.push(vec![
            "l".into(),
            k.to_string(),
            l.to_ratio_string(),
            format_real(l.to_f64()),
        ]);
        table.push(vec![
            "u".into(),
            k.to_string(),
            u.to_ratio_string(),
            format_real(u.to_f64()),
        ]);
        f_json.push(json!({
            "k": k,
            "l": l.to_ratio_string(),
            "u": u.to_ratio_string(),
            "l_from_area": l_geo.to_ratio_string(),
            "u_from_area": u_geo.to_ratio_string(),
            "matches": ok,
        }));
    }
    let data = json!({ "A": a_json, "B": b_json, "frequencies": f_json, "passed": passed });
    Ok(Output {
        lines,
        table,
        data,
        passed,
    })
}
