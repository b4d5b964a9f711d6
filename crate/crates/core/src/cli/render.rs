//! Text, CSV, JSON and LaTeX renderings of jet tables.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::catalog::VarietyRecord;
use crate::sections::PrunedRow;

pub const CSV_HEADER: &str = "k,s_lo,s_hi,h0,feasible_min,feasible_max,exact";

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn csv(rows: &[PrunedRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.k,
            r.raw.s_lo,
            r.raw.s_hi,
            opt(r.h0),
            opt(r.feasible_min()),
            opt(r.feasible_max),
            r.exact
        );
    }
    out
}

pub fn row_json(r: &PrunedRow) -> Value {
    json!({
        "k": r.k,
        "s_lo": r.raw.s_lo,
        "s_hi": r.raw.s_hi,
        "h0": r.h0,
        "feasible": r.feasible(),
        "exact": r.exact,
    })
}

pub fn json(rec: &VarietyRecord, rows: &[PrunedRow]) -> String {
    let value = json!({
        "id": rec.id,
        "eps": rec.eps.as_ref().map(|d| d.value.to_string()),
        "rows": rows.iter().map(row_json).collect::<Vec<_>>(),
    });
    let mut out = serde_json::to_string_pretty(&value).expect("json renders");
    out.push('\n');
    out
}

pub fn header_line(rec: &VarietyRecord) -> String {
    let eps = rec.eps.as_ref().map_or_else(|| "unknown".to_string(), |d| format!("{} ({})", d.value, d.point_class));
    format!("{}: n={} class={} degree={} eps={}", rec.id, rec.n, rec.class, rec.degree, eps)
}

fn feasible_set(r: &PrunedRow) -> String {
    let values: Vec<String> = r.feasible().iter().rev().map(ToString::to_string).collect();
    format!("{{{}}}", values.join(","))
}

fn legend(rows: &[PrunedRow]) -> &'static str {
    if rows.iter().any(|r| !r.exact) {
        "* h0 taken from Riemann-Roch outside its exactness window; pruning is asymptotic\n"
    } else {
        ""
    }
}

fn marker(r: &PrunedRow) -> &'static str {
    if r.exact {
        ""
    } else {
        "*"
    }
}

/// One line per `k` with the raw interval and, when pruned, `h^0` and the
/// surviving values.
pub fn plain_rows(rec: &VarietyRecord, rows: &[PrunedRow]) -> String {
    let pruned = rows.iter().any(|r| r.h0.is_some());
    let mut lines: Vec<Vec<String>> = Vec::new();
    if pruned {
        lines.push(["k", "s_lo", "s_hi", "h0", "feasible"].map(String::from).to_vec());
    } else {
        lines.push(["k", "s_lo", "s_hi"].map(String::from).to_vec());
    }
    for r in rows {
        let mut line = vec![format!("{}{}", r.k, marker(r)), r.raw.s_lo.to_string(), r.raw.s_hi.to_string()];
        if pruned {
            line.push(opt(r.h0));
            line.push(feasible_set(r));
        }
        lines.push(line);
    }
    let mut out = header_line(rec);
    out.push('\n');
    out.push_str(&align(&lines, 2));
    out.push_str(legend(rows));
    out
}

fn align(lines: &[Vec<String>], gap: usize) -> String {
    let cols = lines.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| lines.iter().filter_map(|l| l.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for line in lines {
        let cells: Vec<String> = line
            .iter()
            .enumerate()
            .map(|(c, s)| if c == 0 { format!("{s:<w$}", w = widths[c]) } else { format!("{s:>w$}", w = widths[c]) })
            .collect();
        out.push_str(cells.join(&" ".repeat(gap)).trim_end());
        out.push('\n');
    }
    out
}

/// Cells of the table laid out with one column per `k` and rows of
/// candidate values, highest first. Row `i` from the bottom holds
/// `s_lo + i` when that value is feasible, otherwise it is blank.
pub fn grid(rows: &[PrunedRow]) -> Vec<Vec<Option<i64>>> {
    let height = rows.iter().filter_map(|r| r.feasible_max.map(|m| (m - r.raw.s_lo + 1) as usize)).max().unwrap_or(0);
    (0..height)
        .rev()
        .map(|i| {
            rows.iter()
                .map(|r| {
                    let s = r.raw.s_lo + i as i64;
                    r.feasible_max.filter(|&m| s <= m).map(|_| s)
                })
                .collect()
        })
        .collect()
}

pub fn plain_table(rec: &VarietyRecord, rows: &[PrunedRow]) -> String {
    let mut lines = vec![std::iter::once("k".to_string())
        .chain(std::iter::once("|".to_string()))
        .chain(rows.iter().map(|r| format!("{}{}", r.k, marker(r))))
        .collect::<Vec<_>>()];
    for (i, cells) in grid(rows).into_iter().enumerate() {
        let label = if i == 0 { "s(kL,x)" } else { "" };
        lines.push([label.to_string(), "|".to_string()].into_iter().chain(cells.into_iter().map(opt)).collect());
    }
    let mut out = header_line(rec);
    out.push('\n');
    out.push_str(&align(&lines, 1));
    out.push_str(legend(rows));
    out
}

pub fn latex_table(rows: &[PrunedRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\begin{{tabular}}{{c|{}}}\\hline", "r".repeat(rows.len()));
    let ks: Vec<String> = rows.iter().map(|r| if r.exact { r.k.to_string() } else { format!("{}$^*$", r.k) }).collect();
    let _ = writeln!(out, "$k$ & {} \\\\ \\hline", ks.join(" & "));
    let grid = grid(rows);
    let last = grid.len().saturating_sub(1);
    for (i, cells) in grid.into_iter().enumerate() {
        let label = if i == 0 { "$s(kL,x)$" } else { "" };
        let cells: Vec<String> = cells.into_iter().map(opt).collect();
        let end = if i == last { " \\\\ \\hline" } else { " \\\\" };
        let _ = writeln!(out, "{label} & {}{end}", cells.join(" & "));
    }
    out.push_str("\\end{tabular}\n");
    out
}
