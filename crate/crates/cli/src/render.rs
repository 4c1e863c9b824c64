//! Text rendering of JSON reports as a two-column table.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Inline form for scalars, lists of scalars and lists of such lists.
fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    let items = v.as_array()?;
    let parts = items
        .iter()
        .map(|x| {
            scalar(x).or_else(|| {
                let inner = x.as_array()?;
                let cells = inner.iter().map(scalar).collect::<Option<Vec<_>>>()?;
                Some(format!("[{}]", cells.join(", ")))
            })
        })
        .collect::<Option<Vec<_>>>()?;
    Some(format!("[{}]", parts.join(", ")))
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = inline(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, rows);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, rows);
            }
        }
        _ => unreachable!("scalars render inline"),
    }
}

/// Renders `report.result` under a `command` heading.
pub fn table(report: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", &report["result"], &mut rows);
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = format!("{}\n", report["command"].as_str().unwrap_or("report"));
    for (k, v) in rows {
        out.push_str(&format!("  {k:<width$}  {v}\n"));
    }
    out
}
