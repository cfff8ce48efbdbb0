//! Indented plain-text rendering of the JSON documents for `--pretty`.

use serde_json::Value;

const WIDTH: usize = 96;

pub fn render(doc: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, doc, 0);
    out
}

/// One-line form for scalars and small arrays of them.
fn inline(v: &Value) -> Option<String> {
    let s = match v {
        Value::Null => "-".to_string(),
        Value::Bool(b) => if *b { "yes" } else { "no" }.to_string(),
        Value::Number(x) => x.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts = items.iter().map(inline).collect::<Option<Vec<_>>>()?;
            format!("[{}]", parts.join(", "))
        }
        Value::Object(_) => return None,
    };
    (s.len() <= WIDTH).then_some(s)
}

/// Verdict entries print as `name: status (detail)`.
fn verdict_line(v: &Value) -> Option<String> {
    let name = v.get("name")?.as_str()?;
    let status = v.get("status")?.as_str()?;
    let note = v.get("detail").or_else(|| v.get("reason")).and_then(Value::as_str);
    Some(match note {
        Some(note) => format!("{name}: {status} ({note})"),
        None => format!("{name}: {status}"),
    })
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(fields) => {
            for (k, x) in fields {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_value(out, x, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                if let Some(line) = verdict_line(x).or_else(|| inline(x)) {
                    out.push_str(&format!("{pad}{line}\n"));
                } else {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    write_value(out, x, indent + 2);
                }
            }
        }
        scalar => out.push_str(&format!("{pad}{}\n", inline(scalar).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_rendering() {
        let doc = json!({
            "c": [[1, 2], [3, 4]],
            "verdicts": [{"name": "a", "status": "pass"}, {"name": "b", "status": "skipped", "reason": "rigid"}],
            "x": {"y": null}
        });
        assert_eq!(
            render(&doc),
            "c: [[1, 2], [3, 4]]\nverdicts:\n  a: pass\n  b: skipped (rigid)\nx:\n  y: -\n"
        );
    }
}
