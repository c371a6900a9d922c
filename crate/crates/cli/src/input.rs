use std::io::Read;
use std::path::Path;

use exg_core::Sample;

use crate::CliError;

/// Read a sample: one value per line, blank lines and `#` comments skipped,
/// and an optional header on the first data line.
pub fn read_sample(path: &Path) -> Result<Sample, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    parse_sample(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_sample(text: &str) -> Result<Sample, CliError> {
    let mut values = Vec::new();
    let mut seen_data_line = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let field = line.strip_suffix(',').unwrap_or(line).trim();
        let first = !seen_data_line;
        seen_data_line = true;
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            Ok(v) => {
                return Err(CliError::Input(format!(
                    "line {}: non-finite value {v}",
                    i + 1
                )))
            }
            Err(_) if first && looks_like_header(field) => {}
            Err(_) => {
                return Err(CliError::Input(format!(
                    "line {}: not a number: {field:?}",
                    i + 1
                )))
            }
        }
    }
    if values.is_empty() {
        return Err(CliError::Input("no data values".into()));
    }
    Sample::new(values).map_err(|e| CliError::Input(e.to_string()))
}

fn looks_like_header(field: &str) -> bool {
    let name = field.trim_matches('"');
    !name.contains(',')
        && name
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
}
