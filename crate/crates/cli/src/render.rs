use std::io::Write;
use std::path::PathBuf;

/// Pads a header row plus data rows into aligned columns.
pub fn align_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |line: &[String], out: &mut String| {
        let mut parts = Vec::with_capacity(line.len());
        for (i, cell) in line.iter().enumerate() {
            parts.push(format!("{:>width$}", cell, width = widths[i]));
        }
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    emit(header, &mut out);
    for row in rows {
        emit(row, &mut out);
    }
    out
}

/// Writes the report to --out if given, otherwise to standard output.
pub fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(content.as_bytes())
                .and_then(|_| handle.flush())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}
