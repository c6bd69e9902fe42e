//! Checks every fixture against its known invariants and its document form.

use std::io::Write;

use dehnscope_core::families::{verify, FamilyModel};

use crate::analyze::{analyze_algebra, analyze_document, AnalyzeOptions};
use crate::document::InputDocument;

/// Writes one line per fixture and returns whether all passed.
pub fn run_selftest(fixtures: &[FamilyModel], out: &mut impl Write) -> std::io::Result<bool> {
    let opts = AnalyzeOptions::default();
    let mut ok = true;
    for m in fixtures {
        let mut problems: Vec<String> = match verify(m) {
            Ok(mismatches) => mismatches.iter().map(|x| x.to_string()).collect(),
            Err(e) => vec![format!("pipeline error: {e}")],
        };
        let doc = InputDocument::from_algebra(&m.name, &m.algebra);
        match InputDocument::parse(&doc.to_json()) {
            Ok(back) if back == doc => {
                let direct = analyze_algebra(&m.name, &m.algebra, &opts);
                let via_doc = analyze_document(&back, &opts);
                match (direct, via_doc) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (Ok(_), Ok(_)) => problems.push("document round trip: report differs".into()),
                    (Err(e), _) | (_, Err(e)) => problems.push(format!("analysis error: {e}")),
                }
            }
            Ok(_) => problems.push("document round trip: document differs".into()),
            Err(e) => problems.push(format!("document round trip: {e}")),
        }
        if problems.is_empty() {
            writeln!(out, "PASS {} ({} known invariants)", m.name, m.known.len())?;
        } else {
            ok = false;
            writeln!(out, "FAIL {}: {}", m.name, problems.join("; "))?;
        }
    }
    writeln!(out, "{}", if ok { "selftest: all passed" } else { "selftest: FAILED" })?;
    Ok(ok)
}
