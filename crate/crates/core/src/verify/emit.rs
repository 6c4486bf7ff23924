use std::fmt::Write;

use super::report::Report;

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn to_markdown(report: &Report) -> String {
    let mut out = String::new();
    let g = &report.group;
    let name = g.name.clone().unwrap_or_else(|| format!("group of order {}", g.order));
    let _ = writeln!(out, "# {name}, p = {}\n", report.prime);
    let _ = writeln!(out, "Order {}, degree {}, suite `{}`.\n", g.order, g.degree, report.suite);

    if !report.edges.is_empty() {
        out.push_str("| table | edge | style | hypothesis | status |\n");
        out.push_str("|---|---|---|---|---|\n");
        for e in &report.edges {
            let hyp = e.hypothesis.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                e.table,
                cell(&e.label),
                e.style,
                if hyp.is_empty() { "-".into() } else { hyp },
                e.status
            );
        }
        out.push('\n');
    }
    if !report.homology.is_empty() {
        out.push_str("| collection | size | reduced homology |\n|---|---|---|\n");
        for h in &report.homology {
            let _ = writeln!(out, "| {} | {} | {} |", h.collection, h.size, cell(&h.summary));
        }
        out.push('\n');
    }
    let checks = report
        .homology_agreements
        .iter()
        .chain(&report.equalities)
        .filter(|e| e.applies);
    for e in checks {
        let _ = writeln!(out, "- {}: {} ({})", e.name, if e.holds { "holds" } else { "FAILS" }, e.detail);
    }
    for i in &report.inclusions {
        let _ = writeln!(
            out,
            "- {} in {}: {}",
            i.sub,
            i.sup,
            if i.holds { "holds".to_string() } else { format!("FAILS at {:?}", i.violations) }
        );
    }
    for c in &report.conditions {
        let _ = writeln!(out, "- condition {}: {}", c.condition, if c.holds { "holds" } else { "fails" });
    }
    for c in &report.counterexamples {
        let _ = writeln!(
            out,
            "- {}: {} (observed {})",
            c.id,
            if c.reproduced { "reproduced" } else { "NOT reproduced" },
            c.observed
        );
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "\nSummary: {} certified, {} homology-consistent, {} skipped, {} inconclusive, {} mismatch.",
        s.certified, s.homology_consistent, s.skipped, s.inconclusive, s.mismatch
    );
    out
}
