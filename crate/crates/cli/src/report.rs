//! The analysis report and its JSON and text renderings.

use std::fmt::Write as _;

use serde::Serialize;

use dehnscope_core::classify::{DehnVerdict, SymbolicLogValue, SymbolicRatio, TacInvariants};
use dehnscope_core::exactla::{format_rational, HullCertificate, HullVerdict, Rational};
use dehnscope_core::tameness::TamenessReport;
use dehnscope_core::weights::DiagramEntry;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightEntry {
    pub weight: Vec<String>,
    pub multiplicity: usize,
    pub field: String,
    pub principal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HullOut {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TamenessOut {
    pub tame: bool,
    pub strongly_2tame: bool,
    pub two_tame: bool,
    pub strong_witnesses: Vec<[Vec<String>; 2]>,
    pub principal_witnesses: Vec<[Vec<String>; 2]>,
    pub hull_certificate: HullOut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HomologyOut {
    pub h2_zero: usize,
    pub h2_zero_nonarch: usize,
    pub h1_zero: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuleOut {
    pub rule: String,
    pub citation: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DehnOut {
    pub cp: bool,
    pub lower: String,
    pub upper: String,
    pub exact: Option<String>,
    pub upper_rule: String,
    pub lower_rule: Option<String>,
    pub rules_fired: Vec<RuleOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymbolicOut {
    pub rational_part: String,
    /// `[base, coefficient]` pairs of natural-log terms.
    pub log_terms: Vec<(u64, String)>,
    /// Display-only decimal value.
    pub float: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioOut {
    pub numerator: SymbolicOut,
    pub denominator: SymbolicOut,
    pub float: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TacOut {
    pub s_g: String,
    pub q_g: String,
    pub varpi_g: RatioOut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub standard: bool,
    pub acting_rank: usize,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub weights: Vec<WeightEntry>,
    pub principal_weights: Vec<WeightEntry>,
    pub tameness: TamenessOut,
    pub homology: Option<HomologyOut>,
    pub exponential_radical_dim: usize,
    pub cone_dimension: Option<usize>,
    pub hyperbolic: Option<String>,
    pub dehn: Option<DehnOut>,
    pub p0: Option<SymbolicOut>,
    pub tac: Option<TacOut>,
    /// Readings of the definitions that affect verdicts.
    pub interpretations: Vec<String>,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

pub(crate) fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(","))
}

impl WeightEntry {
    pub fn from_entry(e: &DiagramEntry) -> Self {
        Self {
            weight: strs(&e.weight),
            multiplicity: e.multiplicity,
            field: e.field.to_string(),
            principal: e.principal,
        }
    }
}

impl HullOut {
    pub fn from_certificate(c: &HullCertificate) -> Self {
        Self {
            verdict: match c.verdict {
                HullVerdict::Inside => "inside",
                HullVerdict::Outside => "outside",
            },
            coefficients: c.coefficients.as_deref().map(strs),
            separator: c.separator.as_deref().map(strs),
        }
    }
}

impl TamenessOut {
    pub fn from_report(t: &TamenessReport) -> Self {
        let pairs = |ps: &[(Vec<Rational>, Vec<Rational>)]| ps.iter().map(|(a, b)| [strs(a), strs(b)]).collect();
        Self {
            tame: t.tame,
            strongly_2tame: t.strongly_2tame,
            two_tame: t.two_tame,
            strong_witnesses: pairs(&t.strong_witnesses),
            principal_witnesses: pairs(&t.principal_witnesses),
            hull_certificate: HullOut::from_certificate(&t.hull_certificate),
        }
    }
}

impl DehnOut {
    pub fn from_verdict(v: &DehnVerdict) -> Self {
        Self {
            cp: v.compactly_presented,
            lower: v.lower.to_string(),
            upper: v.upper.to_string(),
            exact: v.exact.map(|c| c.to_string()),
            upper_rule: v.upper_rule.to_string(),
            lower_rule: v.lower_rule.map(|r| r.to_string()),
            rules_fired: v
                .rules_fired
                .iter()
                .map(|f| RuleOut {
                    rule: f.rule.to_string(),
                    citation: f.citation.to_string(),
                    witness: f.witness.to_string(),
                })
                .collect(),
        }
    }
}

fn float(x: f64) -> String {
    format!("{x:.6}")
}

impl SymbolicOut {
    pub fn from_value(v: &SymbolicLogValue) -> Self {
        Self {
            rational_part: format_rational(&v.rational_part),
            log_terms: v.log_terms.iter().map(|(b, c)| (*b, format_rational(c))).collect(),
            float: float(v.to_f64()),
        }
    }
}

impl RatioOut {
    pub fn from_ratio(r: &SymbolicRatio) -> Self {
        Self {
            numerator: SymbolicOut::from_value(&r.numerator),
            denominator: SymbolicOut::from_value(&r.denominator),
            float: float(r.to_f64()),
        }
    }
}

impl TacOut {
    pub fn from_invariants(t: &TacInvariants) -> Self {
        Self {
            s_g: t.s_g.to_string(),
            q_g: t.q_g.to_string(),
            varpi_g: RatioOut::from_ratio(&t.varpi_g),
        }
    }
}

fn symbolic_text(s: &SymbolicOut) -> String {
    let mut parts = Vec::new();
    if s.rational_part != "0" || s.log_terms.is_empty() {
        parts.push(s.rational_part.clone());
    }
    for (b, c) in &s.log_terms {
        parts.push(if c == "1" { format!("log({b})") } else { format!("{c}*log({b})") });
    }
    parts.join(" + ")
}

/// Text rendering options.
#[derive(Debug, Clone, Copy, Default)]
pub struct TextStyle {
    pub color: bool,
    pub citations: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self, style: TextStyle) -> String {
        let yn = |b: bool| {
            let word = if b { "yes" } else { "no" };
            if style.color {
                format!("\x1b[{}m{word}\x1b[0m", if b { 32 } else { 31 })
            } else {
                word.to_string()
            }
        };
        let opt = |o: Option<String>| o.unwrap_or_else(|| "n/a".to_string());
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "name: {}", self.name);
        let _ = writeln!(w, "standard: {}", yn(self.standard));
        let _ = writeln!(w, "acting rank: {}", self.acting_rank);
        let _ = writeln!(w, "dimension: {}", self.dimension);
        let _ = writeln!(w, "basis: {}", self.basis.join(" "));
        let _ = writeln!(w, "weights:");
        for e in &self.weights {
            let tag = if e.principal { " principal" } else { "" };
            let _ = writeln!(w, "  {} mult {} {}{tag}", tuple(&e.weight), e.multiplicity, e.field);
        }
        let principal: Vec<String> = self.principal_weights.iter().map(|e| tuple(&e.weight)).collect();
        let _ = writeln!(w, "principal weights: {}", principal.join(" "));
        let t = &self.tameness;
        let _ = writeln!(
            w,
            "tameness: tame={} strongly_2tame={} two_tame={}",
            yn(t.tame),
            yn(t.strongly_2tame),
            yn(t.two_tame)
        );
        let hull = &t.hull_certificate;
        match (&hull.coefficients, &hull.separator) {
            (Some(c), _) => {
                let _ = writeln!(w, "  hull: 0 inside, coefficients {}", tuple(c));
            }
            (_, Some(s)) => {
                let _ = writeln!(w, "  hull: 0 outside, separator {}", tuple(s));
            }
            _ => {}
        }
        for [a, b] in &t.strong_witnesses {
            let _ = writeln!(w, "  segment through 0 (all weights): {} {}", tuple(a), tuple(b));
        }
        for [a, b] in &t.principal_witnesses {
            let _ = writeln!(w, "  segment through 0 (principal): {} {}", tuple(a), tuple(b));
        }
        match &self.homology {
            Some(h) => {
                let _ = writeln!(
                    w,
                    "homology: h2_zero={} h2_zero_nonarch={} h1_zero={}",
                    h.h2_zero, h.h2_zero_nonarch, h.h1_zero
                );
            }
            None => {
                let _ = writeln!(w, "homology: skipped");
            }
        }
        let _ = writeln!(w, "exponential radical dim: {}", self.exponential_radical_dim);
        let _ = writeln!(w, "cone dimension: {}", opt(self.cone_dimension.map(|d| d.to_string())));
        let _ = writeln!(w, "hyperbolic: {}", opt(self.hyperbolic.clone()));
        match &self.dehn {
            Some(d) => {
                let _ = writeln!(
                    w,
                    "dehn: cp={} lower={} upper={} exact={}",
                    yn(d.cp),
                    d.lower,
                    d.upper,
                    opt(d.exact.clone())
                );
                let lower_rule = d.lower_rule.as_deref().unwrap_or("default");
                let _ = writeln!(w, "  bounds from: upper {} lower {lower_rule}", d.upper_rule);
                for r in &d.rules_fired {
                    let _ = writeln!(w, "  {}: {}; witness: {}", r.rule, r.citation, r.witness);
                    if style.citations {
                        if let Some(id) = dehnscope_core::classify::RuleId::ALL.iter().find(|id| id.to_string() == r.rule) {
                            let _ = writeln!(w, "      {}", id.statement());
                        }
                    }
                }
            }
            None => {
                let _ = writeln!(w, "dehn: n/a");
            }
        }
        let _ = writeln!(w, "p0: {}", opt(self.p0.as_ref().map(|p| format!("{} ~ {}", symbolic_text(p), p.float))));
        match &self.tac {
            Some(t) => {
                let _ = writeln!(
                    w,
                    "tac: s_G={} q_G={} varpi_G=({}) / ({}) ~ {}",
                    t.s_g,
                    t.q_g,
                    symbolic_text(&t.varpi_g.numerator),
                    symbolic_text(&t.varpi_g.denominator),
                    t.varpi_g.float
                );
            }
            None => {
                let _ = writeln!(w, "tac: n/a");
            }
        }
        for i in &self.interpretations {
            let _ = writeln!(w, "interpretation: {i}");
        }
        for n in &self.notes {
            let _ = writeln!(w, "note: {n}");
        }
        for x in &self.warnings {
            let _ = writeln!(w, "warning: {x}");
        }
        out
    }
}
