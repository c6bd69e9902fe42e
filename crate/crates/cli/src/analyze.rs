//! Runs every analysis on one algebra and assembles the report.

use dehnscope_core::classify::{
    cone_dimension, dehn_from_inputs, hyperbolicity, p0, tac_invariants, CompactionData, DehnInputs, HyperbolicKind,
    Hyperbolicity,
};
use dehnscope_core::exactla::{int, is_zero_vector};
use dehnscope_core::homology::homology_dim;
use dehnscope_core::lie::{FieldKind, GradedLieAlgebra};
use dehnscope_core::tameness::tameness_report;
use dehnscope_core::weights::{exponential_radical, zero_principal_weight, WeightDiagram};

use crate::document::InputDocument;
use crate::error::CliError;
use crate::report::{DehnOut, HomologyOut, Report, SymbolicOut, TacOut, TamenessOut, WeightEntry};

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub homology: bool,
    /// Worker threads for the independent homology components.
    pub jobs: usize,
    /// Volume factor of the totally discontinuous part used for `p0`.
    pub delta_td: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            homology: true,
            jobs: 1,
            delta_td: 1,
        }
    }
}

pub fn analyze_document(doc: &InputDocument, opts: &AnalyzeOptions) -> Result<Report, CliError> {
    let g = doc.to_algebra()?;
    analyze_algebra(&doc.name, &g, opts)
}

/// `[H2(u)_0, H2(u_nonarch)_0, H1(u)_0]`.
fn homology_triple(g: &GradedLieAlgebra, jobs: usize) -> [usize; 3] {
    let zero = vec![int(0); g.acting_rank()];
    let nonarch = g.field_factor(FieldKind::NonArchimedean);
    let tasks: [(&GradedLieAlgebra, usize); 3] = [(g, 2), (&nonarch, 2), (g, 1)];
    if jobs <= 1 {
        return tasks.map(|(a, k)| homology_dim(a, k, &zero));
    }
    std::thread::scope(|s| {
        let zero = &zero;
        let handles = tasks.map(|(a, k)| s.spawn(move || homology_dim(a, k, zero)));
        handles.map(|h| h.join().expect("homology worker"))
    })
}

pub fn analyze_algebra(name: &str, g: &GradedLieAlgebra, opts: &AnalyzeOptions) -> Result<Report, CliError> {
    g.ensure_valid()?;
    let diagram = WeightDiagram::from_algebra(g)?;
    let tameness = tameness_report(&diagram);
    let radical = exponential_radical(g)?;
    let nonstandard = zero_principal_weight(g)?;
    let mut notes = Vec::new();
    let mut warnings = Vec::new();
    let mut interpretations = Vec::new();

    if tameness
        .strong_witnesses
        .iter()
        .any(|(a, b)| a == b && is_zero_vector(a))
    {
        interpretations.push(
            "pairs of weights are unordered and may repeat a weight, so the zero weight alone defeats strong 2-tameness"
                .to_string(),
        );
    }

    let homology = opts.homology.then(|| {
        let [h2_zero, h2_zero_nonarch, h1_zero] = homology_triple(g, opts.jobs);
        HomologyOut {
            h2_zero,
            h2_zero_nonarch,
            h1_zero,
        }
    });

    let mut dehn = None;
    let mut hyperbolic = None;
    let mut cone = None;
    let mut p0_out = None;
    let mut tac = None;
    if let Some(label) = &nonstandard {
        notes.push(format!(
            "not standard solvable: the principal weight of {label} is zero, so no Dehn, cone or hyperbolicity verdict is given"
        ));
    } else {
        if opts.homology {
            let inputs = DehnInputs::compute(g)?;
            let verdict = dehn_from_inputs(g, &inputs)?;
            notes.extend(verdict.notes.iter().cloned());
            warnings.extend(verdict.warnings.iter().cloned());
            dehn = Some(DehnOut::from_verdict(&verdict));
        } else {
            notes.push("homology skipped, so the Dehn verdict is not computed".to_string());
        }
        let h = hyperbolicity(g)?;
        hyperbolic = Some(h.to_string());
        if g.basis().iter().all(|e| e.field.is_archimedean()) {
            cone = Some(cone_dimension(g)?);
        } else {
            notes.push("cone dimension is computed only for algebras over the reals".to_string());
        }
        if let Hyperbolicity::Hyperbolic(kind) = h {
            let data = CompactionData::from_algebra(g, opts.delta_td)?;
            p0_out = Some(SymbolicOut::from_value(&p0(&data)?));
            if opts.delta_td != 1 {
                notes.push(format!("p0 uses the supplied volume factor {}", opts.delta_td));
            }
            if kind == HyperbolicKind::Mixed {
                match tac_invariants(g, &[int(1)]) {
                    Ok(t) => tac = Some(TacOut::from_invariants(&t)),
                    Err(e) => notes.push(format!("TAC invariants unavailable: {e}")),
                }
            }
        }
    }

    Ok(Report {
        name: name.to_string(),
        standard: nonstandard.is_none(),
        acting_rank: g.acting_rank(),
        dimension: g.dim(),
        basis: g.basis().iter().map(|e| e.label.clone()).collect(),
        weights: diagram.entries().iter().map(WeightEntry::from_entry).collect(),
        principal_weights: diagram.principal().map(WeightEntry::from_entry).collect(),
        tameness: TamenessOut::from_report(&tameness),
        homology,
        exponential_radical_dim: radical.dim(),
        cone_dimension: cone,
        hyperbolic,
        dehn,
        p0: p0_out,
        tac,
        interpretations,
        notes,
        warnings,
    })
}
