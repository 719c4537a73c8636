use std::fmt;

use crate::canonical::{canonical_of, class_of_family, FamilyTag};
use crate::error::{Error, Result};
use crate::extraction::sieve::{backward_sieve, forward_sieve, separated_sieve, SieveStep};
use crate::structure::{classify, is_backward_monotone, is_forward_monotone, is_separated, ElementClass};
use crate::system::{Label, Relabelling, RotationSystem};

/// Sizes reached after each stage of the pipeline.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StageLog {
    pub input: usize,
    pub separated: usize,
    pub forward: usize,
    pub backward: usize,
    /// Members of the selected pigeonhole cell.
    pub cell: usize,
    pub target: usize,
}

impl fmt::Display for StageLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input {} -> separated {} -> forward {} -> backward {} -> cell {} (target {})",
            self.input, self.separated, self.forward, self.backward, self.cell, self.target
        )
    }
}

/// Checkable evidence that `subset` induces a canonical system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractionCertificate {
    pub subset: Vec<Label>,
    pub tag: FamilyTag,
    /// Order-preserving bijection `subset -> {1, ..., m}`.
    pub relabel: Relabelling,
    pub stage_log: StageLog,
}

/// Every intermediate system of a pipeline run.
#[derive(Clone, Debug)]
pub struct PipelineTrace {
    pub separated: RotationSystem,
    pub forward: RotationSystem,
    pub backward: RotationSystem,
    pub steps: Vec<SieveStep>,
}

/// Runs the three sieves in sequence.
pub fn run_sieves(pi: &RotationSystem) -> PipelineTrace {
    let sep = separated_sieve(pi);
    let fwd = forward_sieve(&sep.system).expect("arc sieve output is separated");
    let bwd = backward_sieve(&fwd.system).expect("separation is hereditary");
    let backward = bwd.system;
    assert!(
        is_separated(&backward) && is_forward_monotone(&backward) && is_backward_monotone(&backward),
        "sieved system lost separation or monotonicity"
    );
    let mut steps = sep.steps;
    steps.extend(fwd.steps);
    steps.extend(bwd.steps);
    PipelineTrace {
        separated: sep.system,
        forward: fwd.system,
        backward,
        steps,
    }
}

fn compatible(class: &ElementClass, tag: FamilyTag) -> bool {
    let cell = class_of_family(tag);
    class.forward.contains(cell.forward) && class.backward.contains(cell.backward)
}

/// Pigeonhole over the four cells of a separated, fully monotone system.
/// Elements with wildcard blocks count towards every compatible cell; the
/// largest cell wins, ties going to the earlier tag. Returns the tag and the
/// cell's members in ascending order.
pub fn largest_cell(pi: &RotationSystem) -> (FamilyTag, Vec<Label>) {
    let classes = classify(pi);
    let mut best: Option<(FamilyTag, Vec<Label>)> = None;
    for tag in FamilyTag::ALL {
        let members: Vec<Label> = classes
            .iter()
            .filter(|(_, c)| compatible(c, tag))
            .map(|(l, _)| *l)
            .collect();
        if best.as_ref().is_none_or(|(_, b)| members.len() > b.len()) {
            best = Some((tag, members));
        }
    }
    let (tag, members) = best.expect("four cells");
    assert!(
        4 * members.len() >= pi.len(),
        "pigeonhole violated: largest cell has {} of {} elements",
        members.len(),
        pi.len()
    );
    (tag, members)
}

/// Extracts a subsystem of size `m` equal, after order-preserving relabelling,
/// to one of the four canonical systems.
///
/// Succeeds whenever `|pi| >= n0(m)`; below that the sieves run greedily and
/// [`Error::NotFound`] reports how far each stage got.
pub fn find_unavoidable(pi: &RotationSystem, m: usize) -> Result<ExtractionCertificate> {
    if m == 0 {
        return Err(Error::SizeTooSmall { size: 0, min: 1 });
    }
    let trace = run_sieves(pi);
    let (tag, members) = largest_cell(&trace.backward);
    let stage_log = StageLog {
        input: pi.len(),
        separated: trace.separated.len(),
        forward: trace.forward.len(),
        backward: trace.backward.len(),
        cell: members.len(),
        target: m,
    };
    let subset = if members.len() >= m {
        members[..m].to_vec()
    } else if m <= 3 && trace.backward.len() >= m {
        // All four families coincide up to size 3, so any m elements do.
        trace.backward.labels()[..m].to_vec()
    } else {
        return Err(Error::NotFound(stage_log));
    };
    let cert = ExtractionCertificate {
        relabel: Relabelling::order_preserving(&subset),
        subset,
        tag,
        stage_log,
    };
    debug_assert!(verify_certificate(pi, &cert));
    Ok(cert)
}

/// Independent check of a certificate: induce, relabel order-preservingly and
/// compare with the canonical system of the claimed family.
pub fn verify_certificate(pi: &RotationSystem, cert: &ExtractionCertificate) -> bool {
    if cert.subset.is_empty() || !cert.subset.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }
    if cert.relabel != Relabelling::order_preserving(&cert.subset) {
        return false;
    }
    let Ok(induced) = pi.induce(&cert.subset) else {
        return false;
    };
    let Ok(relabelled) = induced.relabel(&cert.relabel) else {
        return false;
    };
    canonical_of(cert.tag, cert.subset.len()).is_ok_and(|canon| canon == relabelled)
}
