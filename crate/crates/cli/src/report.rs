//! Machine-readable reports.

use serde::{Deserialize, Serialize};
use symcov::collective::{collective_moments, korbicz_witness_search, pairwise_analysis, reduced_two_qubit, CollectiveState};
use symcov::covariance::Outcome;
use symcov::cv::{cv_invariants, cv_invariants_with, gaussian_ppt_oracle, simon_criterion, simon_criterion_with, CvCovariance, CvInvariants, I4Form};
use symcov::invariants::{local_invariants, LocalInvariants};
use symcov::linalg::RealSymMatrix;
use symcov::oracle::{evaluate_sample, Agreement};
use symcov::qstate::TwoQubitDensity;
use symcov::{Mat3, Vec3, Verdict};

use crate::document::{CovarianceDocument, State, StateDocument};
use crate::CliError;

pub const REPORT_SCHEMA: &str = "symcov.report/1";
pub const CV_REPORT_SCHEMA: &str = "symcov.cv_report/1";
pub const SWEEP_SCHEMA: &str = "symcov.sweep/1";

fn arr3(v: &Vec3) -> [f64; 3] {
    [v[0], v[1], v[2]]
}

fn rows3(m: &Mat3) -> [[f64; 3]; 3] {
    [0, 1, 2].map(|r| [m[(r, 0)], m[(r, 1)], m[(r, 2)]])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessEntry {
    /// `I1 < 0 ∨ I4 < 0`.
    pub fires: bool,
    /// `min(I1, I4)`.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairVerdicts {
    pub c_test: Verdict,
    pub ppt: Verdict,
    pub invariant_witness: WitnessEntry,
    /// Absent when the state has weight outside the triplet subspace.
    pub korbicz: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairSection {
    /// Whether the state lies in the triplet subspace (`tr T = 1`).
    pub symmetric_subspace: bool,
    pub s: [f64; 3],
    pub t: [[f64; 3]; 3],
    pub c_matrix: [[f64; 3]; 3],
    pub c_eigenvalues: [f64; 3],
    pub invariants: LocalInvariants,
    pub case: String,
    pub implication_holds: bool,
    pub verdicts: PairVerdicts,
    pub agreement: Agreement,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CollectiveSection {
    pub n: usize,
    pub s: [f64; 3],
    pub vn: [[f64; 3]; 3],
    /// `λ_min(VN + SSᵀ/N)`.
    pub lambda_min: f64,
    /// `N/4`.
    pub threshold: f64,
    /// `‖(VN + SSᵀ/N) − (N/4)(I + (N−1)C)‖`.
    pub residual: f64,
    pub verdict: Verdict,
    pub korbicz_direction: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub input: StateDocument,
    pub tolerance: f64,
    /// The two-qubit state itself, or the pair reduction of a collective state.
    pub pair: PairSection,
    pub collective: Option<CollectiveSection>,
    /// All verdicts combined; `indeterminate` when they disagree.
    pub verdict: Verdict,
}

impl AnalysisReport {
    pub fn exit_code(&self) -> i32 {
        outcome_code(self.verdict.outcome)
    }

    pub fn to_csv(&self) -> String {
        let v = &self.pair.verdicts;
        let (lambda, threshold) = self
            .collective
            .as_ref()
            .map(|c| (c.lambda_min.to_string(), c.threshold.to_string()))
            .unwrap_or_default();
        let inv = &self.pair.invariants;
        format!(
            "outcome,decisive_value,tolerance,c_margin,ppt_margin,i1,i2,i3,i4,case,korbicz_margin,lambda_min,threshold\n\
             {},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            self.verdict.outcome.as_str(),
            self.verdict.decisive_value,
            self.tolerance,
            v.c_test.decisive_value,
            v.ppt.decisive_value,
            inv.i1,
            inv.i2,
            inv.i3,
            inv.i4,
            self.pair.case,
            v.korbicz.map(|k| k.decisive_value.to_string()).unwrap_or_default(),
            lambda,
            threshold,
        )
    }
}

pub fn outcome_code(o: Outcome) -> i32 {
    match o {
        Outcome::SeparableConsistent => 0,
        Outcome::Entangled => 2,
        Outcome::Indeterminate => 3,
    }
}

fn pair_section(rho: &TwoQubitDensity, tol: f64) -> Result<PairSection, CliError> {
    let r = evaluate_sample(0, rho, tol)?;
    let s = Vec3::new(r.s_x, r.s_y, r.s_z);
    let t = Mat3::new(r.t_xx, r.t_xy, r.t_xz, r.t_xy, r.t_yy, r.t_yz, r.t_xz, r.t_yz, r.t_zz);
    let c = t - s * s.transpose();
    let invariants = local_invariants(&RealSymMatrix::from_mat3(&c)?)?;
    let korbicz = match (r.korbicz_margin, r.korbicz_verdict) {
        (Some(m), Some(_)) => Some(Verdict::from_margin(m, tol)),
        _ => None,
    };
    Ok(PairSection {
        symmetric_subspace: korbicz.is_some(),
        s: arr3(&s),
        t: rows3(&t),
        c_matrix: rows3(&c),
        c_eigenvalues: [r.c_eig_0, r.c_eig_1, r.c_eig_2],
        invariants,
        case: r.case.clone(),
        implication_holds: r.implication_holds,
        verdicts: PairVerdicts {
            c_test: Verdict::from_margin(r.c_margin, tol),
            ppt: Verdict::from_margin(r.ppt_margin, tol),
            invariant_witness: WitnessEntry {
                fires: r.witness_fires,
                margin: invariants.witness_margin(),
            },
            korbicz,
        },
        agreement: r.agreement,
    })
}

fn collective_section(st: &CollectiveState, tol: f64) -> Result<CollectiveSection, CliError> {
    let a = pairwise_analysis(st, tol)?;
    let m = collective_moments(st)?;
    let w = korbicz_witness_search(st)?;
    Ok(CollectiveSection {
        n: st.n(),
        s: arr3(&m.s),
        vn: rows3(&m.vn),
        lambda_min: a.lambda_min,
        threshold: a.threshold,
        residual: a.residual,
        verdict: a.verdict,
        korbicz_direction: arr3(&w.direction),
    })
}

pub fn analyze(doc: &StateDocument, tol: f64) -> Result<AnalysisReport, CliError> {
    if !(tol > 0.0) {
        return Err(CliError::Input(format!("tolerance must be positive, got {tol}")));
    }
    let (pair, collective) = match doc.build()? {
        State::TwoQubit(rho) => (pair_section(&rho, tol)?, None),
        State::Collective(st) => {
            if st.n() < 2 {
                return Err(CliError::Input("collective analysis needs at least 2 qubits".into()));
            }
            let rho = if st.n() == 2 {
                st.to_two_qubit()?
            } else {
                reduced_two_qubit(&st)?.density()?
            };
            (pair_section(&rho, tol)?, Some(collective_section(&st, tol)?))
        }
    };
    let mut verdicts = vec![pair.verdicts.c_test, pair.verdicts.ppt];
    verdicts.extend(pair.verdicts.korbicz);
    verdicts.extend(collective.as_ref().map(|c| c.verdict));
    Ok(AnalysisReport {
        schema: REPORT_SCHEMA.into(),
        input: doc.clone(),
        tolerance: tol,
        pair,
        collective,
        verdict: Verdict::combine(&verdicts),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvReport {
    pub schema: String,
    pub input: CovarianceDocument,
    pub tolerance: f64,
    pub invariants: CvInvariants,
    /// `I4` in the form `Tr(A J C B Cᵀ J)`.
    pub printed_i4: f64,
    pub simon: Verdict,
    pub simon_printed_form: Verdict,
    pub ppt: Verdict,
    /// Simon criterion (standard form) and PPT oracle reach the same outcome.
    pub agree: bool,
    pub warnings: Vec<String>,
}

impl CvReport {
    pub fn exit_code(&self) -> i32 {
        if self.agree {
            outcome_code(self.simon.outcome)
        } else {
            outcome_code(Outcome::Indeterminate)
        }
    }
}

pub fn cv_check(doc: &CovarianceDocument, tol: f64) -> Result<CvReport, CliError> {
    if !(tol > 0.0) {
        return Err(CliError::Input(format!("tolerance must be positive, got {tol}")));
    }
    let v: CvCovariance = doc.build()?;
    let invariants = cv_invariants(&v);
    let mut warnings = Vec::new();
    if invariants.below_vacuum_bound() {
        warnings.push(format!(
            "det A = {} or det B = {} is below the single-mode bound 1/4",
            invariants.i1, invariants.i2
        ));
    }
    let simon = simon_criterion(&v, tol)?;
    let ppt = gaussian_ppt_oracle(&v, tol)?;
    Ok(CvReport {
        schema: CV_REPORT_SCHEMA.into(),
        input: doc.clone(),
        tolerance: tol,
        invariants,
        printed_i4: cv_invariants_with(&v, I4Form::Printed).i4,
        simon,
        simon_printed_form: simon_criterion_with(&v, I4Form::Printed, tol)?,
        ppt,
        agree: simon.outcome == ppt.outcome,
        warnings,
    })
}
