//! Ground truth and randomized cross-checks.
//!
//! Every random sample is drawn from its own ChaCha20 stream: the generator
//! is seeded with `seed_from_u64(seed)` and then moved to stream `index`, so
//! sample `i` is the same whether a sweep runs on one thread or many.

use std::io::Write;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Exp1, StandardNormal, Uniform};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::collective::{korbicz_witness_search, CollectiveState};
use crate::covariance::{c_matrix, c_negativity_test, swap_invariant_c, Outcome, Verdict};
use crate::cv::{cv_invariants, cv_invariants_with, gaussian_ppt_oracle, random_physical_covariance, simon_criterion, I4Form};
use crate::error::{Error, Result};
use crate::invariants::{classify_case, invariant_witness, local_invariants, Case};
use crate::linalg::{c64, min_eigenvalue, HermitianMatrix, Vec3, C64};
use crate::qstate::{
    pauli_decompose, schmidt_pure, separable_symmetric, to_symmetric, triplet_basis, MixtureSpec, SymmetricParams,
    TwoQubitDensity, SYMMETRY_TOLERANCE,
};

/// Width multiplier of the ambiguity band around zero margins.
pub const AMBIGUITY_FACTOR: f64 = 10.0;

/// Entangled iff `λ_min(ρ^{T₂}) < −tol`.
pub fn ppt_oracle(rho: &TwoQubitDensity, tol: f64) -> Result<Verdict> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(Verdict::from_margin(
        min_eigenvalue(&crate::qstate::partial_transpose(rho))?,
        tol,
    ))
}

/// `p·|Φ⁺⟩⟨Φ⁺| + (1 − p)·I/4`.
pub fn werner(p: f64) -> Result<TwoQubitDensity> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("p = {p} outside [0, 1]")));
    }
    let bell = schmidt_pure(std::f64::consts::FRAC_1_SQRT_2)?;
    let noise = HermitianMatrix::new(DMatrix::identity(4, 4) * c64(0.25, 0.0))?;
    TwoQubitDensity::new(HermitianMatrix::combine(&[(p, bell.rho()), (1.0 - p, &noise)])?)
}

/// Generator for sample `index` of the ensemble seeded by `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DVector<C64> {
    DVector::from_fn(dim, |_, _| c64(StandardNormal.sample(rng), StandardNormal.sample(rng)))
}

/// `GG†/tr` for a `dim × rank` complex Gaussian `G`.
fn ginibre<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> HermitianMatrix {
    let g = DMatrix::from_fn(dim, rank, |_, _| c64(StandardNormal.sample(rng), StandardNormal.sample(rng)));
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    HermitianMatrix::new(m / c64(tr, 0.0)).expect("GG† is Hermitian")
}

fn embed_triplet(form: &HermitianMatrix) -> Result<TwoQubitDensity> {
    let w = triplet_basis();
    TwoQubitDensity::new(HermitianMatrix::new(&w * form.matrix() * w.adjoint())?)
}

/// Normalized complex Gaussian amplitudes on `|1,1⟩, |1,0⟩, |1,−1⟩`.
pub fn random_symmetric_pure<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitDensity {
    let psi = triplet_basis() * gaussian_vector(rng, 3).normalize();
    TwoQubitDensity::pure(&psi).expect("normalized vector")
}

/// Ginibre state of the given rank inside the triplet subspace.
pub fn random_symmetric_mixed<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> Result<TwoQubitDensity> {
    if !(1..=3).contains(&rank) {
        return Err(Error::Domain(format!("rank {rank} outside 1..=3")));
    }
    embed_triplet(&ginibre(rng, 3, rank))
}

/// Exponential (flat Dirichlet) weights and Bloch vectors with uniform
/// direction and radius uniform in `[0, 1]`.
pub fn random_separable_symmetric<R: Rng + ?Sized>(rng: &mut R, terms: usize) -> Result<MixtureSpec> {
    if terms == 0 {
        return Err(Error::Domain("a mixture needs at least one term".into()));
    }
    let raw: Vec<f64> = (0..terms).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    let mut weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    // put the rounding remainder on the last weight so the sum is exact
    let head: f64 = weights[..terms - 1].iter().sum();
    weights[terms - 1] = (1.0 - head).max(0.0);
    let radius = Uniform::new_inclusive(0.0, 1.0).expect("valid range");
    let vectors = (0..terms)
        .map(|_| {
            let d = Vec3::from_fn(|_, _| StandardNormal.sample(rng));
            d.normalize() * radius.sample(rng)
        })
        .collect();
    MixtureSpec::new(weights, vectors)
}

/// Random state on the `N+1`-dimensional symmetric subspace with rank drawn
/// uniformly from `1..=3`.
pub fn random_collective_state<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<CollectiveState> {
    let rank = rng.random_range(1..=3usize).min(n + 1);
    CollectiveState::new(n, ginibre(rng, n + 1, rank))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnsembleKind {
    PureSymmetric,
    MixedSymmetric,
    SeparableSymmetric,
}

impl EnsembleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EnsembleKind::PureSymmetric => "pure_symmetric",
            EnsembleKind::MixedSymmetric => "mixed_symmetric",
            EnsembleKind::SeparableSymmetric => "separable_symmetric",
        }
    }
}

impl std::str::FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "pure_symmetric" | "pure" => Ok(EnsembleKind::PureSymmetric),
            "mixed_symmetric" | "mixed" => Ok(EnsembleKind::MixedSymmetric),
            "separable_symmetric" | "separable" => Ok(EnsembleKind::SeparableSymmetric),
            other => Err(Error::Invalid(format!("unknown ensemble {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub count: usize,
    /// Rank of mixed samples; `0` draws it uniformly from `1..=3` per sample.
    pub rank: usize,
    /// Terms per separable mixture.
    pub terms: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn new(kind: EnsembleKind, count: usize, seed: u64) -> Result<Self> {
        if count == 0 {
            return Err(Error::Domain("ensemble count must be at least 1".into()));
        }
        Ok(Self {
            kind,
            count,
            rank: 0,
            terms: 4,
            seed,
        })
    }

    pub fn with_rank(mut self, rank: usize) -> Result<Self> {
        if rank > 3 {
            return Err(Error::Domain(format!("rank {rank} outside 0..=3")));
        }
        self.rank = rank;
        Ok(self)
    }

    pub fn with_terms(mut self, terms: usize) -> Result<Self> {
        if terms == 0 {
            return Err(Error::Domain("a mixture needs at least one term".into()));
        }
        self.terms = terms;
        Ok(self)
    }

    /// Draws sample `index`.
    pub fn sample(&self, index: usize) -> Result<TwoQubitDensity> {
        let mut rng = sample_rng(self.seed, index as u64);
        match self.kind {
            EnsembleKind::PureSymmetric => Ok(random_symmetric_pure(&mut rng)),
            EnsembleKind::MixedSymmetric => {
                let rank = if self.rank == 0 {
                    rng.random_range(1..=3usize)
                } else {
                    self.rank
                };
                random_symmetric_mixed(&mut rng, rank)
            }
            EnsembleKind::SeparableSymmetric => Ok(separable_symmetric(&random_separable_symmetric(&mut rng, self.terms)?)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Agree,
    Disagree,
    /// Tests differ but at least one margin sits inside the ambiguity band.
    Ambiguous,
}

/// Everything computed for one sample; also the CSV row layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub index: usize,
    pub s_x: f64,
    pub s_y: f64,
    pub s_z: f64,
    pub t_xx: f64,
    pub t_xy: f64,
    pub t_xz: f64,
    pub t_yy: f64,
    pub t_yz: f64,
    pub t_zz: f64,
    pub c_eig_0: f64,
    pub c_eig_1: f64,
    pub c_eig_2: f64,
    pub c_margin: f64,
    pub c_verdict: Outcome,
    pub ppt_margin: f64,
    pub ppt_verdict: Outcome,
    pub i1: f64,
    pub i4: f64,
    pub witness_fires: bool,
    pub korbicz_margin: Option<f64>,
    pub korbicz_verdict: Option<Outcome>,
    pub case: String,
    pub implication_holds: bool,
    pub agreement: Agreement,
}

impl SampleRecord {
    pub fn params(&self) -> Result<SymmetricParams> {
        let t = crate::linalg::Mat3::new(
            self.t_xx, self.t_xy, self.t_xz, //
            self.t_xy, self.t_yy, self.t_yz, //
            self.t_xz, self.t_yz, self.t_zz,
        );
        SymmetricParams::new(Vec3::new(self.s_x, self.s_y, self.s_z), t)
    }
}

/// Runs every test on one state. States outside the triplet subspace (such
/// as mixtures of mixed product states) are tested through
/// `C = T − s₁s₂ᵀ` and carry no Korbicz entry.
pub fn evaluate_sample(index: usize, rho: &TwoQubitDensity, tol: f64) -> Result<SampleRecord> {
    let bloch = pauli_decompose(rho)?;
    let (s, t, c) = match to_symmetric(&bloch, SYMMETRY_TOLERANCE) {
        Ok(p) => (p.s(), p.t(), c_matrix(&p)),
        Err(Error::NotSymmetric { constraint: "tr T = 1", .. }) => {
            let c = swap_invariant_c(&bloch, SYMMETRY_TOLERANCE)?;
            let t = (bloch.t() + bloch.t().transpose()) * 0.5;
            (bloch.s1(), t, c)
        }
        Err(e) => return Err(e),
    };
    let c_test = Verdict::from_margin(min_eigenvalue(&c)?, tol);
    let ppt = ppt_oracle(rho, tol)?;
    let inv = local_invariants(&c)?;
    let witness_fires = invariant_witness(&inv);
    let korbicz = match CollectiveState::from_two_qubit(rho) {
        Ok(st) => Some(Verdict::from_margin(korbicz_witness_search(&st)?.margin, tol)),
        Err(Error::Trace(_)) => None,
        Err(e) => return Err(e),
    };

    let (case, implication_holds, eig) = match classify_case(&c, tol) {
        Ok(label) => (label.label.as_str().to_string(), label.implication_holds(&inv), label.eigenvalues),
        Err(Error::ThreeNegative(ev)) => ("three_negative".to_string(), false, ev),
        Err(Error::Invalid(_)) => {
            let ev = crate::linalg::eig_real_symmetric(&c)?.values;
            ("unclassified".to_string(), true, [ev[0], ev[1], ev[2]])
        }
        Err(e) => return Err(e),
    };

    let band = AMBIGUITY_FACTOR * tol;
    let outside = |m: f64| m.abs() > band;
    // the witness is only sufficient, so only a firing witness on a clearly
    // separable state counts against it
    let witness_contradiction = witness_fires && outside(ppt.decisive_value) && !ppt.is_entangled();
    let pairs = std::iter::once((c_test, ppt)).chain(korbicz.map(|k| (c_test, k)));
    let mut agreement = Agreement::Agree;
    for (a, b) in pairs {
        if a.outcome != b.outcome {
            if outside(a.decisive_value) && outside(b.decisive_value) {
                agreement = Agreement::Disagree;
            } else if agreement == Agreement::Agree {
                agreement = Agreement::Ambiguous;
            }
        }
    }
    if witness_contradiction {
        agreement = Agreement::Disagree;
    }

    Ok(SampleRecord {
        index,
        s_x: s[0],
        s_y: s[1],
        s_z: s[2],
        t_xx: t[(0, 0)],
        t_xy: t[(0, 1)],
        t_xz: t[(0, 2)],
        t_yy: t[(1, 1)],
        t_yz: t[(1, 2)],
        t_zz: t[(2, 2)],
        c_eig_0: eig[0],
        c_eig_1: eig[1],
        c_eig_2: eig[2],
        c_margin: c_test.decisive_value,
        c_verdict: c_test.outcome,
        ppt_margin: ppt.decisive_value,
        ppt_verdict: ppt.outcome,
        i1: inv.i1,
        i4: inv.i4,
        witness_fires,
        korbicz_margin: korbicz.map(|k| k.decisive_value),
        korbicz_verdict: korbicz.map(|k| k.outcome),
        case,
        implication_holds,
        agreement,
    })
}

/// Evaluates the whole ensemble in parallel; the output is ordered by index.
pub fn sweep_samples(spec: &EnsembleSpec, tol: f64) -> Result<Vec<SampleRecord>> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    (0..spec.count)
        .into_par_iter()
        .map(|i| evaluate_sample(i, &spec.sample(i)?, tol))
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTallies {
    pub case_i: usize,
    pub case_ii: usize,
    pub case_iii: usize,
    pub not_entangled: usize,
    pub unclassified: usize,
    pub three_negative: usize,
}

/// Fixed-bin histogram of `λ_min(C)` on `[lo, hi]`; out-of-range values go
/// to the end bins.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub counts: Vec<usize>,
}

impl Histogram {
    pub fn new(lo: f64, hi: f64, bins: usize) -> Self {
        Self {
            lo,
            hi,
            counts: vec![0; bins],
        }
    }

    pub fn add(&mut self, x: f64) {
        let bins = self.counts.len();
        let pos = ((x - self.lo) / (self.hi - self.lo) * bins as f64).floor();
        let bin = pos.clamp(0.0, (bins - 1) as f64) as usize;
        self.counts[bin] += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub ensemble: EnsembleSpec,
    pub tolerance: f64,
    pub total: usize,
    pub agreements: usize,
    pub disagreements: Vec<SampleRecord>,
    pub indeterminate_count: usize,
    pub entangled: usize,
    pub cases: CaseTallies,
    /// Entangled samples whose case label does not carry the expected
    /// invariant sign.
    pub implication_failures: usize,
    /// Entangled samples on which `I1 < 0 ∨ I4 < 0` does not fire.
    pub witness_misses: usize,
    pub margin_histogram: Histogram,
}

impl SweepReport {
    pub fn from_records(spec: &EnsembleSpec, tol: f64, records: &[SampleRecord]) -> Self {
        let mut report = SweepReport {
            ensemble: *spec,
            tolerance: tol,
            total: records.len(),
            agreements: 0,
            disagreements: Vec::new(),
            indeterminate_count: 0,
            entangled: 0,
            cases: CaseTallies::default(),
            implication_failures: 0,
            witness_misses: 0,
            margin_histogram: Histogram::new(-1.0, 1.0, 20),
        };
        for r in records {
            match r.agreement {
                Agreement::Agree => report.agreements += 1,
                Agreement::Disagree => report.disagreements.push(r.clone()),
                Agreement::Ambiguous => report.indeterminate_count += 1,
            }
            report.margin_histogram.add(r.c_margin);
            match r.case.as_str() {
                "case_i" => report.cases.case_i += 1,
                "case_ii" => report.cases.case_ii += 1,
                "case_iii" => report.cases.case_iii += 1,
                "not_entangled" => report.cases.not_entangled += 1,
                "three_negative" => report.cases.three_negative += 1,
                _ => report.cases.unclassified += 1,
            }
            if r.c_verdict == Outcome::Entangled {
                report.entangled += 1;
                if !r.implication_holds {
                    report.implication_failures += 1;
                }
                if !r.witness_fires {
                    report.witness_misses += 1;
                }
            }
        }
        report
    }

    pub fn disagreement_count(&self) -> usize {
        self.disagreements.len()
    }
}

pub fn equivalence_sweep(spec: &EnsembleSpec, tol: f64) -> Result<SweepReport> {
    Ok(SweepReport::from_records(spec, tol, &sweep_samples(spec, tol)?))
}

/// One header row plus one row per sample.
pub fn write_csv<W: Write>(records: &[SampleRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Invalid(format!("csv: {e}")))
}

/// Which test drives the Werner bisection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WernerTest {
    Ppt,
    CTest,
}

fn werner_entangled(p: f64, test: WernerTest, tol: f64) -> Result<bool> {
    let rho = werner(p)?;
    match test {
        WernerTest::Ppt => Ok(ppt_oracle(&rho, tol)?.is_entangled()),
        WernerTest::CTest => {
            let params = to_symmetric(&pauli_decompose(&rho)?, SYMMETRY_TOLERANCE)?;
            Ok(c_negativity_test(&params, tol)?.is_entangled())
        }
    }
}

/// Bisects `p ∈ [0, 1]` for the onset of entanglement in the Werner family.
pub fn werner_threshold(test: WernerTest, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (0.0, 1.0);
    if werner_entangled(lo, test, tol)? || !werner_entangled(hi, test, tol)? {
        return Err(Error::Invalid("no sign change on [0, 1]".into()));
    }
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if werner_entangled(mid, test, tol)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// A verified state whose `C` has the requested sign pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseExemplar {
    pub params: SymmetricParams,
    pub eigenvalues: [f64; 3],
}

fn check_exemplar(rho: &TwoQubitDensity, case: Case, tol: f64) -> Option<CaseExemplar> {
    let params = to_symmetric(&pauli_decompose(rho).ok()?, SYMMETRY_TOLERANCE).ok()?;
    let label = classify_case(&c_matrix(&params), tol).ok()?;
    (label.label == case && ppt_oracle(rho, tol).ok()?.is_entangled()).then_some(CaseExemplar {
        params,
        eigenvalues: label.eigenvalues,
    })
}

/// Looks for a physical symmetric state in the given case by random
/// sampling, by bisecting mixtures of entangled and separable samples toward
/// the boundary, and by building `C` with the target sign pattern directly.
pub fn find_case_exemplar(case: Case, seed: u64, attempts: usize, tol: f64) -> Option<CaseExemplar> {
    for i in 0..attempts {
        let mut rng = sample_rng(seed, i as u64);
        let rank = rng.random_range(1..=3usize);
        let rho = random_symmetric_mixed(&mut rng, rank).ok()?;
        if let Some(found) = check_exemplar(&rho, case, tol) {
            return Some(found);
        }
        // slide toward a separable state and stop just before the boundary
        let sep = separable_symmetric(&random_separable_symmetric(&mut rng, 3).ok()?);
        if ppt_oracle(&rho, tol).ok()?.is_entangled() {
            let (mut lo, mut hi) = (0.0, 1.0);
            for _ in 0..50 {
                let mid = 0.5 * (lo + hi);
                let mixed = TwoQubitDensity::mix(&[(1.0 - mid, &rho), (mid, &sep)]).ok()?;
                if ppt_oracle(&mixed, tol).ok()?.is_entangled() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            for w in [lo, lo * 0.999, lo * 0.99] {
                let mixed = TwoQubitDensity::mix(&[(1.0 - w, &rho), (w, &sep)]).ok()?;
                if let Some(found) = check_exemplar(&mixed, case, 1e-6) {
                    return Some(found);
                }
            }
        }
        if let Some(found) = constructive_exemplar(&mut rng, case, tol) {
            return Some(found);
        }
    }
    None
}

fn constructive_exemplar<R: Rng + ?Sized>(rng: &mut R, case: Case, tol: f64) -> Option<CaseExemplar> {
    let u = Uniform::new(0.05, 1.0).expect("valid range");
    let pattern = match case {
        Case::CaseI => [0.0, -u.sample(rng), u.sample(rng)],
        Case::CaseII => [-u.sample(rng), -u.sample(rng), u.sample(rng)],
        Case::CaseIII => [-u.sample(rng), u.sample(rng), u.sample(rng)],
        Case::NotEntangled => [u.sample(rng), u.sample(rng), u.sample(rng)],
    };
    let c = crate::linalg::Mat3::from_diagonal(&Vec3::from(pattern));
    // choose |s|² so that tr(C + ssᵀ) = 1
    let r2 = 1.0 - c.trace();
    if !(0.0..=1.0).contains(&r2) {
        return None;
    }
    let dir = Vec3::from_fn(|_, _| StandardNormal.sample(rng)).normalize();
    let s = dir * r2.sqrt();
    let params = SymmetricParams::new(s, c + s * s.transpose()).ok()?;
    let rho = params.density().ok()?;
    check_exemplar(&rho, case, tol)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvSweepReport {
    pub total: usize,
    pub seed: u64,
    pub band: f64,
    pub agreements: usize,
    pub disagreements: usize,
    pub ambiguous: usize,
    pub entangled: usize,
    /// Clear disagreements when `I4` uses the printed form instead.
    pub printed_form_disagreements: usize,
    pub printed_form_entangled: usize,
}

/// Simon criterion against the Gaussian PPT oracle on random physical
/// covariances; margins within `band` of zero are not compared.
pub fn cv_sweep(count: usize, seed: u64, band: f64) -> Result<CvSweepReport> {
    let rows: Vec<(Verdict, Verdict, f64)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let v = random_physical_covariance(&mut sample_rng(seed, i as u64));
            let printed = cv_invariants_with(&v, I4Form::Printed).simon_margin();
            debug_assert!(cv_invariants(&v).i1 > 0.0);
            Ok((simon_criterion(&v, band)?, gaussian_ppt_oracle(&v, band)?, printed))
        })
        .collect::<Result<_>>()?;
    let mut report = CvSweepReport {
        total: count,
        seed,
        band,
        agreements: 0,
        disagreements: 0,
        ambiguous: 0,
        entangled: 0,
        printed_form_disagreements: 0,
        printed_form_entangled: 0,
    };
    for (simon, ppt, printed) in rows {
        if ppt.is_entangled() {
            report.entangled += 1;
        }
        if simon.outcome == ppt.outcome {
            report.agreements += 1;
        } else if simon.is_clear(band) && ppt.is_clear(band) {
            report.disagreements += 1;
        } else {
            report.ambiguous += 1;
        }
        if printed < -band {
            report.printed_form_entangled += 1;
        }
        if printed.abs() > band && ppt.is_clear(band) && (printed < 0.0) != ppt.is_entangled() {
            report.printed_form_disagreements += 1;
        }
    }
    Ok(report)
}
