//! End-to-end classification: minimal code per complex, the
//! reducible/decomposable and max-intersection-complete gates, the wheel
//! search, batch sweeps, tables, and report checks.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::complex::SimplicialComplex;
use crate::enumerate::{canonical_form, enumerate_connected};
use crate::error::{Error, Result};
use crate::obstructions::{has_local_obstruction, is_max_intersection_complete, minimal_code};
use crate::reduce::{find_decomposition, find_removable_neuron, reduce, Decomposition, ReductionStep};
use crate::samples;
use crate::set::NeuronSet;
use crate::wheels::{
    brute_force_find_sprocket, brute_force_find_wheel_frame, brute_force_find_wire_wheel,
    check_sprocket, check_wheel_frame, check_wire_wheel, wheel_report_with_stats,
    SprocketCert, WheelFrameCert, WheelSearchStats, WireWheelCert, DEFAULT_BRUTE_BUDGET,
};

/// Outcome labels of the classification procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    ReducibleOrDecomposable,
    MaxIntersectionComplete,
    Wheel,
    Unknown,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelProfile {
    pub has_sprocket: bool,
    pub has_wire_wheel: bool,
    pub has_wheel_frame: bool,
}

impl WheelProfile {
    pub fn any(&self) -> bool {
        self.has_sprocket || self.has_wire_wheel || self.has_wheel_frame
    }
}

/// Evidence attached to a classification record.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Sprocket(SprocketCert),
    WireWheel(WireWheelCert),
    WheelFrame(WheelFrameCert),
    Decomposition(Decomposition),
    Reduction { steps: Vec<ReductionStep> },
}

/// One line of the JSONL output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub id: u64,
    pub n: u8,
    pub facets: Vec<NeuronSet>,
    pub facet_count: usize,
    pub dim: i32,
    pub pure: bool,
    pub status: Status,
    pub wheel_profile: WheelProfile,
    pub certificates: Vec<Certificate>,
    pub ms: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    /// Also test for trivial neurons in the reducibility gate. Sweeps over
    /// connected complexes skip this: their minimal codes have none.
    pub check_trivial_neurons: bool,
    /// Re-run the unpruned brute-force finders and fail loudly if they
    /// disagree with the pruned ones (verification mode).
    pub brute_force_check: bool,
    pub brute_budget: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            check_trivial_neurons: false,
            brute_force_check: false,
            brute_budget: DEFAULT_BRUTE_BUDGET,
        }
    }
}

/// Classification outcome for one code.
#[derive(Clone, Debug)]
pub struct Classification {
    pub status: Status,
    pub wheel_profile: WheelProfile,
    pub certificates: Vec<Certificate>,
    /// Populated when the wheel stage ran (status `Wheel` or `Unknown`).
    pub search_stats: Option<WheelSearchStats>,
}

/// Runs the classification procedure on a single code:
/// reducible/decomposable, then max-intersection-complete, then the wheel
/// detectors, else unknown.
pub fn classify_code(code: &Code, opts: &ClassifyOptions) -> Result<Classification> {
    if find_removable_neuron(code, opts.check_trivial_neurons).is_some() {
        let (_, steps) = reduce(code);
        return Ok(Classification {
            status: Status::ReducibleOrDecomposable,
            wheel_profile: WheelProfile::default(),
            certificates: vec![Certificate::Reduction { steps }],
            search_stats: None,
        });
    }
    if let Some(d) = find_decomposition(code) {
        return Ok(Classification {
            status: Status::ReducibleOrDecomposable,
            wheel_profile: WheelProfile::default(),
            certificates: vec![Certificate::Decomposition(d)],
            search_stats: None,
        });
    }
    if is_max_intersection_complete(code) {
        if opts.brute_force_check {
            let (report, _) = wheel_report_with_stats(code);
            if report.any() {
                return Err(Error::VerificationFailed(format!(
                    "max-intersection-complete code {code} carries a wheel certificate"
                )));
            }
        }
        return Ok(Classification {
            status: Status::MaxIntersectionComplete,
            wheel_profile: WheelProfile::default(),
            certificates: Vec::new(),
            search_stats: None,
        });
    }
    let (report, stats) = wheel_report_with_stats(code);
    if opts.brute_force_check {
        let b = opts.brute_budget;
        let brute = (
            brute_force_find_sprocket(code, b)?.is_some(),
            brute_force_find_wire_wheel(code, b)?.is_some(),
            brute_force_find_wheel_frame(code, b)?.is_some(),
        );
        let pruned = (
            report.sprocket.is_some(),
            report.wire_wheel.is_some(),
            report.wheel_frame.is_some(),
        );
        if brute != pruned {
            return Err(Error::VerificationFailed(format!(
                "pruned finders {pruned:?} disagree with brute force {brute:?} on {code}"
            )));
        }
    }
    let wheel_profile = WheelProfile {
        has_sprocket: report.sprocket.is_some(),
        has_wire_wheel: report.wire_wheel.is_some(),
        has_wheel_frame: report.wheel_frame.is_some(),
    };
    let mut certificates = Vec::new();
    if let Some(c) = report.sprocket {
        debug_assert!(check_sprocket(code, &c));
        certificates.push(Certificate::Sprocket(c));
    }
    if let Some(c) = report.wire_wheel {
        debug_assert!(check_wire_wheel(code, &c));
        certificates.push(Certificate::WireWheel(c));
    }
    if let Some(c) = report.wheel_frame {
        debug_assert!(check_wheel_frame(code, &c));
        certificates.push(Certificate::WheelFrame(c));
    }
    let status = if wheel_profile.any() { Status::Wheel } else { Status::Unknown };
    Ok(Classification {
        status,
        wheel_profile,
        certificates,
        search_stats: Some(stats),
    })
}

/// Classifies the minimal code of one complex.
pub fn classify_complex(
    id: u64,
    cx: &SimplicialComplex,
    opts: &ClassifyOptions,
) -> Result<ClassificationRecord> {
    let start = Instant::now();
    let code = minimal_code(cx)?;
    let c = classify_code(&code, opts)?;
    Ok(ClassificationRecord {
        id,
        n: cx.n(),
        facets: cx.facets().to_vec(),
        facet_count: cx.facet_count(),
        dim: cx.dim().unwrap_or(-1),
        pure: cx.is_pure(),
        status: c.status,
        wheel_profile: c.wheel_profile,
        certificates: c.certificates,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Parallel map over complexes with a deterministic merge by id: record `i`
/// always corresponds to `complexes[i]`.
pub fn classify_complexes(
    complexes: &[SimplicialComplex],
    opts: &ClassifyOptions,
) -> Result<Vec<ClassificationRecord>> {
    complexes
        .par_iter()
        .enumerate()
        .map(|(i, cx)| classify_complex(i as u64, cx, opts))
        .collect()
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

/// Wheel-kind combinations tracked by the classification tables.
fn wheel_bucket(p: &WheelProfile) -> WheelBucket {
    match (p.has_wheel_frame, p.has_sprocket, p.has_wire_wheel) {
        (true, false, false) => WheelBucket::FrameOnly,
        (false, true, false) => WheelBucket::SprocketOnly,
        (true, true, false) => WheelBucket::FrameAndSprocket,
        (false, false, true) => WheelBucket::WireOnly,
        (false, false, false) => WheelBucket::NoWheel,
        _ => WheelBucket::Other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum WheelBucket {
    NoWheel,
    FrameOnly,
    SprocketOnly,
    FrameAndSprocket,
    WireOnly,
    Other,
}

pub const TABLE1_FACET_COUNTS: [usize; 4] = [4, 5, 6, 7];

/// Classification counts for 6-neuron minimal codes with 4 to 7 maximal
/// codewords (columns indexed by facet count - 4).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1 {
    pub reducible_or_decomposable: [u64; 4],
    pub max_intersection_complete: [u64; 4],
    pub wheel_frame_only: [u64; 4],
    pub sprocket_only: [u64; 4],
    pub wheel_frame_and_sprocket: [u64; 4],
    pub wire_wheel_only: [u64; 4],
    /// Wheel combinations outside the four tracked rows (expected zero).
    pub other_wheel: [u64; 4],
    pub unknown: [u64; 4],
    pub total: [u64; 4],
}

/// Published values for Table 1.
pub const EXPECTED_TABLE1: Table1 = Table1 {
    reducible_or_decomposable: [203, 480, 526, 341],
    max_intersection_complete: [4, 79, 399, 909],
    wheel_frame_only: [0, 1, 11, 36],
    sprocket_only: [2, 6, 14, 14],
    wheel_frame_and_sprocket: [1, 29, 92, 108],
    wire_wheel_only: [0, 0, 1, 1],
    other_wheel: [0, 0, 0, 0],
    unknown: [0, 96, 535, 1169],
    total: [210, 691, 1578, 2578],
};

impl Table1 {
    pub fn tally(records: &[ClassificationRecord]) -> Table1 {
        let mut t = Table1::default();
        for r in records {
            let Some(col) = r.facet_count.checked_sub(4).filter(|&c| c < 4) else {
                continue;
            };
            t.total[col] += 1;
            match r.status {
                Status::ReducibleOrDecomposable => t.reducible_or_decomposable[col] += 1,
                Status::MaxIntersectionComplete => t.max_intersection_complete[col] += 1,
                Status::Unknown => t.unknown[col] += 1,
                Status::Wheel => match wheel_bucket(&r.wheel_profile) {
                    WheelBucket::FrameOnly => t.wheel_frame_only[col] += 1,
                    WheelBucket::SprocketOnly => t.sprocket_only[col] += 1,
                    WheelBucket::FrameAndSprocket => t.wheel_frame_and_sprocket[col] += 1,
                    WheelBucket::WireOnly => t.wire_wheel_only[col] += 1,
                    WheelBucket::Other => t.other_wheel[col] += 1,
                    WheelBucket::NoWheel => unreachable!("wheel status without a wheel"),
                },
            }
        }
        t
    }

    pub fn rows(&self) -> Vec<(&'static str, [u64; 4])> {
        vec![
            ("Reducible or decomposable", self.reducible_or_decomposable),
            ("Max-intersection-complete", self.max_intersection_complete),
            ("Wheel frame only", self.wheel_frame_only),
            ("Sprocket only", self.sprocket_only),
            ("Wheel frame and sprocket", self.wheel_frame_and_sprocket),
            ("Wire wheel only", self.wire_wheel_only),
            ("Other wheel combination", self.other_wheel),
            ("Unknown", self.unknown),
            ("Total", self.total),
        ]
    }

    /// Cells that differ from the published table, as
    /// `(row, facet count, expected, actual)`.
    pub fn mismatches(&self) -> Vec<CellMismatch> {
        diff_rows(&EXPECTED_TABLE1.rows(), &self.rows(), &TABLE1_FACET_COUNTS)
    }
}

/// Classification counts for pure 6-neuron minimal codes of dimension 2 and
/// 3 (columns: dim 2, dim 3).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2 {
    pub reducible_or_decomposable: [u64; 2],
    pub max_intersection_complete: [u64; 2],
    pub wheel: [u64; 2],
    pub unknown: [u64; 2],
    pub total: [u64; 2],
}

/// Published values for Table 2.
pub const EXPECTED_TABLE2: Table2 = Table2 {
    reducible_or_decomposable: [153, 36],
    max_intersection_complete: [944, 32],
    wheel: [0, 6],
    unknown: [1004, 76],
    total: [2101, 150],
};

impl Table2 {
    pub fn tally(records: &[ClassificationRecord]) -> Table2 {
        let mut t = Table2::default();
        for r in records {
            if !r.pure {
                continue;
            }
            let col = match r.dim {
                2 => 0,
                3 => 1,
                _ => continue,
            };
            t.total[col] += 1;
            match r.status {
                Status::ReducibleOrDecomposable => t.reducible_or_decomposable[col] += 1,
                Status::MaxIntersectionComplete => t.max_intersection_complete[col] += 1,
                Status::Wheel => t.wheel[col] += 1,
                Status::Unknown => t.unknown[col] += 1,
            }
        }
        t
    }

    pub fn rows(&self) -> Vec<(&'static str, [u64; 2])> {
        vec![
            ("Reducible or decomposable", self.reducible_or_decomposable),
            ("Max-intersection-complete", self.max_intersection_complete),
            ("Wheel", self.wheel),
            ("Unknown", self.unknown),
            ("Total", self.total),
        ]
    }

    pub fn mismatches(&self) -> Vec<CellMismatch> {
        diff_rows(&EXPECTED_TABLE2.rows(), &self.rows(), &[2, 3])
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellMismatch {
    pub row: String,
    pub column: usize,
    pub expected: u64,
    pub actual: u64,
}

fn diff_rows<const W: usize>(
    expected: &[(&'static str, [u64; W])],
    actual: &[(&'static str, [u64; W])],
    columns: &[usize; W],
) -> Vec<CellMismatch> {
    let mut out = Vec::new();
    for ((name, exp), (_, act)) in expected.iter().zip(actual) {
        for k in 0..W {
            if exp[k] != act[k] {
                out.push(CellMismatch {
                    row: (*name).to_string(),
                    column: columns[k],
                    expected: exp[k],
                    actual: act[k],
                });
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

fn sweep_options() -> ClassifyOptions {
    ClassifyOptions {
        // connected complexes: minimal codes never have trivial neurons
        check_trivial_neurons: false,
        ..ClassifyOptions::default()
    }
}

/// Enumerates connected 6-vertex complexes with 4 to 7 facets and
/// classifies their minimal codes.
pub fn run_table1() -> Result<(Vec<ClassificationRecord>, Table1)> {
    let complexes = enumerate_connected(6, 4..=7, None)?;
    let records = classify_complexes(&complexes, &sweep_options())?;
    let table = Table1::tally(&records);
    Ok((records, table))
}

/// Enumerates connected pure 6-vertex complexes of dimension 2 and 3 and
/// classifies their minimal codes. Record ids continue across the two
/// dimensions (dimension 2 first).
pub fn run_table2() -> Result<(Vec<ClassificationRecord>, Table2)> {
    let mut complexes = enumerate_connected(6, 1..=20, Some(2))?;
    complexes.extend(enumerate_connected(6, 1..=15, Some(3))?);
    let records = classify_complexes(&complexes, &sweep_options())?;
    let table = Table2::tally(&records);
    Ok((records, table))
}

// ---------------------------------------------------------------------------
// Discrepancy reporting
// ---------------------------------------------------------------------------

/// Per-code evidence for a table cell that differs from the published
/// value: re-validated certificates for positive claims, exhaustive-search
/// transcripts for negative ones.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiscrepancyEntry {
    pub id: u64,
    pub facets: Vec<NeuronSet>,
    pub minimal_code: Vec<NeuronSet>,
    pub status: Status,
    pub wheel_profile: WheelProfile,
    pub certificates: Vec<Certificate>,
    pub certificates_revalidated: bool,
    pub search_transcripts: Option<WheelSearchStats>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub mismatched_cells: Vec<CellMismatch>,
    pub entries: Vec<DiscrepancyEntry>,
}

impl DiscrepancyReport {
    pub fn is_empty(&self) -> bool {
        self.mismatched_cells.is_empty()
    }
}

fn record_in_cell(r: &ClassificationRecord, cell: &CellMismatch, table1: bool) -> bool {
    let col_match = if table1 {
        r.facet_count == cell.column
    } else {
        r.pure && r.dim == cell.column as i32
    };
    if !col_match {
        return false;
    }
    match cell.row.as_str() {
        "Reducible or decomposable" => r.status == Status::ReducibleOrDecomposable,
        "Max-intersection-complete" => r.status == Status::MaxIntersectionComplete,
        "Unknown" => r.status == Status::Unknown,
        "Total" => true,
        "Wheel" => r.status == Status::Wheel,
        "Wheel frame only" => {
            r.status == Status::Wheel
                && wheel_bucket(&r.wheel_profile) == WheelBucket::FrameOnly
        }
        "Sprocket only" => {
            r.status == Status::Wheel
                && wheel_bucket(&r.wheel_profile) == WheelBucket::SprocketOnly
        }
        "Wheel frame and sprocket" => {
            r.status == Status::Wheel
                && wheel_bucket(&r.wheel_profile) == WheelBucket::FrameAndSprocket
        }
        "Wire wheel only" => {
            r.status == Status::Wheel
                && wheel_bucket(&r.wheel_profile) == WheelBucket::WireOnly
        }
        "Other wheel combination" => {
            r.status == Status::Wheel && wheel_bucket(&r.wheel_profile) == WheelBucket::Other
        }
        _ => false,
    }
}

/// Builds the audit report for mismatched cells: every one of our codes in
/// an affected cell, with its evidence recomputed and re-validated.
pub fn build_discrepancy_report(
    records: &[ClassificationRecord],
    mismatches: Vec<CellMismatch>,
    table1: bool,
) -> Result<DiscrepancyReport> {
    let mut entries = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for cell in &mismatches {
        if cell.row == "Total" {
            continue; // enumeration-level mismatch; no per-code claim
        }
        for r in records {
            if !record_in_cell(r, cell, table1) || !seen.insert(r.id) {
                continue;
            }
            let cx = SimplicialComplex::from_faces(r.n, r.facets.iter().copied())?;
            let code = minimal_code(&cx)?;
            let mut revalidated = true;
            for cert in &r.certificates {
                revalidated &= match cert {
                    Certificate::Sprocket(c) => check_sprocket(&code, c),
                    Certificate::WireWheel(c) => check_wire_wheel(&code, c),
                    Certificate::WheelFrame(c) => check_wheel_frame(&code, c),
                    Certificate::Decomposition(d) => {
                        find_decomposition(&code).as_ref() == Some(d)
                    }
                    Certificate::Reduction { steps } => !steps.is_empty(),
                };
            }
            let transcripts = match r.status {
                Status::Wheel | Status::Unknown => {
                    Some(wheel_report_with_stats(&code).1)
                }
                _ => None,
            };
            entries.push(DiscrepancyEntry {
                id: r.id,
                facets: r.facets.clone(),
                minimal_code: code.words().to_vec(),
                status: r.status,
                wheel_profile: r.wheel_profile,
                certificates: r.certificates.clone(),
                certificates_revalidated: revalidated,
                search_transcripts: transcripts,
            });
        }
    }
    Ok(DiscrepancyReport { mismatched_cells: mismatches, entries })
}

// ---------------------------------------------------------------------------
// Detector-side check on up to 5 neurons
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Theorem5Entry {
    pub n: u8,
    pub facets: Vec<NeuronSet>,
    pub has_local_obstruction: bool,
    pub wheel_profile: WheelProfile,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Theorem5Report {
    pub entries: Vec<Theorem5Entry>,
    /// Canonical facet lists of 5-vertex classes whose minimal code carries
    /// a wheel frame.
    pub five_vertex_frame_classes: Vec<Vec<NeuronSet>>,
    /// The above list is exactly the class of the complex with facets
    /// 2345, 123, 134, 145.
    pub frame_class_is_c_star: bool,
    /// No wheel of any kind on 4 or fewer neurons.
    pub no_wheels_up_to_four: bool,
    /// Minimal codes never have local obstructions.
    pub no_local_obstructions: bool,
}

/// Sweeps minimal codes of all connected complexes on up to 5 vertices and
/// reports, per class, the local-obstruction flag and the wheel profile.
/// The only 5-vertex class a wheel frame flags must be that of the known
/// 5-neuron counterexample.
pub fn theorem5_check() -> Result<Theorem5Report> {
    let max_facets = [0usize, 1, 2, 3, 6, 10];
    let mut entries = Vec::new();
    for n in 1..=5u8 {
        let complexes = enumerate_connected(n, 1..=max_facets[n as usize], None)?;
        let batch: Vec<Theorem5Entry> = complexes
            .par_iter()
            .map(|cx| -> Result<Theorem5Entry> {
                let code = minimal_code(cx)?;
                let (obstructed, _) = has_local_obstruction(&code)?;
                let (report, _) = wheel_report_with_stats(&code);
                Ok(Theorem5Entry {
                    n,
                    facets: cx.facets().to_vec(),
                    has_local_obstruction: obstructed,
                    wheel_profile: WheelProfile {
                        has_sprocket: report.sprocket.is_some(),
                        has_wire_wheel: report.wire_wheel.is_some(),
                        has_wheel_frame: report.wheel_frame.is_some(),
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        entries.extend(batch);
    }
    let mut five_vertex_frame_classes = Vec::new();
    for e in entries.iter().filter(|e| e.n == 5) {
        if e.wheel_profile.has_wheel_frame && !e.has_local_obstruction {
            let cx = SimplicialComplex::from_faces(5, e.facets.iter().copied())?;
            five_vertex_frame_classes.push(canonical_form(&cx)?.facets);
        }
    }
    let c_star_canon = canonical_form(&samples::c_star().neural_complex())?.facets;
    let frame_class_is_c_star = five_vertex_frame_classes.len() == 1
        && five_vertex_frame_classes[0] == c_star_canon;
    let no_wheels_up_to_four = entries
        .iter()
        .filter(|e| e.n <= 4)
        .all(|e| !e.wheel_profile.any());
    let no_local_obstructions = entries.iter().all(|e| !e.has_local_obstruction);
    Ok(Theorem5Report {
        entries,
        five_vertex_frame_classes,
        frame_class_is_c_star,
        no_wheels_up_to_four,
        no_local_obstructions,
    })
}

// ---------------------------------------------------------------------------
// Appendix cross-check
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AppendixEntry {
    pub bucket: String,
    pub code: String,
    pub found_unknown: bool,
    pub diagnosis: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AppendixReport {
    pub entries: Vec<AppendixEntry>,
    pub all_found: bool,
}

/// Verifies that each published sample "unknown" code appears, up to
/// isomorphism, among the Unknown records of the corresponding sweep.
pub fn appendix_check(
    table1_records: &[ClassificationRecord],
    table2_records: &[ClassificationRecord],
) -> Result<AppendixReport> {
    // canonical complex -> record index, per sweep
    let index = |records: &[ClassificationRecord]| -> Result<HashMap<Vec<NeuronSet>, Status>> {
        let mut map = HashMap::new();
        for r in records {
            let cx = SimplicialComplex::from_faces(r.n, r.facets.iter().copied())?;
            map.insert(canonical_form(&cx)?.facets, r.status);
        }
        Ok(map)
    };
    let t1 = index(table1_records)?;
    let t2 = index(table2_records)?;

    type Bucket<'a> = (&'a str, &'a [&'a str], &'a HashMap<Vec<NeuronSet>, Status>);
    let groups: [Bucket; 5] = [
        ("A.1 (5 maximal codewords)", &samples::UNKNOWN_5_MAX, &t1),
        ("A.2 (6 maximal codewords)", &samples::UNKNOWN_6_MAX, &t1),
        ("A.3 (7 maximal codewords)", &samples::UNKNOWN_7_MAX, &t1),
        ("B.1 (pure, dimension 2)", &samples::UNKNOWN_PURE_DIM2, &t2),
        ("B.2 (pure, dimension 3)", &samples::UNKNOWN_PURE_DIM3, &t2),
    ];

    let mut entries = Vec::new();
    for (bucket, codes, map) in groups {
        for text in codes {
            let code = crate::parse::parse_code(text, Some(6))?;
            let cx = code.neural_complex();
            let mut diagnosis = None;
            // sample lists contain minimal codes; verify before the lookup
            let mc = minimal_code(&cx)?;
            if mc != code {
                diagnosis = Some(format!(
                    "sample is not the minimal code of its complex (minimal: {mc})"
                ));
            }
            let canon = canonical_form(&cx)?.facets;
            let found_unknown = match map.get(&canon) {
                Some(Status::Unknown) => true,
                Some(other) => {
                    diagnosis.get_or_insert(format!("classified {other:?}"));
                    false
                }
                None => {
                    diagnosis.get_or_insert("complex not present in sweep".to_string());
                    false
                }
            };
            entries.push(AppendixEntry {
                bucket: bucket.to_string(),
                code: text.to_string(),
                found_unknown: found_unknown && diagnosis.is_none(),
                diagnosis,
            });
        }
    }
    let all_found = entries.iter().all(|e| e.found_unknown);
    Ok(AppendixReport { entries, all_found })
}

// ---------------------------------------------------------------------------
// JSONL persistence
// ---------------------------------------------------------------------------

pub fn write_records_jsonl<W: Write>(
    mut w: W,
    records: &[ClassificationRecord],
) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        writeln!(w)?;
    }
    Ok(())
}

pub fn read_records_jsonl<R: BufRead>(r: R) -> Result<Vec<ClassificationRecord>> {
    let mut out = Vec::new();
    for (k, line) in r.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse(format!("line {}: {e}", k + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(
            serde_json::from_str(&line)
                .map_err(|e| Error::Parse(format!("line {}: {e}", k + 1)))?,
        );
    }
    Ok(out)
}
