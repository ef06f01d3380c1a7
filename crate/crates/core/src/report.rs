//! The end-to-end pipelines behind the command line: `analyze` builds an
//! [`AnalysisReport`], `verify` runs every executable property and returns a
//! [`VerifyReport`]. Both are deterministic for a given input and options.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::{groupoid_expand, AlgebraElement, Decomposition};
use crate::conjugacy::{counterexample_check, ConjugacyAnalysis, ConjugacyClass, InvariantCheck};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::fixtures::GeneratorFile;
use crate::irreps::{all_irreps, IrrepSet, SuppliedReps};
use crate::semigroup::{
    normalize_labels, ElementId, GenerateOptions, GreenStructure, SemigroupTable,
    DEFAULT_ELEMENT_CAP,
};

/// Above this size the lift multiplicativity check uses the generator
/// certificate instead of all pairs.
const ALL_PAIRS_LIMIT: usize = 128;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum FieldChoice {
    #[default]
    Rationals,
    Prime(PrimeField),
}

impl FieldChoice {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldChoice::Rationals => 0,
            FieldChoice::Prime(f) => f.modulus(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            FieldChoice::Rationals => "q".into(),
            FieldChoice::Prime(f) => format!("fp:{}", f.modulus()),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    /// `q` or `fp:P`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(FieldChoice::Rationals),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::Input(format!("field must be `q` or `fp:P`, got `{s}`"))
                    })?;
                Ok(FieldChoice::Prime(PrimeField::new(p)?))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub field: FieldChoice,
    pub reps: Option<SuppliedReps>,
    pub cap: usize,
    /// Echoed into the report when the input carries no seed of its own.
    pub seed: Option<u64>,
    pub skip_reps: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            field: FieldChoice::Rationals,
            reps: None,
            cap: DEFAULT_ELEMENT_CAP,
            seed: None,
            skip_reps: false,
        }
    }
}

/// A parsed generator file together with the SHA-256 of its bytes.
#[derive(Clone, Debug)]
pub struct Input {
    pub file: GeneratorFile,
    pub digest: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Input {
    pub fn read(path: &Path) -> Result<Self> {
        let bytes =
            std::fs::read(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| Error::Input(format!("{} is not UTF-8", path.display())))?;
        Ok(Self {
            file: GeneratorFile::from_json(&text)?,
            digest: sha256_hex(&bytes),
        })
    }

    /// Digest taken over the canonical serialization.
    pub fn from_file(file: GeneratorFile) -> Self {
        let digest = sha256_hex(file.to_json().as_bytes());
        Self { file, digest }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputSummary {
    pub name: Option<String>,
    pub sha256: String,
    pub degree: usize,
    pub generators: usize,
    pub seed: Option<u64>,
    pub field: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectingWitness {
    pub idempotent: ElementId,
    pub element: ElementId,
}

#[derive(Clone, Debug, Serialize)]
pub struct DClassSummary {
    pub rank: usize,
    pub lambda: ElementId,
    pub lambda_literal: String,
    pub size: usize,
    /// `n_e`.
    pub idempotents: usize,
    /// `|G(e)|`.
    pub group_order: usize,
    /// Minimal connecting element from each idempotent of the class to Λ.
    pub connecting: Vec<ConnectingWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableSummary {
    pub size: usize,
    pub degree: usize,
    pub idempotents: usize,
    pub h_classes: usize,
    pub identity: Option<ElementId>,
    pub lambda: Vec<ElementId>,
    pub d_classes: Vec<DClassSummary>,
    /// Element literals by id, undefined points written `-`.
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacySection {
    pub counts: BTreeMap<&'static str, usize>,
    /// `#cc(G(e))` for each D-class.
    pub group_class_counts: Vec<usize>,
    pub classes: Vec<ConjugacyClass>,
    pub invariants: Vec<InvariantCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockSummary {
    pub lambda: ElementId,
    pub size: usize,
    pub group_order: usize,
    pub dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionSummary {
    pub blocks: Vec<BlockSummary>,
    pub total_dimension: usize,
    pub matches_size: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftSummary {
    pub lambda: ElementId,
    pub d_class: usize,
    pub rep_degree: usize,
    pub degree: usize,
    pub source: &'static str,
    pub commutant_dimension: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepStatus {
    Computed,
    Skipped,
    Unavailable,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationSection {
    pub status: RepStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub field: String,
    pub lifts: Vec<LiftSummary>,
    pub degrees: Vec<usize>,
    pub intertwiner_dimensions: Vec<Vec<usize>>,
    pub all_irreducible: bool,
    pub pairwise_inequivalent: bool,
    pub multiplicativity_failure: Option<String>,
    pub degree_square_sum: usize,
    pub degree_identity: bool,
    pub certified_lifts: usize,
}

impl RepresentationSection {
    fn empty(status: RepStatus, reason: String, field: String) -> Self {
        Self {
            status,
            reason: Some(reason),
            field,
            lifts: Vec::new(),
            degrees: Vec::new(),
            intertwiner_dimensions: Vec::new(),
            all_irreducible: false,
            pairwise_inequivalent: false,
            multiplicativity_failure: None,
            degree_square_sum: 0,
            degree_identity: false,
            certified_lifts: 0,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub irreducible_lifts: Option<usize>,
    pub conjugacy_classes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub input: InputSummary,
    pub table: TableSummary,
    pub conjugacy: ConjugacySection,
    pub decomposition: DecompositionSummary,
    pub representations: RepresentationSection,
    pub verdict: Verdict,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// Human-readable digest of the report.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let name = self.input.name.as_deref().unwrap_or("input");
        let _ = writeln!(s, "{name}: sha256 {}", &self.input.sha256[..16]);
        let t = &self.table;
        let _ = writeln!(
            s,
            "|S| = {}, degree {}, {} idempotents, {} D-classes",
            t.size,
            t.degree,
            t.idempotents,
            t.d_classes.len()
        );
        for (i, d) in t.d_classes.iter().enumerate() {
            let _ = writeln!(
                s,
                "  D{i}: rank {}, n_e = {}, |G(e)| = {}, Λ = {} {}",
                d.rank, d.idempotents, d.group_order, d.lambda, d.lambda_literal
            );
        }
        let c = &self.conjugacy.counts;
        let _ = write!(
            s,
            "S-conjugacy classes: {} (brute force {}, structural {})",
            c["structural"], c["bruteforce"], c["structural"]
        );
        match c.get("g_conjugacy") {
            Some(g) => {
                let _ = writeln!(s, ", G-conjugacy classes: {g}");
            }
            None => s.push('\n'),
        }
        let inv = &self.conjugacy.invariants;
        let passed = inv.iter().filter(|i| i.passed).count();
        let _ = writeln!(s, "conjugacy invariants: {passed}/{} pass", inv.len());
        for i in inv.iter().filter(|i| !i.passed) {
            let _ = writeln!(s, "  FAIL {}: {}", i.name, i.detail);
        }
        let r = &self.representations;
        match r.status {
            RepStatus::Computed => {
                let _ = writeln!(
                    s,
                    "representations over {}: {} lifts, degrees {:?}, Σ deg² = {}",
                    r.field,
                    r.lifts.len(),
                    r.degrees,
                    r.degree_square_sum
                );
            }
            _ => {
                let _ = writeln!(
                    s,
                    "representations: {}",
                    r.reason.as_deref().unwrap_or("not computed")
                );
            }
        }
        let v = &self.verdict;
        let lifts = v
            .irreducible_lifts
            .map_or("?".to_string(), |n| n.to_string());
        let status = match v.status {
            VerdictStatus::Pass => "PASS",
            VerdictStatus::Fail => "FAIL",
            VerdictStatus::Undetermined => "UNDETERMINED",
        };
        let _ = writeln!(
            s,
            "verdict: {status} ({lifts} irreducible lifts, {} conjugacy classes)",
            v.conjugacy_classes
        );
        s
    }
}

/// Tables and Green structure shared by both pipelines.
fn prepare(input: &Input, options: &Options) -> Result<(SemigroupTable, GreenStructure)> {
    let generate = GenerateOptions {
        cap: options.cap,
        ..Default::default()
    };
    let table = input.file.table_with(&generate)?;
    table.require_inverse()?;
    let green = GreenStructure::new(&table)?;
    Ok((table, green))
}

fn input_summary(input: &Input, options: &Options) -> InputSummary {
    InputSummary {
        name: input.file.name.clone(),
        sha256: input.digest.clone(),
        degree: input.file.degree,
        generators: input.file.generators.len(),
        seed: input.file.seed.or(options.seed),
        field: options.field.label(),
    }
}

fn table_summary(table: &SemigroupTable, green: &GreenStructure) -> Result<TableSummary> {
    let d_classes = green
        .d_classes()
        .iter()
        .map(|d| {
            let connecting = d
                .idempotents
                .iter()
                .map(|&f| {
                    Ok(ConnectingWitness {
                        idempotent: f,
                        element: green.connecting_element(table, f, d.lambda)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(DClassSummary {
                rank: d.rank,
                lambda: d.lambda,
                lambda_literal: table.element(d.lambda).to_string(),
                size: d.members.len(),
                idempotents: d.idempotent_count(),
                group_order: d.group_order,
                connecting,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TableSummary {
        size: table.len(),
        degree: table.degree(),
        idempotents: table.idempotent_ids().len(),
        h_classes: green.h_class_count(),
        identity: table.identity(),
        lambda: green.lambda(),
        d_classes,
        elements: table.elements().iter().map(ToString::to_string).collect(),
    })
}

fn decomposition_summary(
    table: &SemigroupTable,
    decomposition: &Decomposition<'_>,
) -> DecompositionSummary {
    let total = decomposition.total_dimension();
    DecompositionSummary {
        blocks: decomposition
            .blocks()
            .iter()
            .map(|b| BlockSummary {
                lambda: b.lambda,
                size: b.size(),
                group_order: b.group.order(),
                dimension: b.dimension(),
            })
            .collect(),
        total_dimension: total,
        matches_size: total == table.len(),
    }
}

fn summarize_irreps<F: Field>(
    field: &F,
    label: String,
    table: &SemigroupTable,
    green: &GreenStructure,
    set: &IrrepSet<F::Elem>,
) -> RepresentationSection {
    let _ = field;
    let lifts: Vec<LiftSummary> = set
        .lifts
        .iter()
        .zip(&set.builtin)
        .zip(&set.commutant_dimensions)
        .map(|((l, &builtin), &c)| LiftSummary {
            lambda: l.lambda,
            d_class: green.d_class_of(l.lambda),
            rep_degree: l.rep_degree,
            degree: l.degree,
            source: if builtin { "builtin" } else { "supplied" },
            commutant_dimension: c,
        })
        .collect();
    let mut degrees = set.degrees();
    degrees.sort_unstable();
    RepresentationSection {
        status: RepStatus::Computed,
        reason: None,
        field: label,
        lifts,
        degrees,
        intertwiner_dimensions: set.intertwiner_dimensions.clone(),
        all_irreducible: set.all_irreducible(),
        pairwise_inequivalent: set.pairwise_inequivalent(),
        multiplicativity_failure: set
            .multiplicativity_failure
            .map(|(i, a, g)| format!("lift {i}: ρ*({a}·{g}) ≠ ρ*({a})ρ*({g})")),
        degree_square_sum: set.degree_square_sum(),
        degree_identity: set.degree_square_sum() == table.len(),
        certified_lifts: set.certified_count(),
    }
}

/// Runs `all_irreps` over the chosen field. Unsupported groups are
/// reported, not raised; guard and validation failures propagate.
fn with_irreps<R>(
    options: &Options,
    decomposition: &Decomposition<'_>,
    green: &GreenStructure,
    on_set: impl FnOnce(&dyn IrrepView) -> R,
) -> Result<std::result::Result<R, String>> {
    fn run<F: Field, R>(
        field: &F,
        options: &Options,
        decomposition: &Decomposition<'_>,
        green: &GreenStructure,
        on_set: impl FnOnce(&dyn IrrepView) -> R,
    ) -> Result<std::result::Result<R, String>> {
        match all_irreps(field, decomposition, green, options.reps.as_ref()) {
            Ok(set) => {
                let view = Typed {
                    field,
                    label: options.field.label(),
                    decomposition,
                    green,
                    set,
                };
                Ok(Ok(on_set(&view)))
            }
            Err(Error::Unsupported(msg)) => Ok(Err(msg)),
            Err(e) => Err(e),
        }
    }
    match options.field {
        FieldChoice::Rationals => run(&Rationals, options, decomposition, green, on_set),
        FieldChoice::Prime(f) => run(&f, options, decomposition, green, on_set),
    }
}

/// Field-erased access to a computed [`IrrepSet`].
trait IrrepView {
    fn section(&self) -> RepresentationSection;
    /// Multiplicativity over every pair of `S`, or the generator
    /// certificate for large tables.
    fn multiplicativity_detail(&self) -> Option<String>;
    /// A lift that is nonzero on an element with nothing of its D-class
    /// below it, as `(lift, element)`.
    fn support_failure(&self) -> Option<(usize, ElementId)>;
    fn set_summary(&self) -> (usize, bool, bool, usize);
}

struct Typed<'a, 'd, F: Field> {
    field: &'a F,
    label: String,
    decomposition: &'a Decomposition<'d>,
    green: &'a GreenStructure,
    set: IrrepSet<F::Elem>,
}

impl<F: Field> IrrepView for Typed<'_, '_, F> {
    fn section(&self) -> RepresentationSection {
        summarize_irreps(
            self.field,
            self.label.clone(),
            self.decomposition.table(),
            self.green,
            &self.set,
        )
    }

    fn multiplicativity_detail(&self) -> Option<String> {
        let table = self.decomposition.table();
        self.set.lifts.iter().enumerate().find_map(|(i, l)| {
            let failure = if table.len() <= ALL_PAIRS_LIMIT {
                l.multiplicativity_failure_all_pairs(self.field, table)
            } else {
                l.multiplicativity_failure(self.field, table)
            };
            failure.map(|(a, b)| format!("lift {i}: ρ*({a}·{b}) ≠ ρ*({a})ρ*({b})"))
        })
    }

    fn support_failure(&self) -> Option<(usize, ElementId)> {
        let table = self.decomposition.table();
        self.set.lifts.iter().enumerate().find_map(|(i, l)| {
            let k = self.green.d_class_of(l.lambda);
            table.ids().find_map(|a| {
                let reaches = table
                    .down_set(a)
                    .iter()
                    .any(|&b| self.green.d_class_of(b) == k);
                (!reaches && !l.image(a).is_zero(self.field)).then_some((i, a))
            })
        })
    }

    fn set_summary(&self) -> (usize, bool, bool, usize) {
        (
            self.set.lifts.len(),
            self.set.all_irreducible(),
            self.set.pairwise_inequivalent(),
            self.set.degree_square_sum(),
        )
    }
}

pub fn analyze(input: &Input, options: &Options) -> Result<AnalysisReport> {
    let (table, green) = prepare(input, options)?;
    let analysis = ConjugacyAnalysis::new(&table, &green);
    let decomposition = Decomposition::new(&table, &green)?;
    let class_count = analysis.structural.len();

    let representations = if options.skip_reps {
        RepresentationSection::empty(
            RepStatus::Skipped,
            "skipped on request".into(),
            options.field.label(),
        )
    } else {
        match with_irreps(options, &decomposition, &green, |v| v.section())? {
            Ok(section) => section,
            Err(msg) => {
                RepresentationSection::empty(RepStatus::Unavailable, msg, options.field.label())
            }
        }
    };

    let verdict = Verdict {
        status: match representations.status {
            RepStatus::Computed if representations.certified_lifts == class_count => {
                VerdictStatus::Pass
            }
            RepStatus::Computed => VerdictStatus::Fail,
            _ => VerdictStatus::Undetermined,
        },
        irreducible_lifts: (representations.status == RepStatus::Computed)
            .then_some(representations.certified_lifts),
        conjugacy_classes: class_count,
    };

    Ok(AnalysisReport {
        input: input_summary(input, options),
        table: table_summary(&table, &green)?,
        conjugacy: ConjugacySection {
            counts: analysis.counts(),
            group_class_counts: analysis.group_class_counts.clone(),
            classes: analysis.structural.classes.clone(),
            invariants: analysis.invariants(),
        },
        decomposition: decomposition_summary(&table, &decomposition),
        representations,
        verdict,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SkippedCheck {
    pub name: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub input: InputSummary,
    pub size: usize,
    pub checks: Vec<InvariantCheck>,
    pub skipped: Vec<SkippedCheck>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let name = self.input.name.as_deref().unwrap_or("input");
        let _ = writeln!(s, "{name}: |S| = {}", self.size);
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "  {mark} {}: {}", c.name, c.detail);
        }
        for k in &self.skipped {
            let _ = writeln!(s, "  SKIP {}: {}", k.name, k.reason);
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(
            s,
            "{passed}/{} checks pass{}",
            self.checks.len(),
            if self.passed { "" } else { " (FAILED)" }
        );
        s
    }
}

fn d_oracle_check(table: &SemigroupTable, green: &GreenStructure) -> InvariantCheck {
    let ours = normalize_labels(green.d_labels());
    let oracle = normalize_labels(&table.d_labels_by_ideals());
    let failure = table
        .ids()
        .find(|a| ours[a.index()] != oracle[a.index()])
        .map(|a| format!("{a} is placed differently by the principal-ideal oracle"));
    InvariantCheck::new(
        "d_classes_match_ideal_oracle",
        failure,
        format!("{} D-classes", green.d_classes().len()),
    )
}

fn green_checks(table: &SemigroupTable, green: &GreenStructure) -> Vec<InvariantCheck> {
    let mut out = Vec::new();

    let mut failure = None;
    for (k, d) in green.d_classes().iter().enumerate() {
        if !table.is_idempotent(d.lambda) || green.d_class_of(d.lambda) != k {
            failure = Some(format!(
                "Λ member {} of D{k} is not an idempotent of that class",
                d.lambda
            ));
            break;
        }
    }
    out.push(InvariantCheck::new(
        "lambda_is_a_transversal",
        failure,
        format!("|Λ| = {}", green.d_classes().len()),
    ));

    let failure = table.ids().find_map(|a| {
        table.ids().find_map(|b| {
            (green.h_related(table, a, b) && green.d_class_of(a) != green.d_class_of(b))
                .then(|| format!("{a} H {b} but not D-related"))
        })
    });
    out.push(InvariantCheck::new(
        "h_refines_d",
        failure,
        format!("{} H-classes", green.h_class_count()),
    ));

    // σ_t: G(f) → G(e) is a bijective homomorphism for each connecting t.
    let mut failure = None;
    let mut maps = 0;
    'classes: for d in green.d_classes() {
        let Ok(target) = green.maximal_subgroup(table, d.lambda) else {
            failure = Some(format!("G({}) is not a group", d.lambda));
            break;
        };
        for &f in &d.idempotents {
            let source = match green.maximal_subgroup(table, f) {
                Ok(g) => g,
                Err(e) => {
                    failure = Some(e.to_string());
                    break 'classes;
                }
            };
            let t = match green.connecting_element(table, f, d.lambda) {
                Ok(t) => t,
                Err(e) => {
                    failure = Some(e.to_string());
                    break 'classes;
                }
            };
            let image: Vec<ElementId> = source
                .members()
                .iter()
                .map(|&x| table.sigma_t(t, x))
                .collect::<Result<_>>()
                .unwrap_or_default();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            if sorted != target.members() {
                failure = Some(format!("σ_{t} does not map G({f}) onto G({})", d.lambda));
                break 'classes;
            }
            for (i, &x) in source.members().iter().enumerate() {
                for (j, &y) in source.members().iter().enumerate() {
                    let xy = source.position(source.product(x, y)).expect("closed");
                    if image[xy] != target.product(image[i], image[j]) {
                        failure = Some(format!("σ_{t} is not multiplicative on {x}, {y}"));
                        break 'classes;
                    }
                }
            }
            maps += 1;
        }
    }
    out.push(InvariantCheck::new(
        "sigma_t_is_group_isomorphism",
        failure,
        format!("{maps} connecting maps"),
    ));
    out
}

fn mobius_checks(table: &SemigroupTable) -> Vec<InvariantCheck> {
    let q = Rationals;
    let mut inversion_failure = None;
    let mut closed_failure = None;
    let mut boolean_pairs = 0usize;
    let mut other_pairs = 0usize;
    for a in table.ids() {
        let down = table.down_set(a);
        if inversion_failure.is_none() {
            let mut sum = AlgebraElement::zero();
            for &b in &down {
                sum = sum.add(&q, &groupoid_expand(&q, table, b));
            }
            if sum != AlgebraElement::basis(&q, a) {
                inversion_failure = Some(format!("Σ_{{b ≤ {a}}} ⌊b⌋ ≠ {a}"));
            }
        }
        for (b, mu) in table.mobius_column(a) {
            let interval = down.iter().filter(|&&c| table.natural_leq(b, c)).count();
            let diff = table.rank(a) - table.rank(b);
            if interval != 1 << diff {
                other_pairs += 1;
                continue;
            }
            boolean_pairs += 1;
            let expected = if diff.is_multiple_of(2) { 1 } else { -1 };
            if mu != expected && closed_failure.is_none() {
                closed_failure = Some(format!("μ({b}, {a}) = {mu}, expected {expected}"));
            }
        }
    }
    vec![
        InvariantCheck::new(
            "mobius_inversion",
            inversion_failure,
            format!("{} elements", table.len()),
        ),
        InvariantCheck::new(
            "mobius_closed_form_on_boolean_intervals",
            closed_failure,
            format!("{boolean_pairs} Boolean intervals, {other_pairs} others"),
        ),
    ]
}

fn is_full_rook_three(table: &SemigroupTable) -> bool {
    table.degree() == 3 && table.len() == 34
}

pub fn verify(input: &Input, options: &Options) -> Result<VerifyReport> {
    let (table, green) = prepare(input, options)?;
    let analysis = ConjugacyAnalysis::new(&table, &green);
    let decomposition = Decomposition::new(&table, &green)?;
    let mut checks = vec![
        InvariantCheck::new(
            "inverse_semigroup",
            None,
            "every element has a unique inverse",
        ),
        d_oracle_check(&table, &green),
    ];
    checks.extend(green_checks(&table, &green));
    checks.extend(mobius_checks(&table));
    checks.extend(analysis.invariants());

    let mut skipped = Vec::new();
    if is_full_rook_three(&table) {
        let r = counterexample_check(&table)?;
        let failure = (!r.passed).then(|| format!("{r:?}"));
        checks.push(InvariantCheck::new(
            "counterexample_check",
            failure,
            format!("conjugate {} lies outside the class", r.conjugate),
        ));
    } else {
        skipped.push(SkippedCheck {
            name: "counterexample_check".into(),
            reason: "only defined for the rook monoid of degree 3".into(),
        });
    }

    let total = decomposition.total_dimension();
    checks.push(InvariantCheck::new(
        "decomposition_dimension_audit",
        (total != table.len()).then(|| format!("Σ n_e²|G(e)| = {total} ≠ |S| = {}", table.len())),
        format!("Σ n_e²|G(e)| = {total}"),
    ));
    checks.push(InvariantCheck::new(
        "psi_homomorphism",
        decomposition
            .homomorphism_failure()
            .map(|(e, a, b)| format!("ψ_{e}({a}·{b}) ≠ ψ_{e}({a})ψ_{e}({b})")),
        format!("{} basis pairs per block", table.len() * table.len()),
    ));
    let rank = decomposition.direct_sum_rank();
    checks.push(InvariantCheck::new(
        "psi_direct_sum_injective",
        (rank != table.len()).then(|| format!("rank {rank} < |S| = {}", table.len())),
        format!("rank {rank}"),
    ));

    let class_count = analysis.structural.len();
    if options.skip_reps {
        skipped.push(SkippedCheck {
            name: "representations".into(),
            reason: "skipped on request".into(),
        });
    } else {
        let outcome = with_irreps(options, &decomposition, &green, |v| {
            let (count, irreducible, inequivalent, squares) = v.set_summary();
            let multiplicative = v.multiplicativity_detail();
            let support = v.support_failure();
            vec![
                InvariantCheck::new(
                    "lift_multiplicativity",
                    multiplicative,
                    if table.len() <= ALL_PAIRS_LIMIT {
                        "all pairs"
                    } else {
                        "all a × generators"
                    },
                ),
                InvariantCheck::new(
                    "lift_vanishes_below_its_class",
                    support.map(|(i, a)| format!("lift {i} is nonzero on {a}")),
                    format!("{count} lifts"),
                ),
                InvariantCheck::new(
                    "lifts_irreducible",
                    (!irreducible).then(|| "some commutant dimension exceeds 1".to_string()),
                    "commutant dimension 1 for every lift",
                ),
                InvariantCheck::new(
                    "lifts_pairwise_inequivalent",
                    (!inequivalent).then(|| "a nonzero intertwiner exists".to_string()),
                    "intertwiner dimension 0 for every pair",
                ),
                InvariantCheck::new(
                    "degree_identity",
                    (squares != table.len())
                        .then(|| format!("Σ deg² = {squares} ≠ |S| = {}", table.len())),
                    format!("Σ deg² = {squares}"),
                ),
                InvariantCheck::new(
                    "bijection_lifts_equal_classes",
                    (count != class_count || !irreducible || !inequivalent)
                        .then(|| format!("{count} lifts vs {class_count} classes")),
                    format!("{count} = {class_count}"),
                ),
            ]
        })?;
        match outcome {
            Ok(rep_checks) => checks.extend(rep_checks),
            Err(reason) => skipped.push(SkippedCheck {
                name: "representations".into(),
                reason,
            }),
        }
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        input: input_summary(input, options),
        size: table.len(),
        checks,
        skipped,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn run(file: GeneratorFile) -> AnalysisReport {
        analyze(&Input::from_file(file), &Options::default()).unwrap()
    }

    #[test]
    fn field_choice_parses() {
        assert_eq!("q".parse::<FieldChoice>().unwrap(), FieldChoice::Rationals);
        assert_eq!("fp:5".parse::<FieldChoice>().unwrap().characteristic(), 5);
        assert!("fp:6".parse::<FieldChoice>().is_err());
        assert!("r".parse::<FieldChoice>().is_err());
    }

    #[test]
    fn rook_three_and_two_verdicts() {
        let r3 = run(fixtures::rook(3));
        assert_eq!(r3.verdict.status, VerdictStatus::Pass);
        assert_eq!(r3.verdict.irreducible_lifts, Some(7));
        assert_eq!(r3.representations.degrees, vec![1, 1, 1, 2, 3, 3, 3]);
        let r2 = run(fixtures::rook(2));
        assert_eq!(r2.verdict.status, VerdictStatus::Pass);
        assert_eq!(r2.verdict.conjugacy_classes, 4);
    }

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(
            run(fixtures::rook(3)).to_json(),
            run(fixtures::rook(3)).to_json()
        );
    }

    #[test]
    fn non_inverse_input_is_refused() {
        let mut file = fixtures::chain(3);
        file.close_under_inverse = false;
        let err = analyze(&Input::from_file(file), &Options::default()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("not an inverse semigroup"));
    }

    #[test]
    fn guard_refuses_dividing_characteristic() {
        let options = Options {
            field: "fp:2".parse().unwrap(),
            ..Default::default()
        };
        let err = analyze(&Input::from_file(fixtures::rook(3)), &options).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn verify_rook_three() {
        let report = verify(&Input::from_file(fixtures::rook(3)), &Options::default()).unwrap();
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "counterexample_check"));
    }
}
