//! The closed-world database of rank-two symmetric varieties with Picard
//! number one (plus the rank-one list and the nesting chain of the four
//! non-homogeneous restricted-A2 cases), together with the verification
//! routines that recompute every stored invariant from first principles:
//! restricted type, colored-fan validity and completeness, lattice
//! integrality, dimension audits against the named homogeneous models, and
//! the homogeneity verdict with slice-weight certificates.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::colored_fan::{
    homogeneity_verdict, is_complete, slice_highest_weight, validate_cone, validate_fan,
    ColoredCone, ColoredFan, Verdict,
};
use crate::report::{CheckResult, EntryReport};
use crate::restricted::{
    aii_involution, cii_involution, eiv_involution, in_basis, restrict, split_involution,
    swap_involution, InvolutionData, RestrictedRootSystem,
};
use crate::root_data::{ratf, vadd, vzero, Rat, RootSystem, TypeLabel, Vect};

/// Errors raised while loading or materializing database records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DbError {
    Parse(String),
    Build(String),
}

impl std::fmt::Display for DbError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DbError::Parse(m) => write!(f, "database parse error: {}", m),
            DbError::Build(m) => write!(f, "database build error: {}", m),
        }
    }
}

impl std::error::Error for DbError {}

/// A rational linear combination of restricted coroots and restricted
/// fundamental coweights, stored as `[numerator, denominator, index]`
/// triples so the database file stays diffable.
#[derive(Clone, Debug, Serialize, Deserialize, Default)]
pub struct SymVect {
    #[serde(default)]
    pub coroots: Vec<(i64, i64, usize)>,
    #[serde(default)]
    pub coweights: Vec<(i64, i64, usize)>,
}

/// The cocharacter lattice of the generic torus orbit, either one of the
/// two standard lattices or an explicit basis of combinations.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LatticeSpec {
    Coroots,
    Coweights,
    Explicit { basis: Vec<SymVect> },
}

/// One maximal colored cone, with generators given symbolically.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConeSpec {
    pub generators: Vec<SymVect>,
    pub colors: Vec<usize>,
}

/// The involution, named by its standard construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InvolutionSpec {
    /// Maximally split involution (theta = -id on the ambient span).
    Split { ambient: Vec<String> },
    /// Factor-swap involution on a product of two copies of one group.
    Swap { factor: String },
    /// SL(2p) over a quaternionic structure: fixed subgroup Sp(2p).
    QuaternionicLinear { pairs: usize },
    /// Sp(2n) preserving a symplectic splitting 2l + (2n-2l).
    SymplecticSplitting { l: usize, n: usize },
    /// The exceptional rank-two involution of E6 with fixed subgroup F4.
    OctonionJordan,
}

/// Which subgroup between the fixed points and their normalizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Isotropy {
    Fixed,
    Normalizer,
    IndexTwo,
}

/// The homogeneous model variety (or, for the non-homogeneous cases, the
/// ambient homogeneous variety that the variety sits in as a linear
/// section), named by family and parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Model {
    /// Grassmannian of m-planes in n-space: dimension m(n-m).
    Grassmannian { m: usize, n: usize },
    /// One family of maximal isotropic n-planes in 2n-space with a
    /// symmetric form (spinor variety): dimension n(n-1)/2.
    IsotropicHalf { n: usize },
    /// Isotropic lines in n-space (a quadric): dimension n-2.
    IsotropicLine { n: usize },
    /// Lagrangian m-planes in 2m-space: dimension m(m+1)/2.
    Lagrangian { m: usize },
    /// Projective space of a d-dimensional vector space: dimension d-1.
    Projective { d: usize },
    /// Product of the projective spaces of an a- and a b-dimensional
    /// vector space: dimension a+b-2.
    ProjectiveProduct { a: usize, b: usize },
    /// A smooth quadric hypersurface in projective space of the given
    /// dimension: dimension proj_dim - 1.
    QuadricHypersurface { proj_dim: usize },
    /// A minimal flag variety G/P of an exceptional group, P the maximal
    /// parabolic at the given node (0-based in the stored numbering).
    ExceptionalFlag { group: String, node: usize },
}

impl Model {
    pub fn dim(&self) -> Result<usize, DbError> {
        Ok(match self {
            Model::Grassmannian { m, n } => {
                if m >= n {
                    return Err(DbError::Build("grassmannian needs m < n".into()));
                }
                m * (n - m)
            }
            Model::IsotropicHalf { n } => n * (n - 1) / 2,
            Model::IsotropicLine { n } => {
                if *n < 3 {
                    return Err(DbError::Build("isotropic line needs n >= 3".into()));
                }
                n - 2
            }
            Model::Lagrangian { m } => m * (m + 1) / 2,
            Model::Projective { d } => {
                if *d == 0 {
                    return Err(DbError::Build("projective space of dim 0".into()));
                }
                d - 1
            }
            Model::ProjectiveProduct { a, b } => a + b - 2,
            Model::QuadricHypersurface { proj_dim } => {
                if *proj_dim == 0 {
                    return Err(DbError::Build("quadric in a point".into()));
                }
                proj_dim - 1
            }
            Model::ExceptionalFlag { group, node } => {
                let label = parse_label(group)?;
                let rs = RootSystem::new(label);
                if *node >= rs.rank() {
                    return Err(DbError::Build(format!("node {} out of range", node)));
                }
                let levi: Vec<usize> = (0..rs.rank()).filter(|&i| i != *node).collect();
                rs.dim_flag(&levi)
            }
        })
    }

    pub fn name(&self) -> String {
        match self {
            Model::Grassmannian { m, n } => format!("Gr({},{})", m, n),
            Model::IsotropicHalf { n } => format!("Spinor({})", n),
            Model::IsotropicLine { n } => format!("IsoLines({})", n),
            Model::Lagrangian { m } => format!("Lagr({},{})", m, 2 * m),
            Model::Projective { d } => format!("P^{}", d - 1),
            Model::ProjectiveProduct { a, b } => format!("P^{}xP^{}", a - 1, b - 1),
            Model::QuadricHypersurface { proj_dim } => format!("Quadric^{}", proj_dim - 1),
            Model::ExceptionalFlag { group, node } => format!("Flag({},{})", group, node),
        }
    }
}

/// One rank-two entry of the classification.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub description: String,
    pub involution: InvolutionSpec,
    pub isotropy: Isotropy,
    pub restricted: String,
    pub lattice: LatticeSpec,
    pub fan: Vec<ConeSpec>,
    pub homogeneous: bool,
    pub model: Model,
    pub x_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_model_dim: Option<usize>,
    pub h_factors: Vec<String>,
    pub h_torus: usize,
    /// Permutation sending the internal restricted-basis index to the
    /// index used in the conventional (Bourbaki-ordered) labelling.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_basis_order: Option<Vec<usize>>,
    #[serde(default)]
    pub notes: String,
}

/// One rank-one symmetric pair with its homogeneous model.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RankOneRecord {
    pub id: String,
    pub description: String,
    pub group: Vec<String>,
    #[serde(default)]
    pub group_torus: usize,
    pub h_factors: Vec<String>,
    pub h_torus: usize,
    pub model: Model,
    pub expected_dim: usize,
}

/// The whole database.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Db {
    pub schema: String,
    pub entries: Vec<Entry>,
    pub rank_one: Vec<RankOneRecord>,
    /// Ids of the four non-homogeneous restricted-A2 entries, in the
    /// order in which each is a linear section of the next one's ambient.
    pub nesting_chain: Vec<String>,
}

pub const SCHEMA: &str = "symmetric-variety-classification/1";

const EMBEDDED: &str = include_str!("../data/classification.json");

/// The database shipped with the crate.
pub fn builtin_db() -> Result<Db, DbError> {
    parse_db(EMBEDDED)
}

pub fn parse_db(text: &str) -> Result<Db, DbError> {
    let db: Db = serde_json::from_str(text).map_err(|e| DbError::Parse(e.to_string()))?;
    if db.schema != SCHEMA {
        return Err(DbError::Parse(format!(
            "unsupported schema {:?}, expected {:?}",
            db.schema, SCHEMA
        )));
    }
    Ok(db)
}

pub fn load_db(path: &std::path::Path) -> Result<Db, DbError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| DbError::Parse(format!("{}: {}", path.display(), e)))?;
    parse_db(&text)
}

pub fn parse_label(name: &str) -> Result<TypeLabel, DbError> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let labels = parts
            .iter()
            .map(|p| parse_label(p))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(TypeLabel::Product(labels));
    }
    let bad = || DbError::Parse(format!("unknown type label {:?}", name));
    if name == "F4" {
        return Ok(TypeLabel::F4);
    }
    if name == "G2" {
        return Ok(TypeLabel::G2);
    }
    if let Some(n) = name.strip_prefix("BC") {
        return Ok(TypeLabel::BC(n.parse().map_err(|_| bad())?));
    }
    let (head, tail) = name.split_at(1);
    let n: usize = tail.parse().map_err(|_| bad())?;
    match head {
        "A" => Ok(TypeLabel::A(n)),
        "B" => Ok(TypeLabel::B(n)),
        "C" => Ok(TypeLabel::C(n)),
        "D" => Ok(TypeLabel::D(n)),
        "E" => Ok(TypeLabel::E(n)),
        _ => Err(bad()),
    }
}

/// Builds the involution described by the given constructor record.
pub fn build_involution(spec: &InvolutionSpec) -> Result<InvolutionData, DbError> {
    Ok(match spec {
        InvolutionSpec::Split { ambient } => {
            let labels = ambient
                .iter()
                .map(|s| parse_label(s))
                .collect::<Result<Vec<_>, _>>()?;
            let label = if labels.len() == 1 {
                labels.into_iter().next().unwrap()
            } else {
                TypeLabel::Product(labels)
            };
            split_involution(RootSystem::new(label))
        }
        InvolutionSpec::Swap { factor } => swap_involution(parse_label(factor)?),
        InvolutionSpec::QuaternionicLinear { pairs } => aii_involution(*pairs),
        InvolutionSpec::SymplecticSplitting { l, n } => cii_involution(*l, *n),
        InvolutionSpec::OctonionJordan => eiv_involution(),
    })
}

/// Resolves a symbolic vector against a concrete restricted root system.
pub fn resolve_vect(rrs: &RestrictedRootSystem, sv: &SymVect) -> Result<Vect, DbError> {
    let dim = rrs.basis[0].len();
    let mut v = vzero(dim);
    let coweights = rrs.fundamental_coweights();
    for &(num, den, idx) in &sv.coroots {
        if idx >= rrs.rank() || den == 0 {
            return Err(DbError::Build(format!("bad coroot term ({},{},{})", num, den, idx)));
        }
        let term: Vect = rrs
            .coroot(idx)
            .iter()
            .map(|x| ratf(num, den) * x)
            .collect();
        v = vadd(&v, &term);
    }
    for &(num, den, idx) in &sv.coweights {
        if idx >= rrs.rank() || den == 0 {
            return Err(DbError::Build(format!(
                "bad coweight term ({},{},{})",
                num, den, idx
            )));
        }
        let term: Vect = coweights[idx].iter().map(|x| ratf(num, den) * x).collect();
        v = vadd(&v, &term);
    }
    Ok(v)
}

/// Resolves the stored lattice spec to a concrete basis.
pub fn resolve_lattice(rrs: &RestrictedRootSystem, spec: &LatticeSpec) -> Result<Vec<Vect>, DbError> {
    Ok(match spec {
        LatticeSpec::Coroots => (0..rrs.rank()).map(|i| rrs.coroot(i)).collect(),
        LatticeSpec::Coweights => rrs.fundamental_coweights(),
        LatticeSpec::Explicit { basis } => basis
            .iter()
            .map(|sv| resolve_vect(rrs, sv))
            .collect::<Result<Vec<_>, _>>()?,
    })
}

/// Resolves the stored fan to concrete colored cones.
pub fn resolve_fan(rrs: &RestrictedRootSystem, spec: &[ConeSpec]) -> Result<ColoredFan, DbError> {
    let maximal = spec
        .iter()
        .map(|c| {
            Ok(ColoredCone {
                generators: c
                    .generators
                    .iter()
                    .map(|sv| resolve_vect(rrs, sv))
                    .collect::<Result<Vec<_>, _>>()?,
                colors: c.colors.clone(),
            })
        })
        .collect::<Result<Vec<_>, DbError>>()?;
    Ok(ColoredFan { maximal })
}

fn group_dim(labels: &[String]) -> Result<usize, DbError> {
    let mut d = 0;
    for name in labels {
        d += RootSystem::new(parse_label(name)?).dim_group();
    }
    Ok(d)
}

fn fmt_rat(x: &Rat) -> String {
    format!("{}", x)
}

fn fmt_coeffs(xs: &[Rat]) -> String {
    let parts: Vec<String> = xs.iter().map(fmt_rat).collect();
    format!("[{}]", parts.join(", "))
}

/// Runs every stored invariant of one entry and reports each check with a
/// certificate string.
pub fn verify_entry(entry: &Entry) -> EntryReport {
    let mut checks = Vec::new();
    let inv = match build_involution(&entry.involution) {
        Ok(inv) => inv,
        Err(e) => {
            checks.push(CheckResult::new("involution", false, e.to_string()));
            return EntryReport::from_checks(&entry.id, checks);
        }
    };
    let rrs = match restrict(&inv) {
        Ok(r) => r,
        Err(e) => {
            checks.push(CheckResult::new(
                "restricted-type",
                false,
                format!("restriction failed: {:?}", e),
            ));
            return EntryReport::from_checks(&entry.id, checks);
        }
    };

    let recomputed = rrs.label.name();
    checks.push(CheckResult::new(
        "restricted-type",
        recomputed == entry.restricted,
        format!("stored {} recomputed {} rank {}", entry.restricted, recomputed, rrs.rank()),
    ));
    if recomputed != entry.restricted {
        return EntryReport::from_checks(&entry.id, checks);
    }

    let exceptional = inv.exceptional_basis_roots();
    checks.push(CheckResult::new(
        "no-exceptional-roots",
        exceptional.is_empty(),
        format!("{} exceptional simple restricted roots", exceptional.len()),
    ));

    let fan = match resolve_fan(&rrs, &entry.fan) {
        Ok(f) => f,
        Err(e) => {
            checks.push(CheckResult::new("fan", false, e.to_string()));
            return EntryReport::from_checks(&entry.id, checks);
        }
    };

    let mut cones_ok = true;
    let mut cone_notes = Vec::new();
    for (k, cone) in fan.maximal.iter().enumerate() {
        match validate_cone(cone, &rrs) {
            Ok(true) => cone_notes.push(format!("cone {} valid", k)),
            Ok(false) => {
                cones_ok = false;
                cone_notes.push(format!("cone {} INVALID", k));
            }
            Err(e) => {
                cones_ok = false;
                cone_notes.push(format!("cone {} error: {}", k, e));
            }
        }
    }
    checks.push(CheckResult::new("cone-validity", cones_ok, cone_notes.join("; ")));

    let fan_valid = matches!(validate_fan(&fan, &rrs), Ok(true));
    checks.push(CheckResult::new(
        "fan-validity",
        fan_valid,
        format!("{} maximal cones", fan.maximal.len()),
    ));
    let complete = matches!(is_complete(&fan, &rrs), Ok(true));
    checks.push(CheckResult::new(
        "fan-completeness",
        complete,
        format!("complete: {}", complete),
    ));

    let rank = rrs.rank();
    let colors_in_range = fan
        .maximal
        .iter()
        .all(|c| c.colors.iter().all(|&i| i < rank));
    let mut used: Vec<usize> = fan.maximal.iter().flat_map(|c| c.colors.clone()).collect();
    used.sort_unstable();
    used.dedup();
    checks.push(CheckResult::new(
        "colors-count",
        colors_in_range && used.len() <= rank,
        format!("available colors {} (= rank), used {:?}", rank, used),
    ));

    match resolve_lattice(&rrs, &entry.lattice) {
        Ok(lattice) => {
            let right_size = lattice.len() == rank;
            let mut independent = true;
            for i in 0..lattice.len() {
                let rest: Vec<Vect> = lattice
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, v)| v.clone())
                    .collect();
                if in_basis(&rest, &lattice[i]).is_some() {
                    independent = false;
                }
            }
            let mut integral = true;
            let mut bad = Vec::new();
            for (k, cone) in fan.maximal.iter().enumerate() {
                for (g, gen) in cone.generators.iter().enumerate() {
                    match in_basis(&lattice, gen) {
                        Some(coords) if coords.iter().all(|x| x.is_integer()) => {}
                        Some(_) => {
                            integral = false;
                            bad.push(format!("cone {} ray {} fractional", k, g));
                        }
                        None => {
                            integral = false;
                            bad.push(format!("cone {} ray {} outside lattice span", k, g));
                        }
                    }
                }
            }
            checks.push(CheckResult::new(
                "lattice",
                right_size && independent && integral,
                if bad.is_empty() {
                    format!("basis of rank {}, all fan rays integral", lattice.len())
                } else {
                    bad.join("; ")
                },
            ));

            // slice-weight certificates for the non-homogeneous cases
            if !entry.homogeneous {
                let mut slice_ok = true;
                let mut notes = Vec::new();
                for (k, cone) in fan.maximal.iter().enumerate() {
                    match slice_highest_weight(&rrs, cone, &lattice) {
                        Ok(sw) => {
                            if sw.dominant {
                                slice_ok = false;
                            }
                            notes.push(format!(
                                "cone {}: weight {} dominant {}",
                                k,
                                fmt_coeffs(&sw.coeffs),
                                sw.dominant
                            ));
                        }
                        Err(e) => {
                            slice_ok = false;
                            notes.push(format!("cone {}: {}", k, e));
                        }
                    }
                }
                checks.push(CheckResult::new(
                    "slice-weight-non-dominant",
                    slice_ok,
                    notes.join("; "),
                ));
            }
        }
        Err(e) => checks.push(CheckResult::new("lattice", false, e.to_string())),
    }

    checks.push(dimension_audit(entry, &inv));

    let verdict = homogeneity_verdict(&rrs.label, entry.isotropy == Isotropy::Fixed);
    let expected = if entry.homogeneous {
        Verdict::Transitive
    } else {
        Verdict::NonTransitive
    };
    checks.push(CheckResult::new(
        "homogeneity",
        verdict == expected,
        format!("verdict {:?}, stored homogeneous = {}", verdict, entry.homogeneous),
    ));

    EntryReport::from_checks(&entry.id, checks)
}

/// Compares dim G - dim H with the stored variety dimension and the
/// named model's dimension.
pub fn dimension_audit(entry: &Entry, inv: &InvolutionData) -> CheckResult {
    let dim_g = inv.ambient.dim_group();
    let dim_h = match group_dim(&entry.h_factors) {
        Ok(d) => d + entry.h_torus,
        Err(e) => return CheckResult::new("dimension-audit", false, e.to_string()),
    };
    if dim_h > dim_g {
        return CheckResult::new(
            "dimension-audit",
            false,
            format!("dim H = {} exceeds dim G = {}", dim_h, dim_g),
        );
    }
    let quotient = dim_g - dim_h;
    let model_dim = match entry.model.dim() {
        Ok(d) => d,
        Err(e) => return CheckResult::new("dimension-audit", false, e.to_string()),
    };
    let mut pass = quotient == entry.x_dim;
    let mut notes = vec![format!(
        "dim G = {}, dim H = {}, dim G/H = {}, stored {}",
        dim_g, dim_h, quotient, entry.x_dim
    )];
    if entry.homogeneous {
        pass = pass && model_dim == entry.x_dim && entry.ambient_model_dim.is_none();
        notes.push(format!("model {} dim {}", entry.model.name(), model_dim));
    } else {
        let stored_ambient = entry.ambient_model_dim.unwrap_or(usize::MAX);
        pass = pass && model_dim == stored_ambient && entry.x_dim < model_dim;
        notes.push(format!(
            "ambient model {} dim {} (stored {}), section dim {}",
            entry.model.name(),
            model_dim,
            stored_ambient,
            entry.x_dim
        ));
    }
    CheckResult::new("dimension-audit", pass, notes.join("; "))
}

/// Audits one rank-one record: dim G - dim H must equal the model
/// dimension and the stored expected dimension.
pub fn verify_rank_one(rec: &RankOneRecord) -> EntryReport {
    let mut checks = Vec::new();
    let audit = (|| -> Result<CheckResult, DbError> {
        let dim_g = group_dim(&rec.group)? + rec.group_torus;
        let dim_h = group_dim(&rec.h_factors)? + rec.h_torus;
        if dim_h > dim_g {
            return Ok(CheckResult::new(
                "dimension-audit",
                false,
                format!("dim H = {} exceeds dim G = {}", dim_h, dim_g),
            ));
        }
        let quotient = dim_g - dim_h;
        let model_dim = rec.model.dim()?;
        Ok(CheckResult::new(
            "dimension-audit",
            quotient == model_dim && model_dim == rec.expected_dim,
            format!(
                "dim G/H = {}, model {} dim {}, stored {}",
                quotient,
                rec.model.name(),
                model_dim,
                rec.expected_dim
            ),
        ))
    })();
    match audit {
        Ok(c) => checks.push(c),
        Err(e) => checks.push(CheckResult::new("dimension-audit", false, e.to_string())),
    }
    EntryReport::from_checks(&rec.id, checks)
}

/// Checks the nesting chain: the listed entries exist, are exactly the
/// non-homogeneous restricted-A2 cases, and both the section dimensions
/// and the ambient-model dimensions strictly increase along the chain.
pub fn verify_nesting(db: &Db) -> EntryReport {
    let mut checks = Vec::new();
    let mut xs = Vec::new();
    let mut ambients = Vec::new();
    let mut found = true;
    for id in &db.nesting_chain {
        match db.entries.iter().find(|e| &e.id == id) {
            Some(e) => {
                xs.push(e.x_dim);
                ambients.push(e.ambient_model_dim.unwrap_or(usize::MAX));
                if e.homogeneous || e.restricted != "A2" {
                    found = false;
                }
            }
            None => found = false,
        }
    }
    checks.push(CheckResult::new(
        "chain-members",
        found && xs.len() == 4,
        format!("{} members, all non-homogeneous A2: {}", xs.len(), found),
    ));
    let inc = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    checks.push(CheckResult::new(
        "chain-dimensions-increase",
        inc(&xs) && inc(&ambients),
        format!("section dims {:?}, ambient dims {:?}", xs, ambients),
    ));
    let a2_or_g2_fixed: Vec<&str> = db
        .entries
        .iter()
        .filter(|e| !e.homogeneous)
        .map(|e| e.id.as_str())
        .collect();
    let all_expected = db
        .entries
        .iter()
        .filter(|e| !e.homogeneous)
        .all(|e| e.isotropy == Isotropy::Fixed && (e.restricted == "A2" || e.restricted == "G2"));
    checks.push(CheckResult::new(
        "non-homogeneous-set",
        a2_or_g2_fixed.len() == 6 && all_expected,
        format!("non-homogeneous entries: {:?}", a2_or_g2_fixed),
    ));
    EntryReport::from_checks("nesting-chain", checks)
}

/// A deliberately corrupted entry together with the name of the check it
/// must fail.
#[derive(Clone, Debug)]
pub struct NegativeControl {
    pub label: String,
    pub entry: Entry,
    pub expect_failed_check: String,
}

/// One corrupted entry per failure class, derived from real entries.
pub fn negative_controls(db: &Db) -> Result<Vec<NegativeControl>, DbError> {
    let get = |id: &str| -> Result<Entry, DbError> {
        db.entries
            .iter()
            .find(|e| e.id == id)
            .cloned()
            .ok_or_else(|| DbError::Build(format!("missing entry {}", id)))
    };
    let mut out = Vec::new();

    // a colored cone whose color has been dropped is no longer generated
    // by colors and valuation-cone vectors
    let mut e = get("a2.normalizer")?;
    e.fan[0].colors.clear();
    out.push(NegativeControl {
        label: "color-removed".into(),
        entry: e,
        expect_failed_check: "cone-validity".into(),
    });

    // a wrong stored restricted type must be caught by recomputation
    let mut e = get("b2.normalizer")?;
    e.restricted = "C2".into();
    out.push(NegativeControl {
        label: "wrong-restricted-type".into(),
        entry: e,
        expect_failed_check: "restricted-type".into(),
    });

    // a wrong model parameter must be caught by the dimension audit
    let mut e = get("b2.normalizer")?;
    e.model = Model::Grassmannian { m: 2, n: 6 };
    out.push(NegativeControl {
        label: "wrong-model-dimension".into(),
        entry: e,
        expect_failed_check: "dimension-audit".into(),
    });

    // the plain coroot lattice is too coarse for the index-two case: the
    // antidominant ray is a half-integral coroot combination
    let mut e = get("a1xa1")?;
    e.lattice = LatticeSpec::Coroots;
    out.push(NegativeControl {
        label: "lattice-too-coarse".into(),
        entry: e,
        expect_failed_check: "lattice".into(),
    });

    // dropping one of the two maximal cones leaves the fan incomplete
    let mut e = get("a1xa1")?;
    e.fan.truncate(1);
    out.push(NegativeControl {
        label: "fan-incomplete".into(),
        entry: e,
        expect_failed_check: "fan-completeness".into(),
    });

    // claiming homogeneity for a restricted-G2 fixed-point case must be
    // caught by the verdict
    let mut e = get("g2.split")?;
    e.homogeneous = true;
    e.ambient_model_dim = None;
    e.x_dim = 12;
    out.push(NegativeControl {
        label: "homogeneity-flag-flipped".into(),
        entry: e,
        expect_failed_check: "homogeneity".into(),
    });

    Ok(out)
}

/// Convenience wrapper: the slice weight of a single-cone entry, used by
/// the homogeneity certificates.
pub fn entry_slice_coeffs(entry: &Entry, cone_index: usize) -> Result<Vec<Rat>, DbError> {
    let inv = build_involution(&entry.involution)?;
    let rrs = restrict(&inv).map_err(|e| DbError::Build(format!("{:?}", e)))?;
    let lattice = resolve_lattice(&rrs, &entry.lattice)?;
    let fan = resolve_fan(&rrs, &entry.fan)?;
    let cone = fan
        .maximal
        .get(cone_index)
        .ok_or_else(|| DbError::Build("cone index out of range".into()))?;
    let sw = slice_highest_weight(&rrs, cone, &lattice)
        .map_err(|e| DbError::Build(e.to_string()))?;
    Ok(sw.coeffs)
}

/// Applies the stored printed-order permutation to slice-weight
/// coefficients, giving the coefficients in conventional labelling.
pub fn printed_coeffs(entry: &Entry, coeffs: &[Rat]) -> Vec<Rat> {
    match &entry.printed_basis_order {
        None => coeffs.to_vec(),
        Some(perm) => {
            let mut out = vec![Rat::zero(); coeffs.len()];
            for (internal, &printed) in perm.iter().enumerate() {
                out[printed] = coeffs[internal].clone();
            }
            out
        }
    }
}
