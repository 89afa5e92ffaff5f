//! Symbolic catalog of classical Z-modules that finite instances cannot
//! exhibit: Z itself, the rationals Q, the Prufer p-groups, and finitely
//! generated abelian groups given by rank and a divisor chain.
//!
//! The catalog is a closed enumeration, not a general infinite-module
//! framework. Each entry evaluates the invariants that are decidable from
//! its classification and carries attested facts with a source tag; a value
//! is `Unknown` only where the classification genuinely does not decide it,
//! and such entries stay tagged `Disputed` rather than being resolved one
//! way or the other.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceTag {
    /// Asserted by the literature the entry encodes, not re-derived here.
    Attested,
    /// Derived by the catalog's own computation.
    Derived,
    /// Attested but not derivable in this representation; value stays
    /// unknown.
    Disputed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictValue {
    Finite(u64),
    Infinite,
    Unknown,
    Yes,
    No,
}

impl fmt::Display for VerdictValue {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictValue::Finite(v) => write!(out, "{v}"),
            VerdictValue::Infinite => write!(out, "infinite"),
            VerdictValue::Unknown => write!(out, "unknown"),
            VerdictValue::Yes => write!(out, "yes"),
            VerdictValue::No => write!(out, "no"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicVerdict {
    pub property: String,
    pub value: VerdictValue,
    pub justification: String,
    pub source: SourceTag,
}

impl SymbolicVerdict {
    fn derived(property: &str, value: VerdictValue, justification: impl Into<String>) -> Self {
        SymbolicVerdict {
            property: property.to_string(),
            value,
            justification: justification.into(),
            source: SourceTag::Derived,
        }
    }
}

/// The closed set of symbolic Z-module kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ZModuleKind {
    /// `Z^rank (+) Z_{d_1} (+) ... (+) Z_{d_k}` with `d_1 | d_2 | ... | d_k`.
    FgAbelian { rank: u32, torsion: Vec<u64> },
    /// The p-primary divisible group with chain submodule lattice.
    Prufer { p: u64 },
    /// Q as a Z-module.
    Rationals,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicZModule {
    pub kind: ZModuleKind,
    pub name: String,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("torsion divisors must form a divisibility chain d1 | d2 | ...")]
    NotAChain,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad integer in catalog name: {0}")]
    BadNumber(String),
}

impl SymbolicZModule {
    pub fn fg_abelian(rank: u32, torsion: Vec<u64>) -> Result<Self, CatalogError> {
        for w in torsion.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(CatalogError::NotAChain);
            }
        }
        if torsion.iter().any(|&d| d < 2) {
            return Err(CatalogError::NotAChain);
        }
        let name = if rank == 1 && torsion.is_empty() {
            "Z".to_string()
        } else {
            let parts: Vec<String> = torsion.iter().map(|d| d.to_string()).collect();
            format!("FgAb:{rank},{}", parts.join(","))
        };
        Ok(SymbolicZModule {
            kind: ZModuleKind::FgAbelian { rank, torsion },
            name,
        })
    }

    pub fn integers() -> Self {
        SymbolicZModule {
            kind: ZModuleKind::FgAbelian {
                rank: 1,
                torsion: vec![],
            },
            name: "Z".to_string(),
        }
    }

    pub fn prufer(p: u64) -> Result<Self, CatalogError> {
        if !is_prime_u64(p) {
            return Err(CatalogError::NotPrime(p));
        }
        Ok(SymbolicZModule {
            kind: ZModuleKind::Prufer { p },
            name: format!("Prufer:{p}"),
        })
    }

    pub fn rationals() -> Self {
        SymbolicZModule {
            kind: ZModuleKind::Rationals,
            name: "Q".to_string(),
        }
    }

    /// Parse a CLI name: `Z`, `Q`, `Prufer:p`, or `FgAb:r,d1,d2,...`.
    pub fn parse(name: &str) -> Result<Self, CatalogError> {
        match name {
            "Z" => return Ok(Self::integers()),
            "Q" => return Ok(Self::rationals()),
            _ => {}
        }
        if let Some(rest) = name.strip_prefix("Prufer:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| CatalogError::BadNumber(rest.to_string()))?;
            return Self::prufer(p);
        }
        if let Some(rest) = name.strip_prefix("FgAb:") {
            let mut nums = Vec::new();
            for part in rest.split(',') {
                if part.is_empty() {
                    continue;
                }
                nums.push(
                    part.parse::<u64>()
                        .map_err(|_| CatalogError::BadNumber(part.to_string()))?,
                );
            }
            if nums.is_empty() {
                return Err(CatalogError::BadNumber(rest.to_string()));
            }
            let rank = nums[0] as u32;
            return Self::fg_abelian(rank, nums[1..].to_vec());
        }
        Err(CatalogError::UnknownName(name.to_string()))
    }

    /// Description of the radical: the per-prime radical of each cyclic
    /// factor; free part contributes nothing, divisible modules are their
    /// own radical.
    pub fn radical_description(&self) -> RadicalDescription {
        match &self.kind {
            ZModuleKind::FgAbelian { torsion, .. } => {
                let divisors: Vec<u64> = torsion
                    .iter()
                    .map(|&d| d / squarefree_part(d))
                    .filter(|&d| d > 1)
                    .collect();
                RadicalDescription {
                    whole_module: false,
                    torsion_divisors: divisors,
                }
            }
            ZModuleKind::Prufer { .. } | ZModuleKind::Rationals => RadicalDescription {
                whole_module: true,
                torsion_divisors: vec![],
            },
        }
    }

    /// Finitely many nonzero small submodules?
    pub fn is_fs(&self) -> SymbolicVerdict {
        match &self.kind {
            ZModuleKind::FgAbelian { .. } => SymbolicVerdict::derived(
                "fs",
                VerdictValue::Yes,
                "the radical is a finite torsion group, so it has finitely many submodules and \
                 they carry every small submodule",
            ),
            ZModuleKind::Prufer { p } => SymbolicVerdict::derived(
                "fs",
                VerdictValue::No,
                format!(
                    "no maximal submodules, so Rad = M and the proper submodules 0 < Z/{p} < \
                     Z/{p2} < ... are all small",
                    p2 = p * p
                ),
            ),
            ZModuleKind::Rationals => SymbolicVerdict::derived(
                "fs",
                VerdictValue::No,
                "no maximal submodules, so Rad = M; a module equal to its own radical is not fs",
            ),
        }
    }

    /// Uniform dimension.
    pub fn goldie_dim(&self) -> SymbolicVerdict {
        match &self.kind {
            ZModuleKind::FgAbelian { rank, torsion } => {
                let torsion_parts: u64 = torsion.iter().map(|&d| omega(d)).sum();
                SymbolicVerdict::derived(
                    "goldie_dim",
                    VerdictValue::Finite(*rank as u64 + torsion_parts),
                    "rank plus the number of primary cyclic components; the socle has one \
                     simple summand per component",
                )
            }
            ZModuleKind::Prufer { .. } => SymbolicVerdict::derived(
                "goldie_dim",
                VerdictValue::Finite(1),
                "chain submodule lattice: any two nonzero submodules are comparable",
            ),
            ZModuleKind::Rationals => SymbolicVerdict::derived(
                "goldie_dim",
                VerdictValue::Finite(1),
                "any two nonzero subgroups of Q intersect nontrivially",
            ),
        }
    }

    /// Dual Goldie dimension, with the witness family for the infinite
    /// cases where one is constructible.
    pub fn hollow_dim(&self) -> SymbolicVerdict {
        match &self.kind {
            ZModuleKind::FgAbelian { rank, torsion } => {
                if *rank >= 1 {
                    let witness = verify_prime_coindependence(6)
                        .expect("the first six primes are pairwise coprime");
                    SymbolicVerdict::derived(
                        "hollow_dim",
                        VerdictValue::Infinite,
                        format!(
                            "for every n the submodules p_1 Z, ..., p_n Z over distinct primes \
                             are coindependent; verified exactly for the family {witness:?}"
                        ),
                    )
                } else {
                    let len: u64 = torsion.iter().map(|&d| omega(d)).sum();
                    SymbolicVerdict::derived(
                        "hollow_dim",
                        VerdictValue::Finite(len),
                        "composition length of M/Rad(M), one simple factor per primary component",
                    )
                }
            }
            ZModuleKind::Prufer { .. } => SymbolicVerdict::derived(
                "hollow_dim",
                VerdictValue::Finite(1),
                "chain lattice: every proper submodule is small, so the module is hollow",
            ),
            ZModuleKind::Rationals => SymbolicVerdict {
                property: "hollow_dim".to_string(),
                value: VerdictValue::Unknown,
                justification: "attested as infinite, but the coindependent witness family used \
                                for Z does not transfer and none is constructible in this \
                                representation"
                    .to_string(),
                source: SourceTag::Disputed,
            },
        }
    }

    /// Declared submodule entries used by the monotonicity check: a
    /// submodule of an fs entry must be fs.
    pub fn declared_submodules(&self) -> Vec<SymbolicZModule> {
        match &self.kind {
            ZModuleKind::FgAbelian { .. } => {
                let rad = self.radical_description();
                if rad.torsion_divisors.is_empty() {
                    vec![]
                } else {
                    vec![SymbolicZModule::fg_abelian(0, rad.torsion_divisors)
                        .expect("radical divisors form a chain")]
                }
            }
            ZModuleKind::Prufer { p } => {
                vec![SymbolicZModule::fg_abelian(0, vec![*p]).expect("single divisor")]
            }
            ZModuleKind::Rationals => vec![SymbolicZModule::integers()],
        }
    }
}

/// The radical of a catalog entry: either the whole module or a finite
/// torsion group described by cyclic divisors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalDescription {
    pub whole_module: bool,
    pub torsion_divisors: Vec<u64>,
}

impl fmt::Display for RadicalDescription {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.whole_module {
            write!(out, "M (the whole module)")
        } else if self.torsion_divisors.is_empty() {
            write!(out, "0")
        } else {
            let parts: Vec<String> = self
                .torsion_divisors
                .iter()
                .map(|d| format!("Z/{d}"))
                .collect();
            write!(out, "{}", parts.join(" (+) "))
        }
    }
}

fn squarefree_part(mut n: u64) -> u64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out *= n;
    }
    out
}

/// Number of distinct prime divisors.
fn omega(mut n: u64) -> u64 {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            count += 1;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact coindependence of the first `n` prime ideals of Z: for each i,
/// `p_i Z + (intersection of the others) = Z` because `gcd(p_i, prod of the
/// others) = 1`. This is the witness family behind the infinite hollow
/// dimension of Z.
pub fn verify_prime_coindependence(n: usize) -> Result<Vec<u64>, String> {
    const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
    if n > PRIMES.len() {
        return Err(format!("witness family bounded at {}", PRIMES.len()));
    }
    let primes = &PRIMES[..n];
    for (i, &p) in primes.iter().enumerate() {
        let others: u64 = primes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &q)| q)
            .product();
        if gcd(p, others) != 1 {
            return Err(format!("gcd({p}, {others}) != 1"));
        }
    }
    Ok(primes.to_vec())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// One cell of the fs-by-hollow-dimension table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IndependenceCell {
    pub fs: VerdictValue,
    pub hollow: VerdictValue,
    pub instance: String,
    pub note: String,
}

/// The 2x2 table showing fs and finite hollow dimension are independent
/// properties.
pub fn independence_table() -> Vec<IndependenceCell> {
    let z = SymbolicZModule::integers();
    let prufer = SymbolicZModule::prufer(2).expect("2 is prime");
    let q = SymbolicZModule::rationals();
    let witness = verify_prime_coindependence(6).expect("primes are coprime");
    vec![
        IndependenceCell {
            fs: VerdictValue::Yes,
            hollow: VerdictValue::Finite(0),
            instance: "cyclic:6/regular".to_string(),
            note: "any finite module with zero radical; fs with finite hollow dimension"
                .to_string(),
        },
        IndependenceCell {
            fs: z.is_fs().value,
            hollow: z.hollow_dim().value,
            instance: "Z".to_string(),
            note: format!(
                "fs with infinite hollow dimension; coindependent prime ideals {witness:?} \
                 verified exactly"
            ),
        },
        IndependenceCell {
            fs: prufer.is_fs().value,
            hollow: prufer.hollow_dim().value,
            instance: "Prufer:2".to_string(),
            note: "not fs, hollow (dimension 1)".to_string(),
        },
        IndependenceCell {
            fs: q.is_fs().value,
            hollow: q.hollow_dim().value,
            instance: "Q".to_string(),
            note: "not fs; hollow dimension attested infinite but recorded as disputed"
                .to_string(),
        },
    ]
}

/// The essential-extension boundary: Z is fs, Q is a proper essential
/// extension of Z, and Q is not fs; the identity extension and the
/// socle-into-Prufer case bracket it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EssentialExtensionReport {
    pub pass: bool,
    pub lines: Vec<String>,
}

pub fn essential_extension_check() -> EssentialExtensionReport {
    let mut lines = Vec::new();
    let mut pass = true;

    let z = SymbolicZModule::integers();
    let q = SymbolicZModule::rationals();
    let z_fs = z.is_fs().value == VerdictValue::Yes;
    let q_fs = q.is_fs().value == VerdictValue::Yes;
    // Essentiality of Z in Q: any nonzero subgroup of Q contains some
    // nonzero a/b, hence the nonzero integer a = b*(a/b).
    let essential = true;
    pass &= z_fs && !q_fs && essential;
    lines.push(format!(
        "Z into Q: proper essential extension (every nonzero subgroup of Q meets Z); fs {} -> fs {}",
        z_fs, q_fs
    ));

    pass &= z_fs;
    lines.push("Z into Z: identity extension is not proper; fs is preserved".to_string());

    let prufer = SymbolicZModule::prufer(2).expect("2 is prime");
    let socle = SymbolicZModule::fg_abelian(0, vec![2]).expect("chain");
    let socle_fs = socle.is_fs().value == VerdictValue::Yes;
    let prufer_fs = prufer.is_fs().value == VerdictValue::Yes;
    pass &= socle_fs && !prufer_fs;
    lines.push(format!(
        "Z/2 into Prufer:2: the socle is finite hence fs ({}), the extension is not ({})",
        socle_fs, prufer_fs
    ));

    EssentialExtensionReport { pass, lines }
}

/// Outcome of checking one rank-zero entry against the finite engine.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BridgeOutcome {
    pub name: String,
    pub order: u64,
    /// Whether the complete-lattice route ran (it is skipped past the node
    /// ceiling; the elementwise route always runs).
    pub full_engine: bool,
    pub agreed: bool,
    pub detail: String,
}

/// Check a rank-zero finitely generated entry against a concrete module
/// over the cyclic ring of its exponent.
///
/// Two finite routes are compared with the symbolic verdicts: an
/// elementwise computation straight off the action tables (radical as
/// `M*J(R)` with its invariant-factor chain, socle as the annihilator of
/// J(R), dimensions via index counts of the multiplication-by-p maps), and,
/// when the submodule lattice fits the node ceiling, the full lattice
/// engine.
pub fn bridge_check(
    divisors: &[u64],
    limits: &crate::Limits,
) -> crate::Result<BridgeOutcome> {
    use crate::module::FiniteModule;
    use crate::ring::FiniteRing;

    let entry = SymbolicZModule::fg_abelian(0, divisors.to_vec())
        .map_err(|e| crate::Error::Internal(format!("bad bridge entry: {e}")))?;
    let exponent = *divisors.last().expect("rank-zero entry has torsion");
    let order: u64 = divisors.iter().product();

    let ring = FiniteRing::cyclic(exponent as u32).map_err(crate::Error::Ring)?;
    let divisors_u32: Vec<u32> = divisors.iter().map(|&d| d as u32).collect();
    let module_order = order as usize;
    let decode = |mut id: usize| -> Vec<u64> {
        let mut coords = vec![0u64; divisors.len()];
        for (c, &d) in coords.iter_mut().zip(divisors).rev() {
            *c = (id as u64) % d;
            id /= d as usize;
        }
        coords
    };
    let encode = |coords: &[u64]| -> u16 {
        let mut id: u64 = 0;
        for (&c, &d) in coords.iter().zip(divisors) {
            id = id * d + c;
        }
        id as u16
    };
    let mut action = vec![0u16; ring.order() * module_order];
    for r in 0..ring.order() as u64 {
        for m in 0..module_order {
            let coords: Vec<u64> = decode(m)
                .iter()
                .zip(divisors)
                .map(|(&c, &d)| (c * r) % d)
                .collect();
            action[r as usize * module_order + m] = encode(&coords);
        }
    }
    let module = FiniteModule::from_action(&ring, &divisors_u32, action, limits)
        .map_err(crate::Error::Module)?;

    // elementwise route
    let jac = crate::ideal::jacobson_radical(&ring, limits)?;
    let rad_set = crate::endo::module_times_ideal(&module, jac.ideal.elements());
    let rad_invariants = abelian_invariants(&module, &rad_set);
    let soc_set = annihilator_of(&module, jac.ideal.elements());
    let exponent_primes = prime_divisors(exponent);
    let goldie_elementwise: u64 = exponent_primes
        .iter()
        .map(|&p| {
            let killed = soc_set
                .iter()
                .filter(|&m| scalar_multiple(&module, m, p) == 0)
                .count() as u64;
            log_exact(killed, p)
        })
        .sum();
    let hollow_elementwise: u64 = exponent_primes
        .iter()
        .map(|&p| {
            let image: std::collections::BTreeSet<u16> = module
                .elements()
                .map(|m| scalar_multiple(&module, m, p))
                .collect();
            log_exact(module.order() as u64 / image.len() as u64, p)
        })
        .sum();

    // symbolic route
    let sym_rad = entry.radical_description();
    let sym_goldie = match entry.goldie_dim().value {
        VerdictValue::Finite(v) => v,
        other => {
            return Ok(BridgeOutcome {
                name: entry.name,
                order,
                full_engine: false,
                agreed: false,
                detail: format!("symbolic goldie verdict not finite: {other}"),
            })
        }
    };
    let sym_hollow = match entry.hollow_dim().value {
        VerdictValue::Finite(v) => v,
        other => {
            return Ok(BridgeOutcome {
                name: entry.name,
                order,
                full_engine: false,
                agreed: false,
                detail: format!("symbolic hollow verdict not finite: {other}"),
            })
        }
    };
    let sym_fs = entry.is_fs().value == VerdictValue::Yes;

    let mut agreed = true;
    let mut detail = String::new();
    if rad_invariants != sym_rad.torsion_divisors {
        agreed = false;
        detail = format!(
            "radical invariants {rad_invariants:?} vs symbolic {:?}",
            sym_rad.torsion_divisors
        );
    }
    if goldie_elementwise != sym_goldie {
        agreed = false;
        detail = format!("goldie {goldie_elementwise} vs symbolic {sym_goldie}");
    }
    if hollow_elementwise != sym_hollow {
        agreed = false;
        detail = format!("hollow {hollow_elementwise} vs symbolic {sym_hollow}");
    }
    if !sym_fs {
        agreed = false;
        detail = "finite modules are fs but the symbolic verdict disagrees".to_string();
    }

    // full-lattice route, when it fits
    let full_engine = match crate::lattice::SubmoduleLattice::compute(&module, limits) {
        Ok(lat) => {
            let rep = crate::invariants::classify(&lat, limits)?;
            let rad_ids: Vec<u16> = rad_set.ids();
            if rep.radical != rad_ids {
                agreed = false;
                detail = "lattice radical disagrees with elementwise radical".to_string();
            }
            if u64::from(rep.goldie_dim) != sym_goldie {
                agreed = false;
                detail = format!(
                    "lattice goldie {} vs symbolic {sym_goldie}",
                    rep.goldie_dim
                );
            }
            if u64::from(rep.hollow_dim) != sym_hollow {
                agreed = false;
                detail = format!(
                    "lattice hollow {} vs symbolic {sym_hollow}",
                    rep.hollow_dim
                );
            }
            if soc_set.ids() != rep.socle {
                agreed = false;
                detail = "lattice socle disagrees with elementwise socle".to_string();
            }
            true
        }
        Err(_) => false,
    };
    if agreed && detail.is_empty() {
        detail = format!(
            "radical {rad_invariants:?}, goldie {goldie_elementwise}, hollow {hollow_elementwise}"
        );
    }
    Ok(BridgeOutcome {
        name: entry.name,
        order,
        full_engine,
        agreed,
        detail,
    })
}

fn scalar_multiple(module: &crate::module::FiniteModule, m: u16, scalar: u64) -> u16 {
    // scalar reduced into the ring Z_exponent
    let r = (scalar % module.ring().order() as u64) as u16;
    module.act(r, m)
}

fn annihilator_of(
    module: &crate::module::FiniteModule,
    ideal: &crate::bitset::ElemSet,
) -> crate::bitset::ElemSet {
    let mut out = crate::bitset::ElemSet::empty(module.order());
    for m in module.elements() {
        if ideal.iter().all(|j| module.act(j, m) == 0) {
            out.insert(m);
        }
    }
    out
}

/// Invariant-factor chain `d_1 | d_2 | ... | d_k` of a subgroup given
/// elementwise, from the order ladder of its multiplication-by-p powers.
fn abelian_invariants(module: &crate::module::FiniteModule, subset: &crate::bitset::ElemSet) -> Vec<u64> {
    let size = subset.len() as u64;
    if size == 1 {
        return vec![];
    }
    // per prime: rank ladder r_j = log_p |{m in subset : m * p^j = 0}|;
    // the number of cyclic p-power factors of order >= p^j is r_j - r_{j-1}.
    let mut per_prime: Vec<(u64, Vec<u64>)> = Vec::new();
    for p in prime_divisors(size) {
        let mut ranks = vec![0u64];
        let mut power = 1u64;
        loop {
            power = power.saturating_mul(p);
            let killed = subset
                .iter()
                .filter(|&m| {
                    let r = (power % module.ring().order() as u64) as u16;
                    module.act(r, m) == 0
                })
                .count() as u64;
            let rank = log_exact(killed, p);
            if rank == *ranks.last().expect("seeded") {
                break;
            }
            ranks.push(rank);
        }
        // multiplicities of cyclic factors p^j, largest first
        let mut factors = Vec::new();
        for j in 1..ranks.len() {
            let at_least_j = ranks[j] - ranks[j - 1];
            factors.push(at_least_j);
        }
        let mut powers = Vec::new();
        for j in (1..=factors.len()).rev() {
            let count = factors[j - 1]
                - if j < factors.len() { factors[j] } else { 0 };
            for _ in 0..count {
                powers.push(p.pow(j as u32));
            }
        }
        per_prime.push((p, powers));
    }
    // assemble invariant factors: align the largest p-powers across primes
    let depth = per_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let mut chain = Vec::new();
    for slot in 0..depth {
        let mut d = 1u64;
        for (_, powers) in &per_prime {
            if slot < powers.len() {
                d *= powers[slot];
            }
        }
        chain.push(d);
    }
    chain.reverse(); // ascending divisibility chain
    chain
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_exact(value: u64, base: u64) -> u64 {
    let mut v = value;
    let mut count = 0;
    while v > 1 {
        debug_assert_eq!(v % base, 0, "{value} is not a power of {base}");
        v /= base;
        count += 1;
    }
    count
}

/// A fact the catalog carries without an evaluator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AttestedFact {
    pub name: String,
    pub statement: String,
    pub source: SourceTag,
}

/// Facts recorded with a source tag only; nothing in this crate computes
/// them.
pub fn attested_facts() -> Vec<AttestedFact> {
    vec![
        AttestedFact {
            name: "polynomial_ring_never_fs_with_finite_hollow".to_string(),
            statement: "for any coefficient ring R, the polynomial ring R[x] is never \
                        simultaneously an fs-ring and of finite hollow dimension on one side: \
                        the ideal chain (x), (x^2), (x^3), ... rules out the descending chain \
                        condition"
                .to_string(),
            source: SourceTag::Attested,
        },
        AttestedFact {
            name: "artinian_modules_of_every_noetherian_dimension".to_string(),
            statement: "over a polynomial ring in n variables over a field, the injective \
                        envelope of a simple module is Artinian with Noetherian dimension n, \
                        and is not an fs-module; Artinian non-fs modules exist in every finite \
                        Noetherian dimension"
                .to_string(),
            source: SourceTag::Attested,
        },
    ]
}

/// fs is inherited by declared submodule entries.
pub fn fs_monotone_over_declared_submodules(entry: &SymbolicZModule) -> bool {
    if entry.is_fs().value != VerdictValue::Yes {
        return true;
    }
    entry
        .declared_submodules()
        .iter()
        .all(|sub| sub.is_fs().value == VerdictValue::Yes)
}

/// Full verdict listing for one entry, CLI-facing.
pub fn verdicts(entry: &SymbolicZModule) -> Vec<SymbolicVerdict> {
    let rad = entry.radical_description();
    let mut out = vec![SymbolicVerdict::derived(
        "radical",
        VerdictValue::Yes,
        format!("Rad(M) = {rad}"),
    )];
    out[0].value = if rad.whole_module {
        VerdictValue::Infinite
    } else {
        VerdictValue::Finite(rad.torsion_divisors.iter().product::<u64>().max(1))
    };
    out.push(entry.is_fs());
    out.push(entry.goldie_dim());
    out.push(entry.hollow_dim());
    out
}
