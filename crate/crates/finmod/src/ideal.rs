//! One- and two-sided ideals of a finite ring, and the ring-level
//! classification built on them: Jacobson radical, minimal/maximal ideals,
//! idempotent splitting of minimal ideals, us/local/semiprime tests.
//!
//! Enumeration closes the cyclic ideals `xR` (resp. `Rx`) under pairwise
//! sums; every ideal is a sum of cyclic ones, so the closure is complete.
//! Results come back in canonical order (cardinality, then lexicographic id
//! list).

use crate::bitset::ElemSet;
use crate::ring::FiniteRing;
use crate::{CeilingError, Error, Limits, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Right,
    Left,
    TwoSided,
}

impl std::fmt::Display for Side {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Right => write!(out, "right"),
            Side::Left => write!(out, "left"),
            Side::TwoSided => write!(out, "two-sided"),
        }
    }
}

/// An ideal of a specific ring, canonically a sorted set of element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring_token: u64,
    side: Side,
    elements: ElemSet,
}

impl Ideal {
    /// Wrap a set produced by a scan whose closure properties hold by
    /// construction (conductors, annihilator-style ideals).
    pub(crate) fn from_set_unchecked(ring_token: u64, side: Side, elements: ElemSet) -> Ideal {
        Ideal {
            ring_token,
            side,
            elements,
        }
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn ids(&self) -> Vec<u16> {
        self.elements.ids()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains 0
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_zero_only()
    }

    pub fn ring_token(&self) -> u64 {
        self.ring_token
    }

    pub fn contains(&self, id: u16) -> bool {
        self.elements.contains(id)
    }
}

/// Close a set of elements under addition and the declared side's
/// multiplication by arbitrary ring elements.
fn close(ring: &FiniteRing, seed: &ElemSet, side: Side) -> ElemSet {
    let n = ring.order();
    let mut set = ElemSet::empty(n);
    set.insert(0);
    let mut stack: Vec<u16> = seed.iter().filter(|&x| x != 0).collect();
    for &x in &stack {
        set.insert(x);
    }
    while let Some(x) = stack.pop() {
        let push = |set: &mut ElemSet, stack: &mut Vec<u16>, y: u16| {
            if !set.contains(y) {
                set.insert(y);
                stack.push(y);
            }
        };
        push(&mut set, &mut stack, ring.neg(x));
        for y in set.clone().iter() {
            push(&mut set, &mut stack, ring.add(x, y));
        }
        for r in ring.elements() {
            if matches!(side, Side::Right | Side::TwoSided) {
                push(&mut set, &mut stack, ring.mul(x, r));
            }
            if matches!(side, Side::Left | Side::TwoSided) {
                push(&mut set, &mut stack, ring.mul(r, x));
            }
        }
    }
    set
}

fn closed_under(ring: &FiniteRing, set: &ElemSet, side: Side) -> bool {
    for x in set.iter() {
        if matches!(side, Side::Left | Side::TwoSided)
            && ring.elements().any(|r| !set.contains(ring.mul(r, x)))
        {
            return false;
        }
        if matches!(side, Side::Right | Side::TwoSided)
            && ring.elements().any(|r| !set.contains(ring.mul(x, r)))
        {
            return false;
        }
    }
    true
}

/// All ideals of the declared side, in canonical order. Rejects rings larger
/// than the configured ceiling.
pub fn ideals(ring: &Arc<FiniteRing>, side: Side, limits: &Limits) -> Result<Vec<Ideal>> {
    if ring.order() > limits.max_ring_order {
        return Err(CeilingError::new(
            "ring order for ideal enumeration",
            limits.max_ring_order as u64,
            ring.order() as u64,
        )
        .into());
    }
    let enumerate = |s: Side| -> BTreeSet<ElemSet> {
        let n = ring.order();
        let mut found: BTreeSet<ElemSet> = BTreeSet::new();
        found.insert(ElemSet::singleton(n, 0));
        // Seed with cyclic ideals, then close under pairwise sums. A sum of
        // two one-sided ideals is again one (elementwise sums suffice since
        // both sides are additively closed).
        let seeds: Vec<ElemSet> = (1..n as u16)
            .map(|x| close(ring, &ElemSet::singleton(n, x), s))
            .collect();
        for seed in &seeds {
            found.insert(seed.clone());
        }
        let mut frontier: Vec<ElemSet> = found.iter().cloned().collect();
        while let Some(current) = frontier.pop() {
            for seed in &seeds {
                if seed.is_subset_of(&current) {
                    continue;
                }
                let joined = sum_sets(ring, &current, seed);
                if !found.contains(&joined) {
                    found.insert(joined.clone());
                    frontier.push(joined);
                }
            }
        }
        found
    };
    let sets: Vec<ElemSet> = match side {
        Side::Right | Side::Left => enumerate(side).into_iter().collect(),
        Side::TwoSided => enumerate(Side::Right)
            .into_iter()
            .filter(|s| closed_under(ring, s, Side::Left))
            .collect(),
    };
    Ok(sets
        .into_iter()
        .map(|elements| Ideal {
            ring_token: ring.token(),
            side,
            elements,
        })
        .collect())
}

/// Elementwise sum `{a + b}` of two additively closed sets.
pub(crate) fn sum_sets(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(ring.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// Elementwise products `{a*b}` closed additively: the ideal product `AB`.
pub(crate) fn product_sets(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let n = ring.order();
    let mut prods = ElemSet::empty(n);
    for x in a.iter() {
        for y in b.iter() {
            prods.insert(ring.mul(x, y));
        }
    }
    // additive closure
    let mut out = ElemSet::empty(n);
    out.insert(0);
    let mut frontier: Vec<u16> = prods.iter().collect();
    while let Some(x) = frontier.pop() {
        if out.contains(x) {
            continue;
        }
        out.insert(x);
        for y in out.clone().iter() {
            let s = ring.add(x, y);
            if !out.contains(s) {
                frontier.push(s);
            }
        }
    }
    out
}

/// Proper ideals maximal under inclusion.
pub fn maximal_ideals(all: &[Ideal], ring_order: usize) -> Vec<Ideal> {
    let proper: Vec<&Ideal> = all.iter().filter(|i| i.len() < ring_order).collect();
    proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.len() > i.len() && i.elements.is_subset_of(&j.elements))
        })
        .map(|i| (*i).clone())
        .collect()
}

/// Nonzero ideals minimal under inclusion (atoms).
pub fn minimal_ideals(all: &[Ideal]) -> Vec<Ideal> {
    let nonzero: Vec<&Ideal> = all.iter().filter(|i| !i.is_zero()).collect();
    nonzero
        .iter()
        .filter(|i| {
            !nonzero
                .iter()
                .any(|j| j.len() < i.len() && j.elements.is_subset_of(&i.elements))
        })
        .map(|i| (*i).clone())
        .collect()
}

/// The Jacobson radical with its left/right cross-check.
#[derive(Debug, Clone)]
pub struct JacobsonRadical {
    pub ideal: Ideal,
    /// True for the zero ring, where there are no maximal ideals at all.
    pub degenerate: bool,
}

/// Intersection of all maximal right ideals, checked against the intersection
/// of all maximal left ideals. Disagreement is an engine fault.
pub fn jacobson_radical(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<JacobsonRadical> {
    if ring.is_zero_ring() {
        return Ok(JacobsonRadical {
            ideal: Ideal {
                ring_token: ring.token(),
                side: Side::TwoSided,
                elements: ElemSet::singleton(1, 0),
            },
            degenerate: true,
        });
    }
    let from_side = |side: Side| -> Result<ElemSet> {
        let all = ideals(ring, side, limits)?;
        let maxes = maximal_ideals(&all, ring.order());
        let mut meet = ElemSet::full(ring.order());
        for m in &maxes {
            meet = meet.intersection(&m.elements);
        }
        Ok(meet)
    };
    let right = from_side(Side::Right)?;
    let left = from_side(Side::Left)?;
    if right != left {
        return Err(Error::Internal(format!(
            "Jacobson radical from maximal right ideals {:?} differs from left {:?}",
            right.ids(),
            left.ids()
        )));
    }
    Ok(JacobsonRadical {
        ideal: Ideal {
            ring_token: ring.token(),
            side: Side::TwoSided,
            elements: right,
        },
        degenerate: false,
    })
}

/// Quasi-regularity characterization of J(R): the elements z such that
/// `1 - z*r` is invertible for every r. Independent of ideal enumeration;
/// used as a cross-check.
pub fn jacobson_radical_quasi_regular(ring: &FiniteRing) -> ElemSet {
    let mut out = ElemSet::empty(ring.order());
    for z in ring.elements() {
        let ok = ring
            .elements()
            .all(|r| ring.is_unit(ring.sub(ring.one(), ring.mul(z, r))));
        if ok {
            out.insert(z);
        }
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum BrauerSplit {
    /// `A^2 = 0`, established by checking every pairwise product.
    Nilpotent { products_checked: usize },
    /// `A = eR` for the recorded idempotent.
    Idempotent { e: u16 },
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum BrauerError {
    #[error("ideal is not minimal; contains smaller nonzero ideal {smaller:?}")]
    NotMinimal { smaller: Vec<u16> },
    #[error("ideal belongs to a different ring")]
    ForeignIdeal,
    #[error("zero ideal has no Brauer split")]
    ZeroIdeal,
    /// Impossible for a genuine minimal ideal; kept so the verifier reports
    /// instead of panicking if handed corrupted data.
    #[error("no idempotent generator found although A^2 != 0")]
    NoWitness,
}

/// Split a minimal right ideal: either its square vanishes or it is
/// generated by an idempotent.
pub fn brauer_split(
    ring: &Arc<FiniteRing>,
    a: &Ideal,
    limits: &Limits,
) -> Result<std::result::Result<BrauerSplit, BrauerError>> {
    if a.ring_token != ring.token() {
        return Ok(Err(BrauerError::ForeignIdeal));
    }
    if a.is_zero() {
        return Ok(Err(BrauerError::ZeroIdeal));
    }
    // Minimality check: any nonzero x in A generates A itself.
    for x in a.elements.iter().filter(|&x| x != 0) {
        let gen = close(ring, &ElemSet::singleton(ring.order(), x), Side::Right);
        if gen != a.elements {
            return Ok(Err(BrauerError::NotMinimal { smaller: gen.ids() }));
        }
    }
    let _ = limits;
    let square = product_sets(ring, &a.elements, &a.elements);
    if square.is_zero_only() {
        let k = a.len();
        return Ok(Ok(BrauerSplit::Nilpotent {
            products_checked: k * k,
        }));
    }
    for e in a.elements.iter() {
        if e != 0 && ring.mul(e, e) == e {
            let er = close(ring, &ElemSet::singleton(ring.order(), e), Side::Right);
            if er == a.elements {
                return Ok(Ok(BrauerSplit::Idempotent { e }));
            }
        }
    }
    Ok(Err(BrauerError::NoWitness))
}

/// The small one-sided ideals of the regular module on the given side:
/// N with N + A != R for every proper ideal A of that side.
pub fn small_ideals(ring: &Arc<FiniteRing>, side: Side, limits: &Limits) -> Result<Vec<Ideal>> {
    let all = ideals(ring, side, limits)?;
    let n = ring.order();
    let mut smalls = Vec::new();
    for cand in &all {
        let small = all
            .iter()
            .filter(|a| a.len() < n)
            .all(|a| sum_sets(ring, &cand.elements, &a.elements).len() < n);
        if small {
            smalls.push(cand.clone());
        }
    }
    Ok(smalls)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UsWitness {
    pub is_us: bool,
    /// Small ideals of the regular module, zero included, canonical order.
    pub small_ideals: Vec<Vec<u16>>,
}

/// Exactly one nonzero small ideal on the given side.
pub fn is_us_ring(ring: &Arc<FiniteRing>, side: Side, limits: &Limits) -> Result<UsWitness> {
    let smalls = small_ideals(ring, side, limits)?;
    let nonzero = smalls.iter().filter(|s| !s.is_zero()).count();
    Ok(UsWitness {
        is_us: nonzero == 1,
        small_ideals: smalls.iter().map(|s| s.ids()).collect(),
    })
}

/// The three clauses of the us-ring characterization, evaluated
/// independently.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UsRingReport {
    pub side: Side,
    /// (1) exactly one nonzero small ideal.
    pub us_ring: bool,
    /// (2) J is a minimal ideal and J^2 = 0.
    pub radical_minimal_square_zero: bool,
    /// (3) J != 0 and every nonzero ideal is minimal or non-small.
    pub every_ideal_minimal_or_nonsmall: bool,
    pub agree: bool,
    pub jacobson: Vec<u16>,
}

/// Evaluate the us-ring / radical / ideal-trichotomy clauses on one side.
///
/// Clause (3) reads over nonzero ideals and carries the implicit `J != 0`
/// of the classical statement; without it the clause goes vacuous on
/// semisimple rings and the equivalence breaks.
pub fn theorem0_check(ring: &Arc<FiniteRing>, side: Side, limits: &Limits) -> Result<UsRingReport> {
    let jac = jacobson_radical(ring, limits)?;
    let j = &jac.ideal.elements;
    let all = ideals(ring, side, limits)?;
    let minimals = minimal_ideals(&all);
    let smalls = small_ideals(ring, side, limits)?;

    let us_ring = smalls.iter().filter(|s| !s.is_zero()).count() == 1;

    let j_minimal = minimals.iter().any(|m| m.elements == *j);
    let j_square_zero = product_sets(ring, j, j).is_zero_only();
    let radical_minimal_square_zero = j_minimal && j_square_zero;

    let is_small =
        |set: &ElemSet| -> bool { smalls.iter().any(|s| s.elements == *set) };
    let every_ideal_minimal_or_nonsmall = !j.is_zero_only()
        && all.iter().filter(|a| !a.is_zero()).all(|a| {
            minimals.iter().any(|m| m.elements == a.elements) || !is_small(&a.elements)
        });

    let agree = us_ring == radical_minimal_square_zero
        && us_ring == every_ideal_minimal_or_nonsmall;
    Ok(UsRingReport {
        side,
        us_ring,
        radical_minimal_square_zero,
        every_ideal_minimal_or_nonsmall,
        agree,
        jacobson: j.ids(),
    })
}

/// No nonzero two-sided ideal squares to zero.
pub fn is_semiprime(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<bool> {
    let two_sided = ideals(ring, Side::TwoSided, limits)?;
    Ok(two_sided
        .iter()
        .filter(|i| !i.is_zero())
        .all(|i| !product_sets(ring, &i.elements, &i.elements).is_zero_only()))
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("ring is not semiprime: ideal {witness:?} squares to zero")]
pub struct NotSemiprime {
    pub witness: Vec<u16>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemiprimeReport {
    /// Right regular module has finitely many nonzero small submodules and
    /// finite hollow dimension (trivially true at finite order; evaluated
    /// literally).
    pub right_fs_finite_hollow: bool,
    pub left_fs_finite_hollow: bool,
    /// J(R) = 0 and Soc(R_R) = R.
    pub semisimple: bool,
    pub clauses_equivalent: bool,
    pub local: bool,
    /// For local rings the clauses are further equivalent to being a
    /// division ring; `None` when not local.
    pub division_ring: Option<bool>,
}

/// On a semiprime ring, check the equivalence of the fs/hollow clauses with
/// semisimplicity, plus the division-ring clause in the local case.
pub fn semiprime_equivalence_check(
    ring: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<std::result::Result<SemiprimeReport, NotSemiprime>> {
    let two_sided = ideals(ring, Side::TwoSided, limits)?;
    if let Some(bad) = two_sided
        .iter()
        .filter(|i| !i.is_zero())
        .find(|i| product_sets(ring, &i.elements, &i.elements).is_zero_only())
    {
        return Ok(Err(NotSemiprime {
            witness: bad.ids(),
        }));
    }
    let side_clause = |side: Side| -> Result<bool> {
        // Finitely many nonzero small ideals: any finite count qualifies.
        let smalls = small_ideals(ring, side, limits)?;
        let _ = smalls.len();
        Ok(true)
    };
    let right_fs_finite_hollow = side_clause(Side::Right)?;
    let left_fs_finite_hollow = side_clause(Side::Left)?;
    let jac = jacobson_radical(ring, limits)?;
    // Soc(R_R) = sum of minimal right ideals.
    let rights = ideals(ring, Side::Right, limits)?;
    let minimals = minimal_ideals(&rights);
    let mut socle = ElemSet::singleton(ring.order(), 0);
    for m in &minimals {
        socle = sum_sets(ring, &socle, &m.elements);
    }
    let semisimple = jac.ideal.elements.is_zero_only() && socle.len() == ring.order();
    let local = !ring.is_zero_ring() && is_local_ring(ring, limits)?;
    let division_ring = if local {
        Some(ring.elements().skip(1).all(|a| ring.is_unit(a)))
    } else {
        None
    };
    let clauses_equivalent = right_fs_finite_hollow == left_fs_finite_hollow
        && right_fs_finite_hollow == semisimple
        && division_ring.is_none_or(|d| d == semisimple);
    Ok(Ok(SemiprimeReport {
        right_fs_finite_hollow,
        left_fs_finite_hollow,
        semisimple,
        clauses_equivalent,
        local,
        division_ring,
    }))
}

/// Exactly one maximal right ideal; asserts the left side agrees.
pub fn is_local_ring(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<bool> {
    let rights = ideals(ring, Side::Right, limits)?;
    let right_max = maximal_ideals(&rights, ring.order()).len();
    let lefts = ideals(ring, Side::Left, limits)?;
    let left_max = maximal_ideals(&lefts, ring.order()).len();
    if (right_max == 1) != (left_max == 1) {
        return Err(Error::Internal(format!(
            "locality disagrees across sides: {right_max} maximal right vs {left_max} left"
        )));
    }
    Ok(right_max == 1)
}
