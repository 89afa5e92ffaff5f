//! Finite associative rings with identity, stored as full Cayley tables.
//!
//! Element ids run `0..order` with id 0 the additive identity. Construction
//! validates every ring axiom exhaustively (abelian addition, associative
//! multiplication, two-sided distributivity, two-sided identity); all later
//! theorem checking rests on these axioms, so the O(n^3) scan is not
//! skippable except through [`FiniteRing::from_tables_unchecked`].

use crate::fresh_token;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// How a ring was built; feeds labels and reports only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingPresentation {
    Cyclic(u32),
    Product(Vec<RingPresentation>),
    PolyQuotient { p: u32, f: Vec<u32> },
    Tables,
    Endomorphism,
    Opposite(Box<RingPresentation>),
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingPresentation::Cyclic(n) => write!(out, "Z{n}"),
            RingPresentation::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
                write!(out, "{}", parts.join("x"))
            }
            RingPresentation::PolyQuotient { p, f } => {
                write!(out, "F{p}[x]/({})", poly_string(f))
            }
            RingPresentation::Tables => write!(out, "tables"),
            RingPresentation::Endomorphism => write!(out, "end"),
            RingPresentation::Opposite(inner) => write!(out, "op({inner})"),
        }
    }
}

fn poly_string(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum RingError {
    #[error("ring order must be positive")]
    ZeroOrder,
    #[error("table has wrong shape: expected {expected} entries, got {got}")]
    BadTableShape { expected: usize, got: usize },
    #[error("table entry out of range at ({a},{b}): {value}")]
    EntryOutOfRange { a: u16, b: u16, value: u16 },
    #[error("addition is not commutative at ({a},{b})")]
    AddNotCommutative { a: u16, b: u16 },
    #[error("0 is not an additive identity at {a}")]
    BadZero { a: u16 },
    #[error("element {a} has no additive inverse")]
    MissingNegative { a: u16 },
    #[error("addition is not associative at ({a},{b},{c})")]
    AddNotAssociative { a: u16, b: u16, c: u16 },
    #[error("multiplication is not associative at ({a},{b},{c})")]
    MulNotAssociative { a: u16, b: u16, c: u16 },
    #[error("distributivity fails at ({a},{b},{c})")]
    NotDistributive { a: u16, b: u16, c: u16 },
    #[error("designated identity {one} is not two-sided at {a}")]
    BadOne { one: u16, a: u16 },
    #[error("empty product of rings")]
    EmptyProduct,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("quotient polynomial must be monic of degree >= 1")]
    BadPolynomial,
}

/// A finite associative ring with identity, as validated Cayley tables.
#[derive(Debug)]
pub struct FiniteRing {
    token: u64,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    one: u16,
    commutative: bool,
    presentation: RingPresentation,
}

impl FiniteRing {
    /// Build and fully validate a ring from raw tables (row-major
    /// `order x order`).
    pub fn from_tables(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        one: u16,
        presentation: RingPresentation,
    ) -> Result<Arc<Self>, RingError> {
        let ring = Self::assemble(order, add, mul, one, presentation)?;
        ring.validate()?;
        Ok(Arc::new(ring))
    }

    /// Skip axiom validation. Only for tables already proven valid by
    /// construction (endomorphism rings re-validate anyway; this exists for
    /// callers that have measured the O(n^3) scan to matter).
    pub fn from_tables_unchecked(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        one: u16,
        presentation: RingPresentation,
    ) -> Result<Arc<Self>, RingError> {
        Ok(Arc::new(Self::assemble(order, add, mul, one, presentation)?))
    }

    fn assemble(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        one: u16,
        presentation: RingPresentation,
    ) -> Result<Self, RingError> {
        if order == 0 {
            return Err(RingError::ZeroOrder);
        }
        if add.len() != order * order {
            return Err(RingError::BadTableShape {
                expected: order * order,
                got: add.len(),
            });
        }
        if mul.len() != order * order {
            return Err(RingError::BadTableShape {
                expected: order * order,
                got: mul.len(),
            });
        }
        for (i, &v) in add.iter().chain(mul.iter()).enumerate() {
            if v as usize >= order {
                return Err(RingError::EntryOutOfRange {
                    a: (i / order) as u16,
                    b: (i % order) as u16,
                    value: v,
                });
            }
        }
        if one as usize >= order {
            return Err(RingError::EntryOutOfRange {
                a: 0,
                b: 0,
                value: one,
            });
        }
        let mut neg = vec![u16::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] == 0 {
                    neg[a] = b as u16;
                    break;
                }
            }
            if neg[a] == u16::MAX {
                return Err(RingError::MissingNegative { a: a as u16 });
            }
        }
        let mut commutative = true;
        'outer: for a in 0..order {
            for b in 0..a {
                if mul[a * order + b] != mul[b * order + a] {
                    commutative = false;
                    break 'outer;
                }
            }
        }
        Ok(FiniteRing {
            token: fresh_token(),
            order,
            add,
            mul,
            neg,
            one,
            commutative,
            presentation,
        })
    }

    fn validate(&self) -> Result<(), RingError> {
        let n = self.order;
        for a in 0..n as u16 {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return Err(RingError::BadZero { a });
            }
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return Err(RingError::BadOne { one: self.one, a });
            }
        }
        for a in 0..n as u16 {
            for b in 0..a {
                if self.add(a, b) != self.add(b, a) {
                    return Err(RingError::AddNotCommutative { a, b });
                }
            }
        }
        // Row-sliced triple scan; this is the hot loop for endomorphism
        // rings, which re-validate through this constructor.
        for a in 0..n {
            let add_a = &self.add[a * n..(a + 1) * n];
            let mul_a = &self.mul[a * n..(a + 1) * n];
            for b in 0..n {
                let ab = add_a[b] as usize;
                let ab_mul = mul_a[b] as usize;
                let mul_ab_elem = mul_a[b] as usize;
                let add_ab_row = &self.add[ab * n..(ab + 1) * n];
                let mul_abm_row = &self.mul[ab_mul * n..(ab_mul + 1) * n];
                let mul_ab_row = &self.mul[ab * n..(ab + 1) * n];
                let add_b = &self.add[b * n..(b + 1) * n];
                let mul_b = &self.mul[b * n..(b + 1) * n];
                for c in 0..n {
                    if add_ab_row[c] != add_a[add_b[c] as usize] {
                        return Err(RingError::AddNotAssociative {
                            a: a as u16,
                            b: b as u16,
                            c: c as u16,
                        });
                    }
                    if mul_abm_row[c] != mul_a[mul_b[c] as usize] {
                        return Err(RingError::MulNotAssociative {
                            a: a as u16,
                            b: b as u16,
                            c: c as u16,
                        });
                    }
                    if mul_a[add_b[c] as usize]
                        != self.add[mul_ab_elem * n + mul_a[c] as usize]
                    {
                        return Err(RingError::NotDistributive {
                            a: a as u16,
                            b: b as u16,
                            c: c as u16,
                        });
                    }
                    if mul_ab_row[c]
                        != self.add[mul_a[c] as usize * n + mul_b[c] as usize]
                    {
                        return Err(RingError::NotDistributive {
                            a: b as u16,
                            b: c as u16,
                            c: a as u16,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The cyclic ring Z_n. `n = 1` yields the zero ring (identity = zero).
    pub fn cyclic(n: u32) -> Result<Arc<Self>, RingError> {
        if n == 0 {
            return Err(RingError::ZeroOrder);
        }
        let n = n as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u16;
                mul[a * n + b] = ((a * b) % n) as u16;
            }
        }
        let one = if n == 1 { 0 } else { 1 };
        Self::from_tables(n, add, mul, one, RingPresentation::Cyclic(n as u32))
    }

    /// Componentwise product of a nonempty list of rings.
    pub fn product(factors: &[Arc<FiniteRing>]) -> Result<Arc<Self>, RingError> {
        if factors.is_empty() {
            return Err(RingError::EmptyProduct);
        }
        if factors.len() == 1 {
            // Unary product is the ring itself; rebuilt so the presentation
            // records the constructor.
            let f = &factors[0];
            return Self::from_tables(
                f.order,
                f.add.clone(),
                f.mul.clone(),
                f.one,
                RingPresentation::Product(vec![f.presentation.clone()]),
            );
        }
        let order: usize = factors.iter().map(|f| f.order).product();
        // Mixed-radix encoding, first factor most significant.
        let decode = |mut id: usize| -> Vec<u16> {
            let mut coords = vec![0u16; factors.len()];
            for (i, f) in factors.iter().enumerate().rev() {
                coords[i] = (id % f.order) as u16;
                id /= f.order;
            }
            coords
        };
        let encode = |coords: &[u16]| -> u16 {
            let mut id = 0usize;
            for (c, f) in coords.iter().zip(factors) {
                id = id * f.order + *c as usize;
            }
            id as u16
        };
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            let ca = decode(a);
            for b in 0..order {
                let cb = decode(b);
                let sum: Vec<u16> = ca
                    .iter()
                    .zip(&cb)
                    .zip(factors)
                    .map(|((&x, &y), f)| f.add(x, y))
                    .collect();
                let prod: Vec<u16> = ca
                    .iter()
                    .zip(&cb)
                    .zip(factors)
                    .map(|((&x, &y), f)| f.mul(x, y))
                    .collect();
                add[a * order + b] = encode(&sum);
                mul[a * order + b] = encode(&prod);
            }
        }
        let one = encode(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
        Self::from_tables(
            order,
            add,
            mul,
            one,
            RingPresentation::Product(factors.iter().map(|f| f.presentation.clone()).collect()),
        )
    }

    /// F_p[x]/(f) for a prime p and a monic polynomial f of degree >= 1,
    /// coefficients ascending (`f[i]` multiplies `x^i`).
    pub fn poly_quotient(p: u32, f: &[u32]) -> Result<Arc<Self>, RingError> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        let degree = f.len().saturating_sub(1);
        if degree == 0 || f.last() != Some(&1) {
            return Err(RingError::BadPolynomial);
        }
        let f: Vec<u32> = f.iter().map(|&c| c % p).collect();
        let order = (p as usize).pow(degree as u32);
        let pu = p as usize;
        // Element id encodes coefficients of 1, x, ..., x^(d-1), least degree
        // least significant.
        let decode = |mut id: usize| -> Vec<u32> {
            let mut coeffs = vec![0u32; degree];
            for c in coeffs.iter_mut() {
                *c = (id % pu) as u32;
                id /= pu;
            }
            coeffs
        };
        let encode = |coeffs: &[u32]| -> u16 {
            let mut id = 0usize;
            for &c in coeffs.iter().rev() {
                id = id * pu + c as usize;
            }
            id as u16
        };
        let reduce = |mut poly: Vec<u32>| -> Vec<u32> {
            // Divide by the monic modulus, keep the remainder.
            while poly.len() > degree {
                let lead = poly[poly.len() - 1] % p;
                let shift = poly.len() - 1 - degree;
                if lead != 0 {
                    for (i, &fc) in f.iter().take(degree).enumerate() {
                        let sub = (lead * fc) % p;
                        let idx = shift + i;
                        poly[idx] = (poly[idx] + p - sub) % p;
                    }
                }
                poly.pop();
            }
            poly.resize(degree, 0);
            poly
        };
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            let ca = decode(a);
            for b in 0..order {
                let cb = decode(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
                let mut prod = vec![0u32; 2 * degree];
                for (i, &x) in ca.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                add[a * order + b] = encode(&sum);
                mul[a * order + b] = encode(&reduce(prod));
            }
        }
        Self::from_tables(
            order,
            add,
            mul,
            1,
            RingPresentation::PolyQuotient { p, f },
        )
    }

    /// The opposite ring: same addition, multiplication arguments swapped.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if self.commutative {
            return Arc::clone(self);
        }
        let n = self.order;
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul[b * n + a];
            }
        }
        Arc::new(FiniteRing {
            token: fresh_token(),
            order: n,
            add: self.add.clone(),
            mul,
            neg: self.neg.clone(),
            one: self.one,
            commutative: false,
            presentation: RingPresentation::Opposite(Box::new(self.presentation.clone())),
        })
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn token(&self) -> u64 {
        self.token
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.order as u16
    }

    /// Two-sided invertibility. In a finite ring a one-sided inverse is
    /// two-sided, but both identities are checked anyway.
    pub fn is_unit(&self, a: u16) -> bool {
        self.elements()
            .any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    pub fn idempotents(&self) -> Vec<u16> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_rings_validate() {
        for n in 1..=20 {
            let r = FiniteRing::cyclic(n).unwrap();
            assert_eq!(r.order(), n as usize);
            assert!(r.is_commutative());
        }
    }

    #[test]
    fn zero_ring_is_degenerate() {
        let r = FiniteRing::cyclic(1).unwrap();
        assert!(r.is_zero_ring());
        assert_eq!(r.one(), 0);
    }

    #[test]
    fn cyclic_zero_order_rejected() {
        assert!(matches!(FiniteRing::cyclic(0), Err(RingError::ZeroOrder)));
    }

    #[test]
    fn empty_product_rejected() {
        assert!(matches!(
            FiniteRing::product(&[]),
            Err(RingError::EmptyProduct)
        ));
    }

    #[test]
    fn unary_product_is_the_ring_itself() {
        let z2 = FiniteRing::cyclic(2).unwrap();
        let p = FiniteRing::product(&[z2.clone()]).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(p.add, z2.add);
        assert_eq!(p.mul, z2.mul);
    }

    #[test]
    fn z2xz2_has_four_idempotents() {
        let z2 = FiniteRing::cyclic(2).unwrap();
        let p = FiniteRing::product(&[z2.clone(), z2]).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.idempotents().len(), 4);
    }

    #[test]
    fn f4_is_a_field() {
        // x^2 + x + 1 over F_2
        let f4 = FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap();
        assert_eq!(f4.order(), 4);
        assert!(f4.elements().skip(1).all(|a| f4.is_unit(a)));
    }

    #[test]
    fn f2_x_squared_has_nilpotent() {
        let r = FiniteRing::poly_quotient(2, &[0, 0, 1]).unwrap();
        assert_eq!(r.order(), 4);
        // x has id 2 (coefficient of x in the second digit)
        assert_eq!(r.mul(2, 2), 0);
        assert!(!r.is_unit(2));
    }

    #[test]
    fn degree_one_quotient_is_prime_field() {
        let r = FiniteRing::poly_quotient(3, &[0, 1]).unwrap();
        assert_eq!(r.order(), 3);
        let z3 = FiniteRing::cyclic(3).unwrap();
        assert_eq!(r.add, z3.add);
        assert_eq!(r.mul, z3.mul);
    }

    #[test]
    fn non_monic_rejected() {
        assert!(matches!(
            FiniteRing::poly_quotient(2, &[1, 2]),
            Err(RingError::BadPolynomial)
        ));
        assert!(matches!(
            FiniteRing::poly_quotient(2, &[1]),
            Err(RingError::BadPolynomial)
        ));
        assert!(matches!(
            FiniteRing::poly_quotient(4, &[0, 0, 1]),
            Err(RingError::NotPrime(4))
        ));
    }

    #[test]
    fn bad_tables_are_caught() {
        // 2-element "ring" with broken associativity of multiplication:
        // impossible to break with valid add on 2 elements, so break zero.
        let add = vec![1, 0, 0, 1];
        let mul = vec![0, 0, 0, 1];
        let err = FiniteRing::from_tables(2, add, mul, 1, RingPresentation::Tables);
        assert!(matches!(err, Err(RingError::BadZero { .. })));
    }

    #[test]
    fn opposite_of_commutative_is_shared() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        let op = z6.opposite();
        assert_eq!(op.token(), z6.token());
    }
}
