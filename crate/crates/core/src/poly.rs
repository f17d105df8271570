//! Univariate polynomials over a [`FieldSpec`].
//!
//! Coefficients are stored low-degree-first with no trailing zeros, so the
//! zero polynomial is the empty vector and `degree()` is `None` for it.
//! Provides exactly the ring operations the code constructions need:
//! addition, multiplication, Euclidean division, monic GCDs, evaluation, and
//! products of linear factors.

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// A polynomial over a fixed finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFq {
    field: FieldSpec,
    /// Low-degree-first, no trailing zeros; empty means zero.
    coeffs: Vec<FieldElement>,
}

impl PolyFq {
    /// Builds a polynomial from low-degree-first coefficients, trimming
    /// trailing zeros.
    pub fn new(field: FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyFq { field, coeffs }
    }

    /// Builds a polynomial from canonical element indices, validating each.
    pub fn from_indices(field: FieldSpec, coeffs: &[u64]) -> Result<Self> {
        let elems = coeffs.iter().map(|&c| field.element(c)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(field, elems))
    }

    pub fn zero(field: FieldSpec) -> Self {
        PolyFq { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        let one = field.one();
        PolyFq { field, coeffs: vec![one] }
    }

    /// The monomial `x`.
    pub fn x(field: FieldSpec) -> Self {
        let (zero, one) = (field.zero(), field.one());
        PolyFq { field, coeffs: vec![zero, one] }
    }

    /// The monic product `(x - a_1)(x - a_2)⋯` over the given roots; an empty
    /// root list yields 1.  Repeated roots are allowed.
    pub fn from_roots(field: FieldSpec, roots: &[FieldElement]) -> Self {
        let mut acc = Self::one(field.clone());
        for &a in roots {
            let linear = PolyFq::new(field.clone(), vec![field.neg(a), field.one()]);
            acc = acc.mul(&linear);
        }
        acc
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Low-degree-first coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|&c| c == self.field.one())
    }

    pub fn add(&self, rhs: &PolyFq) -> PolyFq {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        PolyFq::new(f.clone(), coeffs)
    }

    pub fn sub(&self, rhs: &PolyFq) -> PolyFq {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        PolyFq::new(f.clone(), coeffs)
    }

    pub fn mul(&self, rhs: &PolyFq) -> PolyFq {
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return PolyFq::zero(f.clone());
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        PolyFq::new(f.clone(), coeffs)
    }

    /// Scales every coefficient.
    pub fn scale(&self, c: FieldElement) -> PolyFq {
        let f = &self.field;
        PolyFq::new(f.clone(), self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg(remainder) < deg(divisor)`.  Fails on a zero divisor.
    pub fn divrem(&self, divisor: &PolyFq) -> Result<(PolyFq, PolyFq)> {
        let f = &self.field;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((PolyFq::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for j in 0..=dd {
                let sub = f.mul(c, divisor.coeffs[j]);
                rem[top - dd + j] = f.sub(rem[top - dd + j], sub);
            }
        }
        Ok((PolyFq::new(f.clone(), quot), PolyFq::new(f.clone(), rem)))
    }

    /// Remainder of `self` modulo `divisor`.
    pub fn rem(&self, divisor: &PolyFq) -> Result<PolyFq> {
        Ok(self.divrem(divisor)?.1)
    }

    /// The monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &PolyFq) -> PolyFq {
        let f = &self.field;
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor in gcd loop");
            a = b;
            b = r;
        }
        match a.degree() {
            None => a,
            Some(d) => {
                let inv = f.inv(a.coeffs[d]).expect("leading coefficient is nonzero");
                a.scale(inv)
            }
        }
    }

    /// Evaluates at a point by Horner's rule.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Renders like `x^2+2x+1` with high degrees first.
    pub fn to_display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = f.fmt_element(c);
            let term = match i {
                0 => coeff,
                1 if c == f.one() => "x".into(),
                1 => format!("{coeff}x"),
                _ if c == f.one() => format!("x^{i}"),
                _ => format!("{coeff}x^{i}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }
}
