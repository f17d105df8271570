//! Explicit finite fields `F_{p^e}` with exact residue-polynomial arithmetic.
//!
//! A field is described by a [`FieldSpec`]: a prime characteristic `p`, an
//! extension degree `e`, and (for `e > 1`) a monic irreducible modulus of
//! degree `e` over `F_p`, stored low-degree-first.  When no modulus is given
//! the lexicographically smallest monic irreducible is chosen, comparing
//! coefficient vectors low-degree-first, so that every `(p, e)` names one
//! canonical field.
//!
//! Elements are residue polynomials `c_0 + c_1 x + … + c_{e-1} x^{e-1}`.
//! The canonical ordering of elements reads the coefficient vector as a
//! little-endian base-`p` integer `c_0 + c_1 p + … + c_{e-1} p^{e-1}`; a
//! [`FieldElement`] stores exactly this index, and [`FieldSpec::elements`]
//! yields the field in this order.  All arithmetic goes through the field:
//! `field.mul(a, b)`, `field.inv(a)`, and so on.
//!
//! Subfield pairs `F_q ⊆ F_{q^r}` are handled by [`Extension`], which fixes a
//! canonical embedding (the base generator is sent to the smallest root of
//! the base modulus in the large field) and provides the relative trace.  An
//! [`OrderedBasis`] of `F_{q^r}` over `F_q` supports dual bases and the
//! expansion map that rewrites vectors over `F_{q^r}` as blocks of `r`
//! coordinates over `F_q` — the bridge between the plain Hamming metric on
//! `F_{q^r}^n` and the folded metric on `F_q^{rn}`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fqmat::MatrixFq;

/// Largest supported field order.  Keeps indices in `u64` and products in
/// `u64`/`u128` without overflow anywhere in the arithmetic kernels.
pub const MAX_FIELD_ORDER: u64 = 1 << 31;

/// Largest field order for which subfield-embedding searches are attempted.
const MAX_EMBEDDING_SEARCH: u64 = 1 << 20;

/// An element of a finite field, stored as its canonical index.
///
/// The index encodes the coefficient vector `(c_0, …, c_{e-1})` as
/// `c_0 + c_1 p + … + c_{e-1} p^{e-1}`.  Elements carry no reference to
/// their field; all arithmetic is performed through the owning
/// [`FieldSpec`], and an element must only be used with the field that
/// produced it.  Zero is index 0 in every field, so zero tests are
/// field-independent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    /// The canonical index of this element within its field.
    pub fn index(self) -> u64 {
        self.0
    }

    /// True exactly for the additive identity of any field.
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_index(index: u64) -> Self {
        FieldElement(index)
    }
}

/// A concrete finite field `F_{p^e}`.
///
/// Acts as the arithmetic context for [`FieldElement`] values: it owns the
/// modulus and performs every operation.  Two specs compare equal exactly
/// when they have the same characteristic, degree, and modulus, so equal
/// specs are interchangeable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    e: usize,
    /// Monic modulus of degree `e`, low-degree-first; `None` iff `e == 1`.
    modulus: Option<Vec<u64>>,
    q: u64,
}

impl FieldSpec {
    /// Builds `F_{p^e}`.
    ///
    /// `modulus`, when given, must be a monic irreducible of degree `e` over
    /// `F_p` with coefficients below `p`, listed low-degree-first.  When
    /// absent and `e > 1`, the canonical modulus is selected: the
    /// lexicographically smallest monic irreducible of degree `e`, comparing
    /// coefficient vectors low-degree-first.
    pub fn new(p: u64, e: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q
                .checked_mul(p)
                .filter(|&v| v <= MAX_FIELD_ORDER)
                .ok_or(Error::FieldTooLarge { p, e })?;
        }
        let modulus = match (e, modulus) {
            (1, None) => None,
            (1, Some(m)) => {
                validate_modulus_shape(&m, 1, p)?;
                // Any monic linear polynomial cuts out F_p itself; the
                // canonical spec drops it.
                None
            }
            (_, Some(m)) => {
                validate_modulus_shape(&m, e, p)?;
                if !is_irreducible(&m, p) {
                    return Err(Error::InvalidModulus(format!(
                        "{} is reducible over F_{}",
                        poly_string(&m),
                        p
                    )));
                }
                Some(m)
            }
            (_, None) => Some(smallest_irreducible(p, e)),
        };
        Ok(FieldSpec { p, e, modulus, q })
    }

    /// Builds the prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Number of elements `q = p^e`.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// The characteristic `p`.
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// The extension degree `e` over the prime field.
    pub fn degree(&self) -> usize {
        self.e
    }

    /// The modulus, low-degree-first — `None` exactly when `e == 1`.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    /// The additive identity.
    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    /// The multiplicative identity.
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The element with the given canonical index.
    pub fn element(&self, index: u64) -> Result<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::ElementOutOfRange { value: index, bound: self.q })
        }
    }

    /// The element with coefficient vector `coeffs` (length `e`, entries
    /// below `p`, low-degree-first).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.e {
            return Err(Error::CoefficientLength { expected: self.e, actual: coeffs.len() });
        }
        let mut index = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::ElementOutOfRange { value: c, bound: self.p });
            }
            index = index * self.p + c;
        }
        Ok(FieldElement(index))
    }

    /// The coefficient vector of `a`, low-degree-first, length `e`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        let mut out = vec![0u64; self.e];
        self.coeffs_into(a.0, &mut out);
        out
    }

    /// All elements in canonical order, starting with zero.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    /// Addition.
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.e == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let mut out = 0u64;
        let mut scale = 1u64;
        let (mut x, mut y) = (a.0, b.0);
        for _ in 0..self.e {
            out += (x % self.p + y % self.p) % self.p * scale;
            x /= self.p;
            y /= self.p;
            scale *= self.p;
        }
        FieldElement(out)
    }

    /// Additive inverse.
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        if self.p == 2 {
            return a;
        }
        if self.e == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let mut out = 0u64;
        let mut scale = 1u64;
        let mut x = a.0;
        for _ in 0..self.e {
            out += (self.p - x % self.p) % self.p * scale;
            x /= self.p;
            scale *= self.p;
        }
        FieldElement(out)
    }

    /// Subtraction.
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            self.check(a);
            self.check(b);
            return FieldElement(a.0 ^ b.0);
        }
        self.add(a, self.neg(b))
    }

    /// Multiplication.
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        if self.e == 1 {
            return FieldElement(mulmod(a.0, b.0, self.p));
        }
        if self.p == 2 {
            return FieldElement(self.mul_binary(a.0, b.0));
        }
        self.mul_general(a.0, b.0)
    }

    /// `a^exp` by binary exponentiation; `a^0 = 1` including for `a = 0`.
    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// `a / b`; fails when `b` is zero.
    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Renders an element: a bare integer for prime fields, otherwise the
    /// coefficient vector `(c_0,…,c_{e-1})`.
    pub fn fmt_element(&self, a: FieldElement) -> String {
        if self.e == 1 {
            a.0.to_string()
        } else {
            let cs: Vec<String> = self.coeffs(a).iter().map(u64::to_string).collect();
            format!("({})", cs.join(","))
        }
    }

    fn check(&self, a: FieldElement) {
        debug_assert!(a.0 < self.q, "element index {} outside field of order {}", a.0, self.q);
    }

    fn coeffs_into(&self, mut index: u64, out: &mut [u64]) {
        for slot in out.iter_mut() {
            *slot = index % self.p;
            index /= self.p;
        }
    }

    /// Carry-less multiply-and-reduce for characteristic 2: indices are bit
    /// polynomials and the modulus is the bitmask `mod_mask`.
    fn mul_binary(&self, a: u64, b: u64) -> u64 {
        let mut prod = 0u64;
        let mut x = a;
        let mut y = b;
        while y != 0 {
            if y & 1 == 1 {
                prod ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        let mask = self.binary_modulus_mask();
        let e = self.e as u32;
        loop {
            if prod == 0 {
                return prod;
            }
            let deg = 63 - prod.leading_zeros();
            if deg < e {
                return prod;
            }
            prod ^= mask << (deg - e);
        }
    }

    fn binary_modulus_mask(&self) -> u64 {
        let m = self.modulus.as_ref().expect("e > 1 fields store a modulus");
        m.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (c << i))
    }

    fn mul_general(&self, a: u64, b: u64) -> FieldElement {
        let e = self.e;
        let mut ac = [0u64; 32];
        let mut bc = [0u64; 32];
        let mut t = [0u64; 63];
        self.coeffs_into(a, &mut ac[..e]);
        self.coeffs_into(b, &mut bc[..e]);
        for i in 0..e {
            if ac[i] == 0 {
                continue;
            }
            for j in 0..e {
                t[i + j] = (t[i + j] + mulmod(ac[i], bc[j], self.p)) % self.p;
            }
        }
        let m = self.modulus.as_ref().expect("e > 1 fields store a modulus");
        for i in (e..2 * e - 1).rev() {
            let c = t[i];
            if c == 0 {
                continue;
            }
            t[i] = 0;
            for j in 0..e {
                let sub = mulmod(c, m[j], self.p);
                t[i - e + j] = (t[i - e + j] + self.p - sub) % self.p;
            }
        }
        let mut index = 0u64;
        for i in (0..e).rev() {
            index = index * self.p + t[i];
        }
        FieldElement(index)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn validate_modulus_shape(m: &[u64], e: usize, p: u64) -> Result<()> {
    if m.len() != e + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected degree {e} (length {}), got length {}",
            e + 1,
            m.len()
        )));
    }
    if m[e] != 1 {
        return Err(Error::InvalidModulus("leading coefficient must be 1".into()));
    }
    if let Some(&c) = m.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidModulus(format!("coefficient {c} is not reduced mod {p}")));
    }
    Ok(())
}

fn poly_string(m: &[u64]) -> String {
    let terms: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers over F_p, used only for modulus selection and
// validation.  Coefficient slices are low-degree-first and may carry trailing
// zeros.
// ---------------------------------------------------------------------------

fn pdeg(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

/// Remainder of `f` modulo a monic `g` over `F_p`.
fn prem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let dg = pdeg(g).expect("divisor must be nonzero");
    let mut rem = f.to_vec();
    while let Some(dr) = pdeg(&rem) {
        if dr < dg {
            break;
        }
        let c = rem[dr];
        let shift = dr - dg;
        for j in 0..=dg {
            let sub = mulmod(c, g[j], p);
            rem[shift + j] = (rem[shift + j] + p - sub) % p;
        }
    }
    rem
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = pdeg(f).expect("modulus is monic, hence nonzero");
    debug_assert!(e >= 1);
    if e == 1 {
        return true;
    }
    // Trial division by every monic divisor of degree up to e/2.  Degrees are
    // scanned low to high, coefficient vectors in canonical index order; the
    // first divisor found settles the answer.
    for d in 1..=e / 2 {
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut v = idx;
            for slot in g[..d].iter_mut() {
                *slot = v % p;
                v /= p;
            }
            if pdeg(&prem(f, &g, p)).is_none() {
                return false;
            }
        }
    }
    true
}

/// The canonical modulus for `F_{p^e}`: the lexicographically smallest monic
/// irreducible of degree `e`, coefficient vectors compared low-degree-first.
fn smallest_irreducible(p: u64, e: usize) -> Vec<u64> {
    let mut f = vec![0u64; e + 1];
    f[e] = 1;
    let count = p.pow(e as u32);
    for idx in 0..count {
        // Lexicographic ascent on (c_0, …, c_{e-1}): c_0 is the most
        // significant digit of the scan index.
        let mut v = idx;
        for j in (0..e).rev() {
            f[j] = v % p;
            v /= p;
        }
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of degree {e} exist over F_{p}")
}

// ---------------------------------------------------------------------------
// Subfield extensions.
// ---------------------------------------------------------------------------

/// A subfield pair `base ⊆ ext` with a fixed canonical embedding.
///
/// Requires equal characteristics and `base.degree() | ext.degree()`; the
/// relative degree is [`Extension::r`].  The embedding sends the residue
/// class of `x` in the base field to the smallest root (in canonical element
/// order) of the base modulus inside the large field, which pins down an
/// `F_p`-algebra map.  When the two fields are equal this smallest root is
/// the residue class of `x` itself, so the embedding is the identity.
#[derive(Clone, Debug)]
pub struct Extension {
    base: FieldSpec,
    ext: FieldSpec,
    r: usize,
    /// Image of each base element, indexed by canonical base index.
    embed_table: Vec<FieldElement>,
    /// Inverse of `embed_table`, keyed by large-field index.
    retract_table: HashMap<u64, u64>,
}

impl PartialEq for Extension {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.ext == other.ext
    }
}
impl Eq for Extension {}

impl Extension {
    /// Fixes the canonical embedding of `base` into `ext`.
    pub fn new(base: FieldSpec, ext: FieldSpec) -> Result<Self> {
        if base.characteristic() != ext.characteristic() {
            return Err(Error::IncompatibleExtension(format!(
                "characteristics {} and {} differ",
                base.characteristic(),
                ext.characteristic()
            )));
        }
        if ext.degree() % base.degree() != 0 {
            return Err(Error::IncompatibleExtension(format!(
                "degree {} does not divide degree {}",
                base.degree(),
                ext.degree()
            )));
        }
        if ext.order() > MAX_EMBEDDING_SEARCH {
            return Err(Error::IncompatibleExtension(format!(
                "field of order {} is too large for an embedding search",
                ext.order()
            )));
        }
        let r = ext.degree() / base.degree();
        let root = match base.modulus() {
            // Prime base: the subfield is the prime subfield and the base
            // "generator" is 1.
            None => ext.one(),
            Some(m) => {
                // Smallest root of the base modulus in the large field.
                let mut found = None;
                for z in ext.elements() {
                    let mut acc = ext.zero();
                    for &c in m.iter().rev() {
                        acc = ext.mul(acc, z);
                        acc = ext.add(acc, FieldElement::from_index(c));
                    }
                    if acc.is_zero() {
                        found = Some(z);
                        break;
                    }
                }
                found.expect("the base modulus splits in any field containing the base")
            }
        };
        let mut embed_table = Vec::with_capacity(base.order() as usize);
        let mut retract_table = HashMap::with_capacity(base.order() as usize);
        for a in base.elements() {
            let cs = base.coeffs(a);
            let mut acc = ext.zero();
            for &c in cs.iter().rev() {
                acc = ext.mul(acc, root);
                acc = ext.add(acc, FieldElement::from_index(c));
            }
            retract_table.insert(acc.index(), a.index());
            embed_table.push(acc);
        }
        debug_assert_eq!(retract_table.len(), base.order() as usize, "embedding is injective");
        Ok(Extension { base, ext, r, embed_table, retract_table })
    }

    /// The small field.
    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    /// The large field.
    pub fn ext(&self) -> &FieldSpec {
        &self.ext
    }

    /// The relative degree `[ext : base]`.
    pub fn r(&self) -> usize {
        self.r
    }

    /// The canonical image of a base element in the large field.
    pub fn embed(&self, a: FieldElement) -> FieldElement {
        self.embed_table[a.index() as usize]
    }

    /// The base element whose image is `z`, if `z` lies in the embedded
    /// subfield.
    pub fn retract(&self, z: FieldElement) -> Result<FieldElement> {
        self.retract_table
            .get(&z.index())
            .map(|&i| FieldElement::from_index(i))
            .ok_or(Error::NotInSubfield)
    }

    /// Multiplies a large-field element by a base scalar.
    pub fn scalar_mul(&self, c: FieldElement, z: FieldElement) -> FieldElement {
        self.ext.mul(self.embed(c), z)
    }

    /// The relative trace `a + a^q + … + a^{q^{r-1}}` down to the base field,
    /// where `q` is the base order.
    pub fn trace(&self, a: FieldElement) -> FieldElement {
        let q = self.base.order();
        let mut conj = a;
        let mut acc = a;
        for _ in 1..self.r {
            conj = self.ext.pow(conj, q);
            acc = self.ext.add(acc, conj);
        }
        self.retract(acc)
            .expect("a trace is fixed by the q-power map, hence lies in the subfield")
    }
}

// ---------------------------------------------------------------------------
// Ordered bases and expansion.
// ---------------------------------------------------------------------------

/// An ordered basis `(β_1, …, β_r)` of the large field of an [`Extension`]
/// over its base field.
///
/// Construction checks linear independence over the base field by a rank
/// computation.  The basis powers the expansion map: a vector over `F_{q^r}`
/// of length `n` becomes a vector over `F_q` of length `rn`, each symbol
/// replaced by its coordinate block `(c_1, …, c_r)`.
#[derive(Clone, Debug)]
pub struct OrderedBasis {
    extension: Extension,
    elements: Vec<FieldElement>,
    dual: OnceLock<Vec<FieldElement>>,
}

impl PartialEq for OrderedBasis {
    fn eq(&self, other: &Self) -> bool {
        self.extension == other.extension && self.elements == other.elements
    }
}
impl Eq for OrderedBasis {}

impl OrderedBasis {
    /// Validates that `elements` are `r` base-field-independent elements of
    /// the large field and wraps them as a basis.
    pub fn new(extension: &Extension, elements: Vec<FieldElement>) -> Result<Self> {
        if elements.len() != extension.r() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} basis elements, got {}",
                extension.r(),
                elements.len()
            )));
        }
        // Independence over F_q is equivalent to invertibility of the
        // F_p-linear map (γ_{ij}) ↦ Σ_{i,j} γ_{ij} x^j β_i, written as a
        // square matrix over the prime field.
        let ext = extension.ext();
        let p_field = FieldSpec::prime(ext.characteristic())?;
        let e_total = ext.degree();
        let e_base = extension.base().degree();
        let mut cols: Vec<Vec<FieldElement>> = Vec::with_capacity(e_total);
        for beta in &elements {
            for j in 0..e_base {
                let power = extension
                    .base()
                    .element(extension.base().characteristic().pow(j as u32))
                    .expect("x^j is a base element");
                let prod = extension.scalar_mul(power, *beta);
                let col: Vec<FieldElement> = ext
                    .coeffs(prod)
                    .into_iter()
                    .map(|c| p_field.element(c).expect("coefficients are reduced mod p"))
                    .collect();
                cols.push(col);
            }
        }
        let mut entries = Vec::with_capacity(e_total * e_total);
        for row in 0..e_total {
            for col in cols.iter() {
                entries.push(col[row]);
            }
        }
        let m = MatrixFq::new(p_field, e_total, e_total, entries)?;
        if m.rank() != e_total {
            return Err(Error::NotABasis);
        }
        Ok(OrderedBasis { extension: extension.clone(), elements, dual: OnceLock::new() })
    }

    /// The power basis `(1, g, …, g^{r-1})` where `g` is the residue class
    /// of `x` in the large field.  Always independent over the base field.
    pub fn power_basis(extension: &Extension) -> Self {
        let ext = extension.ext();
        let g = if ext.degree() == 1 {
            ext.one() // trivial extension: the basis is just (1)
        } else {
            ext.element(ext.characteristic()).expect("the class of x has index p")
        };
        let mut elements = Vec::with_capacity(extension.r());
        let mut acc = ext.one();
        for _ in 0..extension.r() {
            elements.push(acc);
            acc = ext.mul(acc, g);
        }
        Self::new(extension, elements).expect("powers of the generator form a basis")
    }

    /// The extension this basis lives in.
    pub fn extension(&self) -> &Extension {
        &self.extension
    }

    /// The basis elements, in order.
    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    /// The dual basis `(α_1, …, α_r)`, characterized by
    /// `Tr(β_i α_j) = δ_{ij}`.
    ///
    /// Computed by inverting the Gram matrix `T_{ij} = Tr(β_i β_j)` over the
    /// base field; the trace form of a finite-field extension is
    /// nondegenerate, so the inverse exists for every valid basis.
    pub fn dual(&self) -> OrderedBasis {
        let alpha = self.dual_elements().clone();
        OrderedBasis {
            extension: self.extension.clone(),
            elements: alpha,
            dual: OnceLock::new(),
        }
    }

    fn dual_elements(&self) -> &Vec<FieldElement> {
        self.dual.get_or_init(|| {
            let r = self.extension.r();
            let base = self.extension.base().clone();
            let ext = self.extension.ext();
            let mut gram = Vec::with_capacity(r * r);
            for i in 0..r {
                for j in 0..r {
                    let prod = ext.mul(self.elements[i], self.elements[j]);
                    gram.push(self.extension.trace(prod));
                }
            }
            let t = MatrixFq::new(base, r, r, gram).expect("square Gram matrix");
            let tinv = t.inverse().expect("the trace form is nondegenerate");
            (0..r)
                .map(|j| {
                    let mut acc = ext.zero();
                    for l in 0..r {
                        acc = ext.add(acc, self.extension.scalar_mul(tinv.get(l, j), self.elements[l]));
                    }
                    acc
                })
                .collect()
        })
    }

    /// Coordinates of a single large-field element in this basis.
    pub fn coordinates(&self, z: FieldElement) -> Vec<FieldElement> {
        let ext = self.extension.ext();
        self.dual_elements()
            .iter()
            .map(|&alpha| self.extension.trace(ext.mul(z, alpha)))
            .collect()
    }

    /// Expands a vector over the large field into blocks of `r` base-field
    /// coordinates: `(v_1, …, v_n) ↦ (c_{1,1}, …, c_{1,r}, …, c_{n,r})`.
    pub fn expand_vector(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(v.len() * self.extension.r());
        for &z in v {
            out.extend(self.coordinates(z));
        }
        out
    }

    /// Inverse of [`expand_vector`](Self::expand_vector): reassembles each
    /// width-`r` block into a large-field symbol.
    pub fn unexpand_vector(&self, w: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let r = self.extension.r();
        if w.len() % r != 0 {
            return Err(Error::ColumnsNotDivisible { cols: w.len(), r });
        }
        let ext = self.extension.ext();
        Ok(w.chunks(r)
            .map(|block| {
                let mut acc = ext.zero();
                for (c, beta) in block.iter().zip(&self.elements) {
                    acc = ext.add(acc, self.extension.scalar_mul(*c, *beta));
                }
                acc
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, e: usize) -> FieldSpec {
        FieldSpec::new(p, e, None).unwrap()
    }

    #[test]
    fn canonical_moduli_are_the_lex_smallest_irreducibles() {
        assert_eq!(f(2, 2).modulus(), Some(&[1, 1, 1][..])); // x^2+x+1
        assert_eq!(f(2, 3).modulus(), Some(&[1, 0, 1, 1][..])); // x^3+x^2+1
        assert_eq!(f(3, 2).modulus(), Some(&[1, 0, 1][..])); // x^2+1
        assert_eq!(f(2, 1).modulus(), None);
    }

    #[test]
    fn composite_characteristic_is_rejected() {
        assert!(matches!(FieldSpec::new(4, 1, None), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::new(1, 1, None), Err(Error::NotPrime(1))));
    }

    #[test]
    fn reducible_modulus_is_rejected() {
        // x^2 + 1 = (x+1)^2 over F_2.
        let err = FieldSpec::new(2, 2, Some(vec![1, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::InvalidModulus(_)));
    }

    #[test]
    fn modulus_shape_is_validated() {
        assert!(FieldSpec::new(2, 2, Some(vec![1, 1])).is_err()); // wrong length
        assert!(FieldSpec::new(3, 2, Some(vec![1, 0, 2])).is_err()); // not monic
        assert!(FieldSpec::new(3, 2, Some(vec![5, 0, 1])).is_err()); // unreduced coeff
    }

    #[test]
    fn element_order_reads_coefficients_little_endian() {
        let f4 = f(2, 2);
        let indices: Vec<u64> = f4.elements().map(FieldElement::index).collect();
        assert_eq!(indices, vec![0, 1, 2, 3]);
        assert_eq!(f4.coeffs(f4.element(2).unwrap()), vec![0, 1]); // the generator
        assert_eq!(f4.coeffs(f4.element(3).unwrap()), vec![1, 1]);
        assert_eq!(f4.from_coeffs(&[0, 1]).unwrap().index(), 2);
        assert!(f4.element(4).is_err());
        assert!(f4.from_coeffs(&[2, 0]).is_err());
    }

    #[test]
    fn field_axioms_hold_exhaustively_on_small_fields() {
        for field in [f(2, 1), f(3, 1), f(5, 1), f(2, 2), f(2, 3), f(3, 2), f(2, 4)] {
            let q = field.order();
            for a in field.elements() {
                assert_eq!(field.add(a, field.zero()), a);
                assert_eq!(field.mul(a, field.one()), a);
                assert_eq!(field.add(a, field.neg(a)), field.zero());
                if !a.is_zero() {
                    let ainv = field.inv(a).unwrap();
                    assert_eq!(field.mul(a, ainv), field.one());
                }
                assert_eq!(field.pow(a, q), a, "x^q = x in F_q");
                for b in field.elements() {
                    assert_eq!(field.add(a, b), field.add(b, a));
                    assert_eq!(field.mul(a, b), field.mul(b, a));
                    assert_eq!(field.sub(field.add(a, b), b), a);
                    for c in field.elements() {
                        assert_eq!(field.add(field.add(a, b), c), field.add(a, field.add(b, c)));
                        assert_eq!(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)));
                        assert_eq!(
                            field.mul(a, field.add(b, c)),
                            field.add(field.mul(a, b), field.mul(a, c))
                        );
                    }
                }
            }
            assert!(field.inv(field.zero()).is_err());
        }
    }

    #[test]
    fn large_prime_arithmetic_stays_reduced() {
        let f251 = f(251, 1);
        let a = f251.element(250).unwrap();
        let b = f251.element(249).unwrap();
        assert_eq!(f251.mul(a, b).index(), (250 * 249) % 251);
        assert_eq!(f251.mul(a, f251.inv(a).unwrap()), f251.one());
    }

    #[test]
    fn trace_to_the_prime_field_matches_hand_values() {
        let ext = Extension::new(f(2, 1), f(2, 2)).unwrap();
        let f4 = ext.ext().clone();
        let tr: Vec<u64> = f4.elements().map(|a| ext.trace(a).index()).collect();
        // Tr(0)=0, Tr(1)=0, Tr(α)=1, Tr(α+1)=1 for F_4 with α^2 = α+1.
        assert_eq!(tr, vec![0, 0, 1, 1]);
    }

    #[test]
    fn trace_of_the_trivial_extension_is_the_identity() {
        let ext = Extension::new(f(2, 1), f(2, 1)).unwrap();
        assert_eq!(ext.trace(ext.ext().one()), ext.ext().one());
        assert_eq!(ext.r(), 1);
    }

    #[test]
    fn trace_is_base_linear_and_surjective() {
        let pairs = [
            (f(2, 1), f(2, 2)),
            (f(2, 1), f(2, 3)),
            (f(2, 1), f(2, 4)),
            (f(3, 1), f(3, 2)),
            (f(2, 2), f(2, 4)),
        ];
        for (base, big) in pairs {
            let ext = Extension::new(base.clone(), big.clone()).unwrap();
            let mut image = std::collections::HashSet::new();
            for a in big.elements() {
                image.insert(ext.trace(a).index());
                for b in big.elements() {
                    assert_eq!(
                        ext.trace(big.add(a, b)),
                        base.add(ext.trace(a), ext.trace(b))
                    );
                }
                for c in base.elements() {
                    assert_eq!(
                        ext.trace(ext.scalar_mul(c, a)),
                        base.mul(c, ext.trace(a))
                    );
                }
            }
            assert_eq!(image.len() as u64, base.order(), "trace is onto the base field");
        }
    }

    #[test]
    fn incompatible_extensions_are_rejected() {
        assert!(Extension::new(f(2, 2), f(2, 3)).is_err()); // 2 does not divide 3
        assert!(Extension::new(f(2, 1), f(3, 2)).is_err()); // different characteristic
    }

    #[test]
    fn nested_embedding_round_trips_and_respects_arithmetic() {
        let ext = Extension::new(f(2, 2), f(2, 4)).unwrap();
        let (base, big) = (ext.base().clone(), ext.ext().clone());
        assert_eq!(ext.r(), 2);
        for a in base.elements() {
            assert_eq!(ext.retract(ext.embed(a)).unwrap(), a);
            for b in base.elements() {
                assert_eq!(ext.embed(base.mul(a, b)), big.mul(ext.embed(a), ext.embed(b)));
                assert_eq!(ext.embed(base.add(a, b)), big.add(ext.embed(a), ext.embed(b)));
            }
        }
        let in_subfield: std::collections::HashSet<u64> =
            base.elements().map(|a| ext.embed(a).index()).collect();
        for z in big.elements() {
            if !in_subfield.contains(&z.index()) {
                assert!(ext.retract(z).is_err());
            }
        }
    }

    #[test]
    fn dual_basis_of_one_alpha_over_f2_is_alpha_squared_one() {
        let ext = Extension::new(f(2, 1), f(2, 2)).unwrap();
        let f4 = ext.ext().clone();
        let alpha = f4.element(2).unwrap();
        let basis = OrderedBasis::new(&ext, vec![f4.one(), alpha]).unwrap();
        let dual = basis.dual();
        // α^2 = α + 1 has index 3.
        assert_eq!(dual.elements()[0].index(), 3);
        assert_eq!(dual.elements()[1].index(), 1);
        assert_eq!(dual.dual(), basis, "dual of dual returns the original basis");
    }

    #[test]
    fn dual_basis_satisfies_the_trace_delta_condition() {
        for (base, big) in [(f(2, 1), f(2, 3)), (f(3, 1), f(3, 2)), (f(2, 2), f(2, 4))] {
            let ext = Extension::new(base.clone(), big.clone()).unwrap();
            let basis = OrderedBasis::power_basis(&ext);
            let dual = basis.dual();
            for (i, &bi) in basis.elements().iter().enumerate() {
                for (j, &aj) in dual.elements().iter().enumerate() {
                    let t = ext.trace(big.mul(bi, aj));
                    let expect = if i == j { base.one() } else { base.zero() };
                    assert_eq!(t, expect);
                }
            }
        }
    }

    #[test]
    fn dependent_elements_are_rejected_as_a_basis() {
        let ext = Extension::new(f(2, 1), f(2, 2)).unwrap();
        let f4 = ext.ext().clone();
        let one = f4.one();
        assert!(matches!(OrderedBasis::new(&ext, vec![one, one]), Err(Error::NotABasis)));
        assert!(matches!(
            OrderedBasis::new(&ext, vec![f4.zero(), f4.element(2).unwrap()]),
            Err(Error::NotABasis)
        ));
        assert!(OrderedBasis::new(&ext, vec![one]).is_err()); // wrong count
    }

    #[test]
    fn expansion_matches_hand_coordinates_over_f4() {
        let ext = Extension::new(f(2, 1), f(2, 2)).unwrap();
        let f4 = ext.ext().clone();
        let alpha = f4.element(2).unwrap();
        let basis = OrderedBasis::new(&ext, vec![f4.one(), alpha]).unwrap();
        // α = 0·1 + 1·α.
        let e1: Vec<u64> = basis.expand_vector(&[alpha]).iter().map(|c| c.index()).collect();
        assert_eq!(e1, vec![0, 1]);
        // (1, α+1) ↦ (1,0 | 1,1).
        let v = vec![f4.one(), f4.element(3).unwrap()];
        let e2: Vec<u64> = basis.expand_vector(&v).iter().map(|c| c.index()).collect();
        assert_eq!(e2, vec![1, 0, 1, 1]);
    }

    #[test]
    fn expansion_round_trips_for_every_symbol_and_basis_of_f4() {
        let ext = Extension::new(f(2, 1), f(2, 2)).unwrap();
        let f4 = ext.ext().clone();
        for b1 in f4.elements() {
            for b2 in f4.elements() {
                let Ok(basis) = OrderedBasis::new(&ext, vec![b1, b2]) else { continue };
                for z in f4.elements() {
                    let w = basis.expand_vector(&[z]);
                    assert_eq!(basis.unexpand_vector(&w).unwrap(), vec![z]);
                }
            }
        }
    }

    #[test]
    fn unexpand_rejects_ragged_input() {
        let ext = Extension::new(f(2, 1), f(2, 2)).unwrap();
        let basis = OrderedBasis::power_basis(&ext);
        let one = FieldSpec::prime(2).unwrap().one();
        assert!(basis.unexpand_vector(&[one]).is_err());
    }
}
