//! Explicit families of QMDS and dually QMDS codes.
//!
//! * [`pi_code`] — polynomial-interpolation codes: fix `n` pairwise coprime
//!   monic moduli of degree `r` and map a polynomial `F` to the tuple of
//!   its remainders, one block per modulus.  The rows generated by
//!   `1, x, …, x^{k-1}` always give a QMDS code; when every modulus splits
//!   into linear factors ([`split_moduli`]) the code is dually QMDS.
//! * [`binary_long_code`] — for each `r`, a binary one-weight dually QMDS
//!   code of type `[2^{r+1} - 1, r, r + 1, 2^{r+1} - 2]`, the longest
//!   possible for its dimension range; built from a table of subset
//!   vectors ([`SubsetVectorTable`]).
//! * [`qmds_subcode`] — cutting a QMDS code down to any dimension with the
//!   same ceiling `⌈k/r⌉` keeps it QMDS with the same distance.
//! * [`repetition_dual_code`] — the dual of the block repetition code: an
//!   MDS code of type `[n, r, r(n-1), 2]`.

use crate::code::{DistanceMethod, LinearCode};
use crate::error::{Error, Result};
use crate::fqmat::MatrixFq;
use crate::gf::{FieldElement, FieldSpec};
use crate::poly::PolyFq;
use crate::qmds::singleton_bounds;

/// `n` pairwise coprime monic moduli of one common degree `r` over one
/// field — the data defining a polynomial-interpolation code.
#[derive(Clone, Debug)]
pub struct ModuliSet {
    field: FieldSpec,
    r: usize,
    polys: Vec<PolyFq>,
}

impl ModuliSet {
    /// Validates that all moduli are monic of the same degree `r ≥ 1`,
    /// live over one field, and are pairwise coprime.
    pub fn new(polys: Vec<PolyFq>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::EmptyBlockSet);
        }
        let field = polys[0].field().clone();
        let r = match polys[0].degree() {
            Some(r) if r >= 1 => r,
            _ => return Err(Error::WrongModulusDegree { index: 0, expected: 1, actual: 0 }),
        };
        for (i, p) in polys.iter().enumerate() {
            if p.field() != &field {
                return Err(Error::ParamMismatch(format!(
                    "modulus {i} lives over a different field"
                )));
            }
            if p.degree() != Some(r) || !p.is_monic() {
                return Err(Error::WrongModulusDegree {
                    index: i,
                    expected: r,
                    actual: p.degree().unwrap_or(0),
                });
            }
        }
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                let g = polys[i].gcd(&polys[j]);
                if g.degree() != Some(0) {
                    return Err(Error::NonCoprimeModuli { i, j });
                }
            }
        }
        Ok(ModuliSet { field, r, polys })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// The common degree of the moduli — the block width of the code.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of moduli — the block length of the code.
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[PolyFq] {
        &self.polys
    }
}

/// How [`split_moduli`] factors its moduli.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// `F_i = Π (x - a)` over `r` distinct roots per modulus, all `rn`
    /// roots distinct; needs `rn ≤ q`.
    DistinctRoots,
    /// `F_i = (x - a_i)^r` with the `a_i` distinct; needs `n ≤ q`.
    RepeatedRoot,
}

/// Builds `n` split (fully factored) moduli of degree `r` from the first
/// canonical field elements, in canonical order.
pub fn split_moduli(field: &FieldSpec, n: usize, r: usize, mode: SplitMode) -> Result<ModuliSet> {
    if n == 0 || r == 0 {
        return Err(Error::OutOfRange("need n ≥ 1 and r ≥ 1".into()));
    }
    let q = field.order();
    let polys: Vec<PolyFq> = match mode {
        SplitMode::DistinctRoots => {
            let needed = (r * n) as u64;
            if needed > q {
                return Err(Error::FieldTooSmall { needed, order: q });
            }
            let roots: Vec<FieldElement> = field.elements().take(r * n).collect();
            roots.chunks(r).map(|c| PolyFq::from_roots(field.clone(), c)).collect()
        }
        SplitMode::RepeatedRoot => {
            let needed = n as u64;
            if needed > q {
                return Err(Error::FieldTooSmall { needed, order: q });
            }
            field
                .elements()
                .take(n)
                .map(|a| PolyFq::from_roots(field.clone(), &vec![a; r]))
                .collect()
        }
    };
    ModuliSet::new(polys)
}

/// The polynomial-interpolation code of dimension `k` over a moduli set:
/// row `i` of the generator is the remainder tuple of `x^i`, each remainder
/// written low-degree-first into its width-`r` block.
///
/// The remainder map is a bijection on polynomials of degree below `rn`
/// (Chinese remaindering), so the generator always has full rank, and the
/// resulting code is QMDS for every `1 ≤ k ≤ rn`.
pub fn pi_code(moduli: &ModuliSet, k: usize) -> Result<LinearCode> {
    let (n, r) = (moduli.len(), moduli.r());
    let field = moduli.field();
    if k == 0 || k > r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let x = PolyFq::x(field.clone());
    let mut rems = vec![PolyFq::one(field.clone()); n];
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let mut row = Vec::with_capacity(r * n);
        for rem in &rems {
            for idx in 0..r {
                row.push(rem.coeff(idx));
            }
        }
        rows.push(row);
        for (rem, modulus) in rems.iter_mut().zip(moduli.polys()) {
            *rem = rem.mul(&x).rem(modulus)?;
        }
    }
    let g = MatrixFq::from_rows(field.clone(), rows)?;
    LinearCode::from_generator(n, r, g)
}

/// The table of block vectors behind [`binary_long_code`]: one width-`r`
/// binary vector `u_{I,i}` per (nonempty subset `I` of `{1, …, r+1}`,
/// row `i ∈ {1, …, r+1}`) pair.
///
/// Writing `I = {i_1 < … < i_t}`:
///
/// * `u_{I,i} = e_i` when `i < i_t`,
/// * `u_{I,i} = e_{i-1}` when `i > i_t`,
/// * `u_{I,i_t} = e_{i_1} + … + e_{i_{t-1}}` (zero for singletons).
///
/// Subsets are ordered by ascending characteristic bitmask, bit `j - 1`
/// standing for element `j`.
#[derive(Clone, Debug)]
pub struct SubsetVectorTable {
    r: usize,
    subsets: Vec<Vec<usize>>,
}

impl SubsetVectorTable {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 || r > 12 {
            return Err(Error::OutOfRange(format!(
                "subset table supports 1 ≤ r ≤ 12, got {r}"
            )));
        }
        let subsets = (1u32..(1 << (r + 1)))
            .map(|mask| (1..=r + 1).filter(|&j| mask >> (j - 1) & 1 == 1).collect())
            .collect();
        Ok(SubsetVectorTable { r, subsets })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// All `2^{r+1} - 1` nonempty subsets, elements 1-based ascending.
    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// The vector `u_{I,i}` for the subset at `subset_index` and row `i`
    /// (1-based, `1 ≤ i ≤ r + 1`), as 0/1 entries.
    pub fn block_vector(&self, subset_index: usize, i: usize) -> Result<Vec<u64>> {
        let subset = self
            .subsets
            .get(subset_index)
            .ok_or(Error::BlockIndexOutOfRange { index: subset_index, n: self.subsets.len() })?;
        if i == 0 || i > self.r + 1 {
            return Err(Error::OutOfRange(format!(
                "row {i} is outside 1..={}",
                self.r + 1
            )));
        }
        let top = *subset.last().expect("subsets are nonempty");
        let mut u = vec![0u64; self.r];
        if i < top {
            u[i - 1] = 1;
        } else if i > top {
            u[i - 2] = 1;
        } else {
            for &j in &subset[..subset.len() - 1] {
                u[j - 1] ^= 1;
            }
        }
        Ok(u)
    }
}

/// The longest binary dually QMDS code for block width `r`: a one-weight
/// code of type `[2^{r+1} - 1, r, r + 1, 2^{r+1} - 2]` over `F_2`, with one
/// block per nonempty subset of `{1, …, r+1}`.
pub fn binary_long_code(r: usize) -> Result<LinearCode> {
    let table = SubsetVectorTable::new(r)?;
    let field = FieldSpec::prime(2)?;
    let n = table.subsets().len();
    let rows: Vec<Vec<u64>> = (1..=r + 1)
        .map(|i| {
            let mut row = Vec::with_capacity(r * n);
            for s in 0..n {
                row.extend(table.block_vector(s, i)?);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    LinearCode::from_index_rows(field, n, r, &rows)
}

/// Cuts a QMDS code down to dimension `k_new`, keeping the first `k_new`
/// rows of the canonical generator.  Any `k_new` strictly between
/// `r(⌈k/r⌉ - 1)` and `k` keeps `⌈k/r⌉` — hence the distance bound — and
/// so stays QMDS with the same minimum distance.
pub fn qmds_subcode(code: &LinearCode, k_new: usize) -> Result<LinearCode> {
    let (n, r, k) = (code.n(), code.r(), code.k());
    if k == 0 {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let d = code.min_distance(DistanceMethod::RankBlocks)?;
    if d != singleton_bounds(n, r, k)?.d_max {
        return Err(Error::NotQmds);
    }
    let lo = r * (k.div_ceil(r) - 1);
    if k_new <= lo || k_new >= k {
        return Err(Error::SubcodeWindow { lo, hi: k, requested: k_new });
    }
    let rows: Vec<Vec<FieldElement>> = (0..k_new)
        .map(|i| code.canonical_generator().row(i).to_vec())
        .collect();
    let g = MatrixFq::from_rows(code.field().clone(), rows)?;
    LinearCode::from_generator(n, r, g)
}

/// The dual of the block repetition code `{(c, c, …, c) : c ∈ F_q^r}` —
/// an MDS code of type `[n, r, r(n-1), 2]`; needs `n ≥ 2`.
pub fn repetition_dual_code(n: usize, r: usize, field: &FieldSpec) -> Result<LinearCode> {
    if n < 2 || r == 0 {
        return Err(Error::OutOfRange("need n ≥ 2 and r ≥ 1".into()));
    }
    let id = MatrixFq::identity(field.clone(), r);
    let mut rep = id.clone();
    for _ in 1..n {
        rep = rep.hstack(&id)?;
    }
    Ok(LinearCode::from_generator(n, r, rep)?.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmds::{classify, dually_qmds_by_generator_minors};
    use crate::wdist::{wdist_exhaustive, wdist_formula};
    use num::BigUint;

    fn f(q: u64) -> FieldSpec {
        match q {
            2 | 3 | 5 | 7 => FieldSpec::prime(q).unwrap(),
            4 => FieldSpec::new(2, 2, None).unwrap(),
            8 => FieldSpec::new(2, 3, None).unwrap(),
            9 => FieldSpec::new(3, 2, None).unwrap(),
            _ => panic!("no fixture field of order {q}"),
        }
    }

    fn poly(field: &FieldSpec, coeffs: &[u64]) -> PolyFq {
        PolyFq::from_indices(field.clone(), coeffs).unwrap()
    }

    #[test]
    fn moduli_sets_validate_degree_and_coprimality() {
        let f2 = f(2);
        // x^2 and x^2 + x share the factor x.
        let err = ModuliSet::new(vec![poly(&f2, &[0, 0, 1]), poly(&f2, &[0, 1, 1])]).unwrap_err();
        assert!(matches!(err, Error::NonCoprimeModuli { i: 0, j: 1 }));
        // Mixed degrees are rejected.
        let err = ModuliSet::new(vec![poly(&f2, &[0, 0, 1]), poly(&f2, &[1, 1])]).unwrap_err();
        assert!(matches!(err, Error::WrongModulusDegree { index: 1, expected: 2, actual: 1 }));
        // A valid pair: x^2 + x + 1 (irreducible) and x^2.
        let set = ModuliSet::new(vec![poly(&f2, &[1, 1, 1]), poly(&f2, &[0, 0, 1])]).unwrap();
        assert_eq!((set.len(), set.r()), (2, 2));
    }

    #[test]
    fn split_moduli_use_the_first_canonical_elements() {
        // Over F_4 with r = 2, n = 2: roots {0, 1} and {α, α+1} give
        // x^2 + x and x^2 + x + 1.
        let f4 = f(4);
        let set = split_moduli(&f4, 2, 2, SplitMode::DistinctRoots).unwrap();
        let idx = |p: &PolyFq| p.coeffs().iter().map(|c| c.index()).collect::<Vec<_>>();
        assert_eq!(idx(&set.polys()[0]), vec![0, 1, 1]);
        assert_eq!(idx(&set.polys()[1]), vec![1, 1, 1]);

        // Over F_3 with r = 2: (x-0)^2, (x-1)^2, (x-2)^2.
        let set = split_moduli(&f(3), 3, 2, SplitMode::RepeatedRoot).unwrap();
        assert_eq!(idx(&set.polys()[0]), vec![0, 0, 1]);
        assert_eq!(idx(&set.polys()[1]), vec![1, 1, 1]);
        assert_eq!(idx(&set.polys()[2]), vec![1, 2, 1]);

        assert!(matches!(
            split_moduli(&f(2), 2, 2, SplitMode::DistinctRoots),
            Err(Error::FieldTooSmall { needed: 4, order: 2 })
        ));
        assert!(matches!(
            split_moduli(&f(2), 3, 2, SplitMode::RepeatedRoot),
            Err(Error::FieldTooSmall { needed: 3, order: 2 })
        ));
    }

    #[test]
    fn pi_generator_rows_are_remainder_tuples() {
        let f2 = f(2);
        let set = ModuliSet::new(vec![poly(&f2, &[1, 1, 1]), poly(&f2, &[0, 0, 1])]).unwrap();
        let code = pi_code(&set, 4).unwrap();
        let rows: Vec<Vec<u64>> = (0..4)
            .map(|i| code.generator().row(i).iter().map(|e| e.index()).collect())
            .collect();
        // Remainders of 1, x, x^2, x^3 modulo x^2+x+1 and modulo x^2.
        assert_eq!(rows[0], vec![1, 0, 1, 0]);
        assert_eq!(rows[1], vec![0, 1, 0, 1]);
        assert_eq!(rows[2], vec![1, 1, 0, 0]);
        assert_eq!(rows[3], vec![1, 0, 0, 0]);
    }

    #[test]
    fn pi_codes_are_qmds_for_every_dimension() {
        let f2 = f(2);
        // Three pairwise coprime cubics over F_2, one of them not squarefree.
        let set = ModuliSet::new(vec![
            poly(&f2, &[1, 1, 0, 1]),
            poly(&f2, &[1, 0, 1, 1]),
            poly(&f2, &[0, 0, 0, 1]),
        ])
        .unwrap();
        for k in 1..9 {
            let code = pi_code(&set, k).unwrap();
            assert_eq!((code.n(), code.r(), code.k()), (3, 3, k));
            let c = classify(&code, DistanceMethod::Exhaustive).unwrap();
            assert!(c.is_qmds, "k = {k} gave d = {} below the bound", c.d);
        }
    }

    #[test]
    fn pi_codes_over_split_moduli_are_dually_qmds() {
        for (q, mode) in [
            (4, SplitMode::DistinctRoots),
            (4, SplitMode::RepeatedRoot),
            (3, SplitMode::RepeatedRoot),
        ] {
            let field = f(q);
            let n = if mode == SplitMode::DistinctRoots { 2 } else { 3 };
            let set = split_moduli(&field, n, 2, mode).unwrap();
            for k in 1..2 * n {
                let code = pi_code(&set, k).unwrap();
                let c = classify(&code, DistanceMethod::Exhaustive).unwrap();
                assert!(
                    c.is_dually_qmds,
                    "q = {q}, {mode:?}, k = {k}: d = {}, d⊥ = {}",
                    c.d,
                    c.d_perp
                );
            }
        }
    }

    #[test]
    fn subset_table_matches_the_width_one_matrix() {
        let code = binary_long_code(1).unwrap();
        let rows: Vec<Vec<u64>> = (0..2)
            .map(|i| code.generator().row(i).iter().map(|e| e.index()).collect())
            .collect();
        assert_eq!(rows[0], vec![0, 1, 1]);
        assert_eq!(rows[1], vec![1, 0, 1]);
        let table = SubsetVectorTable::new(1).unwrap();
        assert_eq!(table.subsets(), &[vec![1], vec![2], vec![1, 2]]);
    }

    #[test]
    fn binary_long_codes_are_one_weight_and_dually_qmds() {
        for r in 1..=3 {
            let code = binary_long_code(r).unwrap();
            let n = (1 << (r + 1)) - 1;
            assert_eq!((code.n(), code.r(), code.k()), (n, r, r + 1));
            let w = wdist_exhaustive(&code).unwrap();
            for j in 1..n - 1 {
                assert_eq!(*w.count(j), BigUint::from(0u32), "r = {r}, weight {j}");
            }
            assert_eq!(*w.count(n - 1), BigUint::from((1u64 << (r + 1)) - 1));
            assert_eq!(*w.count(n), BigUint::from(0u32));
            assert!(dually_qmds_by_generator_minors(&code).unwrap(), "r = {r}");
            assert_eq!(w, wdist_formula(2, n, r, r + 1).unwrap());
        }
    }

    #[test]
    fn subcodes_keep_the_distance_inside_the_window() {
        let f2 = f(2);
        let set = ModuliSet::new(vec![
            poly(&f2, &[1, 1, 0, 1]),
            poly(&f2, &[1, 0, 1, 1]),
            poly(&f2, &[0, 0, 0, 1]),
        ])
        .unwrap();
        let parent = pi_code(&set, 5).unwrap();
        let d = parent.min_distance(DistanceMethod::Exhaustive).unwrap();
        let sub = qmds_subcode(&parent, 4).unwrap();
        assert_eq!((sub.n(), sub.r(), sub.k()), (3, 3, 4));
        assert_eq!(sub.min_distance(DistanceMethod::Exhaustive).unwrap(), d);
        assert!(classify(&sub, DistanceMethod::Exhaustive).unwrap().is_qmds);
        // Outside the window r(⌈k/r⌉ - 1) < k' < k.
        assert!(matches!(
            qmds_subcode(&parent, 3),
            Err(Error::SubcodeWindow { lo: 3, hi: 5, requested: 3 })
        ));
        assert!(matches!(qmds_subcode(&parent, 5), Err(Error::SubcodeWindow { .. })));
        // A non-QMDS input is rejected.
        let flat =
            LinearCode::from_index_rows(f2, 2, 2, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        assert!(matches!(qmds_subcode(&flat, 1), Err(Error::NotQmds)));
    }

    #[test]
    fn repetition_dual_is_mds() {
        let code = repetition_dual_code(3, 2, &f(2)).unwrap();
        assert_eq!((code.n(), code.r(), code.k()), (3, 2, 4));
        let c = classify(&code, DistanceMethod::Exhaustive).unwrap();
        assert_eq!((c.d, c.d_perp), (2, 3));
        assert_eq!(c.label(), "MDS");
        assert_eq!(c.d + c.d_perp, 3 + 2); // n + 2
        // Its dual really is the repetition code: all weights 0 or n.
        let w = wdist_exhaustive(&code.dual()).unwrap();
        assert_eq!(*w.count(3), BigUint::from(3u32));
        assert_eq!(w.count(1).clone() + w.count(2), BigUint::from(0u32));
    }
}
