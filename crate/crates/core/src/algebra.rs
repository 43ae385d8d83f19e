//! Lie algebras as validated structure-constant tables.
//!
//! A [`LieAlgebra`] stores, for each basis pair `i < j`, the coordinates of
//! `[b_i, b_j]`. Antisymmetry and `[x, x] = 0` hold by representation; the
//! Jacobi identity is verified on every basis triple at construction and
//! re-verified for every quotient and direct sum.

use thiserror::Error;

use crate::field::Field;
use crate::linalg::{self, LinAlgError};
use crate::subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("Jacobi identity fails on basis triple ({a}, {b}, {c})")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        a: String,
        b: String,
        c: String,
    },
    #[error("duplicate bracket pair ({i}, {j})")]
    DuplicatePair { i: usize, j: usize },
    #[error("bracket pair ({i}, {j}) out of range for dimension {dim} (need i < j < dim)")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },
    #[error("vector length {got} does not match algebra dimension {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("basis must provide {dim} distinct labels")]
    BadBasisLabels { dim: usize },
}

/// Subalgebra / ideal verdict for a subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubspaceFlags {
    pub is_subalgebra: bool,
    pub is_ideal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A descending series starting at the full space and ending at its stable
/// term; strictly decreasing, with the stable term stored once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport<F: Field> {
    pub kind: SeriesKind,
    pub chain: Vec<Subspace<F>>,
}

impl<F: Field> SeriesReport<F> {
    pub fn stable_term(&self) -> &Subspace<F> {
        self.chain.last().expect("chain starts at the full space")
    }

    pub fn reaches_zero(&self) -> bool {
        self.stable_term().is_zero()
    }

    /// Term `k`, with the stable tail repeated indefinitely.
    pub fn term(&self, k: usize) -> &Subspace<F> {
        &self.chain[k.min(self.chain.len() - 1)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasicFlags {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub completely_solvable: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra<F: Field> {
    field: F,
    dim: usize,
    names: Vec<String>,
    /// `table[i][j - i - 1]` holds the coordinates of `[b_i, b_j]` for i < j.
    table: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> LieAlgebra<F> {
    /// Validate and build an algebra from sparse `i < j` bracket entries.
    /// Pairs omitted are zero. Fails on out-of-range indices, duplicate
    /// pairs, bad labels, or the first Jacobi-violating triple.
    pub fn new(
        field: F,
        dim: usize,
        names: Vec<String>,
        entries: Vec<((usize, usize), Vec<F::Elem>)>,
    ) -> Result<Self, AlgebraError> {
        if names.len() != dim {
            return Err(AlgebraError::BadBasisLabels { dim });
        }
        for a in 0..names.len() {
            for b in a + 1..names.len() {
                if names[a] == names[b] {
                    return Err(AlgebraError::BadBasisLabels { dim });
                }
            }
        }
        let mut table: Vec<Vec<Vec<F::Elem>>> = (0..dim)
            .map(|i| vec![linalg::zero_vector(&field, dim); dim.saturating_sub(i + 1)])
            .collect();
        let mut seen = std::collections::BTreeSet::new();
        for ((i, j), coords) in entries {
            if i >= j || j >= dim {
                return Err(AlgebraError::IndexOutOfRange { i, j, dim });
            }
            if !seen.insert((i, j)) {
                return Err(AlgebraError::DuplicatePair { i, j });
            }
            if coords.len() != dim {
                return Err(AlgebraError::VectorLength {
                    expected: dim,
                    got: coords.len(),
                });
            }
            table[i][j - i - 1] = coords;
        }
        let algebra = LieAlgebra {
            field,
            dim,
            names,
            table,
        };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    /// Convenience constructor with sparse integer coordinates:
    /// `(i, j, [(k, c), ...])` meaning `[b_i, b_j] = sum c * b_k`.
    pub fn from_i64_table(
        field: F,
        names: &[&str],
        entries: &[(usize, usize, &[(usize, i64)])],
    ) -> Result<Self, AlgebraError> {
        let dim = names.len();
        let entries = entries
            .iter()
            .map(|&(i, j, coords)| {
                let mut v = linalg::zero_vector(&field, dim);
                for &(k, c) in coords {
                    v[k] = field.from_i64(c);
                }
                ((i, j), v)
            })
            .collect();
        Self::new(
            field,
            dim,
            names.iter().map(|s| s.to_string()).collect(),
            entries,
        )
    }

    fn check_jacobi(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let ij_k = self.bracket_with_basis(&self.table[i][j - i - 1], k);
                    let jk = self.table[j][k - j - 1].clone();
                    let jk_i = self.bracket_with_basis(&jk, i);
                    let ik = self.table[i][k - i - 1].clone();
                    // [[b_k, b_i], b_j] = -[[b_i, b_k], b_j]
                    let ki_j = self.bracket_with_basis(&ik, j);
                    let mut total = linalg::add_vectors(&self.field, &ij_k, &jk_i);
                    for (t, x) in total.iter_mut().zip(&ki_j) {
                        *t = self.field.sub(t, x);
                    }
                    if !linalg::is_zero_vector(&self.field, &total) {
                        return Err(AlgebraError::JacobiViolation {
                            i,
                            j,
                            k,
                            a: self.names[i].clone(),
                            b: self.names[j].clone(),
                            c: self.names[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Same structure constants, field and dimension; names may differ.
    pub fn same_table(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.table == other.table
    }

    /// `[b_i, b_j]` for arbitrary i, j, via antisymmetry.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<F::Elem> {
        debug_assert!(i < self.dim && j < self.dim);
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.table[i][j - i - 1].clone(),
            Equal => linalg::zero_vector(&self.field, self.dim),
            Greater => self.table[j][i - j - 1]
                .iter()
                .map(|x| self.field.neg(x))
                .collect(),
        }
    }

    /// `[v, b_k]` for a coordinate vector v.
    fn bracket_with_basis(&self, v: &[F::Elem], k: usize) -> Vec<F::Elem> {
        let mut out = linalg::zero_vector(&self.field, self.dim);
        for (i, c) in v.iter().enumerate() {
            if !self.field.is_zero(c) {
                linalg::add_scaled(&self.field, &mut out, c, &self.bracket_basis(i, k));
            }
        }
        out
    }

    /// Bilinear, antisymmetric bracket of coordinate vectors.
    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>, AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::VectorLength {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(AlgebraError::VectorLength {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = linalg::zero_vector(&self.field, self.dim);
        for i in 0..self.dim {
            if self.field.is_zero(&x[i]) && self.field.is_zero(&y[i]) {
                continue;
            }
            for j in i + 1..self.dim {
                // coefficient of [b_i, b_j] in [x, y]
                let c = self.field.sub(
                    &self.field.mul(&x[i], &y[j]),
                    &self.field.mul(&x[j], &y[i]),
                );
                if !self.field.is_zero(&c) {
                    linalg::add_scaled(&self.field, &mut out, &c, &self.table[i][j - i - 1]);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(v) : w -> [v, w]` acting on row vectors from the
    /// right: row i is `[v, b_i]`.
    pub fn ad_matrix(&self, v: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        (0..self.dim)
            .map(|i| {
                let mut e = linalg::zero_vector(&self.field, self.dim);
                e[i] = self.field.one();
                self.bracket(v, &e).expect("basis vector has full length")
            })
            .collect()
    }

    pub fn full_space(&self) -> Subspace<F> {
        Subspace::full(&self.field, self.dim)
    }

    /// Span of all brackets `[a, b]` with a in A, b in B.
    pub fn product_space(
        &self,
        a: &Subspace<F>,
        b: &Subspace<F>,
    ) -> Result<Subspace<F>, AlgebraError> {
        if a.ambient_dim() != self.dim || b.ambient_dim() != self.dim {
            return Err(LinAlgError::AmbientMismatch {
                left: a.ambient_dim().max(b.ambient_dim()),
                right: self.dim,
            }
            .into());
        }
        let mut rows = Vec::new();
        for x in a.rows() {
            for y in b.rows() {
                rows.push(self.bracket(x, y)?);
            }
        }
        Ok(Subspace::from_rows(&self.field, self.dim, &rows)?)
    }

    /// Least bracket-closed subspace containing S: the fixed point of
    /// `S <- S + [S, S]`.
    pub fn closure(&self, s: &Subspace<F>) -> Result<Subspace<F>, AlgebraError> {
        let mut cur = s.clone();
        loop {
            let prod = self.product_space(&cur, &cur)?;
            let next = cur.sum(&self.field, &prod)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn classify_subspace(&self, a: &Subspace<F>) -> Result<SubspaceFlags, AlgebraError> {
        let aa = self.product_space(a, a)?;
        let is_subalgebra = a.contains(&self.field, &aa)?;
        let la = self.product_space(&self.full_space(), a)?;
        let is_ideal = a.contains(&self.field, &la)?;
        debug_assert!(!is_ideal || is_subalgebra);
        Ok(SubspaceFlags {
            is_subalgebra,
            is_ideal,
        })
    }

    pub fn is_subalgebra(&self, a: &Subspace<F>) -> bool {
        self.classify_subspace(a).map(|f| f.is_subalgebra).unwrap_or(false)
    }

    pub fn is_ideal(&self, a: &Subspace<F>) -> bool {
        self.classify_subspace(a).map(|f| f.is_ideal).unwrap_or(false)
    }

    /// Largest subspace N with `[N, B] <= B`; contains B whenever B is a
    /// subalgebra, and is itself a subalgebra.
    pub fn idealizer(&self, b: &Subspace<F>) -> Result<Subspace<F>, AlgebraError> {
        debug_assert!(self.is_subalgebra(b), "idealizer expects a subalgebra");
        let mut constraints = Vec::new();
        for v in b.rows() {
            // residuals of [b_i, v] modulo B, one constraint row per coordinate
            let residuals: Vec<Vec<F::Elem>> = (0..self.dim)
                .map(|i| {
                    let mut e = linalg::zero_vector(&self.field, self.dim);
                    e[i] = self.field.one();
                    let br = self.bracket(&e, v).expect("length checked");
                    b.reduce_vector(&self.field, &br)
                })
                .collect();
            for c in 0..self.dim {
                let row: Vec<F::Elem> = (0..self.dim).map(|i| residuals[i][c].clone()).collect();
                constraints.push(row);
            }
        }
        let rows = linalg::kernel(&self.field, &constraints, self.dim);
        let n = Subspace::from_rows(&self.field, self.dim, &rows)?;
        debug_assert!(n.contains(&self.field, b).unwrap_or(false));
        debug_assert!(self.is_subalgebra(&n));
        Ok(n)
    }

    /// `{x : [x, A] = 0}`; always a subalgebra, by the Jacobi identity.
    pub fn centralizer(&self, a: &Subspace<F>) -> Result<Subspace<F>, AlgebraError> {
        if a.ambient_dim() != self.dim {
            return Err(LinAlgError::AmbientMismatch {
                left: a.ambient_dim(),
                right: self.dim,
            }
            .into());
        }
        let mut constraints = Vec::new();
        for v in a.rows() {
            let images: Vec<Vec<F::Elem>> = (0..self.dim)
                .map(|i| {
                    let mut e = linalg::zero_vector(&self.field, self.dim);
                    e[i] = self.field.one();
                    self.bracket(&e, v).expect("length checked")
                })
                .collect();
            for c in 0..self.dim {
                let row: Vec<F::Elem> = (0..self.dim).map(|i| images[i][c].clone()).collect();
                constraints.push(row);
            }
        }
        let rows = linalg::kernel(&self.field, &constraints, self.dim);
        Ok(Subspace::from_rows(&self.field, self.dim, &rows)?)
    }

    pub fn center(&self) -> Subspace<F> {
        self.centralizer(&self.full_space())
            .expect("full space matches ambient")
    }

    pub fn series(&self, kind: SeriesKind) -> SeriesReport<F> {
        let full = self.full_space();
        let mut chain = vec![full.clone()];
        loop {
            let last = chain.last().expect("nonempty");
            let next = match kind {
                SeriesKind::Derived => self.product_space(last, last),
                SeriesKind::LowerCentral => self.product_space(&full, last),
            }
            .expect("series terms match ambient");
            if &next == last {
                break;
            }
            debug_assert!(last.contains(&self.field, &next).unwrap_or(false));
            chain.push(next);
        }
        SeriesReport { kind, chain }
    }

    /// Derived subalgebra `[L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace<F> {
        let full = self.full_space();
        self.product_space(&full, &full)
            .expect("full space matches ambient")
    }

    pub fn classify_basic(&self) -> BasicFlags {
        let derived = self.series(SeriesKind::Derived);
        let lower = self.series(SeriesKind::LowerCentral);
        let solvable = derived.reaches_zero();
        let nilpotent = lower.reaches_zero();
        let abelian = self.derived_subalgebra().is_zero();
        // L is completely solvable iff [L, L] is a nilpotent subalgebra;
        // its lower central series can be run inside L.
        let d1 = self.derived_subalgebra();
        let mut term = d1.clone();
        loop {
            let next = self.product_space(&d1, &term).expect("ambient matches");
            if next == term {
                break;
            }
            term = next;
        }
        let completely_solvable = term.is_zero();
        let flags = BasicFlags {
            abelian,
            nilpotent,
            solvable,
            completely_solvable,
        };
        debug_assert!(!flags.nilpotent || flags.completely_solvable);
        debug_assert!(!flags.completely_solvable || flags.solvable);
        debug_assert!(!flags.abelian || flags.nilpotent);
        flags
    }

    /// Quotient by an ideal, on the deterministic complement basis (the
    /// standard basis vectors at the ideal's non-pivot columns). The
    /// projection is a surjective homomorphism and the quotient table is
    /// Jacobi-revalidated.
    pub fn quotient(&self, b: &Subspace<F>) -> Result<QuotientMap<F>, AlgebraError> {
        if b.ambient_dim() != self.dim {
            return Err(LinAlgError::AmbientMismatch {
                left: b.ambient_dim(),
                right: self.dim,
            }
            .into());
        }
        if !self.is_ideal(b) {
            return Err(AlgebraError::NotAnIdeal);
        }
        let complement = b.complement_basis(&self.field);
        let comp_cols: Vec<usize> = {
            let pivots = b.pivot_columns(&self.field);
            (0..self.dim).filter(|c| !pivots.contains(c)).collect()
        };
        let m = complement.len();
        let project = |v: &[F::Elem]| -> Vec<F::Elem> {
            let res = b.reduce_vector(&self.field, v);
            comp_cols.iter().map(|&c| res[c].clone()).collect()
        };
        let mut entries = Vec::new();
        for r in 0..m {
            for s in r + 1..m {
                let w = self.bracket(&complement[r], &complement[s])?;
                entries.push(((r, s), project(&w)));
            }
        }
        let names = comp_cols.iter().map(|&c| self.names[c].clone()).collect();
        let quotient = LieAlgebra::new(self.field.clone(), m, names, entries)?;
        Ok(QuotientMap {
            ideal: b.clone(),
            complement_cols: comp_cols,
            lift_rows: complement,
            quotient,
        })
    }

    /// Block-diagonal sum with zero cross brackets. Colliding names on the
    /// right side get a `'` suffix.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let dim = self.dim + other.dim;
        let mut names = self.names.clone();
        for n in &other.names {
            let mut candidate = n.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut entries = Vec::new();
        let embed_left = |v: &[F::Elem], field: &F| {
            let mut out = linalg::zero_vector(field, dim);
            out[..v.len()].clone_from_slice(v);
            out
        };
        let embed_right = |v: &[F::Elem], field: &F, offset: usize| {
            let mut out = linalg::zero_vector(field, dim);
            out[offset..offset + v.len()].clone_from_slice(v);
            out
        };
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                entries.push(((i, j), embed_left(&self.table[i][j - i - 1], &self.field)));
            }
        }
        for i in 0..other.dim {
            for j in i + 1..other.dim {
                entries.push((
                    (self.dim + i, self.dim + j),
                    embed_right(&other.table[i][j - i - 1], &self.field, self.dim),
                ));
            }
        }
        Self::new(self.field.clone(), dim, names, entries)
    }

    /// The algebra structure induced on a bracket-closed subspace, in the
    /// coordinates of its RREF basis rows.
    pub fn restrict(&self, c: &Subspace<F>) -> Result<Self, AlgebraError> {
        let k = c.dim();
        let mut entries = Vec::new();
        for r in 0..k {
            for s in r + 1..k {
                let w = self.bracket(&c.rows()[r], &c.rows()[s])?;
                let coords = c
                    .coords(&self.field, &w)
                    .ok_or(AlgebraError::NotASubalgebra)?;
                entries.push(((r, s), coords));
            }
        }
        let names = (0..k).map(|i| format!("s{i}")).collect();
        Self::new(self.field.clone(), k, names, entries)
    }
}

/// Quotient data: the ideal, the quotient algebra on complement
/// coordinates, the coordinate projection and a section lifting quotient
/// coordinates back to representatives.
#[derive(Debug, Clone)]
pub struct QuotientMap<F: Field> {
    pub ideal: Subspace<F>,
    pub quotient: LieAlgebra<F>,
    complement_cols: Vec<usize>,
    lift_rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> QuotientMap<F> {
    /// Coordinates of `v + B` in the quotient basis.
    pub fn project(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let res = self.ideal.reduce_vector(field, v);
        self.complement_cols.iter().map(|&c| res[c].clone()).collect()
    }

    /// Representative of a quotient coordinate vector.
    pub fn lift(&self, field: &F, w: &[F::Elem]) -> Vec<F::Elem> {
        linalg::combine(field, w, &self.lift_rows, self.ideal.ambient_dim())
    }

    /// Image of a subspace of the parent in quotient coordinates.
    pub fn project_subspace(&self, field: &F, s: &Subspace<F>) -> Subspace<F> {
        let rows: Vec<Vec<F::Elem>> = s.rows().iter().map(|r| self.project(field, r)).collect();
        Subspace::from_rows(field, self.quotient.dim(), &rows).expect("projected rows share width")
    }

    /// Preimage of a subspace of the quotient; always contains the ideal.
    pub fn lift_subspace(&self, field: &F, s: &Subspace<F>) -> Subspace<F> {
        let mut rows: Vec<Vec<F::Elem>> = s.rows().iter().map(|r| self.lift(field, r)).collect();
        rows.extend_from_slice(self.ideal.rows());
        Subspace::from_rows(field, self.ideal.ambient_dim(), &rows)
            .expect("lifted rows share width")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn qv(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    /// Two-dimensional non-abelian algebra: [x, y] = y.
    fn affine2_q() -> LieAlgebra<Rationals> {
        LieAlgebra::from_i64_table(Rationals, &["x", "y"], &[(0, 1, &[(1, 1)])]).unwrap()
    }

    /// Nilpotent 4-dimensional algebra: [a,b] = c, [b,c] = d.
    fn nilp4_q() -> LieAlgebra<Rationals> {
        LieAlgebra::from_i64_table(
            Rationals,
            &["a", "b", "c", "d"],
            &[(0, 1, &[(2, 1)]), (1, 2, &[(3, 1)])],
        )
        .unwrap()
    }

    #[test]
    fn abelian_tables_validate() {
        let a = LieAlgebra::from_i64_table(Rationals, &["x", "y", "z"], &[]).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.classify_basic().abelian);
    }

    #[test]
    fn affine2_validates() {
        let a = affine2_q();
        assert_eq!(a.bracket_basis(0, 1), qv(&[0, 1]));
        assert_eq!(a.bracket_basis(1, 0), qv(&[0, -1]));
    }

    // Hand expansion: with [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1 the Jacobi sum
    // on (e1,e2,e3) is [[e3,e1],e2] = [e1,e2] = e3, nonzero.
    #[test]
    fn jacobi_violation_named() {
        let err = LieAlgebra::from_i64_table(
            Rationals,
            &["e1", "e2", "e3"],
            &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (0, 2, &[(0, -1)])],
        )
        .unwrap_err();
        match err {
            AlgebraError::JacobiViolation { i, j, k, .. } => assert_eq!((i, j, k), (0, 1, 2)),
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            LieAlgebra::from_i64_table(Rationals, &["x", "y"], &[(1, 0, &[(0, 1)])]),
            Err(AlgebraError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            LieAlgebra::from_i64_table(
                Rationals,
                &["x", "y"],
                &[(0, 1, &[(1, 1)]), (0, 1, &[(0, 1)])]
            ),
            Err(AlgebraError::DuplicatePair { i: 0, j: 1 })
        ));
        assert!(matches!(
            LieAlgebra::from_i64_table(Rationals, &["x", "x"], &[]),
            Err(AlgebraError::BadBasisLabels { .. })
        ));
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear() {
        let a = affine2_q();
        let x = qv(&[1, 0]);
        let y = qv(&[0, 1]);
        assert_eq!(a.bracket(&x, &x).unwrap(), qv(&[0, 0]));
        // [x+y, y] = y by bilinear expansion
        assert_eq!(a.bracket(&qv(&[1, 1]), &y).unwrap(), qv(&[0, 1]));
        assert!(a.bracket(&qv(&[1]), &y).is_err());
    }

    // In nilp4, [a, b] = c.
    #[test]
    fn nilp4_brackets() {
        let l = nilp4_q();
        assert_eq!(l.bracket(&qv(&[1, 0, 0, 0]), &qv(&[0, 1, 0, 0])).unwrap(), qv(&[0, 0, 1, 0]));
        // center is <d>: [v, b_i] = 0 forces the a, b, c coefficients to vanish
        let z = l.center();
        assert_eq!(z, Subspace::from_rows(&Rationals, 4, &[qv(&[0, 0, 0, 1])]).unwrap());
    }

    #[test]
    fn product_and_closure() {
        let l = nilp4_q();
        let full = l.full_space();
        // only nonzero products are [a,b]=c and [b,c]=d
        let l1 = l.product_space(&full, &full).unwrap();
        assert_eq!(
            l1,
            Subspace::from_rows(&Rationals, 4, &[qv(&[0, 0, 1, 0]), qv(&[0, 0, 0, 1])]).unwrap()
        );
        // closure of <a, b>: [a,b]=c then [b,c]=d gives all of L
        let ab = Subspace::from_rows(&Rationals, 4, &[qv(&[1, 0, 0, 0]), qv(&[0, 1, 0, 0])]).unwrap();
        assert!(l.closure(&ab).unwrap().is_full());
        // closure of a subalgebra is itself
        let sub = Subspace::from_rows(&Rationals, 4, &[qv(&[1, 0, 0, 0])]).unwrap();
        assert_eq!(l.closure(&sub).unwrap(), sub);
        // affine2: closure(<x+y>) = <x+y> since [x+y, x+y] = 0
        let a = affine2_q();
        let diag = Subspace::from_rows(&Rationals, 2, &[qv(&[1, 1])]).unwrap();
        assert_eq!(a.closure(&diag).unwrap(), diag);
    }

    #[test]
    fn classify_subspace_flags() {
        let a = affine2_q();
        let full = a.full_space();
        assert_eq!(
            a.classify_subspace(&full).unwrap(),
            SubspaceFlags {
                is_subalgebra: true,
                is_ideal: true
            }
        );
        let y = Subspace::from_rows(&Rationals, 2, &[qv(&[0, 1])]).unwrap();
        assert_eq!(
            a.classify_subspace(&y).unwrap(),
            SubspaceFlags {
                is_subalgebra: true,
                is_ideal: true
            }
        );
        // <a, c> in nilp4 is a subalgebra but not an ideal: [b, c] = -d
        let l = nilp4_q();
        let ac = Subspace::from_rows(&Rationals, 4, &[qv(&[1, 0, 0, 0]), qv(&[0, 0, 1, 0])]).unwrap();
        assert_eq!(
            l.classify_subspace(&ac).unwrap(),
            SubspaceFlags {
                is_subalgebra: true,
                is_ideal: false
            }
        );
    }

    #[test]
    fn idealizer_examples() {
        let l = nilp4_q();
        // idealizer of an ideal is L
        let cd = Subspace::from_rows(&Rationals, 4, &[qv(&[0, 0, 1, 0]), qv(&[0, 0, 0, 1])]).unwrap();
        assert!(l.idealizer(&cd).unwrap().is_full());
        // solve [v, a], [v, c] in <a,c> coordinatewise: forces the b coefficient out
        let ac = Subspace::from_rows(&Rationals, 4, &[qv(&[1, 0, 0, 0]), qv(&[0, 0, 1, 0])]).unwrap();
        let n = l.idealizer(&ac).unwrap();
        let expect = Subspace::from_rows(
            &Rationals,
            4,
            &[qv(&[1, 0, 0, 0]), qv(&[0, 0, 1, 0]), qv(&[0, 0, 0, 1])],
        )
        .unwrap();
        assert_eq!(n, expect);
        // affine2: [y, x] = -y is outside <x>, so <x> is self-idealizing
        let a = affine2_q();
        let x = Subspace::from_rows(&Rationals, 2, &[qv(&[1, 0])]).unwrap();
        assert_eq!(a.idealizer(&x).unwrap(), x);
    }

    #[test]
    fn centralizer_examples() {
        let l = nilp4_q();
        assert!(l.centralizer(&Subspace::zero(4)).unwrap().is_full());
        let z = l.centralizer(&l.full_space()).unwrap();
        assert_eq!(z.dim(), 1);
    }

    #[test]
    fn series_examples() {
        // abelian: L > 0
        let ab = LieAlgebra::from_i64_table(Rationals, &["x", "y"], &[]).unwrap();
        let s = ab.series(SeriesKind::Derived);
        assert_eq!(s.chain.len(), 2);
        assert!(s.reaches_zero());
        // affine2 derived: L > <y> > 0
        let a = affine2_q();
        let s = a.series(SeriesKind::Derived);
        assert_eq!(s.chain.len(), 3);
        assert!(s.reaches_zero());
        // affine2 lower central stabilizes at <y>
        let lc = a.series(SeriesKind::LowerCentral);
        assert!(!lc.reaches_zero());
        assert_eq!(lc.stable_term().dim(), 1);
        // nilp4 lower central: L > <c,d> > <d> > 0
        let l = nilp4_q();
        let lc = l.series(SeriesKind::LowerCentral);
        assert_eq!(
            lc.chain.iter().map(|t| t.dim()).collect::<Vec<_>>(),
            vec![4, 2, 1, 0]
        );
    }

    #[test]
    fn classify_basic_examples() {
        let l = nilp4_q();
        let f = l.classify_basic();
        assert!(f.nilpotent && f.completely_solvable && f.solvable && !f.abelian);
        let a = affine2_q();
        let f = a.classify_basic();
        assert!(!f.nilpotent && f.completely_solvable && f.solvable);
    }

    #[test]
    fn quotient_examples() {
        let l = nilp4_q();
        // quotient by 0 reproduces L
        let q0 = l.quotient(&Subspace::zero(4)).unwrap();
        assert!(q0.quotient.same_table(&l));
        assert_eq!(q0.quotient.names(), l.names());
        // quotient by <d> is the 3-dim Heisenberg-type table [a,b] = c
        let d = Subspace::from_rows(&Rationals, 4, &[qv(&[0, 0, 0, 1])]).unwrap();
        let q = l.quotient(&d).unwrap();
        let heis =
            LieAlgebra::from_i64_table(Rationals, &["a", "b", "c"], &[(0, 1, &[(2, 1)])]).unwrap();
        assert!(q.quotient.same_table(&heis));
        // projection is a homomorphism: check on a spanning set of pairs
        for x in [qv(&[1, 2, 0, 3]), qv(&[0, 1, 1, 0])] {
            for y in [qv(&[1, 0, 1, 1]), qv(&[2, 1, 0, 0])] {
                let lhs = q.project(&Rationals, &l.bracket(&x, &y).unwrap());
                let rhs = q
                    .quotient
                    .bracket(&q.project(&Rationals, &x), &q.project(&Rationals, &y))
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // project . lift = identity on the quotient
        let w = qv(&[1, 2, 3]);
        assert_eq!(q.project(&Rationals, &q.lift(&Rationals, &w)), w);
        // quotient by a non-ideal is rejected
        let ac = Subspace::from_rows(&Rationals, 4, &[qv(&[1, 0, 0, 0]), qv(&[0, 0, 1, 0])]).unwrap();
        assert!(matches!(l.quotient(&ac), Err(AlgebraError::NotAnIdeal)));
    }

    #[test]
    fn direct_sum_examples() {
        let a1 = LieAlgebra::from_i64_table(Rationals, &["x"], &[]).unwrap();
        let sum = a1.direct_sum(&a1).unwrap();
        assert_eq!(sum.dim(), 2);
        assert!(sum.classify_basic().abelian);
        assert_eq!(sum.names(), &["x".to_string(), "x'".to_string()]);
        // cross brackets of a mixed sum stay zero
        let l = nilp4_q().direct_sum(&affine2_q()).unwrap();
        assert_eq!(l.dim(), 6);
        let left = qv(&[0, 1, 0, 0, 0, 0]);
        let right = qv(&[0, 0, 0, 0, 1, 0]);
        assert_eq!(l.bracket(&left, &right).unwrap(), qv(&[0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn restrict_builds_subalgebra_table() {
        let l = nilp4_q();
        let bcd = Subspace::from_rows(
            &Rationals,
            4,
            &[qv(&[0, 1, 0, 0]), qv(&[0, 0, 1, 0]), qv(&[0, 0, 0, 1])],
        )
        .unwrap();
        let r = l.restrict(&bcd).unwrap();
        assert_eq!(r.dim(), 3);
        // [b, c] = d becomes [s0, s1] = s2
        assert_eq!(r.bracket_basis(0, 1), qv(&[0, 0, 1]));
        // restricting a non-subalgebra fails
        let bad = Subspace::from_rows(&Rationals, 4, &[qv(&[1, 0, 0, 0]), qv(&[0, 1, 0, 0])]).unwrap();
        assert!(l.restrict(&bad).is_err());
    }

    #[test]
    fn gf2_algebra_roundtrip() {
        let f2 = PrimeField::new(2).unwrap();
        let h = LieAlgebra::from_i64_table(f2, &["x", "y", "z"], &[(0, 1, &[(2, 1)])]).unwrap();
        let flags = h.classify_basic();
        assert!(flags.nilpotent);
        assert_eq!(h.center().dim(), 1);
    }
}
