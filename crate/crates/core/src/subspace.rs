//! Canonical subspaces of F^n.
//!
//! A [`Subspace`] stores a reduced-row-echelon basis in a fixed ambient
//! dimension. Two values represent the same set of vectors iff they are
//! structurally equal, so subspaces can be compared, sorted and
//! deduplicated directly. This is the carrier for every subalgebra, ideal,
//! core and completion in the crate.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::field::{Field, FieldSpec};
use crate::linalg::{self, LinAlgError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("subspace enumeration is unsupported over {0}")]
    Unsupported(FieldSpec),
    #[error("ambient dimension {dim} over GF({p}) exceeds the enumeration bound {max}")]
    BoundExceeded { p: u32, dim: usize, max: usize },
}

/// Ambient-dimension caps for exhaustive subspace enumeration, keyed by the
/// field characteristic. Exceeding a bound is an error, never a silent
/// truncation; the defaults can be overridden per prime.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bounds {
    overrides: BTreeMap<u32, usize>,
}

impl Bounds {
    pub fn new() -> Self {
        Self::default()
    }

    /// Override the cap for one prime.
    pub fn with(mut self, p: u32, max_dim: usize) -> Self {
        self.overrides.insert(p, max_dim);
        self
    }

    pub fn max_ambient(&self, p: u32) -> usize {
        if let Some(&m) = self.overrides.get(&p) {
            return m;
        }
        match p {
            2 => 6,
            3 => 5,
            5 => 4,
            p if p <= 31 => 3,
            _ => 2,
        }
    }

    /// Parse a `p:dim,p:dim` override list, e.g. `"2:6,5:5"`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let mut b = Bounds::new();
        for part in s.split(',').filter(|p| !p.is_empty()) {
            let (p, d) = part
                .split_once(':')
                .ok_or_else(|| format!("bad bounds entry {part:?}, expected p:dim"))?;
            let p: u32 = p.trim().parse().map_err(|_| format!("bad prime {p:?}"))?;
            let d: usize = d.trim().parse().map_err(|_| format!("bad dim {d:?}"))?;
            b = b.with(p, d);
        }
        Ok(b)
    }
}

/// A subspace of F^ambient_dim with a canonical RREF basis.
///
/// Invariants: pivot columns strictly increase, pivots are 1 and are the
/// only nonzero entries of their column, and there are no zero rows.
/// The `Ord` impl (ambient, then row-lexicographic) is the canonical
/// order used for every sorted list in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ambient, &self.rows).cmp(&(other.ambient, &other.rows))
    }
}

impl<F: Field> Subspace<F> {
    /// The zero subspace of F^ambient.
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    /// The full space F^ambient.
    pub fn full(field: &F, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = linalg::zero_vector(field, ambient);
                v[i] = field.one();
                v
            })
            .collect();
        Subspace {
            ambient,
            rows,
        }
    }

    /// Span of arbitrary generating rows, canonicalized.
    pub fn from_rows(field: &F, ambient: usize, rows: &[Vec<F::Elem>]) -> Result<Self, LinAlgError> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ambient {
                return Err(LinAlgError::RaggedRows {
                    row: i,
                    expected: ambient,
                    got: r.len(),
                });
            }
        }
        let (rref, _) = linalg::reduce(field, rows)?;
        Ok(Subspace {
            ambient,
            rows: rref,
        })
    }

    /// Span of a single vector.
    pub fn line(field: &F, v: &[F::Elem]) -> Self {
        Self::from_rows(field, v.len(), &[v.to_vec()]).expect("single row matches ambient")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivot_columns(&self, field: &F) -> Vec<usize> {
        linalg::pivot_columns(field, &self.rows)
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Smallest subspace containing both operands.
    pub fn sum(&self, field: &F, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Self::from_rows(field, self.ambient, &rows)
    }

    /// Largest subspace contained in both operands.
    ///
    /// Computed through the kernel of the stacked bases: a kernel vector
    /// `(c, d)` with `c*A + d*B = 0` yields the intersection vector `c*A`.
    pub fn intersect(&self, field: &F, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let k = self.dim();
        let m = other.dim();
        // Constraint rows indexed by ambient coordinate, unknowns (c, d).
        let mut constraints = Vec::with_capacity(self.ambient);
        for col in 0..self.ambient {
            let mut row = Vec::with_capacity(k + m);
            for r in &self.rows {
                row.push(r[col].clone());
            }
            for r in &other.rows {
                row.push(r[col].clone());
            }
            constraints.push(row);
        }
        let null = linalg::kernel(field, &constraints, k + m);
        let vectors: Vec<Vec<F::Elem>> = null
            .iter()
            .map(|cd| linalg::combine(field, &cd[..k], &self.rows, self.ambient))
            .collect();
        Self::from_rows(field, self.ambient, &vectors)
    }

    /// Residual of `v` after elimination against the basis; zero iff
    /// `v` lies in the subspace.
    pub fn reduce_vector(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        debug_assert_eq!(v.len(), self.ambient);
        let mut res = v.to_vec();
        for row in &self.rows {
            let pc = row
                .iter()
                .position(|x| !field.is_zero(x))
                .expect("no zero rows in RREF");
            if !field.is_zero(&res[pc]) {
                let c = field.neg(&res[pc]);
                linalg::add_scaled(field, &mut res, &c, row);
            }
        }
        res
    }

    pub fn contains_vector(&self, field: &F, v: &[F::Elem]) -> Result<bool, LinAlgError> {
        if v.len() != self.ambient {
            return Err(LinAlgError::AmbientMismatch {
                left: self.ambient,
                right: v.len(),
            });
        }
        Ok(linalg::is_zero_vector(field, &self.reduce_vector(field, v)))
    }

    pub fn contains(&self, field: &F, other: &Self) -> Result<bool, LinAlgError> {
        self.check_ambient(other)?;
        for r in &other.rows {
            if !linalg::is_zero_vector(field, &self.reduce_vector(field, r)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_proper_subspace_of(&self, field: &F, other: &Self) -> Result<bool, LinAlgError> {
        Ok(self != other && other.contains(field, self)?)
    }

    /// Coefficients of `v` in the RREF basis, if `v` lies in the subspace.
    /// For RREF rows the coefficient of row `i` is just `v[pivot_i]`.
    pub fn coords(&self, field: &F, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let pivots = self.pivot_columns(field);
        let coeffs: Vec<F::Elem> = pivots.iter().map(|&pc| v[pc].clone()).collect();
        let rebuilt = linalg::combine(field, &coeffs, &self.rows, self.ambient);
        if rebuilt == v {
            Some(coeffs)
        } else {
            None
        }
    }

    /// Deterministic extension of the basis to a basis of the ambient
    /// space: the standard basis vectors at non-pivot columns, in column
    /// order.
    pub fn complement_basis(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let pivots = self.pivot_columns(field);
        (0..self.ambient)
            .filter(|c| !pivots.contains(c))
            .map(|c| {
                let mut v = linalg::zero_vector(field, self.ambient);
                v[c] = field.one();
                v
            })
            .collect()
    }

    /// Rows rendered in the field's canonical scalar strings.
    pub fn to_strings(&self, field: &F) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| field.format(x)).collect())
            .collect()
    }
}

/// Every subspace of F^ambient (or only those of dimension `dim_filter`),
/// exactly once, sorted in the canonical order. The count equals the sum
/// of Gaussian binomial coefficients.
///
/// Finite fields only, and only within `bounds`.
pub fn enumerate_subspaces<F: Field>(
    field: &F,
    ambient: usize,
    dim_filter: Option<usize>,
    bounds: &Bounds,
) -> Result<Vec<Subspace<F>>, EnumerationError> {
    let Some(elements) = field.elements() else {
        return Err(EnumerationError::Unsupported(field.spec()));
    };
    let p = field.spec().characteristic();
    let max = bounds.max_ambient(p);
    if ambient > max {
        return Err(EnumerationError::BoundExceeded {
            p,
            dim: ambient,
            max,
        });
    }
    let mut out = Vec::new();
    let dims: Vec<usize> = match dim_filter {
        Some(d) if d <= ambient => vec![d],
        Some(_) => vec![],
        None => (0..=ambient).collect(),
    };
    for k in dims {
        enumerate_dim(field, &elements, ambient, k, &mut out);
    }
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    Ok(out)
}

/// Emit all RREF matrices with `k` rows: choose pivot columns, then fill
/// the free cells (right of the own pivot, outside pivot columns) with all
/// field elements.
fn enumerate_dim<F: Field>(
    field: &F,
    elements: &[F::Elem],
    ambient: usize,
    k: usize,
    out: &mut Vec<Subspace<F>>,
) {
    if k == 0 {
        out.push(Subspace::zero(ambient));
        return;
    }
    if k > ambient {
        return;
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free cells for this pivot pattern.
        let mut cells = Vec::new();
        for (row, &pc) in pivots.iter().enumerate() {
            for col in pc + 1..ambient {
                if !pivots.contains(&col) {
                    cells.push((row, col));
                }
            }
        }
        let mut counters = vec![0usize; cells.len()];
        loop {
            let mut rows = vec![linalg::zero_vector(field, ambient); k];
            for (row, &pc) in pivots.iter().enumerate() {
                rows[row][pc] = field.one();
            }
            for (ci, &(row, col)) in cells.iter().enumerate() {
                rows[row][col] = elements[counters[ci]].clone();
            }
            out.push(Subspace {
                ambient,
                rows,
            });
            // odometer
            let mut i = 0;
            loop {
                if i == counters.len() {
                    break;
                }
                counters[i] += 1;
                if counters[i] < elements.len() {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
            if i == counters.len() {
                break;
            }
        }
        // next pivot combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < ambient - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}
