//! Isomorphism testing for small algebras.
//!
//! Cheap invariants first (dimension, series dimensions, center, abelian
//! flag); structural equality and canonical bases settle the easy shapes;
//! beyond that, an exhaustive deterministic search over invertible basis
//! images runs whenever the ground field is finite and |GL(n, q)| stays
//! within bounds. Everything else is an honest `Unknown`.

use crate::algebra::{LieAlgebra, SeriesKind};
use crate::field::Field;
use crate::linalg;
use crate::subspace::Subspace;

/// Largest GL(n, q) the exhaustive search will scan.
pub const GL_SEARCH_BOUND: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict<F: Field> {
    /// Row i of the witness is the image of basis vector i; the witness is
    /// re-verified against the bracket tables before being returned.
    Yes(Vec<Vec<F::Elem>>),
    /// The named invariant (or an exhausted search) distinguishes the two.
    No(String),
    Unknown,
}

impl<F: Field> IsoVerdict<F> {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }
}

fn invariant_profile<F: Field>(l: &LieAlgebra<F>) -> (Vec<usize>, Vec<usize>, usize, bool) {
    let derived: Vec<usize> = l
        .series(SeriesKind::Derived)
        .chain
        .iter()
        .map(|t| t.dim())
        .collect();
    let lower: Vec<usize> = l
        .series(SeriesKind::LowerCentral)
        .chain
        .iter()
        .map(|t| t.dim())
        .collect();
    (derived, lower, l.center().dim(), l.classify_basic().abelian)
}

/// Check that `p` (rows = basis images) is an invertible homomorphism
/// from `a` to `b`.
pub fn verify_isomorphism<F: Field>(
    a: &LieAlgebra<F>,
    b: &LieAlgebra<F>,
    p: &[Vec<F::Elem>],
) -> bool {
    let field = a.field();
    let n = a.dim();
    if b.dim() != n || p.len() != n {
        return false;
    }
    match linalg::reduce(field, p) {
        Ok((_, rank)) if rank == n => {}
        _ => return false,
    }
    for i in 0..n {
        for j in i + 1..n {
            let image_of_bracket =
                linalg::combine(field, &a.bracket_basis(i, j), p, n);
            let bracket_of_images = b.bracket(&p[i], &p[j]).expect("rows have length n");
            if image_of_bracket != bracket_of_images {
                return false;
            }
        }
    }
    true
}

fn gl_order(q: u64, n: usize) -> u128 {
    let qn = (q as u128).pow(n as u32);
    let mut order: u128 = 1;
    for i in 0..n {
        let factor = qn - (q as u128).pow(i as u32);
        order = order.saturating_mul(factor);
        if order > GL_SEARCH_BOUND {
            return order;
        }
    }
    order
}

/// Decide isomorphism where possible.
///
/// Exhaustive search runs only over finite fields with |GL(n, q)| at most
/// [`GL_SEARCH_BOUND`]; over the rationals only dimensions <= 2 are decided
/// structurally. `Unknown` is distinct from `No` everywhere.
pub fn is_isomorphic<F: Field>(a: &LieAlgebra<F>, b: &LieAlgebra<F>) -> IsoVerdict<F> {
    let field = a.field();
    if field != b.field() {
        return IsoVerdict::No("ground field".to_string());
    }
    if a.dim() != b.dim() {
        return IsoVerdict::No("dimension".to_string());
    }
    let n = a.dim();
    let (da, la, za, aba) = invariant_profile(a);
    let (db, lb, zb, abb) = invariant_profile(b);
    if aba != abb {
        return IsoVerdict::No("abelian flag".to_string());
    }
    if da != db {
        return IsoVerdict::No("derived series dimensions".to_string());
    }
    if la != lb {
        return IsoVerdict::No("lower central series dimensions".to_string());
    }
    if za != zb {
        return IsoVerdict::No("center dimension".to_string());
    }
    if a.same_table(b) {
        let identity = Subspace::full(field, n).rows().to_vec();
        return IsoVerdict::Yes(identity);
    }
    if n <= 1 {
        // equal dimensions, both abelian
        let identity = Subspace::full(field, n).rows().to_vec();
        return IsoVerdict::Yes(identity);
    }
    if n == 2 {
        // Both non-abelian (abelian tables are identical, caught above).
        // Each has a basis (x, w) with [x, w] = w; map one to the other.
        let pa = canonical_affine_basis(a);
        let pb = canonical_affine_basis(b);
        let p = change_of_basis(a, &pa, &pb);
        debug_assert!(verify_isomorphism(a, b, &p));
        return IsoVerdict::Yes(p);
    }
    let Some(q) = field.size() else {
        return IsoVerdict::Unknown;
    };
    if gl_order(q, n) > GL_SEARCH_BOUND {
        return IsoVerdict::Unknown;
    }
    match exhaustive_search(a, b) {
        Some(p) => {
            debug_assert!(verify_isomorphism(a, b, &p));
            IsoVerdict::Yes(p)
        }
        None => IsoVerdict::No("exhaustive basis-change search".to_string()),
    }
}

/// Basis (x, w) of a 2-dimensional non-abelian algebra with [x, w] = w.
fn canonical_affine_basis<F: Field>(l: &LieAlgebra<F>) -> Vec<Vec<F::Elem>> {
    let field = l.field();
    let derived = l.derived_subalgebra();
    debug_assert_eq!(derived.dim(), 1);
    let w = derived.rows()[0].clone();
    // any basis vector outside <w> acts on w by a nonzero scalar
    for i in 0..2 {
        let mut e = linalg::zero_vector(field, 2);
        e[i] = field.one();
        if derived.contains_vector(field, &e).expect("ambient matches") {
            continue;
        }
        let bw = l.bracket(&e, &w).expect("length 2");
        let alpha = derived
            .coords(field, &bw)
            .expect("[x', w] lies in the derived subalgebra")[0]
            .clone();
        debug_assert!(!field.is_zero(&alpha), "non-abelian forces a nonzero action");
        let inv = field.inv(&alpha).expect("nonzero scalar");
        let x = linalg::scale_vector(field, &inv, &e);
        return vec![x, w];
    }
    unreachable!("some standard basis vector lies outside the derived line")
}

/// Matrix sending the rows of `basis_a` to the rows of `basis_b`, i.e.
/// `basis_a[i] * P = basis_b[i]`.
fn change_of_basis<F: Field>(
    l: &LieAlgebra<F>,
    basis_a: &[Vec<F::Elem>],
    basis_b: &[Vec<F::Elem>],
) -> Vec<Vec<F::Elem>> {
    let field = l.field();
    let n = l.dim();
    (0..n)
        .map(|i| {
            let mut e = linalg::zero_vector(field, n);
            e[i] = field.one();
            let coeffs = linalg::solve_in_rows(field, basis_a, &e)
                .expect("canonical basis rows are independent");
            linalg::combine(field, &coeffs, basis_b, n)
        })
        .collect()
}

/// Deterministic scan of invertible basis images, rows chosen in vector
/// order with independence pruning and early bracket checks where the
/// structure constants permit.
fn exhaustive_search<F: Field>(a: &LieAlgebra<F>, b: &LieAlgebra<F>) -> Option<Vec<Vec<F::Elem>>> {
    let field = a.field();
    let n = a.dim();
    let elements = field.elements().expect("finite field");
    let mut vectors: Vec<Vec<F::Elem>> = Vec::new();
    let mut counters = vec![0usize; n];
    loop {
        vectors.push(counters.iter().map(|&c| elements[c].clone()).collect());
        let mut i = 0;
        loop {
            if i == n {
                break;
            }
            counters[i] += 1;
            if counters[i] < elements.len() {
                break;
            }
            counters[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    let mut rows: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
    search_level(a, b, &vectors, &mut rows)
}

fn search_level<F: Field>(
    a: &LieAlgebra<F>,
    b: &LieAlgebra<F>,
    vectors: &[Vec<F::Elem>],
    rows: &mut Vec<Vec<F::Elem>>,
) -> Option<Vec<Vec<F::Elem>>> {
    let field = a.field();
    let n = a.dim();
    let depth = rows.len();
    if depth == n {
        return if verify_isomorphism(a, b, rows) {
            Some(rows.clone())
        } else {
            None
        };
    }
    let span = Subspace::from_rows(field, n, rows).expect("rows share width");
    'candidates: for v in vectors {
        if span.contains_vector(field, v).expect("ambient matches") {
            continue;
        }
        rows.push(v.clone());
        // Early check: brackets [b_i, b_depth] whose coordinates only
        // involve already-chosen basis vectors are fully determined.
        let j = depth;
        for i in 0..j {
            let coords = a.bracket_basis(i, j);
            if coords[j + 1..].iter().any(|c| !field.is_zero(c)) {
                continue;
            }
            let image = linalg::combine(field, &coords[..=j], &rows[..=j], n);
            let bracket = b.bracket(&rows[i], &rows[j]).expect("length n");
            if image != bracket {
                rows.pop();
                continue 'candidates;
            }
        }
        if let Some(found) = search_level(a, b, vectors, rows) {
            return Some(found);
        }
        rows.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn heisenberg3<F: Field>(field: F) -> LieAlgebra<F> {
        LieAlgebra::from_i64_table(field, &["x", "y", "z"], &[(0, 1, &[(2, 1)])]).unwrap()
    }

    fn abelian3<F: Field>(field: F) -> LieAlgebra<F> {
        LieAlgebra::from_i64_table(field, &["x", "y", "z"], &[]).unwrap()
    }

    #[test]
    fn self_isomorphism_is_identity() {
        let f2 = PrimeField::new(2).unwrap();
        let h = heisenberg3(f2);
        match is_isomorphic(&h, &h) {
            IsoVerdict::Yes(p) => {
                assert_eq!(p, Subspace::full(&f2, 3).rows().to_vec());
            }
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn abelian_flag_distinguishes() {
        let f2 = PrimeField::new(2).unwrap();
        let h = heisenberg3(f2);
        let a = abelian3(f2);
        assert!(matches!(is_isomorphic(&h, &a), IsoVerdict::No(_)));
    }

    #[test]
    fn one_dimensional_always_isomorphic() {
        let a = LieAlgebra::from_i64_table(Rationals, &["u"], &[]).unwrap();
        let b = LieAlgebra::from_i64_table(Rationals, &["v"], &[]).unwrap();
        assert!(is_isomorphic(&a, &b).is_yes());
    }

    // All 2-dim non-abelian algebras are isomorphic; the witness must be
    // verified by the bracket-preservation equations.
    #[test]
    fn two_dim_nonabelian_canonical() {
        let a = LieAlgebra::from_i64_table(Rationals, &["x", "y"], &[(0, 1, &[(1, 1)])]).unwrap();
        // [u, v] = 3u: derived line is <u>
        let b = LieAlgebra::from_i64_table(Rationals, &["u", "v"], &[(0, 1, &[(0, 3)])]).unwrap();
        match is_isomorphic(&a, &b) {
            IsoVerdict::Yes(p) => assert!(verify_isomorphism(&a, &b, &p)),
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    // Basis permutation of the Heisenberg table over GF(3), found by the
    // exhaustive search.
    #[test]
    fn exhaustive_search_finds_permuted_table() {
        let f3 = PrimeField::new(3).unwrap();
        let h = heisenberg3(f3);
        let permuted =
            LieAlgebra::from_i64_table(f3, &["x", "y", "z"], &[(1, 2, &[(0, 2)])]).unwrap();
        match is_isomorphic(&h, &permuted) {
            IsoVerdict::Yes(p) => assert!(verify_isomorphism(&h, &permuted, &p)),
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn rationals_dim3_is_unknown() {
        let a = heisenberg3(Rationals);
        let b = LieAlgebra::from_i64_table(Rationals, &["x", "y", "z"], &[(0, 2, &[(1, 1)])]).unwrap();
        assert_eq!(is_isomorphic(&a, &b), IsoVerdict::Unknown);
    }

    #[test]
    fn gl_bound_respected() {
        // GL(4, 3) exceeds the bound; GL(4, 2) does not.
        assert!(gl_order(3, 4) > GL_SEARCH_BOUND);
        assert!(gl_order(2, 4) <= GL_SEARCH_BOUND);
        assert!(gl_order(5, 3) <= GL_SEARCH_BOUND);
    }
}
