//! Subalgebra and ideal lattices.
//!
//! Over a finite field within bounds, [`build_lattice`] enumerates every
//! subspace and filters it through the closure conditions, yielding the
//! exhaustive, canonically ordered lists everything downstream relies on.
//! Over the rationals only the decidable shapes are served (see
//! [`crate::rational`]); anything else is refused rather than approximated.

use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::field::{Field, PrimeField, Rationals};
use crate::index;
use crate::linalg;
use crate::rational;
use crate::subspace::{enumerate_subspaces, Bounds, EnumerationError, Subspace};
use crate::TriBool;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ambient dimension {dim} over GF({p}) exceeds the enumeration bound {max}")]
    BoundExceeded { p: u32, dim: usize, max: usize },
    #[error("expected dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<EnumerationError> for LatticeError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::Unsupported(spec) => {
                LatticeError::Unsupported(format!("subspace enumeration over {spec}"))
            }
            EnumerationError::BoundExceeded { p, dim, max } => {
                LatticeError::BoundExceeded { p, dim, max }
            }
        }
    }
}

/// Cached exhaustive enumerations for one algebra. Over the rationals only
/// the ideal lists are populated (semisimple algebras only).
#[derive(Debug, Clone)]
pub struct LatticeIndex<F: Field> {
    pub subalgebras: Option<Vec<Subspace<F>>>,
    pub ideals: Vec<Subspace<F>>,
    pub maximal_subalgebras: Option<Vec<Subspace<F>>>,
    pub minimal_ideals: Vec<Subspace<F>>,
}

impl<F: Field> LatticeIndex<F> {
    pub fn subalgebras(&self) -> Result<&[Subspace<F>], LatticeError> {
        self.subalgebras.as_deref().ok_or_else(|| {
            LatticeError::Unsupported("subalgebra enumeration unavailable over this field".into())
        })
    }

    pub fn maximal_subalgebras(&self) -> Result<&[Subspace<F>], LatticeError> {
        self.maximal_subalgebras.as_deref().ok_or_else(|| {
            LatticeError::Unsupported("maximal subalgebras unavailable over this field".into())
        })
    }
}

fn minimal_members<F: Field>(field: &F, list: &[Subspace<F>]) -> Vec<Subspace<F>> {
    list.iter()
        .filter(|s| !s.is_zero())
        .filter(|s| {
            !list.iter().any(|other| {
                !other.is_zero()
                    && other
                        .is_proper_subspace_of(field, s)
                        .expect("ambient matches")
            })
        })
        .cloned()
        .collect()
}

/// Exhaustive lattice over a finite field; decidable ideal lists over the
/// rationals (semisimple only, via simple components).
pub fn build_lattice<F: GroundField>(
    l: &LieAlgebra<F>,
    bounds: &Bounds,
) -> Result<LatticeIndex<F>, LatticeError> {
    let field = l.field();
    if field.elements().is_none() {
        // rational path: ideals only, and only when semisimple
        let ideals = F::semisimple_ideals(l)?;
        let minimal_ideals = minimal_members(field, &ideals);
        return Ok(LatticeIndex {
            subalgebras: None,
            ideals,
            maximal_subalgebras: None,
            minimal_ideals,
        });
    }
    let all = enumerate_subspaces(field, l.dim(), None, bounds)?;
    let mut subalgebras = Vec::new();
    let mut ideals = Vec::new();
    for s in all {
        let flags = l.classify_subspace(&s).expect("ambient matches");
        if flags.is_subalgebra {
            subalgebras.push(s.clone());
        }
        if flags.is_ideal {
            ideals.push(s);
        }
    }
    let maximal: Vec<Subspace<F>> = subalgebras
        .iter()
        .filter(|s| !s.is_full())
        .filter(|s| {
            !subalgebras.iter().any(|t| {
                !t.is_full()
                    && s.is_proper_subspace_of(field, t)
                        .expect("ambient matches")
            })
        })
        .cloned()
        .collect();
    let minimal_ideals = minimal_members(field, &ideals);
    Ok(LatticeIndex {
        subalgebras: Some(subalgebras),
        ideals,
        maximal_subalgebras: Some(maximal),
        minimal_ideals,
    })
}

/// Subideal test via the ascending idealizer tower `T0 = B`,
/// `T_{k+1} = N_L(T_k)`: B is a subideal iff the tower reaches L.
/// Field-agnostic; the tower strictly ascends or stalls within dim L steps.
pub fn is_subideal<F: Field>(l: &LieAlgebra<F>, b: &Subspace<F>) -> bool {
    debug_assert!(l.is_subalgebra(b), "subideal test expects a subalgebra");
    let mut tower = b.clone();
    loop {
        if tower.is_full() {
            return true;
        }
        let next = l.idealizer(&tower).expect("ambient matches");
        if next == tower {
            return false;
        }
        tower = next;
    }
}

/// Frattini subalgebra (intersection of all maximal subalgebras) and
/// Frattini ideal (its core). The empty intersection is L itself.
pub fn frattini<F: Field>(
    l: &LieAlgebra<F>,
    lattice: &LatticeIndex<F>,
) -> Result<(Subspace<F>, Subspace<F>), LatticeError> {
    let maximal = lattice.maximal_subalgebras()?;
    let field = l.field();
    let mut f = l.full_space();
    for m in maximal {
        f = f.intersect(field, m).expect("ambient matches");
    }
    let phi = index::core_of(l, &f);
    Ok((f, phi))
}

fn is_solvable_subspace<F: Field>(l: &LieAlgebra<F>, b: &Subspace<F>) -> bool {
    let mut term = b.clone();
    loop {
        let next = l.product_space(&term, &term).expect("ambient matches");
        if next == term {
            return term.is_zero();
        }
        term = next;
    }
}

fn is_nilpotent_subspace<F: Field>(l: &LieAlgebra<F>, b: &Subspace<F>) -> bool {
    let mut term = b.clone();
    loop {
        let next = l.product_space(b, &term).expect("ambient matches");
        if next == term {
            return term.is_zero();
        }
        term = next;
    }
}

/// Largest solvable ideal, from an enumerated ideal list. Verified to
/// contain every other solvable ideal; a failure there is a hard error.
pub fn radical_from_lattice<F: Field>(
    l: &LieAlgebra<F>,
    lattice: &LatticeIndex<F>,
) -> Result<Subspace<F>, LatticeError> {
    let field = l.field();
    let solvable: Vec<&Subspace<F>> = lattice
        .ideals
        .iter()
        .filter(|i| is_solvable_subspace(l, i))
        .collect();
    let best = solvable
        .iter()
        .max_by_key(|i| i.dim())
        .ok_or_else(|| LatticeError::Internal("no solvable ideal, not even 0".into()))?;
    for i in &solvable {
        if !best.contains(field, i).expect("ambient matches") {
            return Err(LatticeError::Internal(
                "largest solvable ideal does not contain a solvable ideal".into(),
            ));
        }
    }
    Ok((*best).clone())
}

/// Largest nilpotent ideal, from an enumerated ideal list; verified to
/// contain every nilpotent ideal.
pub fn nilradical<F: Field>(
    l: &LieAlgebra<F>,
    lattice: &LatticeIndex<F>,
) -> Result<Subspace<F>, LatticeError> {
    let field = l.field();
    let nilpotent: Vec<&Subspace<F>> = lattice
        .ideals
        .iter()
        .filter(|i| is_nilpotent_subspace(l, i))
        .collect();
    let best = nilpotent
        .iter()
        .max_by_key(|i| i.dim())
        .ok_or_else(|| LatticeError::Internal("no nilpotent ideal, not even 0".into()))?;
    for i in &nilpotent {
        if !best.contains(field, i).expect("ambient matches") {
            return Err(LatticeError::Internal(
                "largest nilpotent ideal does not contain a nilpotent ideal".into(),
            ));
        }
    }
    Ok((*best).clone())
}

pub use rational::is_nonsplit_simple_3dim;

/// Ground-field-specific decision procedures behind the generic operations:
/// exhaustive enumeration over finite fields, structural certificates over
/// the rationals.
pub trait GroundField: Field + Sized {
    /// A one-dimensional ideal if one exists; `Err` when the field-side
    /// search is infeasible (oversized line enumerations).
    fn one_dim_ideal(l: &LieAlgebra<Self>) -> Result<Option<Subspace<Self>>, LatticeError>;

    /// The complete ideal list, or `Err` when it is not decidable.
    fn all_ideals(
        l: &LieAlgebra<Self>,
        bounds: &Bounds,
    ) -> Result<Vec<Subspace<Self>>, LatticeError>;

    /// Ideal list for the rational build_lattice path (semisimple only);
    /// finite fields never call this.
    fn semisimple_ideals(l: &LieAlgebra<Self>) -> Result<Vec<Subspace<Self>>, LatticeError>;

    /// Largest solvable ideal.
    fn solvable_radical(
        l: &LieAlgebra<Self>,
        bounds: &Bounds,
    ) -> Result<Subspace<Self>, LatticeError>;

    /// Structural maximality certificate; `Yes` is trusted, anything else
    /// falls through to further heuristics.
    fn maximality_certificate(l: &LieAlgebra<Self>, m: &Subspace<Self>) -> TriBool;
}

/// All one-dimensional subspaces, via canonical representatives (first
/// nonzero coordinate 1).
fn enumerate_lines(field: &PrimeField, ambient: usize) -> Vec<Subspace<PrimeField>> {
    let elements = field.elements().expect("finite");
    let mut out = Vec::new();
    for lead in 0..ambient {
        let tail = ambient - lead - 1;
        let mut counters = vec![0usize; tail];
        loop {
            let mut v = vec![0u32; ambient];
            v[lead] = 1;
            for (t, &c) in counters.iter().enumerate() {
                v[lead + 1 + t] = elements[c];
            }
            out.push(Subspace::from_rows(field, ambient, &[v]).expect("row matches ambient"));
            let mut i = 0;
            loop {
                if i == tail {
                    break;
                }
                counters[i] += 1;
                if counters[i] < elements.len() {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
            if i == tail {
                break;
            }
        }
    }
    out.sort();
    out
}

const LINE_ENUMERATION_CAP: u64 = 2_000_000;

impl GroundField for PrimeField {
    fn one_dim_ideal(l: &LieAlgebra<Self>) -> Result<Option<Subspace<Self>>, LatticeError> {
        let p = self_modulus(l);
        let n = l.dim();
        if n == 0 {
            return Ok(None);
        }
        let lines = (p as u64)
            .checked_pow(n as u32 - 1)
            .filter(|&c| c <= LINE_ENUMERATION_CAP);
        if lines.is_none() {
            return Err(LatticeError::Unsupported(format!(
                "line enumeration over GF({p}) in dimension {n} is infeasible"
            )));
        }
        for line in enumerate_lines(l.field(), n) {
            let v = &line.rows()[0];
            let ideal = (0..n).all(|i| {
                let mut e = linalg::zero_vector(l.field(), n);
                e[i] = 1;
                let w = l.bracket(&e, v).expect("length matches");
                line.contains_vector(l.field(), &w).expect("ambient matches")
            });
            if ideal {
                return Ok(Some(line));
            }
        }
        Ok(None)
    }

    fn all_ideals(
        l: &LieAlgebra<Self>,
        bounds: &Bounds,
    ) -> Result<Vec<Subspace<Self>>, LatticeError> {
        let all = enumerate_subspaces(l.field(), l.dim(), None, bounds)?;
        Ok(all
            .into_iter()
            .filter(|s| l.classify_subspace(s).expect("ambient matches").is_ideal)
            .collect())
    }

    fn semisimple_ideals(_l: &LieAlgebra<Self>) -> Result<Vec<Subspace<Self>>, LatticeError> {
        Err(LatticeError::Internal(
            "finite fields enumerate ideals exhaustively".into(),
        ))
    }

    fn solvable_radical(
        l: &LieAlgebra<Self>,
        bounds: &Bounds,
    ) -> Result<Subspace<Self>, LatticeError> {
        let lattice = build_lattice(l, bounds)?;
        radical_from_lattice(l, &lattice)
    }

    fn maximality_certificate(_l: &LieAlgebra<Self>, _m: &Subspace<Self>) -> TriBool {
        TriBool::Unknown
    }
}

fn self_modulus(l: &LieAlgebra<PrimeField>) -> u32 {
    l.field().spec().characteristic()
}

impl GroundField for Rationals {
    fn one_dim_ideal(l: &LieAlgebra<Self>) -> Result<Option<Subspace<Self>>, LatticeError> {
        Ok(rational::one_dim_ideal_q(l))
    }

    fn all_ideals(
        l: &LieAlgebra<Self>,
        _bounds: &Bounds,
    ) -> Result<Vec<Subspace<Self>>, LatticeError> {
        rational::all_ideals_q(l)
    }

    fn semisimple_ideals(l: &LieAlgebra<Self>) -> Result<Vec<Subspace<Self>>, LatticeError> {
        let radical = rational::radical_q(l)?;
        if !radical.is_zero() {
            return Err(LatticeError::Unsupported(
                "lattice construction over the rationals needs a semisimple algebra".into(),
            ));
        }
        rational::all_ideals_q(l)
    }

    fn solvable_radical(
        l: &LieAlgebra<Self>,
        _bounds: &Bounds,
    ) -> Result<Subspace<Self>, LatticeError> {
        rational::radical_q(l)
    }

    fn maximality_certificate(l: &LieAlgebra<Self>, m: &Subspace<Self>) -> TriBool {
        rational::maximality_certificate_q(l, m)
    }
}

/// Generic radical entry point: exhaustive over finite fields, the
/// Killing-form criterion over the rationals.
pub fn radical<F: GroundField>(
    l: &LieAlgebra<F>,
    bounds: &Bounds,
) -> Result<Subspace<F>, LatticeError> {
    F::solvable_radical(l, bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::PrimeField;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn abelian2_gf2_lattice() {
        let l = catalog::abelian(gf(2), 2);
        let lat = build_lattice(&l, &Bounds::new()).unwrap();
        // every subspace of an abelian algebra is an ideal
        assert_eq!(lat.subalgebras.as_ref().unwrap().len(), 5);
        assert_eq!(lat.ideals.len(), 5);
        assert_eq!(lat.maximal_subalgebras.as_ref().unwrap().len(), 3);
        assert_eq!(lat.minimal_ideals.len(), 3);
    }

    #[test]
    fn heisenberg_gf2_lattice() {
        let l = catalog::build("heisenberg3", gf(2)).unwrap();
        let lat = build_lattice(&l, &Bounds::new()).unwrap();
        // maximal subalgebras are the 3 planes through the center
        let maximal = lat.maximal_subalgebras.as_ref().unwrap();
        assert_eq!(maximal.len(), 3);
        let center = l.center();
        for m in maximal {
            assert_eq!(m.dim(), 2);
            assert!(m.contains(l.field(), &center).unwrap());
        }
        assert_eq!(lat.minimal_ideals, vec![center]);
    }

    #[test]
    fn ex31_rational_lattice() {
        let l = catalog::build("ex31", Rationals).unwrap();
        let lat = build_lattice(&l, &Bounds::new()).unwrap();
        assert!(lat.subalgebras.is_none());
        assert_eq!(lat.ideals.len(), 4);
        assert_eq!(
            lat.ideals.iter().map(|i| i.dim()).collect::<Vec<_>>(),
            vec![0, 3, 3, 6]
        );
        assert_eq!(lat.minimal_ideals.len(), 2);
        // cross-check each by the closure conditions
        for i in &lat.ideals {
            assert!(l.is_ideal(i));
        }
        // non-semisimple rational algebras are refused
        let aff = catalog::build("affine2", Rationals).unwrap();
        assert!(matches!(
            build_lattice(&aff, &Bounds::new()),
            Err(LatticeError::Unsupported(_))
        ));
    }

    #[test]
    fn subideal_examples() {
        let f3 = gf(3);
        // ideals are subideals in one step
        let aff = catalog::build("affine2", f3).unwrap();
        let y = Subspace::from_rows(&f3, 2, &[vec![0, 1]]).unwrap();
        assert!(is_subideal(&aff, &y));
        // <x> stalls: its idealizer is itself
        let x = Subspace::from_rows(&f3, 2, &[vec![1, 0]]).unwrap();
        assert!(!is_subideal(&aff, &x));
        // every subalgebra of a nilpotent algebra is a subideal
        let nil = catalog::build("nilp4", f3).unwrap();
        let lat = build_lattice(&nil, &Bounds::new()).unwrap();
        for s in lat.subalgebras.as_ref().unwrap() {
            assert!(is_subideal(&nil, s));
        }
    }

    #[test]
    fn frattini_examples() {
        let f2 = gf(2);
        let ab = catalog::abelian(f2, 3);
        let lat = build_lattice(&ab, &Bounds::new()).unwrap();
        let (f, phi) = frattini(&ab, &lat).unwrap();
        assert!(f.is_zero());
        assert!(phi.is_zero());
        let h = catalog::build("heisenberg3", f2).unwrap();
        let lat = build_lattice(&h, &Bounds::new()).unwrap();
        let (f, phi) = frattini(&h, &lat).unwrap();
        assert_eq!(f, h.center());
        assert_eq!(phi, h.center());
        // nilp4 over GF(3): the Frattini ideal is the derived subalgebra <c, d>
        let f3 = gf(3);
        let nil = catalog::build("nilp4", f3).unwrap();
        let lat = build_lattice(&nil, &Bounds::new()).unwrap();
        let (_, phi) = frattini(&nil, &lat).unwrap();
        assert_eq!(phi, nil.derived_subalgebra());
    }

    #[test]
    fn radical_and_nilradical() {
        let f3 = gf(3);
        let aff = catalog::build("affine2", f3).unwrap();
        let lat = build_lattice(&aff, &Bounds::new()).unwrap();
        // solvable: the radical is everything
        assert!(radical_from_lattice(&aff, &lat).unwrap().is_full());
        // nilradical of [x,y]=y is <y>
        assert_eq!(
            nilradical(&aff, &lat).unwrap(),
            Subspace::from_rows(&f3, 2, &[vec![0, 1]]).unwrap()
        );
        // sl2 over GF(5): simple, both are 0
        let f5 = gf(5);
        let sl2 = catalog::build("sl2", f5).unwrap();
        let lat = build_lattice(&sl2, &Bounds::new()).unwrap();
        assert!(radical_from_lattice(&sl2, &lat).unwrap().is_zero());
        assert!(nilradical(&sl2, &lat).unwrap().is_zero());
        // mixed sum over GF(5): radical is the affine component
        let mixed = catalog::build("affine2_sl2", f5).unwrap();
        let lat = build_lattice(&mixed, &Bounds::new().with(5, 5)).unwrap();
        let r = radical_from_lattice(&mixed, &lat).unwrap();
        assert_eq!(r.dim(), 2);
        assert!(r.contains_vector(&f5, &vec![1, 0, 0, 0, 0]).unwrap());
        assert!(r.contains_vector(&f5, &vec![0, 1, 0, 0, 0]).unwrap());
        // rationals: so3q has radical 0 through the Killing criterion
        let so3 = catalog::build("so3q", Rationals).unwrap();
        assert!(radical(&so3, &Bounds::new()).unwrap().is_zero());
    }

    #[test]
    fn one_dim_ideal_over_gf() {
        let f3 = gf(3);
        let aff = catalog::build("affine2", f3).unwrap();
        let found = PrimeField::one_dim_ideal(&aff).unwrap().unwrap();
        assert_eq!(found, Subspace::from_rows(&f3, 2, &[vec![0, 1]]).unwrap());
        let sl2 = catalog::build("sl2", gf(5)).unwrap();
        assert!(PrimeField::one_dim_ideal(&sl2).unwrap().is_none());
    }
}
