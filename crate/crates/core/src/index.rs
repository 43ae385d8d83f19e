//! Cores, strict cores, completions and the ideal index.
//!
//! For a maximal subalgebra M, a completion is a subalgebra C not contained
//! in M whose strict core k(C) (the sum of all ideals of L that are proper
//! subalgebras of C) lies inside M. The records collected here carry the
//! flags the verification suite quantifies over: ideal, subideal, maximal
//! within the complex, membership in S(M), and abelianness of C/k(C).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra};
use crate::field::Field;
use crate::lattice::{self, GroundField, LatticeError, LatticeIndex};
use crate::subspace::{Bounds, Subspace};
use crate::TriBool;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("no ideal completion found; the subalgebra is not maximal or the ideal list is incomplete")]
    NoIdealCompletion,
    #[error("ideal completions disagree on the quotient dimension: {dims:?}")]
    IdealIndexDisagreement { dims: Vec<usize> },
    #[error("completion test saw <M, C> != L; the given subalgebra is not maximal")]
    MaximalityViolated,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Largest ideal of L contained in B (B need not be a subalgebra):
/// the fixed point of `B_{k+1} = {x in B_k : [x, L] <= B_k}`.
/// Field-agnostic.
pub fn core_of<F: Field>(l: &LieAlgebra<F>, b: &Subspace<F>) -> Subspace<F> {
    let field = l.field();
    let n = l.dim();
    let mut cur = b.clone();
    loop {
        if cur.is_zero() {
            return cur;
        }
        let k = cur.dim();
        // x = c * rows(cur) with [x, b_j] in cur for every j
        let mut constraints = Vec::new();
        for j in 0..n {
            let mut e = crate::linalg::zero_vector(field, n);
            e[j] = field.one();
            let residuals: Vec<Vec<F::Elem>> = cur
                .rows()
                .iter()
                .map(|v| {
                    let w = l.bracket(v, &e).expect("lengths match");
                    cur.reduce_vector(field, &w)
                })
                .collect();
            for col in 0..n {
                constraints.push((0..k).map(|r| residuals[r][col].clone()).collect());
            }
        }
        let coeff_rows = crate::linalg::kernel(field, &constraints, k);
        let rows: Vec<Vec<F::Elem>> = coeff_rows
            .iter()
            .map(|c| crate::linalg::combine(field, c, cur.rows(), n))
            .collect();
        let next = Subspace::from_rows(field, n, &rows).expect("rows share width");
        if next == cur {
            debug_assert!(l.is_ideal(&cur));
            return cur;
        }
        cur = next;
    }
}

/// Strict core k(B): the sum of all ideals of L that are proper
/// subalgebras of B.
///
/// When B is not an ideal every ideal of L inside B is automatically
/// proper, so k(B) = core(B) and no enumeration is needed. When B is an
/// ideal the definition needs the ideals of L properly contained in B,
/// supplied through `ideals`; k(B) may then equal B (for instance when B
/// is a sum of two proper ideals).
pub fn strict_core<F: Field>(
    l: &LieAlgebra<F>,
    b: &Subspace<F>,
    ideals: Option<&[Subspace<F>]>,
) -> Result<Subspace<F>, LatticeError> {
    debug_assert!(l.is_subalgebra(b), "strict core expects a subalgebra");
    let field = l.field();
    if !l.is_ideal(b) {
        return Ok(core_of(l, b));
    }
    let Some(ideals) = ideals else {
        return Err(LatticeError::Unsupported(
            "strict core of an ideal needs the ideal lattice".into(),
        ));
    };
    let mut acc = Subspace::zero(l.dim());
    for i in ideals {
        if i != b && b.contains(field, i).expect("ambient matches") {
            acc = acc.sum(field, i).expect("ambient matches");
            if acc == *b {
                break; // the strict core cannot exceed b
            }
        }
    }
    Ok(acc)
}

/// Membership test for the index complex I(M): true iff C is not inside M
/// and k(C) is. When it holds, `<M, C> = L` is cross-checked; a mismatch
/// means the caller's M was not maximal.
pub fn is_completion<F: Field>(
    l: &LieAlgebra<F>,
    c: &Subspace<F>,
    m: &Subspace<F>,
    ideals: Option<&[Subspace<F>]>,
) -> Result<bool, IndexError> {
    let field = l.field();
    if m.contains(field, c).expect("ambient matches") {
        return Ok(false);
    }
    let k = strict_core(l, c, ideals)?;
    if !m.contains(field, &k).expect("ambient matches") {
        return Ok(false);
    }
    let joined = l.closure(&m.sum(field, c).expect("ambient matches"))?;
    if !joined.is_full() {
        return Err(IndexError::MaximalityViolated);
    }
    Ok(true)
}

/// One completion with all its derived data.
#[derive(Debug, Clone)]
pub struct CompletionRecord<F: Field> {
    pub space: Subspace<F>,
    pub strict_core: Subspace<F>,
    /// C/k(C), on the coordinates of C's basis.
    pub quotient: LieAlgebra<F>,
    pub quotient_dim: usize,
    pub is_ideal: bool,
    pub is_subideal: bool,
    /// Maximal element of I(M) under inclusion.
    pub maximal_in_complex: bool,
    /// C is a subideal and L = M + C as a vector-space sum.
    pub in_s_of_m: bool,
    pub quotient_abelian: bool,
}

/// The parts of a completion record that do not depend on the maximal
/// subalgebra: strict core, quotient, subideal status. Computed once per
/// subalgebra and reused across every index complex of the same algebra.
#[derive(Debug, Clone)]
pub struct SubalgebraProfile<F: Field> {
    pub space: Subspace<F>,
    pub strict_core: Subspace<F>,
    pub quotient: LieAlgebra<F>,
    pub quotient_dim: usize,
    pub is_ideal: bool,
    pub is_subideal: bool,
    pub quotient_abelian: bool,
}

fn profile_for<F: Field>(
    l: &LieAlgebra<F>,
    c: &Subspace<F>,
    k: Subspace<F>,
) -> Result<SubalgebraProfile<F>, IndexError> {
    let field = l.field();
    let c_alg = l.restrict(c)?;
    // k(C) is an ideal of L inside C, hence an ideal of C
    let k_in_c: Vec<Vec<F::Elem>> = k
        .rows()
        .iter()
        .map(|r| c.coords(field, r).expect("k(C) lies inside C"))
        .collect();
    let k_sub = Subspace::from_rows(field, c.dim(), &k_in_c).expect("rows share width");
    let quotient = c_alg.quotient(&k_sub)?.quotient;
    let quotient_dim = c.dim() - k.dim();
    debug_assert_eq!(quotient.dim(), quotient_dim);
    let is_ideal = l.is_ideal(c);
    let is_subideal = is_ideal || lattice::is_subideal(l, c);
    let quotient_abelian = quotient.derived_subalgebra().is_zero();
    Ok(SubalgebraProfile {
        space: c.clone(),
        strict_core: k,
        quotient,
        quotient_dim,
        is_ideal,
        is_subideal,
        quotient_abelian,
    })
}

impl<F: Field> SubalgebraProfile<F> {
    fn to_record(&self, l: &LieAlgebra<F>, m: &Subspace<F>) -> CompletionRecord<F> {
        let field = l.field();
        let meet = m.intersect(field, &self.space).expect("ambient matches");
        let in_s_of_m =
            self.is_subideal && m.dim() + self.space.dim() - meet.dim() == l.dim();
        CompletionRecord {
            space: self.space.clone(),
            strict_core: self.strict_core.clone(),
            quotient: self.quotient.clone(),
            quotient_dim: self.quotient_dim,
            is_ideal: self.is_ideal,
            is_subideal: self.is_subideal,
            maximal_in_complex: false,
            in_s_of_m,
            quotient_abelian: self.quotient_abelian,
        }
    }
}

/// Per-subalgebra data shared by all index complexes of one algebra.
#[derive(Debug, Clone)]
pub struct CompletionTable<F: Field> {
    profiles: Vec<SubalgebraProfile<F>>,
}

impl<F: Field> CompletionTable<F> {
    pub fn build(l: &LieAlgebra<F>, lat: &LatticeIndex<F>) -> Result<Self, IndexError> {
        let mut profiles = Vec::new();
        for c in lat.subalgebras()? {
            let k = strict_core(l, c, Some(&lat.ideals))?;
            profiles.push(profile_for(l, c, k)?);
        }
        Ok(CompletionTable { profiles })
    }
}

/// The index complex of a maximal subalgebra: all completions with flags.
#[derive(Debug, Clone)]
pub struct IndexComplex<F: Field> {
    pub maximal: Subspace<F>,
    pub records: Vec<CompletionRecord<F>>,
    /// dim C/k(C) over the ideal records, when they exist and agree.
    pub eta: Option<usize>,
}

impl<F: Field> IndexComplex<F> {
    pub fn ideal_records(&self) -> impl Iterator<Item = &CompletionRecord<F>> {
        self.records.iter().filter(|r| r.is_ideal)
    }

    pub fn has_abelian_ideal_completion(&self) -> bool {
        self.ideal_records().any(|r| r.quotient_abelian)
    }
}

fn close_records<F: Field>(
    l: &LieAlgebra<F>,
    m: &Subspace<F>,
    mut records: Vec<CompletionRecord<F>>,
) -> IndexComplex<F> {
    let field = l.field();
    records.sort_by(|a, b| a.space.cmp(&b.space));
    let spaces: Vec<Subspace<F>> = records.iter().map(|r| r.space.clone()).collect();
    for r in records.iter_mut() {
        r.maximal_in_complex = !spaces.iter().any(|other| {
            r.space
                .is_proper_subspace_of(field, other)
                .expect("ambient matches")
        });
    }
    let mut dims: Vec<usize> = records
        .iter()
        .filter(|r| r.is_ideal)
        .map(|r| r.quotient_dim)
        .collect();
    dims.dedup();
    let eta = match dims.as_slice() {
        [d] => Some(*d),
        _ => None,
    };
    IndexComplex {
        maximal: m.clone(),
        records,
        eta,
    }
}

/// Exhaustive index complex from a full subalgebra lattice (finite fields
/// within bounds). The caller certifies that M is maximal; a non-maximal M
/// surfaces as `MaximalityViolated`.
pub fn index_complex<F: Field>(
    l: &LieAlgebra<F>,
    m: &Subspace<F>,
    lat: &LatticeIndex<F>,
) -> Result<IndexComplex<F>, IndexError> {
    let table = CompletionTable::build(l, lat)?;
    index_complex_with_table(l, m, &table)
}

/// Like [`index_complex`] but reusing a precomputed [`CompletionTable`];
/// the membership test and the `<M, C> = L` cross-check still run per pair.
pub fn index_complex_with_table<F: Field>(
    l: &LieAlgebra<F>,
    m: &Subspace<F>,
    table: &CompletionTable<F>,
) -> Result<IndexComplex<F>, IndexError> {
    let field = l.field();
    let mut records = Vec::new();
    for p in &table.profiles {
        if m.contains(field, &p.space).expect("ambient matches") {
            continue;
        }
        if !m.contains(field, &p.strict_core).expect("ambient matches") {
            continue;
        }
        let joined = l.closure(&m.sum(field, &p.space).expect("ambient matches"))?;
        if !joined.is_full() {
            return Err(IndexError::MaximalityViolated);
        }
        records.push(p.to_record(l, m));
    }
    Ok(close_records(l, m, records))
}

/// The ideal completions of M drawn from a complete ideal list; enough for
/// the ideal index and abelian-ideal-completion questions, and the only
/// exhaustive notion available over the rationals.
pub fn ideal_completions<F: Field>(
    l: &LieAlgebra<F>,
    m: &Subspace<F>,
    ideals: &[Subspace<F>],
) -> Result<Vec<CompletionRecord<F>>, IndexError> {
    let mut records = Vec::new();
    for c in ideals {
        if is_completion(l, c, m, Some(ideals))? {
            let k = strict_core(l, c, Some(ideals))?;
            records.push(profile_for(l, c, k)?.to_record(l, m));
        }
    }
    records.sort_by(|a, b| a.space.cmp(&b.space));
    // every ideal completion is a maximal completion: an ideal completion C
    // properly inside a completion D would lie in k(D), hence in M
    for r in records.iter_mut() {
        r.maximal_in_complex = true;
    }
    Ok(records)
}

/// The ideal index eta(L:M) = dim C/k(C) for an ideal completion C.
/// Agreement across every ideal completion found is asserted, not assumed.
pub fn ideal_index<F: Field>(
    l: &LieAlgebra<F>,
    m: &Subspace<F>,
    ideals: &[Subspace<F>],
) -> Result<usize, IndexError> {
    let records = ideal_completions(l, m, ideals)?;
    let mut dims: Vec<usize> = records.iter().map(|r| r.quotient_dim).collect();
    dims.sort_unstable();
    dims.dedup();
    match dims.as_slice() {
        [] => Err(IndexError::NoIdealCompletion),
        [d] => Ok(*d),
        _ => Err(IndexError::IdealIndexDisagreement { dims }),
    }
}

/// Like [`ideal_index`] but resolving the ideal list through the ground
/// field's decision procedures.
pub fn ideal_index_auto<F: GroundField>(
    l: &LieAlgebra<F>,
    m: &Subspace<F>,
    bounds: &Bounds,
) -> Result<usize, IndexError> {
    let ideals = F::all_ideals(l, bounds)?;
    ideal_index(l, m, &ideals)
}

/// c-ideal test: B is a c-ideal iff some ideal C of L gives L = B + C with
/// B meeting C inside the core of B. Exact when a complete ideal list is
/// available, `Unknown` otherwise.
pub fn is_c_ideal<F: Field>(
    l: &LieAlgebra<F>,
    b: &Subspace<F>,
    ideals: Option<&[Subspace<F>]>,
) -> TriBool {
    let Some(ideals) = ideals else {
        return TriBool::Unknown;
    };
    let field = l.field();
    let core = core_of(l, b);
    for c in ideals {
        let meet = b.intersect(field, c).expect("ambient matches");
        let spans = b.dim() + c.dim() - meet.dim() == l.dim();
        if spans && core.contains(field, &meet).expect("ambient matches") {
            return TriBool::Yes;
        }
    }
    TriBool::No
}

/// Whether M has an ideal completion C with C/k(C) abelian.
pub fn has_abelian_ideal_completion<F: Field>(
    l: &LieAlgebra<F>,
    m: &Subspace<F>,
    ideals: &[Subspace<F>],
) -> Result<bool, IndexError> {
    Ok(ideal_completions(l, m, ideals)?
        .iter()
        .any(|r| r.quotient_abelian))
}

/// F*(L): intersection of the maximal subalgebras with no abelian ideal
/// completion (L itself when there are none), and phi*(L), its core.
pub fn phi_star<F: Field>(
    l: &LieAlgebra<F>,
    lat: &LatticeIndex<F>,
) -> Result<(Subspace<F>, Subspace<F>), IndexError> {
    let field = l.field();
    let mut f_star = l.full_space();
    for m in lat.maximal_subalgebras()? {
        if !has_abelian_ideal_completion(l, m, &lat.ideals)? {
            f_star = f_star.intersect(field, m).expect("ambient matches");
        }
    }
    let phi = core_of(l, &f_star);
    Ok((f_star, phi))
}

const MAXIMALITY_SAMPLES: usize = 16;

/// Maximality of a proper subalgebra M.
///
/// Codimension one is automatic over any field. With a lattice in hand the
/// answer is exact. Otherwise the ground field's structural certificate is
/// consulted, and finally a seeded sampling pass looks for a witness
/// `v` outside M with `<M, v> != L`, which refutes maximality. Anything
/// left over is `Unknown`.
pub fn is_maximal<F: GroundField>(
    l: &LieAlgebra<F>,
    m: &Subspace<F>,
    lat: Option<&LatticeIndex<F>>,
) -> TriBool {
    let field = l.field();
    debug_assert!(l.is_subalgebra(m) && !m.is_full());
    if m.dim() + 1 == l.dim() {
        return TriBool::Yes;
    }
    if let Some(lat) = lat {
        if let Ok(maximal) = lat.maximal_subalgebras() {
            return if maximal.contains(m) {
                TriBool::Yes
            } else {
                TriBool::No
            };
        }
    }
    if F::maximality_certificate(l, m) == TriBool::Yes {
        return TriBool::Yes;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4d41584d); // fixed seed: deterministic
    for _ in 0..MAXIMALITY_SAMPLES {
        let v: Vec<F::Elem> = (0..l.dim()).map(|_| field.sample(&mut rng)).collect();
        if m.contains_vector(field, &v).expect("ambient matches") {
            continue;
        }
        let line = Subspace::line(field, &v);
        let joined = l
            .closure(&m.sum(field, &line).expect("ambient matches"))
            .expect("ambient matches");
        if !joined.is_full() {
            return TriBool::No;
        }
    }
    TriBool::Unknown
}
