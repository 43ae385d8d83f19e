//! Decision procedures special to the rational ground field.
//!
//! Exhaustive enumeration is impossible over Q, but everything the crate
//! needs there is decidable through structure: the solvable radical via the
//! Killing form (characteristic zero), one-dimensional ideals via rational
//! eigenvalue extraction, semisimple decomposition into 3-dimensional
//! simple components, and the ideal lattices of the handful of decidable
//! shapes. Anything outside those shapes is refused, never approximated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::LieAlgebra;
use crate::field::{Field, Rationals};
use crate::lattice::LatticeError;
use crate::linalg;
use crate::subspace::Subspace;

type QMatrix = Vec<Vec<BigRational>>;

fn q() -> Rationals {
    Rationals
}

fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn trace(a: &QMatrix) -> BigRational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Gram matrix of the Killing form: `K[i][j] = tr(ad b_i . ad b_j)`.
pub fn killing_matrix(l: &LieAlgebra<Rationals>) -> QMatrix {
    let n = l.dim();
    let ads: Vec<QMatrix> = (0..n)
        .map(|i| {
            let mut e = linalg::zero_vector(&q(), n);
            e[i] = q().one();
            l.ad_matrix(&e)
        })
        .collect();
    let mut k = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut t = BigRational::zero();
            for r in 0..n {
                for s in 0..n {
                    if !ads[i][r][s].is_zero() && !ads[j][s][r].is_zero() {
                        t += &ads[i][r][s] * &ads[j][s][r];
                    }
                }
            }
            k[i][j] = t.clone();
            k[j][i] = t;
        }
    }
    k
}

/// Solvable radical over Q: `{x : kappa(x, y) = 0 for all y in [L, L]}`,
/// the characteristic-zero criterion. The result is re-verified to be a
/// solvable ideal, so an implementation bug surfaces as a hard error.
pub fn radical_q(l: &LieAlgebra<Rationals>) -> Result<Subspace<Rationals>, LatticeError> {
    let n = l.dim();
    let k = killing_matrix(l);
    let derived = l.derived_subalgebra();
    let mut constraints = Vec::new();
    for w in derived.rows() {
        let row: Vec<BigRational> = (0..n)
            .map(|i| {
                let mut t = BigRational::zero();
                for (j, wj) in w.iter().enumerate() {
                    if !wj.is_zero() {
                        t += &k[i][j] * wj;
                    }
                }
                t
            })
            .collect();
        constraints.push(row);
    }
    let rows = linalg::kernel(&q(), &constraints, n);
    let radical = Subspace::from_rows(&q(), n, &rows).expect("kernel rows share width");
    if !l.is_ideal(&radical) {
        return Err(LatticeError::Internal(
            "Killing-perpendicular space is not an ideal".to_string(),
        ));
    }
    let mut term = radical.clone();
    for _ in 0..=n {
        term = l.product_space(&term, &term).expect("ambient matches");
    }
    if !term.is_zero() {
        return Err(LatticeError::Internal(
            "Killing-perpendicular space is not solvable".to_string(),
        ));
    }
    Ok(radical)
}

/// Coefficients of det(xI - A), ascending, monic of degree n, by the
/// Faddeev-LeVerrier recurrence (exact in characteristic zero).
pub fn char_poly(a: &QMatrix) -> Vec<BigRational> {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m: QMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 1..=n {
        let am = mat_mul(a, &m);
        let c = -trace(&am) / BigRational::from_integer(BigInt::from(k as i64));
        coeffs[n - k] = c.clone();
        m = am;
        for i in 0..n {
            m[i][i] += &c;
        }
    }
    coeffs
}

fn eval_poly(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        if (&d * &d) > n {
            break;
        }
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All distinct rational roots of a polynomial with rational coefficients
/// (ascending), via the rational root theorem on the integer-scaled form.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return vec![];
    }
    let mut roots = Vec::new();
    // strip x^m factors, recording the root 0 once
    let mut low = 0;
    while low < coeffs.len() && coeffs[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(BigRational::zero());
        coeffs.drain(..low);
    }
    if coeffs.len() > 1 {
        let denom_lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let a0 = ints.first().expect("nonempty").clone();
        let an = ints.last().expect("nonempty").clone();
        for p in divisors(&a0) {
            for qd in divisors(&an) {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(&p * BigInt::from(sign), qd.clone());
                    if eval_poly(&coeffs, &cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Largest `A`-invariant subspace of `v`, where `A` acts on row vectors
/// from the right.
fn largest_invariant_subspace(
    v: &Subspace<Rationals>,
    a: &QMatrix,
) -> Subspace<Rationals> {
    let n = v.ambient_dim();
    let mut cur = v.clone();
    loop {
        if cur.is_zero() {
            return cur;
        }
        let k = cur.dim();
        // x = c * rows must satisfy x*A in cur
        let images: Vec<Vec<BigRational>> = cur
            .rows()
            .iter()
            .map(|r| {
                let img = linalg::apply_rows(&q(), r, a, n);
                cur.reduce_vector(&q(), &img)
            })
            .collect();
        let mut constraints = Vec::new();
        for col in 0..n {
            let row: Vec<BigRational> = (0..k).map(|r| images[r][col].clone()).collect();
            constraints.push(row);
        }
        let coeff_rows = linalg::kernel(&q(), &constraints, k);
        let rows: Vec<Vec<BigRational>> = coeff_rows
            .iter()
            .map(|c| linalg::combine(&q(), c, cur.rows(), n))
            .collect();
        let next = Subspace::from_rows(&q(), n, &rows).expect("rows share width");
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Matrix of `A` restricted to the invariant subspace `w`, in the
/// coordinates of `w`'s basis rows.
fn restrict_operator(w: &Subspace<Rationals>, a: &QMatrix) -> QMatrix {
    let n = w.ambient_dim();
    w.rows()
        .iter()
        .map(|r| {
            let img = linalg::apply_rows(&q(), r, a, n);
            w.coords(&q(), &img)
                .expect("subspace is invariant under the operator")
        })
        .collect()
}

/// A one-dimensional ideal of `l`, if any exists; complete over Q because
/// a one-dimensional ideal is a common eigenline of all ad(b_i) with
/// automatically rational eigenvalues. The search branches on the rational
/// eigenvalues of each operator and intersects eigenspaces.
pub fn one_dim_ideal_q(l: &LieAlgebra<Rationals>) -> Option<Subspace<Rationals>> {
    let n = l.dim();
    if n == 0 {
        return None;
    }
    let ads: Vec<QMatrix> = (0..n)
        .map(|i| {
            let mut e = linalg::zero_vector(&q(), n);
            e[i] = q().one();
            l.ad_matrix(&e)
        })
        .collect();
    fn search(
        ads: &[QMatrix],
        i: usize,
        v: &Subspace<Rationals>,
    ) -> Option<Subspace<Rationals>> {
        if v.is_zero() {
            return None;
        }
        if i == ads.len() {
            return Some(Subspace::line(&Rationals, &v.rows()[0]));
        }
        let w = largest_invariant_subspace(v, &ads[i]);
        if w.is_zero() {
            return None;
        }
        let aw = restrict_operator(&w, &ads[i]);
        let k = w.dim();
        for root in rational_roots(&char_poly(&aw)) {
            // eigenspace of A|_W for this eigenvalue, in W-coordinates
            let mut shifted = aw.clone();
            for r in 0..k {
                shifted[r][r] -= &root;
            }
            // x*(A - root I) = 0: constraint columns index the equations
            let mut constraints = Vec::new();
            for col in 0..k {
                constraints.push((0..k).map(|r| shifted[r][col].clone()).collect());
            }
            let coeff_rows = linalg::kernel(&Rationals, &constraints, k);
            let rows: Vec<Vec<BigRational>> = coeff_rows
                .iter()
                .map(|c| linalg::combine(&Rationals, c, w.rows(), w.ambient_dim()))
                .collect();
            let eig = Subspace::from_rows(&Rationals, w.ambient_dim(), &rows)
                .expect("rows share width");
            if let Some(found) = search(ads, i + 1, &eig) {
                return Some(found);
            }
        }
        None
    }
    let found = search(&ads, 0, &l.full_space())?;
    debug_assert!(l.is_ideal(&found));
    Some(found)
}

/// Smallest ideal of `l` containing `v`.
pub fn ideal_closure(l: &LieAlgebra<Rationals>, v: &[BigRational]) -> Subspace<Rationals> {
    let full = l.full_space();
    let mut cur = Subspace::line(&q(), v);
    loop {
        let grown = l
            .product_space(&full, &cur)
            .expect("ambient matches")
            .sum(&q(), &cur)
            .expect("ambient matches");
        if grown == cur {
            return cur;
        }
        cur = grown;
    }
}

/// The minimal ideals of a semisimple rational algebra, i.e. its simple
/// components. Components are located as minimal elements among the ideals
/// generated by basis vectors (closed under pairwise intersection) and then
/// certified: they must intersect pairwise in 0, sum to L, and each must be
/// a perfect 3-dimensional algebra with no one-dimensional ideal. Shapes
/// outside that certificate are refused.
pub fn simple_components(
    l: &LieAlgebra<Rationals>,
) -> Result<Vec<Subspace<Rationals>>, LatticeError> {
    let n = l.dim();
    let radical = radical_q(l)?;
    if !radical.is_zero() {
        return Err(LatticeError::Unsupported(
            "simple-component decomposition needs a semisimple algebra".to_string(),
        ));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut candidates: Vec<Subspace<Rationals>> = Vec::new();
    for i in 0..n {
        let mut e = linalg::zero_vector(&q(), n);
        e[i] = q().one();
        let c = ideal_closure(l, &e);
        if !candidates.contains(&c) {
            candidates.push(c);
        }
    }
    // close under intersection; every ideal of a semisimple algebra is a
    // sum of components, so intersections only ever shrink toward them
    loop {
        let mut added = false;
        for a in 0..candidates.len() {
            for b in a + 1..candidates.len() {
                let meet = candidates[a]
                    .intersect(&q(), &candidates[b])
                    .expect("ambient matches");
                if !meet.is_zero() && !candidates.contains(&meet) {
                    candidates.push(meet);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut components: Vec<Subspace<Rationals>> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|other| other.is_proper_subspace_of(&q(), c).expect("ambient matches") && !other.is_zero())
        })
        .cloned()
        .collect();
    components.sort();
    components.dedup();
    // certify the decomposition
    let mut sum = Subspace::zero(n);
    for (a, ca) in components.iter().enumerate() {
        for cb in components.iter().skip(a + 1) {
            if !ca.intersect(&q(), cb).expect("ambient matches").is_zero() {
                return Err(LatticeError::Unsupported(
                    "component candidates do not intersect trivially".to_string(),
                ));
            }
        }
        sum = sum.sum(&q(), ca).expect("ambient matches");
        let alg = l
            .restrict(ca)
            .map_err(|_| LatticeError::Internal("component is not a subalgebra".to_string()))?;
        if alg.dim() != 3 {
            return Err(LatticeError::Unsupported(
                "only 3-dimensional simple components are certified".to_string(),
            ));
        }
        // perfect and without 1-dim ideals; a 2-dim ideal of a perfect
        // 3-dim algebra would contain the derived subalgebra, so none exist
        if !alg.derived_subalgebra().is_full() || one_dim_ideal_q(&alg).is_some() {
            return Err(LatticeError::Unsupported(
                "component candidate is not simple".to_string(),
            ));
        }
    }
    if !sum.is_full() {
        return Err(LatticeError::Unsupported(
            "component candidates do not span".to_string(),
        ));
    }
    Ok(components)
}

fn subset_sums(
    ambient: usize,
    parts: &[Subspace<Rationals>],
) -> Vec<Subspace<Rationals>> {
    let mut sums = vec![Subspace::zero(ambient)];
    for p in parts {
        let mut next = sums.clone();
        for s in &sums {
            next.push(s.sum(&q(), p).expect("ambient matches"));
        }
        sums = next;
    }
    sums.sort();
    sums.dedup();
    sums
}

/// The complete ideal list of `l` over Q, for the decidable shapes:
/// dimension <= 1, two-dimensional non-abelian, semisimple, and a
/// one-dimensional center split off a semisimple derived subalgebra.
/// Everything else (in particular any algebra with infinitely many ideals)
/// is `Unsupported`.
pub fn all_ideals_q(
    l: &LieAlgebra<Rationals>,
) -> Result<Vec<Subspace<Rationals>>, LatticeError> {
    let n = l.dim();
    if n == 0 {
        return Ok(vec![Subspace::zero(0)]);
    }
    if n == 1 {
        return Ok(vec![Subspace::zero(1), l.full_space()]);
    }
    let derived = l.derived_subalgebra();
    if n == 2 {
        if derived.is_zero() {
            return Err(LatticeError::Unsupported(
                "every subspace of an abelian algebra is an ideal".to_string(),
            ));
        }
        let mut ideals = vec![Subspace::zero(2), derived, l.full_space()];
        ideals.sort();
        return Ok(ideals);
    }
    let radical = radical_q(l)?;
    if radical.is_zero() {
        let comps = simple_components(l)?;
        return Ok(subset_sums(n, &comps));
    }
    let center = l.center();
    if center == radical && center.dim() == 1 {
        let s = derived.clone();
        let split = center
            .intersect(&q(), &s)
            .expect("ambient matches")
            .is_zero()
            && center.dim() + s.dim() == n;
        if split {
            // L = Z (+) S with Z central: an ideal is Z0 (+) (sum of
            // components of S) with Z0 a subspace of the 1-dim center
            let s_alg = l
                .restrict(&s)
                .map_err(|_| LatticeError::Internal("derived subalgebra not closed".to_string()))?;
            let comps_s = simple_components(&s_alg)?;
            // embed component rows back into L-coordinates
            let comps: Vec<Subspace<Rationals>> = comps_s
                .iter()
                .map(|c| {
                    let rows: Vec<Vec<BigRational>> = c
                        .rows()
                        .iter()
                        .map(|r| linalg::combine(&q(), r, s.rows(), n))
                        .collect();
                    Subspace::from_rows(&q(), n, &rows).expect("rows share width")
                })
                .collect();
            let mut ideals = Vec::new();
            for base in subset_sums(n, &comps) {
                ideals.push(base.clone());
                ideals.push(base.sum(&q(), &center).expect("ambient matches"));
            }
            ideals.sort();
            ideals.dedup();
            for i in &ideals {
                debug_assert!(l.is_ideal(i));
            }
            return Ok(ideals);
        }
    }
    Err(LatticeError::Unsupported(format!(
        "no decidable ideal enumeration for this rational algebra (dim {n})"
    )))
}

/// Certificate that a 3-dimensional rational algebra is non-split simple:
/// perfect, no one-dimensional ideal (rational eigenline search), no
/// two-dimensional ideal (impossible for a perfect algebra, since a
/// codimension-one ideal contains the derived subalgebra), and no
/// two-dimensional subalgebra, certified by definiteness of the Killing
/// form through the leading-principal-minor sign pattern of its
/// integer-scaled Gram matrix.
///
/// The definiteness certificate is sufficient, not necessary: anisotropic
/// forms with indefinite Killing form exist over Q and would be reported
/// `false`. Every use in this crate is covered by the definite case.
pub fn is_nonsplit_simple_3dim(l: &LieAlgebra<Rationals>) -> Result<bool, LatticeError> {
    if l.dim() != 3 {
        return Err(LatticeError::WrongDimension {
            expected: 3,
            got: l.dim(),
        });
    }
    if !l.derived_subalgebra().is_full() {
        return Ok(false);
    }
    if one_dim_ideal_q(l).is_some() {
        return Ok(false);
    }
    let k = killing_matrix(l);
    // integer scaling keeps minor signs
    let scale = k
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ki: Vec<Vec<BigInt>> = k
        .iter()
        .map(|row| row.iter().map(|c| c.numer() * (&scale / c.denom())).collect())
        .collect();
    let m1 = ki[0][0].clone();
    let m2 = &ki[0][0] * &ki[1][1] - &ki[0][1] * &ki[1][0];
    let m3 = det3(&ki);
    let positive = m1.is_positive() && m2.is_positive() && m3.is_positive();
    let negative = m1.is_negative() && m2.is_positive() && m3.is_negative();
    Ok(positive || negative)
}

fn det3(m: &[Vec<BigInt>]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Structural maximality certificates over Q, for the shapes where
/// exhaustive enumeration is impossible but maximality is provable:
///
/// 1. a one-dimensional subalgebra of a non-split simple 3-dimensional
///    algebra (no 2-dimensional subalgebras exist, so nothing fits
///    strictly between a line and the whole algebra);
/// 2. a 3-dimensional diagonal in S (+) S' with both components simple of
///    dimension 3 and trivial intersections with M: any larger subalgebra
///    T meets S' nontrivially, T . S' is then a nonzero ideal of the
///    simple S' because M projects onto S', so T contains S' and hence
///    everything;
/// 3. a 2-dimensional subalgebra containing the one-dimensional center Z
///    of L = Z (+) S with S non-split simple: any larger subalgebra
///    projects onto a subalgebra of S of dimension >= 2, which must be S,
///    and contains Z, so it is L.
///
/// Anything else is `Unknown`; a definite `No` comes from sampling in the
/// generic maximality test.
pub fn maximality_certificate_q(
    l: &LieAlgebra<Rationals>,
    m: &Subspace<Rationals>,
) -> crate::TriBool {
    use crate::TriBool;
    let n = l.dim();
    // certificate 1: line in a non-split simple 3-dimensional algebra
    if n == 3 && m.dim() == 1 && matches!(is_nonsplit_simple_3dim(l), Ok(true)) {
        return TriBool::Yes;
    }
    // certificate 2: diagonal in a sum of two 3-dimensional simples
    if n == 6 && m.dim() == 3 {
        if let Ok(comps) = simple_components(l) {
            if comps.len() == 2
                && comps.iter().all(|c| {
                    c.dim() == 3
                        && l.restrict(c)
                            .map(|alg| matches!(is_nonsplit_simple_3dim(&alg), Ok(true)))
                            .unwrap_or(false)
                })
                && comps.iter().all(|c| {
                    m.intersect(&q(), c).expect("ambient matches").is_zero()
                })
                && l.is_subalgebra(m)
            {
                return TriBool::Yes;
            }
        }
    }
    // certificate 3: center line plus a line of the simple part
    if m.dim() == 2 {
        let center = l.center();
        let s = l.derived_subalgebra();
        if center.dim() == 1
            && center.dim() + s.dim() == n
            && center
                .intersect(&q(), &s)
                .expect("ambient matches")
                .is_zero()
            && m.contains(&q(), &center).expect("ambient matches")
            && l.is_subalgebra(m)
        {
            if let Ok(s_alg) = l.restrict(&s) {
                if matches!(is_nonsplit_simple_3dim(&s_alg), Ok(true)) {
                    return TriBool::Yes;
                }
            }
        }
    }
    TriBool::Unknown
}
