//! Degeneration families of hyperelliptic curves, their branch points, and
//! homology bases built from chains of consecutive branch points.
//!
//! A curve y^2 = f(x) with 2g+1 finite branch points (one more at infinity)
//! carries 2g elementary cycles c_k, each encircling a consecutive pair of a
//! chain through the branch points. Adjacent elementary cycles intersect
//! once; the combinations delta_j = c_1 + c_3 + ... + c_{2j-1} and
//! gamma_j = c_{2j} form a symplectic basis.

use num_complex::Complex64;

use crate::algebra::{dist_point_segment, projection_parameter, RootPoly};
use crate::error::{Error, Result};

pub const MAX_GENUS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CurveKind {
    /// y^2 = x (x - lambda) (x - 1) P(x); the loop around {0, lambda} pinches.
    Node,
    /// y^2 = x (x^2 - lambda) P(x); branch points +-sqrt(lambda) and 0 collide.
    Cusp1,
    /// y^2 = x (x - lambda) (x - lambda^2) P(x).
    Cusp2,
    /// Explicit branch points, no deformation parameter.
    Generic,
}

#[derive(Debug, Clone)]
pub struct CurveSpec {
    pub kind: CurveKind,
    pub genus: usize,
    pub lambda: Option<Complex64>,
    /// The modulus polynomial P for the three families (degree 2g-2).
    pub p_poly: Option<RootPoly>,
    /// All finite branch points (2g+1 of them).
    pub roots: Vec<Complex64>,
}

fn check_distinct(roots: &[Complex64]) -> Result<()> {
    for (i, a) in roots.iter().enumerate() {
        for b in roots.iter().skip(i + 1) {
            if (a - b).norm() == 0.0 {
                return Err(Error::CoincidentRoots(*a));
            }
        }
    }
    Ok(())
}

/// Build one of the three degeneration families.
pub fn make_family(
    kind: CurveKind,
    genus: usize,
    p_poly: RootPoly,
    lambda: Complex64,
) -> Result<CurveSpec> {
    if !(2..=MAX_GENUS).contains(&genus) {
        return Err(Error::GenusBound(genus));
    }
    if p_poly.degree() != 2 * genus - 2 {
        return Err(Error::InvalidParameter(format!(
            "P must have degree {} for genus {}",
            2 * genus - 2,
            genus
        )));
    }
    if lambda.norm() == 0.0 {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let special: Vec<Complex64> = match kind {
        CurveKind::Node => {
            for r in p_poly.roots() {
                if r.norm() <= 1.0 {
                    return Err(Error::InvalidParameter(
                        "node family requires 1 < |a_1| < ... for the roots of P".into(),
                    ));
                }
            }
            vec![zero, lambda, one]
        }
        CurveKind::Cusp1 => {
            let s = lambda.sqrt();
            for r in p_poly.roots() {
                if r.norm() <= s.norm() {
                    return Err(Error::InvalidParameter(
                        "cusp I family requires |lambda|^(1/2) < |a_1| < ...".into(),
                    ));
                }
            }
            vec![-s, zero, s]
        }
        CurveKind::Cusp2 => {
            for r in p_poly.roots() {
                if r.norm() <= lambda.norm() {
                    return Err(Error::InvalidParameter(
                        "cusp II family requires |lambda| < |a_1| < ...".into(),
                    ));
                }
            }
            vec![zero, lambda, lambda * lambda]
        }
        CurveKind::Generic => {
            return Err(Error::InvalidParameter(
                "use make_generic for explicit branch points".into(),
            ))
        }
    };
    let mut ordered: Vec<Complex64> = p_poly.roots().to_vec();
    ordered.sort_by(|a, b| {
        a.norm()
            .total_cmp(&b.norm())
            .then(tie_arg(*a).total_cmp(&tie_arg(*b)))
    });
    for w in ordered.windows(2) {
        if w[0].norm() >= w[1].norm() {
            return Err(Error::InvalidParameter(
                "roots of P must have strictly increasing moduli".into(),
            ));
        }
    }
    let mut roots = special;
    roots.extend(p_poly.roots().iter().copied());
    check_distinct(&roots)?;
    Ok(CurveSpec {
        kind,
        genus,
        lambda: Some(lambda),
        p_poly: Some(p_poly),
        roots,
    })
}

/// Genus-2 member of a family with P = (x - a)(x - b).
pub fn genus2_family(kind: CurveKind, a: Complex64, b: Complex64, lambda: Complex64) -> Result<CurveSpec> {
    let p = RootPoly::from_roots(vec![a, b], Complex64::new(1.0, 0.0))?;
    make_family(kind, 2, p, lambda)
}

/// A curve given directly by its finite branch points (odd count, 2g+1).
pub fn make_generic(roots: Vec<Complex64>) -> Result<CurveSpec> {
    if roots.len() % 2 == 0 || roots.len() < 3 {
        return Err(Error::InvalidParameter(
            "generic curve needs an odd number (>= 3) of finite branch points".into(),
        ));
    }
    let genus = (roots.len() - 1) / 2;
    if genus > MAX_GENUS {
        return Err(Error::GenusBound(genus));
    }
    check_distinct(&roots)?;
    Ok(CurveSpec {
        kind: CurveKind::Generic,
        genus,
        lambda: None,
        p_poly: None,
        roots,
    })
}

/// Argument used for sort tie-breaking, taken in [-pi, pi) so that negative
/// reals sort before positive ones of equal modulus.
fn tie_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a >= std::f64::consts::PI {
        a - std::f64::consts::TAU
    } else {
        a
    }
}

/// Finite branch points sorted by modulus, ties broken by ascending argument.
pub fn branch_points(spec: &CurveSpec) -> Vec<Complex64> {
    let mut pts = spec.roots.clone();
    pts.sort_by(|a, b| {
        a.norm()
            .total_cmp(&b.norm())
            .then(tie_arg(*a).total_cmp(&tie_arg(*b)))
    });
    pts
}

/// The chain of branch points the elementary cycles are strung along:
/// the sorted list, repaired so that no point lies inside another segment.
pub fn chain(spec: &CurveSpec) -> Result<Vec<Complex64>> {
    let mut pts = branch_points(spec);
    let n = pts.len();
    for _pass in 0..n * n {
        let mut moved = false;
        'outer: for k in 0..n - 1 {
            let (a, b) = (pts[k], pts[k + 1]);
            let seg_len = (b - a).norm();
            for j in 0..n {
                if j == k || j == k + 1 {
                    continue;
                }
                let w = pts[j];
                let t = projection_parameter(w, a, b);
                let d = dist_point_segment(w, a, b);
                if t > 0.02 && t < 0.98 && d < 1e-3 * seg_len {
                    // Re-insert the offending point between the pair.
                    let w = pts.remove(j);
                    let insert_at = if j < k { k } else { k + 1 };
                    pts.insert(insert_at, w);
                    moved = true;
                    break 'outer;
                }
            }
        }
        if !moved {
            return Ok(pts);
        }
    }
    Err(Error::DegenerateChain(
        "could not order branch points into a chain".into(),
    ))
}

/// Homology basis given by integer coefficients over the elementary cycles
/// c_1 ... c_{2g} of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyBasis {
    pub deltas: Vec<Vec<i64>>,
    pub gammas: Vec<Vec<i64>>,
}

/// Skew intersection form of the elementary cycles: adjacent cycles meet
/// once, non-adjacent ones not at all.
pub fn intersection_form(n_cycles: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n_cycles]; n_cycles];
    for k in 0..n_cycles.saturating_sub(1) {
        m[k][k + 1] = 1;
        m[k + 1][k] = -1;
    }
    m
}

fn pair(form: &[Vec<i64>], u: &[i64], v: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, ui) in u.iter().enumerate() {
        if *ui == 0 {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            acc += ui * form[i][j] * vj;
        }
    }
    acc
}

/// True when the basis pairs as delta_i . gamma_j = delta_ij with isotropic
/// delta- and gamma-spans.
pub fn check_symplectic(basis: &HomologyBasis, n_cycles: usize) -> bool {
    let form = intersection_form(n_cycles);
    let g = basis.deltas.len();
    for i in 0..g {
        for j in 0..g {
            if pair(&form, &basis.deltas[i], &basis.deltas[j]) != 0 {
                return false;
            }
            if pair(&form, &basis.gammas[i], &basis.gammas[j]) != 0 {
                return false;
            }
            let want = if i == j { 1 } else { 0 };
            if pair(&form, &basis.deltas[i], &basis.gammas[j]) != want {
                return false;
            }
        }
    }
    true
}

/// The chain basis: delta_j = c_1 + c_3 + ... + c_{2j-1}, gamma_j = c_{2j}.
pub fn chain_basis(spec: &CurveSpec) -> Result<HomologyBasis> {
    let g = spec.genus;
    let n_cycles = 2 * g;
    let mut deltas = Vec::with_capacity(g);
    let mut gammas = Vec::with_capacity(g);
    for j in 1..=g {
        let mut d = vec![0i64; n_cycles];
        for o in (0..2 * j - 1).step_by(2) {
            d[o] = 1;
        }
        deltas.push(d);
        let mut gmm = vec![0i64; n_cycles];
        gmm[2 * j - 1] = 1;
        gammas.push(gmm);
    }
    let basis = HomologyBasis { deltas, gammas };
    if !check_symplectic(&basis, n_cycles) {
        return Err(Error::IntersectionCheck);
    }
    Ok(basis)
}

/// Generic symplectic basis obtained by integer reduction of the elementary
/// intersection form to the standard one.
pub fn symplectic_basis(spec: &CurveSpec) -> Result<HomologyBasis> {
    let n = 2 * spec.genus;
    let mut vecs: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        })
        .collect();
    let form = intersection_form(n);
    let mut deltas = Vec::new();
    let mut gammas = Vec::new();
    while !vecs.is_empty() {
        // Find a unimodular pairing among the remaining vectors.
        let mut found = None;
        'search: for i in 0..vecs.len() {
            for j in 0..vecs.len() {
                if i != j && pair(&form, &vecs[i], &vecs[j]) == 1 {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let (i, j) = found.ok_or(Error::ReductionFailure)?;
        let d = vecs[i].clone();
        let gmm = vecs[j].clone();
        vecs.retain(|v| *v != d && *v != gmm);
        for v in vecs.iter_mut() {
            let a = pair(&form, v, &gmm);
            let b = pair(&form, v, &d);
            // v <- v - a d + b gamma kills both pairings.
            for k in 0..n {
                v[k] = v[k] - a * d[k] + b * gmm[k];
            }
        }
        deltas.push(d);
        gammas.push(gmm);
    }
    let basis = HomologyBasis { deltas, gammas };
    if !check_symplectic(&basis, n) {
        return Err(Error::ReductionFailure);
    }
    Ok(basis)
}

/// The smooth curve obtained by resolving the singular member: the node drops
/// {0, lambda}, the cusps drop the colliding triple except the x factor.
pub fn normalization_curve(spec: &CurveSpec) -> Result<CurveSpec> {
    let p = spec
        .p_poly
        .as_ref()
        .ok_or_else(|| Error::WrongFamily("normalization needs a family curve".into()))?;
    let kept = match spec.kind {
        CurveKind::Node => Complex64::new(1.0, 0.0),
        CurveKind::Cusp1 | CurveKind::Cusp2 => Complex64::new(0.0, 0.0),
        CurveKind::Generic => {
            return Err(Error::WrongFamily("generic curves have no normalization".into()))
        }
    };
    let mut roots = vec![kept];
    roots.extend(p.roots().iter().copied());
    make_generic(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn node_g2(lambda: f64) -> CurveSpec {
        genus2_family(CurveKind::Node, c(2.0, 0.0), c(3.0, 0.0), c(lambda, 0.0)).unwrap()
    }

    #[test]
    fn family_roots() {
        let spec = node_g2(1e-4);
        assert_eq!(branch_points(&spec), vec![c(0.0, 0.0), c(1e-4, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        let spec = genus2_family(CurveKind::Cusp1, c(2.0, 0.0), c(3.0, 0.0), c(1e-8, 0.0)).unwrap();
        assert_eq!(
            branch_points(&spec),
            vec![c(0.0, 0.0), c(-1e-4, 0.0), c(1e-4, 0.0), c(2.0, 0.0), c(3.0, 0.0)]
        );
        assert!(genus2_family(CurveKind::Node, c(2.0, 0.0), c(3.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn cusp2_sorting_puts_lambda_squared_first() {
        let spec = genus2_family(CurveKind::Cusp2, c(2.0, 0.0), c(3.0, 0.0), c(0.01, 0.0)).unwrap();
        assert_eq!(
            branch_points(&spec),
            vec![c(0.0, 0.0), c(1e-4, 0.0), c(1e-2, 0.0), c(2.0, 0.0), c(3.0, 0.0)]
        );
    }

    #[test]
    fn cusp1_chain_repair() {
        let spec = genus2_family(CurveKind::Cusp1, c(2.0, 0.0), c(3.0, 0.0), c(1e-8, 0.0)).unwrap();
        let ch = chain(&spec).unwrap();
        assert_eq!(ch, vec![c(-1e-4, 0.0), c(0.0, 0.0), c(1e-4, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
    }

    #[test]
    fn chain_basis_is_symplectic_for_families() {
        for spec in [
            node_g2(1e-3),
            genus2_family(CurveKind::Cusp1, c(2.0, 0.0), c(3.0, 0.0), c(1e-6, 0.0)).unwrap(),
            genus2_family(CurveKind::Cusp2, c(2.0, 0.0), c(3.0, 0.0), c(1e-3, 0.0)).unwrap(),
        ] {
            let basis = chain_basis(&spec).unwrap();
            assert!(check_symplectic(&basis, 2 * spec.genus));
        }
        let p = RootPoly::from_roots(
            vec![c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0), c(5.0, 0.0)],
            c(1.0, 0.0),
        )
        .unwrap();
        let g3 = make_family(CurveKind::Node, 3, p, c(1e-3, 0.0)).unwrap();
        let basis = chain_basis(&g3).unwrap();
        assert!(check_symplectic(&basis, 6));
        let norm = normalization_curve(&g3).unwrap();
        assert_eq!(norm.genus, 2);
        let nb = chain_basis(&norm).unwrap();
        assert!(check_symplectic(&nb, 4));
    }

    #[test]
    fn paper_cycle_contents() {
        // Node: delta_1 around {0, lambda}; gamma_1 around {lambda, 1};
        // delta_2 adds {1, a}; gamma_2 around {a, b}.
        let spec = node_g2(1e-4);
        let basis = chain_basis(&spec).unwrap();
        assert_eq!(basis.deltas[0], vec![1, 0, 0, 0]);
        assert_eq!(basis.gammas[0], vec![0, 1, 0, 0]);
        assert_eq!(basis.deltas[1], vec![1, 0, 1, 0]);
        assert_eq!(basis.gammas[1], vec![0, 0, 0, 1]);
        // Cusp I: chain order means delta_1 encircles {-sqrt(l), 0} and
        // gamma_1 encircles {0, +sqrt(l)}.
        let spec = genus2_family(CurveKind::Cusp1, c(2.0, 0.0), c(3.0, 0.0), c(1e-8, 0.0)).unwrap();
        let ch = chain(&spec).unwrap();
        assert_eq!((ch[0], ch[1], ch[2]), (c(-1e-4, 0.0), c(0.0, 0.0), c(1e-4, 0.0)));
    }

    #[test]
    fn symplectic_reduction_matches_standard_form() {
        let spec = node_g2(1e-3);
        let basis = symplectic_basis(&spec).unwrap();
        assert!(check_symplectic(&basis, 4));
        let p = RootPoly::from_roots(
            vec![c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0), c(5.0, 0.0)],
            c(1.0, 0.0),
        )
        .unwrap();
        let g3 = make_family(CurveKind::Node, 3, p, c(1e-3, 0.0)).unwrap();
        let basis = symplectic_basis(&g3).unwrap();
        assert!(check_symplectic(&basis, 6));
        // Genus 1: same cycles as the chain basis up to sign.
        let e = make_generic(vec![c(0.0, 0.0), c(1.0, 0.0), c(4.0, 0.0)]).unwrap();
        let basis = symplectic_basis(&e).unwrap();
        assert_eq!(basis.deltas[0].iter().map(|x| x.abs()).sum::<i64>(), 1);
        assert_eq!(basis.gammas[0].iter().map(|x| x.abs()).sum::<i64>(), 1);
    }

    #[test]
    fn normalization_drops_degenerating_points() {
        let spec = node_g2(1e-4);
        let norm = normalization_curve(&spec).unwrap();
        assert_eq!(norm.genus, 1);
        assert_eq!(branch_points(&norm), vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        let spec = genus2_family(CurveKind::Cusp1, c(2.0, 0.0), c(3.0, 0.0), c(1e-8, 0.0)).unwrap();
        let norm = normalization_curve(&spec).unwrap();
        assert_eq!(branch_points(&norm), vec![c(0.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
    }
}
