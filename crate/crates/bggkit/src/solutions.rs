//! Values of parallel sections: the `Sᵏ` chain and `S^∞`, infinitesimal
//! holonomy, normal and invariant solutions, and coupling.

use serde::Serialize;

use crate::connection::{tractor_connection, ConnectionCurvature, ConnectionKind, ConnectionMap};
use crate::error::{BggError, Result};
use crate::extension::ExtensionMap;
use crate::lie::Representation;
use crate::linalg::{self, Echelon, Subspace, Vector};
use crate::matrix::Matrix;

/// `S^∞` of a connection with the chain that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionSpace {
    pub kind: ConnectionKind,
    /// `dim S⁰, dim S¹, …` up to the first repetition.
    pub chain: Vec<usize>,
    pub space: Subspace,
    /// `S^∞` of the tractor connection, when it was computed alongside.
    pub normal: Option<Subspace>,
    pub invariant: Subspace,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn normal_dim(&self) -> Option<usize> {
        self.normal.as_ref().map(Subspace::dim)
    }
}

/// `∩ Ker R(eᵢ, eⱼ)`.
pub fn curvature_kernel(r: &ConnectionCurvature, dim_v: usize) -> Subspace {
    let mut e = Echelon::new(dim_v);
    for m in r.generators() {
        for i in 0..m.rows() {
            if e.rank() == dim_v {
                break;
            }
            if !linalg::is_zero_vec(m.row(i)) {
                e.insert(m.row(i));
            }
        }
    }
    linalg::kernel_from_echelon(&e)
}

/// Largest subspace of `s` mapped into itself by every `Φ(eᵢ)`, with the
/// dimensions of the intermediate steps.
pub fn invariant_core(conn: &ConnectionMap, s: Subspace) -> (Subspace, Vec<usize>) {
    let phis: Vec<Matrix> = (0..conn.dim_k()).map(|j| conn.phi(j)).collect();
    let mut cur = s;
    let mut chain = vec![cur.dim()];
    loop {
        if cur.dim() == 0 {
            break;
        }
        let mut cols: Vec<Vector> = vec![Vec::new(); cur.dim()];
        for p in &phis {
            for (c, b) in cur.basis.iter().enumerate() {
                cols[c].extend(cur.residual(&p.mul_vec(b)));
            }
        }
        let rows = cols[0].len();
        let y = linalg::nullspace(&Matrix::from_cols(rows, &cols));
        if y.dim() == cur.dim() {
            break;
        }
        let vecs: Vec<Vector> = y.basis.iter().map(|t| cur.combine(t)).collect();
        cur = Subspace::from_vectors(cur.ambient_dim, &vecs);
        chain.push(cur.dim());
    }
    (cur, chain)
}

/// `{v ∈ s : Φ(eᵢ)v = 0 for all i}`.
pub fn invariant_solutions(conn: &ConnectionMap, s: &Subspace) -> Subspace {
    let mut k = s.clone();
    for j in 0..conn.dim_k() {
        k = k
            .intersect(&linalg::nullspace(&conn.phi(j)))
            .expect("same ambient space");
    }
    k
}

/// `S⁰ = ∩ Ker R(eᵢ,eⱼ)` and `Sᵏ = {v ∈ Sᵏ⁻¹ : Φ(eᵢ)v ∈ Sᵏ⁻¹}`.
pub fn solve_s_infinity(conn: &ConnectionMap) -> SolutionSpace {
    let r = conn.curvature();
    let s0 = curvature_kernel(&r, conn.dim_v());
    let (space, chain) = invariant_core(conn, s0);
    let invariant = invariant_solutions(conn, &space);
    let normal = (conn.kind == ConnectionKind::Tractor).then(|| space.clone());
    SolutionSpace {
        kind: conn.kind,
        chain,
        space,
        normal,
        invariant,
    }
}

/// `S^∞` of the tractor connection `ρ∘α`.
pub fn normal_solutions(ext: &ExtensionMap, rep: &Representation) -> Result<Subspace> {
    Ok(solve_s_infinity(&tractor_connection(ext, rep)?).space)
}

/// Solves for `conn` and records the normal solutions. For a connection other
/// than the tractor one, normal solutions must lie in its `S^∞` and be killed
/// by `ψ`.
pub fn solve(conn: &ConnectionMap) -> Result<SolutionSpace> {
    let mut sol = solve_s_infinity(conn);
    if conn.kind != ConnectionKind::Tractor {
        let normal = normal_solutions(&conn.ext, &conn.rep)?;
        if conn.kind == ConnectionKind::Prolongation {
            if !sol.space.contains_subspace(&normal) {
                return Err(BggError::InvalidRepresentation(
                    "normal solutions are not solutions of the prolongation connection".into(),
                ));
            }
            for v in &normal.basis {
                if conn.psi.iter().any(|p| !linalg::is_zero_vec(&p.mul_vec(v))) {
                    return Err(BggError::InvalidRepresentation(
                        "Ψ does not vanish on a normal solution".into(),
                    ));
                }
            }
        }
        sol.normal = Some(normal);
    }
    Ok(sol)
}

/// Lie algebra generated by curvature values, closed under `ad Φ(eᵢ)`.
#[derive(Clone, Debug, Serialize)]
pub struct HolonomyAlgebra {
    pub dim: usize,
    pub generators: Vec<Matrix>,
    pub basis: Vec<Matrix>,
    pub bracket_closed: bool,
}

impl HolonomyAlgebra {
    /// Matrix entries `(row, col)` nonzero somewhere in the span.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let Some(first) = self.basis.first() else {
            return Vec::new();
        };
        let n = first.rows();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..first.cols() {
                if self.basis.iter().any(|m| !m[(i, j)].is_zero()) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True when every element kills every vector of `s`.
    pub fn annihilates(&self, s: &Subspace) -> bool {
        self.basis
            .iter()
            .all(|m| s.basis.iter().all(|v| linalg::is_zero_vec(&m.mul_vec(v))))
    }
}

/// Rank-stabilizing closure of the curvature values under `ad Φ(eᵢ)` and
/// commutators. Refuses representations above `max_dim`.
pub fn holonomy(conn: &ConnectionMap, max_dim: usize) -> Result<HolonomyAlgebra> {
    let n = conn.dim_v();
    if n > max_dim {
        return Err(BggError::Unsupported(format!(
            "holonomy closure limited to dim V ≤ {max_dim}, got {n}"
        )));
    }
    let generators = conn.curvature().generators();
    let phis: Vec<Matrix> = (0..conn.dim_k()).map(|j| conn.phi(j)).collect();
    let mut ech = Echelon::new(n * n);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut queue: Vec<Matrix> = Vec::new();
    for g in &generators {
        if ech.insert(&g.to_vec()) {
            basis.push(g.clone());
            queue.push(g.clone());
        }
    }
    while let Some(a) = queue.pop() {
        let mut new = Vec::new();
        for p in &phis {
            new.push(p.commutator(&a));
        }
        for b in &basis {
            new.push(a.commutator(b));
        }
        for m in new {
            if ech.insert(&m.to_vec()) {
                basis.push(m.clone());
                queue.push(m);
            }
        }
        if basis.len() > n * n {
            return Err(BggError::NonTermination("holonomy closure".into()));
        }
    }
    let bracket_closed = basis.iter().enumerate().all(|(i, a)| {
        basis[i + 1..]
            .iter()
            .all(|b| linalg::is_zero_vec(&ech.reduce(&a.commutator(b).to_vec())))
    });
    Ok(HolonomyAlgebra {
        dim: basis.len(),
        generators,
        basis,
        bracket_closed,
    })
}

/// `sv ⊗ sw` with index `i·dim W + j`, after checking both factors are normal.
pub fn couple(
    ext: &ExtensionMap,
    v: &Representation,
    w: &Representation,
    sv: &[crate::Scalar],
    sw: &[crate::Scalar],
) -> Result<Vector> {
    if !normal_solutions(ext, v)?.contains(sv) || !normal_solutions(ext, w)?.contains(sw) {
        return Err(BggError::InvalidRepresentation(
            "coupling needs normal solutions".into(),
        ));
    }
    Ok(sv
        .iter()
        .flat_map(|a| sw.iter().map(move |b| a * b))
        .collect())
}

/// Failures of the defining properties of `S^∞` for `conn`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct StabilityReport {
    pub phi_invariant: bool,
    pub curvature_annihilates: bool,
    pub holonomy_annihilates: Option<bool>,
}

pub fn stability(
    conn: &ConnectionMap,
    s: &Subspace,
    hol: Option<&HolonomyAlgebra>,
) -> StabilityReport {
    let phi_invariant = (0..conn.dim_k()).all(|j| s.restrict(&conn.phi(j)).is_some());
    let r = conn.curvature();
    let curvature_annihilates = r
        .generators()
        .iter()
        .all(|m| s.basis.iter().all(|v| linalg::is_zero_vec(&m.mul_vec(v))));
    StabilityReport {
        phi_invariant,
        curvature_annihilates,
        holonomy_annihilates: hol.map(|h| h.annihilates(s)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use std::sync::Arc;

    use crate::connection::{automorphism_connection, prolong, Schedule};
    use crate::extension::GradedAlgebraBundle;
    use crate::lie::{LieAlgebra, SymmetryPair};
    use crate::linalg::SpanCoordinates;
    use crate::testutil::sln_p1;
    use crate::Scalar;

    fn projective() -> ExtensionMap {
        let (g, std) = sln_p1(4);
        let k = LieAlgebra::from_triples(
            vec!["e1".into(), "e2".into(), "e3".into()],
            &[(0, 1, 2, Scalar::from_int(-1))],
        )
        .unwrap();
        let k = SymmetryPair::new(k, vec![], vec![-1, -1, -1]).unwrap();
        let b = Arc::new(GradedAlgebraBundle::new(g, std, k).unwrap());
        let mats = [
            Matrix::from_ints(4, 4, &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 1]),
            Matrix::from_ints(4, 4, &[0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0]),
            Matrix::from_ints(4, 4, &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0]),
        ];
        let basis: Vec<Vector> = b.defining.rho.iter().map(Matrix::to_vec).collect();
        let sc = SpanCoordinates::new(16, &basis).unwrap();
        let cols: Vec<Vector> = mats
            .iter()
            .map(|m| sc.coordinates(&m.to_vec()).unwrap())
            .collect();
        ExtensionMap::new(b.clone(), Matrix::from_cols(15, &cols)).unwrap()
    }

    #[test]
    fn projective_standard_solutions_and_holonomy() {
        let ext = projective();
        let std = ext.bundle().defining.clone();
        let conn = tractor_connection(&ext, &std).unwrap();
        let s = solve(&conn).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.space.support(), vec![2, 3]);
        let hol = holonomy(&conn, 64).unwrap();
        assert_eq!(hol.dim, 2);
        assert!(hol.bracket_closed);
        assert_eq!(hol.support(), vec![(3, 0), (3, 1)]);
        let st = stability(&conn, &s.space, Some(&hol));
        assert!(
            st.phi_invariant && st.curvature_annihilates && st.holonomy_annihilates == Some(true)
        );
    }

    #[test]
    fn projective_dual_and_coupling() {
        let ext = projective();
        let dual = ext.bundle().defining.dual();
        let s = solve(&tractor_connection(&ext, &dual).unwrap()).unwrap();
        assert_eq!(s.dim(), 3);
        let t = dual.tensor(&dual);
        let st = normal_solutions(&ext, &t).unwrap();
        for a in &s.space.basis {
            for b in &s.space.basis {
                assert!(st.contains(&couple(&ext, &dual, &dual, a, b).unwrap()));
            }
        }
        let std = ext.bundle().defining.clone();
        assert!(couple(
            &ext,
            &std,
            &std,
            &linalg::unit_vec(4, 0),
            &linalg::unit_vec(4, 2)
        )
        .is_err());
    }

    #[test]
    fn projective_sym2_and_alt2() {
        let ext = projective();
        let std = ext.bundle().defining.clone();
        for (rep, dim, normal) in [
            (std.sym2(), 3, 3),
            (std.alt2(), 5, 3),
            (std.dual().sym2(), 6, 6),
        ] {
            let p = prolong(
                &tractor_connection(&ext, &rep).unwrap(),
                Schedule::Ascending,
            )
            .unwrap();
            let s = solve(&p.connection).unwrap();
            assert_eq!(
                (s.dim(), s.normal_dim()),
                (dim, Some(normal)),
                "{}",
                rep.name
            );
        }
    }

    #[test]
    fn automorphisms_contain_alpha_k() {
        let ext = projective();
        let gl = ext.bundle().defining.adjoint_gl();
        let aut = automorphism_connection(&ext, &gl).unwrap();
        let s = solve(&aut).unwrap();
        assert_eq!(s.dim(), 8);
        for j in 0..3 {
            let m = ext.matrix(j);
            let mut v = linalg::zero_vec(16);
            for r in 0..4 {
                for c in 0..4 {
                    v[Representation::gl_index(4, r, c)] = m[(r, c)].clone();
                }
            }
            assert!(s.space.contains(&v));
        }
    }
}
