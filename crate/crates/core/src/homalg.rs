//! Projective covers, minimal presentations, the transpose and the
//! Auslander-Reiten translates, extension groups, stable hom spaces, and
//! the tilting test.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::Field;
use crate::matrix::{Mat, Subspace};
use crate::module::{
    decompose, hom_basis, regular_module, Module, Morphism,
};

pub struct ProjCover<F: Field> {
    pub module: Module<F>,
    pub epi: Morphism<F>,
    /// vertex of each indecomposable projective summand, in block order
    pub vertices: Vec<usize>,
}

/// Minimal projective cover: one projective summand per generator chosen
/// greedily from lifts of a basis of the top.
pub fn projective_cover<F: Field>(x: &Module<F>) -> ProjCover<F> {
    let a = x.algebra().clone();
    let f = a.field().clone();
    if x.is_zero() {
        let module = Module::zero(a.clone());
        let epi = Morphism {
            source: module.clone(),
            target: x.clone(),
            mat: Mat::zero(f, 0, 0),
        };
        return ProjCover { module, epi, vertices: vec![] };
    }
    let total = x.total_dim();
    let rad_rows = x.radical_rows();
    let mut reach = Subspace::from_rows(f.clone(), total, &rad_rows);
    let mut gens: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    for i in 0..a.num_vertices() {
        for r in x.block_range(i) {
            let cand = crate::matrix::unit_vec(&f, total, r);
            if reach.contains(&cand) {
                continue;
            }
            // close the span under the action of the generator
            let mut new_rows = reach.basis_rows();
            for k in 0..a.dim() {
                new_rows.push(x.act(k).apply_row(&cand));
            }
            new_rows.push(cand.clone());
            reach = Subspace::from_rows(f.clone(), total, &new_rows);
            gens.push((i, cand));
        }
    }
    debug_assert_eq!(reach.dim(), total, "generators plus radical span the module");
    let projs = a.projectives_embedded();
    let parts: Vec<Module<F>> = gens.iter().map(|(i, _)| projs[*i].0.clone()).collect();
    let cover = Module::direct_sum(&a, &parts);
    let mut rows: Vec<Vec<F::Elem>> = Vec::with_capacity(cover.total_dim());
    for (i, w) in &gens {
        let embedding = &projs[*i].1;
        for r in 0..embedding.rows {
            rows.push(x.apply(w, embedding.row(r)));
        }
    }
    let epi = Morphism {
        source: cover.clone(),
        target: x.clone(),
        mat: Mat::from_rows(f, rows),
    };
    debug_assert_eq!(epi.mat.rank(), total, "cover must be surjective");
    ProjCover { module: cover, epi, vertices: gens.into_iter().map(|(i, _)| i).collect() }
}

pub fn is_projective<F: Field>(x: &Module<F>) -> bool {
    projective_cover(x).module.total_dim() == x.total_dim()
}

pub fn is_injective<F: Field>(x: &Module<F>) -> bool {
    is_projective(&x.dual())
}

pub struct MinimalPresentation<F: Field> {
    pub p0: ProjCover<F>,
    /// kernel of the cover, as a submodule of P0
    pub syzygy: Module<F>,
    pub syzygy_include: Morphism<F>,
    pub p1: ProjCover<F>,
    /// the composite P1 -> syzygy -> P0
    pub d: Morphism<F>,
}

pub fn minimal_presentation<F: Field>(x: &Module<F>) -> MinimalPresentation<F> {
    let p0 = projective_cover(x);
    let kernel_rows = p0.epi.mat.kernel_basis();
    let (syzygy, syzygy_include) =
        p0.module.submodule(&kernel_rows).expect("kernels are action-stable");
    let p1 = projective_cover(&syzygy);
    let d = p1.epi.then(&syzygy_include);
    MinimalPresentation { p0, syzygy, syzygy_include, p1, d }
}

/// `Hom_A(P, A)` as a right module over the opposite algebra, acting by
/// postcomposition with left multiplications. Returns the module, the hom
/// basis, the flattening subspace used for coordinates, and the raw-to-
/// canonical basis transform of the constructed module.
fn hom_to_regular_op_module<F: Field>(
    p: &Module<F>,
) -> (Module<F>, Vec<Morphism<F>>, Subspace<F>, Mat<F>) {
    let a = p.algebra().clone();
    let op = a.opposite();
    let f = a.field().clone();
    let reg = regular_module(&a);
    let homs = hom_basis(p, &reg);
    let d = homs.len();
    let cells = p.total_dim() * a.dim();
    let flatten = |m: &Mat<F>| -> Vec<F::Elem> {
        (0..cells).map(|rc| m.at(rc / a.dim(), rc % a.dim()).clone()).collect()
    };
    let flat = Subspace::from_rows(
        f.clone(),
        cells,
        &homs.iter().map(|h| flatten(&h.mat)).collect::<Vec<_>>(),
    );
    let (_, t_reg, t_reg_inv) = a.regular_with_transform();
    let mut acts = Vec::with_capacity(op.dim());
    for k in 0..op.dim() {
        // left multiplication, conjugated into the regular module's
        // canonical coordinates
        let lmat = t_reg_inv
            .mul(&a.lmul_matrix(&crate::matrix::unit_vec(&f, a.dim(), k)))
            .mul(t_reg);
        let rows: Vec<Vec<F::Elem>> = homs
            .iter()
            .map(|h| {
                let img = h.mat.mul(&lmat);
                flat.coords_of(&flatten(&img)).expect("left multiple of a hom is a hom")
            })
            .collect();
        acts.push(if d == 0 {
            Mat::zero(f.clone(), 0, 0)
        } else {
            Mat::from_rows(f.clone(), rows)
        });
    }
    let (module, t) = Module::new_with_transform(op, acts).expect("hom module is valid");
    (module, homs, flat, t)
}

/// The transpose: cokernel of `Hom(P0, A) -> Hom(P1, A)` along a minimal
/// presentation, as a module over the opposite algebra.
pub fn transpose<F: Field>(x: &Module<F>) -> Module<F> {
    let a = x.algebra().clone();
    let op = a.opposite();
    if x.is_zero() {
        return Module::zero(op);
    }
    let pres = minimal_presentation(x);
    let (h1, h1_basis, h1_flat, t1) = hom_to_regular_op_module(&pres.p1.module);
    if h1_basis.is_empty() {
        return Module::zero(op);
    }
    let (_h0, h0_basis, _h0_flat, _t0) = hom_to_regular_op_module(&pres.p0.module);
    // the induced map on raw hom coordinates: g -> (d then g)
    let cells = pres.p1.module.total_dim() * a.dim();
    let flatten = |m: &Mat<F>| -> Vec<F::Elem> {
        (0..cells).map(|rc| m.at(rc / a.dim(), rc % a.dim()).clone()).collect()
    };
    let image_rows_raw: Vec<Vec<F::Elem>> = h0_basis
        .iter()
        .map(|g| {
            let composed = pres.d.mat.mul(&g.mat);
            h1_flat.coords_of(&flatten(&composed)).expect("composite is a hom")
        })
        .collect();
    // convert raw h1 coordinates into the canonical coordinates of h1
    let t1_inv = t1.inverse().expect("canonical transform invertible");
    let image_rows: Vec<Vec<F::Elem>> = image_rows_raw
        .iter()
        .map(|r| {
            Mat::from_rows(a.field().clone(), vec![r.clone()]).mul(&t1_inv).row(0).to_vec()
        })
        .collect();
    h1.quotient_module(&image_rows).expect("image of a module map is stable").0
}

/// D Tr: the Auslander-Reiten translate. Projective summands are dropped
/// first; the returned flag says whether any were.
pub fn tau<F: Field>(x: &Module<F>) -> Result<(Module<F>, bool)> {
    let a = x.algebra().clone();
    let pieces = decompose(x)?;
    let mut keep = Vec::new();
    let mut dropped = false;
    for p in pieces {
        if is_projective(&p.module) {
            dropped = true;
        } else {
            keep.push(p.module);
        }
    }
    if keep.is_empty() {
        return Ok((Module::zero(a), dropped));
    }
    let m = Module::direct_sum(&a, &keep);
    let tr = transpose(&m);
    Ok((tr.dual(), dropped))
}

/// Tr D: the inverse translate. Injective summands are dropped first.
pub fn tau_inverse<F: Field>(x: &Module<F>) -> Result<(Module<F>, bool)> {
    let a = x.algebra().clone();
    let pieces = decompose(x)?;
    let mut keep = Vec::new();
    let mut dropped = false;
    for p in pieces {
        if is_injective(&p.module) {
            dropped = true;
        } else {
            keep.push(p.module);
        }
    }
    if keep.is_empty() {
        return Ok((Module::zero(a), dropped));
    }
    let m = Module::direct_sum(&a, &keep);
    Ok((transpose(&m.dual()), dropped))
}

/// dim Ext^1(x, y) from a minimal presentation of x.
pub fn ext1_dim<F: Field>(x: &Module<F>, y: &Module<F>) -> usize {
    if x.is_zero() || y.is_zero() {
        return 0;
    }
    let pres = minimal_presentation(x);
    if pres.syzygy.is_zero() {
        return 0;
    }
    let h1 = hom_basis(&pres.p1.module, y).len();
    let h0 = hom_basis(&pres.p0.module, y).len();
    let hx = hom_basis(x, y).len();
    h1 + hx - h0
}

/// dim of Hom(x,y) modulo maps factoring through a projective.
pub fn stable_hom_dim_mod_proj<F: Field>(x: &Module<F>, y: &Module<F>) -> usize {
    let homs = hom_basis(x, y);
    if homs.is_empty() {
        return 0;
    }
    let f = x.field().clone();
    let cover = projective_cover(y);
    let through = hom_basis(x, &cover.module);
    if through.is_empty() {
        return homs.len();
    }
    let cells = x.total_dim() * y.total_dim();
    let flatten = |m: &Mat<F>| -> Vec<F::Elem> {
        (0..cells).map(|rc| m.at(rc / y.total_dim(), rc % y.total_dim()).clone()).collect()
    };
    let image = Subspace::from_rows(
        f,
        cells,
        &through
            .iter()
            .map(|h| flatten(&h.mat.mul(&cover.epi.mat)))
            .collect::<Vec<_>>(),
    );
    homs.len() - image.dim()
}

/// dim of Hom(x,y) modulo maps factoring through an injective.
pub fn stable_hom_dim_mod_inj<F: Field>(x: &Module<F>, y: &Module<F>) -> usize {
    let homs = hom_basis(x, y);
    if homs.is_empty() {
        return 0;
    }
    let f = x.field().clone();
    // injective envelope: dual of the projective cover of the dual
    let xd = x.dual();
    let cover = projective_cover(&xd);
    let env = cover.module.dual();
    let mono_mat = cover.epi.mat.transpose();
    let through = hom_basis(&env, y);
    if through.is_empty() {
        return homs.len();
    }
    let cells = x.total_dim() * y.total_dim();
    let flatten = |m: &Mat<F>| -> Vec<F::Elem> {
        (0..cells).map(|rc| m.at(rc / y.total_dim(), rc % y.total_dim()).clone()).collect()
    };
    let image = Subspace::from_rows(
        f,
        cells,
        &through
            .iter()
            .map(|g| flatten(&mono_mat.mul(&g.mat)))
            .collect::<Vec<_>>(),
    );
    homs.len() - image.dim()
}

/// Projective dimension at most one: the syzygy of a minimal cover is
/// projective.
pub fn pd_le_1<F: Field>(x: &Module<F>) -> bool {
    if x.is_zero() {
        return true;
    }
    let pres = minimal_presentation(x);
    pres.syzygy.is_zero() || is_projective(&pres.syzygy)
}

/// Injective dimension at most one, via the opposite algebra.
pub fn id_le_1<F: Field>(x: &Module<F>) -> bool {
    pd_le_1(&x.dual())
}

/// Global dimension at most one: every simple has projective dimension <= 1.
pub fn is_hereditary_algebra<F: Field>(a: &Algebra<F>) -> bool {
    (0..a.num_vertices()).all(|i| pd_le_1(&crate::module::simple(a, i)))
}

#[derive(Debug, Clone)]
pub struct TiltingReport {
    pub pd_at_most_one: bool,
    pub ext_self_vanishes: bool,
    pub summand_count: usize,
    pub expected_count: usize,
    pub faithful: bool,
}

impl TiltingReport {
    pub fn is_tilting(&self) -> bool {
        self.pd_at_most_one
            && self.ext_self_vanishes
            && self.summand_count == self.expected_count
            && self.faithful
    }
}

/// The tilting test over `b`: projective dimension at most one, no
/// self-extensions, as many pairwise non-isomorphic indecomposable summands
/// as simple modules, and faithfulness.
pub fn is_tilting<F: Field>(b: &Algebra<F>, m: &Module<F>) -> Result<TiltingReport> {
    assert!(b.same(m.algebra()));
    let summands = crate::module::decompose_with_multiplicities(m)?;
    Ok(TiltingReport {
        pd_at_most_one: pd_le_1(m),
        ext_self_vanishes: ext1_dim(m, m) == 0,
        summand_count: summands.len(),
        expected_count: b.num_vertices(),
        faithful: m.annihilator_ideal().dim() == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::module::{is_isomorphic, projective, simple};
    use crate::quiver::{
        linear_quiver_algebra, main_example_algebra, truncated_polynomial_algebra,
    };

    #[test]
    fn cover_of_simple_is_projective_at_vertex() {
        let a = main_example_algebra(Rationals);
        for i in 0..3 {
            let c = projective_cover(&simple(&a, i));
            assert_eq!(c.vertices, vec![i]);
            assert!(is_isomorphic(&c.module, &projective(&a, i)).is_some());
        }
    }

    #[test]
    fn cover_of_projective_is_identity() {
        let a = main_example_algebra(Rationals);
        let p = projective(&a, 2);
        let c = projective_cover(&p);
        assert_eq!(c.module.total_dim(), p.total_dim());
        assert!(c.epi.is_iso());
        assert!(is_projective(&p));
    }

    #[test]
    fn cover_of_rad_p3 () {
        // top(rad P3) = S1 + S2, so the cover is P1 + P2
        let a = main_example_algebra(Rationals);
        let (r, _) = projective(&a, 2).radical_submodule();
        let c = projective_cover(&r);
        let mut vs = c.vertices.clone();
        vs.sort();
        assert_eq!(vs, vec![0, 1]);
    }

    #[test]
    fn tau_on_dual_numbers() {
        // the simple over K[x]/(x^2) is tau-periodic with period 1
        let a = truncated_polynomial_algebra(Rationals, 2);
        let s = simple(&a, 0);
        let (t, dropped) = tau(&s).unwrap();
        assert!(!dropped);
        assert!(is_isomorphic(&t, &s).is_some());
        let (ti, _) = tau_inverse(&s).unwrap();
        assert!(is_isomorphic(&ti, &s).is_some());
    }

    #[test]
    fn tau_of_projective_is_zero() {
        let a = main_example_algebra(Rationals);
        let p = projective(&a, 0);
        let (t, dropped) = tau(&p).unwrap();
        assert!(dropped);
        assert!(t.is_zero());
    }

    #[test]
    fn canonical_tau_of_corad_is_rad() {
        // over a self-injective algebra, tau(P/soc P) = rad P
        let a = main_example_algebra(Rationals);
        for i in 0..3 {
            let p = projective(&a, i);
            let socle_rows = p.socle_submodule().1.mat.rows_vec();
            let (corad, _) = p.quotient_module(&socle_rows).unwrap();
            let (rad, _) = p.radical_submodule();
            let (t, dropped) = tau(&corad).unwrap();
            assert!(!dropped, "vertex {i}");
            assert!(is_isomorphic(&t, &rad).is_some(), "vertex {i}");
            // and the inverse direction
            let (ti, _) = tau_inverse(&rad).unwrap();
            assert!(is_isomorphic(&ti, &corad).is_some(), "vertex {i}");
        }
    }

    #[test]
    fn tau_of_s3_is_p3_mod_socle() {
        let a = main_example_algebra(Rationals);
        let s3 = simple(&a, 2);
        let p3 = projective(&a, 2);
        let (corad3, _) = p3.quotient_module(&p3.socle_submodule().1.mat.rows_vec()).unwrap();
        let (t, _) = tau(&s3).unwrap();
        assert!(is_isomorphic(&t, &corad3).is_some());
        // tau^3 is the identity on the orbit of S3
        let (t2, _) = tau(&t).unwrap();
        let (t3, _) = tau(&t2).unwrap();
        assert!(is_isomorphic(&t3, &s3).is_some());
    }

    #[test]
    fn ext_over_dual_numbers() {
        let a = truncated_polynomial_algebra(Rationals, 2);
        let s = simple(&a, 0);
        // minimal presentation P -> P -> S gives Ext^1(S,S) = 1
        assert_eq!(ext1_dim(&s, &s), 1);
        let p = regular_module(&a);
        assert_eq!(ext1_dim(&p, &s), 0);
    }

    #[test]
    fn stable_homs_vanish_for_projectives() {
        let a = main_example_algebra(Rationals);
        let p = projective(&a, 0);
        let s = simple(&a, 0);
        assert_eq!(stable_hom_dim_mod_proj(&p, &s), 0);
        assert!(hom_basis(&p, &s).len() > 0);
    }

    #[test]
    fn pd_checks() {
        let a = truncated_polynomial_algebra(Rationals, 2);
        assert!(!pd_le_1(&simple(&a, 0)));
        assert!(pd_le_1(&regular_module(&a)));
        let h = linear_quiver_algebra(Rationals, 3);
        for i in 0..3 {
            assert!(pd_le_1(&simple(&h, i)), "vertex {i}");
        }
        assert!(is_hereditary_algebra(&h));
        assert!(!is_hereditary_algebra(&a));
    }

    #[test]
    fn regular_module_is_tilting_over_hereditary() {
        let h = linear_quiver_algebra(Rationals, 3);
        let reg = regular_module(&h);
        let rep = is_tilting(&h, &reg).unwrap();
        assert!(rep.is_tilting(), "{rep:?}");
    }

    #[test]
    fn simple_not_tilting_over_dual_numbers() {
        let a = truncated_polynomial_algebra(Rationals, 2);
        let rep = is_tilting(&a, &simple(&a, 0)).unwrap();
        assert!(!rep.pd_at_most_one);
        assert!(!rep.is_tilting());
    }

    #[test]
    fn ar_formula_on_main_example_sample() {
        let a = main_example_algebra(Rationals);
        let s3 = simple(&a, 2);
        let s1 = simple(&a, 0);
        let (t3, _) = tau(&s3).unwrap();
        assert_eq!(ext1_dim(&s3, &s1), stable_hom_dim_mod_inj(&s1, &t3));
        let (ti1, _) = tau_inverse(&s1).unwrap();
        assert_eq!(ext1_dim(&s3, &s1), stable_hom_dim_mod_proj(&ti1, &s3));
    }
}
