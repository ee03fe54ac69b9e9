//! Finite-dimensional right modules as representations: a vector space
//! graded by the vertices with one action matrix per algebra basis element.
//!
//! Modules are canonicalized so the basis is grouped by vertex (the block of
//! `M e_i` comes `i`-th); this makes intertwiner systems block-structured
//! and keeps fingerprints comparable. Row vectors act on the left:
//! `m * act(a)` is the action of `a`.

use crate::algebra::{Algebra, Ideal, NakayamaPermutation};
use crate::error::{ArcatError, Result};
use crate::field::Field;
use crate::matrix::{unit_vec, vec_is_zero, Mat, Subspace};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::Arc;

pub struct ModuleRepr<F: Field> {
    algebra: Algebra<F>,
    dims: Vec<usize>,
    total: usize,
    /// block start offsets per vertex, last entry = total
    offsets: Vec<usize>,
    act: Vec<Mat<F>>,
}

#[derive(Clone)]
pub struct Module<F: Field>(Arc<ModuleRepr<F>>);

impl<F: Field> fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dims {:?})", self.dims())
    }
}

impl<F: Field> Module<F> {
    /// Build a module from raw action matrices (one per algebra basis
    /// element); the basis is re-ordered by vertex and the action table is
    /// verified to be a unital algebra representation.
    pub fn new(algebra: Algebra<F>, act: Vec<Mat<F>>) -> Result<Self> {
        Ok(Self::new_with_transform(algebra, act)?.0)
    }

    /// As [`Module::new`], also returning the change of basis `T`: rows of
    /// `T` are the canonical basis vectors in the raw coordinates, so a raw
    /// row vector `v` has canonical coordinates `v * T^-1`.
    pub fn new_with_transform(algebra: Algebra<F>, act: Vec<Mat<F>>) -> Result<(Self, Mat<F>)> {
        let f = algebra.field().clone();
        let n = algebra.dim();
        if act.len() != n {
            return Err(ArcatError::DimensionMismatch("one action matrix per basis".into()));
        }
        let total = act.first().map_or(0, |m| m.rows);
        if act.iter().any(|m| m.rows != total || m.cols != total) {
            return Err(ArcatError::DimensionMismatch("square action matrices".into()));
        }
        let act_elem = |x: &[F::Elem]| -> Mat<F> {
            let mut out = Mat::zero(f.clone(), total, total);
            for (k, c) in x.iter().enumerate() {
                if !f.is_zero(c) {
                    out = out.add(&act[k].scale(c));
                }
            }
            out
        };
        // identity acts as identity
        if act_elem(algebra.one()) != Mat::identity(f.clone(), total) {
            return Err(ArcatError::Internal("identity does not act as identity".into()));
        }
        // multiplicativity (full table for small sizes, generators otherwise)
        if n <= 24 && total <= 24 {
            for i in 0..n {
                for j in 0..n {
                    let lhs = act[i].mul(&act[j]);
                    let rhs = act_elem(algebra.mul_basis(i, j));
                    if lhs != rhs {
                        return Err(ArcatError::Internal(format!(
                            "action not multiplicative on pair ({i},{j})"
                        )));
                    }
                }
            }
        } else {
            for g in algebra.hom_gens() {
                for h in algebra.hom_gens() {
                    let lhs = act_elem(&g.elem).mul(&act_elem(&h.elem));
                    let rhs = act_elem(&algebra.mul_elems(&g.elem, &h.elem));
                    if lhs != rhs {
                        return Err(ArcatError::Internal("action not multiplicative".into()));
                    }
                }
            }
        }

        // canonicalize: reorder the basis by vertex blocks
        let nv = algebra.num_vertices();
        let mut rows: Vec<Vec<F::Elem>> = Vec::with_capacity(total);
        let mut dims = Vec::with_capacity(nv);
        for i in 0..nv {
            let proj = act_elem(algebra.idempotent(i));
            let image = Subspace::from_rows(f.clone(), total, &proj.rows_vec());
            dims.push(image.dim());
            rows.extend(image.basis_rows());
        }
        if rows.len() != total {
            return Err(ArcatError::Internal(
                "vertex blocks do not decompose the module".into(),
            ));
        }
        let t = Mat::from_rows(f.clone(), rows);
        let t_inv = t.inverse().ok_or_else(|| {
            ArcatError::Internal("vertex block change of basis is singular".into())
        })?;
        let act_canon: Vec<Mat<F>> = act.iter().map(|m| t.mul(m).mul(&t_inv)).collect();
        let mut offsets = vec![0usize; nv + 1];
        for i in 0..nv {
            offsets[i + 1] = offsets[i] + dims[i];
        }
        Ok((Module(Arc::new(ModuleRepr { algebra, dims, total, offsets, act: act_canon })), t))
    }

    pub fn zero(algebra: Algebra<F>) -> Self {
        let f = algebra.field().clone();
        let n = algebra.dim();
        let nv = algebra.num_vertices();
        Module(Arc::new(ModuleRepr {
            algebra,
            dims: vec![0; nv],
            total: 0,
            offsets: vec![0; nv + 1],
            act: (0..n).map(|_| Mat::zero(f.clone(), 0, 0)).collect(),
        }))
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.0.algebra
    }

    pub fn field(&self) -> &F {
        self.0.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn total_dim(&self) -> usize {
        self.0.total
    }

    pub fn is_zero(&self) -> bool {
        self.0.total == 0
    }

    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        self.0.offsets[i]..self.0.offsets[i + 1]
    }

    pub fn act(&self, basis_index: usize) -> &Mat<F> {
        &self.0.act[basis_index]
    }

    pub fn act_elem(&self, x: &[F::Elem]) -> Mat<F> {
        let f = self.field().clone();
        let mut out = Mat::zero(f.clone(), self.0.total, self.0.total);
        for (k, c) in x.iter().enumerate() {
            if !f.is_zero(c) {
                out = out.add(&self.0.act[k].scale(c));
            }
        }
        out
    }

    pub fn apply(&self, v: &[F::Elem], x: &[F::Elem]) -> Vec<F::Elem> {
        self.act_elem(x).apply_row(v)
    }

    // ------------------------------------------------------------------
    // submodules, quotients, sums, duals
    // ------------------------------------------------------------------

    /// The submodule spanned by the rows (must be action-stable), with its
    /// inclusion morphism.
    pub fn submodule(&self, rows: &[Vec<F::Elem>]) -> Result<(Module<F>, Morphism<F>)> {
        let f = self.field().clone();
        let space = Subspace::from_rows(f.clone(), self.0.total, rows);
        let basis = space.basis_rows();
        let d = basis.len();
        let mut acts = Vec::with_capacity(self.0.act.len());
        for m in &self.0.act {
            let mut sub = Mat::zero(f.clone(), d, d);
            for (r, b) in basis.iter().enumerate() {
                let img = m.apply_row(b);
                let coords = space.coords_of(&img).ok_or_else(|| {
                    ArcatError::Precondition("subspace is not action-stable".into())
                })?;
                for (c, v) in coords.into_iter().enumerate() {
                    sub.set(r, c, v);
                }
            }
            acts.push(sub);
        }
        let (module, t) = Module::new_with_transform(self.0.algebra.clone(), acts)?;
        // canonical basis of the submodule, in ambient coordinates
        let include = if d == 0 {
            Mat::zero(f, 0, self.0.total)
        } else {
            t.mul(&Mat::from_rows(f, basis))
        };
        Ok((module.clone(), Morphism { source: module, target: self.clone(), mat: include }))
    }

    /// Quotient by an action-stable subspace, with the projection morphism.
    pub fn quotient_module(&self, sub_rows: &[Vec<F::Elem>]) -> Result<(Module<F>, Morphism<F>)> {
        let f = self.field().clone();
        let space = Subspace::from_rows(f.clone(), self.0.total, sub_rows);
        for b in space.basis_rows() {
            for m in &self.0.act {
                if !space.contains(&m.apply_row(&b)) {
                    return Err(ArcatError::Precondition("subspace is not action-stable".into()));
                }
            }
        }
        let keep = space.complement_coords();
        let qd = keep.len();
        let project = |v: &[F::Elem]| -> Vec<F::Elem> {
            let r = space.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let mut acts = Vec::with_capacity(self.0.act.len());
        for m in &self.0.act {
            let mut q = Mat::zero(f.clone(), qd, qd);
            for (r, &c) in keep.iter().enumerate() {
                let img = project(&m.apply_row(&unit_vec(&f, self.0.total, c)));
                for (cc, v) in img.into_iter().enumerate() {
                    q.set(r, cc, v);
                }
            }
            acts.push(q);
        }
        let (module, t) = Module::new_with_transform(self.0.algebra.clone(), acts)?;
        let t_inv = t.inverse().expect("block transform is invertible");
        let raw_proj = Mat::from_rows(
            f,
            (0..self.0.total).map(|i| project(&unit_vec(self.field(), self.0.total, i))).collect(),
        );
        let proj = raw_proj.mul(&t_inv);
        Ok((module.clone(), Morphism { source: self.clone(), target: module, mat: proj }))
    }

    pub fn direct_sum(algebra: &Algebra<F>, parts: &[Module<F>]) -> Module<F> {
        let f = algebra.field().clone();
        let n = algebra.dim();
        let total: usize = parts.iter().map(|p| p.total_dim()).sum();
        let mut acts = Vec::with_capacity(n);
        for k in 0..n {
            let mut m = Mat::zero(f.clone(), total, total);
            let mut off = 0;
            for p in parts {
                let pm = p.act(k);
                for r in 0..p.total_dim() {
                    for c in 0..p.total_dim() {
                        m.set(off + r, off + c, pm.at(r, c).clone());
                    }
                }
                off += p.total_dim();
            }
            acts.push(m);
        }
        Module::new(algebra.clone(), acts).expect("direct sum of valid modules")
    }

    /// The K-dual as a right module over the opposite algebra.
    pub fn dual(&self) -> Module<F> {
        let op = self.0.algebra.opposite();
        let acts: Vec<Mat<F>> = self.0.act.iter().map(|m| m.transpose()).collect();
        Module::new(op, acts).expect("dual of a valid module")
    }

    // ------------------------------------------------------------------
    // radical series, socle, top
    // ------------------------------------------------------------------

    pub fn radical_rows(&self) -> Vec<Vec<F::Elem>> {
        let mut rows = Vec::new();
        for r in self.0.algebra.radical().basis_rows() {
            let m = self.act_elem(&r);
            rows.extend(m.rows_vec());
        }
        rows
    }

    pub fn radical_submodule(&self) -> (Module<F>, Morphism<F>) {
        self.submodule(&self.radical_rows()).expect("radical is action-stable")
    }

    pub fn socle_rows(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field().clone();
        let rad = self.0.algebra.radical().basis_rows();
        if rad.is_empty() {
            return Mat::identity(f, self.0.total).rows_vec();
        }
        let mut stacked: Option<Mat<F>> = None;
        for r in &rad {
            let m = self.act_elem(r);
            stacked = Some(match stacked {
                None => m,
                Some(s) => s.hstack(&m),
            });
        }
        stacked.unwrap().kernel_basis()
    }

    pub fn socle_submodule(&self) -> (Module<F>, Morphism<F>) {
        self.submodule(&self.socle_rows()).expect("socle is action-stable")
    }

    pub fn top(&self) -> (Module<F>, Morphism<F>) {
        self.quotient_module(&self.radical_rows()).expect("radical is action-stable")
    }

    /// Loewy series profile: dimension vectors of the radical powers.
    pub fn loewy_profile(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = self.clone();
        while !current.is_zero() {
            let (r, _) = current.radical_submodule();
            out.push(current.dims().to_vec());
            if r.total_dim() == current.total_dim() {
                break; // cannot happen for nilpotent radicals
            }
            current = r;
        }
        out
    }

    /// Submodule generated by the given vectors: closure under the action.
    pub fn submodule_generated(&self, vectors: &[Vec<F::Elem>]) -> (Module<F>, Morphism<F>) {
        let f = self.field().clone();
        let mut space = Subspace::from_rows(f.clone(), self.0.total, vectors);
        loop {
            let before = space.dim();
            let mut rows = space.basis_rows();
            for v in space.basis_rows() {
                for m in &self.0.act {
                    rows.push(m.apply_row(&v));
                }
            }
            space = Subspace::from_rows(f.clone(), self.0.total, &rows);
            if space.dim() == before {
                break;
            }
        }
        self.submodule(&space.basis_rows()).expect("closure is action-stable")
    }

    /// Right annihilator of the module in its algebra; always a two-sided
    /// ideal.
    pub fn annihilator_ideal(&self) -> Ideal<F> {
        let f = self.field().clone();
        let a = &self.0.algebra;
        let n = a.dim();
        let d = self.0.total;
        if d == 0 {
            return Ideal::new(
                a.clone(),
                Subspace::full(f, n),
            )
            .expect("whole algebra is an ideal");
        }
        // a acts by zero iff all entries of act_elem(a) vanish; linear in a
        let flat = Mat::from_fn(f.clone(), n, d * d, |k, rc| {
            self.0.act[k].at(rc / d, rc % d).clone()
        });
        let rows = flat.kernel_basis();
        let space = Subspace::from_rows(f, n, &rows);
        Ideal::new(a.clone(), space).expect("module annihilators are two-sided ideals")
    }

    /// Restrict to a quotient algebra along its projection: the module must
    /// be annihilated by the ideal.
    pub fn restrict_to_quotient(
        &self,
        quotient: &Algebra<F>,
        section: &Mat<F>,
    ) -> Result<Module<F>> {
        let acts: Vec<Mat<F>> = (0..quotient.dim())
            .map(|k| {
                let rep = section.apply_row(&unit_vec(quotient.field(), quotient.dim(), k));
                self.act_elem(&rep)
            })
            .collect();
        Module::new(quotient.clone(), acts)
    }

    /// Fingerprint for registry lookups: dimension data cheap to compare.
    pub fn fingerprint(&self) -> Vec<usize> {
        let mut fp = self.dims().to_vec();
        fp.push(usize::MAX); // separator
        let (soc, _) = self.socle_submodule();
        fp.extend(soc.dims().iter().copied());
        fp.push(usize::MAX);
        let (tp, _) = self.top();
        fp.extend(tp.dims().iter().copied());
        fp.push(usize::MAX);
        for layer in self.loewy_profile() {
            fp.extend(layer);
            fp.push(usize::MAX - 1);
        }
        fp
    }
}

// ----------------------------------------------------------------------
// morphisms
// ----------------------------------------------------------------------

#[derive(Clone)]
pub struct Morphism<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    /// source-total x target-total, acting on row vectors
    pub mat: Mat<F>,
}

impl<F: Field> fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism({:?} -> {:?}, rank {})",
            self.source.dims(),
            self.target.dims(),
            self.mat.rank()
        )
    }
}

impl<F: Field> Morphism<F> {
    pub fn identity(m: &Module<F>) -> Self {
        Morphism {
            source: m.clone(),
            target: m.clone(),
            mat: Mat::identity(m.field().clone(), m.total_dim()),
        }
    }

    /// `self` then `next`.
    pub fn then(&self, next: &Morphism<F>) -> Morphism<F> {
        assert_eq!(self.target.total_dim(), next.source.total_dim());
        Morphism {
            source: self.source.clone(),
            target: next.target.clone(),
            mat: self.mat.mul(&next.mat),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.source.total_dim() == self.target.total_dim() && self.mat.is_invertible()
    }

    pub fn verify(&self) -> bool {
        let a = self.source.algebra();
        a.hom_gens().iter().all(|g| {
            let lhs = self.source.act_elem(&g.elem).mul(&self.mat);
            let rhs = self.mat.mul(&self.target.act_elem(&g.elem));
            lhs == rhs
        })
    }
}

// ----------------------------------------------------------------------
// standard modules
// ----------------------------------------------------------------------

/// The algebra as a right module over itself. Note the module has its own
/// canonical basis; use [`Algebra::regular_with_transform`] to convert
/// between algebra and module coordinates.
pub fn regular_module<F: Field>(a: &Algebra<F>) -> Module<F> {
    a.regular_with_transform().0.clone()
}

/// The indecomposable projective `e_i A` together with its embedding into
/// the algebra: row `r` of the matrix is the algebra element represented by
/// the `r`-th basis vector.
pub fn projective_embedded<F: Field>(a: &Algebra<F>, i: usize) -> (Module<F>, Mat<F>) {
    let f = a.field().clone();
    let n = a.dim();
    let (reg, t, t_inv) = a.regular_with_transform();
    // rows of e_i A in algebra coordinates, converted to module coordinates
    let rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|k| {
            let alg = a.mul_elems(a.idempotent(i), &unit_vec(&f, n, k));
            t_inv.apply_row(&alg)
        })
        .collect();
    let (module, include) = reg.submodule(&rows).expect("right ideal is stable");
    // embedding back into algebra coordinates
    (module, include.mat.mul(t))
}

/// The indecomposable projective `e_i A`.
pub fn projective<F: Field>(a: &Algebra<F>, i: usize) -> Module<F> {
    a.projectives_embedded()[i].0.clone()
}

/// The simple top of `e_i A`.
pub fn simple<F: Field>(a: &Algebra<F>, i: usize) -> Module<F> {
    projective(a, i).top().0
}

/// The indecomposable injective `D(A e_i)`.
pub fn injective<F: Field>(a: &Algebra<F>, i: usize) -> Module<F> {
    // A e_i = e_i (A^op) as a right module over the opposite; its dual is a
    // right module over A
    let op = a.opposite();
    let i_op = projective(&op, i);
    i_op.dual()
}

pub(crate) fn nakayama_permutation_impl<F: Field>(a: &Algebra<F>) -> Option<NakayamaPermutation> {
    let nv = a.num_vertices();
    let simple_dims: Vec<Vec<usize>> = (0..nv).map(|i| simple(a, i).dims().to_vec()).collect();
    let mut perm = vec![usize::MAX; nv];
    let mut hit = vec![false; nv];
    for i in 0..nv {
        let p = projective(a, i);
        let (soc, _) = p.socle_submodule();
        // simple socle: concentrated at one vertex with the dimension of the
        // simple there
        let support: Vec<usize> =
            (0..nv).filter(|&j| soc.dims()[j] > 0).collect();
        if support.len() != 1 {
            return None;
        }
        let j = support[0];
        if soc.dims() != simple_dims[j].as_slice() {
            return None;
        }
        if hit[j] {
            return None;
        }
        hit[j] = true;
        perm[i] = j;
    }
    Some(perm)
}

// ----------------------------------------------------------------------
// hom spaces
// ----------------------------------------------------------------------

/// Basis of the space of module homomorphisms, solved as one block
/// intertwiner system over the algebra's generators.
pub fn hom_basis<F: Field>(x: &Module<F>, y: &Module<F>) -> Vec<Morphism<F>> {
    assert!(x.algebra().same(y.algebra()), "hom between modules over different algebras");
    let a = x.algebra();
    let f = a.field().clone();
    let nv = a.num_vertices();
    if x.total_dim() == 0 || y.total_dim() == 0 {
        return vec![];
    }
    // unknowns: block maps F_i : x-block-i -> y-block-i
    let mut block_offset = vec![0usize; nv + 1];
    for i in 0..nv {
        block_offset[i + 1] = block_offset[i] + x.dims()[i] * y.dims()[i];
    }
    let unknowns = block_offset[nv];
    if unknowns == 0 {
        return vec![];
    }
    let gens = a.hom_gens();
    let mut eq_rows: Vec<Vec<F::Elem>> = Vec::new();
    for g in &gens {
        let (s, t) = (g.src, g.tgt);
        if x.dims()[s] == 0 && y.dims()[s] == 0 {
            continue;
        }
        let xg = x.act_elem(&g.elem);
        let yg = y.act_elem(&g.elem);
        let xr = x.block_range(s);
        let xc = x.block_range(t);
        let yr = y.block_range(s);
        let yc = y.block_range(t);
        // equation: Xg_st * F_t - F_s * Yg_st = 0, entries (r in x_s, c in y_t)
        for r in 0..x.dims()[s] {
            for c in 0..y.dims()[t] {
                let mut row = vec![f.zero(); unknowns];
                // sum_k Xg[xr.start+r][xc.start+k] * F_t[k][c]
                for k in 0..x.dims()[t] {
                    let coef = xg.at(xr.start + r, xc.start + k).clone();
                    if !f.is_zero(&coef) {
                        let idx = block_offset[t] + k * y.dims()[t] + c;
                        row[idx] = f.add(&row[idx], &coef);
                    }
                }
                // minus sum_k F_s[r][k] * Yg[yr.start+k][yc.start+c]
                for k in 0..y.dims()[s] {
                    let coef = yg.at(yr.start + k, yc.start + c).clone();
                    if !f.is_zero(&coef) {
                        let idx = block_offset[s] + r * y.dims()[s] + k;
                        row[idx] = f.sub(&row[idx], &coef);
                    }
                }
                if !vec_is_zero(&f, &row) {
                    eq_rows.push(row);
                }
            }
        }
    }
    let solutions = if eq_rows.is_empty() {
        Mat::identity(f.clone(), unknowns).rows_vec()
    } else {
        Mat::from_rows(f.clone(), eq_rows).right_kernel_basis()
    };
    solutions
        .into_iter()
        .map(|sol| {
            let mut mat = Mat::zero(f.clone(), x.total_dim(), y.total_dim());
            for i in 0..nv {
                let xr = x.block_range(i);
                let yr = y.block_range(i);
                for r in 0..x.dims()[i] {
                    for c in 0..y.dims()[i] {
                        let v = sol[block_offset[i] + r * y.dims()[i] + c].clone();
                        mat.set(xr.start + r, yr.start + c, v);
                    }
                }
            }
            Morphism { source: x.clone(), target: y.clone(), mat }
        })
        .collect()
}

pub fn hom_dim<F: Field>(x: &Module<F>, y: &Module<F>) -> usize {
    hom_basis(x, y).len()
}

/// Conventions: the product `f * g` in an endomorphism algebra is the
/// composite "apply g, then f", so `End(A_A)` is `A` itself acting by left
/// multiplication.
pub struct EndAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    pub basis: Vec<Morphism<F>>,
    /// indecomposable summand attached to each distinguished idempotent
    pub summands: Vec<Module<F>>,
}

/// Internal: hom basis of End(x) with its multiplication table, no
/// idempotent decomposition (the identity is the single distinguished
/// idempotent). Used for radical computations and splitting.
fn raw_end_algebra<F: Field>(x: &Module<F>) -> Result<(Algebra<F>, Vec<Morphism<F>>, Subspace<F>)> {
    let f = x.field().clone();
    let homs = hom_basis(x, x);
    let d = homs.len();
    let total = x.total_dim();
    let flat_rows: Vec<Vec<F::Elem>> = homs
        .iter()
        .map(|h| {
            (0..total * total)
                .map(|rc| h.mat.at(rc / total, rc % total).clone())
                .collect()
        })
        .collect();
    let flat = Subspace::from_rows(f.clone(), total * total, &flat_rows);
    // hom matrices are linearly independent solutions, so coords are exact
    let coords = |m: &Mat<F>| -> Vec<F::Elem> {
        let v: Vec<F::Elem> =
            (0..total * total).map(|rc| m.at(rc / total, rc % total).clone()).collect();
        flat.coords_of(&v).expect("product of endomorphisms is an endomorphism")
    };
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            // f_i * f_j = "apply f_j then f_i"
            mult[i][j] = coords(&homs[j].mat.mul(&homs[i].mat));
        }
    }
    let one = coords(&Mat::identity(f.clone(), total));
    let labels = (0..d).map(|i| format!("f{i}")).collect();
    let alg = Algebra::new(crate::algebra::AlgebraData {
        field: f,
        labels,
        mult,
        one: one.clone(),
        idempotents: vec![one],
        vertex_names: vec!["*".into()],
        quiver: None,
    })?;
    Ok((alg, homs, flat))
}

// ----------------------------------------------------------------------
// decomposition into indecomposables
// ----------------------------------------------------------------------

pub struct DecompPiece<F: Field> {
    pub module: Module<F>,
    /// piece -> whole
    pub include: Morphism<F>,
    /// whole -> piece
    pub project: Morphism<F>,
}

/// Split into indecomposable direct summands (one entry per copy).
///
/// Strategy: compute `S = End(x)/rad`; try elements of `S` (basis, then
/// seeded random combinations) and factor their minimal polynomials. Two or
/// more coprime factors give orthogonal spectral idempotents; a proper
/// power `f^m` gives a nonzero nilpotent whose left ideal yields an
/// idempotent; an irreducible minimal polynomial of degree `dim S`
/// certifies that `S` is a field, hence `x` indecomposable.
pub fn decompose<F: Field>(x: &Module<F>) -> Result<Vec<DecompPiece<F>>> {
    if x.is_zero() {
        return Ok(vec![]);
    }
    let f = x.field().clone();
    let (end, homs, _flat) = raw_end_algebra(x)?;
    let rad = end.radical_general();
    let sdim = end.dim() - rad.dim();
    if sdim == 1 {
        return Ok(vec![DecompPiece {
            module: x.clone(),
            include: Morphism::identity(x),
            project: Morphism::identity(x),
        }]);
    }

    let rad_ideal = Ideal::new(end.clone(), rad.clone())
        .map_err(|_| ArcatError::Internal("radical is not an ideal".into()))?;
    let (s_alg, s_map) = end.quotient(&rad_ideal)?;

    // candidate elements of S
    let mut rng = ChaCha8Rng::seed_from_u64(0x51ce_a7e5);
    let mut candidates: Vec<Vec<F::Elem>> = Vec::new();
    for i in 0..s_alg.dim() {
        candidates.push(unit_vec(&f, s_alg.dim(), i));
    }
    for i in 0..s_alg.dim() {
        for j in i + 1..s_alg.dim() {
            let mut v = unit_vec(&f, s_alg.dim(), i);
            v[j] = f.one();
            candidates.push(v);
        }
    }
    for _ in 0..60 {
        let v: Vec<F::Elem> =
            (0..s_alg.dim()).map(|_| f.from_i64(rng.gen_range(-20..21))).collect();
        if !vec_is_zero(&f, &v) {
            candidates.push(v);
        }
    }

    for s in candidates {
        let ls = s_alg.rmul_matrix(&s);
        let mu = ls.minimal_polynomial();
        let factors = crate::poly::factor(&mu);
        let split_idem: Option<Vec<F::Elem>> = if factors.len() >= 2 {
            // spectral idempotent in K[s] for the first factor
            let (fac, m) = &factors[0];
            let fpow = fac.pow(*m as u64);
            let g = mu.div_exact(&fpow);
            let (_, u, _) = crate::poly::Poly::extended_gcd(&g, &fpow);
            let proj_poly = u.mul(&g).rem(&mu);
            let eps_mat = ls.eval_poly(&proj_poly);
            // eps = 1 * eps_mat expressed as an element of S
            let eps = eps_mat.apply_row(&s_alg.one().to_vec());
            Some(eps)
        } else if factors.len() == 1 && factors[0].1 >= 2 {
            // nonzero nilpotent z = f(s); the left ideal S z is a proper
            // direct summand, its right identity is an idempotent
            let z_mat = ls.eval_poly(&factors[0].0);
            let z = z_mat.apply_row(&s_alg.one().to_vec());
            if vec_is_zero(&f, &z) {
                None
            } else {
                idempotent_from_left_ideal(&s_alg, &z)
            }
        } else if factors.len() == 1
            && factors[0].1 == 1
            && factors[0].0.deg_or_zero() == s_alg.dim()
        {
            // S = K[s] is a field: End(x) local, x indecomposable
            return Ok(vec![DecompPiece {
                module: x.clone(),
                include: Morphism::identity(x),
                project: Morphism::identity(x),
            }]);
        } else {
            None
        };

        let Some(eps_s) = split_idem else { continue };
        if vec_is_zero(&f, &eps_s) || eps_s == s_alg.one().to_vec() {
            continue;
        }
        // lift through the radical: e <- 3e^2 - 2e^3 until exact
        let mut e = s_map.lift(&eps_s);
        let mut steps = 0;
        loop {
            let e2 = end.mul_elems(&e, &e);
            if e2 == e {
                break;
            }
            let three_e2 = e2.iter().map(|c| f.mul(c, &f.from_i64(3))).collect::<Vec<_>>();
            let e3 = end.mul_elems(&e2, &e);
            let two_e3 = e3.iter().map(|c| f.mul(c, &f.from_i64(2))).collect::<Vec<_>>();
            e = three_e2.iter().zip(&two_e3).map(|(a, b)| f.sub(a, b)).collect();
            steps += 1;
            if steps > 64 {
                return Err(ArcatError::Internal("idempotent lifting did not converge".into()));
            }
        }
        // realize as an endomorphism matrix
        let total = x.total_dim();
        let mut emat = Mat::zero(f.clone(), total, total);
        for (k, c) in e.iter().enumerate() {
            if !f.is_zero(c) {
                emat = emat.add(&homs[k].mat.scale(c));
            }
        }
        if emat.is_zero() || emat == Mat::identity(f.clone(), total) {
            continue;
        }
        let complement = Mat::identity(f.clone(), total).sub(&emat);
        let mut pieces = Vec::new();
        for part in [emat, complement] {
            let rows: Vec<Vec<F::Elem>> = part.rows_vec();
            let (sub, include) = x.submodule(&rows).expect("image of idempotent is stable");
            // projection: x -> sub via the idempotent then coordinates
            let proj_mat = project_onto_submodule(x, &sub, &include, &part);
            let inner = decompose(&sub)?;
            for p in inner {
                pieces.push(DecompPiece {
                    module: p.module,
                    include: p.include.then(&include),
                    project: Morphism {
                        source: x.clone(),
                        target: p.project.target.clone(),
                        mat: proj_mat.mul(&p.project.mat),
                    },
                });
            }
        }
        return Ok(pieces);
    }
    Err(ArcatError::SplittingFailure)
}

/// Right identity of the left ideal S*z in a semisimple algebra: solve
/// `l * e = l` for all generators `l` with `e` constrained to the ideal.
fn idempotent_from_left_ideal<F: Field>(
    s_alg: &Algebra<F>,
    z: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let f = s_alg.field().clone();
    let n = s_alg.dim();
    let gens: Vec<Vec<F::Elem>> =
        (0..n).map(|i| s_alg.mul_elems(&unit_vec(&f, n, i), z)).collect();
    let ideal_space = Subspace::from_rows(f.clone(), n, &gens);
    if ideal_space.dim() == 0 || ideal_space.dim() == n {
        return None;
    }
    let basis = ideal_space.basis_rows();
    // unknown e = sum c_k basis_k; conditions: basis_l * e = basis_l
    let d = basis.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for l in &basis {
        // row block: for each coordinate t of the algebra
        for t in 0..n {
            let mut row = Vec::with_capacity(d);
            for bk in &basis {
                let prod = s_alg.mul_elems(l, bk);
                row.push(prod[t].clone());
            }
            rows.push(row);
            rhs.push(l[t].clone());
        }
    }
    let m = Mat::from_rows(f.clone(), rows);
    let sol = m.solve_right(&rhs)?;
    let mut e = vec![f.zero(); n];
    for (k, c) in sol.iter().enumerate() {
        for (t, b) in basis[k].iter().enumerate() {
            e[t] = f.add_mul(&e[t], c, b);
        }
    }
    Some(e)
}

fn project_onto_submodule<F: Field>(
    x: &Module<F>,
    sub: &Module<F>,
    include: &Morphism<F>,
    idem: &Mat<F>,
) -> Mat<F> {
    // solve P * include = idem  (rows of idem lie in the submodule)
    let f = x.field().clone();
    let rows: Vec<Vec<F::Elem>> = (0..x.total_dim())
        .map(|r| {
            include
                .mat
                .solve_left(idem.row(r))
                .expect("idempotent image lies in the submodule")
        })
        .collect();
    let _ = sub;
    Mat::from_rows(f, rows)
}

/// Indecomposable summands grouped with multiplicities.
pub fn decompose_with_multiplicities<F: Field>(
    x: &Module<F>,
) -> Result<Vec<(Module<F>, usize)>> {
    let pieces = decompose(x)?;
    let mut grouped: Vec<(Module<F>, usize)> = Vec::new();
    for p in pieces {
        if let Some(slot) = grouped
            .iter_mut()
            .find(|(m, _)| is_isomorphic(m, &p.module).is_some())
        {
            slot.1 += 1;
        } else {
            grouped.push((p.module, 1));
        }
    }
    Ok(grouped)
}

// ----------------------------------------------------------------------
// isomorphism testing
// ----------------------------------------------------------------------

/// Search for an invertible homomorphism. Soundness is exact (the returned
/// witness is verified); completeness relies on sampling outside the proper
/// subspace of non-invertible maps, exhaustively over small prime fields
/// and with a large deterministic pool over Q, so a false negative is
/// vanishingly improbable and would surface later as a mesh inconsistency.
pub fn is_isomorphic<F: Field>(x: &Module<F>, y: &Module<F>) -> Option<Morphism<F>> {
    if x.dims() != y.dims() {
        return None;
    }
    if x.total_dim() == 0 {
        return Some(Morphism {
            source: x.clone(),
            target: y.clone(),
            mat: Mat::zero(x.field().clone(), 0, 0),
        });
    }
    let homs = hom_basis(x, y);
    if homs.is_empty() {
        return None;
    }
    let f = x.field().clone();
    // single basis elements and pair sums first
    for h in &homs {
        if h.is_iso() {
            return Some(h.clone());
        }
    }
    for i in 0..homs.len() {
        for j in i + 1..homs.len() {
            let m = homs[i].mat.add(&homs[j].mat);
            if m.is_invertible() {
                return Some(Morphism { source: x.clone(), target: y.clone(), mat: m });
            }
            let m = homs[i].mat.sub(&homs[j].mat);
            if m.is_invertible() {
                return Some(Morphism { source: x.clone(), target: y.clone(), mat: m });
            }
        }
    }
    let d = homs.len();
    match f.characteristic() {
        p if p > 0 && (p as f64).powi(d as i32) <= 65536.0 => {
            // exhaustive over all coefficient vectors
            let p = p;
            let mut counters = vec![0u64; d];
            loop {
                // increment base-p counter
                let mut k = 0;
                loop {
                    if k == d {
                        return None;
                    }
                    counters[k] += 1;
                    if counters[k] < p {
                        break;
                    }
                    counters[k] = 0;
                    k += 1;
                }
                let mut m = Mat::zero(f.clone(), x.total_dim(), y.total_dim());
                for (i, &c) in counters.iter().enumerate() {
                    if c != 0 {
                        m = m.add(&homs[i].mat.scale(&f.from_i64(c as i64)));
                    }
                }
                if m.is_invertible() {
                    return Some(Morphism { source: x.clone(), target: y.clone(), mat: m });
                }
            }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x15a_b01d);
            for _ in 0..120 {
                let mut m = Mat::zero(f.clone(), x.total_dim(), y.total_dim());
                for h in &homs {
                    let c = f.from_i64(rng.gen_range(-60..61));
                    if !f.is_zero(&c) {
                        m = m.add(&h.mat.scale(&c));
                    }
                }
                if m.is_invertible() {
                    return Some(Morphism { source: x.clone(), target: y.clone(), mat: m });
                }
            }
            None
        }
    }
}

/// End(x) with the decomposition-induced idempotents; `summands[k]` is the
/// indecomposable attached to the k-th distinguished idempotent.
pub fn end_algebra<F: Field>(x: &Module<F>) -> Result<EndAlgebra<F>> {
    let f = x.field().clone();
    let total = x.total_dim();
    let (raw, homs, flat) = raw_end_algebra(x)?;
    let pieces = decompose(x)?;
    let coords = |m: &Mat<F>| -> Vec<F::Elem> {
        let v: Vec<F::Elem> =
            (0..total * total).map(|rc| m.at(rc / total, rc % total).clone()).collect();
        flat.coords_of(&v).expect("endomorphism lies in the hom space")
    };
    let idempotents: Vec<Vec<F::Elem>> = pieces
        .iter()
        .map(|p| coords(&p.project.mat.mul(&p.include.mat)))
        .collect();
    let d = homs.len();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            mult[i][j] = coords(&homs[j].mat.mul(&homs[i].mat));
        }
    }
    let names: Vec<String> = (0..pieces.len()).map(|k| format!("s{k}")).collect();
    let algebra = Algebra::new(crate::algebra::AlgebraData {
        field: f.clone(),
        labels: raw.labels().to_vec(),
        mult,
        one: coords(&Mat::identity(f, total)),
        idempotents,
        vertex_names: names,
    quiver: None,
    })?;
    Ok(EndAlgebra { algebra, basis: homs, summands: pieces.into_iter().map(|p| p.module).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quiver::{linear_quiver_algebra, main_example_algebra, truncated_polynomial_algebra};

    #[test]
    fn projective_dimension_vectors_main_example() {
        let a = main_example_algebra(Rationals);
        assert_eq!(projective(&a, 0).dims(), &[1, 1, 1]);
        assert_eq!(projective(&a, 1).dims(), &[1, 1, 1]);
        assert_eq!(projective(&a, 2).dims(), &[1, 1, 2]);
    }

    #[test]
    fn simples_are_indicator_modules() {
        let a = main_example_algebra(Rationals);
        for i in 0..3 {
            let s = simple(&a, i);
            let mut expect = vec![0usize; 3];
            expect[i] = 1;
            assert_eq!(s.dims(), expect.as_slice());
        }
    }

    #[test]
    fn nakayama_permutation_of_main_example() {
        let a = main_example_algebra(Rationals);
        // socle path endpoints: alpha*gamma lands at 2, sigma*beta at 1,
        // beta*alpha at 3
        assert_eq!(a.nakayama_permutation(), Some(&vec![1usize, 0, 2]));
    }

    #[test]
    fn dual_numbers_self_injective_linear_not() {
        let k = truncated_polynomial_algebra(Rationals, 2);
        assert_eq!(k.nakayama_permutation(), Some(&vec![0usize]));
        let h = linear_quiver_algebra(Rationals, 2);
        assert_eq!(h.nakayama_permutation(), None);
    }

    #[test]
    fn hom_dims_match_corners() {
        // dim Hom(e_i A, e_j A) equals dim e_j A e_i
        let a = main_example_algebra(Rationals);
        let p: Vec<Module<Rationals>> = (0..3).map(|i| projective(&a, i)).collect();
        // e_3 A e_1 is spanned by beta: one map P1 -> P3
        assert_eq!(hom_dim(&p[0], &p[2]), 1);
        // e_1 A e_3 is spanned by alpha
        assert_eq!(hom_dim(&p[2], &p[0]), 1);
        // Hom(P_i, X) has dimension = dim X e_i
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(hom_dim(&p[i], &p[j]), p[j].dims()[i], "({i},{j})");
            }
        }
    }

    #[test]
    fn hom_between_disjoint_simples_vanishes() {
        let a = main_example_algebra(Rationals);
        assert_eq!(hom_dim(&simple(&a, 2), &simple(&a, 0)), 0);
        assert_eq!(hom_dim(&simple(&a, 0), &simple(&a, 0)), 1);
    }

    #[test]
    fn radical_and_socle_of_projectives() {
        let a = main_example_algebra(Rationals);
        let p1 = projective(&a, 0);
        let (r, _) = p1.radical_submodule();
        assert_eq!(r.dims(), &[0, 1, 1]);
        let p3 = projective(&a, 2);
        let (s, _) = p3.socle_submodule();
        // soc P3 = S3
        assert_eq!(s.dims(), &[0, 0, 1]);
        let (t, _) = p3.top();
        assert_eq!(t.dims(), &[0, 0, 1]);
    }

    #[test]
    fn regular_module_decomposes_into_projectives() {
        let a = main_example_algebra(Rationals);
        let reg = regular_module(&a);
        let parts = decompose_with_multiplicities(&reg).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|(_, m)| *m == 1));
        let mut dims: Vec<Vec<usize>> = parts.iter().map(|(m, _)| m.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 2]]);
    }

    #[test]
    fn decompose_squares_and_identity() {
        let a = main_example_algebra(Rationals);
        let s1 = simple(&a, 0);
        let sum = Module::direct_sum(&a, &[s1.clone(), s1.clone()]);
        let parts = decompose_with_multiplicities(&sum).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 2);
        // the pieces reassemble: include then project is the identity
        let pieces = decompose(&sum).unwrap();
        for p in &pieces {
            let comp = p.include.then(&p.project);
            assert_eq!(comp.mat, Mat::identity(Rationals, p.module.total_dim()));
            assert!(p.include.verify());
            assert!(p.project.verify());
        }
    }

    #[test]
    fn rad_p3_is_indecomposable() {
        let a = main_example_algebra(Rationals);
        let p3 = projective(&a, 2);
        let (r, _) = p3.radical_submodule();
        assert_eq!(r.dims(), &[1, 1, 1]);
        let parts = decompose_with_multiplicities(&r).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 1);
    }

    #[test]
    fn iso_rejects_same_dims_different_tops() {
        let a = main_example_algebra(Rationals);
        // rad P1 and P2/soc have dimension vector (0,1,1) resp (1,0,1)... use
        // rad P1 vs rad P2 mirrored: dimension vectors differ, so compare
        // rad P1 with itself and with S2+S3
        let p1 = projective(&a, 0);
        let (r1, _) = p1.radical_submodule();
        assert!(is_isomorphic(&r1, &r1).is_some());
        let sum = Module::direct_sum(&a, &[simple(&a, 1), simple(&a, 2)]);
        assert_eq!(sum.dims(), r1.dims());
        assert!(is_isomorphic(&r1, &sum).is_none());
    }

    #[test]
    fn end_of_simple_is_base_field() {
        let a = main_example_algebra(Rationals);
        let e = end_algebra(&simple(&a, 0)).unwrap();
        assert_eq!(e.algebra.dim(), 1);
        assert_eq!(e.summands.len(), 1);
    }

    #[test]
    fn end_of_two_simples_is_product() {
        let a = main_example_algebra(Rationals);
        let sum = Module::direct_sum(&a, &[simple(&a, 0), simple(&a, 1)]);
        let e = end_algebra(&sum).unwrap();
        assert_eq!(e.algebra.dim(), 2);
        assert!(e.algebra.is_semisimple());
        assert_eq!(e.summands.len(), 2);
    }

    #[test]
    fn annihilator_of_regular_is_zero() {
        let a = main_example_algebra(Rationals);
        let reg = regular_module(&a);
        assert_eq!(reg.annihilator_ideal().dim(), 0);
        // the simple S1 is annihilated by everything except the e1 corner
        let s1 = simple(&a, 0);
        assert_eq!(s1.annihilator_ideal().dim(), 9);
    }

    #[test]
    fn injective_socle_matches_nakayama() {
        let a = main_example_algebra(Rationals);
        // injectives over a self-injective algebra are projective: I_j has
        // the dimension vector of P_i for the i with soc(P_i) = S_j
        let perm = a.nakayama_permutation().unwrap().clone();
        for i in 0..3 {
            let inj = injective(&a, perm[i]);
            let proj = projective(&a, i);
            assert!(is_isomorphic(&inj, &proj).is_some(), "vertex {i}");
        }
    }

    #[test]
    fn submodule_generated_closure() {
        let a = main_example_algebra(Rationals);
        let p3 = projective(&a, 2);
        // the generator e3 produces the whole of P3
        let gen = unit_vec(&Rationals, p3.total_dim(), p3.block_range(2).start);
        let (sub, _) = p3.submodule_generated(&[gen]);
        assert_eq!(sub.total_dim(), p3.total_dim());
    }
}
