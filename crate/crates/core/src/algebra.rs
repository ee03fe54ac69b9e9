//! Finite-dimensional associative algebras given by structure constants,
//! together with a distinguished complete set of primitive orthogonal
//! idempotents.
//!
//! Everything downstream (modules, AR quivers, slices) works with these
//! values; algebras are immutable and cheaply clonable behind an `Arc`.

use crate::error::{ArcatError, Result};
use crate::field::Field;
use crate::matrix::{unit_vec, vec_add, vec_is_zero, Mat, Subspace};
use crate::quiver::QuiverInfo;
use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

/// The permutation `pi` with `soc(e_i A) ≅ top(e_(pi i) A)`.
pub type NakayamaPermutation = Vec<usize>;

/// A radical generator sitting in the corner `e_src · rad/rad² · e_tgt`.
#[derive(Clone, Debug)]
pub struct ArrowGen<F: Field> {
    pub src: usize,
    pub tgt: usize,
    pub elem: Vec<F::Elem>,
    pub label: String,
}

pub struct AlgebraRepr<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    /// mult[i][j] = coordinates of basis_i * basis_j
    mult: Vec<Vec<Vec<F::Elem>>>,
    one: Vec<F::Elem>,
    idempotents: Vec<Vec<F::Elem>>,
    vertex_names: Vec<String>,
    pub(crate) quiver: Option<QuiverInfo>,
    radical: OnceLock<Subspace<F>>,
    rad_square: OnceLock<Subspace<F>>,
    gens: OnceLock<Vec<ArrowGen<F>>>,
    nakayama: OnceLock<Option<NakayamaPermutation>>,
    opposite: OnceLock<Algebra<F>>,
    opp_back: OnceLock<Weak<AlgebraRepr<F>>>,
    /// indecomposable projectives with their embeddings into the algebra
    projectives: OnceLock<Vec<(crate::module::Module<F>, Mat<F>)>>,
    /// the regular module with the canonicalization transform and its inverse
    regular: OnceLock<(crate::module::Module<F>, Mat<F>, Mat<F>)>,
}

#[derive(Clone)]
pub struct Algebra<F: Field>(Arc<AlgebraRepr<F>>);

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(dim {}, vertices [{}], {})",
            self.dim(),
            self.vertex_names().join(", "),
            self.field().spec()
        )
    }
}

/// Everything needed to build an [`Algebra`]; see [`Algebra::new`].
pub struct AlgebraData<F: Field> {
    pub field: F,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Vec<F::Elem>>>,
    pub one: Vec<F::Elem>,
    pub idempotents: Vec<Vec<F::Elem>>,
    pub vertex_names: Vec<String>,
    pub quiver: Option<QuiverInfo>,
}

impl<F: Field> Algebra<F> {
    /// Build and verify an algebra. Checks the unit laws, that the given
    /// idempotents are orthogonal and sum to the identity, and associativity
    /// on all basis triples (via right-multiplication matrices) for
    /// dimensions up to 32; larger algebras must be checked explicitly with
    /// [`Algebra::verify_associativity`].
    pub fn new(data: AlgebraData<F>) -> Result<Self> {
        let dim = data.labels.len();
        if data.mult.len() != dim
            || data.mult.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim))
            || data.one.len() != dim
            || data.idempotents.iter().any(|e| e.len() != dim)
        {
            return Err(ArcatError::DimensionMismatch("structure constant table".into()));
        }
        if data.idempotents.len() != data.vertex_names.len() {
            return Err(ArcatError::DimensionMismatch("vertex name list".into()));
        }
        let a = Algebra(Arc::new(AlgebraRepr {
            field: data.field,
            dim,
            labels: data.labels,
            mult: data.mult,
            one: data.one,
            idempotents: data.idempotents,
            vertex_names: data.vertex_names,
            quiver: data.quiver,
            radical: OnceLock::new(),
            rad_square: OnceLock::new(),
            gens: OnceLock::new(),
            nakayama: OnceLock::new(),
            opposite: OnceLock::new(),
            opp_back: OnceLock::new(),
            projectives: OnceLock::new(),
            regular: OnceLock::new(),
        }));
        a.verify_basic()?;
        Ok(a)
    }

    pub fn field(&self) -> &F {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn one(&self) -> &[F::Elem] {
        &self.0.one
    }

    pub fn num_vertices(&self) -> usize {
        self.0.idempotents.len()
    }

    pub fn idempotent(&self, i: usize) -> &[F::Elem] {
        &self.0.idempotents[i]
    }

    pub fn idempotents(&self) -> &[Vec<F::Elem>] {
        &self.0.idempotents
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.0.vertex_names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.0.vertex_names.iter().position(|n| n == name)
    }

    pub fn quiver_info(&self) -> Option<&QuiverInfo> {
        self.0.quiver.as_ref()
    }

    pub fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.0.mult[i][j]
    }

    pub fn mul_elems(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = vec![f.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, m) in self.0.mult[i][j].iter().enumerate() {
                    out[k] = f.add_mul(&out[k], &c, m);
                }
            }
        }
        out
    }

    /// Matrix of `v -> v * x` on row vectors.
    pub fn rmul_matrix(&self, x: &[F::Elem]) -> Mat<F> {
        let n = self.dim();
        Mat::from_rows(
            self.field().clone(),
            (0..n).map(|i| self.mul_elems(&unit_vec(self.field(), n, i), x)).collect(),
        )
    }

    /// Matrix of `v -> x * v` on row vectors.
    pub fn lmul_matrix(&self, x: &[F::Elem]) -> Mat<F> {
        let n = self.dim();
        Mat::from_rows(
            self.field().clone(),
            (0..n).map(|i| self.mul_elems(x, &unit_vec(self.field(), n, i))).collect(),
        )
    }

    fn verify_basic(&self) -> Result<()> {
        let f = self.field().clone();
        let n = self.dim();
        for i in 0..n {
            let b = unit_vec(&f, n, i);
            if self.mul_elems(&self.0.one, &b) != b || self.mul_elems(&b, &self.0.one) != b {
                return Err(ArcatError::Internal(format!("unit law fails at basis {i}")));
            }
        }
        let mut sum = vec![f.zero(); n];
        for (k, e) in self.0.idempotents.iter().enumerate() {
            sum = vec_add(&f, &sum, e);
            for (l, e2) in self.0.idempotents.iter().enumerate() {
                let prod = self.mul_elems(e, e2);
                let expect = if k == l { e.clone() } else { vec![f.zero(); n] };
                if prod != expect {
                    return Err(ArcatError::Internal(format!(
                        "idempotents {k},{l} are not orthogonal idempotents"
                    )));
                }
            }
        }
        if sum != self.0.one {
            return Err(ArcatError::Internal("idempotents do not sum to the identity".into()));
        }
        if n <= 32 {
            self.verify_associativity()?;
        }
        Ok(())
    }

    /// Associativity on all basis triples, checked through
    /// right-multiplication matrices: `R_(b_j b_k) = R_j R_k`.
    pub fn verify_associativity(&self) -> Result<()> {
        let f = self.field().clone();
        let n = self.dim();
        let rmats: Vec<Mat<F>> =
            (0..n).map(|i| self.rmul_matrix(&unit_vec(&f, n, i))).collect();
        for j in 0..n {
            for k in 0..n {
                let lhs = rmats[j].mul(&rmats[k]);
                let mut rhs = Mat::zero(f.clone(), n, n);
                for (l, c) in self.0.mult[j][k].iter().enumerate() {
                    if !f.is_zero(c) {
                        rhs = rhs.add(&rmats[l].scale(c));
                    }
                }
                if lhs != rhs {
                    return Err(ArcatError::Internal(format!(
                        "associativity fails on pair ({j},{k})"
                    )));
                }
            }
        }
        Ok(())
    }

    // ------------------------------------------------------------------
    // radical, socle, annihilators
    // ------------------------------------------------------------------

    /// The Jacobson radical as a subspace. For quiver-presented algebras this
    /// is the arrow ideal; otherwise it is computed from the trace form in
    /// characteristic 0 and by iterated characteristic-coefficient
    /// conditions in characteristic p.
    pub fn radical(&self) -> &Subspace<F> {
        self.0.radical.get_or_init(|| {
            if let Some(q) = &self.0.quiver {
                let f = self.field().clone();
                let rows: Vec<Vec<F::Elem>> = q
                    .path_lengths
                    .iter()
                    .enumerate()
                    .filter(|(_, &len)| len >= 1)
                    .map(|(i, _)| unit_vec(&f, self.dim(), i))
                    .collect();
                return Subspace::from_rows(f, self.dim(), &rows);
            }
            self.radical_general()
        })
    }

    pub(crate) fn radical_general(&self) -> Subspace<F> {
        let f = self.field().clone();
        let n = self.dim();
        if f.characteristic() == 0 {
            // Dickson: x is radical iff trace(R_x R_y) vanishes for all y
            let rmats: Vec<Mat<F>> =
                (0..n).map(|i| self.rmul_matrix(&unit_vec(&f, n, i))).collect();
            let gram = Mat::from_fn(f.clone(), n, n, |i, j| rmats[i].mul(&rmats[j]).trace());
            let kernel = gram.kernel_basis();
            Subspace::from_rows(f, n, &kernel)
        } else {
            // characteristic p: shrink from the full space down to the
            // radical by the conditions "coefficient of lambda^(n - p^j) of
            // the regular characteristic polynomial of x*u vanishes", applied
            // for j = 0, 1, ... while p^j <= n. Each condition is linear on
            // the previously computed subspace over a prime field.
            let p = f.characteristic();
            let mut chain: Vec<Vec<F::Elem>> =
                (0..n).map(|i| unit_vec(&f, n, i)).collect();
            let mut m = 1u64; // p^j
            while m <= n as u64 {
                if chain.is_empty() {
                    break;
                }
                let cond = Mat::from_fn(f.clone(), chain.len(), chain.len(), |u, k| {
                    let prod = self.mul_elems(&chain[k], &chain[u]);
                    let rz = self.rmul_matrix(&prod);
                    let cp = rz.charpoly();
                    cp.coeffs()
                        .get(n - m as usize)
                        .cloned()
                        .unwrap_or_else(|| f.zero())
                });
                // rows index the conditions, columns the current coordinates
                let combos = cond.transpose().kernel_basis();
                chain = combos
                    .iter()
                    .map(|c| {
                        let mut v = vec![f.zero(); n];
                        for (k, ck) in c.iter().enumerate() {
                            for (t, x) in chain[k].iter().enumerate() {
                                v[t] = f.add_mul(&v[t], ck, x);
                            }
                        }
                        v
                    })
                    .collect();
                m *= p;
            }
            Subspace::from_rows(f, n, &chain)
        }
    }

    pub fn rad_square(&self) -> &Subspace<F> {
        self.0.rad_square.get_or_init(|| {
            let rad = self.radical();
            let rows = rad.basis_rows();
            let mut prods = Vec::new();
            for a in &rows {
                for b in &rows {
                    prods.push(self.mul_elems(a, b));
                }
            }
            Subspace::from_rows(self.field().clone(), self.dim(), &prods)
        })
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().dim() == 0
    }

    /// `{ a : x * a = 0 for all x in the span }`.
    pub fn right_annihilator(&self, span: &[Vec<F::Elem>]) -> Subspace<F> {
        let f = self.field().clone();
        let n = self.dim();
        if span.is_empty() {
            return Subspace::full(f, n);
        }
        let mut stacked = self.lmul_matrix(&span[0]);
        for x in &span[1..] {
            stacked = stacked.hstack(&self.lmul_matrix(x));
        }
        Subspace::from_rows(f, n, &stacked.kernel_basis())
    }

    /// `{ a : a * x = 0 for all x in the span }`.
    pub fn left_annihilator(&self, span: &[Vec<F::Elem>]) -> Subspace<F> {
        let f = self.field().clone();
        let n = self.dim();
        if span.is_empty() {
            return Subspace::full(f, n);
        }
        let mut stacked = self.rmul_matrix(&span[0]);
        for x in &span[1..] {
            stacked = stacked.hstack(&self.rmul_matrix(x));
        }
        Subspace::from_rows(f, n, &stacked.kernel_basis())
    }

    pub fn right_socle(&self) -> Subspace<F> {
        self.left_annihilator(&self.radical().basis_rows())
    }

    pub fn left_socle(&self) -> Subspace<F> {
        self.right_annihilator(&self.radical().basis_rows())
    }

    /// The right socle `{x : x rad(A) = 0}`. When the algebra is
    /// self-injective the left socle must coincide; a mismatch means a bug
    /// somewhere upstream and is reported as an internal error.
    pub fn socle(&self) -> Result<Subspace<F>> {
        let right = self.right_socle();
        if self.is_self_injective() {
            let left = self.left_socle();
            if !(right.contains_subspace(&left) && left.contains_subspace(&right)) {
                return Err(ArcatError::Internal(
                    "self-injective algebra with distinct left and right socles".into(),
                ));
            }
        }
        Ok(right)
    }

    /// Self-injectivity test for basic algebras: every indecomposable
    /// projective must have simple socle and `i -> (vertex of soc e_i A)`
    /// must be a bijection. Returns the Nakayama permutation.
    pub fn nakayama_permutation(&self) -> Option<&NakayamaPermutation> {
        self.0
            .nakayama
            .get_or_init(|| crate::module::nakayama_permutation_impl(self))
            .as_ref()
    }

    pub fn is_self_injective(&self) -> bool {
        self.nakayama_permutation().is_some()
    }

    /// Cached indecomposable projectives `e_i A` with their embeddings into
    /// the regular module (rows = algebra coordinates of the module basis).
    pub fn projectives_embedded(&self) -> &[(crate::module::Module<F>, Mat<F>)] {
        self.0.projectives.get_or_init(|| {
            (0..self.num_vertices())
                .map(|i| crate::module::projective_embedded(self, i))
                .collect()
        })
    }

    /// The regular module, the transform `T` (rows = canonical module basis
    /// in algebra coordinates), and `T^-1` (algebra coordinates to module
    /// coordinates).
    pub fn regular_with_transform(&self) -> &(crate::module::Module<F>, Mat<F>, Mat<F>) {
        self.0.regular.get_or_init(|| {
            let f = self.field().clone();
            let n = self.dim();
            let acts: Vec<Mat<F>> =
                (0..n).map(|k| self.rmul_matrix(&unit_vec(&f, n, k))).collect();
            let (m, t) = crate::module::Module::new_with_transform(self.clone(), acts)
                .expect("regular module is valid");
            let t_inv = t.inverse().expect("basis transform invertible");
            (m, t, t_inv)
        })
    }

    // ------------------------------------------------------------------
    // quotients, corners, residual identities
    // ------------------------------------------------------------------

    /// Quotient by a two-sided ideal, with the projection map. The surviving
    /// idempotent images form the distinguished set of the quotient.
    pub fn quotient(&self, ideal: &Ideal<F>) -> Result<(Algebra<F>, QuotientMap<F>)> {
        assert!(self.same(&ideal.parent));
        let f = self.field().clone();
        let n = self.dim();
        let space = &ideal.space;
        let keep = space.complement_coords();
        let qdim = keep.len();
        if qdim == 0 {
            return Err(ArcatError::Precondition("quotient by the whole algebra".into()));
        }
        let project = |v: &[F::Elem]| -> Vec<F::Elem> {
            let r = space.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let section = |q: &[F::Elem]| -> Vec<F::Elem> {
            let mut v = vec![f.zero(); n];
            for (t, &c) in keep.iter().enumerate() {
                v[c] = q[t].clone();
            }
            v
        };
        let mut mult = vec![vec![Vec::new(); qdim]; qdim];
        for (a, &ca) in keep.iter().enumerate() {
            for (b, &cb) in keep.iter().enumerate() {
                mult[a][b] = project(&self.0.mult[ca][cb]);
            }
        }
        let mut idems = Vec::new();
        let mut names = Vec::new();
        for (k, e) in self.0.idempotents.iter().enumerate() {
            if !space.contains(e) {
                idems.push(project(e));
                names.push(self.0.vertex_names[k].clone());
            }
        }
        if idems.is_empty() {
            return Err(ArcatError::Precondition(
                "all distinguished idempotents lie in the ideal".into(),
            ));
        }
        let labels = keep.iter().map(|&c| self.0.labels[c].clone()).collect();
        let q = Algebra::new(AlgebraData {
            field: f.clone(),
            labels,
            mult,
            one: project(&self.0.one),
            idempotents: idems,
            vertex_names: names,
            quiver: None,
        })?;
        let proj_mat = Mat::from_rows(
            f.clone(),
            (0..n).map(|i| project(&unit_vec(&f, n, i))).collect(),
        );
        let sect_mat = Mat::from_rows(
            f.clone(),
            (0..qdim).map(|i| section(&unit_vec(&f, qdim, i))).collect(),
        );
        Ok((q, QuotientMap { projection: proj_mat, section: sect_mat }))
    }

    /// Sum of the distinguished idempotents not lying in the ideal.
    pub fn residual_identity(&self, ideal: &Ideal<F>) -> Result<Vec<F::Elem>> {
        let f = self.field().clone();
        let mut e = vec![f.zero(); self.dim()];
        let mut any = false;
        for ei in &self.0.idempotents {
            if !ideal.space.contains(ei) {
                e = vec_add(&f, &e, ei);
                any = true;
            }
        }
        if any {
            Ok(e)
        } else {
            Err(ArcatError::Precondition("no idempotent survives the ideal".into()))
        }
    }

    /// Corner algebra `e A e` for `e` the sum of the chosen idempotents,
    /// which become the distinguished set of the corner.
    pub fn corner(&self, chosen: &[usize]) -> Result<(Algebra<F>, CornerMap<F>)> {
        let f = self.field().clone();
        let n = self.dim();
        let mut e = vec![f.zero(); n];
        for &k in chosen {
            e = vec_add(&f, &e, &self.0.idempotents[k]);
        }
        let images: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| self.mul_elems(&self.mul_elems(&e, &unit_vec(&f, n, i)), &e))
            .collect();
        let space = Subspace::from_rows(f.clone(), n, &images);
        let cdim = space.dim();
        let basis = space.basis_rows();
        let coords = |v: &[F::Elem]| -> Vec<F::Elem> {
            space.coords_of(v).expect("corner product escaped the corner")
        };
        let mut mult = vec![vec![Vec::new(); cdim]; cdim];
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                mult[i][j] = coords(&self.mul_elems(a, b));
            }
        }
        let idems: Vec<Vec<F::Elem>> =
            chosen.iter().map(|&k| coords(&self.0.idempotents[k])).collect();
        let names = chosen.iter().map(|&k| self.0.vertex_names[k].clone()).collect();
        let labels = (0..cdim).map(|i| format!("c{i}")).collect();
        let corner = Algebra::new(AlgebraData {
            field: f.clone(),
            labels,
            mult,
            one: coords(&e),
            idempotents: idems,
            vertex_names: names,
            quiver: None,
        })?;
        Ok((corner, CornerMap { space, e }))
    }

    /// The opposite algebra; memoized, and the opposite of the opposite is
    /// pointer-identical to the original.
    pub fn opposite(&self) -> Algebra<F> {
        if let Some(back) = self.0.opp_back.get().and_then(Weak::upgrade) {
            return Algebra(back);
        }
        self.0
            .opposite
            .get_or_init(|| {
                let n = self.dim();
                let mut mult = vec![vec![Vec::new(); n]; n];
                for (i, row) in mult.iter_mut().enumerate() {
                    for (j, cell) in row.iter_mut().enumerate() {
                        *cell = self.0.mult[j][i].clone();
                    }
                }
                let opp = Algebra::new(AlgebraData {
                    field: self.field().clone(),
                    labels: self.0.labels.clone(),
                    mult,
                    one: self.0.one.clone(),
                    idempotents: self.0.idempotents.clone(),
                    vertex_names: self.0.vertex_names.clone(),
                    quiver: None,
                })
                .expect("opposite of a valid algebra is valid");
                opp.0
                    .opp_back
                    .set(Arc::downgrade(&self.0))
                    .expect("fresh algebra");
                opp
            })
            .clone()
    }

    // ------------------------------------------------------------------
    // arrow generators and the valued quiver
    // ------------------------------------------------------------------

    /// Radical generators grouped by corner: lifts of a basis of
    /// `e_i (rad/rad²) e_j` over all vertex pairs. Together with the
    /// idempotents these generate the algebra.
    pub fn arrow_gens(&self) -> &[ArrowGen<F>] {
        self.0.gens.get_or_init(|| {
            let f = self.field().clone();
            let n = self.dim();
            let rad = self.radical();
            let rad2 = self.rad_square();
            let mut gens: Vec<ArrowGen<F>> = Vec::new();
            for i in 0..self.num_vertices() {
                for j in 0..self.num_vertices() {
                    let ei = &self.0.idempotents[i];
                    let ej = &self.0.idempotents[j];
                    let mut picked: Vec<Vec<F::Elem>> = Vec::new();
                    for r in rad.basis_rows() {
                        let w = self.mul_elems(&self.mul_elems(ei, &r), ej);
                        if vec_is_zero(&f, &w) {
                            continue;
                        }
                        let mut probe = rad2.basis_rows();
                        probe.extend(picked.iter().cloned());
                        let span = Subspace::from_rows(f.clone(), n, &probe);
                        if !span.contains(&w) {
                            gens.push(ArrowGen {
                                src: i,
                                tgt: j,
                                elem: w.clone(),
                                label: format!("a{}", gens.len()),
                            });
                            picked.push(w);
                        }
                    }
                }
            }
            gens
        })
    }

    /// Generators sufficient for intertwiner systems: together with the
    /// idempotents, these generate the algebra. Radical generators always;
    /// additionally, when a corner division algebra is larger than K, lifts
    /// of a basis of it beyond the idempotent itself.
    pub fn hom_gens(&self) -> Vec<ArrowGen<F>> {
        let f = self.field().clone();
        let n = self.dim();
        let mut gens: Vec<ArrowGen<F>> = self.arrow_gens().to_vec();
        for i in 0..self.num_vertices() {
            if self.corner_division_dim(i) <= 1 {
                continue;
            }
            let ei = &self.0.idempotents[i];
            let mut known_rows: Vec<Vec<F::Elem>> = self.radical().basis_rows();
            known_rows.push(ei.clone());
            let mut known = Subspace::from_rows(f.clone(), n, &known_rows);
            for k in 0..n {
                let w = self.mul_elems(&self.mul_elems(ei, &unit_vec(&f, n, k)), ei);
                if !vec_is_zero(&f, &w) && !known.contains(&w) {
                    gens.push(ArrowGen {
                        src: i,
                        tgt: i,
                        elem: w.clone(),
                        label: format!("d{}_{}", i, gens.len()),
                    });
                    let mut rows = known.basis_rows();
                    rows.push(w);
                    known = Subspace::from_rows(f.clone(), n, &rows);
                }
            }
        }
        gens
    }

    /// Dimension over K of the division algebra `e_i A e_i / rad(e_i A e_i)`.
    pub fn corner_division_dim(&self, i: usize) -> usize {
        let f = self.field().clone();
        let n = self.dim();
        let ei = &self.0.idempotents[i];
        let corner_rows: Vec<Vec<F::Elem>> = (0..n)
            .map(|k| self.mul_elems(&self.mul_elems(ei, &unit_vec(&f, n, k)), ei))
            .collect();
        let corner = Subspace::from_rows(f.clone(), n, &corner_rows);
        let rad_rows: Vec<Vec<F::Elem>> = self
            .radical()
            .basis_rows()
            .iter()
            .map(|r| self.mul_elems(&self.mul_elems(ei, r), ei))
            .collect();
        let rad_corner = Subspace::from_rows(f, n, &rad_rows);
        corner.dim() - rad_corner.dim()
    }

    /// The valued quiver of the algebra: an arrow `i -> j` wherever
    /// `e_i (rad/rad²) e_j` is nonzero, valued by the dimensions of that
    /// bimodule over the corner division algebras at `j` and at `i`.
    pub fn valued_quiver(&self) -> ValuedQuiver {
        let f = self.field().clone();
        let n = self.dim();
        let rad = self.radical();
        let rad2 = self.rad_square();
        let nv = self.num_vertices();
        let div_dims: Vec<usize> = (0..nv).map(|i| self.corner_division_dim(i)).collect();
        let mut arrows = Vec::new();
        for i in 0..nv {
            for j in 0..nv {
                let ei = &self.0.idempotents[i];
                let ej = &self.0.idempotents[j];
                let mut rows = rad2.basis_rows();
                for r in rad.basis_rows() {
                    rows.push(self.mul_elems(&self.mul_elems(ei, &r), ej));
                }
                let total = Subspace::from_rows(f.clone(), n, &rows);
                let d = total.dim() - rad2.dim();
                if d > 0 {
                    debug_assert_eq!(d % div_dims[j], 0);
                    debug_assert_eq!(d % div_dims[i], 0);
                    arrows.push(ValuedArrow {
                        src: i,
                        tgt: j,
                        valuation: (d / div_dims[j], d / div_dims[i]),
                    });
                }
            }
        }
        ValuedQuiver { vertices: self.0.vertex_names.clone(), arrows }
    }
}

#[derive(Clone, Debug)]
pub struct QuotientMap<F: Field> {
    /// dim x qdim: reduce an element of the big algebra to quotient coordinates
    pub projection: Mat<F>,
    /// qdim x dim: coordinate section picking representatives
    pub section: Mat<F>,
}

impl<F: Field> QuotientMap<F> {
    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.projection.apply_row(v)
    }
    pub fn lift(&self, q: &[F::Elem]) -> Vec<F::Elem> {
        self.section.apply_row(q)
    }
}

#[derive(Clone, Debug)]
pub struct CornerMap<F: Field> {
    /// the corner as a subspace of the parent
    pub space: Subspace<F>,
    /// the corner identity inside the parent
    pub e: Vec<F::Elem>,
}

/// A two-sided ideal, stored as a subspace basis; closure under both
/// multiplications is checked eagerly at construction.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    pub parent: Algebra<F>,
    pub space: Subspace<F>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(dim {} of {:?})", self.dim(), self.parent)
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(parent: Algebra<F>, space: Subspace<F>) -> Result<Self> {
        let f = parent.field().clone();
        let n = parent.dim();
        for v in space.basis_rows() {
            for k in 0..n {
                let b = unit_vec(&f, n, k);
                if !space.contains(&parent.mul_elems(&v, &b))
                    || !space.contains(&parent.mul_elems(&b, &v))
                {
                    return Err(ArcatError::NotIdeal);
                }
            }
        }
        Ok(Ideal { parent, space })
    }

    /// Two-sided ideal generated by the given elements.
    pub fn generated_by(parent: Algebra<F>, gens: &[Vec<F::Elem>]) -> Self {
        let f = parent.field().clone();
        let n = parent.dim();
        let mut space = Subspace::from_rows(f.clone(), n, gens);
        loop {
            let before = space.dim();
            let mut rows = space.basis_rows();
            for v in space.basis_rows() {
                for k in 0..n {
                    let b = unit_vec(&f, n, k);
                    rows.push(parent.mul_elems(&v, &b));
                    rows.push(parent.mul_elems(&b, &v));
                }
            }
            space = Subspace::from_rows(f.clone(), n, &rows);
            if space.dim() == before {
                break;
            }
        }
        Ideal { parent, space }
    }

    pub fn zero(parent: Algebra<F>) -> Self {
        let space = Subspace::zero(parent.field().clone(), parent.dim());
        Ideal { parent, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.space.contains(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedArrow {
    pub src: usize,
    pub tgt: usize,
    pub valuation: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct ValuedQuiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<ValuedArrow>,
}

impl ValuedQuiver {
    /// Standard DAG check; a loop counts as a cycle.
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            if a.src == a.tgt {
                return false;
            }
            indeg[a.tgt] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.src == v {
                    indeg[a.tgt] -= 1;
                    if indeg[a.tgt] == 0 {
                        queue.push(a.tgt);
                    }
                }
            }
        }
        seen == n
    }

    pub fn opposite(&self) -> ValuedQuiver {
        ValuedQuiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ValuedArrow {
                    src: a.tgt,
                    tgt: a.src,
                    valuation: (a.valuation.1, a.valuation.0),
                })
                .collect(),
        }
    }

    /// Equality as abstract valued quivers under a given vertex bijection
    /// `map[i] = index in other`.
    pub fn matches_under(&self, other: &ValuedQuiver, map: &[usize]) -> bool {
        if self.vertices.len() != other.vertices.len() || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let mut mine: Vec<(usize, usize, (usize, usize))> = self
            .arrows
            .iter()
            .map(|a| (map[a.src], map[a.tgt], a.valuation))
            .collect();
        let mut theirs: Vec<(usize, usize, (usize, usize))> =
            other.arrows.iter().map(|a| (a.src, a.tgt, a.valuation)).collect();
        mine.sort();
        theirs.sort();
        mine == theirs
    }

    pub fn is_connected_underlying(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.src, a.tgt), (a.tgt, a.src)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
