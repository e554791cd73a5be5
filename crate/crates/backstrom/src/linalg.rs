//! Exact linear algebra over the rationals.
//!
//! Everything upstream (radicals, conductors, hom spaces, resolutions)
//! reduces to the three primitives in this module: solving `A·x = b`,
//! computing kernels, and manipulating subspaces of a fixed coordinate
//! space. Matrices are dense and row-major; dimensions stay at desk scale,
//! so clarity wins over asymptotics.
//!
//! Subspaces are stored as reduced row echelon bases. RREF is canonical,
//! so two subspaces are equal as sets if and only if their stored bases
//! are equal componentwise; all higher-level "equal as subspaces" checks
//! rely on this.

use crate::error::{Error, Result};
use crate::rat::Rat;
use std::fmt;

pub type QVec = Vec<Rat>;

pub fn zero_vec(n: usize) -> QVec {
    vec![Rat::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> QVec {
    let mut v = zero_vec(n);
    v[i] = Rat::one();
    v
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

/// `dst += c * src`
pub fn add_scaled(dst: &mut [Rat], c: &Rat, src: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += &(c * s);
        }
    }
}

/// Dense rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<QVec>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: Vec<QVec>, ambient: usize) -> Self {
        let mut m = Mat::zero(ambient, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient);
            for i in 0..ambient {
                *m.at_mut(i, j) = col[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> QVec {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> QVec {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.at(i, j).is_zero() {
                    *t.at_mut(j, i) = self.at(i, j).clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> QVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        let mut out = zero_vec(self.rows);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if !a.is_zero() && !v[k].is_zero() {
                    out[i] += &(a * &v[k]);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (d, s) in out.data.iter_mut().zip(&other.data) {
            *d += s;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (d, s) in out.data.iter_mut().zip(&other.data) {
            *d -= s;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        let mut out = self.clone();
        for d in out.data.iter_mut() {
            *d = &*d * c;
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<QVec> = (0..self.rows).map(|i| self.row_vec(i)).collect();
        rref_in_place(&mut rows).len()
    }

    /// Square matrix inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug: Vec<QVec> = (0..n)
            .map(|i| {
                let mut row = self.row_vec(i);
                row.extend(unit_vec(n, i));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug);
        if pivots.len() < n {
            return None;
        }
        let mut inv = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = aug[i][n + j].clone();
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduce `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each surviving row (strictly increasing).
pub fn rref_in_place(rows: &mut Vec<QVec>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(src) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, src);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            let row = &mut rows[r];
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = -&row[col];
                add_scaled(row, &c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Solve `a·x = b` over the rationals.
///
/// Returns `None` when the system is inconsistent; otherwise one
/// particular solution together with the full kernel of `a`, so the
/// complete solution set is `particular + ker(a)`.
pub fn solve(a: &Mat, b: &[Rat]) -> Result<Option<(QVec, Subspace)>> {
    if a.rows() != b.len() {
        return Err(Error::Dimension(format!(
            "solve: matrix has {} rows but rhs has {} entries",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut aug: Vec<QVec> = (0..a.rows())
        .map(|i| {
            let mut row = a.row_vec(i);
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref_in_place(&mut aug);
    // A pivot in the appended column means the augmented rank exceeds the
    // coefficient rank: inconsistent.
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = zero_vec(n);
    for (row, &p) in aug.iter().zip(&pivots) {
        particular[p] = row[n].clone();
    }
    Ok(Some((particular, kernel_from_rref(&aug, &pivots, n))))
}

/// Canonical echelon basis of the null space of `a`.
pub fn kernel(a: &Mat) -> Subspace {
    let mut rows: Vec<QVec> = (0..a.rows()).map(|i| a.row_vec(i)).collect();
    let pivots = rref_in_place(&mut rows);
    kernel_from_rref(&rows, &pivots, a.cols())
}

fn kernel_from_rref(rref: &[QVec], pivots: &[usize], ncols: usize) -> Subspace {
    let mut basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = zero_vec(ncols);
        v[free] = Rat::one();
        for (row, &p) in rref.iter().zip(pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    Subspace::from_vectors(ncols, basis)
}

/// A subspace of `Q^ambient`, stored as a canonical reduced echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<QVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
        }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<QVec>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "vector length does not match ambient dimension"
        );
        let mut rows = vectors;
        rref_in_place(&mut rows);
        Subspace {
            ambient,
            basis: rows,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("zero basis row"))
            .collect()
    }

    /// Remainder of `v` after eliminating against the echelon basis. The
    /// result is zero iff `v` lies in the subspace, and its entries vanish
    /// at every pivot column.
    pub fn reduce(&self, v: &[Rat]) -> QVec {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if !w[p].is_zero() {
                let c = -&w[p];
                add_scaled(&mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coefficients of `v` with respect to the stored basis, or `None`
    /// when `v` is outside the subspace. Because the basis is in RREF,
    /// the coefficient of basis row `k` is just `v[pivot_k]`.
    pub fn coords_of(&self, v: &[Rat]) -> Option<QVec> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn from_coords(&self, coords: &[Rat]) -> QVec {
        assert_eq!(coords.len(), self.dim());
        let mut v = zero_vec(self.ambient);
        for (c, row) in coords.iter().zip(&self.basis) {
            add_scaled(&mut v, c, row);
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }

    /// Intersection, computed from the kernel of `[U^T | V^T]`: a column
    /// combination `U^T·x = V^T·y` is exactly a vector in both spans.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let du = self.dim();
        let dv = other.dim();
        let mut m = Mat::zero(self.ambient, du + dv);
        for (j, row) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                *m.at_mut(i, j) = row[i].clone();
            }
        }
        for (j, row) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                *m.at_mut(i, du + j) = -&row[i];
            }
        }
        let k = kernel(&m);
        let vecs = k
            .basis()
            .iter()
            .map(|coeffs| {
                let mut v = zero_vec(self.ambient);
                for (c, row) in coeffs[..du].iter().zip(&self.basis) {
                    add_scaled(&mut v, c, row);
                }
                v
            })
            .collect();
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }

    /// Basis vectors completing `sub`'s basis inside `self`: they are
    /// independent modulo `sub` and together with `sub` span `self`.
    /// Errors unless `sub ⊆ self`.
    pub fn quotient_completion(&self, sub: &Subspace) -> Result<Vec<QVec>> {
        self.check_ambient(sub)?;
        if !self.contains_subspace(sub) {
            return Err(Error::Dimension(
                "quotient: given subspace is not contained in the ambient one".into(),
            ));
        }
        let mut rows = sub.basis.clone();
        let mut completion = Vec::new();
        for v in &self.basis {
            let mut candidate = rows.clone();
            candidate.push(v.clone());
            if rref_in_place(&mut candidate).len() > rows.len() {
                rows = candidate;
                completion.push(v.clone());
            }
        }
        debug_assert_eq!(completion.len(), self.dim() - sub.dim());
        Ok(completion)
    }

    /// Image of this subspace under the linear map `m` (acting on columns).
    pub fn image_under(&self, m: &Mat) -> Subspace {
        let vecs = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(m.rows(), vecs)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of Q^{})", self.dim(), self.ambient)
    }
}

/// Coordinates for `Q^n / W`: classes are represented on the non-pivot
/// coordinates of `W`'s echelon basis, which makes the projection linear,
/// canonical, and split by `lift`.
#[derive(Clone)]
pub struct QuotientMap {
    sub: Subspace,
    keep: Vec<usize>,
}

impl QuotientMap {
    pub fn new(sub: Subspace) -> Self {
        let pivots: std::collections::HashSet<usize> = sub.pivots().into_iter().collect();
        let keep = (0..sub.ambient()).filter(|i| !pivots.contains(i)).collect();
        QuotientMap { sub, keep }
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn dim(&self) -> usize {
        self.keep.len()
    }

    pub fn project(&self, v: &[Rat]) -> QVec {
        let r = self.sub.reduce(v);
        self.keep.iter().map(|&i| r[i].clone()).collect()
    }

    /// Representative of a class; `project(lift(q)) == q`.
    pub fn lift(&self, q: &[Rat]) -> QVec {
        assert_eq!(q.len(), self.keep.len());
        let mut v = zero_vec(self.sub.ambient());
        for (&i, x) in self.keep.iter().zip(q) {
            v[i] = x.clone();
        }
        v
    }

    /// Matrix of the projection `Q^n -> Q^(n - dim W)`.
    pub fn projection_matrix(&self) -> Mat {
        let n = self.sub.ambient();
        let cols = (0..n).map(|i| self.project(&unit_vec(n, i))).collect();
        Mat::from_cols(cols, self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    fn vec_i(v: &[i64]) -> QVec {
        v.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let (x, k) = solve(&Mat::identity(2), &vec_i(&[1, 2])).unwrap().unwrap();
        assert_eq!(x, vec_i(&[1, 2]));
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn solve_zero_map() {
        let (x, k) = solve(&Mat::zero(2, 2), &vec_i(&[0, 0])).unwrap().unwrap();
        assert_eq!(x, vec_i(&[0, 0]));
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn solve_inconsistent() {
        // Rank 1 coefficient matrix, rank 2 augmented: no solution.
        let a = mat(&[&[1, 2], &[2, 4]]);
        assert!(solve(&a, &vec_i(&[1, 3])).unwrap().is_none());
    }

    #[test]
    fn solve_dimension_mismatch() {
        assert!(solve(&Mat::identity(2), &vec_i(&[1, 2, 3])).is_err());
    }

    #[test]
    fn solve_postconditions() {
        let a = mat(&[&[2, 4, 1], &[0, 0, 3]]);
        let b = vec_i(&[5, 6]);
        let (x, k) = solve(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x), b);
        for v in k.basis() {
            assert!(is_zero_vec(&a.mul_vec(v)));
        }
        assert_eq!(k.dim(), 3 - a.rank());
    }

    #[test]
    fn kernel_dims() {
        assert_eq!(kernel(&Mat::identity(3)).dim(), 0);
        assert_eq!(kernel(&Mat::zero(2, 3)).dim(), 3);
        // Single row of rank 1 in Q^3.
        assert_eq!(kernel(&mat(&[&[1, 2, 3]])).dim(), 2);
    }

    #[test]
    fn subspace_canonical_equality() {
        let s1 = Subspace::from_vectors(3, vec![vec_i(&[1, 1, 0]), vec_i(&[0, 2, 0])]);
        let s2 = Subspace::from_vectors(3, vec![vec_i(&[3, 0, 0]), vec_i(&[5, 7, 0])]);
        assert_eq!(s1, s2);
        assert_eq!(s1.basis(), s2.basis());
    }

    #[test]
    fn subspace_ops_examples() {
        let x = Subspace::from_vectors(2, vec![vec_i(&[1, 0])]);
        let y = Subspace::from_vectors(2, vec![vec_i(&[0, 1])]);
        assert_eq!(x.sum(&y).unwrap().dim(), 2);
        assert_eq!(x.intersect(&y).unwrap().dim(), 0);

        let s = Subspace::from_vectors(3, vec![vec_i(&[1, 0, 0]), vec_i(&[0, 1, 0])]);
        let t = Subspace::from_vectors(3, vec![vec_i(&[1, 1, 0])]);
        assert!(s.contains_subspace(&t));
        let q = s.quotient_completion(&t).unwrap();
        assert_eq!(q.len(), 1);
        // x = y: sum and intersection are x, quotient is empty.
        assert_eq!(s.sum(&s).unwrap(), s);
        assert_eq!(s.intersect(&s).unwrap(), s);
        assert!(s.quotient_completion(&s).unwrap().is_empty());
        // y not inside x is an error.
        let z = Subspace::from_vectors(3, vec![vec_i(&[0, 0, 1])]);
        assert!(s.quotient_completion(&z).is_err());
        // mismatched ambients are errors.
        assert!(x.sum(&s).is_err());
    }

    #[test]
    fn quotient_map_round_trip() {
        let w = Subspace::from_vectors(3, vec![vec_i(&[1, 2, 0])]);
        let q = QuotientMap::new(w);
        assert_eq!(q.dim(), 2);
        let v = vec_i(&[3, 1, 4]);
        let class = q.project(&v);
        assert_eq!(q.project(&q.lift(&class)), class);
        // The projection kills exactly the subspace.
        assert!(is_zero_vec(&q.project(&vec_i(&[2, 4, 0]))));
    }

    #[test]
    fn inverse() {
        let a = mat(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_mat() -> impl Strategy<Value = Mat> {
            (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-4i64..5, r * c).prop_map(move |data| {
                    Mat {
                        rows: r,
                        cols: c,
                        data: data.into_iter().map(Rat::from_int).collect(),
                    }
                })
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(a in small_mat()) {
                prop_assert_eq!(a.rank() + kernel(&a).dim(), a.cols());
            }

            #[test]
            fn kernel_vectors_are_killed(a in small_mat()) {
                for v in kernel(&a).basis() {
                    prop_assert!(is_zero_vec(&a.mul_vec(v)));
                }
            }

            #[test]
            fn sum_intersection_dims(
                a in small_mat(),
                b in small_mat(),
            ) {
                // Reinterpret rows as spanning sets in a common ambient space.
                let n = a.cols().max(b.cols());
                let pad = |m: &Mat| -> Vec<QVec> {
                    (0..m.rows()).map(|i| {
                        let mut v = m.row_vec(i);
                        v.resize(n, Rat::zero());
                        v
                    }).collect()
                };
                let x = Subspace::from_vectors(n, pad(&a));
                let y = Subspace::from_vectors(n, pad(&b));
                let s = x.sum(&y).unwrap();
                let i = x.intersect(&y).unwrap();
                prop_assert_eq!(s.dim() + i.dim(), x.dim() + y.dim());
                prop_assert!(s.contains_subspace(&x));
                prop_assert!(x.contains_subspace(&i));
            }
        }
    }
}
