//! Dense exact matrices and Gauss–Jordan reduction.

use std::fmt;

use super::scalar::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += k * v`
pub fn axpy(acc: &mut [Scalar], k: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if k.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(k * x);
        }
    }
}

pub fn scale(k: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| k * x).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Kronecker product of coordinate vectors, lexicographic index order.
pub fn kron(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Row-major matrix over an exact field. Linear maps act on column vectors,
/// so a map `K^m -> K^n` is an `n x m` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix {
            field,
            rows: n,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: Vec<Vector>) -> Self {
        Matrix::from_rows(field, rows, cols).transpose()
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&k| field.from_i64(k)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = zero_vector(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| k * a).collect(),
        }
    }

    /// Block diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// `[self other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|r| {
                let mut v = self.row(r).to_vec();
                v.extend_from_slice(other.row(r));
                v
            })
            .collect();
        Matrix::from_rows(self.field, self.cols + other.cols, rows)
    }

    /// `[self; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form with its strictly increasing pivot columns.
    /// Zero rows are dropped.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (rows, pivots) = rref_rows(self.cols, self.row_vectors());
        (Matrix::from_rows(self.field, self.cols, rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Gauss–Jordan elimination over a list of rows. Returns the nonzero rows of
/// the reduced row-echelon form and their pivot columns.
pub fn rref_rows(cols: usize, mut rows: Vec<Vector>) -> (Vec<Vector>, Vec<usize>) {
    rows.retain(|r| !is_zero_vector(r));
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[rank].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (col..cols).filter(|&c| !rows[rank][c].is_zero()).collect();
        let (before, rest) = rows.split_at_mut(rank);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for r in before.iter_mut().chain(after.iter_mut()) {
            let k = r[col].clone();
            if k.is_zero() {
                continue;
            }
            for &c in &support {
                let v = &r[c] - &(&k * &pivot_row[c]);
                r[c] = v;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over {} [",
            self.rows, self.cols, self.field
        )?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
