//! Gaussian elimination over ℚ(ζ_N).

use crate::CycScalar;

/// Dense row-major matrix used by the solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<CycScalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, conductor: u32) -> Self {
        Mat {
            rows,
            cols,
            data: vec![CycScalar::zero(conductor); rows * cols],
        }
    }

    pub fn identity(n: usize, conductor: u32) -> Self {
        let mut m = Self::zeros(n, n, conductor);
        for i in 0..n {
            m[(i, i)] = CycScalar::one(conductor);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycScalar>>, conductor: u32) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c, conductor);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, x) in row.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat {
            rows: self.cols,
            cols: self.rows,
            data: Vec::with_capacity(self.data.len()),
        };
        for j in 0..self.cols {
            for i in 0..self.rows {
                t.data.push(self[(i, j)].clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let n = conductor_of(&self.data, &other.data);
        let mut out = Mat::zeros(self.rows, other.cols, n);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }
}

fn conductor_of(a: &[CycScalar], b: &[CycScalar]) -> u32 {
    a.first()
        .or(b.first())
        .map_or(crate::DEFAULT_CONDUCTOR, CycScalar::conductor)
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = CycScalar;
    fn index(&self, (i, j): (usize, usize)) -> &CycScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycScalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = m[(r, c)].inv().expect("pivot is nonzero");
        for j in c..m.cols {
            if !m[(r, j)].is_zero() {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
        }
        for i in 0..m.rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let factor = m[(i, c)].clone();
            for j in c..m.cols {
                if m[(r, j)].is_zero() {
                    continue;
                }
                let sub = &factor * &m[(r, j)];
                m[(i, j)] -= &sub;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Mat) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
pub fn nullspace(m: &Mat, conductor: u32) -> Vec<Vec<CycScalar>> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycScalar::zero(conductor); m.cols];
            v[f] = CycScalar::one(conductor);
            for (r, &pc) in pivots.iter().enumerate() {
                let x = &w[(r, f)];
                if !x.is_zero() {
                    v[pc] = -x;
                }
            }
            v
        })
        .collect()
}

/// Puts a set of vectors into reduced echelon form (row space basis).
pub fn row_reduce_basis(vectors: Vec<Vec<CycScalar>>, conductor: u32) -> Vec<Vec<CycScalar>> {
    if vectors.is_empty() {
        return vectors;
    }
    let mut m = Mat::from_rows(vectors, conductor);
    let k = rref(&mut m).len();
    (0..k).map(|i| m.row(i).to_vec()).collect()
}

/// Solves `a x = b` for a single right-hand side. `None` if inconsistent;
/// free variables are set to zero.
pub fn solve(a: &Mat, b: &[CycScalar], conductor: u32) -> Option<Vec<CycScalar>> {
    assert_eq!(a.rows, b.len());
    let mut aug = Mat::zeros(a.rows, a.cols + 1, conductor);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols)] = b[i].clone();
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![CycScalar::zero(conductor); a.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[(r, a.cols)].clone();
    }
    Some(x)
}

/// Exact inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &Mat, conductor: u32) -> Option<Mat> {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut aug = Mat::zeros(n, 2 * n, conductor);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n + i)] = CycScalar::one(conductor);
    }
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut inv = Mat::zeros(n, n, conductor);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = aug[(i, n + j)].clone();
        }
    }
    Some(inv)
}
