use super::Mat;
use crate::scalar::Scalar;

/// Output of [`row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction<T> {
    pub rank: usize,
    /// Reduced row-echelon form with unit pivots.
    pub rref: Mat<T>,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
    /// Basis of `{x : m x = 0}` as a right vector space, one vector per free
    /// column in increasing order.
    pub nullspace: Vec<Vec<T>>,
    /// Invertible `t` with `t * m = rref`.
    pub transform: Mat<T>,
}

/// Gauss-Jordan elimination by left row operations. The pivot in each
/// column is the first nonzero entry at or below the current row.
pub fn row_reduce<T: Scalar>(m: &Mat<T>) -> RowReduction<T> {
    let (rows, cols) = m.shape();
    let mut work: Vec<Vec<T>> = (0..rows)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend((0..rows).map(|c| if c == r { T::one() } else { T::zero() }));
            row
        })
        .collect();
    let pivots = eliminate(&mut work, cols);
    let rank = pivots.len();
    let rref = Mat::from_fn(rows, cols, |r, c| work[r][c].clone());
    let transform = Mat::from_fn(rows, rows, |r, c| work[r][cols + c].clone());
    let nullspace = nullspace_from_rref(&work, &pivots, cols);
    RowReduction {
        rank,
        rref,
        pivots,
        nullspace,
        transform,
    }
}

/// Nullspace basis read off the reduced row echelon form, without
/// tracking the transform.
pub fn nullspace<T: Scalar>(m: &Mat<T>) -> Vec<Vec<T>> {
    let mut work: Vec<Vec<T>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let pivots = eliminate(&mut work, m.cols());
    nullspace_from_rref(&work, &pivots, m.cols())
}

/// Rank by elimination, without tracking the transform.
pub fn rank<T: Scalar>(m: &Mat<T>) -> usize {
    let mut work: Vec<Vec<T>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    eliminate(&mut work, m.cols()).len()
}

/// Reduces `rows` in place on the first `ncols` columns (the remaining
/// columns ride along) and returns the pivot columns.
fn eliminate<T: Scalar>(rows: &mut [Vec<T>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = rows[top][col].inv().expect("nonzero pivot");
        for x in rows[top].iter_mut() {
            if !x.is_zero() {
                *x = inv.mul_ref(x);
            }
        }
        let (before, rest) = rows.split_at_mut(top);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(y));
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    pivots
}

fn nullspace_from_rref<T: Scalar>(rref: &[Vec<T>], pivots: &[usize], ncols: usize) -> Vec<Vec<T>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![T::zero(); ncols];
            x[free] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = rref[r][free].neg_ref();
            }
            x
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution<T> {
    Inconsistent,
    /// One solution (free variables set to zero) plus a nullspace basis.
    Solved {
        particular: Vec<T>,
        nullspace: Vec<Vec<T>>,
    },
}

/// Solves `a x = b` exactly.
pub fn solve_linear<T: Scalar>(a: &Mat<T>, b: &[T]) -> LinearSolution<T> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let n = a.cols();
    let mut work: Vec<Vec<T>> = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = eliminate(&mut work, n + 1);
    if pivots.last() == Some(&n) {
        return LinearSolution::Inconsistent;
    }
    let mut particular = vec![T::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = work[r][n].clone();
    }
    let nullspace = nullspace_from_rref(&work, &pivots, n);
    LinearSolution::Solved {
        particular,
        nullspace,
    }
}

/// Incrementally maintained echelon basis, used to test whether a vector
/// lies in the span of those already inserted.
#[derive(Clone, Debug)]
pub struct EchelonSet<T> {
    len: usize,
    /// `(pivot index, vector with a one at the pivot)`.
    basis: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> EchelonSet<T> {
    pub fn new(len: usize) -> EchelonSet<T> {
        EchelonSet {
            len,
            basis: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.len);
        let mut w = v.to_vec();
        for (p, b) in &self.basis {
            let f = w[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = x.sub_ref(&y.mul_ref(&f));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns false (and changes nothing) if it is already in the
    /// span.
    pub fn insert(&mut self, v: &[T]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        let w: Vec<T> = w.iter().map(|x| x.mul_ref(&inv)).collect();
        // keep the stored vectors fully reduced against the new pivot
        for (_, b) in self.basis.iter_mut() {
            let f = b[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in b.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x = x.sub_ref(&y.mul_ref(&f));
                }
            }
        }
        self.basis.push((p, w));
        true
    }
}
