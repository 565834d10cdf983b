//! Dense matrices over Q with fraction-free elimination.
//!
//! Rows are first cleared to integers, then reduced with Bareiss' one-step
//! scheme. Every intermediate entry is a minor of the integer matrix, so the
//! divisions are exact and coefficient growth stays polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Row echelon form over Z together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

/// `{ particular + span(kernel) }`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSolution {
    pub particular: Vec<Rat>,
    pub kernel: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from row vectors, which must all have length `cols`.
    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        RatMatrix {
            rows: nrows,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_cols(cols: &[Vec<Rat>], rows: usize) -> Self {
        let mut m = RatMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix column");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Appends a column.
    pub fn augment(&self, col: &[Rat]) -> RatMatrix {
        assert_eq!(col.len(), self.rows);
        let mut data = Vec::with_capacity(self.rows * (self.cols + 1));
        for (i, c) in col.iter().enumerate() {
            data.extend_from_slice(self.row(i));
            data.push(c.clone());
        }
        RatMatrix {
            rows: self.rows,
            cols: self.cols + 1,
            data,
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn echelon(&self) -> Echelon {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| integer_row(self.row(i)))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let m = a.len();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut k = 0;
        for c in 0..self.cols {
            if k == m {
                break;
            }
            let Some(p) = (k..m).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(k, p);
            let (top, rest) = a.split_at_mut(k + 1);
            let piv_row = &top[k];
            let piv = &piv_row[c];
            for row in rest.iter_mut() {
                let lead = row[c].clone();
                for j in c..self.cols {
                    let v = piv * &row[j] - &lead * &piv_row[j];
                    debug_assert!(v.is_multiple_of(&prev));
                    row[j] = v / &prev;
                }
            }
            prev = piv.clone();
            pivots.push(c);
            k += 1;
        }
        a.truncate(k);
        for r in a.iter_mut() {
            primitive(r);
        }
        Echelon {
            rows: a,
            pivots,
            cols: self.cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        self.echelon().kernel_basis()
    }

    /// All solutions of `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<AffineSolution> {
        let aug = self.augment(b).echelon();
        if aug.pivots.last() == Some(&self.cols) {
            return None;
        }
        // Kernel of A is the kernel of the augmented system restricted to
        // x_last = 0; the particular solution has x_last = -1 scaled away.
        let full = aug.kernel_basis();
        let mut particular = None;
        let mut kernel = Vec::new();
        for v in full {
            if v[self.cols].is_zero() {
                kernel.push(v[..self.cols].to_vec());
            } else {
                debug_assert!(particular.is_none());
                let s = -v[self.cols].recip();
                particular = Some(v[..self.cols].iter().map(|x| x * &s).collect());
            }
        }
        Some(AffineSolution {
            particular: particular.expect("consistent system has a particular solution"),
            kernel,
        })
    }

    /// Whether `b` lies in the column space.
    pub fn in_column_space(&self, b: &[Rat]) -> bool {
        self.rank() == self.augment(b).rank()
    }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut x = vec![Rat::zero(); n];
            x[free] = Rat::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots).rev() {
                let mut s = Rat::zero();
                for j in p + 1..n {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        s += Rat::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[p] = -s / Rat::from_integer(row[p].clone());
            }
            out.push(x);
        }
        out
    }
}

fn integer_row(r: &[Rat]) -> Vec<BigInt> {
    let l = r
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn primitive(r: &mut [BigInt]) {
    let g = r.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in r.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Kernel of `m`: independent vectors `v` with `m v = 0`, `cols - rank` of them.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rat>> {
    m.kernel_basis()
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(super::rat::fmt_rat).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::{rat, ri};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows[0].len();
        RatMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| ri(v)).collect()).collect(),
            cols,
        )
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let k = kernel_basis(&RatMatrix::zeros(2, 3));
        assert_eq!(k.len(), 3);
        assert_eq!(RatMatrix::from_rows(k, 3).rank(), 3);
    }

    #[test]
    fn kernel_by_inspection() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(v[2], ri(0));
        assert_eq!(&v[0] + &v[1], ri(0));
        assert!(!v[0].is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(a.solve(&[ri(1), ri(3)]).is_none());
        let s = a.solve(&[ri(1), ri(2)]).unwrap();
        assert_eq!(a.mul_vec(&s.particular), vec![ri(1), ri(2)]);
        assert_eq!(s.kernel.len(), 1);
    }

    #[test]
    fn rational_entries_and_rank_deficiency() {
        let a = RatMatrix::from_rows(
            vec![
                vec![rat(1, 2), rat(1, 3), rat(1, 4)],
                vec![rat(1, 3), rat(1, 4), rat(1, 5)],
                vec![rat(5, 6), rat(7, 12), rat(9, 20)],
            ],
            3,
        );
        assert_eq!(a.rank(), 2);
        for v in a.kernel_basis() {
            assert!(a.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }
}
