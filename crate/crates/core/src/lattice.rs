//! Smith normal form over the integers, used for the fundamental group
//! `Λ/Λ_r` and for root-lattice membership tests.

use num_integer::Integer;

/// Result of reducing an integer matrix `m` to `U · m · V = diag(d_1, ..., d_k)`
/// with unimodular `U`, `V` and `d_1 | d_2 | ...`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Diagonal entries, nonnegative, each dividing the next. Zero entries
    /// (rank deficiency) come last.
    pub diagonal: Vec<i64>,
    /// The column transform `V`.
    pub col_transform: Vec<Vec<i64>>,
}

impl SmithForm {
    /// Whether the row vector `v` lies in the integer row span of the
    /// original matrix.
    ///
    /// `v = c·m` for integral `c` iff every coordinate of `v·V` is divisible
    /// by the matching diagonal entry.
    pub fn row_span_contains(&self, v: &[i64]) -> bool {
        let n = self.col_transform.len();
        (0..n).all(|j| {
            let w: i64 = (0..n).map(|k| v[k] * self.col_transform[k][j]).sum();
            match self.diagonal.get(j).copied().unwrap_or(0) {
                0 => w == 0,
                d => w % d == 0,
            }
        })
    }
}

/// Smith normal form of a square integer matrix.
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> SmithForm {
    let n = matrix.len();
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let mut v: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();

    for t in 0..n {
        // pivot: smallest nonzero absolute value in the remaining block
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..n {
                let q = Integer::div_floor(&a[i][t], &a[t][t]);
                if q != 0 {
                    for k in t..n {
                        a[i][k] -= q * a[t][k];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let q = Integer::div_floor(&a[t][j], &a[t][t]);
                if q != 0 {
                    for k in t..n {
                        a[k][j] -= q * a[k][t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold any offending row into row t and retry
            let offending = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % a[t][t] != 0);
            match offending {
                Some((i, _)) => {
                    for k in t..n {
                        a[t][k] += a[i][k];
                    }
                }
                None => break,
            }
        }
    }

    let mut diagonal: Vec<i64> = (0..n).map(|i| a[i][i]).collect();
    for (j, d) in diagonal.iter_mut().enumerate() {
        if *d < 0 {
            *d = -*d;
            for row in v.iter_mut() {
                row[j] = -row[j];
            }
        }
    }
    SmithForm {
        diagonal,
        col_transform: v,
    }
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Exact determinant of a small integer matrix by fraction-free elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> i64 {
    let n = matrix.len();
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        return 1;
    }
    (sign * a[n - 1][n - 1]) as i64
}
