//! Sparse row echelon forms over exact scalars.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, nonzero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Incrementally built echelon basis of a subspace.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

fn axpy(v: &SparseVec, c: &Scalar, w: &SparseVec) -> SparseVec {
    // v - c*w
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_w {
            out.push((w[j].0, -&(c * &w[j].1)));
            j += 1;
        } else {
            let x = &v[i].1 - &(c * &w[j].1);
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the current pivots.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            match self.pivots.get(&v[k].0) {
                Some(p) => {
                    let c = v[k].1.clone();
                    let tail = axpy(&v[k..].to_vec(), &c, p);
                    v.truncate(k);
                    v.extend(tail);
                }
                None => k += 1,
            }
        }
        v
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = v;
        while let Some((lead, c)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => v = axpy(&v, &c, p),
                None => {
                    let inv = c.inv().expect("nonzero");
                    for (_, x) in v.iter_mut() {
                        *x = &*x * &inv;
                    }
                    self.pivots.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.pivots.into_values().collect()
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<I: IntoIterator<Item = SparseVec>>(vectors: I) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Kernel basis of a dense matrix (rows of equal length).
pub fn kernel(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let field = rows[0].first().map(|s| s.field());
    let Some(field) = field else {
        return Vec::new();
    };
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..ncols {
                    let v = &m[i][k] - &(&f * &m[r][k]);
                    m[i][k] = v;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&m[row][fc];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn s(v: i64) -> Scalar {
        Field::Rational.from_i64(v)
    }

    #[test]
    fn rank_of_dependent_family() {
        let a = vec![(0, s(1)), (2, s(2))];
        let b = vec![(1, s(1)), (2, s(1))];
        let c = vec![(0, s(2)), (1, s(3)), (2, s(7))];
        assert_eq!(rank(vec![a.clone(), b.clone()]), 2);
        assert_eq!(rank(vec![a, b, c]), 2);
    }

    #[test]
    fn kernel_of_shear() {
        // [[0,1],[0,0]] has kernel spanned by (1,0)
        let k = kernel(&[vec![s(0), s(1)], vec![s(0), s(0)]]);
        assert_eq!(k, vec![vec![s(1), s(0)]]);
        let k = kernel(&[vec![s(1), s(-1)], vec![s(-1), s(0)]]);
        assert!(k.is_empty());
    }
}
