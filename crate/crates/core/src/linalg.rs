//! Exact linear algebra over any [`Field`].
//!
//! Vectors are sparse maps from an ordered coordinate type to nonzero
//! coefficients, which lets callers use monomial or tensor keys directly as
//! coordinates without first assigning row indices.

use std::collections::BTreeMap;

use crate::scalars::Field;

pub type SparseVec<K, F> = BTreeMap<K, F>;

struct Pivot<K, F> {
    vector: SparseVec<K, F>,
    combo: BTreeMap<usize, F>,
}

/// Incremental echelon reduction.
///
/// Each pushed vector is reduced against the stored pivots (pivot coordinate
/// = smallest key, normalized to 1). A vector that reduces to zero yields a
/// linear dependency among the pushed vectors, expressed by their push index.
pub struct Echelon<K, F> {
    pivots: BTreeMap<K, Pivot<K, F>>,
    pushed: usize,
}

impl<K: Ord + Clone, F: Field> Default for Echelon<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, F: Field> Echelon<K, F> {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new(), pushed: 0 }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pushes a vector. Returns `Some(dependency)` when it lies in the span
    /// of earlier vectors: the map sends push indices to coefficients of a
    /// vanishing combination (including this vector with coefficient 1).
    pub fn push(&mut self, v: SparseVec<K, F>) -> Option<BTreeMap<usize, F>> {
        let idx = self.pushed;
        self.pushed += 1;
        let mut v = v;
        v.retain(|_, c| !c.is_zero());
        let mut combo = BTreeMap::new();
        combo.insert(idx, F::one());
        let mut floor: Option<K> = None;
        loop {
            let lead = match &floor {
                None => v.keys().next().cloned(),
                Some(f) => v
                    .range((std::ops::Bound::Excluded(f.clone()), std::ops::Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(lead) = lead else {
                return Some(combo);
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = v[&lead].clone();
                    axpy(&mut v, &c.neg_ref(), &p.vector);
                    axpy(&mut combo, &c.neg_ref(), &p.combo);
                    floor = Some(lead);
                }
                None => {
                    // `lead` is the smallest surviving key above the floor;
                    // keys below the floor were all eliminated.
                    let inv = v[&lead].inv().expect("nonzero lead");
                    for c in v.values_mut() {
                        *c = c.mul_ref(&inv);
                    }
                    for c in combo.values_mut() {
                        *c = c.mul_ref(&inv);
                    }
                    self.pivots.insert(lead, Pivot { vector: v, combo });
                    return None;
                }
            }
        }
    }

    /// Whether `v` lies in the current span (does not modify the echelon).
    pub fn contains(&self, v: &SparseVec<K, F>) -> bool {
        let mut v: SparseVec<K, F> =
            v.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())).collect();
        while let Some(lead) = v.keys().next().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = v[&lead].clone();
                    axpy(&mut v, &c.neg_ref(), &p.vector);
                }
                None => return false,
            }
        }
        true
    }
}

/// `y += a * x`, dropping zeros.
pub fn axpy<K: Ord + Clone, F: Field>(y: &mut SparseVec<K, F>, a: &F, x: &SparseVec<K, F>) {
    if a.is_zero() {
        return;
    }
    for (k, c) in x {
        let add = a.mul_ref(c);
        match y.get_mut(k) {
            Some(e) => {
                *e = e.add_ref(&add);
                if e.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                y.insert(k.clone(), add);
            }
        }
    }
}

/// Basis of the kernel of the linear map whose column `j` is `columns[j]`.
/// Each basis vector is a map from column index to coefficient.
pub fn kernel<K: Ord + Clone, F: Field>(columns: Vec<SparseVec<K, F>>) -> Vec<BTreeMap<usize, F>> {
    let mut ech = Echelon::new();
    columns.into_iter().filter_map(|c| ech.push(c)).collect()
}

pub fn rank<K: Ord + Clone, F: Field>(vectors: impl IntoIterator<Item = SparseVec<K, F>>) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.push(v);
    }
    ech.rank()
}

/// Whether two finite families span the same subspace.
pub fn same_span<K: Ord + Clone, F: Field>(a: &[SparseVec<K, F>], b: &[SparseVec<K, F>]) -> bool {
    let ra = rank(a.iter().cloned());
    let rb = rank(b.iter().cloned());
    ra == rb && rank(a.iter().chain(b.iter()).cloned()) == ra
}

/// Reduced echelon basis of the span: pivots are the smallest keys, each
/// pivot is 1 and is absent from every other basis vector. Two families span
/// the same space iff their reduced bases are equal.
pub fn reduced_basis<K: Ord + Clone, F: Field>(vectors: Vec<SparseVec<K, F>>) -> Vec<SparseVec<K, F>> {
    let mut ech: Echelon<K, F> = Echelon::new();
    for v in vectors {
        ech.push(v);
    }
    let mut rows: Vec<(K, SparseVec<K, F>)> = ech.pivots.into_iter().map(|(k, p)| (k, p.vector)).collect();
    // back-substitute from the largest pivot down
    for i in (0..rows.len()).rev() {
        let (pivot, row) = (rows[i].0.clone(), rows[i].1.clone());
        for (_, other) in rows.iter_mut().take(i) {
            if let Some(c) = other.get(&pivot).cloned() {
                axpy(other, &c.neg_ref(), &row);
            }
        }
    }
    rows.into_iter().map(|(_, v)| v).collect()
}

/// Solves the dense system `a x = b`; free variables are set to zero.
/// Returns `None` when inconsistent.
pub fn solve_dense<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Option<Vec<F>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].inv()?;
        for x in a[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        b[r] = b[r].mul_ref(&inv);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = f.mul_ref(&a[r][j]);
                    a[i][j] = a[i][j].sub_ref(&d);
                }
                b[i] = b[i].sub_ref(&f.mul_ref(&b[r]));
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}
