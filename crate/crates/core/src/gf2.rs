//! Subspaces of F2^128 in fully reduced echelon form.

/// Span of a set of `u128` vectors over F2. Rows are kept fully reduced and
/// sorted by leading bit, so two spaces are equal iff their rows are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct F2Space {
    rows: Vec<u128>,
}

#[inline]
fn lead(v: u128) -> u32 {
    127 - v.leading_zeros()
}

impl F2Space {
    pub fn new() -> F2Space {
        F2Space::default()
    }

    pub fn span<I: IntoIterator<Item = u128>>(vectors: I) -> F2Space {
        let mut s = F2Space::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[u128] {
        &self.rows
    }

    /// Canonical representative of v modulo the space; linear in v.
    pub fn reduce(&self, mut v: u128) -> u128 {
        for &r in &self.rows {
            if v >> lead(r) & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    pub fn contains(&self, v: u128) -> bool {
        self.reduce(v) == 0
    }

    /// Adds v to the span; returns false if it was already there.
    pub fn insert(&mut self, v: u128) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let l = lead(v);
        for r in self.rows.iter_mut() {
            if *r >> l & 1 == 1 {
                *r ^= v;
            }
        }
        let at = self.rows.partition_point(|&r| lead(r) > l);
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &F2Space) -> bool {
        self.rows.iter().all(|&r| other.contains(r))
    }

    /// First basis vector of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &F2Space) -> Option<u128> {
        self.rows.iter().copied().find(|&r| !other.contains(r))
    }

    /// All 2^dim elements; callers bound the dimension.
    pub fn elements(&self) -> Vec<u128> {
        let mut out = vec![0u128];
        for &r in &self.rows {
            let extra: Vec<u128> = out.iter().map(|&v| v ^ r).collect();
            out.extend(extra);
        }
        out
    }
}

/// Basis of {v in span(basis) : map(v) = 0} for an F2-linear `map`.
pub fn kernel<F: Fn(u128) -> u128>(basis: &[u128], map: F) -> Vec<u128> {
    // pairs (image, preimage) with distinct image leading bits
    let mut pivots: Vec<(u128, u128)> = Vec::new();
    let mut out = Vec::new();
    for &b in basis {
        let mut img = map(b);
        let mut pre = b;
        for &(pi, pp) in &pivots {
            if img >> lead(pi) & 1 == 1 {
                img ^= pi;
                pre ^= pp;
            }
        }
        if img == 0 {
            out.push(pre);
        } else {
            let l = lead(img);
            let at = pivots.partition_point(|&(pi, _)| lead(pi) > l);
            pivots.insert(at, (img, pre));
        }
    }
    out
}
