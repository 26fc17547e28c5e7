//! Exhaustive codeword enumeration over bitsliced GF(4) words.
//!
//! Nonzero codewords are visited one per projective class: for each top
//! position p the message has a 1 at p, zeros above it, and an arbitrary
//! tail below. The tail ranges over 2p binary digits (each GF(4) symbol
//! contributes the rows r_j and w*r_j), walked in binary-reflected Gray
//! order so every step is two XORs. Scalar multiples share weight and
//! support, so weight-type statistics only need these (4^k - 1)/3 words.
//!
//! The message space is cut into independent jobs (contiguous Gray-index
//! ranges). Jobs share no mutable state; results are merged by the caller
//! with an associative, commutative reduction, so the outcome does not
//! depend on the number of partitions.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::F4;
use crate::error::{Error, Result};
use crate::qcode::enumerator::{macwilliams_transform, WeightEnumerator};
use crate::qcode::linear::LinearCodeQ;
use crate::qcode::packed::PackedWord;

/// Default exponent E for distance computations (at most 4^E words).
pub const DEFAULT_DISTANCE_EXP: u32 = 16;
/// Default exponent for full weight enumerators (4^14 = 2^28 words).
pub const DEFAULT_ENUMERATOR_EXP: u32 = 14;
/// Environment variable overriding the default partition count.
pub const PARTITIONS_ENV: &str = "M2CODES_PARTITIONS";

pub fn default_partitions() -> usize {
    std::env::var(PARTITIONS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&p: &usize| p > 0)
        .unwrap_or_else(|| rayon::current_num_threads() * 4)
}

#[derive(Clone, Copy, Debug)]
struct Job {
    top: usize,
    start: u64,
    end: u64,
}

/// How often a job polls its early-exit predicate.
const POLL_MASK: u64 = (1 << 12) - 1;

/// Bitsliced enumeration engine with an enumeration budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    /// At most 4^cap_exp words are enumerated by any single request.
    pub cap_exp: u32,
    pub partitions: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(DEFAULT_DISTANCE_EXP)
    }
}

impl Engine {
    pub fn new(cap_exp: u32) -> Engine {
        Engine {
            cap_exp,
            partitions: default_partitions(),
        }
    }

    pub fn with_partitions(mut self, partitions: usize) -> Engine {
        self.partitions = partitions.max(1);
        self
    }

    fn check_budget(&self, exp: usize) -> Result<()> {
        if exp as u64 > u64::from(self.cap_exp) {
            Err(Error::Budget {
                needed: exp as u32,
                cap: self.cap_exp,
            })
        } else {
            Ok(())
        }
    }

    fn jobs(&self, k: usize) -> Vec<Job> {
        let mut jobs = Vec::new();
        for top in 0..k {
            let total = 1u64 << (2 * top);
            let parts = (self.partitions as u64).min(total);
            for i in 0..parts {
                jobs.push(Job {
                    top,
                    start: total * i / parts,
                    end: total * (i + 1) / parts,
                });
            }
        }
        jobs
    }

    /// Folds `visit` over one representative of every projective class of
    /// nonzero codewords, returning one accumulator per job in job order.
    ///
    /// A job stops early once `done` holds for its accumulator.
    pub fn fold_projective<A, I, V, D>(&self, code: &LinearCodeQ, init: I, visit: V, done: D) -> Result<Vec<A>>
    where
        A: Send,
        I: Fn() -> A + Sync,
        V: Fn(&mut A, PackedWord) + Sync,
        D: Fn(&A) -> bool + Sync,
    {
        self.check_budget(code.dim())?;
        let rows = code.packed_rows()?;
        let basis: Vec<PackedWord> = rows.iter().flat_map(|&r| [r, r.scale(F4::W)]).collect();
        let jobs = self.jobs(rows.len());
        Ok(jobs
            .into_par_iter()
            .map(|job| {
                let mut acc = init();
                let blo: Vec<u64> = basis[..2 * job.top].iter().map(|w| w.lo).collect();
                let bhi: Vec<u64> = basis[..2 * job.top].iter().map(|w| w.hi).collect();
                let gray = job.start ^ (job.start >> 1);
                let mut word = rows[job.top];
                for (b, w) in basis[..2 * job.top].iter().enumerate() {
                    if gray >> b & 1 == 1 {
                        word = word.add(*w);
                    }
                }
                visit(&mut acc, word);
                let (mut lo, mut hi) = (word.lo, word.hi);
                let mut i = job.start + 1;
                while i < job.end {
                    if i & POLL_MASK == 0 && done(&acc) {
                        break;
                    }
                    let b = i.trailing_zeros() as usize;
                    lo ^= blo[b];
                    hi ^= bhi[b];
                    visit(&mut acc, PackedWord { lo, hi });
                    i += 1;
                }
                acc
            })
            .collect())
    }

    /// Minimum Hamming weight by direct enumeration, stopping once a word of
    /// weight <= `lower_bound` is found.
    pub fn min_distance_direct(&self, code: &LinearCodeQ, lower_bound: u32) -> Result<u32> {
        if code.dim() == 0 {
            return Err(Error::EmptyCode);
        }
        let mins = self.fold_projective(
            code,
            || u32::MAX,
            |m, w| *m = (*m).min(w.weight()),
            |m| *m <= lower_bound,
        )?;
        Ok(mins.into_iter().min().expect("at least one job"))
    }

    /// Full weight enumerator by direct enumeration.
    pub fn weight_enumerator_direct(&self, code: &LinearCodeQ) -> Result<WeightEnumerator> {
        let n = code.length();
        let parts = self.fold_projective(
            code,
            || vec![0u64; n + 1],
            |c, w| c[w.weight() as usize] += 1,
            |_| false,
        )?;
        let mut counts = vec![BigUint::zero(); n + 1];
        for part in parts {
            for (w, c) in part.into_iter().enumerate() {
                counts[w] += BigUint::from(c) * 3u32;
            }
        }
        counts[0] += 1u32;
        WeightEnumerator::new(n, counts)
    }

    /// Weight enumerator, enumerating whichever of the code and its dual is
    /// smaller and transforming back in the second case.
    pub fn weight_enumerator(&self, code: &LinearCodeQ) -> Result<WeightEnumerator> {
        let k = code.dim();
        let n = code.length();
        if k <= n - k {
            self.weight_enumerator_direct(code)
        } else {
            self.check_budget(n - k)?;
            let dual = code.dual();
            let dual_we = self.weight_enumerator_direct(&dual)?;
            macwilliams_transform(&dual_we, &(BigUint::from(4u32).pow((n - k) as u32)))
        }
    }

    /// Exact minimum distance. Uses direct search when k <= n - k and the
    /// dual enumerator otherwise.
    pub fn min_distance(&self, code: &LinearCodeQ) -> Result<u32> {
        self.min_distance_with_bound(code, 1)
    }

    pub fn min_distance_with_bound(&self, code: &LinearCodeQ, lower_bound: u32) -> Result<u32> {
        let k = code.dim();
        if k == 0 {
            return Err(Error::EmptyCode);
        }
        if k <= code.length() - k {
            self.min_distance_direct(code, lower_bound)
        } else {
            let we = self.weight_enumerator(code)?;
            we.min_distance().ok_or(Error::EmptyCode)
        }
    }
}

/// Minimum distance with the default engine for the given budget exponent.
pub fn min_distance(code: &LinearCodeQ, cap_exp: u32) -> Result<u32> {
    Engine::new(cap_exp).min_distance(code)
}

pub fn weight_enumerator(code: &LinearCodeQ, cap_exp: u32) -> Result<WeightEnumerator> {
    Engine::new(cap_exp).weight_enumerator(code)
}
