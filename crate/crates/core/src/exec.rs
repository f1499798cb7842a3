//! Deterministic folds over `S_n`.
//!
//! `S_n` is split into blocks sharing a fixed prefix. Blocks are visited in
//! lexicographic order, and partial results are merged left to right in that
//! order, so the result does not depend on the execution mode or thread count.

use crate::error::Error;
use crate::perm::next_permutation;

/// Largest `n` for which exhaustive enumeration is allowed without an override.
pub const HARD_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is on, and runs sequentially otherwise.
    #[default]
    Parallel,
}

/// Handle for an exhaustive enumeration of `S_n`.
#[derive(Debug, Clone, Copy)]
pub struct Sn {
    n: usize,
}

impl Sn {
    pub fn new(n: usize) -> Result<Self, Error> {
        Self::with_cap(n, HARD_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self, Error> {
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        Ok(Self { n })
    }

    /// Skips the cap check.
    pub fn unbounded(n: usize) -> Self {
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn prefixes(&self) -> Vec<Vec<u8>> {
        let n = self.n as u8;
        match self.n {
            0 | 1 => vec![Vec::new()],
            2..=4 => (1..=n).map(|a| vec![a]).collect(),
            _ => (1..=n)
                .flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| vec![a, b]))
                .collect(),
        }
    }

    fn run_block<A, F>(&self, prefix: &[u8], acc: &mut A, visit: &F)
    where
        F: Fn(&mut A, &[u8]),
    {
        let mut buf: Vec<u8> = prefix.to_vec();
        buf.extend((1..=self.n as u8).filter(|v| !prefix.contains(v)));
        let k = prefix.len();
        loop {
            visit(acc, &buf);
            if !next_permutation(&mut buf[k..]) {
                break;
            }
        }
    }

    /// Folds `visit` over every permutation of `S_n`.
    ///
    /// `merge(left, right)` must be associative; its arguments are always
    /// adjacent runs of blocks in enumeration order.
    pub fn fold<A, I, F, M>(&self, exec: Execution, init: I, visit: F, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync,
        F: Fn(&mut A, &[u8]) + Sync,
        M: Fn(A, A) -> A + Sync,
    {
        let prefixes = self.prefixes();
        let run = |p: &Vec<u8>| {
            let mut acc = init();
            self.run_block(p, &mut acc, &visit);
            acc
        };
        let merged = match exec {
            // Indexed reductions in rayon combine neighbours only, so the
            // result matches the sequential left fold for associative `merge`.
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                prefixes.par_iter().map(run).reduce_with(&merge)
            }
            _ => prefixes.iter().map(run).reduce(&merge),
        };
        merged.unwrap_or_else(init)
    }
}

/// Runs `f` on a dedicated pool of `jobs` threads (no-op without rayon).
pub fn with_threads<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
        {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}
