//! Round-structured execution with exact work/depth counters.
//!
//! A round's depth is one plus the deepest nested computation of any of its
//! tasks, so counters depend only on the program's structure and never on
//! the backend or on scheduling.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const BACKEND_ENV: &str = "SSSP_BACKEND";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    #[default]
    Sequential,
    Parallel,
}

impl Backend {
    pub fn parse(s: &str) -> Option<Backend> {
        match s {
            "seq" | "sequential" => Some(Backend::Sequential),
            "par" | "parallel" => Some(Backend::Parallel),
            _ => None,
        }
    }

    /// Reads `SSSP_BACKEND`; anything unrecognized means sequential.
    pub fn from_env() -> Backend {
        std::env::var(BACKEND_ENV).ok().and_then(|v| Backend::parse(&v)).unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Counters {
    pub work: u64,
    pub depth: u64,
}

impl std::ops::Sub for Counters {
    type Output = Counters;
    fn sub(self, o: Counters) -> Counters {
        Counters { work: self.work - o.work, depth: self.depth - o.depth }
    }
}

/// Observes top-level rounds. Parametric search uses it to batch the
/// comparisons a round raises and then replay the round.
pub trait RoundHook: Send + Sync {
    fn begin_round(&self);
    /// True if the round has to be executed again.
    fn end_round(&self) -> bool;
}

pub fn ceil_log2(x: u64) -> u64 {
    if x <= 1 {
        0
    } else {
        64 - u64::from((x - 1).leading_zeros())
    }
}

pub struct Runtime {
    backend: Backend,
    counters: Counters,
    hook: Option<Arc<dyn RoundHook>>,
}

impl Default for Runtime {
    fn default() -> Self {
        Runtime::new(Backend::Sequential)
    }
}

impl Runtime {
    pub fn new(backend: Backend) -> Runtime {
        Runtime { backend, counters: Counters::default(), hook: None }
    }

    pub fn from_env() -> Runtime {
        Runtime::new(Backend::from_env())
    }

    pub fn with_hook(mut self, hook: Arc<dyn RoundHook>) -> Runtime {
        self.hook = Some(hook);
        self
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn counters(&self) -> Counters {
        self.counters
    }

    fn child(&self) -> Runtime {
        Runtime::new(self.backend)
    }

    pub fn charge(&mut self, work: u64) {
        self.counters.work += work;
    }

    /// Charges a batch of `k` ordered-map operations on a map with `size`
    /// keys and returns the number of tree nodes the batch is modelled to touch.
    pub fn charge_batch(&mut self, k: usize, size: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        let touched = k as u64 * ceil_log2(size as u64 + 1).max(1);
        self.counters.work += touched;
        self.counters.depth += 1 + ceil_log2(k as u64);
        touched
    }

    /// One parallel round. Each task gets its own child runtime for nested
    /// rounds; the round costs `|items|` work plus the tasks' work, and one
    /// depth unit plus the deepest task.
    pub fn par_map<T, R, F>(&mut self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&mut Runtime, &T) -> R + Sync,
    {
        if items.is_empty() {
            return Vec::new();
        }
        loop {
            if let Some(h) = &self.hook {
                h.begin_round();
            }
            let results = self.run_tasks(items, &f);
            let mut out = Vec::with_capacity(items.len());
            let mut work = items.len() as u64;
            let mut deepest = 0;
            let mut panic = None;
            for r in results {
                match r {
                    Ok((value, c)) => {
                        work += c.work;
                        deepest = deepest.max(c.depth);
                        out.push(value);
                    }
                    Err(p) => {
                        panic.get_or_insert(p);
                    }
                }
            }
            if let Some(p) = panic {
                resume_unwind(p);
            }
            if let Some(h) = &self.hook {
                if h.end_round() {
                    continue;
                }
            }
            self.counters.work += work;
            self.counters.depth += 1 + deepest;
            return out;
        }
    }

    #[allow(clippy::type_complexity)]
    fn run_tasks<T, R, F>(&self, items: &[T], f: &F) -> Vec<std::thread::Result<(R, Counters)>>
    where
        T: Sync,
        R: Send,
        F: Fn(&mut Runtime, &T) -> R + Sync,
    {
        let task = |item: &T| {
            catch_unwind(AssertUnwindSafe(|| {
                let mut c = self.child();
                let r = f(&mut c, item);
                (r, c.counters)
            }))
        };
        match self.backend {
            Backend::Sequential => items.iter().map(task).collect(),
            Backend::Parallel => items.par_iter().map(task).collect(),
        }
    }

    /// Balanced pairwise reduction; the grouping is fixed, so the result does
    /// not depend on the backend even for non-commutative `op`.
    pub fn par_reduce<T, F>(&mut self, items: Vec<T>, op: F) -> Result<T>
    where
        F: Fn(T, T) -> T,
    {
        if items.is_empty() {
            return Err(Error::EmptyReduce);
        }
        let n = items.len() as u64;
        let mut level = items;
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(2));
            let mut it = level.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(op(a, b)),
                    None => next.push(a),
                }
            }
            level = next;
        }
        self.counters.work += n;
        self.counters.depth += ceil_log2(n);
        Ok(level.pop().expect("non-empty"))
    }
}
