use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use super::element::Element;
use super::handle::Group;
use super::subset::FiniteSubset;
use crate::error::{Error, Result};

/// Admission schedule for an [`Exhaustion`].
///
/// `F_0` symmetrizes `g_1..g_head`; afterwards, every `stride` levels, the
/// next `batch` enumerated elements are symmetrized into the level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub head: usize,
    pub batch: usize,
    pub stride: usize,
}

impl Default for Schedule {
    fn default() -> Self {
        Self {
            head: 1,
            batch: 1,
            stride: 1,
        }
    }
}

impl Schedule {
    /// `head = batch`.
    pub fn new(batch: usize, stride: usize) -> Result<Self> {
        Self::with_head(batch, batch, stride)
    }

    pub fn with_head(head: usize, batch: usize, stride: usize) -> Result<Self> {
        if head == 0 || batch == 0 || stride == 0 {
            return Err(Error::Usage("head, batch and stride must be positive".into()));
        }
        Ok(Self { head, batch, stride })
    }

    /// Enumeration indices admitted at level `n`.
    pub fn admitted(&self, n: usize) -> std::ops::Range<usize> {
        if n == 0 {
            return 1..1 + self.head;
        }
        if n % self.stride != 0 {
            return 0..0;
        }
        let start = 1 + self.head + self.batch * (n / self.stride - 1);
        start..start + self.batch
    }

    /// The level at which `g_k` is admitted directly.
    pub fn admission_level(&self, k: usize) -> usize {
        if k <= self.head {
            0
        } else {
            ((k - 1 - self.head) / self.batch + 1) * self.stride
        }
    }
}

/// Default bound on `|F_n|^2` when building `F_{n+1}`.
pub const DEFAULT_PRODUCT_BUDGET: u64 = 20_000_000;

/// The chain `F_0 ⊆ F_1 ⊆ ...` with `e ∈ F_n = F_n^{-1}` and
/// `F_n F_n ⊆ F_{n+1}`, built lazily and memoized.
#[derive(Debug)]
pub struct Exhaustion {
    group: Arc<Group>,
    schedule: Schedule,
    product_budget: u64,
    levels: RwLock<Vec<Arc<FiniteSubset>>>,
}

impl Exhaustion {
    pub fn new(group: Arc<Group>, schedule: Schedule) -> Self {
        Self::with_budget(group, schedule, DEFAULT_PRODUCT_BUDGET)
    }

    pub fn with_budget(group: Arc<Group>, schedule: Schedule, product_budget: u64) -> Self {
        Self {
            group,
            schedule,
            product_budget,
            levels: RwLock::new(Vec::new()),
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn schedule(&self) -> Schedule {
        self.schedule
    }

    fn admitted(&self, n: usize) -> FiniteSubset {
        let range = self.schedule.admitted(n);
        range
            .map(|k| self.group.enumerate(k))
            .collect::<FiniteSubset>()
            .symmetrize(&self.group)
    }

    /// `F_n`, or a budget error naming the sizes reached so far.
    pub fn level(&self, n: usize) -> Result<Arc<FiniteSubset>> {
        if let Some(level) = self.levels.read().expect("levels lock").get(n) {
            return Ok(level.clone());
        }
        let mut levels = self.levels.write().expect("levels lock");
        while levels.len() <= n {
            let next = match levels.last() {
                None => self.admitted(0),
                Some(prev) => {
                    let cost = (prev.len() as u64).saturating_mul(prev.len() as u64);
                    if cost > self.product_budget {
                        let sizes: Vec<String> = levels.iter().map(|l| l.len().to_string()).collect();
                        return Err(Error::Budget {
                            what: format!(
                                "F_{} of {} needs |F_{}|^2 products; level sizes so far [{}]",
                                levels.len(),
                                self.group.id(),
                                levels.len() - 1,
                                sizes.join(", ")
                            ),
                            limit: self.product_budget,
                            reached: cost,
                        });
                    }
                    prev.product(&self.group, prev).union(&self.admitted(levels.len()))
                }
            };
            levels.push(Arc::new(next));
        }
        Ok(levels[n].clone())
    }

    /// Sizes of the levels built so far.
    pub fn built_sizes(&self) -> Vec<usize> {
        self.levels.read().expect("levels lock").iter().map(|l| l.len()).collect()
    }

    /// Smallest `n ≤ max_level` with `g ∈ F_n`.
    pub fn first_level_containing(&self, g: &Element, max_level: usize) -> Result<Option<usize>> {
        for n in 0..=max_level {
            if self.level(n)?.contains(g) {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }
}
