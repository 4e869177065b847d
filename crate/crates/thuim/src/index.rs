//! Item statistics and ordering: transaction-weighted utility, the
//! processing order, and serial numbers for target matching.
//!
//! The transaction-weighted utility (TWU) of an item is the sum of the
//! transaction utilities of every transaction containing it. It upper-bounds
//! the utility of every itemset the item participates in and is
//! anti-monotone, so items whose TWU falls below the threshold — the
//! *unpromising* items — can be discarded before any list is built.
//!
//! The remaining *promising* items are arranged in the processing order and
//! numbered 1..=P; these positions are the **serial numbers**. Because the
//! miner generates extensions in processing order, serial numbers let target
//! containment be checked with a single cursor: an extension item is either
//! the next wanted target item (advance), before it (keep), or past it
//! (prune the whole sibling group).

use std::cmp::Reverse;
use std::collections::HashMap;

use crate::data::{ItemId, QuantitativeDatabase};
use crate::Currency;

/// Sum of `tu(T)` over all transactions containing each occurring item.
pub fn compute_twu(db: &QuantitativeDatabase) -> HashMap<ItemId, Currency> {
    let mut twu: HashMap<ItemId, Currency> = HashMap::new();
    for t in db.transactions() {
        for e in t.entries() {
            *twu.entry(e.item).or_insert(0) += t.tu();
        }
    }
    twu
}

/// Total order in which items are processed and extensions generated.
///
/// Correctness of the miner does not depend on the choice; candidate counts
/// and runtime do. Ascending TWU (the default) processes low-impact items
/// first, which keeps remaining-utility bounds tight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProcessingOrder {
    /// Ascending TWU, ties broken by ascending item id.
    #[default]
    TwuAscending,
    /// Ascending item id.
    Lexicographic,
    /// Descending TWU, ties broken by ascending item id.
    TwuDescending,
}

impl ProcessingOrder {
    pub fn label(self) -> &'static str {
        match self {
            ProcessingOrder::TwuAscending => "twu-asc",
            ProcessingOrder::Lexicographic => "lexi",
            ProcessingOrder::TwuDescending => "twu-desc",
        }
    }
}

/// Per-database item index: TWU values, the processing order over all
/// occurring items, and serial numbers for the promising ones.
#[derive(Debug, Clone)]
pub struct ItemIndex {
    min_util: Currency,
    order: ProcessingOrder,
    twu: HashMap<ItemId, Currency>,
    /// All occurring items, sorted by the processing order.
    ordered: Vec<ItemId>,
    /// Promising items (TWU ≥ min_util), sorted by the processing order.
    promising: Vec<ItemId>,
    /// 1-based serial numbers, defined for promising items only.
    serial: HashMap<ItemId, u32>,
}

impl ItemIndex {
    pub fn build(db: &QuantitativeDatabase, min_util: Currency) -> Self {
        Self::build_with_order(db, min_util, ProcessingOrder::default())
    }

    pub fn build_with_order(
        db: &QuantitativeDatabase,
        min_util: Currency,
        order: ProcessingOrder,
    ) -> Self {
        let twu = compute_twu(db);
        let mut ordered: Vec<ItemId> = twu.keys().copied().collect();
        match order {
            ProcessingOrder::TwuAscending => ordered.sort_by_key(|x| (twu[x], x.get())),
            ProcessingOrder::Lexicographic => ordered.sort_by_key(|x| x.get()),
            ProcessingOrder::TwuDescending => {
                ordered.sort_by_key(|x| (Reverse(twu[x]), x.get()))
            }
        }
        let promising: Vec<ItemId> = ordered
            .iter()
            .copied()
            .filter(|x| twu[x] >= min_util)
            .collect();
        let serial = promising
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, (i + 1) as u32))
            .collect();
        ItemIndex {
            min_util,
            order,
            twu,
            ordered,
            promising,
            serial,
        }
    }

    pub fn min_util(&self) -> Currency {
        self.min_util
    }

    pub fn order(&self) -> ProcessingOrder {
        self.order
    }

    /// TWU of an item (0 for items that never occur).
    pub fn twu(&self, item: ItemId) -> Currency {
        self.twu.get(&item).copied().unwrap_or(0)
    }

    /// Serial number of a promising item; `None` for unpromising or unknown
    /// items.
    pub fn serial(&self, item: ItemId) -> Option<u32> {
        self.serial.get(&item).copied()
    }

    /// All occurring items in processing order.
    pub fn ordered_items(&self) -> &[ItemId] {
        &self.ordered
    }

    /// Promising items in processing order; index i holds serial i+1.
    pub fn promising(&self) -> &[ItemId] {
        &self.promising
    }

    pub fn promising_count(&self) -> usize {
        self.promising.len()
    }

    /// Validates a target pattern against this index.
    ///
    /// Returns the deduplicated target with its items arranged by serial
    /// number, or `None` when some target item has no serial number — i.e.
    /// is unknown or unpromising — in which case no itemset containing the
    /// target can reach the threshold and the search space is empty.
    pub fn validate_target(&self, target: &[ItemId]) -> Option<TargetPattern> {
        let mut pairs: Vec<(u32, ItemId)> = Vec::with_capacity(target.len());
        for &item in target {
            let sn = self.serial(item)?;
            if !pairs.iter().any(|&(s, _)| s == sn) {
                pairs.push((sn, item));
            }
        }
        pairs.sort_unstable();
        Some(TargetPattern {
            items: pairs.iter().map(|&(_, item)| item).collect(),
            serials: pairs.iter().map(|&(sn, _)| sn).collect(),
        })
    }
}

/// A validated target: items sorted by serial number, with the serials
/// alongside. Matching works on the serials; the items are kept for
/// reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetPattern {
    items: Vec<ItemId>,
    serials: Vec<u32>,
}

impl TargetPattern {
    /// The empty pattern, matched by every itemset.
    pub fn empty() -> Self {
        TargetPattern {
            items: Vec::new(),
            serials: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.serials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.serials.is_empty()
    }

    /// Target items in ascending serial order.
    pub fn items(&self) -> &[ItemId] {
        &self.items
    }

    /// Serial numbers in ascending order.
    pub fn serials(&self) -> &[u32] {
        &self.serials
    }
}
