//! Independent reference implementations the miner is verified against.
//!
//! Two oracles, deliberately sharing no code with the miner:
//!
//! * [`brute_force_thuis`] enumerates every subset of the occurring items
//!   with bitmasks and computes utilities straight from the transactions —
//!   no TWU, no pruning, no utility-lists.
//! * [`mine_then_filter`] runs the miner with an *empty* target and keeps
//!   the supersets of the target afterwards. Same answers as targeted
//!   mining, typically more work — the baseline targeted search is measured
//!   against.
//!
//! [`random_instance`] draws the small random databases used to fuzz all
//! three against each other.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::data::{ItemId, QuantitativeDatabase};
use crate::error::Error;
use crate::index::ProcessingOrder;
use crate::miner::{self, MiningOutcome};
use crate::Currency;

/// Exhaustive enumeration is refused above this many distinct items.
pub const BRUTE_FORCE_ITEM_LIMIT: usize = 20;

/// Every itemset with utility ≥ `min_util` containing all of `target`, by
/// exhaustive enumeration. Itemsets come out with ids ascending but the list
/// unsorted; run it through [`crate::report::canonical_results`] to compare.
///
/// Fails with [`Error::TooManyItems`] beyond [`BRUTE_FORCE_ITEM_LIMIT`]
/// distinct items (2^n subsets). A target item that occurs nowhere yields an
/// empty result.
pub fn brute_force_thuis(
    db: &QuantitativeDatabase,
    min_util: Currency,
    target: &[ItemId],
) -> Result<Vec<(Vec<ItemId>, Currency)>, Error> {
    let items: Vec<ItemId> = db.items().collect();
    let n = items.len();
    if n > BRUTE_FORCE_ITEM_LIMIT {
        return Err(Error::TooManyItems {
            count: n,
            limit: BRUTE_FORCE_ITEM_LIMIT,
        });
    }

    let mut target_mask: u32 = 0;
    for item in target {
        match items.binary_search(item) {
            Ok(pos) => target_mask |= 1 << pos,
            // A target item that never occurs is contained in no itemset.
            Err(_) => return Ok(Vec::new()),
        }
    }

    // Dense per-transaction views: membership mask + utility per item slot.
    let rows: Vec<(u32, Vec<Currency>)> = db
        .transactions()
        .iter()
        .map(|t| {
            let mut mask: u32 = 0;
            let mut utilities = vec![0; n];
            for e in t.entries() {
                let pos = items.binary_search(&e.item).expect("item is in the index");
                mask |= 1 << pos;
                utilities[pos] = e.utility;
            }
            (mask, utilities)
        })
        .collect();

    let mut out = Vec::new();
    for subset in 1u32..(1u32 << n) {
        if subset & target_mask != target_mask {
            continue;
        }
        let mut utility: Currency = 0;
        for (mask, utilities) in &rows {
            if mask & subset == subset {
                let mut bits = subset;
                while bits != 0 {
                    utility += utilities[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
            }
        }
        if utility >= min_util {
            let itemset: Vec<ItemId> = (0..n)
                .filter(|pos| subset & (1 << pos) != 0)
                .map(|pos| items[pos])
                .collect();
            out.push((itemset, utility));
        }
    }
    Ok(out)
}

/// The unpruned baseline: mine *all* high-utility itemsets, then keep the
/// supersets of `target`. `candidates` and `peak_elements` describe the full
/// untargeted run — that is the point of the baseline.
pub fn mine_then_filter(
    db: &QuantitativeDatabase,
    min_util: Currency,
    target: &[ItemId],
) -> MiningOutcome {
    mine_then_filter_with_order(db, min_util, target, ProcessingOrder::default())
}

pub fn mine_then_filter_with_order(
    db: &QuantitativeDatabase,
    min_util: Currency,
    target: &[ItemId],
    order: ProcessingOrder,
) -> MiningOutcome {
    let mut full = miner::mine_with_order(db, min_util, &[], order);
    let wanted: BTreeSet<ItemId> = target.iter().copied().collect();
    full.results
        .retain(|(itemset, _)| wanted.iter().all(|t| itemset.contains(t)));
    full
}

/// Draws one small random mining instance: a database of 4–12 items and
/// 5–30 transactions with quantities and unit profits in 1–9, a threshold
/// between zero and 30% of the total utility, and a target of up to three
/// occurring items. Deterministic in `seed`.
pub fn random_instance(seed: u64) -> (QuantitativeDatabase, Currency, Vec<ItemId>) {
    let mut rng = StdRng::seed_from_u64(seed);
    let n_items: u32 = rng.random_range(4..=12);
    let n_transactions: usize = rng.random_range(5..=30);
    let profits: Vec<Currency> = (0..n_items).map(|_| rng.random_range(1..=9)).collect();

    let mut rows = Vec::with_capacity(n_transactions);
    for _ in 0..n_transactions {
        let len = rng.random_range(1..=n_items as usize);
        let chosen = rand::seq::index::sample(&mut rng, n_items as usize, len);
        let mut row: Vec<(ItemId, Currency)> = chosen
            .into_iter()
            .map(|idx| {
                let quantity: Currency = rng.random_range(1..=9);
                (ItemId::new(idx as u32 + 1), quantity * profits[idx])
            })
            .collect();
        row.sort_unstable_by_key(|&(item, _)| item);
        rows.push(row);
    }
    let db = QuantitativeDatabase::from_transactions(rows).expect("generated rows are valid");

    let min_util = (rng.random_range(0.0..=0.3) * db.total_utility() as f64).round() as Currency;

    let occurring: Vec<ItemId> = db.items().collect();
    let target_len = rng.random_range(0..=3usize).min(occurring.len());
    let target: Vec<ItemId> = rand::seq::index::sample(&mut rng, occurring.len(), target_len)
        .into_iter()
        .map(|i| occurring[i])
        .collect();

    (db, min_util, target)
}
