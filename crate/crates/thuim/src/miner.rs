//! The targeted depth-first miner.
//!
//! Search proceeds over utility-lists: every promising item starts a
//! single-item list, and each list is extended by joining it with the
//! sibling lists that come after it in processing order. Two rules prune:
//!
//! 1. **Remaining-utility bound** — a list whose `sum(iu) + sum(ru)` falls
//!    below the threshold cannot grow into a high-utility itemset, so no
//!    extensions are built from it.
//! 2. **Target matching** — target items are matched by serial number with
//!    a cursor. Extensions are visited in ascending serial order, so an
//!    extension whose serial exceeds the next unmatched target item can
//!    never be repaired by a later sibling (their serials are larger
//!    still): the whole sibling group is abandoned.
//!
//! An itemset is reported when its exact utility reaches the threshold and
//! the cursor has matched the entire target.

use std::time::{Duration, Instant};

use crate::data::{ItemId, QuantitativeDatabase};
use crate::index::{ItemIndex, ProcessingOrder, TargetPattern};
use crate::ulist::{build_initial_ulists, construct, UtilityList};
use crate::Currency;

/// Progress of target matching along one search path: how many of the
/// target's items (in serial order) the path has already picked up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchCursor {
    matched: usize,
}

impl MatchCursor {
    /// Cursor before anything has matched.
    pub fn start() -> Self {
        MatchCursor { matched: 0 }
    }

    pub fn matched(self) -> usize {
        self.matched
    }

    /// True once every target item has been matched on this path.
    pub fn is_complete(self, target: &TargetPattern) -> bool {
        self.matched >= target.len()
    }
}

/// Outcome of checking one extension item against the match cursor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchDecision {
    /// The extension is the next wanted target item; continue with the
    /// advanced cursor.
    Advance(MatchCursor),
    /// The extension precedes the next wanted target item; the target can
    /// still be completed further down, cursor unchanged.
    Keep,
    /// The extension is ordered past the next wanted target item. Neither
    /// this extension nor any later sibling (all with larger serials) can
    /// complete the target: abandon the whole sibling group.
    Prune,
}

/// Decides how `item` relates to the next unmatched target item. `item`
/// must be promising — extensions always are.
pub fn match_step(
    item: ItemId,
    cursor: MatchCursor,
    target: &TargetPattern,
    index: &ItemIndex,
) -> MatchDecision {
    let Some(&wanted) = target.serials().get(cursor.matched) else {
        // Target exhausted: every further extension trivially matches.
        return MatchDecision::Keep;
    };
    let serial = index
        .serial(item)
        .expect("extension items are always promising");
    match serial.cmp(&wanted) {
        std::cmp::Ordering::Equal => MatchDecision::Advance(MatchCursor {
            matched: cursor.matched + 1,
        }),
        std::cmp::Ordering::Less => MatchDecision::Keep,
        std::cmp::Ordering::Greater => MatchDecision::Prune,
    }
}

/// Everything a finished mining run reports.
#[derive(Debug, Clone)]
pub struct MiningOutcome {
    /// Reported itemsets with their exact utilities, in discovery order
    /// (depth-first, extensions in processing order). Each itemset is in
    /// processing order; see [`crate::report`] for canonical rendering.
    pub results: Vec<(Vec<ItemId>, Currency)>,
    /// Number of utility-lists built: one per promising item plus one per
    /// join. The standard work measure for this search style.
    pub candidates: u64,
    /// Largest number of utility-list elements alive at once, counting the
    /// initial lists and every not-yet-dropped join product.
    pub peak_elements: u64,
    /// Wall-clock time for the whole run, including both database scans.
    pub elapsed: Duration,
}

/// Mines with the default (TWU-ascending) processing order.
pub fn mine(db: &QuantitativeDatabase, min_util: Currency, target: &[ItemId]) -> MiningOutcome {
    mine_with_order(db, min_util, target, ProcessingOrder::default())
}

/// Mines every itemset whose utility reaches `min_util` and which contains
/// all of `target` (deduplicated; empty target mines all high-utility
/// itemsets).
///
/// If some target item is unknown or unpromising, no superset of the target
/// can reach the threshold, and the run finishes immediately with no
/// candidates.
pub fn mine_with_order(
    db: &QuantitativeDatabase,
    min_util: Currency,
    target: &[ItemId],
    order: ProcessingOrder,
) -> MiningOutcome {
    let start = Instant::now();
    let index = ItemIndex::build_with_order(db, min_util, order);
    let mut results = Vec::new();
    let mut stats = SearchStats::default();

    if let Some(target) = index.validate_target(target) {
        let initial = build_initial_ulists(db, &index);
        stats.candidates = initial.len() as u64;
        stats.live_elements = initial.iter().map(|l| l.element_count() as u64).sum();
        stats.peak_elements = stats.live_elements;
        let ctx = Ctx {
            min_util,
            target,
            index: &index,
        };
        search(
            &ctx,
            None,
            &initial,
            MatchCursor::start(),
            &mut results,
            &mut stats,
        );
    }

    MiningOutcome {
        results,
        candidates: stats.candidates,
        peak_elements: stats.peak_elements,
        elapsed: start.elapsed(),
    }
}

struct Ctx<'a> {
    min_util: Currency,
    target: TargetPattern,
    index: &'a ItemIndex,
}

#[derive(Default)]
struct SearchStats {
    candidates: u64,
    live_elements: u64,
    peak_elements: u64,
}

/// One depth-first layer: visits each extension of `prefix` in processing
/// order, reports it if it qualifies, and recurses into its own extensions.
fn search(
    ctx: &Ctx<'_>,
    prefix: Option<&UtilityList>,
    extensions: &[UtilityList],
    cursor: MatchCursor,
    out: &mut Vec<(Vec<ItemId>, Currency)>,
    stats: &mut SearchStats,
) {
    for (i, x) in extensions.iter().enumerate() {
        let cursor_here = match match_step(x.last_item(), cursor, &ctx.target, ctx.index) {
            MatchDecision::Prune => break,
            MatchDecision::Advance(c) => c,
            MatchDecision::Keep => cursor,
        };

        if x.sum_iutils() >= ctx.min_util && cursor_here.is_complete(&ctx.target) {
            out.push((x.itemset().to_vec(), x.sum_iutils()));
        }

        // Remaining-utility bound: only a list that could still reach the
        // threshold spawns extensions.
        if x.remaining_bound() >= ctx.min_util && i + 1 < extensions.len() {
            let children: Vec<UtilityList> = extensions[i + 1..]
                .iter()
                .map(|y| {
                    construct(prefix, x, y)
                        .expect("later siblings share x's prefix by construction")
                })
                .collect();
            stats.candidates += children.len() as u64;
            let added: u64 = children.iter().map(|c| c.element_count() as u64).sum();
            stats.live_elements += added;
            stats.peak_elements = stats.peak_elements.max(stats.live_elements);
            search(ctx, Some(x), &children, cursor_here, out, stats);
            stats.live_elements -= added;
        }
    }
}
