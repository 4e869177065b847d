//! Utility-lists: the vertical representation the miner works on.
//!
//! The utility-list of an itemset X holds one element per transaction
//! containing X: the transaction id, the utility X earns there (`iu`), and
//! the *remaining utility* (`ru`) — the utility contributed by the promising
//! items of that transaction that come after X's last item in the processing
//! order. `sum(iu)` is the exact utility of X; `sum(iu) + sum(ru)` bounds
//! the utility of every extension of X, which is what makes depth-first
//! search with early pruning possible.
//!
//! Lists for (k+1)-itemsets are built purely from k-itemset lists by merging
//! on transaction id; the database is never touched again after the initial
//! single-item lists are built.

use std::fmt;

use crate::data::{ItemId, QuantitativeDatabase};
use crate::error::Error;
use crate::index::ItemIndex;
use crate::{Currency, Tid};

/// One transaction's contribution to an itemset's utility-list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UlistElement {
    pub tid: Tid,
    /// Utility of the itemset in this transaction.
    pub iu: Currency,
    /// Summed utility of the promising items ordered after the itemset's
    /// last item in this transaction.
    pub ru: Currency,
}

/// The utility-list of one itemset, with its two aggregate sums cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtilityList {
    /// The itemset, in processing order (extensions append at the back).
    itemset: Vec<ItemId>,
    /// Elements in strictly ascending tid order.
    elements: Vec<UlistElement>,
    sum_iutils: Currency,
    sum_rutils: Currency,
}

impl UtilityList {
    pub fn new(itemset: Vec<ItemId>, elements: Vec<UlistElement>) -> Self {
        debug_assert!(!itemset.is_empty(), "utility-lists describe non-empty itemsets");
        debug_assert!(
            elements.windows(2).all(|w| w[0].tid < w[1].tid),
            "elements must be sorted by strictly ascending tid"
        );
        let sum_iutils = elements.iter().map(|e| e.iu).sum();
        let sum_rutils = elements.iter().map(|e| e.ru).sum();
        UtilityList {
            itemset,
            elements,
            sum_iutils,
            sum_rutils,
        }
    }

    pub fn itemset(&self) -> &[ItemId] {
        &self.itemset
    }

    /// Last item of the itemset in processing order — the item whose serial
    /// number drives target matching for this list.
    pub fn last_item(&self) -> ItemId {
        *self.itemset.last().expect("itemset is never empty")
    }

    pub fn elements(&self) -> &[UlistElement] {
        &self.elements
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    /// Exact utility of the itemset.
    pub fn sum_iutils(&self) -> Currency {
        self.sum_iutils
    }

    /// Summed remaining utility over all containing transactions.
    pub fn sum_rutils(&self) -> Currency {
        self.sum_rutils
    }

    /// Upper bound on the utility of this itemset and all its extensions.
    pub fn remaining_bound(&self) -> Currency {
        self.sum_iutils + self.sum_rutils
    }
}

/// Debug dump: the itemset on the first line, then one `tid iu ru` line per
/// element. Stable, whitespace-exact; golden tests rely on it.
impl fmt::Display for UtilityList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for item in &self.itemset {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{item}")?;
            first = false;
        }
        writeln!(f)?;
        for e in &self.elements {
            writeln!(f, "{} {} {}", e.tid, e.iu, e.ru)?;
        }
        Ok(())
    }
}

/// Builds the single-item utility-lists for every promising item, returned
/// in processing order (index i holds the item with serial i+1).
///
/// This is the second and final pass over the database: each transaction is
/// filtered to its promising items, sorted by serial, and swept once from
/// the back so each entry's `ru` is the utility of the entries after it.
pub fn build_initial_ulists(db: &QuantitativeDatabase, index: &ItemIndex) -> Vec<UtilityList> {
    let mut per_item: Vec<Vec<UlistElement>> = vec![Vec::new(); index.promising_count()];
    let mut row: Vec<(u32, Currency)> = Vec::new();
    for t in db.transactions() {
        row.clear();
        row.extend(
            t.entries()
                .iter()
                .filter_map(|e| index.serial(e.item).map(|sn| (sn, e.utility))),
        );
        row.sort_unstable_by_key(|&(sn, _)| sn);
        let mut ru: Currency = 0;
        for &(sn, iu) in row.iter().rev() {
            per_item[(sn - 1) as usize].push(UlistElement {
                tid: t.tid(),
                iu,
                ru,
            });
            ru += iu;
        }
    }
    index
        .promising()
        .iter()
        .zip(per_item)
        .map(|(&item, mut elements)| {
            // Transactions were visited in ascending tid order, but each
            // pushed its entries back-to-front; per item the tids are still
            // ascending because each transaction contributes at most one.
            debug_assert!(elements.windows(2).all(|w| w[0].tid < w[1].tid));
            elements.shrink_to_fit();
            UtilityList::new(vec![item], elements)
        })
        .collect()
}

/// Joins the utility-lists of two sibling itemsets Px and Py (same prefix P,
/// last items x before y in processing order) into the list of Pxy.
///
/// `prefix` is P's own list, required whenever the shared prefix is
/// non-empty (k ≥ 2) so the doubly counted prefix utility can be subtracted;
/// pass `None` when joining two single-item lists.
///
/// Elements are merged with one linear sweep over both lists (tids are
/// sorted). For a transaction in both lists, `iu = iu(Px) + iu(Py) − iu(P)`
/// and `ru` is taken from the Py side, because y is now the last item.
pub fn construct(
    prefix: Option<&UtilityList>,
    px: &UtilityList,
    py: &UtilityList,
) -> Result<UtilityList, Error> {
    let k = px.itemset().len();
    let siblings = k >= 1
        && py.itemset().len() == k
        && px.itemset()[..k - 1] == py.itemset()[..k - 1]
        && px.itemset()[k - 1] != py.itemset()[k - 1];
    let prefix_fits = match prefix {
        Some(p) => p.itemset() == &px.itemset()[..k - 1],
        None => k == 1,
    };
    if !siblings || !prefix_fits {
        return Err(Error::JoinPrefixMismatch {
            left: render_itemset(px.itemset()),
            right: render_itemset(py.itemset()),
        });
    }

    let xs = px.elements();
    let ys = py.elements();
    let ps = prefix.map(|p| p.elements()).unwrap_or(&[]);
    let mut elements = Vec::with_capacity(xs.len().min(ys.len()));
    let (mut i, mut j, mut pi) = (0, 0, 0);
    while i < xs.len() && j < ys.len() {
        let (ex, ey) = (xs[i], ys[j]);
        if ex.tid < ey.tid {
            i += 1;
        } else if ey.tid < ex.tid {
            j += 1;
        } else {
            let mut iu = ex.iu + ey.iu;
            if prefix.is_some() {
                // A transaction containing Px also contains P, so P's list
                // must hold this tid; anything else means the inputs were
                // not built by this module's construction.
                while pi < ps.len() && ps[pi].tid < ex.tid {
                    pi += 1;
                }
                if pi >= ps.len() || ps[pi].tid != ex.tid {
                    return Err(Error::CorruptedPrefixList { tid: ex.tid });
                }
                iu = iu
                    .checked_sub(ps[pi].iu)
                    .ok_or(Error::CorruptedPrefixList { tid: ex.tid })?;
            }
            elements.push(UlistElement {
                tid: ex.tid,
                iu,
                ru: ey.ru,
            });
            i += 1;
            j += 1;
        }
    }

    let mut itemset = px.itemset().to_vec();
    itemset.push(py.last_item());
    Ok(UtilityList::new(itemset, elements))
}

fn render_itemset(itemset: &[ItemId]) -> String {
    itemset
        .iter()
        .map(|x| x.get().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
