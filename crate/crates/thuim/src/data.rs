//! Quantitative transaction databases: items with per-transaction utilities.
//!
//! The text format is one transaction per line,
//!
//! ```text
//! <item> <item> ... : <transaction utility> : <item utility> <item utility> ...
//! ```
//!
//! e.g. `2 4 5:14:6 3 5` — items 2, 4, 5 contributing utilities 6, 3, 5 for
//! a transaction utility of 14. Lines starting with `#`, `%`, or `@` are
//! comments; blank lines are skipped. Transaction ids are the 1-based
//! physical line numbers, so they survive round-trips through tools that
//! count lines.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, ParseErrorKind};
use crate::{Currency, Tid};

/// External item identifier as it appears in input data.
///
/// Items carry no intrinsic order of interest; the miner imposes its own
/// processing order. `Ord` on `ItemId` is plain numeric order, used for
/// canonical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ItemId(u32);

impl ItemId {
    pub fn new(id: u32) -> Self {
        ItemId(id)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl From<u32> for ItemId {
    fn from(id: u32) -> Self {
        ItemId(id)
    }
}

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One item occurrence inside a transaction, with the utility it contributes
/// there (for retail data: purchase quantity × unit profit, already
/// multiplied out).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub item: ItemId,
    pub utility: Currency,
}

/// A single transaction: a set of entries plus the cached transaction
/// utility (sum of the entry utilities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction {
    tid: Tid,
    entries: Vec<Entry>,
    tu: Currency,
}

impl Transaction {
    /// 1-based position of this transaction in its database.
    pub fn tid(&self) -> Tid {
        self.tid
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Transaction utility: the sum of all entry utilities.
    pub fn tu(&self) -> Currency {
        self.tu
    }

    /// Utility of `item` in this transaction, or `None` when absent.
    pub fn utility_of(&self, item: ItemId) -> Option<Currency> {
        self.entries
            .iter()
            .find(|e| e.item == item)
            .map(|e| e.utility)
    }

    pub fn contains(&self, item: ItemId) -> bool {
        self.entries.iter().any(|e| e.item == item)
    }
}

/// An in-memory quantitative transaction database.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantitativeDatabase {
    transactions: Vec<Transaction>,
    items: BTreeSet<ItemId>,
    total_utility: Currency,
}

impl QuantitativeDatabase {
    /// Parses the text format described in the module docs.
    ///
    /// Errors carry the 1-based physical line number. The declared
    /// transaction utility of every line is checked against the sum of its
    /// item utilities; a mismatch is rejected rather than silently patched.
    pub fn parse_database(text: &str) -> Result<Self, Error> {
        let mut transactions = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with(['#', '%', '@']) {
                continue;
            }
            let parse = |kind| Error::Parse {
                line: line_no,
                kind,
            };

            let sections: Vec<&str> = line.split(':').collect();
            if sections.len() != 3 {
                return Err(parse(ParseErrorKind::SectionCount {
                    found: sections.len(),
                }));
            }

            let items = parse_numbers::<u32>(sections[0], line_no)?;
            if items.is_empty() {
                return Err(parse(ParseErrorKind::EmptyTransaction));
            }
            let declared: Currency = parse_single(sections[1], line_no)?;
            let utilities = parse_numbers::<Currency>(sections[2], line_no)?;
            if items.len() != utilities.len() {
                return Err(parse(ParseErrorKind::CountMismatch {
                    items: items.len(),
                    utilities: utilities.len(),
                }));
            }

            let mut seen = BTreeSet::new();
            let mut computed: Currency = 0;
            let mut entries = Vec::with_capacity(items.len());
            for (&item, &utility) in items.iter().zip(&utilities) {
                if !seen.insert(item) {
                    return Err(parse(ParseErrorKind::DuplicateItem(item)));
                }
                if utility == 0 {
                    return Err(parse(ParseErrorKind::NonPositiveUtility));
                }
                computed = computed
                    .checked_add(utility)
                    .ok_or_else(|| parse(ParseErrorKind::UtilityOverflow))?;
                entries.push(Entry {
                    item: ItemId::new(item),
                    utility,
                });
            }
            if computed != declared {
                return Err(parse(ParseErrorKind::TransactionUtilityMismatch {
                    declared,
                    computed,
                }));
            }

            transactions.push(Transaction {
                tid: line_no as Tid,
                entries,
                tu: computed,
            });
        }
        Ok(Self::assemble(transactions))
    }

    /// Builds a database from `(item, utility)` rows, assigning 1-based
    /// transaction ids in order. Rows must be non-empty, duplicate-free, and
    /// carry positive utilities.
    pub fn from_transactions(rows: Vec<Vec<(ItemId, Currency)>>) -> Result<Self, Error> {
        let mut transactions = Vec::with_capacity(rows.len());
        for (idx, row) in rows.into_iter().enumerate() {
            let tid = (idx + 1) as Tid;
            let invalid = |reason: &str| Error::InvalidTransaction {
                tid,
                reason: reason.to_string(),
            };
            if row.is_empty() {
                return Err(invalid("transaction contains no items"));
            }
            let mut seen = BTreeSet::new();
            let mut tu: Currency = 0;
            let mut entries = Vec::with_capacity(row.len());
            for (item, utility) in row {
                if !seen.insert(item) {
                    return Err(invalid("duplicate item"));
                }
                if utility == 0 {
                    return Err(invalid("item utilities must be positive"));
                }
                tu = tu
                    .checked_add(utility)
                    .ok_or_else(|| invalid("utility sum overflows"))?;
                entries.push(Entry { item, utility });
            }
            transactions.push(Transaction { tid, entries, tu });
        }
        Ok(Self::assemble(transactions))
    }

    fn assemble(transactions: Vec<Transaction>) -> Self {
        let mut items = BTreeSet::new();
        let mut total_utility: Currency = 0;
        for t in &transactions {
            total_utility += t.tu;
            for e in &t.entries {
                items.insert(e.item);
            }
        }
        QuantitativeDatabase {
            transactions,
            items,
            total_utility,
        }
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    /// A database restricted to the first `n` transactions (ids preserved).
    pub fn prefix(&self, n: usize) -> QuantitativeDatabase {
        Self::assemble(self.transactions.iter().take(n).cloned().collect())
    }

    /// All distinct items that occur at least once, in ascending id order.
    pub fn items(&self) -> impl Iterator<Item = ItemId> + '_ {
        self.items.iter().copied()
    }

    pub fn item_count(&self) -> usize {
        self.items.len()
    }

    pub fn contains_item(&self, item: ItemId) -> bool {
        self.items.contains(&item)
    }

    /// Sum of all transaction utilities.
    pub fn total_utility(&self) -> Currency {
        self.total_utility
    }

    /// Utility of `itemset` by direct definition: the sum, over every
    /// transaction containing all of `itemset`, of the utilities its items
    /// contribute there. Duplicates in `itemset` are ignored.
    ///
    /// This is the ground truth the miner is tested against; it scans the
    /// whole database on every call.
    pub fn itemset_utility(&self, itemset: &[ItemId]) -> Result<Currency, Error> {
        let set: BTreeSet<ItemId> = itemset.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::EmptyItemset);
        }
        for &item in &set {
            if !self.items.contains(&item) {
                return Err(Error::UnknownItem(item.get()));
            }
        }
        let mut total: Currency = 0;
        'transactions: for t in &self.transactions {
            let mut in_t: Currency = 0;
            for &item in &set {
                match t.utility_of(item) {
                    Some(u) => in_t += u,
                    None => continue 'transactions,
                }
            }
            total += in_t;
        }
        Ok(total)
    }

    /// Renders the database in its text format (no comments, one line per
    /// transaction, trailing newline). Parsing the output reproduces the
    /// database up to transaction ids, which are renumbered consecutively.
    pub fn to_format_string(&self) -> String {
        let mut out = String::new();
        for t in &self.transactions {
            let mut first = true;
            for e in &t.entries {
                if !first {
                    out.push(' ');
                }
                out.push_str(&e.item.get().to_string());
                first = false;
            }
            out.push(':');
            out.push_str(&t.tu.to_string());
            out.push(':');
            first = true;
            for e in &t.entries {
                if !first {
                    out.push(' ');
                }
                out.push_str(&e.utility.to_string());
                first = false;
            }
            out.push('\n');
        }
        out
    }
}

fn parse_numbers<T: std::str::FromStr>(section: &str, line_no: usize) -> Result<Vec<T>, Error> {
    section
        .split_whitespace()
        .map(|tok| {
            tok.parse::<T>().map_err(|_| Error::Parse {
                line: line_no,
                kind: ParseErrorKind::InvalidNumber(tok.to_string()),
            })
        })
        .collect()
}

fn parse_single<T: std::str::FromStr>(section: &str, line_no: usize) -> Result<T, Error> {
    section.trim().parse::<T>().map_err(|_| Error::Parse {
        line: line_no,
        kind: ParseErrorKind::InvalidNumber(section.trim().to_string()),
    })
}
