//! Targeted high-utility itemset mining over quantitative transaction databases.
//!
//! A quantitative transaction database assigns every item occurrence a
//! utility (for retail data: purchase quantity times unit profit). The
//! utility of an itemset is the sum, over all transactions containing the
//! whole itemset, of the utilities of its items in that transaction. Given a
//! minimum utility threshold and a *target pattern*, this crate mines every
//! itemset that reaches the threshold **and** contains all target items —
//! without first mining the full high-utility itemset set and filtering.
//!
//! The miner keeps one utility-list per candidate itemset (transaction id,
//! itemset utility, and remaining utility per containing transaction) and
//! explores extensions depth-first in transaction-weighted-utility order.
//! Two pruning rules cut the search:
//!
//! * the usual remaining-utility bound (a candidate whose itemset utility
//!   plus remaining utility falls below the threshold cannot be extended
//!   into a high-utility itemset), and
//! * target matching on *serial numbers* — positions of the promising items
//!   in the processing order. Extensions are generated in serial order, so
//!   as soon as an extension's serial overshoots the next unmatched target
//!   item, the whole sibling group can be abandoned.
//!
//! ```
//! use thuim::data::{ItemId, QuantitativeDatabase};
//! use thuim::miner::mine;
//!
//! let db = QuantitativeDatabase::parse_database("1 2:9:3 6\n2 3:8:2 6\n").unwrap();
//! let outcome = mine(&db, 8, &[ItemId::new(2)]);
//! for (itemset, utility) in &outcome.results {
//!     assert!(*utility >= 8);
//!     assert!(itemset.contains(&ItemId::new(2)));
//! }
//! ```

pub mod data;
pub mod datagen;
pub mod error;
pub mod index;
pub mod miner;
pub mod oracle;
pub mod report;
pub mod ulist;

pub use error::Error;

/// Utility amount in indivisible currency units. All arithmetic is exact;
/// equality of mined utilities is meaningful with no tolerance.
pub type Currency = u64;

/// Transaction identifier: 1-based position of the transaction in its
/// database.
pub type Tid = u32;
