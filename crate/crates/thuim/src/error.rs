//! Error types shared across the crate.

use thiserror::Error;

use crate::{Currency, Tid};

/// Anything that can go wrong while parsing, validating, or mining.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A line of database input could not be parsed.
    #[error("line {line}: {kind}")]
    Parse {
        /// 1-based physical line number in the input, counting comments and
        /// blank lines.
        line: usize,
        kind: ParseErrorKind,
    },

    /// A programmatically constructed transaction was rejected.
    #[error("transaction {tid}: {reason}")]
    InvalidTransaction { tid: Tid, reason: String },

    /// A utility query named an item that never occurs in the database.
    #[error("item {0} does not occur in the database")]
    UnknownItem(u32),

    /// A utility query was made for the empty itemset, which has no defined
    /// utility.
    #[error("the empty itemset has no utility")]
    EmptyItemset,

    /// Two utility-lists were joined whose itemsets do not share a common
    /// prefix of length k-1.
    #[error("cannot join utility-lists for {{{left}}} and {{{right}}}: itemsets are not siblings under a common prefix")]
    JoinPrefixMismatch { left: String, right: String },

    /// During a join, the prefix utility-list lacked (or disagreed with) the
    /// element for a transaction shared by both extensions. Indicates the
    /// inputs were not produced by the documented construction.
    #[error("prefix utility-list is missing or inconsistent at transaction {tid}")]
    CorruptedPrefixList { tid: Tid },

    /// Exhaustive enumeration was asked to cover too many distinct items.
    #[error("exhaustive search over {count} distinct items exceeds the limit of {limit}")]
    TooManyItems { count: usize, limit: usize },

    /// Generator parameters were inconsistent.
    #[error("invalid generator parameters: {0}")]
    InvalidGenParams(String),
}

/// Reasons a database line can be rejected.
#[derive(Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// The line did not split into exactly three `:`-separated sections.
    SectionCount { found: usize },
    /// A token could not be parsed as an unsigned integer.
    InvalidNumber(String),
    /// The item list was empty.
    EmptyTransaction,
    /// The same item appeared twice in one transaction.
    DuplicateItem(u32),
    /// Item count and item-utility count disagree.
    CountMismatch { items: usize, utilities: usize },
    /// An item utility of zero (items must contribute positive utility).
    NonPositiveUtility,
    /// The declared transaction utility does not equal the sum of the item
    /// utilities.
    TransactionUtilityMismatch {
        declared: Currency,
        computed: Currency,
    },
    /// Summing the item utilities overflowed the currency type.
    UtilityOverflow,
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::SectionCount { found } => write!(
                f,
                "expected 3 colon-separated sections (items:transaction-utility:item-utilities), found {found}"
            ),
            ParseErrorKind::InvalidNumber(tok) => {
                write!(f, "cannot parse {tok:?} as an unsigned integer")
            }
            ParseErrorKind::EmptyTransaction => write!(f, "transaction contains no items"),
            ParseErrorKind::DuplicateItem(item) => {
                write!(f, "item {item} appears more than once")
            }
            ParseErrorKind::CountMismatch { items, utilities } => write!(
                f,
                "{items} item(s) but {utilities} item-utility value(s)"
            ),
            ParseErrorKind::NonPositiveUtility => {
                write!(f, "item utilities must be positive")
            }
            ParseErrorKind::TransactionUtilityMismatch { declared, computed } => write!(
                f,
                "declared transaction utility {declared} does not match the item-utility sum {computed}"
            ),
            ParseErrorKind::UtilityOverflow => {
                write!(f, "item-utility sum overflows the currency range")
            }
        }
    }
}
