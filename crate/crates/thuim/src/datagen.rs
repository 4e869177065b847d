//! Deterministic synthetic database generation for scalability runs.
//!
//! Item popularity follows a Zipf law (rank 1 = item 1 most popular), so a
//! handful of items dominate transactions the way frequent products
//! dominate retail baskets. Transaction lengths are Poisson around
//! `avg_len`, clamped to `[1, max_len]`. Every item gets a fixed unit
//! profit drawn once, and each occurrence a quantity; the recorded utility
//! is their product, matching how retail utility data is prepared.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::{Distribution, Poisson, Zipf};

use crate::data::{ItemId, QuantitativeDatabase};
use crate::error::Error;
use crate::Currency;

/// Parameters for [`generate`]. The defaults produce a sparse
/// 100K-transaction, 870-item database of average length ~10 — the scale
/// the scalability tests run at.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    /// Item universe size; ids run 1..=n_items.
    pub n_items: u32,
    /// Number of transactions (0 gives an empty database).
    pub n_transactions: u32,
    /// Mean transaction length before clamping.
    pub avg_len: f64,
    /// Hard upper bound on transaction length.
    pub max_len: u32,
    /// Quantities are uniform in 1..=max_quantity.
    pub max_quantity: u32,
    /// Per-item unit profits are uniform in 1..=max_profit.
    pub max_profit: u32,
    /// RNG seed; equal parameters and seed reproduce the database exactly.
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n_items: 870,
            n_transactions: 100_000,
            avg_len: 10.0,
            max_len: 29,
            max_quantity: 5,
            max_profit: 10,
            seed: 1,
        }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |msg: &str| Err(Error::InvalidGenParams(msg.to_string()));
        if self.n_items == 0 {
            return fail("n_items must be at least 1");
        }
        if self.max_len == 0 {
            return fail("max_len must be at least 1");
        }
        if self.max_len > self.n_items {
            return fail("max_len cannot exceed n_items (transactions hold distinct items)");
        }
        if !self.avg_len.is_finite() || self.avg_len <= 0.0 {
            return fail("avg_len must be positive and finite");
        }
        if self.avg_len > self.max_len as f64 {
            return fail("avg_len cannot exceed max_len");
        }
        if self.max_quantity == 0 {
            return fail("max_quantity must be at least 1");
        }
        if self.max_profit == 0 {
            return fail("max_profit must be at least 1");
        }
        Ok(())
    }
}

/// Generates a database from `params`, deterministically in `params.seed`.
///
/// Generation is sequential per transaction, so lowering `n_transactions`
/// (keeping everything else fixed) yields a prefix of the longer database —
/// handy for scalability sweeps over growing subsets of one dataset.
pub fn generate(params: &GenParams) -> Result<QuantitativeDatabase, Error> {
    params.validate()?;
    let mut rng = StdRng::seed_from_u64(params.seed);

    let profits: Vec<Currency> = (0..params.n_items)
        .map(|_| rng.random_range(1..=params.max_profit) as Currency)
        .collect();
    let popularity =
        Zipf::new(params.n_items as f64, 1.0).expect("n_items ≥ 1 and exponent 1.0 are valid");
    let length = Poisson::new(params.avg_len).expect("avg_len is positive and finite");

    let mut rows = Vec::with_capacity(params.n_transactions as usize);
    let mut row: Vec<(ItemId, Currency)> = Vec::new();
    for _ in 0..params.n_transactions {
        let len = (length.sample(&mut rng) as u64).clamp(1, params.max_len as u64) as usize;
        row.clear();
        while row.len() < len {
            // Zipf yields ranks in 1..=n_items, rank 1 most popular.
            let rank = popularity.sample(&mut rng) as u32;
            let item = ItemId::new(rank);
            if !row.iter().any(|&(existing, _)| existing == item) {
                let quantity = rng.random_range(1..=params.max_quantity) as Currency;
                row.push((item, quantity * profits[(rank - 1) as usize]));
            }
        }
        row.sort_unstable_by_key(|&(item, _)| item);
        rows.push(row.clone());
    }
    QuantitativeDatabase::from_transactions(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_params() -> GenParams {
        GenParams {
            n_items: 50,
            n_transactions: 2000,
            avg_len: 5.0,
            max_len: 20,
            max_quantity: 5,
            max_profit: 10,
            seed: 42,
        }
    }

    #[test]
    fn generation_is_deterministic_in_the_seed() {
        let params = small_params();
        assert_eq!(generate(&params).unwrap(), generate(&params).unwrap());
        let other = GenParams {
            seed: 43,
            ..params
        };
        assert_ne!(generate(&params).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn shorter_runs_are_prefixes_of_longer_ones() {
        let params = small_params();
        let long = generate(&params).unwrap();
        let short = generate(&GenParams {
            n_transactions: 500,
            ..params
        })
        .unwrap();
        assert_eq!(short.transactions(), &long.transactions()[..500]);
        assert_eq!(long.prefix(500), short);
    }

    #[test]
    fn transactions_respect_the_parameter_envelope() {
        let params = small_params();
        let db = generate(&params).unwrap();
        assert_eq!(db.transactions().len(), 2000);
        let max_utility = (params.max_quantity * params.max_profit) as Currency;
        for t in db.transactions() {
            assert!((1..=params.max_len as usize).contains(&t.entries().len()));
            for e in t.entries() {
                assert!((1..=params.n_items).contains(&e.item.get()));
                assert!((1..=max_utility).contains(&e.utility));
            }
            // Items are distinct and sorted within a transaction.
            assert!(t
                .entries()
                .windows(2)
                .all(|w| w[0].item < w[1].item));
        }
    }

    #[test]
    fn lengths_average_near_the_requested_mean() {
        let db = generate(&small_params()).unwrap();
        let total: usize = db.transactions().iter().map(|t| t.entries().len()).sum();
        let mean = total as f64 / db.transactions().len() as f64;
        assert!(
            (mean - 5.0).abs() < 0.5,
            "mean transaction length {mean} strays from 5.0"
        );
    }

    #[test]
    fn popular_items_dominate() {
        let db = generate(&small_params()).unwrap();
        let count = |id: u32| {
            db.transactions()
                .iter()
                .filter(|t| t.contains(ItemId::new(id)))
                .count()
        };
        assert!(
            count(1) > 4 * count(50),
            "item 1 ({}) should far outnumber item 50 ({})",
            count(1),
            count(50)
        );
    }

    #[test]
    fn zero_transactions_give_an_empty_database() {
        let db = generate(&GenParams {
            n_transactions: 0,
            ..small_params()
        })
        .unwrap();
        assert!(db.transactions().is_empty());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let base = small_params();
        for broken in [
            GenParams { n_items: 0, ..base.clone() },
            GenParams { max_len: 0, ..base.clone() },
            GenParams { max_len: 51, ..base.clone() },
            GenParams { avg_len: 0.0, ..base.clone() },
            GenParams { avg_len: f64::NAN, ..base.clone() },
            GenParams { avg_len: 25.0, ..base.clone() }, // exceeds max_len

            GenParams { max_quantity: 0, ..base.clone() },
            GenParams { max_profit: 0, ..base.clone() },
        ] {
            assert!(matches!(
                generate(&broken),
                Err(Error::InvalidGenParams(_))
            ));
        }
    }
}
