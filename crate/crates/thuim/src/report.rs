//! Canonical rendering of mining results.
//!
//! The miner reports itemsets in processing order and discovery order, both
//! of which depend on the `--order` choice. Canonical form removes that
//! dependence so that runs under different orders produce byte-identical
//! output: items ascend by id within each itemset, and lines sort by the
//! item-id sequence.

use crate::data::ItemId;
use crate::Currency;

/// Sorts each itemset by ascending item id, then sorts the result list by
/// the id sequences. Utilities are untouched. The outcome is independent of
/// the order in which results were discovered.
pub fn canonical_results(results: &[(Vec<ItemId>, Currency)]) -> Vec<(Vec<ItemId>, Currency)> {
    let mut canonical: Vec<(Vec<ItemId>, Currency)> = results
        .iter()
        .map(|(itemset, utility)| {
            let mut sorted = itemset.clone();
            sorted.sort_unstable();
            (sorted, *utility)
        })
        .collect();
    canonical.sort_unstable();
    canonical
}

/// Renders canonical results one per line: space-separated item ids, then
/// ` #UTIL: ` and the utility. Ends with a newline when non-empty.
pub fn render_lines(canonical: &[(Vec<ItemId>, Currency)]) -> String {
    let mut out = String::new();
    for (itemset, utility) in canonical {
        let mut first = true;
        for item in itemset {
            if !first {
                out.push(' ');
            }
            out.push_str(&item.get().to_string());
            first = false;
        }
        out.push_str(" #UTIL: ");
        out.push_str(&utility.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(raw: &[u32]) -> Vec<ItemId> {
        raw.iter().copied().map(ItemId::new).collect()
    }

    #[test]
    fn canonicalization_sorts_items_and_lines() {
        let results = vec![
            (ids(&[5, 2, 6]), 145),
            (ids(&[5, 6]), 139),
            (ids(&[2, 1]), 77),
        ];
        let canonical = canonical_results(&results);
        assert_eq!(
            canonical,
            vec![
                (ids(&[1, 2]), 77),
                (ids(&[2, 5, 6]), 145),
                (ids(&[5, 6]), 139),
            ]
        );
    }

    #[test]
    fn rendering_is_stable() {
        let canonical = vec![(ids(&[1, 2]), 77), (ids(&[5, 6]), 139)];
        assert_eq!(render_lines(&canonical), "1 2 #UTIL: 77\n5 6 #UTIL: 139\n");
        assert_eq!(render_lines(&[]), "");
    }
}
