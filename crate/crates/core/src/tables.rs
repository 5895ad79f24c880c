//! Tab-separated renderings of the two tables.
//!
//! Format: one header row, then one row per record, fields separated by a
//! single `\t`, every line (including the last) ending in `\n`. Numbers are
//! plain ASCII decimals; an absent cell is the empty string.

use std::collections::BTreeSet;

use crate::invariants::{enumerate_table1, table2, Table1Entry, Table2Row};

/// Grid of `m` indexed by rank (rows) and `delta` (columns). The columns
/// are the `delta` values that occur for some rank.
pub fn table1_tsv(entries: &[Table1Entry]) -> String {
    let deltas: BTreeSet<i64> = entries.iter().map(|e| e.delta).collect();
    let ranks: BTreeSet<i64> = entries.iter().map(|e| e.r).collect();
    let mut out = String::from("r");
    for d in &deltas {
        out.push('\t');
        out.push_str(&d.to_string());
    }
    out.push('\n');
    for r in &ranks {
        out.push_str(&r.to_string());
        for d in &deltas {
            out.push('\t');
            if let Some(e) = entries.iter().find(|e| e.r == *r && e.delta == *d) {
                out.push_str(&e.m.to_string());
            }
        }
        out.push('\n');
    }
    out
}

pub fn table2_tsv(rows: &[Table2Row]) -> String {
    let mut out = String::from("k\tdelta\th2Y\tY2\n");
    for r in rows {
        out.push_str(&format!("{}\t{}\t{}\t{}\n", r.k, r.delta, r.h2y, r.y2));
    }
    out
}

pub fn render_table1() -> String {
    table1_tsv(&enumerate_table1())
}

pub fn render_table2() -> String {
    table2_tsv(&table2())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_leaves_gaps_empty() {
        let entries = [
            Table1Entry {
                r: 2,
                delta: 14,
                m: 0,
            },
            Table1Entry {
                r: 3,
                delta: 18,
                m: 2,
            },
        ];
        assert_eq!(table1_tsv(&entries), "r\t14\t18\n2\t0\t\n3\t\t2\n");
    }
}
