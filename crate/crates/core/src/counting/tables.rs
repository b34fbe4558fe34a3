//! Reference values bundled with the crate, checked against the formulas.

use super::formulas::{s_count, t_count, u_count};
use num_bigint::BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountFamily {
    T,
    S,
    U,
}

impl CountFamily {
    pub fn count(self, k: usize, m: usize) -> BigUint {
        match self {
            CountFamily::T => t_count(k, m),
            CountFamily::S => s_count(k, m),
            CountFamily::U => u_count(k, m),
        }
    }

    /// The bundled TSV text.
    pub fn raw_table(self) -> &'static str {
        match self {
            CountFamily::T => include_str!("../../data/t_table.tsv"),
            CountFamily::S => include_str!("../../data/s_table.tsv"),
            CountFamily::U => include_str!("../../data/u_table.tsv"),
        }
    }

    pub fn table(self) -> ReferenceTable {
        ReferenceTable::parse(self.raw_table()).expect("bundled tables are well formed")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    pub ks: Vec<usize>,
    /// `(m, values)` with `values[t]` belonging to `ks[t]`.
    pub rows: Vec<(usize, Vec<BigUint>)>,
}

impl ReferenceTable {
    /// Reads `#` comments, a header `m  k=a  k=b …`, then one row per `m`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or("missing header")?;
        let ks = header
            .split('\t')
            .skip(1)
            .map(|h| {
                h.trim_start_matches("k=")
                    .parse::<usize>()
                    .map_err(|e| format!("bad header cell {h}: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut rows = Vec::new();
        for line in lines {
            let mut cells = line.split('\t');
            let m = cells
                .next()
                .and_then(|c| c.parse::<usize>().ok())
                .ok_or_else(|| format!("bad row {line}"))?;
            let values = cells
                .map(|c| c.parse::<BigUint>().map_err(|e| format!("bad cell {c}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            if values.len() != ks.len() {
                return Err(format!("row for m={m} has {} cells", values.len()));
            }
            rows.push((m, values));
        }
        Ok(ReferenceTable { ks, rows })
    }

    /// Cells where the formula disagrees: `(k, m, table, formula)`.
    pub fn mismatches(&self, family: CountFamily) -> Vec<(usize, usize, BigUint, BigUint)> {
        let mut out = Vec::new();
        for (m, values) in &self.rows {
            for (&k, want) in self.ks.iter().zip(values) {
                let got = family.count(k, *m);
                if &got != want {
                    out.push((k, *m, want.clone(), got));
                }
            }
        }
        out
    }

    pub fn get(&self, k: usize, m: usize) -> Option<&BigUint> {
        let col = self.ks.iter().position(|&x| x == k)?;
        self.rows.iter().find(|(mm, _)| *mm == m).map(|(_, v)| &v[col])
    }
}
