//! Grid evaluation and the CSV / JSON table formats.
//!
//! Rows are always in row-major order (`m` outer, `n` inner) regardless of
//! how the cells were evaluated, so output is byte-identical between runs.

use std::io::Write;

use dihedral_hom::homcount::{brute_force_count, count_homs};
use dihedral_hom::{ParityCase, PositiveInt, MAX_BRUTE_FORCE_N};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::CliError;

/// Largest number of cells a single table or verification run may cover.
pub const MAX_GRID_CELLS: u64 = 10_000_000;

pub const SCHEMA_VERSION: u32 = 1;

/// One `(m, n)` cell of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub m: u64,
    pub n: u64,
    #[serde(serialize_with = "case_name")]
    pub case: ParityCase,
    pub count: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

fn case_name<S: Serializer>(case: &ParityCase, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(case.as_str())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub max_m: u64,
    pub max_n: u64,
}

impl Grid {
    pub fn cells(&self) -> u64 {
        self.max_m * self.max_n
    }

    fn check(&self, with_oracle: bool) -> Result<(), CliError> {
        let cells = self.max_m.saturating_mul(self.max_n);
        if cells > MAX_GRID_CELLS {
            return Err(CliError::Range(format!(
                "grid of {} x {} exceeds {MAX_GRID_CELLS} cells",
                self.max_m, self.max_n
            )));
        }
        if with_oracle && self.max_n > MAX_BRUTE_FORCE_N {
            return Err(CliError::Range(format!(
                "oracle needs max n <= {MAX_BRUTE_FORCE_N}, got {}",
                self.max_n
            )));
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct JsonTable<'a> {
    rows: &'a [TableRow],
    grid: Grid,
    schema_version: u32,
}

/// Evaluates every cell of `1..=max_m × 1..=max_n`, optionally alongside
/// the brute-force oracle. Cells are evaluated in parallel.
pub fn evaluate(grid: Grid, with_oracle: bool) -> Result<Vec<TableRow>, CliError> {
    grid.check(with_oracle)?;
    let max_n = grid.max_n;
    (0..grid.cells())
        .into_par_iter()
        .map(|i| {
            let m = PositiveInt::new(i / max_n + 1)?;
            let n = PositiveInt::new(i % max_n + 1)?;
            let hc = count_homs(m, n)?;
            let oracle = if with_oracle {
                Some(brute_force_count(m, n)?.count)
            } else {
                None
            };
            Ok(TableRow {
                m: m.get(),
                n: n.get(),
                case: hc.case,
                count: hc.count,
                oracle,
                agree: oracle.map(|o| o == hc.count),
            })
        })
        .collect()
}

/// CSV with header `m,n,case,count` plus `,oracle,agree` when the rows
/// carry oracle values. LF line endings.
pub fn write_csv<W: Write>(rows: &[TableRow], with_oracle: bool, out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let mut header = vec!["m", "n", "case", "count"];
    if with_oracle {
        header.extend(["oracle", "agree"]);
    }
    w.write_record(&header)?;
    for row in rows {
        let mut rec = vec![
            row.m.to_string(),
            row.n.to_string(),
            row.case.to_string(),
            row.count.to_string(),
        ];
        if with_oracle {
            rec.push(row.oracle.map(|o| o.to_string()).unwrap_or_default());
            rec.push(row.agree.map(|a| a.to_string()).unwrap_or_default());
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// `{"rows": [...], "grid": {"max_m", "max_n"}, "schema_version": 1}`,
/// followed by a newline.
pub fn write_json<W: Write>(rows: &[TableRow], grid: Grid, mut out: W) -> Result<(), CliError> {
    let table = JsonTable {
        rows,
        grid,
        schema_version: SCHEMA_VERSION,
    };
    serde_json::to_writer(&mut out, &table)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(max_m: u64, max_n: u64) -> Grid {
        Grid { max_m, max_n }
    }

    #[test]
    fn row_major_order() {
        let rows = evaluate(grid(3, 4), false).unwrap();
        let cells: Vec<_> = rows.iter().map(|r| (r.m, r.n)).collect();
        let expected: Vec<_> = (1..=3).flat_map(|m| (1..=4).map(move |n| (m, n))).collect();
        assert_eq!(cells, expected);
    }

    #[test]
    fn csv_rows() {
        let rows = evaluate(grid(4, 3), false).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, false, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "m,n,case,count");
        assert!(lines.contains(&"1,1,OddOdd,2"));
        assert!(lines.contains(&"3,3,OddOdd,10"));
        assert!(lines.contains(&"4,3,EvenOdd,10"));
        assert!(!text.contains('\r'));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn csv_with_oracle() {
        let rows = evaluate(grid(2, 2), true).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, true, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "m,n,case,count,oracle,agree\n\
             1,1,OddOdd,2,2,true\n\
             1,2,OddEven,4,4,true\n\
             2,1,EvenOdd,4,4,true\n\
             2,2,EvenEven,16,16,true\n"
        );
    }

    #[test]
    fn json_layout() {
        let rows = evaluate(grid(1, 2), false).unwrap();
        let mut buf = Vec::new();
        write_json(&rows, grid(1, 2), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            r#"{"rows":[{"m":1,"n":1,"case":"OddOdd","count":2},{"m":1,"n":2,"case":"OddEven","count":4}],"grid":{"max_m":1,"max_n":2},"schema_version":1}"#
                .to_owned()
                + "\n"
        );
    }

    #[test]
    fn wide_counts_are_plain_numbers() {
        let row = TableRow {
            m: 1 << 62,
            n: 1 << 62,
            case: ParityCase::EvenEven,
            count: count_homs(
                PositiveInt::new(1 << 62).unwrap(),
                PositiveInt::new(1 << 62).unwrap(),
            )
            .unwrap()
            .count,
            oracle: None,
            agree: None,
        };
        let json = serde_json::to_string(&row).unwrap();
        assert!(json.contains(&format!("\"count\":{}", row.count)));
        assert!(row.count > u64::MAX as u128);
    }

    #[test]
    fn grid_limits() {
        assert!(matches!(
            evaluate(grid(10_001, 10_000), false),
            Err(CliError::Range(_))
        ));
        assert!(matches!(
            evaluate(grid(1, MAX_BRUTE_FORCE_N + 1), true),
            Err(CliError::Range(_))
        ));
    }
}
