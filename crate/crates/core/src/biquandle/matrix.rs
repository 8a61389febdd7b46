//! Text codec for the `2N x 2N` block matrix of a finite biquandle.
//!
//! ```text
//! N
//! [ upbar | up  ]     row i, column j of each block holds k
//! [ lowbar| low ]     where x_k = (x_i) op (x_j), 1-indexed
//! ```

use super::{Carrier, FiniteBiquandle, Op};
use crate::error::{Error, Result};

const BLOCKS: [[Op; 2]; 2] = [[Op::UpBar, Op::Up], [Op::LowBar, Op::Low]];

/// Renders the block matrix: `N` on the first line, then `2N` rows. No trailing newline.
pub fn block_matrix_encode(q: &FiniteBiquandle) -> String {
    let n = q.size();
    let mut lines = Vec::with_capacity(2 * n + 1);
    lines.push(n.to_string());
    for block_row in BLOCKS {
        for i in 0..n {
            let row: Vec<String> = block_row
                .iter()
                .flat_map(|&op| (0..n).map(move |j| (q.apply(op, i, j) + 1).to_string()))
                .collect();
            lines.push(row.join(" "));
        }
    }
    lines.join("\n")
}

/// Parses the block-matrix text form. The carrier of the result is opaque labels.
pub fn block_matrix_decode(text: &str) -> Result<FiniteBiquandle> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad size line `{header}`")))?;
    if n == 0 {
        return Err(Error::Parse("size must be positive".into()));
    }
    let rows: Vec<&str> = lines.collect();
    if rows.len() != 2 * n {
        return Err(Error::Parse(format!(
            "expected {} matrix rows, found {}",
            2 * n,
            rows.len()
        )));
    }
    let mut tables: [Vec<u32>; 4] = Default::default();
    for t in tables.iter_mut() {
        t.resize(n * n, 0);
    }
    for (r, line) in rows.iter().enumerate() {
        let entries = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("row {}: bad entry `{tok}`", r + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != 2 * n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {}",
                r + 1,
                entries.len(),
                2 * n
            )));
        }
        let (block_row, i) = (r / n, r % n);
        for (c, &k) in entries.iter().enumerate() {
            if !(1..=n).contains(&k) {
                return Err(Error::Parse(format!(
                    "row {}: entry {k} outside [1, {n}]",
                    r + 1
                )));
            }
            let (op, j) = (BLOCKS[block_row][c / n], c % n);
            tables[op as usize][i * n + j] = (k - 1) as u32;
        }
    }
    Ok(FiniteBiquandle::from_flat(Carrier::Labels(n), tables))
}

#[cfg(test)]
mod tests {
    use super::super::{alexander_biquandle, trivial_biquandle};
    use super::*;

    const ALEXANDER_3_2_1: &str = "3
3 2 1 3 2 1
1 3 2 1 3 2
2 1 3 2 1 3
2 2 2 2 2 2
1 1 1 1 1 1
3 3 3 3 3 3";

    #[test]
    fn alexander_matrix_display() {
        let q = alexander_biquandle(3, 2, 1).unwrap();
        assert_eq!(block_matrix_encode(&q), ALEXANDER_3_2_1);
    }

    #[test]
    fn trivial_one_element() {
        assert_eq!(block_matrix_encode(&trivial_biquandle(1)), "1\n1 1\n1 1");
    }

    #[test]
    fn decode_round_trip() {
        let q = block_matrix_decode(ALEXANDER_3_2_1).unwrap();
        assert!(q.same_tables(&alexander_biquandle(3, 2, 1).unwrap()));
        assert_eq!(block_matrix_encode(&q), ALEXANDER_3_2_1);
        let with_newline = format!("{ALEXANDER_3_2_1}\n");
        assert!(block_matrix_decode(&with_newline).unwrap().same_tables(&q));
    }

    #[test]
    fn decode_errors() {
        let bad_entry = ALEXANDER_3_2_1.replacen("3 2 1 3 2 1", "7 2 1 3 2 1", 1);
        assert!(matches!(
            block_matrix_decode(&bad_entry),
            Err(Error::Parse(_))
        ));
        let zero_entry = ALEXANDER_3_2_1.replacen("3 2 1 3 2 1", "0 2 1 3 2 1", 1);
        assert!(matches!(
            block_matrix_decode(&zero_entry),
            Err(Error::Parse(_))
        ));
        let missing_row: String = ALEXANDER_3_2_1
            .lines()
            .take(6)
            .collect::<Vec<_>>()
            .join("\n");
        assert!(matches!(
            block_matrix_decode(&missing_row),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            block_matrix_decode("2\n1 x 1 1\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(block_matrix_decode(""), Err(Error::Parse(_))));
        assert!(matches!(
            block_matrix_decode("1\n1 1 1\n1 1"),
            Err(Error::Parse(_))
        ));
    }
}
