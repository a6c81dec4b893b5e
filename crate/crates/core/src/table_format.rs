//! Plain-text table rings: the order, then the `n*n` addition table row by
//! row, then the `n*n` multiplication table, all whitespace-separated
//! integers. Text after `#` on a line is ignored.

use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

pub fn parse(text: &str) -> Result<FiniteRing> {
    let mut nums = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| RingError::MalformedTable(format!("not a non-negative integer: {tok:?}")))?;
            nums.push(v);
        }
    }
    let Some((&n, rest)) = nums.split_first() else {
        return Err(RingError::MalformedTable("missing order".into()));
    };
    if n == 0 || rest.len() != 2 * n * n {
        return Err(RingError::MalformedTable(format!(
            "order {n} needs {} table entries, found {}",
            2 * n * n,
            rest.len()
        )));
    }
    let rows = |t: &[usize]| t.chunks(n).map(|r| r.to_vec()).collect::<Vec<_>>();
    FiniteRing::from_tables(&rows(&rest[..n * n]), &rows(&rest[n * n..]))
}

pub fn write(ring: &FiniteRing) -> String {
    let n = ring.order();
    let mut out = format!("{n}\n");
    for table in [0, 1] {
        for a in 0..n {
            let row: Vec<String> = (0..n)
                .map(|b| if table == 0 { ring.add(a, b) } else { ring.mul(a, b) })
                .map(|v| v.to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
