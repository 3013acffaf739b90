//! 0/1 matrices under alternating row/column lexicographic sorting.
//!
//! Rows are packed into 64-bit words with column 0 at the most significant
//! bit, so lexicographic comparison of rows is a word-wise compare. The
//! fixpoint driver alternates a row sort and a column sort (row first) and
//! stops at the first no-op pass that leaves both orientations sorted; the
//! row-major reading vector never increases lexicographically along the
//! way, which is what forces termination.
//!
//! Text format: first line `p q`, then p lines of q characters from {0,1}.

use crate::checkers::clique_split;
use crate::error::{Error, ParseError};
use crate::graph::Graph;
use crate::ordering::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter("matrix dimensions must be positive".into()));
        }
        let words_per_row = cols.div_ceil(64);
        Ok(BinaryMatrix { rows, cols, words_per_row, bits: vec![0; rows * words_per_row] })
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, Error> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvalidParameter("matrix dimensions must be positive".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameter("ragged matrix rows".into()));
        }
        let mut m = BinaryMatrix::zeros(rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x > 1 {
                    return Err(Error::InvalidParameter("entries must be 0 or 1".into()));
                }
                if x == 1 {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        let w = self.bits[i * self.words_per_row + j / 64];
        w >> (63 - j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let word = &mut self.bits[i * self.words_per_row + j / 64];
        let mask = 1u64 << (63 - j % 64);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    /// Stable ascending sort of the rows in lexicographic order.
    pub fn sort_rows_lex(&self) -> BinaryMatrix {
        let mut idx: Vec<usize> = (0..self.rows).collect();
        idx.sort_by(|&a, &b| self.row_words(a).cmp(self.row_words(b)));
        let mut out = self.clone();
        for (new_i, &old_i) in idx.iter().enumerate() {
            let src = old_i * self.words_per_row;
            let dst = new_i * self.words_per_row;
            for w in 0..self.words_per_row {
                out.bits[dst + w] = self.bits[src + w];
            }
        }
        out
    }

    /// Stable ascending sort of the columns in lexicographic order.
    pub fn sort_cols_lex(&self) -> BinaryMatrix {
        self.transpose().sort_rows_lex().transpose()
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.cols, self.rows).expect("positive dims");
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    pub fn is_rows_sorted(&self) -> bool {
        (1..self.rows).all(|i| self.row_words(i - 1) <= self.row_words(i))
    }

    pub fn is_cols_sorted(&self) -> bool {
        self.transpose().is_rows_sorted()
    }

    /// Row-major reading of the entries.
    pub fn potential_vector(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.push(self.get(i, j) as u8);
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| ParseError::Matrix("missing `p q` header".into()))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(ParseError::Matrix(format!("bad header `{header}`")).into());
        }
        let p: usize = dims[0]
            .parse()
            .map_err(|_| ParseError::Matrix(format!("bad row count `{}`", dims[0])))?;
        let q: usize = dims[1]
            .parse()
            .map_err(|_| ParseError::Matrix(format!("bad column count `{}`", dims[1])))?;
        let mut rows = Vec::with_capacity(p);
        for _ in 0..p {
            let line = lines
                .next()
                .ok_or_else(|| ParseError::Matrix("missing matrix row".into()))?;
            let line = line.trim();
            if line.len() != q {
                return Err(ParseError::Matrix(format!(
                    "row `{line}` does not have {q} entries"
                ))
                .into());
            }
            let row: Result<Vec<u8>, Error> = line
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    other => Err(ParseError::Matrix(format!("bad entry `{other}`")).into()),
                })
                .collect();
            rows.push(row?);
        }
        BinaryMatrix::from_rows(&rows)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.push(if self.get(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

/// Result of [`iterate_to_fixpoint`]. `steps` counts the sorting passes
/// applied, including the final confirming no-op; `potential_trace` holds
/// the row-major reading vector before any pass and after each pass.
#[derive(Debug, Clone)]
pub struct FixpointReport {
    pub matrix: BinaryMatrix,
    pub steps: usize,
    pub potential_trace: Vec<Vec<u8>>,
}

/// Alternates row sorts (pass 1, 3, ...) and column sorts (pass 2, 4, ...)
/// until a pass changes nothing and both orientations are sorted. The
/// potential argument bounds convergence well below `rows * cols + 2`
/// passes; exhausting `max_steps` at or above that is reported as a bug via
/// [`Error::LimitExceeded`].
pub fn iterate_to_fixpoint(m: &BinaryMatrix, max_steps: usize) -> Result<FixpointReport, Error> {
    if max_steps < 1 {
        return Err(Error::InvalidParameter("max_steps must be at least 1".into()));
    }
    let mut cur = m.clone();
    let mut trace = vec![cur.potential_vector()];
    for pass in 1..=max_steps {
        let next = if pass % 2 == 1 { cur.sort_rows_lex() } else { cur.sort_cols_lex() };
        let unchanged = next == cur;
        cur = next;
        trace.push(cur.potential_vector());
        if unchanged && cur.is_rows_sorted() && cur.is_cols_sorted() {
            return Ok(FixpointReport { matrix: cur, steps: pass, potential_trace: trace });
        }
    }
    Err(Error::LimitExceeded(format!("no sorting fixpoint within {max_steps} passes")))
}

/// Default pass budget for a p x q matrix.
pub fn default_fixpoint_steps(rows: usize, cols: usize) -> usize {
    rows * cols + 2
}

/// Adjacency matrix between the two clique sides of a cobipartite ordering:
/// rows follow the clique prefix in order, columns index the suffix from
/// the end of the ordering backwards. Requires both sides nonempty and the
/// suffix to be a clique.
pub fn cobipartite_matrix(g: &Graph, o: &Ordering) -> Result<BinaryMatrix, Error> {
    let split = clique_split(g, o)
        .ok_or_else(|| Error::InvalidParameter("empty ordering has no split".into()))?;
    if !split.suffix_is_clique {
        return Err(Error::InvalidParameter(
            "ordering does not split into two cliques".into(),
        ));
    }
    cobipartite_matrix_with_split(g, o, split.prefix_len)
}

/// As [`cobipartite_matrix`] with an explicit prefix length.
pub fn cobipartite_matrix_with_split(
    g: &Graph,
    o: &Ordering,
    prefix_len: usize,
) -> Result<BinaryMatrix, Error> {
    let n = o.len();
    if prefix_len == 0 || prefix_len >= n {
        return Err(Error::InvalidParameter(
            "both clique sides must be nonempty".into(),
        ));
    }
    let q = n - prefix_len;
    let mut m = BinaryMatrix::zeros(prefix_len, q)?;
    for i in 0..prefix_len {
        for j in 0..q {
            // column j <-> the (j+1)-th vertex counted from the end
            if g.has_edge(o.at(i), o.at(n - 1 - j)) {
                m.set(i, j, true);
            }
        }
    }
    Ok(m)
}
