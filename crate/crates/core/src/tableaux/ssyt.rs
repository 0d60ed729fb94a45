//! Semistandard Young tableaux with a fixed entry bound.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::shape::Shape;
use super::TableauxError;

/// A semistandard filling: rows weakly increase left to right, columns
/// strictly increase top to bottom, entries in `{1, ..., max_entry}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SsytWire", into = "SsytWire")]
pub struct Ssyt {
    shape: Shape,
    rows: Vec<Vec<u32>>,
    max_entry: u32,
}

/// JSON form: {"shape":[...],"rows":[[...],...]}.
#[derive(Serialize, Deserialize)]
struct SsytWire {
    shape: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<u32>>, max_entry: u32) -> Result<Self, TableauxError> {
        let shape = Shape::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| TableauxError::NotATableau)?;
        if shape.len() != rows.len() {
            // A row of length zero sat above a nonempty one.
            return Err(TableauxError::NotATableau);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v < 1 || v > max_entry {
                    return Err(TableauxError::EntryOutOfBounds(v, max_entry));
                }
                if j > 0 && row[j - 1] > v {
                    return Err(TableauxError::NotATableau);
                }
                if i > 0 {
                    match rows[i - 1].get(j) {
                        Some(&above) if above < v => {}
                        _ => return Err(TableauxError::NotATableau),
                    }
                }
            }
        }
        Ok(Ssyt {
            shape,
            rows,
            max_entry,
        })
    }

    pub fn empty() -> Self {
        Ssyt {
            shape: Shape::empty(),
            rows: Vec::new(),
            max_entry: 0,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.shape.size()
    }

    /// Rows concatenated top to bottom; enumeration order sorts by this.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl TryFrom<SsytWire> for Ssyt {
    type Error = TableauxError;
    fn try_from(w: SsytWire) -> Result<Self, Self::Error> {
        let declared = Shape::new(w.shape).map_err(|_| TableauxError::NotAShape)?;
        let max = w.rows.iter().flatten().copied().max().unwrap_or(0);
        let t = Ssyt::new(w.rows, max)?;
        if *t.shape() != declared {
            return Err(TableauxError::ShapeMismatch);
        }
        Ok(t)
    }
}

impl From<Ssyt> for SsytWire {
    fn from(t: Ssyt) -> SsytWire {
        SsytWire {
            shape: t.shape.parts().to_vec(),
            rows: t.rows,
        }
    }
}

/// All SSYTs of the given shape with entries bounded by `max_entry`, in
/// lexicographic order of the reading word.
pub fn enumerate_ssyt(shape: &Shape, max_entry: u32) -> Vec<Ssyt> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();

    fn go(
        shape: &Shape,
        max_entry: u32,
        rows: &mut Vec<Vec<u32>>,
        pos: usize,
        cells: &[(usize, usize)],
        out: &mut Vec<Ssyt>,
    ) {
        if pos == cells.len() {
            out.push(
                Ssyt::new(rows.clone(), max_entry).expect("filling respects the constraints"),
            );
            return;
        }
        let (i, j) = cells[pos];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        for v in lo..=max_entry {
            rows[i][j] = v;
            go(shape, max_entry, rows, pos + 1, cells, out);
        }
        rows[i][j] = 0;
    }

    // Filling cells in reading order with ascending candidates yields
    // reading-word-lexicographic output directly.
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
        .collect();
    go(shape, max_entry, &mut rows, 0, &cells, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[u32]) -> Shape {
        Shape::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Ssyt::new(vec![vec![1, 1], vec![2]], 2).is_ok());
        // Rows must weakly increase.
        assert!(Ssyt::new(vec![vec![2, 1]], 2).is_err());
        // Columns must strictly increase.
        assert!(Ssyt::new(vec![vec![1, 1], vec![1]], 2).is_err());
        // Bound is enforced.
        assert!(Ssyt::new(vec![vec![3]], 2).is_err());
        // Ragged upward rows are not a shape.
        assert!(Ssyt::new(vec![vec![1], vec![2, 2]], 3).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ssyt(&shape(&[1]), 2).len(), 2);
        assert_eq!(enumerate_ssyt(&shape(&[1, 1]), 3).len(), 3);
        assert_eq!(enumerate_ssyt(&shape(&[2, 1]), 3).len(), 8);
        assert_eq!(enumerate_ssyt(&Shape::empty(), 5).len(), 1);
        // Too few allowed entries for the column heights.
        assert_eq!(enumerate_ssyt(&shape(&[1, 1, 1]), 2).len(), 0);
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let all = enumerate_ssyt(&shape(&[2, 1]), 3);
        let words: Vec<Vec<u32>> = all.iter().map(|t| t.reading_word()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(words, sorted);
    }

    #[test]
    fn json_round_trip() {
        let t = Ssyt::new(vec![vec![1, 1, 2, 2], vec![2, 3, 3]], 3).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"shape":[4,3],"rows":[[1,1,2,2],[2,3,3]]}"#);
        let back: Ssyt = serde_json::from_str(&json).unwrap();
        assert_eq!(back.rows(), t.rows());
        assert_eq!(back.shape(), t.shape());
    }

    #[test]
    fn json_rejects_inconsistent_input() {
        assert!(serde_json::from_str::<Ssyt>(r#"{"shape":[2],"rows":[[1,1],[2]]}"#).is_err());
        assert!(serde_json::from_str::<Ssyt>(r#"{"shape":[2],"rows":[[2,1]]}"#).is_err());
    }
}
