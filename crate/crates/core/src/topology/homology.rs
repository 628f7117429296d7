//! Simplicial homology with coefficients in the two-element field.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::Result;
use crate::limits::ensure_within;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    /// `b_0 .. b_top`; empty for `{∅}`.
    pub betti: Vec<usize>,
}

impl HomologyProfile {
    pub fn top(&self) -> Option<usize> {
        self.betti.last().copied()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating(&self.betti)
    }
}

fn alternating(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(q, &x)| if q % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Sparse-to-dense column reduction over GF(2). Columns are bit-packed
/// `u64` words; each column is reduced against earlier pivots on its lowest
/// set row, so the rank is the number of nonzero reduced columns.
struct Gf2Matrix {
    words: usize,
    columns: Vec<Vec<u64>>,
}

impl Gf2Matrix {
    fn new(rows: usize) -> Self {
        Self {
            words: rows.div_ceil(64),
            columns: Vec::new(),
        }
    }

    fn push_column(&mut self, rows: impl IntoIterator<Item = usize>) {
        let mut col = vec![0u64; self.words];
        for r in rows {
            col[r / 64] ^= 1 << (r % 64);
        }
        self.columns.push(col);
    }

    fn rank(mut self) -> usize {
        let mut pivot_of_row: HashMap<usize, usize> = HashMap::new();
        let mut rank = 0;
        for j in 0..self.columns.len() {
            while let Some(low) = lowest(&self.columns[j]) {
                match pivot_of_row.get(&low) {
                    Some(&p) => {
                        let (head, tail) = self.columns.split_at_mut(j);
                        for (a, b) in tail[0].iter_mut().zip(&head[p]) {
                            *a ^= b;
                        }
                    }
                    None => {
                        pivot_of_row.insert(low, j);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

fn lowest(col: &[u64]) -> Option<usize> {
    col.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// Rank of the boundary map from the faces in `upper` to those in `lower`
/// (faces of one less vertex).
fn boundary_rank(lower: &[Vec<Vertex>], upper: &[Vec<Vertex>]) -> Result<usize> {
    if lower.is_empty() || upper.is_empty() {
        return Ok(0);
    }
    ensure_within("boundary matrix columns", upper.len())?;
    ensure_within("boundary matrix rows", lower.len())?;
    let index: HashMap<&[Vertex], usize> = lower.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut m = Gf2Matrix::new(lower.len());
    let mut scratch = Vec::new();
    for face in upper {
        m.push_column((0..face.len()).map(|skip| {
            scratch.clear();
            scratch.extend(face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
            index[scratch.as_slice()]
        }));
    }
    Ok(m.rank())
}

/// Betti numbers `b_q = dim ker ∂_q - rank ∂_{q+1}`. The Euler-Poincaré
/// identity against the face counts is asserted on every call.
pub fn gf2_homology(complex: &SimplicialComplex) -> Result<HomologyProfile> {
    let faces = complex.faces_by_dim();
    let ranks: Vec<usize> = (0..faces.len())
        .map(|q| if q == 0 { Ok(0) } else { boundary_rank(&faces[q - 1], &faces[q]) })
        .collect::<Result<_>>()?;
    let betti: Vec<usize> = (0..faces.len())
        .map(|q| faces[q].len() - ranks[q] - ranks.get(q + 1).copied().unwrap_or(0))
        .collect();
    let counts: Vec<usize> = faces.iter().map(Vec::len).collect();
    assert_eq!(
        alternating(&betti),
        alternating(&counts),
        "Euler-Poincaré identity failed"
    );
    Ok(HomologyProfile { betti })
}

/// Top Betti number of a pure complex: `f_top - rank ∂_top`. Needs only the
/// facets and ridges, so it reaches larger complexes than [`gf2_homology`].
pub fn top_betti(complex: &SimplicialComplex) -> Result<usize> {
    let facets = complex.facets();
    let top = complex.dim();
    if top <= 0 {
        return Ok(if top == 0 { facets.len() } else { 0 });
    }
    let mut ridges: Vec<Vec<Vertex>> = Vec::new();
    for f in facets.iter().filter(|f| f.len() as isize == top + 1) {
        for skip in 0..f.len() {
            let mut r = f.clone();
            r.remove(skip);
            ridges.push(r);
        }
    }
    ridges.sort_unstable();
    ridges.dedup();
    let top_faces: Vec<Vec<Vertex>> = facets.iter().filter(|f| f.len() as isize == top + 1).cloned().collect();
    Ok(top_faces.len() - boundary_rank(&ridges, &top_faces)?)
}
