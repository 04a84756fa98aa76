use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_key, graph_from_key, CanonicalForm};
use crate::graph::Graph;

use super::VerifyError;

pub const MAX_ENUMERATION_VERTICES: usize = 10;

/// All (or all connected) graphs on `n` vertices, one canonical key per
/// isomorphism class, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationLevel {
    pub n: usize,
    pub connected_only: bool,
    keys: Vec<u128>,
}

impl EnumerationLevel {
    /// The single graph on one vertex.
    pub fn first(connected_only: bool) -> Self {
        EnumerationLevel {
            n: 1,
            connected_only,
            keys: vec![0],
        }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.keys.iter().map(move |&k| graph_from_key(self.n, k))
    }

    pub fn forms(&self) -> impl Iterator<Item = CanonicalForm> + '_ {
        self.keys
            .iter()
            .map(move |&k| CanonicalForm::from_key(self.n, k))
    }

    /// The level above, built by joining a new vertex to every neighbour
    /// subset of every graph here (non-empty subsets when connected).
    pub fn next(&self) -> Self {
        EnumerationLevel {
            n: self.n + 1,
            connected_only: self.connected_only,
            keys: extend_keys(self.n, &self.keys, self.connected_only),
        }
    }
}

/// Canonical keys of all one-vertex extensions of the given graphs,
/// deduplicated and sorted.
pub(crate) fn extend_keys(n: usize, parents: &[u128], connected: bool) -> Vec<u128> {
    let first = u64::from(connected);
    let set = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, &key| {
            let g = graph_from_key(n, key);
            let mut rows = g.rows().to_vec();
            rows.push(0);
            for mask in first..1u64 << n {
                let mut r = rows.clone();
                r[n] = mask;
                for (v, row) in r.iter_mut().enumerate().take(n) {
                    *row |= (mask >> v & 1) << n;
                }
                acc.insert(canonical_key(&Graph::from_rows_unchecked(r)));
            }
            acc
        })
        .reduce(HashSet::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            big.extend(small);
            big
        });
    let mut keys: Vec<u128> = set.into_iter().collect();
    keys.sort_unstable();
    keys
}

/// Yields levels `1..=max_n` in order.
pub struct Levels {
    next: Option<EnumerationLevel>,
    max_n: usize,
}

impl Iterator for Levels {
    type Item = EnumerationLevel;

    fn next(&mut self) -> Option<EnumerationLevel> {
        let cur = self.next.take()?;
        if cur.n > self.max_n {
            return None;
        }
        if cur.n < self.max_n {
            self.next = Some(cur.next());
        }
        Some(cur)
    }
}

pub fn levels(max_n: usize, connected_only: bool) -> Result<Levels, VerifyError> {
    check_n(max_n)?;
    Ok(Levels {
        next: Some(EnumerationLevel::first(connected_only)),
        max_n,
    })
}

pub fn enumeration_level(n: usize, connected_only: bool) -> Result<EnumerationLevel, VerifyError> {
    Ok(levels(n, connected_only)?
        .last()
        .expect("n >= 1 yields a level"))
}

/// Every isomorphism class on `n` vertices exactly once.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, VerifyError> {
    Ok(enumeration_level(n, connected_only)?.graphs().collect())
}

fn check_n(n: usize) -> Result<(), VerifyError> {
    if (1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(VerifyError::BadSize {
            n,
            max: MAX_ENUMERATION_VERTICES,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census() {
        let counts: Vec<usize> = levels(6, false).unwrap().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = levels(6, true).unwrap().map(|l| l.len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn connected_three() {
        let gs = enumerate_graphs(3, true).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(gs.iter().all(Graph::is_connected));
    }

    #[test]
    fn size_limits() {
        assert!(enumerate_graphs(0, false).is_err());
        assert!(enumerate_graphs(11, false).is_err());
    }
}
