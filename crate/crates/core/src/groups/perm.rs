use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image vector.
/// Displayed in 1-based cycle notation, e.g. `(1 2 3)(4 5)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u16).collect() }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidSpec(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from 1-based cycles. Points must lie in `1..=degree` and may not repeat.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::InvalidSpec(format!(
                        "point {pt} outside 1..={degree}"
                    )));
                }
                if used[pt - 1] {
                    return Err(Error::InvalidSpec(format!("point {pt} repeated in cycles")));
                }
                used[pt - 1] = true;
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u16;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Disjoint cycles of length ≥ 2, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_roundtrip() {
        let p = Permutation::from_cycles(5, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::from_cycles(5, &p.cycles().iter().map(|c| c.iter().map(|x| x + 1).collect()).collect::<Vec<_>>()).unwrap(), p);
        assert!(!p.is_even());
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn composition_order() {
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![2, 3]]).unwrap();
        // apply a then b: 1 -> 2 -> 3
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a).is_identity());
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
