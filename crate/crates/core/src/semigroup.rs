use crate::error::{Error, Result};

/// A finite semigroup on `0..size` given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<usize>,
}

impl FiniteSemigroup {
    /// `table[i * size + j]` is the product `i·j`. Associativity is checked.
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidSemigroup("size must be positive".into()));
        }
        if table.len() != size * size {
            return Err(Error::InvalidSemigroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= size) {
            return Err(Error::InvalidSemigroup(format!(
                "product {bad} out of range"
            )));
        }
        let s = FiniteSemigroup { size, table };
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)) {
                        return Err(Error::InvalidSemigroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(s)
    }

    /// The one-element semigroup; gradings by it are no grading at all.
    pub fn trivial() -> Self {
        FiniteSemigroup {
            size: 1,
            table: vec![0],
        }
    }

    /// `(Z_2, ·)`: element 0 is absorbing, element 1 is the identity.
    pub fn z2_multiplicative() -> Self {
        FiniteSemigroup {
            size: 2,
            table: vec![0, 0, 0, 1],
        }
    }

    /// `(Z_k, +)`.
    pub fn cyclic_group(k: usize) -> Self {
        let table = (0..k * k).map(|x| (x / k + x % k) % k).collect();
        FiniteSemigroup { size: k, table }
    }

    /// Left-zero band: `a·b = a`. Associative and non-abelian for size ≥ 2.
    pub fn left_zero(size: usize) -> Self {
        let table = (0..size * size).map(|x| x / size).collect();
        FiniteSemigroup { size, table }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check(&self, t: usize) -> Result<()> {
        if t < self.size {
            Ok(())
        } else {
            Err(Error::InvalidDegree {
                degree: t,
                size: self.size,
            })
        }
    }

    /// All pairs `(r, s)` with `r·s = t`.
    pub fn factorizations(&self, t: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.size {
            for s in 0..self.size {
                if self.mul(r, s) == t {
                    out.push((r, s));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_mult_table() {
        let t = FiniteSemigroup::z2_multiplicative();
        assert_eq!(t.mul(0, 0), 0);
        assert_eq!(t.mul(0, 1), 0);
        assert_eq!(t.mul(1, 0), 0);
        assert_eq!(t.mul(1, 1), 1);
        assert!(t.is_abelian());
        assert_eq!(t.factorizations(0), vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(t.factorizations(1), vec![(1, 1)]);
    }

    #[test]
    fn left_zero_is_non_abelian() {
        let s = FiniteSemigroup::new(2, vec![0, 0, 1, 1]).unwrap();
        assert_eq!(s, FiniteSemigroup::left_zero(2));
        assert!(!s.is_abelian());
    }

    #[test]
    fn rejects_non_associative() {
        // 0·1 = 1, 1·1 = 0, everything else 0: (1·1)·1 = 0·1 = 1 but 1·(1·1) = 1·0 = 0
        let err = FiniteSemigroup::new(2, vec![0, 1, 0, 0]).unwrap_err();
        assert!(matches!(err, Error::InvalidSemigroup(_)));
        assert!(FiniteSemigroup::new(2, vec![0, 0, 0]).is_err());
        assert!(FiniteSemigroup::new(2, vec![0, 0, 0, 2]).is_err());
    }

    #[test]
    fn cyclic_groups_are_associative() {
        for k in 1..5 {
            let g = FiniteSemigroup::cyclic_group(k);
            assert!(FiniteSemigroup::new(k, g.table().to_vec()).is_ok());
        }
    }
}
