use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;

/// Which elements of a Hom space the checkers visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingPolicy {
    pub seed: u64,
    /// Enumerate every element when the space has at most this many.
    pub exhaustive_bound: u64,
    /// Total number of elements visited otherwise.
    pub samples: usize,
}

impl Default for SamplingPolicy {
    fn default() -> Self {
        SamplingPolicy {
            seed: 0,
            exhaustive_bound: 4096,
            samples: 256,
        }
    }
}

/// Elements of `k^dim` chosen by the policy, plus whether the list is complete.
#[derive(Clone, Debug)]
pub struct Sample<F: Field> {
    pub elements: Vec<Vec<F::Elem>>,
    pub exhaustive: bool,
}

impl SamplingPolicy {
    pub fn with_seed(seed: u64) -> Self {
        SamplingPolicy {
            seed,
            ..Self::default()
        }
    }

    fn space_size(order: u64, dim: usize) -> Option<u64> {
        let mut n: u64 = 1;
        for _ in 0..dim {
            n = n.checked_mul(order)?;
        }
        Some(n)
    }

    /// Exhaustive over a small finite space; otherwise zero, the unit
    /// vectors, then seeded random vectors. `salt` separates the streams of
    /// different Hom spaces.
    pub fn elements<F: Field>(&self, field: F, dim: usize, salt: u64) -> Sample<F> {
        if let Some(size) = field.order().and_then(|q| Self::space_size(q, dim)) {
            if size <= self.exhaustive_bound {
                let q = field.order().expect("finite");
                let elements = (0..size)
                    .map(|mut n| {
                        (0..dim)
                            .map(|_| {
                                let e = field.nth_elem(n % q);
                                n /= q;
                                e
                            })
                            .collect()
                    })
                    .collect();
                return Sample {
                    elements,
                    exhaustive: true,
                };
            }
        }
        let mut elements = vec![vec![field.zero(); dim]];
        for i in 0..dim {
            if elements.len() >= self.samples {
                break;
            }
            let mut e = vec![field.zero(); dim];
            e[i] = field.one();
            elements.push(e);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        while elements.len() < self.samples {
            elements.push((0..dim).map(|_| field.random_elem(&mut rng)).collect());
        }
        Sample {
            elements,
            exhaustive: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn exhaustive_over_small_spaces() {
        let p = SamplingPolicy::default();
        let s = p.elements(PrimeField::new(2).unwrap(), 3, 0);
        assert!(s.exhaustive);
        assert_eq!(s.elements.len(), 8);
        let mut sorted = s.elements.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        assert_eq!(p.elements(PrimeField::new(3).unwrap(), 0, 0).elements.len(), 1);
    }

    #[test]
    fn sampled_spaces_are_seeded() {
        let p = SamplingPolicy::with_seed(7);
        let a = p.elements(Rationals, 3, 11);
        let b = p.elements(Rationals, 3, 11);
        assert!(!a.exhaustive);
        assert_eq!(a.elements.len(), 256);
        assert_eq!(a.elements, b.elements);
        assert_ne!(a.elements, p.elements(Rationals, 3, 12).elements);
        let big = p.elements(PrimeField::new(2).unwrap(), 13, 0);
        assert!(!big.exhaustive);
    }
}
