//! Integer vectors and majority estimates.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A vector in `Zⁿ`. Ordering is lexicographic over the entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerVector(Vec<i64>);

impl IntegerVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The `i`-th unit vector of length `n` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// Number of non-zero entries.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&v| v != 0).count()
    }

    pub fn checked_sub(&self, other: &IntegerVector) -> Result<IntegerVector> {
        ensure_same_len(self, other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("vector difference")))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// Componentwise minimum of a non-empty collection of equal-length vectors.
    pub fn componentwise_min<'a, I>(vectors: I) -> Option<IntegerVector>
    where
        I: IntoIterator<Item = &'a IntegerVector>,
    {
        let mut iter = vectors.into_iter();
        let mut acc = iter.next()?.0.clone();
        for v in iter {
            for (a, b) in acc.iter_mut().zip(&v.0) {
                *a = (*a).min(*b);
            }
        }
        Some(Self(acc))
    }
}

impl Deref for IntegerVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IntegerVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntegerVector {
    fn from(v: [i64; N]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Display for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn ensure_same_len(a: &[i64], b: &[i64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(())
}

/// Componentwise sum; fails on length mismatch or `i64` overflow.
pub fn vector_add(a: &IntegerVector, b: &IntegerVector) -> Result<IntegerVector> {
    ensure_same_len(a, b)?;
    a.0.iter()
        .zip(&b.0)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow("vector sum")))
        .collect::<Result<Vec<_>>>()
        .map(IntegerVector)
}

/// Output of the majority estimator: an integer or an erasure per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EstimateWord(Vec<Option<i64>>);

impl EstimateWord {
    pub fn new(entries: Vec<Option<i64>>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[Option<i64>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Erased coordinates, ascending.
    pub fn erasures(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.is_none().then_some(i))
            .collect()
    }

    /// Coordinates holding an integer different from `x`.
    pub fn errors_against(&self, x: &IntegerVector) -> usize {
        self.0
            .iter()
            .zip(x.iter())
            .filter(|(z, xi)| matches!(z, Some(v) if v != *xi))
            .count()
    }
}

impl fmt::Display for EstimateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match v {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "?")?,
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_examples() {
        let v = |a: [i64; 2]| IntegerVector::from(a);
        assert_eq!(vector_add(&v([0, 0]), &v([1, 0])).unwrap(), v([1, 0]));
        assert_eq!(vector_add(&v([1, 2]), &v([0, 0])).unwrap(), v([1, 2]));
        assert_eq!(vector_add(&v([1, -1]), &v([-1, 1])).unwrap(), v([0, 0]));
    }

    #[test]
    fn add_rejects_mismatch_and_overflow() {
        let a = IntegerVector::from([1, 2]);
        let b = IntegerVector::from([1]);
        assert!(matches!(vector_add(&a, &b), Err(Error::LengthMismatch { .. })));
        let big = IntegerVector::from([i64::MAX]);
        let one = IntegerVector::from([1]);
        assert_eq!(vector_add(&big, &one), Err(Error::Overflow("vector sum")));
    }

    #[test]
    fn componentwise_min_and_display() {
        let ys = [IntegerVector::from([2, 1, 1]), IntegerVector::from([1, 2, 1])];
        let z = IntegerVector::componentwise_min(&ys).unwrap();
        assert_eq!(z, IntegerVector::from([1, 1, 1]));
        assert_eq!(z.to_string(), "(1,1,1)");
        assert!(IntegerVector::componentwise_min(&[]).is_none());
    }

    #[test]
    fn estimate_word_accessors() {
        let z = EstimateWord::new(vec![Some(0), None, Some(3), None]);
        assert_eq!(z.erasures(), vec![1, 3]);
        assert_eq!(z.errors_against(&IntegerVector::from([0, 5, 2, 1])), 1);
        assert_eq!(z.to_string(), "(0,?,3,?)");
    }
}
