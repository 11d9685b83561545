use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A finite formal combination `Σ c_k · k` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, T> {
    terms: BTreeMap<K, T>,
}

impl<K: Ord, T> Default for LinComb<K, T> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, T: Scalar> LinComb<K, T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(key: K, coeff: T) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::from_term(key, T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: K, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &T) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone() * factor.clone());
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scaled(&self, factor: &T) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-T::one())
    }

    pub fn coeff(&self, key: &K) -> T {
        self.terms.get(key).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, T> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies a linear map defined on basis elements.
    pub fn map_linear<K2, F>(&self, mut f: F) -> LinComb<K2, T>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> LinComb<K2, T>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a basis relabelling `k ↦ ±k'` (or drops the term on `None`).
    pub fn map_keys<K2, F>(&self, mut f: F) -> LinComb<K2, T>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> Option<(K2, T)>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            if let Some((k2, s)) = f(k) {
                out.add_term(k2, c.clone() * s);
            }
        }
        out
    }
}

impl<K: Ord + Clone, T: Scalar> FromIterator<(K, T)> for LinComb<K, T> {
    fn from_iter<I: IntoIterator<Item = (K, T)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord, T> IntoIterator for LinComb<K, T> {
    type Item = (K, T);
    type IntoIter = btree_map::IntoIter<K, T>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord, T> IntoIterator for &'a LinComb<K, T> {
    type Item = (&'a K, &'a T);
    type IntoIter = btree_map::Iter<'a, K, T>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + fmt::Debug, T: fmt::Debug> fmt::Debug for LinComb<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c:?}·{k:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_keys() {
        let mut a: LinComb<&str, i64> = LinComb::basis("x");
        a.add_term("y", 3);
        a.add_term("x", -1);
        assert_eq!(a.len(), 1);
        assert_eq!(a.coeff(&"y"), 3);
        assert_eq!(a.coeff(&"x"), 0);
    }
}
