use std::fmt;

/// Exponent vector `(a_0, ..., a_n)` of a monomial `x_0^a_0 ... x_n^a_n`.
///
/// The derived `Ord` is plain lexicographic comparison of the entries and is
/// only used for storage; monomial orders live in [`crate::orders`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zeros(len: usize) -> Self {
        Exponent(vec![0; len])
    }

    /// The exponent of the single variable `x_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut e = vec![0; len];
        e[i] = 1;
        Exponent(e)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self + e_i`.
    pub fn add_var(&self, i: usize) -> Exponent {
        let mut e = self.0.clone();
        e[i] += 1;
        Exponent(e)
    }

    /// `self - e_i`, if it stays non-negative.
    pub fn sub_var(&self, i: usize) -> Option<Exponent> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Exponent(e))
    }

    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Exponent)
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn dot(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(a, w)| u64::from(*a) * w).sum()
    }

    /// All exponents of total degree `degree` in `len` variables, in
    /// descending lexicographic order of the entries (`x_0^d` first).
    pub fn all_of_degree(len: usize, degree: u32) -> Vec<Exponent> {
        fn fill(prefix: &mut Vec<u32>, len: usize, left: u32, out: &mut Vec<Exponent>) {
            if prefix.len() + 1 == len {
                prefix.push(left);
                out.push(Exponent(prefix.clone()));
                prefix.pop();
                return;
            }
            for a in (0..=left).rev() {
                prefix.push(a);
                fill(prefix, len, left - a, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if len == 0 {
            return out;
        }
        fill(&mut Vec::with_capacity(len), len, degree, &mut out);
        out
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}
