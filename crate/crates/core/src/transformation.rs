use std::fmt;

use crate::error::{Error, Result};
use crate::state_set::{StateSet, MAX_SET_STATES};

/// A total map of the states `{0, .., n-1}` into themselves.
///
/// Composition is a left action: `t.then(&u)` applies `t` first and `u`
/// second, so the transformation induced by a word `xa` is `t_x.then(t_a)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    image: Vec<u32>,
}

impl Transformation {
    /// Builds a transformation from 0-based images.
    pub fn new(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        if let Some(&bad) = image.iter().find(|&&q| q as usize >= n) {
            return Err(Error::StateOutOfRange {
                state: bad as usize + 1,
                n,
            });
        }
        Ok(Transformation { image })
    }

    /// Builds a transformation from 1-based images, `[2, 3, 1]` being the
    /// 3-cycle `(1,2,3)`.
    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        let n = image.len();
        if let Some(&bad) = image.iter().find(|&&q| q == 0 || q > n) {
            return Err(Error::StateOutOfRange { state: bad, n });
        }
        Ok(Transformation {
            image: image.iter().map(|&q| (q - 1) as u32).collect(),
        })
    }

    pub(crate) fn from_raw(image: Vec<u32>) -> Self {
        debug_assert!(image.iter().all(|&q| (q as usize) < image.len()));
        Transformation { image }
    }

    pub fn identity(n: usize) -> Self {
        Transformation {
            image: (0..n as u32).collect(),
        }
    }

    /// The cycle `(q_1, .., q_k)` written with 1-based states; states outside
    /// the cycle are fixed. A 1-element cycle is the identity.
    pub fn cycle(n: usize, states: &[usize]) -> Self {
        let mut t = Self::identity(n);
        for (i, &q) in states.iter().enumerate() {
            let next = states[(i + 1) % states.len()];
            t.image[q - 1] = (next - 1) as u32;
        }
        t
    }

    /// The unitary transformation `(p -> q)`, 1-based.
    pub fn unitary(n: usize, p: usize, q: usize) -> Self {
        Self::collapse(n, &[p], q)
    }

    /// The constant transformation `(Q_n -> q)`, 1-based.
    pub fn constant(n: usize, q: usize) -> Self {
        Transformation {
            image: vec![(q - 1) as u32; n],
        }
    }

    /// Sends every listed 1-based state to `q` and fixes the rest.
    pub fn collapse(n: usize, from: &[usize], q: usize) -> Self {
        let mut t = Self::identity(n);
        for &p in from {
            t.image[p - 1] = (q - 1) as u32;
        }
        t
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// 0-based images.
    pub fn image(&self) -> &[u32] {
        &self.image
    }

    /// 1-based images, as printed.
    pub fn image_one_based(&self) -> Vec<usize> {
        self.image.iter().map(|&q| q as usize + 1).collect()
    }

    #[inline]
    pub fn apply(&self, q: usize) -> usize {
        self.image[q] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &q)| i == q as usize)
    }

    /// Image of a state set; the transformation must act on at most 32 states.
    pub fn apply_set(&self, set: StateSet) -> StateSet {
        set.iter().map(|q| self.apply(q)).collect()
    }

    /// Applies `self` then `other`: the result maps `i` to `other(self(i))`.
    pub fn then(&self, other: &Transformation) -> Result<Transformation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Transformation {
            image: self
                .image
                .iter()
                .map(|&q| other.image[q as usize])
                .collect(),
        })
    }

    /// Byte-indexed lookup for fast set images.
    pub fn image_table(&self) -> ImageTable {
        ImageTable::new(self)
    }
}

/// Free-function form of [`Transformation::then`].
pub fn compose(t: &Transformation, u: &Transformation) -> Result<Transformation> {
    t.then(u)
}

/// Precomputed images of every 8-bit chunk of a state set.
#[derive(Clone, Debug)]
pub struct ImageTable {
    chunks: Vec<[u32; 256]>,
}

impl ImageTable {
    fn new(t: &Transformation) -> Self {
        assert!(
            t.len() <= MAX_SET_STATES,
            "set images need at most 32 states"
        );
        let chunk_count = t.len().div_ceil(8);
        let mut chunks = vec![[0u32; 256]; chunk_count];
        for (c, table) in chunks.iter_mut().enumerate() {
            for byte in 1..256usize {
                let low = byte.trailing_zeros() as usize;
                let q = c * 8 + low;
                let bit = if q < t.len() { 1u32 << t.apply(q) } else { 0 };
                table[byte] = table[byte & (byte - 1)] | bit;
            }
        }
        ImageTable { chunks }
    }

    #[inline]
    pub fn apply(&self, set: StateSet) -> StateSet {
        let bits = set.bits();
        let mut out = 0;
        for (c, table) in self.chunks.iter().enumerate() {
            out |= table[((bits >> (8 * c)) & 0xff) as usize];
        }
        StateSet::from_bits(out)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, q) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", q + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(image: &[usize]) -> Transformation {
        Transformation::from_one_based(image).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let x = t(&[2, 2, 3, 1]);
        let id = Transformation::identity(4);
        assert_eq!(compose(&id, &x).unwrap(), x);
        assert_eq!(compose(&x, &id).unwrap(), x);
    }

    #[test]
    fn cycle_squared() {
        let c = Transformation::cycle(3, &[1, 2, 3]);
        assert_eq!(c, t(&[2, 3, 1]));
        // (1,2,3) twice: 1 -> 3, 2 -> 1, 3 -> 2
        assert_eq!(compose(&c, &c).unwrap(), t(&[3, 1, 2]));
    }

    #[test]
    fn constant_absorbs() {
        let swap = Transformation::cycle(3, &[1, 2]);
        let k = Transformation::constant(3, 1);
        assert_eq!(compose(&swap, &k).unwrap(), k);
    }

    #[test]
    fn size_mismatch() {
        let err = compose(&Transformation::identity(2), &Transformation::identity(3));
        assert_eq!(err, Err(Error::SizeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn constructors() {
        assert_eq!(Transformation::unitary(5, 4, 5), t(&[1, 2, 3, 5, 5]));
        assert_eq!(Transformation::collapse(4, &[1, 2, 3], 2), t(&[2, 2, 2, 4]));
        assert_eq!(Transformation::cycle(4, &[2]), Transformation::identity(4));
        assert!(Transformation::from_one_based(&[1, 4, 2]).is_err());
        assert!(Transformation::new(vec![0, 3]).is_err());
        assert_eq!(t(&[2, 3, 1]).to_string(), "[2,3,1]");
    }

    #[test]
    fn set_image() {
        let x = t(&[2, 2, 3, 1]);
        let s = StateSet::one_based(&[1, 2, 4]);
        assert_eq!(x.apply_set(s), StateSet::one_based(&[1, 2]));
        assert_eq!(x.image_table().apply(s), StateSet::one_based(&[1, 2]));
    }

    fn arb_transformation(n: usize) -> impl Strategy<Value = Transformation> {
        prop::collection::vec(0..n as u32, n).prop_map(|v| Transformation::new(v).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (Transformation, Transformation, Transformation)> {
        (1usize..=8).prop_flat_map(|n| {
            (
                arb_transformation(n),
                arb_transformation(n),
                arb_transformation(n),
            )
        })
    }

    proptest! {
        #[test]
        fn composition_is_associative((a, b, c) in arb_triple()) {
            let left = a.then(&b).unwrap().then(&c).unwrap();
            let right = a.then(&b.then(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn image_table_matches_pointwise(
            (t, bits) in (1usize..=20).prop_flat_map(|n| (arb_transformation(n), 0u32..(1u32 << n)))
        ) {
            let s = StateSet::from_bits(bits);
            prop_assert_eq!(t.image_table().apply(s), t.apply_set(s));
        }
    }
}
