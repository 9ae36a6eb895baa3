use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order; entries are packed four bits each into a `u64`.
pub const MAX_ORDER: usize = 16;

/// A permutation of {1, …, n} in one-line notation.
///
/// Entries are packed with the first position in the most significant
/// nibble, so the derived ordering is lexicographic on one-line notation
/// (for permutations of equal order).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    code: u64,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {} exceeds {}", n, MAX_ORDER);
        let mut p = Self { n: n as u8, code: 0 };
        for j in 1..=n {
            p.set(j, j);
        }
        p
    }

    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_ORDER {
            return Err(Error::InvalidArgument(format!("order {} exceeds {}", n, MAX_ORDER)));
        }
        let mut seen = [false; MAX_ORDER + 1];
        let mut p = Self { n: n as u8, code: 0 };
        for (j, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidArgument(format!(
                    "{:?} is not a permutation of 1..{}",
                    images, n
                )));
            }
            seen[v] = true;
            p.set(j + 1, v);
        }
        Ok(p)
    }

    #[inline]
    fn shift_of(pos: usize) -> u32 {
        4 * (MAX_ORDER - pos) as u32
    }

    #[inline]
    fn set(&mut self, pos: usize, value: usize) {
        let s = Self::shift_of(pos);
        self.code = (self.code & !(0xF << s)) | (((value - 1) as u64) << s);
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// w(pos), both 1-based.
    #[inline]
    pub fn get(&self, pos: usize) -> usize {
        ((self.code >> Self::shift_of(pos)) & 0xF) as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        (1..=self.order()).map(|j| self.get(j)).collect()
    }

    pub fn position_of(&self, value: usize) -> usize {
        (1..=self.order())
            .find(|&j| self.get(j) == value)
            .expect("value in range")
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.order())
    }

    pub fn inverse(&self) -> Self {
        let mut p = *self;
        for j in 1..=self.order() {
            p.set(self.get(j), j);
        }
        p
    }

    /// (self ∘ other)(j) = self(other(j)).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut p = *self;
        for j in 1..=self.order() {
            p.set(j, self.get(other.get(j)));
        }
        p
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn inversions(&self) -> usize {
        let v = self.images();
        let mut count = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// s_i ∘ w: exchanges the values i and i+1.
    pub fn swap_values(&self, i: usize) -> Self {
        let a = self.position_of(i);
        let b = self.position_of(i + 1);
        let mut p = *self;
        p.set(a, i + 1);
        p.set(b, i);
        p
    }

    /// w ∘ s_i: exchanges the entries in positions i and i+1.
    pub fn swap_positions(&self, i: usize) -> Self {
        let (x, y) = (self.get(i), self.get(i + 1));
        let mut p = *self;
        p.set(i, y);
        p.set(i + 1, x);
        p
    }

    /// ℓ(s_i w) > ℓ(w), i.e. value i occurs before value i+1.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.position_of(i) < self.position_of(i + 1)
    }

    /// ℓ(w s_i) > ℓ(w), i.e. w(i) < w(i+1).
    pub fn right_ascent(&self, i: usize) -> bool {
        self.get(i) < self.get(i + 1)
    }

    /// The shift σ: fixes 1 and acts as `self` on {2, …, n+1}.
    pub fn shift(&self) -> Self {
        let n = self.order();
        let mut p = Self::identity(n + 1);
        for j in 1..=n {
            p.set(j + 1, self.get(j) + 1);
        }
        p
    }

    /// The same permutation viewed in the symmetric group of order m ≥ n.
    pub fn embed(&self, m: usize) -> Self {
        let mut p = Self::identity(m);
        for j in 1..=self.order() {
            p.set(j, self.get(j));
        }
        p
    }

    /// Cycle lengths, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.get(j);
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// All permutations of order n in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self::from_images(&v).expect("valid"));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
            v.swap(i, j);
            v[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for j in 1..=self.order() {
            if j > 1 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.get(j))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
