//! The affine symmetric group in window notation.
//!
//! An element of the affine symmetric group on `n = k + 1` letters is a
//! bijection `w: Z -> Z` with `w(i + n) = w(i) + n` and
//! `w(1) + ... + w(n) = n(n+1)/2`. It is stored by its window
//! `[w(1), ..., w(n)]`, which is a unique normal form, so equality of group
//! elements is equality of windows.
//!
//! Generators act as follows: `w * s_i` swaps window positions `i` and `i+1`
//! (positions taken cyclically, with `w(0) = w(n) - n`), and `s_i * w` swaps
//! the values congruent to `i` and `i+1` modulo `n`.

mod ball;
mod index_set;
mod order;

pub use ball::{ball, grassmannian_ball, BallCap, DEFAULT_BALL_CAP};
pub use index_set::IndexSet;
pub use order::{
    bruhat_leq, demazure, flip, is_bruhat_cover, meet_ls, phi_apply, psi_apply, s_join_l, weak_leq,
};
pub(crate) use order::{bruhat_leq_unchecked, hecke_apply, weak_leq_unchecked};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported rank. Index sets are stored as bit masks.
pub const MAX_RANK: usize = 30;

/// Which side a generator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

pub(crate) fn check_rank(k: usize) -> Result<()> {
    if k == 0 || k > MAX_RANK {
        return Err(Error::InvalidRank(k));
    }
    Ok(())
}

pub(crate) fn same_rank(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::RankMismatch { left: a, right: b });
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    k: usize,
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn identity(k: usize) -> Result<Self> {
        check_rank(k)?;
        Ok(Self::identity_unchecked(k))
    }

    pub(crate) fn identity_unchecked(k: usize) -> Self {
        Self {
            k,
            window: (1..=(k as i64 + 1)).collect(),
        }
    }

    /// Builds an element from its window, checking the residue and sum
    /// normalization.
    pub fn from_window(k: usize, window: Vec<i64>) -> Result<Self> {
        check_rank(k)?;
        let n = k as i64 + 1;
        if window.len() != k + 1 {
            return Err(Error::InvalidWindow {
                k,
                window,
                reason: "window length must be k+1",
            });
        }
        let mut seen = vec![false; k + 1];
        for &x in &window {
            let r = x.rem_euclid(n) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow {
                    k,
                    window,
                    reason: "residues modulo k+1 must be distinct",
                });
            }
            seen[r] = true;
        }
        if window.iter().sum::<i64>() != n * (n + 1) / 2 {
            return Err(Error::InvalidWindow {
                k,
                window,
                reason: "window must sum to n(n+1)/2",
            });
        }
        Ok(Self { k, window })
    }

    /// The simple reflection `s_i`.
    pub fn generator(k: usize, i: usize) -> Result<Self> {
        check_rank(k)?;
        if i > k {
            return Err(Error::LetterOutOfRange { letter: i, k });
        }
        Ok(Self::identity_unchecked(k).mul_generator_right(i))
    }

    /// Evaluates `s_{word[0]} s_{word[1]} ... s_{word[m-1]}`. The word need not
    /// be reduced.
    pub fn from_word(k: usize, word: &[usize]) -> Result<Self> {
        check_rank(k)?;
        let mut w = Self::identity_unchecked(k);
        for &letter in word {
            if letter > k {
                return Err(Error::LetterOutOfRange { letter, k });
            }
            w = w.mul_generator_right(letter);
        }
        Ok(w)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.k + 1
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i64 + 1)
    }

    /// `w(j)` for an arbitrary integer `j`.
    pub fn eval(&self, j: i64) -> i64 {
        let n = self.n() as i64;
        let r = (j - 1).rem_euclid(n);
        let q = (j - 1).div_euclid(n);
        self.window[r as usize] + q * n
    }

    /// Coxeter length, via the affine inversion count
    /// `sum_{1<=i<j<=n} |floor((w(j) - w(i)) / n)|`.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let mut total = 0i64;
        for i in 0..self.window.len() {
            for j in (i + 1)..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(n).abs();
            }
        }
        total as usize
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_rank(self.k, other.k)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        Self {
            k: self.k,
            window: other.window.iter().map(|&x| self.eval(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut inv = vec![0i64; self.n()];
        for (pos, &x) in self.window.iter().enumerate() {
            let r = (x - 1).rem_euclid(n);
            let q = (x - 1).div_euclid(n);
            inv[r as usize] = pos as i64 + 1 - q * n;
        }
        Self {
            k: self.k,
            window: inv,
        }
    }

    /// `w * s_i`.
    pub fn mul_generator_right(&self, i: usize) -> Self {
        let n = self.n();
        let mut window = self.window.clone();
        if i == 0 {
            let first = window[0];
            let last = window[n - 1];
            window[0] = last - n as i64;
            window[n - 1] = first + n as i64;
        } else {
            window.swap(i - 1, i);
        }
        Self { k: self.k, window }
    }

    /// `s_i * w`.
    pub fn mul_generator_left(&self, i: usize) -> Self {
        let n = self.n() as i64;
        let i = i as i64;
        let window = self
            .window
            .iter()
            .map(|&x| {
                let r = x.rem_euclid(n);
                if r == i {
                    x + 1
                } else if r == (i + 1) % n {
                    x - 1
                } else {
                    x
                }
            })
            .collect();
        Self { k: self.k, window }
    }

    pub fn mul_generator(&self, i: usize, side: Side) -> Self {
        match side {
            Side::Left => self.mul_generator_left(i),
            Side::Right => self.mul_generator_right(i),
        }
    }

    /// Whether `w * s_i < w`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.n();
        if i == 0 {
            self.window[n - 1] - n as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// Whether `s_i * w < w`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn has_descent(&self, i: usize, side: Side) -> bool {
        match side {
            Side::Left => self.has_left_descent(i),
            Side::Right => self.has_right_descent(i),
        }
    }

    pub fn descents(&self, side: Side) -> IndexSet {
        let target = match side {
            Side::Left => self.inverse(),
            Side::Right => self.clone(),
        };
        let mut set = IndexSet::empty_unchecked(self.k);
        for i in 0..=self.k {
            if target.has_right_descent(i) {
                set.insert_unchecked(i);
            }
        }
        set
    }

    /// Affine Grassmannian (0-dominant): no right descent other than 0.
    /// Equivalently the window is increasing.
    pub fn is_grassmannian(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// A reduced word, obtained by repeatedly stripping the numerically
    /// smallest left descent.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while !w.is_identity() {
            let inv = w.inverse();
            let s = (0..=self.k)
                .find(|&i| inv.has_right_descent(i))
                .expect("non-identity element has a left descent");
            letters.push(s);
            w = w.mul_generator_left(s);
        }
        ReducedWord { k: self.k, letters }
    }

    /// Image under the diagram automorphism `s_i -> s_{i+t}`.
    pub fn shift(&self, t: usize) -> Self {
        let t = (t % self.n()) as i64;
        Self {
            k: self.k,
            window: (1..=self.n() as i64)
                .map(|j| self.eval(j - t) + t)
                .collect(),
        }
    }

    /// Whether this element is a reflection, i.e. conjugate to a simple
    /// generator. Affine reflections swap `a + qn` and `b + qn` for all `q`.
    pub fn is_reflection(&self) -> bool {
        let moved: Vec<usize> = (0..self.n())
            .filter(|&p| self.window[p] != p as i64 + 1)
            .collect();
        if moved.len() != 2 {
            return false;
        }
        let n = self.n() as i64;
        let p = moved[0] as i64 + 1;
        let image = self.eval(p);
        let q = moved[1] as i64 + 1;
        image.rem_euclid(n) == q.rem_euclid(n) && self.eval(image) == p
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.window)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A word over `{0, ..., k}` whose length equals the length of its product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    k: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(k: usize, letters: Vec<usize>) -> Result<Self> {
        let w = AffinePermutation::from_word(k, &letters)?;
        if w.length() != letters.len() {
            return Err(Error::Precondition(format!(
                "word {letters:?} is not reduced"
            )));
        }
        Ok(Self { k, letters })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> AffinePermutation {
        AffinePermutation::from_word(self.k, &self.letters).expect("letters validated")
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.k >= 10 { "," } else { "" };
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// The cyclically decreasing element `d_A`: the product of `s_i` over `A` in an
/// order where `j` never precedes `j+1`.
pub fn d_elem(set: &IndexSet) -> AffinePermutation {
    let word = set.cyclically_decreasing_word();
    AffinePermutation::from_word(set.k(), &word).expect("valid index set")
}

/// The cyclically increasing element `u_A`, the inverse of `d_A`.
pub fn u_elem(set: &IndexSet) -> AffinePermutation {
    let mut word = set.cyclically_decreasing_word();
    word.reverse();
    AffinePermutation::from_word(set.k(), &word).expect("valid index set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k: usize, word: &[usize]) -> AffinePermutation {
        AffinePermutation::from_word(k, word).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        let e = w(3, &[]);
        assert_eq!(e.window(), &[1, 2, 3, 4]);
        assert!(e.is_identity());
        assert_eq!(w(3, &[1, 1]), e);
        assert_eq!(w(3, &[0, 0]), e);
    }

    #[test]
    fn out_of_range_letter_rejected() {
        assert!(matches!(
            AffinePermutation::from_word(3, &[4]),
            Err(Error::LetterOutOfRange { letter: 4, k: 3 })
        ));
    }

    #[test]
    fn window_validation() {
        assert!(AffinePermutation::from_window(3, vec![0, 2, 3, 5]).is_ok());
        assert!(AffinePermutation::from_window(3, vec![1, 2, 3, 8]).is_err());
        assert!(AffinePermutation::from_window(3, vec![1, 5, 3, 1]).is_err());
        assert!(AffinePermutation::from_window(3, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn braid_relations() {
        for k in 2..=4 {
            for i in 0..=k {
                let j = (i + 1) % (k + 1);
                assert_eq!(w(k, &[i, j, i]), w(k, &[j, i, j]));
            }
        }
        assert_eq!(w(3, &[0, 2]), w(3, &[2, 0]));
    }

    #[test]
    fn lengths() {
        assert_eq!(w(3, &[]).length(), 0);
        assert_eq!(w(3, &[3, 1, 0]).length(), 3);
        assert_eq!(w(3, &[2, 0, 3, 2, 1, 0]).length(), 6);
        assert_eq!(w(1, &[0, 1, 0, 1, 0]).length(), 5);
    }

    #[test]
    fn product_and_inverse() {
        let x = w(3, &[3, 1, 0]);
        let s1 = AffinePermutation::generator(3, 1).unwrap();
        let y = s1.mul(&x).unwrap();
        assert_eq!(y, w(3, &[3, 0]));
        assert_eq!(y.length(), 2);
        assert!(x.inverse().mul(&x).unwrap().is_identity());
        assert_eq!(s1.inverse(), s1);
        let other = AffinePermutation::identity(2).unwrap();
        assert!(matches!(x.mul(&other), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn descent_sets() {
        let x = w(3, &[3, 1, 0]);
        assert_eq!(x.descents(Side::Left).to_vec(), vec![1, 3]);
        assert_eq!(x.descents(Side::Right).to_vec(), vec![0]);
        assert!(w(3, &[]).descents(Side::Left).is_empty());
        let wl = w(3, &[2, 0, 3, 2, 1, 0]);
        assert_eq!(wl.descents(Side::Right).to_vec(), vec![0]);
        assert!(wl.is_grassmannian());
    }

    #[test]
    fn reduced_words_round_trip() {
        assert!(w(3, &[]).reduced_word().is_empty());
        assert_eq!(w(3, &[0]).reduced_word().letters(), &[0]);
        let wl = w(3, &[2, 0, 3, 2, 1, 0]);
        let rw = wl.reduced_word();
        assert_eq!(rw.len(), 6);
        assert_eq!(rw.evaluate(), wl);
    }

    #[test]
    fn cyclically_decreasing_elements() {
        let a = IndexSet::new(5, &[0, 1, 3, 5]).unwrap();
        let expected = w(5, &[1, 0, 5, 3]);
        assert_eq!(d_elem(&a), expected);
        for word in [[1, 0, 3, 5], [1, 3, 0, 5], [3, 1, 0, 5]] {
            assert_eq!(d_elem(&a), w(5, &word));
        }
        assert_eq!(d_elem(&a).length(), 4);
        assert_eq!(u_elem(&a), d_elem(&a).inverse());
        assert!(d_elem(&IndexSet::empty(5).unwrap()).is_identity());
    }

    #[test]
    fn shift_rotates_generators() {
        for k in 1..=4 {
            for i in 0..=k {
                for t in 0..=k {
                    let s = AffinePermutation::generator(k, i).unwrap();
                    let expected = AffinePermutation::generator(k, (i + t) % (k + 1)).unwrap();
                    assert_eq!(s.shift(t), expected);
                }
            }
        }
    }

    #[test]
    fn reflections() {
        assert!(w(3, &[1]).is_reflection());
        assert!(w(3, &[1, 2, 1]).is_reflection());
        assert!(w(2, &[0, 1, 0]).is_reflection());
        assert!(!w(3, &[1, 2]).is_reflection());
        assert!(!w(3, &[]).is_reflection());
        assert!(!w(3, &[1, 3]).is_reflection());
    }
}
