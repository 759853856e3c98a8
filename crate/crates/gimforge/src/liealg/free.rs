//! Free Lie algebras in associative word coordinates with the Lyndon basis.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Word = Vec<u8>;

/// Noncommutative polynomial with integer coefficients, zero terms omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Poly(pub BTreeMap<Word, BigInt>);

impl Poly {
    pub fn letter(g: u8) -> Poly {
        Poly(BTreeMap::from([(vec![g], BigInt::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Poly, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.0 {
            let entry = self.0.entry(w.clone()).or_insert_with(BigInt::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.0.remove(w);
            }
        }
    }

    fn product(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_scaled(&Poly(BTreeMap::from([(w, BigInt::one())])), &(x * y));
            }
        }
        out
    }

    /// Commutator `ab - ba`.
    pub fn bracket(&self, other: &Poly) -> Poly {
        let mut out = self.product(other);
        out.add_scaled(&other.product(self), &-BigInt::one());
        out
    }
}

/// Strictly smaller than every proper suffix.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("words of length >= 2 have a Lyndon suffix");
    (&w[..i], &w[i..])
}

/// Bracketing `P_w` of a Lyndon word, expanded into words.
pub fn lyndon_bracket(w: &[u8], memo: &mut HashMap<Word, Poly>) -> Poly {
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let p = if w.len() == 1 {
        Poly::letter(w[0])
    } else {
        let (u, v) = standard_factorization(w);
        lyndon_bracket(u, memo).bracket(&lyndon_bracket(v, memo))
    };
    memo.insert(w.to_vec(), p.clone());
    p
}

/// All words with the given letter counts, in lexicographic order.
pub fn words_of(counts: &[u32]) -> Vec<Word> {
    fn go(counts: &mut [u32], left: u32, prefix: &mut Word, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for g in 0..counts.len() {
            if counts[g] > 0 {
                counts[g] -= 1;
                prefix.push(g as u8);
                go(counts, left - 1, prefix, out);
                prefix.pop();
                counts[g] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut c = counts.to_vec();
    go(&mut c, counts.iter().sum(), &mut Vec::new(), &mut out);
    out
}

pub fn lyndon_words(counts: &[u32]) -> Vec<Word> {
    words_of(counts).into_iter().filter(|w| is_lyndon(w)).collect()
}

/// All letter-count vectors with the given total.
pub fn multidegrees(letters: usize, height: u32) -> Vec<Vec<u32>> {
    fn go(letters: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == letters {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            go(letters, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if letters > 0 {
        go(letters, height, &mut Vec::new(), &mut out);
    }
    out
}

/// Lyndon basis of every multidegree of height `1..=cap` over `letters` generators.
pub fn free_basis(letters: usize, cap: u32) -> BTreeMap<Vec<u32>, Vec<Word>> {
    (1..=cap).flat_map(|h| multidegrees(letters, h)).map(|d| (d.clone(), lyndon_words(&d))).collect()
}

/// One multidegree of the free Lie algebra with its Lyndon basis.
#[derive(Debug, Clone)]
pub struct FreeComponent {
    pub lyndon: Vec<Word>,
    pub expansions: Vec<Poly>,
    index: HashMap<Word, usize>,
}

impl FreeComponent {
    pub fn new(counts: &[u32], memo: &mut HashMap<Word, Poly>) -> Self {
        let lyndon = lyndon_words(counts);
        let expansions = lyndon.iter().map(|w| lyndon_bracket(w, memo)).collect();
        let index = lyndon.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        FreeComponent { lyndon, expansions, index }
    }

    pub fn dim(&self) -> usize {
        self.lyndon.len()
    }

    /// Lyndon coordinates of a Lie polynomial of this multidegree. Uses that
    /// `P_w` is `w` plus lexicographically larger words.
    pub fn to_lyndon(&self, p: &Poly) -> Vec<BigInt> {
        let mut rest = p.clone();
        let mut out = vec![BigInt::zero(); self.dim()];
        while let Some((w, c)) = rest.0.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            let k = *self.index.get(&w).expect("not a Lie element of this multidegree");
            rest.add_scaled(&self.expansions[k], &-c.clone());
            out[k] = c;
        }
        out
    }

    pub fn to_poly(&self, coords: &[BigInt]) -> Poly {
        let mut p = Poly::default();
        for (c, e) in coords.iter().zip(&self.expansions) {
            p.add_scaled(e, c);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u32) -> u128 {
        (1..=n as u128).product()
    }

    fn mobius(n: u32) -> i128 {
        let mut n = n;
        let mut out = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                out = -out;
            }
            p += 1;
        }
        if n > 1 {
            out = -out;
        }
        out
    }

    /// Necklace (Witt) count of a multidegree.
    fn witt(counts: &[u32]) -> u128 {
        let total: u32 = counts.iter().sum();
        let g = counts.iter().fold(0, |a, &b| num_integer::gcd(a, b));
        let mut sum: i128 = 0;
        for d in 1..=g {
            if g % d == 0 {
                let multi = factorial(total / d) / counts.iter().map(|&c| factorial(c / d)).product::<u128>();
                sum += mobius(d) * multi as i128;
            }
        }
        (sum / total as i128) as u128
    }

    #[test]
    fn lyndon_counts_match_witt() {
        for h in 1..=6 {
            for d in multidegrees(3, h) {
                assert_eq!(lyndon_words(&d).len() as u128, witt(&d), "{d:?}");
            }
        }
        assert_eq!(lyndon_words(&[1, 1]).len(), 1);
        assert_eq!(lyndon_words(&[1, 1, 1, 1]).len(), 6);
        assert_eq!(lyndon_words(&[0, 1, 0]).len(), 1);
    }

    #[test]
    fn factorization_and_leading_word() {
        assert_eq!(standard_factorization(&[0, 0, 1]), (&[0u8][..], &[0u8, 1][..]));
        assert_eq!(standard_factorization(&[0, 1, 1]), (&[0u8, 1][..], &[1u8][..]));
        let mut memo = HashMap::new();
        for d in multidegrees(3, 4) {
            for w in lyndon_words(&d) {
                let p = lyndon_bracket(&w, &mut memo);
                let (first, c) = p.0.iter().next().unwrap();
                assert_eq!((first, c), (&w, &BigInt::one()));
            }
        }
    }

    #[test]
    fn lyndon_coordinates_round_trip() {
        let mut memo = HashMap::new();
        let comp = FreeComponent::new(&[2, 1, 1], &mut memo);
        let x = |g| Poly::letter(g);
        let p = x(1).bracket(&x(0).bracket(&x(2).bracket(&x(0))));
        let c = comp.to_lyndon(&p);
        assert_eq!(comp.to_poly(&c), p);
    }

    #[test]
    fn bracket_is_alternating() {
        let a = Poly::letter(0).bracket(&Poly::letter(1));
        assert!(a.bracket(&a).is_zero());
        assert!(Poly::letter(2).bracket(&Poly::letter(2)).is_zero());
    }
}
