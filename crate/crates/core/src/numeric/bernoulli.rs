use super::gauss::{binomial, rat, rat_int, Rat};
use num::{One, Zero};
use std::sync::Mutex;

/// Whether `B_1` is taken as `-1/2` (first kind) or `+1/2` (second kind).
/// All other values agree between the two conventions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BernoulliKind {
    First,
    Second,
}

static CACHE: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` in the first-kind convention (`B_1 = -1/2`),
/// from the defining recurrence `sum_{k=0}^{m} C(m+1,k) B_k = 0`.
/// Values are cached; the fill is idempotent so concurrent callers are fine.
pub fn bernoulli(n: usize) -> Rat {
    let mut cache = CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
        let mut acc = Rat::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += Rat::from_integer(binomial(m as u64 + 1, k as u64)) * b;
        }
        let b_m = -acc / rat_int(m as i64 + 1);
        cache.push(b_m);
    }
    cache[n].clone()
}

pub fn bernoulli_kind(n: usize, kind: BernoulliKind) -> Rat {
    match (n, kind) {
        (1, BernoulliKind::Second) => rat(1, 2),
        _ => bernoulli(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        for m in 1..=10 {
            assert!(bernoulli(2 * m + 1).is_zero(), "B_{} != 0", 2 * m + 1);
        }
    }

    #[test]
    fn second_kind_flips_only_b1() {
        assert_eq!(bernoulli_kind(1, BernoulliKind::Second), rat(1, 2));
        for n in [0usize, 2, 3, 4, 7, 8] {
            assert_eq!(bernoulli_kind(n, BernoulliKind::Second), bernoulli(n));
        }
    }
}
