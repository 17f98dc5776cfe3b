//! Farey sequences by neighbour stepping.

use crate::rational::Rational;

/// Iterator over the Farey sequence of a given order on `[0, 1]`.
///
/// Each step uses only the two most recent terms: if `a/b < c/d` are
/// neighbours then the next term is `(kc - a)/(kd - b)` with
/// `k = ⌊(n + b)/d⌋`.
#[derive(Debug, Clone)]
pub struct Farey {
    order: i64,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    done: bool,
}

impl Farey {
    pub fn new(order: u32) -> Self {
        let n = i64::from(order.max(1));
        Farey { order: n, a: 0, b: 1, c: 1, d: n, done: false }
    }
}

impl Iterator for Farey {
    type Item = (i64, i64);

    fn next(&mut self) -> Option<(i64, i64)> {
        if self.done {
            return None;
        }
        let out = (self.a, self.b);
        if self.a == 1 && self.b == 1 {
            self.done = true;
        } else {
            let k = (self.order + self.b) / self.d;
            let (e, f) = (k * self.c - self.a, k * self.d - self.b);
            self.a = self.c;
            self.b = self.d;
            self.c = e;
            self.d = f;
        }
        Some(out)
    }
}

/// All reduced fractions with denominator at most `order` in `[lo, hi]`,
/// increasing. Ranges outside `[0, 1]` are covered by integer shifts.
pub fn farey_sequence(order: u32, lo: Rational, hi: Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    if lo > hi {
        return out;
    }
    for n in lo.floor()..=hi.floor() {
        for (a, b) in Farey::new(order) {
            if a == b && n < hi.floor() {
                // 1/1 of this unit is 0/1 of the next one
                continue;
            }
            let x = Rational::new(n * b + a, b).expect("reduced Farey term");
            if x >= lo && x <= hi {
                out.push(x);
            }
        }
    }
    out
}

/// Length of the Farey sequence of order `n` on `[0, 1]`: `1 + Σ_{q≤n} φ(q)`.
pub fn farey_length(n: u32) -> u64 {
    let n = n as usize;
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            for j in (i..=n).step_by(i) {
                phi[j] -= phi[j] / i as u64;
            }
        }
    }
    1 + phi.iter().skip(1).sum::<u64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(
            farey_sequence(3, Rational::ZERO, Rational::ONE),
            vec![r(0, 1), r(1, 3), r(1, 2), r(2, 3), r(1, 1)]
        );
        assert_eq!(farey_sequence(1, Rational::ZERO, Rational::ONE), vec![r(0, 1), r(1, 1)]);
    }

    #[test]
    fn sub_ranges_and_shifts() {
        let v = farey_sequence(4, r(1, 3), r(3, 2));
        assert_eq!(
            v,
            vec![r(1, 3), r(1, 2), r(2, 3), r(3, 4), r(1, 1), r(5, 4), r(4, 3), r(3, 2)]
        );
    }

    #[test]
    fn totient_count() {
        assert_eq!(farey_length(1), 2);
        assert_eq!(farey_length(3), 5);
        assert_eq!(Farey::new(287).count() as u64, farey_length(287));
    }
}
