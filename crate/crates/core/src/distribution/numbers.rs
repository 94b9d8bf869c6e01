use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Catalan number via `C(n+1) = C(n) * 2(2n+1) / (n+2)`.
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for i in 0..n {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}

/// Motzkin number via `(n+2) M(n) = (2n+1) M(n-1) + 3(n-1) M(n-2)`.
pub fn motzkin(n: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for i in 2..=n {
        let next = (&cur * (2 * i + 1) + &prev * (3 * (i - 1))) / (i + 2);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `C(a, b)`, zero when `a < 0`, `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut r = BigInt::one();
    for i in 0..b {
        r = r * (a - i) / (i + 1);
    }
    r
}
