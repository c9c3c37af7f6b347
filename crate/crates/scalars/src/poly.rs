use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<[i64]>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
///
/// Obtained from x^n - 1 by exact division by Φ_d for every proper divisor d.
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<[i64]> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = exact_div(&num, &den);
        }
    }
    let p: Arc<[i64]> = num.into();
    cache().lock().unwrap().insert(n, p.clone());
    p
}

// Divide by a monic polynomial, asserting a zero remainder.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}
