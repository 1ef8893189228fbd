//! Independent reference implementations used only by the tests.
#![allow(dead_code)]

/// Representation counts for `0..=n_max`, by walking every multiplicity
/// vector whose weighted sum stays within range.
pub fn naive_counts(parts: &[i64], n_max: u64) -> Vec<u64> {
    fn walk(parts: &[i64], remaining: u64, used: u64, hist: &mut [u64]) {
        match parts.split_first() {
            None => hist[used as usize] += 1,
            Some((&a, rest)) => {
                let a = a as u64;
                let mut x = 0;
                while x <= remaining {
                    walk(rest, remaining - x, used + x, hist);
                    x += a;
                }
            }
        }
    }
    let mut hist = vec![0u64; n_max as usize + 1];
    walk(parts, n_max, 0, &mut hist);
    hist
}

/// `d(n; A)` for a single target by nested loops.
pub fn naive_count(n: i64, parts: &[i64]) -> u64 {
    if n < 0 {
        return 0;
    }
    match parts.split_first() {
        None => u64::from(n == 0),
        Some((&a, [])) => u64::from(n % a == 0),
        Some((&a, rest)) => (0..=n / a).map(|x| naive_count(n - x * a, rest)).sum(),
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// `g(A; s)` from [`naive_counts`], growing the range until `min(A)`
/// consecutive counts exceed `s`.
pub fn naive_frobenius(parts: &[i64], s: u64) -> i64 {
    let window = *parts.iter().min().unwrap() as usize;
    let mut n_max = 64u64;
    loop {
        let counts = naive_counts(parts, n_max);
        let mut run = 0;
        let mut last = -1i64;
        for (n, &c) in counts.iter().enumerate() {
            if c <= s {
                last = n as i64;
                run = 0;
            } else {
                run += 1;
                if run == window {
                    return last;
                }
            }
        }
        n_max *= 2;
    }
}

pub fn is_triangular(x: u64) -> bool {
    let mut k = ((2.0 * x as f64).sqrt()) as u64;
    while k * (k + 1) / 2 > x {
        k -= 1;
    }
    while k * (k + 1) / 2 < x {
        k += 1;
    }
    k * (k + 1) / 2 == x
}

/// Nondecreasing tuples of length `k` with parts in `1..=bound`.
pub fn sorted_tuples(k: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(k: usize, lo: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in lo..=bound {
            cur.push(p);
            rec(k, p, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 1, bound, &mut Vec::new(), &mut out);
    out
}

/// Ordered triples with parts in `1..=bound` and overall gcd 1.
pub fn coprime_triples(bound: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in 1..=bound {
        for b in 1..=bound {
            for c in 1..=bound {
                if gcd(gcd(a, b), c) == 1 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}
