//! Exact zero tests for integer combinations of `N`-th roots of unity.
//!
//! `sum c_e zeta_N^e` vanishes iff the cyclotomic polynomial `Phi_N` divides
//! `sum c_e x^e`. Reduction mod `Phi_N` is linear, so the searches reduce each
//! monomial once and compare sums of reduced vectors.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// `sum coeffs[e] * zeta_N^e` with `zeta_N = exp(2 pi i / N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSumPoly {
    n: usize,
    coeffs: Vec<i64>,
}

impl RootSumPoly {
    /// `coeffs` may be shorter than `n`; exponents past `n` wrap around.
    pub fn new(n: usize, coeffs: &[i64]) -> Self {
        assert!(n >= 1, "N must be positive");
        let mut c = vec![0i64; n];
        for (e, &x) in coeffs.iter().enumerate() {
            c[e % n] += x;
        }
        RootSumPoly { n, coeffs: c }
    }

    /// From `(exponent, coefficient)` terms; exponents are taken mod `n`.
    pub fn from_terms(n: usize, terms: &[(i64, i64)]) -> Self {
        let mut p = RootSumPoly::new(n, &[]);
        for &(e, c) in terms {
            p.coeffs[e.rem_euclid(n as i64) as usize] += c;
        }
        p
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut d: Vec<usize> = (1..=n).take_while(|i| i * i <= n).filter(|i| n.is_multiple_of(*i)).collect();
    let big: Vec<usize> = d.iter().rev().map(|&i| n / i).filter(|&j| j * j != n).collect();
    d.extend(big);
    d
}

/// Coefficients of `Phi_n`, constant term first: `x^n - 1` divided by
/// `Phi_d` for every proper divisor `d` of `n`.
pub fn cyclotomic(n: usize) -> Vec<BigInt> {
    let mut memo: HashMap<usize, Vec<BigInt>> = HashMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: usize, memo: &mut HashMap<usize, Vec<BigInt>>) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = -BigInt::one();
    p[n] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_memo(d, memo);
            let (q, r) = div_rem_monic(&p, &phi_d);
            debug_assert!(r.iter().all(Zero::is_zero), "Phi_{d} divides x^{n} - 1");
            p = q;
        }
    }
    memo.insert(n, p.clone());
    p
}

/// Quotient and remainder of `a / b` for monic `b`.
fn div_rem_monic(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut r = a.to_vec();
    if r.len() <= db {
        r.resize(db, BigInt::zero());
        return (vec![BigInt::zero()], r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (k, bk) in b.iter().enumerate() {
            r[i + k] -= &c * bk;
        }
        q[i] = c;
    }
    r.truncate(db);
    (q, r)
}

/// Whether the root sum is exactly zero.
pub fn is_zero_rootsum(p: &RootSumPoly) -> bool {
    let phi = cyclotomic(p.n);
    let a: Vec<BigInt> = p.coeffs.iter().map(|&c| BigInt::from(c)).collect();
    div_rem_monic(&a, &phi).1.iter().all(Zero::is_zero)
}

/// `x^e mod Phi_n` for every `e < n`, as `i64` vectors of length `phi(n)`.
fn reduced_monomials(n: usize) -> Vec<Vec<i64>> {
    let phi = cyclotomic(n);
    (0..n)
        .map(|e| {
            let mut mono = vec![BigInt::zero(); e + 1];
            mono[e] = BigInt::one();
            div_rem_monic(&mono, &phi)
                .1
                .iter()
                .map(|c| i64::try_from(c).expect("reduced monomials have small coefficients"))
                .collect()
        })
        .collect()
}

fn axpy(acc: &mut [i64], k: i64, x: &[i64]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += k * b;
    }
}

/// `zeta^e + zeta^-e` reduced, for every `e`.
fn pair_vectors(n: usize) -> (Vec<i64>, Vec<Vec<i64>>) {
    let mono = reduced_monomials(n);
    let pairs = (0..n)
        .map(|e| {
            let mut v = mono[e].clone();
            axpy(&mut v, 1, &mono[(n - e) % n]);
            v
        })
        .collect();
    (mono[0].clone(), pairs)
}

/// Picks the representative exponent of `{e, -e}` mod `n`.
fn fold(e: usize, n: usize) -> u32 {
    e.min((n - e) % n) as u32
}

/// Root orders appearing in the vanishing-sum searches.
pub const PETERSEN_ROOT_ORDER: usize = 30;
pub const PAPPUS_ROOT_ORDER: usize = 210;

/// `-1 + zeta^e1 + zeta^-e1 + zeta^e2 + zeta^-e2` over `N = 30`.
pub fn petersen_root_sum(e1: i64, e2: i64) -> RootSumPoly {
    RootSumPoly::from_terms(
        PETERSEN_ROOT_ORDER,
        &[(0, -1), (e1, 1), (-e1, 1), (e2, 1), (-e2, 1)],
    )
}

/// `1 + zeta^e1 + zeta^-e1 + zeta^e2 + zeta^-e2 + 2 zeta^e3 + 2 zeta^-e3`
/// over `N = 210`.
pub fn pappus_root_sum(e1: i64, e2: i64, e3: i64) -> RootSumPoly {
    RootSumPoly::from_terms(
        PAPPUS_ROOT_ORDER,
        &[(0, 1), (e1, 1), (-e1, 1), (e2, 1), (-e2, 1), (e3, 2), (-e3, 2)],
    )
}

/// Every ordered pair `(e1, e2)` of exponents mod 30 with
/// `1 = zeta1 + zeta1^-1 + zeta2 + zeta2^-1`.
pub fn petersen_solutions_ordered() -> Vec<[u32; 2]> {
    let n = PETERSEN_ROOT_ORDER;
    let (one, pair) = pair_vectors(n);
    let mut out = Vec::new();
    for e1 in 0..n {
        for e2 in 0..n {
            let mut v = vec![0; one.len()];
            axpy(&mut v, -1, &one);
            axpy(&mut v, 1, &pair[e1]);
            axpy(&mut v, 1, &pair[e2]);
            if v.iter().all(|&x| x == 0) {
                out.push([e1 as u32, e2 as u32]);
            }
        }
    }
    out
}

/// [`petersen_solutions_ordered`] up to conjugating either root and swapping
/// the two: each exponent folded to `min(e, 30 - e)`, the pair sorted.
pub fn search_vanishing_sums_petersen() -> Vec<[u32; 2]> {
    let n = PETERSEN_ROOT_ORDER;
    let mut out: Vec<[u32; 2]> = petersen_solutions_ordered()
        .into_iter()
        .map(|[a, b]| {
            let (a, b) = (fold(a as usize, n), fold(b as usize, n));
            [a.min(b), a.max(b)]
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Every ordered triple of exponents mod 210 with
/// `0 = 1 + zeta1 + zeta1^-1 + zeta2 + zeta2^-1 + 2 zeta3 + 2 zeta3^-1`.
/// For each `(e1, e2)` the matching `e3` are looked up by their reduced
/// vector, which covers all `210^3` triples.
pub fn pappus_solutions_ordered() -> Vec<[u32; 3]> {
    let n = PAPPUS_ROOT_ORDER;
    let (one, pair) = pair_vectors(n);
    let mut by_target: HashMap<Vec<i64>, Vec<u32>> = HashMap::new();
    for (e3, v) in pair.iter().enumerate() {
        // p + 2 s_e3 = 0 iff p = -2 s_e3.
        let key: Vec<i64> = v.iter().map(|x| -2 * x).collect();
        by_target.entry(key).or_default().push(e3 as u32);
    }
    let mut out: Vec<[u32; 3]> = (0..n)
        .into_par_iter()
        .flat_map_iter(|e1| {
            let mut found = Vec::new();
            for e2 in 0..n {
                let mut p = one.clone();
                axpy(&mut p, 1, &pair[e1]);
                axpy(&mut p, 1, &pair[e2]);
                if let Some(e3s) = by_target.get(&p) {
                    found.extend(e3s.iter().map(|&e3| [e1 as u32, e2 as u32, e3]));
                }
            }
            found
        })
        .collect();
    out.sort_unstable();
    out
}

/// [`pappus_solutions_ordered`] up to conjugation of each root and swapping
/// `zeta1` with `zeta2`: `[min, max]` of the folded first two exponents,
/// then the folded third.
pub fn search_vanishing_sums_pappus() -> Vec<[u32; 3]> {
    let n = PAPPUS_ROOT_ORDER;
    let mut out: Vec<[u32; 3]> = pappus_solutions_ordered()
        .into_iter()
        .map(|[a, b, c]| {
            let (a, b) = (fold(a as usize, n), fold(b as usize, n));
            [a.min(b), a.max(b), fold(c as usize, n)]
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Exponents `e` mod `n` with `weight * (zeta^e + zeta^-e) = target`.
pub fn conjugate_pair_solutions(n: usize, weight: i64, target: i64) -> Vec<u32> {
    (0..n)
        .filter(|&e| {
            let e = e as i64;
            is_zero_rootsum(&RootSumPoly::from_terms(n, &[(e, weight), (-e, weight), (0, -target)]))
        })
        .map(|e| e as u32)
        .collect()
}

/// Multiplicative order of `zeta_n^e`.
pub fn root_order(e: u32, n: usize) -> usize {
    n / (e as usize).gcd(&n)
}

/// Whether some nonempty proper subset of the weighted terms
/// `(exponent, weight)` over `N`-th roots sums to zero.
pub fn has_vanishing_proper_subsum(n: usize, terms: &[(i64, i64)]) -> bool {
    let k = terms.len();
    (1..(1u64 << k) - 1).any(|mask| {
        let sub: Vec<(i64, i64)> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| terms[i]).collect();
        is_zero_rootsum(&RootSumPoly::from_terms(n, &sub))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn small_cyclotomics() {
        let c = |n| cyclotomic(n).iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(c(1), vec![-1, 1]);
        assert_eq!(c(3), vec![1, 1, 1]);
        assert_eq!(c(4), vec![1, 0, 1]);
        assert_eq!(c(6), vec![1, -1, 1]);
        // Phi_105 is the first with a coefficient of -2.
        assert!(c(105).contains(&-2));
        assert_eq!(c(30).len() - 1, 8);
        assert_eq!(c(210).len() - 1, 48);
    }

    #[test]
    fn product_over_divisors() {
        for n in [30usize, 210] {
            let prod = divisors(n)
                .into_iter()
                .map(cyclotomic)
                .reduce(|a, b| poly_mul(&a, &b))
                .unwrap();
            let mut expect = vec![BigInt::zero(); n + 1];
            expect[0] = -BigInt::one();
            expect[n] = BigInt::one();
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn zero_tests() {
        assert!(is_zero_rootsum(&RootSumPoly::new(3, &[1, 1, 1])));
        assert!(is_zero_rootsum(&RootSumPoly::new(4, &[1, 0, 1])));
        assert!(!is_zero_rootsum(&RootSumPoly::new(4, &[1, 1])));
        // 1 = zeta_6 + zeta_6^-1 at N = 30: x^5 + x^25 - 1.
        assert!(is_zero_rootsum(&RootSumPoly::from_terms(30, &[(5, 1), (25, 1), (0, -1)])));
    }

    #[test]
    fn petersen_search_sanity() {
        let sols = petersen_solutions_ordered();
        assert!(sols.iter().all(|&[a, b]| is_zero_rootsum(&petersen_root_sum(a as i64, b as i64))));
        // zeta1 = zeta2 = -1 would give 1 = -4.
        assert!(!sols.contains(&[15, 15]));
        assert!(search_vanishing_sums_petersen().contains(&[0, 10]));
    }

    #[test]
    fn split_systems() {
        // Over 12th roots: 1 = z + 1/z at z = exp(+-2 pi i/6), 0 = z + 1/z at +-i.
        assert_eq!(conjugate_pair_solutions(12, 1, 1), vec![2, 10]);
        assert_eq!(conjugate_pair_solutions(12, 1, 0), vec![3, 9]);
        // Odd orders never give z + 1/z = 0.
        for n in [3, 9, 27, 105, 315] {
            assert!(conjugate_pair_solutions(n, 1, 0).is_empty());
        }
        // 2z + 2/z = +-1 has no 6th-root solutions.
        assert!(conjugate_pair_solutions(6, 2, 1).is_empty());
        assert!(conjugate_pair_solutions(6, 2, -1).is_empty());
    }

    #[test]
    fn orders() {
        assert_eq!(root_order(0, 30), 1);
        assert_eq!(root_order(10, 30), 3);
        assert_eq!(root_order(3, 30), 10);
    }
}
