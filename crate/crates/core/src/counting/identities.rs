use super::formulas::{binomial, catalan, factorial, s_count, t_count, u_count};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `T_{k,m} = Σ_{v=1}^{k} S_{v-1,m} S_{k+1-v,m}` for `k >= 1`.
pub fn check_recursion(k: usize, m: usize) -> bool {
    let rhs: BigUint = (1..=k).map(|v| s_count(v - 1, m) * s_count(k + 1 - v, m)).sum();
    t_count(k, m) == rhs
}

/// `T_{k,m} = Σ S_{k_1,m} ⋯ S_{k_m,m}` over compositions `k_1 + … + k_m = k - 1`
/// into non-negative parts, for `k >= 1`.
pub fn check_convolution(k: usize, m: usize) -> bool {
    let s: Vec<BigUint> = (0..k).map(|j| s_count(j, m)).collect();
    let mut power = vec![BigUint::zero(); k];
    power[0] = BigUint::one();
    for _ in 0..m {
        let mut next = vec![BigUint::zero(); k];
        for (a, pa) in power.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, sb) in s.iter().enumerate().take(k - a) {
                next[a + b] += pa * sb;
            }
        }
        power = next;
    }
    t_count(k, m) == power[k - 1]
}

/// `T_{k,3} = C_{k+1} - C_k`.
pub fn check_catalan_difference(k: usize) -> bool {
    t_count(k, 3) + catalan(k) == catalan(k + 1)
}

/// The two alternative closed forms of `U_{k,m}`: `T_{k,m} (k-1)!` and, for
/// `k >= 2`, `m (k-2)! binom((m-1)k, k-2)`.
pub fn check_u_forms(k: usize, m: usize) -> bool {
    let u = u_count(k, m);
    let first = u == t_count(k, m) * factorial(k - 1);
    let second = k < 2 || u == BigUint::from(m) * factorial(k - 2) * binomial((m - 1) * k, k - 2);
    first && second
}

/// Generalised binomial coefficient `binom(x, j)` for integer `x` and `j >= 0`.
pub fn generalized_binomial(x: &BigInt, j: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j {
        num *= x - BigInt::from(t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// `r/(tj + r) * binom(tj + r, j)`, written as `r/j * binom(tj + r - 1, j - 1)`
/// for `j >= 1` so that a vanishing `tj + r` needs no special case.
pub fn gkp_term(t: i64, r: i64, j: usize) -> BigRational {
    if j == 0 {
        return BigRational::one();
    }
    let top = BigInt::from(t) * BigInt::from(j as u64) + BigInt::from(r) - BigInt::one();
    BigRational::new(
        BigInt::from(r) * generalized_binomial(&top, j - 1),
        BigInt::from(j as u64),
    )
}

/// The convolution
/// `Σ_{j=0}^{n} A_j(t, r) A_{n-j}(t, s) = A_n(t, r + s)`
/// with `A_j(t, r) = r/(tj + r) binom(tj + r, j)`, in exact rational arithmetic.
pub fn check_gkp_identity(n: usize, r: i64, s: i64, t: i64) -> bool {
    let lhs: BigRational = (0..=n)
        .map(|j| gkp_term(t, r, j) * gkp_term(t, s, n - j))
        .fold(BigRational::zero(), |acc, x| acc + x);
    lhs == gkp_term(t, r + s, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_binomial_negative_top() {
        assert_eq!(generalized_binomial(&BigInt::from(-1), 3), BigInt::from(-1));
        assert_eq!(generalized_binomial(&BigInt::from(-2), 2), BigInt::from(3));
        assert_eq!(generalized_binomial(&BigInt::from(4), 2), BigInt::from(6));
        assert_eq!(generalized_binomial(&BigInt::from(2), 3), BigInt::from(0));
    }

    #[test]
    fn term_matches_definition_when_denominator_nonzero() {
        for t in -3..=3i64 {
            for r in -4..=4i64 {
                for j in 0..5usize {
                    let den = t * j as i64 + r;
                    if den == 0 {
                        continue;
                    }
                    let direct = BigRational::new(BigInt::from(r), BigInt::from(den))
                        * BigRational::from_integer(generalized_binomial(&BigInt::from(den), j));
                    assert_eq!(gkp_term(t, r, j), direct, "t={t} r={r} j={j}");
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        assert!(check_gkp_identity(2, 1, 1, 2));
        assert!(check_recursion(3, 3));
        assert!(check_convolution(3, 3));
        assert!(check_catalan_difference(5));
        assert!(check_u_forms(4, 4));
    }
}
