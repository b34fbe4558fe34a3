use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, x| acc * x)
}

/// `binom(n, r)`, zero when `r > n`.
pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for t in 0..r {
        acc *= (n - t) as u64;
        acc /= (t + 1) as u64;
    }
    acc
}

fn exact_div(num: BigUint, den: BigUint) -> BigUint {
    let q = &num / &den;
    assert!(q.clone() * &den == num, "{num} is not divisible by {den}");
    q
}

/// Fuss-Catalan number `C_k^d = binom(dk, k) / ((d-1)k + 1)`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn fuss_catalan(k: usize, d: usize) -> BigUint {
    assert!(d >= 1, "Fuss-Catalan degree must be at least 1");
    if k == 0 {
        return BigUint::one();
    }
    exact_div(binomial(d * k, k), BigUint::from((d - 1) * k + 1))
}

pub fn catalan(k: usize) -> BigUint {
    fuss_catalan(k, 2)
}

/// Number of unlabelled coloured trees on `k` vertices with `m` colours,
/// `T_{k,m} = m/((m-2)k+2) * binom((m-1)k, k-1)`, with `T_{0,m} = 1`.
///
/// # Panics
/// Panics if `m < 2`.
pub fn t_count(k: usize, m: usize) -> BigUint {
    assert!(m >= 2, "T_{{k,m}} needs m >= 2");
    if k == 0 {
        return BigUint::one();
    }
    exact_div(
        BigUint::from(m) * binomial((m - 1) * k, k - 1),
        BigUint::from((m - 2) * k + 2),
    )
}

/// `S_{k,m} = C_k^{m-1}`.
///
/// # Panics
/// Panics if `m < 2`.
pub fn s_count(k: usize, m: usize) -> BigUint {
    assert!(m >= 2, "S_{{k,m}} needs m >= 2");
    fuss_catalan(k, m - 1)
}

/// Number of labelled coloured trees on `k >= 1` vertices,
/// `U_{k,m} = m ((m-1)k)! / ((m-2)k+2)!`.
///
/// # Panics
/// Panics if `k == 0` or `m < 2`.
pub fn u_count(k: usize, m: usize) -> BigUint {
    assert!(k >= 1, "U_{{k,m}} needs k >= 1");
    assert!(m >= 2, "U_{{k,m}} needs m >= 2");
    exact_div(
        BigUint::from(m) * factorial((m - 1) * k),
        factorial((m - 2) * k + 2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(5, 2), b(10));
        assert_eq!(binomial(2, 5), b(0));
        assert_eq!(binomial(0, 0), b(1));
        assert_eq!(binomial(30, 15), b(155117520));
    }

    #[test]
    fn trivial_values() {
        assert_eq!(fuss_catalan(0, 7), b(1));
        assert_eq!(fuss_catalan(4, 2), b(14));
        assert_eq!(fuss_catalan(3, 3), b(12));
        assert_eq!(t_count(0, 5), b(1));
        assert_eq!(t_count(1, 5), b(1));
        assert_eq!(u_count(1, 5), b(1));
        assert_eq!(u_count(3, 3), b(18));
    }
}
