use crate::arith::IntPolynomial;

/// `C_k(u)` with `C_k(p + 1/p) = p^k + p^-k`, i.e. `2·T_k(u/2)`.
///
/// Monic of degree `k` for `k ≥ 1`; `C_0 = 2`.
pub fn chebyshev_t(k: usize) -> IntPolynomial {
    chebyshev_sequence(k).pop().expect("sequence has k + 1 terms")
}

/// `[C_0, C_1, …, C_k]` via `C_{j+1} = u·C_j − C_{j−1}`.
pub fn chebyshev_sequence(k: usize) -> Vec<IntPolynomial> {
    let u = IntPolynomial::x();
    let mut seq = vec![IntPolynomial::constant(2)];
    if k >= 1 {
        seq.push(u.clone());
    }
    for j in 1..k {
        let next = &(&u * &seq[j]) - &seq[j - 1];
        seq.push(next);
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.iter().copied())
    }

    #[test]
    fn small_cases() {
        assert_eq!(chebyshev_t(0), p(&[2]));
        assert_eq!(chebyshev_t(1), p(&[0, 1]));
        assert_eq!(chebyshev_t(2), p(&[-2, 0, 1]));
        assert_eq!(chebyshev_t(5), p(&[0, 5, 0, -5, 0, 1]));
    }

    #[test]
    fn monic_of_degree_k() {
        for (k, c) in chebyshev_sequence(30).iter().enumerate().skip(1) {
            assert_eq!(c.degree(), Some(k));
            assert!(c.is_monic());
        }
    }

    #[test]
    fn matches_two_cos_numerically() {
        for k in 0..=20usize {
            let c = chebyshev_t(k);
            for step in 0..13 {
                let theta = 0.1 + step as f64 * 0.23;
                let expected = 2.0 * (k as f64 * theta).cos();
                let got = c.eval_f64(2.0 * theta.cos());
                assert!((expected - got).abs() < 1e-9, "k={k} θ={theta}");
            }
        }
    }
}
