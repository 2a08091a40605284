/// τ(0..=n_max) from the q-expansion of q·Π_{n≥1}(1 - q^n)^{24}; entry 0 is 0.
///
/// The Euler product is expanded by direct multiplication of its factors,
/// and the 24th power by repeated multiplication with that sparse series.
/// Coefficients stay far inside i128 for any table that fits in memory.
pub fn ramanujan_tau_table(n_max: usize) -> Vec<i128> {
    let len = n_max;
    let mut euler = vec![0i128; len];
    if len == 0 {
        return vec![0];
    }
    euler[0] = 1;
    for k in 1..len {
        for i in (k..len).rev() {
            euler[i] -= euler[i - k];
        }
    }
    let sparse: Vec<(usize, i128)> = euler.iter().enumerate().filter(|x| *x.1 != 0).map(|(i, &c)| (i, c)).collect();
    let mut acc = euler.clone();
    for _ in 1..24 {
        let mut next = vec![0i128; len];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, c) in &sparse {
                if i + j >= len {
                    break;
                }
                next[i + j] += a * c;
            }
        }
        acc = next;
    }
    let mut out = vec![0i128; n_max + 1];
    out[1..].copy_from_slice(&acc);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let t = ramanujan_tau_table(10);
        assert_eq!(&t[..], &[0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]);
        assert_eq!(ramanujan_tau_table(0), vec![0]);
    }

    #[test]
    fn deligne_bound_below_100() {
        let t = ramanujan_tau_table(100);
        for p in crate::arith::primes_below(100) {
            assert!((t[p as usize] as f64).abs() <= 2.0 * (p as f64).powf(5.5));
        }
    }
}
