pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u64 = 1;
    for i in 0..k {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_cases() {
        assert_eq!(gcd(4, 6), 2);
        assert_eq!(gcd(1, 9), 1);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(12, 12), 12);
    }

    #[test]
    fn binomial_cases() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(24, 12), 2_704_156);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 7), 0);
    }
}
