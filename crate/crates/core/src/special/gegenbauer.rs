/// Gegenbauer polynomial `C_n^lam(x)` by the three-term recurrence
/// `n C_n = 2x(n + lam - 1) C_{n-1} - (n + 2 lam - 2) C_{n-2}`.
pub fn gegenbauer(n: u32, lam: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * lam * x;
    for j in 2..=n {
        let jf = f64::from(j);
        let next = (2.0 * x * (jf + lam - 1.0) * cur - (jf + 2.0 * lam - 2.0) * prev) / jf;
        prev = cur;
        cur = next;
    }
    cur
}
