use super::{check_order, FareyError};

/// Euler's totient for `0..=n` by a linear sieve (`φ(0) = 0`).
pub fn totients(n: usize) -> Vec<u64> {
    let mut phi = vec![0u64; n + 1];
    if n >= 1 {
        phi[1] = 1;
    }
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..=n {
        if phi[i] == 0 {
            phi[i] = (i - 1) as u64;
            primes.push(i);
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            if i % p == 0 {
                phi[ip] = phi[i] * p as u64;
                break;
            }
            phi[ip] = phi[i] * (p as u64 - 1);
        }
    }
    phi
}

/// `N(Q) = φ(1) + … + φ(Q)`, the length of `F_Q`.
pub fn totient_summatory(order: u64) -> Result<u64, FareyError> {
    check_order(order)?;
    let n = usize::try_from(order).map_err(|_| FareyError::OrderTooLarge(order))?;
    Ok(totients(n).iter().sum())
}
