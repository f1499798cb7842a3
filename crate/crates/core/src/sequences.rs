//! Reference integer sequences that appear as avoidance counts and distributions.

pub fn catalan(n: usize) -> u128 {
    // C(2n, n) / (n + 1), built incrementally so every step stays integral.
    (0..n as u128).fold(1u128, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// Bell numbers `B_0..=B_max_n` from the Bell triangle.
pub fn bell_numbers(max_n: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..max_n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev + x);
        }
        out.push(next[0]);
        row = next;
    }
    out.truncate(max_n + 1);
    out
}

pub fn bell(n: usize) -> u128 {
    bell_numbers(n)[n]
}

/// `T(n, k)`: number of permutations of length `n` with exactly `k`
/// occurrences of `(12, {00,01,10,11})`; equal to the unsigned Stirling
/// number of the first kind `c(n, k+1)`.
pub fn stirling_table(max_n: usize) -> Vec<Vec<u128>> {
    let mut t: Vec<Vec<u128>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut row = vec![0u128; n.max(1)];
        match n {
            0 => row[0] = 1,
            1 => row[0] = 1,
            _ => {
                for k in 0..n {
                    let from_left = if k == 0 { 0 } else { t[n - 1][k - 1] };
                    let from_up = t[n - 1].get(k).copied().unwrap_or(0);
                    row[k] = from_left + (n as u128 - 1) * from_up;
                }
            }
        }
        t.push(row);
    }
    t
}

pub fn stirling(n: usize, k: usize) -> u128 {
    stirling_table(n)[n].get(k).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let c: Vec<u128> = (0..8).map(catalan).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(bell_numbers(7), vec![1, 1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(stirling(4, 1), 11);
        assert_eq!(stirling_table(4)[4], vec![6, 11, 6, 1]);
    }

    #[test]
    fn first_column_is_factorial() {
        let t = stirling_table(9);
        for (n, row) in t.iter().enumerate().skip(1) {
            assert_eq!(row[0], (1..n as u128).product::<u128>());
            assert_eq!(row.iter().sum::<u128>(), (1..=n as u128).product::<u128>());
        }
    }
}
