use std::collections::HashMap;

use rand::Rng;

/// First `m` positions of a seeded Fisher–Yates shuffle of `0..len`, in
/// draw order. The swaps live in a sparse map, so the cost is `O(m)`
/// regardless of `len`.
pub(crate) fn partial_fisher_yates<R: Rng + ?Sized>(len: usize, m: usize, rng: &mut R) -> Vec<usize> {
    assert!(m <= len, "cannot draw {m} of {len}");
    let mut swapped: HashMap<usize, usize> = HashMap::with_capacity(2 * m);
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let j = rng.random_range(i..len);
        let at_j = *swapped.get(&j).unwrap_or(&j);
        let at_i = *swapped.get(&i).unwrap_or(&i);
        swapped.insert(j, at_i);
        out.push(at_j);
    }
    out
}
