//! The Koszul sign engine.
//!
//! Every sign produced by shuffles, the bar and cobar differentials, the
//! cyclic operator and the full loop differential goes through this module.

/// Parity of the Koszul sign picked up when the graded letters with the given
/// degrees are reordered so that the letter at position `perm[i]` ends up in
/// slot `i`. Returns `true` for a minus sign.
pub fn permutation_parity(degrees: &[i64], perm: &[usize]) -> bool {
    debug_assert_eq!(degrees.len(), perm.len());
    let mut odd = false;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            // letters perm[i] and perm[j] were in the opposite order
            if perm[i] > perm[j] && degrees[perm[i]] % 2 != 0 && degrees[perm[j]] % 2 != 0 {
                odd = !odd;
            }
        }
    }
    odd
}

/// Parity of swapping two adjacent homogeneous blocks of total degrees `a`
/// and `b`.
pub fn swap_parity(a: i64, b: i64) -> bool {
    a % 2 != 0 && b % 2 != 0
}

/// Parity of passing an operator of degree `op` past material of degree `past`.
pub fn pass_parity(op: i64, past: i64) -> bool {
    swap_parity(op, past)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_of_odd_letters_is_negative() {
        assert!(permutation_parity(&[1, 1], &[1, 0]));
        assert!(!permutation_parity(&[2, 1], &[1, 0]));
        assert!(!permutation_parity(&[1, 1, 1], &[0, 1, 2]));
        // cyclic rotation of three odd letters is even
        assert!(!permutation_parity(&[1, 1, 1], &[1, 2, 0]));
    }

    #[test]
    fn block_swap_matches_letterwise_permutation() {
        // moving block (a,b) past (c) equals swap_parity(|a|+|b|, |c|)
        let degs = [1, 2, 3];
        let perm = [2, 0, 1];
        assert_eq!(permutation_parity(&degs, &perm), swap_parity(3, 3));
    }
}
