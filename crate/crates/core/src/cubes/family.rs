use thiserror::Error;

use super::cube::{product_chain, sigma_chain, CircleChain, CircleCube};

/// Largest `n` for which `T_n` may be realized; `T_n` has Catalan-many cubes.
pub const MAX_T_INDEX: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeError {
    #[error("T_{requested} requested but realized chains are capped at T_{max}")]
    BoundExceeded { requested: usize, max: usize },
}

/// `T_0, …, T_{n_max}` with `T_n = σ(Σ_{i=1}^n T_{i-1}·T_{n-i})`.
pub fn t_family(n_max: usize) -> Result<Vec<CircleChain>, CubeError> {
    if n_max > MAX_T_INDEX {
        return Err(CubeError::BoundExceeded { requested: n_max, max: MAX_T_INDEX });
    }
    let mut ts: Vec<CircleChain> = vec![CircleChain::basis(CircleCube::loop_generator())];
    for n in 1..=n_max {
        let mut sum = CircleChain::zero();
        for i in 1..=n {
            sum.add_assign(&product_chain(&ts[i - 1], &ts[n - i]));
        }
        ts.push(sigma_chain(&sum));
    }
    Ok(ts)
}

/// `Σ_{i=1}^n T_{i-1}·T_{n-i}`, the expected boundary of `T_n`.
pub fn quadratic_term(ts: &[CircleChain], n: usize) -> CircleChain {
    let mut sum = CircleChain::zero();
    for i in 1..=n {
        sum.add_assign(&product_chain(&ts[i - 1], &ts[n - i]));
    }
    sum
}

/// Whether two chains agree after some relabelling of the variables
/// `t_1..t_{n-1}` (the suspension variable `t_0` stays fixed).
pub fn equal_up_to_relabeling(x: &CircleChain, y: &CircleChain, dim: usize) -> bool {
    if dim == 0 {
        return x == y;
    }
    let mut rest: Vec<usize> = (1..dim).collect();
    loop {
        let mut perm = vec![0];
        perm.extend_from_slice(&rest);
        let relabeled: CircleChain = x.map_keys(|c| Some((c.relabel(&perm), 1)));
        if &relabeled == y {
            return true;
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::cube::{
        boundary, boundary_chain, diagonal_chain, reduced_diagonal, serre_diagonal, tensor_boundary, CubeTensor,
    };
    use crate::lincomb::LinComb;

    #[test]
    fn first_members() {
        let ts = t_family(3).unwrap();
        assert_eq!(ts[1], CircleChain::basis(CircleCube::new(3, &[(&[0, 1], 1), (&[0, 2], 1)])));
        assert_eq!(ts[2].len(), 2);
        assert_eq!(ts[3].len(), 5);
        assert!(ts[3].keys().all(|c| c.dim() == 7));
    }

    #[test]
    fn second_member_matches_u_plus_v() {
        let ts = t_family(2).unwrap();
        // t0(t1 + (t2+t3)t4) and t0((t1+t2)t3 + t4)
        let u = CircleCube::new(5, &[(&[0, 1], 1), (&[0, 2, 4], 1), (&[0, 3, 4], 1)]);
        let v = CircleCube::new(5, &[(&[0, 1, 3], 1), (&[0, 2, 3], 1), (&[0, 4], 1)]);
        let mut uv = CircleChain::basis(u);
        uv.add_term(v, 1);
        assert!(equal_up_to_relabeling(&ts[2], &uv, 5));
    }

    #[test]
    fn boundary_and_primitivity() {
        let ts = t_family(3).unwrap();
        for n in 0..=3 {
            assert_eq!(boundary_chain(&ts[n]), quadratic_term(&ts, n), "n = {n}");
            assert!(diagonal_chain(&ts[n], true).is_zero(), "n = {n}");
        }
    }

    fn cubes_of(ts: &[CircleChain]) -> Vec<CircleCube> {
        ts.iter().flat_map(|t| t.keys().cloned()).collect()
    }

    #[test]
    fn cube_identities_on_the_family() {
        let ts = t_family(3).unwrap();
        for c in cubes_of(&ts) {
            assert!(boundary_chain(&boundary(&c)).is_zero(), "{c:?}");
            if c.dim() >= 2 {
                let mut rhs = CircleChain::basis(c.clone());
                rhs.add_scaled(&sigma_chain(&boundary(&c)), &-1);
                assert_eq!(boundary(&c.sigma()), rhs, "{c:?}");
            }
        }
        for c in cubes_of(&ts[..3]) {
            assert_eq!(diagonal_chain(&boundary(&c), false), tensor_boundary(&serre_diagonal(&c)), "{c:?}");
            let mut left = LinComb::<(CircleCube, CircleCube, CircleCube), i64>::zero();
            let mut right = left.clone();
            for ((a, b), k) in serre_diagonal(&c).iter() {
                for ((a1, a2), i) in serre_diagonal(a).iter() {
                    left.add_term((a1.clone(), a2.clone(), b.clone()), k * i);
                }
                for ((b1, b2), j) in serre_diagonal(b).iter() {
                    right.add_term((a.clone(), b1.clone(), b2.clone()), k * j);
                }
            }
            assert_eq!(left, right, "{c:?}");
        }
    }

    #[test]
    fn diagonal_of_a_suspension() {
        let t0 = CircleCube::loop_generator();
        let t = t0.product(&t0);
        let mut expect = CubeTensor::zero();
        for ((a, b), k) in reduced_diagonal(&t).iter() {
            if !a.sigma().is_degenerate() {
                expect.add_term((a.sigma(), b.clone()), *k);
            }
        }
        assert_eq!(reduced_diagonal(&t.sigma()), expect);
        assert!(expect.is_zero());
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            t_family(MAX_T_INDEX + 1).unwrap_err(),
            CubeError::BoundExceeded { requested: MAX_T_INDEX + 1, max: MAX_T_INDEX }
        );
    }
}
