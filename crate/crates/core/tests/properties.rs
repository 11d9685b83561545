use proptest::prelude::*;

use loopcoh::cubes::{
    boundary, boundary_chain, diagonal_chain, product_chain, random_spec, serre_diagonal, tensor_boundary,
    CircleChain, CircleCube, OmegaComplexSpec,
};
use loopcoh::dga::bar::{bar_differential, bar_differential_elem};
use loopcoh::dga::{presets, BarWord, PresentedAlgebra};
use loopcoh::loops::fls::apply;
use loopcoh::loops::{cyclic_s, hochschild_differential, FlsKey};
use loopcoh::Integer;

fn algebras() -> Vec<PresentedAlgebra> {
    vec![presets::small_dga(), presets::wedge(&[2, 3, 4]), presets::truncated_polynomial(2, 4)]
}

fn key_strategy() -> impl Strategy<Value = (usize, FlsKey)> {
    (0..3usize, 0..8usize, prop::collection::vec(1..8usize, 0..5)).prop_map(|(i, y, word)| {
        let a = &algebras()[i];
        let n = a.len();
        let y = y % n;
        let word: Vec<usize> = word.into_iter().map(|g| 1 + g % (n - 1)).collect();
        (i, FlsKey::new(y, BarWord(word)))
    })
}

fn cube_strategy() -> impl Strategy<Value = CircleCube> {
    (1..6usize, prop::collection::vec((1u64..64, -2i64..=2), 1..6)).prop_map(|(dim, terms)| {
        let vars: Vec<Vec<usize>> = terms
            .iter()
            .map(|(mask, _)| (0..dim).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        let pairs: Vec<(&[usize], i64)> = vars.iter().zip(&terms).map(|(v, (_, c))| (v.as_slice(), *c)).collect();
        CircleCube::new(dim, &pairs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bar_differential_squares_to_zero((i, k) in key_strategy()) {
        let a = &algebras()[i];
        prop_assert!(bar_differential_elem(a, &bar_differential(a, &k.word)).is_zero());
    }

    #[test]
    fn loop_operators((i, k) in key_strategy()) {
        let a = &algebras()[i];
        let d = |x: &FlsKey| hochschild_differential(a, x);
        let s = |x: &FlsKey| cyclic_s(a, x);
        prop_assert!(apply(&d(&k), d).is_zero());
        prop_assert!(apply(&s(&k), s).is_zero());
        let mut anti = apply(&s(&k), d);
        anti.add_assign(&apply(&d(&k), s));
        prop_assert!(anti.is_zero());
    }

    #[test]
    fn cube_boundary_squares_to_zero(c in cube_strategy()) {
        prop_assert!(boundary_chain(&boundary(&c)).is_zero());
    }

    #[test]
    fn diagonal_is_a_chain_map(c in cube_strategy()) {
        prop_assert_eq!(diagonal_chain(&boundary(&c), false), tensor_boundary(&serre_diagonal(&c)));
    }

    #[test]
    fn product_leibniz(a in cube_strategy(), b in cube_strategy()) {
        let (ca, cb) = (CircleChain::basis(a.clone()), CircleChain::basis(b.clone()));
        let lhs = boundary_chain(&product_chain(&ca, &cb));
        let mut rhs = product_chain(&boundary(&a), &cb);
        let s = if a.dim() % 2 == 0 { 1 } else { -1 };
        rhs.add_scaled(&product_chain(&ca, &boundary(&b)), &s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_orbit_specs(seed in any::<u64>(), twists in 0..3usize) {
        let spec: OmegaComplexSpec<Integer> = random_spec(seed, 7, twists);
        prop_assert!(spec.orbit_complex(7).is_ok());
    }
}
