//! Ready-made algebras and coalgebras used by tests, the CLI and the
//! verification suites.

use super::algebra::{AlgebraBuilder, PresentedAlgebra};
use super::coalgebra::{CoalgebraBuilder, FiniteCoalgebra};
use crate::Integer;

fn one() -> Integer {
    Integer::from(1)
}

/// `Λz` with `|z| = n`: cochains of the sphere `S^n` for odd `n`.
pub fn sphere(n: i64) -> PresentedAlgebra {
    AlgebraBuilder::new(format!("sphere:{n}"))
        .generator("z", n)
        .build()
        .expect("sphere presentation is valid")
}

/// Cohomology of a wedge of spheres: generators `x1, x2, …`, all positive products zero.
pub fn wedge(degrees: &[i64]) -> PresentedAlgebra {
    let name = degrees.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let mut b = AlgebraBuilder::new(format!("wedge:{name}"));
    for (i, d) in degrees.iter().enumerate() {
        b = b.generator(format!("x{}", i + 1), *d);
    }
    b.build().expect("wedge presentation is valid")
}

/// `ℤ[w]/w^h` with `|w| = deg` even and zero differential.
pub fn truncated_polynomial(deg: i64, h: u32) -> PresentedAlgebra {
    assert!(deg % 2 == 0 && deg >= 2, "truncated polynomial needs an even generator");
    let label = |k: u32| if k == 1 { "w".to_string() } else { format!("w^{k}") };
    let mut b = AlgebraBuilder::new(format!("Z[w]/w^{h}"));
    for k in 1..h {
        b = b.generator(label(k), deg * k as i64);
    }
    for i in 1..h {
        for j in i..h {
            if i + j < h {
                b = b.product(label(i), label(j), vec![(label(i + j).as_str(), one())]);
            }
        }
    }
    b.build().expect("truncated polynomial presentation is valid")
}

/// A small algebra with nontrivial differential and products:
/// `|a| = 2`, `b = da`, `c = a²`, `e = ab`, `dc = 2e`, zero above degree 5.
pub fn small_dga() -> PresentedAlgebra {
    AlgebraBuilder::new("small-dga")
        .generator("a", 2)
        .generator("b", 3)
        .generator("c", 4)
        .generator("e", 5)
        .differential("a", vec![("b", one())])
        .differential("c", vec![("e", Integer::from(2))])
        .product("a", "a", vec![("c", one())])
        .product("a", "b", vec![("e", one())])
        .build()
        .expect("small dga presentation is valid")
}

/// `{1, c}` with `|c| = deg` primitive.
pub fn primitive_coalgebra(deg: i64) -> FiniteCoalgebra {
    CoalgebraBuilder::new().element("c", deg).build().expect("valid coalgebra")
}

/// `{1, c2, c4}` with `Δ̄c4 = c2 ⊗ c2`.
pub fn divided_coalgebra() -> FiniteCoalgebra {
    CoalgebraBuilder::new()
        .element("c2", 2)
        .element("c4", 4)
        .coproduct("c4", vec![("c2", "c2", one())])
        .build()
        .expect("valid coalgebra")
}

/// `{1, c2, c4, c5}` with `Δ̄c4 = c2 ⊗ c2` and `dc4 = c5`.
pub fn rank_three_coalgebra() -> FiniteCoalgebra {
    CoalgebraBuilder::new()
        .element("c2", 2)
        .element("c4", 4)
        .element("c5", 5)
        .coproduct("c4", vec![("c2", "c2", one())])
        .differential("c4", vec![("c5", one())])
        .build()
        .expect("valid coalgebra")
}
