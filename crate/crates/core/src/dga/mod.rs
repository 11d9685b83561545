//! Presented commutative cochain algebras and the bar, cobar and twisted
//! tensor constructions.

pub mod algebra;
pub mod bar;
pub mod coalgebra;
pub mod cobar;
pub mod graded;
pub mod presets;
pub mod twisted;

pub use algebra::{AlgElem, AlgebraBuilder, AlgebraError, Gen, Generator, PresentedAlgebra, UNIT};
pub use bar::{bar_differential, shuffle, BarElement, BarWord};
pub use coalgebra::{CoGen, CoalgebraBuilder, CoalgebraError, FiniteCoalgebra};
pub use cobar::{cobar_differential, Cobar, CobarWord};
pub use graded::GradedAlgebra;
pub use twisted::{twisted_tensor, TwistError, TwistingCochainSpec};
