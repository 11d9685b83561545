//! Named identity suites over the whole crate, with counterexamples on failure.

use std::fmt;
use std::str::FromStr;

use crate::cubes::{
    boundary, boundary_chain, diagonal_chain, quadratic_term, random_spec, realize, resolution_basis,
    resolution_differential, serre_diagonal, sigma_chain, t_differential, t_family, t_words_of_degree,
    tensor_boundary, CircleChain, CircleCube, OmegaComplexSpec,
};
use crate::dga::bar::{bar_differential, bar_differential_elem, shuffle_elem, words_up_to};
use crate::dga::{
    cobar_differential, presets, shuffle, twisted_tensor, BarElement, BarWord, Cobar, GradedAlgebra,
    PresentedAlgebra, TwistingCochainSpec,
};
use crate::lincomb::LinComb;
use crate::loops::fls::apply;
use crate::loops::{
    build_model, cyclic_s, fls_basis, hochschild_differential, power_map, FlsKey, FullKey, FullLoop, Model,
};
use crate::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Dga,
    Loop,
    Circle,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "dga" => Ok(Suite::Dga),
            "loop" => Ok(Suite::Loop),
            "circle" => Ok(Suite::Circle),
            other => Err(format!("unknown suite {other:?} (expected all, dga, loop or circle)")),
        }
    }
}

/// Outcome of one named identity: how many cases were checked, or the first counterexample.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: PASS ({} cases)", self.name, self.cases),
            Some(c) => write!(f, "{}: FAIL\n  counterexample: {c}", self.name),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<usize, String>) {
        let (cases, counterexample) = match f() {
            Ok(n) => (n, None),
            Err(e) => (0, Some(e)),
        };
        self.checks.push(CheckResult { name: name.to_string(), cases, counterexample });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite) -> Report {
    let mut r = Report::default();
    if matches!(suite, Suite::All | Suite::Dga) {
        dga_suite(&mut r);
    }
    if matches!(suite, Suite::All | Suite::Loop) {
        loop_suite(&mut r);
    }
    if matches!(suite, Suite::All | Suite::Circle) {
        circle_suite(&mut r);
    }
    r
}

fn test_algebras() -> Vec<PresentedAlgebra> {
    vec![
        presets::sphere(3),
        presets::sphere(2),
        presets::wedge(&[2, 3]),
        presets::wedge(&[3, 3]),
        presets::truncated_polynomial(2, 3),
        presets::small_dga(),
    ]
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn binomial(n: u64, k: u64) -> Integer {
    let mut out = Integer::from(1);
    for i in 0..k {
        out = out * Integer::from(n - i) / Integer::from(i + 1);
    }
    out
}

fn dga_suite(r: &mut Report) {
    let algebras = test_algebras();
    r.check("bar d²=0", || {
        let mut n = 0;
        for a in &algebras {
            for w in words_up_to(a, 8) {
                let dd = bar_differential_elem(a, &bar_differential(a, &w));
                ensure(dd.is_zero(), || format!("{} over {}", w.display(a), a.name()))?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.check("bar d is a shuffle derivation", || {
        let mut n = 0;
        for a in &algebras {
            let ws = words_up_to(a, 4);
            for u in &ws {
                for v in &ws {
                    let lhs = bar_differential_elem(a, &shuffle(a, u, v));
                    let mut rhs = shuffle_elem(a, &bar_differential(a, u), &BarElement::basis(v.clone()));
                    let s = if u.bar_degree(a) % 2 == 0 { 1 } else { -1 };
                    rhs.add_scaled(&shuffle_elem(a, &BarElement::basis(u.clone()), &bar_differential(a, v)), &Integer::from(s));
                    ensure(lhs == rhs, || format!("{} ⋆ {} over {}", u.display(a), v.display(a), a.name()))?;
                    n += 1;
                }
            }
        }
        Ok(n)
    });
    r.check("shuffle commutativity", || {
        let mut n = 0;
        for a in &algebras {
            let ws = words_up_to(a, 5);
            for u in &ws {
                for v in &ws {
                    let s = if u.bar_degree(a) * v.bar_degree(a) % 2 == 0 { 1 } else { -1 };
                    ensure(shuffle(a, u, v) == shuffle(a, v, u).scaled(&Integer::from(s)), || {
                        format!("{} ⋆ {} over {}", u.display(a), v.display(a), a.name())
                    })?;
                    n += 1;
                }
            }
        }
        Ok(n)
    });
    r.check("shuffle associativity", || {
        let mut n = 0;
        for a in &algebras {
            let ws = words_up_to(a, 3);
            for u in &ws {
                for v in &ws {
                    for w in &ws {
                        let bw = BarElement::basis(w.clone());
                        let bu = BarElement::basis(u.clone());
                        let left = shuffle_elem(a, &shuffle(a, u, v), &bw);
                        let right = shuffle_elem(a, &bu, &shuffle(a, v, w));
                        ensure(left == right, || {
                            format!("{} ⋆ {} ⋆ {} over {}", u.display(a), v.display(a), w.display(a), a.name())
                        })?;
                        n += 1;
                    }
                }
            }
        }
        Ok(n)
    });
    r.check("divided-power binomial law", || {
        let mut n = 0;
        for deg in [3, 5, 7] {
            let a = presets::sphere(deg);
            let z = a.lookup("z").expect("sphere generator");
            for k in 0..=6usize {
                for l in 0..=6usize {
                    let lhs = shuffle(&a, &BarWord::repeated(z, k), &BarWord::repeated(z, l));
                    let rhs = BarElement::from_term(BarWord::repeated(z, k + l), binomial((k + l) as u64, k as u64));
                    ensure(lhs == rhs, || format!("sz({k}) ⋆ sz({l}) over {}", a.name()))?;
                    n += 1;
                }
            }
        }
        Ok(n)
    });
    let coalgebras = [
        ("primitive(2)", presets::primitive_coalgebra(2)),
        ("primitive(4)", presets::primitive_coalgebra(4)),
        ("divided", presets::divided_coalgebra()),
        ("rank-three", presets::rank_three_coalgebra()),
    ];
    r.check("cobar d²=0", || {
        let mut n = 0;
        for (name, co) in &coalgebras {
            let omega = Cobar::new(co.clone());
            for deg in 0..=10 {
                for w in omega.basis_of_degree(deg) {
                    let dd = cobar_differential(&omega, &w).map_linear(|v| cobar_differential(&omega, v));
                    ensure(dd.is_zero(), || format!("{} over {name}", omega.label(&w)))?;
                    n += 1;
                }
            }
        }
        Ok(n)
    });
    r.check("acyclic cobar", || {
        let top = 12;
        let mut n = 0;
        for (name, co) in &coalgebras {
            let spec = TwistingCochainSpec::cobar(co.clone()).map_err(|e| format!("{name}: {e}"))?;
            let c = twisted_tensor(&spec, top).map_err(|e| format!("{name}: {e}"))?;
            for k in 0..top {
                let h = c.homology(k).map_err(|e| e.to_string())?;
                let expect = if k == 0 { 1 } else { 0 };
                ensure(h.free_rank == expect && h.torsion.is_empty(), || format!("H^{k} = {h} over {name}"))?;
                n += 1;
            }
        }
        Ok(n)
    });
}

fn loop_suite(r: &mut Report) {
    let algebras = test_algebras();
    let top = 10;
    let bases: Vec<(&PresentedAlgebra, Vec<FlsKey>)> =
        algebras.iter().map(|a| (a, (0..=top).flat_map(|n| fls_basis(a, n)).collect())).collect();
    r.check("⌣d²=0", || {
        let mut n = 0;
        for (a, basis) in &bases {
            for k in basis {
                let dd = apply(&hochschild_differential(a, k), |x| hochschild_differential(a, x));
                ensure(dd.is_zero(), || format!("{} over {}", k.label(a), a.name()))?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.check("S²=0", || {
        let mut n = 0;
        for (a, basis) in &bases {
            for k in basis {
                let ss = apply(&cyclic_s(a, k), |x| cyclic_s(a, x));
                ensure(ss.is_zero(), || format!("{} over {}", k.label(a), a.name()))?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.check("⌣dS=−S⌣d", || {
        let mut n = 0;
        for (a, basis) in &bases {
            for k in basis {
                let mut sum = apply(&cyclic_s(a, k), |x| hochschild_differential(a, x));
                sum.add_assign(&apply(&hochschild_differential(a, k), |x| cyclic_s(a, x)));
                ensure(sum.is_zero(), || format!("{} over {}", k.label(a), a.name()))?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.check("power-map chain map", || {
        let mut n = 0;
        for (a, basis) in &bases {
            for k in basis {
                let lhs = apply(&power_map(a, k), |x| hochschild_differential(a, x));
                let rhs = apply(&hochschild_differential(a, k), |x| power_map(a, x));
                ensure(lhs == rhs, || format!("{} over {}", k.label(a), a.name()))?;
                n += 1;
            }
        }
        Ok(n)
    });
    for (model, name) in [(Model::Hos, "D̃²=0"), (Model::Tc, "D_π̃²=0")] {
        r.check(name, || {
            for a in &algebras {
                build_model(a, model, top).map_err(|e| format!("{} over {}", e, a.name()))?;
            }
            Ok(algebras.len())
        });
    }
    let full_algebras = [presets::truncated_polynomial(2, 3), presets::small_dga(), presets::wedge(&[2, 3])];
    r.check("D̄²=0", || {
        let mut n = 0;
        for a in &full_algebras {
            let f = FullLoop::new(a, 12);
            for c in words_up_to(a, 7) {
                let d = f.differential(&FullKey::bar(c.clone())).map_err(|e| e.to_string())?;
                let dd = f.differential_elem(&d).map_err(|e| e.to_string())?;
                ensure(dd.is_zero(), || format!("1⊗{} over {}", c.display(a), a.name()))?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.check("(ε⊗Id)D̄=⌣d(ε⊗Id)", || {
        let mut n = 0;
        for a in &full_algebras {
            let f = FullLoop::new(a, 12);
            for c in words_up_to(a, 8) {
                let d = f.differential(&FullKey::bar(c.clone())).map_err(|e| e.to_string())?;
                let expect = hochschild_differential(a, &FlsKey::new(crate::dga::UNIT, c.clone()));
                ensure(f.linearize(&d) == expect, || format!("1⊗{} over {}", c.display(a), a.name()))?;
                n += 1;
            }
        }
        Ok(n)
    });
}

fn circle_suite(r: &mut Report) {
    let ts = match t_family(3) {
        Ok(ts) => ts,
        Err(e) => {
            r.check("T family", || Err(e.to_string()));
            return;
        }
    };
    let cubes_of = |upto: usize| -> Vec<CircleCube> { ts[..=upto].iter().flat_map(|t| t.keys().cloned()).collect() };
    r.check("dT_n identity n≤3", || {
        for n in 0..=3 {
            ensure(boundary_chain(&ts[n]) == quadratic_term(&ts, n), || format!("T_{n}"))?;
        }
        Ok(4)
    });
    r.check("primitivity n≤3", || {
        for n in 0..=3 {
            ensure(diagonal_chain(&ts[n], true).is_zero(), || format!("T_{n}"))?;
        }
        Ok(4)
    });
    r.check("cube d²=0", || {
        let cs = cubes_of(3);
        for c in &cs {
            ensure(boundary_chain(&boundary(c)).is_zero(), || format!("{c:?}"))?;
        }
        Ok(cs.len())
    });
    r.check("dσ=Id−σd", || {
        let cs: Vec<CircleCube> = cubes_of(3).into_iter().filter(|c| c.dim() >= 2).collect();
        for c in &cs {
            let mut rhs = CircleChain::basis(c.clone());
            rhs.add_scaled(&sigma_chain(&boundary(c)), &-1);
            ensure(boundary(&c.sigma()) == rhs, || format!("{c:?}"))?;
        }
        Ok(cs.len())
    });
    r.check("diagonal coassociative", || {
        type Triple = LinComb<(CircleCube, CircleCube, CircleCube), i64>;
        let cs = cubes_of(2);
        for c in &cs {
            let mut left = Triple::zero();
            let mut right = Triple::zero();
            for ((a, b), k) in serre_diagonal(c).iter() {
                for ((a1, a2), i) in serre_diagonal(a).iter() {
                    left.add_term((a1.clone(), a2.clone(), b.clone()), k * i);
                }
                for ((b1, b2), j) in serre_diagonal(b).iter() {
                    right.add_term((a.clone(), b1.clone(), b2.clone()), k * j);
                }
            }
            ensure(left == right, || format!("{c:?}"))?;
        }
        Ok(cs.len())
    });
    r.check("d is a coderivation", || {
        let cs = cubes_of(2);
        for c in &cs {
            let lhs = diagonal_chain(&boundary(c), false);
            ensure(lhs == tensor_boundary(&serre_diagonal(c)), || format!("{c:?}"))?;
        }
        Ok(cs.len())
    });
    r.check("⟨𝒯⟩ d²=0", || {
        let mut n = 0;
        for deg in 0..=12 {
            for w in t_words_of_degree(deg).into_iter().filter(|w| w.len() <= 3 && w.iter().all(|&i| i <= 3)) {
                let dd = t_differential(&w).map_linear(|u| t_differential(u));
                ensure(dd.is_zero(), || format!("{w:?}"))?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.check("⟨𝒯⟩ realization", || {
        let mut n = 0;
        for deg in 1..=9 {
            for w in t_words_of_degree(deg).into_iter().filter(|w| w.iter().all(|&i| i <= 3)) {
                let mut rhs = CircleChain::zero();
                for (u, c) in t_differential(&w).iter() {
                    rhs.add_scaled(&realize(u, &ts), c);
                }
                ensure(boundary_chain(&realize(&w, &ts)) == rhs, || format!("{w:?}"))?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.check("resolution ∂̃²=0 through v(4)", || {
        let mut n = 0;
        for deg in 0..=12 {
            for k in resolution_basis(deg, 4) {
                let dd = resolution_differential(&k).map_linear(resolution_differential);
                ensure(dd.is_zero(), || k.label())?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.check("orbit (D♯)²=0", || {
        let mut n = 0;
        for seed in 0..20 {
            for twists in 0..=2 {
                let spec: OmegaComplexSpec<Integer> = random_spec(seed, 8, twists);
                spec.orbit_complex(8).map_err(|e| format!("seed {seed}: {e}"))?;
                n += 1;
            }
        }
        Ok(n)
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for suite in [Suite::Dga, Suite::Loop, Suite::Circle] {
            let r = run(suite);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("circle".parse::<Suite>(), Ok(Suite::Circle));
        assert!("cubes".parse::<Suite>().is_err());
    }

    #[test]
    fn failures_carry_a_counterexample() {
        let mut r = Report::default();
        r.check("broken", || Err("x".into()));
        assert!(!r.passed());
        assert!(r.to_string().contains("counterexample: x"));
    }
}
