//! Seeded property suites over random ideals.
//!
//! Each suite draws instances from a fixed seed, checks one structural fact
//! about associated primes or one criterion, and records every violation.
//! The acceptance tests and the `props` CLI subcommand both run these.

use std::fmt;

use serde::Serialize;

use crate::assoc::{
    ass_primes, ass_primes_or_empty, corner_elements, corner_elements_exhaustive,
    has_maximal_associated, AssSet,
};
use crate::criteria::{
    check_chain_criterion, check_corner_divisibility, check_dichotomy, check_squarefree_maximal,
    infer_split, verify_split_identities, SplitDecomposition,
};
use crate::decompose::ass_from_decomposition;
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::random::{IdealShape, InstanceRng};
use crate::report::Conclusion;
use crate::ring::Monomial;

#[derive(Clone, Debug, Serialize)]
pub struct PropertyOutcome {
    pub name: &'static str,
    /// Instances drawn.
    pub cases: usize,
    /// Instances on which the property had something to check.
    pub applicable: usize,
    pub violations: Vec<String>,
    /// Instances worth reporting that are not violations.
    pub notes: Vec<String>,
}

impl PropertyOutcome {
    fn new(name: &'static str) -> Self {
        PropertyOutcome {
            name,
            cases: 0,
            applicable: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) {
        match outcome {
            Ok(true) => {}
            Ok(false) => self.violations.push(describe()),
            Err(e) => self.violations.push(format!("{}: {e}", describe())),
        }
    }
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} cases, {} applicable, {} violations",
            self.name,
            self.cases,
            self.applicable,
            self.violations.len()
        )?;
        if !self.notes.is_empty() {
            write!(f, ", {} notes", self.notes.len())?;
        }
        Ok(())
    }
}

const SMALL: IdealShape = IdealShape {
    max_gens: 5,
    max_exp: 4,
};

/// Socle route and decomposition route compute the same `Ass(R/I)`.
pub fn oracle_equivalence(seed: u64, cases: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("oracle-equivalence");
    let mut g = InstanceRng::new(seed);
    for _ in 0..cases {
        let n = g.range(1, 4);
        let ctx = InstanceRng::ring(n);
        let ideal = g.ideal(&ctx, SMALL);
        out.cases += 1;
        out.applicable += 1;
        let verdict = (|| Ok(ass_primes(&ideal)? == ass_from_decomposition(&ideal)?))();
        out.record(verdict, || format!("oracles disagree on {ideal}"));
    }
    out
}

/// Union of the supports of `Ass(R/I)` is `supp(I)`.
pub fn support_equality(seed: u64, cases: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("support-equality");
    let mut g = InstanceRng::new(seed);
    for _ in 0..cases {
        let ctx = InstanceRng::ring(g.range(1, 4));
        let vars: Vec<usize> = (0..ctx.nvars()).filter(|_| g.chance(0.75)).collect();
        let vars = if vars.is_empty() { vec![0] } else { vars };
        let ideal = g.ideal_in(&ctx, &vars, SMALL);
        out.cases += 1;
        out.applicable += 1;
        let verdict = ass_primes(&ideal).map(|a| a.support() == ideal.support());
        out.record(verdict, || format!("support mismatch for {ideal}"));
    }
    out
}

/// `Ass(R/(I:f)) ⊆ Ass(R/I) ⊆ Ass(R/(I:f)) ∪ Ass(R/(I,f))` for `f ∉ I`.
pub fn exact_sequence_inclusions(seed: u64, cases: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("exact-sequence-inclusions");
    let mut g = InstanceRng::new(seed);
    while out.applicable < cases {
        out.cases += 1;
        let ctx = InstanceRng::ring(g.range(1, 4));
        let ideal = g.ideal(&ctx, SMALL);
        let vars: Vec<usize> = (0..ctx.nvars()).collect();
        let f = g.monomial_in(ctx.nvars(), &vars, 3);
        if ideal.contains(&f) {
            continue;
        }
        out.applicable += 1;
        let verdict = (|| {
            let whole = ass_primes(&ideal)?;
            let colon = ass_primes_or_empty(&ideal.colon_monomial(&f))?;
            let added = ass_primes_or_empty(&ideal.add_generator(&f)?)?;
            Ok(colon.is_subset(&whole) && whole.is_subset(&colon.union(&added)))
        })();
        out.record(verdict, || {
            format!("inclusions fail for I = {ideal}, f = {}", f.to_text(&ctx))
        });
    }
    out
}

/// Ideals in disjoint variable blocks: `Ass(I_1 + I_2) = {p_1 + p_2}`.
pub fn disjoint_sum(seed: u64, cases: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("disjoint-sum");
    let mut g = InstanceRng::new(seed);
    let shape = IdealShape {
        max_gens: 3,
        max_exp: 3,
    };
    for _ in 0..cases {
        let n1 = g.range(1, 2);
        let n2 = g.range(1, 3);
        let ctx = InstanceRng::ring(n1 + n2);
        let first: Vec<usize> = (0..n1).collect();
        let second: Vec<usize> = (n1..n1 + n2).collect();
        let i1 = g.ideal_in(&ctx, &first, shape);
        let i2 = g.ideal_in(&ctx, &second, shape);
        out.cases += 1;
        out.applicable += 1;
        let verdict = (|| {
            let a1 = ass_primes(&i1)?;
            let a2 = ass_primes(&i2)?;
            let mut expected = Vec::new();
            for p in a1.iter() {
                for q in a2.iter() {
                    let vars = p.vars().iter().chain(q.vars()).copied();
                    expected.push(MonomialPrime::new(&ctx, vars)?);
                }
            }
            let expected = AssSet::from_primes(&ctx, expected);
            Ok(ass_primes(&i1.sum(&i2)?)? == expected)
        })();
        out.record(verdict, || {
            format!("product structure fails for {i1} + {i2}")
        });
    }
    out
}

/// Squarefree `I`: `m ∈ Ass(R/I)` iff `I = m`.
pub fn squarefree_characterization(seed: u64, cases: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("squarefree-characterization");
    let mut g = InstanceRng::new(seed);
    for k in 0..cases {
        let ctx = InstanceRng::ring(g.range(1, 5));
        // mix in the maximal ideal itself so the positive side is exercised
        let ideal = if k % 10 == 0 {
            MonomialIdeal::maximal(&ctx)
        } else {
            g.squarefree_ideal(&ctx, 6)
        };
        out.cases += 1;
        out.applicable += 1;
        let verdict = check_squarefree_maximal(&ideal).map(|r| {
            r.conclusion == Conclusion::EquivalenceEstablished && r.oracle_agreement == Some(true)
        });
        out.record(verdict, || format!("characterization fails for {ideal}"));
    }
    out
}

/// Ideals whose generators admit a two-column chain never have `m` associated.
pub fn chain_soundness(seed: u64, cases: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("chain-soundness");
    let mut g = InstanceRng::new(seed);
    let shape = IdealShape {
        max_gens: 6,
        max_exp: 5,
    };
    while out.applicable < cases {
        out.cases += 1;
        let ctx = InstanceRng::ring(g.range(2, 4));
        let ideal = g.chain_biased_ideal(&ctx, shape);
        match check_chain_criterion(&ideal) {
            Ok(None) => {}
            Ok(Some(w)) => {
                out.applicable += 1;
                let verdict = (|| {
                    Ok(w.is_valid_for(&ideal)
                        && !has_maximal_associated(&ideal)?
                        && !ass_from_decomposition(&ideal)?.contains_maximal())
                })();
                out.record(verdict, || format!("chain criterion unsound on {ideal}"));
            }
            Err(e) => {
                out.applicable += 1;
                out.violations.push(format!("{ideal}: {e}"));
            }
        }
    }
    out
}

fn random_split(g: &mut InstanceRng) -> Option<(SplitDecomposition, u32)> {
    let n = g.range(3, 4);
    let ctx = InstanceRng::ring(n);
    let u_var = g.range(0, n - 1);
    let mut u_exps = vec![0u32; n];
    u_exps[u_var] = if g.chance(0.8) { 1 } else { 2 };
    let mut others: Vec<usize> = (0..n).filter(|&v| v != u_var).collect();
    if g.chance(0.25) && others.len() > 2 {
        // u with two variables
        let extra = others.remove(0);
        u_exps[extra] = 1;
    }
    let u = Monomial::new(u_exps).ok()?;
    let shape = IdealShape {
        max_gens: 3,
        max_exp: 3,
    };
    let quotient = g.ideal_in(&ctx, &others, shape);
    let rest = if g.chance(0.2) {
        MonomialIdeal::zero(&ctx)
    } else {
        g.ideal_in(&ctx, &others, shape)
    };
    let whole = quotient.scale(&u).ok()?.sum(&rest).ok()?;
    let t = g.range(1, 3) as u32;
    SplitDecomposition::new(whole, u, quotient, rest)
        .ok()
        .map(|d| (d, t))
}

/// `(L^t : u^t) = (I+J)^t` and `L^t = (L^t : u^t) ∩ (L^t, u^t)`.
pub fn split_identities(seed: u64, cases: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("split-identities");
    let mut g = InstanceRng::new(seed);
    while out.applicable < cases {
        out.cases += 1;
        let Some((d, t)) = random_split(&mut g) else {
            continue;
        };
        out.applicable += 1;
        let verdict = (|| {
            let rep = verify_split_identities(&d, t)?;
            // the inferred split must validate as well
            let inferred = infer_split(&d.whole, &d.u)?;
            let rep2 = verify_split_identities(&inferred, t)?;
            Ok(rep.conclusion == Conclusion::Verified && rep2.conclusion == Conclusion::Verified)
        })();
        out.record(verdict, || {
            format!("split identities fail for L = {}, t = {t}", d.whole)
        });
    }
    out
}

/// Whenever `m ∈ Ass((L^t, u^t))`, one of the two branches holds, with the
/// second branch read for pure powers `u = x_j^a`. Instances where only that
/// reading saves the dichotomy are collected as notes.
pub fn dichotomy(seed: u64, cases: usize, max_draws: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("dichotomy");
    let mut g = InstanceRng::new(seed);
    while out.applicable < cases && out.cases < max_draws {
        out.cases += 1;
        let Some((d, t)) = random_split(&mut g) else {
            continue;
        };
        match check_dichotomy(&d, t) {
            Ok(rep) if rep.conclusion == Conclusion::NotApplicable => {}
            Ok(rep) => {
                out.applicable += 1;
                if rep.conclusion != Conclusion::Verified {
                    out.violations.push(format!("L = {}, t = {t}", d.whole));
                } else if rep.flag_value("branch-i") == Some(false)
                    && rep.flag_value("branch-ii") == Some(false)
                {
                    let ctx = d.whole.context();
                    out.notes.push(format!(
                        "L = {}, u = {}, t = {t}: only the pure-power reading of branch (ii) holds",
                        d.whole,
                        d.u.to_text(ctx)
                    ));
                }
            }
            Err(e) => {
                out.applicable += 1;
                out.violations
                    .push(format!("L = {}, t = {t}: {e}", d.whole));
            }
        }
    }
    out
}

/// Corners of `I^t` found by exhaustive search are divisible by `x_i`
/// whenever `m \ x_i ∉ Ass((I \ x_i)^t)`.
pub fn corner_divisibility(seed: u64, cases: usize, max_draws: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("corner-divisibility");
    let mut g = InstanceRng::new(seed);
    let shape = IdealShape {
        max_gens: 4,
        max_exp: 3,
    };
    while out.applicable < cases && out.cases < max_draws {
        out.cases += 1;
        let ctx = InstanceRng::ring(g.range(2, 3));
        let ideal = g.ideal(&ctx, shape);
        let t = g.range(1, 2) as u32;
        let step = (|| -> Result<bool> {
            let power = ideal.power(t)?;
            let corners = corner_elements_exhaustive(&power)?;
            let mut fired = false;
            for c in &corners {
                for i in 0..ctx.nvars() {
                    let rep = check_corner_divisibility(&ideal, t, c.monomial(), i)?;
                    fired |= rep.conclusion == Conclusion::Verified;
                }
            }
            Ok(fired)
        })();
        match step {
            Ok(true) => out.applicable += 1,
            Ok(false) => {}
            Err(e) => {
                out.applicable += 1;
                out.violations.push(format!("I = {ideal}, t = {t}: {e}"));
            }
        }
    }
    out
}

/// Reported corners satisfy the corner definition verbatim and agree with
/// the exhaustive scan and with `m ∈ Ass(R/I)`.
pub fn corner_validity(seed: u64, cases: usize) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("corner-validity");
    let mut g = InstanceRng::new(seed);
    for _ in 0..cases {
        let ctx = InstanceRng::ring(g.range(1, 3));
        let ideal = g.ideal(&ctx, SMALL);
        out.cases += 1;
        out.applicable += 1;
        let verdict = (|| {
            let fast = corner_elements(&ideal)?;
            let slow = corner_elements_exhaustive(&ideal)?;
            let definition = |f: &Monomial| {
                !ideal.contains(f)
                    && (0..ctx.nvars()).all(|i| {
                        f.multiply(&ctx.var(i))
                            .map(|xf| ideal.contains(&xf))
                            .unwrap_or(false)
                    })
            };
            let valid = fast
                .iter()
                .chain(slow.iter())
                .all(|c| definition(c.monomial()));
            let contained = fast.iter().all(|c| slow.contains(c));
            let has_m = ass_primes(&ideal)?.contains_maximal();
            let agree = fast.is_empty() == slow.is_empty()
                && !fast.is_empty() == has_m
                && has_maximal_associated(&ideal)? == has_m;
            Ok(valid && contained && agree)
        })();
        out.record(verdict, || format!("corner check fails for {ideal}"));
    }
    out
}

/// Runs every suite with the given base seed and case count.
pub fn run_all(seed: u64, cases: usize) -> Vec<PropertyOutcome> {
    let draws = cases.saturating_mul(200).max(1000);
    vec![
        oracle_equivalence(seed, cases.max(300)),
        support_equality(seed.wrapping_add(1), cases),
        exact_sequence_inclusions(seed.wrapping_add(2), cases),
        disjoint_sum(seed.wrapping_add(3), cases),
        squarefree_characterization(seed.wrapping_add(4), cases.max(500)),
        chain_soundness(seed.wrapping_add(5), cases.max(500)),
        split_identities(seed.wrapping_add(6), cases),
        dichotomy(seed.wrapping_add(7), cases, draws),
        corner_divisibility(seed.wrapping_add(8), cases, draws),
        corner_validity(seed.wrapping_add(9), cases),
    ]
}

/// Error raised by `run_all` consumers when a suite reports violations.
pub fn first_failure(outcomes: &[PropertyOutcome]) -> Option<Error> {
    outcomes
        .iter()
        .find(|o| !o.passed())
        .map(|o| Error::Falsified {
            criterion: o.name.to_string(),
            detail: o.violations.first().cloned().unwrap_or_default(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_are_clean() {
        for o in [
            oracle_equivalence(1, 20),
            support_equality(1, 20),
            exact_sequence_inclusions(1, 20),
            disjoint_sum(1, 20),
            squarefree_characterization(1, 20),
            chain_soundness(1, 20),
            split_identities(1, 10),
            dichotomy(1, 5, 2000),
            corner_divisibility(1, 5, 2000),
            corner_validity(1, 20),
        ] {
            assert!(o.passed(), "{o}: {:?}", o.violations);
        }
    }
}
