//! Irreducible decomposition by coprime splitting.
//!
//! If a minimal generator factors as `v·w` with `v`, `w` coprime and
//! nontrivial, then `I = (I + (v)) ∩ (I + (w))`. Recursing until every
//! generator is a pure power leaves irreducible components; after pruning
//! redundant ones their supports are exactly `Ass(R/I)`. This route shares
//! nothing with the socle test in [`crate::assoc`] beyond ideal arithmetic.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::assoc::AssSet;
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::ring::{Monomial, RingContext};

/// Ideal generated by pure powers `x_{i1}^{a1}, ..., x_{ik}^{ak}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(powers: BTreeMap<usize, u32>) -> Result<Self> {
        if powers.is_empty() || powers.values().any(|&e| e == 0) {
            return Err(Error::InvalidArgument(
                "irreducible component needs nonempty positive exponents".into(),
            ));
        }
        Ok(IrreducibleComponent { powers })
    }

    pub fn powers(&self) -> &BTreeMap<usize, u32> {
        &self.powers
    }

    pub fn is_m_primary(&self, ctx: &RingContext) -> bool {
        self.powers.len() == ctx.nvars()
    }

    /// `self ⊆ other`: each pure power of `self` is a multiple of one in `other`.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.powers
            .iter()
            .all(|(i, &b)| other.powers.get(i).is_some_and(|&a| a <= b))
    }

    pub fn to_ideal(&self, ctx: &Arc<RingContext>) -> MonomialIdeal {
        let n = ctx.nvars();
        let gens = self
            .powers
            .iter()
            .map(|(&i, &e)| Monomial::pure_power(n, i, e))
            .collect();
        MonomialIdeal::from_raw(ctx, gens)
    }

    pub fn radical(&self, ctx: &Arc<RingContext>) -> MonomialPrime {
        MonomialPrime::new(ctx, self.powers.keys().copied()).expect("nonempty, in range")
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> impl fmt::Display + 'a {
        ComponentDisplay { comp: self, ctx }
    }
}

struct ComponentDisplay<'a> {
    comp: &'a IrreducibleComponent,
    ctx: &'a RingContext,
}

impl fmt::Display for ComponentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, (&i, &e)) in self.comp.powers.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        f.write_str(")")
    }
}

/// Drops duplicates and every component containing another one.
///
/// Irreducible monomial ideals are meet-prime in the lattice of monomial
/// ideals, so `⋂_{k≠j} Q_k ⊆ Q_j` holds exactly when some `Q_k ⊆ Q_j`.
fn irredundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = (0..comps.len())
        .map(|j| {
            !comps
                .iter()
                .enumerate()
                .any(|(k, q)| k != j && q.is_subset_of(&comps[j]))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Splitting decomposer with a bounded memo keyed on canonical generator lists.
pub struct Decomposer {
    cache: HashMap<Vec<Monomial>, Arc<Vec<IrreducibleComponent>>>,
    order: VecDeque<Vec<Monomial>>,
    capacity: usize,
    nodes: usize,
    max_nodes: usize,
}

impl Decomposer {
    pub fn new(ctx: &RingContext) -> Self {
        Decomposer {
            cache: HashMap::new(),
            order: VecDeque::new(),
            capacity: ctx.limits().cache_capacity,
            nodes: 0,
            max_nodes: ctx.limits().max_decomposition_nodes,
        }
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.len()
    }

    fn remember(&mut self, key: Vec<Monomial>, value: Arc<Vec<IrreducibleComponent>>) {
        if self.capacity == 0 {
            return;
        }
        while self.cache.len() >= self.capacity {
            match self.order.pop_front() {
                Some(old) => {
                    self.cache.remove(&old);
                }
                None => break,
            }
        }
        self.order.push_back(key.clone());
        self.cache.insert(key, value);
    }

    /// Irredundant irreducible components whose intersection is `I`.
    pub fn decompose(&mut self, ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
        ideal.is_proper_nonzero()?;
        self.nodes = 0;
        let comps = self.split(ideal)?;
        Ok(comps.as_ref().clone())
    }

    fn split(&mut self, ideal: &MonomialIdeal) -> Result<Arc<Vec<IrreducibleComponent>>> {
        if let Some(hit) = self.cache.get(ideal.generators()) {
            return Ok(Arc::clone(hit));
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::CapExceeded {
                cap: "decomposition",
                needed: self.nodes as u64,
                limit: self.max_nodes as u64,
            });
        }
        let pivot = ideal.generators().iter().find(|g| g.support().len() >= 2);
        let result = match pivot {
            None => {
                let powers = ideal
                    .generators()
                    .iter()
                    .map(|g| {
                        let i = g.support().into_iter().next().expect("pure power");
                        (i, g.exponent(i))
                    })
                    .collect();
                vec![IrreducibleComponent { powers }]
            }
            Some(g) => {
                let first = *g.support().iter().next().expect("mixed support");
                let v = Monomial::pure_power(g.nvars(), first, g.exponent(first));
                let w = g.colon_unchecked(&v);
                let left = self.split(&ideal.add_generator(&v)?)?;
                let right = self.split(&ideal.add_generator(&w)?)?;
                irredundant(left.iter().chain(right.iter()).cloned().collect())
            }
        };
        let result = Arc::new(result);
        self.remember(ideal.generators().to_vec(), Arc::clone(&result));
        Ok(result)
    }
}

pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    Decomposer::new(ideal.context()).decompose(ideal)
}

/// `Ass(R/I)` as the supports of the irredundant irreducible components.
pub fn ass_from_decomposition(ideal: &MonomialIdeal) -> Result<AssSet> {
    let ctx = ideal.context();
    let comps = irreducible_decomposition(ideal)?;
    Ok(AssSet::from_primes(
        ctx,
        comps.iter().map(|c| c.radical(ctx)),
    ))
}

/// Intersection of the components as a monomial ideal.
pub fn recompose(ctx: &Arc<RingContext>, comps: &[IrreducibleComponent]) -> Result<MonomialIdeal> {
    let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.to_ideal(ctx)).collect();
    MonomialIdeal::intersect(&ideals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::ass_primes;
    use crate::parse::parse_ideal;

    fn ring(names: &[&str]) -> Arc<RingContext> {
        RingContext::new(names).unwrap().into_shared()
    }

    fn shown(r: &Arc<RingContext>, comps: &[IrreducibleComponent]) -> Vec<String> {
        comps.iter().map(|c| c.display(r).to_string()).collect()
    }

    #[test]
    fn small_decomposition() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "(x^2, x*y)").unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(shown(&r, &comps), ["(x)", "(x^2, y)"]);
        assert_eq!(recompose(&r, &comps).unwrap(), i);
    }

    #[test]
    fn irreducible_input_is_its_own_decomposition() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "(x^2, y^5)").unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(shown(&r, &comps), ["(x^2, y^5)"]);
        assert!(comps[0].is_m_primary(&r));
    }

    #[test]
    fn example_ideal_recomposes() {
        let r = ring(&["x", "y", "z"]);
        let i = parse_ideal(&r, "(x^3, x*y*z, y^2*z)").unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(recompose(&r, &comps).unwrap(), i);
        assert_eq!(ass_from_decomposition(&i).unwrap(), ass_primes(&i).unwrap());
    }

    #[test]
    fn squarefree_components_are_prime() {
        let r = ring(&["x", "y", "z"]);
        let i = parse_ideal(&r, "(x*y, y*z)").unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        assert!(comps.iter().all(|c| c.powers().values().all(|&e| e == 1)));
        assert_eq!(
            ass_from_decomposition(&i).unwrap().to_string(),
            "{(y), (x,z)}"
        );
    }

    #[test]
    fn bounded_cache_evicts() {
        let limits = crate::ring::Limits {
            cache_capacity: 2,
            ..Default::default()
        };
        let r = RingContext::new(&["x", "y", "z"])
            .unwrap()
            .with_limits(limits)
            .into_shared();
        let i = parse_ideal(&r, "(x*y*z, x^2*y, y^2*z^3)").unwrap();
        let mut d = Decomposer::new(&r);
        let comps = d.decompose(&i).unwrap();
        assert!(d.cached_entries() <= 2);
        assert_eq!(recompose(&r, &comps).unwrap(), i);
    }

    #[test]
    fn node_cap() {
        let limits = crate::ring::Limits {
            max_decomposition_nodes: 1,
            ..Default::default()
        };
        let r = RingContext::new(&["x", "y"])
            .unwrap()
            .with_limits(limits)
            .into_shared();
        let i = parse_ideal(&r, "(x*y)").unwrap();
        assert!(matches!(
            irreducible_decomposition(&i),
            Err(Error::CapExceeded {
                cap: "decomposition",
                ..
            })
        ));
    }
}
