//! Monomial ideals in canonical minimal-generator form.
//!
//! Every constructor exit minimalizes and sorts, so the generator list of a
//! [`MonomialIdeal`] is always `G(I)` and structural equality is ideal
//! equality.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{Monomial, RingContext};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: Arc<RingContext>,
    gens: Vec<Monomial>,
}

/// Sorts canonically and drops every generator divisible by another.
///
/// After the degree-first sort a divisor always precedes its multiples, so
/// one pass against the kept prefix suffices.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn check_cap(ctx: &RingContext, needed: usize) -> Result<()> {
    let limit = ctx.limits().max_generators;
    if needed > limit {
        return Err(Error::CapExceeded {
            cap: "generators",
            needed: needed as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

impl MonomialIdeal {
    pub fn from_generators(ctx: &Arc<RingContext>, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            ctx.check(g)?;
        }
        Ok(Self::from_raw(ctx, gens))
    }

    pub(crate) fn from_raw(ctx: &Arc<RingContext>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens: minimalize(gens),
        }
    }

    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Arc<RingContext>) -> Self {
        MonomialIdeal {
            ctx: Arc::clone(ctx),
            gens: vec![ctx.one()],
        }
    }

    pub fn principal(ctx: &Arc<RingContext>, f: Monomial) -> Result<Self> {
        Self::from_generators(ctx, vec![f])
    }

    /// `m = (x_1, ..., x_n)`.
    pub fn maximal(ctx: &Arc<RingContext>) -> Self {
        let gens = (0..ctx.nvars()).map(|i| ctx.var(i)).collect();
        Self::from_raw(ctx, gens)
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// True iff some minimal generator divides `f`.
    ///
    /// Panics if `f` has the wrong number of variables.
    pub fn contains(&self, f: &Monomial) -> bool {
        assert_eq!(f.nvars(), self.ctx.nvars(), "monomial from another ring");
        self.gens.iter().any(|g| g.divides_unchecked(f))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let gens: Vec<Monomial> = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(Self::from_raw(&self.ctx, gens))
    }

    /// `(I, f)`.
    pub fn add_generator(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.ctx.check(f)?;
        let mut gens = self.gens.clone();
        gens.push(f.clone());
        Ok(Self::from_raw(&self.ctx, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        check_cap(&self.ctx, self.gens.len().saturating_mul(other.gens.len()))?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.multiply(b)?);
            }
        }
        Ok(Self::from_raw(&self.ctx, gens))
    }

    /// `f · I`.
    pub fn scale(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.ctx.check(f)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.multiply(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(&self.ctx, gens))
    }

    /// `I^s` for `s ≥ 1`, by repeated multiplication with minimalization after each step.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::InvalidArgument(
                "power exponent must be positive".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : f)`.
    ///
    /// Panics if `f` has the wrong number of variables.
    pub fn colon_monomial(&self, f: &Monomial) -> MonomialIdeal {
        assert_eq!(f.nvars(), self.ctx.nvars(), "monomial from another ring");
        let gens = self.gens.iter().map(|g| g.colon_unchecked(f)).collect();
        Self::from_raw(&self.ctx, gens)
    }

    /// `(I : J)` as the intersection of `(I : g)` over `g ∈ G(J)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let parts: Vec<MonomialIdeal> = other.gens.iter().map(|g| self.colon_monomial(g)).collect();
        Self::intersect(&parts)
    }

    /// Pairwise intersection: minimal lcms of generator pairs.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        check_cap(&self.ctx, self.gens.len().saturating_mul(other.gens.len()))?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm_unchecked(b));
            }
        }
        Ok(Self::from_raw(&self.ctx, gens))
    }

    /// Left fold of [`intersection`](Self::intersection) in list order.
    pub fn intersect(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let (first, rest) = ideals
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("cannot intersect an empty list".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, next| acc.intersection(next))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::squarefree_part).collect();
        Self::from_raw(&self.ctx, gens)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// `I \ x_i`: substitute `x_i ↦ 0`, dropping every generator divisible by `x_i`.
    pub fn delete_variable(&self, i: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|g| g.exponent(i) == 0)
            .cloned()
            .collect();
        MonomialIdeal {
            ctx: Arc::clone(&self.ctx),
            gens,
        }
    }

    /// Sets every variable outside `vars` to 1 and re-minimalizes in the
    /// sub-ring on `vars` (sorted, distinct indices).
    pub fn localize_at(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument(
                "localization needs a nonempty variable set".into(),
            ));
        }
        if vars.windows(2).any(|w| w[0] >= w[1]) || vars.iter().any(|&v| v >= self.ctx.nvars()) {
            return Err(Error::InvalidArgument(
                "variable set must be sorted, distinct and in range".into(),
            ));
        }
        let sub = Arc::new(self.ctx.restrict(vars)?);
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::from_vec_unchecked(vars.iter().map(|&v| g.exponent(v)).collect()))
            .collect();
        Ok(Self::from_raw(&sub, gens))
    }

    /// Union of the supports of the minimal generators.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for g in &self.gens {
            out.extend(g.support());
        }
        out
    }

    /// `(I : f^∞)`, iterating the colon until it stabilizes.
    pub fn saturate(&self, f: &Monomial) -> MonomialIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_monomial(f);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Componentwise maximum over `G(I)`; the identity for the zero ideal.
    pub fn generator_lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(self.ctx.one(), |acc, g| acc.lcm_unchecked(g))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self == other
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ctx))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

/// Prime generated by a nonempty set of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ctx: Arc<RingContext>,
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(ctx: &Arc<RingContext>, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = vars.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidPrime(
                "a monomial prime needs at least one variable".into(),
            ));
        }
        if let Some(&bad) = set.iter().find(|&&v| v >= ctx.nvars()) {
            return Err(Error::InvalidPrime(format!(
                "variable index {bad} out of range"
            )));
        }
        Ok(MonomialPrime {
            ctx: Arc::clone(ctx),
            vars: set.into_iter().collect(),
        })
    }

    pub fn maximal(ctx: &Arc<RingContext>) -> Self {
        MonomialPrime {
            ctx: Arc::clone(ctx),
            vars: (0..ctx.nvars()).collect(),
        }
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.vars.binary_search(&i).is_ok()
    }

    pub fn is_maximal(&self) -> bool {
        self.vars.len() == self.ctx.nvars()
    }

    /// `p \ x_i`: the prime on the remaining variables.
    pub fn prime_minus(&self, i: usize) -> Result<MonomialPrime> {
        if !self.contains_var(i) {
            return Err(Error::InvalidPrime(format!(
                "{} is not a generator of {self}",
                self.ctx.name(i.min(self.ctx.nvars() - 1))
            )));
        }
        if self.vars.len() < 2 {
            return Err(Error::InvalidPrime(format!(
                "removing {} from {self} leaves the zero ideal",
                self.ctx.name(i)
            )));
        }
        Ok(MonomialPrime {
            ctx: Arc::clone(&self.ctx),
            vars: self.vars.iter().copied().filter(|&v| v != i).collect(),
        })
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self.vars.iter().map(|&v| self.ctx.var(v)).collect();
        MonomialIdeal::from_raw(&self.ctx, gens)
    }

    pub fn var_names(&self) -> Vec<String> {
        self.vars
            .iter()
            .map(|&v| self.ctx.name(v).to_string())
            .collect()
    }
}

/// Size first, then variable indices.
impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.var_names().join(","))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialPrime{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_monomial};

    fn ring(names: &[&str]) -> Arc<RingContext> {
        RingContext::new(names).unwrap().into_shared()
    }

    fn id(r: &Arc<RingContext>, s: &str) -> MonomialIdeal {
        parse_ideal(r, s).unwrap()
    }

    fn mono(r: &Arc<RingContext>, s: &str) -> Monomial {
        parse_monomial(r, s).unwrap()
    }

    #[test]
    fn minimal_generators() {
        let r = ring(&["x", "y"]);
        assert_eq!(id(&r, "(x^2, x^2*y, y^3)").to_string(), "(x^2, y^3)");
        assert!(id(&r, "(1, x)").is_unit());
        let z = MonomialIdeal::from_generators(&r, vec![]).unwrap();
        assert!(z.is_zero());
        assert_eq!(
            MonomialIdeal::from_generators(&r, vec![Monomial::one(3)]),
            Err(Error::ContextMismatch)
        );
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y", "z"]);
        let i = id(&r, "(x^2, y*z)");
        assert!(i.contains(&mono(&r, "x^3*y")));
        assert!(!i.contains(&mono(&r, "x*y")));
        let zero = MonomialIdeal::zero(&r);
        assert!(!zero.contains(&r.one()));
        assert!(zero.is_subset_of(&i));
    }

    #[test]
    fn sums_products_powers() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(
            id(&r, "(x,y)").power(2).unwrap().to_string(),
            "(x^2, x*y, y^2)"
        );
        assert_eq!(
            id(&r, "(x^2)").sum(&id(&r, "(y)")).unwrap().to_string(),
            "(y, x^2)"
        );
        assert!(id(&r, "(x)").power(0).is_err());
        let unit = MonomialIdeal::unit(&r);
        let i = id(&r, "(x*y, z^2)");
        assert_eq!(unit.product(&i).unwrap(), i);
        assert_eq!(MonomialIdeal::zero(&r).sum(&i).unwrap(), i);
    }

    #[test]
    fn generator_cap_is_enforced() {
        let limits = crate::ring::Limits {
            max_generators: 4,
            ..Default::default()
        };
        let r = RingContext::new(&["x", "y", "z"])
            .unwrap()
            .with_limits(limits)
            .into_shared();
        let i = parse_ideal(&r, "(x, y, z)").unwrap();
        assert!(matches!(
            i.power(2),
            Err(Error::CapExceeded {
                cap: "generators",
                ..
            })
        ));
    }

    #[test]
    fn colons() {
        let r = ring(&["x", "y", "z"]);
        let i = id(&r, "(x^2, x*y)");
        assert_eq!(i.colon_monomial(&mono(&r, "x")), id(&r, "(x, y)"));
        assert_eq!(i.colon_monomial(&r.one()), i);
        assert_eq!(i.colon_ideal(&id(&r, "(x, y)")).unwrap(), id(&r, "(x)"));
        assert_eq!(i.colon_ideal(&MonomialIdeal::unit(&r)).unwrap(), i);
        assert_eq!(
            id(&r, "(x*y)").colon_ideal(&id(&r, "(x)")).unwrap(),
            id(&r, "(y)")
        );
        assert_eq!(
            i.colon_ideal(&MonomialIdeal::zero(&r)),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn example_ideal_colon_by_known_corner_is_maximal() {
        let r = ring(&["x", "y", "z"]);
        let i3 = id(&r, "(x^3, x*y*z, y^2*z)").power(3).unwrap();
        let u = mono(&r, "x^3*y^3*z^2");
        assert_eq!(i3.colon_monomial(&u), MonomialIdeal::maximal(&r));
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(
            MonomialIdeal::intersect(&[id(&r, "(x)"), id(&r, "(y)")]).unwrap(),
            id(&r, "(x*y)")
        );
        let got =
            MonomialIdeal::intersect(&[id(&r, "(x, y^2)"), id(&r, "(x^3, y)"), id(&r, "(x^3, z)")])
                .unwrap();
        assert_eq!(got, id(&r, "(x^3, x*y*z, y^2*z)"));
        assert!(MonomialIdeal::intersect(&[]).is_err());
    }

    #[test]
    fn radicals_and_squarefree() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(id(&r, "(x^2*y^3, z^4)").radical(), id(&r, "(x*y, z)"));
        let sf = id(&r, "(x*y, y*z)");
        assert!(sf.is_squarefree());
        assert_eq!(sf.radical(), sf);
        assert!(!id(&r, "(x^2)").is_squarefree());
    }

    #[test]
    fn deletion() {
        let r = ring(&["x", "y", "z"]);
        let i = id(&r, "(x^3, x*y*z, y^2*z)");
        assert_eq!(i.delete_variable(0), id(&r, "(y^2*z)"));
        let j = id(&r, "(x*y, x^2)");
        assert_eq!(j.delete_variable(2), j);
        assert!(id(&r, "(x*y, y*z)").delete_variable(1).is_zero());
    }

    #[test]
    fn localization() {
        let r = ring(&["x", "y", "z"]);
        let loc = id(&r, "(x^2*y, y*z)").localize_at(&[1, 2]).unwrap();
        assert_eq!(loc.context().names(), ["y", "z"]);
        assert_eq!(loc.to_string(), "(y)");
        let i = id(&r, "(x^2*y, y*z)");
        assert_eq!(i.localize_at(&[0, 1, 2]).unwrap(), i);
        assert!(id(&r, "(x*y, z^2)").localize_at(&[2]).unwrap().is_unit());
        assert!(i.localize_at(&[]).is_err());
    }

    #[test]
    fn support_saturation_primes() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(
            id(&r, "(x^3, x*y*z, y^2*z)").support(),
            BTreeSet::from([0, 1, 2])
        );
        assert_eq!(
            id(&r, "(x^2*y, x*z)").saturate(&mono(&r, "x")),
            id(&r, "(y, z)")
        );
        let m = MonomialPrime::maximal(&r);
        assert_eq!(m.prime_minus(2).unwrap().to_string(), "(x,y)");
        let single = MonomialPrime::new(&r, [1]).unwrap();
        assert!(single.prime_minus(1).is_err());
        assert!(m.prime_minus(1).unwrap().prime_minus(1).is_err());
        assert!(MonomialPrime::new(&r, []).is_err());
    }
}
