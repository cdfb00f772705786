//! The ambient polynomial ring and exact monomial arithmetic.
//!
//! A [`RingContext`] is only an ordered list of variable names; coefficients
//! never matter for monomial ideals. A [`Monomial`] is an exponent vector
//! whose positions follow that order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest exponent a single coordinate may hold.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

/// Resource caps shared by every computation over a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Candidate generators allowed in one product, intersection or colon step.
    pub max_generators: usize,
    /// Largest support size for which `ass_primes` enumerates subsets.
    pub max_subset_vars: usize,
    /// Points the exhaustive corner search may visit.
    pub max_corner_search: u64,
    /// Splitting nodes one irreducible decomposition may expand.
    pub max_decomposition_nodes: usize,
    /// Entries kept by the decomposition memo before eviction.
    pub cache_capacity: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_generators: 200_000,
            max_subset_vars: 22,
            max_corner_search: 5_000_000,
            max_decomposition_nodes: 2_000_000,
            cache_capacity: 4096,
        }
    }
}

/// `K[x_1, ..., x_n]` described by its variable names.
///
/// Equality compares the variable list only; limits are session
/// configuration and do not change which ring a value lives in.
#[derive(Debug, Clone)]
pub struct RingContext {
    vars: Vec<String>,
    limits: Limits,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for RingContext {}

impl std::hash::Hash for RingContext {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vars.hash(state);
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "at least one variable is required".into(),
            ));
        }
        let mut vars = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(Error::InvalidRing(format!("bad variable name `{name}`")));
            }
            if vars.iter().any(|v: &String| v == name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
            vars.push(name.to_string());
        }
        Ok(RingContext {
            vars,
            limits: Limits::default(),
        })
    }

    /// Ring with variables `prefix1, ..., prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn names(&self) -> &[String] {
        &self.vars
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Sub-ring on the given (sorted, distinct) variable indices, same limits.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let names: Vec<&str> = indices.iter().map(|&i| self.vars[i].as_str()).collect();
        Ok(Self::new(&names)?.with_limits(self.limits))
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::pure_power(self.nvars(), i, 1)
    }

    /// Builds a monomial from `(variable name, exponent)` pairs.
    pub fn monomial(&self, factors: &[(&str, u32)]) -> Result<Monomial> {
        let mut exps = vec![0u32; self.nvars()];
        for &(name, e) in factors {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{name}`")))?;
            exps[i] = exps[i]
                .checked_add(e)
                .filter(|&v| v <= MAX_EXPONENT)
                .ok_or(Error::Overflow {
                    limit: MAX_EXPONENT,
                })?;
        }
        Monomial::new(exps)
    }

    pub fn check(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {}", self.vars.join(","))
    }
}

/// Exponent vector of a monomial. Immutable; equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::Overflow {
                limit: MAX_EXPONENT,
            });
        }
        Ok(Monomial {
            exps: exps.into_boxed_slice(),
        })
    }

    pub(crate) fn from_vec_unchecked(exps: Vec<u32>) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_vec_unchecked(vec![0; n])
    }

    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e.min(MAX_EXPONENT);
        Self::from_vec_unchecked(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn same_shape(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// `self | other`, i.e. every exponent of `self` is at most the one in `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial::from_vec_unchecked(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.same_shape(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        self.same_shape(other)?;
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(other.exps.iter()) {
            let s = a
                .checked_add(b)
                .filter(|&s| s <= MAX_EXPONENT)
                .ok_or(Error::Overflow {
                    limit: MAX_EXPONENT,
                })?;
            exps.push(s);
        }
        Ok(Monomial::from_vec_unchecked(exps))
    }

    /// `self^k` with overflow checking.
    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &a in self.exps.iter() {
            let p = a
                .checked_mul(k)
                .filter(|&p| p <= MAX_EXPONENT)
                .ok_or(Error::Overflow {
                    limit: MAX_EXPONENT,
                })?;
            exps.push(p);
        }
        Ok(Monomial::from_vec_unchecked(exps))
    }

    /// Generator of `(self R : f)`, componentwise `max(a_i - f_i, 0)`.
    pub fn colon_quotient(&self, f: &Monomial) -> Result<Monomial> {
        self.same_shape(f)?;
        Ok(self.colon_unchecked(f))
    }

    #[inline]
    pub(crate) fn colon_unchecked(&self, f: &Monomial) -> Monomial {
        self.zip_with(f, u32::saturating_sub)
    }

    /// `self / f`, defined only when `f | self`.
    pub fn divide(&self, f: &Monomial) -> Result<Monomial> {
        if !f.divides(self)? {
            return Err(Error::InvalidArgument("monomial does not divide".into()));
        }
        Ok(self.colon_unchecked(f))
    }

    /// Indices of variables that divide this monomial; empty for 1.
    pub fn support(&self) -> BTreeSet<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial::from_vec_unchecked(self.exps.iter().map(|&e| e.min(1)).collect())
    }

    /// Pure power of one variable (identity excluded).
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() == 1
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ctx }
    }

    pub fn to_text(&self, ctx: &RingContext) -> String {
        self.display(ctx).to_string()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", &self.exps[..])
    }
}

/// Canonical order: total degree ascending, then graded-lex with
/// `x_1 > x_2 > ...` (larger leading exponent first).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ctx: &'a RingContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> RingContext {
        RingContext::new(&["x", "y", "z"]).unwrap()
    }

    fn m(ctx: &RingContext, f: &[(&str, u32)]) -> Monomial {
        ctx.monomial(f).unwrap()
    }

    #[test]
    fn ring_names_are_validated() {
        assert!(RingContext::new(&["x", "x"]).is_err());
        assert!(RingContext::new(&["1x"]).is_err());
        assert!(RingContext::new::<&str>(&[]).is_err());
        assert!(RingContext::new(&["a_1", "B2"]).is_ok());
    }

    #[test]
    fn divisibility() {
        let r = xyz();
        let xy = m(&r, &[("x", 1), ("y", 1)]);
        let x2y = m(&r, &[("x", 2), ("y", 1)]);
        let x2 = m(&r, &[("x", 2)]);
        assert!(xy.divides(&x2y).unwrap());
        assert!(!x2.divides(&xy).unwrap());
        assert!(r.one().divides(&x2y).unwrap());
        assert_eq!(xy.divides(&Monomial::one(2)), Err(Error::ContextMismatch));
    }

    #[test]
    fn lcm_gcd_multiply() {
        let r = xyz();
        let a = m(&r, &[("x", 2), ("y", 1)]);
        let b = m(&r, &[("y", 1), ("z", 1)]);
        assert_eq!(a.lcm(&b).unwrap(), m(&r, &[("x", 2), ("y", 1), ("z", 1)]));
        assert_eq!(a.gcd(&b).unwrap(), m(&r, &[("y", 1)]));
        let xy = m(&r, &[("x", 1), ("y", 1)]);
        assert_eq!(
            xy.multiply(&b).unwrap(),
            m(&r, &[("x", 1), ("y", 2), ("z", 1)])
        );
    }

    #[test]
    fn multiply_overflow_is_reported() {
        let a = Monomial::pure_power(1, 0, MAX_EXPONENT);
        let b = Monomial::pure_power(1, 0, 1);
        assert_eq!(
            a.multiply(&b),
            Err(Error::Overflow {
                limit: MAX_EXPONENT
            })
        );
        assert!(Monomial::new(vec![MAX_EXPONENT + 1]).is_err());
    }

    #[test]
    fn colon_quotients() {
        let r = xyz();
        let x3y = m(&r, &[("x", 3), ("y", 1)]);
        let xy2 = m(&r, &[("x", 1), ("y", 2)]);
        assert_eq!(x3y.colon_quotient(&xy2).unwrap(), m(&r, &[("x", 2)]));
        let x = r.var(0);
        assert_eq!(x.colon_quotient(&x).unwrap(), r.one());
        let y2z = m(&r, &[("y", 2), ("z", 1)]);
        assert_eq!(
            y2z.colon_quotient(&r.var(1)).unwrap(),
            m(&r, &[("y", 1), ("z", 1)])
        );
    }

    #[test]
    fn supports() {
        let r = xyz();
        assert_eq!(
            m(&r, &[("x", 2), ("z", 1)]).support(),
            BTreeSet::from([0, 2])
        );
        assert!(r.one().support().is_empty());
        assert_eq!(
            m(&r, &[("x", 1), ("y", 1), ("z", 1)]).support(),
            BTreeSet::from([0, 1, 2])
        );
    }

    #[test]
    fn canonical_order_and_display() {
        let r = xyz();
        let mut v = [
            m(&r, &[("y", 2)]),
            m(&r, &[("x", 1), ("y", 1)]),
            m(&r, &[("x", 2)]),
            r.var(2),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_text(&r)).collect();
        assert_eq!(shown, ["z", "x^2", "x*y", "y^2"]);
        assert_eq!(r.one().to_text(&r), "1");
    }
}
