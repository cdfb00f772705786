//! Associated primes of `R/I` for monomial ideals.
//!
//! Membership of the maximal ideal is decided by the socle test
//! `(I : m) ≠ I`. Other primes reduce to that test after localizing: for a
//! monomial prime `p`, `p ∈ Ass(R/I)` iff the maximal ideal of the sub-ring
//! on `p`'s variables is associated to `I` with the other variables set to 1.
//! An independent second route lives in [`crate::decompose`].

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::ring::{Monomial, RingContext};

/// A set of monomial primes, ordered by size then variable indices.
#[derive(Clone, PartialEq, Eq)]
pub struct AssSet {
    ctx: Arc<RingContext>,
    primes: BTreeSet<MonomialPrime>,
}

impl AssSet {
    pub fn empty(ctx: &Arc<RingContext>) -> Self {
        AssSet {
            ctx: Arc::clone(ctx),
            primes: BTreeSet::new(),
        }
    }

    pub fn from_primes(
        ctx: &Arc<RingContext>,
        primes: impl IntoIterator<Item = MonomialPrime>,
    ) -> Self {
        AssSet {
            ctx: Arc::clone(ctx),
            primes: primes.into_iter().collect(),
        }
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn contains(&self, p: &MonomialPrime) -> bool {
        self.primes.contains(p)
    }

    pub fn contains_maximal(&self) -> bool {
        self.primes.iter().any(MonomialPrime::is_maximal)
    }

    pub fn iter(&self) -> impl Iterator<Item = &MonomialPrime> {
        self.primes.iter()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn is_subset(&self, other: &AssSet) -> bool {
        self.primes.is_subset(&other.primes)
    }

    pub fn union(&self, other: &AssSet) -> AssSet {
        AssSet {
            ctx: Arc::clone(&self.ctx),
            primes: self.primes.union(&other.primes).cloned().collect(),
        }
    }

    /// Union of the variable sets of all primes.
    pub fn support(&self) -> BTreeSet<usize> {
        self.primes
            .iter()
            .flat_map(|p| p.vars().iter().copied())
            .collect()
    }

    /// Sorted list of sorted variable-name lists.
    pub fn to_name_lists(&self) -> Vec<Vec<String>> {
        self.primes.iter().map(MonomialPrime::var_names).collect()
    }
}

impl Serialize for AssSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.primes.len()))?;
        for p in &self.primes {
            seq.serialize_element(&p.var_names())?;
        }
        seq.end()
    }
}

impl fmt::Display for AssSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.primes.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for AssSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssSet{self}")
    }
}

/// A monomial `f ∉ I` with `x_i f ∈ I` for every variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CornerWitness {
    monomial: Monomial,
}

/// Checks the corner definition literally.
pub fn is_corner(ideal: &MonomialIdeal, f: &Monomial) -> bool {
    let n = ideal.context().nvars();
    if f.nvars() != n || ideal.contains(f) {
        return false;
    }
    (0..n).all(|i| {
        let xf = f.multiply(&ideal.context().var(i));
        matches!(xf, Ok(ref m) if ideal.contains(m))
    })
}

impl CornerWitness {
    pub fn new(ideal: &MonomialIdeal, f: Monomial) -> Result<Self> {
        if is_corner(ideal, &f) {
            Ok(CornerWitness { monomial: f })
        } else {
            Err(Error::InvalidArgument(format!(
                "{} is not a corner element of {ideal}",
                f.display(ideal.context())
            )))
        }
    }

    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    pub fn into_monomial(self) -> Monomial {
        self.monomial
    }
}

/// `(I : m) = ⋂_i (I : x_i)`; `m ∈ Ass(R/I)` iff the result differs from `I`.
pub fn socle_colon(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.is_proper_nonzero()?;
    let ctx = ideal.context();
    let parts: Vec<MonomialIdeal> = (0..ctx.nvars())
        .map(|i| ideal.colon_monomial(&ctx.var(i)))
        .collect();
    MonomialIdeal::intersect(&parts)
}

pub fn has_maximal_associated(ideal: &MonomialIdeal) -> Result<bool> {
    // Without full support no corner can exist.
    if ideal.is_proper_nonzero().is_ok() && ideal.support().len() < ideal.context().nvars() {
        return Ok(false);
    }
    Ok(socle_colon(ideal)? != *ideal)
}

/// Minimal generators of `(I : m)` that lie outside `I`.
pub fn corner_elements(ideal: &MonomialIdeal) -> Result<Vec<CornerWitness>> {
    let socle = socle_colon(ideal)?;
    Ok(socle
        .generators()
        .iter()
        .filter(|g| !ideal.contains(g))
        .map(|g| CornerWitness {
            monomial: g.clone(),
        })
        .collect())
}

/// Every corner element, by scanning all monomials whose exponents stay
/// below the generator lcm. Independent of the colon machinery.
pub fn corner_elements_exhaustive(ideal: &MonomialIdeal) -> Result<Vec<CornerWitness>> {
    ideal.is_proper_nonzero()?;
    let ctx = ideal.context();
    let bound = ideal.generator_lcm();
    if bound.exponents().contains(&0) {
        return Ok(Vec::new());
    }
    let limit = ctx.limits().max_corner_search;
    let mut points: u64 = 1;
    for &e in bound.exponents() {
        points = points.saturating_mul(u64::from(e));
    }
    if points > limit {
        return Err(Error::CapExceeded {
            cap: "corner-search",
            needed: points,
            limit,
        });
    }
    let n = ctx.nvars();
    let mut cur = vec![0u32; n];
    let mut out = Vec::new();
    loop {
        let f = Monomial::from_vec_unchecked(cur.clone());
        if is_corner(ideal, &f) {
            out.push(CornerWitness { monomial: f });
        }
        // odometer over 0..bound_i
        let mut k = 0;
        loop {
            if k == n {
                out.sort_by(|a, b| a.monomial.cmp(&b.monomial));
                return Ok(out);
            }
            cur[k] += 1;
            if cur[k] < bound.exponent(k) {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// `p ∈ Ass(R/I)` via localization at `p` and the socle test.
///
/// The unit ideal has no associated primes, so it yields `false`.
pub fn is_associated(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Ok(false);
    }
    if **p.context() != **ideal.context() {
        return Err(Error::ContextMismatch);
    }
    let supp = ideal.support();
    if !p.vars().iter().all(|v| supp.contains(v)) {
        return Ok(false);
    }
    let local = ideal.localize_at(p.vars())?;
    if local.is_unit() {
        return Ok(false);
    }
    has_maximal_associated(&local)
}

fn subsets_by_size(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity((1usize << items.len()).saturating_sub(1));
    for size in 1..=items.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| items[i]).collect());
            let mut k = size;
            let advanced = loop {
                if k == 0 {
                    break false;
                }
                k -= 1;
                if idx[k] < items.len() - size + k {
                    idx[k] += 1;
                    for j in k + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }
    }
    out
}

/// `Ass(R/I)` by testing every nonempty subset of `supp(I)`, smallest first.
pub fn ass_primes(ideal: &MonomialIdeal) -> Result<AssSet> {
    ideal.is_proper_nonzero()?;
    let ctx = ideal.context();
    let supp: Vec<usize> = ideal.support().into_iter().collect();
    let limit = ctx.limits().max_subset_vars;
    if supp.len() > limit {
        return Err(Error::CapExceeded {
            cap: "subsets",
            needed: supp.len() as u64,
            limit: limit as u64,
        });
    }
    let candidates = subsets_by_size(&supp);
    let verdicts: Vec<Result<Option<MonomialPrime>>> = candidates
        .into_par_iter()
        .map(|vars| {
            let p = MonomialPrime::new(ctx, vars)?;
            Ok(is_associated(ideal, &p)?.then_some(p))
        })
        .collect();
    let mut primes = Vec::new();
    for v in verdicts {
        if let Some(p) = v? {
            primes.push(p);
        }
    }
    Ok(AssSet::from_primes(ctx, primes))
}

/// `Ass(R/I)` extended to the degenerate ideals: empty for the unit ideal
/// and for the zero ideal (whose only associated prime, `(0)`, is not a
/// monomial prime on a nonempty variable set).
pub fn ass_primes_or_empty(ideal: &MonomialIdeal) -> Result<AssSet> {
    if ideal.is_zero() || ideal.is_unit() {
        Ok(AssSet::empty(ideal.context()))
    } else {
        ass_primes(ideal)
    }
}

/// `Ass(R/I^s)` for `s = 1..=s_max`.
#[derive(Clone, Debug)]
pub struct AssSequence {
    pub sets: Vec<AssSet>,
    /// First power from which every computed set repeats. Empirical only:
    /// nothing guarantees the pattern persists past `s_max`.
    pub observed_stable_from: usize,
}

impl AssSequence {
    /// Powers (1-based) whose Ass set contains the maximal ideal.
    pub fn maximal_powers(&self) -> Vec<usize> {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, a)| a.contains_maximal())
            .map(|(k, _)| k + 1)
            .collect()
    }
}

pub fn ass_sequence(ideal: &MonomialIdeal, s_max: u32) -> Result<AssSequence> {
    ideal.is_proper_nonzero()?;
    if s_max == 0 {
        return Err(Error::InvalidArgument("s_max must be positive".into()));
    }
    let mut sets = Vec::with_capacity(s_max as usize);
    let mut power = ideal.clone();
    for s in 1..=s_max {
        if s > 1 {
            power = power.product(ideal)?;
        }
        sets.push(ass_primes(&power)?);
    }
    let last = sets.last().expect("s_max >= 1");
    let mut from = sets.len();
    while from > 1 && sets[from - 2] == *last {
        from -= 1;
    }
    Ok(AssSequence {
        sets,
        observed_stable_from: from,
    })
}
