//! Seeded generators for random monomial ideals.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, RingContext};

/// Shape of a random ideal: generator count and exponents are drawn
/// uniformly from `1..=max_gens` and `0..=max_exp`.
#[derive(Clone, Copy, Debug)]
pub struct IdealShape {
    pub max_gens: usize,
    pub max_exp: u32,
}

pub struct InstanceRng {
    rng: ChaCha8Rng,
}

const NAMES: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "r"];

impl InstanceRng {
    pub fn new(seed: u64) -> Self {
        InstanceRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Ring on the first `n` of `x, y, z, w, u, v, s, r`.
    pub fn ring(n: usize) -> Arc<RingContext> {
        RingContext::new(&NAMES[..n])
            .expect("fixed names")
            .into_shared()
    }

    /// Monomial in the given variables only, not the identity.
    pub fn monomial_in(&mut self, n: usize, vars: &[usize], max_exp: u32) -> Monomial {
        loop {
            let mut e = vec![0u32; n];
            for &v in vars {
                e[v] = self.rng.gen_range(0..=max_exp);
            }
            if e.iter().any(|&x| x > 0) {
                return Monomial::new(e).expect("small exponents");
            }
        }
    }

    /// Proper nonzero ideal whose generators only involve `vars`.
    pub fn ideal_in(
        &mut self,
        ctx: &Arc<RingContext>,
        vars: &[usize],
        shape: IdealShape,
    ) -> MonomialIdeal {
        let k = self.rng.gen_range(1..=shape.max_gens);
        let gens = (0..k)
            .map(|_| self.monomial_in(ctx.nvars(), vars, shape.max_exp.max(1)))
            .collect();
        MonomialIdeal::from_generators(ctx, gens).expect("same ring")
    }

    pub fn ideal(&mut self, ctx: &Arc<RingContext>, shape: IdealShape) -> MonomialIdeal {
        let vars: Vec<usize> = (0..ctx.nvars()).collect();
        self.ideal_in(ctx, &vars, shape)
    }

    pub fn squarefree_ideal(&mut self, ctx: &Arc<RingContext>, max_gens: usize) -> MonomialIdeal {
        self.ideal(
            ctx,
            IdealShape {
                max_gens,
                max_exp: 1,
            },
        )
    }

    /// Random ideal in which two random columns are made to decrease together
    /// along the generator list. Minimalization may reorder or drop generators,
    /// so callers still filter with the chain test.
    pub fn chain_biased_ideal(
        &mut self,
        ctx: &Arc<RingContext>,
        shape: IdealShape,
    ) -> MonomialIdeal {
        let n = ctx.nvars();
        let k = self.rng.gen_range(1..=shape.max_gens);
        let mut rows: Vec<Vec<u32>> = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| self.rng.gen_range(0..=shape.max_exp))
                    .collect()
            })
            .collect();
        let mut cols: Vec<usize> = (0..n).collect();
        cols.shuffle(&mut self.rng);
        let (a, b) = (cols[0], cols[1.min(n - 1)]);
        let mut ca: Vec<u32> = rows.iter().map(|r| r[a]).collect();
        let mut cb: Vec<u32> = rows.iter().map(|r| r[b]).collect();
        ca.sort_unstable_by(|x, y| y.cmp(x));
        cb.sort_unstable_by(|x, y| y.cmp(x));
        for (r, (va, vb)) in rows.iter_mut().zip(ca.into_iter().zip(cb)) {
            r[a] = va;
            r[b] = vb;
        }
        let gens: Vec<Monomial> = rows
            .into_iter()
            .filter(|r| r.iter().any(|&e| e > 0))
            .map(|r| Monomial::new(r).expect("small exponents"))
            .collect();
        if gens.is_empty() {
            return self.ideal(ctx, shape);
        }
        MonomialIdeal::from_generators(ctx, gens).expect("same ring")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let r = InstanceRng::ring(3);
        let shape = IdealShape {
            max_gens: 5,
            max_exp: 4,
        };
        let a: Vec<MonomialIdeal> = {
            let mut g = InstanceRng::new(7);
            (0..10).map(|_| g.ideal(&r, shape)).collect()
        };
        let b: Vec<MonomialIdeal> = {
            let mut g = InstanceRng::new(7);
            (0..10).map(|_| g.ideal(&r, shape)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|i| i.is_proper_nonzero().is_ok()));
    }

    #[test]
    fn restricted_support() {
        let r = InstanceRng::ring(4);
        let mut g = InstanceRng::new(1);
        for _ in 0..20 {
            let i = g.ideal_in(
                &r,
                &[1, 3],
                IdealShape {
                    max_gens: 3,
                    max_exp: 3,
                },
            );
            assert!(i.support().iter().all(|v| [1, 3].contains(v)));
        }
    }
}
