//! Holonomic localization `R_f (x) A_n/L = A_n / J`, generated by `f^a (x) 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::bfunction::{annihilator_fs, bernstein_from_annihilator, AnnihilatorFs, BernsteinData};
use crate::error::{Error, Result};
use crate::groebner::{GbOptions, GroebnerBasis};
use crate::order::{Order, OrderKind};
use crate::ring::Ring;
use crate::weyl::Operator;

/// Storage for annihilators and Bernstein polynomials keyed by `(f, L)`.
pub trait BernsteinCache: Send + Sync {
    fn load(&self, f: &Operator, l: &[Operator]) -> Option<(Vec<Operator>, BernsteinData)>;
    fn store(&self, f: &Operator, l: &[Operator], ann: &[Operator], b: &BernsteinData);
}

/// Settings shared by the localization and cohomology layers.
#[derive(Clone)]
pub struct Context {
    pub gb: GbOptions,
    /// Order used on `A_n` for presentations.
    pub order: OrderKind,
    pub cache: Option<Arc<dyn BernsteinCache>>,
    /// Localize at products in one step instead of factor by factor.
    pub single_shot: bool,
    /// Upper bound on worker threads for independent nodes (`None`: all).
    pub jobs: Option<usize>,
    memo: Arc<Memo>,
}

#[derive(Default)]
struct Memo {
    bernstein: Mutex<HashMap<String, (Vec<Operator>, BernsteinData)>>,
    ideals: Mutex<HashMap<String, Vec<Operator>>>,
}

fn key_of(f: &Operator, l: &[Operator]) -> String {
    let mut k = format!("{:?}|{}", f.ring(), f);
    for p in l {
        k.push('|');
        k.push_str(&p.to_string());
    }
    k
}

impl Default for Context {
    fn default() -> Self {
        Context {
            gb: GbOptions::default(),
            order: OrderKind::DegRevLex,
            cache: None,
            single_shot: false,
            jobs: None,
            memo: Arc::default(),
        }
    }
}

impl std::fmt::Debug for Context {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Context")
            .field("order", &self.order)
            .field("single_shot", &self.single_shot)
            .field("jobs", &self.jobs)
            .field("cached", &self.cache.is_some())
            .finish()
    }
}

impl Context {
    pub fn order_on(&self, ring: Ring) -> Result<Order> {
        Order::new(ring, self.order.clone())
    }

    /// Annihilator of `f^s (x) 1` and the Bernstein polynomial, through the cache.
    pub fn bernstein_data(&self, f: &Operator, l: &[Operator]) -> Result<(AnnihilatorFs, BernsteinData)> {
        let key = key_of(f, l);
        if let Some((gens, b)) = self.memo.bernstein.lock().unwrap().get(&key).cloned() {
            return Ok((AnnihilatorFs { f: f.clone(), l: l.to_vec(), gens }, b));
        }
        let (ann, b) = self.bernstein_data_uncached(f, l)?;
        self.memo
            .bernstein
            .lock()
            .unwrap()
            .insert(key, (ann.gens.clone(), b.clone()));
        Ok((ann, b))
    }

    fn bernstein_data_uncached(&self, f: &Operator, l: &[Operator]) -> Result<(AnnihilatorFs, BernsteinData)> {
        if let Some(c) = &self.cache {
            if let Some((gens, b)) = c.load(f, l) {
                let ann = AnnihilatorFs { f: f.clone(), l: l.to_vec(), gens };
                return Ok((ann, b));
            }
        }
        let ann = annihilator_fs(f, l, &self.gb)?;
        let b = bernstein_from_annihilator(&ann, &self.gb)?;
        if let Some(c) = &self.cache {
            c.store(f, l, &ann.gens, &b);
        }
        Ok((ann, b))
    }

    /// In-run memo for derived ideals.
    pub fn memo_ideal(&self, key: &str, make: impl FnOnce() -> Result<Vec<Operator>>) -> Result<Vec<Operator>> {
        if let Some(v) = self.memo.ideals.lock().unwrap().get(key).cloned() {
            return Ok(v);
        }
        let v = make()?;
        self.memo.ideals.lock().unwrap().insert(key.to_string(), v.clone());
        Ok(v)
    }

    /// Run `work` over `items` with the configured parallelism, keeping order.
    pub fn par_map<T: Sync, U: Send>(&self, items: &[T], work: impl Fn(&T) -> Result<U> + Sync + Send) -> Result<Vec<U>> {
        use rayon::prelude::*;
        let run = || items.par_iter().map(&work).collect::<Result<Vec<U>>>();
        match self.jobs {
            Some(1) => items.iter().map(&work).collect(),
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::invariant(format!("thread pool: {e}")))?
                .install(run),
            None => run(),
        }
    }
}

/// Reduced Groebner basis of a left ideal, returned as operators.
pub fn reduced_ideal(gens: &[Operator], ord: &Order, opts: &GbOptions) -> Result<Vec<Operator>> {
    let vs: Vec<_> = gens.iter().map(|g| g.to_primitive_int(ord)).collect();
    let gb = GroebnerBasis::compute_with(&vs, ord, opts)?;
    Ok(gb
        .elements()
        .iter()
        .map(|v| Operator::from_int_poly(ord.ring(), v))
        .collect())
}

/// `A_n / j` presents `R_f (x) A_n/L` with generator `prod f_i^{a_i} (x) 1`.
#[derive(Clone, Debug)]
pub struct LocalizationResult {
    /// Reduced Groebner basis of the annihilator.
    pub j: Vec<Operator>,
    /// Exponent of the last (or only) localization stage.
    pub a: i64,
    /// Product of all localized factors.
    pub f: Operator,
    /// `(factor, exponent)` per stage.
    pub chain: Vec<(Operator, i64)>,
    /// Bernstein data per stage.
    pub bernstein: Vec<BernsteinData>,
}

fn default_exponent(b: &BernsteinData) -> i64 {
    b.min_int_root.map_or(0, |r| r.min(0))
}

fn one_stage(f: &Operator, l: &[Operator], a: Option<i64>, ctx: &Context) -> Result<(Vec<Operator>, i64, BernsteinData)> {
    let ord = ctx.order_on(f.ring())?;
    if f.is_constant() {
        if f.is_zero() {
            return Err(Error::usage("cannot localize at 0"));
        }
        let b = BernsteinData { b: vec![crate::poly::Rat::from_integer(1.into())], min_int_root: None, int_roots: vec![] };
        return Ok((reduced_ideal(l, &ord, &ctx.gb)?, a.unwrap_or(0), b));
    }
    let (ann, b) = ctx.bernstein_data(f, l)?;
    let best = default_exponent(&b);
    let a = match a {
        Some(a) if a > best => {
            return Err(Error::usage(format!(
                "exponent {a} exceeds the admissible bound {best} for {f}"
            )))
        }
        Some(a) => a,
        None => best,
    };
    let subst: Vec<Operator> = ann.gens.iter().map(|g| g.substitute_s(a)).collect();
    Ok((reduced_ideal(&subst, &ord, &ctx.gb)?, a, b))
}

/// Localize `A_n / L` at `f`, with `a = min(0, smallest integer root)`.
pub fn localize(f: &Operator, l: &[Operator], ctx: &Context) -> Result<LocalizationResult> {
    let (j, a, b) = one_stage(f, l, None, ctx)?;
    Ok(LocalizationResult { j, a, f: f.clone(), chain: vec![(f.clone(), a)], bernstein: vec![b] })
}

/// Localize at `f` with a prescribed exponent `a`, which must not exceed
/// `min(0, smallest integer root)`.
pub fn localize_at(f: &Operator, l: &[Operator], a: i64, ctx: &Context) -> Result<LocalizationResult> {
    let (j, a, b) = one_stage(f, l, Some(a), ctx)?;
    Ok(LocalizationResult { j, a, f: f.clone(), chain: vec![(f.clone(), a)], bernstein: vec![b] })
}

/// Localize successively at each factor; every stage uses its own exponent.
pub fn localize_iterated(factors: &[Operator], l: &[Operator], ctx: &Context) -> Result<LocalizationResult> {
    let first = factors.first().ok_or_else(|| Error::usage("no factors to localize at"))?;
    let mut cur: Vec<Operator> = l.to_vec();
    let mut prod = Operator::one(first.ring());
    let mut chain = Vec::new();
    let mut bern = Vec::new();
    let mut last = 0;
    for f in factors {
        let (j, a, b) = one_stage(f, &cur, None, ctx)?;
        cur = j;
        prod = prod.multiply(f)?;
        chain.push((f.clone(), a));
        bern.push(b);
        last = a;
    }
    Ok(LocalizationResult { j: cur, a: last, f: prod, chain, bernstein: bern })
}

/// Outcome of localizing along a chain with one shared exponent.
#[derive(Clone, Debug)]
pub enum ChainOutcome {
    /// Annihilator of `(prod f_i)^a`.
    Done(Vec<Operator>),
    /// A stage had an integer root below the exponent; retry with it.
    Lower(i64),
}

/// Localize `A_n / L` successively at `factors`, using the exponent `a` at
/// every stage. The result is the annihilator of `(prod factors)^a (x) 1`.
pub fn localize_chain_uniform(factors: &[Operator], l: &[Operator], a: i64, ctx: &Context) -> Result<ChainOutcome> {
    let mut cur = l.to_vec();
    for f in factors {
        if f.is_constant() {
            continue;
        }
        let (ann, b) = ctx.bernstein_data(f, &cur)?;
        if let Some(r) = b.min_int_root {
            if r < a {
                return Ok(ChainOutcome::Lower(r));
            }
        }
        let ord = ctx.order_on(f.ring())?;
        let subst: Vec<Operator> = ann.gens.iter().map(|g| g.substitute_s(a)).collect();
        cur = reduced_ideal(&subst, &ord, &ctx.gb)?;
    }
    Ok(ChainOutcome::Done(cur))
}

/// Substitute one shared exponent into annihilators `J(F^s)` given with
/// their smallest integer roots.
pub fn uniformize_exponent(nodes: &[(Vec<Operator>, Option<i64>)], a: i64, ctx: &Context) -> Result<Vec<Vec<Operator>>> {
    if a > 0 {
        return Err(Error::usage("the shared exponent must be at most 0"));
    }
    if let Some(r) = nodes.iter().filter_map(|n| n.1).find(|&r| r < a) {
        return Err(Error::usage(format!("exponent {a} exceeds the integer root {r}")));
    }
    ctx.par_map(nodes, |(gens, _)| {
        let Some(first) = gens.first() else { return Ok(Vec::new()) };
        let ring = first.ring().without_s();
        let ord = ctx.order_on(ring)?;
        let subst: Vec<Operator> = gens.iter().map(|g| g.substitute_s(a)).collect();
        reduced_ideal(&subst, &ord, &ctx.gb)
    })
}
