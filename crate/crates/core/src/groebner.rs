//! Groebner bases of left submodules of free modules over Weyl-type rings.
//!
//! Elements are primitive integer vectors (`Poly<Int>` with positions).
//! Buchberger runs fraction-free with the sugar strategy and the
//! Gebauer-Moeller criteria. Expressions in terms of the input are
//! tracked as extra components placed in a position block that ranks
//! below the value block.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

use log::debug;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::order::Order;
use crate::poly::{mul_mono_terms, Coef, Poly, Rat, Term};
use crate::ring::Mono;
use crate::weyl::Operator;

/// A module element with integer coefficients.
pub type Vector = Poly<Int>;

#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Checked between pairs; when set the computation stops with
    /// `Error::Cancelled`.
    pub cancel: Option<Arc<AtomicBool>>,
    /// Keep elements whose leading term lies in the split block. When false
    /// such elements are set aside (they are the syzygies of the input).
    pub keep_split_leads: bool,
}

struct Elem {
    terms: Vec<Term<Int>>,
    lm: Mono,
    pos: u32,
    mask: u64,
    sugar: u32,
    support: u32,
    redundant: bool,
}

#[derive(Clone, Copy, Debug)]
enum Job {
    Gen(usize),
    Pair(usize, usize),
}

#[derive(Clone, Debug)]
struct Pending {
    sugar: u32,
    deg: u32,
    seq: (u32, u32),
    lcm: Mono,
    job: Job,
}

impl PartialEq for Pending {
    fn eq(&self, o: &Self) -> bool {
        self.key() == o.key()
    }
}
impl Eq for Pending {}
impl PartialOrd for Pending {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Pending {
    fn cmp(&self, o: &Self) -> Ordering {
        self.key().cmp(&o.key())
    }
}
impl Pending {
    fn key(&self) -> (u32, u32, u32, u32) {
        (self.sugar, self.deg, self.seq.0, self.seq.1)
    }
}

/// Counters reported after a run.
#[derive(Clone, Copy, Debug, Default)]
pub struct GbStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub chain_pruned: usize,
    pub product_pruned: usize,
    pub basis_size: usize,
}

struct Engine<'a> {
    ord: &'a Order,
    gens: Vec<Vector>,
    elems: Vec<Elem>,
    by_pos: Vec<Vec<usize>>,
    queue: BTreeSet<Pending>,
    set_aside: Vec<Vector>,
    opts: &'a GbOptions,
    stats: GbStats,
    product_ok: bool,
}

/// Raw output of a completion run.
pub(crate) struct Completion {
    pub basis: Vec<Vector>,
    pub set_aside: Vec<Vector>,
    pub stats: GbStats,
}

/// Run Buchberger's algorithm. The result is a (non-reduced) Groebner
/// basis; elements whose leading term falls into the split block are
/// either kept or set aside according to `opts`.
pub(crate) fn complete(gens: Vec<Vector>, ord: &Order, opts: &GbOptions) -> Result<Completion> {
    let all_zero_pos = gens.iter().all(|g| g.terms().iter().all(|t| t.pos == 0));
    let mut eng = Engine {
        ord,
        gens,
        elems: Vec::new(),
        by_pos: Vec::new(),
        queue: BTreeSet::new(),
        set_aside: Vec::new(),
        opts,
        stats: GbStats::default(),
        product_ok: all_zero_pos && ord.split() == u32::MAX,
    };
    eng.run()?;
    let basis = eng.elems.into_iter().map(|e| Poly { terms: e.terms }).collect();
    Ok(Completion {
        basis,
        set_aside: eng.set_aside,
        stats: eng.stats,
    })
}

impl<'a> Engine<'a> {
    fn run(&mut self) -> Result<()> {
        for (k, g) in self.gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let lead = &g.terms()[0];
            self.queue.insert(Pending {
                sugar: g.degree(),
                deg: lead.m.deg(),
                seq: (0, k as u32),
                lcm: lead.m,
                job: Job::Gen(k),
            });
        }
        let mut steps = 0usize;
        while let Some(p) = self.queue.pop_first() {
            if let Some(c) = &self.opts.cancel {
                if c.load(AtomicOrdering::Relaxed) {
                    return Err(Error::Cancelled);
                }
            }
            steps += 1;
            if steps % 500 == 0 {
                debug!(
                    "groebner: {} steps, {} elements, {} pending, sugar {}",
                    steps,
                    self.elems.len(),
                    self.queue.len(),
                    p.sugar
                );
            }
            let (terms, sugar) = match p.job {
                Job::Gen(k) => (self.gens[k].terms().to_vec(), p.sugar),
                Job::Pair(i, j) => {
                    self.stats.pairs_reduced += 1;
                    self.spoly(i, j)
                }
            };
            let (terms, sugar) = self.head_reduce(terms, sugar);
            if terms.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            let (terms, sugar) = self.tail_reduce(terms, sugar);
            let mut v = Poly { terms };
            v.make_primitive();
            if v.terms[0].pos >= self.ord.split() && !self.opts.keep_split_leads {
                self.set_aside.push(v);
                continue;
            }
            self.insert(v.terms, sugar);
        }
        self.stats.basis_size = self.elems.len();
        Ok(())
    }

    fn spoly(&self, i: usize, j: usize) -> (Vec<Term<Int>>, u32) {
        let (a, b) = (&self.elems[i], &self.elems[j]);
        let l = a.lm.lcm(&b.lm);
        let qa = a.lm.quotient_of(&l);
        let qb = b.lm.quotient_of(&l);
        let (ca, cb) = (&a.terms[0].c, &b.terms[0].c);
        let g = ca.gcd(cb);
        let (fa, fb) = (cb.div_exact(&g), ca.div_exact(&g));
        let x = mul_mono_terms(&fa, &qa, &a.terms, self.ord);
        let y = mul_mono_terms(&fb.neg(), &qb, &b.terms, self.ord);
        let sugar = (qa.deg() + a.sugar).max(qb.deg() + b.sugar);
        (add_skipping_lead(&Int::ONE, &x, &y, self.ord), sugar)
    }

    fn find_reducer(&self, t: &Term<Int>) -> Option<usize> {
        let list = self.by_pos.get(t.pos as usize)?;
        let mask = t.m.divmask();
        let mut best: Option<usize> = None;
        for &k in list {
            let e = &self.elems[k];
            if e.mask & !mask != 0 || !e.lm.divides(&t.m) {
                continue;
            }
            match best {
                Some(b) if self.elems[b].terms.len() <= e.terms.len() => {}
                _ => best = Some(k),
            }
        }
        best
    }

    fn head_reduce(&self, mut terms: Vec<Term<Int>>, mut sugar: u32) -> (Vec<Term<Int>>, u32) {
        let mut steps = 0u32;
        while let Some(t) = terms.first() {
            let Some(k) = self.find_reducer(t) else { break };
            let g = &self.elems[k];
            let q = g.lm.quotient_of(&t.m);
            sugar = sugar.max(q.deg() + g.sugar);
            terms = reduce_lead(terms, g.terms.as_slice(), &q, self.ord);
            steps += 1;
            if steps % 16 == 0 || terms.first().map_or(false, |t| t.c.bits() > 512) {
                strip_content(&mut terms);
            }
        }
        (terms, sugar)
    }

    /// Reduce every non-leading term. Unreduced tails carry content that
    /// compounds through later reductions.
    fn tail_reduce(&self, mut terms: Vec<Term<Int>>, mut sugar: u32) -> (Vec<Term<Int>>, u32) {
        let mut idx = 1;
        let mut steps = 0u32;
        let split = self.ord.split();
        while idx < terms.len() && terms[idx].pos < split {
            let Some(k) = self.find_reducer(&terms[idx]) else {
                idx += 1;
                continue;
            };
            let g = &self.elems[k];
            let q = g.lm.quotient_of(&terms[idx].m);
            sugar = sugar.max(q.deg() + g.sugar);
            terms = reduce_at(terms, idx, g.terms.as_slice(), &q, self.ord).0;
            steps += 1;
            if steps % 16 == 0 {
                strip_content(&mut terms);
            }
        }
        (terms, sugar)
    }

    fn insert(&mut self, terms: Vec<Term<Int>>, sugar: u32) {
        let k = self.elems.len();
        let lead = &terms[0];
        let (lm, pos) = (lead.m, lead.pos);
        let support = terms.iter().fold(0u32, |acc, t| acc | t.m.support_mask());
        let e = Elem {
            mask: lm.divmask(),
            lm,
            pos,
            terms,
            sugar,
            support,
            redundant: false,
        };
        self.elems.push(e);
        if self.by_pos.len() <= pos as usize {
            self.by_pos.resize(pos as usize + 1, Vec::new());
        }

        // chain criterion on pending pairs
        let before = self.queue.len();
        let elems = &self.elems;
        self.queue.retain(|p| match p.job {
            Job::Pair(i, j) => {
                if elems[i].pos != pos || !lm.divides(&p.lcm) {
                    return true;
                }
                let li = elems[i].lm.lcm(&lm);
                let lj = elems[j].lm.lcm(&lm);
                li == p.lcm || lj == p.lcm
            }
            Job::Gen(_) => true,
        });
        self.stats.chain_pruned += before - self.queue.len();

        // new pairs with the Gebauer-Moeller M and F criteria
        let mut cands: Vec<(usize, Mono, bool)> = Vec::new();
        for &i in &self.by_pos[pos as usize] {
            let o = &self.elems[i];
            if o.redundant {
                continue;
            }
            let l = o.lm.lcm(&lm);
            let coprime = self.product_ok && o.lm.gcd_is_one(&lm) && commute(o.support, support, self.ord);
            cands.push((i, l, coprime));
        }
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b && keep[b] && cands[b].1 != cands[a].1 && cands[b].1.divides(&cands[a].1) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // among equal lcms keep one; drop the group if any member is coprime
        let mut seen: Vec<(Mono, bool)> = Vec::new();
        let mut chosen: Vec<(usize, Mono)> = Vec::new();
        for (idx, (i, l, cop)) in cands.iter().enumerate() {
            if !keep[idx] {
                continue;
            }
            if let Some(s) = seen.iter_mut().find(|s| s.0 == *l) {
                s.1 |= *cop;
                continue;
            }
            seen.push((*l, *cop));
            chosen.push((*i, *l));
        }
        for (i, l) in chosen {
            if seen.iter().any(|s| s.0 == l && s.1) {
                self.stats.product_pruned += 1;
                continue;
            }
            let a = &self.elems[i];
            let e = &self.elems[k];
            let sugar = (a.lm.quotient_of(&l).deg() + a.sugar).max(e.lm.quotient_of(&l).deg() + e.sugar);
            self.queue.insert(Pending {
                sugar,
                deg: l.deg(),
                seq: (k as u32, i as u32),
                lcm: l,
                job: Job::Pair(i, k),
            });
        }

        // older elements whose leading term is a multiple of the new one
        // no longer need new pairs
        for &i in &self.by_pos[pos as usize] {
            if lm.divides(&self.elems[i].lm) {
                self.elems[i].redundant = true;
            }
        }
        self.by_pos[pos as usize].push(k);
    }
}

/// Whether two operators with the given slot supports commute.
fn commute(a: u32, b: u32, ord: &Order) -> bool {
    for (v, dv) in ord.ring().pairs() {
        let (bv, bd) = (1u32 << v, 1u32 << dv);
        if (a & bv != 0 && b & bd != 0) || (a & bd != 0 && b & bv != 0) {
            return false;
        }
    }
    true
}

/// `a * x + y`, where the first terms of `x` and `y` are known to cancel.
fn add_skipping_lead(a: &Int, x: &[Term<Int>], y: &[Term<Int>], ord: &Order) -> Vec<Term<Int>> {
    let x = x.get(1..).unwrap_or(&[]);
    let y = y.get(1..).unwrap_or(&[]);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let scale = |c: &Int| if a.is_one() { c.clone() } else { c.mul(a) };
    while i < x.len() && j < y.len() {
        match ord.cmp_term(&x[i].m, x[i].pos, &y[j].m, y[j].pos) {
            Ordering::Greater => {
                out.push(Term { m: x[i].m, pos: x[i].pos, c: scale(&x[i].c) });
                i += 1;
            }
            Ordering::Less => {
                out.push(y[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = if a.is_one() { x[i].c.add(&y[j].c) } else { x[i].c.mul(a).add(&y[j].c) };
                if !c.is_zero() {
                    out.push(Term { m: x[i].m, pos: x[i].pos, c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(x[i..].iter().map(|t| Term { m: t.m, pos: t.pos, c: scale(&t.c) }));
    out.extend_from_slice(&y[j..]);
    out
}

/// Cancel the first term of `h` against `q * g` (whose leading monomial
/// is `q * lm(g)`), fraction-free. Returns the new term list; `h` is
/// scaled by a positive factor in the process.
fn reduce_lead(h: Vec<Term<Int>>, g: &[Term<Int>], q: &Mono, ord: &Order) -> Vec<Term<Int>> {
    reduce_at(h, 0, g, q, ord).0
}

/// Cancel term `idx` of `h` against `q * g`. Returns the new list and the
/// factor `h` was multiplied by.
fn reduce_at(h: Vec<Term<Int>>, idx: usize, g: &[Term<Int>], q: &Mono, ord: &Order) -> (Vec<Term<Int>>, Int) {
    let ch = &h[idx].c;
    let cg = &g[0].c;
    let gg = ch.gcd(cg);
    let mut a = cg.div_exact(&gg);
    let mut b = ch.div_exact(&gg);
    if a.is_negative() {
        a = a.neg();
        b = b.neg();
    }
    let qg = mul_mono_terms(&b.neg(), q, g, ord);
    if idx == 0 {
        return (add_skipping_lead(&a, &h, &qg, ord), a);
    }
    // terms before idx are kept (scaled), the rest merged
    let mut out: Vec<Term<Int>> = h[..idx]
        .iter()
        .map(|t| Term { m: t.m, pos: t.pos, c: if a.is_one() { t.c.clone() } else { t.c.mul(&a) } })
        .collect();
    out.extend(add_skipping_lead(&a, &h[idx..], &qg, ord));
    (out, a)
}

fn strip_content(terms: &mut [Term<Int>]) {
    let mut g = Int::ZERO;
    for t in terms.iter() {
        g = g.gcd(&t.c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for t in terms.iter_mut() {
        t.c = t.c.div_exact(&g);
    }
}

/// A set of reducers with a position index, used for normal forms.
pub(crate) struct Reducers<'a> {
    elems: &'a [Vector],
    masks: Vec<u64>,
    by_pos: Vec<Vec<usize>>,
}

impl<'a> Reducers<'a> {
    pub(crate) fn new(elems: &'a [Vector]) -> Reducers<'a> {
        let mut by_pos: Vec<Vec<usize>> = Vec::new();
        let mut masks = Vec::with_capacity(elems.len());
        for (k, e) in elems.iter().enumerate() {
            let Some(l) = e.lead() else {
                masks.push(0);
                continue;
            };
            masks.push(l.m.divmask());
            if by_pos.len() <= l.pos as usize {
                by_pos.resize(l.pos as usize + 1, Vec::new());
            }
            by_pos[l.pos as usize].push(k);
        }
        Reducers { elems, masks, by_pos }
    }

    fn find(&self, t: &Term<Int>, skip: Option<usize>) -> Option<usize> {
        let list = self.by_pos.get(t.pos as usize)?;
        let mask = t.m.divmask();
        let mut best: Option<usize> = None;
        for &k in list {
            if Some(k) == skip || self.masks[k] & !mask != 0 {
                continue;
            }
            let e = &self.elems[k];
            if !e.terms[0].m.divides(&t.m) {
                continue;
            }
            match best {
                Some(b) if self.elems[b].len() <= e.len() => {}
                _ => best = Some(k),
            }
        }
        best
    }

    /// Full normal form up to a positive integer factor, made primitive.
    pub(crate) fn normal_form(&self, h: &Vector, ord: &Order, skip: Option<usize>) -> Vector {
        let mut terms = h.terms().to_vec();
        let mut idx = 0;
        let mut steps = 0u32;
        while idx < terms.len() {
            let t = &terms[idx];
            match self.find(t, skip) {
                Some(k) => {
                    let g = &self.elems[k];
                    let q = g.terms[0].m.quotient_of(&t.m);
                    terms = reduce_at(terms, idx, g.terms(), &q, ord).0;
                    steps += 1;
                    if steps % 16 == 0 {
                        strip_content(&mut terms);
                    }
                }
                None => idx += 1,
            }
        }
        let mut out = Poly { terms };
        out.make_primitive();
        out
    }

    pub(crate) fn reduces_to_zero(&self, h: &Vector, ord: &Order) -> bool {
        let mut terms = h.terms().to_vec();
        while let Some(t) = terms.first() {
            let Some(k) = self.find(t, None) else { return false };
            let g = &self.elems[k];
            let q = g.terms[0].m.quotient_of(&t.m);
            terms = reduce_lead(terms, g.terms(), &q, ord);
            strip_content(&mut terms);
        }
        true
    }
}

/// Minimal, inter-reduced, primitive basis sorted by increasing leading term.
pub(crate) fn interreduce(mut elems: Vec<Vector>, ord: &Order) -> Vec<Vector> {
    elems.retain(|e| !e.is_zero());
    elems.sort_by(|a, b| {
        let (x, y) = (&a.terms()[0], &b.terms()[0]);
        ord.cmp_term(&x.m, x.pos, &y.m, y.pos).then(a.len().cmp(&b.len()))
    });
    let mut minimal: Vec<Vector> = Vec::new();
    for e in elems {
        let l = &e.terms()[0];
        let dup = minimal.iter().any(|m| {
            let ml = &m.terms()[0];
            ml.pos == l.pos && ml.m.divides(&l.m)
        });
        if !dup {
            minimal.push(e);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let r = Reducers::new(&minimal);
        out.push(r.normal_form(&minimal[k], ord, Some(k)));
    }
    out
}

/// A reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ord: Order,
    elems: Vec<Vector>,
    history: Option<Vec<Vector>>,
    syzygies: Option<Vec<Vector>>,
    ninputs: usize,
    stats: GbStats,
}

impl GroebnerBasis {
    /// Reduced Groebner basis of the module generated by `gens`.
    pub fn compute(gens: &[Vector], ord: &Order) -> Result<GroebnerBasis> {
        Self::compute_with(gens, ord, &GbOptions::default())
    }

    pub fn compute_with(gens: &[Vector], ord: &Order, opts: &GbOptions) -> Result<GroebnerBasis> {
        let ord = ord.unsplit();
        let opts = GbOptions {
            keep_split_leads: true,
            ..opts.clone()
        };
        let c = complete(gens.to_vec(), &ord, &opts)?;
        Ok(GroebnerBasis {
            elems: interreduce(c.basis, &ord),
            ord,
            history: None,
            syzygies: None,
            ninputs: gens.len(),
            stats: c.stats,
        })
    }

    /// Groebner basis together with, for every element, its expression in
    /// terms of the inputs, and generators of the syzygies of the inputs.
    pub fn compute_tracked(gens: &[Vector], ord: &Order, opts: &GbOptions) -> Result<GroebnerBasis> {
        let ord = ord.unsplit();
        let rank = gens
            .iter()
            .flat_map(|g| g.terms().iter().map(|t| t.pos + 1))
            .max()
            .unwrap_or(0);
        let split_ord = ord.with_split(rank);
        let ext: Vec<Vector> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut terms = g.terms().to_vec();
                terms.push(Term { m: Mono::ONE, pos: rank + i as u32, c: Int::ONE });
                Poly::from_terms(terms, &split_ord)
            })
            .collect();
        let opts = GbOptions {
            keep_split_leads: false,
            ..opts.clone()
        };
        let c = complete(ext, &split_ord, &opts)?;
        let reduced = interreduce(c.basis, &split_ord);
        let mut elems = Vec::with_capacity(reduced.len());
        let mut history = Vec::with_capacity(reduced.len());
        for e in reduced {
            let (v, h) = split_vector(&e, rank, &ord);
            elems.push(v);
            history.push(h);
        }
        let syzygies = c
            .set_aside
            .iter()
            .map(|s| split_vector(s, rank, &ord).1)
            .collect();
        Ok(GroebnerBasis {
            ord,
            elems,
            history: Some(history),
            syzygies: Some(syzygies),
            ninputs: gens.len(),
            stats: c.stats,
        })
    }

    pub fn order(&self) -> &Order {
        &self.ord
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    pub fn inputs(&self) -> usize {
        self.ninputs
    }

    /// Expressions `elements()[k] = sum_i history()[k]_i * input_i`.
    pub fn history(&self) -> Option<&[Vector]> {
        self.history.as_deref()
    }

    /// Syzygies of the inputs collected during a tracked computation.
    pub fn input_syzygies(&self) -> Option<&[Vector]> {
        self.syzygies.as_deref()
    }

    pub fn is_member(&self, h: &Vector) -> bool {
        Reducers::new(&self.elems).reduces_to_zero(h, &self.ord)
    }

    /// Canonical representative of `h` modulo the module (primitive, up
    /// to a nonzero rational factor).
    pub fn normal_form(&self, h: &Vector) -> Vector {
        Reducers::new(&self.elems).normal_form(h, &self.ord, None)
    }

    /// Whether the module contains the unit vector at `pos`.
    pub fn contains_unit(&self, pos: u32) -> bool {
        self.elems
            .iter()
            .any(|e| e.terms()[0].pos == pos && e.terms()[0].m.is_one())
    }
}

/// Separate the value block from the tracked block (shifted to 0).
fn split_vector(v: &Vector, rank: u32, ord: &Order) -> (Vector, Vector) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for t in v.terms() {
        if t.pos < rank {
            a.push(t.clone());
        } else {
            b.push(Term { m: t.m, pos: t.pos - rank, c: t.c.clone() });
        }
    }
    (Poly::from_terms(a, ord), Poly::from_terms(b, ord))
}

/// Division with remainder: `h = sum_i a_i g_i + r`.
#[derive(Clone, Debug)]
pub struct StandardExpression {
    pub quotients: Vec<Poly<Rat>>,
    pub remainder: Poly<Rat>,
}

/// Head reduction of `h` by `gs`, always dividing by the smallest index
/// whose leading term divides.
pub fn remainder(h: &Poly<Rat>, gs: &[Poly<Rat>], ord: &Order) -> StandardExpression {
    let mut quotients = vec![Poly::<Rat>::zero(); gs.len()];
    let mut r = h.clone();
    'outer: while let Some(t) = r.lead().cloned() {
        for (i, g) in gs.iter().enumerate() {
            let Some(gl) = g.lead() else { continue };
            if gl.pos != t.pos || !gl.m.divides(&t.m) {
                continue;
            }
            let q = gl.m.quotient_of(&t.m);
            let c = <Rat as Coef>::mul(&t.c, &gl.c.recip());
            r = r.sub(&g.mul_term_left(&c, &q, ord), ord);
            quotients[i] = quotients[i].add(&Poly::monomial(c, q, 0), ord);
            continue 'outer;
        }
        break;
    }
    StandardExpression { quotients, remainder: r }
}

/// The Schreyer pair of `gi` and `gj`: `(s_ij, sigma_ij)` with
/// `sigma_ij = c_j m_ji e_i - c_i m_ij e_j`, or zero when the leading
/// terms sit at different positions.
pub fn schreyer_pair(gi: &Vector, gj: &Vector, ord: &Order) -> (Vector, Vector) {
    let (Some(a), Some(b)) = (gi.lead(), gj.lead()) else {
        return (Poly::zero(), Poly::zero());
    };
    if a.pos != b.pos {
        return (Poly::zero(), Poly::zero());
    }
    let l = a.m.lcm(&b.m);
    let (mji, mij) = (a.m.quotient_of(&l), b.m.quotient_of(&l));
    let g = a.c.gcd(&b.c);
    let (fi, fj) = (b.c.div_exact(&g), a.c.div_exact(&g).neg());
    let s = Poly::from_terms(
        [mul_mono_terms(&fi, &mji, gi.terms(), ord), mul_mono_terms(&fj, &mij, gj.terms(), ord)].concat(),
        ord,
    );
    let sigma = Poly::from_terms(
        vec![Term { m: mji, pos: 0, c: fi }, Term { m: mij, pos: 1, c: fj }],
        ord,
    );
    (s, sigma)
}

/// Reduced Groebner basis of a list of operators (a left ideal).
pub fn ideal_basis(gens: &[Operator], ord: &Order) -> Result<GroebnerBasis> {
    let vs: Vec<Vector> = gens
        .iter()
        .map(|g| g.to_primitive_int(ord))
        .collect::<Vec<_>>();
    if let Some(g) = gens.iter().find(|g| g.ring() != ord.ring()) {
        return Err(Error::usage(format!("operator in ring {:?} used with order on {:?}", g.ring(), ord.ring())));
    }
    GroebnerBasis::compute(&vs, ord)
}

/// Generators of the syzygies of `gens` in `A^s`, one entry per input.
pub fn syzygies(gens: &[Vector], ord: &Order) -> Result<Vec<Vector>> {
    let gb = GroebnerBasis::compute_tracked(gens, ord, &GbOptions::default())?;
    Ok(gb.syzygies.unwrap_or_default())
}

/// Evaluate `sum_k v_k * gens_k`.
pub fn combine(v: &Vector, gens: &[Vector], ord: &Order) -> Vector {
    let mut acc: Vec<Term<Int>> = Vec::new();
    for t in v.terms() {
        acc.extend(mul_mono_terms(&t.c, &t.m, gens[t.pos as usize].terms(), ord));
    }
    Poly::from_terms(acc, ord)
}
