//! Čech complexes of localizations, local cohomology `H^k_I(R)`, the
//! double complex for `H^i_m(H^j_I(R))`, Lyubeznik numbers and the
//! cohomological dimension.
//!
//! Nodes are indexed by a pair of sorted index sets: `xtheta` over the
//! variables and `theta` over the ideal generators. The plain Čech complex
//! only uses `xtheta = {}`. Each node is presented as `A_n / ann` with
//! generator `(X_xtheta * F_theta)^a`, one exponent `a` shared by all nodes
//! of a query, so the differentials are `e_node -> ±g^{-a} e_node'` where `g`
//! is the added factor.

use std::collections::{BTreeMap, HashMap};

use crate::bfunction::{delta, BernsteinData};
use crate::error::{Error, Result};
use crate::groebner::Vector;
use crate::localize::{reduced_ideal, Context};
use crate::module::{intersect, kernel_of_images, place, reduce_mod, subquotient, ModuleMap, Presentation};
use crate::order::Order;
use crate::poly::{Poly, Term};
use crate::int::Int;
use crate::ring::{Mono, Ring};
use crate::weyl::Operator;

/// Nodes whose degree in either direction is one of these.
pub type Bidegree = (usize, usize);

/// One localization `R_{X_xtheta F_theta}` in a Čech complex.
#[derive(Clone, Debug)]
pub struct CechNode {
    /// Indices into the ideal generators (0-based, increasing).
    pub theta: Vec<usize>,
    /// Indices of variables (0-based, increasing).
    pub xtheta: Vec<usize>,
    pub product: Operator,
    /// Reduced Groebner basis of the annihilator of `product^a`.
    pub ann: Vec<Operator>,
    /// Bernstein data of the node (the last stage for iterated localization).
    pub bpoly: Option<BernsteinData>,
    pub min_root: Option<i64>,
}

type Key = (Vec<usize>, Vec<usize>);

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        go(0, m, k, &mut Vec::new(), &mut out);
    }
    out
}

/// A window of a (double) Čech complex sharing one exponent.
#[derive(Clone, Debug)]
pub struct CechComplex {
    fs: Vec<Operator>,
    n: usize,
    ord: Order,
    pub a: i64,
    pub nodes: Vec<CechNode>,
    levels: BTreeMap<Bidegree, Level>,
}

#[derive(Clone, Debug)]
struct Level {
    keys: Vec<Key>,
    pres: Presentation,
}

impl CechComplex {
    /// Build the presentations of the given bidegrees `(i, j)`: nodes with
    /// `|xtheta| = i` and `|theta| = j`. Bidegrees outside the complex are
    /// zero modules.
    pub fn build(fs: &[Operator], levels: &[Bidegree], ctx: &Context) -> Result<CechComplex> {
        let ring = check_generators(fs)?;
        let n = ring.n();
        let ord = ctx.order_on(ring)?;
        let mut keys: Vec<Key> = Vec::new();
        let mut by_level: BTreeMap<Bidegree, Vec<Key>> = BTreeMap::new();
        for &(i, j) in levels {
            let mut lk = Vec::new();
            for xt in subsets(n, i) {
                for th in subsets(fs.len(), j) {
                    lk.push((xt.clone(), th));
                }
            }
            for k in &lk {
                if !keys.contains(k) {
                    keys.push(k.clone());
                }
            }
            by_level.insert((i, j), lk);
        }
        let (nodes, a) = node_ideals(fs, n, &keys, ctx)?;
        let index: HashMap<&Key, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut out = BTreeMap::new();
        for (bd, lk) in by_level {
            let parts: Vec<Presentation> = lk
                .iter()
                .map(|k| Presentation::cyclic(&ord, &nodes[index[k]].ann, &ctx.gb))
                .collect::<Result<_>>()?;
            let pres = if parts.is_empty() {
                Presentation::free(&ord, 0)
            } else {
                Presentation::direct_sum(&parts.iter().collect::<Vec<_>>(), &ctx.gb)?
            };
            out.insert(bd, Level { keys: lk, pres });
        }
        Ok(CechComplex { fs: fs.to_vec(), n, ord, a, nodes, levels: out })
    }

    pub fn order(&self) -> &Order {
        &self.ord
    }

    /// Presentation of `C^{i,j}`, if it was built.
    pub fn level(&self, bd: Bidegree) -> Option<&Presentation> {
        self.levels.get(&bd).map(|l| &l.pres)
    }

    /// Node keys of `C^{i,j}` in position order.
    pub fn level_nodes(&self, bd: Bidegree) -> Vec<(Vec<usize>, Vec<usize>)> {
        match self.levels.get(&bd) {
            Some(l) => l.keys.clone(),
            None => level_keys(self.n, self.fs.len(), bd),
        }
    }

    fn factor(&self, x_side: bool, idx: usize) -> Operator {
        let g = if x_side { Operator::x(Ring::weyl(self.n), idx) } else { self.fs[idx].clone() };
        g.pow((-self.a) as u32)
    }

    /// Images of the generators of `C^{i,j}` under `phi` (adding an ideal
    /// generator) or `xi` (adding a variable), in target coordinates.
    fn images(&self, bd: Bidegree, x_side: bool) -> Vec<Vector> {
        let src = self.level_nodes(bd);
        let tbd = if x_side { (bd.0 + 1, bd.1) } else { (bd.0, bd.1 + 1) };
        let tgt = self.level_nodes(tbd);
        let pos: HashMap<&Key, u32> = tgt.iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
        let m = if x_side { self.n } else { self.fs.len() };
        let mut out = Vec::with_capacity(src.len());
        for (xt, th) in &src {
            let set = if x_side { xt } else { th };
            let mut v = Poly::zero();
            for l in (0..m).filter(|l| !set.contains(l)) {
                let mut grown = set.clone();
                grown.push(l);
                grown.sort_unstable();
                let key = if x_side { (grown, th.clone()) } else { (xt.clone(), grown) };
                let Some(&p) = pos.get(&key) else { continue };
                let below = set.iter().filter(|&&i| i < l).count();
                let mut e = place(&self.factor(x_side, l), p, &self.ord);
                if below % 2 == 1 {
                    e = e.neg();
                }
                v = v.add(&e, &self.ord);
            }
            out.push(v);
        }
        out
    }

    fn map(&self, bd: Bidegree, x_side: bool) -> Result<ModuleMap> {
        let tbd = if x_side { (bd.0 + 1, bd.1) } else { (bd.0, bd.1 + 1) };
        let target = self.levels.get(&tbd).map(|l| l.pres.clone()).unwrap_or_else(|| {
            if level_keys(self.n, self.fs.len(), tbd).is_empty() {
                Presentation::free(&self.ord, 0)
            } else {
                // only used for images into a level that was not built
                Presentation::free(&self.ord, level_keys(self.n, self.fs.len(), tbd).len() as u32)
            }
        });
        let images = self.images(bd, x_side);
        match self.levels.get(&bd) {
            Some(l) => ModuleMap::new(l.pres.clone(), target, images),
            None => ModuleMap::new(Presentation::free(&self.ord, images.len() as u32), target, images),
        }
    }

    /// `phi^{i,j}: C^{i,j} -> C^{i,j+1}`.
    pub fn phi(&self, bd: Bidegree) -> Result<ModuleMap> {
        self.map(bd, false)
    }

    /// `xi^{i,j}: C^{i,j} -> C^{i+1,j}`.
    pub fn xi(&self, bd: Bidegree) -> Result<ModuleMap> {
        self.map(bd, true)
    }

    /// Whether `phi∘phi`, `xi∘xi` vanish and `phi∘xi = xi∘phi` on every
    /// generator whose intermediate and final levels were built.
    pub fn check_invariants(&self) -> Result<()> {
        for &bd in self.levels.keys() {
            let (i, j) = bd;
            let steps: [(bool, bool); 2] = [(false, false), (true, true)];
            for (first, second) in steps {
                let mid = if first { (i + 1, j) } else { (i, j + 1) };
                let end = if second { (mid.0 + 1, mid.1) } else { (mid.0, mid.1 + 1) };
                if !self.levels.contains_key(&end) {
                    continue;
                }
                let m1 = self.map(bd, first)?;
                let m2 = self.map(mid, second)?;
                for (g, img) in m1.images.iter().enumerate() {
                    if !m2.target.is_zero_element(&m2.apply(img)) {
                        return Err(Error::invariant(format!("d^2 != 0 on generator {g} of C^{bd:?}")));
                    }
                }
            }
            let corner = (i + 1, j + 1);
            if !self.levels.contains_key(&corner) {
                continue;
            }
            let (px, xp) = (
                self.map((i, j + 1), true).and_then(|x| Ok((self.map(bd, false)?, x)))?,
                self.map((i + 1, j), false).and_then(|p| Ok((self.map(bd, true)?, p)))?,
            );
            for g in 0..px.0.images.len() {
                let a = px.1.apply(&px.0.images[g]);
                let b = xp.1.apply(&xp.0.images[g]);
                if !px.1.target.is_zero_element(&a.sub(&b, &self.ord)) {
                    return Err(Error::invariant(format!("square at {bd:?} does not commute on generator {g}")));
                }
            }
        }
        Ok(())
    }
}

fn level_keys(n: usize, r: usize, (i, j): Bidegree) -> Vec<Key> {
    let mut out = Vec::new();
    for xt in subsets(n, i) {
        for th in subsets(r, j) {
            out.push((xt.clone(), th));
        }
    }
    out
}

fn check_generators(fs: &[Operator]) -> Result<Ring> {
    let first = fs.first().ok_or_else(|| Error::usage("the ideal needs at least one generator"))?;
    let ring = first.ring();
    for f in fs {
        if f.ring() != ring || ring.has_t() || ring.has_y() || ring.has_s() || !f.is_pure_x() {
            return Err(Error::usage(format!("generator {f} is not a polynomial in A_n")));
        }
        if f.is_zero() {
            return Err(Error::usage("ideal generators must be nonzero"));
        }
    }
    Ok(ring)
}

fn product_of(fs: &[Operator], n: usize, (xt, th): &Key) -> Result<Operator> {
    let ring = Ring::weyl(n);
    let mut p = Operator::one(ring);
    for &i in th {
        p = p.multiply(&fs[i])?;
    }
    for &i in xt {
        p = p.multiply(&Operator::x(ring, i))?;
    }
    Ok(p)
}

/// Annihilators of every node with one shared exponent `a`.
fn node_ideals(fs: &[Operator], n: usize, keys: &[Key], ctx: &Context) -> Result<(Vec<CechNode>, i64)> {
    let ring = Ring::weyl(n);
    let ord = ctx.order_on(ring)?;
    let dl = delta(n);
    let products: Vec<Operator> = keys.iter().map(|k| product_of(fs, n, k)).collect::<Result<_>>()?;
    if ctx.single_shot {
        let data = ctx.par_map(&products, |p| {
            if p.is_constant() {
                Ok(None)
            } else {
                ctx.bernstein_data(p, &dl).map(Some)
            }
        })?;
        let a = data
            .iter()
            .flatten()
            .filter_map(|(_, b)| b.min_int_root)
            .fold(0, i64::min);
        let anns = ctx.par_map(&data, |d| match d {
            None => reduced_ideal(&dl, &ord, &ctx.gb),
            Some((ann, _)) => {
                let subst: Vec<Operator> = ann.gens.iter().map(|g| g.substitute_s(a)).collect();
                reduced_ideal(&subst, &ord, &ctx.gb)
            }
        })?;
        let nodes = keys
            .iter()
            .zip(products)
            .zip(anns)
            .zip(data)
            .map(|((((xt, th), product), ann), d)| {
                let bpoly = d.map(|x| x.1);
                CechNode {
                    theta: th.clone(),
                    xtheta: xt.clone(),
                    product,
                    ann,
                    min_root: bpoly.as_ref().and_then(|b| b.min_int_root),
                    bpoly,
                }
            })
            .collect();
        return Ok((nodes, a));
    }

    // Iterated: localize factor by factor, variables first (this keeps the
    // later stages small), each stage at its own best exponent.
    let chains: Vec<Vec<Operator>> = keys
        .iter()
        .map(|(xt, th)| {
            xt.iter()
                .map(|&i| Operator::x(ring, i))
                .chain(th.iter().map(|&i| fs[i].clone()))
                .filter(|g| !g.is_constant())
                .collect()
        })
        .collect();
    let adaptive = chain_table(&chains, None, &ord, ctx)?.expect("adaptive chains never restart");
    let lowest = adaptive.values().flat_map(|s| s.exps.iter().copied()).fold(-1, i64::min);
    let base: Vec<Stage> = chains.iter().map(|c| adaptive[&chain_key(c)].clone()).collect();

    // The largest shared exponent for which every node can be presented.
    for a in (lowest..=-1).rev() {
        if let Some(anns) = shared_exponent(&chains, &base, a, &ord, ctx)? {
            return Ok((assemble(keys, products, anns, &base), a));
        }
    }
    let mut a = lowest;
    loop {
        match chain_table(&chains, Some(a), &ord, ctx)? {
            Ok(table) => {
                let stages: Vec<Stage> = chains.iter().map(|c| table[&chain_key(c)].clone()).collect();
                let anns = stages.iter().map(|s| s.ideal.clone()).collect();
                return Ok((assemble(keys, products, anns, &stages), a));
            }
            Err(r) => {
                log::debug!("lowering the shared exponent from {a} to {r}");
                a = r;
            }
        }
    }
}

/// Result of localizing along a chain prefix.
#[derive(Clone, Debug)]
struct Stage {
    ideal: Vec<Operator>,
    /// Exponent per stage; the generator is `prod f_i^{exps_i}`.
    exps: Vec<i64>,
    bpoly: Option<BernsteinData>,
}

fn chain_key(c: &[Operator]) -> Vec<String> {
    c.iter().map(|g| g.to_string()).collect()
}

/// Localize along every chain, sharing prefixes, in waves of equal length.
/// With `uniform = Some(a)` every stage uses `a`, and a stage root below `a`
/// aborts with `Err(root)`; otherwise each stage takes `min(0, min root)`.
fn chain_table(
    chains: &[Vec<Operator>],
    uniform: Option<i64>,
    ord: &Order,
    ctx: &Context,
) -> Result<std::result::Result<HashMap<Vec<String>, Stage>, i64>> {
    let n = ord.ring().n();
    let depth = chains.iter().map(Vec::len).max().unwrap_or(0);
    let mut table: HashMap<Vec<String>, Stage> = HashMap::new();
    let start = reduced_ideal(&delta(n), ord, &ctx.gb)?;
    table.insert(Vec::new(), Stage { ideal: start, exps: Vec::new(), bpoly: None });
    for len in 1..=depth {
        let mut wave: Vec<(Vec<String>, Operator)> = Vec::new();
        for c in chains.iter().filter(|c| c.len() >= len) {
            let key = chain_key(&c[..len]);
            if !table.contains_key(&key) && !wave.iter().any(|w| w.0 == key) {
                wave.push((key, c[len - 1].clone()));
            }
        }
        let results = ctx.par_map(&wave, |(key, f)| {
            let prev = &table[&key[..len - 1]];
            let (ann, b) = ctx.bernstein_data(f, &prev.ideal)?;
            let best = b.min_int_root.map_or(0, |r| r.min(0));
            let a = match uniform {
                Some(a) if best < a => return Ok(Err(best)),
                Some(a) => a,
                None => best,
            };
            let mkey = format!("{}|{}|{a}", f, prev.ideal.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","));
            let ideal = ctx.memo_ideal(&mkey, || {
                let subst: Vec<Operator> = ann.gens.iter().map(|g| g.substitute_s(a)).collect();
                reduced_ideal(&subst, ord, &ctx.gb)
            })?;
            let mut exps = prev.exps.clone();
            exps.push(a);
            Ok(Ok(Stage { ideal, exps, bpoly: Some(b) }))
        })?;
        if let Some(r) = results.iter().filter_map(|r| r.as_ref().err()).min() {
            return Ok(Err(*r));
        }
        for ((key, _), res) in wave.into_iter().zip(results) {
            table.insert(key, res.unwrap());
        }
    }
    Ok(Ok(table))
}

/// Annihilators of `F^a` for every node, or `None` if some node cannot be
/// presented with generator `F^a` this way.
fn shared_exponent(
    chains: &[Vec<Operator>],
    base: &[Stage],
    a: i64,
    ord: &Order,
    ctx: &Context,
) -> Result<Option<Vec<Vec<Operator>>>> {
    let ring = ord.ring();
    let idx: Vec<usize> = (0..chains.len()).collect();
    let anns = ctx.par_map(&idx, |&i| {
        let (chain, st) = (&chains[i], &base[i]);
        if st.exps.iter().all(|&e| e <= a) {
            // F^a = P * prod f_i^{e_i} with P a polynomial; it generates
            // exactly when 1 lies in ann + A P.
            let mut p = Operator::one(ring);
            for (f, &e) in chain.iter().zip(&st.exps) {
                p = p.multiply(&f.pow((a - e) as u32))?;
            }
            if p.is_constant() {
                return Ok(Some(st.ideal.clone()));
            }
            let rel: Vec<Vector> = st.ideal.iter().map(|g| g.to_primitive_int(ord)).collect();
            let mut gens = rel.clone();
            gens.push(p.to_primitive_int(ord));
            if !crate::groebner::GroebnerBasis::compute_with(&gens, ord, &ctx.gb)?.contains_unit(0) {
                return Ok(None);
            }
            let ker = kernel_of_images(&[p.to_primitive_int(ord)], &rel, &[], ord, &ctx.gb)?;
            return Ok(Some(ker.iter().map(|v| Operator::from_int_poly(ring, v)).collect()));
        }
        match chain_table(std::slice::from_ref(chain), Some(a), ord, ctx)? {
            Ok(t) => Ok(Some(t[&chain_key(chain)].ideal.clone())),
            Err(_) => Ok(None),
        }
    })?;
    Ok(anns.into_iter().collect())
}

fn assemble(keys: &[Key], products: Vec<Operator>, anns: Vec<Vec<Operator>>, stages: &[Stage]) -> Vec<CechNode> {
    keys.iter()
        .zip(products)
        .zip(anns)
        .zip(stages)
        .map(|((((xt, th), product), ann), st)| CechNode {
            theta: th.clone(),
            xtheta: xt.clone(),
            product,
            ann,
            min_root: st.bpoly.as_ref().and_then(|b| b.min_int_root),
            bpoly: st.bpoly.clone(),
        })
        .collect()
}

/// A computed cohomology module with the data it was derived from.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    /// Presentation on the surviving generators.
    pub presentation: Presentation,
    /// The generators as vectors over the nodes of the ambient level.
    pub generators: Vec<Vector>,
    /// Node keys `(xtheta, theta)` of the ambient level, in position order.
    pub ambient_nodes: Vec<(Vec<usize>, Vec<usize>)>,
    pub a: i64,
    pub nodes: Vec<CechNode>,
}

impl CohomologyResult {
    fn zero(ord: &Order) -> CohomologyResult {
        CohomologyResult {
            presentation: Presentation::free(ord, 0),
            generators: Vec::new(),
            ambient_nodes: Vec::new(),
            a: 0,
            nodes: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.presentation.is_zero_module()
    }
}

/// `H^k_I(R)` for `I = (fs)`: the cohomology of the Čech complex at degree
/// `k`, as a subquotient of `C^k`.
pub fn local_cohomology(fs: &[Operator], k: i64, ctx: &Context) -> Result<CohomologyResult> {
    let ring = check_generators(fs)?;
    let ord = ctx.order_on(ring)?;
    let r = fs.len() as i64;
    if k < 0 || k > r {
        return Ok(CohomologyResult::zero(&ord));
    }
    let k = k as usize;
    let mut levels = vec![(0, k)];
    if k < fs.len() {
        levels.push((0, k + 1));
    }
    let cx = CechComplex::build(fs, &levels, ctx)?;
    let ambient = cx.level((0, k)).unwrap().clone();
    let g = cx.phi((0, k))?.kernel(&ctx.gb)?;
    let g0 = if k > 0 { reduce_mod(&cx.images((0, k - 1), false), &ambient) } else { Vec::new() };
    finish(cx, (0, k), &g, &g0, ctx)
}

fn finish(cx: CechComplex, bd: Bidegree, g: &[Vector], g0: &[Vector], ctx: &Context) -> Result<CohomologyResult> {
    let ambient = cx.level(bd).unwrap();
    let sq = subquotient(g, g0, ambient, &ctx.gb)?;
    Ok(CohomologyResult {
        presentation: sq.presentation,
        generators: sq.generators,
        ambient_nodes: cx.level_nodes(bd),
        a: cx.a,
        nodes: cx.nodes,
    })
}

/// `H^{i0}_m(H^{j0}_I(R))` from the double complex of the localizations
/// `R_{X_xtheta F_theta}`, as `[ker phi ∩ xi^{-1}(im phi') + im phi''] /
/// [xi(ker phi''') + im phi'']` inside `C^{i0,j0}`.
pub fn iterated_local_cohomology(fs: &[Operator], i0: i64, j0: i64, ctx: &Context) -> Result<CohomologyResult> {
    let ring = check_generators(fs)?;
    let ord = ctx.order_on(ring)?;
    let (n, r) = (ring.n() as i64, fs.len() as i64);
    if i0 < 0 || j0 < 0 || i0 > n || j0 > r {
        return Ok(CohomologyResult::zero(&ord));
    }
    let (i0, j0) = (i0 as usize, j0 as usize);
    let (n, r) = (n as usize, r as usize);
    // Presentations are needed for the ambient level, the targets of the
    // outgoing maps, and the target of phi^{i0-1,j0} for its kernel.
    let mut levels = vec![(i0, j0)];
    if j0 < r {
        levels.push((i0, j0 + 1));
    }
    if i0 < n {
        levels.push((i0 + 1, j0));
    }
    if i0 > 0 {
        levels.push((i0 - 1, j0));
        if j0 < r {
            levels.push((i0 - 1, j0 + 1));
        }
    }
    let cx = CechComplex::build(fs, &levels, ctx)?;
    let ambient = cx.level((i0, j0)).unwrap().clone();

    let ker_phi = cx.phi((i0, j0))?.kernel(&ctx.gb)?;
    let ker_cap = if i0 < n {
        let rho = if j0 > 0 { cx.images((i0 + 1, j0 - 1), false) } else { Vec::new() };
        let pre = cx.xi((i0, j0))?.preimage(&rho, &ctx.gb)?;
        intersect(&ambient, &ker_phi, &pre, &ctx.gb)?
    } else {
        ker_phi
    };
    let im_psi = if j0 > 0 { reduce_mod(&cx.images((i0, j0 - 1), false), &ambient) } else { Vec::new() };
    let mut g = ker_cap;
    g.extend(im_psi.iter().cloned());
    let mut g0 = im_psi;
    if i0 > 0 {
        let phi_prev = cx.phi((i0 - 1, j0))?;
        let ker_prev = phi_prev.kernel(&ctx.gb)?;
        g0.extend(cx.xi((i0 - 1, j0))?.image(&ker_prev));
    }
    finish(cx, (i0, j0), &g, &g0, ctx)
}

/// Degree cap for the socle search; exceeding it means the module is not
/// `m`-torsion with finite socle.
pub const SOCLE_DEGREE_CAP: u32 = 64;

/// Number of copies of `E_R(K)` in an `m`-torsion presentation: split off
/// one socle element at a time until the module vanishes.
pub fn socle_count(p: &Presentation, ctx: &Context) -> Result<usize> {
    let ord = p.order().clone();
    let ring = p.ring();
    let n = ring.n();
    let mut rel: Vec<Vector> = p.relations().to_vec();
    let mut cur = p.clone();
    let mut count = 0;
    while !cur.is_zero_module() {
        let pos = (0..cur.rank()).find(|&q| !cur.gb().contains_unit(q)).unwrap();
        let socle = socle_element(&cur, pos, n, &ord)?;
        rel.push(socle);
        cur = Presentation::new(&ord, p.rank(), rel.clone(), &ctx.gb)?;
        count += 1;
    }
    Ok(count)
}

fn x_mono(ring: Ring, exps: &[u32]) -> Mono {
    let mut m = Mono::ONE;
    for (i, &e) in exps.iter().enumerate() {
        m.set(ring.x(i), e);
    }
    m
}

fn mono_vector(m: Mono, pos: u32, ord: &Order) -> Vector {
    Poly::from_terms(vec![Term { m, pos, c: Int::ONE }], ord)
}

/// Breadth-first search over x-monomials, by total degree then
/// lexicographically, for `m` with `m e_pos != 0` and `x_l m e_pos = 0`.
fn socle_element(p: &Presentation, pos: u32, n: usize, ord: &Order) -> Result<Vector> {
    let ring = p.ring();
    let mut dead: Vec<Vec<u32>> = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![vec![0; n]];
    for _deg in 0..=SOCLE_DEGREE_CAP {
        let mut next: Vec<Vec<u32>> = Vec::new();
        for e in &layer {
            let v = mono_vector(x_mono(ring, e), pos, ord);
            if p.is_zero_element(&v) {
                dead.push(e.clone());
                continue;
            }
            let mut all_zero = true;
            for l in 0..n {
                let mut up = e.clone();
                up[l] += 1;
                let killed = dead.iter().any(|d| d.iter().zip(&up).all(|(a, b)| a <= b))
                    || p.is_zero_element(&mono_vector(x_mono(ring, &up), pos, ord));
                if !killed {
                    all_zero = false;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
            if all_zero {
                return Ok(v);
            }
        }
        next.retain(|e| !dead.iter().any(|d| d.iter().zip(e).all(|(a, b)| a <= b)));
        next.sort_by(|a, b| b.cmp(a));
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Err(Error::invariant(format!(
        "no socle element for generator {pos} up to degree {SOCLE_DEGREE_CAP}; the module is not m-torsion"
    )))
}

/// `lambda_{i, n-j}`: the socle dimension of `H^i_m(H^j_I(R))`.
pub fn lambda(fs: &[Operator], i: i64, j: i64, ctx: &Context) -> Result<usize> {
    let h = iterated_local_cohomology(fs, i, j, ctx)?;
    socle_count(&h.presentation, ctx)
}

/// Largest `k` with `H^k_I(R) != 0`, or `None` if all vanish.
pub fn cohomological_dimension(fs: &[Operator], ctx: &Context) -> Result<Option<usize>> {
    for k in (0..=fs.len()).rev() {
        if !local_cohomology(fs, k as i64, ctx)?.is_zero() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// `cd(R, I) - c` with the shifted nonvanishing degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeCd {
    pub cd: Option<usize>,
    pub relative: i64,
    /// `{q - c : H^q_I(R) != 0}`, increasing.
    pub shifted_nonvanishing: Vec<i64>,
    pub warning: Option<String>,
}

/// The relative cohomological dimension for a smooth subvariety with ideal
/// of height `c` containing the variety of `I` (smoothness is the caller's
/// responsibility).
pub fn relative_cd(fs: &[Operator], c: usize, ctx: &Context) -> Result<RelativeCd> {
    let mut nonzero = Vec::new();
    for k in 0..=fs.len() {
        if !local_cohomology(fs, k as i64, ctx)?.is_zero() {
            nonzero.push(k);
        }
    }
    let cd = nonzero.last().copied();
    let top = cd.unwrap_or(0) as i64;
    let (relative, warning) = if (c as i64) > top {
        (0, Some(format!("height {c} exceeds the cohomological dimension {top}; reporting 0")))
    } else {
        (top - c as i64, None)
    };
    Ok(RelativeCd {
        cd,
        relative,
        shifted_nonvanishing: nonzero.iter().map(|&q| q as i64 - c as i64).collect(),
        warning,
    })
}
