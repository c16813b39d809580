//! Finitely presented left modules and maps between them.
//!
//! A `Presentation` is `A^d / H`. Kernels are computed by elimination:
//! the vectors `(phi(e_i), e_i)` together with `(q, 0)` for target
//! relations are completed under an order where the value block
//! dominates; the elements whose value part vanishes generate the kernel.

use crate::error::{Error, Result};
use crate::groebner::{combine, complete, interreduce, GbOptions, GroebnerBasis, Reducers, Vector};
use crate::int::Int;
use crate::order::Order;
use crate::poly::{Poly, Term};
use crate::ring::{Mono, Ring};
use crate::weyl::Operator;

/// `A^rank / relations`.
#[derive(Clone, Debug)]
pub struct Presentation {
    ord: Order,
    rank: u32,
    relations: Vec<Vector>,
    gb: GroebnerBasis,
}

impl Presentation {
    pub fn new(ord: &Order, rank: u32, relations: Vec<Vector>, opts: &GbOptions) -> Result<Presentation> {
        if let Some(r) = relations.iter().find(|r| r.terms().iter().any(|t| t.pos >= rank)) {
            return Err(Error::usage(format!(
                "relation has a component at position {} beyond rank {rank}",
                r.terms().iter().map(|t| t.pos).max().unwrap()
            )));
        }
        let ord = ord.unsplit();
        let gb = GroebnerBasis::compute_with(&relations, &ord, opts)?;
        Ok(Presentation { ord, rank, relations, gb })
    }

    /// The free module `A^rank`.
    pub fn free(ord: &Order, rank: u32) -> Presentation {
        Presentation::new(ord, rank, Vec::new(), &GbOptions::default()).unwrap()
    }

    /// `A / A(gens)`.
    pub fn cyclic(ord: &Order, gens: &[Operator], opts: &GbOptions) -> Result<Presentation> {
        let rel = gens.iter().map(|g| g.to_primitive_int(ord)).collect();
        Presentation::new(ord, 1, rel, opts)
    }

    /// Direct sum, positions of later summands shifted.
    pub fn direct_sum(parts: &[&Presentation], opts: &GbOptions) -> Result<Presentation> {
        let ord = parts
            .first()
            .map(|p| p.ord.clone())
            .ok_or_else(|| Error::usage("direct sum of nothing"))?;
        let mut rank = 0;
        let mut rel = Vec::new();
        for p in parts {
            rel.extend(p.relations.iter().map(|r| shift(r, rank, &ord)));
            rank += p.rank;
        }
        Presentation::new(&ord, rank, rel, opts)
    }

    pub fn ring(&self) -> Ring {
        self.ord.ring()
    }

    pub fn order(&self) -> &Order {
        &self.ord
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Whether every generator vanishes.
    pub fn is_zero_module(&self) -> bool {
        (0..self.rank).all(|p| self.gb.contains_unit(p))
    }

    /// Whether `v` is zero in the module.
    pub fn is_zero_element(&self, v: &Vector) -> bool {
        self.gb.is_member(v)
    }

    pub fn normal_form(&self, v: &Vector) -> Vector {
        self.gb.normal_form(v)
    }

    /// Unit vector at `pos`.
    pub fn generator(&self, pos: u32) -> Vector {
        unit(pos)
    }
}

/// The unit vector `e_pos`.
pub fn unit(pos: u32) -> Vector {
    Poly::constant(Int::ONE, pos)
}

/// Move every component up by `by`.
pub fn shift(v: &Vector, by: u32, ord: &Order) -> Vector {
    v.map_pos(|p| p + by, ord)
}

/// `op * e_pos`.
pub fn place(op: &Operator, pos: u32, ord: &Order) -> Vector {
    shift(&op.to_primitive_int(ord), pos, ord)
}

/// A vector with the given operator entries (exact rational entries are
/// scaled together to a primitive integer vector).
pub fn vector_from_ops(entries: &[Operator], ord: &Order) -> Vector {
    let mut terms = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        for t in e.poly().terms() {
            terms.push(Term { m: t.m, pos: i as u32, c: t.c.clone() });
        }
    }
    Poly::from_terms(terms, ord).to_primitive_int()
}

/// Entries of a vector as operators.
pub fn vector_to_ops(v: &Vector, rank: u32, ring: Ring) -> Vec<Operator> {
    (0..rank)
        .map(|p| Operator::from_int_poly(ring, &v.component(p)))
        .collect()
}

/// Extended-module elimination. Returns a reduced Groebner basis (in
/// source coordinates) of the kernel of `A^s -> A^r / rel`, `e_i -> images[i]`,
/// where `known` are vectors already known to lie in the kernel.
pub fn kernel_of_images(
    images: &[Vector],
    rel: &[Vector],
    known: &[Vector],
    ord: &Order,
    opts: &GbOptions,
) -> Result<Vec<Vector>> {
    let ord = ord.unsplit();
    let split = images
        .iter()
        .chain(rel.iter())
        .flat_map(|v| v.terms().iter().map(|t| t.pos + 1))
        .max()
        .unwrap_or(0);
    let sord = ord.with_split(split);
    let mut input: Vec<Vector> = Vec::with_capacity(images.len() + rel.len() + known.len());
    for (i, img) in images.iter().enumerate() {
        let mut terms = img.terms().to_vec();
        terms.push(Term { m: Mono::ONE, pos: split + i as u32, c: Int::ONE });
        input.push(Poly::from_terms(terms, &sord));
    }
    input.extend(rel.iter().filter(|r| !r.is_zero()).cloned());
    input.extend(known.iter().filter(|k| !k.is_zero()).map(|k| shift(k, split, &sord)));
    let opts = GbOptions { keep_split_leads: true, ..opts.clone() };
    let done = complete(input, &sord, &opts)?;
    let ker: Vec<Vector> = done
        .basis
        .into_iter()
        .filter(|v| v.terms()[0].pos >= split)
        .map(|v| v.map_pos(|p| p - split, &ord))
        .collect();
    Ok(interreduce(ker, &ord))
}

/// An `A_n`-linear map between presented modules, given on generators.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Presentation,
    pub target: Presentation,
    pub images: Vec<Vector>,
}

impl ModuleMap {
    /// Checks that every source relation maps into the target relations.
    pub fn new(source: Presentation, target: Presentation, images: Vec<Vector>) -> Result<ModuleMap> {
        if images.len() != source.rank as usize {
            return Err(Error::usage(format!(
                "{} images for a source of rank {}",
                images.len(),
                source.rank
            )));
        }
        if images.iter().any(|v| v.terms().iter().any(|t| t.pos >= target.rank)) {
            return Err(Error::usage("image outside the target's rank"));
        }
        let map = ModuleMap { source, target, images };
        for r in &map.source.relations {
            if !map.target.is_zero_element(&map.apply(r)) {
                return Err(Error::usage("map is not well defined on the source relations"));
            }
        }
        Ok(map)
    }

    /// Image of a source vector (in free coordinates).
    pub fn apply(&self, v: &Vector) -> Vector {
        combine(v, &self.images, &self.target.ord)
    }

    /// Generators of the kernel as source vectors, reduced modulo the source
    /// relations (zero classes dropped).
    pub fn kernel(&self, opts: &GbOptions) -> Result<Vec<Vector>> {
        let ker = kernel_of_images(
            &self.images,
            &self.target.relations,
            &self.source.relations,
            &self.source.ord,
            opts,
        )?;
        Ok(reduce_mod(&ker, &self.source))
    }

    /// Generators of `phi^{-1}(S)` for a submodule `S` of the target given
    /// by generators in target coordinates.
    pub fn preimage(&self, s: &[Vector], opts: &GbOptions) -> Result<Vec<Vector>> {
        let mut rel = self.target.relations.clone();
        rel.extend(s.iter().cloned());
        let ker = kernel_of_images(&self.images, &rel, &self.source.relations, &self.source.ord, opts)?;
        Ok(reduce_mod(&ker, &self.source))
    }

    /// Images of source vectors, reduced modulo the target relations.
    pub fn image(&self, vs: &[Vector]) -> Vec<Vector> {
        let imgs: Vec<Vector> = vs.iter().map(|v| self.apply(v)).collect();
        reduce_mod(&imgs, &self.target)
    }
}

/// Normal forms modulo the presentation's relations, zero and repeated
/// entries dropped.
pub fn reduce_mod(vs: &[Vector], p: &Presentation) -> Vec<Vector> {
    let r = Reducers::new(p.gb.elements());
    let mut out: Vec<Vector> = Vec::new();
    for v in vs {
        let nf = r.normal_form(v, &p.ord, None);
        if !nf.is_zero() && !out.contains(&nf) {
            out.push(nf);
        }
    }
    out
}

/// Generators of `M1 cap M2` for submodules of the module presented by
/// `ambient`, as `psi(psi^{-1}(M1))` with `psi: A^{|M2|} -> ambient`.
pub fn intersect(ambient: &Presentation, m1: &[Vector], m2: &[Vector], opts: &GbOptions) -> Result<Vec<Vector>> {
    if m1.is_empty() || m2.is_empty() {
        return Ok(Vec::new());
    }
    let mut rel = ambient.relations.clone();
    rel.extend(m1.iter().cloned());
    let pre = kernel_of_images(m2, &rel, &[], &ambient.ord, opts)?;
    let imgs: Vec<Vector> = pre.iter().map(|v| combine(v, m2, &ambient.ord)).collect();
    Ok(reduce_mod(&imgs, ambient))
}

/// A subquotient `(<G> + H) / (<G0> + H)` of `ambient = A^d / H`,
/// presented on the surviving generators.
#[derive(Clone, Debug)]
pub struct Subquotient {
    /// Generators in ambient coordinates (normal forms modulo `G0 + H`).
    pub generators: Vec<Vector>,
    /// Presentation on those generators.
    pub presentation: Presentation,
    /// The denominator `G0 + H` as a Groebner basis in ambient coordinates.
    pub denominator: GroebnerBasis,
}

impl Subquotient {
    pub fn is_zero_module(&self) -> bool {
        self.presentation.is_zero_module()
    }
}

/// Remainders of `g` modulo `G0 + H` with the relations among them.
pub fn subquotient(g: &[Vector], g0: &[Vector], ambient: &Presentation, opts: &GbOptions) -> Result<Subquotient> {
    let ord = &ambient.ord;
    let mut den: Vec<Vector> = ambient.relations.clone();
    den.extend(g0.iter().cloned());
    let dgb = GroebnerBasis::compute_with(&den, ord, opts)?;
    let r = Reducers::new(dgb.elements());
    let mut gens: Vec<Vector> = Vec::new();
    for v in g {
        let nf = r.normal_form(v, ord, None);
        if !nf.is_zero() && !gens.contains(&nf) {
            gens.push(nf);
        }
    }
    let rel = if gens.is_empty() {
        Vec::new()
    } else {
        kernel_of_images(&gens, dgb.elements(), &[], ord, opts)?
    };
    let presentation = Presentation::new(ord, gens.len() as u32, rel, opts)?;
    Ok(Subquotient {
        generators: gens,
        presentation,
        denominator: dgb,
    })
}
