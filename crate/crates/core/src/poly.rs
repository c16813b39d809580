//! Sparse normally-ordered elements of free modules over Weyl-type rings.
//!
//! A `Poly` is a list of terms `c * m * e_pos` sorted strictly decreasing
//! under some module order. Ideal elements simply use position 0. The
//! coefficient type is generic so the same multiplication code serves the
//! exact rational `Operator` API and the fraction-free integer Groebner
//! engine.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::int::Int;
use crate::order::Order;
use crate::ring::{Mono, Ring};

pub trait Coef: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: &Int) -> Self;
    fn from_i64(v: i64) -> Self {
        Self::from_int(&Int::from(v))
    }
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn is_negative(&self) -> bool;
}

impl Coef for Int {
    fn zero() -> Int {
        Int::ZERO
    }
    fn one() -> Int {
        Int::ONE
    }
    fn from_int(v: &Int) -> Int {
        v.clone()
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn add(&self, o: &Int) -> Int {
        Int::add(self, o)
    }
    fn mul(&self, o: &Int) -> Int {
        Int::mul(self, o)
    }
    fn neg(&self) -> Int {
        Int::neg(self)
    }
    fn sub(&self, o: &Int) -> Int {
        Int::sub(self, o)
    }
    fn is_negative(&self) -> bool {
        Int::is_negative(self)
    }
}

pub type Rat = BigRational;

impl Coef for Rat {
    fn zero() -> Rat {
        Zero::zero()
    }
    fn one() -> Rat {
        One::one()
    }
    fn from_int(v: &Int) -> Rat {
        Rat::from_integer(v.to_big())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Rat) -> Rat {
        self + o
    }
    fn mul(&self, o: &Rat) -> Rat {
        self * o
    }
    fn neg(&self) -> Rat {
        -self
    }
    fn sub(&self, o: &Rat) -> Rat {
        self - o
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term<C> {
    pub m: Mono,
    pub pos: u32,
    pub c: C,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C> {
    pub(crate) terms: Vec<Term<C>>,
}

impl<C: Coef> Default for Poly<C> {
    fn default() -> Self {
        Poly { terms: Vec::new() }
    }
}

impl<C: Coef> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: C, pos: u32) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: vec![Term { m: Mono::ONE, pos, c }],
        }
    }

    pub fn monomial(c: C, m: Mono, pos: u32) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: vec![Term { m, pos, c }],
        }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(mut terms: Vec<Term<C>>, ord: &Order) -> Self {
        terms.sort_by(|a, b| ord.cmp_term(&b.m, b.pos, &a.m, a.pos));
        let mut out: Vec<Term<C>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.m == t.m && last.pos == t.pos => {
                    last.c = last.c.add(&t.c);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<C>> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    /// Largest total degree of any term (0 for the zero element).
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.m.deg()).max().unwrap_or(0)
    }

    /// Largest position index plus one.
    pub fn rank_hint(&self) -> usize {
        self.terms.iter().map(|t| t.pos as usize + 1).max().unwrap_or(0)
    }

    pub fn resort(&mut self, ord: &Order) {
        let terms = std::mem::take(&mut self.terms);
        *self = Poly::from_terms(terms, ord);
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term { m: t.m, pos: t.pos, c: t.c.neg() })
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term { m: t.m, pos: t.pos, c: t.c.mul(c) })
                .collect(),
        }
    }

    pub fn add(&self, o: &Self, ord: &Order) -> Self {
        Poly {
            terms: merge(&self.terms, &o.terms, ord, |c| c.clone()),
        }
    }

    pub fn sub(&self, o: &Self, ord: &Order) -> Self {
        Poly {
            terms: merge(&self.terms, &o.terms, ord, |c| c.neg()),
        }
    }

    /// Move every term to a new position.
    pub fn map_pos(&self, f: impl Fn(u32) -> u32, ord: &Order) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { m: t.m, pos: f(t.pos), c: t.c.clone() })
            .collect();
        Poly::from_terms(terms, ord)
    }

    /// Terms at a single position, moved to position 0.
    pub fn component(&self, pos: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.pos == pos)
                .map(|t| Term { m: t.m, pos: 0, c: t.c.clone() })
                .collect(),
        }
    }

    /// `(c * m) * self` in the Weyl-type ring, normally ordered.
    pub fn mul_term_left(&self, c: &C, m: &Mono, ord: &Order) -> Self {
        Poly {
            terms: mul_mono_terms(c, m, &self.terms, ord),
        }
    }

    /// `self * other` where `self` is a ring element (position 0) and
    /// `other` a module element.
    pub fn mul(&self, other: &Self, ord: &Order) -> Self {
        let mut acc: Vec<Term<C>> = Vec::new();
        for t in &self.terms {
            acc.extend(mul_mono_terms(&t.c, &t.m, &other.terms, ord));
        }
        Poly::from_terms(acc, ord)
    }

    pub fn map_coeffs<D: Coef>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term { m: t.m, pos: t.pos, c: f(&t.c) })
                .filter(|t| !t.c.is_zero())
                .collect(),
        }
    }

    /// Whether every term is free of the given slots.
    pub fn avoids(&self, slots: &[usize]) -> bool {
        self.terms
            .iter()
            .all(|t| slots.iter().all(|&s| t.m.exp(s) == 0))
    }

    /// Largest exponent of a slot over all terms.
    pub fn max_exp(&self, slot: usize) -> u32 {
        self.terms.iter().map(|t| t.m.exp(slot)).max().unwrap_or(0)
    }
}

impl Poly<Int> {
    /// Gcd of all coefficients (non-negative).
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for t in &self.terms {
            g = g.gcd(&t.c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = self.content();
        if self.terms[0].c.is_negative() {
            g = g.neg();
        }
        if !g.is_one() {
            for t in &mut self.terms {
                t.c = t.c.div_exact(&g);
            }
        }
    }

    pub fn to_rat(&self) -> Poly<Rat> {
        self.map_coeffs(|c| Rat::from_integer(c.to_big()))
    }
}

impl Poly<Rat> {
    /// Clear denominators and content, returning a primitive integer
    /// element proportional to `self`.
    pub fn to_primitive_int(&self) -> Poly<Int> {
        let mut den = BigInt::one();
        for t in &self.terms {
            den = num_integer::Integer::lcm(&den, t.c.denom());
        }
        let mut p = Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m,
                    pos: t.pos,
                    c: Int::from_big(t.c.numer() * (&den / t.c.denom())),
                })
                .collect(),
        };
        p.make_primitive();
        p
    }

    /// Integer element exactly equal to `self` scaled by the returned
    /// denominator: `self = p / den`.
    pub fn to_int_with_den(&self) -> (Poly<Int>, BigInt) {
        let mut den = BigInt::one();
        for t in &self.terms {
            den = num_integer::Integer::lcm(&den, t.c.denom());
        }
        let p = Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m,
                    pos: t.pos,
                    c: Int::from_big(t.c.numer() * (&den / t.c.denom())),
                })
                .collect(),
        };
        (p, den)
    }
}

/// Merge two sorted term lists, transforming coefficients of the second.
pub(crate) fn merge<C: Coef>(
    a: &[Term<C>],
    b: &[Term<C>],
    ord: &Order,
    fb: impl Fn(&C) -> C,
) -> Vec<Term<C>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.cmp_term(&a[i].m, a[i].pos, &b[j].m, b[j].pos) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term { m: b[j].m, pos: b[j].pos, c: fb(&b[j].c) });
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].c.add(&fb(&b[j].c));
                if !c.is_zero() {
                    out.push(Term { m: a[i].m, pos: a[i].pos, c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|t| Term { m: t.m, pos: t.pos, c: fb(&t.c) }));
    out
}

/// Merge two owned sorted lists, adding coefficients.
pub(crate) fn merge_owned<C: Coef>(a: Vec<Term<C>>, b: Vec<Term<C>>, ord: &Order) -> Vec<Term<C>> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        let o = match (ai.peek(), bi.peek()) {
            (Some(x), Some(y)) => ord.cmp_term(&x.m, x.pos, &y.m, y.pos),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match o {
            Ordering::Greater => out.push(ai.next().unwrap()),
            Ordering::Less => out.push(bi.next().unwrap()),
            Ordering::Equal => {
                let x = ai.next().unwrap();
                let y = bi.next().unwrap();
                let c = x.c.add(&y.c);
                if !c.is_zero() {
                    out.push(Term { m: x.m, pos: x.pos, c });
                }
            }
        }
    }
    out
}

/// Falling factorial `g (g-1) ... (g-k+1)`.
fn falling(g: u32, k: u32) -> Int {
    (0..k).fold(Int::ONE, |acc, i| acc.mul_i64((g - i) as i64))
}

fn binom(n: u32, k: u32) -> Int {
    let mut r = Int::ONE;
    for i in 0..k {
        r = r.mul_i64((n - i) as i64).div_exact(&Int::from((i + 1) as i64));
    }
    r
}

/// Terms of `(c * m) * p`, sorted.
///
/// Uses `d^b g = sum_k C(b, k) (d^k g) d^(b-k)` per conjugate pair, where
/// `d^k g` is the formal derivative of the coefficients. For a fixed `k`
/// the shifted derivatives keep their relative order, so the product is a
/// merge of sorted runs.
pub(crate) fn mul_mono_terms<C: Coef>(c: &C, m: &Mono, p: &[Term<C>], ord: &Order) -> Vec<Term<C>> {
    if p.is_empty() || c.is_zero() {
        return Vec::new();
    }
    let ring: Ring = ord.ring();
    // pairs where the derivative part of m meets a variable present in p
    let mut active: [(usize, usize, u32); 16] = [(0, 0, 0); 16];
    let mut nact = 0;
    for (v, dv) in ring.pairs() {
        let b = m.exp(dv);
        if b == 0 {
            continue;
        }
        let maxg = p.iter().map(|t| t.m.exp(v)).max().unwrap_or(0);
        if maxg == 0 {
            continue;
        }
        active[nact] = (v, dv, b.min(maxg));
        nact += 1;
    }
    let leading: Vec<Term<C>> = p
        .iter()
        .map(|t| Term { m: m.mul(&t.m), pos: t.pos, c: c.mul(&t.c) })
        .collect();
    if nact == 0 {
        return leading;
    }
    let active = &active[..nact];
    let mut acc = leading;
    let mut k = vec![0u32; nact];
    loop {
        // next k vector in the box, skipping k = 0
        let mut idx = 0;
        loop {
            if idx == nact {
                return acc;
            }
            k[idx] += 1;
            if k[idx] <= active[idx].2 {
                break;
            }
            k[idx] = 0;
            idx += 1;
        }
        let mut base = Int::ONE;
        for (a, &kk) in active.iter().zip(k.iter()) {
            base = base.mul(&binom(m.exp(a.1), kk));
        }
        let mut run: Vec<Term<C>> = Vec::new();
        for t in p {
            let mut factor = base.clone();
            let mut ok = true;
            for (a, &kk) in active.iter().zip(k.iter()) {
                let g = t.m.exp(a.0);
                if g < kk {
                    ok = false;
                    break;
                }
                if kk > 0 {
                    factor = factor.mul(&falling(g, kk));
                }
            }
            if !ok {
                continue;
            }
            let mut mm = m.mul(&t.m);
            for (a, &kk) in active.iter().zip(k.iter()) {
                if kk > 0 {
                    mm.set(a.0, mm.exp(a.0) - kk);
                    mm.set(a.1, mm.exp(a.1) - kk);
                }
            }
            run.push(Term {
                m: mm,
                pos: t.pos,
                c: c.mul(&t.c).mul(&C::from_int(&factor)),
            });
        }
        acc = merge_owned(acc, run, ord);
    }
}
