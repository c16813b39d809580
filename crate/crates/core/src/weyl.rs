//! Exact operators in the Weyl algebra family with rational coefficients.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::int::Int;
use crate::order::Order;
use crate::poly::{Coef, Poly, Rat, Term};
use crate::ring::{Mono, Ring};

/// A normally ordered element of a Weyl-type ring, terms sorted by the
/// ring's degree reverse lexicographic order.
#[derive(Clone, PartialEq)]
pub struct Operator {
    ring: Ring,
    poly: Poly<Rat>,
}

impl Operator {
    pub fn zero(ring: Ring) -> Operator {
        Operator {
            ring,
            poly: Poly::zero(),
        }
    }

    pub fn constant(ring: Ring, c: Rat) -> Operator {
        Operator {
            ring,
            poly: Poly::constant(c, 0),
        }
    }

    pub fn one(ring: Ring) -> Operator {
        Operator::constant(ring, <Rat as One>::one())
    }

    pub fn from_int(ring: Ring, v: i64) -> Operator {
        Operator::constant(ring, Rat::from_integer(BigInt::from(v)))
    }

    /// A single slot variable (see `Ring` for the slot layout).
    pub fn var(ring: Ring, slot: usize) -> Operator {
        assert!(slot < ring.nslots(), "slot out of range");
        Operator {
            ring,
            poly: Poly::monomial(<Rat as One>::one(), Mono::var(slot, 1), 0),
        }
    }

    pub fn x(ring: Ring, i: usize) -> Operator {
        Operator::var(ring, ring.x(i))
    }

    pub fn d(ring: Ring, i: usize) -> Operator {
        Operator::var(ring, ring.d(i))
    }

    pub fn t(ring: Ring) -> Operator {
        Operator::var(ring, ring.t().expect("ring has no t"))
    }

    pub fn dt(ring: Ring) -> Operator {
        Operator::var(ring, ring.dt().expect("ring has no dt"))
    }

    pub fn y1(ring: Ring) -> Operator {
        Operator::var(ring, ring.y1().expect("ring has no y"))
    }

    pub fn y2(ring: Ring) -> Operator {
        Operator::var(ring, ring.y2().expect("ring has no y"))
    }

    pub fn s(ring: Ring) -> Operator {
        Operator::var(ring, ring.s().expect("ring has no s"))
    }

    pub fn from_terms(ring: Ring, terms: Vec<(Rat, Mono)>) -> Operator {
        let ord = Order::degrevlex(ring);
        let terms = terms
            .into_iter()
            .map(|(c, m)| Term { m, pos: 0, c })
            .collect();
        Operator {
            ring,
            poly: Poly::from_terms(terms, &ord),
        }
    }

    /// Wrap a position-0 element; re-sorts into canonical order.
    pub fn from_poly(ring: Ring, mut poly: Poly<Rat>) -> Operator {
        poly.resort(&Order::degrevlex(ring));
        Operator { ring, poly }
    }

    pub fn from_int_poly(ring: Ring, p: &Poly<Int>) -> Operator {
        Operator::from_poly(ring, p.to_rat())
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn poly(&self) -> &Poly<Rat> {
        &self.poly
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Mono)> {
        self.poly.terms().iter().map(|t| (&t.c, &t.m))
    }

    pub fn nterms(&self) -> usize {
        self.poly.len()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.poly.terms().iter().all(|t| t.m.is_one())
    }

    /// Degree: largest total degree of a term; `None` for the zero operator.
    pub fn degree(&self) -> Option<u32> {
        (!self.is_zero()).then(|| self.poly.degree())
    }

    /// The leading term under `ord`.
    pub fn leading_term(&self, ord: &Order) -> Result<(Rat, Mono)> {
        if ord.ring() != self.ring {
            return Err(Error::usage("order belongs to another ring"));
        }
        self.poly
            .terms()
            .iter()
            .max_by(|a, b| ord.cmp(&a.m, &b.m))
            .map(|t| (t.c.clone(), t.m))
            .ok_or_else(|| Error::usage("leading term of the zero operator"))
    }

    /// Primitive integer form (content removed, positive leading
    /// coefficient), sorted by `ord`.
    pub fn to_primitive_int(&self, ord: &Order) -> Poly<Int> {
        let mut p = self.poly.to_primitive_int();
        p.resort(ord);
        p.make_primitive();
        p
    }

    fn check_same(&self, o: &Operator) -> Result<()> {
        if self.ring != o.ring {
            return Err(Error::usage(format!(
                "ring mismatch: {:?} vs {:?}",
                self.ring, o.ring
            )));
        }
        Ok(())
    }

    fn ord(&self) -> Order {
        Order::degrevlex(self.ring)
    }

    /// The normally ordered product `self * o`.
    pub fn multiply(&self, o: &Operator) -> Result<Operator> {
        self.check_same(o)?;
        Ok(Operator {
            ring: self.ring,
            poly: self.poly.mul(&o.poly, &self.ord()),
        })
    }

    pub fn add(&self, o: &Operator) -> Result<Operator> {
        self.check_same(o)?;
        Ok(Operator {
            ring: self.ring,
            poly: self.poly.add(&o.poly, &self.ord()),
        })
    }

    pub fn sub(&self, o: &Operator) -> Result<Operator> {
        self.check_same(o)?;
        Ok(Operator {
            ring: self.ring,
            poly: self.poly.sub(&o.poly, &self.ord()),
        })
    }

    pub fn neg(&self) -> Operator {
        Operator {
            ring: self.ring,
            poly: self.poly.neg(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Operator {
        Operator {
            ring: self.ring,
            poly: self.poly.scale(c),
        }
    }

    pub fn pow(&self, e: u32) -> Operator {
        let mut r = Operator::one(self.ring);
        for _ in 0..e {
            r = r.multiply(self).unwrap();
        }
        r
    }

    /// Whether only `x` variables (and central `y`, `s`) occur.
    pub fn is_x_polynomial(&self) -> bool {
        let r = self.ring;
        self.poly.terms().iter().all(|t| {
            (0..r.n()).all(|i| t.m.exp(r.d(i)) == 0)
                && r.t().map_or(true, |s| t.m.exp(s) == 0 && t.m.exp(s + 1) == 0)
        })
    }

    /// Whether the operator lies in `Q[x_1..x_n]`.
    pub fn is_pure_x(&self) -> bool {
        let n = self.ring.n();
        self.poly
            .terms()
            .iter()
            .all(|t| (n..self.ring.nslots()).all(|s| t.m.exp(s) == 0))
    }

    /// `self * g` for a polynomial `g` in the `x` variables.
    pub fn right_multiply(&self, g: &Operator) -> Result<Operator> {
        if !g.is_pure_x() {
            return Err(Error::usage("right multiplier must be a polynomial in x"));
        }
        let g = g.embed(self.ring)?;
        self.multiply(&g)
    }

    /// Map into another ring of the family, slot by slot. Fails when a
    /// variable has no counterpart in the target.
    pub fn embed(&self, target: Ring) -> Result<Operator> {
        if target == self.ring {
            return Ok(self.clone());
        }
        let src = self.ring;
        if src.n() != target.n() {
            return Err(Error::usage("cannot embed between different n"));
        }
        let mut map = vec![None; src.nslots()];
        for i in 0..src.nslots() {
            map[i] = if src.is_xd(i) {
                Some(i)
            } else if Some(i) == src.t() {
                target.t()
            } else if Some(i) == src.dt() {
                target.dt()
            } else if Some(i) == src.y1() {
                target.y1()
            } else if Some(i) == src.y2() {
                target.y2()
            } else {
                target.s()
            };
        }
        let mut terms = Vec::with_capacity(self.nterms());
        for t in self.poly.terms() {
            let mut m = Mono::ONE;
            for (i, slot) in map.iter().enumerate() {
                let e = t.m.exp(i);
                if e == 0 {
                    continue;
                }
                match slot {
                    Some(j) => m.set(*j, e),
                    None => {
                        return Err(Error::usage(format!(
                            "variable {} has no counterpart in target ring",
                            src.slot_name(i)
                        )))
                    }
                }
            }
            terms.push((t.c.clone(), m));
        }
        Ok(Operator::from_terms(target, terms))
    }

    /// Formal partial derivative of the coefficients in `x_i`
    /// (meaningful for operators without `d_i`).
    pub fn partial_x(&self, i: usize) -> Operator {
        let slot = self.ring.x(i);
        let terms = self
            .poly
            .terms()
            .iter()
            .filter(|t| t.m.exp(slot) > 0)
            .map(|t| {
                let e = t.m.exp(slot);
                let mut m = t.m;
                m.set(slot, e - 1);
                (t.c.clone() * Rat::from_integer(BigInt::from(e)), m)
            })
            .collect();
        Operator::from_terms(self.ring, terms)
    }

    /// Weight of every term under `w(t) = w(y1) = 1`, `w(dt) = w(y2) = -1`.
    pub fn weights(&self) -> Vec<i32> {
        self.poly
            .terms()
            .iter()
            .map(|t| self.ring.weight(&t.m))
            .collect()
    }

    /// The common weight of a `w`-homogeneous operator.
    pub fn homogeneous_weight(&self) -> Option<i32> {
        let ws = self.weights();
        let first = *ws.first()?;
        ws.iter().all(|&w| w == first).then_some(first)
    }

    /// The automorphism `x -> x, t -> t - f, d_i -> d_i + (df/dx_i) dt,
    /// dt -> dt` of `A_{n+1}`.
    pub fn malgrange_automorphism(&self, f: &Operator) -> Result<Operator> {
        let ring = self.ring;
        if !ring.has_t() {
            return Err(Error::usage("Malgrange automorphism needs a ring with t"));
        }
        if !f.is_pure_x() {
            return Err(Error::usage("f must be a polynomial in x"));
        }
        let n = ring.n();
        let f_here = f.embed(ring)?;
        let dt = Operator::dt(ring);
        let t_img = Operator::t(ring).sub(&f_here)?;
        let d_img: Vec<Operator> = (0..n)
            .map(|i| {
                let fi = f.partial_x(i).embed(ring).unwrap();
                Operator::d(ring, i).add(&fi.multiply(&dt).unwrap()).unwrap()
            })
            .collect();
        let mut t_pows: HashMap<u32, Operator> = HashMap::new();
        let mut d_pows: HashMap<(usize, u32), Operator> = HashMap::new();
        let tslot = ring.t().unwrap();
        let mut acc: Vec<Term<Rat>> = Vec::new();
        let ord = self.ord();
        for term in self.poly.terms() {
            // x^a y^g (central part) * (t - f)^k * prod (d_i + f_i dt)^b_i * dt^l
            let mut head = term.m;
            let k = head.exp(tslot);
            head.set(tslot, 0);
            head.set(tslot + 1, 0);
            for i in 0..n {
                head.set(ring.d(i), 0);
            }
            let mut p = Operator {
                ring,
                poly: Poly::monomial(term.c.clone(), head, 0),
            };
            if k > 0 {
                let tp = t_pows
                    .entry(k)
                    .or_insert_with(|| t_img.pow(k))
                    .clone();
                p = p.multiply(&tp)?;
            }
            for i in 0..n {
                let b = term.m.exp(ring.d(i));
                if b > 0 {
                    let dp = d_pows
                        .entry((i, b))
                        .or_insert_with(|| d_img[i].pow(b))
                        .clone();
                    p = p.multiply(&dp)?;
                }
            }
            let l = term.m.exp(tslot + 1);
            if l > 0 {
                p = p.multiply(&dt.pow(l))?;
            }
            acc.extend(p.poly.into_terms());
        }
        Ok(Operator {
            ring,
            poly: Poly::from_terms(acc, &ord),
        })
    }

    /// `y1`-homogenization: each term `P_i` becomes `P_i * y1^(w_max - w(P_i))`.
    pub fn homogenize_y1(&self) -> Result<Operator> {
        let ring = self.ring;
        let y1 = ring
            .y1()
            .ok_or_else(|| Error::usage("homogenization needs a ring with y"))?;
        if !ring.has_t() {
            return Err(Error::usage("homogenization needs a ring with t"));
        }
        let ws = self.weights();
        let Some(&wmax) = ws.iter().max() else {
            return Ok(self.clone());
        };
        let terms = self
            .poly
            .terms()
            .iter()
            .zip(ws)
            .map(|(t, w)| {
                let mut m = t.m;
                m.set(y1, m.exp(y1) + (wmax - w) as u32);
                (t.c.clone(), m)
            })
            .collect();
        Ok(Operator::from_terms(ring, terms))
    }

    /// Rewrite a weight-0, `y`-free element of `A_{n+1}` into `A_n[s]`
    /// using `-dt t = s` (so `t dt = -s - 1`).
    pub fn rewrite_in_s(&self) -> Result<Operator> {
        let ring = self.ring;
        let Some(tslot) = ring.t() else {
            return Err(Error::usage("rewrite_in_s needs a ring with t"));
        };
        let target = Ring::with_s(ring.n());
        let sslot = target.s().unwrap();
        let s = Operator::s(target);
        let tdt = s.neg().sub(&Operator::one(target))?;
        // (t dt)^[k] := t^k dt^k = prod_{j<k} (t dt - j)
        let mut blocks: Vec<Operator> = vec![Operator::one(target)];
        let mut acc: Vec<(Rat, Mono)> = Vec::new();
        for term in self.poly.terms() {
            let k = term.m.exp(tslot);
            if k != term.m.exp(tslot + 1) {
                return Err(Error::usage("rewrite_in_s: operator is not of weight 0"));
            }
            if let Some(y) = ring.y1() {
                if term.m.exp(y) + term.m.exp(y + 1) > 0 {
                    return Err(Error::usage("rewrite_in_s: operator contains y"));
                }
            }
            while blocks.len() <= k as usize {
                let j = blocks.len() as i64 - 1;
                let next = blocks
                    .last()
                    .unwrap()
                    .multiply(&tdt.sub(&Operator::from_int(target, j))?)?;
                blocks.push(next);
            }
            let mut base = Mono::ONE;
            for i in 0..2 * ring.n() {
                base.set(i, term.m.exp(i));
            }
            for (c, m) in blocks[k as usize].terms() {
                let mut mm = base;
                mm.set(sslot, m.exp(sslot));
                acc.push((c.clone() * term.c.clone(), mm));
            }
        }
        Ok(Operator::from_terms(target, acc))
    }

    /// Evaluate the central variable `s` at an integer.
    pub fn substitute_s(&self, a: i64) -> Operator {
        let ring = self.ring;
        let Some(sslot) = ring.s() else {
            return self.clone();
        };
        let target = ring.without_s();
        let av = Rat::from_integer(BigInt::from(a));
        let terms = self
            .poly
            .terms()
            .iter()
            .map(|t| {
                let e = t.m.exp(sslot);
                let mut m = t.m;
                m.set(sslot, 0);
                let mut c = t.c.clone();
                for _ in 0..e {
                    c *= &av;
                }
                (c, m)
            })
            .collect();
        Operator::from_terms(target, terms)
    }

    /// Render with user names for `x_i`; derivatives print as `d<name>`.
    pub fn render(&self, names: &[String]) -> String {
        render_terms(self.ring, self.poly.terms(), names)
    }

    /// Univariate coefficients if the operator lies in `Q[s]`.
    pub fn as_s_polynomial(&self) -> Option<Vec<Rat>> {
        let sslot = self.ring.s()?;
        let mut coeffs: Vec<Rat> = Vec::new();
        for t in self.poly.terms() {
            if t.m.deg() != t.m.exp(sslot) {
                return None;
            }
            let e = t.m.exp(sslot) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, <Rat as Zero>::zero());
            }
            coeffs[e] = t.c.clone();
        }
        Some(coeffs)
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub(crate) fn slot_label(ring: Ring, slot: usize, names: &[String]) -> String {
    let n = ring.n();
    if slot < n {
        names[slot].clone()
    } else if slot < 2 * n {
        format!("d{}", names[slot - n])
    } else {
        ring.slot_name(slot)
    }
}

pub(crate) fn render_mono(ring: Ring, m: &Mono, names: &[String]) -> String {
    let mut parts = Vec::new();
    // x, t, y, s first then derivatives: normal order
    let mut order: Vec<usize> = (0..ring.n()).collect();
    order.extend(ring.t());
    order.extend(ring.y1());
    order.extend(ring.y2());
    order.extend(ring.s());
    order.extend((0..ring.n()).map(|i| ring.d(i)));
    order.extend(ring.dt());
    for slot in order {
        let e = m.exp(slot);
        if e == 0 {
            continue;
        }
        let v = slot_label(ring, slot, names);
        if e == 1 {
            parts.push(v);
        } else {
            parts.push(format!("{v}^{e}"));
        }
    }
    parts.join("*")
}

pub(crate) fn render_terms<C: Coef>(ring: Ring, terms: &[Term<C>], names: &[String]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let neg = t.c.is_negative();
        let abs = if neg { t.c.neg() } else { t.c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let ms = render_mono(ring, &t.m, names);
        let cs = abs.to_string();
        if ms.is_empty() {
            out.push_str(&cs);
        } else if cs == "1" {
            out.push_str(&ms);
        } else {
            out.push_str(&cs);
            out.push('*');
            out.push_str(&ms);
        }
    }
    out
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.ring.n())))
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({})", self)
    }
}

/// Primitive integer polynomial with positive leading coefficient; the
/// canonical stand-in for a localizing polynomial (localizing at `c f` and
/// at `f` agree).
pub fn primitive_polynomial(f: &Operator) -> Operator {
    let ord = Order::degrevlex(f.ring());
    let p = f.to_primitive_int(&ord);
    Operator::from_int_poly(f.ring(), &p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Operator {
        Operator::x(Ring::weyl(n), i)
    }
    fn d(n: usize, i: usize) -> Operator {
        Operator::d(Ring::weyl(n), i)
    }

    #[test]
    fn commutator() {
        let p = d(1, 0).multiply(&x(1, 0)).unwrap();
        let expect = x(1, 0).multiply(&d(1, 0)).unwrap().add(&Operator::one(Ring::weyl(1))).unwrap();
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "x1*dx1 + 1");
    }

    #[test]
    fn d2_x2() {
        let p = d(1, 0).pow(2).multiply(&x(1, 0).pow(2)).unwrap();
        assert_eq!(p.to_string(), "x1^2*dx1^2 + 4*x1*dx1 + 2");
    }

    #[test]
    fn mismatch_is_usage_error() {
        let e = x(1, 0).multiply(&x(2, 0)).unwrap_err();
        assert!(matches!(e, Error::Usage(_)));
    }

    #[test]
    fn right_multiply_cases() {
        let xd = x(1, 0).multiply(&d(1, 0)).unwrap();
        assert_eq!(xd.right_multiply(&x(1, 0)).unwrap().to_string(), "x1^2*dx1 + x1");
        assert_eq!(d(1, 0).right_multiply(&x(1, 0)).unwrap().to_string(), "x1*dx1 + 1");
        assert_eq!(xd.right_multiply(&Operator::one(Ring::weyl(1))).unwrap(), xd);
        assert!(xd.right_multiply(&d(1, 0)).is_err());
    }

    #[test]
    fn malgrange_images() {
        let r = Ring::with_t(1);
        let f = x(1, 0);
        let phi = |p: &Operator| p.malgrange_automorphism(&f).unwrap().to_string();
        assert_eq!(phi(&Operator::t(r)), "-x1 + t");
        assert_eq!(phi(&Operator::d(r, 0)), "dx1 + dt");
        assert_eq!(phi(&Operator::x(r, 0)), "x1");
        assert_eq!(phi(&Operator::dt(r)), "dt");
    }

    #[test]
    fn homogenize_examples() {
        let r = Ring::with_t_y(1);
        let p = Operator::t(r).sub(&Operator::x(r, 0)).unwrap();
        assert_eq!(p.homogenize_y1().unwrap().to_string(), "-x1*y1 + t");
        let q = Operator::d(r, 0).add(&Operator::dt(r)).unwrap();
        let h = q.homogenize_y1().unwrap();
        // weights 0 and -1: the dt term receives y1
        assert_eq!(h.to_string(), "y1*dt + dx1");
        assert_eq!(h.homogeneous_weight(), Some(0));
        let hom = Operator::t(r).multiply(&Operator::dt(r)).unwrap();
        assert_eq!(hom.homogenize_y1().unwrap(), hom);
    }

    #[test]
    fn rewrite_examples() {
        let r = Ring::with_t(1);
        let dtt = Operator::dt(r).multiply(&Operator::t(r)).unwrap().neg();
        assert_eq!(dtt.rewrite_in_s().unwrap().to_string(), "s");
        let tdt = Operator::t(r).multiply(&Operator::dt(r)).unwrap();
        assert_eq!(tdt.rewrite_in_s().unwrap().to_string(), "-s - 1");
        let xd = Operator::x(r, 0).multiply(&Operator::d(r, 0)).unwrap();
        assert_eq!(xd.rewrite_in_s().unwrap().to_string(), "x1*dx1");
        assert!(Operator::t(r).rewrite_in_s().is_err());
    }

    #[test]
    fn substitute_examples() {
        let r = Ring::with_s(1);
        let p = Operator::x(r, 0)
            .multiply(&Operator::d(r, 0))
            .unwrap()
            .sub(&Operator::s(r))
            .unwrap();
        assert_eq!(p.substitute_s(-1).to_string(), "x1*dx1 + 1");
        let q = Operator::s(r).pow(2).add(&Operator::s(r)).unwrap();
        assert!(q.substitute_s(-1).is_zero());
        let free = Operator::x(r, 0);
        assert_eq!(free.substitute_s(5), x(1, 0));
    }

    #[test]
    fn leading_terms() {
        let r = Ring::weyl(1);
        let p = x(1, 0).multiply(&d(1, 0)).unwrap().add(&Operator::one(r)).unwrap();
        let (_, m) = p.leading_term(&Order::degrevlex(r)).unwrap();
        assert_eq!(m, Mono::from_exps(&[1, 1]));
        assert!(Operator::zero(r).leading_term(&Order::degrevlex(r)).is_err());
        let ry = Ring::with_t_y(1);
        let q = Operator::t(ry)
            .sub(&Operator::y1(ry).multiply(&Operator::x(ry, 0)).unwrap())
            .unwrap();
        let (_, m) = q.leading_term(&Order::eliminate_y(ry)).unwrap();
        assert_eq!(m, Mono::from_exps(&[1, 0, 0, 0, 1, 0]));
    }
}
