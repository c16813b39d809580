//! Annihilators of `f^s`, Bernstein polynomials and their integer roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::{GbOptions, GroebnerBasis};
use crate::order::Order;
use crate::poly::Rat;
use crate::ring::Ring;
use crate::weyl::Operator;

/// Generators `d_1, ..., d_n` of the ideal `L` with `A_n / L = R`.
pub fn delta(n: usize) -> Vec<Operator> {
    let r = Ring::weyl(n);
    (0..n).map(|i| Operator::d(r, i)).collect()
}

fn check_input(f: &Operator, l: &[Operator]) -> Result<Ring> {
    let r = f.ring();
    if r.has_t() || r.has_y() || r.has_s() || !f.is_pure_x() {
        return Err(Error::usage("f must be a polynomial in A_n"));
    }
    if f.is_zero() {
        return Err(Error::usage("f must be nonzero"));
    }
    if let Some(p) = l.iter().find(|p| p.ring() != r) {
        return Err(Error::usage(format!("generator {p} of L lives in a different ring than f")));
    }
    Ok(r)
}

/// Generators of `J^L_{n+1}(f^s)`: `t - f` and the images of `L` under
/// the Malgrange automorphism. `L` must be `f`-saturated (not checked).
pub fn malgrange_ideal(f: &Operator, l: &[Operator]) -> Result<Vec<Operator>> {
    let r = check_input(f, l)?;
    let rt = Ring::with_t(r.n());
    let ft = f.embed(rt)?;
    let mut out = vec![Operator::t(rt).sub(&ft)?];
    for p in l {
        out.push(p.embed(rt)?.malgrange_automorphism(f)?);
    }
    Ok(out)
}

/// `J^L(f^s)`, the annihilator of `f^s (x) 1` in `A_n[s]`.
#[derive(Clone, Debug)]
pub struct AnnihilatorFs {
    pub f: Operator,
    pub l: Vec<Operator>,
    /// Generators in `A_n[s]`.
    pub gens: Vec<Operator>,
}

/// Oaku's elimination: y1-homogenize the Malgrange generators, eliminate
/// `y1, y2` from `(..., 1 - y1 y2)`, keep the y-free elements, shift them
/// to weight zero and rewrite in `s`.
pub fn annihilator_fs(f: &Operator, l: &[Operator], opts: &GbOptions) -> Result<AnnihilatorFs> {
    let r = check_input(f, l)?;
    let n = r.n();
    let rs = Ring::with_s(n);
    if f.is_constant() {
        let gens = l.iter().map(|p| p.embed(rs)).collect::<Result<Vec<_>>>()?;
        return Ok(AnnihilatorFs { f: f.clone(), l: l.to_vec(), gens });
    }
    let ry = Ring::with_t_y(n);
    let mut gens: Vec<Operator> = Vec::new();
    for q in malgrange_ideal(f, l)? {
        gens.push(q.embed(ry)?.homogenize_y1()?);
    }
    let y1y2 = Operator::y1(ry).multiply(&Operator::y2(ry))?;
    gens.push(Operator::one(ry).sub(&y1y2)?);

    let ord = Order::eliminate_y(ry);
    let vs: Vec<_> = gens.iter().map(|g| g.to_primitive_int(&ord)).collect();
    let gb = GroebnerBasis::compute_with(&vs, &ord, opts)?;
    let (y1, y2) = (ry.y1().unwrap(), ry.y2().unwrap());
    let rt = Ring::with_t(n);
    let mut out: Vec<Operator> = Vec::new();
    for v in gb.elements() {
        if !v.avoids(&[y1, y2]) {
            continue;
        }
        let p = Operator::from_int_poly(ry, v).embed(rt)?;
        let w = p
            .homogeneous_weight()
            .ok_or_else(|| Error::invariant(format!("basis element {p} is not weight homogeneous")))?;
        let shifted = match w.cmp(&0) {
            std::cmp::Ordering::Greater => Operator::dt(rt).pow(w as u32).multiply(&p)?,
            std::cmp::Ordering::Less => Operator::t(rt).pow((-w) as u32).multiply(&p)?,
            std::cmp::Ordering::Equal => p,
        };
        out.push(shifted.rewrite_in_s()?);
    }
    Ok(AnnihilatorFs { f: f.clone(), l: l.to_vec(), gens: out })
}

/// `b_f^L(s)` together with its integer roots.
#[derive(Clone, Debug, PartialEq)]
pub struct BernsteinData {
    /// Coefficients from `s^0` upwards; monic.
    pub b: Vec<Rat>,
    pub min_int_root: Option<i64>,
    /// Distinct integer roots, increasing.
    pub int_roots: Vec<i64>,
}

impl BernsteinData {
    /// From monic coefficients, lowest degree first.
    pub fn new(b: Vec<Rat>) -> BernsteinData {
        let int_roots = integer_roots(&b);
        BernsteinData {
            min_int_root: int_roots.first().copied(),
            b,
            int_roots,
        }
    }

    pub fn degree(&self) -> usize {
        self.b.len() - 1
    }

    /// `b` as an operator in `A_n[s]`.
    pub fn to_operator(&self, n: usize) -> Operator {
        let r = Ring::with_s(n);
        let s = r.s().unwrap();
        let terms = self
            .b
            .iter()
            .enumerate()
            .map(|(e, c)| (c.clone(), crate::ring::Mono::var(s, e as u32)))
            .collect();
        Operator::from_terms(r, terms)
    }

    /// Text form in the variable `s`, highest power first.
    pub fn render(&self) -> String {
        self.to_operator(0).to_string()
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, s: &Rat) -> Rat {
        eval(&self.b, s)
    }
}

fn eval(b: &[Rat], s: &Rat) -> Rat {
    b.iter().rev().fold(Rat::zero(), |acc, c| acc * s + c)
}

/// The Bernstein polynomial from a known annihilator: the monic
/// generator of `(J + A_n[s] f) cap Q[s]`.
pub fn bernstein_from_annihilator(ann: &AnnihilatorFs, opts: &GbOptions) -> Result<BernsteinData> {
    let n = ann.f.ring().n();
    let rs = Ring::with_s(n);
    if ann.f.is_constant() {
        return Ok(BernsteinData::new(vec![Rat::one()]));
    }
    let ord = Order::eliminate_xd(rs);
    let mut vs: Vec<_> = ann.gens.iter().map(|g| g.to_primitive_int(&ord)).collect();
    vs.push(ann.f.embed(rs)?.to_primitive_int(&ord));
    let gb = GroebnerBasis::compute_with(&vs, &ord, opts)?;
    let pure: Vec<Vec<Rat>> = gb
        .elements()
        .iter()
        .filter_map(|v| Operator::from_int_poly(rs, v).as_s_polynomial())
        .collect();
    match pure.as_slice() {
        [b] => {
            let lc = b.last().unwrap().clone();
            Ok(BernsteinData::new(b.iter().map(|c| c / &lc).collect()))
        }
        [] => Err(Error::precondition(
            "Bernstein polynomial not found: holonomicity precondition violated",
        )),
        _ => Err(Error::invariant("reduced basis has several elements in Q[s]")),
    }
}

/// `b_f^L(s)` for holonomic, `f`-saturated `L`.
pub fn bernstein_polynomial(f: &Operator, l: &[Operator], opts: &GbOptions) -> Result<BernsteinData> {
    let ann = annihilator_fs(f, l, opts)?;
    bernstein_from_annihilator(&ann, opts)
}

/// Smallest integer root of `b`, if any.
pub fn min_integer_root(b: &BernsteinData) -> Option<i64> {
    b.min_int_root
}

/// The root bound `B = max_i |b_i|^(1 / (d - i))` for monic `b`.
pub fn root_bound(b: &[Rat]) -> f64 {
    let d = b.len() - 1;
    (0..d)
        .map(|i| {
            let c = b[i].abs();
            let v = c.numer().to_f64().unwrap_or(f64::MAX) / c.denom().to_f64().unwrap_or(1.0);
            v.powf(1.0 / (d - i) as f64)
        })
        .fold(0.0, f64::max)
}

/// Integer roots by the rational root theorem on the primitive integer
/// form; every candidate also lies within `[-2B, 2B]`.
pub fn integer_roots(b: &[Rat]) -> Vec<i64> {
    if b.len() <= 1 {
        return Vec::new();
    }
    let den = b.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = b.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(0);
    }
    let a0 = ints[low].abs();
    let bound = (2.0 * root_bound(b)).ceil().min(1e12) as i64 + 1;
    let limit = a0.to_i64().map_or(bound, |v| v.min(bound));
    for r in 1..=limit {
        if !(&a0 % BigInt::from(r)).is_zero() {
            continue;
        }
        for cand in [-r, r] {
            let v = ints[low..]
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * BigInt::from(cand) + c);
            if v.is_zero() {
                roots.push(cand);
            }
        }
    }
    roots.sort_unstable();
    roots
}
