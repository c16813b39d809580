//! Symbolic action of `A_n[s]` on expressions `g(x, s) * f^s`.
//!
//! Used as an independent oracle: `P` lies in the annihilator of `f^s`
//! exactly when applying it to `f^s` yields zero.

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::weyl::Operator;

/// The expression `num(x, s) * f^(s - k)`.
#[derive(Clone, Debug)]
pub struct FsExpr {
    num: Operator,
    k: u32,
}

impl FsExpr {
    /// `num * f^(s - k)`; `num` must be a polynomial in `x` (and `s`).
    pub fn new(num: &Operator, k: u32) -> Result<FsExpr> {
        let ring = Ring::with_s(num.ring().n());
        let num = num.embed(ring)?;
        if !num.is_x_polynomial() {
            return Err(Error::usage("coefficient must be free of derivatives"));
        }
        Ok(FsExpr { num, k })
    }

    /// `f^s` itself.
    pub fn fs(n: usize) -> FsExpr {
        FsExpr {
            num: Operator::one(Ring::with_s(n)),
            k: 0,
        }
    }

    pub fn numerator(&self) -> &Operator {
        &self.num
    }

    pub fn denominator_power(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact equality of the represented functions.
    pub fn same_value(&self, o: &FsExpr, f: &Operator) -> Result<bool> {
        let fs = f.embed(self.num.ring())?;
        let (a, b) = if self.k >= o.k {
            (self.num.clone(), o.num.multiply(&fs.pow(self.k - o.k))?)
        } else {
            (self.num.multiply(&fs.pow(o.k - self.k))?, o.num.clone())
        };
        Ok(a == b)
    }

    /// Evaluate `s` at an integer; the result is `num(x, a) * f^(a - k)`
    /// returned as `(num(x, a), k)`.
    pub fn at_s(&self, a: i64) -> (Operator, u32) {
        (self.num.substitute_s(a), self.k)
    }
}

/// Apply `p` (in `A_n` or `A_n[s]`) to `g * f^s`.
pub fn apply_to_fs(p: &Operator, g: &FsExpr, f: &Operator) -> Result<FsExpr> {
    let n = p.ring().n();
    let ring = Ring::with_s(n);
    if p.ring().has_t() || p.ring().has_y() {
        return Err(Error::usage("apply_to_fs acts with elements of A_n[s]"));
    }
    if !f.is_pure_x() {
        return Err(Error::usage("f must be a polynomial in x"));
    }
    if f.is_zero() {
        return Err(Error::usage("f must be nonzero"));
    }
    let p = p.embed(ring)?;
    let f = f.embed(ring)?;
    let partials: Vec<Operator> = (0..n).map(|i| f.partial_x(i)).collect();
    let s = Operator::s(ring);

    let mut pieces: Vec<FsExpr> = Vec::new();
    for (c, m) in p.terms() {
        let mut cur = g.clone();
        for i in 0..n {
            for _ in 0..m.exp(ring.d(i)) {
                cur = derive(&cur, i, &f, &partials[i], &s)?;
            }
        }
        let mut head = *m;
        for i in 0..n {
            head.set(ring.d(i), 0);
        }
        let mult = Operator::from_terms(ring, vec![(c.clone(), head)]);
        cur.num = mult.multiply(&cur.num)?;
        pieces.push(cur);
    }
    let kmax = pieces.iter().map(|e| e.k).max().unwrap_or(g.k);
    let mut num = Operator::zero(ring);
    for e in pieces {
        let lifted = e.num.multiply(&f.pow(kmax - e.k))?;
        num = num.add(&lifted)?;
    }
    Ok(FsExpr { num, k: kmax })
}

/// `d_i (N f^(s-k)) = (f d_i N + (s - k) f_i N) f^(s-k-1)`.
fn derive(e: &FsExpr, i: usize, f: &Operator, fi: &Operator, s: &Operator) -> Result<FsExpr> {
    let ring = e.num.ring();
    let dn = e.num.partial_x(i);
    let sk = s.sub(&Operator::from_int(ring, e.k as i64))?;
    let num = f
        .multiply(&dn)?
        .add(&sk.multiply(fi)?.multiply(&e.num)?)?;
    Ok(FsExpr { num, k: e.k + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rs(n: usize) -> Ring {
        Ring::with_s(n)
    }

    #[test]
    fn euler_kills_x_to_s() {
        let r = rs(1);
        let x = Operator::x(r, 0);
        let p = x.multiply(&Operator::d(r, 0)).unwrap().sub(&Operator::s(r)).unwrap();
        let out = apply_to_fs(&p, &FsExpr::fs(1), &x).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn identity_action() {
        let r = rs(2);
        let f = Operator::x(r, 0).pow(2).add(&Operator::x(r, 1).pow(2)).unwrap();
        let out = apply_to_fs(&Operator::one(r), &FsExpr::fs(2), &f).unwrap();
        assert!(out.same_value(&FsExpr::fs(2), &f).unwrap());
    }

    #[test]
    fn chain_rule() {
        let r = rs(2);
        let f = Operator::x(r, 0).pow(2).add(&Operator::x(r, 1).pow(2)).unwrap();
        let out = apply_to_fs(&Operator::d(r, 0), &FsExpr::fs(2), &f).unwrap();
        // 2 s x1 f^(s-1)
        let expect = FsExpr::new(
            &Operator::s(r).multiply(&Operator::x(r, 0)).unwrap().scale(&BigRational::from_integer(BigInt::from(2))),
            1,
        )
        .unwrap();
        assert!(out.same_value(&expect, &f).unwrap());
    }

    #[test]
    fn rejects_zero_f() {
        let r = rs(1);
        assert!(apply_to_fs(&Operator::one(r), &FsExpr::fs(1), &Operator::zero(r)).is_err());
    }
}
