//! Monomial orders on Weyl-type rings and term-then-position module orders.
//!
//! Every order here makes `v * dv` larger than `1` for each conjugate pair,
//! so the leading monomial of a product is the product of leading monomials.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Mono, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Total degree, ties broken reverse-lexicographically on the slot
    /// sequence `x_1..x_n, d_1..d_n, t, dt, y1, y2, s`.
    DegRevLex,
    /// y-degree first (eliminates `y1, y2`), then `DegRevLex`.
    EliminateY,
    /// `DegRevLex` on the `(x, d)` block first, then the degree in `s`.
    EliminateXD,
    /// Weighted degree first (non-negative integer weights per slot), then
    /// `DegRevLex`.
    Weighted(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Order {
    ring: Ring,
    kind: OrderKind,
    // positions at or above `split` form a block below every position
    // under it (used for tracking expressions as extra components)
    split: u32,
}

impl Order {
    pub fn new(ring: Ring, kind: OrderKind) -> Result<Order> {
        match &kind {
            OrderKind::EliminateY if !ring.has_y() => {
                return Err(Error::usage("y-elimination order on a ring without y"))
            }
            OrderKind::EliminateXD if !ring.has_s() => {
                return Err(Error::usage("(x,d)-elimination order on a ring without s"))
            }
            OrderKind::Weighted(w) => {
                if w.len() != ring.nslots() {
                    return Err(Error::usage(format!(
                        "weight vector has {} entries, ring has {} variables",
                        w.len(),
                        ring.nslots()
                    )));
                }
            }
            _ => {}
        }
        Ok(Order { ring, kind, split: u32::MAX })
    }

    pub fn degrevlex(ring: Ring) -> Order {
        Order {
            ring,
            kind: OrderKind::DegRevLex,
            split: u32::MAX,
        }
    }

    pub fn eliminate_y(ring: Ring) -> Order {
        Order::new(ring, OrderKind::EliminateY).unwrap()
    }

    pub fn eliminate_xd(ring: Ring) -> Order {
        Order::new(ring, OrderKind::EliminateXD).unwrap()
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    /// Stable identifier used in cache keys.
    pub fn id(&self) -> String {
        match &self.kind {
            OrderKind::DegRevLex => "degrevlex".into(),
            OrderKind::EliminateY => "elim-y".into(),
            OrderKind::EliminateXD => "elim-xd".into(),
            OrderKind::Weighted(w) => format!(
                "weighted[{}]",
                w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }

    /// Same kind of order on another ring (weights are not transferable).
    pub fn on(&self, ring: Ring) -> Order {
        let kind = match &self.kind {
            OrderKind::Weighted(_) => OrderKind::DegRevLex,
            k => k.clone(),
        };
        Order { ring, kind, split: self.split }
    }

    /// This order with positions `>= split` ranked below all others.
    pub fn with_split(&self, split: u32) -> Order {
        Order { ring: self.ring, kind: self.kind.clone(), split }
    }

    /// The same order without a position split.
    pub fn unsplit(&self) -> Order {
        self.with_split(u32::MAX)
    }

    #[inline]
    pub fn split(&self) -> u32 {
        self.split
    }

    #[inline]
    fn revlex(&self, a: &Mono, b: &Mono, upto: usize) -> Ordering {
        for i in (0..upto).rev() {
            if a.e[i] != b.e[i] {
                return b.e[i].cmp(&a.e[i]);
            }
        }
        Ordering::Equal
    }

    #[inline]
    fn drl(&self, a: &Mono, b: &Mono) -> Ordering {
        a.deg
            .cmp(&b.deg)
            .then_with(|| self.revlex(a, b, self.ring.nslots()))
    }

    /// Compare two monomials.
    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match &self.kind {
            OrderKind::DegRevLex => self.drl(a, b),
            OrderKind::EliminateY => {
                let y = self.ring.y1().unwrap();
                let ya = a.e[y] as u16 + a.e[y + 1] as u16;
                let yb = b.e[y] as u16 + b.e[y + 1] as u16;
                ya.cmp(&yb).then_with(|| self.drl(a, b))
            }
            OrderKind::EliminateXD => {
                let s = self.ring.s().unwrap();
                let xa = a.deg - a.e[s] as u16;
                let xb = b.deg - b.e[s] as u16;
                xa.cmp(&xb)
                    .then_with(|| self.revlex(a, b, 2 * self.ring.n()))
                    .then_with(|| a.e[s].cmp(&b.e[s]))
            }
            OrderKind::Weighted(w) => {
                let wa: u64 = w.iter().zip(a.e.iter()).map(|(w, e)| *w as u64 * *e as u64).sum();
                let wb: u64 = w.iter().zip(b.e.iter()).map(|(w, e)| *w as u64 * *e as u64).sum();
                wa.cmp(&wb).then_with(|| self.drl(a, b))
            }
        }
    }

    /// Module order: monomial first, then the larger position wins. With a
    /// split, positions below the split dominate those above it.
    #[inline]
    pub fn cmp_term(&self, a: &Mono, apos: u32, b: &Mono, bpos: u32) -> Ordering {
        let (ah, bh) = (apos >= self.split, bpos >= self.split);
        if ah != bh {
            return if ah { Ordering::Less } else { Ordering::Greater };
        }
        self.cmp(a, b).then_with(|| apos.cmp(&bpos))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}
