//! Ring descriptors and exponent vectors for the Weyl algebra family
//! `A_n`, `A_{n+1} = A_n<t, dt>`, `A_{n+1}[y1, y2]` and `A_n[s]`.
//!
//! Variables are stored in a fixed slot layout: `x_1..x_n`, `d_1..d_n`,
//! then `t, dt` (if present), `y1, y2` (if present) and `s` (if present).
//! A monomial always denotes the normally ordered product
//! `x^a t^k y^g s^e d^b dt^l`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest number of variable slots a monomial can carry.
pub const MAX_SLOTS: usize = 30;

/// Which variables a ring has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    n: u8,
    has_t: bool,
    has_y: bool,
    has_s: bool,
}

impl Ring {
    pub fn new(n: usize, has_t: bool, has_y: bool, has_s: bool) -> Result<Ring> {
        if has_t && has_s {
            return Err(Error::usage("a ring cannot carry both t and s"));
        }
        let r = Ring {
            n: n as u8,
            has_t,
            has_y,
            has_s,
        };
        if n > 12 || r.nslots() > MAX_SLOTS {
            return Err(Error::usage(format!("too many variables (n = {n})")));
        }
        Ok(r)
    }

    /// The Weyl algebra `A_n`.
    pub fn weyl(n: usize) -> Ring {
        Ring::new(n, false, false, false).expect("n too large")
    }

    /// `A_{n+1} = A_n<t, dt>`.
    pub fn with_t(n: usize) -> Ring {
        Ring::new(n, true, false, false).expect("n too large")
    }

    /// `A_{n+1}[y1, y2]`, the ring used for the homogenized elimination.
    pub fn with_t_y(n: usize) -> Ring {
        Ring::new(n, true, true, false).expect("n too large")
    }

    /// `A_n[s]` with `s` central.
    pub fn with_s(n: usize) -> Ring {
        Ring::new(n, false, false, true).expect("n too large")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }
    #[inline]
    pub fn has_t(&self) -> bool {
        self.has_t
    }
    #[inline]
    pub fn has_y(&self) -> bool {
        self.has_y
    }
    #[inline]
    pub fn has_s(&self) -> bool {
        self.has_s
    }

    #[inline]
    pub fn nslots(&self) -> usize {
        2 * self.n() + 2 * self.has_t as usize + 2 * self.has_y as usize + self.has_s as usize
    }

    #[inline]
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(i < self.n());
        i
    }
    #[inline]
    pub fn d(&self, i: usize) -> usize {
        debug_assert!(i < self.n());
        self.n() + i
    }
    #[inline]
    pub fn t(&self) -> Option<usize> {
        self.has_t.then(|| 2 * self.n())
    }
    #[inline]
    pub fn dt(&self) -> Option<usize> {
        self.has_t.then(|| 2 * self.n() + 1)
    }
    #[inline]
    pub fn y1(&self) -> Option<usize> {
        self.has_y
            .then(|| 2 * self.n() + 2 * self.has_t as usize)
    }
    #[inline]
    pub fn y2(&self) -> Option<usize> {
        self.y1().map(|p| p + 1)
    }
    #[inline]
    pub fn s(&self) -> Option<usize> {
        self.has_s.then(|| self.nslots() - 1)
    }

    /// Conjugate pairs `(v, dv)` obeying `dv v = v dv + 1`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n)
            .map(move |i| (i, n + i))
            .chain(self.t().map(|t| (t, t + 1)))
    }

    pub fn npairs(&self) -> usize {
        self.n() + self.has_t as usize
    }

    /// Whether a slot belongs to the (x, d) block.
    #[inline]
    pub fn is_xd(&self, slot: usize) -> bool {
        slot < 2 * self.n()
    }

    /// Same ring with the `s` variable removed.
    pub fn without_s(&self) -> Ring {
        Ring { has_s: false, ..*self }
    }

    pub fn slot_name(&self, slot: usize) -> String {
        let n = self.n();
        if slot < n {
            format!("x{}", slot + 1)
        } else if slot < 2 * n {
            format!("dx{}", slot - n + 1)
        } else if Some(slot) == self.t() {
            "t".into()
        } else if Some(slot) == self.dt() {
            "dt".into()
        } else if Some(slot) == self.y1() {
            "y1".into()
        } else if Some(slot) == self.y2() {
            "y2".into()
        } else if Some(slot) == self.s() {
            "s".into()
        } else {
            format!("?{}", slot)
        }
    }

    /// Weight `w(t) = w(y1) = 1`, `w(dt) = w(y2) = -1`, all others 0.
    #[inline]
    pub fn weight(&self, m: &Mono) -> i32 {
        let mut w = 0i32;
        if let Some(t) = self.t() {
            w += m.e[t] as i32 - m.e[t + 1] as i32;
        }
        if let Some(y) = self.y1() {
            w += m.e[y] as i32 - m.e[y + 1] as i32;
        }
        w
    }
}

/// Exponent vector in the slot layout of some `Ring`, with cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    pub(crate) e: [u8; MAX_SLOTS],
    pub(crate) deg: u16,
}

impl Mono {
    pub const ONE: Mono = Mono {
        e: [0; MAX_SLOTS],
        deg: 0,
    };

    pub fn from_exps(exps: &[u32]) -> Mono {
        assert!(exps.len() <= MAX_SLOTS);
        let mut m = Mono::ONE;
        for (i, &v) in exps.iter().enumerate() {
            m.e[i] = u8::try_from(v).expect("exponent overflow");
            m.deg += v as u16;
        }
        m
    }

    /// A single variable raised to a power.
    pub fn var(slot: usize, pow: u32) -> Mono {
        let mut m = Mono::ONE;
        m.e[slot] = u8::try_from(pow).expect("exponent overflow");
        m.deg = pow as u16;
        m
    }

    #[inline]
    pub fn exp(&self, slot: usize) -> u32 {
        self.e[slot] as u32
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn set(&mut self, slot: usize, v: u32) {
        let old = self.e[slot] as u16;
        self.e[slot] = u8::try_from(v).expect("exponent overflow");
        self.deg = self.deg - old + v as u16;
    }

    /// Commutative product of exponent vectors.
    #[inline]
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..MAX_SLOTS {
            let s = self.e[i] as u16 + o.e[i] as u16;
            assert!(s < 256, "exponent overflow");
            r.e[i] = s as u8;
        }
        r.deg = self.deg + o.deg;
        r
    }

    #[inline]
    pub fn divides(&self, o: &Mono) -> bool {
        self.deg <= o.deg && self.e.iter().zip(o.e.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    #[inline]
    pub fn quotient_of(&self, o: &Mono) -> Mono {
        let mut r = *o;
        for i in 0..MAX_SLOTS {
            r.e[i] -= self.e[i];
        }
        r.deg = o.deg - self.deg;
        r
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        let mut r = Mono::ONE;
        for i in 0..MAX_SLOTS {
            r.e[i] = self.e[i].max(o.e[i]);
            r.deg += r.e[i] as u16;
        }
        r
    }

    pub fn gcd_is_one(&self, o: &Mono) -> bool {
        self.e.iter().zip(o.e.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit mask with one bit per slot that has a nonzero exponent.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for i in 0..MAX_SLOTS {
            if self.e[i] != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Divisibility filter: bit `2i` set when exponent of slot `i` is at
    /// least 1, bit `2i + 1` when at least 2 (first 32 slots of detail).
    #[inline]
    pub fn divmask(&self) -> u64 {
        let mut mask = 0u64;
        for i in 0..MAX_SLOTS.min(32) {
            let v = self.e[i];
            if v >= 1 {
                mask |= 1 << (2 * i);
            }
            if v >= 2 {
                mask |= 1 << (2 * i + 1);
            }
        }
        mask
    }

    pub fn slots(&self) -> &[u8; MAX_SLOTS] {
        &self.e
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.e.iter().rposition(|&v| v != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.e[..last])
    }
}
