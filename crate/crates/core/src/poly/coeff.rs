//! Integer coefficients with an inline fast path.
//!
//! Most coefficients of the polynomials in this crate fit in a machine word,
//! so they are stored inline and only promoted to a heap-allocated `BigInt`
//! on overflow. Accumulation uses `i128` with the same promotion rule.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Coeff {
    Small(i64),
    Big(Box<BigInt>),
}

impl Coeff {
    pub(crate) fn from_big(b: BigInt) -> Coeff {
        match b.to_i64() {
            Some(s) => Coeff::Small(s),
            None => Coeff::Big(Box::new(b)),
        }
    }

    pub(crate) fn from_i128(v: i128) -> Coeff {
        match i64::try_from(v) {
            Ok(s) => Coeff::Small(s),
            Err(_) => Coeff::Big(Box::new(BigInt::from(v))),
        }
    }

    pub(crate) fn to_big(&self) -> BigInt {
        match self {
            Coeff::Small(s) => BigInt::from(*s),
            Coeff::Big(b) => (**b).clone(),
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(s) => *s < 0,
            Coeff::Big(b) => b.is_negative(),
        }
    }

    pub(crate) fn neg(&self) -> Coeff {
        match self {
            Coeff::Small(s) => match s.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::Big(Box::new(-BigInt::from(*s))),
            },
            Coeff::Big(b) => Coeff::from_big(-(**b).clone()),
        }
    }

    pub(crate) fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => Coeff::from_i128(*a as i128 + *b as i128),
            _ => Coeff::from_big(self.to_big() + other.to_big()),
        }
    }

    pub(crate) fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => Coeff::from_i128(*a as i128 * *b as i128),
            _ => Coeff::from_big(self.to_big() * other.to_big()),
        }
    }

    pub(crate) fn gcd_with(&self, g: &BigInt) -> BigInt {
        match self {
            Coeff::Small(s) => {
                if let Some(gs) = g.to_i64() {
                    BigInt::from(gcd_i64(*s, gs))
                } else {
                    g.gcd(&BigInt::from(*s))
                }
            }
            Coeff::Big(b) => g.gcd(b),
        }
    }

    /// Exact division; `d` must divide `self`.
    pub(crate) fn div_exact(&self, d: &BigInt) -> Coeff {
        match (self, d.to_i64()) {
            (Coeff::Small(s), Some(ds)) => {
                debug_assert_eq!(*s as i128 % ds as i128, 0);
                Coeff::from_i128(*s as i128 / ds as i128)
            }
            _ => {
                let (q, r) = self.to_big().div_rem(d);
                debug_assert!(r.is_zero());
                Coeff::from_big(q)
            }
        }
    }

    /// `Some(quotient)` when `d` divides `self`.
    pub(crate) fn checked_div(&self, d: &Coeff) -> Option<Coeff> {
        let (q, r) = self.to_big().div_rem(&d.to_big());
        if r.is_zero() {
            Some(Coeff::from_big(q))
        } else {
            None
        }
    }

    pub(crate) fn one() -> Coeff {
        Coeff::Small(1)
    }
}

fn gcd_i64(a: i64, b: i64) -> i128 {
    let (mut a, mut b) = ((a as i128).abs(), (b as i128).abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Running sum of coefficient products.
#[derive(Clone, Debug)]
pub(crate) enum Acc {
    Small(i128),
    Big(BigInt),
}

impl Acc {
    pub(crate) fn zero() -> Acc {
        Acc::Small(0)
    }

    #[inline]
    pub(crate) fn add_product(&mut self, a: &Coeff, b: &Coeff, negate: bool) {
        if let (Coeff::Small(x), Coeff::Small(y), Acc::Small(s)) = (a, b, &mut *self) {
            let p = *x as i128 * *y as i128;
            let r = if negate { s.checked_sub(p) } else { s.checked_add(p) };
            if let Some(r) = r {
                *s = r;
                return;
            }
        }
        let p = a.to_big() * b.to_big();
        self.add_big(if negate { -p } else { p });
    }

    #[inline]
    pub(crate) fn add_coeff(&mut self, a: &Coeff, negate: bool) {
        self.add_product(a, &Coeff::one(), negate)
    }

    fn add_big(&mut self, p: BigInt) {
        match self {
            Acc::Small(s) => *self = Acc::Big(BigInt::from(*s) + p),
            Acc::Big(b) => *b += p,
        }
    }

    pub(crate) fn into_coeff(self) -> Option<Coeff> {
        match self {
            Acc::Small(0) => None,
            Acc::Small(s) => Some(Coeff::from_i128(s)),
            Acc::Big(b) if b.is_zero() => None,
            Acc::Big(b) => Some(Coeff::from_big(b)),
        }
    }
}

pub(crate) fn big_is_unit(b: &BigInt) -> bool {
    b.abs().is_one()
}
