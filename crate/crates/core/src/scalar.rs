//! Integer scalars for counting.
//!
//! Closed-form counts are written once against [`CountScalar`] and evaluated
//! in whatever integer type the caller picks: `u64`/`u128` for quick checks,
//! [`crate::Count`] when the value must be exact at any size.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num};

pub trait CountScalar: Clone + Num + FromPrimitive + Ord + Debug + Display {}

impl<T> CountScalar for T where T: Clone + Num + FromPrimitive + Ord + Debug + Display {}

pub fn from_u64<C: CountScalar>(v: u64) -> C {
    C::from_u64(v).expect("value fits the scalar type")
}

/// `base^exp` by repeated squaring.
pub fn pow<C: CountScalar>(base: C, mut exp: u64) -> C {
    let mut acc = C::one();
    let mut b = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

pub fn factorial<C: CountScalar>(n: u64) -> C {
    (1..=n).fold(C::one(), |acc, k| acc * from_u64::<C>(k))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial<C: CountScalar>(n: u64, k: u64) -> C {
    if k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    // each prefix product divides exactly
    (0..k).fold(C::one(), |acc, i| acc * from_u64::<C>(n - i) / from_u64::<C>(i + 1))
}
