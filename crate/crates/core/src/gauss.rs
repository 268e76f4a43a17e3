//! Gaussian integers: the entry ring of every lift matrix. Only the four
//! units 1, i, -1, -i ever appear as nonzero entries.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};

pub type GaussInt = Complex<BigInt>;

pub fn gauss(re: i64, im: i64) -> GaussInt {
    Complex::new(BigInt::from(re), BigInt::from(im))
}

/// i^k for k taken mod 4.
pub fn unit(iexp: u8) -> GaussInt {
    match iexp % 4 {
        0 => gauss(1, 0),
        1 => gauss(0, 1),
        2 => gauss(-1, 0),
        _ => gauss(0, -1),
    }
}

/// Writes z as i^k if z is a Gaussian unit.
pub fn as_unit_exp(z: &GaussInt) -> Option<u8> {
    (0u8..4).find(|&k| *z == unit(k))
}

pub fn is_zero(z: &GaussInt) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

pub fn is_one(z: &GaussInt) -> bool {
    z.re.is_one() && z.im.is_zero()
}
