//! Display-precision helpers: base-2 logarithms of exact values, used for
//! diagnostic columns only. Nothing here ever feeds a verdict.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// log2 of a positive big integer, good to double precision regardless of
/// magnitude.
pub fn log2_int(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "log2 of a nonpositive value");
    let bits = x.bits();
    if bits <= 64 {
        return x.to_f64().expect("fits in f64 range").log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit mantissa");
    top.log2() + shift as f64
}

/// log2 of a positive rational.
pub fn log2_ratio(x: &BigRational) -> f64 {
    log2_int(x.numer()) - log2_int(x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn log2_matches_small_values() {
        assert!((log2_int(&BigInt::from(1024)) - 10.0).abs() < 1e-12);
        let huge = BigInt::from(1u8) << 500;
        assert!((log2_int(&huge) - 500.0).abs() < 1e-9);
        let ratio = BigRational::new(BigInt::from(3), BigInt::from(8));
        assert!((log2_ratio(&ratio) - (3f64.log2() - 3.0)).abs() < 1e-12);
    }
}
