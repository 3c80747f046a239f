use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Field elements the simplex engine can pivot on.
///
/// Sign tests go through this trait so that exact types compare exactly
/// and floating types compare against a tolerance.
pub trait LpScalar: Clone + Debug + PartialOrd + Num + Neg<Output = Self> + Send + Sync {
    /// Whether sign tests are exact.
    const EXACT: bool;

    fn is_pos(&self) -> bool;
    fn is_neg(&self) -> bool;

    fn is_nonzero(&self) -> bool {
        self.is_pos() || self.is_neg()
    }

    fn floor_value(&self) -> Self;
    fn ceil_value(&self) -> Self;

    fn is_integral(&self) -> bool {
        !(self.clone() - self.floor_value()).is_nonzero()
    }

    fn from_i64(v: i64) -> Self;

    /// Simplex multipliers prepared for repeated pricing.
    type Prices: Send + Sync;

    fn prices(y: &[Self]) -> Self::Prices;

    /// Whether the reduced cost `cost - y·column` is positive.
    fn improves(cost: &Self, column: &[(usize, Self)], prices: &Self::Prices) -> bool;
}

/// Multipliers over a common denominator, so that pricing integral
/// columns needs only integer additions.
pub struct ScaledPrices {
    y: Vec<BigRational>,
    scaled: Vec<BigInt>,
    denom: BigInt,
    /// The same values when they all fit in `i64`.
    small: Option<(Vec<i64>, i64)>,
}

impl LpScalar for BigRational {
    const EXACT: bool = true;

    fn is_pos(&self) -> bool {
        self.is_positive()
    }

    fn is_neg(&self) -> bool {
        self.is_negative()
    }

    fn is_nonzero(&self) -> bool {
        !self.is_zero()
    }

    fn floor_value(&self) -> Self {
        self.floor()
    }

    fn ceil_value(&self) -> Self {
        self.ceil()
    }

    fn is_integral(&self) -> bool {
        self.denom().is_one()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    type Prices = ScaledPrices;

    fn prices(y: &[Self]) -> ScaledPrices {
        let denom = y.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scaled: Vec<BigInt> = y.iter().map(|v| v.numer() * (&denom / v.denom())).collect();
        let small = denom.to_i64().and_then(|d| {
            let ys: Option<Vec<i64>> = scaled.iter().map(ToPrimitive::to_i64).collect();
            ys.map(|ys| (ys, d))
        });
        ScaledPrices {
            y: y.to_vec(),
            scaled,
            denom,
            small,
        }
    }

    fn improves(cost: &Self, column: &[(usize, Self)], prices: &ScaledPrices) -> bool {
        let integral = cost.denom().is_one() && column.iter().all(|(_, a)| a.denom().is_one());
        if let (true, Some((ys, d))) = (integral, &prices.small) {
            let small_terms = cost.numer().to_i64().map(|c| (c, column.iter().map(|(i, a)| (*i, a.numer().to_i64()))));
            if let Some((c, terms)) = small_terms {
                // i64 products summed over at most a few hundred terms fit in i128
                let mut acc = Some(i128::from(c) * i128::from(*d));
                for (i, a) in terms {
                    acc = acc.zip(a).and_then(|(acc, a)| acc.checked_sub(i128::from(ys[i]) * i128::from(a)));
                }
                if let Some(acc) = acc {
                    return acc > 0;
                }
            }
        }
        if integral {
            let mut acc = cost.numer() * &prices.denom;
            for (i, a) in column {
                if prices.scaled[*i].is_zero() {
                    continue;
                }
                if a.is_one() {
                    acc -= &prices.scaled[*i];
                } else {
                    acc -= &prices.scaled[*i] * a.numer();
                }
            }
            return acc.is_positive();
        }
        column
            .iter()
            .fold(cost.clone(), |acc, (i, a)| acc - &prices.y[*i] * a)
            .is_positive()
    }
}

/// Absolute tolerance used for `f64` sign tests.
pub const F64_TOLERANCE: f64 = 1e-9;

impl LpScalar for f64 {
    const EXACT: bool = false;

    fn is_pos(&self) -> bool {
        *self > F64_TOLERANCE
    }

    fn is_neg(&self) -> bool {
        *self < -F64_TOLERANCE
    }

    fn floor_value(&self) -> Self {
        let r = self.round();
        if (self - r).abs() <= F64_TOLERANCE {
            r
        } else {
            self.floor()
        }
    }

    fn ceil_value(&self) -> Self {
        let r = self.round();
        if (self - r).abs() <= F64_TOLERANCE {
            r
        } else {
            self.ceil()
        }
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    type Prices = Vec<f64>;

    fn prices(y: &[Self]) -> Vec<f64> {
        y.to_vec()
    }

    fn improves(cost: &Self, column: &[(usize, Self)], prices: &Vec<f64>) -> bool {
        column
            .iter()
            .fold(*cost, |acc, (i, a)| acc - prices[*i] * a)
            .is_pos()
    }
}
