use crate::error::{Error, Result};
use crate::exactla::Rat;

/// Integer-coefficient polynomial in `t`, lowest degree first.
pub type Poly = Vec<i64>;

pub fn poly_mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_pow(a: &[i64], e: usize) -> Poly {
    (0..e).fold(vec![1], |acc, _| poly_mul(&acc, a))
}

/// A rational function `numerator / denominator` viewed as a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl RationalSeries {
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        if denominator.first().copied().unwrap_or(0) == 0 {
            return Err(Error::InvalidParameter("denominator has zero constant term".into()));
        }
        Ok(RationalSeries { numerator, denominator })
    }

    /// `1 / Π factors[i]^{exponents[i]}`.
    pub fn inverse_product(factors: &[(Poly, usize)]) -> Result<Self> {
        let den = factors
            .iter()
            .fold(vec![1], |acc, (p, e)| poly_mul(&acc, &poly_pow(p, *e)));
        Self::new(vec![1], den)
    }

    /// Coefficients of `t^0 … t^cap`.
    pub fn expand(&self, cap: usize) -> Vec<Rat> {
        let d0 = Rat::int(self.denominator[0]);
        let mut c: Vec<Rat> = Vec::with_capacity(cap + 1);
        for n in 0..=cap {
            let mut s = Rat::int(self.numerator.get(n).copied().unwrap_or(0));
            for (k, dk) in self.denominator.iter().enumerate().skip(1) {
                if k > n {
                    break;
                }
                s = s.sub(&Rat::int(*dk).mul(&c[n - k]));
            }
            c.push(s.div(&d0).expect("nonzero constant term"));
        }
        c
    }
}

/// Per-degree comparison of computed dimensions against a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComparison {
    pub expected: Vec<Rat>,
    pub actual: Vec<usize>,
    pub first_mismatch: Option<usize>,
}

impl SeriesComparison {
    pub fn new(series: &RationalSeries, actual: Vec<usize>) -> Self {
        let expected = series.expand(actual.len().saturating_sub(1));
        let first_mismatch = actual
            .iter()
            .zip(&expected)
            .position(|(a, e)| Rat::int(*a as i64) != *e);
        SeriesComparison {
            expected,
            actual,
            first_mismatch,
        }
    }

    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[Rat]) -> Vec<i64> {
        v.iter().map(|r| r.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn expansions() {
        // 1/((1−t²)(1−2t+t²))
        let s = RationalSeries::inverse_product(&[(vec![1, 0, -1], 1), (vec![1, -2, 1], 1)]).unwrap();
        assert_eq!(ints(&s.expand(7)), vec![1, 2, 4, 6, 9, 12, 16, 20]);
        let p = RationalSeries::inverse_product(&[(vec![1, -1], 3), (vec![1, 0, -1], 3)]).unwrap();
        assert_eq!(ints(&p.expand(6)), vec![1, 3, 9, 19, 39, 69, 119]);
        assert!(RationalSeries::new(vec![1], vec![0, 1]).is_err());
        let half = RationalSeries::new(vec![1], vec![2]).unwrap();
        assert_eq!(half.expand(1), vec![Rat::new(1, 2), Rat::ZERO]);
    }
}
