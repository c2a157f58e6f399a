use super::gauss::{factorial, rat_pow, GaussRat, Rat};
use num::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumericError {
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("unknown closed form `{0}`")]
    UnknownForm(String),
    #[error("series is not invertible (constant term is zero)")]
    NotInvertible,
}

/// Truncated formal power series in `u = pi/k` with Gaussian-rational
/// coefficients. `coeffs[n]` is the coefficient of `u^n`; the order is
/// the number of retained coefficients. Arithmetic on two series
/// truncates to the smaller order, so results stay exact within the
/// retained window.
#[derive(Clone, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<GaussRat>,
}

/// Default truncation used by callers that do not care: every check in
/// this crate needs at most 11 coefficients, so 16 leaves headroom.
pub const DEFAULT_ORDER: usize = 16;

impl USeries {
    pub fn new(coeffs: Vec<GaussRat>) -> Self {
        USeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        USeries { coeffs: vec![GaussRat::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = USeries::zero(order);
        if order > 0 {
            s.coeffs[0] = GaussRat::one();
        }
        s
    }

    pub fn constant(c: GaussRat, order: usize) -> Self {
        let mut s = USeries::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> &GaussRat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussRat::is_zero)
    }

    /// True iff the series equals the constant 1 through its order.
    pub fn is_one(&self) -> bool {
        !self.coeffs.is_empty()
            && self.coeffs[0].is_one()
            && self.coeffs[1..].iter().all(GaussRat::is_zero)
    }

    pub fn truncate(&self, order: usize) -> USeries {
        USeries { coeffs: self.coeffs[..order.min(self.coeffs.len())].to_vec() }
    }

    pub fn scale(&self, c: &GaussRat) -> USeries {
        USeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by the monomial `u`, keeping the truncation order: the
    /// top coefficient falls outside the window and is dropped.
    pub fn mul_by_u(&self) -> USeries {
        let n = self.order();
        let mut coeffs = vec![GaussRat::zero(); n];
        for k in 1..n {
            coeffs[k] = self.coeffs[k - 1].clone();
        }
        USeries { coeffs }
    }

    /// Divide by `u`: shifts all coefficients down one slot, so the
    /// order drops by one. Errors unless the constant term vanishes.
    pub fn div_by_u(&self) -> Result<USeries, NumericError> {
        match self.coeffs.first() {
            Some(c) if !c.is_zero() => Err(NumericError::NonzeroConstantTerm),
            _ => Ok(USeries { coeffs: self.coeffs[1..].to_vec() }),
        }
    }

    /// Multiplicative inverse through the truncation order.
    pub fn inverse(&self) -> Result<USeries, NumericError> {
        let c0 = self.coeffs.first().ok_or(NumericError::NotInvertible)?;
        if c0.is_zero() {
            return Err(NumericError::NotInvertible);
        }
        let c0_inv = c0.inv();
        let n = self.order();
        let mut inv = vec![GaussRat::zero(); n];
        inv[0] = c0_inv.clone();
        for k in 1..n {
            let mut acc = GaussRat::zero();
            for j in 0..k {
                acc += &(&self.coeffs[k - j] * &inv[j]);
            }
            inv[k] = &(-acc) * &c0_inv;
        }
        Ok(USeries { coeffs: inv })
    }
}

impl<'a> Add<&'a USeries> for &USeries {
    type Output = USeries;
    fn add(self, rhs: &'a USeries) -> USeries {
        let n = self.order().min(rhs.order());
        USeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a USeries> for &USeries {
    type Output = USeries;
    fn sub(self, rhs: &'a USeries) -> USeries {
        let n = self.order().min(rhs.order());
        USeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Mul<&'a USeries> for &USeries {
    type Output = USeries;
    /// Cauchy product truncated to the smaller order.
    fn mul(self, rhs: &'a USeries) -> USeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![GaussRat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] += &(a * b);
            }
        }
        USeries { coeffs }
    }
}

impl Neg for &USeries {
    type Output = USeries;
    fn neg(self) -> USeries {
        USeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} u")?,
                _ => write!(f, "{c} u^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.order())
    }
}

impl fmt::Debug for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exact Taylor coefficients of the closed forms needed downstream,
/// each taken with argument `a*u`:
///
/// - `cos`: cos(a u)
/// - `sin`: sin(a u)
/// - `exp_i`: e^{i a u}
/// - `cosh_of_iu`: cosh(i a u)  (= cos(a u), kept as its own route)
/// - `one_minus_cos_over_u`: (1 - cos(a u)) / u
pub fn taylor_oracle(name: &str, scale: &Rat, order: usize) -> Result<USeries, NumericError> {
    let mut coeffs = vec![GaussRat::zero(); order];
    let a_pow = |n: u32| rat_pow(scale, n);
    match name {
        "cos" | "cosh_of_iu" => {
            // cosh(i a u): (ia)^{2n}/(2n)! = (-1)^n a^{2n}/(2n)!
            for n in (0..order).step_by(2) {
                let m = (n / 2) as u32;
                let sign = if m % 2 == 0 { 1 } else { -1 };
                let c = a_pow(n as u32) / Rat::from_integer(factorial(n as u64))
                    * Rat::from_integer(sign.into());
                coeffs[n] = GaussRat::from_rat(c);
            }
        }
        "sin" => {
            for n in (1..order).step_by(2) {
                let m = (n / 2) as u32;
                let sign = if m % 2 == 0 { 1 } else { -1 };
                let c = a_pow(n as u32) / Rat::from_integer(factorial(n as u64))
                    * Rat::from_integer(sign.into());
                coeffs[n] = GaussRat::from_rat(c);
            }
        }
        "exp_i" => {
            for (n, slot) in coeffs.iter_mut().enumerate() {
                let c = a_pow(n as u32) / Rat::from_integer(factorial(n as u64));
                *slot = &GaussRat::i().pow(n as u32) * &GaussRat::from_rat(c);
            }
        }
        "one_minus_cos_over_u" => {
            // (1 - cos(a u))/u has coefficient (-1)^{n+1} a^{2n}/(2n)! at u^{2n-1}.
            for n in 1usize.. {
                let idx = 2 * n - 1;
                if idx >= order {
                    break;
                }
                let sign: i64 = if n % 2 == 1 { 1 } else { -1 };
                let c = a_pow((2 * n) as u32) / Rat::from_integer(factorial((2 * n) as u64))
                    * Rat::from_integer(sign.into());
                coeffs[idx] = GaussRat::from_rat(c);
            }
        }
        other => return Err(NumericError::UnknownForm(other.to_string())),
    }
    Ok(USeries::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::super::gauss::{rat, rat_int};
    use super::*;
    use proptest::prelude::*;

    fn s(coeffs: &[(i64, i64)]) -> USeries {
        USeries::new(coeffs.iter().map(|&(p, q)| GaussRat::from_frac(p, q)).collect())
    }

    #[test]
    fn cauchy_product() {
        // (1 + u)(1 - u) = 1 - u^2
        let a = s(&[(1, 1), (1, 1), (0, 1)]);
        let b = s(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(&a * &b, s(&[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn one_is_identity() {
        let a = s(&[(2, 3), (-1, 7), (5, 1), (0, 1)]);
        assert_eq!(&a * &USeries::one(4), a);
    }

    #[test]
    fn exp_times_conjugate_exp_is_one() {
        for a in [1i64, -1, 2, 5] {
            let f = taylor_oracle("exp_i", &rat_int(a), 12).unwrap();
            let g = taylor_oracle("exp_i", &rat_int(-a), 12).unwrap();
            assert!((&f * &g).is_one(), "e^{{i{a}u}} e^{{-i{a}u}} != 1");
        }
    }

    proptest! {
        #[test]
        fn exp_inverse_property(p in -6i64..=6, q in 1i64..=4) {
            let a = rat(p, q);
            let f = taylor_oracle("exp_i", &a, 10).unwrap();
            let g = taylor_oracle("exp_i", &(-a), 10).unwrap();
            prop_assert!((&f * &g).is_one());
        }
    }

    #[test]
    fn div_by_u_shifts() {
        let u = s(&[(0, 1), (1, 1)]);
        assert_eq!(u.div_by_u().unwrap(), s(&[(1, 1)]));

        // 1 - cos(2u) = 2u^2 - (2/3)u^4 + ...
        let c = taylor_oracle("cos", &rat_int(2), 6).unwrap();
        let one_minus = &USeries::one(6) - &c;
        let shifted = one_minus.div_by_u().unwrap();
        assert_eq!(shifted.order(), 5);
        assert_eq!(shifted.coeff(1), &GaussRat::from_int(2));
        assert_eq!(shifted.coeff(3), &GaussRat::from_frac(-2, 3));
        // direct oracle route agrees
        let direct = taylor_oracle("one_minus_cos_over_u", &rat_int(2), 5).unwrap();
        assert_eq!(shifted, direct);
    }

    #[test]
    fn div_by_u_rejects_constant_term() {
        assert_eq!(
            USeries::one(4).div_by_u(),
            Err(NumericError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn taylor_cos_scale_two() {
        let c = taylor_oracle("cos", &rat_int(2), 5).unwrap();
        let expect = s(&[(1, 1), (0, 1), (-2, 1), (0, 1), (2, 3)]);
        assert_eq!(c, expect);
    }

    #[test]
    fn taylor_exp_i_negative() {
        let e = taylor_oracle("exp_i", &rat_int(-1), 3).unwrap();
        assert_eq!(e.coeff(0), &GaussRat::one());
        assert_eq!(e.coeff(1), &GaussRat::imag_frac(-1, 1));
        assert_eq!(e.coeff(2), &GaussRat::from_frac(-1, 2));
    }

    #[test]
    fn taylor_sin_order_one_is_zero() {
        let sn = taylor_oracle("sin", &rat_int(1), 1).unwrap();
        assert_eq!(sn, USeries::zero(1));
    }

    #[test]
    fn unknown_form_is_rejected() {
        assert_eq!(
            taylor_oracle("tanh", &rat_int(1), 4),
            Err(NumericError::UnknownForm("tanh".into()))
        );
    }

    #[test]
    fn inverse_round_trip() {
        let f = taylor_oracle("exp_i", &rat_int(3), 9).unwrap();
        let g = f.inverse().unwrap();
        assert!((&f * &g).is_one());
        assert!(USeries::zero(3).inverse().is_err());
    }
}
