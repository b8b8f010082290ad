//! Exact arithmetic in the cyclotomic field Q(ζ_ℓ).
//!
//! Elements are stored as coefficient vectors in the power basis
//! `1, ζ, …, ζ^{φ(ℓ)-1}` after reduction modulo the ℓ-th cyclotomic
//! polynomial Φ_ℓ, so equality is plain vector equality.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed = Rational::from_str(t).map_err(|_| Error::Malformed(format!("bad rational {s:?}")))?;
    Ok(parsed)
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// The fractional part in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

/// `r` as an `i64` when it is an integer that fits.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.to_integer()).ok()
}

/// Serde adapter for a single [`Rational`] as a `"p/q"` string.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter for a list of [`Rational`]s.
pub mod rational_vec_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(format_rational).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        strs.iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect()
    }
}

/// Integer coefficients of Φ_ℓ, lowest degree first (monic).
pub fn cyclotomic_polynomial(ell: u32) -> Vec<BigInt> {
    assert!(ell >= 1, "ell must be positive");
    // x^ell - 1
    let mut num = vec![BigInt::zero(); ell as usize + 1];
    num[0] = BigInt::from(-1);
    num[ell as usize] = BigInt::one();
    for d in 1..ell {
        if ell % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Euler's totient.
pub fn euler_phi(ell: u32) -> usize {
    (1..=ell).filter(|k| num_integer::gcd(*k, ell) == 1).count()
}

/// Static data for Q(ζ_ℓ), interned once per ℓ.
#[derive(Debug)]
pub struct CycField {
    ell: u32,
    degree: usize,
    modulus: Vec<Rational>,
}

impl CycField {
    pub fn get(ell: u32) -> &'static CycField {
        assert!(ell >= 1, "ell must be positive");
        static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CycField>>> = OnceLock::new();
        let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().expect("field registry poisoned");
        guard.entry(ell).or_insert_with(|| {
            let modulus: Vec<Rational> = cyclotomic_polynomial(ell)
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            Box::leak(Box::new(CycField {
                ell,
                degree: modulus.len() - 1,
                modulus,
            }))
        })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Canonical reduction of `Σ raw_k ζ^k`.
    fn reduce(&self, raw: &[Rational]) -> Vec<Rational> {
        let ell = self.ell as usize;
        // fold exponents using ζ^ℓ = 1 first
        let mut folded = vec![Rational::zero(); ell.max(self.degree)];
        for (k, c) in raw.iter().enumerate() {
            if !c.is_zero() {
                folded[k % ell] += c;
            }
        }
        let d = self.degree;
        for k in (d..folded.len()).rev() {
            if folded[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut folded[k]);
            for j in 0..d {
                let m = &self.modulus[j];
                if !m.is_zero() {
                    folded[k - d + j] -= &c * m;
                }
            }
        }
        folded.truncate(d);
        folded
    }
}

/// An element of Q(ζ_ℓ) in canonical form.
#[derive(Clone)]
pub struct CycNumber {
    field: &'static CycField,
    coeffs: Vec<Rational>,
}

impl CycNumber {
    /// Reduces `Σ raw_k ζ^k` modulo Φ_ℓ.
    pub fn make(ell: u32, raw: &[Rational]) -> CycNumber {
        let field = CycField::get(ell);
        CycNumber {
            field,
            coeffs: field.reduce(raw),
        }
    }

    pub fn zero(ell: u32) -> CycNumber {
        let field = CycField::get(ell);
        CycNumber {
            field,
            coeffs: vec![Rational::zero(); field.degree],
        }
    }

    pub fn one(ell: u32) -> CycNumber {
        Self::from_rational(ell, Rational::one())
    }

    pub fn from_rational(ell: u32, r: Rational) -> CycNumber {
        let mut z = Self::zero(ell);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(ell: u32, k: i64) -> CycNumber {
        Self::from_rational(ell, int(k))
    }

    /// ζ^{k mod ℓ}.
    pub fn root_of_unity(ell: u32, k: i64) -> CycNumber {
        let e = k.rem_euclid(ell as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::make(ell, &raw)
    }

    pub fn ell(&self) -> u32 {
        self.field.ell
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The `k` in `0..ℓ` with `self = ζ^k`, if any.
    pub fn root_exponent(&self) -> Option<u32> {
        (0..self.ell()).find(|&k| *self == Self::root_of_unity(self.ell(), k as i64))
    }

    fn check_field(&self, other: &CycNumber) -> Result<()> {
        if self.ell() != other.ell() {
            return Err(Error::MismatchedField(self.ell(), other.ell()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycNumber) -> Result<CycNumber> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &CycNumber) -> Result<CycNumber> {
        self.check_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn checked_mul(&self, other: &CycNumber) -> Result<CycNumber> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &CycNumber) -> Result<CycNumber> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    fn add_unchecked(&self, other: &CycNumber) -> CycNumber {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycNumber {
            field: self.field,
            coeffs,
        }
    }

    fn sub_unchecked(&self, other: &CycNumber) -> CycNumber {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycNumber {
            field: self.field,
            coeffs,
        }
    }

    fn mul_unchecked(&self, other: &CycNumber) -> CycNumber {
        let d = self.field.degree;
        if d == 1 {
            return CycNumber {
                field: self.field,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        let mut raw = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CycNumber {
            field: self.field,
            coeffs: self.field.reduce(&raw),
        }
    }

    pub fn scale(&self, r: &Rational) -> CycNumber {
        CycNumber {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse, by solving the linear system of multiplication-by-self.
    pub fn inv(&self) -> Result<CycNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.field.degree;
        if d == 1 {
            return Ok(CycNumber {
                field: self.field,
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        // column k of the multiplication matrix is self * ζ^k
        let mut aug: Vec<Vec<Rational>> = vec![vec![Rational::zero(); d + 1]; d];
        for k in 0..d {
            let mut raw = vec![Rational::zero(); d + k];
            raw[k..k + d].clone_from_slice(&self.coeffs);
            let col = self.field.reduce(&raw);
            for (r, v) in col.into_iter().enumerate() {
                aug[r][k] = v;
            }
        }
        aug[0][d] = Rational::one();
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| !aug[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            aug.swap(col, piv);
            let p = aug[col][col].recip();
            for v in aug[col].iter_mut() {
                *v *= &p;
            }
            for r in 0..d {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=d {
                        let t = &f * &aug[col][c];
                        aug[r][c] -= t;
                    }
                }
            }
        }
        Ok(CycNumber {
            field: self.field,
            coeffs: aug.into_iter().map(|row| row[d].clone()).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> CycNumber {
        let mut acc = CycNumber::one(self.ell());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

/// Field operation selector for [`cyc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(a: &CycNumber, b: &CycNumber, op: ArithOp) -> Result<CycNumber> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.ell == other.field.ell && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.ell.hash(state);
        self.coeffs.hash(state);
    }
}

// Operators panic on mismatched fields; use the `checked_*` methods for untrusted input.
impl Add<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.checked_add(rhs).expect("cyclotomic add")
    }
}

impl Sub<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.checked_sub(rhs).expect("cyclotomic sub")
    }
}

impl Mul<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.checked_mul(rhs).expect("cyclotomic mul")
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        assert_eq!(self.ell(), rhs.ell(), "cyclotomic add_assign");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycNumber> for CycNumber {
    fn sub_assign(&mut self, rhs: &CycNumber) {
        assert_eq!(self.ell(), rhs.ell(), "cyclotomic sub_assign");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    ell: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycRepr {
            ell: self.ell(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycRepr::deserialize(d)?;
        if repr.ell == 0 {
            return Err(D::Error::custom("ell must be positive"));
        }
        let raw = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(CycNumber::make(repr.ell, &raw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(ell: u32, raw: &[i64]) -> CycNumber {
        let raw: Vec<Rational> = raw.iter().map(|&k| int(k)).collect();
        CycNumber::make(ell, &raw)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |ell| -> Vec<i64> {
            cyclotomic_polynomial(ell)
                .into_iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        for ell in 1..=12 {
            assert_eq!(cyclotomic_polynomial(ell).len() - 1, euler_phi(ell));
        }
    }

    #[test]
    fn make_examples() {
        assert_eq!(z(4, &[0, 0, 1]).coeffs(), &[int(-1), int(0)]);
        let half = CycNumber::make(1, &[rat(5, 2)]);
        assert_eq!(half.coeffs(), &[rat(5, 2)]);
        assert!(z(3, &[0, 0, 0, 1]).is_one());
    }

    #[test]
    fn arith_examples() {
        for ell in 1..=8 {
            let zeta = CycNumber::root_of_unity(ell, 1);
            let zinv = CycNumber::root_of_unity(ell, ell as i64 - 1);
            assert!(cyc_arith(&zeta, &zinv, ArithOp::Mul).unwrap().is_one());
            let one = CycNumber::one(ell);
            let a = &one + &zeta;
            assert!(cyc_arith(&a, &a, ArithOp::Sub).unwrap().is_zero());
        }
        // 1/(1+ζ) in Q(ζ_3): multiply back
        let one = CycNumber::one(3);
        let a = z(3, &[1, 1]);
        let q = cyc_arith(&one, &a, ArithOp::Div).unwrap();
        assert!((&q * &a).is_one());
        // 1 + ζ = -ζ², so the inverse is -ζ
        assert_eq!(&a, &-CycNumber::root_of_unity(3, 2));
        assert_eq!(q, -CycNumber::root_of_unity(3, 1));
    }

    #[test]
    fn arith_errors() {
        let a = CycNumber::one(3);
        assert!(matches!(
            cyc_arith(&a, &CycNumber::zero(3), ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            cyc_arith(&a, &CycNumber::one(4), ArithOp::Add),
            Err(Error::MismatchedField(3, 4))
        ));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(CycNumber::root_of_unity(2, 1), CycNumber::from_int(2, -1));
        assert_eq!(
            CycNumber::root_of_unity(5, 7),
            CycNumber::root_of_unity(5, 2)
        );
        assert!(CycNumber::root_of_unity(7, 0).is_one());
        for ell in 1..=9u32 {
            for m in 0..(2 * ell as i64) {
                let mut sum = CycNumber::zero(ell);
                for k in 0..ell as i64 {
                    sum += &CycNumber::root_of_unity(ell, k * m);
                }
                let expected = if m % ell as i64 == 0 { ell as i64 } else { 0 };
                assert_eq!(sum, CycNumber::from_int(ell, expected), "ell={ell} m={m}");
            }
            assert!(CycNumber::root_of_unity(ell, 1).pow(ell).is_one());
            for k in 0..ell {
                assert_eq!(
                    CycNumber::root_of_unity(ell, k as i64).root_exponent(),
                    Some(k)
                );
            }
        }
    }

    #[test]
    fn serde_roundtrip() {
        let a = CycNumber::make(3, &[rat(1, 2), rat(-3, 4)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"ell":3,"coeffs":["1/2","-3/4"]}"#);
        let back: CycNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(a, back);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn cyc(ell: u32) -> impl Strategy<Value = CycNumber> {
            let d = euler_phi(ell);
            proptest::collection::vec((-6i64..6, 1i64..5), d).prop_map(move |v| {
                let raw: Vec<Rational> = v.into_iter().map(|(p, q)| rat(p, q)).collect();
                CycNumber::make(ell, &raw)
            })
        }

        fn triple() -> impl Strategy<Value = (CycNumber, CycNumber, CycNumber)> {
            (1u32..13).prop_flat_map(|ell| (cyc(ell), cyc(ell), cyc(ell)))
        }

        proptest! {
            #[test]
            fn field_axioms((a, b, c) in triple()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                if !a.is_zero() {
                    prop_assert!((&a * &a.inv().unwrap()).is_one());
                }
            }

            #[test]
            fn canonical_form_is_idempotent(a in (1u32..13).prop_flat_map(cyc)) {
                let again = CycNumber::make(a.ell(), a.coeffs());
                prop_assert_eq!(again.coeffs(), a.coeffs());
            }
        }
    }
}
