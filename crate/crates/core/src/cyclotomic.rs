//! Exact arithmetic in Z[zeta_e].
//!
//! Canonical form is the power basis {1, zeta, ..., zeta^{phi(e)-1}}:
//! coordinates are obtained by reducing exponent vectors modulo the e-th
//! cyclotomic polynomial Phi_e. Coefficients are arbitrary-precision
//! integers throughout.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Euler's totient.
pub fn phi(e: u32) -> u32 {
    let mut n = e as u64;
    let mut out = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out -= out / d;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out as u32
}

/// Moebius function.
pub fn moebius(e: u32) -> i64 {
    let mut n = e as u64;
    let mut factors = 0;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            factors += 1;
        }
        d += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exact coefficients of Phi_e(x), ascending degree, computed by dividing
/// x^e - 1 by the product of Phi_d over proper divisors d | e. Division is
/// exact; a nonzero remainder would be a bug and panics.
pub fn cyclotomic_polynomial(e: u32) -> Vec<BigInt> {
    fn compute(e: u32) -> Vec<BigInt> {
        // x^e - 1
        let mut num = vec![BigInt::zero(); e as usize + 1];
        num[0] = -BigInt::one();
        num[e as usize] = BigInt::one();
        for d in 1..e {
            if e % d == 0 {
                let phid = cyclotomic_polynomial(d);
                num = poly_div_exact(&num, &phid);
            }
        }
        num
    }
    static MEMO: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = memo.lock().unwrap().get(&e) {
        return hit.clone();
    }
    let result = compute(e);
    memo.lock().unwrap().insert(e, result.clone());
    result
}

/// Exact division of integer polynomials (divisor monic); panics on a
/// nonzero remainder.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().unwrap().is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let dn = rem.len() - 1;
    assert!(dn >= dd);
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        if !c.is_zero() {
            quot[i] = c.clone();
            for j in 0..=dd {
                rem[i + j] -= &c * &den[j];
            }
        }
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "exact division left a remainder"
    );
    quot
}

/// Pre-canonical accumulator: e integer coefficients indexed by exponent
/// mod e. Summation loops write here, then canonicalize once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycPoly {
    pub order: u32,
    pub coeffs: Vec<BigInt>,
}

impl CycPoly {
    pub fn zero(order: u32) -> Self {
        CycPoly {
            order,
            coeffs: vec![BigInt::zero(); order as usize],
        }
    }

    pub fn from_i64(order: u32, raw: &[i64]) -> Self {
        assert_eq!(raw.len(), order as usize);
        CycPoly {
            order,
            coeffs: raw.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Add c * zeta^k (k taken mod e, negatives allowed).
    pub fn add_term(&mut self, k: i64, c: impl Into<BigInt>) {
        let e = self.order as i64;
        let idx = k.rem_euclid(e) as usize;
        self.coeffs[idx] += c.into();
    }
}

/// An exact element of Z[zeta_e] in canonical power-basis form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycInt {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coordinates, length phi(order).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn zero(order: u32) -> Self {
        CycInt {
            order,
            coeffs: vec![BigInt::zero(); phi(order) as usize],
        }
    }

    pub fn constant(order: u32, c: impl Into<BigInt>) -> Self {
        let mut z = CycInt::zero(order);
        z.coeffs[0] = c.into();
        z
    }

    /// zeta_order^k in canonical form.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let mut p = CycPoly::zero(order);
        p.add_term(k, 1);
        canonicalize(&p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The constant term if all other coordinates vanish.
    pub fn as_constant(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_order(&self, other: &CycInt) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycInt {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycInt {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> CycInt {
        let k = k.into();
        CycInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(reduce_mod_phi(self.order, prod))
    }

    /// Multiply by zeta^k: an exponent shift, no convolution.
    pub fn mul_zeta_pow(&self, k: i64) -> CycInt {
        let e = self.order;
        let mut p = CycPoly::zero(e);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(i as i64 + k, c.clone());
            }
        }
        canonicalize(&p)
    }
}

impl Serialize for CycInt {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("CycInt", 2)?;
        st.serialize_field("order", &self.order)?;
        // Coefficients fit i64 in every supported workload; fall back to
        // decimal strings beyond that rather than lose precision.
        if self.coeffs.iter().all(|c| c.to_i64().is_some()) {
            let v: Vec<i64> = self.coeffs.iter().map(|c| c.to_i64().unwrap()).collect();
            st.serialize_field("coeffs", &v)?;
        } else {
            let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            st.serialize_field("coeffs", &v)?;
        }
        st.end()
    }
}

/// Reduce an exponent vector modulo Phi_e into canonical coordinates.
pub fn canonicalize(poly: &CycPoly) -> CycInt {
    reduce_mod_phi(poly.order, poly.coeffs.clone())
}

fn reduce_mod_phi(order: u32, mut rem: Vec<BigInt>) -> CycInt {
    let phi_e = cyclotomic_polynomial(order);
    let deg = phi_e.len() - 1; // = phi(order)
    let mut top = rem.len();
    while top > deg {
        top -= 1;
        let c = std::mem::replace(&mut rem[top], BigInt::zero());
        if !c.is_zero() {
            for j in 0..deg {
                rem[top - deg + j] -= &c * &phi_e[j];
            }
        }
    }
    rem.resize(deg, BigInt::zero());
    CycInt { order, coeffs: rem }
}

/// The Galois automorphism zeta -> zeta^s (gcd(s, e) = 1).
pub fn conjugate(a: &CycInt, s: i64) -> Result<CycInt> {
    let e = a.order;
    if s.rem_euclid(e as i64).gcd(&(e as i64)) != 1 {
        return Err(Error::NotCoprime { s, e });
    }
    let mut p = CycPoly::zero(e);
    for (i, c) in a.coeffs.iter().enumerate() {
        if !c.is_zero() {
            p.add_term(i as i64 * s, c.clone());
        }
    }
    Ok(canonicalize(&p))
}

/// Tr(zeta_e^t) by the closed form mu(e/g) * phi(e) / phi(e/g), g = gcd(t, e).
pub fn trace_zeta_pow(e: u32, t: i64) -> i64 {
    let tt = t.rem_euclid(e as i64) as u32;
    let g = if tt == 0 { e } else { num_integer::gcd(tt, e) };
    let m = e / g;
    moebius(m) * phi(e) as i64 / phi(m) as i64
}

/// Trace table [Tr(zeta_e^0), ..., Tr(zeta_e^{e-1})].
pub fn trace_table(e: u32) -> Vec<i64> {
    (0..e as i64).map(|t| trace_zeta_pow(e, t)).collect()
}

/// Trace to Q as the sum of all Galois conjugates. The non-constant
/// coordinates of the sum must vanish and the result must agree with the
/// Moebius closed form; either failure signals a canonicalization bug.
pub fn trace_to_q(a: &CycInt) -> Result<BigInt> {
    let e = a.order;
    let mut sum = CycInt::zero(e);
    for s in 1..=e as i64 {
        if num_integer::gcd(s, e as i64) == 1 {
            sum = sum.add(&conjugate(a, s)?)?;
        }
    }
    if sum.coeffs[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NonRationalTrace(format!(
            "galois sum has non-constant coordinates: {:?}",
            sum.coeffs
        )));
    }
    let galois = sum.coeffs[0].clone();
    let moebius_path = trace_fast(a);
    if galois != moebius_path {
        return Err(Error::NonRationalTrace(format!(
            "galois sum {galois} != moebius form {moebius_path}"
        )));
    }
    Ok(galois)
}

/// Trace via the Moebius closed form applied to each basis power.
pub fn trace_fast(a: &CycInt) -> BigInt {
    let e = a.order;
    let mut acc = BigInt::zero();
    for (i, c) in a.coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc += c * trace_zeta_pow(e, i as i64);
        }
    }
    acc
}

/// Substitute zeta_from = zeta_to^{to/from}; an injective ring map.
pub fn lift_order(a: &CycInt, to: u32) -> Result<CycInt> {
    let from = a.order;
    if to % from != 0 {
        return Err(Error::NotDivisible { from, to });
    }
    let step = (to / from) as i64;
    let mut p = CycPoly::zero(to);
    for (i, c) in a.coeffs.iter().enumerate() {
        if !c.is_zero() {
            p.add_term(i as i64 * step, c.clone());
        }
    }
    Ok(canonicalize(&p))
}

/// For order 2m with m odd, substitute zeta_{2m} = -zeta_m^{(m+1)/2}:
/// the ring isomorphism Z[zeta_{2m}] -> Z[zeta_m].
pub fn collapse_to_odd(a: &CycInt) -> Result<CycInt> {
    let e = a.order;
    if e % 2 != 0 || (e / 2) % 2 == 0 {
        return Err(Error::EvenM(e));
    }
    let m = e / 2;
    let half = ((m + 1) / 2) as i64;
    let mut p = CycPoly::zero(m);
    for (i, c) in a.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if i % 2 == 0 { c.clone() } else { -c.clone() };
        p.add_term(i as i64 * half, term);
    }
    Ok(canonicalize(&p))
}

/// Evaluate the canonical polynomial at exp(2 pi i k / e), gcd(k, e) = 1.
pub fn embed_numeric(a: &CycInt, k: i64) -> Result<Complex64> {
    let e = a.order;
    if k.rem_euclid(e as i64).gcd(&(e as i64)) != 1 {
        return Err(Error::NotCoprime { s: k, e });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, c) in a.coeffs.iter().enumerate() {
        if !c.is_zero() {
            let theta = 2.0 * std::f64::consts::PI * (i as f64) * (k as f64) / (e as f64);
            let cf = c.to_f64().expect("coefficient out of f64 range");
            acc += Complex64::new(theta.cos(), theta.sin()) * cf;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 =
            |v: Vec<BigInt>| -> Vec<i64> { v.iter().map(|c| c.to_i64().unwrap()).collect() };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(9)), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(
            as_i64(cyclotomic_polynomial(18)),
            vec![1, 0, 0, -1, 0, 0, 1]
        );
        assert_eq!(as_i64(cyclotomic_polynomial(50)).len(), 21);
    }

    #[test]
    fn phi_18_reduction_of_sixth_power() {
        let z6 = CycInt::zeta_pow(18, 6);
        assert_eq!(
            z6.coeffs(),
            &[big(-1), big(0), big(0), big(1), big(0), big(0)]
        );
        let em = embed_numeric(&z6, 1).unwrap();
        let want = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * 6.0 / 18.0);
        assert!((em - want).norm() < 1e-12);
    }

    #[test]
    fn canonicalize_phi3_relation() {
        let mut p = CycPoly::zero(3);
        p.add_term(0, 1);
        p.add_term(1, 1);
        p.add_term(2, 1);
        assert!(canonicalize(&p).is_zero());
        let z2 = CycInt::zeta_pow(3, 2);
        assert_eq!(z2.coeffs(), &[big(-1), big(-1)]);
    }

    #[test]
    fn mul_exponent_addition() {
        let a = CycInt::zeta_pow(18, 10);
        let b = CycInt::zeta_pow(18, 12);
        assert_eq!(a.mul(&b).unwrap(), CycInt::zeta_pow(18, 4));
    }

    #[test]
    fn mul_phi3_example() {
        // (1 + zeta)(1 + zeta^2) = 1 in Z[zeta_3]
        let one = CycInt::constant(3, 1);
        let a = one.add(&CycInt::zeta_pow(3, 1)).unwrap();
        let b = one.add(&CycInt::zeta_pow(3, 2)).unwrap();
        assert_eq!(a.mul(&b).unwrap(), one);
    }

    #[test]
    fn mul_identity() {
        let a = CycInt::zeta_pow(18, 7)
            .scale(3)
            .add(&CycInt::constant(18, -4))
            .unwrap();
        assert_eq!(a.mul(&CycInt::constant(18, 1)).unwrap(), a);
    }

    #[test]
    fn mul_order_mismatch() {
        let a = CycInt::constant(3, 1);
        let b = CycInt::constant(9, 1);
        assert!(matches!(a.mul(&b), Err(Error::OrderMismatch(3, 9))));
    }

    #[test]
    fn conjugate_basics() {
        assert_eq!(
            conjugate(&CycInt::zeta_pow(18, 1), 5).unwrap(),
            CycInt::zeta_pow(18, 5)
        );
        let a = CycInt::zeta_pow(18, 7)
            .scale(2)
            .add(&CycInt::zeta_pow(18, 3))
            .unwrap();
        let roundtrip = conjugate(&conjugate(&a, 5).unwrap(), 11).unwrap();
        assert_eq!(roundtrip, a); // 5 * 11 = 55 = 1 mod 18
        assert!(matches!(
            conjugate(&a, 6),
            Err(Error::NotCoprime { s: 6, e: 18 })
        ));
    }

    #[test]
    fn conjugate_numeric_crosscheck() {
        // sigma_2(2 + 3 zeta_3^2) = 2 + 3 zeta_3, canonical [2, 3]
        let a = CycInt::constant(3, 2)
            .add(&CycInt::zeta_pow(3, 2).scale(3))
            .unwrap();
        let c = conjugate(&a, 2).unwrap();
        assert_eq!(c.coeffs(), &[big(2), big(3)]);
        let lhs = embed_numeric(&c, 1).unwrap();
        let rhs = embed_numeric(&a, 2).unwrap();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn trace_values_order_18() {
        assert_eq!(trace_to_q(&CycInt::constant(18, 1)).unwrap(), big(6));
        assert_eq!(trace_to_q(&CycInt::zeta_pow(18, 6)).unwrap(), big(-3));
        assert_eq!(trace_to_q(&CycInt::zeta_pow(18, 2)).unwrap(), big(0));
        assert_eq!(trace_to_q(&CycInt::zeta_pow(18, 9)).unwrap(), big(-6));
        assert_eq!(trace_to_q(&CycInt::zeta_pow(18, 3)).unwrap(), big(3));
    }

    #[test]
    fn trace_two_paths_agree_everywhere() {
        for e in [9u32, 18, 50] {
            for t in 0..e as i64 {
                let z = CycInt::zeta_pow(e, t);
                assert_eq!(
                    trace_to_q(&z).unwrap(),
                    big(trace_zeta_pow(e, t)),
                    "e={e} t={t}"
                );
            }
        }
    }

    #[test]
    fn trace_linearity() {
        let a = CycInt::zeta_pow(18, 5)
            .scale(7)
            .add(&CycInt::constant(18, 2))
            .unwrap();
        let b = CycInt::zeta_pow(18, 11)
            .scale(-3)
            .add(&CycInt::zeta_pow(18, 6))
            .unwrap();
        let lhs = trace_to_q(&a.add(&b).unwrap()).unwrap();
        assert_eq!(lhs, trace_to_q(&a).unwrap() + trace_to_q(&b).unwrap());
    }

    #[test]
    fn lift_and_collapse() {
        assert_eq!(
            lift_order(&CycInt::zeta_pow(3, 1), 18).unwrap(),
            CycInt::zeta_pow(18, 6)
        );
        assert_eq!(
            lift_order(&CycInt::constant(9, 17), 18).unwrap(),
            CycInt::constant(18, 17)
        );
        // collapse(zeta_18) = -zeta_9^5, checked numerically
        let c = collapse_to_odd(&CycInt::zeta_pow(18, 1)).unwrap();
        assert_eq!(c, CycInt::zeta_pow(9, 5).neg());
        let em = embed_numeric(&c, 1).unwrap();
        let want = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 18.0);
        assert!((em - want).norm() < 1e-12);
        // even powers bypass the sign
        assert_eq!(
            collapse_to_odd(&CycInt::zeta_pow(18, 2)).unwrap(),
            CycInt::zeta_pow(9, 1)
        );
        assert_eq!(
            collapse_to_odd(&CycInt::constant(18, 42)).unwrap(),
            CycInt::constant(9, 42)
        );
        assert!(matches!(
            collapse_to_odd(&CycInt::constant(12, 1)),
            Err(Error::EvenM(12))
        ));
        // collapse then lift recovers the element
        let a = CycInt::zeta_pow(18, 13)
            .scale(5)
            .add(&CycInt::zeta_pow(18, 4))
            .unwrap();
        let back = lift_order(&collapse_to_odd(&a).unwrap(), 18).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn embed_basics() {
        assert!(
            (embed_numeric(&CycInt::constant(18, 1), 1).unwrap() - Complex64::new(1.0, 0.0)).norm()
                < 1e-12
        );
        assert!(
            (embed_numeric(&CycInt::zeta_pow(18, 9), 1).unwrap() - Complex64::new(-1.0, 0.0))
                .norm()
                < 1e-12
        );
    }

    #[test]
    fn serialize_json_shape() {
        let a = CycInt::zeta_pow(3, 2);
        let js = serde_json::to_value(&a).unwrap();
        assert_eq!(js["order"], 3);
        assert_eq!(js["coeffs"], serde_json::json!([-1, -1]));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_cycint(order: u32) -> impl Strategy<Value = CycInt> {
            let n = phi(order) as usize;
            proptest::collection::vec(-1000i64..1000, n).prop_map(move |v| {
                let mut p = CycPoly::zero(order);
                for (i, c) in v.into_iter().enumerate() {
                    p.add_term(i as i64, c);
                }
                canonicalize(&p)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn ring_axioms_order_18(a in arb_cycint(18), b in arb_cycint(18), c in arb_cycint(18)) {
                let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
                let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
                prop_assert_eq!(&ab_c, &a_bc);
                let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
                let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
                prop_assert_eq!(&lhs, &rhs);
                prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            }

            #[test]
            fn ring_axioms_order_50(a in arb_cycint(50), b in arb_cycint(50), c in arb_cycint(50)) {
                let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
                let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
                prop_assert_eq!(&ab_c, &a_bc);
                let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
                let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
                prop_assert_eq!(&lhs, &rhs);
            }

            #[test]
            fn canonicalize_idempotent(a in arb_cycint(18)) {
                let mut p = CycPoly::zero(18);
                for (i, c) in a.coeffs().iter().enumerate() {
                    p.add_term(i as i64, c.clone());
                }
                prop_assert_eq!(canonicalize(&p), a);
            }

            #[test]
            fn trace_of_galois_sum(a in arb_cycint(18)) {
                prop_assert_eq!(trace_to_q(&a).unwrap(), trace_fast(&a));
                let t1 = trace_to_q(&a).unwrap();
                let conj_sum = conjugate(&a, 5).unwrap();
                prop_assert_eq!(trace_to_q(&conj_sum).unwrap(), t1);
            }

            #[test]
            fn embed_is_ring_hom(a in arb_cycint(18), b in arb_cycint(18)) {
                let prod = a.mul(&b).unwrap();
                let lhs = embed_numeric(&prod, 1).unwrap();
                let rhs = embed_numeric(&a, 1).unwrap() * embed_numeric(&b, 1).unwrap();
                prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
            }
        }
    }
}
