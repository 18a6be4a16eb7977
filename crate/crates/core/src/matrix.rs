//! Symmetry reduction of (a,b)_e to canonical representative pairs, and the
//! integer matrices built from cyclotomic-number tables: exact determinant
//! (fraction-free elimination), exact characteristic polynomial
//! (Faddeev-LeVerrier), and eigenvalues from the exact polynomial.

use crate::char_sums::SumTable;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// Parity of the cofactor k = (q-1)/e, which selects the second symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    KEven,
    KOdd,
}

impl Parity {
    pub fn of(k: u64) -> Parity {
        if k % 2 == 0 {
            Parity::KEven
        } else {
            Parity::KOdd
        }
    }
}

/// Orbit of (a,b) under g1: (a,b) -> (e-a, b-a) and, depending on parity,
/// g2: (a,b) -> (b,a) or (a,b) -> (b+l^2, a+l^2) where l^2 = e/2.
/// Returns the lexicographically least member.
pub fn canonical_pair(e: u32, parity: Parity, a: i64, b: i64) -> (i64, i64) {
    orbit(e, parity, a, b).into_iter().next().unwrap()
}

fn orbit(e: u32, parity: Parity, a: i64, b: i64) -> BTreeSet<(i64, i64)> {
    let ei = e as i64;
    let half = ei / 2;
    let norm = |x: i64| x.rem_euclid(ei);
    let mut seen = BTreeSet::new();
    let mut stack = vec![(norm(a), norm(b))];
    while let Some((x, y)) = stack.pop() {
        if !seen.insert((x, y)) {
            continue;
        }
        stack.push((norm(-x), norm(y - x)));
        match parity {
            Parity::KEven => stack.push((y, x)),
            Parity::KOdd => stack.push((norm(y + half), norm(x + half))),
        }
    }
    seen
}

/// The full e x e table of canonical representatives.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitTable {
    pub e: u32,
    pub parity: Parity,
    pub rep: Vec<(i64, i64)>,
    pub class_count: usize,
}

impl OrbitTable {
    pub fn get(&self, a: i64, b: i64) -> (i64, i64) {
        let ei = self.e as i64;
        self.rep[(a.rem_euclid(ei) * ei + b.rem_euclid(ei)) as usize]
    }
}

pub fn build_orbit_table(e: u32, parity: Parity) -> OrbitTable {
    let ei = e as i64;
    let mut rep = Vec::with_capacity((ei * ei) as usize);
    let mut distinct = BTreeSet::new();
    for a in 0..ei {
        for b in 0..ei {
            let r = canonical_pair(e, parity, a, b);
            distinct.insert(r);
            rep.push(r);
        }
    }
    let table = OrbitTable {
        e,
        parity,
        rep,
        class_count: distinct.len(),
    };
    // rep is constant on orbits and idempotent
    debug_assert!((0..ei * ei).all(|i| {
        let (a, b) = (i / ei, i % ei);
        let r = table.get(a, b);
        table.get(r.0, r.1) == r
    }));
    table
}

/// Dense square matrix of exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub n: usize,
    pub data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n));
        IntMatrix {
            n,
            data: rows
                .iter()
                .flat_map(|r| r.iter().map(|&v| BigInt::from(v)))
                .collect(),
        }
    }

    /// M[a][b] = (a,b)_e from a cyclotomic table.
    pub fn from_sum_table(table: &SumTable) -> Self {
        let n = table.e as usize;
        IntMatrix {
            n,
            data: table.values.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn entry_sum(&self) -> BigInt {
        self.data.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        let mut m = self.data.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k * n + k].is_zero() {
                // pivot search
                match (k + 1..n).find(|&i| !m[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    m[i * n + j] = q;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Exact characteristic polynomial det(xI - M) by Faddeev-LeVerrier;
    /// coefficients descending degree, monic, length n + 1. Every division
    /// is exact over the integers and asserted.
    pub fn char_poly(&self) -> Vec<BigInt> {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::one();
        let mut m = IntMatrix::zero(n); // M_0 = 0
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut am = self.mul(&m);
            let c_prev = coeffs[k - 1].clone();
            for i in 0..n {
                am.data[i * n + i] += &c_prev;
            }
            m = am;
            // c_k = -tr(A M_k) / k
            let prod = self.mul(&m);
            let tr: BigInt = (0..n).map(|i| prod.get(i, i).clone()).sum();
            let (q, r) = (-tr).div_rem(&BigInt::from(k));
            assert!(r.is_zero(), "Faddeev-LeVerrier trace divisible by k");
            coeffs[k] = q;
        }
        coeffs
    }
}

/// All roots of an exact monic integer polynomial (descending
/// coefficients), refined to backward error <= tol, sorted by descending
/// magnitude. Zero roots are stripped exactly first.
pub fn roots_of_charpoly(coeffs: &[BigInt], tol: f64) -> Result<Vec<Complex64>> {
    assert!(coeffs[0].is_one(), "polynomial must be monic");
    let mut asc: Vec<BigInt> = coeffs.iter().rev().cloned().collect();
    let mut zero_roots = 0usize;
    while asc.len() > 1 && asc[0].is_zero() {
        asc.remove(0);
        zero_roots += 1;
    }
    let deg = asc.len() - 1;
    let cf: Vec<f64> = asc
        .iter()
        .map(|c| c.to_f64().expect("coefficient out of f64 range"))
        .collect();
    let mut roots = Vec::with_capacity(deg + zero_roots);
    if deg > 0 {
        roots.extend(durand_kerner(&cf, tol)?);
    }
    roots.extend(std::iter::repeat(Complex64::new(0.0, 0.0)).take(zero_roots));
    roots.sort_by(|a, b| {
        b.norm()
            .partial_cmp(&a.norm())
            .unwrap()
            .then(a.re.partial_cmp(&b.re).unwrap())
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(roots)
}

/// Certificate that a monic integer polynomial is squarefree: gcd with its
/// derivative has degree 0 modulo a large prime. Degree can only drop when
/// reducing, so a trivial modular gcd proves a trivial gcd over Q (hence
/// minimal polynomial = characteristic polynomial for its matrix).
pub fn squarefree_certificate(coeffs: &[BigInt]) -> bool {
    const P: u64 = 1_000_000_007;
    let n = coeffs.len() - 1;
    let reduce = |c: &BigInt| -> u64 {
        let m = (c % BigInt::from(P) + BigInt::from(P)) % BigInt::from(P);
        m.to_u64().unwrap()
    };
    // ascending order for the mod-p gcd
    let poly: Vec<u64> = coeffs.iter().rev().map(reduce).collect();
    let deriv: Vec<u64> = (1..=n).map(|i| (i as u64) % P * poly[i] % P).collect();
    let g = crate::field::poly_gcd(&poly, &deriv, P);
    g.len() == 1 && g[0] != 0
}

fn poly_eval(cf: &[f64], z: Complex64) -> Complex64 {
    // cf ascending; Horner from the top
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in cf.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Backward error of z as a root: |p(z)| / sum_i |c_i| max(1,|z|)^i.
fn backward_error(cf: &[f64], z: Complex64) -> f64 {
    let pz = poly_eval(cf, z).norm();
    let zn = z.norm().max(1.0);
    let mut scale = 0.0;
    let mut pw = 1.0;
    for &c in cf {
        scale += c.abs() * pw;
        pw *= zn;
    }
    pz / scale.max(f64::MIN_POSITIVE)
}

fn durand_kerner(cf: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    let deg = cf.len() - 1;
    let lead = cf[deg];
    let monic: Vec<f64> = cf.iter().map(|c| c / lead).collect();
    // Cauchy-style radius
    let radius = 1.0 + monic[..deg].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| seed.powu(k as u32 + 1) * radius / seed.norm())
        .collect();
    for _ in 0..2000 {
        let mut delta_max = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-300, 0.0);
            }
            let step = poly_eval(&monic, z[i]) / denom;
            z[i] -= step;
            delta_max = delta_max.max(step.norm());
        }
        if delta_max < 1e-14 * radius {
            break;
        }
    }
    let residuals: Vec<f64> = z.iter().map(|&zi| backward_error(&monic, zi)).collect();
    if residuals.iter().any(|&r| r > tol) {
        return Err(Error::NonConvergence(residuals));
    }
    Ok(z)
}
