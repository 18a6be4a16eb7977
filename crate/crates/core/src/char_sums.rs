//! Cyclotomic numbers, Jacobi sums and Dickson-Hurwitz sums.
//!
//! The cyclotomic number (a,b)_e counts v in F_q \ {0,-1} with
//! ind(v) = a and ind(v+1) = b mod e. One O(q) pass fills the full e x e
//! table; every character sum afterwards is assembled from that table in
//! exponent-vector form and canonicalized on demand.
//!
//! Character convention: chi_e(gamma) = zeta_e and chi_e^m(0) = 0 for every
//! m, including m = 0. This makes J_e(0,0) = q - 2, consistent with the
//! table row sums.

use crate::cyclotomic::{canonicalize, CycInt, CycPoly};
use crate::error::{Error, Result};
use crate::field::{DLogTable, FieldDescriptor};
use serde::Serialize;
use std::sync::Arc;

/// A field together with a divisor e of q - 1 and the cofactor k = (q-1)/e.
#[derive(Debug, Clone)]
pub struct CyclotomyContext {
    pub field: Arc<FieldDescriptor>,
    pub dlog: Arc<DLogTable>,
    pub e: u32,
    pub k: u64,
}

impl CyclotomyContext {
    pub fn new(field: Arc<FieldDescriptor>, dlog: Arc<DLogTable>, e: u32) -> Result<Self> {
        if e < 2 || (field.q - 1) % e as u64 != 0 {
            return Err(Error::OrderDoesNotDivide {
                order: e,
                qm1: field.q - 1,
            });
        }
        let k = (field.q - 1) / e as u64;
        Ok(CyclotomyContext { field, dlog, e, k })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    Cyclotomic,
    DicksonHurwitz,
}

/// Provenance of a table: enough to reproduce it bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub p: u64,
    pub r: u32,
    pub poly: Vec<u64>,
    pub gamma: Vec<u64>,
}

impl Provenance {
    pub fn of(ctx: &CyclotomyContext) -> Self {
        Provenance {
            p: ctx.field.p,
            r: ctx.field.r,
            poly: ctx.field.defining_poly.clone(),
            gamma: ctx.dlog.generator.0.clone(),
        }
    }
}

/// An e x e integer table indexed by residues (a, b) mod e.
#[derive(Debug, Clone, Serialize)]
pub struct SumTable {
    pub kind: TableKind,
    pub e: u32,
    pub q: u64,
    pub k: u64,
    pub values: Vec<i64>,
    pub provenance: Provenance,
}

impl SumTable {
    #[inline]
    pub fn get(&self, a: i64, b: i64) -> i64 {
        let e = self.e as i64;
        self.values[(a.rem_euclid(e) * e + b.rem_euclid(e)) as usize]
    }

    pub fn row_sum(&self, a: i64) -> i64 {
        (0..self.e as i64).map(|b| self.get(a, b)).sum()
    }

    pub fn col_sum(&self, b: i64) -> i64 {
        (0..self.e as i64).map(|a| self.get(a, b)).sum()
    }

    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }
}

/// Exact count of v with ind(v) = a, ind(v+1) = b mod e; one pass over
/// F_q^x \ {-1}.
pub fn cyclotomic_number(ctx: &CyclotomyContext, a: i64, b: i64) -> i64 {
    let e = ctx.e as i64;
    let a = a.rem_euclid(e) as u32;
    let b = b.rem_euclid(e) as u32;
    let mut count = 0i64;
    for_each_pair(ctx, |ia, ib| {
        if ia == a && ib == b {
            count += 1;
        }
    });
    count
}

/// Visit (ind(v) mod e, ind(v+1) mod e) for every v in F_q \ {0, -1}.
fn for_each_pair(ctx: &CyclotomyContext, mut f: impl FnMut(u32, u32)) {
    let field = &ctx.field;
    let e = ctx.e;
    let p = field.p as usize;
    let q = field.q as usize;
    let raw = ctx.dlog.raw();
    for cv in 1..q {
        // canonical index of v + 1: only the constant digit moves
        let cnext = if cv % p == p - 1 { cv + 1 - p } else { cv + 1 };
        if cnext == 0 {
            continue; // v = -1
        }
        let ia = raw[cv] % e;
        let ib = raw[cnext] % e;
        f(ia, ib);
    }
}

/// Build the complete cyclotomic-number table in one O(q) pass.
pub fn full_table(ctx: &CyclotomyContext) -> SumTable {
    let e = ctx.e as usize;
    let mut values = vec![0i64; e * e];
    for_each_pair(ctx, |a, b| values[a as usize * e + b as usize] += 1);
    let table = SumTable {
        kind: TableKind::Cyclotomic,
        e: ctx.e,
        q: ctx.field.q,
        k: ctx.k,
        values,
        provenance: Provenance::of(ctx),
    };
    debug_assert!(table.values.iter().all(|&v| v >= 0));
    debug_assert_eq!(table.total(), ctx.field.q as i64 - 2);
    table
}

/// J_e(i,j) = sum over v of chi^i(v) chi^j(v+1), by direct enumeration.
pub fn jacobi_sum(ctx: &CyclotomyContext, i: i64, j: i64) -> CycInt {
    let mut acc = CycPoly::zero(ctx.e);
    for_each_pair(ctx, |a, b| {
        acc.add_term(i * a as i64 + j * b as i64, 1);
    });
    canonicalize(&acc)
}

/// Raw exponent vector of J_e(i,j) assembled from the table:
/// raw[m] = sum of (a,b)_e over ia + jb = m (mod e).
pub fn jacobi_raw(table: &SumTable, i: i64, j: i64) -> Result<Vec<i64>> {
    if table.kind != TableKind::Cyclotomic {
        return Err(Error::KindMismatch {
            expected: "cyclotomic",
        });
    }
    let e = table.e as i64;
    let mut raw = vec![0i64; table.e as usize];
    for a in 0..e {
        for b in 0..e {
            let v = table.values[(a * e + b) as usize];
            if v != 0 {
                raw[((i * a + j * b).rem_euclid(e)) as usize] += v;
            }
        }
    }
    Ok(raw)
}

/// J_e(a,b) reconstructed from the cyclotomic table via the finite Fourier
/// relation; must agree exactly with direct enumeration.
pub fn jacobi_from_cyclo(table: &SumTable, a: i64, b: i64) -> Result<CycInt> {
    let raw = jacobi_raw(table, a, b)?;
    Ok(canonicalize(&CycPoly::from_i64(table.e, &raw)))
}

/// All e^2 Jacobi sums of a table, kept as raw exponent vectors.
pub struct JacobiTable {
    pub e: u32,
    raw: Vec<Vec<i64>>,
}

impl JacobiTable {
    pub fn build(table: &SumTable) -> Result<Self> {
        let e = table.e as i64;
        let mut raw = Vec::with_capacity((e * e) as usize);
        for i in 0..e {
            for j in 0..e {
                raw.push(jacobi_raw(table, i, j)?);
            }
        }
        Ok(JacobiTable { e: table.e, raw })
    }

    #[inline]
    pub fn raw(&self, i: i64, j: i64) -> &[i64] {
        let e = self.e as i64;
        &self.raw[(i.rem_euclid(e) * e + j.rem_euclid(e)) as usize]
    }

    pub fn canonical(&self, i: i64, j: i64) -> CycInt {
        canonicalize(&CycPoly::from_i64(self.e, self.raw(i, j)))
    }
}

/// Invert the Fourier relation: assemble sum over (i,j) of
/// zeta^{-(ai+bj)} J(i,j), check it is the constant e^2 * (integer), and
/// return that integer. Must equal the direct count.
pub fn cyclo_from_jacobi(jacobi: &JacobiTable, a: i64, b: i64) -> Result<i64> {
    let e = jacobi.e as i64;
    let mut acc = vec![0i64; jacobi.e as usize];
    for i in 0..e {
        for j in 0..e {
            let shift = (-(a * i + b * j)).rem_euclid(e);
            let raw = jacobi.raw(i, j);
            for (m, &c) in raw.iter().enumerate() {
                if c != 0 {
                    acc[((m as i64 + shift) % e) as usize] += c;
                }
            }
        }
    }
    let canon = canonicalize(&CycPoly::from_i64(jacobi.e, &acc));
    for (idx, c) in canon.coeffs().iter().enumerate().skip(1) {
        if !num_traits::Zero::is_zero(c) {
            return Err(Error::NonConstantResult {
                idx,
                value: c.to_string(),
            });
        }
    }
    let constant = canon.coeffs()[0].clone();
    let esq = (e * e) as u64;
    let (quot, rem) = num_integer::Integer::div_rem(&constant, &num_bigint::BigInt::from(esq));
    if !num_traits::Zero::is_zero(&rem) {
        return Err(Error::NotDivisibleByESquared {
            value: constant.to_string(),
            esq,
        });
    }
    Ok(num_traits::ToPrimitive::to_i64(&quot).expect("count fits i64"))
}

/// Dickson-Hurwitz sum B_e(a,b) = sum over h of (h, a - bh)_e.
pub fn dickson_hurwitz(table: &SumTable, a: i64, b: i64) -> i64 {
    let e = table.e as i64;
    (0..e).map(|h| table.get(h, a - b * h)).sum()
}

/// The full Dickson-Hurwitz table derived from a cyclotomic table.
pub fn dickson_hurwitz_table(table: &SumTable) -> SumTable {
    let e = table.e as i64;
    let mut values = Vec::with_capacity((e * e) as usize);
    for a in 0..e {
        for b in 0..e {
            values.push(dickson_hurwitz(table, a, b));
        }
    }
    SumTable {
        kind: TableKind::DicksonHurwitz,
        e: table.e,
        q: table.q,
        k: table.k,
        values,
        provenance: table.provenance.clone(),
    }
}

/// Reading of the half-order sum's "(i - na)/2": division by 2 is
/// multiplication by (l^2+1)/2 mod l^2; the residue is then lifted to
/// [0, 2l^2) either directly (Low) or shifted by l^2 (High).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DhHalfLift {
    Low,
    High,
}

/// Half-order Dickson-Hurwitz sum B_{l^2}(i, n) over the order-2l^2
/// cyclotomic table: sum over a in [0, l^2) of (a, (i - na)/2).
pub fn dh_half(table: &SumTable, ell: u32, i: i64, n: i64, lift: DhHalfLift) -> i64 {
    let lsq = (ell * ell) as i64;
    debug_assert_eq!(table.e as i64, 2 * lsq);
    let inv2 = (lsq + 1) / 2; // inverse of 2 mod l^2
    let mut acc = 0i64;
    for a in 0..lsq {
        let mut b = ((i - n * a).rem_euclid(lsq) * inv2).rem_euclid(lsq);
        if lift == DhHalfLift::High {
            b += lsq;
        }
        acc += table.get(a, b);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::embed_numeric;
    use crate::field::{build_dlog_table, find_generator, make_field, FieldElement};

    pub(crate) fn ctx_for(p: u64, r: u32, e: u32, gen: Option<Vec<u64>>) -> CyclotomyContext {
        let field = Arc::new(make_field(p, r, None).unwrap());
        let g = match gen {
            Some(c) => FieldElement(c),
            None => find_generator(&field),
        };
        let dlog = Arc::new(build_dlog_table(&field, &g).unwrap());
        CyclotomyContext::new(field, dlog, e).unwrap()
    }

    #[test]
    fn cubic_count_f19() {
        // Gauss: 9 (0,0)_3 = q - 8 + L with 4q = L^2 + 27 M^2, L = 1 mod 3
        // gives L = 7 for q = 19, hence (0,0)_3 = 2.
        let ctx = ctx_for(19, 1, 3, None);
        assert_eq!(cyclotomic_number(&ctx, 0, 0), 2);
    }

    #[test]
    fn table_sums() {
        let ctx = ctx_for(19, 1, 18, None);
        let t = full_table(&ctx);
        assert_eq!(t.total(), 17);
        let ctx37 = ctx_for(37, 1, 18, None);
        assert_eq!(full_table(&ctx37).total(), 35);
        // e = q - 1: every entry is 0 or 1
        assert!(t.values.iter().all(|&v| v == 0 || v == 1));
        // column b = 0 sums to k - 1
        assert_eq!(t.col_sum(0), ctx.k as i64 - 1);
    }

    #[test]
    fn table_matches_single_counts() {
        let ctx = ctx_for(19, 1, 6, None);
        let t = full_table(&ctx);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(t.get(a, b), cyclotomic_number(&ctx, a, b));
            }
        }
    }

    #[test]
    fn jacobi_hand_value_f7() {
        // J_3(1,1) over F_7 with gamma = 3 is 2 + 3 zeta^2, canonical (-1, -3).
        let ctx = ctx_for(7, 1, 3, None);
        assert_eq!(ctx.dlog.generator, FieldElement(vec![3]));
        let j = jacobi_sum(&ctx, 1, 1);
        let expect = CycInt::constant(3, 2)
            .add(&CycInt::zeta_pow(3, 2).scale(3))
            .unwrap();
        assert_eq!(j, expect);
        assert_eq!(j.coeffs()[0], num_bigint::BigInt::from(-1));
        assert_eq!(j.coeffs()[1], num_bigint::BigInt::from(-3));
        let norm = embed_numeric(&j, 1).unwrap().norm_sqr();
        assert!((norm - 7.0).abs() < 1e-9);
    }

    #[test]
    fn jacobi_zero_zero_is_q_minus_2() {
        let ctx = ctx_for(19, 1, 18, None);
        assert_eq!(jacobi_sum(&ctx, 0, 0), CycInt::constant(18, 17));
    }

    #[test]
    fn jacobi_lifts_across_orders() {
        // J_3(1,1) over F_7 lifted into Z[zeta_18] embeds identically under
        // zeta_3 -> zeta_18^6.
        let ctx = ctx_for(7, 1, 3, None);
        let j3 = jacobi_sum(&ctx, 1, 1);
        let lifted = crate::cyclotomic::lift_order(&j3, 18).unwrap();
        let a = embed_numeric(&j3, 1).unwrap();
        let b = embed_numeric(&lifted, 1).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn jacobi_raw_rejects_dh_tables() {
        let ctx = ctx_for(19, 1, 18, None);
        let dh = dickson_hurwitz_table(&full_table(&ctx));
        assert!(matches!(
            jacobi_raw(&dh, 1, 1),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn context_rejects_bad_order() {
        let field = Arc::new(make_field(19, 1, None).unwrap());
        let g = find_generator(&field);
        let dlog = Arc::new(build_dlog_table(&field, &g).unwrap());
        assert!(matches!(
            CyclotomyContext::new(field.clone(), dlog.clone(), 5),
            Err(Error::OrderDoesNotDivide { .. })
        ));
        assert!(matches!(
            CyclotomyContext::new(field, dlog, 1),
            Err(Error::OrderDoesNotDivide { .. })
        ));
    }

    #[test]
    fn jacobi_absolute_value() {
        let ctx = ctx_for(19, 1, 18, None);
        for (i, j) in [(1i64, 1i64), (2, 3), (5, 11)] {
            if (i + j) % 18 == 0 {
                continue;
            }
            let js = jacobi_sum(&ctx, i, j);
            let norm = embed_numeric(&js, 1).unwrap().norm_sqr();
            assert!((norm - 19.0).abs() < 1e-6, "|J({i},{j})|^2 = {norm}");
        }
    }

    #[test]
    fn jacobi_from_table_equals_direct() {
        let ctx = ctx_for(19, 1, 18, None);
        let table = full_table(&ctx);
        for a in 0..18 {
            for b in 0..18 {
                assert_eq!(
                    jacobi_from_cyclo(&table, a, b).unwrap(),
                    jacobi_sum(&ctx, a, b)
                );
            }
        }
    }

    #[test]
    fn inverse_transform_recovers_counts() {
        let ctx = ctx_for(19, 1, 18, None);
        let table = full_table(&ctx);
        let jt = JacobiTable::build(&table).unwrap();
        for a in 0..18 {
            for b in 0..18 {
                assert_eq!(cyclo_from_jacobi(&jt, a, b).unwrap(), table.get(a, b));
            }
        }
    }

    #[test]
    fn inverse_transform_small_order() {
        let ctx = ctx_for(19, 1, 3, None);
        let table = full_table(&ctx);
        let jt = JacobiTable::build(&table).unwrap();
        assert_eq!(cyclo_from_jacobi(&jt, 0, 0).unwrap(), 2);
    }

    #[test]
    fn generator_change_permutes_table() {
        // gamma -> gamma^s scales indices by s^{-1}, so the new table is the
        // old one with both residues multiplied by s.
        let ctx1 = ctx_for(19, 1, 18, None);
        let t1 = full_table(&ctx1);
        let s = 5i64; // gcd(5, 18) = 1
        let g2 = ctx1.field.pow(&ctx1.dlog.generator, s as u64);
        let ctx2 = ctx_for(19, 1, 18, Some(g2.0.clone()));
        let t2 = full_table(&ctx2);
        for a in 0..18 {
            for b in 0..18 {
                assert_eq!(t2.get(a, b), t1.get(s * a, s * b));
            }
        }
    }

    #[test]
    fn dickson_hurwitz_closed_forms() {
        let ctx = ctx_for(19, 1, 18, None);
        let t = full_table(&ctx);
        let k = ctx.k as i64;
        assert_eq!(dickson_hurwitz(&t, 0, 0), k - 1);
        assert_eq!(dickson_hurwitz(&t, 5, 0), k);
        let s: i64 = (0..18).map(|a| dickson_hurwitz(&t, a, 1)).sum();
        assert_eq!(s, 17);
    }
}
