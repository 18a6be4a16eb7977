//! The order-2l^2 cyclotomic-number formula, evaluated two independent ways
//! and compared against direct enumeration.
//!
//! The trace form follows the Galois-orbit decomposition of the inverse
//! Fourier relation: split the sum of J(i,j) zeta^{-(ai+bj)} over index
//! pairs by gcd type, collapse the both-even block to order l^2 and the
//! multiple-of-l blocks to orders 2l and l, and write each unit-index
//! family as an exact trace. The `Corrected` form carries the complete
//! bookkeeping (exact overlap of the two unit families, the J(i,0)/J(0,j)
//! boundary sums, and the i=0/j=0 rows of the collapsed blocks) and is an
//! identity; the `Literal` form follows the usual shortened assembly
//! (diagonal-only overlap, uniform minus on the collapsed families) and is
//! evaluated for the record.

use crate::char_sums::{full_table, CyclotomyContext, JacobiTable, SumTable};
use crate::coefficients::{epsilon, extract_coeffs, CoeffSet, SubscriptRule};
use crate::cyclotomic::{collapse_to_odd, trace_table};
use crate::error::Result;
use crate::field::{DLogTable, FieldDescriptor};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::sync::Arc;

/// Which assembly of the trace form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TraceForm {
    /// Complete orbit decomposition; an exact identity.
    Corrected,
    /// The shortened assembly: diagonal-only overlap correction, uniform
    /// minus on the collapsed (li,2)/(2,lj) families, boundary sums dropped.
    Literal,
}

/// Binding of the free coefficient index n in the coefficient form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NResolution {
    /// n follows the summation index of each family (i in the i-sums,
    /// j in the j-sums).
    PerTerm,
    /// One global n for every coefficient.
    FixedGlobal(i64),
}

/// Everything the order-2l^2 formula needs, precomputed once per
/// (field, generator, l).
pub struct Thm2Engine {
    pub ell: u32,
    pub e: u32,
    pub q: u64,
    pub k: u64,
    pub ctx_e: CyclotomyContext,
    pub table_e: SumTable,
    pub table_l2: SumTable,
    pub table_2l: SumTable,
    pub table_l: SumTable,
    pub jacobi_e: JacobiTable,
    pub jacobi_l2: JacobiTable,
    trz: Vec<i64>,
    trz_l2: Vec<i64>,
    /// raw exponent vectors of J(i,1) and J(1,j), i, j in [0, e)
    raw_i1: Vec<Vec<i64>>,
    raw_1j: Vec<Vec<i64>>,
    /// collapsed-to-order-l^2 coefficient vectors of J(li,2) and J(2,lj), odd i/j in [1, 2l)
    coll_li2: Vec<(i64, Vec<i64>)>,
    coll_2lj: Vec<(i64, Vec<i64>)>,
    units: Vec<i64>,
    /// d_{i,n} and b_{i,n} for every n (orders 2l^2 and l^2)
    dsets: Vec<CoeffSet>,
    bsets: Vec<CoeffSet>,
}

impl Thm2Engine {
    pub fn new(field: Arc<FieldDescriptor>, dlog: Arc<DLogTable>, ell: u32) -> Result<Self> {
        let e = 2 * ell * ell;
        let ctx_e = CyclotomyContext::new(field.clone(), dlog.clone(), e)?;
        let ctx_l2 = CyclotomyContext::new(field.clone(), dlog.clone(), ell * ell)?;
        let ctx_2l = CyclotomyContext::new(field.clone(), dlog.clone(), 2 * ell)?;
        let ctx_l = CyclotomyContext::new(field.clone(), dlog.clone(), ell)?;
        let table_e = full_table(&ctx_e);
        let table_l2 = full_table(&ctx_l2);
        let table_2l = full_table(&ctx_2l);
        let table_l = full_table(&ctx_l);
        let jacobi_e = JacobiTable::build(&table_e)?;
        let jacobi_l2 = JacobiTable::build(&table_l2)?;
        let raw_i1 = (0..e as i64).map(|i| jacobi_e.raw(i, 1).to_vec()).collect();
        let raw_1j = (0..e as i64).map(|j| jacobi_e.raw(1, j).to_vec()).collect();
        let li = ell as i64;
        let lsq = li * li;
        let mut coll_li2 = Vec::new();
        let mut coll_2lj = Vec::new();
        for i in (1..2 * li).step_by(2) {
            let c = collapse_to_odd(&jacobi_e.canonical(li * i, 2))?;
            let mut v = vec![0i64; lsq as usize];
            for (m, cc) in c.coeffs().iter().enumerate() {
                v[m] = cc.to_i64().expect("collapsed coefficient fits i64");
            }
            coll_li2.push((i, v));
            let c = collapse_to_odd(&jacobi_e.canonical(2, li * i))?;
            let mut v = vec![0i64; lsq as usize];
            for (m, cc) in c.coeffs().iter().enumerate() {
                v[m] = cc.to_i64().expect("collapsed coefficient fits i64");
            }
            coll_2lj.push((i, v));
        }
        let units = (1..e as i64)
            .filter(|&m| num_integer::gcd(m, e as i64) == 1)
            .collect();
        let dsets = (0..e as i64)
            .map(|n| extract_coeffs(&jacobi_e, n))
            .collect();
        let bsets = (0..lsq).map(|n| extract_coeffs(&jacobi_l2, n)).collect();
        let jacobi_l2_kept = jacobi_l2;
        Ok(Thm2Engine {
            ell,
            e,
            q: field.q,
            k: ctx_e.k,
            ctx_e,
            table_e,
            table_l2,
            table_2l,
            table_l,
            jacobi_e,
            jacobi_l2: jacobi_l2_kept,
            trz: trace_table(e),
            trz_l2: trace_table(ell * ell),
            raw_i1,
            raw_1j,
            coll_li2,
            coll_2lj,
            units,
            dsets,
            bsets,
        })
    }

    /// 4 l^4 (a,b)_{2l^2} by direct enumeration.
    pub fn ground_truth(&self, a: i64, b: i64) -> i64 {
        let li = self.ell as i64;
        4 * li.pow(4) * self.table_e.get(a, b)
    }

    /// Tr(J zeta^{-t}) for a raw order-e exponent vector.
    #[inline]
    fn tr_shift(&self, raw: &[i64], t: i64) -> i64 {
        let e = self.e as i64;
        let mut acc = 0i64;
        for (m, &c) in raw.iter().enumerate() {
            if c != 0 {
                acc += c * self.trz[((m as i64 - t).rem_euclid(e)) as usize];
            }
        }
        acc
    }

    /// Same at order l^2 for collapsed vectors.
    #[inline]
    fn tr_shift_l2(&self, raw: &[i64], t: i64) -> i64 {
        let lsq = (self.ell * self.ell) as i64;
        let mut acc = 0i64;
        for (m, &c) in raw.iter().enumerate() {
            if c != 0 {
                acc += c * self.trz_l2[((m as i64 - t).rem_euclid(lsq)) as usize];
            }
        }
        acc
    }

    /// The trace form of the order-2l^2 formula.
    pub fn trace_form(&self, a: i64, b: i64, form: TraceForm) -> i64 {
        let li = self.ell as i64;
        let lsq = li * li;
        let e = self.e as i64;
        let a = a.rem_euclid(e);
        let b = b.rem_euclid(e);
        let low = li.pow(4) * self.table_l2.get(a, b) + 4 * li * li * self.table_2l.get(a, b)
            - li * li * self.table_l.get(a, b);
        let f2: i64 = (1..e)
            .map(|i| self.tr_shift(&self.raw_i1[i as usize], i * a + b))
            .sum();
        let f3: i64 = (1..e)
            .map(|j| self.tr_shift(&self.raw_1j[j as usize], a + j * b))
            .sum();
        match form {
            TraceForm::Literal => {
                let t11 = self.tr_shift(&self.raw_1j[1], a + b);
                let inv2 = (lsq + 1) / 2;
                let g1: i64 = self
                    .coll_li2
                    .iter()
                    .map(|(i, v)| {
                        self.tr_shift_l2(v, (inv2 * (li * i * a + 2 * b)).rem_euclid(lsq))
                    })
                    .sum();
                let g2: i64 = self
                    .coll_2lj
                    .iter()
                    .map(|(j, v)| {
                        self.tr_shift_l2(v, (inv2 * (2 * a + li * j * b)).rem_euclid(lsq))
                    })
                    .sum();
                low + f2 + f3 - t11 - g1 - g2
            }
            TraceForm::Corrected => {
                let su: i64 = self
                    .units
                    .iter()
                    .map(|&m| self.tr_shift(&self.raw_i1[m as usize], m * a + b))
                    .sum();
                let g1: i64 = self
                    .coll_li2
                    .iter()
                    .map(|(i, _)| self.tr_shift(self.jacobi_e.raw(li * i, 2), li * i * a + 2 * b))
                    .sum();
                let g2: i64 = self
                    .coll_2lj
                    .iter()
                    .map(|(j, _)| self.tr_shift(self.jacobi_e.raw(2, li * j), 2 * a + li * j * b))
                    .sum();
                low + f2 + f3 - su + g1 + g2 + self.boundary(a, b)
            }
        }
    }

    /// Boundary terms the shortened assembly drops: the J(i,0)/J(0,j) sums
    /// (nonzero only for a or b in {0, l^2}) and the i=0/j=0 rows of the
    /// collapsed multiple-of-l block.
    fn boundary(&self, a: i64, b: i64) -> i64 {
        let li = self.ell as i64;
        let lsq = li * li;
        let k = self.k as i64;
        let sgn_k = if k % 2 == 0 { 1 } else { -1 };
        let v = |x: i64| {
            if x == 0 {
                lsq
            } else if x == lsq {
                -lsq
            } else {
                0
            }
        };
        -sgn_k * v(a) - v(b) + 2 * li * ((b % (2 * li) == 0) as i64) - li * ((b % li == 0) as i64)
            + 2 * li * ((a.rem_euclid(2 * li) == li * (k % 2)) as i64)
            - li * ((a % li == 0) as i64)
    }

    /// The statement's coefficient form, evaluated literally under the
    /// given n-binding and subscript rule, including the closing constant
    /// -l(q-2)(4l^2-3).
    pub fn coeff_form(&self, a: i64, b: i64, strategy: NResolution, rule: SubscriptRule) -> i64 {
        let li = self.ell as i64;
        let lsq = li * li;
        let e = self.e as i64;
        let q = self.q as i64;
        let a = a.rem_euclid(e);
        let b = b.rem_euclid(e);
        let d = |n: i64, m: i64| -> i64 {
            let cs = &self.dsets[n.rem_euclid(e) as usize];
            let v = match rule {
                SubscriptRule::ZeroExt => cs.zero_ext(m),
                SubscriptRule::FoldModPhi => {
                    cs.coeffs[m.rem_euclid(cs.coeffs.len() as i64) as usize].clone()
                }
            };
            v.to_i64().expect("coefficient fits i64")
        };
        let bc = |n: i64, m: i64| -> i64 {
            let cs = &self.bsets[n.rem_euclid(lsq) as usize];
            cs.zero_ext(m).to_i64().expect("coefficient fits i64")
        };
        let bclass = |n: i64, m: i64| -> i64 {
            self.bsets[n.rem_euclid(lsq) as usize]
                .class_sum(self.ell, m)
                .to_i64()
                .expect("class sum fits i64")
        };
        let bind = |family_index: i64| -> i64 {
            match strategy {
                NResolution::PerTerm => family_index,
                NResolution::FixedGlobal(n0) => n0,
            }
        };
        let mut acc = li.pow(4) * self.table_l2.get(a, b) + 4 * li * li * self.table_2l.get(a, b)
            - li * li * self.table_l.get(a, b)
            - li * (q - 2) * (4 * li * li - 3);
        for i in 2..e {
            let n = bind(i);
            let x = i * a + b;
            let mut term = li * (li - 1) * d(n, x);
            for u in (li - 1)..=(2 * li - 3) {
                term -= li * d(n, u * li + x);
            }
            acc += term;
        }
        for j in 1..e {
            let n = bind(j);
            let x = a + j * b;
            let mut term = li * (li - 1) * d(n, x);
            for u in (li - 1)..=(2 * li - 3) {
                term -= li * d(n, u * li + x);
            }
            acc += term;
        }
        let inv2 = (lsq + 1) / 2;
        for i in (1..2 * li).step_by(2) {
            let n = bind(li * i);
            let m = (inv2 * (li * i * a + 2 * b)).rem_euclid(lsq);
            acc -= epsilon(self.ell, m).unwrap() * bc(n, m) - li * bclass(n, m);
        }
        for j in (1..2 * li).step_by(2) {
            let n = bind(li * j);
            let m = (inv2 * (2 * a + li * j * b)).rem_euclid(lsq);
            acc -= epsilon(self.ell, m).unwrap() * bc(n, m) - li * bclass(n, m);
        }
        acc
    }
}

/// One evaluated cell, for JSON export.
#[derive(Debug, Clone, Serialize)]
pub struct Thm2Evaluation {
    pub a: i64,
    pub b: i64,
    pub ground_truth: i64,
    pub trace_form: i64,
    pub trace_form_literal: i64,
    pub coeff_form_per_term: i64,
}

pub fn evaluate_cell(engine: &Thm2Engine, a: i64, b: i64) -> Thm2Evaluation {
    Thm2Evaluation {
        a,
        b,
        ground_truth: engine.ground_truth(a, b),
        trace_form: engine.trace_form(a, b, TraceForm::Corrected),
        trace_form_literal: engine.trace_form(a, b, TraceForm::Literal),
        coeff_form_per_term: engine.coeff_form(a, b, NResolution::PerTerm, SubscriptRule::ZeroExt),
    }
}

/// Number of distinct cyclotomic numbers of order 2l^2 after symmetry
/// reduction: the arithmetic series 2l^2 + (2l^2-3) + (2l^2-6) + ...
/// descending to 2 (to 3, then +1, when l = 3).
pub fn distinct_count(ell: u32) -> u64 {
    let top = 2 * (ell as u64) * (ell as u64);
    if ell == 3 {
        let mut sum = 0;
        let mut term = top;
        while term >= 3 {
            sum += term;
            term -= 3;
        }
        sum + 1
    } else {
        let mut sum = 0;
        let mut term = top;
        while term >= 2 {
            sum += term;
            if term < 3 {
                break;
            }
            term -= 3;
        }
        sum
    }
}
