//! Finite fields F_{p^r} with full discrete-logarithm tables.
//!
//! Elements are coefficient vectors of residue classes modulo a monic
//! irreducible polynomial over F_p (a single residue when r = 1). Every
//! character sum downstream iterates over all of F_q, so the engine
//! tabulates ind_gamma(v) for every nonzero v once and answers lookups in
//! O(1) afterwards.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default bound on q = p^r. Large enough for every workload in the test
/// plan while keeping the dlog table comfortably in memory.
pub const DEFAULT_SIZE_BOUND: u64 = 1 << 31;

/// A finite field F_{p^r}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    /// Odd prime characteristic.
    pub p: u64,
    /// Extension degree, >= 1.
    pub r: u32,
    /// p^r.
    pub q: u64,
    /// Monic defining polynomial, coefficients in [0, p) listed by
    /// ascending degree, length r + 1. For r = 1 this is the placeholder x.
    pub defining_poly: Vec<u64>,
}

/// An element of F_{p^r}: the coefficient vector (c_0, ..., c_{r-1}) of its
/// residue-class polynomial, all entries reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElement(pub Vec<u64>);

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Text form used by the CLI and cache keys: comma-joined coefficients.
    pub fn display(&self) -> String {
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime
    pow_mod(a, p - 2, p)
}

/// Deterministic primality check by trial division (n < 2^31 in practice).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division; returns (prime, multiplicity)
/// pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut m = 0;
            while n % d == 0 {
                n /= d;
                m += 1;
            }
            out.push((d, m));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over F_p (dense, ascending-degree coefficient vecs)
// ---------------------------------------------------------------------------

fn poly_trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    poly_trim(&mut a);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while a.len() > dm {
        let da = a.len() - 1;
        let factor = mul_mod(a[da], lead_inv, p);
        if factor != 0 {
            for i in 0..=dm {
                let sub = mul_mod(factor, m[i], p);
                let idx = da - dm + i;
                a[idx] = (a[idx] + p - sub) % p;
            }
        }
        a.pop();
        poly_trim(&mut a);
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn poly_mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod(ai, bj, p)) % p;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, m, p);
        }
        b = poly_mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &normalize_monic(&b, p), p);
        a = b;
        b = r;
    }
    normalize_monic(&a, p)
}

fn normalize_monic(a: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    poly_trim(&mut a);
    let lead = *a.last().unwrap();
    if lead != 0 && lead != 1 {
        let inv = inv_mod(lead, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

/// Irreducibility of a monic degree-r polynomial over F_p: x^{p^r} = x mod f
/// and gcd(x^{p^{r/s}} - x, f) = 1 for every prime s | r.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let r = (f.len() - 1) as u32;
    if r == 0 {
        return false;
    }
    if r == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // x^{p^r} mod f, by r successive Frobenius powers
    let mut xp = x.clone();
    for _ in 0..r {
        xp = poly_pow_mod(&xp, p, f, p);
    }
    let mut wanted = poly_rem(&x, f, p);
    poly_trim(&mut wanted);
    let mut got = xp.clone();
    poly_trim(&mut got);
    if got != wanted {
        return false;
    }
    for (s, _) in factorize(r as u64) {
        let d = r as u64 / s;
        let mut xpd = x.clone();
        for _ in 0..d {
            xpd = poly_pow_mod(&xpd, p, f, p);
        }
        // x^{p^d} - x
        let mut diff = xpd;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(&diff, f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree r
/// over F_p; coefficient lists are compared ascending-degree, so the search
/// runs c_0 outermost.
fn smallest_irreducible(p: u64, r: u32) -> Vec<u64> {
    let mut coeffs = vec![0u64; r as usize + 1];
    coeffs[r as usize] = 1;
    loop {
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
        // odometer on (c_{r-1}, ..., c_0) so that c_0 varies slowest
        let mut i = r as usize;
        loop {
            assert!(i > 0, "no irreducible polynomial found (impossible)");
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

impl FieldDescriptor {
    /// Additive successor v + 1 (only the constant coefficient moves).
    pub fn add_one(&self, v: &FieldElement) -> FieldElement {
        let mut c = v.0.clone();
        c[0] = (c[0] + 1) % self.p;
        FieldElement(c)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.r as usize])
    }

    pub fn one(&self) -> FieldElement {
        let mut c = vec![0; self.r as usize];
        c[0] = 1;
        FieldElement(c)
    }

    pub fn minus_one(&self) -> FieldElement {
        let mut c = vec![0; self.r as usize];
        c[0] = self.p - 1;
        FieldElement(c)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.r == 1 {
            return FieldElement(vec![mul_mod(a.0[0], b.0[0], self.p)]);
        }
        let mut prod = poly_mul_mod(&a.0, &b.0, &self.defining_poly, self.p);
        prod.resize(self.r as usize, 0);
        FieldElement(prod)
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Canonical integer index sum c_i p^i in [0, q); a bijection used to
    /// address per-element tables.
    pub fn canonical_index(&self, v: &FieldElement) -> usize {
        let mut idx = 0u64;
        for &c in v.0.iter().rev() {
            idx = idx * self.p + c;
        }
        idx as usize
    }

    pub fn element_from_index(&self, mut idx: u64) -> FieldElement {
        let mut c = vec![0u64; self.r as usize];
        for ci in c.iter_mut() {
            *ci = idx % self.p;
            idx /= self.p;
        }
        FieldElement(c)
    }

    /// Multiplicative order exactly q - 1, verified through the prime
    /// factorization of q - 1.
    pub fn is_generator(&self, g: &FieldElement) -> bool {
        if g.is_zero() {
            return false;
        }
        for (l, _) in factorize(self.q - 1) {
            if self.pow(g, (self.q - 1) / l) == self.one() {
                return false;
            }
        }
        true
    }

    /// All generators of F_q^x, in canonical-index order.
    pub fn generators(&self) -> Vec<FieldElement> {
        let g = find_generator(self);
        let mut out = Vec::new();
        for s in 1..self.q - 1 {
            if num_integer::gcd(s, self.q - 1) == 1 {
                out.push(self.pow(&g, s));
            }
        }
        out.sort_by_key(|v| self.canonical_index(v));
        out
    }
}

/// Validate and construct F_{p^r}. When `defining_poly` is absent and
/// r > 1, the lexicographically smallest monic irreducible polynomial is
/// selected by exhaustive search, so descriptors are reproducible.
pub fn make_field(p: u64, r: u32, defining_poly: Option<Vec<u64>>) -> Result<FieldDescriptor> {
    make_field_bounded(p, r, defining_poly, DEFAULT_SIZE_BOUND)
}

pub fn make_field_bounded(
    p: u64,
    r: u32,
    defining_poly: Option<Vec<u64>>,
    bound: u64,
) -> Result<FieldDescriptor> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if r < 1 {
        return Err(Error::Unsupported("extension degree must be >= 1".into()));
    }
    let mut q: u64 = 1;
    for _ in 0..r {
        q = q.saturating_mul(p);
    }
    if q > bound {
        return Err(Error::SizeExceeded { q, bound });
    }
    if p == 2 {
        return Err(Error::Unsupported(
            "characteristic 2 is out of scope".into(),
        ));
    }
    if q < 7 {
        return Err(Error::Unsupported(format!("q = {q} is below 7")));
    }
    let defining_poly = match (r, defining_poly) {
        (1, None) => vec![0, 1],
        (1, Some(poly)) => {
            if poly != vec![0, 1] {
                return Err(Error::Unsupported(
                    "r = 1 admits only the placeholder polynomial x".into(),
                ));
            }
            poly
        }
        (_, None) => smallest_irreducible(p, r),
        (_, Some(poly)) => {
            if poly.len() != r as usize + 1 || poly[r as usize] != 1 || poly.iter().any(|&c| c >= p)
            {
                return Err(Error::Reducible(poly, p));
            }
            if !is_irreducible(&poly, p) {
                return Err(Error::Reducible(poly, p));
            }
            poly
        }
    };
    Ok(FieldDescriptor {
        p,
        r,
        q,
        defining_poly,
    })
}

/// The least element (canonical-index order: constants first, then by
/// ascending higher coefficients) whose multiplicative order is q - 1.
pub fn find_generator(field: &FieldDescriptor) -> FieldElement {
    for idx in 2..field.q {
        let cand = field.element_from_index(idx);
        if field.is_generator(&cand) {
            return cand;
        }
    }
    unreachable!("F_q^x is cyclic, a generator exists");
}

// ---------------------------------------------------------------------------
// Discrete-log table
// ---------------------------------------------------------------------------

const NO_INDEX: u32 = u32::MAX;

/// The full index map v -> ind_gamma(v) on F_q^x.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DLogTable {
    pub generator: FieldElement,
    pub q: u64,
    /// Indexed by canonical element index; NO_INDEX marks the zero element.
    index_of: Vec<u32>,
}

impl DLogTable {
    /// ind_gamma(v), or None for v = 0.
    pub fn index_of(&self, field: &FieldDescriptor, v: &FieldElement) -> Option<u32> {
        self.index_at(field.canonical_index(v))
    }

    /// Lookup by canonical element index.
    #[inline]
    pub fn index_at(&self, canonical: usize) -> Option<u32> {
        match self.index_of[canonical] {
            NO_INDEX => None,
            i => Some(i),
        }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.index_of
    }

    pub(crate) fn from_raw(generator: FieldElement, q: u64, index_of: Vec<u32>) -> Self {
        DLogTable {
            generator,
            q,
            index_of,
        }
    }
}

/// One pass of q - 1 multiplications fills the table; bijectivity is
/// checked as the walk proceeds (a repeat before step q - 1 means the
/// claimed generator has smaller order).
pub fn build_dlog_table(field: &FieldDescriptor, generator: &FieldElement) -> Result<DLogTable> {
    let q = field.q;
    let mut index_of = vec![NO_INDEX; q as usize];
    let mut cur = field.one();
    for i in 0..(q - 1) {
        let ci = field.canonical_index(&cur);
        if index_of[ci] != NO_INDEX {
            return Err(Error::NotAGenerator(i));
        }
        index_of[ci] = i as u32;
        cur = field.mul(&cur, generator);
    }
    if cur != field.one() {
        return Err(Error::NotAGenerator(q - 1));
    }
    Ok(DLogTable {
        generator: generator.clone(),
        q,
        index_of,
    })
}
