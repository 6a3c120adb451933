//! Exact arithmetic in small finite fields GF(p^k).
//!
//! Elements are canonical integers in `[0, q)` encoding polynomial residues
//! base `p` (value = sum of c_i * p^i). For `q <= 512` full addition,
//! multiplication and inverse tables are precomputed; larger fields fall back
//! to discrete-log tables for multiplication and digitwise addition.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field size.
pub const MAX_ORDER: u64 = 1 << 16;
/// Fields up to this order carry full q x q operation tables.
const FULL_TABLE_LIMIT: u32 = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("field order {0} exceeds the 2^16 limit")]
    FieldTooLarge(u64),
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    BadModulus { expected: u32, got: usize },
    #[error("elements from different fields cannot be combined")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
}

/// Field spec as it appears in curve-model config files.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldConfig {
    pub p: u64,
    pub k: u32,
    /// Coefficients low-to-high, length k+1, monic.
    pub modulus: Vec<u64>,
}

struct FieldInner {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    symbol: String,
    /// exp[i] = g^i for the least primitive element g, length q-1.
    exp: Vec<u16>,
    /// log[v] for v in [1, q); log[0] is unused.
    log: Vec<u16>,
    neg_t: Vec<u16>,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    inv_t: Vec<u16>,
}

/// Handle to an immutable finite field; cheap to clone and share across threads.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.k == other.inner.k
                && self.inner.modulus == other.inner.modulus)
    }
}
impl Eq for Field {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomial over GF(p), coefficients low-to-high.
fn poly_mod(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    // b monic
    while a.len() >= b.len() {
        let lead = *a.last().unwrap();
        if lead != 0 {
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                let v = (a[idx] + p - (lead * bc) % p) % p;
                a[idx] = v;
            }
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn poly_eval(a: &[u32], x: u32, p: u32) -> u32 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = (acc * x as u64 + c as u64) % p as u64;
    }
    acc as u32
}

/// Irreducibility over GF(p): root search for degree <= 3, trial division above.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    if k == 1 {
        return true;
    }
    if k <= 3 {
        return (0..p).all(|x| poly_eval(modulus, x, p) != 0);
    }
    // trial division by all monic polynomials of degree 1..=k/2
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                divisor.push((v % p as u64) as u32);
                v /= p as u64;
            }
            divisor.push(1);
            if poly_mod(modulus.to_vec(), &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut v: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    let mut v = 0u32;
    for &d in ds.iter().rev() {
        v = v * p + d;
    }
    v
}

fn factorize(mut n: u32) -> Vec<u32> {
    let mut fs = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            fs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

impl Field {
    /// Builds GF(p^k) with the given defining polynomial (coefficients
    /// low-to-high, monic of degree k). Tables are precomputed up front.
    pub fn new(p: u64, k: u32, modulus: &[u64]) -> Result<Field, GfError> {
        Self::with_symbol(p, k, modulus, "g")
    }

    /// Same as [`Field::new`] but fixes the display symbol for the primitive
    /// element (the paper-facing alpha/omega/w notation).
    pub fn with_symbol(p: u64, k: u32, modulus: &[u64], symbol: &str) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if k == 0 {
            return Err(GfError::BadModulus {
                expected: 1,
                got: 0,
            });
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_ORDER);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(GfError::FieldTooLarge((p as u64).saturating_pow(k))),
        };
        let p = p as u32;
        let modulus: Vec<u32> = modulus.iter().map(|&c| (c % p as u64) as u32).collect();
        if modulus.len() != k as usize + 1 || *modulus.last().unwrap() != 1 {
            return Err(GfError::BadModulus {
                expected: k,
                got: modulus.len().saturating_sub(1),
            });
        }
        if !is_irreducible(&modulus, p) {
            return Err(GfError::ReducibleModulus { p: p as u64 });
        }

        let raw_mul = |a: u32, b: u32| -> u32 {
            let da = digits(a, p, k);
            let db = digits(b, p, k);
            let prod = poly_mul(&da, &db, p);
            let red = poly_mod(prod, &modulus, p);
            let mut ds = red;
            ds.resize(k as usize, 0);
            undigits(&ds, p)
        };
        let raw_pow = |mut a: u32, mut e: u32| -> u32 {
            let mut acc = 1u32;
            while e > 0 {
                if e & 1 == 1 {
                    acc = raw_mul(acc, a);
                }
                a = raw_mul(a, a);
                e >>= 1;
            }
            acc
        };

        // least primitive element in canonical encoding
        let prime_factors = factorize(q - 1);
        let mut primitive = 0u32;
        for g in 1..q {
            let ok = prime_factors
                .iter()
                .all(|&f| raw_pow(g, (q - 1) / f) != 1)
                || q == 2;
            if ok {
                primitive = g;
                break;
            }
        }
        debug_assert!(primitive != 0);

        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u16; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x as u16);
            log[x as usize] = i as u16;
            x = raw_mul(x, primitive);
        }
        debug_assert_eq!(x, 1);

        let mut neg_t = vec![0u16; q as usize];
        for a in 0..q {
            let ds: Vec<u32> = digits(a, p, k).iter().map(|&d| (p - d) % p).collect();
            neg_t[a as usize] = undigits(&ds, p) as u16;
        }

        let (add_t, mul_t, inv_t) = if q <= FULL_TABLE_LIMIT {
            let n = q as usize;
            let mut add_t = vec![0u16; n * n];
            let mut mul_t = vec![0u16; n * n];
            for a in 0..q {
                let da = digits(a, p, k);
                for b in 0..q {
                    let db = digits(b, p, k);
                    let ds: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                    add_t[(a * q + b) as usize] = undigits(&ds, p) as u16;
                    mul_t[(a * q + b) as usize] = raw_mul(a, b) as u16;
                }
            }
            let mut inv_t = vec![0u16; n];
            for a in 1..q {
                inv_t[a as usize] = exp[((q - 1) - log[a as usize] as u32) as usize % (q - 1) as usize];
            }
            (add_t, mul_t, inv_t)
        } else {
            (vec![], vec![], vec![])
        };

        Ok(Field {
            inner: Arc::new(FieldInner {
                p,
                k,
                q,
                modulus,
                symbol: symbol.to_string(),
                exp,
                log,
                neg_t,
                add_t,
                mul_t,
                inv_t,
            }),
        })
    }

    pub fn from_config(cfg: &FieldConfig) -> Result<Field, GfError> {
        Field::new(cfg.p, cfg.k, &cfg.modulus)
    }

    pub fn config(&self) -> FieldConfig {
        FieldConfig {
            p: self.inner.p as u64,
            k: self.inner.k,
            modulus: self.inner.modulus.iter().map(|&c| c as u64).collect(),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn symbol(&self) -> &str {
        &self.inner.symbol
    }

    /// Least primitive element in canonical encoding.
    pub fn primitive_element(&self) -> u16 {
        self.inner.exp[usize::from(self.inner.q > 2)]
    }

    /// Deterministic enumeration: 0, 1, g, g^2, ..., g^(q-2).
    pub fn enumerate(&self) -> Vec<u16> {
        let mut out = Vec::with_capacity(self.inner.q as usize);
        out.push(0);
        out.extend_from_slice(&self.inner.exp);
        out
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        let f = &*self.inner;
        if !f.add_t.is_empty() {
            return f.add_t[a as usize * f.q as usize + b as usize];
        }
        let ds: Vec<u32> = digits(a as u32, f.p, f.k)
            .iter()
            .zip(&digits(b as u32, f.p, f.k))
            .map(|(&x, &y)| (x + y) % f.p)
            .collect();
        undigits(&ds, f.p) as u16
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.inner.neg_t[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        let f = &*self.inner;
        if !f.mul_t.is_empty() {
            return f.mul_t[a as usize * f.q as usize + b as usize];
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (f.log[a as usize] as u32 + f.log[b as usize] as u32) % (f.q - 1);
        f.exp[e as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> Result<u16, GfError> {
        if a == 0 {
            return Err(GfError::DivisionByZero);
        }
        let f = &*self.inner;
        if !f.inv_t.is_empty() {
            return Ok(f.inv_t[a as usize]);
        }
        let e = ((f.q - 1) - f.log[a as usize] as u32) % (f.q - 1);
        Ok(f.exp[e as usize])
    }

    pub fn pow(&self, a: u16, e: u64) -> u16 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let f = &*self.inner;
        let le = (f.log[a as usize] as u64 * (e % (f.q as u64 - 1))) % (f.q as u64 - 1);
        f.exp[le as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u16) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let f = &*self.inner;
        let l = f.log[a as usize] as u32;
        if l == 0 {
            return Some(1);
        }
        Some((f.q - 1) / gcd(f.q - 1, l))
    }

    /// Canonical power-of-primitive rendering: "0", "1", "w", "w2", ...
    pub fn show(&self, a: u16) -> String {
        if a == 0 {
            return "0".into();
        }
        let e = self.inner.log[a as usize];
        match e {
            0 => "1".into(),
            1 => self.inner.symbol.clone(),
            _ => format!("{}{}", self.inner.symbol, e),
        }
    }

    /// Parses the rendering produced by [`Field::show`], plus bare integer
    /// constants from the prime subfield ("2" in GF(9) means 2 mod 3).
    pub fn parse(&self, tok: &str) -> Option<u16> {
        let tok = tok.trim();
        if tok == "0" {
            return Some(0);
        }
        if tok == "1" {
            return Some(1);
        }
        if let Ok(n) = tok.parse::<u32>() {
            return Some((n % self.inner.p) as u16);
        }
        let sym = &self.inner.symbol;
        let rest = tok.strip_prefix(sym.as_str())?;
        let e: u32 = if rest.is_empty() { 1 } else { rest.parse().ok()? };
        Some(self.inner.exp[(e % (self.inner.q - 1)) as usize])
    }

    pub fn elem(&self, value: u16) -> FieldElement {
        assert!((value as u32) < self.inner.q, "value out of range");
        FieldElement {
            field: self.clone(),
            value,
        }
    }
}

#[inline]
fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// An element bound to its field; operations check field identity.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: u16,
}

impl FieldElement {
    pub fn value(&self) -> u16 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.add(self.value, other.value)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.sub(self.value, other.value)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.mul(self.value, other.value)))
    }

    pub fn checked_inv(&self) -> Result<FieldElement, GfError> {
        Ok(self.field.elem(self.field.inv(self.value)?))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.show(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.show(self.value))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}
impl Eq for FieldElement {}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

/// The built-in fields used by the curve models.
pub mod builtin {
    use super::Field;

    pub fn gf2() -> Field {
        Field::with_symbol(2, 1, &[0, 1], "g").unwrap()
    }

    /// GF(4) with a^2 + a + 1 = 0 (printed as omega in places).
    pub fn gf4() -> Field {
        Field::with_symbol(2, 2, &[1, 1, 1], "w").unwrap()
    }

    pub fn gf7() -> Field {
        Field::with_symbol(7, 1, &[0, 1], "g").unwrap()
    }

    /// GF(8) with w^3 + w + 1 = 0.
    pub fn gf8() -> Field {
        Field::with_symbol(2, 3, &[1, 1, 0, 1], "w").unwrap()
    }

    /// GF(9) with a^2 - a - 1 = 0.
    pub fn gf9() -> Field {
        Field::with_symbol(3, 2, &[2, 2, 1], "a").unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_builtins() -> Vec<Field> {
        vec![
            builtin::gf2(),
            builtin::gf4(),
            builtin::gf7(),
            builtin::gf8(),
            builtin::gf9(),
        ]
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Field::new(4, 1, &[0, 1]), Err(GfError::NotPrime(4))));
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert!(matches!(
            Field::new(2, 2, &[1, 0, 1]),
            Err(GfError::ReducibleModulus { .. })
        ));
        assert!(matches!(
            Field::new(2, 17, &[0; 18]),
            Err(GfError::FieldTooLarge(_))
        ));
    }

    #[test]
    fn gf8_reduction_rule() {
        // w * w^2 = w^3 = w + 1
        let f = builtin::gf8();
        let w = f.primitive_element();
        let w2 = f.mul(w, w);
        let w3 = f.mul(w, w2);
        assert_eq!(w3, f.add(w, 1));
    }

    #[test]
    fn identities() {
        for f in all_builtins() {
            for a in f.enumerate() {
                assert_eq!(f.add(0, a), a);
                assert_eq!(f.mul(1, a), a);
            }
        }
    }

    #[test]
    fn gf9_inverse_of_alpha_by_exhaustive_scan() {
        let f = builtin::gf9();
        let a = f.primitive_element();
        // oracle: scan the multiplication table for the unique b with a*b = 1
        let mut found = None;
        for b in f.enumerate() {
            if f.mul(a, b) == 1 {
                assert!(found.is_none());
                found = Some(b);
            }
        }
        assert_eq!(found, Some(f.inv(a).unwrap()));
        assert_eq!(found, Some(f.pow(a, 7)));
    }

    #[test]
    fn enumeration_layout() {
        let f2 = builtin::gf2();
        assert_eq!(f2.enumerate(), vec![0, 1]);

        // w primitive of order 7 in GF(8): w^d != 1 for proper divisors d of 7
        let f8 = builtin::gf8();
        let w = f8.primitive_element();
        assert_eq!(f8.element_order(w), Some(7));
        assert_eq!(f8.pow(w, 7), 1);

        // alpha primitive of order 8 in GF(9)
        let f9 = builtin::gf9();
        let a = f9.primitive_element();
        assert_eq!(f9.element_order(a), Some(8));

        for f in all_builtins() {
            let all = f.enumerate();
            assert_eq!(all.len(), f.order() as usize);
            let mut sorted = all.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), f.order() as usize);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in all_builtins() {
            let elems = f.enumerate();
            for &a in &elems {
                for &b in &elems {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if a != 0 {
                        let ia = f.inv(a).unwrap();
                        assert_eq!(f.mul(a, ia), 1);
                    }
                    for &c in &elems {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for f in all_builtins() {
            let p = f.characteristic() as u64;
            let elems = f.enumerate();
            for &a in &elems {
                for &b in &elems {
                    assert_eq!(
                        f.pow(f.add(a, b), p),
                        f.add(f.pow(a, p), f.pow(b, p))
                    );
                }
            }
        }
    }

    #[test]
    fn mixed_field_and_zero_division_errors() {
        let a = builtin::gf4().elem(1);
        let b = builtin::gf8().elem(1);
        assert_eq!(a.checked_add(&b).unwrap_err(), GfError::MixedFields);
        let z = builtin::gf8().elem(0);
        assert_eq!(z.checked_inv().unwrap_err(), GfError::DivisionByZero);
    }

    #[test]
    fn show_parse_roundtrip() {
        for f in all_builtins() {
            for a in f.enumerate() {
                assert_eq!(f.parse(&f.show(a)), Some(a));
            }
        }
        let f9 = builtin::gf9();
        assert_eq!(f9.parse("2"), Some(2));
        assert_eq!(f9.show(f9.parse("2").unwrap()), "a4"); // 2 = a^4 in GF(9)
    }

    #[test]
    fn large_field_log_path() {
        // GF(2^10) exercises the no-full-table path
        // x^10 + x^3 + 1 is irreducible over GF(2)
        let mut m = vec![0u64; 11];
        m[0] = 1;
        m[3] = 1;
        m[10] = 1;
        let f = Field::new(2, 10, &m).unwrap();
        assert_eq!(f.order(), 1024);
        let g = f.primitive_element();
        assert_eq!(f.element_order(g), Some(1023));
        let x = f.mul(g, g);
        assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
        assert_eq!(f.add(x, x), 0);
    }
}
