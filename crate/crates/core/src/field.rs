//! Arithmetic in GF(p^k).
//!
//! Elements are stored by their integer encoding `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`,
//! where `c_i` are the coefficients of the residue polynomial modulo the field modulus.
//! The modulus is the lexicographically smallest monic irreducible polynomial of
//! degree `k` (coefficients compared constant term first), so a given `(p, k)`
//! always produces the same field.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Fields up to this order get precomputed multiplication and inverse tables.
const TABLE_LIMIT: u32 = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Integer encoding of the element.
    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    /// Element with the given encoding; callers guarantee it is below the field order.
    #[inline]
    pub(crate) const fn from_index(v: u32) -> Self {
        FieldElement(v)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug)]
struct Tables {
    mul: Vec<u16>,
    inv: Vec<u16>,
}

/// A finite field GF(p^k) with a fixed modulus.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub fn is_prime_u32(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `q = p^k` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 || q > u64::from(MAX_ORDER) {
        return None;
    }
    let q = q as u32;
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FieldSpec {
    /// Builds GF(p^k).
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime_u32(p) {
            return Err(Error::NotPrime(u64::from(p)));
        }
        if k < 1 {
            return Err(Error::InvalidDegree(k));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, k })?;
        let modulus = smallest_irreducible(p, k);
        let mut spec = FieldSpec {
            p,
            k,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            spec.tables = Some(spec.build_tables());
        }
        Ok(spec)
    }

    /// Builds GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in a..q {
                let c = self.mul_slow(FieldElement(a as u32), FieldElement(b as u32)).0 as u16;
                mul[a * q + b] = c;
                mul[b * q + a] = c;
            }
        }
        let mut inv = vec![0u16; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap_or(0) as u16;
        }
        Tables { mul, inv }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first; always monic of degree `k`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        let e = FieldElement(value);
        self.check(e)?;
        Ok(e)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(i64::from(self.p)) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::OutOfRange("coefficients do not describe a field element".into()));
        }
        Ok(FieldElement(self.encode(coeffs)))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut v = a.0;
        for _ in 0..self.k {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn check(&self, a: FieldElement) -> Result<()> {
        if a.0 < self.q {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { value: a.0, q: self.q })
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.k == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        if self.p == 2 {
            return a;
        }
        let c: Vec<u32> = self.coeffs(a).iter().map(|&c| (self.p - c) % self.p).collect();
        FieldElement(self.encode(&c))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.k == 1 {
            return FieldElement(((u64::from(a.0) * u64::from(b.0)) % u64::from(self.p)) as u32);
        }
        match &self.tables {
            Some(t) => FieldElement(u32::from(t.mul[(a.0 * self.q + b.0) as usize])),
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly::mul(&self.coeffs(a), &self.coeffs(b), self.p);
        let r = poly::rem(&prod, &self.modulus, self.p);
        FieldElement(self.encode(&r))
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => FieldElement(u32::from(t.inv[a.0 as usize])),
            None => self.inv_by_euclid(a)?,
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Inverse by scanning every nonzero element.
    pub fn inv_by_scan(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.elements()
            .skip(1)
            .find(|&b| self.mul(a, b) == FieldElement::ONE)
            .ok_or(Error::DivisionByZero)
    }

    /// Inverse by the extended Euclidean algorithm on polynomials.
    pub fn inv_by_euclid(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let s = poly::inverse_mod(&self.coeffs(a), &self.modulus, self.p)
            .ok_or(Error::DivisionByZero)?;
        Ok(FieldElement(self.encode(&s)))
    }

    pub fn checked_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        a.is_zero() || self.elements().any(|x| self.square(x) == a)
    }
}

/// Lexicographically smallest monic irreducible polynomial of degree `k` over GF(p),
/// comparing coefficient sequences constant term first.
pub fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = p.pow(k);
    for idx in 0..count {
        // constant term is the most significant digit of idx
        let mut f = vec![0u32; k as usize + 1];
        let mut v = idx;
        for j in (0..k as usize).rev() {
            f[j] = v % p;
            v /= p;
        }
        f[k as usize] = 1;
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

pub mod poly {
    //! Dense polynomials over GF(p), constant term first.

    use alloc::vec;
    use alloc::vec::Vec;

    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod_p(a: u32, p: u32) -> u32 {
        let (mut base, mut e, mut acc) = (u64::from(a), u64::from(p) - 2, 1u64);
        let m = u64::from(p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        acc as u32
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + u64::from(x) * u64::from(y)) % u64::from(p);
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divmod(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
        let b = trim(b.to_vec());
        assert!(!b.is_empty(), "polynomial division by zero");
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod_p(b[db], p);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut quot = vec![0u32; r.len() - db];
        while r.len() > db && !r.is_empty() {
            let shift = r.len() - 1 - db;
            let c = (u64::from(r[r.len() - 1]) * u64::from(lead_inv) % u64::from(p)) as u32;
            quot[shift] = c;
            for (i, &bc) in b.iter().enumerate() {
                let sub = (u64::from(c) * u64::from(bc) % u64::from(p)) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            r = trim(r);
        }
        (trim(quot), r)
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        divmod(a, b, p).1
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let f = trim(f.to_vec());
        let deg = f.len().saturating_sub(1);
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut g = vec![0u32; d + 1];
                let mut v = idx;
                for c in g.iter_mut().take(d) {
                    *c = v % p;
                    v /= p;
                }
                g[d] = 1;
                if rem(&f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Inverse of `a` modulo the irreducible `f`, if `a` is nonzero mod `f`.
    pub fn inverse_mod(a: &[u32], f: &[u32], p: u32) -> Option<Vec<u32>> {
        let (mut r0, mut r1) = (trim(f.to_vec()), rem(a, f, p));
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quot, r) = divmod(&r0, &r1, p);
            let s = sub(&s0, &mul(&quot, &s1, p), p);
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = inv_mod_p(r0[0], p);
        let mut out = mul(&s0, &[c], p);
        out = rem(&out, f, p);
        out.resize(f.len() - 1, 0);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> FieldSpec {
        FieldSpec::new(p, k).unwrap()
    }

    /// Brute-force irreducibility: no root-free factorisation check, just every
    /// product of two monic polynomials of positive degree.
    fn reducible_by_products(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d1 in 1..deg {
            let d2 = deg - d1;
            for i in 0..p.pow(d1 as u32) {
                for j in 0..p.pow(d2 as u32) {
                    let mk = |mut v: u32, d: usize| {
                        let mut g = vec![0u32; d + 1];
                        for c in g.iter_mut().take(d) {
                            *c = v % p;
                            v /= p;
                        }
                        g[d] = 1;
                        g
                    };
                    if poly::mul(&mk(i, d1), &mk(j, d2), p) == f {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn modulus_for_small_fields() {
        assert_eq!(gf(2, 2).modulus(), &[1, 1, 1]);
        assert_eq!(gf(5, 1).modulus(), &[0, 1]);
        // x^2, x^2+x, x^2+2x all reducible; x^2+1 has no root mod 3
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
        for (p, k) in [(2, 3), (2, 4), (3, 2), (5, 2), (7, 2), (3, 3)] {
            let f = gf(p, k);
            assert!(!reducible_by_products(f.modulus(), p), "GF({p}^{k})");
        }
    }

    #[test]
    fn modulus_scan_matches_brute_force() {
        // first monic quadratic over GF(3) in constant-term-first order that
        // is not a product of two monic linears
        let mut first = None;
        'outer: for c0 in 0..3 {
            for c1 in 0..3 {
                let f = [c0, c1, 1];
                if !reducible_by_products(&f, 3) {
                    first = Some(f.to_vec());
                    break 'outer;
                }
            }
        }
        assert_eq!(first.unwrap(), gf(3, 2).modulus());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(FieldSpec::new(2, 0), Err(Error::InvalidDegree(0)));
        assert!(matches!(FieldSpec::new(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(FieldSpec::new(2, 16).is_ok());
        assert_eq!(FieldSpec::of_order(6), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn small_arithmetic() {
        let f2 = gf(2, 1);
        assert_eq!(f2.add(FieldElement(1), FieldElement(1)), FieldElement(0));
        assert_eq!(f2.inv(FieldElement(1)).unwrap(), FieldElement(1));
        let f5 = gf(5, 1);
        assert_eq!(f5.add(FieldElement(3), FieldElement(4)), FieldElement(2));
        assert_eq!(f5.mul(FieldElement(2), FieldElement(3)), FieldElement(1));
        assert_eq!(f5.inv(FieldElement(2)).unwrap(), FieldElement(3));
        let f4 = gf(2, 2);
        let x = f4.from_coeffs(&[0, 1]).unwrap();
        let x1 = f4.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f4.add(x, x1), FieldElement::ONE);
        assert_eq!(f4.mul(x, x), x1);
        assert_eq!(f4.inv(x).unwrap(), x1);
        for f in [&f2, &f5, &f4] {
            for a in f.elements() {
                assert_eq!(f.mul(a, f.one()), a);
            }
        }
    }

    #[test]
    fn errors_on_bad_elements() {
        let f5 = gf(5, 1);
        assert_eq!(f5.inv(FieldElement::ZERO), Err(Error::DivisionByZero));
        assert!(f5.checked_add(FieldElement(7), FieldElement(1)).is_err());
        assert!(f5.checked_mul(FieldElement(1), FieldElement(5)).is_err());
        assert!(f5.element(5).is_err());
        assert!(f5.from_coeffs(&[5]).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldSpec::of_order(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE, "GF({q})");
                }
            }
        }
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        for k in 1..=4 {
            let f = gf(2, k);
            for a in f.elements() {
                for b in f.elements() {
                    let lhs = f.square(f.add(a, b));
                    let rhs = f.add(f.square(a), f.square(b));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldSpec::of_order(q).unwrap();
            let order_of = |a: FieldElement| {
                let mut x = a;
                let mut n = 1u32;
                while x != FieldElement::ONE {
                    x = f.mul(x, a);
                    n += 1;
                }
                n
            };
            let gen = f.elements().skip(1).find(|&a| order_of(a) == f.order() - 1);
            assert!(gen.is_some(), "GF({q}) has no generator");
        }
    }

    #[test]
    fn inversion_paths_agree() {
        for q in [4u64, 8, 9, 16, 25, 27, 49, 64, 81, 121, 128, 243, 256] {
            let f = FieldSpec::of_order(q).unwrap();
            for a in f.elements().skip(1) {
                let s = f.inv_by_scan(a).unwrap();
                assert_eq!(s, f.inv_by_euclid(a).unwrap(), "GF({q}) a={a:?}");
                assert_eq!(s, f.inv(a).unwrap());
            }
        }
    }

    #[test]
    fn large_field_uses_euclid() {
        let f = FieldSpec::of_order(1024).unwrap();
        assert!(f.tables.is_none());
        for v in [1u32, 2, 3, 511, 777, 1023] {
            let a = f.element(v).unwrap();
            assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
        let big = FieldSpec::new(257, 1).unwrap();
        for v in [1u32, 2, 128, 256] {
            let a = big.element(v).unwrap();
            assert_eq!(big.mul(a, big.inv(a).unwrap()), FieldElement::ONE);
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
