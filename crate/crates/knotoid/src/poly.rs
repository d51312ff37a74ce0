//! Sparse multivariate Laurent polynomials over the integers.
//!
//! Invariant values live in ℤ[A, A⁻¹, v, m₁, m₂, …, w₁, …, p₁, …, q₁, …]:
//! the exponent of A may be negative, all other variables occur with
//! nonnegative exponents. Coefficient arithmetic is checked; state sums at
//! tabulation scale stay far below i64 range, so overflow aborts loudly.

use std::collections::BTreeMap;
use std::fmt;

/// Indexed variable family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fam {
    M,
    W,
    P,
    Q,
}

impl Fam {
    fn letter(self) -> char {
        match self {
            Fam::M => 'm',
            Fam::W => 'w',
            Fam::P => 'p',
            Fam::Q => 'q',
        }
    }
}

/// Power product: exponent of A, exponent of v, and the indexed families.
/// Zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub a: i32,
    pub v: u32,
    pub ix: Vec<((Fam, u16), u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn a_power(k: i32) -> Self {
        Monomial { a: k, ..Default::default() }
    }

    pub fn var(fam: Fam, index: u16) -> Self {
        Monomial { ix: vec![((fam, index), 1)], ..Default::default() }
    }

    pub fn v_power(k: u32) -> Self {
        Monomial { v: k, ..Default::default() }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut ix = BTreeMap::new();
        for &(k, e) in self.ix.iter().chain(&other.ix) {
            *ix.entry(k).or_insert(0u32) += e;
        }
        Monomial {
            a: self.a.checked_add(other.a).expect("A exponent overflow"),
            v: self.v.checked_add(other.v).expect("v exponent overflow"),
            ix: ix.into_iter().collect(),
        }
    }
}

/// Sparse polynomial: monomial → nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = MultiPoly::default();
        if c != 0 {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut p = MultiPoly::default();
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    /// The loop value δ = −A² − A⁻².
    pub fn delta() -> Self {
        let mut p = MultiPoly::default();
        p.terms.insert(Monomial::a_power(2), -1);
        p.terms.insert(Monomial::a_power(-2), -1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                let v = e.get().checked_add(c).expect("coefficient overflow");
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, &c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::default();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let c = ca.checked_mul(cb).expect("coefficient overflow");
                out.add_term(ma.mul(mb), c);
            }
        }
        out
    }

    /// Multiplies by `c · A^a_shift`.
    pub fn scale(&self, c: i64, a_shift: i32) -> Self {
        let mut out = MultiPoly::default();
        for (m, &coeff) in &self.terms {
            let mut m2 = m.clone();
            m2.a = m2.a.checked_add(a_shift).expect("A exponent overflow");
            out.add_term(m2, coeff.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    /// Multiplies by `(−A³)^k` (k may be negative): the writhe correction.
    pub fn writhe_normalize(&self, k: i64) -> Self {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        self.scale(sign, (3 * k) as i32)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Renames variables term-wise; used to specialize the planar invariant
    /// down to the sphere one in tests.
    pub fn map_vars(&self, f: impl Fn(Fam, u16) -> (Fam, u16) + Copy) -> Self {
        let mut out = MultiPoly::default();
        for (m, &c) in &self.terms {
            let mut ix = BTreeMap::new();
            for &((fam, k), e) in &m.ix {
                let key = f(fam, k);
                *ix.entry(key).or_insert(0u32) += e;
            }
            let m2 = Monomial { a: m.a, v: m.v, ix: ix.into_iter().collect() };
            out.add_term(m2, c);
        }
        out
    }

    /// Substitutes v := δ; the other variables are untouched.
    pub fn substitute_v_delta(&self) -> Self {
        let delta = Self::delta();
        let mut out = MultiPoly::default();
        for (m, &c) in &self.terms {
            let stripped = Monomial { a: m.a, v: 0, ix: m.ix.clone() };
            let part = MultiPoly::term(stripped, c).mul(&delta.pow(m.v));
            out.add_assign(&part);
        }
        out
    }

    /// Canonical string: terms ascending by (A power, v power, families),
    /// e.g. `-A^2*v + A^6*v + A^8`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if m.a == 1 {
                factors.push("A".to_string());
            } else if m.a != 0 {
                factors.push(format!("A^{}", m.a));
            }
            if m.v == 1 {
                factors.push("v".to_string());
            } else if m.v > 1 {
                factors.push(format!("v^{}", m.v));
            }
            for &((fam, k), e) in &m.ix {
                if e == 1 {
                    factors.push(format!("{}{}", fam.letter(), k));
                } else {
                    factors.push(format!("{}{}^{}", fam.letter(), k, e));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_pow(k: i32) -> MultiPoly {
        MultiPoly::term(Monomial::a_power(k), 1)
    }

    #[test]
    fn delta_squared() {
        let d = MultiPoly::delta();
        let sq = d.mul(&d);
        assert_eq!(sq.render(), "A^-4 + 2 + A^4");
    }

    #[test]
    fn binomial_square() {
        let p = a_pow(2).add(&a_pow(-2));
        assert_eq!(p.mul(&p).render(), "A^-4 + 2 + A^4");
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = a_pow(3).add(&MultiPoly::term(Monomial::var(Fam::M, 1), 7));
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(p.add(&p.neg()).render(), "0");
    }

    #[test]
    fn render_constants() {
        assert_eq!(MultiPoly::zero().render(), "0");
        assert_eq!(MultiPoly::one().render(), "1");
        assert_eq!(MultiPoly::constant(-3).render(), "-3");
    }

    #[test]
    fn render_example_shape() {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial { a: 2, v: 1, ix: vec![] }, -1);
        p.add_term(Monomial { a: 6, v: 1, ix: vec![] }, 1);
        p.add_term(Monomial::a_power(8), 1);
        assert_eq!(p.render(), "-A^2*v + A^6*v + A^8");
    }

    #[test]
    fn writhe_normalization_sign() {
        let p = MultiPoly::one();
        assert_eq!(p.writhe_normalize(-1).render(), "-A^-3");
        assert_eq!(p.writhe_normalize(2).render(), "A^6");
    }
}
