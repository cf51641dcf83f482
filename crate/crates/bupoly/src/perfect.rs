//! Perfection predicates and the named constant tables.
//!
//! A nonzero polynomial is perfect for a given [`SigmaKind`] when the
//! corresponding divisor sum returns it unchanged. The module also houses
//! the fixed cast of characters every list of bi-unitary perfect
//! polynomials is written in: the five Mersenne irreducibles `M1..M5`, the
//! fifteen products `C1..C15`, and the exponent set `E_s`.

use std::sync::OnceLock;

use crate::divisor::{sigma_of_kind, sigma_prime_power, SigmaKind};
use crate::factor::{factorize, Factorization};
use crate::gf2poly::Poly;
use crate::Error;

/// Exponents of a Mersenne polynomial `1 + x^a(x+1)^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MersenneShape {
    pub a: u32,
    pub b: u32,
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Recognizes `p = 1 + x^a(x+1)^b` with `a, b ≥ 1` and `gcd(a, b) = 1`.
///
/// Irreducibility is not required here; callers that need an irreducible
/// Mersenne polynomial combine this with [`crate::factor::is_irreducible`].
///
/// ```
/// use bupoly::gf2poly::Poly;
/// use bupoly::perfect::{is_mersenne, MersenneShape};
///
/// let m2 = Poly::from_support(&[0, 1, 3]);
/// assert_eq!(is_mersenne(&m2), Some(MersenneShape { a: 1, b: 2 }));
/// ```
pub fn is_mersenne(p: &Poly) -> Option<MersenneShape> {
    let q = p.clone() + Poly::one();
    let a = q.trailing_zeros()?;
    if a == 0 {
        return None;
    }
    let r = q.shr(a);
    let b = r.degree().finite().expect("nonzero after shift");
    // r = (x+1)^b exactly when its conjugate is the monomial x^b.
    if b == 0 || r.conjugate() != Poly::monomial(b) {
        return None;
    }
    (gcd_u32(a as u32, b as u32) == 1).then_some(MersenneShape {
        a: a as u32,
        b: b as u32,
    })
}

/// Number of distinct irreducible factors. Errors on zero input.
pub fn omega(s: &Poly) -> Result<usize, Error> {
    Ok(factorize(s)?.omega())
}

/// True iff the selected divisor sum of `s` equals `s`. Errors on zero
/// input.
pub fn is_perfect(s: &Poly, kind: SigmaKind) -> Result<bool, Error> {
    Ok(sigma_of_kind(kind, s)? == *s)
}

/// Membership in `E_s = {2, 4} ∪ {2^n − 1 : n ≥ 1}`, the exponents a
/// Mersenne base can carry in a bi-unitary perfect product.
pub fn es_contains(e: u32) -> bool {
    e == 2 || e == 4 || (e >= 1 && (e as u64 + 1).is_power_of_two())
}

/// The five Mersenne irreducibles and the fifteen sporadic bi-unitary
/// perfect polynomials, kept in factored form.
pub struct ConstantsTable {
    m: [Poly; 5],
    c: [Factorization; 15],
}

/// Exponents (a, b, [h1..h5]) of `C_i = x^a (x+1)^b M1^h1 … M5^h5`.
const C_EXPONENTS: [(u32, u32, [u32; 5]); 15] = [
    (3, 4, [1, 0, 0, 0, 0]),
    (3, 5, [2, 0, 0, 0, 0]),
    (4, 4, [2, 0, 0, 0, 0]),
    (6, 6, [2, 0, 0, 0, 0]),
    (4, 5, [3, 0, 0, 0, 0]),
    (7, 8, [0, 0, 0, 0, 1]),
    (7, 9, [0, 0, 0, 0, 2]),
    (8, 8, [0, 0, 0, 1, 1]),
    (8, 9, [0, 0, 0, 1, 2]),
    (7, 10, [2, 0, 0, 0, 1]),
    (7, 13, [0, 2, 2, 0, 0]),
    (9, 9, [0, 0, 0, 2, 2]),
    (14, 14, [0, 2, 2, 0, 0]),
    (10, 13, [2, 2, 2, 1, 0]),
    (13, 13, [2, 4, 4, 1, 1]),
];

fn build_table() -> ConstantsTable {
    let m1 = Poly::from_support(&[0, 1, 2]);
    let m2 = Poly::from_support(&[0, 1, 3]);
    let m3 = Poly::from_support(&[0, 2, 3]);
    let m4 = sigma_prime_power(&Poly::x(), 4);
    let m5 = m4.conjugate();
    let m = [m1, m2, m3, m4, m5];
    let c = std::array::from_fn(|i| {
        let (a, b, hs) = C_EXPONENTS[i];
        let mut powers = vec![(Poly::x(), a), (Poly::x_plus_one(), b)];
        powers.extend(m.iter().cloned().zip(hs));
        Factorization::from_prime_powers(powers)
    });
    ConstantsTable { m, c }
}

/// The fixed table, built once on first use.
pub fn constants() -> &'static ConstantsTable {
    static TABLE: OnceLock<ConstantsTable> = OnceLock::new();
    TABLE.get_or_init(build_table)
}

impl ConstantsTable {
    /// `M_i`, 1-based. Panics outside `1..=5`.
    pub fn m(&self, i: usize) -> &Poly {
        &self.m[i - 1]
    }

    /// `C_i` in factored form, 1-based. Panics outside `1..=15`.
    pub fn c(&self, i: usize) -> &Factorization {
        &self.c[i - 1]
    }

    /// `C_i` multiplied out, 1-based. Panics outside `1..=15`.
    pub fn c_poly(&self, i: usize) -> Poly {
        self.c[i - 1].product()
    }

    pub fn ms(&self) -> &[Poly] {
        &self.m
    }

    pub fn cs(&self) -> &[Factorization] {
        &self.c
    }

    /// Resolves `"M1".."M5"` and `"C1".."C15"`.
    pub fn named(&self, name: &str) -> Option<Poly> {
        if let Some(digits) = name.strip_prefix('M') {
            let i: usize = digits.parse().ok()?;
            return (1..=5).contains(&i).then(|| self.m[i - 1].clone());
        }
        if let Some(digits) = name.strip_prefix('C') {
            let i: usize = digits.parse().ok()?;
            return (1..=15).contains(&i).then(|| self.c[i - 1].product());
        }
        None
    }
}
