//! Factorization over GF(2)[x].
//!
//! Three layers, each exact:
//!
//! 1. Squarefree decomposition adapted to characteristic 2: repeated
//!    `gcd(f, f')` peeling, with the perfect-square residue handled by an
//!    exact square root and doubled multiplicities.
//! 2. Distinct-degree splitting: `gcd(x^{2^k} + x, f)` collects the product
//!    of all irreducibles of degree `k`.
//! 3. Equal-degree splitting by the trace map `a + a^2 + ... + a^{2^{d-1}}`
//!    of random elements. Randomness comes from a seeded generator, so
//!    [`factorize`] is reproducible run to run, and the canonical ordering
//!    of [`Factorization`] makes the result independent of the seed anyway.
//!
//! Irreducibility testing does not factor: it checks `x^{2^d} = x mod p`
//! together with `gcd(x^{2^{d/l}} + x, p) = 1` for every prime `l | d`.
//!
//! [`irreducibles_of_degree`] enumerates by trial division against all
//! irreducibles of at most half the degree and caches each degree's table
//! for the searches, which query the same small degrees over and over.

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf2poly::{Degree, Poly};
use crate::Error;

/// Largest degree [`irreducibles_of_degree`] will enumerate.
pub const MAX_ENUMERATION_DEGREE: usize = 16;

/// Default seed for the equal-degree splitting randomness.
const EDF_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// A multiset of irreducible factors with positive exponents, kept sorted
/// by (degree, coefficient bits) so equal factorizations compare equal
/// structurally.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// The empty factorization, the factorization of 1.
    pub fn empty() -> Self {
        Factorization::default()
    }

    /// Build from (base, exponent) pairs: zero exponents are dropped,
    /// repeated bases merged, order canonicalized. Bases must be
    /// irreducible; that invariant is debug-checked.
    pub fn from_prime_powers<I: IntoIterator<Item = (Poly, u32)>>(pairs: I) -> Self {
        let mut factors: Vec<(Poly, u32)> = Vec::new();
        for (base, exp) in pairs {
            if exp == 0 {
                continue;
            }
            debug_assert!(is_irreducible(&base), "base {base} is not irreducible");
            factors.push((base, exp));
        }
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        factors.dedup_by(|later, kept| {
            if later.0 == kept.0 {
                kept.1 += later.1;
                true
            } else {
                false
            }
        });
        Factorization { factors }
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (Poly, u32)> {
        self.factors.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct irreducible factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// Exponent of `base`, or 0 when absent.
    pub fn exponent_of(&self, base: &Poly) -> u32 {
        self.factors
            .binary_search_by(|(b, _)| b.cmp(base))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Multiply the factorization back out.
    pub fn product(&self) -> Poly {
        let mut acc = Poly::one();
        for (base, exp) in &self.factors {
            acc *= &base.pow(*exp);
        }
        acc
    }

    /// Degree of the product, computed without multiplying out.
    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(base, exp)| base.degree().finite().expect("bases are nonzero") * *exp as usize)
            .sum()
    }

    /// Factorization of the product of the two underlying polynomials.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                std::cmp::Ordering::Less => {
                    factors.push(self.factors[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    factors.push(other.factors[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    factors.push((self.factors[i].0.clone(), self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Factorization { factors }
    }

    /// Factorization of the `e`-th power; `e = 0` gives the empty one.
    pub fn pow(&self, e: u32) -> Factorization {
        if e == 0 {
            return Factorization::empty();
        }
        Factorization {
            factors: self
                .factors
                .iter()
                .map(|(base, exp)| (base.clone(), exp * e))
                .collect(),
        }
    }

    /// Conjugate every base and re-canonicalize. Conjugation permutes the
    /// irreducibles, so this is the factorization of the conjugate product.
    pub fn conjugate(&self) -> Factorization {
        let mut factors: Vec<(Poly, u32)> = self
            .factors
            .iter()
            .map(|(base, exp)| (base.conjugate(), *exp))
            .collect();
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        Factorization { factors }
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for (base, exp) in &self.factors {
            list.entry(&format_args!("{base}^{exp}"));
        }
        list.finish()
    }
}

/// Irreducibility over GF(2).
///
/// Constants (and zero) report false; degree 1 is always irreducible. For
/// degree `d >= 2` this runs the Frobenius test: `p` is irreducible iff
/// `x^{2^d} = x (mod p)` and `gcd(x^{2^{d/l}} + x, p) = 1` for every prime
/// `l` dividing `d`.
pub fn is_irreducible(p: &Poly) -> bool {
    let d = match p.degree() {
        Degree::NegInf => return false,
        Degree::Of(d) => d,
    };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = Poly::x();
    let mut checkpoints: Vec<usize> = prime_divisors(d).into_iter().map(|l| d / l).collect();
    checkpoints.sort_unstable();
    checkpoints.dedup();
    let mut next_checkpoint = 0;
    let mut h = x.clone();
    for k in 1..=d {
        h = h.square().rem(p).expect("modulus is nonzero");
        if checkpoints.get(next_checkpoint) == Some(&k) {
            next_checkpoint += 1;
            let g = (h.clone() + &x).gcd(p).expect("modulus is nonzero");
            if !g.is_one() {
                return false;
            }
        }
    }
    h == x
}

/// Complete factorization into irreducibles with the default seed.
/// `factorize(1)` is the empty factorization; zero is an error.
pub fn factorize(p: &Poly) -> Result<Factorization, Error> {
    factorize_with_seed(p, EDF_SEED)
}

/// Factorization with caller-chosen randomness for the equal-degree stage.
/// The canonical result is identical for every seed.
pub fn factorize_with_seed(p: &Poly, seed: u64) -> Result<Factorization, Error> {
    if p.is_zero() {
        return Err(Error::ZeroOperand("factorize"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut squarefree = Vec::new();
    squarefree_parts(p, 1, &mut squarefree);
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in squarefree {
        for (product, d) in distinct_degree_parts(&part) {
            let mut primes = Vec::new();
            equal_degree_split(&product, d, &mut rng, &mut primes);
            factors.extend(primes.into_iter().map(|q| (q, mult)));
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization { factors })
}

/// Write `f` as a product of squarefree parts, each tagged with the
/// multiplicity its primes carry in `f`. Parts are pairwise coprime.
fn squarefree_parts(f: &Poly, mult: u32, parts: &mut Vec<(Poly, u32)>) {
    if f.is_one() {
        return;
    }
    let fd = f.derivative();
    if fd.is_zero() {
        // f = g^2: all exponents even
        let g = f.sqrt().expect("zero derivative implies a perfect square");
        squarefree_parts(&g, mult * 2, parts);
        return;
    }
    let mut c = f.gcd(&fd).expect("nonzero");
    let mut w = f.div_rem(&c).expect("nonzero").0;
    // w holds each odd-multiplicity prime exactly once
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c).expect("nonzero");
        let z = w.div_rem(&y).expect("nonzero").0;
        if !z.is_one() {
            parts.push((z, mult * i));
        }
        c = c.div_rem(&y).expect("nonzero").0;
        w = y;
        i += 1;
    }
    if !c.is_one() {
        // even-multiplicity primes remain, as a perfect square
        let g = c.sqrt().expect("even multiplicities form a square");
        squarefree_parts(&g, mult * 2, parts);
    }
}

/// Split a squarefree polynomial into (product, degree) pieces where each
/// product collects every irreducible factor of that degree.
fn distinct_degree_parts(g: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut f = g.clone();
    let x = Poly::x();
    let mut h = x.clone();
    let mut k = 0usize;
    loop {
        let df = match f.degree() {
            Degree::NegInf => unreachable!("divisor chain keeps f nonzero"),
            Degree::Of(d) => d,
        };
        if df == 0 {
            break;
        }
        if 2 * (k + 1) > df {
            // nothing of degree <= df/2 remains, so f itself is irreducible
            out.push((f, df));
            break;
        }
        k += 1;
        h = h.square().rem(&f).expect("nonzero");
        let gk = (h.clone() + &x).gcd(&f).expect("nonzero");
        if !gk.is_one() {
            f = f.div_rem(&gk).expect("nonzero").0;
            h = h.rem(&f).expect("nonzero");
            out.push((gk, k));
        }
    }
    out
}

/// Split a product of distinct irreducibles, all of degree `d`, into the
/// irreducibles themselves via gcds with traces of random elements.
fn equal_degree_split(v: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let dv = v.degree().finite().expect("nonzero");
    if dv == d {
        out.push(v.clone());
        return;
    }
    debug_assert!(dv % d == 0 && dv > 0);
    loop {
        let deg = rng.gen_range(1..dv);
        let a = Poly::random(rng, deg);
        let mut trace = a.clone();
        let mut frob = a.clone();
        for _ in 1..d {
            frob = frob.square().rem(v).expect("nonzero");
            trace += &frob;
        }
        // trace lands in GF(2) modulo every prime factor, so its gcd with v
        // is the product of the primes where it lands on 0
        let g = trace.gcd(v).expect("nonzero");
        if !g.is_one() && g != *v {
            let rest = v.div_rem(&g).expect("nonzero").0;
            equal_degree_split(&g, d, rng, out);
            equal_degree_split(&rest, d, rng, out);
            return;
        }
    }
}

/// All monic irreducibles of degree exactly `n`, canonically ordered.
///
/// Results are cached per degree; the first call for a degree pays for the
/// sieve, later calls return the shared slice.
pub fn irreducibles_of_degree(n: usize) -> Result<&'static [Poly], Error> {
    if n == 0 || n > MAX_ENUMERATION_DEGREE {
        return Err(Error::EnumerationCapExceeded {
            degree: n,
            cap: MAX_ENUMERATION_DEGREE,
        });
    }
    Ok(table(n))
}

static TABLES: [OnceLock<Vec<Poly>>; MAX_ENUMERATION_DEGREE + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION_DEGREE + 1];

fn table(n: usize) -> &'static [Poly] {
    TABLES[n].get_or_init(|| {
        if n == 1 {
            return vec![Poly::x(), Poly::x_plus_one()];
        }
        let smalls: Vec<&'static [Poly]> = (1..=n / 2).map(table).collect();
        let mut out = Vec::new();
        for low in 0..(1u64 << n) {
            if low & 1 == 0 {
                continue; // divisible by x
            }
            let cand = Poly::from_word(low | (1u64 << n));
            let composite = smalls
                .iter()
                .flat_map(|s| s.iter())
                .any(|q| cand.divisible_by(q).expect("nonzero divisor"));
            if !composite {
                out.push(cand);
            }
        }
        out
    })
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
