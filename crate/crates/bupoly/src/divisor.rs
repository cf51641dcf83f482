//! The divisor-sum functions σ, σ*, σ** and the unitary gcd.
//!
//! A divisor `D` of `S` is *unitary* when `gcd(D, S/D) = 1` and *bi-unitary*
//! when the greatest common unitary divisor of `D` and `S/D` is 1. Summing
//! all divisors, the unitary ones, or the bi-unitary ones gives three
//! multiplicative functions; each is computed here from closed forms on
//! prime powers. A brute-force enumeration of bi-unitary divisors serves as
//! an independent oracle for the closed-form σ**.

use crate::factor::{factorize, Factorization};
use crate::gf2poly::Poly;
use crate::Error;

/// Degree bound for the brute-force oracle.
///
/// The divisor count is the product of (eᵢ+1) over the factorization, so the
/// enumeration is cheap at these sizes; the cap guards against misuse.
pub const ORACLE_DEGREE_CAP: usize = 64;

/// Selector among the three divisor-sum functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SigmaKind {
    /// σ: sum of all monic divisors.
    AllDivisors,
    /// σ*: sum of unitary divisors.
    Unitary,
    /// σ**: sum of bi-unitary divisors.
    BiUnitary,
}

/// Greatest common unitary divisor.
///
/// For each irreducible `p` appearing with exponent `k` in `s` and `l` in
/// `t`, the result picks up `p^k` exactly when `k = l`. Errors on zero
/// input.
///
/// ```
/// use bupoly::divisor::gcd_unitary;
/// use bupoly::gf2poly::Poly;
///
/// let s = Poly::x().pow(2) * Poly::x_plus_one();
/// let t = Poly::x().pow(2) * Poly::x_plus_one().pow(3);
/// assert_eq!(gcd_unitary(&s, &t).unwrap(), Poly::x().pow(2));
/// ```
pub fn gcd_unitary(s: &Poly, t: &Poly) -> Result<Poly, Error> {
    if s.is_zero() || t.is_zero() {
        return Err(Error::ZeroOperand("gcd_unitary"));
    }
    Ok(gcd_unitary_factored(&factorize(s)?, &factorize(t)?))
}

/// [`gcd_unitary`] on pre-computed factorizations.
pub fn gcd_unitary_factored(s: &Factorization, t: &Factorization) -> Poly {
    let (fs, ft) = (s.factors(), t.factors());
    let mut out = Poly::one();
    let (mut i, mut j) = (0, 0);
    while i < fs.len() && j < ft.len() {
        match fs[i].0.cmp(&ft[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if fs[i].1 == ft[j].1 {
                    out = out * fs[i].0.pow(fs[i].1);
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// σ on a prime power: `1 + t + … + t^e`, by the geometric identity
/// `(t^{e+1} + 1) / (t + 1)`.
///
/// Requires `deg t ≥ 1`.
pub fn sigma_prime_power(t: &Poly, e: u32) -> Poly {
    let numerator = t.pow(e + 1) + Poly::one();
    let (q, r) = numerator
        .div_rem(&(t.clone() + Poly::one()))
        .expect("deg t >= 1, so t + 1 is nonzero");
    debug_assert!(r.is_zero());
    q
}

/// σ** on a prime power.
///
/// Odd exponents see every divisor as bi-unitary, so the value is σ(t^e);
/// for e = 2n the middle divisor t^n drops out and the sum collapses to
/// `(1 + t) σ(t^n) σ(t^{n-1})`. Both branches preserve degree.
pub fn sigma_biunitary_prime_power(t: &Poly, e: u32) -> Poly {
    if e % 2 == 1 {
        sigma_prime_power(t, e)
    } else if e == 0 {
        Poly::one()
    } else {
        let n = e / 2;
        (t.clone() + Poly::one()) * sigma_prime_power(t, n) * sigma_prime_power(t, n - 1)
    }
}

/// Sum of all monic divisors of `s`. Errors on zero input.
///
/// ```
/// use bupoly::divisor::sigma;
/// use bupoly::gf2poly::Poly;
///
/// assert_eq!(
///     sigma(&Poly::monomial(4)).unwrap(),
///     Poly::from_support(&[0, 1, 2, 3, 4]),
/// );
/// ```
pub fn sigma(s: &Poly) -> Result<Poly, Error> {
    if s.is_zero() {
        return Err(Error::ZeroOperand("sigma"));
    }
    Ok(sigma_factored(&factorize(s)?))
}

/// Sum of unitary divisors of `s`. Errors on zero input.
pub fn sigma_unitary(s: &Poly) -> Result<Poly, Error> {
    if s.is_zero() {
        return Err(Error::ZeroOperand("sigma_unitary"));
    }
    Ok(sigma_unitary_factored(&factorize(s)?))
}

/// Sum of bi-unitary divisors of `s`. Errors on zero input.
pub fn sigma_biunitary(s: &Poly) -> Result<Poly, Error> {
    if s.is_zero() {
        return Err(Error::ZeroOperand("sigma_biunitary"));
    }
    Ok(sigma_biunitary_factored(&factorize(s)?))
}

/// Dispatch among the three divisor-sum functions.
pub fn sigma_of_kind(kind: SigmaKind, s: &Poly) -> Result<Poly, Error> {
    match kind {
        SigmaKind::AllDivisors => sigma(s),
        SigmaKind::Unitary => sigma_unitary(s),
        SigmaKind::BiUnitary => sigma_biunitary(s),
    }
}

/// σ on a pre-computed factorization.
pub fn sigma_factored(f: &Factorization) -> Poly {
    f.iter()
        .map(|(t, e)| sigma_prime_power(t, *e))
        .fold(Poly::one(), |acc, piece| acc * piece)
}

/// σ* on a pre-computed factorization: product of `1 + t^e`.
pub fn sigma_unitary_factored(f: &Factorization) -> Poly {
    f.iter()
        .map(|(t, e)| t.pow(*e) + Poly::one())
        .fold(Poly::one(), |acc, piece| acc * piece)
}

/// σ** on a pre-computed factorization.
pub fn sigma_biunitary_factored(f: &Factorization) -> Poly {
    f.iter()
        .map(|(t, e)| sigma_biunitary_prime_power(t, *e))
        .fold(Poly::one(), |acc, piece| acc * piece)
}

/// [`sigma_of_kind`] on a pre-computed factorization.
pub fn sigma_of_kind_factored(kind: SigmaKind, f: &Factorization) -> Poly {
    match kind {
        SigmaKind::AllDivisors => sigma_factored(f),
        SigmaKind::Unitary => sigma_unitary_factored(f),
        SigmaKind::BiUnitary => sigma_biunitary_factored(f),
    }
}

/// All bi-unitary divisors of `s`, in ascending order.
///
/// Divisors are enumerated from exponent tuples over the factorization, but
/// each candidate `D` is admitted by an honest [`gcd_unitary`] call on the
/// polynomials `D` and `s/D` themselves, which refactorizes both. That keeps
/// this enumeration independent of the closed forms it cross-checks.
pub fn biunitary_divisors(s: &Poly) -> Result<Vec<Poly>, Error> {
    if s.is_zero() {
        return Err(Error::ZeroOperand("biunitary_divisors"));
    }
    let degree = s.degree().finite().expect("nonzero");
    if degree > ORACLE_DEGREE_CAP {
        return Err(Error::OracleCapExceeded {
            degree,
            cap: ORACLE_DEGREE_CAP,
        });
    }
    let f = factorize(s)?;
    let mut divisors = vec![Poly::one()];
    for (t, e) in f.iter() {
        let mut extended = Vec::with_capacity(divisors.len() * (*e as usize + 1));
        for d in &divisors {
            let mut power = d.clone();
            extended.push(power.clone());
            for _ in 0..*e {
                power = power * t.clone();
                extended.push(power.clone());
            }
        }
        divisors = extended;
    }
    let mut out = Vec::new();
    for d in divisors {
        let (q, r) = s.div_rem(&d).expect("d divides s");
        debug_assert!(r.is_zero());
        if gcd_unitary(&d, &q)?.is_one() {
            out.push(d);
        }
    }
    out.sort();
    Ok(out)
}

/// σ** by brute force: the XOR-sum of [`biunitary_divisors`].
pub fn sigma_biunitary_oracle(s: &Poly) -> Result<Poly, Error> {
    let divisors = biunitary_divisors(s)?;
    Ok(divisors
        .into_iter()
        .fold(Poly::zero(), |acc, d| acc + d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_sigma_is_geometric_sum() {
        let t = Poly::from_support(&[0, 1, 2]);
        let mut sum = Poly::zero();
        let mut power = Poly::one();
        for e in 0..8u32 {
            sum += &power;
            assert_eq!(sigma_prime_power(&t, e), sum);
            power = power * t.clone();
        }
    }

    #[test]
    fn biunitary_prime_power_drops_middle_divisor() {
        // e = 2: divisors 1, t, t^2; gcd_u(t, t) = t kills the middle one.
        let t = Poly::x();
        assert_eq!(
            sigma_biunitary_prime_power(&t, 2),
            Poly::one() + t.pow(2)
        );
    }
}
