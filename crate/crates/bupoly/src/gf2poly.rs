//! Polynomials over the two-element field.
//!
//! Coefficients are packed into 64-bit limbs, least significant bit first:
//! bit `i` of the vector is the coefficient of `x^i`. The representation is
//! canonical, the top stored limb is nonzero, so structural equality is
//! polynomial equality and the degree is read off the top limb in O(1).
//! The zero polynomial is the empty limb vector and its degree is the
//! sentinel [`Degree::NegInf`], never an integer.
//!
//! Addition is limbwise XOR. Multiplication runs schoolbook shift-XOR when
//! one operand is short and a word-level carry-less routine otherwise; the
//! two paths are bit-identical and property-tested against each other.
//! Degrees are capped at [`DEGREE_CAP`] to keep runaway expressions from
//! allocating without bound.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Largest degree any operation will produce. Checked multiplication and
/// powering report [`Error::DegreeCapExceeded`] past this; the operator
/// forms panic instead, since in-library callers stay far below the cap.
pub const DEGREE_CAP: usize = 1 << 16;

const LIMB_BITS: usize = 64;

/// Degree of a polynomial; the zero polynomial gets a dedicated sentinel
/// that compares below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    /// Degree of the zero polynomial.
    NegInf,
    /// Degree of a nonzero polynomial.
    Of(usize),
}

impl Degree {
    /// The integer degree, or `None` for the zero polynomial.
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Of(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Of(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial over GF(2), stored as a canonical dense bitvector.
///
/// All nonzero polynomials are monic automatically (the leading coefficient
/// is 1). Values are immutable in practice: every operation returns a fresh
/// polynomial, so sharing across threads is safe.
///
/// # Examples
///
/// ```
/// use bupoly::gf2poly::Poly;
///
/// let p: Poly = "0x17".parse().unwrap(); // 1 + x + x^2 + x^4
/// assert_eq!(p.degree().finite(), Some(4));
/// assert_eq!(p.to_string(), "0x17");
/// ```
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    limbs: Vec<u64>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Poly {
        Poly { limbs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Poly {
        Poly { limbs: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x() -> Poly {
        Poly { limbs: vec![2] }
    }

    /// The polynomial `x + 1`.
    pub fn x_plus_one() -> Poly {
        Poly { limbs: vec![3] }
    }

    /// The monomial `x^n`.
    pub fn monomial(n: usize) -> Poly {
        assert!(n <= DEGREE_CAP, "monomial degree {n} exceeds cap");
        let mut limbs = vec![0; n / LIMB_BITS + 1];
        limbs[n / LIMB_BITS] = 1 << (n % LIMB_BITS);
        Poly { limbs }
    }

    /// Polynomial whose coefficient bitstring is the binary expansion of
    /// `bits` (bit i is the coefficient of `x^i`).
    pub fn from_word(bits: u64) -> Poly {
        Poly::from_limbs(vec![bits])
    }

    /// Polynomial with coefficient 1 exactly at the given exponents.
    pub fn from_support(exponents: &[usize]) -> Poly {
        let mut p = Poly::zero();
        for &e in exponents {
            p = p + Poly::monomial(e);
        }
        p
    }

    pub(crate) fn from_limbs(mut limbs: Vec<u64>) -> Poly {
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        Poly { limbs }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Degree, with the zero polynomial mapped to [`Degree::NegInf`].
    pub fn degree(&self) -> Degree {
        match self.limbs.last() {
            None => Degree::NegInf,
            Some(&top) => Degree::Of(
                (self.limbs.len() - 1) * LIMB_BITS + (63 - top.leading_zeros() as usize),
            ),
        }
    }

    /// Integer degree of a polynomial known to be nonzero.
    ///
    /// Panics on the zero polynomial; internal callers use it only where a
    /// nonzero invariant already holds.
    pub(crate) fn deg(&self) -> usize {
        self.degree().finite().expect("degree of zero polynomial")
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> bool {
        match self.limbs.get(i / LIMB_BITS) {
            Some(&w) => (w >> (i % LIMB_BITS)) & 1 == 1,
            None => false,
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Largest `k` such that `x^k` divides the polynomial; `None` for zero.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.limbs
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * LIMB_BITS + self.limbs[i].trailing_zeros() as usize)
    }

    /// Quotient by `x^k`, discarding coefficients below `x^k`.
    pub fn shr(&self, k: usize) -> Poly {
        let ws = k / LIMB_BITS;
        if ws >= self.limbs.len() {
            return Poly::zero();
        }
        let bs = k % LIMB_BITS;
        let n = self.limbs.len() - ws;
        let mut out = vec![0u64; n];
        for i in 0..n {
            let lo = self.limbs[i + ws] >> bs;
            let hi = if bs > 0 && i + ws + 1 < self.limbs.len() {
                self.limbs[i + ws + 1] << (LIMB_BITS - bs)
            } else {
                0
            };
            out[i] = lo | hi;
        }
        Poly::from_limbs(out)
    }

    /// Product with `x^k`.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        assert!(self.deg() + k <= DEGREE_CAP, "shift exceeds degree cap");
        let mut out = vec![0u64; self.limbs.len() + k / LIMB_BITS + 1];
        xor_shl_into(&mut out, &self.limbs, k);
        Poly::from_limbs(out)
    }

    /// Sum (XOR of coefficient vectors; subtraction is the same map).
    pub fn add(&self, other: &Poly) -> Poly {
        let (short, long) = if self.limbs.len() <= other.limbs.len() {
            (&self.limbs, &other.limbs)
        } else {
            (&other.limbs, &self.limbs)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short.iter()) {
            *o ^= s;
        }
        Poly::from_limbs(out)
    }

    /// Carry-less product. Panics if the result degree would exceed
    /// [`DEGREE_CAP`]; see [`Poly::checked_mul`] for the erroring form.
    pub fn mul(&self, other: &Poly) -> Poly {
        self.checked_mul(other).expect("degree cap exceeded")
    }

    /// Product, reporting an error instead of panicking past the cap.
    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, Error> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let need = self.deg() as u64 + other.deg() as u64;
        if need > DEGREE_CAP as u64 {
            return Err(Error::DegreeCapExceeded {
                needed: need,
                cap: DEGREE_CAP as u64,
            });
        }
        let (small, big) = if self.limbs.len() <= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = vec![0u64; small.limbs.len() + big.limbs.len()];
        if small.limbs.len() <= MUL_SCHOOLBOOK_MAX_LIMBS {
            mul_schoolbook(&mut acc, &small.limbs, &big.limbs);
        } else {
            mul_words(&mut acc, &small.limbs, &big.limbs);
        }
        Ok(Poly::from_limbs(acc))
    }

    /// Square via Frobenius: coefficient of `x^i` moves to `x^{2i}`.
    pub fn square(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        assert!(2 * self.deg() <= DEGREE_CAP, "square exceeds degree cap");
        let mut out = vec![0u64; self.limbs.len() * 2];
        for (i, &w) in self.limbs.iter().enumerate() {
            out[2 * i] = spread(w as u32);
            out[2 * i + 1] = spread((w >> 32) as u32);
        }
        Poly::from_limbs(out)
    }

    /// Exact square root of a polynomial with all exponents even.
    ///
    /// `None` when any odd-exponent coefficient is set (the input is not a
    /// square; over GF(2) a polynomial is a square iff its support is even).
    pub fn sqrt(&self) -> Option<Poly> {
        const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;
        if self.limbs.iter().any(|&w| w & ODD != 0) {
            return None;
        }
        let mut out = vec![0u64; self.limbs.len() / 2 + 1];
        for (i, &w) in self.limbs.iter().enumerate() {
            let half = unspread(w) as u64;
            out[i / 2] |= half << (32 * (i % 2));
        }
        Some(Poly::from_limbs(out))
    }

    /// Power by square-and-multiply; `p^0 = 1` for every `p`, including
    /// `0^0 = 1` by convention. Panics past the degree cap.
    pub fn pow(&self, e: u32) -> Poly {
        self.checked_pow(e).expect("degree cap exceeded")
    }

    /// Power, reporting an error instead of panicking past the cap.
    pub fn checked_pow(&self, e: u32) -> Result<Poly, Error> {
        if e == 0 {
            return Ok(Poly::one());
        }
        if let Degree::Of(d) = self.degree() {
            let need = d as u64 * e as u64;
            if need > DEGREE_CAP as u64 {
                return Err(Error::DegreeCapExceeded {
                    needed: need,
                    cap: DEGREE_CAP as u64,
                });
            }
        }
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        loop {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.square();
        }
        Ok(result)
    }

    /// Quotient and remainder: `self = d*q + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), Error> {
        let dd = match d.degree() {
            Degree::NegInf => return Err(Error::DivisionByZero),
            Degree::Of(n) => n,
        };
        let pd = match self.degree() {
            Degree::NegInf => return Ok((Poly::zero(), Poly::zero())),
            Degree::Of(n) => n,
        };
        if pd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut r = self.limbs.clone();
        let mut q = vec![0u64; (pd - dd) / LIMB_BITS + 1];
        let mut top = Some(pd);
        while let Some(t) = top {
            if t < dd {
                break;
            }
            let k = t - dd;
            q[k / LIMB_BITS] |= 1 << (k % LIMB_BITS);
            xor_shl_into(&mut r, &d.limbs, k);
            top = top_bit_at_most(&r, t);
        }
        Ok((Poly::from_limbs(q), Poly::from_limbs(r)))
    }

    /// Remainder of division by `m`.
    pub fn rem(&self, m: &Poly) -> Result<Poly, Error> {
        Ok(self.div_rem(m)?.1)
    }

    /// Whether `d` divides this polynomial exactly.
    pub fn divisible_by(&self, d: &Poly) -> Result<bool, Error> {
        Ok(self.rem(d)?.is_zero())
    }

    /// Greatest common divisor by Euclidean remainders. Monic automatically.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Substitute `x + 1` for `x`. An involutive ring automorphism.
    ///
    /// The coefficient of `x^j` in the image is the XOR of the coefficients
    /// of `x^i` over all `i` whose bit pattern covers `j` (Lucas: binomial
    /// `C(i,j)` is odd iff `j`'s bits are a subset of `i`'s), so the whole
    /// substitution is a superset-sum transform done in log(deg) masked
    /// shift-XOR passes.
    ///
    /// # Examples
    ///
    /// ```
    /// use bupoly::gf2poly::Poly;
    ///
    /// let m4: Poly = "0x1f".parse().unwrap(); // 1+x+x^2+x^3+x^4
    /// let m5: Poly = "0x19".parse().unwrap(); // 1+x^3+x^4
    /// assert_eq!(m4.conjugate(), m5);
    /// assert_eq!(m5.conjugate(), m4);
    /// ```
    pub fn conjugate(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let deg = self.deg();
        let mut limbs = self.limbs.clone();
        let mut step = 1usize;
        while step <= deg {
            if step < LIMB_BITS {
                // Destination bits (index & step == 0) receive from index+step;
                // sources have the step bit set, so they are never written.
                let mask = keep_mask(step);
                for i in 0..limbs.len() {
                    let hi = if i + 1 < limbs.len() { limbs[i + 1] } else { 0 };
                    let shifted = (limbs[i] >> step) | (hi << (LIMB_BITS - step));
                    limbs[i] ^= shifted & mask;
                }
            } else {
                let ws = step / LIMB_BITS;
                for i in 0..limbs.len() {
                    if i & ws == 0 && i + ws < limbs.len() {
                        let src = limbs[i + ws];
                        limbs[i] ^= src;
                    }
                }
            }
            step <<= 1;
        }
        Poly::from_limbs(limbs)
    }

    /// Reciprocal `x^{deg} * p(1/x)`: the coefficient sequence reversed.
    /// Errors on the zero polynomial.
    pub fn reciprocal(&self) -> Result<Poly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroOperand("reciprocal"));
        }
        let deg = self.deg();
        let mut rev: Vec<u64> = self.limbs.iter().rev().map(|w| w.reverse_bits()).collect();
        let slack = self.limbs.len() * LIMB_BITS - (deg + 1);
        rev = Poly::from_limbs(rev).shr(slack).limbs;
        Ok(Poly::from_limbs(rev))
    }

    /// Formal derivative; over GF(2) only odd-exponent terms survive.
    pub fn derivative(&self) -> Poly {
        const EVEN: u64 = 0x5555_5555_5555_5555;
        let shifted = self.shr(1);
        Poly::from_limbs(shifted.limbs.iter().map(|w| w & EVEN).collect())
    }

    /// Whether the polynomial is odd: coprime to `x(x+1)`, equivalently
    /// nonzero constant term and an odd number of terms. Errors on zero.
    pub fn is_odd(&self) -> Result<bool, Error> {
        if self.is_zero() {
            return Err(Error::ZeroOperand("is_odd"));
        }
        Ok(self.coeff(0) && self.weight() % 2 == 1)
    }

    /// Squarefreeness via `gcd(p, p')`.
    ///
    /// Characteristic-2 caveat: a vanishing derivative means `p` is a
    /// perfect square, so any `p` of degree >= 1 with `p' = 0` reports
    /// false. Constants are squarefree; the zero polynomial is not (it is
    /// divisible by every square).
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            Degree::NegInf => false,
            Degree::Of(0) => true,
            Degree::Of(_) => {
                let d = self.derivative();
                if d.is_zero() {
                    return false;
                }
                self.gcd(&d).expect("nonzero operand").is_one()
            }
        }
    }

    /// Uniformly random polynomial of exactly the given degree.
    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, degree: usize) -> Poly {
        assert!(degree <= DEGREE_CAP, "degree {degree} exceeds cap");
        let mut limbs = vec![0u64; degree / LIMB_BITS + 1];
        for w in limbs.iter_mut() {
            *w = rng.gen();
        }
        let top = degree % LIMB_BITS;
        let last = limbs.len() - 1;
        limbs[last] &= u64::MAX >> (LIMB_BITS - 1 - top);
        limbs[last] |= 1 << top;
        Poly::from_limbs(limbs)
    }
}

/// Schoolbook multiplication stays in use below this operand width; wider
/// operands switch to the word-level carry-less routine.
const MUL_SCHOOLBOOK_MAX_LIMBS: usize = 2;

/// XOR `src << k` into `buf`. The caller guarantees `buf` is wide enough.
fn xor_shl_into(buf: &mut [u64], src: &[u64], k: usize) {
    let ws = k / LIMB_BITS;
    let bs = k % LIMB_BITS;
    if bs == 0 {
        for (i, &w) in src.iter().enumerate() {
            buf[i + ws] ^= w;
        }
    } else {
        let mut carry = 0u64;
        for (i, &w) in src.iter().enumerate() {
            buf[i + ws] ^= (w << bs) | carry;
            carry = w >> (LIMB_BITS - bs);
        }
        if carry != 0 {
            buf[src.len() + ws] ^= carry;
        }
    }
}

/// Highest set bit at position `bound` or below, if any.
fn top_bit_at_most(limbs: &[u64], bound: usize) -> Option<usize> {
    let mut i = (bound / LIMB_BITS).min(limbs.len().checked_sub(1)?);
    loop {
        let mut w = limbs[i];
        if i == bound / LIMB_BITS {
            let keep = bound % LIMB_BITS;
            if keep < LIMB_BITS - 1 {
                w &= (1u64 << (keep + 1)) - 1;
            }
        }
        if w != 0 {
            return Some(i * LIMB_BITS + 63 - w.leading_zeros() as usize);
        }
        if i == 0 {
            return None;
        }
        i -= 1;
    }
}

/// Shift-XOR over the set bits of the short operand.
fn mul_schoolbook(acc: &mut [u64], small: &[u64], big: &[u64]) {
    for (i, &w) in small.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let bit = w.trailing_zeros() as usize;
            xor_shl_into(acc, big, i * LIMB_BITS + bit);
            w &= w - 1;
        }
    }
}

/// Word-level carry-less multiplication: one 16-entry nibble table per limb
/// of the short operand, reused across every limb of the long one.
fn mul_words(acc: &mut [u64], small: &[u64], big: &[u64]) {
    for (i, &aw) in small.iter().enumerate() {
        if aw == 0 {
            continue;
        }
        let mut table = [0u128; 16];
        table[1] = aw as u128;
        for idx in 2..16usize {
            let k = 31 - (idx as u32).leading_zeros();
            table[idx] = ((aw as u128) << k) ^ table[idx ^ (1 << k)];
        }
        for (j, &bw) in big.iter().enumerate() {
            if bw == 0 {
                continue;
            }
            let mut prod = 0u128;
            let mut sh = 60i32;
            while sh >= 0 {
                prod = (prod << 4) ^ table[((bw >> sh) & 0xF) as usize];
                sh -= 4;
            }
            acc[i + j] ^= prod as u64;
            acc[i + j + 1] ^= (prod >> 64) as u64;
        }
    }
}

/// Interleave a zero above each bit: `abcd -> 0a0b0c0d`.
fn spread(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// Inverse of [`spread`]: collect the even-position bits.
fn unspread(x: u64) -> u32 {
    let mut x = x & 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x >> 16)) & 0x0000_0000_FFFF_FFFF;
    x as u32
}

/// Within one limb: bits whose index has the `step` bit clear.
fn keep_mask(step: usize) -> u64 {
    match step {
        1 => 0x5555_5555_5555_5555,
        2 => 0x3333_3333_3333_3333,
        4 => 0x0F0F_0F0F_0F0F_0F0F,
        8 => 0x00FF_00FF_00FF_00FF,
        16 => 0x0000_FFFF_0000_FFFF,
        32 => 0x0000_0000_FFFF_FFFF,
        _ => unreachable!("mask only defined below one limb"),
    }
}

// Canonical form makes the (degree, coefficient-bits) order the same as
// comparing the coefficient bitstrings as integers.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        Poly::add(&self, &rhs)
    }
}

impl std::ops::Add<&Poly> for Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(&self, rhs)
    }
}

impl std::ops::AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = Poly::add(self, rhs);
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::ops::Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        Poly::mul(&self, &rhs)
    }
}

impl std::ops::Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(&self, rhs)
    }
}

impl std::ops::MulAssign<&Poly> for Poly {
    fn mul_assign(&mut self, rhs: &Poly) {
        *self = Poly::mul(self, rhs);
    }
}

/// Hex text form, least significant coefficient in bit 0: `0x17` is
/// `1 + x + x^2 + x^4`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.limbs.split_last() {
            None => f.write_str("0x0"),
            Some((&top, rest)) => {
                write!(f, "0x{top:x}")?;
                for w in rest.iter().rev() {
                    write!(f, "{w:016x}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self}, deg {})", self.degree())
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly, Error> {
        let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(Error::InvalidHex);
        }
        let mut limbs = Vec::with_capacity(digits.len() / 16 + 1);
        let bytes = digits.as_bytes();
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = std::str::from_utf8(&bytes[start..end]).expect("ascii hex");
            limbs.push(u64::from_str_radix(chunk, 16).map_err(|_| Error::InvalidHex)?);
            end = start;
        }
        let p = Poly::from_limbs(limbs);
        if let Degree::Of(d) = p.degree() {
            if d > DEGREE_CAP {
                return Err(Error::DegreeCapExceeded {
                    needed: d as u64,
                    cap: DEGREE_CAP as u64,
                });
            }
        }
        Ok(p)
    }
}
