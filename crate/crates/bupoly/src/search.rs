//! Exhaustive searches for bi-unitary perfect polynomials.
//!
//! Three finite search boxes: the Mersenne/exponent-set enumeration behind
//! the main classification, a bounded brute force for small ω, and the
//! guided candidate families that rule out non-Mersenne cofactors. Every
//! emitted [`Finding`] is re-verified from scratch, and against the naive
//! divisor-enumeration oracle when its degree permits.

use rayon::prelude::*;

use crate::divisor::{
    sigma_biunitary_factored, sigma_biunitary_oracle, sigma_biunitary_prime_power,
    ORACLE_DEGREE_CAP,
};
use crate::factor::{factorize, is_irreducible, irreducibles_of_degree, Factorization};
use crate::gf2poly::Poly;
use crate::perfect::{constants, es_contains, is_mersenne};
use crate::Error;

/// Which search a [`SearchSpec`] drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    MersenneSpecial,
    BruteForce,
    GuidedFamilies,
}

impl SearchMode {
    /// Stable kebab-case name, used in reports and error messages.
    pub fn name(self) -> &'static str {
        match self {
            SearchMode::MersenneSpecial => "mersenne-special",
            SearchMode::BruteForce => "brute-force",
            SearchMode::GuidedFamilies => "guided-families",
        }
    }
}

/// Exponent menu for the Mersenne bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentSet {
    /// `{0} ∪ (E_s ∩ [1, max])`: absent, or an exponent a Mersenne base can
    /// carry in a bi-unitary perfect product.
    EsTruncated { max: u32 },
    /// The full range `1..=max`, for brute force.
    Full { max: u32 },
}

impl ExponentSet {
    /// The concrete exponent menu, ascending.
    pub fn values(&self) -> Vec<u32> {
        match *self {
            ExponentSet::EsTruncated { max } => {
                let mut v = vec![0];
                v.extend((1..=max).filter(|&e| es_contains(e)));
                v
            }
            ExponentSet::Full { max } => (1..=max).collect(),
        }
    }
}

/// Bounds and mode for one search run.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub mode: SearchMode,
    /// Cap on the exponents of x and x+1.
    pub max_xy_exponent: u32,
    /// Exponent menu for the other irreducible bases.
    pub exponent_set: ExponentSet,
    /// Degree cap for brute-force base polynomials.
    pub max_irreducible_degree: usize,
    /// Total-degree cap for brute-force candidates.
    pub max_total_degree: usize,
    /// Number of distinct irreducible factors a brute-force candidate may
    /// have; 2 counts just x and x+1.
    pub omega_max: usize,
    /// Worker threads; 0 uses the global default.
    pub jobs: usize,
}

impl SearchSpec {
    /// The Mersenne enumeration box: a, b up to 60 and exponents from the
    /// truncated exponent set. Every known solution whose odd part is a
    /// product of Mersenne irreducibles lies well inside this box.
    pub fn mersenne_special() -> Self {
        SearchSpec {
            mode: SearchMode::MersenneSpecial,
            max_xy_exponent: 60,
            exponent_set: ExponentSet::EsTruncated { max: 7 },
            max_irreducible_degree: 4,
            max_total_degree: 256,
            omega_max: 7,
            jobs: 0,
        }
    }

    /// The brute-force box for `omega_max` in 2..=4: exponents up to 16,
    /// base degrees up to 6, total degree up to 40. Contains every listed
    /// solution with that many distinct factors, with margin.
    pub fn brute_force(omega_max: usize) -> Self {
        SearchSpec {
            mode: SearchMode::BruteForce,
            max_xy_exponent: 16,
            exponent_set: ExponentSet::Full { max: 16 },
            max_irreducible_degree: 6,
            max_total_degree: 40,
            omega_max,
            jobs: 0,
        }
    }

    /// The three guided candidate families.
    pub fn guided_families() -> Self {
        SearchSpec {
            mode: SearchMode::GuidedFamilies,
            max_xy_exponent: 26,
            exponent_set: ExponentSet::Full { max: 8 },
            max_irreducible_degree: 12,
            max_total_degree: 256,
            omega_max: 4,
            jobs: 0,
        }
    }

    /// Structural checks: positive caps and a mode-appropriate omega cap.
    pub fn validate(&self) -> Result<(), Error> {
        if self.max_irreducible_degree == 0 || self.max_total_degree == 0 {
            return Err(Error::InvalidSearchSpec("degree caps must be positive"));
        }
        if !(2..=7).contains(&self.omega_max) {
            return Err(Error::InvalidSearchSpec("omega_max must lie in 2..=7"));
        }
        match self.mode {
            SearchMode::MersenneSpecial => Ok(()),
            SearchMode::BruteForce => {
                if self.omega_max > 4 {
                    Err(Error::InvalidSearchSpec(
                        "brute force covers omega_max 2..=4",
                    ))
                } else if self.max_xy_exponent == 0 {
                    Err(Error::InvalidSearchSpec(
                        "brute force needs max_xy_exponent >= 1",
                    ))
                } else {
                    Ok(())
                }
            }
            SearchMode::GuidedFamilies => Ok(()),
        }
    }

    fn expect_mode(&self, expected: SearchMode) -> Result<(), Error> {
        if self.mode == expected {
            Ok(())
        } else {
            Err(Error::SearchModeMismatch {
                expected: expected.name(),
            })
        }
    }
}

/// One verified bi-unitary perfect polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub poly: Poly,
    /// Factored form of `poly`, as the search assembled it.
    pub factors: Factorization,
    /// Independent factorization of `sigma_biunitary(poly)`; multiplies
    /// out to `poly`, which is what perfection means.
    pub certificate: Factorization,
    pub family_tag: Option<String>,
}

impl Finding {
    /// Re-verifies a candidate from scratch and wraps it. Returns None when
    /// the candidate is not a fixed point of σ**. The verification recomputes
    /// σ** from the factored form, and at moderate degree additionally runs
    /// the naive divisor-enumeration oracle.
    fn verified(factors: Factorization, tag: Option<String>) -> Option<Finding> {
        let poly = factors.product();
        let sigma = sigma_biunitary_factored(&factors);
        if sigma != poly {
            return None;
        }
        if poly.degree().finite().expect("findings are nonzero") <= ORACLE_DEGREE_CAP {
            assert_eq!(
                sigma_biunitary_oracle(&poly).expect("within oracle cap"),
                poly,
                "divisor-sum routes disagree on {poly}"
            );
        }
        let certificate = factorize(&sigma).expect("sigma of nonzero is nonzero");
        Some(Finding {
            poly,
            factors,
            certificate,
            family_tag: tag,
        })
    }
}

/// Labels a verified polynomial against the known lists.
fn tag_for(factors: &Factorization) -> String {
    let table = constants();
    let poly = factors.product();
    for i in 1..=15 {
        if *factors == *table.c(i) {
            return format!("C{i}");
        }
    }
    for i in 1..=15 {
        if poly == table.c_poly(i).conjugate() {
            return format!("C{i}-conjugate");
        }
    }
    if factors.omega() <= 2 {
        let a = factors.exponent_of(&Poly::x());
        let b = factors.exponent_of(&Poly::x_plus_one());
        if a == b {
            if a == 2 {
                return "omega2-sporadic".to_string();
            }
            if (a as u64 + 1).is_power_of_two() {
                return format!("omega2-family n={}", (a + 1).trailing_zeros());
            }
        }
    }
    "unlisted".to_string()
}

fn sort_findings(mut findings: Vec<Finding>) -> Vec<Finding> {
    findings.sort_by(|l, r| l.poly.cmp(&r.poly));
    findings
}

/// Runs `work` on a dedicated pool when `jobs > 0`, else on the global one.
fn with_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        work()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool construction");
        pool.install(work)
    }
}

/// Exponent vector over the fixed basis [x, x+1, M1..M5], or None when the
/// polynomial has a prime factor outside the basis.
fn basis_vector(f: &Factorization, basis: &[Poly; 7]) -> Option<[u16; 7]> {
    let mut v = [0u16; 7];
    for (base, exp) in f.iter() {
        let slot = basis.iter().position(|m| m == base)?;
        v[slot] += *exp as u16;
    }
    Some(v)
}

fn add_vectors(l: &[u16; 7], r: &[u16; 7]) -> [u16; 7] {
    let mut out = [0u16; 7];
    for i in 0..7 {
        out[i] = l[i] + r[i];
    }
    out
}

/// Enumerates A = x^a (x+1)^b M1^h1 … M5^h5 over the box the `SearchSpec` describes and returns
/// every bi-unitary perfect one, canonically sorted.
///
/// The inner test works on exponent vectors: σ** is multiplicative, and each
/// prime-power piece either factors over the seven-element basis or rules
/// the candidate out (a prime outside the basis divides σ**(A) but not A).
/// Survivors are rebuilt and re-verified on actual polynomials.
pub fn search_mersenne_special(spec: &SearchSpec) -> Result<Vec<Finding>, Error> {
    spec.expect_mode(SearchMode::MersenneSpecial)?;
    spec.validate()?;

    let table = constants();
    let basis: [Poly; 7] = [
        Poly::x(),
        Poly::x_plus_one(),
        table.m(1).clone(),
        table.m(2).clone(),
        table.m(3).clone(),
        table.m(4).clone(),
        table.m(5).clone(),
    ];
    let menu = spec.exponent_set.values();
    let max_xy = spec.max_xy_exponent;

    // σ** piece vectors for x^a and (x+1)^b, indexed by exponent.
    let piece = |base: &Poly, e: u32| -> Option<[u16; 7]> {
        let s = sigma_biunitary_prime_power(base, e);
        basis_vector(&factorize(&s).expect("sigma is nonzero"), &basis)
    };
    let x_pieces: Vec<Option<[u16; 7]>> = (0..=max_xy).map(|a| piece(&basis[0], a)).collect();
    let y_pieces: Vec<Option<[u16; 7]>> = (0..=max_xy).map(|b| piece(&basis[1], b)).collect();

    // Combined σ** piece vectors for every Mersenne-exponent combination.
    let mut combos: Vec<([u32; 5], Option<[u16; 7]>)> = Vec::new();
    let m_pieces: Vec<Vec<Option<[u16; 7]>>> = (0..5)
        .map(|j| menu.iter().map(|&h| piece(&basis[2 + j], h)).collect())
        .collect();
    let mut stack = vec![([0u32; 5], Some([0u16; 7]), 0usize)];
    while let Some((hs, sum, j)) = stack.pop() {
        if j == 5 {
            combos.push((hs, sum));
            continue;
        }
        for (idx, &h) in menu.iter().enumerate() {
            let mut next_hs = hs;
            next_hs[j] = h;
            let next_sum = match (&sum, &m_pieces[j][idx]) {
                (Some(l), Some(r)) => Some(add_vectors(l, r)),
                _ => None,
            };
            stack.push((next_hs, next_sum, j + 1));
        }
    }

    let cells: Vec<(u32, u32)> = (0..=max_xy)
        .flat_map(|a| (0..=max_xy).map(move |b| (a, b)))
        .collect();

    let findings: Vec<Finding> = with_pool(spec.jobs, || {
        cells
            .par_iter()
            .flat_map_iter(|&(a, b)| {
                let mut hits = Vec::new();
                let (Some(xa), Some(yb)) =
                    (&x_pieces[a as usize], &y_pieces[b as usize])
                else {
                    return hits.into_iter();
                };
                let xy = add_vectors(xa, yb);
                for (hs, sum) in &combos {
                    let Some(sum) = sum else { continue };
                    let total = add_vectors(&xy, sum);
                    let target = [
                        a as u16, b as u16, hs[0] as u16, hs[1] as u16, hs[2] as u16,
                        hs[3] as u16, hs[4] as u16,
                    ];
                    if total != target {
                        continue;
                    }
                    if a == 0 && b == 0 && hs.iter().all(|&h| h == 0) {
                        // the constant 1 is a fixed point but not a finding
                        continue;
                    }
                    let mut powers = vec![(basis[0].clone(), a), (basis[1].clone(), b)];
                    powers.extend((0..5).map(|j| (basis[2 + j].clone(), hs[j])));
                    let factors = Factorization::from_prime_powers(powers);
                    let tag = tag_for(&factors);
                    hits.extend(Finding::verified(factors, Some(tag)));
                }
                hits.into_iter()
            })
            .collect()
    });
    Ok(sort_findings(findings))
}

/// Brute-force enumeration of A = x^a (x+1)^b P1^h1 … Pk^hk with k =
/// omega_max − 2 distinct odd irreducible bases, within the `SearchSpec` degree
/// box. Returns every bi-unitary perfect candidate, canonically sorted.
///
/// Pruning is by exact valuations: a fixed point must have the x-adic and
/// (x+1)-adic valuations of σ**(A) equal to a and b, and each valuation is
/// a sum of per-piece valuations, so a is forced by the rest of the
/// candidate and b is checked before any polynomial product is formed.
pub fn search_omega(spec: &SearchSpec) -> Result<Vec<Finding>, Error> {
    spec.expect_mode(SearchMode::BruteForce)?;
    spec.validate()?;

    let max_xy = spec.max_xy_exponent;
    let max_total = spec.max_total_degree;
    let exponents = spec.exponent_set.values();
    let k = spec.omega_max - 2;

    let mut pool: Vec<Poly> = Vec::new();
    for d in 2..=spec.max_irreducible_degree {
        pool.extend(irreducibles_of_degree(d)?.iter().cloned());
    }

    // vcross[e] = v_{x+1}(σ**(x^e)) = v_x(σ**((x+1)^e)); σ** of a prime
    // power is never divisible by its own base.
    let vcross: Vec<u32> = (0..=max_xy)
        .map(|e| {
            let s = sigma_biunitary_prime_power(&Poly::x(), e);
            s.conjugate().trailing_zeros().expect("nonzero") as u32
        })
        .collect();

    // Per-base, per-exponent piece data: (vx, vy, degree) of σ**(P^h).
    struct Piece {
        vx: u32,
        vy: u32,
        degree: usize,
    }
    let pieces: Vec<Vec<Piece>> = pool
        .iter()
        .map(|p| {
            exponents
                .iter()
                .map(|&h| {
                    let s = sigma_biunitary_prime_power(p, h);
                    Piece {
                        vx: s.trailing_zeros().expect("nonzero") as u32,
                        vy: s.conjugate().trailing_zeros().expect("nonzero") as u32,
                        degree: s.degree().finite().expect("nonzero"),
                    }
                })
                .collect()
        })
        .collect();

    // All ways to pick k distinct bases with exponents, within the degree
    // budget left after x^1 (x+1)^1.
    let mut selections: Vec<Vec<(usize, usize)>> = Vec::new();
    let budget = max_total.saturating_sub(2);
    let mut current: Vec<(usize, usize)> = Vec::new();
    fn pick(
        pool_deg: &[usize],
        exponents: &[u32],
        k: usize,
        start: usize,
        used: usize,
        budget: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..pool_deg.len() {
            for (ei, &e) in exponents.iter().enumerate() {
                let cost = pool_deg[i] * e as usize;
                if used + cost > budget {
                    break;
                }
                current.push((i, ei));
                pick(pool_deg, exponents, k, i + 1, used + cost, budget, current, out);
                current.pop();
            }
        }
    }
    let pool_deg: Vec<usize> = pool
        .iter()
        .map(|p| p.degree().finite().expect("irreducible"))
        .collect();
    pick(
        &pool_deg,
        &exponents,
        k,
        0,
        0,
        budget,
        &mut current,
        &mut selections,
    );

    let findings: Vec<Finding> = with_pool(spec.jobs, || {
        selections
            .par_iter()
            .flat_map_iter(|selection| {
                let mut hits = Vec::new();
                let mut vx_m = 0u32;
                let mut vy_m = 0u32;
                let mut deg_m = 0usize;
                for &(i, ei) in selection {
                    let piece = &pieces[i][ei];
                    vx_m += piece.vx;
                    vy_m += piece.vy;
                    deg_m += piece.degree;
                }
                for b in 1..=max_xy {
                    let a = vcross[b as usize] + vx_m;
                    if a < 1 || a > max_xy {
                        continue;
                    }
                    if vcross[a as usize] + vy_m != b {
                        continue;
                    }
                    if a as usize + b as usize + deg_m > max_total {
                        continue;
                    }
                    let mut powers = vec![(Poly::x(), a), (Poly::x_plus_one(), b)];
                    powers.extend(
                        selection
                            .iter()
                            .map(|&(i, ei)| (pool[i].clone(), exponents[ei])),
                    );
                    let factors = Factorization::from_prime_powers(powers);
                    let tag = tag_for(&factors);
                    hits.extend(Finding::verified(factors, Some(tag)));
                }
                hits.into_iter()
            })
            .collect()
    });
    Ok(sort_findings(findings))
}

/// The shape of a guided candidate family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    /// Q = σ(P^{2m}) for a Mersenne P.
    QisSigmaP2m,
    /// PQ = σ(x^{2m}).
    PQisSigmaX2m,
    /// Q = σ(x^{2m}).
    QisSigmaX2m,
}

/// A finite family of candidates x^a (x+1)^b P^c Q^d with Q irreducible but
/// not Mersenne.
#[derive(Debug, Clone)]
pub struct GuidedFamily {
    pub name: FamilyName,
    /// Admissible (P, Q) pairs; the pairing is part of the family.
    pub pq_choices: Vec<(Poly, Poly)>,
    pub a_values: Vec<u32>,
    pub b_values: Vec<u32>,
    pub c_values: Vec<u32>,
    pub d_values: Vec<u32>,
    /// Restrict to a + b odd.
    pub require_odd_ab_sum: bool,
}

impl GuidedFamily {
    /// Structural checks: nonempty ranges, P Mersenne irreducible, Q
    /// irreducible and not Mersenne.
    pub fn validate(&self) -> Result<(), Error> {
        if self.pq_choices.is_empty()
            || self.a_values.is_empty()
            || self.b_values.is_empty()
            || self.c_values.is_empty()
            || self.d_values.is_empty()
        {
            return Err(Error::InvalidSearchSpec("guided family has an empty range"));
        }
        for (p, q) in &self.pq_choices {
            if !is_irreducible(p) || is_mersenne(p).is_none() {
                return Err(Error::InvalidSearchSpec(
                    "guided family P must be Mersenne irreducible",
                ));
            }
            if !is_irreducible(q) || is_mersenne(q).is_some() {
                return Err(Error::InvalidSearchSpec(
                    "guided family Q must be irreducible and not Mersenne",
                ));
            }
        }
        Ok(())
    }

    /// The three built-in families.
    pub fn builtin() -> Vec<GuidedFamily> {
        let m1 = constants().m(1).clone();
        let m4 = constants().m(4).clone();
        let x = Poly::x();
        let y = Poly::x_plus_one();
        let sigma_m1_2 = Poly::one() + x.clone() * y.clone() * m1.clone();
        let sigma_m1_4 = Poly::one() + x.pow(3) * y.pow(3) * m1.clone();
        let sigma_x8_over_m1 = Poly::from_support(&[0, 3, 6]);
        let sigma_x12 = Poly::one() + x.clone() * y.pow(3) * m1.pow(4);
        let sigma_x10 = Poly::one() + x.clone() * y.clone() * m4.pow(2);
        vec![
            GuidedFamily {
                name: FamilyName::QisSigmaP2m,
                pq_choices: vec![(m1.clone(), sigma_m1_2), (m1.clone(), sigma_m1_4)],
                a_values: (1..=11).collect(),
                b_values: (1..=11).collect(),
                c_values: (1..=8).collect(),
                d_values: (1..=3).collect(),
                require_odd_ab_sum: true,
            },
            GuidedFamily {
                name: FamilyName::PQisSigmaX2m,
                pq_choices: vec![(m1.clone(), sigma_x8_over_m1)],
                a_values: vec![1, 3, 4, 6, 7, 16],
                b_values: vec![1, 3, 4, 6, 7, 16],
                c_values: (1..=3).collect(),
                d_values: vec![1],
                require_odd_ab_sum: false,
            },
            GuidedFamily {
                name: FamilyName::QisSigmaX2m,
                pq_choices: vec![(m1, sigma_x12), (m4, sigma_x10)],
                a_values: vec![20, 22, 24, 26],
                b_values: vec![4, 6, 8, 10],
                c_values: vec![1, 2, 3, 7],
                d_values: vec![1],
                require_odd_ab_sum: false,
            },
        ]
    }
}

/// Tests σ**(A) = A for every tuple of the three built-in families and
/// returns whatever fixed points exist. Family (1) does contain solutions:
/// four of them, built on Q = x⁴+x+1 = σ(M₁²).
pub fn check_guided_families(spec: &SearchSpec) -> Result<Vec<Finding>, Error> {
    spec.expect_mode(SearchMode::GuidedFamilies)?;
    spec.validate()?;

    let mut findings = Vec::new();
    for family in GuidedFamily::builtin() {
        family.validate()?;
        for (p, q) in &family.pq_choices {
            for &a in &family.a_values {
                for &b in &family.b_values {
                    if family.require_odd_ab_sum && (a + b) % 2 == 0 {
                        continue;
                    }
                    for &c in &family.c_values {
                        for &d in &family.d_values {
                            let factors = Factorization::from_prime_powers([
                                (Poly::x(), a),
                                (Poly::x_plus_one(), b),
                                (p.clone(), c),
                                (q.clone(), d),
                            ]);
                            let tag = tag_for(&factors);
                            findings.extend(Finding::verified(factors, Some(tag)));
                        }
                    }
                }
            }
        }
    }
    Ok(sort_findings(findings))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_menus() {
        assert_eq!(
            ExponentSet::EsTruncated { max: 7 }.values(),
            vec![0, 1, 2, 3, 4, 7]
        );
        assert_eq!(ExponentSet::Full { max: 4 }.values(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn mode_checks() {
        let spec = SearchSpec::mersenne_special();
        assert!(matches!(
            search_omega(&spec),
            Err(Error::SearchModeMismatch { .. })
        ));
        let mut brute = SearchSpec::brute_force(5);
        assert!(matches!(
            search_omega(&brute),
            Err(Error::InvalidSearchSpec(_))
        ));
        brute.omega_max = 4;
        brute.mode = SearchMode::MersenneSpecial;
        assert!(matches!(
            search_omega(&brute),
            Err(Error::SearchModeMismatch { .. })
        ));
    }
}
