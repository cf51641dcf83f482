use bupoly::divisor::{
    biunitary_divisors, gcd_unitary, sigma, sigma_biunitary, sigma_biunitary_oracle,
    sigma_of_kind, sigma_of_kind_factored, sigma_prime_power, sigma_unitary, SigmaKind,
};
use bupoly::factor::{factorize, irreducibles_of_degree};
use bupoly::gf2poly::Poly;
use bupoly::Error;
use proptest::prelude::*;

fn p(support: &[usize]) -> Poly {
    Poly::from_support(support)
}

// The five Mersenne bases that recur in the perfect-polynomial lists.
fn m(i: usize) -> Poly {
    match i {
        1 => p(&[0, 1, 2]),
        2 => p(&[0, 1, 3]),
        3 => p(&[0, 2, 3]),
        4 => p(&[0, 1, 2, 3, 4]),
        5 => p(&[0, 3, 4]),
        _ => unreachable!(),
    }
}

#[test]
fn gcd_unitary_per_prime_rule() {
    let x = Poly::x();
    let y = Poly::x_plus_one();
    assert_eq!(gcd_unitary(&x.pow(3), &x.pow(3)).unwrap(), x.pow(3));
    assert_eq!(gcd_unitary(&x.pow(2), &x.pow(4)).unwrap(), Poly::one());
    assert_eq!(
        gcd_unitary(&(x.pow(2) * y.clone()), &(x.pow(2) * y.pow(3))).unwrap(),
        x.pow(2)
    );
    assert_eq!(gcd_unitary(&Poly::one(), &x).unwrap(), Poly::one());
    assert!(matches!(
        gcd_unitary(&Poly::zero(), &x),
        Err(Error::ZeroOperand(_))
    ));
}

#[test]
fn sigma_examples() {
    assert_eq!(sigma(&Poly::monomial(4)).unwrap(), m(4));
    assert_eq!(sigma(&Poly::one()).unwrap(), Poly::one());
    assert_eq!(sigma(&Poly::monomial(3)).unwrap(), p(&[0, 1, 2, 3]));
    assert!(matches!(sigma(&Poly::zero()), Err(Error::ZeroOperand(_))));
}

#[test]
fn sigma_unitary_examples() {
    assert_eq!(sigma_unitary(&Poly::monomial(3)).unwrap(), p(&[0, 3]));
    assert_eq!(
        sigma_unitary(&(Poly::x() * Poly::x_plus_one())).unwrap(),
        Poly::x_plus_one() * Poly::x()
    );
    let squarefree = Poly::x() * Poly::x_plus_one() * m(1);
    assert_eq!(
        sigma_unitary(&squarefree).unwrap(),
        sigma(&squarefree).unwrap()
    );
}

#[test]
fn sigma_biunitary_examples() {
    assert_eq!(
        sigma_biunitary(&m(2).pow(4)).unwrap(),
        Poly::x().pow(2) * Poly::x_plus_one().pow(4) * m(1) * m(5)
    );
    assert_eq!(
        sigma_biunitary(&m(3).pow(4)).unwrap(),
        Poly::x().pow(4) * Poly::x_plus_one().pow(2) * m(1) * m(4)
    );
    assert_eq!(
        sigma_biunitary(&Poly::monomial(2)).unwrap(),
        Poly::x_plus_one().pow(2)
    );
    assert_eq!(sigma_biunitary(&Poly::x()).unwrap(), Poly::x_plus_one());
}

#[test]
fn biunitary_divisor_lists() {
    let x = Poly::x();
    assert_eq!(
        biunitary_divisors(&x.pow(3)).unwrap(),
        vec![Poly::one(), x.clone(), x.pow(2), x.pow(3)]
    );
    assert_eq!(
        biunitary_divisors(&x.pow(2)).unwrap(),
        vec![Poly::one(), x.pow(2)]
    );
    assert_eq!(biunitary_divisors(&Poly::one()).unwrap(), vec![Poly::one()]);
    assert!(matches!(
        biunitary_divisors(&Poly::zero()),
        Err(Error::ZeroOperand(_))
    ));
    assert!(matches!(
        biunitary_divisors(&Poly::monomial(65)),
        Err(Error::OracleCapExceeded { degree: 65, cap: 64 })
    ));
}

#[test]
fn oracle_examples() {
    assert_eq!(
        sigma_biunitary_oracle(&m(2).pow(4)).unwrap(),
        Poly::x().pow(2) * Poly::x_plus_one().pow(4) * m(1) * m(5)
    );
    // x^2(x+1)^2 is its own bi-unitary divisor sum.
    let bup = Poly::x().pow(2) * Poly::x_plus_one().pow(2);
    assert_eq!(sigma_biunitary_oracle(&bup).unwrap(), bup);
    for n in 0..=3u32 {
        let s = Poly::monomial(2 * n as usize + 1);
        assert_eq!(sigma_biunitary_oracle(&s).unwrap(), sigma(&s).unwrap());
    }
}

#[test]
fn oracle_matches_closed_form_on_prime_powers() {
    for d in 1..=5 {
        for t in irreducibles_of_degree(d).unwrap() {
            for e in 1..=10u32 {
                let s = t.pow(e);
                assert_eq!(
                    sigma_biunitary(&s).unwrap(),
                    sigma_biunitary_oracle(&s).unwrap(),
                    "mismatch at T = {t}, e = {e}"
                );
            }
        }
    }
}

#[test]
fn odd_exponent_closed_form() {
    // For a = 2^α u - 1 with u odd,
    // σ**(T^a) = (1+T)^{2^α - 1} σ(T^{u-1})^{2^α}.
    for d in 1..=3 {
        for t in irreducibles_of_degree(d).unwrap() {
            for a in (1..=31u32).step_by(2) {
                let alpha = (a + 1).trailing_zeros();
                let u = (a + 1) >> alpha;
                let one_plus_t = t.clone() + Poly::one();
                let expected = one_plus_t.pow((1u32 << alpha) - 1)
                    * sigma_prime_power(t, u - 1).pow(1 << alpha);
                assert_eq!(sigma_biunitary(&t.pow(a)).unwrap(), expected);
            }
        }
    }
}

#[test]
fn base_never_divides_its_biunitary_sigma() {
    for d in 1..=4 {
        for t in irreducibles_of_degree(d).unwrap() {
            for c in 1..=12u32 {
                let value = sigma_biunitary(&t.pow(c)).unwrap();
                assert!(!value.divisible_by(t).unwrap());
            }
        }
    }
}

#[test]
fn splitting_powers_of_x() {
    // σ**(x^a) factors entirely into x and x+1 exactly when a = 2 or
    // a = 2^α - 1.
    for a in 1..=40u32 {
        let value = sigma_biunitary(&Poly::monomial(a as usize)).unwrap();
        let splits = factorize(&value)
            .unwrap()
            .iter()
            .all(|(base, _)| *base == Poly::x() || *base == Poly::x_plus_one());
        let expected = a == 2 || (a + 1).is_power_of_two();
        assert_eq!(splits, expected, "splitting mismatch at a = {a}");
    }
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(any::<bool>(), 1..=max_deg + 1).prop_map(|bits| {
        let exps: Vec<usize> = bits
            .iter()
            .enumerate()
            .filter_map(|(i, b)| b.then_some(i))
            .collect();
        Poly::from_support(&exps)
    })
}

proptest! {
    #[test]
    fn multiplicative_on_coprime_inputs(a in arb_poly(24), b in arb_poly(24)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assume!(a.gcd(&b).unwrap().is_one());
        let product = a.clone() * b.clone();
        for kind in [SigmaKind::AllDivisors, SigmaKind::Unitary, SigmaKind::BiUnitary] {
            prop_assert_eq!(
                sigma_of_kind(kind, &product).unwrap(),
                sigma_of_kind(kind, &a).unwrap() * sigma_of_kind(kind, &b).unwrap()
            );
        }
    }

    #[test]
    fn biunitary_sigma_preserves_degree(s in arb_poly(48)) {
        prop_assume!(!s.is_zero());
        prop_assert_eq!(
            sigma_biunitary(&s).unwrap().degree(),
            s.degree()
        );
    }

    #[test]
    fn squarefree_inputs_collapse_the_three_sigmas(s in arb_poly(32)) {
        prop_assume!(!s.is_zero() && s.is_squarefree());
        let all = sigma(&s).unwrap();
        prop_assert_eq!(sigma_unitary(&s).unwrap(), all.clone());
        prop_assert_eq!(sigma_biunitary(&s).unwrap(), all);
    }

    #[test]
    fn closed_form_matches_oracle(s in arb_poly(32)) {
        prop_assume!(!s.is_zero());
        prop_assert_eq!(
            sigma_biunitary(&s).unwrap(),
            sigma_biunitary_oracle(&s).unwrap()
        );
    }

    #[test]
    fn factored_entry_points_agree(s in arb_poly(32)) {
        prop_assume!(!s.is_zero());
        let f = factorize(&s).unwrap();
        for kind in [SigmaKind::AllDivisors, SigmaKind::Unitary, SigmaKind::BiUnitary] {
            prop_assert_eq!(
                sigma_of_kind_factored(kind, &f),
                sigma_of_kind(kind, &s).unwrap()
            );
        }
    }
}
