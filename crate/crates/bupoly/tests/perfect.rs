use bupoly::divisor::{sigma_prime_power, SigmaKind};
use bupoly::factor::{is_irreducible, Factorization};
use bupoly::gf2poly::Poly;
use bupoly::perfect::{constants, es_contains, is_mersenne, is_perfect, omega, MersenneShape};
use bupoly::Error;

fn p(support: &[usize]) -> Poly {
    Poly::from_support(support)
}

fn xy(a: u32, b: u32) -> Poly {
    Poly::x().pow(a) * Poly::x_plus_one().pow(b)
}

#[test]
fn mersenne_recognition() {
    assert_eq!(
        is_mersenne(constants().m(1)),
        Some(MersenneShape { a: 1, b: 1 })
    );
    assert_eq!(
        is_mersenne(constants().m(2)),
        Some(MersenneShape { a: 1, b: 2 })
    );
    assert_eq!(is_mersenne(&p(&[0, 5, 10, 15, 20])), None);
    // gcd(a, b) must be 1: 1 + x^2(x+1)^2 = (1+x+x^2)^2
    assert_eq!(is_mersenne(&(Poly::one() + xy(2, 2))), None);
    // both exponents must be positive
    assert_eq!(is_mersenne(&(Poly::one() + Poly::x_plus_one().pow(3))), None);
    assert_eq!(is_mersenne(&p(&[0, 3])), None);
    assert_eq!(is_mersenne(&Poly::one()), None);
    assert_eq!(is_mersenne(&Poly::zero()), None);
}

#[test]
fn omega_counts_distinct_bases() {
    assert_eq!(omega(&constants().c_poly(1)).unwrap(), 3);
    assert_eq!(omega(&Poly::one()).unwrap(), 0);
    assert_eq!(omega(&constants().c_poly(15)).unwrap(), 7);
    assert!(matches!(omega(&Poly::zero()), Err(Error::ZeroOperand(_))));
}

#[test]
fn biunitary_perfect_examples() {
    assert!(is_perfect(&xy(2, 2), SigmaKind::BiUnitary).unwrap());
    assert!(is_perfect(&xy(1, 1), SigmaKind::BiUnitary).unwrap());
    assert!(!is_perfect(&xy(3, 4), SigmaKind::BiUnitary).unwrap());
    for i in 1..=15 {
        assert!(
            is_perfect(&constants().c_poly(i), SigmaKind::BiUnitary).unwrap(),
            "C{i} should be bi-unitary perfect"
        );
    }
}

#[test]
fn table_contents() {
    let table = constants();
    assert_eq!(*table.m(4), p(&[0, 1, 2, 3, 4]));
    assert_eq!(*table.m(5), p(&[0, 3, 4]));
    let c12 = Factorization::from_prime_powers([
        (Poly::x(), 9),
        (Poly::x_plus_one(), 9),
        (table.m(4).clone(), 2),
        (table.m(5).clone(), 2),
    ]);
    assert_eq!(*table.c(12), c12);
    assert_eq!(table.c_poly(12), c12.product());
    assert_eq!(table.named("M3"), Some(table.m(3).clone()));
    assert_eq!(table.named("C15"), Some(table.c_poly(15)));
    assert_eq!(table.named("C16"), None);
    assert_eq!(table.named("M0"), None);
    assert_eq!(table.named("Q1"), None);
}

#[test]
fn exponent_set_membership() {
    assert!(!es_contains(6));
    assert!(es_contains(7));
    assert!(!es_contains(0));
    let small: Vec<u32> = (1..=16).filter(|&e| es_contains(e)).collect();
    assert_eq!(small, vec![1, 2, 3, 4, 7, 15]);
}

#[test]
fn constants_survive_conjugation() {
    // The conjugate of a bi-unitary perfect polynomial is one too.
    for i in 1..=15 {
        let conj = constants().c_poly(i).conjugate();
        assert!(is_perfect(&conj, SigmaKind::BiUnitary).unwrap());
    }
}

#[test]
fn constants_are_even_with_small_omega() {
    for i in 1..=15 {
        let c = constants().c_poly(i);
        assert!(!c.is_odd().unwrap());
        assert!(c.divisible_by(&xy(1, 1)).unwrap());
        let w = omega(&c).unwrap();
        assert!((3..=7).contains(&w), "C{i} has omega {w}");
    }
}

#[test]
fn coprime_complements_agree() {
    // For perfect A = A1 * A2 with gcd(A1, A2) = 1, the pieces are perfect
    // or imperfect together. Splitting along factorization bases makes the
    // pieces coprime by construction.
    let mut perfect_inputs = vec![xy(3, 3)];
    for i in [1, 4, 8] {
        perfect_inputs.push(constants().c_poly(i));
    }
    for a in perfect_inputs {
        assert!(is_perfect(&a, SigmaKind::BiUnitary).unwrap());
        let f = bupoly::factor::factorize(&a).unwrap();
        let parts = f.factors();
        for mask in 0u32..(1 << parts.len()) {
            let mut a1 = Poly::one();
            let mut a2 = Poly::one();
            for (bit, (base, exp)) in parts.iter().enumerate() {
                let piece = base.pow(*exp);
                if mask & (1 << bit) != 0 {
                    a1 = a1 * piece;
                } else {
                    a2 = a2 * piece;
                }
            }
            assert_eq!(
                is_perfect(&a1, SigmaKind::BiUnitary).unwrap(),
                is_perfect(&a2, SigmaKind::BiUnitary).unwrap()
            );
        }
    }
}

#[test]
fn self_reciprocal_mersenne_irreducibles() {
    let mut found = Vec::new();
    for a in 1u32..=11 {
        for b in 1u32..=11 {
            if a + b > 12 {
                continue;
            }
            let m = Poly::one() + xy(a, b);
            if is_irreducible(&m) && m.reciprocal().unwrap() == m {
                found.push(m);
            }
        }
    }
    found.sort();
    assert_eq!(
        found,
        vec![constants().m(1).clone(), constants().m(4).clone()]
    );
}

#[test]
fn sigma_symmetry_exponents() {
    // sigma(x^h) = sigma((x+1)^h) exactly when h = 2^n - 2.
    for h in 0u32..=62 {
        let equal = sigma_prime_power(&Poly::x(), h)
            == sigma_prime_power(&Poly::x_plus_one(), h);
        assert_eq!(equal, (h + 2).is_power_of_two(), "mismatch at h = {h}");
    }
}
