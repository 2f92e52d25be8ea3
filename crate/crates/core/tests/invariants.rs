//! Property tests over the public API: ring laws, sector bookkeeping and
//! operator identities that must hold for every input, not only the fixtures.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qfock_core::fock::{self, Sector, SparseOperator};
use qfock_core::generators::{cartan_weyl, number_from_cartan};
use qfock_core::ring::{parse_scalar, q_delta, q_integer};
use qfock_core::{Laurent, RootConfig};

const ROOT: RootConfig = RootConfig::HALF;

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-6i64..=6, -5i64..=5, 1i64..=4), 0..5).prop_map(|terms| {
        Laurent::from_terms(
            ROOT,
            terms.into_iter().map(|(e, n, d)| (e, BigRational::new(BigInt::from(n), BigInt::from(d)))),
        )
    })
}

fn sector() -> impl Strategy<Value = Sector> {
    (1usize..=4, 0u32..=3).prop_map(|(n, m)| Sector::new(n, m).unwrap())
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }

    #[test]
    fn scalar_text_round_trips(a in laurent()) {
        prop_assert_eq!(parse_scalar(&a.to_string(), ROOT).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn q_integers_satisfy_the_defining_identity(k in -8i64..=8) {
        // [k](q − q⁻¹) = q^k − q^-k
        let d = ROOT.denominator() as i64;
        let one = BigRational::from_integer(BigInt::from(1));
        let expected = Laurent::monomial(ROOT, k * d, one.clone()) - Laurent::monomial(ROOT, -k * d, one);
        prop_assert_eq!(&q_integer(ROOT, k) * &q_delta(ROOT), expected);
        prop_assert_eq!(q_integer(ROOT, k).classical(), BigRational::from_integer(BigInt::from(k)));
    }

    #[test]
    fn sector_indexing_is_a_bijection(s in sector()) {
        prop_assert_eq!(s.dim() as u128, fock::dimension_formula(s.modes(), s.level() as u32));
        for k in 0..s.dim() {
            let state = s.state(k);
            prop_assert_eq!(state.iter().sum::<u32>() as i64, s.level());
            prop_assert_eq!(s.index_of(state), Some(k));
        }
    }

    #[test]
    fn number_is_creation_after_annihilation_at_q_one(s in sector(), mode in 1usize..=4) {
        prop_assume!(mode <= s.modes() && s.level() > 0);
        let down = s.shifted(-1);
        let ann = fock::annihilation(ROOT, mode, &s).unwrap();
        let cre = fock::creation(ROOT, mode, &down).unwrap();
        let product = cre.try_compose(&ann).unwrap();
        prop_assert_eq!(product.classical(), fock::number(ROOT, mode, &s).unwrap().classical());
    }

    #[test]
    fn commutators_are_antisymmetric(n in 2usize..=3, m in 1u32..=2, i in 1usize..=3, j in 1usize..=3, k in 1usize..=3, l in 1usize..=3) {
        prop_assume!(i <= n && j <= n && k <= n && l <= n && i != j && k != l);
        let gens = cartan_weyl(ROOT, n, &Sector::new(n, m).unwrap()).unwrap();
        let a = gens.y(i, j).unwrap();
        let b = gens.y(k, l).unwrap();
        let ab = SparseOperator::commutator(a, b).unwrap();
        let ba = SparseOperator::commutator(b, a).unwrap();
        prop_assert!((&ab + &ba).is_zero());
    }

    #[test]
    fn cartan_differences_telescope(n in 3usize..=4, m in 0u32..=2, i in 1usize..=4, j in 1usize..=4, k in 1usize..=4) {
        prop_assume!(i <= n && j <= n && k <= n && i != j && j != k && i != k);
        let gens = cartan_weyl(ROOT, n, &Sector::new(n, m).unwrap()).unwrap();
        let sum = &gens.h(i, j).unwrap() + &gens.h(j, k).unwrap();
        prop_assert_eq!(sum, gens.h(i, k).unwrap());
    }
}

#[test]
fn number_reconstruction_matches_modes_on_larger_sector() {
    let sector = Sector::new(5, 2).unwrap();
    for (i, op) in number_from_cartan(ROOT, 5, &sector).unwrap().iter().enumerate() {
        assert_eq!(*op, fock::number(ROOT, i + 1, &sector).unwrap());
    }
}
