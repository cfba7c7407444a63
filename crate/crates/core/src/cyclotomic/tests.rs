use crate::{Cyclotomic, Rational};
use proptest::prelude::*;

fn c(s: &str) -> Cyclotomic {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_integer(v)
}

/// Complex embedding ζ_n ↦ exp(2πi/n); independent of the reduction code.
fn eval(x: &Cyclotomic) -> (f64, f64) {
    use num_traits::ToPrimitive;
    let n = x.conductor() as f64;
    x.terms().fold((0.0, 0.0), |(re, im), (k, c)| {
        let c = c.to_f64().unwrap();
        let t = std::f64::consts::TAU * k as f64 / n;
        (re + c * t.cos(), im + c * t.sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
}

#[test]
fn addition_examples() {
    assert_eq!(c("E(1)") + c("E(1)"), int(2));
    assert_eq!(c("E(4)") + c("E(4)^3"), int(0));
    let sqrt3 = c("E(12)") + c("E(12)^11");
    assert_eq!(sqrt3.conductor(), 12);
    assert_eq!(&sqrt3 * &sqrt3, int(3));
    assert!(close(eval(&sqrt3), (3f64.sqrt(), 0.0)));
}

#[test]
fn multiplication_examples() {
    let sqrt3 = c("E(12)+E(12)^11");
    // by hand: ζ² + 2 + ζ^10 and ζ^10 ≡ 1 - ζ² (mod Φ_12)
    assert_eq!(sqrt3.mul_ref(&sqrt3), int(3));
    assert_eq!(c("E(4)") * c("E(4)"), int(-1));
    let x = c("E(7)^3 - 2/3*E(7) + 5");
    assert_eq!(Cyclotomic::one() * x.clone(), x);
}

#[test]
fn conjugation_examples() {
    assert_eq!(c("E(4)").conj(), c("E(4)^3"));
    assert_eq!(c("E(4)").conj(), -c("E(4)"));
    assert_eq!(int(7).conj(), int(7));
    let sqrt3 = c("E(12)+E(12)^11");
    assert_eq!(sqrt3.conj(), sqrt3);
}

#[test]
fn rational_extraction() {
    assert_eq!(int(3).to_rational().unwrap(), Rational::from_integer(3.into()));
    assert!(c("E(4)").to_rational().is_err());
    let sq = c("(E(12)+E(12)^11)^2");
    assert_eq!(sq.to_rational().unwrap(), Rational::from_integer(3.into()));
}

#[test]
fn parser_examples() {
    let direct =
        Cyclotomic::root_of_unity(12, 5) - Cyclotomic::root_of_unity(12, 1).scale(&Rational::from_integer(2.into()));
    assert_eq!(c("E(12)^5 - 2*E(12)"), direct);
    assert_eq!(c("1/2 + 1/2"), int(1));
    // (-1+√5)/2 has minimal polynomial x² + x - 1
    let g = c("E(5)+E(5)^4");
    assert_eq!(&g * &g + g.clone() - int(1), int(0));
    assert!(close(eval(&g), ((5f64.sqrt() - 1.0) / 2.0, 0.0)));
}

#[test]
fn parser_errors() {
    let e = "E(0)".parse::<Cyclotomic>().unwrap_err();
    assert_eq!(e.position, 2);
    assert!("E(3".parse::<Cyclotomic>().is_err());
    assert!("2 +".parse::<Cyclotomic>().is_err());
    assert!("1/0".parse::<Cyclotomic>().is_err());
    assert!("x".parse::<Cyclotomic>().is_err());
    assert_eq!("3 3".parse::<Cyclotomic>().unwrap_err().position, 2);
}

#[test]
fn conductor_is_minimized() {
    assert_eq!(c("E(6)").conductor(), 3);
    assert_eq!(c("E(6)"), -c("E(3)^2"));
    assert_eq!(c("E(8)^2"), c("E(4)"));
    assert_eq!(c("E(8)-E(8)^3").conductor(), 8);
    assert_eq!(c("E(15)^5"), c("E(3)"));
    assert_eq!(c("E(15)^3 + E(15)^5").conductor(), 15);
    assert_eq!(c("E(2)"), int(-1));
    assert_eq!(c("E(3)+E(3)^2"), int(-1));
    // √5 lives in Q(ζ_5) although it is written over ζ_20 here
    assert_eq!(c("E(20)^4+E(20)^16-E(20)^8-E(20)^12").conductor(), 5);
}

#[test]
fn canonical_printing() {
    assert_eq!(int(0).to_string(), "0");
    assert_eq!(c("-1/2").to_string(), "-1/2");
    assert_eq!(c("E(4)").to_string(), "E(4)");
    assert_eq!(c("-E(4)").to_string(), "-E(4)");
    assert_eq!(c("E(3)^2").to_string(), "-E(3)-1");
    assert_eq!(c("2*E(5)^3 - 1/3*E(5) + 4").to_string(), "2*E(5)^3-1/3*E(5)+4");
}

#[test]
fn inverse_and_division() {
    let x = c("E(12) + 2");
    let inv = x.inv().unwrap();
    assert_eq!(&x * &inv, int(1));
    assert!(int(0).inv().is_none());
    assert_eq!(c("E(4)^-1"), c("-E(4)"));
}

fn small_element() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(vec![1usize, 3, 4, 5, 8, 12, 15]), prop::collection::vec(-4i64..=4, 8)).prop_map(|(n, cs)| {
        let dense: Vec<Rational> = cs.iter().take(n).map(|&v| Rational::from_integer(v.into())).collect();
        Cyclotomic::from_dense(n, dense)
    })
}

proptest! {
    #[test]
    fn embedding_is_a_ring_homomorphism(a in small_element(), b in small_element()) {
        let (ea, eb) = (eval(&a), eval(&b));
        prop_assert!(close(eval(&(&a + &b)), (ea.0 + eb.0, ea.1 + eb.1)));
        prop_assert!(close(eval(&(&a * &b)), (ea.0 * eb.0 - ea.1 * eb.1, ea.0 * eb.1 + ea.1 * eb.0)));
        prop_assert!(close(eval(&a.conj()), (ea.0, -ea.1)));
    }

    #[test]
    fn conjugation_is_multiplicative_involution(a in small_element(), b in small_element()) {
        prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn field_axioms(a in small_element(), b in small_element(), d in small_element()) {
        prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
        prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
        }
    }

    #[test]
    fn norm_of_real_element_is_conjugation_invariant(a in small_element()) {
        let real = &a + &a.conj();
        let n = &real * &real.conj();
        prop_assert_eq!(n.conj(), n);
    }

    #[test]
    fn print_parse_round_trip(a in small_element()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Cyclotomic>().unwrap(), a);
    }
}
