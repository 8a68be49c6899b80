use proptest::prelude::*;

use semitight_core::a5closed::{sos_decomp, xi_raw, xi_sos, ZTuple};
use semitight_core::formoracle::{form_words, form_words_reversed, form_words_unmemoized, Word};
use semitight_core::qlaurent::{LaurentPoly, RatFunc};
use semitight_core::rootdata::{CartanSpec, ReducedWord, Weight};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn a5_weight() -> impl Strategy<Value = [i64; 5]> {
    prop::array::uniform5(0i64..=5)
}

fn ztuple() -> impl Strategy<Value = ZTuple> {
    prop::array::uniform10(-2i64..=16).prop_map(ZTuple::from_array)
}

/// A random word together with a random rearrangement of it.
fn word_pair(rank: usize, len: usize) -> impl Strategy<Value = (Word, Word)> {
    prop::collection::vec(1..=rank, 0..=len)
        .prop_flat_map(|letters| {
            let shuffled = Just(letters.clone()).prop_shuffle();
            (Just(letters), shuffled)
        })
        .prop_map(|(x, y)| (Word::new(x), Word::new(y)))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&a.div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn regularity_is_multiplicative(a in ratfunc(), b in ratfunc()) {
        let (ra, rb) = (a.eval_at_vinv0(), b.eval_at_vinv0());
        if let (Some(x), Some(y)) = (ra.value, rb.value) {
            prop_assert_eq!((&a * &b).eval_at_vinv0().value, Some(x * y));
        }
    }

    #[test]
    fn regularity_ignores_common_factors(n in laurent(), d in nonzero_laurent(), g in nonzero_laurent()) {
        let plain = RatFunc::new(n.clone(), d.clone()).unwrap();
        let padded = RatFunc::new(&n * &g, &d * &g).unwrap();
        prop_assert_eq!(plain.eval_at_vinv0(), padded.eval_at_vinv0());
        prop_assert_eq!(plain, padded);
    }

    #[test]
    fn xi_forms_agree(lam in a5_weight(), z in ztuple()) {
        prop_assert_eq!(xi_raw(lam, &z), xi_sos(lam, &z).0);
    }

    #[test]
    fn sos_bookkeeping(lam in a5_weight(), z in ztuple()) {
        let d = sos_decomp(lam, &z);
        prop_assert_eq!(d.x.iter().sum::<i64>(), 2 * d.a);
        prop_assert_eq!(d.y[0] + d.y[1], d.a);
    }

    #[test]
    fn form_is_symmetric((x, y) in word_pair(3, 7)) {
        let a3 = CartanSpec::type_a(3);
        prop_assert_eq!(form_words(&a3, &x, &y), form_words(&a3, &y, &x));
    }

    #[test]
    fn evaluation_orders_agree((x, y) in word_pair(4, 7)) {
        let a4 = CartanSpec::type_a(4);
        let memo = form_words(&a4, &x, &y);
        prop_assert_eq!(&memo, &form_words_unmemoized(&a4, &x, &y));
        prop_assert_eq!(&memo, &form_words_reversed(&a4, &x, &y));
    }

    #[test]
    fn d4_form_is_symmetric((x, y) in word_pair(4, 6)) {
        let d4 = CartanSpec::type_d4();
        prop_assert_eq!(form_words(&d4, &x, &y), form_words(&d4, &y, &x));
        prop_assert_eq!(form_words(&d4, &x, &y), form_words_reversed(&d4, &x, &y));
    }

    #[test]
    fn different_contents_are_orthogonal(x in prop::collection::vec(1usize..=3, 1..6), extra in 1usize..=3) {
        let a3 = CartanSpec::type_a(3);
        let mut y = x.clone();
        y.push(extra);
        y.remove(0);
        let (wx, wy) = (Word::new(x.clone()), Word::new(y.clone()));
        let same = wx.content(3) == wy.content(3);
        prop_assume!(!same);
        prop_assert!(form_words(&a3, &wx, &wy).is_zero());
    }

    #[test]
    fn reflections_are_involutions(c in prop::collection::vec(-6i64..6, 5), i in 1usize..=5) {
        let a5 = CartanSpec::type_a(5);
        let lam = Weight::new(c);
        prop_assert_eq!(lam.reflect(i, &a5).unwrap().reflect(i, &a5).unwrap(), lam);
    }

    #[test]
    fn longest_word_sends_dominant_to_antidominant(c in prop::collection::vec(0i64..6, 5)) {
        let a5 = CartanSpec::type_a(5);
        for word in [ReducedWord::a5_first(), ReducedWord::a5_second()] {
            let mut lam = Weight::new(c.clone());
            for &i in word.letters() {
                lam = lam.reflect(i, &a5).unwrap();
            }
            prop_assert!(lam.coords().iter().all(|&x| x <= 0));
        }
    }

    #[test]
    fn exponent_total_is_the_height(c in prop::collection::vec(0i64..4, 5)) {
        let a5 = CartanSpec::type_a(5);
        let lam = Weight::new(c);
        let word = ReducedWord::a5_first();
        let total: u32 = word.exponent_sequence(&lam, &a5).unwrap().iter().sum();
        let beta = word.xlambda(&lam, &a5).unwrap().weight(&a5).unwrap();
        prop_assert_eq!(i64::from(total), beta.height());
    }
}

#[test]
fn a5_words_share_weights_on_a_grid() {
    let a5 = CartanSpec::type_a(5);
    let mut c = [0i64; 5];
    loop {
        let lam = Weight::new(c.to_vec());
        let b1 = ReducedWord::a5_first().xlambda(&lam, &a5).unwrap().weight(&a5).unwrap();
        let b2 = ReducedWord::a5_second().xlambda(&lam, &a5).unwrap().weight(&a5).unwrap();
        assert_eq!(b1, b2, "{c:?}");
        let [a1, a2, a3, a4, a5c] = c;
        let expected = vec![
            a1 + a2 + a3 + a4 + a5c,
            (a1 + a2 + a3 + a4) + (a2 + a3 + a4 + a5c),
            (a1 + a2 + a3) + (a2 + a3 + a4) + (a3 + a4 + a5c),
            (a1 + a2) + (a2 + a3) + (a3 + a4) + (a4 + a5c),
            a1 + a2 + a3 + a4 + a5c,
        ];
        assert_eq!(b1.coords(), expected.as_slice(), "{c:?}");
        let mut k = 0;
        while k < 5 {
            c[k] += 1;
            if c[k] <= 3 {
                break;
            }
            c[k] = 0;
            k += 1;
        }
        if k == 5 {
            break;
        }
    }
}
