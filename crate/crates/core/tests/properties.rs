use christoffel_lab::markoff::{is_balanced_periodic, markoff_factors, satisfies_markoff_periodic};
use christoffel_lab::{
    is_central, lower_christoffel, mechanical_window, BiInfiniteWord, LineSpec, Slope, Word,
};
use num_integer::Integer;
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    (1..=max).prop_flat_map(|n| (0u64..1 << n).prop_map(move |bits| Word::from_bits(bits, n)))
}

proptest! {
    #[test]
    fn condition_is_closed_under_reversal(p in word(10)) {
        prop_assert_eq!(
            satisfies_markoff_periodic(&p).unwrap(),
            satisfies_markoff_periodic(&p.reverse()).unwrap()
        );
    }

    #[test]
    fn condition_is_closed_under_letter_swap(p in word(10)) {
        prop_assert_eq!(
            satisfies_markoff_periodic(&p).unwrap(),
            satisfies_markoff_periodic(&p.swap_letters()).unwrap()
        );
    }

    #[test]
    fn markoff_factors_of_good_words_are_central(p in word(10)) {
        prop_assume!(satisfies_markoff_periodic(&p).unwrap());
        prop_assert!(is_balanced_periodic(&p).unwrap());
        for m in markoff_factors(&p.repeat(2 + 40 / p.len())) {
            prop_assert!(is_central(&m), "{:?} in ({})^ω", m, p);
        }
    }

    #[test]
    fn reversal_windows_are_reversed(s in prop_oneof![
            word(8).prop_map(|p| BiInfiniteWord::periodic(p).unwrap()),
            (word(4), word(5), word(4)).prop_map(|(l, c, r)| BiInfiniteWord::doubly_eventually_periodic(l, c, r).unwrap()),
        ],
        from in -30i64..0, len in 0i64..40) {
        let rev = s.reversal();
        let c = s.reversal_offset();
        let w = rev.window(from, from + len).unwrap();
        let orig = s.window(c - (from + len) + 1, c - from + 1).unwrap();
        prop_assert_eq!(w, orig.reverse());
    }
}

#[test]
fn rational_windows_tile_christoffel_words() {
    for total in 2..=12u64 {
        for p in 1..total {
            let q = total - p;
            if p.gcd(&q) != 1 {
                continue;
            }
            let s = Slope::new(p, q).unwrap();
            let cw = lower_christoffel(s);
            let line = LineSpec::rational(s);
            let n = cw.len() as i64;
            assert_eq!(mechanical_window(&line, 0, 3 * n).unwrap(), cw.repeat(3), "({p},{q})");
            assert_eq!(mechanical_window(&line, -n, 0).unwrap(), cw, "({p},{q})");
        }
    }
}
