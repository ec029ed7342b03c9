//! Abelian invariants of a presentation survive Tietze moves.

use panelweb::handlebody::Presentation;
use panelweb::word::{Label, Letter, Word};
use proptest::prelude::*;

fn lab(c: char) -> Label {
    Label::new(c, None).unwrap()
}

fn word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, prop_oneof![Just(1i8), Just(-1i8)]), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, e)| Letter::new(lab((b'a' + g as u8) as char), e))))
}

fn presentation() -> impl Strategy<Value = (usize, Vec<Word>)> {
    (1usize..=4).prop_flat_map(|k| (Just(k), prop::collection::vec(word(k, 6), 0..=4)))
}

fn pres(k: usize, rels: Vec<Word>) -> Presentation {
    Presentation::new((0..k).map(|i| lab((b'a' + i as u8) as char)).collect(), rels).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moves_preserve_abelianization((k, rels) in presentation(), conj in word(4, 3), pick in 0usize..4, rot in 0usize..6) {
        let base = pres(k, rels.clone()).abelianization().unwrap();
        let conj = Word::from_letters(conj.letters().iter().filter(|l| (l.label.as_str().as_bytes()[0] - b'a') < k as u8).cloned());

        // Add a consequence: a conjugate of one relator times another.
        if !rels.is_empty() {
            let r1 = &rels[pick % rels.len()];
            let r2 = &rels[(pick + 1) % rels.len()];
            let extra = conj.concat(r1).concat(&conj.inverse()).concat(r2);
            let mut more = rels.clone();
            more.push(extra);
            prop_assert_eq!(&pres(k, more).abelianization().unwrap(), &base);
        }

        // Replace each relator by an inverted cyclic rotation.
        let turned: Vec<Word> = rels.iter().map(|r| r.rotate(rot).inverse()).collect();
        prop_assert_eq!(&pres(k, turned).abelianization().unwrap(), &base);

        // New generator x with relator x w^-1.
        let x = lab('x');
        let mut gens: Vec<Label> = (0..k).map(|i| lab((b'a' + i as u8) as char)).collect();
        gens.push(x.clone());
        let mut with_x = rels.clone();
        with_x.push(Word::power(&x, 1).concat(&conj.inverse()));
        let p = Presentation::new(gens, with_x).unwrap();
        prop_assert_eq!(&p.abelianization().unwrap(), &base);
    }
}
