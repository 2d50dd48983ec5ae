mod common;

use common::{
    check_form, check_ideal, corpus_forms, corpus_ideals, random_forms, random_ideals, PropertyTally, RANDOM_CASES,
};

fn assert_clean(tally: &PropertyTally) {
    println!("{}", tally.summary());
    for (property, failures) in &tally.failures {
        assert!(failures.is_empty(), "{property} fails on: {failures:#?}");
    }
}

#[test]
fn ideal_properties_on_corpus_ideals() {
    let mut tally = PropertyTally::default();
    let ideals = corpus_ideals();
    assert_eq!(ideals.len(), 16 + 2 + 3);
    for (name, i) in &ideals {
        check_ideal(&mut tally, name, i);
    }
    assert_clean(&tally);
}

#[test]
fn ideal_properties_on_random_ideals() {
    let mut tally = PropertyTally::default();
    let ideals = random_ideals();
    assert_eq!(ideals.len(), RANDOM_CASES);
    for (name, i) in &ideals {
        check_ideal(&mut tally, name, i);
    }
    assert_eq!(tally.checked["hilbert function"], RANDOM_CASES);
    assert_clean(&tally);
}

#[test]
fn form_properties() {
    let mut tally = PropertyTally::default();
    let forms: Vec<_> = corpus_forms().into_iter().chain(random_forms()).collect();
    assert!(forms.len() >= RANDOM_CASES + 16);
    for (name, w) in &forms {
        check_form(&mut tally, name, w);
    }
    assert_clean(&tally);
}

#[test]
fn random_inputs_are_reproducible() {
    let a: Vec<String> = random_ideals().into_iter().map(|(n, _)| n).collect();
    let b: Vec<String> = random_ideals().into_iter().map(|(n, _)| n).collect();
    assert_eq!(a, b);
}
