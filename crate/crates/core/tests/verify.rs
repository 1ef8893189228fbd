use genfrob::verify::{
    check_decreasing, check_lemma2, check_lemma3, cross_check_theorem1, decreasing_suite,
    lemma2_suite, lemma3_suite, Lemma2Bounds, PairBounds, ReportFormat, Sampling,
};
use genfrob::{Error, Limits, Tuple};

fn tuple(parts: &[i64]) -> Tuple {
    Tuple::new(parts.to_vec()).unwrap()
}

#[test]
fn documented_examples() {
    assert!(check_decreasing(3, 7, 2, 6).unwrap().passed());
    assert!(matches!(check_decreasing(4, 5, 1, 3), Err(Error::InvalidInput(_))));
    assert!(check_decreasing(4, 5, 1, 20).unwrap().passed());
    assert!(check_lemma3(3, 7, 2, 6).unwrap().passed());
    assert!(check_lemma3(4, 5, 1, 20).unwrap().passed());
    assert!(check_lemma2(&tuple(&[3, 7]), 2, 6, &Limits::default()).unwrap().passed());
}

#[test]
fn small_suites_pass() {
    let pair = PairBounds { max_ab: 8, max_s: 2, max_c: 30 };
    assert!(lemma3_suite(pair, Sampling::Exhaustive).unwrap().passed());
    assert!(decreasing_suite(pair, Sampling::Exhaustive).unwrap().passed());
    let l2 = Lemma2Bounds { max_part: 8, max_s: 2, max_c: 20 };
    assert!(lemma2_suite(l2, &Limits::default(), Sampling::Exhaustive).unwrap().passed());
    assert!(cross_check_theorem1(9, 3, &Limits::default()).unwrap().passed());
}

#[test]
fn reports_are_deterministic() {
    let pair = PairBounds { max_ab: 10, max_s: 3, max_c: 40 };
    let sampled = Sampling::Random { seed: 7, samples: 300 };
    let a = decreasing_suite(pair, sampled).unwrap();
    let b = decreasing_suite(pair, sampled).unwrap();
    assert_eq!(a.render(ReportFormat::Text, false), b.render(ReportFormat::Text, false));
    assert_eq!(a.render(ReportFormat::Json, false), b.render(ReportFormat::Json, false));
    let x = lemma3_suite(pair, Sampling::Exhaustive).unwrap();
    let y = lemma3_suite(pair, Sampling::Exhaustive).unwrap();
    assert_eq!(x.render(ReportFormat::Json, false), y.render(ReportFormat::Json, false));
    assert!(x.cases_run > 0);
}
