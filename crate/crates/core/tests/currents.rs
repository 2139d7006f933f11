mod common;

use maxrep_core::currents::{
    classify_periods, crossratio_axiom_check, framing_period, multicurve_certificate, period, period_via_length,
    systole_lower_bound, CurrentClassification, FramingCrossratio, PeriodMethod,
};
use maxrep_core::fields::{int, OrderSpec, Rational};
use maxrep_core::reps::{pants_representation, reduced_words_up_to, DiagonalModel, Word};
use maxrep_core::linalg::SymplecticForm;
use maxrep_core::spectra::{translation_length, NormChoice};
use maxrep_core::valuations::ValuationSpec;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn framing_periods_agree_with_lengths(seed in any::<u64>(), n in 1usize..=2) {
        let mut rng = common::rng(seed);
        let case = common::eigen_case(&mut rng, n, true);
        let w = Word::generator(0);
        let by_length = period_via_length(&case.rep, &w, NormChoice::SymplecticSum).unwrap();
        prop_assert_eq!(by_length.method, PeriodMethod::TranslationLength);
        for x in &case.aux {
            let p = period(&case.framing, &w, &case.rep, &case.minus, x, &case.plus).unwrap();
            prop_assert_eq!(p.method, PeriodMethod::Framing);
            prop_assert_eq!(&p.period, &by_length.period);
        }
    }

    #[test]
    fn periods_are_conjugation_invariant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let case = common::eigen_case(&mut rng, 2, false);
        let h = common::symplectic_k(&mut rng, 2);
        let form = SymplecticForm::new(2);
        let g = case.rep.images()[0].clone();
        let conj_g = &(&h * &g) * &form.inverse(&h).unwrap();
        // The framing of h g h^-1 is h applied to the framing of g.
        let moved = DiagonalModel::new(case.exponents.clone(), h, OrderSpec::AtPlus(int(0))).unwrap();
        let moved_framing = moved.framing(&case.points).unwrap();
        let val = ValuationSpec::Adic(int(0));
        for x in &case.aux {
            let base = framing_period(&case.framing, &g, &case.minus, x, &case.plus, &val).unwrap();
            let conj = framing_period(&moved_framing, &conj_g, &case.minus, x, &case.plus, &val).unwrap();
            prop_assert_eq!(&base, &conj);
            let len = translation_length(&conj_g, &val, NormChoice::SymplecticSum).unwrap();
            prop_assert_eq!(base, len);
        }
    }

    #[test]
    fn axioms_hold_on_random_eigen_framings(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = common::rng(seed);
        let exps: Vec<u32> = (0..n).map(|_| rand::Rng::gen_range(&mut rng, 1..=3)).collect();
        // Conjugation is covered separately; in rank 3 it only costs time.
        let conj = if n < 3 { common::symplectic_k(&mut rng, n) } else { maxrep_core::linalg::Matrix::identity(2 * n) };
        let model = DiagonalModel::new(exps, conj, OrderSpec::AtPlus(int(0))).unwrap();
        let pts = common::model_points(&mut rng, &model, 6);
        let framing = model.framing(&pts).unwrap();
        let cr = FramingCrossratio::new(&framing, ValuationSpec::Adic(int(0)));
        let tuples = [[0, 1, 2, 3, 4], [0, 2, 3, 4, 5], [1, 2, 3, 4, 5], [0, 1, 3, 4, 5]];
        let report = crossratio_axiom_check(&cr, &tuples).unwrap();
        prop_assert!(report.holds(), "{:?}", report.violation);
        prop_assert_eq!(report.additivity_checked, tuples.len());
    }
}

#[test]
fn pants_certificates_and_systole() {
    for ord in [OrderSpec::AtPlus(int(0)), OrderSpec::PlusInfinity] {
        let val = ValuationSpec::compatible_with(&ord);
        let rep = pants_representation(ord, val).unwrap();
        let words: Vec<Word> = reduced_words_up_to(3, 3).into_iter().filter(|w| !w.is_empty()).collect();
        let report = multicurve_certificate(&rep, &words, 16, NormChoice::SymplecticSum).unwrap();
        let CurrentClassification::MulticurveCertified(k) = report.classification else {
            panic!("{:?}", report.classification)
        };
        for m in 1..=3u64 {
            let scale = Rational::from_integer((k * m).into());
            assert!(report.periods.iter().all(|p| (&p.period * &scale).is_integer()));
        }
        let s = systole_lower_bound(&rep, 3, 512, NormChoice::SymplecticSum).unwrap();
        let witness = s.witness.expect("non-peripheral words exist");
        assert!(!rep.presentation().is_peripheral(&witness));
        assert!(s.words_checked > 0);
    }
}

#[test]
fn certificate_stability_under_multiples() {
    let vals = [Rational::new(1.into(), 2.into()), Rational::new(3.into(), 4.into()), int(2)];
    assert_eq!(classify_periods(&vals, 4), CurrentClassification::MulticurveCertified(4));
    assert_eq!(classify_periods(&vals, 3), CurrentClassification::DiscretenessUnknown);
}
