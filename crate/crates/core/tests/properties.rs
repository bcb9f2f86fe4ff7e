use std::collections::HashSet;

use dnalabel::analysis::{
    brute_force_m, brute_force_m_ell, check_sufficient_conditions, is_repeat_free, minimal_period,
    period_upper_bound, window_set,
};
use dnalabel::catalogs::make_reference;
use dnalabel::constrained::{eta_closed_form, eta_dp, is_member};
use dnalabel::labeling::{is_equivalent, is_uniquely_decodable, label_one, label_set, occurrences};
use dnalabel::{BinaryWord, Codeset, DnaSequence, Enumerator, Label, LabelingCode, LabelingCodec};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn dna(max_len: usize) -> impl Strategy<Value = DnaSequence> {
    proptest::collection::vec(0u8..4, 0..=max_len).prop_map(|d| DnaSequence::from_digits(&d))
}

fn label(max_len: usize) -> impl Strategy<Value = Label> {
    proptest::collection::vec(0u8..4, 1..=max_len)
        .prop_map(|d| Label::new(DnaSequence::from_digits(&d)).unwrap())
}

fn codeset(max_labels: usize, max_len: usize) -> impl Strategy<Value = Codeset> {
    proptest::collection::vec(label(max_len), 0..=max_labels).prop_map(Codeset::from_iter)
}

proptest! {
    #[test]
    fn label_set_is_or_of_singletons(seq in dna(30), lam in codeset(5, 4)) {
        let mut expected = BinaryWord::zeros(seq.len());
        for l in &lam {
            expected |= &label_one(&seq, l);
        }
        prop_assert_eq!(label_set(&seq, &lam), expected);
    }

    #[test]
    fn labeling_is_monotone(seq in dna(30), a in codeset(4, 4), b in codeset(4, 4)) {
        let union: Codeset = a.iter().chain(b.iter()).cloned().collect();
        prop_assert!(label_set(&seq, &a).is_subset_of(&label_set(&seq, &union)));
    }

    #[test]
    fn absent_labels_change_nothing(seq in dna(20), lam in codeset(4, 3), extra in label(6)) {
        prop_assume!(occurrences(&seq, &extra).is_empty());
        let mut more = lam.clone();
        more.insert(extra);
        prop_assert!(is_equivalent(&lam, &more, &seq));
    }

    #[test]
    fn single_label_runs(seq in dna(30), l in label(3)) {
        let out = label_one(&seq, &l);
        let occ = occurrences(&seq, &l);
        for (start, len) in out.runs_of_ones() {
            prop_assert!(len >= l.len());
            for p in start..start + len {
                prop_assert!(occ.iter().any(|&i| i - 1 <= p && p < i - 1 + l.len()));
            }
        }
    }

    #[test]
    fn unique_decodability_is_injectivity(seq in dna(10), sets in proptest::collection::vec(codeset(3, 2), 0..6)) {
        let distinct: Vec<Codeset> = sets.into_iter().collect::<HashSet<_>>().into_iter().collect();
        let code = LabelingCode::new(distinct.clone()).unwrap();
        let pairwise = distinct.iter().enumerate().all(|(i, a)| {
            distinct[i + 1..].iter().all(|b| !is_equivalent(a, b, &seq))
        });
        prop_assert_eq!(is_uniquely_decodable(&code, &seq), pairwise);
    }

    #[test]
    fn rank_unrank_round_trip(n in 0usize..40, ell in 1usize..6, seed in any::<u64>()) {
        let e = Enumerator::new(n, ell).unwrap();
        let m = BigUint::from(seed) % e.count();
        let w = e.unrank(&m).unwrap();
        prop_assert!(is_member(w.word(), ell));
        prop_assert_eq!(e.rank(w.word()).unwrap(), m);
    }

    #[test]
    fn rank_is_monotone(n in 1usize..30, ell in 1usize..5, a in any::<u64>(), b in any::<u64>()) {
        let e = Enumerator::new(n, ell).unwrap();
        let (a, b) = (BigUint::from(a) % e.count(), BigUint::from(b) % e.count());
        let (wa, wb) = (e.unrank(&a).unwrap().word().to_string(), e.unrank(&b).unwrap().word().to_string());
        prop_assert_eq!(a.cmp(&b), wa.cmp(&wb));
    }

    #[test]
    fn channel_output_is_the_constrained_word(ell in 1usize..5, n in 1usize..60, seed in any::<u64>()) {
        let reference = make_reference(n.min(4usize.pow(ell as u32) + ell - 1), ell).unwrap();
        prop_assert!(reference.repeat_free);
        let codec = LabelingCodec::new(reference.sequence.clone(), ell).unwrap();
        let m = BigUint::from(seed) % codec.capacity();
        let lam = codec.encode(&m).unwrap();
        prop_assert!(lam.iter().all(|l| l.len() == ell));
        let y = label_set(&reference.sequence, &lam);
        let x = Enumerator::new(reference.sequence.len(), ell).unwrap().unrank(&m).unwrap();
        prop_assert_eq!(&y, x.word());
        prop_assert_eq!(codec.decode(&y).unwrap(), m);
    }

    #[test]
    fn minimal_period_divides_length(seq in dna(24)) {
        prop_assume!(!seq.is_empty());
        let p = minimal_period(&seq).unwrap();
        prop_assert_eq!(seq.len() % p, 0);
        let b = seq.as_bytes();
        prop_assert!((0..b.len() - p).all(|i| b[i] == b[i + p]) || p == seq.len());
    }
}

#[test]
fn eta_monotonicity() {
    for ell in 1..=6 {
        for n in 0..80 {
            assert!(eta_dp(n, ell) <= eta_dp(n + 1, ell));
            assert!(eta_closed_form(n + 1, ell + 1) <= eta_closed_form(n + 1, ell));
        }
    }
}

#[test]
fn oracle_never_exceeds_eta() {
    for n in 1..=8 {
        for seq in DnaSequence::all_of_length(n) {
            for ell in 1..=3 {
                let m = brute_force_m_ell(&seq, ell).unwrap();
                assert!(
                    BigUint::from(m) <= eta_closed_form(n, ell),
                    "{seq} ell={ell}"
                );
            }
        }
    }
}

#[test]
fn eta_attained_exactly_on_repeat_free_references() {
    for n in 1..=8 {
        let eta = eta_closed_form(n, 2);
        for seq in DnaSequence::all_of_length(n) {
            let attains = BigUint::from(brute_force_m_ell(&seq, 2).unwrap()) == eta;
            assert_eq!(attains, is_repeat_free(&seq, 2), "{seq}");
        }
    }
}

#[test]
fn period_bound_holds() {
    for n in 1..=6 {
        for seq in DnaSequence::all_of_length(n) {
            let m = brute_force_m(&seq).unwrap();
            let bound = period_upper_bound(minimal_period(&seq).unwrap()).unwrap();
            assert!(BigUint::from(m) <= bound, "{seq}: M={m} bound={bound}");
        }
    }
}

/// Random codes over the windows of each reference plus a few absent labels.
fn random_code(seq: &DnaSequence, rng: &mut StdRng) -> LabelingCode {
    let mut pool: Vec<Label> = window_set(seq, 2).unwrap().iter().cloned().collect();
    pool.push("GG".parse().unwrap());
    pool.push("TA".parse().unwrap());
    let mut codesets = HashSet::new();
    for _ in 0..rng.gen_range(1..5) {
        let k = rng.gen_range(0..=pool.len().min(3));
        codesets.insert(pool.choose_multiple(rng, k).cloned().collect::<Codeset>());
    }
    LabelingCode::new(codesets).unwrap()
}

#[test]
fn sufficient_conditions_are_sound() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut confirmed = 0usize;
    for n in 1..=8 {
        for seq in DnaSequence::all_of_length(n) {
            for _ in 0..3 {
                let code = random_code(&seq, &mut rng);
                if check_sufficient_conditions(&code, &seq, 2).unwrap() {
                    assert!(is_uniquely_decodable(&code, &seq), "{seq}: {code:?}");
                    confirmed += 1;
                }
            }
        }
    }
    // The sweep must actually exercise the positive branch.
    assert!(confirmed > 10_000, "{confirmed}");
}
