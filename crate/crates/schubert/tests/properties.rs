use proptest::prelude::*;

use num_bigint::BigInt;
use schubert::cohomology::{restrict_levi, CohomClass, LeviShape};
use schubert::lr::{self, LRKey};
use schubert::skewshape::SkewShape;
use schubert::tableau::Tableau;
use schubert::{Partition, Rectangle};

fn partition_in(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=cols, rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn word(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1..=4usize, 0..=max_len)
}

fn class_in(amb: Rectangle) -> impl Strategy<Value = CohomClass> {
    proptest::collection::vec((partition_in(amb.rows, amb.cols), -4i64..=4), 0..4).prop_map(
        move |terms| {
            CohomClass::from_terms(amb, terms.into_iter().map(|(p, k)| (p, BigInt::from(k))))
                .unwrap()
        },
    )
}

fn rect(a: usize, b: usize) -> Rectangle {
    Rectangle::new(a, b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn partition_text_roundtrip(p in partition_in(6, 6)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn complement_reverses_containment(a in partition_in(4, 5), b in partition_in(4, 5)) {
        let r = rect(4, 5);
        prop_assert_eq!(a.contains(&b), b.complement(r).unwrap().contains(&a.complement(r).unwrap()));
    }

    #[test]
    fn product_is_associative(x in word(3), y in word(3), z in word(3)) {
        let (a, b, c) = (Tableau::from_word(&x), Tableau::from_word(&y), Tableau::from_word(&z));
        let left = a.product(&b).unwrap().product(&c).unwrap();
        let right = a.product(&b.product(&c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let mut content = a.content();
        for t in [&b, &c] {
            for (k, v) in t.content() {
                *content.entry(k).or_insert(0) += v;
            }
        }
        prop_assert_eq!(left.content(), content);
        prop_assert!(left.is_semistandard());
    }

    #[test]
    fn schensted_preserves_reading_word_class(w in word(9)) {
        let t = Tableau::from_word(&w);
        prop_assert_eq!(Tableau::from_word(&t.reading_word()), t.clone());
        let back: Tableau = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn schur_expansion_total_dimension(l in partition_in(2, 3), n in partition_in(2, 3)) {
        let terms = lr::schur_expand(&l, &n);
        for (mu, k) in &terms {
            prop_assert_eq!(mu.weight(), l.weight() + n.weight());
            prop_assert_eq!(*k, lr::lr_coefficient(&LRKey::new(mu.clone(), l.clone(), n.clone())));
            prop_assert!(mu.contains(&l) && mu.contains(&n));
        }
        prop_assert_eq!(terms, lr::schur_expand(&n, &l));
    }

    #[test]
    fn concat_decomposes_iff_rectangles(fs in proptest::collection::vec(partition_in(2, 2), 0..4)) {
        let s = SkewShape::concat(&fs);
        let all_rect = fs.iter().all(|f| f.is_empty() || *f == Partition::rectangle(f.len(), f.first()));
        prop_assert_eq!(s.rectangle_decomposition().is_some(), all_rect);
        prop_assert_eq!(s.size(), fs.iter().map(|f| f.weight()).sum::<usize>());
    }

    #[test]
    fn cup_ring_axioms(x in class_in(rect(3, 3)), y in class_in(rect(3, 3)), z in class_in(rect(3, 3))) {
        let one = CohomClass::one(rect(3, 3));
        prop_assert_eq!(x.cup(&one).unwrap(), x.clone());
        prop_assert_eq!(x.cup(&y).unwrap(), y.cup(&x).unwrap());
        prop_assert_eq!(x.cup(&y).unwrap().cup(&z).unwrap(), x.cup(&y.cup(&z).unwrap()).unwrap());
        let lhs = x.cup(&y.add(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, x.cup(&y).unwrap().add(&x.cup(&z).unwrap()).unwrap());
    }

    #[test]
    fn cup_is_graded(a in partition_in(3, 3), b in partition_in(3, 3)) {
        let amb = rect(3, 3);
        let c = CohomClass::schubert(a.clone(), amb).unwrap().cup(&CohomClass::schubert(b.clone(), amb).unwrap()).unwrap();
        prop_assert!(c.is_zero() || c.degree() == Some(a.weight() + b.weight()));
    }

    #[test]
    fn levi_restriction_is_multiplicative(x in class_in(rect(3, 3)), y in class_in(rect(3, 3)), which in 0..3usize) {
        let levis = [vec![rect(1, 1), rect(2, 2)], vec![rect(2, 1), rect(1, 1)], vec![rect(3, 2)]];
        let levi = LeviShape::unitary(levis[which].clone());
        let lhs = restrict_levi(&x.cup(&y).unwrap(), &levi).unwrap();
        let rhs = restrict_levi(&x, &levi).unwrap().mul(&restrict_levi(&y, &levi).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn class_json_roundtrip(x in class_in(rect(2, 4))) {
        let back = CohomClass::from_json(&x.to_json()).unwrap();
        prop_assert_eq!(back, x);
    }
}
