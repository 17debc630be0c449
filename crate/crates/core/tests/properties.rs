use metacyclic::arith::{gcd, pow_mod};
use metacyclic::enumerate::enumerate_all;
use metacyclic::{CyclicDataSet, Element, GroupParams, MetacyclicDataSet};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

/// Non-abelian split metacyclic parameters with `mn <= 120`.
fn params() -> impl Strategy<Value = GroupParams> {
    (2u64..=12, 3u64..=20)
        .prop_flat_map(|(m, n)| {
            let ks: Vec<u64> = (2..n)
                .filter(|&k| gcd(k, n) == 1 && pow_mod(k, m, n) == 1)
                .collect();
            (
                Just(m),
                Just(n),
                proptest::sample::select(if ks.is_empty() { vec![0] } else { ks }),
            )
        })
        .prop_filter_map("no admissible k", |(m, n, k)| {
            (k != 0 && m * n <= 120)
                .then(|| GroupParams::new(m, n, k).ok())
                .flatten()
        })
}

fn with_elements(count: usize) -> impl Strategy<Value = (GroupParams, Vec<Element>)> {
    params().prop_flat_map(move |p| {
        let order = p.order() as usize;
        let p2 = p.clone();
        proptest::collection::vec(0..order, count).prop_map(move |idx| {
            (
                p2.clone(),
                idx.into_iter().map(|i| p2.from_index(i)).collect(),
            )
        })
    })
}

proptest! {
    #[test]
    fn multiplication_is_associative((p, xs) in with_elements(3)) {
        let (x, y, z) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(p.mul(p.mul(x, y), z), p.mul(x, p.mul(y, z)));
    }

    #[test]
    fn inverses_and_identity((p, xs) in with_elements(1)) {
        let x = xs[0];
        prop_assert!(p.mul(x, p.inv(x)).is_identity());
        prop_assert!(p.mul(p.inv(x), x).is_identity());
        prop_assert_eq!(p.mul(Element::IDENTITY, x), x);
    }

    #[test]
    fn defining_relation_holds(p in params()) {
        let (f, g) = (p.f(), p.g());
        prop_assert!(p.pow(f, p.n()).is_identity());
        prop_assert!(p.pow(g, p.m()).is_identity());
        prop_assert_eq!(p.conjugate_by(f, g), p.pow(f, p.k()));
    }

    #[test]
    fn element_order_divides_group_order((p, xs) in with_elements(1)) {
        let o = p.order_of(xs[0]);
        prop_assert_eq!(p.order() % o, 0);
        prop_assert!(p.pow(xs[0], o).is_identity());
    }

    #[test]
    fn conjugacy_is_class_function((p, xs) in with_elements(2)) {
        let (x, z) = (xs[0], xs[1]);
        let y = p.conjugate_by(x, z);
        prop_assert!(p.is_conjugate(x, y));
        prop_assert_eq!(p.order_of(x), p.order_of(y));
        prop_assert_eq!(p.class_representative(x), p.class_representative(y));
    }

    #[test]
    fn triple_round_trips_element((p, xs) in with_elements(1)) {
        let t = metacyclic::Triple::from_element(&p, xs[0]);
        prop_assert_eq!(t.image(&p), xs[0]);
        prop_assert_eq!(t.period, p.order_of(xs[0]));
    }

    #[test]
    fn dataset_text_round_trips((p, xs) in with_elements(4), g0 in 0u64..3) {
        let d = MetacyclicDataSet::from_images(p, g0, &xs);
        for (unicode, compress) in [(false, false), (true, false), (false, true), (true, true)] {
            let back: MetacyclicDataSet = d.to_text(unicode, compress).parse().unwrap();
            prop_assert_eq!(back.canonical_form(), d.canonical_form());
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_invariant((p, xs) in with_elements(5), seed in any::<u64>()) {
        let d = MetacyclicDataSet::from_images(p.clone(), 0, &xs);
        let c = d.canonical_form();
        prop_assert_eq!(c.canonical_form(), c.clone());
        let mut conjugated: Vec<Element> = xs
            .iter()
            .enumerate()
            .map(|(i, &x)| p.conjugate_by(x, p.from_index((seed as usize).wrapping_add(i * 7) % p.order() as usize)))
            .collect();
        conjugated.rotate_left((seed % 5) as usize);
        let e = MetacyclicDataSet::from_images(p, 0, &conjugated);
        prop_assert_eq!(e.canonical_form(), c);
    }

    #[test]
    fn cyclic_text_round_trips(n in 2u64..30, g0 in 0u64..3, raw in proptest::collection::vec((1u64..30, 1u64..30), 0..5)) {
        let pairs: Vec<(u64, u64)> = raw.into_iter().map(|(a, b)| (a % n, b % n + 1)).filter(|&(a, _)| a != 0).collect();
        let d = if pairs.is_empty() { CyclicDataSet::free(n, g0, 1) } else { CyclicDataSet::new(n, g0, 0, pairs) };
        let back: CyclicDataSet = d.to_table_text().parse().unwrap();
        prop_assert_eq!(back.canonical(), d.canonical());
    }
}

#[test]
fn canonical_form_absorbs_conjugation_of_enumerated_representatives() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let corpus: Vec<MetacyclicDataSet> = enumerate_all(3)
        .into_values()
        .flatten()
        .map(|c| c.representative)
        .collect();
    for d in &corpus {
        let p = d.params.clone();
        let order = p.order() as usize;
        let strategy = proptest::collection::vec(0..order, d.triples.len());
        for _ in 0..8 {
            let zs = strategy.new_tree(&mut runner).unwrap().current();
            let images: Vec<Element> = d
                .images()
                .into_iter()
                .zip(zs)
                .map(|(x, z)| p.conjugate_by(x, p.from_index(z)))
                .collect();
            let e = MetacyclicDataSet::from_images(p.clone(), d.g0, &images);
            assert_eq!(e.canonical_form(), d.canonical_form(), "{d} vs {e}");
        }
    }
}
