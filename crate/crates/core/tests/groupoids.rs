use std::time::Instant;

use ringoid_core::search::{
    scan_parasemifields, scan_transitive_groupoids, scan_transitive_groupoids_raw, GroupoidConstraints,
};
use ringoid_core::symmetry::{self, FullAutType};
use ringoid_core::{catalog, CayleyTable, PermSet};

fn all_tables(n: usize) -> impl Iterator<Item = CayleyTable> {
    (0..n.pow((n * n) as u32)).map(move |mut code| {
        CayleyTable::from_fn(n, |_, _| {
            let v = code % n;
            code /= n;
            v
        })
    })
}

#[test]
fn full_automorphism_group_classification() {
    for n in 2..=3 {
        let sym = PermSet::symmetric(n);
        let mut kinds = std::collections::BTreeSet::new();
        for t in all_tables(n) {
            let full = symmetry::automorphisms(&t) == sym;
            let kind = symmetry::full_aut_classification(&t);
            assert_eq!(full, kind != FullAutType::NotFull, "{t:?}");
            if full {
                kinds.insert(format!("{kind:?}"));
            }
        }
        let expected = if n == 2 { 4 } else { 3 };
        assert_eq!(kinds.len(), expected, "order {n}: {kinds:?}");
    }
}

#[test]
fn transitive_groupoids_satisfy_the_count_identities() {
    for n in 1..=4 {
        let start = Instant::now();
        let found = scan_transitive_groupoids(n, GroupoidConstraints::default()).unwrap();
        eprintln!(
            "order {n}: {} transitive groupoids in {:.2?}",
            found.len(),
            start.elapsed()
        );
        for t in &found {
            assert!(symmetry::stats_lemmas_check(t).unwrap().holds(), "{t:?}");
        }
    }
    for n in 1..=3 {
        let c = GroupoidConstraints::default();
        assert_eq!(
            scan_transitive_groupoids_raw(n, c, false).unwrap(),
            scan_transitive_groupoids(n, c).unwrap()
        );
    }
}

#[test]
fn order_5_commutative_quasigroups() {
    let c = GroupoidConstraints {
        commutative: true,
        quasigroup: true,
        ..Default::default()
    };
    let start = Instant::now();
    let found = scan_transitive_groupoids(5, c).unwrap();
    eprintln!("order 5: {} in {:.2?}", found.len(), start.elapsed());
    let mid = symmetry::canonical_table(&symmetry::midpoint_groupoid(5).unwrap(), false).0;
    assert!(found.contains(&mid));
}

#[test]
fn midpoint_parasemifields() {
    for m in [1, 3, 5, 7, 9] {
        let t = symmetry::midpoint_groupoid(m).unwrap();
        let plus = catalog::cyclic_add(m);
        assert!(symmetry::parasemifield_check_via_mult(&t, &plus).unwrap());
        let report = symmetry::stats_lemmas_check(&t).unwrap();
        assert!(report.holds());
        assert_eq!(report.stats.as_tuple(), (1, 1, 1, 1));
    }
}

#[test]
fn parasemifield_scan() {
    for n in 1..=4 {
        let start = Instant::now();
        let report = scan_parasemifields(n).unwrap();
        eprintln!(
            "order {n}: {} generalised parasemifields in {:.2?}",
            report.instances.len(),
            start.elapsed()
        );
        assert!(report.non_transitive_plus.is_empty());
        if n >= 2 {
            assert!(report.commutative_semigroup_plus.is_empty());
        }
        for r in &report.instances {
            assert!(r.flags().is_generalised_parasemifield());
            assert!(ringoid_core::ideal::is_ideal_free(r).unwrap());
        }
    }
}
