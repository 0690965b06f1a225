use std::collections::BTreeMap;

use korbits::clans::{clan_dimension, enumerate_clans, RealFormSpec, WeakOrderGraph};
use korbits::oracle::{
    clan_representative, enumerate_flags, flag_count, match_with_clans, orbit_dim, verify,
    FiniteFieldOracle, MatrixOverFq, OracleError, PrimeField,
};

fn spec(p: usize, q: usize) -> RealFormSpec {
    RealFormSpec::new(p, q).unwrap()
}

// Product of q-integers [1]_q [2]_q ... [n]_q.
fn q_factorial(n: usize, q: u64) -> u64 {
    (1..=n as u32)
        .map(|k| (0..k).map(|j| q.pow(j)).sum::<u64>())
        .product()
}

#[test]
fn flag_enumeration_counts() {
    for (n, q) in [
        (1, 2),
        (2, 2),
        (3, 2),
        (4, 2),
        (2, 3),
        (3, 3),
        (4, 3),
        (3, 5),
    ] {
        let flags = enumerate_flags(n, PrimeField::new(q).unwrap()).unwrap();
        assert_eq!(flags.len() as u64, q_factorial(n, q as u64), "n={n} q={q}");
        assert_eq!(flag_count(n, q as u64), q_factorial(n, q as u64));
        let distinct: std::collections::HashSet<_> = flags.iter().collect();
        assert_eq!(distinct.len(), flags.len());
    }
    assert_eq!(flag_count(4, 3), 2080);
}

#[test]
fn field_arithmetic() {
    for q in [2u32, 3, 5, 7, 11] {
        let f = PrimeField::new(q).unwrap();
        for a in f.elements() {
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            assert_eq!(f.add(a, f.sub(0, a)), 0);
        }
        let g = f.primitive_root();
        let powers: std::collections::BTreeSet<u8> = (0..q - 1).map(|k| f.pow(g, k)).collect();
        assert_eq!(powers.len() as u32, q - 1);
    }
    assert!(matches!(PrimeField::new(4), Err(OracleError::NotPrime(4))));
    assert!(PrimeField::new(1).is_err());
}

#[test]
fn transforms_compose_as_a_group_action() {
    let f = PrimeField::new(3).unwrap();
    let g = MatrixOverFq::from_columns(f, 3, &[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
    let h = MatrixOverFq::from_columns(f, 3, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
    for flag in enumerate_flags(3, f).unwrap() {
        assert_eq!(flag.transform(&h).transform(&g), flag.transform(&g.mul(&h)));
    }
}

#[test]
fn orbit_counts_match_clan_counts() {
    for (p, q, field) in [
        (1, 1, 2),
        (1, 1, 3),
        (1, 1, 5),
        (2, 1, 2),
        (2, 1, 3),
        (1, 2, 5),
        (3, 1, 2),
        (1, 3, 3),
    ] {
        let s = spec(p, q);
        let oracle = FiniteFieldOracle::build(s, field).unwrap();
        assert_eq!(
            oracle.orbits().len(),
            enumerate_clans(&s).len(),
            "U({p},{q}) F_{field}"
        );
        let total: usize = oracle.orbits().iter().map(|o| o.members.len()).sum();
        assert_eq!(total, oracle.flags().len());
    }
}

#[test]
fn matching_holds_over_several_fields() {
    for (p, q, field) in [
        (1, 1, 2),
        (2, 1, 2),
        (2, 1, 5),
        (1, 2, 3),
        (3, 1, 3),
        (1, 3, 2),
    ] {
        let s = spec(p, q);
        let graph = WeakOrderGraph::new(s);
        let oracle = FiniteFieldOracle::build(s, field).unwrap();
        let m = match_with_clans(&graph, &oracle)
            .unwrap_or_else(|e| panic!("U({p},{q}) F_{field}: {e}"));
        assert_eq!(m.len(), graph.len());
        assert_eq!(m.raising_edges, graph.raising_edges().len());
    }
}

#[test]
fn dimensions_do_not_depend_on_the_field() {
    for (p, q) in [(2, 1), (1, 2), (1, 3)] {
        let s = spec(p, q);
        let dims = |field: u32| -> BTreeMap<String, usize> {
            let graph = WeakOrderGraph::new(s);
            let oracle = FiniteFieldOracle::build(s, field).unwrap();
            let m = match_with_clans(&graph, &oracle).unwrap();
            m.pairs()
                .map(|(c, o)| (c.to_string(), oracle.orbit(o).dim))
                .collect()
        };
        assert_eq!(dims(3), dims(5), "U({p},{q})");
    }
}

#[test]
fn representative_stabilizers_match_clan_dimensions_at_rank_five() {
    for (p, q) in [(4, 1), (3, 2), (2, 3), (1, 4)] {
        let s = spec(p, q);
        for field in [3, 5] {
            let f = PrimeField::new(field).unwrap();
            for clan in enumerate_clans(&s) {
                let flag = clan_representative(&clan, &s, f).unwrap();
                assert_eq!(
                    orbit_dim(&flag, &s, f),
                    clan_dimension(&clan, &s).unwrap(),
                    "U({p},{q}) {clan} over F_{field}"
                );
                assert_eq!(
                    flag.intersection_profile(0..p, f),
                    clan.plus_profile(),
                    "U({p},{q}) {clan}"
                );
            }
        }
    }
}

#[test]
fn full_verification_small_cases() {
    for (p, q, field) in [(1, 1, 3), (2, 1, 3), (1, 2, 2), (3, 1, 3)] {
        let report = verify(spec(p, q), field).unwrap();
        for c in &report.checks {
            assert!(
                c.passed(),
                "U({p},{q}) F_{field} {}: {:?}",
                c.name,
                c.first_failure
            );
        }
        assert!(report.passed());
    }
}

#[test]
fn size_guards() {
    assert!(matches!(
        FiniteFieldOracle::build(spec(3, 2), 3),
        Err(OracleError::SizeGuard(_))
    ));
    assert!(matches!(
        FiniteFieldOracle::build(spec(1, 1), 9),
        Err(OracleError::NotPrime(9))
    ));
    assert!(matches!(
        verify(spec(4, 2), 3),
        Err(OracleError::SizeGuard(_))
    ));
}
