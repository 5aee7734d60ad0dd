use csf_core::{
    alpha_mis, enumerate_free_trees, gen_star_connection, leaf_decomposition, star_connection_distinct, survey,
    thm_sum_check, Gluing, StarConnectionSpec, TheoremId, Tree,
};

fn b_sequence(t: &Tree) -> Vec<usize> {
    leaf_decomposition(t).b_sequence()
}

#[test]
fn summed_example_is_realised() {
    let found = (8..=12).find_map(|n| {
        let trees = enumerate_free_trees(n).unwrap();
        let a = trees.iter().find(|t| b_sequence(t) == [6, 1])?;
        let b = trees.iter().find(|t| b_sequence(t) == [4, 2])?;
        Some((n, a.clone(), b.clone()))
    });
    let (n, a, b) = found.expect("a pair with b sequences (6,1) and (4,2)");
    let v = thm_sum_check(&a, &b).unwrap();
    assert!(v.is_applicable(), "n = {n}: {v:?}");
    assert_eq!((v.m1, v.m2, v.swapped), (Some(7), Some(6), false));
    assert_eq!((alpha_mis(&a).unwrap(), alpha_mis(&b).unwrap()), (7, 6));
}

#[test]
fn fewer_stars_have_the_larger_block() {
    let two = StarConnectionSpec::new(vec![7, 7], vec![Gluing::new(vec![0, 1])]);
    let chain = StarConnectionSpec::new(
        vec![4, 5, 3, 4],
        vec![Gluing::new(vec![0, 1]), Gluing::new(vec![1, 2]), Gluing::new(vec![2, 3])],
    );
    let v = star_connection_distinct(&two, &chain).unwrap();
    assert_eq!(v.theorem, TheoremId::StarCount);
    assert_eq!((v.m1, v.m2), (Some(11), Some(9)));
    assert_eq!(alpha_mis(&gen_star_connection(&two).unwrap()).unwrap(), 11);
    assert_eq!(alpha_mis(&gen_star_connection(&chain).unwrap()).unwrap(), 9);
}

#[test]
fn survey_of_nine() {
    let r = survey(9, None).unwrap();
    assert_eq!((r.num_trees, r.pairs, r.x_equal_pairs, r.skipped_isomorphic_pairs), (47, 1081, 0, 0));
    assert!(r.soundness_violations.is_empty());
    let leaves = &r.verdict_counts[&TheoremId::LeavesRho];
    assert_eq!(leaves.values().sum::<usize>(), 1081);
    assert!(!leaves.contains_key("case4"));
}

/// The three readings of the `ρ_1 < ρ_2` family hypothesis, measured
/// against the exact block maxima.
#[test]
fn family_readings_audit() {
    let audit = |n| survey(n, None).unwrap().case4_audit;
    let seven = audit(7);
    assert_eq!((seven.constrained_k3.fires, seven.constrained_k3.unsound), (10, 2));
    assert_eq!((seven.statement_sign.fires, seven.statement_sign.unsound), (14, 6));
    assert_eq!((seven.universal.fires, seven.universal.unsound), (1, 0));
    for n in 4..=10 {
        let a = audit(n);
        assert_eq!(a.universal.unsound, 0, "n = {n}");
        assert_eq!(a.universal.fires_beyond_case3, 0, "n = {n}");
    }
}

#[test]
fn chain_audit_through_n12() {
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 1..=12 {
        for t in enumerate_free_trees(n).unwrap() {
            let d = leaf_decomposition(&t);
            if !d.chain_holds() {
                violations.push(d.counts());
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551);
    eprintln!("chain audit: {} of {checked} trees violate b1 >= eta1 >= b2 >= ...: {violations:?}", violations.len());
}
