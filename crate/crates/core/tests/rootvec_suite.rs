use qdirac::identity::Relation;
use qdirac::rootvec::RootVectorSet;
use qdirac::Uq;

fn run_suite(n: usize) {
    let u = Uq::new(n, Uq::default_bound(n)).unwrap();
    let rv = RootVectorSet::build(&u).unwrap();
    let ids = rv.identities(&u).unwrap();
    let mut failures = Vec::new();
    for id in &ids {
        if let Some(w) = id.witness(n) {
            failures.push(format!("{} ({:?}): {w}", id.id, id.relation));
        }
    }
    assert!(failures.is_empty(), "N = {n}: {failures:#?}");
    assert!(ids.iter().any(|i| i.relation == Relation::ModLevi));
    let bad = rv.orthonormality_failures(&u).unwrap();
    assert!(bad.is_empty(), "N = {n}: {bad:?}");
}

#[test]
fn root_vector_identities_rank_two() {
    run_suite(2);
}

#[test]
fn root_vector_identities_rank_three() {
    run_suite(3);
}
