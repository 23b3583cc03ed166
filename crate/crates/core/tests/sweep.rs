mod common;

#[test]
fn unlocking_matches_the_oracle_up_to_order_thirty() {
    if let Err(e) = common::criterion_5(30) {
        panic!("{e}");
    }
}

#[test]
fn invariant_suite_holds_up_to_order_thirty() {
    if let Err(e) = common::criterion_6(30) {
        panic!("{e}");
    }
}

#[test]
fn walls_json_is_deterministic() {
    if let Err(e) = common::criterion_7() {
        panic!("{e}");
    }
}
