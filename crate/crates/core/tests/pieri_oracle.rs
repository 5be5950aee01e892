//! Every Pieri rule against brute-force multiplication, beyond the bounds of
//! the unit tests.

use superschur::pieri::{verify_against_oracle, PieriKind};

fn run(max_n: usize, max_m: usize, max_ell: usize) {
    let (cases, failures) = verify_against_oracle(&PieriKind::ALL, max_n, max_m, max_ell);
    println!("{cases} cases at n <= {max_n}, m <= {max_m}, l <= {max_ell}");
    assert!(failures.is_empty(), "{} failures, first: {:#?}", failures.len(), failures.first());
}

#[test]
fn rules_match_products_with_three_circles() {
    run(5, 3, 4);
}

/// About six minutes on one core.
#[test]
#[ignore]
fn rules_match_products_at_degree_six() {
    run(6, 3, 4);
}
