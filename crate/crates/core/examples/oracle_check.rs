//! Cross-check the fast algorithms against exhaustive search.
use numsemigroup::oracle::{all_semigroups_with_frobenius, irreducibles_bruteforce, minimal_hitting_sets};
use numsemigroup::{enumerate_irreducibles, enumerate_with_frobenius, solve, GenSet, Submonoid};

fn main() -> numsemigroup::Result<()> {
    let mut checked = 0;
    for f in 1..=13 {
        for a in [GenSet::empty(), GenSet::from([3]), GenSet::from([4, 6])] {
            if Submonoid::new(&a, f).contains(f) {
                continue;
            }
            assert_eq!(enumerate_irreducibles(&a, f)?, irreducibles_bruteforce(f, &a)?);
            assert_eq!(enumerate_with_frobenius(&a, f)?, all_semigroups_with_frobenius(f, &a)?);
            checked += 1;
        }
    }
    let (a, b) = (GenSet::from([5]), GenSet::from([8, 12]));
    let fast: Vec<Vec<u32>> = solve(&a, &b)?.into_iter().map(|k| k.into_vec()).collect();
    assert_eq!(fast, minimal_hitting_sets(&a, &b)?);
    println!("{checked} (A, F) pairs and one (A, B) pair agree with brute force");
    Ok(())
}
