//! Minimal sets K disjoint from ⟨A⟩ such that every partition of every
//! b ∈ B uses a part from K.
use numsemigroup::{check_solution, solve, unhit_partition, GenSet};

fn main() -> numsemigroup::Result<()> {
    let a = GenSet::from([4, 9]);
    let b = GenSet::from([11, 14]);
    let solutions = solve(&a, &b)?;
    for k in &solutions {
        println!("K = {k}, complement {}", k.complement());
        println!("  valid: {}", check_solution(k.elements(), &a, &b));
    }
    let weak = [1, 2, 3];
    match unhit_partition(&weak, &b) {
        Some(p) => println!("{weak:?} misses the partition {p:?}"),
        None => println!("{weak:?} hits everything"),
    }
    Ok(())
}
