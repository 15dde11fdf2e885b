//! Maximal semigroups containing A and avoiding every element of B.
use numsemigroup::{theta, AvoidanceProblem, GenSet, Workers};

fn main() -> numsemigroup::Result<()> {
    for (a, b) in [(vec![4, 9], vec![11, 14]), (vec![], vec![5, 7]), (vec![3], vec![10, 11])] {
        let problem = AvoidanceProblem::new(&GenSet::from(a), &GenSet::from(b))?;
        let w = Workers::default();
        println!("A = {} B = {} (modulus {})", problem.required(), problem.forbidden(), problem.modulus());
        println!("  {} minimal joins", problem.minimal_joins(w)?.len());
        for s in problem.solve(w)? {
            println!("  {s}  θ = {}", theta(&s, problem.modulus())?);
        }
    }
    Ok(())
}
