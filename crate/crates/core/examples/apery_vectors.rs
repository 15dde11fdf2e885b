//! Apéry sets, θ-vectors, the componentwise join and the inverse map.
use numsemigroup::{apery, semigroup_from_theta, theta, GenSet, NumericalSemigroup};

fn main() -> numsemigroup::Result<()> {
    let s = NumericalSemigroup::from_generators(&GenSet::from([4, 6, 9]))?;
    let t = NumericalSemigroup::from_generators(&GenSet::from([4, 9, 11]))?;
    println!("Ap({s}, 4) = {:?}", apery(&s, 4)?);

    let (a, b) = (theta(&s, 15)?, theta(&t, 15)?);
    println!("θ15({s}) = {a}");
    println!("θ15({t}) = {b}");
    let j = a.join(&b)?;
    println!("join     = {j}");
    let back = semigroup_from_theta(&j)?;
    println!("preimage = {back}, equal to the intersection: {}", back == s.intersect(&t));
    Ok(())
}
