//! Membership, minimal generators, Frobenius number and genus.
use numsemigroup::{GenSet, NumericalSemigroup, Submonoid};

fn main() -> numsemigroup::Result<()> {
    let s = NumericalSemigroup::from_generators(&GenSet::from([6, 9, 20]))?;
    println!("S = {s}");
    println!("F = {}, genus = {}, multiplicity = {}", s.frobenius(), s.genus(), s.multiplicity());
    println!("gaps = {:?}", s.gaps());
    for x in [43, 44] {
        println!("{x} in S: {}", s.contains(x));
    }

    let m = Submonoid::new(&GenSet::from([4, 9]), 30);
    if let Some(c) = m.combination(26) {
        println!("witness: {c}");
    }

    let t = NumericalSemigroup::from_generators(&GenSet::from([4, 5]))?;
    let u = NumericalSemigroup::from_generators(&GenSet::from([4, 6, 9]))?;
    let meet = t.intersect(&u);
    println!("{t} ∩ {u} = {meet} (F = {})", meet.frobenius());
    Ok(())
}
