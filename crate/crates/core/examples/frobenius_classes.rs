//! Partition all semigroups with a fixed Frobenius number into classes
//! headed by irreducible semigroups.
use numsemigroup::{class_of, enumerate_with_frobenius, GenSet, IrreducibleContext};

fn main() -> numsemigroup::Result<()> {
    let a = GenSet::from([4]);
    let ctx = IrreducibleContext::new(&a, 11)?;
    for top in ctx.enumerate(Default::default()) {
        let class = class_of(&top, &ctx)?;
        println!("class of {}: bottom {}, D = {:?}", class.top, class.bottom, class.d_set);
        for k in &class.k_family {
            println!("  K = {k:?}");
        }
    }
    println!("total: {}", enumerate_with_frobenius(&a, 11)?.len());
    Ok(())
}
