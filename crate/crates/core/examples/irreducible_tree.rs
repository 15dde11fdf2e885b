//! Walk the tree of irreducible semigroups with a given Frobenius number.
use numsemigroup::{GenSet, IrreducibleContext, NumericalSemigroup, Workers};

fn show(ctx: &IrreducibleContext, s: &NumericalSemigroup, depth: usize) {
    println!("{:indent$}{s}  α = {:?}", "", ctx.alpha(s), indent = 2 * depth);
    for child in ctx.children(s) {
        show(ctx, &child, depth + 1);
    }
}

fn main() -> numsemigroup::Result<()> {
    let f = std::env::args().nth(1).and_then(|x| x.parse().ok()).unwrap_or(17);
    let ctx = IrreducibleContext::new(&GenSet::empty(), f)?;
    show(&ctx, ctx.root(), 0);
    let all = ctx.enumerate(Workers::new(4));
    println!("{} irreducible semigroups with F = {f}", all.len());
    Ok(())
}
