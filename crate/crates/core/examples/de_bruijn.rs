//! Binary de Bruijn cycles for window lengths 1 through 6.

use ucycle::{generate, verify_ucycle, ClassSpec, DEFAULT_BUDGET};

fn main() -> ucycle::Result<()> {
    for m in 1..=6 {
        let spec = ClassSpec::Plain { m, n: 2 };
        let cycle = generate(&spec, DEFAULT_BUDGET)?;
        let ok = verify_ucycle(&spec, &cycle.letters, DEFAULT_BUDGET)?.passed();
        println!("m={m} len={:>2} verified={ok} {}", cycle.len(), cycle.render_canonical());
    }
    Ok(())
}
