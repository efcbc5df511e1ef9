//! Write the Ranking{m=3} digraph as Graphviz DOT.
//!
//! ```text
//! cargo run --example dot_export > rankings.dot && dot -Tsvg rankings.dot -o rankings.svg
//! ```

use ucycle::{build_digraph, ClassSpec, DEFAULT_BUDGET};

fn main() -> ucycle::Result<()> {
    let g = build_digraph(&ClassSpec::Ranking { m: 3 }, DEFAULT_BUDGET)?;
    print!("{}", g.to_dot());
    Ok(())
}
