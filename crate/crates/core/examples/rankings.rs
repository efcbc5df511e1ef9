//! Rankings with ties: enumeration, degree table and U-cycles.

use ucycle::{build_digraph, degree_profile, enumerate_class, generate, ClassSpec, DEFAULT_BUDGET};

fn main() -> ucycle::Result<()> {
    let spec = ClassSpec::Ranking { m: 3 };
    let words: Vec<String> = enumerate_class(&spec, DEFAULT_BUDGET)?.iter().map(|w| w.render(3)).collect();
    println!("{} rankings: {}", words.len(), words.join(" "));

    let g = build_digraph(&spec, DEFAULT_BUDGET)?;
    for row in degree_profile(&g).rows {
        println!("  {} in={} out={}", row.vertex.render(3), row.in_degree, row.out_degree);
    }
    println!("cycle: {}", generate(&spec, DEFAULT_BUDGET)?.render_canonical());

    for m in 4..=6 {
        let cycle = generate(&ClassSpec::Ranking { m }, DEFAULT_BUDGET)?;
        println!("m={m}: {} letters", cycle.len());
    }
    Ok(())
}
