//! Reach the all-ones ranking vertex from 532147 and come back out to 741235.

use ucycle::witness::{ranking_collapse_path, reverse_path, validate_path};
use ucycle::{ClassSpec, Word};

fn main() -> ucycle::Result<()> {
    let class = ClassSpec::Ranking { m: 7 };
    let down = ranking_collapse_path(&class, &Word::parse("532147")?)?;
    let up = reverse_path(&down);
    for (name, p) in [("collapse", &down), ("expand", &up)] {
        println!("{name}: {} steps, valid={}", p.transitions(), validate_path(&class, p).valid);
        print!("{}", p.to_text());
    }
    Ok(())
}
