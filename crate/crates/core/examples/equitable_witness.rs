//! Connectivity witnesses inside equitable digraphs: lag cycling, a status
//! swap and a position swap, each checked edge by edge.

use ucycle::witness::{lag_cycle, letter_status, position_swap_path, status_swap_path, validate_path, WitnessPath};
use ucycle::{ClassSpec, Word};

fn show(title: &str, class: &ClassSpec, path: &WitnessPath) {
    let n = class.alphabet();
    let steps: Vec<String> = path.vertices.iter().map(|v| v.render(n)).collect();
    println!("{title} [{} steps, valid={}]", path.transitions(), validate_path(class, path).valid);
    println!("  {}", steps.join(" -> "));
}

fn main() -> ucycle::Result<()> {
    let eq8 = ClassSpec::Equitable { m: 8, n: 3 };
    let v = Word::parse("1122333")?;
    println!("statuses of {v}: {:?}", letter_status(&eq8, &v)?);
    show("lag cycle", &eq8, &lag_cycle(&eq8, &v, 2)?);
    show("swap positions 0 and 3", &eq8, &position_swap_path(&eq8, &v, 0, 3)?);

    let eq16 = ClassSpec::Equitable { m: 16, n: 6 };
    let v = Word::parse("512625454331466")?;
    show("make 4 normal and 1 super", &eq16, &status_swap_path(&eq16, &v, 4, 1)?);
    Ok(())
}
