//! Classes whose digraph is balanced but falls apart into several pieces.

use ucycle::{build_digraph, diagnose, ClassSpec, DEFAULT_BUDGET};

fn main() -> ucycle::Result<()> {
    let specs = [
        ClassSpec::Injection { k: 3, n: 3 },
        ClassSpec::Injection { k: 4, n: 4 },
        ClassSpec::Equitable { m: 4, n: 2 },
        ClassSpec::Equitable { m: 6, n: 3 },
        ClassSpec::Equitable { m: 8, n: 4 },
        // for contrast
        ClassSpec::Equitable { m: 7, n: 3 },
    ];
    for spec in specs {
        let r = diagnose(&build_digraph(&spec, DEFAULT_BUDGET)?);
        print!("{:<26} exists={:<5} reason={:<12} sccs={}", spec.to_string(), r.exists, r.reason.to_string(), r.scc_count);
        match r.forced_cycle_count {
            Some(c) => println!(" forced_cycles={c}"),
            None => println!(),
        }
    }
    Ok(())
}
