//! Verify candidate cycles, including a broken one.
//!
//! ```text
//! cargo run --example verify_cycle -- plain 3 2 11100010
//! ```

use ucycle::format::parse_cycle;
use ucycle::{verify_ucycle, ClassSpec, DEFAULT_BUDGET};

fn check(spec: &ClassSpec, text: &str) -> ucycle::Result<()> {
    let letters = parse_cycle(text, spec.alphabet())?;
    let r = verify_ucycle(spec, &letters, DEFAULT_BUDGET)?;
    println!("{spec} {text}: pass={}", r.passed());
    if let Some(f) = r.first_failure {
        println!("  first failure: {f:?}");
    }
    Ok(())
}

fn main() -> ucycle::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [class, m, n, cycle] = args.as_slice() {
        let m: u32 = m.parse().map_err(|_| ucycle::Error::Parse(format!("bad m {m}")))?;
        let n: u32 = n.parse().map_err(|_| ucycle::Error::Parse(format!("bad n {n}")))?;
        let spec = match class.as_str() {
            "plain" => ClassSpec::Plain { m, n },
            "equitable" => ClassSpec::Equitable { m, n },
            "ranking" => ClassSpec::Ranking { m },
            other => return Err(ucycle::Error::Parse(format!("example handles plain/equitable/ranking, not {other}"))),
        };
        return check(&spec, cycle);
    }
    check(&ClassSpec::Plain { m: 3, n: 2 }, "11100010")?;
    check(&ClassSpec::Plain { m: 3, n: 2 }, "11100011")?;
    check(&ClassSpec::Ranking { m: 3 }, "1113212213123")?;
    check(&ClassSpec::Ranking { m: 3 }, "1123212213123")?;
    Ok(())
}
