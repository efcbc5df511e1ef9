//! Exact class sizes, closed form against brute force.

use ucycle::class::parse_classes;
use ucycle::counting::{ordered_bell_numbers, surjections};
use ucycle::{count_report, ClassSpec, DEFAULT_BUDGET};

fn main() -> ucycle::Result<()> {
    let specs = [
        ClassSpec::Surjection { k: 4, n: 3 },
        ClassSpec::NonBijection { n: 3 },
        ClassSpec::AlmostOnto { n: 5 },
        ClassSpec::Equitable { m: 7, n: 3 },
        ClassSpec::SInequitable { m: 7, n: 3, s: 2 },
        ClassSpec::Ranking { m: 4 },
        ClassSpec::Password { m: 4, n: 4, classes: parse_classes("1,2;3")? },
        ClassSpec::Plain { m: 20, n: 9 },
    ];
    for spec in specs {
        let r = count_report(&spec, DEFAULT_BUDGET)?;
        let closed = r.closed_form.as_ref().map_or("-".to_string(), |c| c.to_string());
        let brute = r.brute_force.map_or("-".to_string(), |b| b.to_string());
        println!("{:<34} closed={closed:<22} brute={brute:<8} consistent={}", spec.to_string(), r.consistent());
    }

    let bell: Vec<String> = ordered_bell_numbers(20).iter().map(|b| b.to_string()).collect();
    println!("ordered Bell numbers: {}", bell.join(", "));
    println!("surjections 30 -> 10: {}", surjections(30, 10));
    Ok(())
}
