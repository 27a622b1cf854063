//! Runs the fourteen reference criteria in order, one PASS/FAIL line each.

use edgepoly::suite;
use edgepoly::Limits;

fn main() {
    let limits = Limits::default();
    let mut failed = 0;
    for id in 1..=suite::COUNT {
        let outcome = suite::run(id, &limits).expect("criterion ids are contiguous");
        println!("{outcome}");
        failed += usize::from(!outcome.passed);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        suite::COUNT as usize - failed,
        suite::COUNT
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
