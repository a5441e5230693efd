//! Exact strong and weak total Thue numbers of short paths and cycles.
//!
//! Run with `cargo run --release --example path_values -- [max_n] [seconds]`.

use std::time::Duration;

use thue_lab::graph::{make_cycle, make_path};
use thue_lab::solver::{exact_number, Budget, Mode, SolveError};

fn show(label: &str, result: Result<thue_lab::solver::Solution, SolveError>) {
    match result {
        Ok(s) => println!("{label:<10} {:>2}   nodes {:>10}   {:>8.3}s", s.value, s.nodes_expanded, s.elapsed.as_secs_f64()),
        Err(SolveError::Exhausted { lower, upper, nodes }) => println!("{label:<10} in [{lower}, {upper}]   budget exhausted after {nodes} nodes"),
        Err(e) => println!("{label:<10} error: {e}"),
    }
}

fn main() {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(12);
    let secs: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(30);
    let budget = Budget::time(Duration::from_secs(secs));

    println!("paths");
    for n in 2..=max_n {
        let g = make_path(n).expect("path");
        show(&format!("P{n} weak"), exact_number(&g, Mode::WeakTotal, budget));
        show(&format!("P{n} strong"), exact_number(&g, Mode::StrongTotal, budget));
    }
    println!("cycles");
    for n in 3..=max_n {
        let g = make_cycle(n).expect("cycle");
        show(&format!("C{n} weak"), exact_number(&g, Mode::WeakTotal, budget));
        show(&format!("C{n} strong"), exact_number(&g, Mode::StrongTotal, budget));
    }
}
