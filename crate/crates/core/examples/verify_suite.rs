//! Runs the verification suite on every built-in space and prints one line per check.
//!
//! ```text
//! cargo run --release --example verify_suite [SPACE...]
//! ```

use pvzeta::registry::{builtin_space, BUILTIN_NAMES};
use pvzeta::verify::verify_space;
use pvzeta::zeta::QuadConfig;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() { BUILTIN_NAMES.to_vec() } else { args.iter().map(String::as_str).collect() };
    let cfg = QuadConfig::default();
    for name in names {
        let desc = builtin_space(name).expect("known space");
        let t = Instant::now();
        let rep = verify_space(&desc, &cfg);
        println!("== {name} ({:.1}s)", t.elapsed().as_secs_f64());
        for c in &rep.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            println!("  {tag} [{}] {:<32} dev={:.3e} tol={:.1e}  {}", c.criterion, c.id, c.deviation, c.tolerance, c.detail);
        }
    }
}
