//! Built-in spaces: descriptors, b-functions, validation and the JSON form.

use pvzeta::registry::{builtin_spaces, dual, from_json, to_json, validate};
use pvzeta::weyl::{b_function, bernstein_remainder, display_power};

fn main() {
    for desc in builtin_spaces() {
        let b = b_function(desc.f(), desc.fdual()).expect("rank one");
        let rem = bernstein_remainder(desc.f(), desc.fdual(), &b);
        println!("{}: n = {}, {} orbit(s), f = {}", desc.name, desc.dim, desc.orbit_count(), desc.f());
        println!("  b(s) = {}  (factors: {})", b, b.factor());
        println!("  remainder f̌(∂)f^(s+1) − b(s)f^s = {}", display_power(&rem));
        let report = validate(&desc);
        println!("  {} invariants checked, all passed: {}", report.checks.len(), report.all_passed());
        let d = dual(&desc);
        assert_eq!(from_json(&to_json(&d).unwrap()).unwrap(), d);
    }
}
