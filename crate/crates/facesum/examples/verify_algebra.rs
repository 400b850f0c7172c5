//! Symbolically verify the model: every invariance equation must reduce to
//! zero modulo the defining ideal, and also hold numerically at s = ζ₅,
//! S = ζ₅⁴. This is the algebraic certificate behind the state sum.

use facesum::polyring::{self, Assignment};

fn main() {
    let assignment = Assignment::paper();
    let report = polyring::verify_invariance(&assignment);
    for check in &report.checks {
        println!("{} {}", if check.pass { "ok  " } else { "FAIL" }, check.name);
        if !check.pass {
            println!("     {}", check.detail);
        }
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    println!("\n{passed}/{} checks passed", report.checks.len());
    std::process::exit(if report.all_pass() { 0 } else { 1 });
}
