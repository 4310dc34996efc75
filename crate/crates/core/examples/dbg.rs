use casimir_core::numerics::*;
use casimir_core::polenergy::*;
use casimir_core::ModelParams;

fn main() {
    let p = ModelParams::default();
    let cfg = QuadratureConfig::default();
    let est = epol_short_limit(&p, &cfg).unwrap();
    println!("short_limit: value={:e} err={:e} evals={} conv={}", est.value, est.error_estimate, est.evaluations, est.converged);
    let e3 = epol(1e-3, &p, &cfg).unwrap();
    println!("epol(1e-3): value={:e} err={:e} conv={}", e3.value, e3.error_estimate, e3.converged);
    let e1 = epol(1.0, &p, &cfg).unwrap();
    println!("epol(1): value={:e} err={:e} conv={}", e1.value, e1.error_estimate, e1.converged);
    let c = compute_c(&cfg).unwrap();
    println!("C: value={:.10} err={:e} conv={}", c.value, c.error_estimate, c.converged);
}
