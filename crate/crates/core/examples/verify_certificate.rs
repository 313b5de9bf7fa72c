//! Replays a certificate, then shows a tampered copy being rejected.
//!
//! cargo run --example verify_certificate [-- FILE]

use crossplane::bounds::{
    chain_certificate, verify_certificate, BoundCertificate, ChainMode, Instance,
};

fn main() -> crossplane::Result<()> {
    let cert = match std::env::args().nth(1) {
        Some(path) => BoundCertificate::from_json(&std::fs::read_to_string(path)?)?,
        None => chain_certificate(
            Instance::Complete(25),
            Instance::Complete(57),
            2,
            ChainMode::PerStep,
        )?,
    };
    println!(
        "{} steps, claims {}: {}",
        cert.steps.len(),
        cert.value,
        verify_certificate(&cert)
    );

    let mut forged = cert.clone();
    forged.value += 1;
    println!("value + 1: {}", verify_certificate(&forged));

    let mut forged = cert;
    if let Some(step) = forged.steps.get_mut(1) {
        step.result = "1000000".into();
    }
    println!("edited step: {}", verify_certificate(&forged));
    Ok(())
}
