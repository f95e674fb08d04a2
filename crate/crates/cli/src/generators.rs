//! `fermatp check-small-generators` — diagnostic for the folklore claim that
//! every odd prime has a primitive root at most 6. It is false; this lists
//! the counterexamples.

use std::io::Write;
use std::process::ExitCode;

use fermatp::modfield::odd_primes_up_to;
use fermatp::smallest_primitive_root;

pub fn run(pmax: u64) -> anyhow::Result<ExitCode> {
    let mut sink = std::io::BufWriter::new(std::io::stdout());
    let primes = odd_primes_up_to(pmax);
    let mut exceeding = 0u64;
    for &p in &primes {
        let root = smallest_primitive_root(p).element().value();
        if root > 6 {
            exceeding += 1;
            writeln!(sink, "p = {}: least generator = {root}", p.get())?;
        }
    }
    writeln!(
        sink,
        "checked {} odd primes up to {pmax}; {exceeding} with least generator > 6",
        primes.len()
    )?;
    sink.flush()?;
    Ok(ExitCode::SUCCESS)
}
