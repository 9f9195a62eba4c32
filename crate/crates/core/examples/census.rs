//! Census of cyclic groups written as CSV to stdout.
//!
//! cargo run --release --example census -- 1 48

use skewmorph::cli::CensusRecord;
use skewmorph::enumerate::{Enumerator, Guard};
use skewmorph::AbelianGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (from, to) = match args[..] {
        [a, b] => (a, b),
        _ => (1, 36),
    };
    let enumerator = Enumerator::new();
    let mut out = csv::Writer::from_writer(std::io::stdout());
    for n in from..=to {
        let report = enumerator.report(&AbelianGroup::cyclic(n)?, Guard::default())?;
        let record = CensusRecord::from_report(&report);
        assert!(record.is_consistent());
        out.serialize(record)?;
    }
    out.flush()?;
    Ok(())
}
