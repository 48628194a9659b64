//! Width by length sweep written as CSV to stdout.

use discrete_uncertainty::io::write_sweep_csv;
use discrete_uncertainty::{sweep, WidthRange};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let widths = WidthRange {
        c_min: 0.5,
        c_max: 2.0,
        steps: 4,
    };
    let rows = sweep(widths, &[16, 64])?;
    write_sweep_csv(std::io::stdout(), &rows)?;
    Ok(())
}
