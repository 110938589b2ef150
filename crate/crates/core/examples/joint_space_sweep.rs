//! det A over a joint-space grid: sign regions and the singular fraction at
//! several resolutions.

use agile_eye::analysis::sweep;
use agile_eye::Tolerances;

fn main() {
    for n in [32, 64, 96] {
        let s = sweep(n, &Tolerances::default()).summary;
        println!(
            "n = {n:>3}: {} positive / {} negative components, singular fraction {:.5}",
            s.positive_components, s.negative_components, s.singular_cell_fraction
        );
    }
}
