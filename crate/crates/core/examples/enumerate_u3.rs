//! E(2, u_3)(F_p) is a projective line: p + 1 planes, each containing E_13.

use elementary::evariety::{enumerate_elementary, SearchOptions};
use elementary::liealg::nilradical_upper;
use elementary::PrimeField;

fn main() -> elementary::Result<()> {
    for p in [3, 5, 7] {
        let g = nilradical_upper(PrimeField::new(p)?, 3)?;
        let found = enumerate_elementary(&g, 2, &SearchOptions::default())?;
        println!("p = {}: {} points ({} search nodes)", p, found.points.len(), found.nodes);
        for pt in found.points.iter().take(3) {
            println!("  pivots {:?}\n{:?}", pt.plane().sigma_one_based(), pt.plane().basis());
        }
    }
    Ok(())
}
