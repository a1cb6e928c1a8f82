//! E(r, sl_2^r) is a product of projective lines.

use elementary::evariety::{enumerate_elementary, SearchOptions};
use elementary::liealg::{direct_sum, sl, RestrictedLieAlgebra};
use elementary::PrimeField;

fn main() -> elementary::Result<()> {
    for (r, p) in [(2, 3), (2, 5), (3, 3)] {
        let s = sl(PrimeField::new(p)?, 2)?;
        let parts: Vec<&RestrictedLieAlgebra> = vec![&s; r];
        let g = direct_sum(&parts)?;
        let n = enumerate_elementary(&g, r, &SearchOptions::default())?.points.len();
        println!("r = {}, p = {}: {} points, (p+1)^r = {}", r, p, n, (p as usize + 1).pow(r as u32));
    }
    Ok(())
}
