//! Direct maximality search against the socle count on E(2, u_4) at p = 3
//! and p = 5.

use elementary::evariety::{enumerate_elementary, is_maximal_elementary, socle_dimension, SearchOptions};
use elementary::liealg::nilradical_upper;
use elementary::PrimeField;

fn main() -> elementary::Result<()> {
    for p in [3, 5] {
        let g = nilradical_upper(PrimeField::new(p)?, 4)?;
        for r in 2..=4 {
            let pts = enumerate_elementary(&g, r, &SearchOptions::default())?.points;
            let mut maximal = 0;
            let mut agree = 0;
            for pt in &pts {
                let brute = is_maximal_elementary(&g, pt, 1 << 20)?;
                maximal += usize::from(brute);
                agree += usize::from(brute == (socle_dimension(&g, pt) == r));
            }
            println!(
                "p = {}, r = {}: {} points, {} maximal, socle count agrees on {}; p-map trivial: {}",
                p,
                r,
                pts.len(),
                maximal,
                agree,
                g.has_trivial_p_map(1 << 20)?
            );
        }
    }
    Ok(())
}
