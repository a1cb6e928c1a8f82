//! Top-dimensional elementary subalgebras of a Heisenberg algebra against
//! the Lagrangians of its symplectic quotient.

use elementary::evariety::{
    enumerate_elementary, is_lagrangian_preimage, lagrangian_count, SearchOptions, SymplecticQuotient,
};
use elementary::liealg::heisenberg;
use elementary::PrimeField;

fn main() -> elementary::Result<()> {
    for (n, p) in [(2, 3), (2, 5), (3, 3)] {
        let g = heisenberg(PrimeField::new(p)?, n)?;
        let q = SymplecticQuotient::new(&g)?;
        let pts = enumerate_elementary(&g, n, &SearchOptions::default())?.points;
        let lagrangian = pts.iter().filter(|pt| is_lagrangian_preimage(&q, pt)).count();
        println!(
            "heis_{} over F_{}: {} points, {} Lagrangian preimages, formula {}",
            n,
            p,
            pts.len(),
            lagrangian,
            lagrangian_count(n - 1, p as u64)
        );
    }
    Ok(())
}
