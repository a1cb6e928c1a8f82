//! Conjugating the maximal elementary subalgebras of sp_4 into the standard
//! nilradical.

use elementary::evariety::triangularize::in_symplectic_nilradical;
use elementary::evariety::{enumerate_elementary, symplectic_flag_triangularize, SearchOptions};
use elementary::liealg::sp;
use elementary::PrimeField;

fn main() -> elementary::Result<()> {
    let g = sp(PrimeField::new(3)?, 2)?;
    for r in 1..=4 {
        let n = enumerate_elementary(&g, r, &SearchOptions::default())?.points.len();
        println!("dimension {}: {} points", r, n);
    }
    let top = enumerate_elementary(&g, 3, &SearchOptions::default())?.points;
    let mut ok = 0;
    for pt in &top {
        let c = symplectic_flag_triangularize(&g, pt)?;
        let cinv = c.inverse().expect("invertible");
        if pt
            .basis_elements()
            .iter()
            .all(|u| in_symplectic_nilradical(&c.mul(&g.realize(u).unwrap()).mul(&cinv)))
        {
            ok += 1;
        }
    }
    println!("{} of {} three-dimensional points conjugated into the nilradical", ok, top.len());
    if let Some(pt) = top.get(7) {
        println!("example conjugator:\n{:?}", symplectic_flag_triangularize(&g, pt)?);
    }
    Ok(())
}
