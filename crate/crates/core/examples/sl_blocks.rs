//! Elementary subalgebras of maximal dimension in u_4 and u_5 over F_3.

use elementary::evariety::{enumerate_elementary, SearchOptions};
use elementary::liealg::nilradical_upper;
use elementary::{Matrix, PrimeField};

fn main() -> elementary::Result<()> {
    let f = PrimeField::new(3)?;
    for (n, r) in [(4, 4), (5, 6)] {
        let g = nilradical_upper(f, n)?;
        let pts = enumerate_elementary(&g, r, &SearchOptions::default())?.points;
        println!("u_{}: {} elementary {}-planes", n, pts.len(), r);
        for pt in &pts {
            let mats: Vec<Matrix> = pt.basis_elements().iter().map(|u| g.realize(u).unwrap()).collect();
            let kernel = n - Matrix::vstack_all(f, n, &mats).rank();
            let labels: Vec<&str> = pt.sigma().iter().map(|&i| g.labels()[i].as_str()).collect();
            println!("  spanned by {:?}, common kernel of dimension {}", labels, kernel);
        }
    }
    Ok(())
}
