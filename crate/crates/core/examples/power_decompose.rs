//! Monomials of degree below p as sums of powers of linear forms.

use elementary::rankfn::powerdecomp::{power_decompose, verify_power_decomposition};
use elementary::PrimeField;

fn main() -> elementary::Result<()> {
    let f = PrimeField::new(5)?;
    for exps in [vec![1, 1], vec![2, 1], vec![1, 1, 1]] {
        let terms = power_decompose(f, &exps)?;
        println!("x^{:?} over F_5 ({} terms, identity holds: {})", exps, terms.len(), verify_power_decomposition(f, &exps)?);
        for t in &terms {
            println!("  {} * ({:?} . x)^{}", t.coeff, t.form, exps.iter().sum::<usize>());
        }
    }
    Ok(())
}
