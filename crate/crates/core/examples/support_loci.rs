//! Degree-one radical and socle loci next to the support locus for modules
//! over g_a^2 at p = 3.

use std::sync::Arc;

use elementary::evariety::{enumerate_elementary, SearchOptions};
use elementary::liealg::abelian;
use elementary::rankfn::{rank_survey, SurveyOptions};
use elementary::repmod::RestrictedModule;
use elementary::PrimeField;

fn main() -> elementary::Result<()> {
    let g = Arc::new(abelian(PrimeField::new(3)?, 2)?);
    let free = RestrictedModule::free_over_abelian(g.clone(), 1)?;
    let modules = [
        free.direct_sum(&RestrictedModule::trivial(g.clone()))?,
        free.direct_sum(&RestrictedModule::coordinate_free(g.clone(), 0)?)?,
    ];
    let pts = enumerate_elementary(&g, 1, &SearchOptions::default())?.points;
    for m in &modules {
        let s = rank_survey(m, &pts, 1, &SurveyOptions::default())?;
        println!(
            "{} (dim {}): free at {} of {} lines; rad locus {:?}, support {:?}, soc locus {:?}",
            m.name(),
            m.dim(),
            s.profiles.iter().filter(|p| p.free).count(),
            pts.len(),
            s.rad_locus(1),
            s.support_locus(),
            s.soc_locus(1)
        );
    }
    Ok(())
}
