//! Radical and socle ranks of the defining module of gl_3 over E(2, gl_3)(F_5).

use std::sync::Arc;

use elementary::evariety::{enumerate_elementary, SearchOptions};
use elementary::liealg::gl;
use elementary::rankfn::{rank_survey, SurveyOptions};
use elementary::repmod::RestrictedModule;
use elementary::PrimeField;

fn main() -> elementary::Result<()> {
    let g = Arc::new(gl(PrimeField::new(5)?, 3)?);
    let v = RestrictedModule::defining(g.clone())?;
    let pts = enumerate_elementary(&g, 2, &SearchOptions::default())?.points;
    let survey = rank_survey(&v, &pts, 2, &SurveyOptions::default())?;
    println!("{} points", survey.profiles.len());
    for j in 1..=3 {
        println!(
            "j = {}: rad observed {}..{} ({} below max), soc observed {}..{} ({} above min)",
            j,
            survey.rad_min[j],
            survey.rad_max[j],
            survey.rad_locus(j).len(),
            survey.soc_min[j],
            survey.soc_max[j],
            survey.soc_locus(j).len()
        );
    }
    Ok(())
}
