//! The relation `S = L (I - M)` between Seifert form, intersection form and
//! monodromy, in both directions.

use monodromy::corpus::example_degenerate_seifert;
use monodromy::error::Error;
use monodromy::matrix::ExactMatrix;
use monodromy::ring::RingDescriptor;
use monodromy::seifert::{intersection_from_seifert, monodromy_from_seifert, symmetry_report};

fn main() -> monodromy::error::Result<()> {
    let z = RingDescriptor::Integers;
    // the trefoil: L = [[-1, 1], [0, -1]] and M = -L^{-1} L^T
    let l = ExactMatrix::from_i64(z.clone(), &[&[-1, 1], &[0, -1]])?;
    let m = ExactMatrix::from_i64(z, &[&[0, 1], &[-1, 1]])?;
    let s = intersection_from_seifert(&l, &m)?;
    println!("S =\n{s}\nsymmetry: {:?}", symmetry_report(&s));
    let back = monodromy_from_seifert(&l, &s)?;
    println!("recovered M =\n{}\nrealizable: {}", back.m, back.realizable);

    let d = example_degenerate_seifert().datum;
    println!("S = 0 with M =\n{}", d.m);
    assert_eq!(monodromy_from_seifert(&d.l, &d.s), Err(Error::DegenerateSeifertForm));
    println!("a singular Seifert form does not determine M");
    Ok(())
}
