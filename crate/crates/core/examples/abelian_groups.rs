//! Homomorphisms between finitely generated abelian groups: kernel, image,
//! cokernel and inversion.

use monodromy::group::CyclicSum;
use monodromy::hom::ModuleHom;
use monodromy::matrix::ExactMatrix;
use monodromy::ring::{format_scalar, int, RingDescriptor};

fn main() -> monodromy::error::Result<()> {
    let z = RingDescriptor::Integers;
    // Z ⊕ Z/4, generators e (free) and f (order 4)
    let g = CyclicSum::new(vec![0.into(), 4.into()])?;
    // e -> 2e + f, f -> 2f
    let m = ExactMatrix::from_i64(z.clone(), &[&[2, 0], &[1, 2]])?;
    let h = ModuleHom::new(z.clone(), g.clone(), g.clone(), m)?;
    println!("ker = {}", h.kernel()?.group);
    println!("im = {}", h.image()?.group);
    println!("coker = {}", h.cokernel()?.group);
    println!("automorphism: {}", h.is_automorphism()?);

    let u = ModuleHom::new(z.clone(), g.clone(), g.clone(), ExactMatrix::from_i64(z, &[&[1, 0], &[1, 3]])?)?;
    let inv = u.invert()?;
    println!("inverse of\n{}\nis\n{}", u.matrix(), inv.matrix());
    assert!(inv.compose(&u)?.is_identity());
    let image: Vec<String> = u.apply(&[int(1), int(1)])?.iter().map(format_scalar).collect();
    println!("u(e + f) = {image:?}");
    Ok(())
}
