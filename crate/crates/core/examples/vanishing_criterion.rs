//! The exact sequence at each critical value and the vanishing criterion for
//! the monodromy at infinity.
//!
//! The second instance has no homology in degree 1 but a degree-0 tuple with
//! no fixed vectors at infinity: condition (ii) holds while (i) fails, which
//! is the situation of `x³ - 3x`.

use monodromy::group::FgAbelianGroup;
use monodromy::random::{random_tuple, InstanceRng, TupleConfig};
use monodromy::ring::RingDescriptor;
use monodromy::sequence::{corollary_b_check, sequence_e_constraints, CriticalValueDatum};
use monodromy::star::{MonodromyTuple, StarDecomposition};

fn data(tq: &MonodromyTuple, tqm1: &MonodromyTuple) -> monodromy::error::Result<Vec<CriticalValueDatum>> {
    (1..=tq.len()).map(|j| CriticalValueDatum::from_tuples(tq, tqm1, j, FgAbelianGroup::trivial())?.with_split_h_c()).collect()
}

fn main() -> monodromy::error::Result<()> {
    let q = RingDescriptor::Rationals;
    let mut rng = InstanceRng::new(5);
    let config = TupleConfig::default();
    let tq = random_tuple(&mut rng, &StarDecomposition::from_dims(q.clone(), 1, &[1, 2])?, &config)?;
    let tqm1 = random_tuple(&mut rng, &StarDecomposition::from_dims(q.clone(), 0, &[1, 1])?, &config)?;
    let d = data(&tq, &tqm1)?;
    for datum in &d {
        let c = sequence_e_constraints(datum)?;
        println!("b_{}: coker {}, Ker {}, H_c {}, consistent {}", datum.index, c.coker, datum.ker_qm1, datum.h_c, c.consistent);
    }
    println!("{:?}", corollary_b_check(&tq, &tqm1, &d)?);

    // three points of x³ - 3x over a generic value, two over each critical value
    let empty = MonodromyTuple::identity(StarDecomposition::from_dims(q.clone(), 1, &[0, 0])?)?;
    let points = random_tuple(&mut rng, &StarDecomposition::from_dims(q, 0, &[1, 1])?, &config)?;
    let d = data(&empty, &points)?;
    println!("{:?}", corollary_b_check(&empty, &points, &d)?);
    Ok(())
}
