//! Composing local monodromies in a star decomposition and recovering them
//! from the monodromy at infinity.

use monodromy::random::{random_tuple, InstanceRng, TupleConfig};
use monodromy::reconstruct::{partial_products, reconstruct_tuple};
use monodromy::ring::RingDescriptor;
use monodromy::star::StarDecomposition;

fn main() -> monodromy::error::Result<()> {
    let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2, 1, 2])?;
    let mut rng = InstanceRng::new(2024);
    let tuple = random_tuple(&mut rng, &dec, &TupleConfig::default())?;
    for op in tuple.operators() {
        println!("m_{} =\n{}", op.row() + 1, op.to_full_operator().matrix());
    }
    let m_inf = tuple.compose();
    println!("M_inf =\n{}", m_inf.matrix());
    // the k-th partial product agrees with M_inf on the first k block rows
    for (k, p) in partial_products(&tuple).iter().enumerate().skip(1) {
        let rows = 0..dec.range(k - 1).end;
        let cols = 0..dec.total().len();
        println!("m_{k} ... m_1 matches M_inf on rows {rows:?}: {}", p.block(rows.clone(), cols.clone()) == m_inf.block(rows.clone(), cols));
    }
    let back = reconstruct_tuple(&m_inf, &dec)?;
    assert_eq!(back, tuple);
    println!("reconstructed all {} local operators", back.len());
    Ok(())
}
