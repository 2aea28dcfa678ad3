//! The three-cuspidal quartic: local monodromy `-1` on `Z/3`.

use monodromy::corpus::{check_quartic, example_quartic};
use monodromy::duality::{dualize_tuple, rational_shadow};

fn main() -> monodromy::error::Result<()> {
    let fixture = example_quartic();
    println!("H_1(F) = {}", fixture.tuple.decomposition().total_group());
    println!("dualize: {:?}", dualize_tuple(&fixture.tuple).err());
    println!("rational shadow has rank {}", rational_shadow(&fixture.tuple)?.decomposition().total().len());
    for c in check_quartic(&fixture.tuple, &fixture.datum)? {
        println!("[{}] {} ({}): {}", if c.holds { "ok" } else { "FAILED" }, c.fact.id, c.fact.provenance, c.fact.statement);
    }
    Ok(())
}
