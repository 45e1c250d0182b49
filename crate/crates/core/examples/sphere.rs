//! 1-sphericity of finite point sets on the rational line.

use semiaffine::sphere::{
    is_1_spherical, semiaffine_on_line, sphere_witness, to_integer_lattice, LinePointSet,
};

fn main() -> semiaffine::Result<()> {
    for s in ["0,1", "7/3", "0,1,2", "-1/2,1/3,5", "0,1/2,3/2"] {
        let p: LinePointSet = s.parse()?;
        let img = to_integer_lattice(&p)?;
        println!(
            "{p}: spherical={} semiaffine={} lattice image {:?} (scale {}, offset {})",
            is_1_spherical(&p),
            semiaffine_on_line(&p),
            img.points,
            img.scale,
            img.offset
        );
        if let Some(w) = sphere_witness(&p) {
            println!("  no point at distance |{} - {}| from {}", w.a, w.b, w.c);
        }
    }
    Ok(())
}
