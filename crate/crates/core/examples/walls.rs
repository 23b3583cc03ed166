//! The inequalities cutting out the G-Hilb chamber, their reduction to walls
//! and the wall types.
//!
//! cargo run --example walls -- "1/6(1,2,3)"

use ghilb::chamber::{compute_walls, ChamberConfig, Certificate, Status};
use ghilb::recipe::Recipe;
use ghilb::triangulation::triangulate;

fn main() -> ghilb::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "1/6(1,2,3)".into());
    let t = triangulate(&ghilb::parse_group_spec(&spec)?)?;
    let r = Recipe::compute(&t)?;
    let w = compute_walls(&t, &r, &ChamberConfig::default())?;
    print!("{}", ghilb::io::walls_text(&t, &w));
    // a wall comes with a stability parameter lying on it and strictly
    // inside every other inequality
    for x in &w.walls {
        let q = &w.inequalities[x.inequality];
        if let Some(Certificate::Witness(theta)) = &q.certificate {
            println!("({}) witness theta = ({})", q.label, theta.join(", "));
        }
    }
    let redundant = w.inequalities.iter().filter(|q| q.status == Status::Redundant).count();
    println!("{redundant} redundant, {} long sides", w.long_sides.len());
    Ok(())
}
