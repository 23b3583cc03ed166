//! Reid's recipe: the character marking each curve and divisor, the chains,
//! and the character each del Pezzo divisor contributes along a chain.
//!
//! cargo run --example recipe -- "1/30(25,2,3)"

use ghilb::recipe::Recipe;
use ghilb::triangulation::{triangulate, VertexKind};

fn main() -> ghilb::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "1/30(25,2,3)".into());
    let t = triangulate(&ghilb::parse_group_spec(&spec)?)?;
    let r = Recipe::compute(&t)?;
    print!("{}", ghilb::io::recipe_text(&t, &r));
    for v in t.interior_vertices().filter(|&v| t.vertices[v].kind == VertexKind::DelPezzo6) {
        let marks: Vec<u32> = r.vertex_marks[v].iter().map(|c| c.0).collect();
        println!("del Pezzo divisor {} marked {marks:?}", t.vertices[v].point);
    }
    Ok(())
}
