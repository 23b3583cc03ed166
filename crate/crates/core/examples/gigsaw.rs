//! Total G-igsaw pieces from the recipe alone, compared with the pieces read
//! off the two adjacent G-graphs.
//!
//! cargo run --example gigsaw -- "1/30(25,2,3)"

use ghilb::cluster::gigsaw_oracle;
use ghilb::recipe::Recipe;
use ghilb::triangulation::triangulate;
use ghilb::unlock::unlock_all;

fn main() -> ghilb::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "1/30(25,2,3)".into());
    let t = triangulate(&ghilb::parse_group_spec(&spec)?)?;
    let r = Recipe::compute(&t)?;
    let pieces = unlock_all(&t, &r)?;
    let mut matched = 0;
    for (&e, piece) in &pieces {
        let [a, b] = [t.edges[e].triangles[0], t.edges[e].triangles[1]];
        let oracle = gigsaw_oracle(&t.graphs[t.triangles[a].graph], &t.graphs[t.triangles[b].graph]);
        matched += usize::from(oracle == piece.characters);
        let chars: Vec<u32> = piece.characters.iter().map(|c| c.0).collect();
        println!("e{e:<3} marked {:<3} {chars:?}", r.mark(e).map_or(0, |c| c.0));
    }
    println!("{matched} of {} pieces match the G-graphs", pieces.len());
    // one piece in full, with the step that contributed each character
    if let Some(piece) = pieces.values().max_by_key(|p| p.characters.len()) {
        print!("{}", ghilb::io::gig_text(&t, &r, piece));
    }
    Ok(())
}
