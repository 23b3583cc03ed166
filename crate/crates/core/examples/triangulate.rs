//! The triangulation of the junior simplex for G-Hilb, with curve types and
//! regular triangles.
//!
//! cargo run --example triangulate -- "1/30(25,2,3)"

use ghilb::triangulation::{triangulate, RegularKind};

fn main() -> ghilb::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "1/30(25,2,3)".into());
    let g = ghilb::parse_group_spec(&spec)?;
    let t = triangulate(&g)?;
    print!("{}", ghilb::io::triangulation_text(&t));
    for r in &t.regular {
        let kind = match &r.kind {
            RegularKind::Corner(c) => format!("corner at e{}", c.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",e")),
            RegularKind::MeetingOfChampions => "meeting of champions".into(),
        };
        println!("regular triangle of side {}: {kind}, {} basic triangles", r.side, r.members.len());
    }
    Ok(())
}
