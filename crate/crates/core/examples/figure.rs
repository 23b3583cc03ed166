//! Figures of Reid's recipe on the junior simplex, as SVG and TikZ.
//!
//! cargo run --example figure -- "1/25(1,3,21)" out

use std::path::PathBuf;

use ghilb::io::{figure, FigureFormat};
use ghilb::recipe::Recipe;
use ghilb::triangulation::triangulate;

fn main() -> ghilb::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "1/25(1,3,21)".into());
    let dir = PathBuf::from(args.next().unwrap_or_else(|| std::env::temp_dir().display().to_string()));
    let t = triangulate(&ghilb::parse_group_spec(&spec)?)?;
    let r = Recipe::compute(&t)?;
    std::fs::create_dir_all(&dir)?;
    for (format, ext) in [(FigureFormat::Svg, "svg"), (FigureFormat::Tikz, "tex")] {
        let path = dir.join(format!("recipe.{ext}"));
        std::fs::write(&path, figure(&t, Some(&r), format))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
