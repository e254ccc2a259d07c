//! ASCII pictures of point sets, top row first.

use std::fmt::Write as _;

use crate::error::{domain, Result};
use crate::grid::{Point, PointSet};
use crate::percolation::{closure, rects_of_closed};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RenderOptions {
    pub glyph_on: char,
    pub glyph_off: char,
    /// Used for cells infected by the closure but not in the set.
    pub glyph_closure: char,
    pub show_closure: bool,
    /// List the maximal rectangles of the closure under the picture.
    pub show_rects: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { glyph_on: '#', glyph_off: '.', glyph_closure: '+', show_closure: false, show_rects: false }
    }
}

impl RenderOptions {
    fn validate(&self) -> Result<()> {
        let g = [self.glyph_on, self.glyph_off, self.glyph_closure];
        if g[0] == g[1] || g[0] == g[2] || g[1] == g[2] || g.contains(&'\n') {
            return Err(domain("render glyphs must be distinct and printable"));
        }
        Ok(())
    }
}

pub fn render(a: &PointSet, opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    let dims = a.dims();
    let closed = (opts.show_closure || opts.show_rects).then(|| closure(dims, a).infected);
    let mut out = String::with_capacity((dims.m() as usize + 1) * dims.n() as usize);
    for y in (1..=dims.n()).rev() {
        for x in 1..=dims.m() {
            let p = Point::new(x, y);
            let c = if a.contains(p) {
                opts.glyph_on
            } else if opts.show_closure && closed.as_ref().is_some_and(|c| c.contains(p)) {
                opts.glyph_closure
            } else {
                opts.glyph_off
            };
            out.push(c);
        }
        out.push('\n');
    }
    if opts.show_rects {
        let rects = rects_of_closed(closed.as_ref().expect("closure computed above"))?;
        for r in rects.rects {
            let _ = writeln!(out, "rect {r} {}x{}", r.width(), r.height());
        }
    }
    Ok(out)
}
