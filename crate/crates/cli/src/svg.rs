//! SVG rendering of a cross-section mask.

use std::fmt::Write;

use qchan_core::CrossSection;

const SIZE: f64 = 600.0;
const FILL: &str = "#2f6690";

fn px(x: f64) -> f64 {
    (x + 1.0) * SIZE / 2.0
}

fn py(y: f64) -> f64 {
    (1.0 - y) * SIZE / 2.0
}

/// 600x600 image with `y` pointing up; shaded cells are merged into one
/// rectangle per horizontal run.
pub fn render(cs: &CrossSection) -> String {
    let cell = SIZE / cs.grid as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 600 600">"#
    );
    let _ = writeln!(out, "<title>simulable channels at z = {:?}</title>", cs.z0);
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="600" height="600" fill="white" stroke="black"/>"#
    );
    let _ = writeln!(out, r#"<g fill="{FILL}" stroke="none">"#);
    for row in 0..cs.grid {
        // row 0 is the bottom of the plot
        let top = SIZE - (row + 1) as f64 * cell;
        let mut col = 0;
        while col < cs.grid {
            if !cs.is_shaded(row, col) {
                col += 1;
                continue;
            }
            let start = col;
            while col < cs.grid && cs.is_shaded(row, col) {
                col += 1;
            }
            let _ = writeln!(
                out,
                r#"<rect x="{:?}" y="{:?}" width="{:?}" height="{:?}"/>"#,
                start as f64 * cell,
                top,
                (col - start) as f64 * cell,
                cell
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let points: Vec<String> = cs
        .rect
        .corners
        .iter()
        .map(|[x, y]| format!("{:?},{:?}", px(*x), py(*y)))
        .collect();
    let _ = writeln!(
        out,
        r#"<polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        points.join(" ")
    );
    let _ = writeln!(out, "</svg>");
    out
}
