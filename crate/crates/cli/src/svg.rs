//! Picture of the translates `g^k Pi` tiling the cone, in the style of the
//! usual nef-cone figure: the two irrational boundary lines, `Pi` shaded,
//! and its neighbours in alternating tints.

use std::fmt::Write;

use nefcone::polyhedral::PolyhedralCone;
use nefcone::reduction::GroupAction2D;
use nefcone::{Error, Rational, Result};
use num_traits::ToPrimitive;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 20.0;
const ORIGIN: (f64, f64) = (2.0 * MARGIN, SIZE / 2.0);

const PI_FILL: &str = "#f4a261";
const TINTS: [&str; 2] = ["#dfe7f2", "#c3d3e8"];

fn fmt(x: f64) -> String {
    // `+ 0.0` folds -0.0 into 0.0
    format!("{:.3}", x + 0.0)
}

/// Screen point at distance `radius` from the origin in direction `(x1, x2)`.
fn endpoint(radius: f64, x1: f64, x2: f64) -> (f64, f64) {
    let n = x1.hypot(x2);
    (ORIGIN.0 + radius * x1 / n, ORIGIN.1 - radius * x2 / n)
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().expect("finite")
}

/// SVG with one wedge `<path>` per translate `g^k Pi`, `|k| <= k_range`,
/// and the two boundary lines `x2 = +-sqrt(a/b) x1` of the cone.
pub fn render_svg(pi: &PolyhedralCone, action: &GroupAction2D, k_range: u32) -> Result<String> {
    if pi.dim() != 2 {
        return Err(Error::UnsupportedDimension(pi.dim()));
    }
    // boundary slope; the radius is chosen so the whole cone fits
    let s = (to_f64(action.a()) / to_f64(action.b())).sqrt();
    let sin = s / s.hypot(1.0);
    let radius = (SIZE - ORIGIN.0 - MARGIN).min((SIZE / 2.0 - MARGIN) / sin);
    let mut out = String::new();
    let size = SIZE as u32;
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    let g: Vec<String> = action
        .generator()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    writeln!(out, "<title>Translates of {pi} under g = [{}], |k| &lt;= {k_range}</title>", g.join(",")).unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    let k = i64::from(k_range);
    for j in -k..=k {
        let cone = action.translate(pi, j)?;
        let mut rays: Vec<(Rational, f64, f64)> = cone
            .extreme_rays()
            .iter()
            .map(|r| {
                let v = r.to_rational();
                (&v[1] / &v[0], to_f64(&v[0]), to_f64(&v[1]))
            })
            .collect();
        rays.sort_by(|a, b| a.0.cmp(&b.0));
        let mut d = format!("M {} {}", fmt(ORIGIN.0), fmt(ORIGIN.1));
        for (_, x1, x2) in &rays {
            let (x, y) = endpoint(radius, *x1, *x2);
            write!(d, " L {} {}", fmt(x), fmt(y)).unwrap();
        }
        d.push_str(" Z");
        let fill = if j == 0 { PI_FILL } else { TINTS[j.rem_euclid(2) as usize] };
        writeln!(out, r##"<path d="{d}" fill="{fill}" stroke="#555555" stroke-width="0.5" data-k="{j}"/>"##).unwrap();
    }
    for sign in [1.0, -1.0] {
        let (x, y) = endpoint(radius, 1.0, sign * s);
        writeln!(
            out,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
            fmt(ORIGIN.0),
            fmt(ORIGIN.1),
            fmt(x),
            fmt(y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nefcone::abelian::real_mult_fundamental_domain;
    use nefcone::polyhedral::RayClass;

    fn d2() -> (PolyhedralCone, GroupAction2D) {
        let dom = real_mult_fundamental_domain(2, &RayClass::from_ints(&[1, 0]).unwrap(), false).unwrap();
        (dom.pi, dom.action)
    }

    fn count(svg: &str, tag: &str) -> usize {
        svg.matches(&format!("<{tag} ")).count()
    }

    #[test]
    fn element_counts() {
        let (pi, g) = d2();
        let svg = render_svg(&pi, &g, 3).unwrap();
        assert_eq!((count(&svg, "path"), count(&svg, "line")), (7, 2));
        let svg = render_svg(&pi, &g, 0).unwrap();
        assert_eq!((count(&svg, "path"), count(&svg, "line")), (1, 2));
    }

    #[test]
    fn deterministic() {
        let (pi, g) = d2();
        assert_eq!(render_svg(&pi, &g, 2).unwrap(), render_svg(&pi, &g, 2).unwrap());
    }

    #[test]
    fn planar_only() {
        let (_, g) = d2();
        let c = PolyhedralCone::from_int_rays(&[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        assert_eq!(render_svg(&c, &g, 1), Err(Error::UnsupportedDimension(3)));
    }
}
