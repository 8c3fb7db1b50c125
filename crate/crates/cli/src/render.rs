//! SVG rendering of the image of the disc under a harmonic mapping:
//! a point-cloud of concentric circle images, the covering disc as a
//! reference circle, and the distortion annuli at selected radii.
//!
//! Coordinates are written with fixed six-decimal precision so renders
//! are byte-stable and diffable.

use qharm_core::bounds::{covering_radius, distortion_bounds};
use qharm_core::{ClassParams64, Complex64, HarmonicSeries64};
use std::fmt::Write;

const SIZE: f64 = 800.0;
const ANGLES: usize = 256;
const RING_COLORS: [&str; 5] = ["#264653", "#2a9d8f", "#e9c46a", "#f4a261", "#e76f51"];

fn fmt6(x: f64) -> String {
    format!("{x:.6}")
}

pub fn render_svg(
    f: &HarmonicSeries64,
    p: &ClassParams64,
    rings: &[f64],
    annuli: &[f64],
) -> Result<String, String> {
    for &r in rings.iter().chain(annuli.iter()) {
        if r <= 0.0 || r >= 1.0 {
            return Err(format!("ring radius {r} must lie in (0, 1)"));
        }
    }
    let b1 = f.b1();
    let covering = if b1 < 1.0 {
        covering_radius(p, b1).ok()
    } else {
        None
    };
    let bounds: Vec<_> = annuli
        .iter()
        .filter_map(|&r| distortion_bounds(p, b1, r).ok())
        .collect();

    // Sample the ring images once; they set the extent of the canvas.
    let tau = std::f64::consts::TAU;
    let ring_points: Vec<Vec<Complex64>> = rings
        .iter()
        .map(|&r| {
            (0..ANGLES)
                .map(|j| f.eval(Complex64::from_polar(r, tau * j as f64 / ANGLES as f64)))
                .collect()
        })
        .collect();

    let mut extent = 0.0f64;
    for ring in &ring_points {
        for z in ring {
            extent = extent.max(z.re.abs()).max(z.im.abs());
        }
    }
    for b in &bounds {
        extent = extent.max(b.upper);
    }
    if let Some(c) = covering {
        extent = extent.max(c);
    }
    let extent = (extent * 1.08).max(1e-3);
    let scale = SIZE / 2.0 / extent;
    let mid = SIZE / 2.0;
    let sx = |x: f64| fmt6(mid + scale * x);
    let sy = |y: f64| fmt6(mid - scale * y);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SIZE
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{s}" height="{s}" fill="white"/>"#,
        s = SIZE
    );
    // Axes.
    let _ = writeln!(
        svg,
        r##"<line x1="0" y1="{m}" x2="{s}" y2="{m}" stroke="#dddddd" stroke-width="1"/>"##,
        m = fmt6(mid),
        s = SIZE
    );
    let _ = writeln!(
        svg,
        r##"<line x1="{m}" y1="0" x2="{m}" y2="{s}" stroke="#dddddd" stroke-width="1"/>"##,
        m = fmt6(mid),
        s = SIZE
    );

    // Distortion annuli: dashed circles at the lower and upper envelope.
    for b in &bounds {
        for (radius, dash) in [(b.lower, "6 4"), (b.upper, "2 4")] {
            if radius <= 0.0 {
                continue;
            }
            let _ = writeln!(
                svg,
                r##"<circle cx="{m}" cy="{m}" r="{r}" fill="none" stroke="#999999" stroke-width="1" stroke-dasharray="{dash}"/>"##,
                m = fmt6(mid),
                r = fmt6(scale * radius),
            );
        }
    }

    // Covering disc.
    if let Some(c) = covering {
        let _ = writeln!(
            svg,
            r##"<circle cx="{m}" cy="{m}" r="{r}" fill="none" stroke="#d62828" stroke-width="2"/>"##,
            m = fmt6(mid),
            r = fmt6(scale * c),
        );
    }

    // Image rings as closed polylines.
    for (i, ring) in ring_points.iter().enumerate() {
        let color = RING_COLORS[i % RING_COLORS.len()];
        let mut points = String::new();
        for z in ring.iter().chain(ring.first()) {
            let _ = write!(points, "{},{} ", sx(z.re), sy(z.im));
        }
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            points.trim_end(),
        );
    }

    // Origin marker and caption.
    let _ = writeln!(
        svg,
        r##"<circle cx="{m}" cy="{m}" r="2.5" fill="#d62828"/>"##,
        m = fmt6(mid),
    );
    let _ = writeln!(
        svg,
        r#"<text x="12" y="24" font-family="monospace" font-size="14">q={} m={} alpha={} b1={}</text>"#,
        fmt6(p.q.get()),
        p.m,
        fmt6(p.alpha),
        fmt6(b1),
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
