//! SVG figures of lattice paths and the lines they follow.
//!
//! Styling is fixed: 40px cells, one cell of padding around everything drawn,
//! light grey grid, black paths, red lines, 14px italic labels. Output depends
//! only on the scene, so identical scenes give byte-identical documents.

use std::fmt::Write as _;

use crate::biinfinite::BiInfiniteWord;
use crate::christoffel::{christoffel_path, LatticePath, Slope, Which};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

const CELL: f64 = 40.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Label {
    pub at: (f64, f64),
    pub text: String,
}

/// Everything drawn in one figure, in lattice coordinates.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub paths: Vec<Vec<(i64, i64)>>,
    pub lines: Vec<((f64, f64), (f64, f64))>,
    pub labels: Vec<Label>,
}

impl Scene {
    pub fn is_empty(&self) -> bool {
        self.paths.is_empty() && self.lines.is_empty()
    }

    /// Labels every step of `points` with its letter, just off the step.
    pub fn label_steps(&mut self, points: &[(i64, i64)]) {
        for pair in points.windows(2) {
            let ((x0, y0), (x1, y1)) = (pair[0], pair[1]);
            let (mx, my) = ((x0 + x1) as f64 / 2.0, (y0 + y1) as f64 / 2.0);
            let (text, at) = if y0 == y1 {
                (Letter::A, (mx, my - 0.3))
            } else {
                (Letter::B, (mx + 0.2, my))
            };
            self.labels.push(Label {
                at,
                text: text.to_string(),
            });
        }
    }
}

/// The lower or upper Christoffel path of slope `q/p` with its segment.
pub fn christoffel_scene(slope: Slope, which: Which, labels: bool) -> Scene {
    let path = christoffel_path(slope, which).points();
    let mut scene = Scene {
        lines: vec![((0.0, 0.0), (slope.p() as f64, slope.q() as f64))],
        ..Scene::default()
    };
    if labels {
        scene.label_steps(&path);
    }
    scene.paths.push(path);
    scene
}

/// Two-ray construction of a doubly eventually periodic word: from the
/// origin one path spells the word rightwards from index 0, the other walks
/// backwards through indices −1, −2, …; each path is paired with a ray of
/// its tail's slope through its far end.
pub fn two_ray_scene(s: &BiInfiniteWord, periods: usize, labels: bool) -> Result<Scene> {
    let BiInfiniteWord::DoublyEventuallyPeriodic { left, center, right } = s.normalized() else {
        return Err(Error::Unresolvable("the two-ray figure needs an eventually periodic word".into()));
    };
    let periods = periods.max(1);
    let forward = s.window(0, (center.len() + periods * right.len()) as i64)?;
    let back_len = (periods * left.len()) as i64;
    let backward: Word = s.window(-back_len, 0)?.reverse();

    let right_path = LatticePath::from_word((0, 0), &forward).points();
    let left_path = LatticePath::backwards_from((0, 0), &backward);

    let mut scene = Scene::default();
    scene.lines.push(ray(&right, *right_path.last().unwrap(), 0));
    scene.lines.push(ray(&left, *left_path.last().unwrap(), 0));
    if labels {
        scene.label_steps(&right_path);
        scene.label_steps(&left_path);
    }
    scene.paths.push(left_path);
    scene.paths.push(right_path);
    Ok(scene)
}

/// Segment of slope `|w|_b / |w|_a` through `through`, spanning to abscissa `to_x`.
fn ray(w: &Word, through: (i64, i64), to_x: i64) -> ((f64, f64), (f64, f64)) {
    let (a, b) = (w.count(Letter::A) as f64, w.count(Letter::B) as f64);
    let (x, y) = (through.0 as f64, through.1 as f64);
    let end = if a == 0.0 {
        (x, 0.0)
    } else {
        (to_x as f64, y + (to_x as f64 - x) * b / a)
    };
    ((x, y), end)
}

fn fmt_num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

pub fn render_svg(scene: &Scene) -> Result<String> {
    if scene.is_empty() {
        return Err(Error::Unresolvable("nothing to draw".into()));
    }
    let xs = scene
        .paths
        .iter()
        .flatten()
        .map(|p| p.0 as f64)
        .chain(scene.lines.iter().flat_map(|(a, b)| [a.0, b.0]));
    let ys = scene
        .paths
        .iter()
        .flatten()
        .map(|p| p.1 as f64)
        .chain(scene.lines.iter().flat_map(|(a, b)| [a.1, b.1]));
    let (x0, x1) = xs.fold((f64::MAX, f64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let (y0, y1) = ys.fold((f64::MAX, f64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let (gx0, gx1) = (x0.floor() as i64 - 1, x1.ceil() as i64 + 1);
    let (gy0, gy1) = (y0.floor() as i64 - 1, y1.ceil() as i64 + 1);
    let px = |x: f64| fmt_num((x - gx0 as f64) * CELL);
    let py = |y: f64| fmt_num((gy1 as f64 - y) * CELL);
    let (w, h) = ((gx1 - gx0) as f64 * CELL, (gy1 - gy0) as f64 * CELL);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
        fmt_num(w),
        fmt_num(h)
    );
    let mut grid = String::new();
    for gx in gx0..=gx1 {
        let _ = write!(grid, "M{} 0V{}", px(gx as f64), fmt_num(h));
    }
    for gy in gy0..=gy1 {
        let _ = write!(grid, "M0 {}H{}", py(gy as f64), fmt_num(w));
    }
    let _ = writeln!(
        out,
        r##"<g class="grid" stroke="#cccccc" stroke-width="1" fill="none"><path d="{grid}"/></g>"##
    );
    for ((ax, ay), (bx, by)) in &scene.lines {
        let _ = writeln!(
            out,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#cc0000" stroke-width="1.5"/>"##,
            px(*ax),
            py(*ay),
            px(*bx),
            py(*by)
        );
    }
    for path in &scene.paths {
        let pts: Vec<String> = path
            .iter()
            .map(|&(x, y)| format!("{},{}", px(x as f64), py(y as f64)))
            .collect();
        let _ = writeln!(
            out,
            r##"<polyline points="{}" stroke="#000000" stroke-width="2.5" fill="none"/>"##,
            pts.join(" ")
        );
    }
    for label in &scene.labels {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="14" font-style="italic" text-anchor="middle">{}</text>"#,
            px(label.at.0),
            py(label.at.1),
            label.text
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biinfinite::spliced_b4;
    use crate::word::w;

    #[test]
    fn figure_one_structure() {
        let scene = christoffel_scene(Slope::new(5, 3).unwrap(), Which::Lower, true);
        let svg = render_svg(&scene).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<g ").count(), 1);
        assert_eq!(svg.matches("<text").count(), 8);
        assert_eq!(scene.paths[0].len(), 9);
        // 8 segments: 9 points
        let poly = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let pts = poly.split('"').nth(1).unwrap();
        assert_eq!(pts.split(' ').count(), 9);
        assert_eq!(svg, render_svg(&scene).unwrap());
    }

    #[test]
    fn no_labels_no_text() {
        let scene = christoffel_scene(Slope::new(5, 3).unwrap(), Which::Upper, false);
        assert!(!render_svg(&scene).unwrap().contains("<text"));
    }

    #[test]
    fn figure_two_structure() {
        let s = spliced_b4(&w("aa"), Letter::A, Letter::B).unwrap();
        let scene = two_ray_scene(&s, 2, true).unwrap();
        let svg = render_svg(&scene).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("<line").count(), 2);
        // right path: baab aaab aaab from the origin
        assert_eq!(*scene.paths[1].last().unwrap(), (8, 4));
        assert_eq!(*scene.paths[0].last().unwrap(), (-6, -2));
        // left ray through (-6,-2) with slope 1/3 reaches the origin
        assert_eq!(scene.lines[1], ((-6.0, -2.0), (0.0, 0.0)));
    }

    #[test]
    fn empty_scene_rejected() {
        assert!(render_svg(&Scene::default()).is_err());
    }
}
