//! Lattice-path picture of a column strict filling.
//!
//! Each row `r` of `F` is a grid column (row 1 rightmost) and each entry
//! value `v` is a horizontal band (value 1 on top). Column `c` of `F` is a
//! path that enters grid column `r` from the right at level `F(r, c)`, turns
//! down at its own offset (offsets increase with `c`), and leaves at level
//! `F(r + 1, c)`, or runs to the bottom when the column ends.
//!
//! A crossing is an entry horizontal passing through another path's vertical
//! strictly inside that vertical's span; a non-crossing is an entry
//! horizontal stopping short of such a vertical. Horizontals at equal levels
//! share a height, so ties are neither.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fillings::Filling;

const CELL_W: f64 = 60.0;
const CELL_H: f64 = 40.0;
const MARGIN: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Vertical {
    pub column: usize,
    pub row: usize,
    pub x: f64,
    pub top: f64,
    pub bottom: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Horizontal {
    pub column: usize,
    pub row: usize,
    pub y: f64,
    /// Right end (the grid column's right edge).
    pub from: f64,
    /// Left end (the turning point).
    pub to: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossing {
    /// Column whose horizontal passes through.
    pub horizontal: usize,
    /// Column whose vertical is crossed.
    pub vertical: usize,
    pub row: usize,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeDiagram {
    pub n: usize,
    pub rows: usize,
    pub columns: usize,
    pub verticals: Vec<Vertical>,
    pub entries: Vec<Horizontal>,
    pub crossings: Vec<Crossing>,
    pub non_crossings: Vec<Crossing>,
}

fn level_y(v: usize) -> f64 {
    (v as f64 - 0.5) * CELL_H
}

impl LatticeDiagram {
    pub fn new(f: &Filling) -> Result<LatticeDiagram> {
        if !f.is_csf() {
            return Err(Error::NotColumnStrict);
        }
        let n = f.n();
        let rows = f.rows().len();
        let columns = f.rows().first().map_or(0, Vec::len);
        let bottom = n as f64 * CELL_H;
        let mut verticals = Vec::new();
        let mut entries = Vec::new();
        for (ri, row) in f.rows().iter().enumerate() {
            let left = (rows - 1 - ri) as f64 * CELL_W;
            for (ci, &v) in row.iter().enumerate() {
                let x = left + CELL_W * (ci + 1) as f64 / (columns + 1) as f64;
                let next = f.rows().get(ri + 1).and_then(|r| r.get(ci)).copied();
                verticals.push(Vertical {
                    column: ci + 1,
                    row: ri + 1,
                    x,
                    top: level_y(v),
                    bottom: next.map_or(bottom, level_y),
                });
                entries.push(Horizontal {
                    column: ci + 1,
                    row: ri + 1,
                    y: level_y(v),
                    from: left + CELL_W,
                    to: x,
                });
            }
        }
        let mut crossings = Vec::new();
        let mut non_crossings = Vec::new();
        for h in &entries {
            for v in verticals
                .iter()
                .filter(|v| v.row == h.row && v.column != h.column)
            {
                if !(v.top < h.y && h.y < v.bottom) {
                    continue;
                }
                let hit = Crossing {
                    horizontal: h.column,
                    vertical: v.column,
                    row: h.row,
                    x: v.x,
                    y: h.y,
                };
                if h.to < v.x && v.x < h.from {
                    crossings.push(hit);
                } else if v.x < h.to {
                    non_crossings.push(hit);
                }
            }
        }
        Ok(LatticeDiagram {
            n,
            rows,
            columns,
            verticals,
            entries,
            crossings,
            non_crossings,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn non_crossing_count(&self) -> usize {
        self.non_crossings.len()
    }

    /// Polyline of one path, right to left.
    fn path_points(&self, column: usize) -> Vec<(f64, f64)> {
        let mut pts = Vec::new();
        for v in self.verticals.iter().filter(|v| v.column == column) {
            let h = self
                .entries
                .iter()
                .find(|h| h.column == column && h.row == v.row)
                .expect("entry for every vertical");
            if pts.is_empty() {
                pts.push((h.from, h.y));
            }
            pts.push((v.x, v.top));
            pts.push((v.x, v.bottom));
        }
        pts
    }

    pub fn to_svg(&self) -> String {
        let width = self.rows as f64 * CELL_W;
        let height = self.n as f64 * CELL_H;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
            width + 2.0 * MARGIN,
            height + 2.5 * MARGIN,
            width + 2.0 * MARGIN,
            height + 2.5 * MARGIN
        );
        let _ = writeln!(s, r#"<g transform="translate({MARGIN},{MARGIN})">"#);
        for r in 0..=self.rows {
            let x = r as f64 * CELL_W;
            let _ = writeln!(
                s,
                r##"<line x1="{x}" y1="0" x2="{x}" y2="{height}" stroke="#999"/>"##
            );
        }
        for v in 0..=self.n {
            let y = v as f64 * CELL_H;
            let _ = writeln!(
                s,
                r##"<line x1="0" y1="{y}" x2="{width}" y2="{y}" stroke="#999"/>"##
            );
        }
        for v in 1..=self.n {
            let _ = writeln!(
                s,
                r#"<text x="-12" y="{}" font-size="12" text-anchor="middle">{v}</text>"#,
                level_y(v) + 4.0
            );
        }
        for c in 1..=self.columns {
            let hue = (c - 1) * 360 / self.columns.max(1);
            let pts = self.path_points(c);
            let mut d = String::new();
            for (k, (x, y)) in pts.iter().enumerate() {
                let _ = write!(d, "{}{x:.2},{y:.2}", if k == 0 { "M" } else { " L" });
            }
            let _ = writeln!(
                s,
                r#"<path d="{d}" fill="none" stroke="hsl({hue},70%,40%)" stroke-width="2" data-column="{c}"/>"#
            );
            if let Some((x, y)) = pts.get(1) {
                let _ = writeln!(
                    s,
                    r#"<text x="{x:.2}" y="{:.2}" font-size="9" text-anchor="middle" fill="hsl({hue},70%,40%)">{c}</text>"#,
                    y - 5.0
                );
            }
        }
        for c in &self.crossings {
            let _ = writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="black"/>"#,
                c.x, c.y
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="14" text-anchor="middle">inv(F)={}</text>"#,
            width / 2.0,
            height + 1.2 * MARGIN,
            self.crossing_count()
        );
        s.push_str("</g>\n</svg>\n");
        s
    }

    /// Character picture: one text line per level plus spacer lines.
    /// Horizontals are `-`, each vertical carries its column label, and
    /// crossings are `*`.
    pub fn to_ascii(&self) -> String {
        let cw = 2 * self.columns + 2;
        let width = self.rows * cw;
        let lines = 2 * self.n;
        let mut canvas = vec![vec![' '; width]; lines];
        let line_of = |y: f64| ((y / CELL_H) * 2.0).round() as usize - 1;
        let col_of = |x: f64| {
            let cell = (x / CELL_W).floor() as usize;
            let frac = x / CELL_W - cell as f64;
            cell * cw + (frac * (self.columns + 1) as f64).round() as usize * 2 - 1
        };
        let label = |c: usize| std::char::from_digit((c % 36) as u32, 36).unwrap_or('#');
        for h in &self.entries {
            let line = line_of(h.y);
            let right = self
                .verticals
                .iter()
                .find(|v| v.column == h.column && v.row + 1 == h.row)
                .map_or(width, |v| col_of(v.x));
            for cell in canvas[line].iter_mut().take(right).skip(col_of(h.to)) {
                *cell = '-';
            }
        }
        for v in &self.verticals {
            let x = col_of(v.x);
            let top = line_of(v.top);
            let bottom = if v.bottom >= self.n as f64 * CELL_H {
                lines - 1
            } else {
                line_of(v.bottom)
            };
            for row in canvas.iter_mut().take(bottom + 1).skip(top) {
                row[x] = label(v.column);
            }
        }
        for c in &self.crossings {
            canvas[line_of(c.y)][col_of(c.x)] = '*';
        }
        let mut s = String::new();
        for (i, row) in canvas.iter().enumerate() {
            let tag = if i % 2 == 0 {
                format!("{:>3} ", i / 2 + 1)
            } else {
                "    ".to_string()
            };
            let text: String = row.iter().collect();
            let _ = writeln!(s, "{tag}{}", text.trim_end());
        }
        let _ = writeln!(s, "crossings: {}", self.crossing_count());
        let _ = writeln!(s, "non-crossings: {}", self.non_crossing_count());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillings::enumerate_csf;
    use crate::fillings::tests::{digits, sample_filling};
    use crate::partition::Partition;

    fn small_filling() -> Filling {
        digits(4, &["2112", "43"])
    }

    #[test]
    fn small_filling_crossings() {
        let d = LatticeDiagram::new(&small_filling()).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.non_crossing_count(), 2);
        let mut marks: Vec<(usize, usize, usize)> = d
            .crossings
            .iter()
            .map(|c| (c.row, c.horizontal, c.vertical))
            .collect();
        marks.sort();
        assert_eq!(marks, vec![(1, 1, 2), (1, 1, 3), (2, 1, 2)]);
    }

    #[test]
    fn svg_elements() {
        let svg = LatticeDiagram::new(&small_filling()).unwrap().to_svg();
        assert_eq!(svg.matches("<path").count(), 4);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.contains("inv(F)=3"));
    }

    #[test]
    fn single_column_has_no_crossings() {
        let d = LatticeDiagram::new(&digits(3, &["1", "2", "3"])).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.non_crossing_count(), 0);
        assert_eq!(d.to_svg().matches("<path").count(), 1);
    }

    #[test]
    fn sample_filling_counts() {
        let d = LatticeDiagram::new(&sample_filling()).unwrap();
        assert_eq!(d.crossing_count(), 5);
        assert_eq!(d.non_crossing_count(), 12);
    }

    #[test]
    fn counts_match_statistics() {
        for lambda in Partition::up_to(4, 3) {
            for f in enumerate_csf(&lambda, 3) {
                let d = LatticeDiagram::new(&f).unwrap();
                assert_eq!(d.crossing_count(), f.inv().unwrap());
                assert_eq!(d.non_crossing_count(), f.quinv().unwrap());
            }
        }
    }

    #[test]
    fn ascii_marks_crossings() {
        let text = LatticeDiagram::new(&small_filling()).unwrap().to_ascii();
        assert_eq!(text.matches('*').count(), 3);
        assert!(text.contains("crossings: 3\n"));
    }

    #[test]
    fn rejects_non_csf() {
        assert!(LatticeDiagram::new(&digits(2, &["2", "1"])).is_err());
    }
}
