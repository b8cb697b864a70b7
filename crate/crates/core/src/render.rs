//! ASCII and SVG pictures of instances and solutions.

use crate::letterboxed::LetterBoxedPuzzle;
use crate::pips::{Cell, PipsConstraintKind, PipsPlacement, PipsPuzzle};
use crate::strands::flowfree::FlowFreeInstance;
use crate::strands::{StrandsInstance, StrandsPartition};
use crate::tiles::TilesInstance;
use std::collections::HashMap;
use std::fmt::Write;

const UNIT: i64 = 40;

fn label(i: usize) -> char {
    const L: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    L[i % L.len()] as char
}

pub fn letterboxed_ascii(p: &LetterBoxedPuzzle) -> String {
    let mut s = String::new();
    for (i, side) in p.sides().iter().enumerate() {
        let names: Vec<&str> = side.iter().map(|&x| p.symbol_name(x)).collect();
        writeln!(s, "side {}: {}", i + 1, names.join(" ")).unwrap();
    }
    for i in 0..p.dictionary().len() {
        writeln!(s, "word {i}: {}", p.word_string(i)).unwrap();
    }
    s
}

fn kind_text(k: PipsConstraintKind) -> String {
    match k {
        PipsConstraintKind::Eq => "=".into(),
        PipsConstraintKind::Neq => "!=".into(),
        PipsConstraintKind::SumEq(n) => n.to_string(),
        PipsConstraintKind::SumLt(n) => format!("<{n}"),
        PipsConstraintKind::SumGt(n) => format!(">{n}"),
    }
}

fn bounds(cells: &[Cell]) -> (i64, i64, i64, i64) {
    let x0 = cells.iter().map(|c| c.x).min().unwrap_or(0);
    let x1 = cells.iter().map(|c| c.x).max().unwrap_or(-1);
    let y0 = cells.iter().map(|c| c.y).min().unwrap_or(0);
    let y1 = cells.iter().map(|c| c.y).max().unwrap_or(-1);
    (x0, x1, y0, y1)
}

/// Board cells show the region letter (`.` outside regions), or the pip
/// value when a placement is given; off-board positions are blank.
pub fn pips_ascii(p: &PipsPuzzle, placement: Option<&PipsPlacement>) -> String {
    let region: HashMap<Cell, usize> =
        p.constraints().iter().enumerate().flat_map(|(i, c)| c.region.iter().map(move |&x| (x, i))).collect();
    let values = placement.map(|pl| pl.cell_values());
    let (x0, x1, y0, y1) = bounds(p.cells());
    let mut s = String::new();
    for y in y0..=y1 {
        let mut line = String::new();
        for x in x0..=x1 {
            let c = Cell::new(x, y);
            let ch = if !p.contains(c) {
                ' '
            } else if let Some(v) = values.as_ref().and_then(|v| v.get(&c)) {
                char::from_digit((*v % 36) as u32, 36).unwrap()
            } else {
                region.get(&c).map_or('.', |&i| label(i))
            };
            line.push(ch);
        }
        writeln!(s, "{}", line.trim_end()).unwrap();
    }
    for (i, c) in p.constraints().iter().enumerate() {
        writeln!(s, "{}: {}", label(i), kind_text(c.kind)).unwrap();
    }
    let dominoes: Vec<String> = p.dominoes().iter().map(|(a, b)| format!("{a}|{b}")).collect();
    writeln!(s, "dominoes: {}", dominoes.join(" ")).unwrap();
    s
}

/// Unit squares, region outlines, and domino outlines when solved.
pub fn pips_svg(p: &PipsPuzzle, placement: Option<&PipsPlacement>) -> String {
    let (x0, x1, y0, y1) = bounds(p.cells());
    let (w, h) = ((x1 - x0 + 1).max(0) * UNIT, (y1 - y0 + 1).max(0) * UNIT);
    let px = |c: Cell| ((c.x - x0) * UNIT, (c.y - y0) * UNIT);
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
    for &c in p.cells() {
        let (x, y) = px(c);
        writeln!(s, r##"<rect x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" fill="#f4efe6" stroke="#999"/>"##).unwrap();
    }
    for (i, con) in p.constraints().iter().enumerate() {
        let hue = (i * 67) % 360;
        for &c in &con.region {
            let (x, y) = px(c);
            writeln!(
                s,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="hsl({hue},60%,80%)" stroke="hsl({hue},60%,35%)" stroke-dasharray="4 2"/>"#,
                x + 2,
                y + 2,
                UNIT - 4,
                UNIT - 4
            )
            .unwrap();
        }
        if let Some(&c) = con.region.first() {
            let (x, y) = px(c);
            writeln!(s, r#"<text x="{}" y="{}" font-size="10">{}</text>"#, x + 4, y + 12, xml(&kind_text(con.kind)))
                .unwrap();
        }
    }
    if let Some(pl) = placement {
        for piece in &pl.pieces {
            let (ax, ay) = px(piece.cell_a);
            let (bx, by) = px(piece.cell_b);
            let (x, y) = (ax.min(bx), ay.min(by));
            let (pw, ph) = ((ax - bx).abs() + UNIT, (ay - by).abs() + UNIT);
            writeln!(
                s,
                r#"<rect x="{}" y="{}" width="{}" height="{}" rx="6" fill="none" stroke="black" stroke-width="2"/>"#,
                x + 3,
                y + 3,
                pw - 6,
                ph - 6
            )
            .unwrap();
            for (c, v) in [(piece.cell_a, piece.value_a), (piece.cell_b, piece.value_b)] {
                let (x, y) = px(c);
                writeln!(s, r#"<text x="{}" y="{}" font-size="16" text-anchor="middle">{v}</text>"#, x + UNIT / 2, y + UNIT * 2 / 3)
                    .unwrap();
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

fn cell_width(inst: &StrandsInstance) -> usize {
    inst.alphabet().iter().map(|a| a.chars().count()).max().unwrap_or(1)
}

/// The letter grid, followed by a piece-number grid when a partition is
/// given.
pub fn strands_ascii(inst: &StrandsInstance, partition: Option<&StrandsPartition>) -> String {
    let w = cell_width(inst);
    let mut s = String::new();
    for r in 0..inst.rows() {
        let row: Vec<String> =
            (0..inst.cols()).map(|c| format!("{:>w$}", inst.alphabet()[inst.at((r, c))])).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    if let Some(p) = partition {
        let owner = p.owner_map();
        let pw = p.pieces.len().to_string().len();
        s.push('\n');
        for r in 0..inst.rows() {
            let row: Vec<String> = (0..inst.cols())
                .map(|c| owner.get(&(r, c)).map_or(format!("{:>pw$}", "?"), |i| format!("{i:>pw$}")))
                .collect();
            writeln!(s, "{}", row.join(" ")).unwrap();
        }
        for (i, piece) in p.pieces.iter().enumerate() {
            writeln!(s, "{i}: {}", inst.word_string(piece.word)).unwrap();
        }
    }
    s
}

/// Lettered cells with one polyline per piece.
pub fn strands_svg(inst: &StrandsInstance, partition: Option<&StrandsPartition>) -> String {
    let u = UNIT as usize;
    let (w, h) = (inst.cols() * u, inst.rows() * u);
    let centre = |(r, c): (usize, usize)| (c * u + u / 2, r * u + u / 2);
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
    if let Some(p) = partition {
        for (i, piece) in p.pieces.iter().enumerate() {
            let pts: Vec<String> = piece.cells.iter().map(|&c| centre(c)).map(|(x, y)| format!("{x},{y}")).collect();
            writeln!(
                s,
                r#"<polyline points="{}" fill="none" stroke="hsl({},55%,70%)" stroke-width="14" stroke-linecap="round" stroke-linejoin="round"/>"#,
                pts.join(" "),
                (i * 67) % 360
            )
            .unwrap();
        }
    }
    for r in 0..inst.rows() {
        for c in 0..inst.cols() {
            let (x, y) = centre((r, c));
            writeln!(
                s,
                r#"<text x="{x}" y="{}" font-size="16" text-anchor="middle">{}</text>"#,
                y + 6,
                xml(&inst.alphabet()[inst.at((r, c))])
            )
            .unwrap();
        }
    }
    s.push_str("</svg>\n");
    s
}

pub fn tiles_ascii(inst: &TilesInstance) -> String {
    let mut s = String::new();
    for t in 0..inst.tiles().len() {
        writeln!(s, "tile {t}: {{{}}}", inst.tile_names(t).join(", ")).unwrap();
    }
    s
}

/// Terminals by colour initial, free cells as `.`.
pub fn flowfree_ascii(inst: &FlowFreeInstance) -> String {
    let mut grid = vec![vec![".".to_string(); inst.cols()]; inst.rows()];
    for p in inst.pairs() {
        for c in [p.a, p.b] {
            grid[c.0][c.1] = p.color.clone();
        }
    }
    let w = grid.iter().flatten().map(|x| x.chars().count()).max().unwrap_or(1);
    grid.iter().map(|row| row.iter().map(|x| format!("{x:>w$}")).collect::<Vec<_>>().join(" ") + "\n").collect()
}

fn xml(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pips::{solve_pips, PipsConstraint};
    use crate::strands::flowfree::FlowPair;
    use crate::strands::{generate::random_planted, solve_strands};

    #[test]
    fn pips_pictures() {
        let p = PipsPuzzle::new(
            vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1)],
            vec![(2, 2), (5, 5)],
            vec![PipsConstraint { region: vec![Cell::new(0, 0), Cell::new(1, 0)], kind: PipsConstraintKind::SumLt(5) }],
        )
        .unwrap();
        assert_eq!(pips_ascii(&p, None), "aa\n .\na: <5\ndominoes: 2|2 5|5\n");
        let svg = pips_svg(&p, None);
        assert!(svg.starts_with("<svg") && svg.contains("&lt;5"));
    }

    #[test]
    fn solved_pips_shows_values() {
        let p = PipsPuzzle::new(crate::pips::rectangle(2, 1), vec![(3, 4)], vec![]).unwrap();
        let sol = solve_pips(&p).found().unwrap();
        assert!(pips_ascii(&p, Some(&sol)).starts_with("34\n") || pips_ascii(&p, Some(&sol)).starts_with("43\n"));
        assert_eq!(pips_svg(&p, Some(&sol)).matches("rx=\"6\"").count(), 1);
    }

    #[test]
    fn strands_pictures() {
        let inst = random_planted(2, 3, 2, 3, 1);
        let sol = solve_strands(&inst, false).found().unwrap();
        let text = strands_ascii(&inst, Some(&sol));
        assert_eq!(text.lines().take(2).filter(|l| l.len() == 5).count(), 2);
        assert_eq!(strands_svg(&inst, Some(&sol)).matches("<polyline").count(), sol.pieces.len());
    }

    #[test]
    fn flowfree_and_tiles_text() {
        let f = FlowFreeInstance::new(1, 3, vec![FlowPair { color: "R".into(), a: (0, 0), b: (0, 2) }]).unwrap();
        assert_eq!(flowfree_ascii(&f), "R . R\n");
        let t = TilesInstance::from_masks(&[3, 1]);
        assert_eq!(tiles_ascii(&t), "tile 0: {f0, f1}\ntile 1: {f0}\n");
    }
}
