//! Two-matrix certificate: a role per cell (start, end, continuation) and
//! the step direction out of every non-final cell.

use super::{Direction, GridCell, StrandsInstance, StrandsPartition, StrandsPlacement};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellRole {
    Start,
    End,
    Continue,
}

impl CellRole {
    pub fn letter(self) -> char {
        match self {
            CellRole::Start => 'S',
            CellRole::End => 'E',
            CellRole::Continue => 'C',
        }
    }

    pub fn from_letter(c: char) -> Option<CellRole> {
        match c {
            'S' => Some(CellRole::Start),
            'E' => Some(CellRole::End),
            'C' => Some(CellRole::Continue),
            _ => None,
        }
    }
}

/// A one-cell word is a `Start` with no direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub v1: Vec<Vec<CellRole>>,
    pub v2: Vec<Vec<Option<Direction>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("cell ({}, {}) is not covered exactly once", .0.0, .0.1)]
    Coverage(GridCell),
    #[error("certificate is {rows}x{cols}, grid differs")]
    Dimensions { rows: usize, cols: usize },
    #[error("path from ({}, {}) is broken", .0.0, .0.1)]
    BrokenPath(GridCell),
    #[error("path from ({}, {}) spells no dictionary word", .0.0, .0.1)]
    UnknownWord(GridCell),
}

pub fn export_certificate(
    inst: &StrandsInstance,
    partition: &StrandsPartition,
) -> Result<Certificate, CertificateError> {
    let (rows, cols) = (inst.rows(), inst.cols());
    let mut v1 = vec![vec![None; cols]; rows];
    let mut v2 = vec![vec![None; cols]; rows];
    for p in &partition.pieces {
        let last = p.cells.len().saturating_sub(1);
        for (i, &c) in p.cells.iter().enumerate() {
            if !inst.in_grid(c) || v1[c.0][c.1].is_some() {
                return Err(CertificateError::Coverage(c));
            }
            v1[c.0][c.1] = Some(match i {
                0 => CellRole::Start,
                _ if i == last => CellRole::End,
                _ => CellRole::Continue,
            });
            if i < last {
                let d = Direction::between(c, p.cells[i + 1]).ok_or(CertificateError::BrokenPath(p.cells[0]))?;
                v2[c.0][c.1] = Some(d);
            }
        }
    }
    let v1 = v1
        .into_iter()
        .enumerate()
        .map(|(r, row)| {
            row.into_iter()
                .enumerate()
                .map(|(c, x)| x.ok_or(CertificateError::Coverage((r, c))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Certificate { v1, v2 })
}

/// Rebuilds the partition, pieces ordered by start cell.
pub fn import_certificate(inst: &StrandsInstance, cert: &Certificate) -> Result<StrandsPartition, CertificateError> {
    let (rows, cols) = (inst.rows(), inst.cols());
    let dims_ok = cert.v1.len() == rows
        && cert.v2.len() == rows
        && cert.v1.iter().all(|r| r.len() == cols)
        && cert.v2.iter().all(|r| r.len() == cols);
    if !dims_ok {
        return Err(CertificateError::Dimensions { rows: cert.v1.len(), cols: cert.v1.first().map_or(0, Vec::len) });
    }
    let mut seen = vec![vec![false; cols]; rows];
    let mut pieces = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if cert.v1[r][c] != CellRole::Start {
                continue;
            }
            let start = (r, c);
            let mut cells = vec![start];
            seen[r][c] = true;
            let mut cur = start;
            while let Some(d) = cert.v2[cur.0][cur.1] {
                let (dr, dc) = d.delta();
                let next = cur
                    .0
                    .checked_add_signed(dr)
                    .zip(cur.1.checked_add_signed(dc))
                    .filter(|&n| inst.in_grid(n))
                    .ok_or(CertificateError::BrokenPath(start))?;
                if seen[next.0][next.1] || cert.v1[next.0][next.1] == CellRole::Start {
                    return Err(CertificateError::BrokenPath(start));
                }
                seen[next.0][next.1] = true;
                cells.push(next);
                cur = next;
            }
            let role = cert.v1[cur.0][cur.1];
            if cells.len() > 1 && role != CellRole::End {
                return Err(CertificateError::BrokenPath(start));
            }
            let spelled: Vec<_> = cells.iter().map(|&x| inst.at(x)).collect();
            let word = inst.word_index(&spelled).ok_or(CertificateError::UnknownWord(start))?;
            pieces.push(StrandsPlacement { word, cells });
        }
    }
    for (r, row) in seen.iter().enumerate() {
        if let Some(c) = row.iter().position(|&s| !s) {
            return Err(CertificateError::Coverage((r, c)));
        }
    }
    Ok(StrandsPartition { pieces })
}
