use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Bool(bool),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Float)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Float(v) => Some(v),
            Cell::Int(v) => Some(v as f64),
            _ => None,
        }
    }

    fn write_to<W: Write>(&self, out: &mut W) -> io::Result<()> {
        match *self {
            // 17 significant digits round-trip any f64
            Cell::Float(v) => write!(out, "{v:.16e}"),
            Cell::Int(v) => write!(out, "{v}"),
            Cell::Bool(v) => write!(out, "{}", u8::from(v)),
            Cell::Empty => Ok(()),
        }
    }
}

/// A table of results plus `#` comment lines describing how it was produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub header: Vec<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub total_points: usize,
    /// Grid points at which the analytic route had no valid `λ` root.
    pub failed_points: usize,
}

impl Dataset {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    /// Values of one column, `None` for empty cells.
    pub fn values(&self, name: &str) -> Vec<Option<f64>> {
        let k = self
            .column(name)
            .unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().map(|r| r[k].as_f64()).collect()
    }

    pub fn all_points_failed(&self) -> bool {
        self.total_points > 0 && self.failed_points == self.total_points
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        for line in &self.header {
            writeln!(out, "# {line}")?;
        }
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                cell.write_to(&mut out)?;
            }
            out.write_all(b"\n")?;
        }
        out.flush()
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let d = Dataset {
            header: vec!["anisorabi test".into()],
            columns: vec!["g", "e", "ok", "k"],
            rows: vec![
                vec![
                    Cell::Float(0.1),
                    Cell::Empty,
                    Cell::Bool(true),
                    Cell::Int(-1),
                ],
                vec![
                    Cell::Float(-2.5e-20),
                    Cell::Float(1.0),
                    Cell::Bool(false),
                    Cell::Int(3),
                ],
            ],
            total_points: 2,
            failed_points: 1,
        };
        let s = d.to_csv_string();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "# anisorabi test");
        assert_eq!(lines[1], "g,e,ok,k");
        assert_eq!(lines[2], "1.0000000000000001e-1,,1,-1");
        assert_eq!(lines[3], "-2.4999999999999999e-20,1.0000000000000000e0,0,3");
        assert!(!d.all_points_failed());
        assert_eq!(d.values("e"), vec![None, Some(1.0)]);
    }

    #[test]
    fn floats_round_trip() {
        for v in [
            0.1,
            1.0 / 3.0,
            -0.3247635444975777,
            6.02e23,
            f64::MIN_POSITIVE,
        ] {
            let mut s = Vec::new();
            Cell::Float(v).write_to(&mut s).unwrap();
            let back: f64 = String::from_utf8(s).unwrap().parse().unwrap();
            assert_eq!(back, v);
        }
    }
}
