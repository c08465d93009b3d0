//! Plain-text point files.
//!
//! One point per line as two whitespace-separated rationals (`-2`, `4/3`,
//! `-2/3`). Blank lines are skipped and `#` starts a comment.

use crate::error::{Error, Result};
use crate::geometry::{parse_rational, Point};

pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let [x, y] = fields[..] else {
            return Err(Error::Parse(idx + 1));
        };
        match (parse_rational(x), parse_rational(y)) {
            (Some(x), Some(y)) => points.push(Point::new(x, y)),
            _ => return Err(Error::Parse(idx + 1)),
        }
    }
    Ok(points)
}

pub fn write_points(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    #[test]
    fn parse_examples() {
        let pts = parse_points("-2 0\n2 0\n0 4/3\n").unwrap();
        assert_eq!(
            pts,
            vec![
                Point::int(-2, 0),
                Point::int(2, 0),
                Point::new(int(0), rat(4, 3))
            ]
        );
        assert_eq!(parse_points("# hdr\n1 1\n\n2 2\n3 0\n").unwrap().len(), 3);
        assert_eq!(parse_points("1 x\n"), Err(Error::Parse(1)));
        assert_eq!(parse_points("0 0\n1 2 3\n"), Err(Error::Parse(2)));
        assert_eq!(parse_points("0 0\n\n5\n"), Err(Error::Parse(3)));
        assert_eq!(
            parse_points("1 1 # trailing\n\t-1/2   3\r\n")
                .unwrap()
                .len(),
            2
        );
        assert_eq!(Error::Parse(1).to_string(), "parse error line 1");
    }

    #[test]
    fn write_example() {
        assert_eq!(write_points(&[Point::new(int(0), rat(4, 3))]), "0 4/3\n");
        assert_eq!(write_points(&[Point::new(rat(6, -4), int(2))]), "-3/2 2\n");
    }
}
