//! The polygon text format: `(x1,y1);(x2,y2);...` with coordinates written
//! as `int` or `int/posint`. Whitespace is ignored everywhere. Parsing
//! normalizes to the canonical counterclockwise vertex order.

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, RationalPoint};
use crate::rational::{Int, Rational};

use num_traits::Signed;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            got => Err(Error::Parse {
                offset: self.pos,
                message: format!(
                    "expected '{}', found {}",
                    c as char,
                    got.map_or("end of input".to_string(), |g| format!("'{}'", g as char))
                ),
            }),
        }
    }

    fn integer(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_from = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_from {
            return Err(Error::Parse {
                offset: start,
                message: "expected an integer".into(),
            });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<Int>().map_err(|e| Error::Parse {
            offset: start,
            message: e.to_string(),
        })
    }

    fn rational(&mut self) -> Result<Rational> {
        let start = self.pos;
        let numer = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom = self.integer()?;
            if !denom.is_positive() {
                return Err(Error::Parse {
                    offset: start,
                    message: "denominator must be positive".into(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn point(&mut self) -> Result<RationalPoint> {
        self.expect(b'(')?;
        let x = self.rational()?;
        self.expect(b',')?;
        let y = self.rational()?;
        self.expect(b')')?;
        Ok(RationalPoint::new(x, y))
    }
}

/// Parses a polygon in the text format, normalizing vertex order.
pub fn parse_polygon(text: &str) -> Result<ConvexPolygon> {
    let mut sc = Scanner::new(text);
    let mut points = vec![sc.point()?];
    while sc.peek() == Some(b';') {
        sc.pos += 1;
        if sc.peek().is_none() {
            break; // trailing separator
        }
        points.push(sc.point()?);
    }
    if let Some(c) = sc.peek() {
        return Err(Error::Parse {
            offset: sc.pos,
            message: format!("unexpected character '{}'", c as char),
        });
    }
    ConvexPolygon::from_points(points)
}

/// Renders a polygon in the text format; inverse of [`parse_polygon`] on
/// normalized polygons.
pub fn format_polygon(p: &ConvexPolygon) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn parse_examples() {
        let t = parse_polygon("(0,0);(2,0);(0,1/2)").unwrap();
        assert_eq!(t.denominator_u64(), 2);
        assert_eq!(t.vertices().len(), 3);

        let t2 = parse_polygon("(0,1); (1,-1); (3/2, 0)").unwrap();
        assert_eq!(t2.vertices()[2].x, rat(3, 2));

        assert!(matches!(
            parse_polygon("(0,0);(1,0)"),
            Err(Error::DegenerateInput(_))
        ));
        match parse_polygon("(0,0);(1,0);(0 1)") {
            Err(Error::Parse { offset, .. }) => assert!(offset > 0),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        for text in ["(0,0);(2,0);(0,1/2)", "(0,1);(1,-1);(3/2,0)"] {
            let p = parse_polygon(text).unwrap();
            assert_eq!(parse_polygon(&format_polygon(&p)).unwrap(), p);
        }
    }
}
