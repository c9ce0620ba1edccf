//! Ring-spec and element-literal parsers.
//!
//! Ring specs: `zn(<n>)`, `gauss(<n>)`, `mat(<k>, <base>, transpose|conjtranspose)`.
//! Element literals: an integer for `zn`, `(a,b)` for `gauss`, and
//! `[[r00,r01],[r10,r11]]` (row-major, entries being base literals) for
//! matrices. Integers may be negative and are reduced modulo the base modulus.

use crate::error::{Error, Result};
use crate::ring::{
    make_gauss, make_matrix_ring, make_zn, Base, Elem, Involution, RingKind, StarRing, Value,
};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Literal {
    Int(i64),
    Pair(i64, i64),
    Matrix(Vec<Vec<Literal>>),
}

struct Cursor<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Cursor<'s> {
    fn new(src: &'s str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(got) => self.err(format!("expected `{c}`, found `{got}`")),
            None => self.err(format!("expected `{c}`, found end of input")),
        }
    }

    fn ident(&mut self) -> Result<&'s str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '-')
            .map(char::len_utf8)
            .sum::<usize>();
        if len == 0 {
            return self.err("expected an identifier");
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let sign = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign..]
            .chars()
            .take_while(char::is_ascii_digit)
            .count();
        if digits == 0 {
            return self.err("expected an integer");
        }
        let text = &rest[..sign + digits];
        match text.parse::<i64>() {
            Ok(v) => {
                self.pos += text.len();
                Ok(v)
            }
            Err(_) => self.err(format!("integer `{text}` out of range")),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected trailing `{c}`")),
        }
    }
}

/// Parses a ring spec such as `mat(2,zn(5),transpose)`.
pub fn parse_ring(spec: &str) -> Result<StarRing> {
    let mut cur = Cursor::new(spec);
    let ring = ring_expr(&mut cur)?;
    cur.finish()?;
    Ok(ring)
}

fn ring_expr(cur: &mut Cursor<'_>) -> Result<StarRing> {
    let start = cur.pos;
    let name = cur.ident()?;
    cur.expect('(')?;
    let located = |e: Error| match e {
        Error::InvalidParameter(msg) => Error::Parse { pos: start, msg },
        other => other,
    };
    let ring = match name {
        "zn" | "gauss" => {
            let n = cur.integer()?;
            if n < 0 {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("modulus must be positive, got {n}"),
                });
            }
            if name == "zn" {
                make_zn(n as u64).map_err(located)?
            } else {
                make_gauss(n as u64).map_err(located)?
            }
        }
        "mat" => {
            let k = cur.integer()?;
            if k < 1 {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("matrix dimension must be >= 1, got {k}"),
                });
            }
            cur.expect(',')?;
            let base = ring_expr(cur)?;
            cur.expect(',')?;
            let inv_pos = cur.pos;
            let involution = match cur.ident()? {
                "transpose" => Involution::Transpose,
                "conjtranspose" => Involution::ConjugateTranspose,
                other => {
                    return Err(Error::Parse {
                        pos: inv_pos,
                        msg: format!("unknown involution `{other}` (transpose|conjtranspose)"),
                    })
                }
            };
            make_matrix_ring(&base, k as usize, involution).map_err(located)?
        }
        other => {
            return Err(Error::Parse {
                pos: start,
                msg: format!("unknown ring constructor `{other}` (zn|gauss|mat)"),
            })
        }
    };
    cur.expect(')')?;
    Ok(ring)
}

fn literal(cur: &mut Cursor<'_>) -> Result<Literal> {
    match cur.peek() {
        Some('(') => {
            cur.expect('(')?;
            let a = cur.integer()?;
            cur.expect(',')?;
            let b = cur.integer()?;
            cur.expect(')')?;
            Ok(Literal::Pair(a, b))
        }
        Some('[') => {
            cur.expect('[')?;
            let mut rows = Vec::new();
            loop {
                cur.expect('[')?;
                let mut row = vec![literal(cur)?];
                while cur.peek() == Some(',') {
                    cur.expect(',')?;
                    row.push(literal(cur)?);
                }
                cur.expect(']')?;
                rows.push(row);
                if cur.peek() == Some(',') {
                    cur.expect(',')?;
                } else {
                    break;
                }
            }
            cur.expect(']')?;
            Ok(Literal::Matrix(rows))
        }
        _ => Ok(Literal::Int(cur.integer()?)),
    }
}

fn reduce(v: i64, n: u32) -> u32 {
    v.rem_euclid(n as i64) as u32
}

fn to_value(lit: &Literal, base: Base) -> Option<Value> {
    match (lit, base) {
        (Literal::Int(v), Base::Zn(n)) => Some(Value::Residue(reduce(*v, n))),
        (Literal::Pair(a, b), Base::Gauss(n)) => Some(Value::Gauss(reduce(*a, n), reduce(*b, n))),
        _ => None,
    }
}

/// Parses an element literal against `ring`.
pub fn parse_elem(ring: &StarRing, text: &str) -> Result<Elem> {
    let mut cur = Cursor::new(text);
    let lit = literal(&mut cur)?;
    cur.finish()?;
    let mismatch = |msg: &str| Error::ElementMismatch {
        ring: ring.to_string(),
        msg: msg.to_string(),
    };
    let value = match (ring.kind(), &lit) {
        (RingKind::Zn(n), _) => to_value(&lit, Base::Zn(n)),
        (RingKind::Gauss(n), _) => to_value(&lit, Base::Gauss(n)),
        (RingKind::Matrix { base, .. }, Literal::Matrix(rows)) => rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| to_value(e, base))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()
            .map(Value::Matrix),
        (RingKind::Matrix { .. }, _) => None,
    };
    let value = value.ok_or_else(|| {
        mismatch(match ring.kind() {
            RingKind::Zn(_) => "expected an integer literal",
            RingKind::Gauss(_) => "expected a Gaussian literal (a,b)",
            RingKind::Matrix {
                base: Base::Zn(_), ..
            } => "expected a matrix literal with integer entries",
            RingKind::Matrix { .. } => "expected a matrix literal with (a,b) entries",
        })
    })?;
    ring.encode(&value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ring_specs() {
        assert_eq!(parse_ring("zn(6)").unwrap().size(), 6);
        assert_eq!(parse_ring(" gauss( 3 ) ").unwrap().size(), 9);
        let m = parse_ring("mat(2, zn(5), transpose)").unwrap();
        assert_eq!(m.size(), 625);
        assert_eq!(m.spec(), "mat(2,zn(5),transpose)");
        let g = parse_ring("mat(2,gauss(3),conjtranspose)").unwrap();
        assert_eq!(g.size(), 6561);
    }

    #[test]
    fn ring_spec_errors_carry_positions() {
        match parse_ring("zn(1)") {
            Err(Error::Parse { pos: 0, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_ring("mat(2,zn(3),flip)") {
            Err(Error::Parse { pos: 12, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_ring("zn(4") {
            Err(Error::Parse { pos: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_ring("mat(2,zn(3),conjtranspose)").is_err());
        assert!(parse_ring("mat(2,mat(2,zn(2),transpose),transpose)").is_err());
        assert!(parse_ring("zn(7) extra").is_err());
        assert!(parse_ring("zn(2000000)").is_err());
    }

    #[test]
    fn parses_element_literals() {
        let z6 = parse_ring("zn(6)").unwrap();
        assert_eq!(parse_elem(&z6, "5").unwrap().index(), 5);
        assert_eq!(parse_elem(&z6, "-1").unwrap().index(), 5);
        let g3 = parse_ring("gauss(3)").unwrap();
        assert_eq!(parse_elem(&g3, "(1,2)").unwrap().index(), 5);
        let m = parse_ring("mat(2,zn(5),transpose)").unwrap();
        let a = parse_elem(&m, "[[1,2],[2,4]]").unwrap();
        assert_eq!(m.show(a), "[[1,2],[2,4]]");
        let mg = parse_ring("mat(2,gauss(3),conjtranspose)").unwrap();
        let b = parse_elem(&mg, "[[(1,0),(0,1)],[(0,0),(2,2)]]").unwrap();
        assert_eq!(mg.show(b), "[[(1,0),(0,1)],[(0,0),(2,2)]]");
    }

    #[test]
    fn element_shape_mismatch() {
        let z6 = parse_ring("zn(6)").unwrap();
        assert!(matches!(
            parse_elem(&z6, "[[1,0],[0,0]]"),
            Err(Error::ElementMismatch { .. })
        ));
        let m = parse_ring("mat(2,zn(2),transpose)").unwrap();
        assert!(matches!(
            parse_elem(&m, "1"),
            Err(Error::ElementMismatch { .. })
        ));
        assert!(matches!(
            parse_elem(&m, "[[1,0,1],[0,0,0]]"),
            Err(Error::ElementMismatch { .. })
        ));
        assert!(matches!(
            parse_elem(&m, "[[1,0],[0"),
            Err(Error::Parse { .. })
        ));
    }
}
