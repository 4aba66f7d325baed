//! Text grammar for group specs.
//!
//! ```text
//! spec := "cyclic:" n
//!       | "dihedral:" n            (order 2n)
//!       | "sd:" n "," m "," k     (split extension of C_n by C_m, x -> x^k)
//!       | "prod:" spec "*" spec
//!       | "file:" path            (path runs to '*' or end of input)
//! ```
//!
//! Whitespace is ignored between tokens. Parse errors carry the byte
//! position and the expected token.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::group::GroupSpec;

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut cur = Cursor { text, pos: 0 };
    let spec = cur.parse_spec()?;
    cur.skip_ws();
    if cur.pos < cur.text.len() {
        return Err(cur.err("end of input"));
    }
    Ok(spec)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn err(&self, expected: &str) -> Error {
        let found: String = self.text[self.pos..].chars().take(12).collect();
        Error::Parse {
            pos: self.pos,
            expected: expected.to_string(),
            found: if found.is_empty() {
                "end of input".to_string()
            } else {
                found
            },
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(&format!("'{c}'")))
        }
    }

    fn parse_keyword(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("a spec keyword (cyclic, dihedral, sd, prod, file)"));
        }
        Ok(&self.text[start..self.pos])
    }

    fn parse_usize(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("an integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.err("an integer in range"))
    }

    fn parse_spec(&mut self) -> Result<GroupSpec> {
        let kw_pos = {
            self.skip_ws();
            self.pos
        };
        let kw = self.parse_keyword()?;
        self.expect(':')?;
        match kw {
            "cyclic" => Ok(GroupSpec::Cyclic(self.parse_usize()?)),
            "dihedral" => Ok(GroupSpec::Dihedral(self.parse_usize()?)),
            "sd" => {
                let n = self.parse_usize()?;
                self.expect(',')?;
                let m = self.parse_usize()?;
                self.expect(',')?;
                let k = self.parse_usize()?;
                Ok(GroupSpec::Semidirect { n, m, k })
            }
            "prod" => {
                let left = self.parse_spec()?;
                self.expect('*')?;
                let right = self.parse_spec()?;
                Ok(GroupSpec::DirectProduct(Box::new(left), Box::new(right)))
            }
            "file" => {
                self.skip_ws();
                let start = self.pos;
                while let Some(c) = self.peek() {
                    if c == '*' {
                        break;
                    }
                    self.pos += c.len_utf8();
                }
                let path = self.text[start..self.pos].trim();
                if path.is_empty() {
                    return Err(self.err("a file path"));
                }
                Ok(GroupSpec::ExternalTable(PathBuf::from(path)))
            }
            other => Err(Error::Parse {
                pos: kw_pos,
                expected: "one of cyclic, dihedral, sd, prod, file".to_string(),
                found: other.to_string(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_order_21_group() {
        assert_eq!(
            parse_group_spec("sd:7,3,2").unwrap(),
            GroupSpec::Semidirect { n: 7, m: 3, k: 2 }
        );
    }

    #[test]
    fn parses_trivial_group() {
        assert_eq!(parse_group_spec("cyclic:1").unwrap(), GroupSpec::Cyclic(1));
    }

    #[test]
    fn parses_product_of_cyclics() {
        let spec = parse_group_spec("prod:cyclic:4*cyclic:4").unwrap();
        assert_eq!(spec.order(), Some(16));
        assert_eq!(spec.to_string(), "prod:cyclic:4*cyclic:4");
    }

    #[test]
    fn parses_nested_products() {
        let spec = parse_group_spec("prod:prod:cyclic:2*cyclic:2*cyclic:2").unwrap();
        assert_eq!(spec.order(), Some(8));
    }

    #[test]
    fn whitespace_insensitive() {
        let spec = parse_group_spec("  sd: 7 , 3 , 2  ").unwrap();
        assert_eq!(spec, GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let spec = parse_group_spec("prod: cyclic:4 * cyclic:2").unwrap();
        assert_eq!(spec.order(), Some(8));
    }

    #[test]
    fn errors_carry_position_and_expectation() {
        let err = parse_group_spec("sd:7,3").unwrap_err();
        match err {
            crate::error::Error::Parse { pos, expected, .. } => {
                assert_eq!(pos, 6);
                assert!(expected.contains("','"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_group_spec("spiral:5").unwrap_err();
        assert!(err.to_string().contains("cyclic"));
        let err = parse_group_spec("cyclic:4junk").unwrap_err();
        assert!(err.to_string().contains("end of input"));
    }

    #[test]
    fn file_specs_round_trip() {
        let spec = parse_group_spec("file:data/q8.json").unwrap();
        assert_eq!(spec.to_string(), "file:data/q8.json");
    }

    #[test]
    fn display_round_trips_through_parser() {
        for text in [
            "cyclic:12",
            "dihedral:8",
            "sd:7,3,2",
            "prod:cyclic:4*cyclic:4",
            "prod:prod:cyclic:2*cyclic:2*dihedral:3",
        ] {
            let spec = parse_group_spec(text).unwrap();
            assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
        }
    }
}
