//! Text syntax for family specs.
//!
//! ```text
//! spec    := atom | "trunc(" spec ",k=" int ")" | "union(" spec (";" spec)* ")"
//!          | "decone(" spec ")"
//! atom    := "graphic" | "bicircular" | "even-cycle"
//!          | "count:" params      keys k, l          (both required)
//!          | "rigidity:" params   keys d, trials, seed (d required)
//!          | "uniform:" params    key k
//!          | "stars:" params      key m              (X = {K_{1,m}}, k = m)
//!          | "forbidden:" params  keys k, c          (c = complete | none)
//! params  := key "=" value ("," key "=" value)*
//! ```
//!
//! A parameter list ends at the first key that the atom does not know or has
//! already seen, so `trunc(count:k=2,l=3,k=5)` reads as intended. Errors
//! report the byte offset where parsing failed.

use std::str::FromStr;

use super::FamilySpec;
use crate::error::{Error, Result};

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec()?;
        if p.pos != s.len() {
            return p.fail("unexpected trailing input");
        }
        spec.validate().map_err(|e| Error::Parse { position: 0, message: e.to_string() })?;
        Ok(spec)
    }
}

pub fn parse_family(s: &str) -> Result<FamilySpec> {
    s.trim().parse()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.fail(format!("expected {token:?}"))
        }
    }

    fn word(&mut self) -> &str {
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '-' || c == '_'))
            .unwrap_or(self.rest().len());
        let w = &self.src[self.pos..self.pos + len];
        self.pos += len;
        w
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        let len = self
            .rest()
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
            .map_or(self.rest().len(), |(i, _)| i);
        let text = &self.src[start..start + len];
        match text.parse() {
            Ok(v) => {
                self.pos += len;
                Ok(v)
            }
            Err(_) => self.fail("expected an integer"),
        }
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let start = self.pos;
        let name = self.word().to_string();
        match name.as_str() {
            "graphic" => Ok(FamilySpec::Graphic),
            "bicircular" => Ok(FamilySpec::Bicircular),
            "even-cycle" => Ok(FamilySpec::EvenCycle),
            "trunc" => {
                self.expect("(")?;
                let inner = self.spec()?;
                self.expect(",k=")?;
                let k = self.nonnegative()?;
                self.expect(")")?;
                Ok(FamilySpec::Truncation { inner: Box::new(inner), k })
            }
            "union" => {
                self.expect("(")?;
                let mut parts = vec![self.spec()?];
                while self.eat(";") {
                    parts.push(self.spec()?);
                }
                self.expect(")")?;
                Ok(FamilySpec::Union { parts })
            }
            "decone" => {
                self.expect("(")?;
                let inner = self.spec()?;
                self.expect(")")?;
                Ok(FamilySpec::DeCone { inner: Box::new(inner) })
            }
            "count" | "rigidity" | "uniform" | "stars" | "forbidden" => {
                self.expect(":")?;
                self.atom(&name, start)
            }
            "" => self.fail("expected a family name"),
            other => {
                self.pos = start;
                self.fail(format!("unknown family {other:?}"))
            }
        }
    }

    fn nonnegative(&mut self) -> Result<usize> {
        let at = self.pos;
        let v = self.integer()?;
        usize::try_from(v).map_err(|_| Error::Parse { position: at, message: "expected a non-negative integer".into() })
    }

    fn atom(&mut self, name: &str, start: usize) -> Result<FamilySpec> {
        let keys: &[&str] = match name {
            "count" => &["k", "l"],
            "rigidity" => &["d", "trials", "seed"],
            "uniform" => &["k"],
            "stars" => &["m"],
            _ => &["k", "c"],
        };
        let mut values: Vec<(&str, usize, String)> = Vec::new();
        loop {
            let save = self.pos;
            if !values.is_empty() && !self.eat(",") {
                break;
            }
            let key_at = self.pos;
            let key = self.word().to_string();
            let known = keys.iter().find(|&&k| k == key);
            if values.is_empty() && known.is_none() {
                self.pos = key_at;
                return self.fail(format!("unknown parameter {key:?} for {name}"));
            }
            let Some(&key) = known.filter(|k| !values.iter().any(|v| v.0 == **k)) else {
                self.pos = save;
                break;
            };
            self.expect("=")?;
            let value_at = self.pos;
            let value =
                if name == "forbidden" && key == "c" { self.word().to_string() } else { self.integer()?.to_string() };
            values.push((key, value_at, value));
        }
        let get = |k: &str| values.iter().find(|v| v.0 == k);
        let int = |k: &str| -> Result<Option<i64>> {
            get(k)
                .map(|v| v.2.parse::<i64>().map_err(|_| Error::Parse { position: v.1, message: "bad integer".into() }))
                .transpose()
        };
        let required = |k: &str| -> Result<i64> {
            int(k)?.ok_or_else(|| Error::Parse { position: start, message: format!("{name} needs parameter {k}") })
        };
        let range = |k: &str, v: i64, lo: i64| -> Result<i64> {
            if v < lo {
                let at = get(k).map_or(start, |x| x.1);
                return Err(Error::Parse { position: at, message: format!("parameter {k} must be at least {lo}") });
            }
            Ok(v)
        };
        match name {
            "count" => {
                let k = range("k", required("k")?, 1)?;
                let l = required("l")?;
                if l > 2 * k - 1 {
                    let at = get("l").map_or(start, |x| x.1);
                    return Err(Error::Parse { position: at, message: "count family needs l <= 2k-1".into() });
                }
                Ok(FamilySpec::Count { k: k as u32, l: l as i32 })
            }
            "rigidity" => Ok(FamilySpec::Rigidity {
                d: range("d", required("d")?, 1)? as u32,
                trials: range("trials", int("trials")?.unwrap_or(super::DEFAULT_RIGIDITY_TRIALS as i64), 1)? as u32,
                seed: range("seed", int("seed")?.unwrap_or(0), 0)? as u64,
            }),
            "uniform" => Ok(FamilySpec::Uniform { k: range("k", required("k")?, 0)? as usize }),
            "stars" => {
                let m = range("m", required("m")?, 1)? as usize;
                FamilySpec::stars(m).map_err(|e| Error::Parse { position: start, message: e.to_string() })
            }
            _ => {
                let k = range("k", required("k")?, 2)? as u32;
                match get("c").map(|v| (v.1, v.2.as_str())) {
                    None | Some((_, "complete")) => FamilySpec::forbidden_complete(k)
                        .map_err(|e| Error::Parse { position: start, message: e.to_string() }),
                    Some((_, "none")) => Ok(FamilySpec::ForbiddenSparse { k, c: Vec::new() }),
                    Some((at, other)) => {
                        Err(Error::Parse { position: at, message: format!("unknown forbidden set {other:?}") })
                    }
                }
            }
        }
    }
}
