//! Text syntax for family specs: `name(arg, ...)` with integer, `key=int`
//! or nested-spec arguments, plus the shorthands `K<n>`, `C<n>`, `P<n>`.

use std::fmt;

use thiserror::Error;

use super::FamilySpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse family spec at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug)]
enum Arg {
    Int(usize),
    Keyed(String, usize),
    Term(Term),
}

#[derive(Debug)]
struct Term {
    name: String,
    args: Option<Vec<Arg>>,
    pos: usize,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice")
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.err("expected a number");
        }
        digits.parse().or_else(|_| self.err("number out of range"))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        let pos = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_').to_string();
        if name.is_empty() || name.as_bytes()[0].is_ascii_digit() {
            return self.err("expected a family name");
        }
        let args = if self.eat(b'(') {
            let mut args = Vec::new();
            if !self.eat(b')') {
                loop {
                    args.push(self.arg()?);
                    if self.eat(b')') {
                        break;
                    }
                    if !self.eat(b',') {
                        return self.err("expected ',' or ')'");
                    }
                }
            }
            Some(args)
        } else {
            None
        };
        Ok(Term { name, args, pos })
    }

    fn arg(&mut self) -> Result<Arg, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Arg::Int(self.number()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let save = self.pos;
                let key = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                if self.eat(b'=') {
                    return Ok(Arg::Keyed(key.to_string(), self.number()?));
                }
                self.pos = save;
                Ok(Arg::Term(self.term()?))
            }
            _ => self.err("expected an argument"),
        }
    }
}

pub(super) fn parse(text: &str) -> Result<FamilySpec, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let t = p.term()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    interpret(t)
}

fn interpret(t: Term) -> Result<FamilySpec, ParseError> {
    let err = |msg: String| Err(ParseError { pos: t.pos, msg });
    let name = t.name.as_str();

    // K7, C5, P4 shorthands
    if t.args.is_none() {
        if let Some((head, digits)) = name.split_at_checked(1) {
            if let Ok(n) = digits.parse::<usize>() {
                return match head {
                    "K" => Ok(FamilySpec::Complete(n)),
                    "C" => Ok(FamilySpec::Cycle(n)),
                    "P" => Ok(FamilySpec::Path(n)),
                    _ => err(format!("unknown shorthand `{name}`")),
                };
            }
        }
        return err(format!("`{name}` needs an argument list"));
    }
    let args = t.args.unwrap_or_default();

    let ints = |want: usize| -> Result<Vec<usize>, ParseError> {
        let vals: Vec<usize> = args
            .iter()
            .filter_map(|a| match a {
                Arg::Int(x) => Some(*x),
                _ => None,
            })
            .collect();
        if vals.len() != args.len() {
            return Err(ParseError { pos: t.pos, msg: format!("`{name}` takes integers only") });
        }
        if want != usize::MAX && vals.len() != want {
            return Err(ParseError {
                pos: t.pos,
                msg: format!("`{name}` takes {want} argument(s), got {}", vals.len()),
            });
        }
        Ok(vals)
    };

    match name {
        "path" => Ok(FamilySpec::Path(ints(1)?[0])),
        "cycle" => Ok(FamilySpec::Cycle(ints(1)?[0])),
        "complete" | "K" => Ok(FamilySpec::Complete(ints(1)?[0])),
        "star" => Ok(FamilySpec::Star(ints(1)?[0])),
        "sstar" | "subdividedStar" => Ok(FamilySpec::SubdividedStar(ints(1)?[0])),
        "dstar" | "doubleStar" => {
            let v = ints(2)?;
            Ok(FamilySpec::DoubleStar(v[0], v[1]))
        }
        "spider" | "Sp" => Ok(FamilySpec::spider(ints(usize::MAX)?)),
        "galaxy" => Ok(FamilySpec::Galaxy(ints(usize::MAX)?)),
        "familyG" => {
            let v = ints(2)?;
            Ok(FamilySpec::FamilyG(v[0], v[1]))
        }
        "familyH" => {
            let mut pos = Vec::new();
            let mut r = None;
            for a in &args {
                match a {
                    Arg::Int(x) => pos.push(*x),
                    Arg::Keyed(k, x) if k == "r" => r = Some(*x),
                    _ => return err("familyH takes (a, b, r=R)".into()),
                }
            }
            match (pos.as_slice(), r) {
                (&[a, b], Some(r)) | (&[a, b, r], None) => Ok(FamilySpec::FamilyH { a, b, r }),
                _ => err("familyH takes (a, b, r=R)".into()),
            }
        }
        "KxK" => {
            let v = ints(2)?;
            Ok(FamilySpec::CartesianComplete(v[0], v[1]))
        }
        "Gd" => Ok(FamilySpec::ProductDeleted(ints(1)?[0])),
        "D" => Ok(FamilySpec::DeadExample(ints(1)?[0])),
        "cor" | "union" => {
            let mut parts = Vec::with_capacity(args.len());
            for a in args {
                match a {
                    Arg::Term(inner) => parts.push(interpret(inner)?),
                    _ => return err(format!("`{name}` takes family specs")),
                }
            }
            if name == "union" {
                return Ok(FamilySpec::DisjointUnion(parts));
            }
            match <[FamilySpec; 1]>::try_from(parts) {
                Ok([inner]) => Ok(FamilySpec::corona(inner)),
                Err(_) => err("`cor` takes exactly one family spec".into()),
            }
        }
        _ => err(format!("unknown family `{name}`")),
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(super) fn write_spec(spec: &FamilySpec, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    use FamilySpec::*;
    match spec {
        Path(n) => write!(f, "path({n})"),
        Cycle(n) => write!(f, "cycle({n})"),
        Complete(n) => write!(f, "K{n}"),
        Star(k) => write!(f, "star({k})"),
        SubdividedStar(k) => write!(f, "sstar({k})"),
        DoubleStar(a, b) => write!(f, "dstar({a},{b})"),
        Corona(inner) => write!(f, "cor({inner})"),
        Spider(legs) => {
            f.write_str("spider(")?;
            write_list(f, legs)?;
            f.write_str(")")
        }
        FamilyG(k1, k2) => write!(f, "familyG({k1},{k2})"),
        FamilyH { a, b, r } => write!(f, "familyH({a},{b},r={r})"),
        Galaxy(stars) => {
            f.write_str("galaxy(")?;
            write_list(f, stars)?;
            f.write_str(")")
        }
        CartesianComplete(n, m) => write!(f, "KxK({n},{m})"),
        ProductDeleted(l) => write!(f, "Gd({l})"),
        DeadExample(n) => write!(f, "D({n})"),
        DisjointUnion(parts) => {
            f.write_str("union(")?;
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilySpec::*;

    #[test]
    fn documented_examples() {
        let cases = [
            ("spider(2,2,4)", Spider(vec![2, 2, 4])),
            ("cor(K3)", FamilySpec::corona(Complete(3))),
            ("cycle(7)", Cycle(7)),
            ("familyG(1,0)", FamilyG(1, 0)),
            ("familyH(2,3,r=4)", FamilyH { a: 2, b: 3, r: 4 }),
            ("KxK(3,3)", CartesianComplete(3, 3)),
            ("Gd(3)", ProductDeleted(3)),
            ("D(3)", DeadExample(3)),
            ("union(K2,K3)", DisjointUnion(vec![Complete(2), Complete(3)])),
        ];
        for (text, spec) in cases {
            let parsed = parse(text).unwrap();
            assert_eq!(parsed, spec, "{text}");
            assert_eq!(parse(&parsed.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn aliases_and_whitespace() {
        assert_eq!(parse(" spider( 4 , 1,3 ) ").unwrap(), Spider(vec![1, 3, 4]));
        assert_eq!(parse("familyH(1,2,0)").unwrap(), FamilyH { a: 1, b: 2, r: 0 });
        assert_eq!(parse("P5").unwrap(), Path(5));
        assert_eq!(parse("C9").unwrap(), Cycle(9));
        assert_eq!(parse("complete(4)").unwrap(), Complete(4));
        assert_eq!(
            parse("cor(union(K2,cycle(4)))").unwrap(),
            FamilySpec::corona(DisjointUnion(vec![Complete(2), Cycle(4)]))
        );
        assert_eq!(parse("galaxy(1,2)").unwrap(), Galaxy(vec![1, 2]));
        assert_eq!(parse("sstar(3)").unwrap(), SubdividedStar(3));
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "", "spider", "spider(", "spider(1,)", "foo(1)", "cor(3)", "cor(K2,K3)",
            "KxK(3)", "familyH(1,2)", "X7", "cycle(7) extra", "union(1,2)", "familyH(1,2,q=3)",
        ] {
            assert!(parse(bad).is_err(), "{bad:?} should fail");
        }
    }
}
