//! Text and binary encodings of polynomials.
//!
//! Text: one term per line, `coeff [i,j]^e [k,l]^e ...`, in graded
//! lexicographic order, descending. Blank lines and `#` comments are ignored.
//!
//! Binary: the magic `CRPOLY`, a little-endian `u16` version, the variable
//! list, then every term as its packed exponent key followed by a signed
//! magnitude coefficient.

use std::io::{Read, Write};

use num_bigint::{BigInt, Sign};

use super::{Coeff, DistVar, Key, Monomial, MultiPoly, MAX_VARS};
use crate::error::FormatError;
use crate::graph::VertexId;

const MAGIC: &[u8; 6] = b"CRPOLY";
pub const BINARY_VERSION: u16 = 1;

pub fn to_text(p: &MultiPoly) -> String {
    let mut out = String::new();
    for (m, c) in p.terms() {
        out.push_str(&c.to_string());
        for (v, e) in m.powers() {
            out.push_str(&format!(" [{},{}]^{}", v.i(), v.j(), e));
        }
        out.push('\n');
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

pub fn from_text(text: &str) -> Result<MultiPoly, FormatError> {
    let mut terms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut parts = body.split_whitespace();
        let coeff: BigInt = parts
            .next()
            .expect("nonempty line")
            .parse()
            .map_err(|_| syntax(line, "bad coefficient"))?;
        let mut powers = Vec::new();
        for tok in parts {
            let (var, exp) = tok.split_once('^').ok_or_else(|| syntax(line, "expected [i,j]^e"))?;
            let inner = var
                .strip_prefix('[')
                .and_then(|v| v.strip_suffix(']'))
                .ok_or_else(|| syntax(line, "expected [i,j]"))?;
            let (i, j) = inner.split_once(',').ok_or_else(|| syntax(line, "expected [i,j]"))?;
            let parse_label = |s: &str| -> Result<VertexId, FormatError> {
                let n: u32 = s.trim().parse().map_err(|_| syntax(line, "bad vertex label"))?;
                VertexId::new(n).map_err(|source| FormatError::Graph { line, source })
            };
            let (i, j) = (parse_label(i)?, parse_label(j)?);
            if i >= j {
                return Err(syntax(line, "variable indices must satisfy i < j"));
            }
            let e: u32 = exp.parse().map_err(|_| syntax(line, "bad exponent"))?;
            if e == 0 {
                return Err(syntax(line, "zero exponent"));
            }
            powers.push((DistVar::new(i, j).expect("i < j"), e));
        }
        terms.push((Monomial::new(powers), coeff));
    }
    MultiPoly::from_terms(terms).map_err(|e| FormatError::Syntax { line: 0, message: e.to_string() })
}

pub fn write_binary<W: Write>(p: &MultiPoly, mut w: W) -> std::io::Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&BINARY_VERSION.to_le_bytes())?;
    w.write_all(&(p.vars().len() as u16).to_le_bytes())?;
    for v in p.vars() {
        w.write_all(&v.i().get().to_le_bytes())?;
        w.write_all(&v.j().get().to_le_bytes())?;
    }
    w.write_all(&(p.raw_terms().len() as u64).to_le_bytes())?;
    for (k, c) in p.raw_terms() {
        w.write_all(&k.to_le_bytes())?;
        match c {
            Coeff::Small(s) => {
                w.write_all(&[0u8])?;
                w.write_all(&s.to_le_bytes())?;
            }
            Coeff::Big(b) => {
                let (sign, mag) = b.to_bytes_le();
                w.write_all(&[if sign == Sign::Minus { 2u8 } else { 1u8 }])?;
                w.write_all(&(mag.len() as u32).to_le_bytes())?;
                w.write_all(&mag)?;
            }
        }
    }
    Ok(())
}

fn bin(msg: impl Into<String>) -> FormatError {
    FormatError::Binary(msg.into())
}

fn read_exact<R: Read, const N: usize>(r: &mut R) -> Result<[u8; N], FormatError> {
    let mut buf = [0u8; N];
    r.read_exact(&mut buf).map_err(|e| bin(e.to_string()))?;
    Ok(buf)
}

pub fn read_binary<R: Read>(mut r: R) -> Result<MultiPoly, FormatError> {
    let magic: [u8; 6] = read_exact(&mut r)?;
    if &magic != MAGIC {
        return Err(bin("bad magic"));
    }
    let version = u16::from_le_bytes(read_exact(&mut r)?);
    if version != BINARY_VERSION {
        return Err(bin(format!("unsupported version {version}")));
    }
    let nvars = u16::from_le_bytes(read_exact(&mut r)?) as usize;
    if nvars > MAX_VARS {
        return Err(bin("too many variables"));
    }
    let mut vars = Vec::with_capacity(nvars);
    for _ in 0..nvars {
        let i = u32::from_le_bytes(read_exact(&mut r)?);
        let j = u32::from_le_bytes(read_exact(&mut r)?);
        let (i, j) = (
            VertexId::new(i).map_err(|e| bin(e.to_string()))?,
            VertexId::new(j).map_err(|e| bin(e.to_string()))?,
        );
        vars.push(DistVar::new(i, j).map_err(|e| bin(e.to_string()))?);
    }
    if vars.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bin("variables not strictly ascending"));
    }
    let nterms = u64::from_le_bytes(read_exact(&mut r)?) as usize;
    let mut terms: Vec<(Key, Coeff)> = Vec::with_capacity(nterms.min(1 << 24));
    for _ in 0..nterms {
        let key = u128::from_le_bytes(read_exact(&mut r)?);
        let tag: [u8; 1] = read_exact(&mut r)?;
        let c = match tag[0] {
            0 => Coeff::Small(i64::from_le_bytes(read_exact(&mut r)?)),
            1 | 2 => {
                let len = u32::from_le_bytes(read_exact(&mut r)?) as usize;
                let mut mag = vec![0u8; len];
                r.read_exact(&mut mag).map_err(|e| bin(e.to_string()))?;
                let sign = if tag[0] == 2 { Sign::Minus } else { Sign::Plus };
                Coeff::from_big(BigInt::from_bytes_le(sign, &mag))
            }
            t => return Err(bin(format!("bad coefficient tag {t}"))),
        };
        terms.push((key, c));
    }
    let mut seen: Vec<Key> = terms.iter().map(|(k, _)| *k).collect();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(bin("duplicate monomial"));
    }
    Ok(MultiPoly::from_raw(vars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_layout() {
        let x = |i, j| MultiPoly::var(DistVar::x(i, j));
        let p = &(&x(1, 2).pow(2) * &x(3, 4)).scale(&BigInt::from(-3)) + &MultiPoly::constant(7);
        assert_eq!(to_text(&p), "-3 [1,2]^2 [3,4]^1\n7\n");
        assert_eq!(from_text(&to_text(&p)).unwrap(), p);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = from_text("1 [1,2]^1\n# c\n2 [2,1]^1\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, .. }), "{err:?}");
        assert!(from_text("x [1,2]^1").is_err());
    }

    #[test]
    fn binary_rejects_garbage() {
        assert!(read_binary(&b"NOTPOLY"[..]).is_err());
    }

    proptest! {
        #[test]
        fn round_trips(p in crate::poly::tests::arb_poly(), big in any::<i64>()) {
            let p = &p.scale(&(BigInt::from(big) * BigInt::from(big) + 1)) + &p;
            prop_assert_eq!(from_text(&to_text(&p)).unwrap(), p.clone());
            let mut buf = Vec::new();
            write_binary(&p, &mut buf).unwrap();
            prop_assert_eq!(read_binary(&buf[..]).unwrap(), p);
        }
    }
}
