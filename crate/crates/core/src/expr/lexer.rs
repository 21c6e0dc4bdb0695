use num_bigint::BigInt;

use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Q,
    /// `f` immediately followed by its subscript.
    F(usize),
    Extract,
    Inflate,
    Mod,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Q => "'q'".into(),
            Tok::F(r) => format!("'f{r}'"),
            Tok::Extract => "'extract'".into(),
            Tok::Inflate => "'inflate'".into(),
            Tok::Mod => "'mod'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub offset: usize,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                let end = scan(bytes, i, |b| b.is_ascii_digit());
                let n = src[i..end].parse::<BigInt>().expect("ascii digits");
                i = end;
                out.push(Token { tok: Tok::Int(n), offset: start });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let end = scan(bytes, i, |b| b.is_ascii_alphabetic() || b == b'_');
                let word = &src[i..end];
                i = end;
                let tok = match word {
                    "q" => Tok::Q,
                    "extract" => Tok::Extract,
                    "inflate" => Tok::Inflate,
                    "mod" => Tok::Mod,
                    "f" => {
                        let digits_start = scan(bytes, i, |b| b.is_ascii_whitespace());
                        let digits_end = scan(bytes, digits_start, |b| b.is_ascii_digit());
                        if digits_start == digits_end {
                            return Err(ParseError::Syntax {
                                offset: digits_start,
                                expected: "subscript after 'f'".into(),
                                found: found_at(src, digits_start),
                            });
                        }
                        let r = src[digits_start..digits_end].parse::<usize>().ok().filter(|&r| r >= 1).ok_or_else(
                            || ParseError::Domain {
                                offset: start,
                                message: format!("f{} needs a subscript r >= 1", &src[digits_start..digits_end]),
                            },
                        )?;
                        i = digits_end;
                        Tok::F(r)
                    }
                    _ => {
                        return Err(ParseError::Syntax {
                            offset: start,
                            expected: "'q', 'f<r>', 'extract', 'inflate' or 'mod'".into(),
                            found: format!("'{word}'"),
                        })
                    }
                };
                out.push(Token { tok, offset: start });
                continue;
            }
            _ => {
                return Err(ParseError::Syntax {
                    offset: start,
                    expected: "an expression token".into(),
                    found: found_at(src, start),
                })
            }
        };
        out.push(Token { tok, offset: start });
        i += 1;
    }
    out.push(Token { tok: Tok::Eof, offset: src.len() });
    Ok(out)
}

fn scan(bytes: &[u8], mut i: usize, pred: impl Fn(u8) -> bool) -> usize {
    while i < bytes.len() && pred(bytes[i]) {
        i += 1;
    }
    i
}

fn found_at(src: &str, offset: usize) -> String {
    match src[offset..].chars().next() {
        Some(c) => format!("'{c}'"),
        None => "end of input".into(),
    }
}
