//! Recursive-descent parser for `<names | relators>` presentations.

use super::{GroupError, Letter, Presentation, Word};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
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

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), GroupError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn error(&self, message: impl Into<String>) -> GroupError {
        GroupError::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn ident(&mut self) -> Result<(usize, &'a str), GroupError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.error("expected a generator name")),
        }
        let len = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += len;
        Ok((start, &rest[..len]))
    }

    fn integer(&mut self) -> Result<i64, GroupError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return Err(self.error("expected an integer"));
        }
        let v = self.src[start..end]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos = end;
        Ok(v)
    }
}

pub(crate) fn parse_presentation(text: &str) -> Result<Presentation, GroupError> {
    let mut cur = Cursor::new(text);
    cur.expect('<')?;
    let mut names: Vec<String> = Vec::new();
    if cur.peek() != Some('|') {
        loop {
            let (_, name) = cur.ident()?;
            if names.iter().any(|n| n == name) {
                return Err(GroupError::DuplicateGenerator(name.to_string()));
            }
            names.push(name.to_string());
            if !cur.eat(',') {
                break;
            }
        }
    }
    cur.expect('|')?;
    let mut relators = Vec::new();
    if cur.peek() != Some('>') {
        loop {
            relators.push(word(&mut cur, &names)?);
            if !cur.eat(',') {
                break;
            }
        }
    }
    cur.expect('>')?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after `>`"));
    }
    Presentation::new(names, relators)
}

pub(crate) fn parse_word(text: &str, names: &[String]) -> Result<Word, GroupError> {
    let mut cur = Cursor::new(text);
    let w = word(&mut cur, names)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after word"));
    }
    Ok(w)
}

pub(crate) fn parse_word_list(text: &str, names: &[String]) -> Result<Vec<Word>, GroupError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    if cur.at_end() {
        return Ok(out);
    }
    loop {
        out.push(word(&mut cur, names)?);
        if !cur.eat(',') {
            break;
        }
    }
    if !cur.at_end() {
        return Err(cur.error("expected `,` or end of input"));
    }
    Ok(out)
}

fn word(cur: &mut Cursor<'_>, names: &[String]) -> Result<Word, GroupError> {
    let mut w = factor(cur, names)?;
    while cur.eat('*') {
        w = w.concat(&factor(cur, names)?);
    }
    Ok(w)
}

fn factor(cur: &mut Cursor<'_>, names: &[String]) -> Result<Word, GroupError> {
    let base = if cur.eat('(') {
        let w = word(cur, names)?;
        cur.expect(')')?;
        w
    } else {
        let (pos, name) = cur.ident()?;
        let g = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GroupError::UnknownGenerator {
                name: name.to_string(),
                pos,
            })?;
        Word::new([Letter::pos(g)])
    };
    if cur.eat('^') {
        let k = cur.integer()?;
        if k == 0 {
            return Err(cur.error("exponent must be nonzero"));
        }
        Ok(base.pow(k))
    } else {
        Ok(base)
    }
}
