//! Tokenizer for the parenthesized tuple notation used for data sets, e.g.
//! `(3,1;(1,3),(2,3))` or `((2·3,-1),1;[(0,1),(1,3),3]_2)`.
//!
//! Accepts the unicode forms (`·`, `−`) as well as ASCII (`.`, `*`, `-`) and
//! ignores whitespace.

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    source: &'a str,
}

impl<'a> Cursor<'a> {
    pub fn new(source: &'a str) -> Self {
        let chars = source
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace() && *c != '$')
            .map(|(i, c)| (i, normalize(c)))
            .collect();
        Cursor {
            chars,
            pos: 0,
            source,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or(self.source.len())
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    pub fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    pub fn int(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(c) = self.peek() {
            let Some(digit) = c.to_digit(10) else { break };
            value = match value
                .checked_mul(10)
                .and_then(|v| v.checked_add(digit as i64))
            {
                Some(v) => v,
                None => return self.error("integer too large"),
            };
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected an integer");
        }
        Ok(if negative { -value } else { value })
    }

    pub fn uint(&mut self) -> Result<u64> {
        let v = self.int()?;
        if v < 0 {
            return self.error("expected a nonnegative integer");
        }
        Ok(v as u64)
    }

    /// Skips trailing table annotations such as `^*` or `^†`.
    pub fn skip_annotation(&mut self) {
        if self.eat('^') {
            while self.peek().is_some_and(|c| !c.is_ascii_digit() && c != ',') {
                self.pos += 1;
            }
        }
    }

    pub fn finish(&mut self) -> Result<()> {
        self.skip_annotation();
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected trailing '{c}'")),
        }
    }
}

fn normalize(c: char) -> char {
    match c {
        '−' | '–' => '-',
        '·' | '⋅' | '*' => '.',
        other => other,
    }
}
