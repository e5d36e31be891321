use std::collections::HashMap;

use super::{is_identifier, Arg, ArgumentId, AttackGraph};
use crate::error::{Error, Position, Result};

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn position(&self) -> Position {
        Position {
            line: self.line,
            column: self.column,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips whitespace and `%` comments.
    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '%' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_trivia();
        self.chars.peek().copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        let pos = {
            self.skip_trivia();
            self.position()
        };
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(syntax(pos, format!("expected `{want}`, found `{c}`"))),
            None => Err(syntax(pos, format!("expected `{want}`, found end of input"))),
        }
    }

    fn word(&mut self) -> Result<(String, Position)> {
        self.skip_trivia();
        let pos = self.position();
        let mut out = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() {
            let found = self
                .chars
                .peek()
                .map(|c| format!("`{c}`"))
                .unwrap_or_else(|| "end of input".into());
            return Err(syntax(pos, format!("expected identifier, found {found}")));
        }
        debug_assert!(is_identifier(&out));
        Ok((out, pos))
    }
}

fn syntax(position: Position, message: String) -> Error {
    Error::Syntax { position, message }
}

pub(super) fn parse_framework(text: &str) -> Result<AttackGraph> {
    let mut cur = Cursor::new(text);
    let mut names: Vec<ArgumentId> = Vec::new();
    let mut index: HashMap<String, Arg> = HashMap::new();
    let mut pending: Vec<(String, Position, String, Position)> = Vec::new();

    while cur.peek().is_some() {
        let (keyword, pos) = cur.word()?;
        cur.expect('(')?;
        match keyword.as_str() {
            "arg" => {
                let (name, _) = cur.word()?;
                if !index.contains_key(&name) {
                    index.insert(name.clone(), Arg(names.len()));
                    names.push(ArgumentId(name));
                }
            }
            "att" => {
                let (from, from_pos) = cur.word()?;
                cur.expect(',')?;
                let (to, to_pos) = cur.word()?;
                pending.push((from, from_pos, to, to_pos));
            }
            other => {
                return Err(syntax(
                    pos,
                    format!("unknown statement `{other}`, expected `arg` or `att`"),
                ))
            }
        }
        cur.expect(')')?;
        cur.expect('.')?;
    }

    let mut pairs = Vec::with_capacity(pending.len());
    for (from, from_pos, to, to_pos) in pending {
        let resolve = |name: String, position: Position| {
            index
                .get(&name)
                .copied()
                .ok_or(Error::UndeclaredArgument { position, name })
        };
        pairs.push((resolve(from, from_pos)?, resolve(to, to_pos)?));
    }
    Ok(AttackGraph::from_indexed(names, pairs))
}
