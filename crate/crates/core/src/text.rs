//! Canonical text form: `T ::= LEAF | "(" T "*" T ")"`, `LEAF ::= [a-z0-9_]+ | "."`.

use thiserror::Error;

use crate::term::{is_label_char, Label, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("unexpected character {found:?}, expected {expected}")]
    Unexpected { found: char, expected: &'static str },
    #[error("trailing input after a complete term")]
    Trailing,
}

#[derive(Clone, Copy)]
enum Expect {
    Left,
    Star,
    Right,
    Close,
}

impl Expect {
    fn describe(self) -> &'static str {
        match self {
            Expect::Left | Expect::Right => "a term",
            Expect::Star => "'*'",
            Expect::Close => "')'",
        }
    }
}

struct Frame {
    left: Option<Term>,
    right: Option<Term>,
    expect: Expect,
}

/// Parses one term. Nesting depth is limited only by memory.
pub fn parse(text: &str) -> Result<Term, ParseError> {
    let bytes = text.as_bytes();
    let mut stack: Vec<Frame> = Vec::new();
    let mut done: Option<Term> = None;
    let mut i = 0;

    let expected_here = |stack: &[Frame]| stack.last().map_or("a term", |f| f.expect.describe());

    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let err = |kind| ParseError { offset: start, kind };
        if done.is_some() {
            return Err(err(ParseErrorKind::Trailing));
        }

        // A finished subterm, if this token produced one.
        let value = match c {
            b'(' => {
                if let Some(top) = stack.last() {
                    if !matches!(top.expect, Expect::Left | Expect::Right) {
                        return Err(err(unexpected(text, start, top.expect.describe())));
                    }
                }
                stack.push(Frame { left: None, right: None, expect: Expect::Left });
                i += 1;
                None
            }
            b'*' => {
                match stack.last_mut() {
                    Some(top) if matches!(top.expect, Expect::Star) => top.expect = Expect::Right,
                    _ => return Err(err(unexpected(text, start, expected_here(&stack)))),
                }
                i += 1;
                None
            }
            b')' => {
                match stack.last() {
                    Some(top) if matches!(top.expect, Expect::Close) => {}
                    _ => return Err(err(unexpected(text, start, expected_here(&stack)))),
                }
                let frame = stack.pop().expect("checked above");
                i += 1;
                Some(Term::node(frame.left.expect("left filled"), frame.right.expect("right filled")))
            }
            _ => {
                if let Some(top) = stack.last() {
                    if !matches!(top.expect, Expect::Left | Expect::Right) {
                        return Err(err(unexpected(text, start, top.expect.describe())));
                    }
                }
                if c == b'.' {
                    i += 1;
                    Some(Term::leaf())
                } else {
                    let end = text[start..]
                        .char_indices()
                        .find(|&(_, ch)| !is_label_char(ch))
                        .map_or(text.len(), |(k, _)| start + k);
                    if end == start {
                        return Err(err(unexpected(text, start, "a term")));
                    }
                    i = end;
                    let label = Label::new(&text[start..end]).expect("scanned label chars");
                    Some(Term::labeled(label))
                }
            }
        };

        if let Some(term) = value {
            match stack.last_mut() {
                None => done = Some(term),
                Some(top) => match top.expect {
                    Expect::Left => {
                        top.left = Some(term);
                        top.expect = Expect::Star;
                    }
                    Expect::Right => {
                        top.right = Some(term);
                        top.expect = Expect::Close;
                    }
                    Expect::Star | Expect::Close => unreachable!("checked before shifting"),
                },
            }
        }
    }

    match (done, stack.last()) {
        (Some(t), None) => Ok(t),
        (_, top) => Err(ParseError {
            offset: text.len(),
            kind: ParseErrorKind::UnexpectedEnd(top.map_or("a term", |f| f.expect.describe())),
        }),
    }
}

fn unexpected(text: &str, at: usize, expected: &'static str) -> ParseErrorKind {
    let found = text[at..].chars().next().expect("in bounds");
    ParseErrorKind::Unexpected { found, expected }
}

/// Canonical, whitespace-free rendering. Injective on terms.
pub fn render(t: &Term) -> String {
    enum Item<'a> {
        Term(&'a Term),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut work = vec![Item::Term(t)];
    while let Some(item) = work.pop() {
        match item {
            Item::Text(s) => out.push_str(s),
            Item::Term(Term::Leaf(None)) => out.push('.'),
            Item::Term(Term::Leaf(Some(label))) => out.push_str(label.as_str()),
            Item::Term(Term::Node(l, r)) => {
                out.push('(');
                work.push(Item::Text(")"));
                work.push(Item::Term(r));
                work.push(Item::Text("*"));
                work.push(Item::Term(l));
            }
        }
    }
    out
}

impl std::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
