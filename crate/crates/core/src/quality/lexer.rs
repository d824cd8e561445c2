//! Line-oriented lexer driven by [`LanguageRules`].
//!
//! Comments are removed, string literals are kept in the normalised line text
//! but collapse to a single literal token, so nothing inside a string is ever
//! read as code.

use super::rules::{LanguageRules, StringRule};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Literal,
    Op,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
    /// 1-based source line.
    pub line: usize,
}

impl Token {
    pub fn is(&self, text: &str) -> bool {
        self.text == text
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexedLine {
    /// 1-based.
    pub number: usize,
    /// Comment-free text, trimmed, whitespace runs collapsed. Empty for blank
    /// and comment-only lines.
    pub code: String,
    pub indent: usize,
    /// The line begins inside a multi-line string literal.
    pub starts_in_string: bool,
    pub directive: bool,
}

impl LexedLine {
    pub fn has_code(&self) -> bool {
        !self.code.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Lexed {
    pub lines: Vec<LexedLine>,
    pub tokens: Vec<Token>,
}

enum State<'r> {
    Code,
    Block(&'r str),
    Str(&'r StringRule),
}

const LITERAL_MARK: char = '\0';

const OPS3: [&str; 5] = ["===", "!==", "<<=", ">>=", "..."];
const OPS2: [&str; 24] = [
    "&&", "||", "?.", "??", "->", "=>", "::", "==", "!=", "<=", ">=", ":=", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "++", "--", "<<", ">>",
];

fn indent_width(line: &str) -> usize {
    let mut width = 0;
    for ch in line.chars() {
        match ch {
            ' ' => width += 1,
            '\t' => width = (width / 8 + 1) * 8,
            _ => break,
        }
    }
    width
}

pub fn lex(text: &str, rules: &LanguageRules) -> Lexed {
    let mut out = Lexed::default();
    let mut state = State::Code;

    for (idx, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let number = idx + 1;
        let starts_in_string = matches!(state, State::Str(_));
        let starts_in_comment = matches!(state, State::Block(_));
        let mut code = String::new();
        let mut skeleton = String::new();
        let mut i = 0;

        'scan: while i < line.len() {
            let rest = &line[i..];
            let ch_len = rest.chars().next().map_or(1, char::len_utf8);
            match state {
                State::Block(close) => {
                    if rest.starts_with(close) {
                        i += close.len();
                        state = State::Code;
                        code.push(' ');
                        skeleton.push(' ');
                    } else {
                        i += ch_len;
                    }
                }
                State::Str(rule) => {
                    if let Some(esc) = rule.escape.as_deref().filter(|e| rest.starts_with(e)) {
                        let after = &rest[esc.len()..];
                        let next = after.chars().next().map_or(0, char::len_utf8);
                        code.push_str(&rest[..esc.len() + next]);
                        i += esc.len() + next;
                    } else if rest.starts_with(rule.close.as_str()) {
                        code.push_str(&rule.close);
                        i += rule.close.len();
                        state = State::Code;
                    } else {
                        code.push_str(&rest[..ch_len]);
                        i += ch_len;
                    }
                }
                State::Code => {
                    if rules.line_comments.iter().any(|m| rest.starts_with(m.as_str())) {
                        break 'scan;
                    }
                    if let Some((open, close)) = rules
                        .block_comments
                        .iter()
                        .find(|(open, _)| rest.starts_with(open.as_str()))
                    {
                        i += open.len();
                        state = State::Block(close);
                        continue;
                    }
                    if let Some(rule) = rules.strings.iter().find(|s| rest.starts_with(s.open.as_str())) {
                        code.push_str(&rule.open);
                        skeleton.push(LITERAL_MARK);
                        i += rule.open.len();
                        state = State::Str(rule);
                        continue;
                    }
                    code.push_str(&rest[..ch_len]);
                    skeleton.push_str(&rest[..ch_len]);
                    i += ch_len;
                }
            }
        }
        if let State::Str(rule) = state {
            if !rule.multiline {
                state = State::Code;
            }
        }

        let directive = !starts_in_string
            && !starts_in_comment
            && rules
                .preprocessor
                .as_deref()
                .is_some_and(|p| skeleton.trim_start().starts_with(p));
        if !directive {
            tokenize(&skeleton, number, &mut out.tokens);
        }
        out.lines.push(LexedLine {
            number,
            code: code.split_whitespace().collect::<Vec<_>>().join(" "),
            indent: indent_width(line),
            starts_in_string,
            directive,
        });
    }
    // A trailing newline does not start another line.
    if text.ends_with('\n') {
        out.lines.pop();
    }
    out
}

/// Split comment- and string-free text into tokens.
pub fn tokenize(skeleton: &str, line: usize, out: &mut Vec<Token>) {
    let chars: Vec<char> = skeleton.chars().collect();
    let mut i = 0;
    let push = |out: &mut Vec<Token>, text: String, kind| out.push(Token { text, kind, line });
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == LITERAL_MARK {
            push(out, "\"\"".into(), TokenKind::Literal);
            i += 1;
        } else if c.is_alphabetic() || c == '_' || c == '$' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '$') {
                i += 1;
            }
            push(out, chars[start..i].iter().collect(), TokenKind::Ident);
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '.' || chars[i] == '_') {
                i += 1;
            }
            push(out, chars[start..i].iter().collect(), TokenKind::Literal);
        } else {
            let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
            let op = OPS3
                .iter()
                .chain(OPS2.iter())
                .find(|op| rest.starts_with(**op))
                .map(|op| op.to_string())
                .unwrap_or_else(|| c.to_string());
            i += op.chars().count();
            push(out, op, TokenKind::Op);
        }
    }
}
