//! Function boundaries and McCabe cyclomatic complexity from token streams.

use serde::{Deserialize, Serialize};

use super::lexer::{Lexed, Token, TokenKind};
use super::rules::{FunctionStyle, LanguageRules};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionSpan {
    pub path: String,
    pub start_line: usize,
    pub end_line: usize,
    pub sloc: u64,
    pub cyclomatic: u32,
}

/// Whether `tokens[i]` is a decision point.
///
/// `?` only counts as a ternary when it follows an operand and is not part of
/// an optional marker (`x?:`, `x?.`) or a generic wildcard (`<?>`).
pub fn is_decision(tokens: &[Token], i: usize, rules: &LanguageRules) -> bool {
    let tok = &tokens[i];
    match tok.kind {
        TokenKind::Ident => rules.is_decision_keyword(&tok.text),
        TokenKind::Op if tok.is("?") => {
            if !rules.is_decision_operator("?") {
                return false;
            }
            let after_operand = i > 0 && {
                let prev = &tokens[i - 1];
                matches!(prev.kind, TokenKind::Ident | TokenKind::Literal)
                    || prev.is(")")
                    || prev.is("]")
            };
            let next_ok = tokens
                .get(i + 1)
                .is_some_and(|n| !(n.is(":") || n.is(".") || n.is(")") || n.is(",") || n.is(">")));
            after_operand && next_ok
        }
        TokenKind::Op => rules.is_decision_operator(&tok.text),
        TokenKind::Literal => false,
    }
}

/// McCabe complexity of a function body: one plus its decision points.
pub fn cyclomatic(tokens: &[Token], rules: &LanguageRules) -> u32 {
    1 + (0..tokens.len())
        .filter(|&i| is_decision(tokens, i, rules))
        .count() as u32
}

struct Building {
    start_line: usize,
    end_line: Option<usize>,
    decisions: u32,
}

fn is_assignment(op: &str) -> bool {
    op == "=>" || (op.ends_with('=') && !matches!(op, "==" | "!=" | "<=" | ">=" | "===" | "!=="))
}

/// Does the statement preceding a `{` declare a function?
fn looks_like_signature(stmt: &[&Token], rules: &LanguageRules) -> bool {
    let mut i = 0;
    // Leading annotations: `@Name` or `@Name(...)`.
    while i + 1 < stmt.len() && stmt[i].is("@") {
        i += 2;
        if i < stmt.len() && stmt[i].is("(") {
            let mut depth = 0;
            while i < stmt.len() {
                if stmt[i].is("(") {
                    depth += 1;
                } else if stmt[i].is(")") {
                    depth -= 1;
                    if depth == 0 {
                        i += 1;
                        break;
                    }
                }
                i += 1;
            }
        }
    }
    let body = &stmt[i..];
    let Some(first) = body.first() else {
        return false;
    };
    if first.kind == TokenKind::Ident && rules.is_control_keyword(&first.text) {
        return false;
    }
    let mut depth = 0i32;
    let mut found = false;
    for (k, tok) in body.iter().enumerate() {
        if tok.kind == TokenKind::Op {
            if tok.is("(") {
                if depth == 0 && !found && k > 0 {
                    let prev = body[k - 1];
                    if prev.kind == TokenKind::Ident && !rules.is_control_keyword(&prev.text) {
                        found = true;
                    }
                }
                depth += 1;
                continue;
            }
            if tok.is(")") {
                depth -= 1;
                continue;
            }
            if depth == 0 && is_assignment(&tok.text) {
                return false;
            }
        } else if tok.kind == TokenKind::Ident && !found && depth == 0 && rules.is_type_keyword(&tok.text) {
            return false;
        }
    }
    found && depth == 0
}

fn brace_functions(tokens: &[Token], rules: &LanguageRules) -> Vec<Building> {
    let mut funcs: Vec<Building> = Vec::new();
    // (function index, paren depth outside the block)
    let mut stack: Vec<(Option<usize>, i32)> = Vec::new();
    let mut stmt: Vec<&Token> = Vec::new();
    let mut paren = 0i32;

    for (i, tok) in tokens.iter().enumerate() {
        if is_decision(tokens, i, rules) {
            if let Some(f) = stack.iter().rev().find_map(|o| o.0) {
                funcs[f].decisions += 1;
            }
        }
        if tok.kind != TokenKind::Op {
            stmt.push(tok);
            continue;
        }
        match tok.text.as_str() {
            "{" => {
                let is_fn = paren == 0 && looks_like_signature(&stmt, rules);
                if is_fn {
                    funcs.push(Building {
                        start_line: stmt[0].line,
                        end_line: None,
                        decisions: 0,
                    });
                    stack.push((Some(funcs.len() - 1), paren));
                } else {
                    stack.push((None, paren));
                }
                stmt.clear();
                paren = 0;
            }
            "}" => {
                if let Some((func, outer)) = stack.pop() {
                    if let Some(f) = func {
                        funcs[f].end_line = Some(tok.line);
                    }
                    paren = outer;
                }
                stmt.clear();
            }
            ";" if paren == 0 => stmt.clear(),
            _ => {
                if tok.is("(") {
                    paren += 1;
                } else if tok.is(")") {
                    paren -= 1;
                }
                stmt.push(tok);
            }
        }
    }
    funcs
}

fn indent_functions(lexed: &Lexed, rules: &LanguageRules) -> Vec<Building> {
    let mut funcs: Vec<Building> = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut last_code_line = 0;
    let mut paren = 0i32;
    let mut t = 0;
    let tokens = &lexed.tokens;

    for line in &lexed.lines {
        let begin = t;
        while t < tokens.len() && tokens[t].line == line.number {
            t += 1;
        }
        let line_tokens = &tokens[begin..t];
        if !line.has_code() {
            continue;
        }
        if paren == 0 && !line.starts_in_string {
            while let Some(&(indent, f)) = stack.last() {
                if indent < line.indent {
                    break;
                }
                funcs[f].end_line = Some(last_code_line);
                stack.pop();
            }
            let mut head = line_tokens.iter().map(|t| t.text.as_str());
            let mut first = head.next();
            if first == Some("async") {
                first = head.next();
            }
            if first.is_some_and(|w| rules.function_keywords.iter().any(|k| k == w)) {
                funcs.push(Building {
                    start_line: line.number,
                    end_line: None,
                    decisions: 0,
                });
                stack.push((line.indent, funcs.len() - 1));
            }
        }
        for k in begin..t {
            if is_decision(tokens, k, rules) {
                if let Some(&(_, f)) = stack.last() {
                    funcs[f].decisions += 1;
                }
            }
            match tokens[k].text.as_str() {
                "(" | "[" | "{" => paren += 1,
                ")" | "]" | "}" => paren = (paren - 1).max(0),
                _ => {}
            }
        }
        last_code_line = line.number;
    }
    for (_, f) in stack {
        funcs[f].end_line = Some(last_code_line);
    }
    funcs
}

/// Every function in a lexed file, in order of appearance.
pub fn find_functions(lexed: &Lexed, rules: &LanguageRules, path: &str) -> Vec<FunctionSpan> {
    let building = match rules.function_style {
        FunctionStyle::Braces => brace_functions(&lexed.tokens, rules),
        FunctionStyle::Indent => indent_functions(lexed, rules),
    };
    let last_line = lexed.lines.last().map_or(1, |l| l.number);
    building
        .into_iter()
        .map(|b| {
            let end_line = b.end_line.unwrap_or(last_line).max(b.start_line);
            let sloc = lexed
                .lines
                .iter()
                .filter(|l| l.number >= b.start_line && l.number <= end_line && l.has_code())
                .count() as u64;
            FunctionSpan {
                path: path.to_owned(),
                start_line: b.start_line,
                end_line,
                sloc: sloc.max(1),
                cyclomatic: 1 + b.decisions,
            }
        })
        .collect()
}
