//! File formats: Trivial Graph Format and ASPARTIX-style facts for
//! frameworks, and a plain text format for programs.
//!
//! The program format reserves the prefixes `k__`, `l__`, `s__` and `n__`
//! for belief, auxiliary, shadow and complement atoms; everything else is
//! a plain atom.

use std::path::Path;

use crate::af::{is_valid_name, Framework};
use crate::error::{Error, Result};
use crate::lp::{Atom, Program, Rule};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Tgf,
    Apx,
    Lp,
}

impl InputFormat {
    /// Detects a format from the file extension; anything else needs an
    /// explicit flag.
    pub fn from_path(path: &Path) -> Option<InputFormat> {
        match path.extension()?.to_str()? {
            "tgf" => Some(InputFormat::Tgf),
            "apx" => Some(InputFormat::Apx),
            "lp" => Some(InputFormat::Lp),
            _ => None,
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses Trivial Graph Format: argument names one per line, a `#`
/// separator, then `source target` attack lines.
pub fn parse_tgf(text: &str) -> Result<Framework> {
    let mut args: Vec<String> = Vec::new();
    let mut attacks: Vec<(String, String)> = Vec::new();
    let mut seen_separator = false;
    let mut separator_line = 0;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if seen_separator {
                return Err(parse_err(lineno + 1, "second `#` separator"));
            }
            seen_separator = true;
            separator_line = lineno + 1;
            continue;
        }
        if !seen_separator {
            if line.split_whitespace().count() != 1 {
                return Err(parse_err(lineno + 1, "expected one argument name per line"));
            }
            if !is_valid_name(line) {
                return Err(parse_err(
                    lineno + 1,
                    format!("invalid argument name `{line}`"),
                ));
            }
            if args.iter().any(|a| a == line) {
                return Err(parse_err(
                    lineno + 1,
                    format!("duplicate argument name `{line}`"),
                ));
            }
            args.push(line.to_string());
        } else {
            let mut it = line.split_whitespace();
            let (src, tgt) = match (it.next(), it.next(), it.next()) {
                (Some(s), Some(t), None) => (s, t),
                _ => return Err(parse_err(lineno + 1, "expected `source target`")),
            };
            for end in [src, tgt] {
                if !args.iter().any(|a| a == end) {
                    return Err(parse_err(lineno + 1, format!("unknown argument `{end}`")));
                }
            }
            attacks.push((src.to_string(), tgt.to_string()));
        }
    }
    if !seen_separator {
        return Err(parse_err(
            text.lines().count().max(1),
            "missing `#` separator",
        ));
    }
    let _ = separator_line;
    Framework::new(args, &attacks)
}

pub fn render_tgf(f: &Framework) -> String {
    let mut out = String::new();
    for name in f.arg_names() {
        out.push_str(name);
        out.push('\n');
    }
    out.push_str("#\n");
    for (src, tgt) in f.attack_names() {
        out.push_str(&format!("{src} {tgt}\n"));
    }
    out
}

/// Parses ASPARTIX-style facts: `arg(x).` and `att(x,y).` in any order,
/// `%` comments. Every attack endpoint must be declared somewhere in the
/// file.
pub fn parse_apx(text: &str) -> Result<Framework> {
    let mut args: Vec<String> = Vec::new();
    let mut attacks: Vec<(String, String, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('%') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut rest = line.trim();
        while !rest.is_empty() {
            let end = rest.find('.').ok_or_else(|| {
                parse_err(lineno + 1, format!("statement `{rest}` missing final `.`"))
            })?;
            let stmt = rest[..end].trim();
            rest = rest[end + 1..].trim_start();
            if stmt.is_empty() {
                return Err(parse_err(lineno + 1, "empty statement"));
            }
            if let Some(inner) = stmt.strip_prefix("arg(").and_then(|s| s.strip_suffix(')')) {
                let name = inner.trim();
                if !is_valid_name(name) {
                    return Err(parse_err(
                        lineno + 1,
                        format!("invalid argument name `{name}`"),
                    ));
                }
                if !args.iter().any(|a| a == name) {
                    args.push(name.to_string());
                }
            } else if let Some(inner) = stmt.strip_prefix("att(").and_then(|s| s.strip_suffix(')'))
            {
                let Some((src, tgt)) = inner.split_once(',') else {
                    return Err(parse_err(lineno + 1, format!("malformed term `{stmt}.`")));
                };
                let (src, tgt) = (src.trim(), tgt.trim());
                if !is_valid_name(src) || !is_valid_name(tgt) {
                    return Err(parse_err(lineno + 1, format!("malformed term `{stmt}.`")));
                }
                attacks.push((src.to_string(), tgt.to_string(), lineno + 1));
            } else {
                return Err(parse_err(lineno + 1, format!("malformed term `{stmt}.`")));
            }
        }
    }

    for (src, tgt, lineno) in &attacks {
        for end in [src, tgt] {
            if !args.iter().any(|a| a == end) {
                return Err(parse_err(
                    *lineno,
                    format!("undeclared argument `{end}` in att"),
                ));
            }
        }
    }
    let attacks: Vec<(String, String)> = attacks.into_iter().map(|(s, t, _)| (s, t)).collect();
    Framework::new(args, &attacks)
}

pub fn render_apx(f: &Framework) -> String {
    let mut out = String::new();
    for name in f.arg_names() {
        out.push_str(&format!("arg({name}).\n"));
    }
    for (src, tgt) in f.attack_names() {
        out.push_str(&format!("att({src},{tgt}).\n"));
    }
    out
}

fn decode_atom(token: &str, lineno: usize) -> Result<Atom> {
    let misuse = |what: &str| {
        parse_err(
            lineno,
            format!("reserved prefix misuse in `{token}`: {what}"),
        )
    };
    let plain_part = |s: &str| -> Result<String> {
        if !is_valid_name(s) {
            return Err(misuse("empty or malformed name"));
        }
        for p in ["k__", "l__", "s__", "n__"] {
            if s.starts_with(p) {
                return Err(misuse("nested reserved prefix"));
            }
        }
        Ok(s.to_string())
    };
    if let Some(rest) = token.strip_prefix("k__") {
        Ok(Atom::Belief(plain_part(rest)?))
    } else if let Some(rest) = token.strip_prefix("s__") {
        Ok(Atom::Shadow(plain_part(rest)?))
    } else if let Some(rest) = token.strip_prefix("n__") {
        Ok(Atom::ShadowComplement(plain_part(rest)?))
    } else if let Some(rest) = token.strip_prefix("l__") {
        let Some((r, i)) = rest.split_once('_') else {
            return Err(misuse("expected `l__<rule>_<pos>`"));
        };
        let rule = r.parse().map_err(|_| misuse("non-numeric rule id"))?;
        let pos = i.parse().map_err(|_| misuse("non-numeric head position"))?;
        Ok(Atom::Aux { rule, pos })
    } else if is_valid_name(token) {
        Ok(Atom::Plain(token.to_string()))
    } else {
        Err(parse_err(lineno, format!("invalid atom `{token}`")))
    }
}

/// Parses the program text format: `a.`, `a :- b, not c.`, `a | b :- ...`,
/// `:- a, b.`; `%` comments.
pub fn parse_program(text: &str) -> Result<Program> {
    let mut program = Program::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('%') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut rest = line.trim();
        while !rest.is_empty() {
            let end = rest
                .find('.')
                .ok_or_else(|| parse_err(lineno + 1, format!("rule `{rest}` missing final `.`")))?;
            let stmt = rest[..end].trim();
            rest = rest[end + 1..].trim_start();
            if stmt.is_empty() {
                return Err(parse_err(lineno + 1, "empty rule"));
            }
            program.push(parse_rule(stmt, lineno + 1)?);
        }
    }
    Ok(program)
}

fn parse_rule(stmt: &str, lineno: usize) -> Result<Rule> {
    let (head_text, body_text) = match stmt.split_once(":-") {
        Some((h, b)) => (h.trim(), Some(b.trim())),
        None => (stmt, None),
    };

    let mut head = Vec::new();
    if !head_text.is_empty() {
        for token in head_text.split('|') {
            head.push(decode_atom(token.trim(), lineno)?);
        }
    } else if body_text.is_none() {
        return Err(parse_err(lineno, "rule with neither head nor body"));
    }

    let mut pos = Vec::new();
    let mut neg = Vec::new();
    if let Some(body) = body_text {
        if body.is_empty() {
            return Err(parse_err(lineno, "empty body after `:-`"));
        }
        for token in body.split(',') {
            let token = token.trim();
            if let Some(atom) = token.strip_prefix("not ") {
                neg.push(decode_atom(atom.trim(), lineno)?);
            } else {
                pos.push(decode_atom(token, lineno)?);
            }
        }
    }
    if head.is_empty() && pos.is_empty() && neg.is_empty() {
        return Err(parse_err(lineno, "rule with neither head nor body"));
    }
    Ok(Rule::new(head, pos, neg))
}

pub(crate) fn render_rule(rule: &Rule) -> String {
    let head = rule
        .head
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(" | ");
    let body: Vec<String> = rule
        .pos_body
        .iter()
        .map(|a| a.to_string())
        .chain(rule.neg_body.iter().map(|a| format!("not {a}")))
        .collect();
    match (head.is_empty(), body.is_empty()) {
        (false, true) => format!("{head}."),
        (false, false) => format!("{head} :- {}.", body.join(", ")),
        (true, false) => format!(":- {}.", body.join(", ")),
        (true, true) => ":-.".to_string(),
    }
}

/// Renders a program, one rule per line, in rule order.
pub fn render_program(p: &Program) -> String {
    p.rules().iter().map(|r| render_rule(r) + "\n").collect()
}
