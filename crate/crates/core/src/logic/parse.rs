//! Formula grammar.
//!
//! ```text
//! implication := disjunction ( "=>" implication )?
//! disjunction := conjunction ( "|" conjunction )*
//! conjunction := unary ( "&" unary )*
//! unary       := "!" unary | primary
//! primary     := "true" | "false" | identifier | "(" implication ")"
//! ```

use super::{Sentence, Vocabulary};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'!' => Token::Not,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'(' => Token::Open,
            b')' => Token::Close,
            b'=' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((i, Token::Implies));
                i += 2;
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    pos: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn implication(&mut self) -> Result<Sentence> {
        let lhs = self.disjunction()?;
        if self.eat(&Token::Implies) {
            Ok(lhs.implies(self.implication()?))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Sentence> {
        let mut s = self.conjunction()?;
        while self.eat(&Token::Or) {
            s = s.or(self.conjunction()?);
        }
        Ok(s)
    }

    fn conjunction(&mut self) -> Result<Sentence> {
        let mut s = self.unary()?;
        while self.eat(&Token::And) {
            s = s.and(self.unary()?);
        }
        Ok(s)
    }

    fn unary(&mut self) -> Result<Sentence> {
        if self.eat(&Token::Not) {
            Ok(self.unary()?.negate())
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<Sentence> {
        match self.peek().cloned() {
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(match name.as_str() {
                    "true" => Sentence::Const(true),
                    "false" => Sentence::Const(false),
                    _ => Sentence::Atom(name),
                })
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.implication()?;
                if !self.eat(&Token::Close) {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            Some(tok) => self.error(format!("unexpected {}", describe(&tok))),
            None => self.error("unexpected end of formula"),
        }
    }
}

fn describe(tok: &Token) -> &'static str {
    match tok {
        Token::Ident(_) => "identifier",
        Token::Not => "`!`",
        Token::And => "`&`",
        Token::Or => "`|`",
        Token::Implies => "`=>`",
        Token::Open => "`(`",
        Token::Close => "`)`",
    }
}

impl std::str::FromStr for Sentence {
    type Err = Error;

    /// Parses without checking atoms against any vocabulary.
    fn from_str(text: &str) -> Result<Self> {
        let mut parser = Parser {
            tokens: tokenize(text)?,
            pos: 0,
            end: text.len(),
        };
        let s = parser.implication()?;
        if parser.pos != parser.tokens.len() {
            let tok = parser.tokens[parser.pos].1.clone();
            return parser.error(format!("unexpected {} after formula", describe(&tok)));
        }
        Ok(s)
    }
}

/// Parses `text` and checks that every atom belongs to `vocab`.
pub fn parse_sentence(text: &str, vocab: &Vocabulary) -> Result<Sentence> {
    let s: Sentence = text.parse()?;
    vocab.check(&s)?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Language;

    fn p(text: &str) -> Sentence {
        text.parse().unwrap()
    }

    #[test]
    fn disjunction_is_left_nested() {
        let o = Vocabulary::new(Language::Objection, ["O1", "O2", "O3", "O4", "O5"]).unwrap();
        let s = parse_sentence("O4 | O3 | O1", &o).unwrap();
        let expected = Sentence::atom("O4")
            .or(Sentence::atom("O3"))
            .or(Sentence::atom("O1"));
        assert_eq!(s, expected);
    }

    #[test]
    fn constants() {
        assert_eq!(p("true"), Sentence::Const(true));
        assert_eq!(p(" false "), Sentence::Const(false));
    }

    #[test]
    fn unknown_atom_is_named() {
        let v = Vocabulary::new(Language::Domain, ["P1", "P2", "P3", "P4", "P5"]).unwrap();
        assert_eq!(
            parse_sentence("P1 & (P9)", &v).unwrap_err(),
            Error::UnknownAtom("P9".into())
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            p("!a & b | c => d => e").to_string(),
            "!a & b | c => d => e"
        );
        assert_eq!(
            p("a => b => c"),
            Sentence::atom("a").implies(Sentence::atom("b").implies(Sentence::atom("c")))
        );
        assert_eq!(
            p("a | b & c"),
            Sentence::atom("a").or(Sentence::atom("b").and(Sentence::atom("c")))
        );
        assert_eq!(p("!!a"), Sentence::atom("a").negate().negate());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            "a & ".parse::<Sentence>().unwrap_err(),
            Error::Syntax {
                pos: 4,
                message: "unexpected end of formula".into()
            }
        );
        assert!(matches!(
            "a # b".parse::<Sentence>().unwrap_err(),
            Error::Syntax { pos: 2, .. }
        ));
        assert!(matches!(
            "(a | b".parse::<Sentence>().unwrap_err(),
            Error::Syntax { pos: 6, .. }
        ));
        assert!(matches!(
            "a b".parse::<Sentence>().unwrap_err(),
            Error::Syntax { pos: 2, .. }
        ));
        assert!(matches!(
            "a = b".parse::<Sentence>().unwrap_err(),
            Error::Syntax { pos: 2, .. }
        ));
    }
}
