//! Line-oriented text format for DFAs (`dfa v1`).
//!
//! ```text
//! dfa v1
//! states <n>
//! alphabet <l1> <l2> ...
//! initial <q>
//! final <q> [<q> ...]
//! trans <letter> <img1> <img2> ... <imgn>
//! ```
//!
//! States are 1-based. `#` starts a comment; blank lines are ignored; the
//! header keywords appear in the order shown and there is one `trans` line
//! per letter. Rendering writes the `trans` lines in alphabet order.

use std::fmt::Write as _;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::transformation::Transformation;

pub const HEADER: &str = "dfa v1";

pub fn render_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    let join = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(" ");
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "states {}", d.state_count()).unwrap();
    writeln!(out, "alphabet {}", d.alphabet().join(" ")).unwrap();
    writeln!(out, "initial {}", d.initial() + 1).unwrap();
    let finals = join(&mut d.finals().map(|q| (q + 1).to_string()));
    if finals.is_empty() {
        writeln!(out, "final").unwrap();
    } else {
        writeln!(out, "final {finals}").unwrap();
    }
    for (letter, t) in d.alphabet().iter().zip(d.delta()) {
        let images = join(&mut t.image_one_based().into_iter().map(|q| q.to_string()));
        writeln!(out, "trans {letter} {images}").unwrap();
    }
    out
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn keyword(&self) -> &'a str {
        self.tokens[0].text
    }

    fn args(&self) -> &[Token<'a>] {
        &self.tokens[1..]
    }

    fn end_column(&self) -> usize {
        self.tokens
            .last()
            .map_or(1, |t| t.column + t.text.chars().count())
    }

    fn expect_keyword(&self, keyword: &str) -> Result<()> {
        if self.keyword() == keyword {
            Ok(())
        } else {
            Err(self.error(
                self.tokens[0].column,
                format!("expected `{keyword}`, found `{}`", self.keyword()),
            ))
        }
    }

    fn single_arg(&self) -> Result<&Token<'a>> {
        match self.args() {
            [one] => Ok(one),
            [] => Err(self.error(
                self.end_column(),
                format!("`{}` needs a value", self.keyword()),
            )),
            [_, extra, ..] => Err(self.error(extra.column, "unexpected extra value")),
        }
    }

    fn number(&self, token: &Token<'_>) -> Result<usize> {
        token
            .text
            .parse()
            .map_err(|_| self.error(token.column, format!("`{}` is not a number", token.text)))
    }

    fn state(&self, token: &Token<'_>, n: usize) -> Result<usize> {
        let q = self.number(token)?;
        if q == 0 || q > n {
            return Err(self.error(token.column, format!("state {q} out of range 1..={n}")));
        }
        Ok(q - 1)
    }
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (col, (byte, ch)) in content.char_indices().enumerate() {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some((byte, col)),
                    (true, Some((b, c))) => {
                        tokens.push(Token {
                            text: &content[b..byte],
                            column: c + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some((b, c)) = start {
                tokens.push(Token {
                    text: &content[b..],
                    column: c + 1,
                });
            }
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        })
        .collect()
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let lines = tokenize(text);
    let mut it = lines.iter();
    let last_line = text.lines().count().max(1);
    let mut next = |what: &str| {
        it.next().ok_or_else(|| Error::Parse {
            line: last_line,
            column: 1,
            message: format!("unexpected end of input, expected `{what}`"),
        })
    };

    let header = next("dfa v1")?;
    let header_text: Vec<&str> = header.tokens.iter().map(|t| t.text).collect();
    if header_text != ["dfa", "v1"] {
        return Err(header.error(1, format!("expected header `{HEADER}`")));
    }

    let states = next("states")?;
    states.expect_keyword("states")?;
    let n = states.number(states.single_arg()?)?;
    if n == 0 {
        return Err(states.error(states.args()[0].column, "a DFA needs at least one state"));
    }

    let alphabet_line = next("alphabet")?;
    alphabet_line.expect_keyword("alphabet")?;
    if alphabet_line.args().is_empty() {
        return Err(alphabet_line.error(alphabet_line.end_column(), "the alphabet is empty"));
    }
    let mut alphabet: Vec<String> = Vec::new();
    for token in alphabet_line.args() {
        if alphabet.iter().any(|l| l == token.text) {
            return Err(
                alphabet_line.error(token.column, format!("duplicate letter `{}`", token.text))
            );
        }
        alphabet.push(token.text.to_string());
    }

    let initial_line = next("initial")?;
    initial_line.expect_keyword("initial")?;
    let initial = initial_line.state(initial_line.single_arg()?, n)?;

    let final_line = next("final")?;
    final_line.expect_keyword("final")?;
    let mut finals = vec![false; n];
    for token in final_line.args() {
        finals[final_line.state(token, n)?] = true;
    }

    let mut delta: Vec<Option<Transformation>> = vec![None; alphabet.len()];
    for line in it {
        line.expect_keyword("trans")?;
        let Some((letter, images)) = line.args().split_first() else {
            return Err(line.error(line.end_column(), "`trans` needs a letter"));
        };
        let a = alphabet
            .iter()
            .position(|l| l == letter.text)
            .ok_or_else(|| {
                line.error(letter.column, format!("unknown letter `{}`", letter.text))
            })?;
        if delta[a].is_some() {
            return Err(line.error(
                letter.column,
                format!("second `trans` line for `{}`", letter.text),
            ));
        }
        if images.len() != n {
            let column = images.get(n).map_or(line.end_column(), |t| t.column);
            return Err(line.error(
                column,
                format!(
                    "letter `{}` has {} images, expected {n}",
                    letter.text,
                    images.len()
                ),
            ));
        }
        let image = images
            .iter()
            .map(|t| line.state(t, n).map(|q| q as u32))
            .collect::<Result<Vec<_>>>()?;
        delta[a] = Some(Transformation::new(image)?);
    }

    let delta = delta
        .into_iter()
        .zip(&alphabet)
        .map(|(t, letter)| {
            t.ok_or_else(|| Error::Parse {
                line: last_line,
                column: 1,
                message: format!("missing `trans` line for letter `{letter}`"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Dfa::new(alphabet, delta, initial, finals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{random_dfa, RandomSpec};
    use crate::witnesses::*;
    use proptest::prelude::*;

    #[test]
    fn renders_regular_witness() {
        let text = render_dfa(&regular_witness(3).unwrap());
        assert_eq!(
            text,
            "dfa v1\nstates 3\nalphabet a b c\ninitial 1\nfinal 3\n\
             trans a 2 3 1\ntrans b 2 1 3\ntrans c 1 2 1\n"
        );
        assert_eq!(parse_dfa(&text).unwrap(), regular_witness(3).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text =
            "# a DFA\n\ndfa v1\nstates 2   # two\nalphabet x\ninitial 2\nfinal\n\ntrans x 1 1\n";
        let d = parse_dfa(text).unwrap();
        assert_eq!(d.initial(), 1);
        assert_eq!(d.finals().count(), 0);
        assert_eq!(
            render_dfa(&d),
            "dfa v1\nstates 2\nalphabet x\ninitial 2\nfinal\ntrans x 1 1\n"
        );
    }

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_dfa(text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => (line, column, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_trans_line_names_letter() {
        let (_, _, message) =
            parse_err("dfa v1\nstates 2\nalphabet a b\ninitial 1\nfinal 2\ntrans a 2 1\n");
        assert!(message.contains("`b`"), "{message}");
    }

    #[test]
    fn out_of_range_states() {
        let (line, column, message) =
            parse_err("dfa v1\nstates 2\nalphabet a\ninitial 1\nfinal 2\ntrans a 0 1\n");
        assert_eq!((line, column), (6, 9));
        assert!(message.contains("out of range"));
        let (line, column, _) =
            parse_err("dfa v1\nstates 2\nalphabet a\ninitial 1\nfinal 2\ntrans a 1 3\n");
        assert_eq!((line, column), (6, 11));
        let (line, _, _) =
            parse_err("dfa v1\nstates 2\nalphabet a\ninitial 3\nfinal 2\ntrans a 1 1\n");
        assert_eq!(line, 4);
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(parse_err("dfa v2\n").0, 1);
        assert_eq!(parse_err("dfa v1\nstate 2\n").0, 2);
        assert_eq!(parse_err("dfa v1\nstates two\n").1, 8);
        let (line, _, message) =
            parse_err("dfa v1\nstates 2\nalphabet a\ninitial 1\nfinal 2\ntrans a 1\n");
        assert_eq!(line, 6);
        assert!(message.contains("expected 2"));
        let (_, _, message) = parse_err(
            "dfa v1\nstates 2\nalphabet a\ninitial 1\nfinal 2\ntrans a 1 1\ntrans a 1 1\n",
        );
        assert!(message.contains("second"));
        let (_, _, message) =
            parse_err("dfa v1\nstates 2\nalphabet a\ninitial 1\nfinal 2\ntrans z 1 1\n");
        assert!(message.contains("unknown letter"));
        assert!(parse_err("dfa v1\nstates 2\n").2.contains("end of input"));
    }

    #[test]
    fn witnesses_round_trip() {
        for class in WitnessClass::ALL {
            for n in class.min_states()..=9 {
                let d = witness(class, n).unwrap();
                assert_eq!(parse_dfa(&render_dfa(&d)).unwrap(), d);
            }
        }
    }

    proptest! {
        #[test]
        fn random_round_trip(n in 1usize..=9, k in 1usize..=4, seed in any::<u64>()) {
            let d = random_dfa(&RandomSpec::new(n, k, seed, 0.4));
            let text = render_dfa(&d);
            prop_assert_eq!(parse_dfa(&text).unwrap(), d);
            prop_assert_eq!(render_dfa(&parse_dfa(&text).unwrap()), text);
        }
    }
}
