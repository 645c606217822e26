//! Ultimately periodic words `u·v^ω`.

use crate::error::{Error, Result};

/// A lasso word over letter indices. `cycle` is never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lasso {
    pub spoke: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl Lasso {
    pub fn new(spoke: Vec<usize>, cycle: Vec<usize>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Precondition("lasso cycle must be nonempty".into()));
        }
        Ok(Lasso { spoke, cycle })
    }

    pub fn len(&self) -> usize {
        self.spoke.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The letter at position `i` of the infinite word.
    pub fn letter_at(&self, i: usize) -> usize {
        if i < self.spoke.len() {
            self.spoke[i]
        } else {
            self.cycle[(i - self.spoke.len()) % self.cycle.len()]
        }
    }

    /// Parses `U:V`. A part containing whitespace is split on whitespace;
    /// otherwise, when every letter of `alphabet` is a single character,
    /// each character is a letter; otherwise the whole part is one letter.
    pub fn parse(text: &str, alphabet: &[String]) -> Result<Lasso> {
        let err = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        let (u, v) = text
            .split_once(':')
            .ok_or_else(|| err(format!("lasso '{text}' must have the form U:V")))?;
        let single = alphabet.iter().all(|l| l.chars().count() == 1);
        let tokens = |part: &str| -> Result<Vec<usize>> {
            let part = part.trim();
            let toks: Vec<String> = if part.is_empty() {
                Vec::new()
            } else if part.contains(char::is_whitespace) {
                part.split_whitespace().map(str::to_string).collect()
            } else if single {
                part.chars().map(String::from).collect()
            } else {
                vec![part.to_string()]
            };
            toks.iter()
                .map(|t| {
                    alphabet
                        .iter()
                        .position(|l| l == t)
                        .ok_or_else(|| err(format!("unknown letter '{t}' in lasso")))
                })
                .collect()
        };
        let spoke = tokens(u)?;
        let cycle = tokens(v)?;
        if cycle.is_empty() {
            return Err(err("lasso cycle must be nonempty".into()));
        }
        Ok(Lasso { spoke, cycle })
    }

    /// Formats as `U:V`, the inverse of [`Lasso::parse`].
    pub fn display(&self, alphabet: &[String]) -> String {
        let sep = if alphabet.iter().all(|l| l.chars().count() == 1) { "" } else { " " };
        let part = |w: &[usize]| {
            w.iter()
                .map(|&a| alphabet[a].as_str())
                .collect::<Vec<_>>()
                .join(sep)
        };
        format!("{}:{}", part(&self.spoke), part(&self.cycle))
    }

    /// The number of lassos [`Lasso::enumerate`] produces.
    pub fn count(num_letters: usize, max_spoke: usize, max_cycle: usize) -> u128 {
        let k = num_letters as u128;
        let spokes = (0..=max_spoke as u32).fold(0u128, |acc, i| acc.saturating_add(k.saturating_pow(i)));
        let cycles = (1..=max_cycle as u32).fold(0u128, |acc, i| acc.saturating_add(k.saturating_pow(i)));
        spokes.saturating_mul(cycles)
    }

    /// All lassos with `|u| <= max_spoke` and `1 <= |v| <= max_cycle`,
    /// ordered by total length, then spoke length, then lexicographically.
    pub fn enumerate(num_letters: usize, max_spoke: usize, max_cycle: usize) -> Vec<Lasso> {
        let mut out = Vec::new();
        for total in 1..=max_spoke + max_cycle {
            for us in 0..=max_spoke.min(total - 1) {
                let vs = total - us;
                if vs > max_cycle {
                    continue;
                }
                for w in words(num_letters, total) {
                    out.push(Lasso {
                        spoke: w[..us].to_vec(),
                        cycle: w[us..].to_vec(),
                    });
                }
            }
        }
        out
    }
}

/// All words of length `len`, in lexicographic order.
pub fn words(num_letters: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..num_letters).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Vec<String> {
        vec!["a".into(), "b".into()]
    }

    #[test]
    fn parse_and_display() {
        let l = Lasso::parse("ab:ba", &ab()).unwrap();
        assert_eq!(l.spoke, vec![0, 1]);
        assert_eq!(l.cycle, vec![1, 0]);
        assert_eq!(l.display(&ab()), "ab:ba");
        let e = Lasso::parse(":b", &ab()).unwrap();
        assert!(e.spoke.is_empty());
        assert!(Lasso::parse("a:", &ab()).is_err());
        assert!(Lasso::parse("c:a", &ab()).is_err());
        let long = vec!["go".to_string(), "stop".to_string()];
        let l = Lasso::parse("go stop:stop", &long).unwrap();
        assert_eq!(l.display(&long), "go stop:stop");
    }

    #[test]
    fn enumeration_order_and_count() {
        let all = Lasso::enumerate(2, 2, 3);
        assert_eq!(all.len(), 7 * 14);
        assert_eq!(all[0], Lasso::new(vec![], vec![0]).unwrap());
        for w in all.windows(2) {
            let key = |l: &Lasso| (l.len(), l.spoke.len());
            assert!(key(&w[0]) <= key(&w[1]));
        }
    }

    #[test]
    fn letters_unfold() {
        let l = Lasso::new(vec![0], vec![1, 0]).unwrap();
        let seq: Vec<_> = (0..6).map(|i| l.letter_at(i)).collect();
        assert_eq!(seq, vec![0, 1, 0, 1, 0, 1]);
    }
}
