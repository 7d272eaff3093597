use std::collections::BTreeSet;
use std::fmt;

use super::{char_symbol, symbol_char, DBParams};
use crate::error::{Error, Result};

/// A directed Hamiltonian cycle of `B(n, m)` written as the cyclic word of
/// its appended letters, rotated to start with `0^m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeBruijnWord {
    params: DBParams,
    letters: Vec<u8>,
}

impl DeBruijnWord {
    /// Decodes the linear form: `n^m + m - 1` letters whose last `m - 1`
    /// repeat the first `m - 1`, every length-`m` window distinct.
    pub fn decode(text: &str, params: DBParams) -> Result<Self> {
        let expected = params.linear_len();
        let chars: Vec<char> = text.trim().chars().collect();
        if chars.len() != expected {
            return Err(Error::BadLength {
                expected,
                got: chars.len(),
            });
        }
        let mut linear = Vec::with_capacity(expected);
        for (position, &letter) in chars.iter().enumerate() {
            match char_symbol(letter) {
                Some(s) if (s as usize) < params.n() => linear.push(s),
                _ => {
                    return Err(Error::BadAlphabet {
                        letter,
                        position,
                        alphabet: params.n(),
                    })
                }
            }
        }
        let cyclic_len = params.vertex_count();
        let wrap = params.m() - 1;
        if linear[cyclic_len..] != linear[..wrap] {
            return Err(Error::WrapMismatch(wrap));
        }
        linear.truncate(cyclic_len);
        DeBruijnWord::from_cyclic(params, linear)
    }

    /// Decodes the linear form, taking `n` as one more than the largest
    /// letter and `m` from the length.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut n = 2;
        for (position, letter) in text.chars().enumerate() {
            let s = char_symbol(letter).ok_or(Error::BadAlphabet {
                letter,
                position,
                alphabet: 36,
            })?;
            n = n.max(s as usize + 1);
        }
        let len = text.chars().count();
        let m = (1..=32)
            .take_while(|&m| {
                (n as u64)
                    .checked_pow(m as u32)
                    .is_some_and(|p| p < 1 << 40)
            })
            .find(|&m| n.pow(m as u32) + m - 1 == len)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "length {len} is not n^m + m - 1 for alphabet size {n}"
                ))
            })?;
        DeBruijnWord::decode(text, DBParams::new(n, m)?)
    }

    /// Validates a cyclic letter sequence and rotates it to start with `0^m`.
    pub fn from_cyclic(params: DBParams, letters: Vec<u8>) -> Result<Self> {
        let len = params.vertex_count();
        if letters.len() != len {
            return Err(Error::BadLength {
                expected: len,
                got: letters.len(),
            });
        }
        if let Some(position) = letters.iter().position(|&s| s as usize >= params.n()) {
            return Err(Error::BadAlphabet {
                letter: symbol_char(letters[position]),
                position,
                alphabet: params.n(),
            });
        }
        let mut seen = vec![false; len];
        let mut start = 0;
        for (position, v) in cyclic_windows(params, &letters).enumerate() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::RepeatedWindow {
                    window: params.vertex_label(v),
                    position,
                });
            }
            if v == 0 {
                start = position;
            }
        }
        let mut letters = letters;
        letters.rotate_left(start);
        Ok(DeBruijnWord { params, letters })
    }

    pub fn params(&self) -> DBParams {
        self.params
    }

    /// The cyclic word, starting with `0^m`.
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Linear text form: the cyclic word followed by its first `m - 1` letters.
    pub fn encode(&self) -> String {
        let wrap = self.params.m() - 1;
        self.letters
            .iter()
            .chain(&self.letters[..wrap])
            .map(|&s| symbol_char(s))
            .collect()
    }

    /// Vertex codes in cycle order, starting at `0^m`.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        cyclic_windows(self.params, &self.letters)
    }

    pub fn arcs(&self) -> ArcSet {
        arcs_of(self)
    }

    pub fn sigma(&self) -> DeBruijnWord {
        sigma(self)
    }
}

impl fmt::Display for DeBruijnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for DeBruijnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.params, self.encode())
    }
}

/// Base-`n` values of the cyclic windows of length `len` starting at each position.
fn cyclic_windows_of_len(
    params: DBParams,
    letters: &[u8],
    len: usize,
) -> impl Iterator<Item = usize> + '_ {
    let n = params.n();
    let modulus = n.pow(len as u32);
    let total = letters.len();
    let first = letters
        .iter()
        .cycle()
        .take(len)
        .fold(0, |acc, &s| acc * n + s as usize);
    (0..total).scan(first, move |code, i| {
        let current = *code;
        *code = (*code * n + letters[(i + len) % total] as usize) % modulus;
        Some(current)
    })
}

fn cyclic_windows(params: DBParams, letters: &[u8]) -> impl Iterator<Item = usize> + '_ {
    cyclic_windows_of_len(params, letters, params.m())
}

/// Arcs of `B(n, m)` stored as codes of their `m + 1` letter windows.
#[derive(Clone, PartialEq, Eq)]
pub struct ArcSet {
    params: DBParams,
    arcs: BTreeSet<usize>,
}

impl ArcSet {
    pub fn new(params: DBParams) -> Self {
        ArcSet {
            params,
            arcs: BTreeSet::new(),
        }
    }

    pub fn params(&self) -> DBParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Inserts the arc `from -> to`; the overlap rule must hold.
    pub fn insert(&mut self, from: usize, to: usize) -> Result<()> {
        let p = self.params;
        if from >= p.vertex_count() || to >= p.vertex_count() || p.successor(from, to % p.n()) != to
        {
            return Err(Error::InvalidParameter(format!(
                "({from},{to}) is not an arc of {p}"
            )));
        }
        self.arcs.insert(from * p.n() + to % p.n());
        Ok(())
    }

    pub fn contains(&self, from: usize, to: usize) -> bool {
        let p = self.params;
        p.successor(from, to % p.n()) == to && self.arcs.contains(&(from * p.n() + to % p.n()))
    }

    /// `(from, to)` vertex codes in window order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.params.n();
        let modulus = self.params.vertex_count();
        self.arcs.iter().map(move |&a| (a / n, a % modulus))
    }

    pub fn codes(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().copied()
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        ArcSet {
            params: self.params,
            arcs: self.arcs.intersection(&other.arcs).copied().collect(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.arcs
            .iter()
            .map(|&a| self.params.arc_label(a))
            .collect()
    }
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

/// One arc per cyclic position of the word.
pub fn arcs_of(word: &DeBruijnWord) -> ArcSet {
    ArcSet {
        params: word.params,
        arcs: cyclic_windows_of_len(word.params, &word.letters, word.params.m() + 1).collect(),
    }
}

/// Letterwise image under the symbol rotation fixing 0, re-canonicalised.
pub fn sigma(word: &DeBruijnWord) -> DeBruijnWord {
    let p = word.params;
    let letters = word.letters.iter().map(|&s| p.sigma_symbol(s)).collect();
    DeBruijnWord::from_cyclic(p, letters).expect("sigma is an automorphism of B(n,m)")
}

/// `[seed, sigma(seed), ..., sigma^(n-2)(seed)]`.
pub fn rotation_family(seed: &DeBruijnWord) -> Vec<DeBruijnWord> {
    let count = seed.params.n() - 1;
    std::iter::successors(Some(seed.clone()), |w| Some(sigma(w)))
        .take(count)
        .collect()
}
