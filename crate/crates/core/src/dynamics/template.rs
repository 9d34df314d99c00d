use std::fmt;
use std::str::FromStr;

use super::rng::SplitMix64;
use crate::error::{Error, Result};

/// Binary sequence selecting `f_c0` (symbol 0) or `f_c1` (symbol 1) at each
/// step. Symbol indices are 0-based: `symbol(0)` drives the first step.
#[derive(Clone, Debug, PartialEq)]
pub enum SymbolicTemplate {
    /// `s_n = block[n mod k]`, unbounded.
    Periodic { block: Vec<u8> },
    /// An explicit word of length `N`.
    Finite { word: Vec<u8> },
    /// `N` copies of `base` except `error` at 1-based position `position`.
    SingleError {
        position: usize,
        len: usize,
        base: u8,
        error: u8,
    },
    /// `s_n = 1` iff the `n`-th unit draw of `SplitMix64(seed)` is `< p`.
    RandomSeeded { seed: u64, len: usize, p: f64 },
    /// First `len` binary digits of `a`, taking the infinite expansion
    /// (`...0111...`) for dyadic values.
    BinaryExpansion { a: f64, len: usize },
}

/// The first `k` symbols of a template.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TemplateRoot {
    word: Vec<u8>,
}

impl TemplateRoot {
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn into_template(self) -> SymbolicTemplate {
        SymbolicTemplate::Finite { word: self.word }
    }
}

fn check_bits(word: &[u8], what: &str) -> Result<()> {
    if word.is_empty() {
        return Err(Error::InvalidTemplate(format!("{what} must be nonempty")));
    }
    if let Some(b) = word.iter().find(|&&b| b > 1) {
        return Err(Error::InvalidTemplate(format!("{what} contains non-binary symbol {b}")));
    }
    Ok(())
}

fn check_bit(b: u8, what: &str) -> Result<()> {
    if b > 1 {
        return Err(Error::InvalidTemplate(format!("{what} must be 0 or 1, got {b}")));
    }
    Ok(())
}

/// Digit `index` (0-based) of the infinite binary expansion of `a` in `[0, 1]`.
///
/// Doubling and subtracting one are exact in binary64 for values in
/// `[0, 2]`, so the digits are exact for every representable `a`. Taking the
/// digit as 1 only when the doubled remainder strictly exceeds one selects
/// the non-terminating expansion of dyadic values.
fn expansion_digits(a: f64, len: usize) -> impl Iterator<Item = u8> {
    let mut x = a;
    (0..len).map(move |_| {
        x *= 2.0;
        if x > 1.0 {
            x -= 1.0;
            1
        } else {
            0
        }
    })
}

impl SymbolicTemplate {
    pub fn periodic(block: impl Into<Vec<u8>>) -> Result<Self> {
        let block = block.into();
        check_bits(&block, "periodic block")?;
        Ok(Self::Periodic { block })
    }

    pub fn finite(word: impl Into<Vec<u8>>) -> Result<Self> {
        let word = word.into();
        check_bits(&word, "word")?;
        Ok(Self::Finite { word })
    }

    /// `position` is 1-based, `1 <= position <= len`.
    pub fn single_error(position: usize, len: usize, base: u8, error: u8) -> Result<Self> {
        check_bit(base, "base symbol")?;
        check_bit(error, "error symbol")?;
        if len == 0 || position == 0 || position > len {
            return Err(Error::InvalidTemplate(format!(
                "error position k={position} must satisfy 1 <= k <= N={len}"
            )));
        }
        Ok(Self::SingleError {
            position,
            len,
            base,
            error,
        })
    }

    /// The perfect all-ones template with one `0` at 1-based `position`.
    pub fn propagating_error(position: usize, len: usize) -> Result<Self> {
        Self::single_error(position, len, 1, 0)
    }

    pub fn random(seed: u64, len: usize, p: f64) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidTemplate("random template length must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidTemplate(format!("probability p={p} outside [0, 1]")));
        }
        Ok(Self::RandomSeeded { seed, len, p })
    }

    pub fn binary_expansion(a: f64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidTemplate("expansion length must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::InvalidTemplate(format!("a={a} outside [0, 1]")));
        }
        Ok(Self::BinaryExpansion { a, len })
    }

    /// Length of a finite template, `None` for periodic ones.
    pub fn len(&self) -> Option<usize> {
        match self {
            Self::Periodic { .. } => None,
            Self::Finite { word } => Some(word.len()),
            Self::SingleError { len, .. }
            | Self::RandomSeeded { len, .. }
            | Self::BinaryExpansion { len, .. } => Some(*len),
        }
    }

    /// Never true: every variant holds at least one symbol.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, Self::Periodic { .. })
    }

    pub fn symbol(&self, n: usize) -> Result<u8> {
        if let Some(len) = self.len() {
            if n >= len {
                return Err(Error::IndexOutOfRange { index: n, len });
            }
        }
        Ok(match self {
            Self::Periodic { block } => block[n % block.len()],
            Self::Finite { word } => word[n],
            Self::SingleError {
                position,
                base,
                error,
                ..
            } => {
                if n + 1 == *position {
                    *error
                } else {
                    *base
                }
            }
            Self::RandomSeeded { seed, p, .. } => {
                u8::from(SplitMix64::to_unit(SplitMix64::at(*seed, n as u64)) < *p)
            }
            Self::BinaryExpansion { a, .. } => {
                expansion_digits(*a, n + 1).last().expect("n + 1 >= 1 digits")
            }
        })
    }

    /// The first `n` symbols.
    pub fn word(&self, n: usize) -> Result<Vec<u8>> {
        if let Some(len) = self.len() {
            if n > len {
                return Err(Error::TemplateTooShort { max_iter: n, len });
            }
        }
        Ok(match self {
            Self::Periodic { block } => block.iter().copied().cycle().take(n).collect(),
            Self::Finite { word } => word[..n].to_vec(),
            Self::RandomSeeded { seed, p, .. } => {
                let mut g = SplitMix64::new(*seed);
                (0..n).map(|_| u8::from(g.next_f64() < *p)).collect()
            }
            Self::BinaryExpansion { a, .. } => expansion_digits(*a, n).collect(),
            Self::SingleError { .. } => (0..n).map(|i| self.symbol(i)).collect::<Result<_>>()?,
        })
    }

    /// The whole word of a finite template; `None` for periodic ones.
    pub fn full_word(&self) -> Option<Vec<u8>> {
        self.len().map(|n| self.word(n).expect("n equals the length"))
    }

    /// Drops the first `j` symbols: `s'_n = s_{n+j}`.
    ///
    /// A periodic block is rotated, so shifting by a multiple of the period
    /// gives back the same symbol stream. Finite variants become an explicit
    /// word of length `N - j`.
    pub fn shift(&self, j: usize) -> Result<Self> {
        match self {
            Self::Periodic { block } => {
                let mut block = block.clone();
                let k = block.len();
                block.rotate_left(j % k);
                Ok(Self::Periodic { block })
            }
            _ => {
                let len = self.len().expect("finite variant");
                if j >= len {
                    return Err(Error::IndexOutOfRange { index: j, len });
                }
                let word = self.word(len)?;
                Ok(Self::Finite {
                    word: word[j..].to_vec(),
                })
            }
        }
    }

    /// The `k`-root: the first `k` symbols.
    pub fn k_root(&self, k: usize) -> Result<TemplateRoot> {
        if k == 0 {
            return Err(Error::InvalidArgument("root length must be >= 1".into()));
        }
        Ok(TemplateRoot {
            word: self.word(k)?,
        })
    }

    /// True when both templates agree on their first `k` symbols.
    pub fn shares_root(&self, other: &Self, k: usize) -> Result<bool> {
        Ok(self.k_root(k)? == other.k_root(k)?)
    }
}

fn bits_to_string(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
}

/// Canonical spec string, accepted back by [`FromStr`].
impl fmt::Display for SymbolicTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Periodic { block } => write!(f, "periodic:{}", bits_to_string(block)),
            Self::Finite { word } => write!(f, "word:{}", bits_to_string(word)),
            Self::SingleError {
                position,
                len,
                base,
                error,
            } => {
                write!(f, "error:k={position},N={len}")?;
                if (*base, *error) != (1, 0) {
                    write!(f, ",base={base},err={error}")?;
                }
                Ok(())
            }
            Self::RandomSeeded { seed, len, p } => write!(f, "random:seed={seed},N={len},p={p}"),
            Self::BinaryExpansion { a, len } => write!(f, "binary:a={a},L={len}"),
        }
    }
}

struct SpecParser<'a> {
    spec: &'a str,
}

impl SpecParser<'_> {
    fn fail(&self, token: &str, reason: impl Into<String>) -> Error {
        Error::TemplateSpec {
            spec: self.spec.to_string(),
            token: token.to_string(),
            reason: reason.into(),
        }
    }

    fn bits(&self, body: &str) -> Result<Vec<u8>> {
        if body.is_empty() {
            return Err(self.fail(body, "expected a nonempty 0/1 word"));
        }
        body.chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(self.fail(&ch.to_string(), "expected 0 or 1")),
            })
            .collect()
    }

    /// Splits `key=value,key=value` and checks the allowed and required keys.
    fn fields<'b>(
        &self,
        body: &'b str,
        allowed: &[&str],
        required: &[&str],
    ) -> Result<Vec<(&'b str, &'b str)>> {
        let mut out: Vec<(&str, &str)> = Vec::new();
        for item in body.split(',') {
            let Some((key, value)) = item.split_once('=') else {
                return Err(self.fail(item, "expected key=value"));
            };
            if !allowed.contains(&key) {
                return Err(self.fail(key, format!("unknown field (expected one of {allowed:?})")));
            }
            if out.iter().any(|(k, _)| *k == key) {
                return Err(self.fail(key, "duplicate field"));
            }
            out.push((key, value));
        }
        for key in required {
            if !out.iter().any(|(k, _)| k == key) {
                return Err(self.fail(key, "missing required field"));
            }
        }
        Ok(out)
    }

    fn get<T: FromStr>(&self, fields: &[(&str, &str)], key: &str) -> Result<Option<T>> {
        match fields.iter().find(|(k, _)| *k == key) {
            None => Ok(None),
            Some((_, v)) => v
                .parse()
                .map(Some)
                .map_err(|_| self.fail(v, format!("invalid value for {key}"))),
        }
    }

    fn parse(&self) -> Result<SymbolicTemplate> {
        let text = self.spec.trim();
        if text.is_empty() {
            return Err(self.fail("", "empty template spec"));
        }
        let Some((kind, body)) = text.split_once(':') else {
            return Err(self.fail(text, "expected <kind>:<body>"));
        };
        let range = |e: Error| match e {
            Error::InvalidTemplate(msg) => self.fail(body, msg),
            other => other,
        };
        match kind {
            "periodic" => SymbolicTemplate::periodic(self.bits(body)?),
            "word" => SymbolicTemplate::finite(self.bits(body)?),
            "error" => {
                let f = self.fields(body, &["k", "N", "base", "err"], &["k", "N"])?;
                let k: usize = self.get(&f, "k")?.expect("required");
                let n: usize = self.get(&f, "N")?.expect("required");
                let base: u8 = self.get(&f, "base")?.unwrap_or(1);
                let err: u8 = self.get(&f, "err")?.unwrap_or(0);
                SymbolicTemplate::single_error(k, n, base, err).map_err(range)
            }
            "random" => {
                let f = self.fields(body, &["seed", "N", "p"], &["seed", "N"])?;
                let seed: u64 = self.get(&f, "seed")?.expect("required");
                let n: usize = self.get(&f, "N")?.expect("required");
                let p: f64 = self.get(&f, "p")?.unwrap_or(0.5);
                SymbolicTemplate::random(seed, n, p).map_err(range)
            }
            "binary" => {
                let f = self.fields(body, &["a", "L"], &["a", "L"])?;
                let a: f64 = self.get(&f, "a")?.expect("required");
                let l: usize = self.get(&f, "L")?.expect("required");
                SymbolicTemplate::binary_expansion(a, l).map_err(range)
            }
            other => Err(self.fail(
                other,
                "unknown template kind (expected periodic, word, error, random or binary)",
            )),
        }
    }
}

/// Grammar:
///
/// ```text
/// periodic:011
/// word:0110
/// error:k=30,N=200[,base=1,err=0]
/// random:seed=42,N=200[,p=0.5]
/// binary:a=0.375,L=15
/// ```
impl FromStr for SymbolicTemplate {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        SpecParser { spec }.parse()
    }
}
