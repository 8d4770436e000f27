use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{parse, Error, Result};

/// A dyadic rational `num / den` in `[0, 1]`, `den` a power of two, kept in
/// lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: u64,
    den: u64,
}

impl Dyadic {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || !den.is_power_of_two() {
            return Err(Error::Domain(format!(
                "{num}/{den} is not dyadic: the denominator must be a power of two"
            )));
        }
        if num > den {
            return Err(Error::Domain(format!("{num}/{den} lies outside [0, 1]")));
        }
        let shift = num.trailing_zeros().min(den.trailing_zeros());
        Ok(Dyadic {
            num: num >> shift,
            den: den >> shift,
        })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// Smallest `m` with `den | 4^m`.
    pub fn quaternary_digits(self) -> u32 {
        self.den.trailing_zeros().div_ceil(2)
    }

    /// `floor(t * 4^order)`, clamped to the last index `4^order - 1`.
    pub fn cell_index(self, order: u32) -> u64 {
        let scaled = (u128::from(self.num) << (2 * order)) / u128::from(self.den);
        let last = (1u128 << (2 * order)) - 1;
        scaled.min(last) as u64
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `|a - b|` as a float.
    pub fn abs_diff(self, other: Dyadic) -> f64 {
        let den = self.den.max(other.den);
        let a = u128::from(self.num) * u128::from(den / self.den);
        let b = u128::from(other.num) * u128::from(den / other.den);
        a.abs_diff(b) as f64 / den as f64
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `P/Q`, or a bare `0` / `1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let field = |t: &str, what: &str| -> Result<u64> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse(format!("bad {what} `{t}` in dyadic `{s}`")));
            }
            t.parse()
                .map_err(|_| parse(format!("{what} `{t}` out of range in `{s}`")))
        };
        match s.split_once('/') {
            Some((p, q)) => Dyadic::new(field(p, "numerator")?, field(q, "denominator")?),
            None => Dyadic::new(field(s, "value")?, 1),
        }
    }
}
