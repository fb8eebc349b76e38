//! Matrix families and the primality gate on their orders.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two modular constructions.
///
/// * `TypeI`: order `n` prime, entries `1 + (i-1)(j-1) mod n`.
/// * `TypeII`: order `n` with `n + 1` prime, entries `i·j mod (n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MatrixType {
    #[serde(rename = "I")]
    TypeI,
    #[serde(rename = "II")]
    TypeII,
}

impl MatrixType {
    pub const ALL: [MatrixType; 2] = [MatrixType::TypeI, MatrixType::TypeII];

    /// Roman-numeral tag used on the command line and in reports.
    pub fn tag(self) -> &'static str {
        match self {
            MatrixType::TypeI => "I",
            MatrixType::TypeII => "II",
        }
    }
}

impl fmt::Display for MatrixType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Type {}", self.tag())
    }
}

impl FromStr for MatrixType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" | "TYPEI" => Ok(MatrixType::TypeI),
            "II" | "2" | "TYPEII" => Ok(MatrixType::TypeII),
            other => Err(format!("unknown matrix type `{other}` (expected I or II)")),
        }
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn smallest_factor(n: u64) -> u64 {
    (2..)
        .find(|d| n.is_multiple_of(*d) || d * d > n)
        .filter(|d| d * d <= n)
        .unwrap_or(n)
}

pub fn is_admissible_order(n: usize, mtype: MatrixType) -> bool {
    if n < 2 {
        return false;
    }
    match mtype {
        MatrixType::TypeI => is_prime(n as u64),
        MatrixType::TypeII => is_prime(n as u64 + 1),
    }
}

/// Same test as [`is_admissible_order`], with a diagnostic naming the
/// primality requirement on failure.
pub fn require_admissible(n: usize, mtype: MatrixType) -> Result<()> {
    if is_admissible_order(n, mtype) {
        return Ok(());
    }
    let reason = if n < 2 {
        format!("order must be at least 2, got {n}")
    } else {
        match mtype {
            MatrixType::TypeI => format!(
                "{n} is not prime (divisible by {})",
                smallest_factor(n as u64)
            ),
            MatrixType::TypeII => format!(
                "n+1 = {} is not prime (divisible by {})",
                n + 1,
                smallest_factor(n as u64 + 1)
            ),
        }
    };
    Err(Error::InadmissibleOrder { n, mtype, reason })
}

/// Admissible orders of one type in `lo..=hi`, ascending.
pub fn admissible_orders(mtype: MatrixType, lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo.max(2)..=hi).filter(move |&n| is_admissible_order(n, mtype))
}

/// Admissible orders for which every closed-form identity is defined: odd
/// primes for Type I, every admissible order for Type II.
pub fn regular_orders(mtype: MatrixType, lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    admissible_orders(mtype, lo, hi).filter(move |&n| !(mtype == MatrixType::TypeI && n == 2))
}
