use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Coefficient field: the rationals (characteristic 0) or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    /// `0` for the rationals or a prime `2 <= p < 2^31`.
    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 {
            return Ok(Self::RATIONALS);
        }
        if characteristic >= 1 << 31 {
            return invalid(format!("characteristic {characteristic} is not below 2^31"));
        }
        if !is_prime(characteristic) {
            return invalid(format!("characteristic {characteristic} is not prime"));
        }
        Ok(FieldSpec { characteristic })
    }

    pub fn prime(p: u32) -> Result<Self> {
        if p == 0 {
            return invalid("0 is not a prime");
        }
        Self::new(p)
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    /// `x` reduced into `[0, p)`; unchanged over the rationals.
    pub fn reduce(&self, x: i64) -> i64 {
        if self.characteristic == 0 {
            x
        } else {
            x.rem_euclid(self.characteristic as i64)
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::RATIONALS
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self> {
        FieldSpec::new(value)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.characteristic
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c: u32 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad characteristic '{s}'")))?;
        FieldSpec::new(c)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F_{}", self.characteristic)
        }
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FieldSpec::new(0).unwrap().is_rational());
        assert_eq!(FieldSpec::new(7).unwrap().characteristic(), 7);
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(9).is_err());
        assert!(FieldSpec::prime(0).is_err());
        assert!(FieldSpec::new(2_147_483_647).is_ok());
        assert!(FieldSpec::new(1 << 31).is_err());
        assert_eq!("3".parse::<FieldSpec>().unwrap().to_string(), "F_3");
        assert!("x".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn reduction() {
        let f = FieldSpec::new(5).unwrap();
        assert_eq!(f.reduce(-1), 4);
        assert_eq!(f.reduce(12), 2);
        assert_eq!(FieldSpec::RATIONALS.reduce(-1), -1);
    }

    #[test]
    fn primes() {
        let small: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
    }
}
