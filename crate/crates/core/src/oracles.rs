//! Partition-counting ground truth computed by dynamic programming over
//! part sizes, with no power-series machinery involved.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleKind {
    /// Partitions, `p(n)`.
    P,
    /// Overpartitions.
    Overp,
    /// Partitions with no part congruent to 3 mod 6.
    AMod6,
    /// Partitions whose odd parts appear at most twice.
    AOddTwice,
    /// Indicator of `n = 3k^2 + 2k` for some integer `k`.
    G,
}

impl OracleKind {
    pub const ALL: [OracleKind; 5] =
        [OracleKind::P, OracleKind::Overp, OracleKind::AMod6, OracleKind::AOddTwice, OracleKind::G];

    pub fn name(self) -> &'static str {
        match self {
            OracleKind::P => "p",
            OracleKind::Overp => "overp",
            OracleKind::AMod6 => "a-mod6",
            OracleKind::AOddTwice => "a-oddtwice",
            OracleKind::G => "g",
        }
    }

    pub fn table(self, n_max: usize) -> OracleTable {
        match self {
            OracleKind::P => p_oracle(n_max),
            OracleKind::Overp => overp_oracle(n_max),
            OracleKind::AMod6 => a_oracle(n_max, ADefinition::Mod6),
            OracleKind::AOddTwice => a_oracle(n_max, ADefinition::OddTwice),
            OracleKind::G => g_oracle(n_max),
        }
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OracleKind {
    type Err = String;

    /// Accepts the canonical names plus `a` as shorthand for `a-mod6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p" => Ok(OracleKind::P),
            "overp" => Ok(OracleKind::Overp),
            "a" | "a-mod6" => Ok(OracleKind::AMod6),
            "a-oddtwice" => Ok(OracleKind::AOddTwice),
            "g" => Ok(OracleKind::G),
            _ => Err(format!("unknown oracle '{s}' (expected p, overp, a, a-mod6, a-oddtwice or g)")),
        }
    }
}

/// The two combinatorial descriptions of `a(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ADefinition {
    Mod6,
    OddTwice,
}

/// Exact values `values[0..=limit]` of one counting function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTable {
    kind: OracleKind,
    values: Vec<BigUint>,
}

impl OracleTable {
    pub fn kind(&self) -> OracleKind {
        self.kind
    }

    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// Value at `n`; `None` past the limit.
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }
}

fn unit_table(n_max: usize) -> Vec<BigUint> {
    let mut v = vec![BigUint::zero(); n_max + 1];
    v[0] = BigUint::one();
    v
}

/// Unlimited copies of `part`.
fn allow_repeats(v: &mut [BigUint], part: usize) {
    for s in part..v.len() {
        let (lo, hi) = v.split_at_mut(s);
        hi[0] += &lo[s - part];
    }
}

/// At most `cap` copies of `part`.
fn allow_bounded(v: &mut [BigUint], part: usize, cap: usize) {
    for s in (part..v.len()).rev() {
        let mut add = BigUint::zero();
        for c in 1..=cap {
            match s.checked_sub(c * part) {
                Some(t) => add += &v[t],
                None => break,
            }
        }
        v[s] += add;
    }
}

pub fn p_oracle(n_max: usize) -> OracleTable {
    let mut v = unit_table(n_max);
    for part in 1..=n_max {
        allow_repeats(&mut v, part);
    }
    OracleTable { kind: OracleKind::P, values: v }
}

/// Each part size contributes any number of plain copies, plus an
/// optional overlined first occurrence.
pub fn overp_oracle(n_max: usize) -> OracleTable {
    let mut v = unit_table(n_max);
    for part in 1..=n_max {
        allow_repeats(&mut v, part);
        allow_bounded(&mut v, part, 1);
    }
    OracleTable { kind: OracleKind::Overp, values: v }
}

pub fn a_oracle(n_max: usize, definition: ADefinition) -> OracleTable {
    let mut v = unit_table(n_max);
    let kind = match definition {
        ADefinition::Mod6 => {
            for part in (1..=n_max).filter(|i| i % 6 != 3) {
                allow_repeats(&mut v, part);
            }
            OracleKind::AMod6
        }
        ADefinition::OddTwice => {
            for part in 1..=n_max {
                if part % 2 == 1 {
                    allow_bounded(&mut v, part, 2);
                } else {
                    allow_repeats(&mut v, part);
                }
            }
            OracleKind::AOddTwice
        }
    };
    OracleTable { kind, values: v }
}

/// Whether `n = 3k^2 + 2k` for some integer `k`.
///
/// `3(3k^2 + 2k) + 1 = (3k + 1)^2`, so this holds exactly when `3n + 1` is
/// a perfect square `t^2`; then `t` is prime to 3 and `k = (±t - 1)/3`.
pub fn is_theta_exponent(n: u64) -> bool {
    let m = 3 * u128::from(n) + 1;
    let t = m.sqrt();
    t * t == m && t % 3 != 0
}

pub fn g_oracle(n_max: usize) -> OracleTable {
    let values =
        (0..=n_max as u64).map(|n| if is_theta_exponent(n) { BigUint::one() } else { BigUint::zero() }).collect();
    OracleTable { kind: OracleKind::G, values }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(t: &OracleTable) -> Vec<u64> {
        t.values().iter().map(|v| u64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn partitions() {
        let p = p_oracle(10);
        assert_eq!(small(&p), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(p_oracle(0).values(), &[BigUint::one()]);
    }

    #[test]
    fn overpartitions() {
        let p = overp_oracle(4);
        assert_eq!(small(&p), vec![1, 2, 4, 8, 14]);
    }

    #[test]
    fn a_both_definitions() {
        for def in [ADefinition::Mod6, ADefinition::OddTwice] {
            let a = a_oracle(4, def);
            assert_eq!(small(&a), vec![1, 1, 2, 2, 4], "{def:?}");
        }
    }

    #[test]
    fn theta_indicator() {
        let g = small(&g_oracle(8));
        assert_eq!(g, vec![1, 1, 0, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in OracleKind::ALL {
            assert_eq!(k.name().parse::<OracleKind>().unwrap(), k);
        }
        assert_eq!("a".parse::<OracleKind>().unwrap(), OracleKind::AMod6);
        assert!("b".parse::<OracleKind>().is_err());
    }
}
