use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::{parse_rational, Rational};

/// A square `d × d` matrix with exact rational entries.
///
/// Row `i`, column `j` maps basis vector `|j⟩` to `Σ_i a_{ij} |i⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    d: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn identity(d: usize) -> Self {
        let mut m = RationalMatrix::zeros(d);
        for i in 0..d {
            m.entries[i * d + i] = Rational::one();
        }
        m
    }

    pub fn zeros(d: usize) -> Self {
        RationalMatrix {
            d,
            entries: vec![Rational::zero(); d * d],
        }
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let d = diag.len();
        let mut m = RationalMatrix::zeros(d);
        for (i, t) in diag.iter().enumerate() {
            m.entries[i * d + i] = t.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return domain(format!("matrix rows must all have length {d}"));
        }
        Ok(RationalMatrix {
            d,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Entry `a_{ij}`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.d + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries
            .chunks(self.d.max(1))
            .map(<[Rational]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let d = self.d;
        let mut m = RationalMatrix::zeros(d);
        for i in 0..d {
            for j in 0..d {
                m.entries[j * d + i] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == RationalMatrix::identity(self.d)
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Rational {
        let d = self.d;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| !a[r * d + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..d {
                    a.swap(pivot * d + j, col * d + j);
                }
                det = -det;
            }
            let p = a[col * d + col].clone();
            det *= &p;
            for r in col + 1..d {
                let factor = &a[r * d + col] / &p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..d {
                    let delta = &factor * &a[col * d + j];
                    a[r * d + j] -= delta;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }
}

impl Serialize for RationalMatrix {
    /// Rows of exact fraction strings, e.g. `[["1","0"],["-1/2","1"]]`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows()
            .into_iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(de)?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| parse_rational(x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        RationalMatrix::from_rows(parsed).map_err(serde::de::Error::custom)
    }
}
