use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    YangMills,
    SuperYangMills,
    Parafermionic,
    Parabosonic,
    SelfDuality,
    SuperSelfDuality,
    Sklyanin,
    DeformedYm,
    ThreeParameterYm,
    BEpsilon,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::YangMills,
        FamilyKind::SuperYangMills,
        FamilyKind::Parafermionic,
        FamilyKind::Parabosonic,
        FamilyKind::SelfDuality,
        FamilyKind::SuperSelfDuality,
        FamilyKind::Sklyanin,
        FamilyKind::DeformedYm,
        FamilyKind::ThreeParameterYm,
        FamilyKind::BEpsilon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::YangMills => "yang-mills",
            FamilyKind::SuperYangMills => "super-yang-mills",
            FamilyKind::Parafermionic => "parafermionic",
            FamilyKind::Parabosonic => "parabosonic",
            FamilyKind::SelfDuality => "self-duality",
            FamilyKind::SuperSelfDuality => "super-self-duality",
            FamilyKind::Sklyanin => "sklyanin",
            FamilyKind::DeformedYm => "deformed-ym",
            FamilyKind::ThreeParameterYm => "three-parameter-ym",
            FamilyKind::BEpsilon => "b-epsilon",
        }
    }

    pub fn relation_degree(self) -> usize {
        match self {
            FamilyKind::SelfDuality | FamilyKind::SuperSelfDuality | FamilyKind::Sklyanin => 2,
            _ => 3,
        }
    }

    /// Kinds defined only on four generators.
    pub fn four_dimensional(self) -> bool {
        self.relation_degree() == 2
    }

    pub fn needs_imaginary_unit(self) -> bool {
        matches!(self, FamilyKind::SuperSelfDuality | FamilyKind::Sklyanin)
    }

    pub fn uses_metric(self) -> bool {
        matches!(
            self,
            FamilyKind::YangMills | FamilyKind::SuperYangMills | FamilyKind::DeformedYm | FamilyKind::ThreeParameterYm
        )
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// Parameters selecting one member of a family. Matrices are given with
/// lower indices; the raised forms are their inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub s: usize,
    pub metric: Option<Vec<Vec<Coeff>>>,
    pub eps: i8,
    pub zeta: Vec<Coeff>,
    pub alpha: Vec<Coeff>,
    pub b: Option<Vec<Vec<Coeff>>>,
}

impl FamilySpec {
    /// Defaults: Euclidean metric, ε = +1, ζ = (1, 1[, 1]), α = (1, 2, 3), B = identity.
    pub fn new(kind: FamilyKind, s: usize) -> Self {
        let zeta = match kind {
            FamilyKind::ThreeParameterYm => vec![Coeff::int(1); 3],
            _ => vec![Coeff::int(1); 2],
        };
        FamilySpec {
            kind,
            s,
            metric: None,
            eps: 1,
            zeta,
            alpha: vec![Coeff::int(1), Coeff::int(2), Coeff::int(3)],
            b: None,
        }
    }

    pub fn with_metric(mut self, lower: Vec<Vec<Coeff>>) -> Self {
        self.metric = Some(lower);
        self
    }

    pub fn with_eps(mut self, eps: i8) -> Self {
        self.eps = eps;
        self
    }

    pub fn with_zeta(mut self, zeta: Vec<Coeff>) -> Self {
        self.zeta = zeta;
        self
    }

    pub fn with_alpha(mut self, alpha: Vec<Coeff>) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_b(mut self, lower: Vec<Vec<Coeff>>) -> Self {
        self.b = Some(lower);
        self
    }

    pub fn generators(&self) -> usize {
        self.s + 1
    }

    pub fn metric_lower(&self) -> Vec<Vec<Coeff>> {
        self.metric.clone().unwrap_or_else(|| identity(self.generators()))
    }

    pub fn b_lower(&self) -> Vec<Vec<Coeff>> {
        self.b.clone().unwrap_or_else(|| identity(self.generators()))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        let g = self.generators();
        if self.s == 0 {
            return bad("s must be at least 1".into());
        }
        if self.kind.four_dimensional() && self.s != 3 {
            return bad(format!("{} is defined for s = 3 only", self.kind));
        }
        if self.eps != 1 && self.eps != -1 {
            return bad(format!("ε must be ±1, got {}", self.eps));
        }
        let check_square = |m: &[Vec<Coeff>], what: &str| -> Result<()> {
            if m.len() != g || m.iter().any(|r| r.len() != g) {
                return Err(Error::InvalidParameter(format!("{what} must be {g}x{g}")));
            }
            if determinant(m).is_zero() {
                return Err(Error::Singular(format!("{what} is not invertible")));
            }
            Ok(())
        };
        let metric = self.metric_lower();
        check_square(&metric, "metric")?;
        for i in 0..g {
            for j in 0..i {
                if metric[i][j] != metric[j][i] {
                    return bad("metric must be symmetric".into());
                }
            }
        }
        check_square(&self.b_lower(), "B")?;
        let want = if self.kind == FamilyKind::ThreeParameterYm {
            3
        } else {
            2
        };
        if matches!(self.kind, FamilyKind::DeformedYm | FamilyKind::ThreeParameterYm) {
            if self.zeta.len() != want {
                return bad(format!("{} needs {want} ζ coordinates", self.kind));
            }
            if self.zeta.iter().all(Coeff::is_zero) {
                return bad("ζ must be nonzero".into());
            }
        }
        if self.kind == FamilyKind::Sklyanin {
            if self.alpha.len() != 3 {
                return bad("Sklyanin needs three α parameters".into());
            }
            if self.alpha.iter().any(Coeff::is_zero) {
                return bad("Sklyanin parameters must be nonzero".into());
            }
        }
        Ok(())
    }
}

fn identity(n: usize) -> Vec<Vec<Coeff>> {
    (0..n)
        .map(|i| (0..n).map(|j| Coeff::int((i == j) as i64)).collect())
        .collect()
}

fn determinant(m: &[Vec<Coeff>]) -> Coeff {
    use crate::exactla::{Field, GaussianRationals, Mat};
    let f = GaussianRationals;
    Mat::from_dense(f, m.len(), m)
        .and_then(|x| x.determinant())
        .unwrap_or_else(|_| f.zero())
}

fn fmt_matrix(m: &[Vec<Coeff>]) -> String {
    m.iter()
        .map(|r| r.iter().map(Coeff::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

impl fmt::Display for FamilySpec {
    /// Canonical `key=value` form, accepted back by the presentation parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} s={}", self.kind, self.s)?;
        if self.kind.uses_metric() {
            if let Some(m) = &self.metric {
                write!(f, " metric={}", fmt_matrix(m))?;
            }
        }
        match self.kind {
            FamilyKind::SelfDuality | FamilyKind::SuperSelfDuality => write!(f, " eps={}", self.eps)?,
            FamilyKind::BEpsilon => {
                write!(f, " eps={}", self.eps)?;
                if let Some(b) = &self.b {
                    write!(f, " B={}", fmt_matrix(b))?;
                }
            }
            FamilyKind::DeformedYm | FamilyKind::ThreeParameterYm => {
                let z: Vec<String> = self.zeta.iter().map(Coeff::to_string).collect();
                write!(f, " zeta={}", z.join(","))?;
            }
            FamilyKind::Sklyanin => {
                let a: Vec<String> = self.alpha.iter().map(Coeff::to_string).collect();
                write!(f, " alpha={}", a.join(","))?;
            }
            _ => {}
        }
        Ok(())
    }
}

/// Square matrix from `identity`, `minkowski`, `diag:a,b,…` or `a,b;c,d`.
pub fn parse_matrix(text: &str, size: usize) -> Result<Vec<Vec<Coeff>>> {
    let t = text.trim();
    let n = size;
    let diag = |d: Vec<Coeff>| -> Vec<Vec<Coeff>> {
        (0..d.len())
            .map(|i| {
                (0..d.len())
                    .map(|j| if i == j { d[i].clone() } else { Coeff::default() })
                    .collect()
            })
            .collect()
    };
    let m = match t {
        "identity" | "euclidean" => identity(n),
        "minkowski" => diag((0..n).map(|i| Coeff::int(if i == 0 { 1 } else { -1 })).collect()),
        _ => {
            if let Some(d) = t.strip_prefix("diag:") {
                diag(d.split(',').map(str::parse).collect::<Result<Vec<Coeff>>>()?)
            } else {
                t.split(';')
                    .map(|r| r.split(',').map(str::parse).collect::<Result<Vec<Coeff>>>())
                    .collect::<Result<_>>()?
            }
        }
    };
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidParameter(format!("expected a {n}x{n} matrix, got {t:?}")));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_round_trip() {
        for k in FamilyKind::ALL {
            assert_eq!(k.name().parse::<FamilyKind>().unwrap(), k);
        }
        assert!("yang_mills".parse::<FamilyKind>().is_err());
    }

    #[test]
    fn matrices() {
        assert_eq!(parse_matrix("identity", 2).unwrap(), identity(2));
        let m = parse_matrix("minkowski", 3).unwrap();
        assert_eq!(m[1][1], Coeff::int(-1));
        assert_eq!(parse_matrix("1,2;3,4", 2).unwrap()[1][0], Coeff::int(3));
        assert_eq!(parse_matrix("diag:1,1/2", 2).unwrap()[1][1], "1/2".parse().unwrap());
        assert!(parse_matrix("1,2;3", 2).is_err());
        assert!(parse_matrix("1,x;3,4", 2).is_err());
    }
}
