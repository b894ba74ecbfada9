//! Independent numeric oracle: a concrete finite-dimensional representation
//! evaluated through Kronecker products.
//!
//! The built-in representation acts on a 3-dimensional graded space with
//! basis `v+ (H = 1/2, even)`, `v0 (H = 0, odd)`, `v- (H = -1/2, even)`.
//! The odd generator entries were derived by solving the defining relations
//! on that basis: with `F+ = α E12 + β E23`, `F- = γ E21 + δ E32` the
//! relations force `αγ = 1/4`, `βδ = -1/4`, `δ = -α`, `γ = β`; the gauge
//! choice `α = β = 1/2` makes every entry rational, and then
//! `E+ = 4αβ E13`, `E- = -4γδ E31`. The Casimir acts as the scalar 3.
//!
//! All matrix arithmetic is exact rational. Fixture files may carry decimal
//! entries; those are converted to their exact binary rational value on load
//! and relation checks then use a 1e-12 tolerance instead of exact zero.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pbw::{defining_relations, Generator, PbwMonomial};
use crate::scalar::{int, ratio, Scalar, Signed, Zero};
use crate::tensor::TensorElement;

/// Dense exact-rational matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = int(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn matmul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; `self` is the more significant (leftmost leg) block.
    pub fn kron(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for r in 0..other.rows {
                    for s in 0..other.cols {
                        *out.at_mut(i * other.rows + r, j * other.cols + s) = a * other.at(r, s);
                    }
                }
            }
        }
        out
    }

    /// Max-entry norm, exact.
    pub fn max_norm(&self) -> Scalar {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn pow(&self, e: u32) -> Result<RatMatrix> {
        let mut out = RatMatrix::identity(self.rows);
        for _ in 0..e {
            out = out.matmul(self)?;
        }
        Ok(out)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", crate::scalar::format_scalar(self.at(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A finite-dimensional representation of the six generators plus grading.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub dim: usize,
    /// +1/-1 per basis vector; `ρ(P) = diag(grading)`.
    pub grading: Vec<i8>,
    mats: BTreeMap<Generator, RatMatrix>,
    /// false when any fixture entry was given as a decimal float; relation
    /// checks then use the float tolerance instead of exact zero
    pub exact: bool,
}

impl MatrixRep {
    pub fn matrix(&self, g: Generator) -> &RatMatrix {
        &self.mats[&g]
    }
}

/// The built-in dimension-3 representation (entries derived in the module
/// docs; validated by `check_rep` and the derivation test).
pub fn fundamental_rep() -> MatrixRep {
    let half = ratio(1, 2);
    let z = Scalar::zero;
    let mut mats = BTreeMap::new();
    mats.insert(
        Generator::H,
        RatMatrix::from_rows(vec![
            vec![half.clone(), z(), z()],
            vec![z(), z(), z()],
            vec![z(), z(), ratio(-1, 2)],
        ])
        .expect("static shape"),
    );
    mats.insert(
        Generator::P,
        RatMatrix::from_rows(vec![
            vec![int(1), z(), z()],
            vec![z(), int(-1), z()],
            vec![z(), z(), int(1)],
        ])
        .expect("static shape"),
    );
    mats.insert(
        Generator::Fplus,
        RatMatrix::from_rows(vec![
            vec![z(), half.clone(), z()],
            vec![z(), z(), half.clone()],
            vec![z(), z(), z()],
        ])
        .expect("static shape"),
    );
    mats.insert(
        Generator::Fminus,
        RatMatrix::from_rows(vec![
            vec![z(), z(), z()],
            vec![half.clone(), z(), z()],
            vec![z(), ratio(-1, 2), z()],
        ])
        .expect("static shape"),
    );
    mats.insert(
        Generator::Eplus,
        RatMatrix::from_rows(vec![
            vec![z(), z(), int(1)],
            vec![z(), z(), z()],
            vec![z(), z(), z()],
        ])
        .expect("static shape"),
    );
    mats.insert(
        Generator::Eminus,
        RatMatrix::from_rows(vec![
            vec![z(), z(), z()],
            vec![z(), z(), z()],
            vec![int(1), z(), z()],
        ])
        .expect("static shape"),
    );
    MatrixRep {
        dim: 3,
        grading: vec![1, -1, 1],
        mats,
        exact: true,
    }
}

/// Scalar by which the Casimir acts on the built-in irreducible representation.
pub fn fundamental_casimir_eigenvalue() -> Scalar {
    int(3)
}

#[derive(Clone, Debug, Serialize)]
pub struct RepCheck {
    pub name: String,
    /// max-entry norm of the residual matrix, exact
    pub residual_norm: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepReport {
    pub dim: usize,
    pub exact: bool,
    pub checks: Vec<RepCheck>,
}

impl RepReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Tolerance for float-derived fixtures.
fn float_tolerance() -> Scalar {
    ratio(1, 1_000_000_000_000)
}

/// Evaluate every defining relation on the matrices and report residual norms.
pub fn check_rep(rep: &MatrixRep) -> Result<RepReport> {
    for g in Generator::ALL {
        let m = rep.matrix(g);
        if m.rows() != rep.dim || m.cols() != rep.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} is {}x{}, expected {}x{}",
                g.symbol(),
                m.rows(),
                m.cols(),
                rep.dim,
                rep.dim
            )));
        }
    }
    if rep.grading.len() != rep.dim {
        return Err(Error::DimensionMismatch("grading length != dim".into()));
    }
    let tol = if rep.exact {
        Scalar::zero()
    } else {
        float_tolerance()
    };
    let mut checks = Vec::new();
    for rel in defining_relations() {
        let mut worst = Scalar::zero();
        for residual in &rel.residuals {
            let mut acc = RatMatrix::zeros(rep.dim, rep.dim);
            for (c, word) in residual {
                let mut m = RatMatrix::identity(rep.dim);
                for g in word {
                    m = m.matmul(rep.matrix(*g))?;
                }
                acc = acc.add(&m.scale(c))?;
            }
            let norm = acc.max_norm();
            if norm > worst {
                worst = norm;
            }
        }
        checks.push(RepCheck {
            name: rel.name.to_string(),
            residual_norm: crate::scalar::format_scalar(&worst),
            passed: worst <= tol,
        });
    }
    // grading consistency: P = diag(grading)
    let mut p_expected = RatMatrix::zeros(rep.dim, rep.dim);
    for (i, &s) in rep.grading.iter().enumerate() {
        *p_expected.at_mut(i, i) = int(s as i64);
    }
    let norm = rep.matrix(Generator::P).sub(&p_expected)?.max_norm();
    checks.push(RepCheck {
        name: "P = diag(grading)".to_string(),
        residual_norm: crate::scalar::format_scalar(&norm),
        passed: norm <= tol,
    });
    Ok(RepReport {
        dim: rep.dim,
        exact: rep.exact,
        checks,
    })
}

/// Default evaluation memory budget in bytes (overridden by BI_MEMORY_BUDGET).
const DEFAULT_BUDGET: u64 = 1 << 30;

fn memory_budget() -> u64 {
    std::env::var("BI_MEMORY_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Evaluate a tensor element as a `dim^n x dim^n` matrix, leg 1 being the
/// most significant Kronecker block. The budget comes from BI_MEMORY_BUDGET.
pub fn evaluate(x: &TensorElement, rep: &MatrixRep) -> Result<RatMatrix> {
    evaluate_with_budget(x, rep, memory_budget())
}

pub fn evaluate_with_budget(x: &TensorElement, rep: &MatrixRep, budget: u64) -> Result<RatMatrix> {
    let n = x.arity();
    let side = (rep.dim as u64)
        .checked_pow(n as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u64::MAX,
            budget,
        })?;
    // rough accounting: three live matrices of side^2 small rationals
    let needed = side.saturating_mul(side).saturating_mul(3 * 48);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let side = side as usize;
    let mut acc = RatMatrix::zeros(side, side);
    for (m, c) in x.terms() {
        let mut term: Option<RatMatrix> = None;
        for factor in m.factors() {
            let fm = evaluate_monomial(factor, rep)?;
            term = Some(match term {
                None => fm,
                Some(prev) => prev.kron(&fm),
            });
        }
        acc = acc.add(&term.expect("arity >= 1").scale(c))?;
    }
    Ok(acc)
}

fn evaluate_monomial(m: &PbwMonomial, rep: &MatrixRep) -> Result<RatMatrix> {
    let mut out = RatMatrix::identity(rep.dim);
    out = out.matmul(&rep.matrix(Generator::Eminus).pow(m.e_minus)?)?;
    if m.f_minus {
        out = out.matmul(rep.matrix(Generator::Fminus))?;
    }
    out = out.matmul(&rep.matrix(Generator::H).pow(m.h)?)?;
    if m.f_plus {
        out = out.matmul(rep.matrix(Generator::Fplus))?;
    }
    out = out.matmul(&rep.matrix(Generator::Eplus).pow(m.e_plus)?)?;
    if m.p {
        out = out.matmul(rep.matrix(Generator::P))?;
    }
    Ok(out)
}

/// Max-entry norm of the evaluated element; the numeric shadow of a symbolic
/// zero must be exactly zero for rational fixtures.
pub fn numeric_residual(x: &TensorElement, rep: &MatrixRep) -> Result<Scalar> {
    Ok(evaluate(x, rep)?.max_norm())
}

// --- fixture file format --------------------------------------------------------

/// On-disk representation fixture: entries are `"p/q"` strings, integer
/// strings, or decimal floats.
#[derive(Serialize, Deserialize)]
struct RepFixture {
    dim: usize,
    grading: Vec<i8>,
    matrices: BTreeMap<String, Vec<serde_json::Value>>,
}

fn parse_entry(v: &serde_json::Value) -> Result<(Scalar, bool)> {
    match v {
        serde_json::Value::String(s) => {
            let parse_int = |t: &str| -> Result<num::BigInt> {
                t.trim()
                    .parse()
                    .map_err(|_| Error::BadRepresentation(format!("bad rational entry: {s:?}")))
            };
            match s.split_once('/') {
                Some((p, q)) => {
                    let den = parse_int(q)?;
                    if den == num::BigInt::from(0) {
                        return Err(Error::BadRepresentation("zero denominator".into()));
                    }
                    Ok((Scalar::new(parse_int(p)?, den), true))
                }
                None => Ok((Scalar::from_integer(parse_int(s)?), true)),
            }
        }
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok((int(i), true))
            } else {
                let f = n
                    .as_f64()
                    .ok_or_else(|| Error::BadRepresentation(format!("bad numeric entry: {n}")))?;
                let r = Scalar::from_float(f)
                    .ok_or_else(|| Error::BadRepresentation(format!("non-finite entry: {f}")))?;
                Ok((r, false))
            }
        }
        other => Err(Error::BadRepresentation(format!("bad entry: {other}"))),
    }
}

/// Load a representation fixture and validate it with `check_rep`.
pub fn load_rep(path: &std::path::Path) -> Result<MatrixRep> {
    let text = std::fs::read_to_string(path)?;
    let fixture: RepFixture = serde_json::from_str(&text)
        .map_err(|e| Error::BadRepresentation(format!("fixture parse failed: {e}")))?;
    let mut mats = BTreeMap::new();
    let mut exact = true;
    for g in Generator::ALL {
        let raw = fixture.matrices.get(g.symbol()).ok_or_else(|| {
            Error::BadRepresentation(format!("missing matrix for {}", g.symbol()))
        })?;
        if raw.len() != fixture.dim * fixture.dim {
            return Err(Error::BadRepresentation(format!(
                "matrix {} has {} entries, expected {}",
                g.symbol(),
                raw.len(),
                fixture.dim * fixture.dim
            )));
        }
        let mut m = RatMatrix::zeros(fixture.dim, fixture.dim);
        for (idx, v) in raw.iter().enumerate() {
            let (val, is_exact) = parse_entry(v)?;
            exact &= is_exact;
            m.data[idx] = val;
        }
        mats.insert(g, m);
    }
    let rep = MatrixRep {
        dim: fixture.dim,
        grading: fixture.grading,
        mats,
        exact,
    };
    let report = check_rep(&rep)?;
    if !report.all_passed() {
        let bad: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        return Err(Error::BadRepresentation(format!(
            "defining relations fail on the fixture: {}",
            bad.join(", ")
        )));
    }
    Ok(rep)
}

/// Serialize a representation in the fixture format (entries as `p/q`).
pub fn save_rep(rep: &MatrixRep, path: &std::path::Path) -> Result<()> {
    let mut matrices = BTreeMap::new();
    for g in Generator::ALL {
        let m = rep.matrix(g);
        let entries: Vec<serde_json::Value> = m
            .data
            .iter()
            .map(|x| serde_json::Value::String(crate::scalar::format_scalar(x)))
            .collect();
        matrices.insert(g.symbol().to_string(), entries);
    }
    let fixture = RepFixture {
        dim: rep.dim,
        grading: rep.grading.clone(),
        matrices,
    };
    std::fs::write(path, serde_json::to_string_pretty(&fixture)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{casimir, PbwElement};
    use crate::tensor::{coproduct, embed};

    #[test]
    fn fundamental_rep_passes_all_relations() {
        let rep = fundamental_rep();
        let report = check_rep(&rep).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{} residual {}", c.name, c.residual_norm);
        }
    }

    #[test]
    fn derivation_constraints() {
        // re-derive the odd entries: F+ = a E12 + b E23, F- = g E21 + d E32
        // must satisfy a*g = 1/4, b*d = -1/4, d = -a, g = b; our gauge is
        // a = b = 1/2, and the even matrices follow as E+ = 4ab E13,
        // E- = -4gd E31.
        let (a, b) = (ratio(1, 2), ratio(1, 2));
        let (g, d) = (b.clone(), -a.clone());
        assert_eq!(&a * &g, ratio(1, 4));
        assert_eq!(&b * &d, ratio(-1, 4));
        let rep = fundamental_rep();
        assert_eq!(rep.matrix(Generator::Fplus).at(0, 1), &a);
        assert_eq!(rep.matrix(Generator::Fplus).at(1, 2), &b);
        assert_eq!(rep.matrix(Generator::Fminus).at(1, 0), &g);
        assert_eq!(rep.matrix(Generator::Fminus).at(2, 1), &d);
        assert_eq!(rep.matrix(Generator::Eplus).at(0, 2), &(int(4) * &a * &b));
        assert_eq!(rep.matrix(Generator::Eminus).at(2, 0), &(int(-4) * &g * &d));
    }

    #[test]
    fn casimir_acts_as_scalar_three() {
        let rep = fundamental_rep();
        let c = evaluate(&TensorElement::from(&casimir()), &rep).unwrap();
        let expected = RatMatrix::identity(3).scale(&fundamental_casimir_eigenvalue());
        assert_eq!(c, expected);
        let p2 = rep.matrix(Generator::P).pow(2).unwrap();
        assert_eq!(p2, RatMatrix::identity(3));
    }

    #[test]
    fn designed_failures_are_caught() {
        let mut rep = fundamental_rep();
        rep.mats.insert(Generator::Fplus, RatMatrix::zeros(3, 3));
        let report = check_rep(&rep).unwrap();
        let fpm = report
            .checks
            .iter()
            .find(|c| c.name == "{F+,F-} = (1/2)H")
            .unwrap();
        assert!(!fpm.passed);

        let mut rep = fundamental_rep();
        rep.mats.insert(Generator::P, RatMatrix::identity(3));
        let report = check_rep(&rep).unwrap();
        let pf = report
            .checks
            .iter()
            .find(|c| c.name == "{P,F±} = 0")
            .unwrap();
        assert!(!pf.passed);
    }

    #[test]
    fn evaluate_examples() {
        let rep = fundamental_rep();
        assert_eq!(
            evaluate(&TensorElement::unit(2), &rep).unwrap(),
            RatMatrix::identity(9)
        );
        // Δ(P) evaluates to ρ(P) ⊗ ρ(P), leg 1 most significant
        let dp = coproduct(&PbwElement::generator(Generator::P), false);
        let got = evaluate(&dp, &rep).unwrap();
        let p = rep.matrix(Generator::P);
        assert_eq!(got, p.kron(p));
    }

    #[test]
    fn evaluate_is_multiplicative() {
        let rep = fundamental_rep();
        let x = coproduct(&casimir(), false);
        let y = {
            let fp = embed(&PbwElement::generator(Generator::Fplus), 1, 2).unwrap();
            let pm = embed(&PbwElement::generator(Generator::P), 2, 2).unwrap();
            &fp + &pm
        };
        let lhs = evaluate(&(&x * &y), &rep).unwrap();
        let rhs = evaluate(&x, &rep)
            .unwrap()
            .matmul(&evaluate(&y, &rep).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn budget_is_enforced() {
        let rep = fundamental_rep();
        let r = evaluate_with_budget(&TensorElement::unit(3), &rep, 1024);
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn fixture_round_trip_and_corruption() {
        let dir = std::env::temp_dir();
        let path = dir.join("osp12_rep_fixture_test.json");
        save_rep(&fundamental_rep(), &path).unwrap();
        let loaded = load_rep(&path).unwrap();
        assert!(loaded.exact);
        assert_eq!(loaded.dim, 3);

        // corrupt one entry: the loader must reject the fixture
        let text = std::fs::read_to_string(&path).unwrap();
        let corrupted = text.replacen("\"1/2\"", "\"2/3\"", 1);
        assert_ne!(text, corrupted);
        std::fs::write(&path, corrupted).unwrap();
        assert!(load_rep(&path).is_err());
        let _ = std::fs::remove_file(&path);
    }
}
