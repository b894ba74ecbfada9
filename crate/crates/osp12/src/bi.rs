//! Bannai-Ito structure relations among the intermediate Casimir elements.
//!
//! The generators attached to subsets `A ⊆ [n]` satisfy, with `C_∅ = 1`,
//!
//! ```text
//! {C_A, C_B} = 2( -C_{(A∪B)∖(A∩B)} + C_{A∖B} C_{B∖A} + C_{A∩B} C_{A∪B} )
//! ```
//!
//! This module verifies that relation for every unordered pair of nonempty
//! subsets and emits a machine-readable structure report. The normalization
//! matters: rescaling the generators (other conventions differ by a factor
//! of -2) breaks the relation in this exact form, and the suite carries a
//! deliberately wrong-signed control check that must fail.

use rayon::prelude::*;

use crate::casimir::{CasimirTable, SubsetIndex};
use crate::error::{Error, Result};
use crate::scalar::int;
use crate::tensor::TensorElement;

/// Residual of the structure relation for one subset pair.
#[derive(Clone, Debug)]
pub struct BiRelationResidual {
    pub a: SubsetIndex,
    pub b: SubsetIndex,
    pub residual: TensorElement,
    pub is_zero: bool,
}

fn relation_residual(
    table: &CasimirTable,
    a: &SubsetIndex,
    b: &SubsetIndex,
    sym_diff_sign: i64,
) -> Result<TensorElement> {
    if a.ambient() != b.ambient() {
        return Err(Error::ArityMismatch {
            expected: a.ambient(),
            got: b.ambient(),
        });
    }
    let ca = table.get(a);
    let cb = table.get(b);
    let lhs = TensorElement::bracket(ca, cb, true)?;

    let sym = table.get(&a.symmetric_difference(b)?);
    let a_only = table.get(&a.difference(b)?);
    let b_only = table.get(&b.difference(a)?);
    let both = table.get(&a.intersection(b)?);
    let all = table.get(&a.union(b)?);

    let rhs = &(&sym.scale(&int(sym_diff_sign)) + &(a_only * b_only)) + &(both * all);
    Ok(&lhs - &rhs.scale(&int(2)))
}

/// `{C_A, C_B} - 2(-C_{A△B} + C_{A∖B} C_{B∖A} + C_{A∩B} C_{A∪B})`, expected zero.
pub fn bi_residual(a: &SubsetIndex, b: &SubsetIndex) -> Result<BiRelationResidual> {
    let table = CasimirTable::new(a.ambient())?;
    bi_residual_with(&table, a, b)
}

/// Same as [`bi_residual`] against a precomputed Casimir table.
pub fn bi_residual_with(
    table: &CasimirTable,
    a: &SubsetIndex,
    b: &SubsetIndex,
) -> Result<BiRelationResidual> {
    let residual = relation_residual(table, a, b, -1)?;
    Ok(BiRelationResidual {
        a: a.clone(),
        b: b.clone(),
        is_zero: residual.is_zero(),
        residual,
    })
}

/// Control check with the sign of the `C_{A△B}` term flipped. A correct
/// engine must report a NONZERO residual here; silence would mean the
/// normalization of the generators has drifted.
pub fn bi_residual_wrong_normalization(
    table: &CasimirTable,
    a: &SubsetIndex,
    b: &SubsetIndex,
) -> Result<TensorElement> {
    relation_residual(table, a, b, 1)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CasimirEntry {
    pub subset: Vec<usize>,
    pub terms: usize,
    pub parity_profile: (usize, usize),
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationEntry {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    pub status: String,
    pub residual_terms: usize,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ReportMeta {
    pub versions: std::collections::BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<std::collections::BTreeMap<String, f64>>,
}

/// Machine-readable verification document for one ambient arity.
#[derive(Clone, Debug, serde::Serialize)]
pub struct BiReport {
    pub n: usize,
    pub casimirs: Vec<CasimirEntry>,
    pub relations: Vec<RelationEntry>,
    pub meta: ReportMeta,
}

impl BiReport {
    pub fn all_passed(&self) -> bool {
        self.relations.iter().all(|r| r.status == "ok")
    }
}

/// Check the structure relation for every unordered pair of nonempty subsets
/// of `[n]` (including `A = B`): 28 pairs at n=3, 120 at n=4. Pairs run in
/// parallel; the report order is the deterministic key order.
pub fn verify_bi(n: usize) -> Result<BiReport> {
    verify_bi_timed(n, false)
}

pub fn verify_bi_timed(n: usize, timings: bool) -> Result<BiReport> {
    if n < 2 {
        return Err(Error::InvalidArity {
            n,
            reason: "need at least two legs".into(),
        });
    }
    let started = std::time::Instant::now();
    let table = CasimirTable::new(n)?;
    let table_secs = started.elapsed().as_secs_f64();

    let subsets = SubsetIndex::nonempty_subsets(n);
    let casimirs: Vec<CasimirEntry> = subsets
        .iter()
        .map(|a| {
            let c = table.get(a);
            CasimirEntry {
                subset: a.elems().to_vec(),
                terms: c.num_terms(),
                parity_profile: c.parity_profile(),
            }
        })
        .collect();

    let mut pairs = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for b in subsets.iter().skip(i) {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let check_started = std::time::Instant::now();
    let relations: Vec<RelationEntry> = pairs
        .par_iter()
        .map(|(a, b)| {
            let r = bi_residual_with(&table, a, b).expect("equal ambient arity");
            RelationEntry {
                a: a.elems().to_vec(),
                b: b.elems().to_vec(),
                status: if r.is_zero {
                    "ok".into()
                } else {
                    "FAIL".into()
                },
                residual_terms: r.residual.num_terms(),
            }
        })
        .collect();
    let check_secs = check_started.elapsed().as_secs_f64();

    let mut versions = std::collections::BTreeMap::new();
    versions.insert("osp12".to_string(), env!("CARGO_PKG_VERSION").to_string());
    let timings = timings.then(|| {
        let mut t = std::collections::BTreeMap::new();
        t.insert("casimir_table_secs".to_string(), table_secs);
        t.insert("relation_checks_secs".to_string(), check_secs);
        t
    });

    Ok(BiReport {
        n,
        casimirs,
        relations,
        meta: ReportMeta { versions, timings },
    })
}

/// `structure_report` is the serialized form of [`verify_bi`].
pub fn structure_report(n: usize, timings: bool) -> Result<String> {
    let report = verify_bi_timed(n, timings)?;
    Ok(serde_json::to_string_pretty(&report)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casimir::intermediate_casimir;
    use crate::perm::Permutation;
    use crate::rmatrix::gamma;

    fn subset(n: usize, elems: &[usize]) -> SubsetIndex {
        SubsetIndex::new(n, elems.iter().copied()).unwrap()
    }

    #[test]
    fn flagship_relation_at_n3() {
        // {C_12, C_23} = 2(-C_13 + C_1 C_3 + C_2 C_123)
        let r = bi_residual(&subset(3, &[1, 2]), &subset(3, &[2, 3])).unwrap();
        assert!(r.is_zero, "residual: {}", r.residual);
    }

    #[test]
    fn disjoint_singletons_and_equal_sets() {
        let r = bi_residual(&subset(3, &[1]), &subset(3, &[2])).unwrap();
        assert!(r.is_zero);
        let a = subset(3, &[1, 3]);
        let r = bi_residual(&a, &a).unwrap();
        assert!(r.is_zero);
    }

    #[test]
    fn empty_subset_convention() {
        // C_∅ = 1 makes the relation collapse to {1, C_B} = 2 C_B
        let r = bi_residual(&SubsetIndex::empty(3), &subset(3, &[2, 3])).unwrap();
        assert!(r.is_zero);
    }

    #[test]
    fn bi2_via_braided_conjugation_of_bi1() {
        // applying gamma_{s1} to the first relation residual maps it to the
        // second one; both the image residual and the piecewise images agree
        let table = CasimirTable::new(3).unwrap();
        let residual =
            relation_residual(&table, &subset(3, &[1, 2]), &subset(3, &[2, 3]), -1).unwrap();
        let s1 = Permutation::transposition(3, 1).unwrap();
        let image = gamma(&s1, &residual).unwrap();
        assert!(image.is_zero());

        // gamma_{s1} sends C_23 -> C_13, C_13 -> C_23, C_1 <-> C_2, fixes C_12
        let pairs = [
            (vec![2usize, 3usize], vec![1usize, 3usize]),
            (vec![1, 3], vec![2, 3]),
            (vec![1], vec![2]),
            (vec![2], vec![1]),
            (vec![1, 2], vec![1, 2]),
            (vec![1, 2, 3], vec![1, 2, 3]),
        ];
        for (from, to) in pairs {
            let lhs = gamma(&s1, &intermediate_casimir(&subset(3, &from)).unwrap()).unwrap();
            let rhs = intermediate_casimir(&subset(3, &to)).unwrap();
            assert_eq!(lhs, rhs, "gamma_s1(C_{from:?}) != C_{to:?}");
        }
    }

    #[test]
    fn wrong_normalization_control_fails() {
        let table = CasimirTable::new(3).unwrap();
        let r = bi_residual_wrong_normalization(&table, &subset(3, &[1, 2]), &subset(3, &[2, 3]))
            .unwrap();
        assert!(!r.is_zero(), "sign-flipped relation must not hold");
        // the residual is exactly -4 C_13
        let c13 = intermediate_casimir(&subset(3, &[1, 3])).unwrap();
        assert_eq!(r, c13.scale(&int(-4)));
    }

    #[test]
    fn verify_bi_n2_all_green() {
        let report = verify_bi(2).unwrap();
        assert_eq!(report.casimirs.len(), 3);
        assert_eq!(report.relations.len(), 6);
        assert!(report.all_passed());
    }

    #[test]
    fn report_counts_at_n3() {
        let report = verify_bi(3).unwrap();
        assert_eq!(report.casimirs.len(), 7);
        assert_eq!(report.relations.len(), 28);
        assert!(report.all_passed());
        assert!(report.meta.timings.is_none());
        let json = structure_report(3, false).unwrap();
        assert!(json.contains("\"relations\""));
    }
}
