use serde::{Deserialize, Serialize};

use super::duality::{classify_generator, BinaryType, DualityClass, FormalSelfDuality};
use super::weights::WeightDistribution;
use super::{exhaustive, min_distance_accelerated_with, weight_distribution_of, DistanceMethod};
use crate::ddc::{CodeKind, DdcCode, DdcCodeJson};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DistanceChoice {
    /// Exhaustive when `q^k` fits the budget, accelerated otherwise.
    #[default]
    Auto,
    Exhaustive,
    Accelerated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub exhaustive_budget: u128,
    pub wd_budget: u128,
    pub distance: DistanceChoice,
    /// Count minimum-weight words (always done by the exhaustive engine).
    pub count_minimum_words: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            exhaustive_budget: super::DEFAULT_EXHAUSTIVE_BUDGET,
            wd_budget: super::DEFAULT_EXHAUSTIVE_BUDGET,
            distance: DistanceChoice::Auto,
            count_minimum_words: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeReport {
    pub length: usize,
    pub dimension: usize,
    pub distance: u32,
    pub a_d: Option<u128>,
    pub duality: DualityClass,
    pub method: DistanceMethod,
    pub provenance: DdcCodeJson,
    pub weight_distribution: Option<WeightDistribution>,
}

/// Wire form of a [`CodeReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReportJson {
    pub length: usize,
    pub dim: usize,
    pub d: u32,
    pub a_d: Option<u128>,
    pub self_dual: bool,
    pub hermitian_self_dual: Option<bool>,
    #[serde(rename = "type")]
    pub binary_type: Option<BinaryType>,
    pub formally_self_dual: Option<bool>,
    pub formally_self_dual_evidence: FormalSelfDuality,
    pub method: DistanceMethod,
    pub provenance: DdcCodeJson,
}

impl CodeReport {
    pub fn parameters(&self) -> [usize; 3] {
        [self.length, self.dimension, self.distance as usize]
    }

    pub fn to_json_value(&self) -> CodeReportJson {
        CodeReportJson {
            length: self.length,
            dim: self.dimension,
            d: self.distance,
            a_d: self.a_d,
            self_dual: self.duality.self_dual_euclidean,
            hermitian_self_dual: self.duality.self_dual_hermitian,
            binary_type: self.duality.binary_type,
            formally_self_dual: self.duality.formally_self_dual.holds(),
            formally_self_dual_evidence: self.duality.formally_self_dual,
            method: self.method,
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes")
    }
}

pub fn analyze(code: &DdcCode, opts: &AnalysisOptions) -> Result<CodeReport> {
    let g = &code.generator;
    let q = g.field().q();
    let k = g.rows();
    let fits = |budget| exhaustive::check_budget(q, k, budget).is_ok();
    let use_exhaustive = match opts.distance {
        DistanceChoice::Auto => fits(opts.exhaustive_budget),
        DistanceChoice::Exhaustive => {
            exhaustive::check_budget(q, k, opts.exhaustive_budget)?;
            true
        }
        DistanceChoice::Accelerated => false,
    };
    let wd = if use_exhaustive || fits(opts.wd_budget) {
        Some(weight_distribution_of(g, opts.exhaustive_budget.max(opts.wd_budget))?)
    } else {
        None
    };
    let (distance, a_d, method) = if use_exhaustive {
        let (d, a) = wd
            .as_ref()
            .and_then(WeightDistribution::minimum)
            .ok_or_else(|| Error::Domain("code has no nonzero codewords".into()))?;
        (d, Some(a), DistanceMethod::Exhaustive)
    } else {
        let out = min_distance_accelerated_with(g, opts.count_minimum_words, None)?;
        (out.distance, out.a_d, DistanceMethod::Accelerated)
    };
    let duality = classify_generator(g, wd.as_ref(), code.kind == CodeKind::Pure, opts.wd_budget)?;
    Ok(CodeReport {
        length: code.length(),
        dimension: code.dimension(),
        distance,
        a_d,
        duality,
        method,
        provenance: code.to_json_value(),
        weight_distribution: wd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ddc::build;
    use crate::gf::Field;
    use crate::splitting::splitting_from_s1;

    #[test]
    fn report_json_keys() {
        let sp = splitting_from_s1(15, &[1, 4, 3, 12, 7, 13, 5]).unwrap();
        let code = build(CodeKind::Pure, Field::GF2, &sp, [0, 0, 1], None).unwrap();
        let report = analyze(&code, &AnalysisOptions::default()).unwrap();
        assert_eq!(report.parameters(), [30, 15, 8]);
        assert_eq!(report.method, DistanceMethod::Exhaustive);
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        for key in [
            "length", "dim", "d", "a_d", "self_dual", "hermitian_self_dual", "type",
            "formally_self_dual", "method", "provenance",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["d"], 8);
        assert_eq!(v["formally_self_dual"], true);
        assert_eq!(v["method"], "exhaustive");
        assert_eq!(v["provenance"]["kind"], "pure");
    }

    #[test]
    fn accelerated_when_forced() {
        let sp = splitting_from_s1(15, &[1, 4, 3, 12, 7, 13, 5]).unwrap();
        let code = build(CodeKind::Bordered, Field::GF2, &sp, [0, 0, 1], Some([0, 1, 0])).unwrap();
        let opts = AnalysisOptions { distance: DistanceChoice::Accelerated, ..Default::default() };
        let fast = analyze(&code, &opts).unwrap();
        let slow = analyze(&code, &AnalysisOptions::default()).unwrap();
        assert_eq!(fast.method, DistanceMethod::Accelerated);
        assert_eq!((fast.distance, fast.a_d), (slow.distance, slow.a_d));
        assert_eq!(fast.duality, slow.duality);
        let opts = AnalysisOptions { distance: DistanceChoice::Exhaustive, exhaustive_budget: 10, ..Default::default() };
        assert!(matches!(analyze(&code, &opts), Err(Error::BudgetExceeded { .. })));
    }
}
