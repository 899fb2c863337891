//! Wire formats for the library types. Coefficients are strings in their
//! canonical textual form.

use serde::{Deserialize, Serialize};
use superjack::{Basis, Error, MPoly, Partition, Result, SymFunc, ThetaFunction};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymTerm {
    pub partition: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: String,
    pub terms: Vec<SymTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MPolyJson {
    pub n: usize,
    pub m: usize,
    pub terms: Vec<PolyTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramJson {
    pub n: usize,
    pub m: usize,
    pub degree: usize,
    pub labels: Vec<Vec<usize>>,
    pub matrix: Vec<Vec<String>>,
    pub expected_diagonal: Vec<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl SymFuncJson {
    /// Terms follow the partition order: weight ascending, then
    /// lexicographically descending.
    pub fn encode<C>(f: &SymFunc<C>, coeff: impl Fn(&C) -> Result<String>) -> Result<Self>
    where
        C: superjack::Scalar,
    {
        let terms = f
            .terms()
            .map(|(lam, c)| {
                Ok(SymTerm {
                    partition: lam.parts().to_vec(),
                    coeff: coeff(c)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(SymFuncJson {
            basis: f.basis().name().to_string(),
            terms,
        })
    }

    pub fn decode(&self) -> Result<SymFunc<ThetaFunction>> {
        let basis = match self.basis.as_str() {
            "monomial" => Basis::Monomial,
            "powersum" => Basis::PowerSum,
            other => return Err(Error::Parse(format!("unknown basis {other:?}"))),
        };
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((Partition::new(t.partition.clone()), t.coeff.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymFunc::from_terms(basis, terms))
    }
}

impl MPolyJson {
    pub fn encode<C>(p: &MPoly<C>, coeff: impl Fn(&C) -> Result<String>) -> Result<Self>
    where
        C: superjack::Scalar,
    {
        let terms = p
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                Ok(PolyTerm {
                    exps: e.clone(),
                    coeff: coeff(c)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(MPolyJson {
            n: p.n(),
            m: p.m(),
            terms,
        })
    }

    pub fn decode(&self) -> Result<MPoly<ThetaFunction>> {
        let nvars = self.n + self.m;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if t.exps.len() != nvars {
                    return Err(Error::Parse(format!("exponent vector {:?} has wrong length", t.exps)));
                }
                Ok((t.exps.clone(), t.coeff.parse()?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MPoly::from_terms(self.n, self.m, terms))
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division-by-zero",
        Error::ExcludedParameter { .. } => "excluded-theta",
        Error::Pole { .. } => "pole",
        Error::WeightMismatch(..) => "weight-mismatch",
        Error::BoxOutsideDiagram { .. } => "box-outside-diagram",
        Error::NotInFatHook { .. } => "not-in-fat-hook",
        Error::InFatHook { .. } => "in-fat-hook",
        Error::NonZeroRemainder { .. } => "nonzero-remainder",
        Error::AsymmetricInput => "asymmetric-input",
        Error::NotEigenfunction(_) => "not-eigenfunction",
        Error::LayoutMismatch { .. } => "layout-mismatch",
        Error::Parse(_) => "parse",
        Error::InvalidArgument(_) => "invalid-argument",
    }
}
