//! Seeded instance generation: sample, assemble, extract, scan, and retry
//! on degenerate or singular draws.
//!
//! Attempt `i` of a run with seed `s` draws from [`stream`]`(s, i)`, so
//! every attempt can be replayed on its own.

use serde::Serialize;

use crate::error::{Error, SmoothError};
use crate::field::CoefficientField;
use crate::poly::Polynomial;
use crate::rng::stream;
use crate::smooth::{singular_points, SingularSearchReport, DEFAULT_BUDGET};
use crate::steiner::{
    construction_for, extract_cubic, CubicInstance, PresentationInput, SteinerKind,
};

pub const DEFAULT_MAX_ATTEMPTS: u32 = 16;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    /// Scan over `F_{p^e}` containing the construction field.
    pub extension_degree: u32,
    pub budget: u128,
    /// Draw again when rational singular points are found.
    pub regenerate_singular: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            extension_degree: 1,
            budget: DEFAULT_BUDGET,
            regenerate_singular: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ForgeConfig {
    pub kind: SteinerKind,
    pub field: CoefficientField,
    pub seed: u64,
    pub max_attempts: u32,
    pub scan: Option<ScanConfig>,
}

impl ForgeConfig {
    pub fn new(kind: SteinerKind, field: CoefficientField, seed: u64) -> Self {
        Self {
            kind,
            field,
            seed,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
            scan: Some(ScanConfig::default()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub attempt: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ScanOutcome {
    Completed {
        verdict: String,
        #[serde(flatten)]
        report: SingularSearchReport,
    },
    Skipped {
        reason: String,
    },
}

impl ScanOutcome {
    pub fn report(&self) -> Option<&SingularSearchReport> {
        match self {
            Self::Completed { report, .. } => Some(report),
            Self::Skipped { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForgeReport {
    pub kind: SteinerKind,
    pub field: String,
    pub seed: u64,
    /// Attempts used, including the successful one.
    pub attempts: u64,
    pub rejected: Vec<Rejection>,
    pub instance: CubicInstance,
    pub scan: ScanOutcome,
    pub input: PresentationInput,
}

/// `f` with coefficients read in `target`, a field containing its own.
pub fn extend_scalars(f: &Polynomial, target: &CoefficientField) -> Result<Polynomial, Error> {
    if f.field() == target {
        return Ok(f.clone());
    }
    if f.field().characteristic() != target.characteristic() || f.field().extension_degree() != 1 {
        return Err(SmoothError::UnsupportedField(format!(
            "{} is not a subfield of {target}",
            f.field()
        ))
        .into());
    }
    let terms = f
        .terms()
        .map(|(m, c)| (m.clone(), target.element(c.index().expect("prime field"))));
    Ok(Polynomial::from_terms(target, f.num_vars(), terms)?)
}

fn run_scan(form: &Polynomial, cfg: &ScanConfig) -> Result<ScanOutcome, Error> {
    let base = form.field();
    if base.size().is_none() {
        return Ok(ScanOutcome::Skipped {
            reason: format!("no point scan over {base}"),
        });
    }
    let target = CoefficientField::finite(base.characteristic(), cfg.extension_degree)?;
    let f = extend_scalars(form, &target)?;
    match singular_points(&f, cfg.budget) {
        Ok(report) => Ok(ScanOutcome::Completed {
            verdict: report.verdict(),
            report,
        }),
        Err(e @ SmoothError::BudgetExceeded { .. }) | Err(e @ SmoothError::UnsupportedField(_)) => {
            Ok(ScanOutcome::Skipped {
                reason: e.to_string(),
            })
        }
        Err(e) => Err(e.into()),
    }
}

/// Draw instances until one is non-degenerate (and, when requested, free of
/// rational singular points).
pub fn forge(cfg: &ForgeConfig) -> Result<ForgeReport, Error> {
    let construction = construction_for(cfg.kind);
    let mut rejected = Vec::new();
    for attempt in 0..cfg.max_attempts as u64 {
        let mut rng = stream(cfg.seed, attempt);
        let data = construction.sample(&cfg.field, &mut rng);
        let instance = construction.assemble(&data).and_then(|p| extract_cubic(&p));
        let mut instance = match instance {
            Ok(i) => i,
            Err(e) => {
                rejected.push(Rejection {
                    attempt,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        let scan = match &cfg.scan {
            Some(sc) => run_scan(&instance.form, sc)?,
            None => ScanOutcome::Skipped {
                reason: "scan disabled".into(),
            },
        };
        if let (Some(sc), Some(report)) = (&cfg.scan, scan.report()) {
            if sc.regenerate_singular && !report.is_clean() {
                rejected.push(Rejection {
                    attempt,
                    reason: report.verdict(),
                });
                continue;
            }
        }
        instance.provenance.seed = Some(cfg.seed);
        instance.provenance.attempt = Some(attempt);
        return Ok(ForgeReport {
            kind: cfg.kind,
            field: cfg.field.to_string(),
            seed: cfg.seed,
            attempts: attempt + 1,
            rejected,
            instance,
            scan,
            input: PresentationInput::from_data(cfg.kind, Some(cfg.seed), &data),
        });
    }
    Err(Error::RetriesExhausted {
        attempts: cfg.max_attempts,
        last: rejected
            .last()
            .map(|r| r.reason.clone())
            .unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f101_scan_is_skipped_not_faked() {
        let cfg = ForgeConfig::new(
            SteinerKind::LinearPfaffian { degree: 3 },
            CoefficientField::prime(101).unwrap(),
            7,
        );
        let r = forge(&cfg).unwrap();
        assert_eq!(r.instance.degree, 3);
        assert!(matches!(r.scan, ScanOutcome::Skipped { .. }));
    }

    #[test]
    fn zero_attempts_exhaust() {
        let mut cfg = ForgeConfig::new(
            SteinerKind::CobleFull,
            CoefficientField::prime(101).unwrap(),
            1,
        );
        cfg.max_attempts = 0;
        assert!(matches!(
            forge(&cfg),
            Err(Error::RetriesExhausted { attempts: 0, .. })
        ));
    }

    #[test]
    fn scalars_extend_into_quadratic_field() {
        let f5 = CoefficientField::prime(5).unwrap();
        let f25 = CoefficientField::quadratic(5).unwrap();
        let p = Polynomial::parse(&f5, 2, "3*x0^2 + 1*x1").unwrap();
        let q = extend_scalars(&p, &f25).unwrap();
        assert_eq!(q.field(), &f25);
        assert_eq!(q.to_text(), "3*x0^2 + 1*x1");
        assert!(extend_scalars(&p, &CoefficientField::prime(7).unwrap()).is_err());
    }
}
