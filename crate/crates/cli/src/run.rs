//! Runs the check groups in dependency order and collects records.

use std::time::Instant;

use qdirac::checks::{freealg_checks, hopf_checks, pbw_checks, relation_checks, rootvec_checks, scalar_checks};
use qdirac::dirac::{
    casimir_checks, negative_controls, nilpotency_checks, structure_checks, theorem_checks, CRatios,
    DiracContext,
};
use qdirac::identity::Outcome;
use qdirac::qext::{self, ScalingProfile};
use qdirac::rootvec::RootVectorSet;
use qdirac::{qcliff, AlgebraError, Uq};

use crate::config::{CProfile, CheckConfig, ConfigError};
use crate::report::{ConfigEcho, Record, Report, Status};

struct Collector<'a> {
    config: &'a CheckConfig,
    records: Vec<Record>,
}

impl Collector<'_> {
    fn push(&mut self, mut batch: Vec<Record>, started: Instant) {
        let millis = started.elapsed().as_millis() as u64;
        for r in &mut batch {
            if self.config.timings {
                r.millis = Some(millis);
            }
        }
        self.records
            .extend(batch.into_iter().filter(|r| self.config.selects(&r.check_id)));
    }

    fn outcomes(&mut self, outcomes: Vec<Outcome>, started: Instant) {
        let batch = outcomes.into_iter().map(record_from).collect();
        self.push(batch, started);
    }
}

fn record_from(o: Outcome) -> Record {
    let status = if o.passed() { Status::Pass } else { Status::Fail };
    Record::new(o.id, status, o.witness)
}

/// A negative control passes exactly when a witness was found.
fn negative_record(id: String, witness: Option<String>) -> Record {
    let status = if witness.is_some() { Status::Pass } else { Status::Fail };
    let witness = witness.or_else(|| Some("no non-Levi entry found".into()));
    Record::new(id, status, witness)
}

fn log(msg: &str) {
    eprintln!("qdirac: {msg}");
}

pub fn echo(config: &CheckConfig) -> ConfigEcho {
    ConfigEcho {
        rank: config.rank,
        degree_bound: config.degree_bound,
        c0: config.c0.render(),
        c1: config.c1.render(),
        c_profile: config.c_profile.name().into(),
        extended: config.extended,
    }
}

pub fn run_checks(config: &CheckConfig) -> Result<Report, ConfigError> {
    config.validate()?;
    let n = config.rank;
    let heavy = n <= 3 || config.extended;
    let mut c = Collector {
        config,
        records: Vec::new(),
    };

    let needs_uq = ["freealg", "uqalg", "rootvec", "qext", "dirac"]
        .iter()
        .any(|g| config.selects_group(g));
    let uq = if needs_uq {
        log(&format!("completing the rewriting system for rank {n}, bound {}", config.degree_bound));
        Some(Uq::new(n, config.degree_bound)?)
    } else {
        None
    };

    if config.selects_group("scalar") {
        log("scalar");
        let t = Instant::now();
        c.outcomes(scalar_checks()?, t);
    }
    if let Some(uq) = &uq {
        if config.selects_group("freealg") {
            log("freealg");
            let t = Instant::now();
            c.outcomes(freealg_checks(uq), t);
        }
        if config.selects_group("uqalg") {
            log("uqalg");
            let t = Instant::now();
            c.outcomes(relation_checks(uq)?, t);
            let t = Instant::now();
            c.outcomes(hopf_checks(uq, if heavy { 3 } else { 2 })?, t);
            let t = Instant::now();
            c.outcomes(pbw_checks(uq, if heavy { 6 } else { 4 }), t);
        }
    }
    let roots = match &uq {
        Some(uq) if config.selects_group("rootvec") || config.selects_group("dirac") => {
            Some(RootVectorSet::build(uq)?)
        }
        _ => None,
    };
    if let (Some(uq), Some(roots)) = (&uq, &roots) {
        if config.selects_group("rootvec") {
            log("rootvec");
            let t = Instant::now();
            c.outcomes(rootvec_checks(uq, roots)?, t);
        }
    }
    if config.selects_group("qext") {
        log("qext");
        let t = Instant::now();
        let mut out = qext::braiding_checks(n)?;
        out.extend(qext::pairing_checks(n)?);
        if let Some(uq) = &uq {
            out.extend(qext::levi_checks(uq)?);
        }
        c.outcomes(out, t);
    }
    if config.selects_group("qcliff") {
        log("qcliff");
        let t = Instant::now();
        let mut out = qcliff::relation_checks(n)?;
        let profile = match config.c_profile {
            CProfile::AllOnes => ScalingProfile::ones(n),
            _ => config.t_profile()?.scaling().unwrap_or_else(|_| ScalingProfile::ones(n)),
        };
        out.extend(qcliff::pairing_checks(n, &profile)?);
        c.outcomes(out, t);
    }
    if let Some(uq) = &uq {
        if config.selects_group("dirac") {
            if heavy {
                log("dirac");
                dirac_group(&mut c, uq)?;
            } else {
                c.push(
                    vec![Record::new(format!("dirac.suite[N={n}]"), Status::Skipped, None)],
                    Instant::now(),
                );
            }
        }
    }
    Ok(Report::new(Some(echo(config)), c.records))
}

fn dirac_group(c: &mut Collector, uq: &Uq) -> Result<(), AlgebraError> {
    let config = c.config;
    let n = config.rank;
    let ctx = DiracContext::new(uq)?;
    let t = Instant::now();
    c.outcomes(nilpotency_checks(&ctx)?, t);

    if config.c_profile == CProfile::AllOnes {
        let t = Instant::now();
        let ones = ScalingProfile::ones(n);
        c.outcomes(structure_checks(&ctx, &CRatios::all_ones(n), Some(&ones))?, t);
        let t = Instant::now();
        let controls = negative_controls(&ctx)?;
        let mut batch = Vec::new();
        for (name, (_, w)) in ["offdiagonal_levi", "main_theorem"].iter().zip(&controls) {
            batch.push(negative_record(format!("dirac.{name}[N={n}]"), w.clone()));
        }
        batch.extend(controls.into_iter().map(|(id, w)| negative_record(id, w)));
        c.push(batch, t);
    } else {
        let profile = config
            .t_profile()
            .map_err(|e| AlgebraError::Unsupported(e.to_string()))?;
        let scaling = profile.scaling().ok();
        let t = Instant::now();
        c.outcomes(structure_checks(&ctx, &profile.ratios(), scaling.as_ref())?, t);
        if scaling.is_none() {
            let skipped = ["self_adjoint", "profile_agreement"]
                .iter()
                .map(|k| Record::new(format!("dirac.{k}[N={n}]"), Status::Skipped, None))
                .collect();
            c.push(skipped, Instant::now());
        }
        let t = Instant::now();
        c.outcomes(theorem_checks(&ctx, &profile)?, t);
        let t = Instant::now();
        let batch = negative_controls(&ctx)?
            .into_iter()
            .map(|(id, w)| negative_record(id, w))
            .collect();
        c.push(batch, t);
    }
    let t = Instant::now();
    c.outcomes(casimir_checks(&ctx)?, t);
    Ok(())
}
