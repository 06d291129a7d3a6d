use serde::{Deserialize, Serialize};

use plethyrs::certificate::{
    verify_case, verify_cases, Case, CaseRecord, CaseStatus, SearchConfig, VerificationReport,
};
use plethyrs::characters::{kronecker as kronecker_coefficient, mn_character, CycleType};
use plethyrs::gct::{perorbit_occurs, GctQuery, Witness};
use plethyrs::symfunc::{plethysm_coefficient_with_limit, plethysm_decomposition};
use plethyrs::tableaux::enumerate_ssyt;
use plethyrs::{Partition, Result};

use crate::config::{Config, Format};
use crate::{EXIT_CROSS_CHECK, EXIT_EXHAUSTED, EXIT_OK};

#[derive(Serialize, Deserialize)]
pub struct Term {
    pub lambda: Partition,
    pub mult: u64,
}

#[derive(Serialize, Deserialize)]
pub struct Decomposition {
    pub terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
pub struct Value<T> {
    pub value: T,
}

#[derive(Serialize, Deserialize)]
pub struct GctReport {
    pub occurs: bool,
    pub witness: Option<Witness>,
}

fn emit_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output types serialize infallibly")
    );
}

fn emit_scalar<T: Serialize + std::fmt::Display>(config: &Config, value: T) {
    match config.format {
        Format::Table => println!("{value}"),
        Format::Json => emit_json(&Value { value }),
    }
}

fn search_config(config: &Config, check_projector: bool) -> SearchConfig {
    SearchConfig {
        seed: config.seed,
        budget: config.budget,
        check_projector,
        degree_limit: config.degree_limit,
    }
}

pub fn plethysm(config: &Config, k: usize, m: usize) -> Result<u8> {
    let terms: Vec<Term> = plethysm_decomposition(k, m, config.degree_limit)?
        .into_iter()
        .map(|(lambda, mult)| Term { lambda, mult })
        .collect();
    match config.format {
        Format::Table => {
            for t in &terms {
                println!("{}\t{}", t.lambda, t.mult);
            }
        }
        Format::Json => emit_json(&Decomposition { terms }),
    }
    Ok(EXIT_OK)
}

pub fn coefficient(config: &Config, lambda: &Partition, k: usize, m: usize) -> Result<u8> {
    let c = plethysm_coefficient_with_limit(lambda, k, m, config.degree_limit)?;
    emit_scalar(config, c);
    Ok(EXIT_OK)
}

pub fn kostka(config: &Config, shape: &Partition, content: &[usize], list: bool) -> Result<u8> {
    let tableaux = enumerate_ssyt(shape, content)?;
    if list {
        emit_json(&tableaux);
    } else {
        emit_scalar(config, tableaux.len());
    }
    Ok(EXIT_OK)
}

pub fn character(config: &Config, lambda: &Partition, class: Partition) -> Result<u8> {
    let v = mn_character(lambda, &CycleType::new(class))?;
    emit_scalar(config, v);
    Ok(EXIT_OK)
}

pub fn kronecker(
    config: &Config,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<u8> {
    let v = kronecker_coefficient(lambda, mu, nu)?;
    emit_scalar(config, v);
    Ok(EXIT_OK)
}

fn status_code(status: &CaseStatus) -> u8 {
    match status {
        CaseStatus::Verified => EXIT_OK,
        CaseStatus::Exhausted => EXIT_EXHAUSTED,
        CaseStatus::Failed(_) => EXIT_CROSS_CHECK,
    }
}

fn print_report(report: &VerificationReport) {
    let case = &report.case;
    println!("case            {case}");
    println!("status          {}", report.status.label());
    if let CaseStatus::Failed(msg) = &report.status {
        println!("detail          {msg}");
    }
    println!("multiplicity    {}", report.oracle_multiplicity);
    println!("attempts        {}", report.attempts);
    if let Some(cert) = &report.certificate {
        let rows: Vec<String> = cert
            .a
            .rows()
            .into_iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(" "))
            })
            .collect();
        println!("a               {}", rows.join(" "));
        println!("arrangement     {}", cert.arrangement);
        println!("pi              {}", cert.pi);
        println!("overlap         {}", cert.overlap);
        println!("sum of squares  {}", cert.sum_of_squares);
    }
    if let Some(ok) = report.projector_check {
        println!("projector       {}", if ok { "pass" } else { "fail" });
    }
}

pub fn weintraub(
    config: &Config,
    lambda: Partition,
    k: usize,
    n: usize,
    d: usize,
    check_projector: bool,
) -> Result<u8> {
    let case = Case::new(lambda, k, n, d)?;
    let report = verify_case(&case, &search_config(config, check_projector))?;
    match config.format {
        Format::Table => print_report(&report),
        Format::Json => emit_json(&CaseRecord::from(&report)),
    }
    if let CaseStatus::Failed(msg) = &report.status {
        eprintln!("cross-check failed: {msg}");
    }
    Ok(status_code(&report.status))
}

pub fn sweep(
    config: &Config,
    k_max: usize,
    n_max: usize,
    d_max: usize,
    check_projector: bool,
) -> Result<u8> {
    let cases = plethyrs::certificate::sweep_cases(k_max, n_max, d_max);
    let reports = verify_cases(&cases, &search_config(config, check_projector))?;
    match config.format {
        Format::Table => {
            for r in &reports {
                let sos = r
                    .certificate
                    .as_ref()
                    .map_or_else(|| "-".to_string(), |c| c.sum_of_squares.to_string());
                println!(
                    "{:<10} {}\tS={}\tmult={}\tattempts={}\t{:.3}s",
                    r.status.label(),
                    r.case,
                    sos,
                    r.oracle_multiplicity,
                    r.attempts,
                    r.elapsed.as_secs_f64()
                );
            }
        }
        Format::Json => {
            let records: Vec<CaseRecord> = reports.iter().map(CaseRecord::from).collect();
            emit_json(&records);
        }
    }
    for r in &reports {
        if let CaseStatus::Failed(msg) = &r.status {
            eprintln!("{}: {msg}", r.case);
        }
    }
    let code = reports
        .iter()
        .map(|r| status_code(&r.status))
        .fold(EXIT_OK, |acc, c| match (acc, c) {
            (EXIT_CROSS_CHECK, _) | (_, EXIT_CROSS_CHECK) => EXIT_CROSS_CHECK,
            (EXIT_EXHAUSTED, _) | (_, EXIT_EXHAUSTED) => EXIT_EXHAUSTED,
            _ => EXIT_OK,
        });
    Ok(code)
}

pub fn gct_check(
    config: &Config,
    lambda: Partition,
    d: usize,
    ell: usize,
    search_limit: usize,
) -> Result<u8> {
    let query = GctQuery::new(lambda, d, ell)?;
    let outcome = perorbit_occurs(&query, search_limit)?;
    match config.format {
        Format::Table => match &outcome.witness {
            Some(w) => println!("occurs\tμ={} ν={}", w.mu, w.nu),
            None => println!(
                "does not occur\t({} pairs examined)",
                outcome.pairs_examined
            ),
        },
        Format::Json => emit_json(&GctReport {
            occurs: outcome.occurs,
            witness: outcome.witness,
        }),
    }
    Ok(EXIT_OK)
}
