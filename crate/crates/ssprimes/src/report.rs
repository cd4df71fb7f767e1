//! Rendering of reports as fixed-width tables, JSON documents, and CSV.
//!
//! CSV and JSON carry the same values field for field. JSON key order is
//! fixed by struct declaration order, so documents are byte-reproducible
//! across runs; nothing time- or host-dependent is embedded.

use serde::Serialize;

use crate::harness::{CoincidenceSummary, ConditionReport, MonsterOrder};
use crate::jacobi::JacobiDimension;
use crate::locus::SupersingularReport;
use crate::modular_curve::GenusProfile;

/// Exact header of the per-prime CSV schema.
pub const CSV_HEADER: &str = "p,c1_monster,c2_genus_plus_zero,c3_ss_rational,c4_jacobi_zero,\
consistent,in_S,genus_x0,fricke_fixed_points,genus_plus,jacobi_dim,ss_expected,ss_in_fp,kodaira";

/// One CSV data row matching [`CSV_HEADER`].
pub fn csv_row(r: &ConditionReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.p.value(),
        r.c1_monster,
        r.c2_genus_plus_zero,
        r.c3_ss_rational,
        r.c4_jacobi_zero,
        r.consistent,
        r.in_s,
        r.genus.genus,
        r.genus.fricke_fixed_points,
        r.genus.genus_plus,
        r.jacobi_dim,
        r.ss_expected,
        r.ss_in_fp,
        r.kodaira.tag()
    )
}

/// Header plus one row per prime, each line newline-terminated.
pub fn verify_csv(s: &CoincidenceSummary) -> String {
    let mut out = String::with_capacity(64 * (s.reports.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in &s.reports {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct Meta {
    version: &'static str,
    bound: u64,
}

#[derive(Serialize)]
struct GenusBlock {
    genus_x0: u64,
    fricke_fixed_points: u64,
    genus_plus: u64,
}

#[derive(Serialize)]
struct JacobiBlock {
    jacobi_dim: u64,
}

#[derive(Serialize)]
struct SupersingularBlock {
    ss_expected: u64,
    ss_in_fp: u64,
}

#[derive(Serialize)]
struct RecordJson {
    p: u64,
    c1_monster: bool,
    c2_genus_plus_zero: bool,
    c3_ss_rational: bool,
    c4_jacobi_zero: bool,
    consistent: bool,
    #[serde(rename = "in_S")]
    in_s: bool,
    genus: GenusBlock,
    jacobi: JacobiBlock,
    supersingular: SupersingularBlock,
    kodaira: &'static str,
}

impl From<&ConditionReport> for RecordJson {
    fn from(r: &ConditionReport) -> Self {
        RecordJson {
            p: r.p.value(),
            c1_monster: r.c1_monster,
            c2_genus_plus_zero: r.c2_genus_plus_zero,
            c3_ss_rational: r.c3_ss_rational,
            c4_jacobi_zero: r.c4_jacobi_zero,
            consistent: r.consistent,
            in_s: r.in_s,
            genus: GenusBlock {
                genus_x0: r.genus.genus,
                fricke_fixed_points: r.genus.fricke_fixed_points,
                genus_plus: r.genus.genus_plus,
            },
            jacobi: JacobiBlock {
                jacobi_dim: r.jacobi_dim,
            },
            supersingular: SupersingularBlock {
                ss_expected: r.ss_expected,
                ss_in_fp: r.ss_in_fp,
            },
            kodaira: r.kodaira.tag(),
        }
    }
}

#[derive(Serialize)]
struct VerifyDocument {
    meta: Meta,
    records: Vec<RecordJson>,
}

/// The sweep as a JSON document: `meta` (version, bound) plus `records`.
pub fn verify_json(s: &CoincidenceSummary) -> String {
    let doc = VerifyDocument {
        meta: Meta {
            version: env!("CARGO_PKG_VERSION"),
            bound: s.bound,
        },
        records: s.reports.iter().map(RecordJson::from).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

/// Fixed-width table, one row per prime.
pub fn verify_table(s: &CoincidenceSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>7} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>6} {:>6} {:>5} {:>6} {:>6} {:>5} kodaira\n",
        "p", "c1", "c2", "c3", "c4", "cons", "in_S", "g(X0)", "fricke", "g+", "dimJ", "ss_exp", "ss_fp"
    ));
    for r in &s.reports {
        out.push_str(&format!(
            "{:>7} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>6} {:>6} {:>5} {:>6} {:>6} {:>5} {}\n",
            r.p.value(),
            r.c1_monster,
            r.c2_genus_plus_zero,
            r.c3_ss_rational,
            r.c4_jacobi_zero,
            r.consistent,
            r.in_s,
            r.genus.genus,
            r.genus.fricke_fixed_points,
            r.genus.genus_plus,
            r.jacobi_dim,
            r.ss_expected,
            r.ss_in_fp,
            r.kodaira.tag()
        ));
    }
    out.pop();
    out
}

/// One-line outcome of a sweep.
pub fn summary_line(s: &CoincidenceSummary) -> String {
    format!(
        "checked {} primes <= {}; inconsistencies: {}; zero set has {} primes and matches S: {}",
        s.checked,
        s.bound,
        s.inconsistencies.len(),
        s.zero_set.len(),
        s.zero_set == s.expected_zero_set()
    )
}

#[derive(Serialize)]
struct GenusDetail {
    p: u64,
    index_mu: u64,
    nu2: u64,
    nu3: u64,
    nu_inf: u64,
    genus_x0: u64,
    fricke_fixed_points: u64,
    genus_plus: u64,
    dim_weight2_plus: u64,
}

impl From<&GenusProfile> for GenusDetail {
    fn from(g: &GenusProfile) -> Self {
        GenusDetail {
            p: g.p.value(),
            index_mu: g.index_mu,
            nu2: g.nu2,
            nu3: g.nu3,
            nu_inf: g.nu_inf,
            genus_x0: g.genus,
            fricke_fixed_points: g.fricke_fixed_points,
            genus_plus: g.genus_plus,
            dim_weight2_plus: g.dim_weight2_plus,
        }
    }
}

pub fn genus_json(g: &GenusProfile) -> String {
    serde_json::to_string_pretty(&GenusDetail::from(g)).expect("plain data serializes")
}

pub fn genus_csv(g: &GenusProfile) -> String {
    let d = GenusDetail::from(g);
    format!(
        "p,index_mu,nu2,nu3,nu_inf,genus_x0,fricke_fixed_points,genus_plus,dim_weight2_plus\n{},{},{},{},{},{},{},{},{}",
        d.p, d.index_mu, d.nu2, d.nu3, d.nu_inf, d.genus_x0,
        d.fricke_fixed_points, d.genus_plus, d.dim_weight2_plus
    )
}

pub fn genus_table(g: &GenusProfile) -> String {
    format!(
        "p:                  {}\n\
         index mu:           {}\n\
         nu2:                {}\n\
         nu3:                {}\n\
         cusps:              {}\n\
         genus X_0(p):       {}\n\
         Fricke fixed pts:   {}\n\
         genus X_0(p)+:      {}\n\
         dim M_2(Gamma_0+):  {}",
        g.p.value(),
        g.index_mu,
        g.nu2,
        g.nu3,
        g.nu_inf,
        g.genus,
        g.fricke_fixed_points,
        g.genus_plus,
        g.dim_weight2_plus
    )
}

#[derive(Serialize)]
struct JacobiDetail {
    p: u64,
    jacobi_dim: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<Vec<i64>>,
}

pub fn jacobi_json(d: &JacobiDimension, with_terms: bool) -> String {
    let detail = JacobiDetail {
        p: d.p.value(),
        jacobi_dim: d.dim,
        terms: with_terms.then(|| d.terms.clone()),
    };
    serde_json::to_string_pretty(&detail).expect("plain data serializes")
}

pub fn jacobi_csv(d: &JacobiDimension, with_terms: bool) -> String {
    if with_terms {
        let mut out = String::from("p,j,term");
        for (i, t) in d.terms.iter().enumerate() {
            out.push_str(&format!("\n{},{},{}", d.p.value(), i + 1, t));
        }
        out
    } else {
        format!("p,jacobi_dim\n{},{}", d.p.value(), d.dim)
    }
}

pub fn jacobi_table(d: &JacobiDimension, with_terms: bool) -> String {
    let mut out = format!("p:           {}\njacobi_dim:  {}", d.p.value(), d.dim);
    if with_terms {
        out.push_str("\nterms (j: floor((1+j)/6) - delta6(j) - floor(j^2/4p)):");
        for (i, t) in d.terms.iter().enumerate() {
            out.push_str(&format!("\n{:>6}: {:>3}", i + 1, t));
        }
    }
    out
}

#[derive(Serialize)]
struct SupersingularDetail {
    p: u64,
    ss_expected: u64,
    ss_in_fp: u64,
    all_rational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    found_in_fp: Option<Vec<u64>>,
}

pub fn supersingular_json(r: &SupersingularReport, with_list: bool) -> String {
    let detail = SupersingularDetail {
        p: r.p.value(),
        ss_expected: r.expected_count,
        ss_in_fp: r.found_in_fp.len() as u64,
        all_rational: r.all_rational,
        found_in_fp: with_list.then(|| r.found_values()),
    };
    serde_json::to_string_pretty(&detail).expect("plain data serializes")
}

pub fn supersingular_csv(r: &SupersingularReport, with_list: bool) -> String {
    let base = format!(
        "{},{},{},{}",
        r.p.value(),
        r.expected_count,
        r.found_in_fp.len(),
        r.all_rational
    );
    if with_list {
        let joined = r
            .found_values()
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(";");
        format!("p,ss_expected,ss_in_fp,all_rational,found_in_fp\n{base},{joined}")
    } else {
        format!("p,ss_expected,ss_in_fp,all_rational\n{base}")
    }
}

pub fn supersingular_table(r: &SupersingularReport, with_list: bool) -> String {
    let mut out = format!(
        "p:             {}\nexpected:      {}\nfound in F_p:  {}\nall rational:  {}",
        r.p.value(),
        r.expected_count,
        r.found_in_fp.len(),
        r.all_rational
    );
    if with_list {
        out.push_str(&format!(
            "\nj-invariants:  [{}]",
            r.found_values()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    out
}

pub fn conditions_json(r: &ConditionReport) -> String {
    serde_json::to_string_pretty(&RecordJson::from(r)).expect("plain data serializes")
}

pub fn conditions_csv(r: &ConditionReport) -> String {
    format!("{}\n{}", CSV_HEADER, csv_row(r))
}

pub fn conditions_table(r: &ConditionReport) -> String {
    format!(
        "p:                         {}\n\
         c1 divides Monster order: {}\n\
         c2 genus X_0(p)+ is 0:    {}\n\
         c3 ss locus in F_p:       {}\n\
         c4 Jacobi dim is 0:       {}\n\
         consistent:               {}\n\
         in S:                     {}\n\
         genus X_0(p):             {}\n\
         Fricke fixed points:      {}\n\
         genus X_0(p)+:            {}\n\
         Jacobi cusp dim:          {}\n\
         ss expected / in F_p:     {} / {}\n\
         Kodaira status of A_p:    {}",
        r.p.value(),
        r.c1_monster,
        r.c2_genus_plus_zero,
        r.c3_ss_rational,
        r.c4_jacobi_zero,
        r.consistent,
        r.in_s,
        r.genus.genus,
        r.genus.fricke_fixed_points,
        r.genus.genus_plus,
        r.jacobi_dim,
        r.ss_expected,
        r.ss_in_fp,
        r.kodaira.tag()
    )
}

#[derive(Serialize)]
struct FactorJson {
    prime: u64,
    exponent: u32,
}

#[derive(Serialize)]
struct MonsterJson {
    digits: String,
    num_digits: usize,
    factorization: Vec<FactorJson>,
    product_matches_digits: bool,
    divisor_primes_are_s: bool,
    factorization_primes_are_s: bool,
    valid: bool,
}

pub fn monster_json(m: &MonsterOrder) -> String {
    let check = m.check();
    let doc = MonsterJson {
        digits: m.digits().to_string(),
        num_digits: m.digits().num_digits(),
        factorization: m
            .factorization()
            .iter()
            .map(|&(prime, exponent)| FactorJson { prime, exponent })
            .collect(),
        product_matches_digits: check.product_matches_digits,
        divisor_primes_are_s: check.divisor_primes_are_s,
        factorization_primes_are_s: check.factorization_primes_are_s,
        valid: check.valid(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

fn factorization_string(m: &MonsterOrder, sep: &str) -> String {
    m.factorization()
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn monster_csv(m: &MonsterOrder) -> String {
    let check = m.check();
    format!(
        "digits,num_digits,factorization,product_matches_digits,divisor_primes_are_s,factorization_primes_are_s,valid\n{},{},{},{},{},{},{}",
        m.digits(),
        m.digits().num_digits(),
        factorization_string(m, ";"),
        check.product_matches_digits,
        check.divisor_primes_are_s,
        check.factorization_primes_are_s,
        check.valid()
    )
}

pub fn monster_table(m: &MonsterOrder) -> String {
    let check = m.check();
    format!(
        "order:                      {} ({} digits)\n\
         factorization:              {}\n\
         product matches digits:     {}\n\
         divisor primes <= 1000 = S: {}\n\
         factorization primes = S:   {}\n\
         valid:                      {}",
        m.digits(),
        m.digits().num_digits(),
        factorization_string(m, " * "),
        check.product_matches_digits,
        check.divisor_primes_are_s,
        check.factorization_primes_are_s,
        check.valid()
    )
}
