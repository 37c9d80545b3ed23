//! Serialization of bound reports: JSON (full precision), CSV and a
//! human-readable table (both at fixed 9 decimals). Output is deterministic:
//! identical inputs and flags produce byte-identical text.

use serde::Serialize;

use gaussbound_core::bounds::BoundReport;

use crate::error::{CliError, CliResult};

/// Which bounds a report serialization should include.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSelection {
    pub chernoff: bool,
    pub bhattacharyya: bool,
    pub minkowski: bool,
    pub young: bool,
    pub fidelity: bool,
}

impl Default for BoundSelection {
    fn default() -> Self {
        Self {
            chernoff: true,
            bhattacharyya: true,
            minkowski: true,
            young: true,
            fidelity: true,
        }
    }
}

impl BoundSelection {
    /// Parse a comma-separated selector list: qc, bhatta, mink, young, fid.
    pub fn parse(list: &str) -> CliResult<Self> {
        let mut sel = Self {
            chernoff: false,
            bhattacharyya: false,
            minkowski: false,
            young: false,
            fidelity: false,
        };
        for token in list.split(',') {
            match token.trim() {
                "qc" => sel.chernoff = true,
                "bhatta" => sel.bhattacharyya = true,
                "mink" => sel.minkowski = true,
                "young" => sel.young = true,
                "fid" => sel.fidelity = true,
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown bound selector {other:?} (expected qc, bhatta, mink, young, fid)"
                    )))
                }
            }
        }
        Ok(sel)
    }
}

#[derive(Serialize)]
struct JsonSCurveBound {
    s_star: f64,
    value: f64,
}

#[derive(Serialize)]
struct JsonChernoff {
    s_star: f64,
    value: f64,
    kappa: f64,
}

#[derive(Serialize)]
struct JsonFidelity {
    f: f64,
    f_minus: f64,
    f_plus: f64,
}

#[derive(Serialize)]
struct JsonReport {
    copies: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    chernoff: Option<JsonChernoff>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bhattacharyya: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minkowski: Option<JsonSCurveBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    young: Option<JsonSCurveBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fidelity: Option<JsonFidelity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    helstrom: Option<f64>,
}

pub fn to_json(report: &BoundReport, sel: &BoundSelection) -> CliResult<String> {
    let out = JsonReport {
        copies: report.copies,
        chernoff: sel.chernoff.then_some(JsonChernoff {
            s_star: report.chernoff.s_star,
            value: report.chernoff.value,
            kappa: report.chernoff.kappa,
        }),
        bhattacharyya: sel.bhattacharyya.then_some(report.bhattacharyya),
        minkowski: sel.minkowski.then_some(JsonSCurveBound {
            s_star: report.minkowski.s_star,
            value: report.minkowski.value,
        }),
        young: sel.young.then_some(JsonSCurveBound {
            s_star: report.young.s_star,
            value: report.young.value,
        }),
        fidelity: report.fidelity.as_ref().and_then(|fid| {
            sel.fidelity.then_some(JsonFidelity {
                f: fid.fidelity,
                f_minus: fid.f_minus,
                f_plus: fid.f_plus,
            })
        }),
        helstrom: report.helstrom,
    };
    serde_json::to_string_pretty(&out)
        .map_err(|e| CliError::Domain(format!("serialization failed: {e}")))
}

pub fn to_csv(report: &BoundReport, sel: &BoundSelection) -> String {
    let mut header: Vec<&str> = vec!["copies"];
    let mut row: Vec<String> = vec![report.copies.to_string()];
    let push = |header_items: &[&'static str],
                values: &[f64],
                header_out: &mut Vec<&str>,
                row_out: &mut Vec<String>| {
        for (h, v) in header_items.iter().zip(values.iter()) {
            header_out.push(h);
            row_out.push(format!("{v:.9}"));
        }
    };
    if sel.chernoff {
        push(
            &["chernoff_s_star", "chernoff", "kappa"],
            &[
                report.chernoff.s_star,
                report.chernoff.value,
                report.chernoff.kappa,
            ],
            &mut header,
            &mut row,
        );
    }
    if sel.bhattacharyya {
        push(
            &["bhattacharyya"],
            &[report.bhattacharyya],
            &mut header,
            &mut row,
        );
    }
    if sel.minkowski {
        push(
            &["minkowski_s_star", "minkowski"],
            &[report.minkowski.s_star, report.minkowski.value],
            &mut header,
            &mut row,
        );
    }
    if sel.young {
        push(
            &["young_s_star", "young"],
            &[report.young.s_star, report.young.value],
            &mut header,
            &mut row,
        );
    }
    if sel.fidelity {
        if let Some(fid) = &report.fidelity {
            push(
                &["f", "f_minus", "f_plus"],
                &[fid.fidelity, fid.f_minus, fid.f_plus],
                &mut header,
                &mut row,
            );
        }
    }
    if let Some(h) = report.helstrom {
        push(&["helstrom"], &[h], &mut header, &mut row);
    }
    format!("{}\n{}\n", header.join(","), row.join(","))
}

pub fn to_table(report: &BoundReport, sel: &BoundSelection) -> String {
    let mut out = String::new();
    out.push_str(&format!("copies: {}\n", report.copies));
    if sel.chernoff {
        out.push_str(&format!(
            "chernoff       {:.9}  (s* = {:.9}, kappa = {:.9})\n",
            report.chernoff.value, report.chernoff.s_star, report.chernoff.kappa
        ));
    }
    if sel.bhattacharyya {
        out.push_str(&format!("bhattacharyya  {:.9}\n", report.bhattacharyya));
    }
    if sel.minkowski {
        out.push_str(&format!(
            "minkowski      {:.9}  (s* = {:.9})\n",
            report.minkowski.value, report.minkowski.s_star
        ));
    }
    if sel.young {
        out.push_str(&format!(
            "young          {:.9}  (s* = {:.9})\n",
            report.young.value, report.young.s_star
        ));
    }
    if sel.fidelity {
        if let Some(fid) = &report.fidelity {
            out.push_str(&format!(
                "fidelity       {:.9}  (f- = {:.9}, f+ = {:.9})\n",
                fid.fidelity, fid.f_minus, fid.f_plus
            ));
        }
    }
    if let Some(h) = report.helstrom {
        out.push_str(&format!("helstrom       {:.9}\n", h));
    }
    for (name, clamped, s_star) in [
        ("chernoff", report.chernoff.clamped, report.chernoff.s_star),
        (
            "minkowski",
            report.minkowski.clamped,
            report.minkowski.s_star,
        ),
        ("young", report.young.clamped, report.young.s_star),
    ] {
        if clamped {
            out.push_str(&format!(
                "note: {name} infimum landed on the epsilon-inset endpoint s = {s_star:.9}\n"
            ));
        }
    }
    out
}
