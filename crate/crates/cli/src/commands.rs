use std::fs;
use std::path::Path;

use phmetric::builtin::make_example;
use phmetric::io::{load_matrix, save_matrix, MatrixFile};
use phmetric::report::Report;
use phmetric::{
    classify, hermitize, spectrum_report, ComplexMatrix, Error, HermitizationResult, Result,
    SpectrumReport, Verdict,
};
use serde::Serialize;

use crate::args::{Command, CommonArgs, OutputArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_NUMERICAL: u8 = 2;
pub const EXIT_NOT_PSEUDO_HERMITIAN: u8 = 3;

pub fn exit_code(err: &Error) -> u8 {
    if err.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_INPUT
    }
}

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Analyze { input, example, common } => {
            let h = match (input, example.example) {
                (Some(path), _) => load_matrix(path)?,
                (None, Some(kind)) => make_example(&example.params.spec(kind))?.0,
                (None, None) => unreachable!("clap requires a file or --example"),
            };
            analyze(&h, &common)
        }
        Command::Hermitize { input, eta_w, common } => {
            let h = load_matrix(input)?;
            let eta_w = load_matrix(eta_w)?;
            let opts = common.options();
            opts.tol.validate()?;
            let result = hermitize(&h, &eta_w, &opts.tol, opts.grid)?;
            emit(&common.output, &result, hermitization_text(&result))?;
            Ok(EXIT_OK)
        }
        Command::Spectrum { input, common } => {
            let a = load_matrix(input)?;
            let opts = common.options();
            opts.tol.validate()?;
            let report = spectrum_report(&a, &opts.tol)?;
            emit(&common.output, &report, spectrum_text(&report))?;
            Ok(EXIT_OK)
        }
        Command::Example { name, params, h_out, eta_out, output } => {
            let (h, eta_w) = make_example(&params.spec(name))?;
            if let Some(path) = h_out {
                save_matrix(&h, path)?;
            }
            if let Some(path) = eta_out {
                save_matrix(&eta_w, path)?;
            }
            let pair = ExamplePair {
                h: MatrixFile::from_matrix(&h)?,
                eta_w: MatrixFile::from_matrix(&eta_w)?,
            };
            let text = format!("H:\n{}eta_w:\n{}", matrix_text(&h), matrix_text(&eta_w));
            emit(&output, &pair, text)?;
            Ok(EXIT_OK)
        }
    }
}

fn analyze(h: &ComplexMatrix, common: &CommonArgs) -> Result<u8> {
    let opts = common.options();
    let analysis = classify(h, &opts)?;
    let report = Report::new(&analysis, &opts);
    let json = report.to_json();
    let text = report.to_text();
    write_out(&common.output, if common.output.text { text } else { json })?;
    Ok(match analysis.verdict {
        Verdict::NotPseudoHermitian => EXIT_NOT_PSEUDO_HERMITIAN,
        _ => EXIT_OK,
    })
}

#[derive(Serialize)]
struct ExamplePair {
    h: MatrixFile,
    eta_w: MatrixFile,
}

fn emit<T: Serialize>(output: &OutputArgs, value: &T, text: String) -> Result<()> {
    let body = if output.text {
        text
    } else {
        serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?
    };
    write_out(output, body)
}

fn write_out(output: &OutputArgs, mut body: String) -> Result<()> {
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &output.out {
        Some(path) => write_file(path, &body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn matrix_text(m: &ComplexMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = m.row(i).iter().map(|z| format!("{:+.6}{:+.6}i", z.re, z.im)).collect();
        out.push_str("  ");
        out.push_str(&row.join("  "));
        out.push('\n');
    }
    out
}

fn spectrum_text(rep: &SpectrumReport) -> String {
    let mut out = String::from("eigenvalues:\n");
    for z in &rep.eigenvalues {
        out.push_str(&format!("  {:+.12e} {:+.12e}i\n", z.re, z.im));
    }
    out.push_str(&format!("radius: {:.12}  inner radius: {:.12}\n", rep.r, rep.inner_radius));
    out.push_str(&format!(
        "annulus: {}  inversion symmetry residual: {:.3e}\n",
        if rep.annulus_ok { "ok" } else { "violated" },
        rep.inversion_symmetry_residual
    ));
    out
}

fn hermitization_text(res: &HermitizationResult) -> String {
    let bad: Vec<String> = res.bad_thetas.iter().map(|t| format!("{t:.12}")).collect();
    format!(
        "theta*: {:.12}\nmargin: {:.3e}\nintertwining residual: {:.3e}\nsingular angles: [{}]\neta*:\n{}",
        res.theta_star,
        res.margin,
        res.intertwining_residual,
        bad.join(", "),
        matrix_text(&res.eta_star)
    )
}
