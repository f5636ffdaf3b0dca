//! Command-line front end: reads matrix files, runs canonical-form and
//! solver operations, and renders plain-text reports.
//!
//! Every matrix in a report is printed in the same format the parser
//! accepts, so report sections can be cut out and fed back in.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use quatcon::canonical::consimilarity_certificate;
use quatcon::equations::{classify_m_sigma, MSigma};
use quatcon::matrix::{format_matrix, parse_matrix};
use quatcon::scalar::{apply_automorphism, reduce_automorphism};
use quatcon::{
    canonical_consimilarity, jordan_spec_complex, solve_general, solve_structured, solve_via_canonical,
    AutomorphismSpec, CRat, EquationKind, Error, Frame, Mat, QRat, Sigma, SolutionSet,
};

#[derive(Debug, Parser)]
#[command(name = "quatcon", version, about = "Exact quaternion matrix consimilarity and matrix equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form of A under A -> T^-sigma A T, with T.
    Canon {
        #[arg(long, default_value = "1")]
        sigma: String,
        a: PathBuf,
    },
    /// Decide whether B = S^-sigma A S for some nonsingular S.
    CheckConsimilar {
        #[arg(long, default_value = "i")]
        sigma: String,
        a: PathBuf,
        b: PathBuf,
    },
    /// Decide whether B = S^-1 A S for some nonsingular S.
    CheckSimilar { a: PathBuf, b: PathBuf },
    /// Solve A X - X^sigma B = C or X - A X^sigma B = C.
    Solve {
        #[arg(long, value_enum, default_value_t = KindArg::Sylvester)]
        kind: KindArg,
        #[arg(long, default_value = "1")]
        sigma: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Exit with status 4 when the equation has no solution.
        #[arg(long)]
        expect_solvable: bool,
        a: PathBuf,
        b: PathBuf,
        c: PathBuf,
    },
    /// Reduce h -> u^-1 h u to sigma in {1, i} and a frame of imaginary units.
    ReduceAutomorphism { unit: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Sylvester,
    Stein,
}

impl From<KindArg> for EquationKind {
    fn from(k: KindArg) -> EquationKind {
        match k {
            KindArg::Sylvester => EquationKind::SylvesterLike,
            KindArg::Stein => EquationKind::SteinLike,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Structured for complex A, B; canonical otherwise, falling back to
    /// general when the spectrum is not Gaussian rational.
    Auto,
    Structured,
    Canonical,
    General,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{context}: {source}")]
    Core { context: String, source: Error },
    #[error("structured solver needs complex A and B")]
    NotComplex,
    /// The report is still printed before exiting.
    #[error("equation has no solution")]
    Inconsistent { report: String },
}

impl CliError {
    fn core(context: impl Into<String>) -> impl FnOnce(Error) -> CliError {
        let context = context.into();
        move |source| CliError::Core { context, source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::NotComplex => 2,
            CliError::Inconsistent { .. } => 4,
            CliError::Core { source, .. } => match source {
                Error::Parse { .. }
                | Error::ShapeMismatch { .. }
                | Error::NotSquare(..)
                | Error::NotInvolutive(_)
                | Error::ExactFrameUnavailable(_) => 2,
                Error::EigenvaluesNotGaussianRational { .. } => 3,
                _ => 1,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_matrix(path: &Path) -> CliResult<Mat<QRat>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_matrix(&text).map_err(CliError::core(path.display().to_string()))
}

/// The automorphism `h -> u^-1 h u` given on the command line, with its
/// reduction to `sigma in {1, i}` and the frame that carries it there.
#[derive(Clone, Debug)]
pub struct Automorphism {
    pub spec: AutomorphismSpec,
    pub sigma: Sigma,
    pub frame: Frame,
}

impl Automorphism {
    pub fn parse(literal: &str) -> CliResult<Automorphism> {
        let u: QRat = literal.parse().map_err(CliError::core("--sigma"))?;
        let spec = AutomorphismSpec::ByUnit(u);
        let (sigma, frame) = reduce_automorphism(&spec).map_err(CliError::core("--sigma"))?;
        Ok(Automorphism { spec, sigma, frame })
    }

    /// Entrywise image of `m` under the automorphism.
    pub fn image(&self, m: &Mat<QRat>) -> Mat<QRat> {
        m.map(|h| apply_automorphism(h, &self.spec))
    }

    pub fn to_frame(&self, m: &Mat<QRat>) -> Mat<QRat> {
        m.map(|h| self.frame.to_frame(h))
    }

    pub fn from_frame(&self, m: &Mat<QRat>) -> Mat<QRat> {
        m.map(|h| self.frame.from_frame(h))
    }

    /// Whether `t^-1` mapped by the automorphism, times `a t`, equals `target`.
    pub fn is_consimilarity(&self, a: &Mat<QRat>, t: &Mat<QRat>, target: &Mat<QRat>) -> bool {
        t.inverse()
            .and_then(|ti| self.image(&ti).mul(a)?.mul(t))
            .is_ok_and(|m| m == *target)
    }

    /// The equation's left-hand side at `x`, in standard coordinates.
    pub fn apply_equation(&self, a: &Mat<QRat>, b: &Mat<QRat>, x: &Mat<QRat>, kind: EquationKind) -> quatcon::Result<Mat<QRat>> {
        let xs = self.image(x);
        match kind {
            EquationKind::SylvesterLike => a.mul(x)?.sub(&xs.mul(b)?),
            EquationKind::SteinLike => x.sub(&a.mul(&xs)?.mul(b)?),
        }
    }

    fn solutions_hold(&self, a: &Mat<QRat>, b: &Mat<QRat>, c: &Mat<QRat>, set: &SolutionSet, kind: EquationKind) -> bool {
        let zero = Mat::zeros(c.rows(), c.cols());
        let ok = |x: &Mat<QRat>, rhs: &Mat<QRat>| self.apply_equation(a, b, x, kind).is_ok_and(|m| m == *rhs);
        set.particular().is_none_or(|x| ok(x, c)) && set.basis().iter().all(|y| ok(y, &zero))
    }
}

fn header(out: &mut String, status: &str, auto: &Automorphism) {
    let _ = writeln!(out, "{status}");
    let _ = writeln!(out, "sigma: {}", auto.sigma);
    let _ = writeln!(out, "frame: {}", auto.frame);
}

fn section(out: &mut String, title: &str, m: &Mat<QRat>) {
    let _ = writeln!(out, "{title}:");
    out.push_str(&format_matrix(m));
}

pub fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Canon { sigma, a } => canon(sigma, a),
        Command::CheckConsimilar { sigma, a, b } => check(sigma, a, b, "CONSIMILAR"),
        Command::CheckSimilar { a, b } => check("1", a, b, "SIMILAR"),
        Command::Solve {
            kind,
            sigma,
            method,
            expect_solvable,
            a,
            b,
            c,
        } => {
            let report = solve(sigma, (*kind).into(), *method, a, b, c)?;
            if *expect_solvable && report.starts_with("INCONSISTENT") {
                return Err(CliError::Inconsistent { report });
            }
            Ok(report)
        }
        Command::ReduceAutomorphism { unit } => {
            let auto = Automorphism::parse(unit)?;
            Ok(format!("sigma: {}\nframe: {}\n", auto.sigma, auto.frame))
        }
    }
}

fn certificate_failed(context: &str, what: &'static str) -> CliError {
    CliError::Core {
        context: context.into(),
        source: Error::CertificateFailed(what),
    }
}

fn canon(sigma: &str, a: &Path) -> CliResult<String> {
    let auto = Automorphism::parse(sigma)?;
    let a = read_matrix(a)?;
    let result = canonical_consimilarity(&auto.to_frame(&a), auto.sigma).map_err(CliError::core("canonical form"))?;
    let t = auto.from_frame(&result.certificate);
    let j = auto.from_frame(&result.spec.quaternion_matrix());
    if !auto.is_consimilarity(&a, &t, &j) {
        return Err(certificate_failed("canonical form", "T^-sigma A T != J"));
    }
    let mut out = String::new();
    header(&mut out, "CANONICAL", &auto);
    out.push_str("spec:\n");
    let _ = write!(out, "{}", result.spec);
    section(&mut out, "canonical", &j);
    section(&mut out, "certificate", &t);
    Ok(out)
}

fn check(sigma: &str, a: &Path, b: &Path, word: &str) -> CliResult<String> {
    let auto = Automorphism::parse(sigma)?;
    let (a, b) = (read_matrix(a)?, read_matrix(b)?);
    let cert = consimilarity_certificate(&auto.to_frame(&a), &auto.to_frame(&b), auto.sigma)
        .map_err(CliError::core(word.to_lowercase()))?;
    let mut out = String::new();
    match cert {
        Some(s) => {
            let s = auto.from_frame(&s);
            if !auto.is_consimilarity(&a, &s, &b) {
                return Err(certificate_failed("certificate", "S^-sigma A S != B"));
            }
            header(&mut out, word, &auto);
            section(&mut out, "certificate", &s);
        }
        None => header(&mut out, &format!("NOT {word}"), &auto),
    }
    Ok(out)
}

/// Solves in frame coordinates and maps the solutions back.
pub fn solve_matrices(
    auto: &Automorphism,
    kind: EquationKind,
    method: Method,
    (a0, b0, c0): (&Mat<QRat>, &Mat<QRat>, &Mat<QRat>),
) -> CliResult<String> {
    let sigma = auto.sigma;
    let (a, b, c) = (auto.to_frame(a0), auto.to_frame(b0), auto.to_frame(c0));
    let complex = a.to_complex().zip(b.to_complex());
    let may_fall_back = method == Method::Auto;
    let method = match method {
        Method::Auto if complex.is_some() => Method::Structured,
        Method::Auto => Method::Canonical,
        m => m,
    };
    let err = CliError::core("solve");
    let (used, set) = match method {
        Method::Structured => {
            let (ac, bc) = complex.clone().ok_or(CliError::NotComplex)?;
            ("structured", solve_structured(&ac, &bc, &c, sigma, kind).map_err(err)?)
        }
        Method::Canonical => match solve_via_canonical(&a, &b, &c, sigma, kind) {
            Ok(set) => ("canonical", set),
            Err(Error::EigenvaluesNotGaussianRational { .. }) if may_fall_back => {
                ("general", solve_general(&a, &b, &c, sigma, kind).map_err(err)?)
            }
            Err(e) => return Err(err(e)),
        },
        Method::General | Method::Auto => ("general", solve_general(&a, &b, &c, sigma, kind).map_err(err)?),
    };
    let m_sigma = m_sigma_line(complex.as_ref(), &a, &b, sigma, kind);
    let set = set.map_solutions(|x| auto.from_frame(x));
    if !auto.solutions_hold(a0, b0, c0, &set, kind) {
        return Err(certificate_failed("solve", "returned solution does not satisfy the equation"));
    }
    Ok(solve_report(&set, auto, kind, used, m_sigma))
}

fn solve(sigma: &str, kind: EquationKind, method: Method, a: &Path, b: &Path, c: &Path) -> CliResult<String> {
    let auto = Automorphism::parse(sigma)?;
    let (a, b, c) = (read_matrix(a)?, read_matrix(b)?, read_matrix(c)?);
    solve_matrices(&auto, kind, method, (&a, &b, &c))
}

fn m_sigma_line(
    complex: Option<&(Mat<CRat>, Mat<CRat>)>,
    a: &Mat<QRat>,
    b: &Mat<QRat>,
    sigma: Sigma,
    kind: EquationKind,
) -> Option<MSigma> {
    let (sa, sb) = match complex {
        Some((ac, bc)) => (jordan_spec_complex(ac).ok()?, jordan_spec_complex(bc).ok()?),
        None => (
            canonical_consimilarity(a, sigma).ok()?.spec,
            canonical_consimilarity(b, sigma).ok()?.spec,
        ),
    };
    Some(classify_m_sigma(&sa, &sb, sigma, kind))
}

pub fn solve_report(
    set: &SolutionSet,
    auto: &Automorphism,
    kind: EquationKind,
    method: &str,
    m_sigma: Option<MSigma>,
) -> String {
    let mut out = String::new();
    header(&mut out, &set.status(), auto);
    let _ = writeln!(out, "kind: {kind}");
    let _ = writeln!(out, "method: {method}");
    if let Some(m) = m_sigma {
        let _ = writeln!(out, "m_sigma: {m}");
    }
    if let Some(x) = set.particular() {
        section(&mut out, "particular", x);
    }
    for (idx, y) in set.basis().iter().enumerate() {
        section(&mut out, &format!("basis {}", idx + 1), y);
    }
    out
}
