//! JSON documents written by the command-line tool.
//!
//! Complex numbers are `[re, im]`. Floats are written with 17 significant
//! digits in exponent form, which parses back to the same bits.

use std::io;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::apps::{MinimaxCase, MinimaxResult, StabilityResult};
use crate::hermpair::{certify, HermitianPair, Residuals, Tolerances, TwoDEigentriple, C64};
use crate::solver::{LambdaBounds, MuBound, RegularityVerdict, SolveOptions, SolveReport};
use crate::solver2x2::{TwoByTwoCase, TwoByTwoSolution};
use crate::Result;

pub const TOOL_VERSION: &str = concat!("twodevp ", env!("CARGO_PKG_VERSION"));

/// Pretty JSON with `{:.16e}` floats.
struct Digits17<'a>(PrettyFormatter<'a>);

impl Formatter for Digits17<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }
    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }
    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Serializes `value` as pretty JSON with 17-digit floats and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17(PrettyFormatter::new()));
    value.serialize(&mut ser).expect("report types serialize infallibly");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

/// `{:.16e}`, for CSV cells.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TripleJson {
    pub mu: f64,
    pub lambda: f64,
    pub x: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residuals: Option<Residuals>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
}

impl From<&TwoDEigentriple> for TripleJson {
    fn from(t: &TwoDEigentriple) -> Self {
        Self {
            mu: t.mu,
            lambda: t.lambda,
            x: t.x.iter().map(|z| [z.re, z.im]).collect(),
            residuals: Some(t.residuals),
            certified: Some(t.certified),
        }
    }
}

impl TripleJson {
    pub fn vector(&self) -> DVector<C64> {
        DVector::from_iterator(self.x.len(), self.x.iter().map(|&[re, im]| C64::new(re, im)))
    }

    /// Recomputes residuals against `pair`, ignoring any stored ones.
    pub fn certify(&self, pair: &HermitianPair, tol: &Tolerances) -> Result<TwoDEigentriple> {
        certify(pair, self.mu, self.lambda, &self.vector(), tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineFamilyJson {
    pub lambda0: f64,
}

/// Solver settings echoed into every solve report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptionsEcho {
    #[serde(flatten)]
    pub solve: SolveOptions,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReportFile {
    pub tool_version: String,
    pub triples: Vec<TripleJson>,
    pub lambda_bounds: LambdaBounds,
    pub mu_bound: MuBound,
    pub mu_box: [f64; 2],
    pub regularity: RegularityVerdict,
    pub line_families: Vec<LineFamilyJson>,
    pub near_misses: Vec<TripleJson>,
    pub options_echo: OptionsEcho,
}

impl SolveReportFile {
    pub fn new(r: &SolveReport, opts: &SolveOptions, tol: &Tolerances) -> Self {
        Self {
            tool_version: TOOL_VERSION.into(),
            triples: r.triples.iter().map(TripleJson::from).collect(),
            lambda_bounds: r.lambda_bounds,
            mu_bound: r.mu_bound,
            mu_box: [r.mu_box.0, r.mu_box.1],
            regularity: r.regularity.clone(),
            line_families: r.line_families.iter().map(|&lambda0| LineFamilyJson { lambda0 }).collect(),
            near_misses: r.near_misses.iter().map(TripleJson::from).collect(),
            options_echo: OptionsEcho { solve: opts.clone(), tolerances: *tol },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoByTwoFile {
    pub tool_version: String,
    pub case: TwoByTwoCase,
    pub family: bool,
    pub near_threshold: bool,
    pub c_diag: [f64; 2],
    pub transform: Vec<Vec<[f64; 2]>>,
    pub triples: Vec<TripleJson>,
}

impl From<&TwoByTwoSolution> for TwoByTwoFile {
    fn from(s: &TwoByTwoSolution) -> Self {
        let q = &s.transform;
        Self {
            tool_version: TOOL_VERSION.into(),
            case: s.case,
            family: s.family,
            near_threshold: s.near_threshold,
            c_diag: [s.c_diag.0, s.c_diag.1],
            transform: (0..q.nrows()).map(|i| (0..q.ncols()).map(|j| [q[(i, j)].re, q[(i, j)].im]).collect()).collect(),
            triples: s.triples.iter().map(TripleJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsFile {
    pub tool_version: String,
    pub mu_bound: MuBound,
    pub lambda_bounds: LambdaBounds,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularityFile {
    pub tool_version: String,
    pub regularity: RegularityVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityFile {
    pub tool_version: String,
    #[serde(flatten)]
    pub result: StabilityResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimaxFile {
    pub tool_version: String,
    pub case: MinimaxCase,
    pub value: f64,
    pub x_opt: Vec<[f64; 2]>,
    pub mu_opt: Option<f64>,
}

impl From<&MinimaxResult> for MinimaxFile {
    fn from(r: &MinimaxResult) -> Self {
        Self {
            tool_version: TOOL_VERSION.into(),
            case: r.case,
            value: r.value,
            x_opt: r.x_opt.iter().map(|z| [z.re, z.im]).collect(),
            mu_opt: r.mu_opt,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyFile {
    pub tool_version: String,
    #[serde(flatten)]
    pub triple: TripleJson,
}
