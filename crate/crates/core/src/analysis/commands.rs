//! The `agile` subcommands as pure functions from parsed input to rendered
//! output and an exit code.

use serde::Serialize;

use super::config::{OutputFormat, ToolConfig};
use super::render::{format_g17, to_csv, to_json};
use super::sweep::sweep;
use crate::dk::{solve_dk_with, q_terms, DkBranch, SelfMotionFamily};
use crate::error::Error;
use crate::ik::{solve_ik_with, ArbitraryLegs, LegIkOutcome};
use crate::mechanism::{constraint_residuals, JointTriplet};
use crate::modes::{mode_is_constant, track_path_with, working_mode_signature_with};
use crate::singularity::{classify_configuration_with, jacobians, SingularityClass};
use crate::so3::{canonicalize_euler, EulerZyx, RotationMatrix};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_ASSEMBLED: i32 = 3;
pub const EXIT_START_NOT_SOLUTION: i32 = 4;
pub const EXIT_CROSSING: i32 = 5;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::MalformedRotation { .. } | Error::UnknownFamily(_) | Error::UnknownAssemblyMode(_) => {
            EXIT_PARSE
        }
        Error::NotAssembled { .. } => EXIT_NOT_ASSEMBLED,
        Error::StartNotASolution | Error::EmptyPath => EXIT_START_NOT_SOLUTION,
        Error::SingularityCrossing { .. } => EXIT_CROSSING,
        _ => EXIT_FAILURE,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { stdout, stderr: String::new(), code: EXIT_OK }
    }

    pub fn failure(code: i32, message: impl std::fmt::Display) -> Self {
        CommandOutput { stdout: String::new(), stderr: format!("error: {message}\n"), code }
    }

    fn from_error(e: &Error) -> Self {
        Self::failure(exit_code(e), e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrientationInput {
    /// `(phi, theta, psi)` in the session's angle unit.
    Euler([f64; 3]),
    /// Row-major entries, unitless.
    Matrix([f64; 9]),
}

/// Settings shared by every command invocation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Context {
    pub config: ToolConfig,
    pub degrees: bool,
}

impl Context {
    fn angle_in(&self, x: f64) -> f64 {
        if self.degrees { x.to_radians() } else { x }
    }

    fn angle_out(&self, x: f64) -> f64 {
        if self.degrees { x.to_degrees() } else { x }
    }

    fn angles_out(&self, a: [f64; 3]) -> [f64; 3] {
        a.map(|x| self.angle_out(x))
    }

    pub fn joints(&self, a: [f64; 3]) -> JointTriplet {
        JointTriplet::from_array(a.map(|x| self.angle_in(x)))
    }

    pub fn rotation(&self, input: &OrientationInput) -> Result<RotationMatrix, Error> {
        match input {
            OrientationInput::Euler(e) => {
                Ok(EulerZyx::new(self.angle_in(e[0]), self.angle_in(e[1]), self.angle_in(e[2]))
                    .to_rotation())
            }
            OrientationInput::Matrix(m) => {
                RotationMatrix::from_rows([[m[0], m[1], m[2]], [m[3], m[4], m[5]], [m[6], m[7], m[8]]])
            }
        }
    }

    fn format(&self, default: OutputFormat) -> OutputFormat {
        self.config.format_or(default)
    }
}

fn g(x: f64) -> String {
    format_g17(x)
}

#[derive(Serialize)]
struct Header {
    schema_version: u32,
    command: &'static str,
}

fn header(command: &'static str) -> Header {
    Header { schema_version: SCHEMA_VERSION, command }
}

#[derive(Serialize)]
struct IkLeg {
    leg: usize,
    arbitrary: bool,
    angles: Vec<f64>,
}

#[derive(Serialize)]
struct IkSolution {
    joints: [f64; 3],
    signature: Option<String>,
}

#[derive(Serialize)]
struct IkDoc {
    #[serde(flatten)]
    header: Header,
    orientation: [[f64; 3]; 3],
    legs: Vec<IkLeg>,
    solutions: Vec<IkSolution>,
}

pub fn cmd_ik(ctx: &Context, input: &OrientationInput, fill_arbitrary: bool) -> CommandOutput {
    let tol = ctx.config.tolerances();
    let r = match ctx.rotation(input) {
        Ok(r) => r,
        Err(e) => return CommandOutput::from_error(&e),
    };
    let mode = if fill_arbitrary { ArbitraryLegs::Fill } else { ArbitraryLegs::Skip };
    let set = solve_ik_with(&r, mode);
    let legs = set
        .legs
        .iter()
        .enumerate()
        .map(|(i, outcome)| match outcome {
            LegIkOutcome::TwoSolutions { first, second } => IkLeg {
                leg: i + 1,
                arbitrary: false,
                angles: vec![ctx.angle_out(*first), ctx.angle_out(*second)],
            },
            LegIkOutcome::Arbitrary => IkLeg { leg: i + 1, arbitrary: true, angles: vec![] },
        })
        .collect();
    let solutions: Vec<IkSolution> = set
        .solutions
        .iter()
        .map(|j| IkSolution {
            joints: ctx.angles_out(j.angles()),
            signature: working_mode_signature_with(j, &r, &tol).ok().map(|s| s.to_string()),
        })
        .collect();

    let stdout = match ctx.format(OutputFormat::Json) {
        OutputFormat::Json => to_json(&IkDoc {
            header: header("ik"),
            orientation: r.to_rows(),
            legs,
            solutions,
        }),
        OutputFormat::Csv => to_csv(
            &["theta1", "theta2", "theta3", "signature"],
            solutions.iter().map(|s| {
                let [a, b, c] = s.joints;
                vec![g(a), g(b), g(c), s.signature.clone().unwrap_or_default()]
            }),
        ),
    };
    CommandOutput::ok(stdout)
}

#[derive(Serialize)]
struct FamilyInfo {
    id: u8,
    label: &'static str,
    pair: u8,
    extended: bool,
    description: &'static str,
}

impl From<SelfMotionFamily> for FamilyInfo {
    fn from(f: SelfMotionFamily) -> Self {
        FamilyInfo {
            id: f.id(),
            label: f.label(),
            pair: f.pair().index(),
            extended: f.is_extended(),
            description: f.description(),
        }
    }
}

#[derive(Serialize)]
struct DkSolution {
    assembly_mode: u8,
    euler: [f64; 3],
    canonical_euler: [f64; 3],
    signature: Option<String>,
}

#[derive(Serialize)]
struct SelfMotionReport {
    pair: u8,
    families: Vec<FamilyInfo>,
}

#[derive(Serialize)]
struct DkDoc {
    #[serde(flatten)]
    header: Header,
    joints: [f64; 3],
    degeneracy: &'static str,
    q1: f64,
    q2: f64,
    trivial: Vec<[[f64; 3]; 3]>,
    branch: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    solutions: Option<Vec<DkSolution>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    self_motion: Option<SelfMotionReport>,
}

pub fn cmd_dk(ctx: &Context, joints: [f64; 3]) -> CommandOutput {
    let tol = ctx.config.tolerances();
    let j = ctx.joints(joints);
    let dk = solve_dk_with(&j, &tol);
    let (q1, q2) = q_terms(&j);
    let (branch, solutions, self_motion) = match &dk.branch {
        DkBranch::Finite(sols) => {
            let list = sols
                .iter()
                .enumerate()
                .map(|(i, e)| DkSolution {
                    assembly_mode: i as u8 + 1,
                    euler: ctx.angles_out(e.to_array()),
                    canonical_euler: ctx.angles_out(canonicalize_euler(e).to_array()),
                    signature: working_mode_signature_with(&j, &e.to_rotation(), &tol)
                        .ok()
                        .map(|s| s.to_string()),
                })
                .collect::<Vec<_>>();
            ("finite", Some(list), None)
        }
        DkBranch::SelfMotion { pair, families } => (
            "self_motion",
            None,
            Some(SelfMotionReport {
                pair: pair.index(),
                families: families.iter().map(|&f| f.into()).collect(),
            }),
        ),
        DkBranch::TrivialOnly => ("trivial_only", None, None),
    };

    let stdout = match ctx.format(OutputFormat::Json) {
        OutputFormat::Json => to_json(&DkDoc {
            header: header("dk"),
            joints: ctx.angles_out(j.angles()),
            degeneracy: crate::dk::classify_joint_degeneracy_with(&j, &tol).tag(),
            q1,
            q2,
            trivial: dk.trivial.iter().map(|t| t.to_rows()).collect(),
            branch,
            solutions,
            self_motion,
        }),
        OutputFormat::Csv => to_csv(
            &["assembly_mode", "phi", "theta", "psi", "signature"],
            solutions.unwrap_or_default().into_iter().map(|s| {
                let [a, b, c] = s.euler;
                vec![
                    s.assembly_mode.to_string(),
                    g(a),
                    g(b),
                    g(c),
                    s.signature.unwrap_or_default(),
                ]
            }),
        ),
    };
    CommandOutput::ok(stdout)
}

#[derive(Serialize)]
struct JacobianDoc {
    #[serde(flatten)]
    header: Header,
    joints: [f64; 3],
    orientation: [[f64; 3]; 3],
    residuals: [f64; 3],
    a: [[f64; 3]; 3],
    b_diag: [f64; 3],
    det_a: f64,
    det_b: f64,
    q2: f64,
}

pub fn cmd_jacobian(ctx: &Context, joints: [f64; 3], input: &OrientationInput) -> CommandOutput {
    let j = ctx.joints(joints);
    let r = match ctx.rotation(input) {
        Ok(r) => r,
        Err(e) => return CommandOutput::from_error(&e),
    };
    let residuals = constraint_residuals(&j, &r);
    let max_residual = residuals.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if max_residual > ctx.config.residual_tol {
        return CommandOutput::from_error(&Error::NotAssembled { max_residual });
    }
    let jp = jacobians(&j, &r);
    let a = [0, 1, 2].map(|i| [jp.a[(i, 0)], jp.a[(i, 1)], jp.a[(i, 2)]]);
    let doc = JacobianDoc {
        header: header("jacobian"),
        joints: ctx.angles_out(j.angles()),
        orientation: r.to_rows(),
        residuals,
        a,
        b_diag: jp.b_diag,
        det_a: jp.det_a(),
        det_b: jp.det_b(),
        q2: q_terms(&j).1,
    };
    let stdout = match ctx.format(OutputFormat::Json) {
        OutputFormat::Json => to_json(&doc),
        OutputFormat::Csv => to_csv(
            &["row", "a1", "a2", "a3", "b"],
            (0..3).map(|i| vec![(i + 1).to_string(), g(a[i][0]), g(a[i][1]), g(a[i][2]), g(jp.b_diag[i])]),
        ),
    };
    CommandOutput::ok(stdout)
}

#[derive(Serialize)]
struct ClassifyDoc {
    #[serde(flatten)]
    header: Header,
    class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<FamilyInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trivial_id: Option<u8>,
    det_a: f64,
    q2: f64,
    residuals: [f64; 3],
}

pub fn cmd_classify(ctx: &Context, joints: [f64; 3], input: &OrientationInput) -> CommandOutput {
    let tol = ctx.config.tolerances();
    let j = ctx.joints(joints);
    let r = match ctx.rotation(input) {
        Ok(r) => r,
        Err(e) => return CommandOutput::from_error(&e),
    };
    let class = match classify_configuration_with(&j, &r, &tol) {
        Ok(c) => c,
        Err(e) => return CommandOutput::from_error(&e),
    };
    let (family, trivial_id) = match class {
        SingularityClass::SelfMotion { family } => (Some(family.into()), None),
        SingularityClass::InfinitesimalAtTrivial { trivial_id }
        | SingularityClass::Lockup { trivial_id } => (None, Some(trivial_id)),
        _ => (None, None),
    };
    let doc = ClassifyDoc {
        header: header("classify"),
        class: class.tag(),
        family,
        trivial_id,
        det_a: jacobians(&j, &r).det_a(),
        q2: q_terms(&j).1,
        residuals: constraint_residuals(&j, &r),
    };
    let stdout = match ctx.format(OutputFormat::Json) {
        OutputFormat::Json => to_json(&doc),
        OutputFormat::Csv => to_csv(
            &["class", "family", "trivial_id", "det_a", "q2"],
            [vec![
                doc.class.to_string(),
                doc.family.as_ref().map(|f| f.label.to_string()).unwrap_or_default(),
                doc.trivial_id.map(|t| t.to_string()).unwrap_or_default(),
                g(doc.det_a),
                g(doc.q2),
            ]],
        ),
    };
    CommandOutput::ok(stdout)
}

/// Accepts `1`..`6`, `SM1a`..`SM3b` or `1a`..`3b`.
pub fn parse_family(s: &str) -> Option<SelfMotionFamily> {
    let t = s.trim().to_ascii_lowercase();
    let t = t.strip_prefix("sm").unwrap_or(&t);
    if let Ok(id) = t.parse::<u8>() {
        return SelfMotionFamily::from_id(id).ok();
    }
    SelfMotionFamily::ALL
        .into_iter()
        .find(|f| f.label().to_ascii_lowercase().strip_prefix("sm") == Some(t))
}

#[derive(Serialize)]
struct SelfMotionMember {
    param: f64,
    matrix: [[f64; 3]; 3],
    canonical_euler: [f64; 3],
}

#[derive(Serialize)]
struct SelfMotionDoc {
    #[serde(flatten)]
    header: Header,
    family: FamilyInfo,
    members: Vec<SelfMotionMember>,
}

/// Samples a self-motion family at explicit parameters, or at `samples`
/// evenly spaced parameters in `(-pi, pi]` when none are given.
pub fn cmd_self_motion(ctx: &Context, family: &str, params: &[f64], samples: usize) -> CommandOutput {
    let Some(fam) = parse_family(family) else {
        return CommandOutput::failure(EXIT_PARSE, format!("unknown self-motion family `{family}`"));
    };
    let params: Vec<f64> = if params.is_empty() {
        let n = samples.max(1);
        (0..n)
            .map(|k| -std::f64::consts::PI + 2.0 * std::f64::consts::PI * (k + 1) as f64 / n as f64)
            .collect()
    } else {
        params.iter().map(|&p| ctx.angle_in(p)).collect()
    };
    let members: Vec<SelfMotionMember> = params
        .iter()
        .map(|&p| {
            let r = fam.rotation(p);
            let e = crate::so3::rotation_to_euler(&r)
                .map(|f| canonicalize_euler(&f.representative()).to_array())
                .unwrap_or([f64::NAN; 3]);
            SelfMotionMember { param: ctx.angle_out(p), matrix: r.to_rows(), canonical_euler: ctx.angles_out(e) }
        })
        .collect();
    let stdout = match ctx.format(OutputFormat::Json) {
        OutputFormat::Json => to_json(&SelfMotionDoc { header: header("self-motion"), family: fam.into(), members }),
        OutputFormat::Csv => to_csv(
            &["param", "r11", "r12", "r13", "r21", "r22", "r23", "r31", "r32", "r33"],
            members.iter().map(|m| {
                std::iter::once(g(m.param))
                    .chain(m.matrix.iter().flatten().map(|&x| g(x)))
                    .collect::<Vec<_>>()
            }),
        ),
    };
    CommandOutput::ok(stdout)
}

/// Reads a `theta1,theta2,theta3` CSV with a mandatory header.
pub fn parse_track_csv(ctx: &Context, text: &str) -> Result<Vec<JointTriplet>, String> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(|e| e.to_string())?.clone();
    if headers.iter().collect::<Vec<_>>() != ["theta1", "theta2", "theta3"] {
        return Err(format!(
            "expected header `theta1,theta2,theta3`, found `{}`",
            headers.iter().collect::<Vec<_>>().join(",")
        ));
    }
    let mut path = Vec::new();
    for (row, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| e.to_string())?;
        let mut a = [0.0; 3];
        for (i, field) in rec.iter().enumerate() {
            a[i] = field
                .parse()
                .map_err(|_| format!("row {}: `{field}` is not a number", row + 1))?;
        }
        path.push(ctx.joints(a));
    }
    Ok(path)
}

#[derive(Serialize)]
struct TrackRow {
    step: usize,
    joints: [f64; 3],
    euler: [f64; 3],
    assembly_mode: u8,
    signature: String,
}

#[derive(Serialize)]
struct Crossing {
    step: usize,
    reason: String,
}

#[derive(Serialize)]
struct TrackDoc {
    #[serde(flatten)]
    header: Header,
    #[serde(skip_serializing_if = "Option::is_none")]
    mode_constant: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    steps: Vec<TrackRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    crossing: Option<Crossing>,
}

pub fn cmd_track(ctx: &Context, path_csv: &str, start: &OrientationInput) -> CommandOutput {
    let path = match parse_track_csv(ctx, path_csv) {
        Ok(p) => p,
        Err(msg) => return CommandOutput::failure(EXIT_PARSE, msg),
    };
    let r0 = match ctx.rotation(start) {
        Ok(r) => r,
        Err(e) => return CommandOutput::from_error(&e),
    };
    let format = ctx.format(OutputFormat::Csv);
    let steps = match track_path_with(&path, &r0, &ctx.config.tolerances()) {
        Ok(s) => s,
        Err(Error::SingularityCrossing { step, reason }) => {
            let stdout = match format {
                OutputFormat::Json => to_json(&TrackDoc {
                    header: header("track"),
                    mode_constant: None,
                    steps: vec![],
                    crossing: Some(Crossing { step, reason: reason.to_string() }),
                }),
                OutputFormat::Csv => String::new(),
            };
            return CommandOutput {
                stdout,
                stderr: format!("error: singularity crossing at step {step}: {reason}\n"),
                code: EXIT_CROSSING,
            };
        }
        Err(e) => return CommandOutput::from_error(&e),
    };
    let constant = mode_is_constant(&steps);
    let rows: Vec<TrackRow> = steps
        .iter()
        .enumerate()
        .map(|(k, s)| TrackRow {
            step: k,
            joints: ctx.angles_out(s.joints.angles()),
            euler: ctx.angles_out(s.solution.to_array()),
            assembly_mode: s.mode.get(),
            signature: s.signature.to_string(),
        })
        .collect();
    let stdout = match format {
        OutputFormat::Json => to_json(&TrackDoc {
            header: header("track"),
            mode_constant: Some(constant),
            steps: rows,
            crossing: None,
        }),
        OutputFormat::Csv => to_csv(
            &["step", "theta1", "theta2", "theta3", "phi", "theta", "psi", "assembly_mode", "signature"],
            rows.into_iter().map(|r| {
                let mut v = vec![r.step.to_string()];
                v.extend(r.joints.iter().chain(&r.euler).map(|&x| g(x)));
                v.push(r.assembly_mode.to_string());
                v.push(r.signature);
                v
            }),
        ),
    };
    CommandOutput { stdout, stderr: format!("mode_constant: {constant}\n"), code: EXIT_OK }
}

#[derive(Serialize)]
struct SweepSummaryDoc {
    grid_n: usize,
    cells: usize,
    positive_components: usize,
    negative_components: usize,
    wall_cells: usize,
    singular_cells: usize,
    singular_cell_fraction: f64,
}

#[derive(Serialize)]
struct SweepRow {
    theta1: f64,
    theta2: f64,
    theta3: f64,
    det_a: f64,
    degeneracy: &'static str,
    component_id: Option<usize>,
}

#[derive(Serialize)]
struct SweepDoc {
    #[serde(flatten)]
    header: Header,
    summary: SweepSummaryDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    records: Option<Vec<SweepRow>>,
}

/// CSV column order of sweep records.
pub const SWEEP_COLUMNS: [&str; 6] = ["theta1", "theta2", "theta3", "det_a", "degeneracy", "component_id"];

/// Runs the grid sweep at `config.grid_n`. In CSV, wall cells carry
/// `component_id = -1` and the summary goes to stderr.
pub fn cmd_sweep(ctx: &Context, summary_only: bool) -> CommandOutput {
    let report = sweep(ctx.config.grid_n, &ctx.config.tolerances());
    let s = report.summary;
    let summary = SweepSummaryDoc {
        grid_n: s.grid_n,
        cells: s.cells,
        positive_components: s.positive_components,
        negative_components: s.negative_components,
        wall_cells: s.wall_cells,
        singular_cells: s.singular_cells,
        singular_cell_fraction: s.singular_cell_fraction,
    };
    let summary_line = format!(
        "grid_n: {}, components(+): {}, components(-): {}, singular_cell_fraction: {}\n",
        s.grid_n,
        s.positive_components,
        s.negative_components,
        g(s.singular_cell_fraction)
    );
    let rows = || {
        report.records.iter().map(|r| {
            let [a, b, c] = ctx.angles_out(r.joints.angles());
            SweepRow {
                theta1: a,
                theta2: b,
                theta3: c,
                det_a: r.det_a,
                degeneracy: r.degeneracy.tag(),
                component_id: r.component_id,
            }
        })
    };
    let format = ctx.format(OutputFormat::Csv);
    let stdout = match (format, summary_only) {
        (OutputFormat::Json, _) => to_json(&SweepDoc {
            header: header("sweep"),
            summary,
            records: (!summary_only).then(|| rows().collect()),
        }),
        (OutputFormat::Csv, true) => String::new(),
        (OutputFormat::Csv, false) => to_csv(
            &SWEEP_COLUMNS,
            rows().map(|r| {
                vec![
                    g(r.theta1),
                    g(r.theta2),
                    g(r.theta3),
                    g(r.det_a),
                    r.degeneracy.to_string(),
                    r.component_id.map_or("-1".to_string(), |c| c.to_string()),
                ]
            }),
        ),
    };
    CommandOutput { stdout, stderr: summary_line, code: EXIT_OK }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names() {
        assert_eq!(parse_family("1"), Some(SelfMotionFamily::Sm1a));
        assert_eq!(parse_family("SM3b"), Some(SelfMotionFamily::Sm3b));
        assert_eq!(parse_family("2b"), Some(SelfMotionFamily::Sm2b));
        assert_eq!(parse_family("7"), None);
        assert_eq!(parse_family("sm4a"), None);
    }

    #[test]
    fn track_header_is_required() {
        let ctx = Context::default();
        assert!(parse_track_csv(&ctx, "0,0,0\n0.1,0,0\n").is_err());
        assert!(parse_track_csv(&ctx, "theta1,theta2\n0,0\n").is_err());
        assert!(parse_track_csv(&ctx, "theta1,theta2,theta3\n0,x,0\n").is_err());
        assert_eq!(parse_track_csv(&ctx, "theta1,theta2,theta3\n0, 0.5 ,0\n").unwrap().len(), 1);
    }

    #[test]
    fn degrees_only_at_boundary() {
        let ctx = Context { degrees: true, ..Default::default() };
        let out = cmd_dk(&ctx, [0.0, 0.0, 0.0]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["solutions"][3]["euler"][1], 180.0);
    }

    #[test]
    fn error_codes_are_distinct() {
        use crate::error::CrossingReason;
        let crossing = Error::SingularityCrossing { step: 1, reason: CrossingReason::DetSignChange };
        assert_eq!(exit_code(&crossing), EXIT_CROSSING);
        assert_ne!(exit_code(&crossing), exit_code(&Error::StartNotASolution));
        assert_eq!(exit_code(&Error::NotAssembled { max_residual: 1.0 }), 3);
    }
}
