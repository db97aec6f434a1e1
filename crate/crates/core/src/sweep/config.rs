use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, ValueEnum};

use crate::error::{Error, Result};
use crate::model::ModelParams;

/// Lowest temperature accepted by thermal sweeps.
pub const TEMPERATURE_FLOOR: f64 = 0.01;

const MAX_AXIS_POINTS: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepMode {
    /// Gibbs states over temperature and D_z.
    Thermal,
    /// Intrinsic-decoherence time traces from the Bell state.
    #[value(name = "decohere")]
    Decoherence,
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMode::Thermal => "thermal",
            SweepMode::Decoherence => "decohere",
        })
    }
}

impl FromStr for SweepMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "thermal" => Ok(SweepMode::Thermal),
            "decohere" | "decoherence" => Ok(SweepMode::Decoherence),
            other => Err(format!("unknown mode `{other}` (expected thermal or decohere)")),
        }
    }
}

/// Closed, evenly spaced axis `start, start + step, ...` up to `stop`
/// (inclusive within 1e-9 steps).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Range {
    pub fn new(start: f64, stop: f64, step: f64) -> std::result::Result<Self, String> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err("range bounds must be finite".into());
        }
        if !(step > 0.0) {
            return Err(format!("step must be positive, got {step}"));
        }
        if stop < start {
            return Err(format!("empty range (stop {stop} < start {start})"));
        }
        let r = Self { start, stop, step };
        if r.len() > MAX_AXIS_POINTS {
            return Err(format!("range has more than {MAX_AXIS_POINTS} points"));
        }
        Ok(r)
    }

    pub fn single(x: f64) -> Self {
        Self {
            start: x,
            stop: x,
            step: 1.0,
        }
    }

    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Points are computed as `start + k·step`, never accumulated.
    pub fn points(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.start + k as f64 * self.step).collect()
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("malformed range `{s}` (expected start:stop:step)"));
        }
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("malformed range `{s}`: `{t}` is not a number"))
        };
        Range::new(num(parts[0])?, num(parts[1])?, num(parts[2])?)
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// Thermal surface with `J = (0.2, 0.4, 0.8)` over `T` and `D_z`.
    Fig1,
    /// Decoherence trace with `J_x = 0.03, J_y = 0.06, γ = 0.01, D_z = 6`.
    Fig2Lower,
    /// Decoherence traces with `J_x = 3, J_y = 0.6, γ = 0.1, D_z ∈ {0.1, 0.3}`.
    Fig2Upper,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Fig1, Preset::Fig2Lower, Preset::Fig2Upper];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Fig2Lower => "fig2-lower",
            Preset::Fig2Upper => "fig2-upper",
        }
    }

    pub fn mode(&self) -> SweepMode {
        match self {
            Preset::Fig1 => SweepMode::Thermal,
            Preset::Fig2Lower | Preset::Fig2Upper => SweepMode::Decoherence,
        }
    }

    fn fields(&self) -> ConfigFields {
        let r = |a, b, s| Some(Range::new(a, b, s).expect("preset ranges are valid"));
        let mut f = ConfigFields {
            mode: Some(self.mode()),
            preset: Some(*self),
            jz: Some(0.0),
            ..Default::default()
        };
        match self {
            Preset::Fig1 => {
                f.jx = Some(0.2);
                f.jy = Some(0.4);
                f.jz = Some(0.8);
                f.dz = Some(0.0);
                f.t_range = r(0.01, 2.01, 0.02);
                f.dz_range = r(0.0, 3.0, 0.05);
            }
            Preset::Fig2Lower => {
                f.jx = Some(0.03);
                f.jy = Some(0.06);
                f.dz = Some(6.0);
                f.gamma = Some(0.01);
                // period 2π/μ ≈ 0.52, envelope rate γμ²/2 ≈ 0.72
                f.time_range = r(0.0, 10.0, 0.005);
            }
            Preset::Fig2Upper => {
                f.jx = Some(3.0);
                f.jy = Some(0.6);
                f.dz = Some(0.1);
                f.dz_range = r(0.1, 0.3, 0.2);
                f.gamma = Some(0.1);
                // γμ²t/2 reaches 40 near t = 62
                f.time_range = r(0.0, 80.0, 0.02);
            }
        }
        f
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown preset `{s}` (expected fig1, fig2-lower or fig2-upper)"))
    }
}

/// A fully validated sweep description.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub mode: SweepMode,
    pub params: ModelParams,
    /// Temperature axis (thermal) or time axis (decoherence).
    pub axis: Range,
    /// `D_z` axis; `None` sweeps only `params.dz`.
    pub dz_axis: Option<Range>,
    /// Phase decoherence rate; unused in thermal mode.
    pub gamma: f64,
    pub output_path: PathBuf,
    pub preset: Option<Preset>,
    pub threads: Option<usize>,
}

impl SweepConfig {
    pub fn dz_points(&self) -> Vec<f64> {
        match &self.dz_axis {
            Some(r) => r.points(),
            None => vec![self.params.dz],
        }
    }

    /// Builds a config straight from a preset, writing to `out`.
    pub fn from_preset(preset: Preset, out: impl Into<PathBuf>) -> Result<Self> {
        let mut f = preset.fields();
        f.out = Some(out.into());
        f.validate()
    }

    pub fn n_rows(&self) -> usize {
        self.axis.len() * self.dz_axis.map_or(1, |r| r.len())
    }
}

/// Command line of the `qcorr` binary.
#[derive(Parser, Debug, Clone)]
#[command(
    name = "qcorr",
    version,
    about = "Correlation sweeps for the two-qubit XYZ chain with DM interaction"
)]
pub struct SweepArgs {
    /// Sweep kind.
    #[arg(value_enum)]
    pub mode: Option<SweepMode>,

    /// Named parameter set: fig1, fig2-lower, fig2-upper.
    #[arg(long)]
    pub preset: Option<String>,

    /// INI-style `key = value` file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,

    #[arg(long, allow_hyphen_values = true)]
    pub jx: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub jy: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub jz: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub dz: Option<f64>,

    /// Temperature axis `start:stop:step` (thermal).
    #[arg(long = "t-range", allow_hyphen_values = true)]
    pub t_range: Option<String>,

    /// D_z axis `start:stop:step`.
    #[arg(long = "dz-range", allow_hyphen_values = true)]
    pub dz_range: Option<String>,

    /// Time axis `start:stop:step` (decohere).
    #[arg(long = "time-range", allow_hyphen_values = true)]
    pub time_range: Option<String>,

    /// Phase decoherence rate (decohere).
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,

    /// Output CSV path.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
}

impl SweepArgs {
    /// Layers preset, config file and flags (in that precedence order) and
    /// validates the result.
    pub fn into_config(self) -> Result<SweepConfig> {
        let flags = self.flag_fields()?;
        let file = match &self.config {
            Some(path) => Some(ConfigFields::from_file(path)?),
            None => None,
        };
        let preset = flags
            .preset
            .or_else(|| file.as_ref().and_then(|f| f.preset));

        let mut merged = preset.map(|p| p.fields()).unwrap_or_default();
        if let (Some(p), Some(m)) = (preset, flags.mode.or(file.as_ref().and_then(|f| f.mode))) {
            if p.mode() != m {
                return Err(Error::Config(format!(
                    "preset `{}` is a {} sweep but mode `{m}` was requested",
                    p.name(),
                    p.mode()
                )));
            }
        }
        if let Some(f) = file {
            merged.overlay(f);
        }
        merged.overlay(flags);
        merged.threads = self.threads;
        merged.validate()
    }

    fn flag_fields(&self) -> Result<ConfigFields> {
        let range = |flag: &str, v: &Option<String>| -> Result<Option<Range>> {
            v.as_deref()
                .map(|s| s.parse::<Range>().map_err(|e| Error::Config(format!("--{flag}: {e}"))))
                .transpose()
        };
        Ok(ConfigFields {
            mode: self.mode,
            preset: self
                .preset
                .as_deref()
                .map(|s| s.parse::<Preset>().map_err(|e| Error::Config(format!("--preset: {e}"))))
                .transpose()?,
            jx: self.jx,
            jy: self.jy,
            jz: self.jz,
            dz: self.dz,
            t_range: range("t-range", &self.t_range)?,
            dz_range: range("dz-range", &self.dz_range)?,
            time_range: range("time-range", &self.time_range)?,
            gamma: self.gamma,
            out: self.out.clone(),
            threads: None,
        })
    }
}

/// Parses `argv` (program name first) into a validated config.
pub fn parse_config<I, T>(argv: I) -> Result<SweepConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = SweepArgs::try_parse_from(argv).map_err(|e| Error::Config(e.to_string().trim_end().to_string()))?;
    args.into_config()
}

/// Parses an INI-style config file into a validated config.
pub fn parse_config_file(path: &Path) -> Result<SweepConfig> {
    ConfigFields::from_file(path)?.validate()
}

/// One layer of optional settings.
#[derive(Clone, Debug, Default)]
struct ConfigFields {
    mode: Option<SweepMode>,
    preset: Option<Preset>,
    jx: Option<f64>,
    jy: Option<f64>,
    jz: Option<f64>,
    dz: Option<f64>,
    t_range: Option<Range>,
    dz_range: Option<Range>,
    time_range: Option<Range>,
    gamma: Option<f64>,
    out: Option<PathBuf>,
    threads: Option<usize>,
}

impl ConfigFields {
    fn overlay(&mut self, top: ConfigFields) {
        // an explicit single D_z replaces an inherited D_z axis
        if top.dz.is_some() && top.dz_range.is_none() {
            self.dz_range = None;
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if top.$f.is_some() { self.$f = top.$f; } )* };
        }
        take!(mode, preset, jx, jy, jz, dz, t_range, dz_range, time_range, gamma, out, threads);
    }

    fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_ini(&text, &path.display().to_string())
    }

    fn from_ini(text: &str, origin: &str) -> Result<Self> {
        let mut f = ConfigFields::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: String| Error::Config(format!("{origin}:{line_no}: {msg}"));
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            if line.starts_with('[') && line.ends_with(']') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
            let key = key.trim().replace('_', "-");
            let value = value.trim();
            let num = |v: &str| {
                v.parse::<f64>()
                    .map_err(|_| err(format!("`{key}`: `{v}` is not a number")))
            };
            let range = |v: &str| v.parse::<Range>().map_err(|e| err(format!("`{key}`: {e}")));
            match key.as_str() {
                "mode" => f.mode = Some(value.parse().map_err(err)?),
                "preset" => f.preset = Some(value.parse().map_err(err)?),
                "jx" => f.jx = Some(num(value)?),
                "jy" => f.jy = Some(num(value)?),
                "jz" => f.jz = Some(num(value)?),
                "dz" => f.dz = Some(num(value)?),
                "gamma" => f.gamma = Some(num(value)?),
                "t-range" => f.t_range = Some(range(value)?),
                "dz-range" => f.dz_range = Some(range(value)?),
                "time-range" => f.time_range = Some(range(value)?),
                "out" => f.out = Some(PathBuf::from(value)),
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        Ok(f)
    }

    fn validate(self) -> Result<SweepConfig> {
        let missing = |name: &str| Error::Config(format!("missing required field `{name}`"));
        let mode = self.mode.ok_or_else(|| missing("mode"))?;
        let jx = self.jx.ok_or_else(|| missing("jx"))?;
        let jy = self.jy.ok_or_else(|| missing("jy"))?;
        let jz = self.jz.ok_or_else(|| missing("jz"))?;
        let dz = match (self.dz, &self.dz_range) {
            (Some(d), _) => d,
            (None, Some(r)) => r.start,
            (None, None) => return Err(missing("dz")),
        };
        let params = ModelParams::new(jx, jy, jz, dz).map_err(|e| Error::Config(e.to_string()))?;
        let output_path = self.out.ok_or_else(|| missing("out"))?;

        let (axis, gamma) = match mode {
            SweepMode::Thermal => {
                if self.time_range.is_some() {
                    return Err(Error::Config("`time-range` is not valid in thermal mode".into()));
                }
                if self.gamma.is_some() {
                    return Err(Error::Config("`gamma` is not valid in thermal mode".into()));
                }
                let axis = self.t_range.ok_or_else(|| missing("t-range"))?;
                if axis.start < TEMPERATURE_FLOOR {
                    return Err(Error::Config(format!(
                        "`t-range`: start {} is below the temperature floor {TEMPERATURE_FLOOR}",
                        axis.start
                    )));
                }
                (axis, 0.0)
            }
            SweepMode::Decoherence => {
                if self.t_range.is_some() {
                    return Err(Error::Config(
                        "`t-range` is a temperature axis; use `time-range` in decohere mode".into(),
                    ));
                }
                let axis = self.time_range.ok_or_else(|| missing("time-range"))?;
                if axis.start < 0.0 {
                    return Err(Error::Config(format!("`time-range`: start {} is negative", axis.start)));
                }
                let gamma = self.gamma.ok_or_else(|| missing("gamma"))?;
                if !(gamma >= 0.0) || !gamma.is_finite() {
                    return Err(Error::Config(format!("`gamma` must be >= 0, got {gamma}")));
                }
                (axis, gamma)
            }
        };
        if self.threads == Some(0) {
            return Err(Error::Config("`threads` must be at least 1".into()));
        }

        Ok(SweepConfig {
            mode,
            params,
            axis,
            dz_axis: self.dz_range,
            gamma,
            output_path,
            preset: self.preset,
            threads: self.threads,
        })
    }
}
