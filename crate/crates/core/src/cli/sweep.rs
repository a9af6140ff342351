use std::io::Write;
use std::path::PathBuf;

use super::{Mode, VALIDATE_SAMPLES};
use crate::circulant::Circulant3;
use crate::curve::{self, sample_points, CrossSumStatus, Curve};
use crate::error::{Error, Result};
use crate::motion::MotionFrame;
use crate::spherical;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub t0: f64,
    pub t1: f64,
    /// Number of samples, endpoints included.
    pub n: usize,
    pub order: usize,
    pub out: Option<PathBuf>,
}

impl SweepConfig {
    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.t0.is_finite() && self.t1.is_finite()) || self.t0 > self.t1 {
            return bad(format!(
                "need finite t0 <= t1, got [{}, {}]",
                self.t0, self.t1
            ));
        }
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.n > 1 && self.t0 == self.t1 {
            return bad("several samples need t0 < t1".into());
        }
        if self.order == 0 {
            return bad("order must be at least 1".into());
        }
        Ok(())
    }

    pub fn samples(&self) -> Vec<f64> {
        sample_points(self.t0, self.t1, self.n)
    }
}

/// Rows of one sweep, ready to be written as CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub header: &'static [&'static str],
    pub rows: Vec<Vec<String>>,
    /// Rows whose status is not `ok`.
    pub not_ok: usize,
}

impl SweepTable {
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let io = |e: csv::Error| Error::Io(e.to_string());
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(writer);
        w.write_record(self.header).map_err(io)?;
        for row in &self.rows {
            w.write_record(row).map_err(io)?;
        }
        w.flush().map_err(|e| Error::Io(e.to_string()))
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("csv output is UTF-8")
    }
}

/// Fixed 17-significant-digit scientific notation.
pub fn format_float(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

fn status(err: &Error) -> &'static str {
    match err {
        Error::Singular { .. } | Error::SingularPole { .. } => "singular",
        Error::Origin { .. } => "origin",
        Error::NotAdmissible { .. } => "not_admissible",
        Error::NotSpherical { .. } => "not_spherical",
        Error::Domain(_) => "domain_error",
        _ => "error",
    }
}

fn floats(values: &[f64]) -> Vec<String> {
    values.iter().map(|&x| format_float(x)).collect()
}

/// Builds a row from leading values, the status and blank padding so that
/// every row has the header's width.
fn row(t: f64, values: Vec<String>, status: &str, width: usize) -> Vec<String> {
    let mut r = Vec::with_capacity(width);
    r.push(format_float(t));
    r.extend(values);
    r.resize(width - 1, String::new());
    r.push(status.to_string());
    r
}

/// Checks the curve over `[t0, t1]` and evaluates one row per sample.
///
/// Failing samples become rows with a non-`ok` status. Whole-sweep failures
/// (inadmissible curve, curve through the origin, `darboux` on a
/// non-spherical curve) are errors.
pub fn sweep(curve: &Curve, config: &SweepConfig, mode: Mode) -> Result<SweepTable> {
    config.check()?;
    let window = curve.clone().with_domain(config.t0, config.t1)?;
    let report = curve::validate(&window, VALIDATE_SAMPLES.max(config.n))?;
    if let CrossSumStatus::Violated { value, worst_t, .. } = report.cross_sum {
        let h2 = window.point(worst_t)?.norm_squared();
        return Err(Error::NotAdmissible {
            cross_sum: value,
            tolerance: crate::circulant::CROSS_SUM_TOLERANCE * h2.max(1.0),
        });
    }
    if mode == Mode::Darboux && !report.spherical {
        let t = config.t0;
        return Err(Error::NotSpherical {
            t,
            norm: window.point(t)?.norm(),
        });
    }

    let header: &'static [&'static str] = match mode {
        Mode::Decompose => &["t", "a1", "a2", "a3", "h", "orth_residual", "status"],
        Mode::Pole => &[
            "t", "px", "py", "pz", "qx", "qy", "qz", "det_Bdot", "status",
        ],
        Mode::Darboux => &["t", "wx", "wy", "wz", "omega", "det_Sdot", "status"],
        Mode::Accel => &["t", "order", "xx", "xy", "xz", "residual", "status"],
    };
    let width = header.len();
    let r = config.order;

    let rows: Vec<(Vec<String>, bool)> = config
        .samples()
        .into_iter()
        .map(|t| match mode {
            Mode::Decompose => decompose_row(curve, t, width),
            Mode::Pole => pole_row(curve, t, width),
            Mode::Darboux => darboux_row(curve, t, width),
            Mode::Accel => accel_row(curve, t, r, width),
        })
        .collect();
    let not_ok = rows.iter().filter(|(_, ok)| !ok).count();
    Ok(SweepTable {
        header,
        rows: rows.into_iter().map(|(r, _)| r).collect(),
        not_ok,
    })
}

fn decompose_row(curve: &Curve, t: f64, width: usize) -> (Vec<String>, bool) {
    let p = match curve.point(t) {
        Ok(p) => p,
        Err(e) => return (row(t, vec![], status(&e), width), false),
    };
    let b = Circulant3::from_components(p.x, p.y, p.z);
    let mut values = floats(&[p.x, p.y, p.z]);
    match b.decompose() {
        Ok(d) => {
            values.extend(floats(&[d.h, d.a.orthogonality_residual()]));
            (row(t, values, "ok", width), true)
        }
        Err(e) => (row(t, values, status(&e), width), false),
    }
}

fn pole_row(curve: &Curve, t: f64, width: usize) -> (Vec<String>, bool) {
    let frame = match MotionFrame::evaluate(curve, t, 1) {
        Ok(f) => f,
        Err(e) => return (row(t, vec![], status(&e), width), false),
    };
    let det = frame.regularity();
    match frame.pole_point() {
        Ok(pole) => {
            let values = floats(&[
                pole.p.x, pole.p.y, pole.p.z, pole.q.x, pole.q.y, pole.q.z, det,
            ]);
            (row(t, values, "ok", width), true)
        }
        Err(e) => {
            let mut values = vec![String::new(); 6];
            values.push(format_float(det));
            (row(t, values, status(&e), width), false)
        }
    }
}

fn darboux_row(curve: &Curve, t: f64, width: usize) -> (Vec<String>, bool) {
    match spherical::darboux(curve, t) {
        Ok(d) => {
            let w = d.omega_vec;
            let values = floats(&[w.x, w.y, w.z, d.omega_scalar, d.s_dot.det()]);
            (row(t, values, "ok", width), true)
        }
        Err(e) => (row(t, vec![], status(&e), width), false),
    }
}

fn accel_row(curve: &Curve, t: f64, r: usize, width: usize) -> (Vec<String>, bool) {
    let order = r.to_string();
    let center = MotionFrame::evaluate(curve, t, r).and_then(|frame| {
        let x = frame.acceleration_center(r)?;
        let (residual, _) = frame.center_residual(r, &x)?;
        Ok((x, residual))
    });
    match center {
        Ok((x, residual)) => {
            let mut values = vec![order];
            values.extend(floats(&[x.x, x.y, x.z, residual]));
            (row(t, values, "ok", width), true)
        }
        Err(e) => (row(t, vec![order], status(&e), width), false),
    }
}
