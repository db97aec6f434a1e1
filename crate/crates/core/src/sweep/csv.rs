use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use super::config::SweepMode;
use super::run::SweepRow;
use crate::error::{Error, Result};

pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn header(mode: SweepMode) -> &'static str {
    match mode {
        SweepMode::Thermal => "dz,T,C,CC,QD,I",
        SweepMode::Decoherence => "dz,t,C,CC,QD,I,closed_form_dev",
    }
}

/// Writes the header and one line per row. Every line ends in `\n`.
pub fn write_csv<W: Write>(mut w: W, mode: SweepMode, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(w, "{}", header(mode))?;
    let f = |x: f64| format_significant(x, SIGNIFICANT_DIGITS);
    for r in rows {
        write!(
            w,
            "{},{},{},{},{},{}",
            f(r.dz),
            f(r.x),
            f(r.concurrence),
            f(r.classical_correlation),
            f(r.quantum_discord),
            f(r.mutual_information)
        )?;
        if mode == SweepMode::Decoherence {
            write!(w, ",{}", f(r.closed_form_dev.unwrap_or(f64::NAN)))?;
        }
        writeln!(w)?;
    }
    w.flush()
}

pub fn emit_csv(path: &Path, mode: SweepMode, rows: &[SweepRow]) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_csv(BufWriter::new(file), mode, rows).map_err(io_err)
}

/// `%.<sig>g`-style formatting: fixed notation for decimal exponents in
/// `[-5, sig)`, scientific otherwise, trailing zeros removed. Negative zero
/// prints as `0`.
pub fn format_significant(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= sig as i32 {
        format!("{}e{exp}", trim_zeros(mantissa))
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
