//! CSV export of a confidence curve.
//!
//! Comment lines starting with `#` record the parameters and derived values,
//! followed by an `x,P,mu` header and one row per grid point. Numbers use the
//! shortest round-trip form, so identical inputs give byte-identical files.

use std::io::{self, Write};

use dsq_core::{ConfidenceCurve, Mixing};

pub fn write_curve_csv<W: Write>(curve: &ConfidenceCurve, out: &mut W) -> io::Result<()> {
    let p = curve.params();
    let mixing = match p.mixing() {
        Mixing::Unweighted => "unweighted",
        Mixing::Dirichlet => "dirichlet",
    };
    writeln!(out, "# dsq confidence curve")?;
    writeln!(out, "# c={}", p.c())?;
    writeln!(out, "# L={}", p.big_l())?;
    writeln!(out, "# gamma={}", p.gamma())?;
    writeln!(out, "# x_r={}", p.x_r())?;
    writeln!(out, "# mixing={mixing}")?;
    writeln!(out, "# points={}", curve.len())?;
    writeln!(out, "# alpha={}", p.alpha())?;
    writeln!(out, "# x0={}", curve.x0())?;
    writeln!(out, "# norm={}", curve.norm())?;
    writeln!(out, "x,P,mu")?;
    for ((x, d), m) in curve.xs().iter().zip(curve.densities()).zip(curve.mus()) {
        writeln!(out, "{x},{d},{m}")?;
    }
    Ok(())
}

pub fn curve_csv(curve: &ConfidenceCurve) -> String {
    let mut buf = Vec::new();
    write_curve_csv(curve, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("CSV output is ASCII")
}
