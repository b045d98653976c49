//! Parsing density operators from command-line state specs.
//!
//! Two forms are accepted:
//! - `pure:[re,im,re,im,...]` — interleaved real/imaginary amplitudes of a
//!   normalized state vector;
//! - an inline JSON matrix, rows of entries, each entry either `[re,im]` or
//!   a bare real number.
//!
//! Parse failures are input errors (exit 2); a well-formed matrix that is
//! not a valid density operator is an invariant violation (exit 3).

use qtradeoff::{CMatrix, Complex, DensityOperator, PureState};

use crate::CliError;

pub fn parse_state(spec: &str) -> Result<DensityOperator, CliError> {
    if let Some(rest) = spec.strip_prefix("pure:") {
        return parse_pure(rest);
    }
    parse_matrix(spec)
}

fn parse_pure(rest: &str) -> Result<DensityOperator, CliError> {
    let trimmed = rest.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| CliError::input("pure state spec must look like pure:[re,im,...]"))?;
    let values: Vec<f64> = inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| CliError::input(format!("cannot parse amplitude '{}'", tok.trim())))
        })
        .collect::<Result<_, _>>()?;
    if values.is_empty() || values.len() % 2 != 0 {
        return Err(CliError::input(
            "pure state spec needs an even number of values (re,im pairs)",
        ));
    }
    let amplitudes: Vec<Complex> = values
        .chunks(2)
        .map(|c| Complex::new(c[0], c[1]))
        .collect();
    let psi = PureState::new(amplitudes).map_err(CliError::invariant)?;
    Ok(psi.projector())
}

fn parse_matrix(spec: &str) -> Result<DensityOperator, CliError> {
    let value: serde_json::Value = serde_json::from_str(spec)
        .map_err(|e| CliError::input(format!("state spec is not valid JSON: {e}")))?;
    let rows = value
        .as_array()
        .ok_or_else(|| CliError::input("state matrix must be a JSON array of rows"))?;
    if rows.is_empty() {
        return Err(CliError::input("state matrix has no rows"));
    }
    let n = rows.len();
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        let cols = row
            .as_array()
            .ok_or_else(|| CliError::input("each matrix row must be a JSON array"))?;
        if cols.len() != n {
            return Err(CliError::input(format!(
                "matrix must be square: {n} rows but a row of length {}",
                cols.len()
            )));
        }
        for entry in cols {
            entries.push(parse_entry(entry)?);
        }
    }
    DensityOperator::new(CMatrix::new(n, n, entries)).map_err(CliError::invariant)
}

fn parse_entry(entry: &serde_json::Value) -> Result<Complex, CliError> {
    if let Some(x) = entry.as_f64() {
        return Ok(Complex::new(x, 0.0));
    }
    let pair = entry
        .as_array()
        .ok_or_else(|| CliError::input("matrix entries must be numbers or [re,im] pairs"))?;
    if pair.len() != 2 {
        return Err(CliError::input("complex entries must be [re,im] pairs"));
    }
    let re = pair[0]
        .as_f64()
        .ok_or_else(|| CliError::input("complex entry parts must be numbers"))?;
    let im = pair[1]
        .as_f64()
        .ok_or_else(|| CliError::input("complex entry parts must be numbers"))?;
    Ok(Complex::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pure_shorthand() {
        let rho = parse_state("pure:[1,0,0,0]").unwrap();
        assert_eq!(rho.dim(), 2);
        assert!((rho.matrix().get(0, 0).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parses_json_matrix_with_real_and_complex_entries() {
        let rho = parse_state("[[0.5,[0,-0.5]],[[0,0.5],0.5]]").unwrap();
        assert_eq!(rho.dim(), 2);
        assert!((rho.matrix().get(0, 1).im + 0.5).abs() < 1e-15);
    }

    #[test]
    fn malformed_specs_are_input_errors() {
        for bad in ["pure:1,0", "[[0.5", "[[0.5,0.5]]", "pure:[1,0,0]"] {
            match parse_state(bad) {
                Err(CliError::Input(_)) => {}
                other => panic!("expected input error for {bad}, got {other:?}"),
            }
        }
    }

    #[test]
    fn invalid_states_are_invariant_errors() {
        // Parses fine, but trace is 2.
        match parse_state("[[1,0],[0,1]]") {
            Err(CliError::Invariant(msg)) => assert!(msg.contains("trace")),
            other => panic!("expected invariant error, got {other:?}"),
        }
        match parse_state("pure:[1,0,1,0]") {
            Err(CliError::Invariant(msg)) => assert!(msg.contains("normalized")),
            other => panic!("expected invariant error, got {other:?}"),
        }
    }
}
