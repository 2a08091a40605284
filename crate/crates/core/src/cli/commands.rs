use num_complex::Complex64;
use serde_json::{json, Value};

use super::config::{parse_grid, RunConfig};
use super::suites::resolve_stream;
use crate::analytic::{
    dirichlet_l, l_from_theta_mellin, theta_s_transform_residual, theta_series, time_average_inner_product,
    time_average_trend, LMethod,
};
use crate::dirichlet::character;
use crate::parton::decompose;
use crate::{Error, Result};

fn cjson(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn first_prime(config: &RunConfig) -> Result<u64> {
    config.primes.first().copied().ok_or_else(|| Error::Config("no prime given".into()))
}

/// {p, M, rescaled, coeffs: [{re, im}, ...]} for the configured stream.
pub fn parton_decompose(config: &RunConfig, rescaled: bool) -> Result<Value> {
    let p = first_prime(config)?;
    let stream = resolve_stream(config, (p as usize).max(2))?;
    let st = decompose(&stream, p, config.truncation, rescaled)?;
    Ok(json!({
        "p": st.prime,
        "M": st.truncation,
        "rescaled": st.rescaled,
        "weight": st.weight,
        "coeffs": st.coeffs.iter().map(|&c| cjson(c)).collect::<Vec<_>>(),
    }))
}

/// θ values and S-transform residuals on the y-grid, and the theta-Mellin
/// L-value against the direct series on the s-grid.
pub fn theta_check(config: &RunConfig) -> Result<Value> {
    let nu = character(config.modulus, config.char_index)?;
    let ys = parse_grid(&config.y_grid)?;
    let mut values = Vec::new();
    let mut residuals = Vec::new();
    for &y in &ys {
        let t = theta_series(y, &nu)?;
        values.push(json!({ "y": y, "theta": cjson(t.value), "tail_bound": t.tail_bound, "terms": t.terms }));
        residuals.push(json!({ "check": "s_transform", "y": y, "residual": theta_s_transform_residual(y, &nu)? }));
    }
    if nu.modulus() > 1 {
        for s in parse_grid(&config.s_grid)? {
            let z = Complex64::new(s, 0.0);
            let a = l_from_theta_mellin(z, &nu)?;
            let b = dirichlet_l(z, &nu, LMethod::DEFAULT_SERIES)?.value;
            values.push(json!({ "s": s, "l_theta": cjson(a), "l_series": cjson(b) }));
            residuals.push(json!({ "check": "theta_mellin", "s": s, "residual": (a - b).norm() }));
        }
    }
    Ok(json!({
        "params": { "character": nu.descriptor(), "epsilon": nu.parity_epsilon(), "y_grid": ys },
        "values": values,
        "residuals": residuals,
    }))
}

/// Critical-line time average for the configured character against each
/// nonprincipal character of the same modulus, plus a T-doubling trend.
/// Everything here is exploratory except the odd-part residual.
pub fn time_average(config: &RunConfig, t_max: f64, n_terms: usize) -> Result<Value> {
    let f = character(config.modulus, config.char_index)?;
    let grid = (t_max * 80.0).ceil() as usize;
    let mut values = Vec::new();
    let mut residuals = Vec::new();
    let mut trend = Vec::new();
    for g in crate::dirichlet::characters_mod(config.modulus).into_iter().filter(|c| !c.is_principal()) {
        let r = time_average_inner_product(&f, &g, t_max, grid, n_terms)?;
        values.push(json!({ "g": g.descriptor(), "average": cjson(r.value) }));
        residuals.push(json!({ "g": g.descriptor(), "odd_part": r.odd_part_residual }));
        for row in time_average_trend(&f, &g, t_max, 2, 40.0, n_terms)? {
            trend.push(json!({ "g": g.descriptor(), "T": row.t_max, "average": cjson(row.value) }));
        }
    }
    Ok(json!({
        "params": { "f": f.descriptor(), "T": t_max, "grid": grid, "n_terms": n_terms, "status": "exploratory" },
        "values": values,
        "residuals": residuals,
        "trend": trend,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_json_shape() {
        let c = RunConfig { primes: vec![2], truncation: 3, ..RunConfig::default() };
        let v = parton_decompose(&c, false).unwrap();
        assert_eq!(v["p"], 2);
        assert_eq!(v["coeffs"].as_array().unwrap().len(), 4);
        assert_eq!(v["coeffs"][1]["re"], -24.0);
    }

    #[test]
    fn theta_report() {
        let c = RunConfig { char_index: 2, s_grid: "2".into(), ..RunConfig::default() };
        let v = theta_check(&c).unwrap();
        for r in v["residuals"].as_array().unwrap() {
            assert!(r["residual"].as_f64().unwrap() < 1e-8);
        }
    }
}
