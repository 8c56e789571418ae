use serde::{Deserialize, Serialize};

use crate::arith::{primes_divide, smallest_prime_power_at_least};
use crate::error::{Error, Result};

/// One row of a bound table: an instance, the value obtained for it, and the
/// known lower and upper bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub quantity: String,
    pub instance: String,
    pub value: usize,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub within_bounds: bool,
}

impl BoundRow {
    pub fn new(quantity: &str, instance: String, value: usize, lower: Option<usize>, upper: Option<usize>) -> Self {
        let within_bounds = lower.is_none_or(|l| l <= value) && upper.is_none_or(|u| value <= u);
        Self {
            quantity: quantity.to_string(),
            instance,
            value,
            lower,
            upper,
            within_bounds,
        }
    }
}

/// Lower and upper bounds on the largest ell-orthogonal collection of
/// (sigma,k)-de Bruijn sequences. The lower bound needs sigma >= 3 and
/// ell <= sigma^(k-1).
pub fn max_orthogonal_bounds(sigma: usize, k: usize, ell: usize) -> (Option<usize>, usize) {
    let upper = ell * sigma.saturating_sub(1);
    let applies = sigma >= 3 && k >= 1 && ell <= sigma.pow(k as u32 - 1);
    let lower = applies.then(|| {
        if sigma >= 4 {
            (2 * ell).max(ell * (sigma / 2))
        } else {
            2 * ell
        }
    });
    (lower, upper)
}

/// Bounds on the smallest alphabet carrying c orthogonal b-balanced
/// de Bruijn sequences.
pub fn balanced_bounds(c: usize, b: usize) -> (usize, usize) {
    let lower = c * b;
    let upper = if primes_divide(c, b) {
        lower
    } else {
        smallest_prime_power_at_least(lower)
    };
    (lower, upper)
}

/// Bounds on the smallest alphabet carrying c orthogonal b-balanced Kautz
/// sequences.
pub fn kautz_balanced_bounds(c: usize, b: usize) -> (usize, usize) {
    (c * b + 1, 2 * c * b + 1)
}

fn cell(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn render_csv(rows: &[BoundRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["quantity", "instance", "value", "lower", "upper", "within_bounds"])
        .map_err(|e| Error::Output(e.to_string()))?;
    for r in rows {
        w.write_record([
            r.quantity.clone(),
            r.instance.clone(),
            r.value.to_string(),
            cell(r.lower),
            cell(r.upper),
            r.within_bounds.to_string(),
        ])
        .map_err(|e| Error::Output(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render_markdown(rows: &[BoundRow]) -> String {
    let mut out = String::from("| quantity | instance | value | lower | upper | within bounds |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            r.quantity,
            r.instance,
            r.value,
            cell(r.lower),
            cell(r.upper),
            if r.within_bounds { "yes" } else { "no" }
        ));
    }
    out
}
