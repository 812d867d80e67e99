use num_bigint::BigUint;
use pfam_core::GraphKind;
use serde_json::Value;

use crate::args::OutputFormat;

/// Rendered forms of one command's result.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    /// Header row first.
    pub csv: Vec<Vec<String>>,
    /// True when a search stopped at its time limit.
    pub timed_out: bool,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).expect("writing to memory");
                }
                String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
            }
        }
    }
}

/// Base in which a kind's shares read naturally: the out-star bound for
/// directed graphs is a power of two even though the universe is `4^m`.
fn share_base(kind: GraphKind) -> u32 {
    match kind {
        GraphKind::Oriented => 3,
        _ => 2,
    }
}

fn exact_log(value: &BigUint, base: u32) -> Option<u32> {
    let mut p = BigUint::from(1u32);
    let mut e = 0;
    while &p < value {
        p *= base;
        e += 1;
    }
    (&p == value).then_some(e)
}

fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut a, mut b) = (a.clone(), b.clone());
    while b != BigUint::from(0u32) {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn symbolic_exponent(e: u32, n: usize) -> Option<String> {
    let d = e as i64 - n as i64;
    match d {
        0 => Some("n".into()),
        -3..=-1 => Some(format!("(n{d})")),
        1..=3 => Some(format!("(n+{d})")),
        _ => None,
    }
}

/// `size` as a fraction of all graphs of `kind` on `n` vertices, e.g.
/// `1/2^3 = 1/2^(n-1) of all graphs`.
pub fn share(size: &BigUint, kind: GraphKind, n: usize) -> String {
    let universe = kind.universe_size(n);
    if *size == BigUint::from(0u32) {
        return "none of the graphs".into();
    }
    let g = gcd(size, &universe);
    let (num, den) = (size / &g, &universe / &g);
    if num == BigUint::from(1u32) {
        let base = share_base(kind);
        if let Some(e) = exact_log(&den, base) {
            if e == 0 {
                return "all graphs".into();
            }
            return match symbolic_exponent(e, n) {
                Some(sym) if e > 1 => format!("1/{base}^{e} = 1/{base}^{sym} of all graphs"),
                _ => format!("1/{base}^{e} of all graphs"),
            };
        }
    }
    format!("{num}/{den} of all graphs")
}

/// `value` as `base^e` when it is an exact power, otherwise plain.
pub fn power_form(value: &BigUint, base: u32) -> String {
    match exact_log(value, base) {
        Some(e) if e > 1 => format!("{base}^{e} = {value}"),
        _ => value.to_string(),
    }
}

pub fn row<I, S>(cells: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: ToString,
{
    cells.into_iter().map(|c| c.to_string()).collect()
}
