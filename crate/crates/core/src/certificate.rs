//! Plain-text certificates: a coloring recipe plus claimed clique counts.
//!
//! ```text
//! RAMSEY-CERT v1
//! order: 43
//! blue-lengths: 3,4,5,6,8,9,11,15,17,19
//! flip: 4 5
//! delete: 0
//! claim: mono-k5 red 0
//! ```
//!
//! Lines are LF-terminated ASCII and must appear in the order above (flip,
//! delete and claim lines may repeat or be absent). Parsing is strict:
//! any other line is an error. Certificates never carry cliques; every
//! claim is recomputed from the recipe when verified.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::coloring::{Color, Coloring, ColoringSpec};
use crate::counter::CliqueCounter;
use crate::error::{Error, Result};
use crate::vertex_set::MAX_ORDER;

pub const CERT_VERSION: u32 = 1;
const MAGIC: &str = "RAMSEY-CERT v";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim {
    pub color: Color,
    pub k: usize,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub version: u32,
    pub spec: ColoringSpec,
    pub claims: Vec<Claim>,
}

impl Certificate {
    pub fn new(spec: ColoringSpec, claims: Vec<Claim>) -> Self {
        Certificate { version: CERT_VERSION, spec, claims }
    }

    /// A certificate for `spec` whose claims are the true red and blue counts
    /// for each `k`, computed by `counter`.
    pub fn with_computed_claims(spec: ColoringSpec, ks: &[usize], counter: &dyn CliqueCounter) -> Result<Self> {
        let coloring = Coloring::build(&spec)?;
        let mut claims = Vec::new();
        for &k in ks {
            for color in Color::BOTH {
                claims.push(Claim { color, k, count: counter.count(&coloring, color, k)? });
            }
        }
        Ok(Certificate::new(spec, claims))
    }
}

pub fn encode_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC}{}", cert.version);
    let _ = writeln!(out, "order: {}", cert.spec.order);
    let lengths: Vec<String> = cert.spec.blue_lengths.iter().map(|l| l.to_string()).collect();
    if lengths.is_empty() {
        out.push_str("blue-lengths:\n");
    } else {
        let _ = writeln!(out, "blue-lengths: {}", lengths.join(","));
    }
    for &(a, b) in &cert.spec.flips {
        let _ = writeln!(out, "flip: {} {}", a.min(b), a.max(b));
    }
    for v in &cert.spec.deletions {
        let _ = writeln!(out, "delete: {v}");
    }
    for claim in &cert.claims {
        let _ = writeln!(out, "claim: mono-k{} {} {}", claim.k, claim.color, claim.count);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Flips,
    Deletions,
    Claims,
}

fn number<T: std::str::FromStr>(line: usize, field: &str, what: &str) -> Result<T> {
    let ok = !field.is_empty() && field.bytes().all(|b| b.is_ascii_digit());
    ok.then(|| field.parse().ok()).flatten().ok_or_else(|| Error::parse(line, format!("malformed {what} `{field}`")))
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, key: &str) -> Result<(usize, &'a str)> {
    let (no, line) = lines.next().ok_or_else(|| Error::parse(0, format!("missing `{key}:` line")))?;
    let rest = line
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .ok_or_else(|| Error::parse(no, format!("expected `{key}:`, found `{line}`")))?;
    Ok((no, rest.strip_prefix(' ').unwrap_or(rest)))
}

pub fn decode_certificate(text: &str) -> Result<Certificate> {
    if !text.is_ascii() {
        return Err(Error::parse(0, "certificate must be ASCII"));
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    let (_, first) = lines.next().ok_or_else(|| Error::parse(1, "empty certificate"))?;
    let version_text =
        first.strip_prefix(MAGIC).ok_or_else(|| Error::parse(1, format!("expected `{MAGIC}{CERT_VERSION}`")))?;
    let version: u32 = number(1, version_text, "version")?;
    if version != CERT_VERSION {
        return Err(Error::parse(1, format!("version mismatch: expected {CERT_VERSION}, found {version}")));
    }

    let (no, order_text) = header(&mut lines, "order")?;
    let order: usize = number(no, order_text, "order")?;
    if !(2..=MAX_ORDER).contains(&order) {
        return Err(Error::parse(no, Error::UnsupportedOrder(order).to_string()));
    }

    let (no, lengths_text) = header(&mut lines, "blue-lengths")?;
    let mut blue_lengths = BTreeSet::new();
    if !lengths_text.is_empty() {
        let mut prev = 0;
        for field in lengths_text.split(',') {
            let len: usize = number(no, field, "length")?;
            if len == 0 || len > order / 2 {
                return Err(Error::parse(no, Error::LengthOutOfRange { length: len, max: order / 2 }.to_string()));
            }
            if len <= prev {
                return Err(Error::parse(no, "blue lengths must be strictly ascending"));
            }
            prev = len;
            blue_lengths.insert(len);
        }
    }

    let mut spec = ColoringSpec { order, blue_lengths, flips: Vec::new(), deletions: BTreeSet::new() };
    let mut claims = Vec::new();
    let mut seen_flips = BTreeSet::new();
    let mut section = Section::Flips;
    let vertex = |no: usize, field: &str| -> Result<usize> {
        let v: usize = number(no, field, "vertex")?;
        if v >= order {
            return Err(Error::parse(no, Error::VertexOutOfRange { vertex: v, order }.to_string()));
        }
        Ok(v)
    };

    for (no, line) in lines {
        let (key, rest) = line.split_once(": ").ok_or_else(|| Error::parse(no, format!("malformed line `{line}`")))?;
        let this = match key {
            "flip" => Section::Flips,
            "delete" => Section::Deletions,
            "claim" => Section::Claims,
            _ => return Err(Error::parse(no, format!("unknown line `{line}`"))),
        };
        if this < section {
            return Err(Error::parse(no, format!("`{key}` line out of order")));
        }
        section = this;
        let fields: Vec<&str> = rest.split(' ').collect();
        match (this, fields.as_slice()) {
            (Section::Flips, [a, b]) => {
                let (a, b) = (vertex(no, a)?, vertex(no, b)?);
                if a == b {
                    return Err(Error::parse(no, Error::DegenerateEdge(a).to_string()));
                }
                if a > b {
                    return Err(Error::parse(no, "flip endpoints must be ascending"));
                }
                if !seen_flips.insert((a, b)) {
                    return Err(Error::parse(no, Error::DuplicateFlip(a, b).to_string()));
                }
                spec.flips.push((a, b));
            }
            (Section::Deletions, [v]) => {
                let v = vertex(no, v)?;
                if !spec.deletions.insert(v) {
                    return Err(Error::parse(no, format!("vertex {v} deleted twice")));
                }
            }
            (Section::Claims, [kind, color, count]) => {
                let k_text = kind
                    .strip_prefix("mono-k")
                    .ok_or_else(|| Error::parse(no, format!("unknown claim kind `{kind}`")))?;
                let k: usize = number(no, k_text, "clique size")?;
                let color: Color = color.parse().map_err(|e: Error| Error::parse(no, e.to_string()))?;
                let count: u64 = number(no, count, "count")?;
                claims.push(Claim { color, k, count });
            }
            _ => return Err(Error::parse(no, format!("malformed line `{line}`"))),
        }
    }
    spec.validate().map_err(|e| Error::parse(0, e.to_string()))?;
    Ok(Certificate { version, spec, claims })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub actual: u64,
}

impl ClaimOutcome {
    pub fn holds(&self) -> bool {
        self.claim.count == self.actual
    }
}

/// Rebuilds the coloring from the recipe and recounts every claim.
pub fn verify_certificate(cert: &Certificate, counter: &dyn CliqueCounter) -> Result<Vec<ClaimOutcome>> {
    let coloring = Coloring::build(&cert.spec)?;
    cert.claims
        .iter()
        .map(|&claim| Ok(ClaimOutcome { claim, actual: counter.count(&coloring, claim.color, claim.k)? }))
        .collect()
}
