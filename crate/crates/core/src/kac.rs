//! Kac diagrams for elliptic classes: the per-type sigma lists read off the
//! diagonal torus representative, node labels with gcd normalization, torus
//! exponents, ascii/json rendering, and the defining identity checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::charpoly;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rootdata;
use crate::tag::{Family, TypeTag};

/// Weakly decreasing exponent list of the diagonal representative, one entry
/// per non-affine diagram node. Not defined for type A, whose single class
/// is labeled directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaList {
    pub values: Vec<u64>,
    pub m: u64,
}

/// Node labels of an affine diagram, indexed gamma_0..gamma_n. `m` is the
/// order of the lift and is not rescaled when the label gcd is removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KacDiagram {
    pub tag: TypeTag,
    pub partition: Partition,
    pub m: u64,
    pub labels: Vec<u64>,
    pub normalized: bool,
}

impl KacDiagram {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Copy with the common factor removed from all labels.
    pub fn normalized(&self) -> Result<KacDiagram> {
        let g = self.labels.iter().fold(0u64, |acc, &s| acc.gcd(&s));
        if g == 0 {
            return Err(Error::AllZeroLabels);
        }
        Ok(KacDiagram {
            labels: self.labels.iter().map(|&s| s / g).collect(),
            normalized: true,
            ..self.clone()
        })
    }
}

fn exact_div(numerator: u64, denominator: u64) -> Result<u64> {
    if numerator % denominator != 0 {
        return Err(Error::NonIntegerEntry { numerator, denominator });
    }
    Ok(numerator / denominator)
}

/// Exponent list of the diagonal representative, sorted decreasing.
pub fn sigma_list(tag: TypeTag, p: &Partition) -> Result<SigmaList> {
    tag.check_admissible(p)?;
    let m = charpoly::canonical_m(tag, p);
    let mu = p.mu() as u64;
    let mut values = Vec::new();
    match tag.family {
        Family::A => {
            return Err(Error::UnsupportedType {
                tag: tag.family.name().to_string(),
                rank: tag.rank,
                reason: "the unique elliptic class is labeled directly".to_string(),
            });
        }
        Family::B | Family::D | Family::TwoD => {
            for &part in p.parts() {
                for a in 1..part {
                    values.push(exact_div(m * a, 2 * part)?);
                }
            }
            let halves = match tag.family {
                Family::B => mu.div_ceil(2),
                Family::D => mu / 2,
                _ => (mu - 1) / 2,
            };
            let zeroes = match tag.family {
                Family::B => mu / 2,
                Family::D => mu / 2,
                _ => (mu - 1) / 2,
            };
            values.extend(std::iter::repeat(m / 2).take(halves as usize));
            values.extend(std::iter::repeat(0).take(zeroes as usize));
        }
        Family::C => {
            for &part in p.parts() {
                for a in 1..=part {
                    values.push(exact_div((2 * a - 1) * m, 4 * part)?);
                }
            }
        }
        Family::TwoA => {
            // Parts are odd, so a < part/2 means a <= (part-1)/2.
            if tag.rank % 2 == 0 {
                for &part in p.parts() {
                    for a in 1..=(part - 1) / 2 {
                        values.push(exact_div((2 * a - 1) * m, 2 * part)?);
                    }
                }
                values.extend(std::iter::repeat(m / 2).take(mu as usize / 2));
            } else {
                for &part in p.parts() {
                    for a in 1..=(part - 1) / 2 {
                        values.push(exact_div(a * m, 2 * part)?);
                    }
                }
                values.extend(std::iter::repeat(0).take((mu as usize - 1) / 2));
            }
        }
    }
    values.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(values.len(), rootdata::reflection_rank(tag), "sigma list length");
    Ok(SigmaList { values, m })
}

/// Raw (pre-normalization) labels from a sigma list: consecutive differences
/// plus the per-type end and affine-node formulas.
pub fn kac_labels(tag: TypeTag, p: &Partition, s: &SigmaList) -> Result<KacDiagram> {
    let sigma = &s.values;
    let m = s.m as i128;
    let r = sigma.len();
    let val = |i: usize| sigma[i - 1] as i128;
    let mut raw: Vec<i128> = Vec::with_capacity(r + 1);
    match tag.family {
        Family::A => unreachable!("type A has no sigma list"),
        Family::B => {
            raw.push(m - (val(1) + val(2)));
            raw.extend((1..r).map(|k| val(k) - val(k + 1)));
            raw.push(val(r));
        }
        Family::C => {
            raw.push(m - 2 * val(1));
            raw.extend((1..r).map(|k| val(k) - val(k + 1)));
            raw.push(2 * val(r));
        }
        Family::D => {
            raw.push(m - (val(1) + val(2)));
            raw.extend((1..r).map(|k| val(k) - val(k + 1)));
            raw.push(val(r - 1) + val(r));
        }
        Family::TwoA if tag.rank % 2 == 0 => {
            raw.push(m - (val(1) + val(2)));
            raw.extend((1..r).map(|k| val(k) - val(k + 1)));
            // Sigma entries are odd here, so the differences are even.
            for entry in raw.iter_mut() {
                assert!(*entry % 2 == 0, "even-case differences must be even");
                *entry /= 2;
            }
            raw.push(val(r));
        }
        Family::TwoA => {
            raw.push(m / 2 - 2 * val(1));
            raw.extend((1..r).map(|k| val(k) - val(k + 1)));
            raw.push(val(r));
        }
        Family::TwoD => {
            raw.push(m / 2 - val(1));
            raw.extend((1..r).map(|k| val(k) - val(k + 1)));
            raw.push(val(r));
        }
    }
    let mut labels = Vec::with_capacity(raw.len());
    for (node, &entry) in raw.iter().enumerate() {
        if entry < 0 {
            return Err(Error::NegativeLabel { node });
        }
        labels.push(entry as u64);
    }
    Ok(KacDiagram {
        tag,
        partition: p.clone(),
        m: s.m,
        labels,
        normalized: false,
    })
}

/// Raw diagram for an admissible partition. Type A is labeled directly
/// (every node 2 for even rank with m = 2l, every node 1 for odd with m = l);
/// all other types go through the sigma list.
pub fn kac_diagram(tag: TypeTag, p: &Partition) -> Result<KacDiagram> {
    let diagram = rootdata::diagram_for(tag)?;
    tag.check_admissible(p)?;
    let d = if tag.family == Family::A {
        let l = tag.rank as u64;
        let (label, m) = if l % 2 == 0 { (2, 2 * l) } else { (1, l) };
        KacDiagram {
            tag,
            partition: p.clone(),
            m,
            labels: vec![label; diagram.nodes],
            normalized: false,
        }
    } else {
        kac_labels(tag, p, &sigma_list(tag, p)?)?
    };
    let f = tag.family.twist_order();
    let weighted: u64 = d.labels.iter().zip(&diagram.marks_b).map(|(&s, &b)| s * b).sum();
    assert_eq!(f * weighted, d.m, "m = f * sum(s_gamma b_gamma) must hold pre-normalization");
    Ok(d)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Diagonal exponent vector of the torus representative in the standard
/// representation: the sigma list, mirrored negatives appended, with the
/// per-type central fixed entries (and halved entries for even twisted A).
pub fn torus_exponents(tag: TypeTag, s: &SigmaList) -> Vec<BigRational> {
    let halved = tag.family == Family::TwoA && tag.rank % 2 == 0;
    let value = |v: u64| BigRational::new(BigInt::from(v), BigInt::from(if halved { 2 } else { 1 }));
    let mut out: Vec<BigRational> = s.values.iter().map(|&v| value(v)).collect();
    let zeroes = match tag.family {
        Family::A => return a_type_exponents(tag.rank),
        Family::B => 1,
        Family::C | Family::D => 0,
        Family::TwoA => tag.rank % 2,
        Family::TwoD => 2,
    };
    out.extend(std::iter::repeat(BigRational::zero()).take(zeroes));
    out.extend(s.values.iter().rev().map(|&v| -value(v)));
    out
}

/// Exponent list for the unique elliptic class in SL_l: consecutive odd
/// integers (mod 2l) for even l, consecutive integers (mod l) for odd l.
pub fn a_type_exponents(l: usize) -> Vec<BigRational> {
    let den = if l % 2 == 0 { 1 } else { 2 };
    (0..l)
        .map(|i| BigRational::new(BigInt::from(l as i64 - 1 - 2 * i as i64), BigInt::from(den)))
        .collect()
}

fn header(d: &KacDiagram) -> String {
    let parts: Vec<String> = d.partition.parts().iter().map(|p| p.to_string()).collect();
    format!(
        "{} partition=({}) m={} {}",
        d.tag,
        parts.join(","),
        d.m,
        if d.normalized { "normalized" } else { "raw" }
    )
}

/// Interleave chain labels with edge glyphs: one glyph per adjacent pair.
fn join_chain(labels: &[u64], glyphs: &[&str]) -> String {
    assert_eq!(glyphs.len() + 1, labels.len());
    let mut line = labels[0].to_string();
    for (v, g) in labels[1..].iter().zip(glyphs) {
        line.push_str(&format!(" {g} {v}"));
    }
    line
}

fn straight_glyphs(count: usize, first: Option<&'static str>, last: Option<&'static str>) -> Vec<&'static str> {
    let mut glyphs = vec!["-"; count];
    if let Some(g) = first {
        glyphs[0] = g;
    }
    if let Some(g) = last {
        glyphs[count - 1] = g;
    }
    glyphs
}

/// Ascii rendering in the chain-with-branch layout: labels in node order,
/// "=>"/"<=" for double bonds pointing along/against the reading direction,
/// "<=>" for the rank-one double bond, and a quadruple bond as a triple bar.
pub fn render_ascii(d: &KacDiagram) -> Result<String> {
    rootdata::diagram_for(d.tag)?;
    let s = &d.labels;
    let l = d.tag.rank;
    let n = s.len() - 1;
    let mut lines = vec![header(d)];
    match d.tag.family {
        Family::A => {
            if l == 2 {
                lines.push(format!("{} <=> {}", s[0], s[1]));
            } else {
                lines.push(join_chain(&s[1..], &vec!["-"; l - 2]));
                lines.push(format!("cycle: g0={} joins g1 g{}", s[0], l - 1));
            }
        }
        Family::B => {
            lines.push(join_chain(&s[1..], &straight_glyphs(l - 1, None, Some("=>"))));
            lines.push(format!("branch: g0={} at g2", s[0]));
        }
        Family::C => {
            lines.push(join_chain(s, &straight_glyphs(l, Some("=>"), Some("<="))));
        }
        Family::D => {
            lines.push(join_chain(&s[1..l], &vec!["-"; l - 2]));
            lines.push(format!("branch: g0={} at g2", s[0]));
            lines.push(format!("branch: g{}={} at g{}", l, s[l], l - 2));
        }
        Family::TwoA if l % 2 == 0 => {
            if n == 2 {
                lines.push(format!("{} <= {} => {}", s[0], s[2], s[1]));
            } else {
                lines.push(join_chain(&s[1..], &straight_glyphs(n - 1, None, Some("<="))));
                lines.push(format!("branch: g0={} at g2", s[0]));
            }
        }
        Family::TwoA => {
            if n == 1 {
                lines.push(format!("{} ≡> {}", s[0], s[1]));
            } else {
                lines.push(join_chain(s, &straight_glyphs(n, Some("=>"), Some("=>"))));
            }
        }
        Family::TwoD => {
            lines.push(join_chain(s, &straight_glyphs(l, Some("<="), Some("=>"))));
        }
    }
    Ok(lines.join("\n"))
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::ParseFailed(msg.into())
}

fn parse_tag_token(token: &str) -> Result<TypeTag> {
    let at = if token.starts_with("2A") || token.starts_with("2D") { 2 } else { 1 };
    if token.len() <= at {
        return Err(parse_err(format!("bad type token {token:?}")));
    }
    let family: Family = token[..at].parse().map_err(parse_err)?;
    let rank: usize = token[at..]
        .parse()
        .map_err(|_| parse_err(format!("bad rank in {token:?}")))?;
    TypeTag::new(family, rank)
}

fn parse_header(line: &str) -> Result<(TypeTag, Partition, u64, bool)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 4 {
        return Err(parse_err("header needs: tag partition=(..) m=.. raw|normalized"));
    }
    let tag = parse_tag_token(tokens[0])?;
    let parts_text = tokens[1]
        .strip_prefix("partition=(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| parse_err("missing partition=(..)"))?;
    let parts: Vec<u64> = parts_text
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| parse_err(format!("bad part {t:?}"))))
        .collect::<Result<_>>()?;
    let partition = Partition::new(parts)?;
    let m: u64 = tokens[2]
        .strip_prefix("m=")
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err("missing m=.."))?;
    let normalized = match tokens[3] {
        "raw" => false,
        "normalized" => true,
        other => return Err(parse_err(format!("bad flag {other:?}"))),
    };
    Ok((tag, partition, m, normalized))
}

/// Label values on a chain line, ignoring the edge glyphs between them.
fn chain_values(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .filter(|t| t.starts_with(|c: char| c.is_ascii_digit()))
        .map(|t| t.parse().map_err(|_| parse_err(format!("bad label {t:?}"))))
        .collect()
}

/// Value of a `g<k>=<v>` assignment token, checking the node index.
fn assigned_value(token: &str, node: usize) -> Result<u64> {
    token
        .strip_prefix(&format!("g{node}="))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(format!("expected g{node}=<label>, got {token:?}")))
}

/// Label carried by a `branch: g<node>=<v> at g<j>` line.
fn branch_value(tokens: &[&str], node: usize) -> Result<u64> {
    if tokens.first() != Some(&"branch:") || tokens.len() != 4 {
        return Err(parse_err("bad branch line"));
    }
    assigned_value(tokens[1], node)
}

/// Structural consistency of a parsed diagram: the order matches the
/// partition's canonical one and is recovered from the labels and marks
/// (exactly when raw, up to the removed factor when normalized).
fn check_parsed(d: &KacDiagram) -> Result<()> {
    d.tag.check_admissible(&d.partition)?;
    if d.m != charpoly::canonical_m(d.tag, &d.partition) {
        return Err(parse_err("m does not match the partition"));
    }
    let diagram = rootdata::diagram_for(d.tag)?;
    let f = d.tag.family.twist_order();
    let weighted: u64 = d.labels.iter().zip(&diagram.marks_b).map(|(&s, &b)| s * b).sum();
    let ok = weighted > 0
        && d.m % (f * weighted) == 0
        && (d.normalized || d.m == f * weighted);
    if !ok {
        return Err(parse_err("labels do not weight-sum to m"));
    }
    Ok(())
}

/// Inverse of `render_ascii`. Strict: the reconstruction must re-render to
/// the same token stream, so corrupted glyphs or branch positions are
/// rejected, not silently normalized.
pub fn parse_ascii(text: &str) -> Result<KacDiagram> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.is_empty() {
        return Err(parse_err("empty input"));
    }
    let (tag, partition, m, normalized) = parse_header(lines[0])?;
    let diagram = rootdata::diagram_for(tag)?;
    let nodes = diagram.nodes;
    let l = tag.rank;
    let chain = chain_values(lines.get(1).copied().unwrap_or_default())?;
    let line_tokens = |at: usize| -> Result<Vec<&str>> {
        Ok(lines
            .get(at)
            .ok_or_else(|| parse_err(format!("missing line {at}")))?
            .split_whitespace()
            .collect())
    };
    let mut labels = vec![0u64; nodes];
    let fill = |labels: &mut Vec<u64>, at: usize, values: &[u64]| -> Result<()> {
        for (k, &v) in values.iter().enumerate() {
            *labels
                .get_mut(at + k)
                .ok_or_else(|| parse_err("too many chain labels"))? = v;
        }
        Ok(())
    };
    match tag.family {
        Family::A if l == 2 => fill(&mut labels, 0, &chain)?,
        Family::A => {
            fill(&mut labels, 1, &chain)?;
            let tokens = line_tokens(2)?;
            if tokens.first() != Some(&"cycle:") || tokens.len() != 5 {
                return Err(parse_err("bad cycle line"));
            }
            labels[0] = assigned_value(tokens[1], 0)?;
        }
        Family::B => {
            fill(&mut labels, 1, &chain)?;
            labels[0] = branch_value(&line_tokens(2)?, 0)?;
        }
        Family::TwoA if l % 2 == 0 && nodes == 3 => {
            // Printed order gamma_0 <= gamma_2 => gamma_1.
            if chain.len() != 3 {
                return Err(parse_err("expected three labels"));
            }
            labels[0] = chain[0];
            labels[2] = chain[1];
            labels[1] = chain[2];
        }
        Family::TwoA if l % 2 == 0 => {
            fill(&mut labels, 1, &chain)?;
            labels[0] = branch_value(&line_tokens(2)?, 0)?;
        }
        Family::C | Family::TwoA | Family::TwoD => fill(&mut labels, 0, &chain)?,
        Family::D => {
            fill(&mut labels, 1, &chain)?;
            for (line_at, node) in [(2usize, 0usize), (3, l)] {
                labels[node] = branch_value(&line_tokens(line_at)?, node)?;
            }
        }
    }
    let d = KacDiagram { tag, partition, m, labels, normalized };
    let rendered = render_ascii(&d)?;
    if !rendered.split_whitespace().eq(text.split_whitespace()) {
        return Err(parse_err("text does not match the canonical layout"));
    }
    check_parsed(&d)?;
    Ok(d)
}

/// Signed sigma entries for serialization; type A uses its exponent list,
/// whose entries are integers for both parities.
fn json_sigma(d: &KacDiagram) -> Result<Vec<i64>> {
    if d.tag.family == Family::A {
        return Ok(a_type_exponents(d.tag.rank)
            .iter()
            .map(|v| i64::try_from(v.to_integer()).unwrap())
            .collect());
    }
    Ok(sigma_list(d.tag, &d.partition)?.values.iter().map(|&v| v as i64).collect())
}

pub fn render_json(d: &KacDiagram) -> Result<String> {
    let diagram = rootdata::diagram_for(d.tag)?;
    let mut labels = Map::new();
    for (k, &v) in d.labels.iter().enumerate() {
        labels.insert(format!("g{k}"), json!(v));
    }
    let value = json!({
        "family": d.tag.family.name(),
        "rank": d.tag.rank,
        "twist": d.tag.family.twist_order(),
        "partition": d.partition.parts(),
        "m": d.m,
        "sigma": json_sigma(d)?,
        "labels": labels,
        "b_marks": diagram.marks_b,
        "c_marks": diagram.marks_c,
        "orbit_sizes": diagram.orbit_sizes,
        "normalized": d.normalized,
    });
    Ok(value.to_string())
}

/// Inverse of `render_json`. Strict: all derived fields (sigma, marks,
/// orbit sizes) must match the values recomputed from the identifying ones.
pub fn parse_json(text: &str) -> Result<KacDiagram> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let family: Family = v["family"]
        .as_str()
        .ok_or_else(|| parse_err("missing family"))?
        .parse()
        .map_err(parse_err)?;
    let rank = v["rank"].as_u64().ok_or_else(|| parse_err("missing rank"))? as usize;
    let tag = TypeTag::new(family, rank)?;
    let parts: Vec<u64> = v["partition"]
        .as_array()
        .ok_or_else(|| parse_err("missing partition"))?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| parse_err("bad partition entry")))
        .collect::<Result<_>>()?;
    let partition = Partition::new(parts)?;
    let m = v["m"].as_u64().ok_or_else(|| parse_err("missing m"))?;
    let diagram = rootdata::diagram_for(tag)?;
    let labels: Vec<u64> = (0..diagram.nodes)
        .map(|k| {
            v["labels"][format!("g{k}")]
                .as_u64()
                .ok_or_else(|| parse_err(format!("missing label g{k}")))
        })
        .collect::<Result<_>>()?;
    let normalized = v["normalized"]
        .as_bool()
        .ok_or_else(|| parse_err("missing normalized flag"))?;
    let d = KacDiagram { tag, partition, m, labels, normalized };
    let recomputed: Value =
        serde_json::from_str(&render_json(&d)?).expect("rendered json is valid");
    if recomputed != v {
        return Err(parse_err("derived fields disagree with the identifying ones"));
    }
    check_parsed(&d)?;
    Ok(d)
}

/// Result of the per-diagram identity checks: named pass/fail pairs.
#[derive(Debug, Clone)]
pub struct DiagramReport {
    pub checks: Vec<(String, bool)>,
}

impl DiagramReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name.as_str())
            .collect()
    }
}

/// Checks the defining identities of a diagram: m is recovered from the
/// labels and marks (up to the factor removed by normalization), the alcove
/// point is barycentric, and the label expansion over the coweights equals
/// the torus exponent vector.
pub fn verify_diagram(d: &KacDiagram) -> Result<DiagramReport> {
    let diagram = rootdata::diagram_for(d.tag)?;
    let f = d.tag.family.twist_order();
    let mut checks = Vec::new();

    let weighted: u64 = d.labels.iter().zip(&diagram.marks_b).map(|(&s, &b)| s * b).sum();
    let form_ok = weighted > 0
        && d.m % (f * weighted) == 0
        && (d.normalized || d.m == f * weighted);
    checks.push(("order-from-labels".to_string(), form_ok));
    // Factor removed by normalization; raw diagrams must have scale 1.
    let scale = if form_ok { d.m / (f * weighted) } else { 1 };

    let bary_ok = match rootdata::kac_point(d.tag, &d.labels) {
        Ok((coords, m_point)) => {
            let total: BigRational = coords.iter().cloned().sum();
            total == BigRational::one() && m_point * scale == d.m
        }
        Err(_) => false,
    };
    checks.push(("barycentric".to_string(), bary_ok));

    let coweight_ok = coweight_identity(d, scale).unwrap_or(false);
    checks.push(("coweight-identity".to_string(), coweight_ok));

    Ok(DiagramReport { checks })
}

/// Exact rational identity: sum of s_gamma |gamma| mu-check_gamma over the
/// non-affine nodes equals the leading coordinates of the torus exponents.
fn coweight_identity(d: &KacDiagram, scale: u64) -> Result<bool> {
    let diagram = rootdata::diagram_for(d.tag)?;
    let coweights = rootdata::coweights(d.tag)?;
    let dim = coweights[0].len();
    let mut lhs = vec![BigRational::zero(); dim];
    for k in 1..diagram.nodes {
        let weight = rat((d.labels[k] * scale * diagram.orbit_sizes[k]) as i64);
        for (acc, coord) in lhs.iter_mut().zip(&coweights[k - 1]) {
            *acc += coord * &weight;
        }
    }
    let exponents = if d.tag.family == Family::A {
        a_type_exponents(d.tag.rank)
    } else {
        torus_exponents(d.tag, &sigma_list(d.tag, &d.partition)?)
    };
    Ok(lhs == exponents[..dim])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tag(family: Family, rank: usize) -> TypeTag {
        TypeTag::new(family, rank).unwrap()
    }

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn diagram(family: Family, rank: usize, parts: &[u64]) -> KacDiagram {
        kac_diagram(tag(family, rank), &p(parts)).unwrap()
    }

    #[test]
    fn sigma_lists_match_worked_examples() {
        let cases: [(Family, usize, &[u64], u64, &[u64]); 5] = [
            (Family::B, 14, &[5, 4, 4, 1], 40,
             &[20, 20, 16, 15, 15, 12, 10, 10, 8, 5, 5, 4, 0, 0]),
            (Family::C, 3, &[2, 1], 8, &[3, 2, 1]),
            (Family::TwoD, 11, &[5, 4, 3], 120,
             &[60, 48, 45, 40, 36, 30, 24, 20, 15, 12, 0]),
            (Family::TwoA, 20, &[7, 5, 5, 3], 210,
             &[105, 105, 75, 63, 63, 45, 35, 21, 21, 15]),
            (Family::TwoA, 25, &[9, 5, 5, 3, 3], 90,
             &[20, 18, 18, 15, 15, 15, 10, 9, 9, 5, 0, 0]),
        ];
        for (family, rank, parts, m, want) in cases {
            let s = sigma_list(tag(family, rank), &p(parts)).unwrap();
            assert_eq!(s.m, m, "{family:?} {parts:?}");
            assert_eq!(s.values, want, "{family:?} {parts:?}");
        }
    }

    #[test]
    fn labels_match_worked_examples() {
        let cases: [(Family, usize, &[u64], &[u64]); 7] = [
            // gamma_0 first, then the chain; branch/fork nodes at their indices.
            (Family::B, 14, &[5, 4, 4, 1],
             &[0, 0, 4, 1, 0, 3, 2, 0, 2, 3, 0, 1, 4, 0, 0]),
            (Family::C, 13, &[6, 5, 2],
             &[10, 1, 9, 0, 3, 7, 5, 5, 7, 3, 0, 9, 1, 10]),
            (Family::C, 3, &[2, 1], &[2, 1, 1, 2]),
            (Family::D, 14, &[5, 4, 4, 1],
             &[0, 0, 4, 1, 0, 3, 2, 0, 2, 3, 0, 1, 4, 0, 0]),
            (Family::TwoA, 20, &[7, 5, 5, 3],
             &[0, 0, 15, 6, 0, 9, 5, 7, 0, 3, 15]),
            (Family::TwoA, 25, &[9, 5, 5, 3, 3],
             &[5, 2, 0, 3, 0, 0, 5, 1, 0, 4, 5, 0, 0]),
            (Family::TwoD, 11, &[5, 4, 3],
             &[0, 12, 3, 5, 4, 6, 6, 4, 5, 3, 12, 0]),
        ];
        for (family, rank, parts, want) in cases {
            let d = diagram(family, rank, parts);
            assert_eq!(d.labels, want, "{family:?} {parts:?}");
        }
    }

    #[test]
    fn rank_two_twisted_and_c_type_minis_match() {
        // Normalized diagrams of the low-rank worked examples.
        let cases: [(Family, usize, &[u64], &[u64]); 8] = [
            (Family::C, 2, &[2], &[1, 1, 1]),
            (Family::C, 2, &[1, 1], &[1, 0, 1]),
            (Family::C, 3, &[3], &[1, 1, 1, 1]),
            (Family::TwoA, 4, &[3, 1], &[1, 1, 1]),
            (Family::TwoA, 4, &[1, 1, 1, 1], &[0, 0, 1]),
            (Family::TwoA, 3, &[3], &[1, 1]),
            (Family::TwoA, 3, &[1, 1, 1], &[1, 0]),
            (Family::TwoD, 2, &[3], &[1, 1, 1]),
        ];
        for (family, rank, parts, want) in cases {
            let d = diagram(family, rank, parts).normalized().unwrap();
            assert_eq!(d.labels, want, "{family:?} {parts:?}");
        }
        let d = diagram(Family::TwoD, 2, &[1, 1, 1]).normalized().unwrap();
        assert_eq!(d.labels, [0, 1, 0]);
    }

    #[test]
    fn a_type_is_all_ones_after_normalization() {
        for l in 2..=9 {
            let d = diagram(Family::A, l, &[l as u64]);
            let raw = if l % 2 == 0 { 2 } else { 1 };
            assert_eq!(d.labels, vec![raw; l]);
            assert_eq!(d.m, if l % 2 == 0 { 2 * l as u64 } else { l as u64 });
            assert_eq!(d.normalized().unwrap().labels, vec![1; l]);
        }
    }

    #[test]
    fn torus_exponent_layouts() {
        let c = sigma_list(tag(Family::C, 3), &p(&[2, 1])).unwrap();
        let want: Vec<BigRational> = [3, 2, 1, -1, -2, -3].iter().map(|&v| rat(v)).collect();
        assert_eq!(torus_exponents(tag(Family::C, 3), &c), want);

        // Mirrored-with-center layout at rank one, below the diagram bound.
        let b1 = TypeTag { family: Family::B, rank: 1 };
        let s = SigmaList { values: vec![1], m: 2 };
        let want: Vec<BigRational> = [1, 0, -1].iter().map(|&v| rat(v)).collect();
        assert_eq!(torus_exponents(b1, &s), want);

        let d2 = sigma_list(tag(Family::TwoD, 2), &p(&[1, 1, 1])).unwrap();
        assert_eq!(d2.values, [1, 0]);
        let want: Vec<BigRational> = [1, 0, 0, 0, 0, -1].iter().map(|&v| rat(v)).collect();
        assert_eq!(torus_exponents(tag(Family::TwoD, 2), &d2), want);

        // Even twisted A exponents are half-integers.
        let a = sigma_list(tag(Family::TwoA, 4), &p(&[3, 1])).unwrap();
        let half = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(2));
        assert_eq!(
            torus_exponents(tag(Family::TwoA, 4), &a),
            vec![half(3), half(1), half(-1), half(-3)]
        );
    }

    #[test]
    fn ascii_rendering_matches_chain_layouts() {
        let render = |family, rank, parts: &[u64]| {
            render_ascii(&diagram(family, rank, parts).normalized().unwrap()).unwrap()
        };
        assert_eq!(
            render(Family::C, 3, &[2, 1]),
            "C3 partition=(2,1) m=8 normalized\n2 => 1 - 1 <= 2"
        );
        assert_eq!(
            render(Family::A, 3, &[3]),
            "A3 partition=(3) m=3 normalized\n1 - 1\ncycle: g0=1 joins g1 g2"
        );
        assert_eq!(
            render(Family::TwoA, 3, &[3]),
            "2A3 partition=(3) m=6 normalized\n1 ≡> 1"
        );
        assert_eq!(
            render(Family::TwoA, 4, &[1, 1, 1, 1]),
            "2A4 partition=(1,1,1,1) m=2 normalized\n0 <= 1 => 0"
        );
        assert_eq!(
            render(Family::B, 14, &[5, 4, 4, 1]),
            "B14 partition=(5,4,4,1) m=40 normalized\n\
             0 - 4 - 1 - 0 - 3 - 2 - 0 - 2 - 3 - 0 - 1 - 4 - 0 => 0\n\
             branch: g0=0 at g2"
        );
        assert_eq!(
            render(Family::D, 14, &[5, 4, 4, 1]),
            "D14 partition=(5,4,4,1) m=40 normalized\n\
             0 - 4 - 1 - 0 - 3 - 2 - 0 - 2 - 3 - 0 - 1 - 4 - 0\n\
             branch: g0=0 at g2\nbranch: g14=0 at g12"
        );
        assert_eq!(
            render(Family::TwoD, 11, &[5, 4, 3]),
            "2D11 partition=(5,4,3) m=120 normalized\n\
             0 <= 12 - 3 - 5 - 4 - 6 - 6 - 4 - 5 - 3 - 12 => 0"
        );
    }

    #[test]
    fn rendering_round_trips_both_formats() {
        let mut count = 0;
        for family in Family::ALL {
            let min = match family {
                Family::B => 3,
                Family::D => 4,
                Family::TwoA => 3,
                _ => 2,
            };
            for rank in min..=7 {
                let t = tag(family, rank);
                for q in t.admissible_partitions() {
                    let raw = kac_diagram(t, &q).unwrap();
                    for d in [raw.clone(), raw.normalized().unwrap()] {
                        assert_eq!(parse_ascii(&render_ascii(&d).unwrap()).unwrap(), d);
                        assert_eq!(parse_json(&render_json(&d).unwrap()).unwrap(), d);
                        count += 1;
                    }
                }
            }
        }
        assert!(count > 100, "round-tripped {count} diagrams");
    }

    #[test]
    fn parse_rejects_corrupted_text() {
        let d = diagram(Family::C, 3, &[2, 1]);
        let good = render_ascii(&d).unwrap();
        assert!(parse_ascii(&good.replace("=>", "<=")).is_err());
        assert!(parse_ascii(&good.replace("m=8", "m=9")).is_err());
        let json = render_json(&d).unwrap();
        assert!(parse_json(&json.replace("[3,2,1]", "[3,2,2]")).is_err());
    }

    #[test]
    fn json_schema_fields() {
        let d = diagram(Family::B, 14, &[5, 4, 4, 1]);
        let v: Value = serde_json::from_str(&render_json(&d).unwrap()).unwrap();
        assert_eq!(v["family"], "B");
        assert_eq!(v["rank"], 14);
        assert_eq!(v["twist"], 1);
        assert_eq!(v["partition"], json!([5, 4, 4, 1]));
        assert_eq!(v["m"], 40);
        assert_eq!(v["labels"]["g0"], 0);
        assert_eq!(v["labels"]["g2"], 4);
        assert_eq!(v["b_marks"][0], 1);
        assert_eq!(v["orbit_sizes"][3], 1);
        // Node keys come out in diagram order.
        let keys: Vec<&String> = v["labels"].as_object().unwrap().keys().collect();
        assert_eq!(keys[10], "g10");
    }

    #[test]
    fn verify_accepts_constructed_diagrams() {
        for family in Family::ALL {
            let min = match family {
                Family::B => 3,
                Family::D => 4,
                Family::TwoA => 3,
                _ => 2,
            };
            for rank in min..=7 {
                let t = tag(family, rank);
                for q in t.admissible_partitions() {
                    let d = kac_diagram(t, &q).unwrap();
                    assert!(verify_diagram(&d).unwrap().all_passed(), "{t} {q}");
                    let n = d.normalized().unwrap();
                    assert!(verify_diagram(&n).unwrap().all_passed(), "{t} {q} normalized");
                }
            }
        }
    }

    #[test]
    fn verify_flags_corrupted_label() {
        let mut d = diagram(Family::B, 5, &[3, 2]);
        d.labels[3] += 1;
        let report = verify_diagram(&d).unwrap();
        assert!(!report.all_passed());
        assert!(report.failed().contains(&"order-from-labels"));
    }

    #[test]
    fn normalized_diagrams_distinct_at_small_rank() {
        for family in Family::ALL {
            let min = match family {
                Family::B => 3,
                Family::D => 4,
                Family::TwoA => 3,
                _ => 2,
            };
            for rank in min..=8 {
                let t = tag(family, rank);
                let mut seen = std::collections::BTreeSet::new();
                for q in t.admissible_partitions() {
                    let d = kac_diagram(t, &q).unwrap().normalized().unwrap();
                    assert!(seen.insert(d.labels.clone()), "duplicate diagram for {t} {q}");
                }
            }
        }
    }

    #[test]
    fn sigma_list_rejects_type_a() {
        assert!(matches!(
            sigma_list(tag(Family::A, 4), &p(&[4])),
            Err(Error::UnsupportedType { .. })
        ));
    }
}
