//! Parameter ranges such as `3`, `1..4` (inclusive) or `1,2,5..6`.

pub fn parse_range(text: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let num = |s: &str| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid range element '{s}' in '{text}'"))
        };
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi {
                    return Err(format!("empty range '{part}'"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|v| seen.insert(*v));
    Ok(out)
}

pub fn parse_range_u32(text: &str) -> Result<Vec<u32>, String> {
    parse_range(text)?
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| format!("value {v} is too large")))
        .collect()
}

pub fn parse_range_usize(text: &str) -> Result<Vec<usize>, String> {
    Ok(parse_range(text)?.into_iter().map(|v| v as usize).collect())
}
