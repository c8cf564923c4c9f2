use crate::error::{parse_err, Error, Result};
use crate::graph::{BaseGraph, Bundle};

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(lno: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(i)), Some(Ok(j)), None) => Ok((i, j)),
        _ => Err(parse_err(lno, format!("expected `<i> <j>`, got `{line}`"))),
    }
}

fn parse_count(lines: &mut impl Iterator<Item = (usize, impl AsRef<str>)>) -> Result<usize> {
    let (lno, line) = lines.next().ok_or_else(|| parse_err(1, "missing vertex count"))?;
    line.as_ref()
        .parse()
        .map_err(|_| parse_err(lno, format!("expected vertex count, got `{}`", line.as_ref())))
}

/// Base-graph file: `n` on the first line, then one 1-based `i j` edge per line.
pub fn parse_base_graph(text: &str) -> Result<BaseGraph> {
    let mut lines = content_lines(text);
    let n = parse_count(&mut lines)?;
    let edges = lines.map(|(lno, l)| parse_pair(lno, l)).collect::<Result<Vec<_>>>()?;
    BaseGraph::new(n, &edges)
}

/// Bundle file: `n`, an optional `symmetrize` directive, then `i j` lines
/// meaning `i ~ j'`.
pub fn parse_bundle(text: &str) -> Result<Bundle> {
    let mut lines = content_lines(text).peekable();
    let n = parse_count(&mut lines)?;
    let symmetrize = lines.next_if(|(_, l)| *l == "symmetrize").is_some();
    let pairs = lines.map(|(lno, l)| parse_pair(lno, l)).collect::<Result<Vec<_>>>()?;
    Bundle::new(n, &pairs, symmetrize)
}

fn param(name: &str, prefix: &str) -> Option<Result<usize>> {
    name.strip_prefix(prefix).map(|v| {
        v.parse().map_err(|_| Error::Unsupported { kind: "preset", name: name.to_string() })
    })
}

/// Base-graph presets: `kn:<n>` (complete), `cn:<n>` (cycle), `pn:<n>`
/// (path), `empty:<n>`. Returns `None` when `name` is not a preset.
pub fn base_preset(name: &str) -> Option<Result<BaseGraph>> {
    let name = name.strip_prefix("preset:").unwrap_or(name);
    type Build = fn(usize) -> Result<BaseGraph>;
    let table: [(&str, Build); 4] = [
        ("kn:", BaseGraph::complete),
        ("cn:", BaseGraph::cycle),
        ("pn:", BaseGraph::path),
        ("empty:", BaseGraph::empty),
    ];
    table
        .iter()
        .find_map(|(prefix, build)| param(name, prefix).map(|n| n.and_then(build)))
}

/// Bundle presets over `base`: `matching`, `full`, `jstar`, `empty`,
/// `jr:<r>`, `mirror`, and `j1`..`j8` when `n = 2`. Returns `None` when `name`
/// is not a preset.
pub fn bundle_preset(name: &str, base: &BaseGraph) -> Option<Result<Bundle>> {
    let name = name.strip_prefix("preset:").unwrap_or(name);
    let n = base.n();
    let bundle = match name {
        "matching" => Bundle::matching(n),
        "full" => Bundle::full(n),
        "jstar" => Bundle::jstar(n),
        "empty" => Bundle::empty(n),
        "mirror" => Ok(Bundle::mirror(base)),
        _ => {
            if let Some(r) = param(name, "jr:") {
                r.and_then(|r| Bundle::jr(n, r))
            } else {
                let idx = name.strip_prefix('j').and_then(|d| d.parse::<usize>().ok())?;
                if n != 2 {
                    Err(Error::Precondition(format!("bundle {name} needs n = 2, got {n}")))
                } else {
                    Bundle::k2_catalog_entry(idx)
                }
            }
        }
    };
    Some(bundle)
}
