//! Size caps shared by the builders and the search.

/// Environment variable overriding [`DEFAULT_MAX_VERTICES`].
pub const MAX_VERTICES_ENV: &str = "CAYLEY_FORGE_MAX_VERTICES";

pub const DEFAULT_MAX_VERTICES: usize = 1_000_000;

/// Upper bound on the sum of all vertex degrees of a constructed graph.
pub const MAX_TOTAL_DEGREE: usize = 10_000_000;

/// Largest base group accepted by the `Z_2` wreath product.
pub const MAX_WREATH_BASE_ORDER: usize = 11;

/// Largest group whose multiplication table we are willing to materialise.
pub const MAX_TABLE_ORDER: usize = 4096;

/// Largest graph the exact branch-and-bound accepts.
pub const MAX_EXACT_VERTICES: usize = 10_000;

/// Largest graph the brute-force oracle accepts.
pub const MAX_ORACLE_VERTICES: usize = 24;

pub const MAX_HYPERCUBE_DIMENSION: u32 = 20;

/// Vertex cap for constructed graphs, honouring [`MAX_VERTICES_ENV`].
pub fn vertex_cap() -> usize {
    std::env::var(MAX_VERTICES_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_VERTICES)
}

pub(crate) fn check_graph_size(n: usize, total_degree: usize, what: &str) -> crate::Result<()> {
    let cap = vertex_cap();
    if n > cap {
        return Err(crate::Error::ResourceLimit(format!(
            "{what} would have {n} vertices, above the cap of {cap} (set {MAX_VERTICES_ENV} to raise it)"
        )));
    }
    if total_degree > MAX_TOTAL_DEGREE {
        return Err(crate::Error::ResourceLimit(format!(
            "{what} would have total degree {total_degree}, above the cap of {MAX_TOTAL_DEGREE}"
        )));
    }
    Ok(())
}
