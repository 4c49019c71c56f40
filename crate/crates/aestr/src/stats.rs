//! Per-query instrumentation counters.

/// Which evaluation route a query took.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QueryPath {
    #[default]
    FromScratch,
    Short,
    Long,
    ShortMirrored,
    LongMirrored,
}

impl QueryPath {
    pub fn as_str(&self) -> &'static str {
        match self {
            QueryPath::FromScratch => "from_scratch",
            QueryPath::Short => "short",
            QueryPath::Long => "long",
            QueryPath::ShortMirrored => "short_mirrored",
            QueryPath::LongMirrored => "long_mirrored",
        }
    }
}

/// Probe counters for a single query; reset at each query entry.
#[derive(Debug, Clone, Copy, Default)]
pub struct QueryStats {
    /// base LCE queries on the preprocessed texts
    pub lce_calls: u64,
    /// border-link probes spent extending border arrays along `w`
    pub chain_jumps: u64,
    /// rightmost-prefix-occurrence window queries
    pub window_queries: u64,
    /// writes into the shared range scratch (Algorithm 2 iterations)
    pub rstar_writes: u64,
    /// straddling occurrences that passed verification
    pub straddlers_verified: u64,
    /// worst border-chain length spent on one appended character
    pub max_chain_per_char: usize,
    pub path: QueryPath,
}

impl QueryStats {
    pub fn reset(&mut self) {
        *self = QueryStats::default();
    }

    /// Total probes compared against the per-query complexity budget.
    pub fn probes(&self) -> u64 {
        self.lce_calls + self.chain_jumps + self.window_queries
    }
}
