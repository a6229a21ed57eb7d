use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Graph;
use crate::partition::Partition;

/// How instances are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Every labeled graph on `n` vertices.
    ExhaustiveLabeled,
    /// Every labeled graph whose edges run between the given parts.
    ExhaustiveSpartite,
    /// Inter-part edges drawn independently with probability `p`.
    RandomSpartite,
    /// Erdős–Rényi `G(n, p)`.
    RandomGnp,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::ExhaustiveLabeled, Mode::ExhaustiveSpartite, Mode::RandomSpartite, Mode::RandomGnp];

    pub fn label(self) -> &'static str {
        match self {
            Mode::ExhaustiveLabeled => "exhaustive-labeled",
            Mode::ExhaustiveSpartite => "exhaustive-spartite",
            Mode::RandomSpartite => "random-spartite",
            Mode::RandomGnp => "random-gnp",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Mode::ALL.into_iter().find(|m| m.label() == label)
    }

    pub fn is_exhaustive(self) -> bool {
        matches!(self, Mode::ExhaustiveLabeled | Mode::ExhaustiveSpartite)
    }

    pub fn is_spartite(self) -> bool {
        matches!(self, Mode::ExhaustiveSpartite | Mode::RandomSpartite)
    }
}

/// A validated description of an instance stream.
///
/// Instance `i` depends only on the configuration and `i`: exhaustive modes
/// read the edge set off the bits of `i`, random modes seed a ChaCha8 stream
/// with `seed` and select stream `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    mode: Mode,
    n: usize,
    s: Option<usize>,
    parts: Vec<usize>,
    p: f64,
    seed: u64,
    count: u64,
    pairs: Vec<(usize, usize)>,
}

/// Unvalidated fields of a [`GeneratorConfig`], as read from a command line.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConfigRequest {
    pub n: Option<usize>,
    pub s: Option<usize>,
    pub parts: Vec<usize>,
    pub p: Option<f64>,
    pub seed: u64,
    /// Exhaustive modes default to every instance; random modes require it.
    pub count: Option<u64>,
}

const MAX_EXHAUSTIVE_PAIRS: usize = 63;

impl GeneratorConfig {
    pub fn new(mode: Mode, request: ConfigRequest) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidConfig(msg));
        let n = if mode.is_spartite() {
            if request.parts.is_empty() || request.parts.contains(&0) {
                return invalid("part sizes must be given and positive".into());
            }
            let total: usize = request.parts.iter().sum();
            if request.n.is_some_and(|n| n != total) {
                return invalid(format!("n = {} but part sizes sum to {total}", request.n.unwrap_or(0)));
            }
            if request.s.is_some_and(|s| s != request.parts.len()) {
                return invalid(format!("s = {} but {} part sizes given", request.s.unwrap_or(0), request.parts.len()));
            }
            total
        } else {
            if !request.parts.is_empty() {
                return invalid(format!("mode {} takes no part sizes", mode.label()));
            }
            match request.n {
                Some(n) => n,
                None => return invalid("n is required".into()),
            }
        };
        if n == 0 {
            return invalid("n must be positive".into());
        }
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let s = if mode.is_spartite() { Some(request.parts.len()) } else { request.s };
        if s.is_some_and(|s| s == 0 || s > n) {
            return invalid(format!("s must lie in 1..={n}"));
        }
        let p = match (mode, request.p) {
            (Mode::RandomSpartite | Mode::RandomGnp, Some(p)) if (0.0..=1.0).contains(&p) => p,
            (Mode::RandomSpartite | Mode::RandomGnp, Some(p)) => return invalid(format!("p = {p} is not a probability")),
            (Mode::RandomSpartite | Mode::RandomGnp, None) => 0.5,
            (_, Some(_)) => return invalid(format!("mode {} takes no edge probability", mode.label())),
            (_, None) => 0.0,
        };

        let pairs = candidate_pairs(n, mode.is_spartite().then_some(request.parts.as_slice()));
        let count = if mode.is_exhaustive() {
            if pairs.len() > MAX_EXHAUSTIVE_PAIRS {
                return Err(Error::SizeLimit { n: pairs.len(), limit: MAX_EXHAUSTIVE_PAIRS });
            }
            let total = 1u64 << pairs.len();
            request.count.map_or(total, |c| c.min(total))
        } else {
            match request.count {
                Some(c) => c,
                None => return invalid(format!("mode {} requires a count", mode.label())),
            }
        };
        Ok(GeneratorConfig { mode, n, s, parts: request.parts, p, seed: request.seed, count, pairs })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The part count: fixed by the part sizes in `s`-partite modes, optional otherwise.
    pub fn s(&self) -> Option<usize> {
        self.s
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// The consecutive-block partition the instances are drawn against, in
    /// `s`-partite modes.
    pub fn generating_partition(&self) -> Option<Partition> {
        self.mode.is_spartite().then(|| Partition::from_sizes(&self.parts).expect("validated part sizes"))
    }

    /// Instance `index` of the stream.
    pub fn instance(&self, index: u64) -> Result<Graph> {
        if index >= self.count {
            return Err(Error::IndexOutOfRange { index: index as usize, len: self.count as usize });
        }
        let mut g = Graph::empty(self.n)?;
        if self.mode.is_exhaustive() {
            for (k, &(u, v)) in self.pairs.iter().enumerate() {
                if (index >> k) & 1 == 1 {
                    g.add_edge(u, v)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            rng.set_stream(index);
            for &(u, v) in &self.pairs {
                if rng.gen_bool(self.p) {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }
}

/// Vertex pairs that may carry an edge, in lexicographic order.
fn candidate_pairs(n: usize, parts: Option<&[usize]>) -> Vec<(usize, usize)> {
    let mut part_of = vec![0usize; n];
    if let Some(sizes) = parts {
        let mut v = 0;
        for (i, &size) in sizes.iter().enumerate() {
            for _ in 0..size {
                part_of[v] = i;
                v += 1;
            }
        }
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if parts.is_none() || part_of[u] != part_of[v] {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// The whole stream, in index order.
pub fn generate(config: &GeneratorConfig) -> impl Iterator<Item = Graph> + '_ {
    (0..config.count).map(move |i| config.instance(i).expect("index below count"))
}
