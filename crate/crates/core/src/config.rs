/// Size limits for the enumeration-based algorithms.
///
/// Every operation that enumerates a group checks the relevant cap before
/// allocating; the defaults keep the desk-scale instances comfortably inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements produced by a closure.
    pub closure: usize,
    /// Maximum group order for normal-subgroup and composition-series work.
    pub normal: usize,
    /// Maximum group order for automorphism enumeration.
    pub automorphisms: usize,
    /// Maximum source order for homomorphism enumeration.
    pub oracle_source: usize,
    /// Maximum target order for homomorphism enumeration.
    pub oracle_target: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: 1_000_000,
            normal: 100_000,
            automorphisms: 1_000,
            oracle_source: 1_000,
            oracle_target: 10_000,
        }
    }
}

impl Caps {
    /// Caps used by the reproduction suite: the degree-9 instances need a
    /// simplicity certificate for A_9 (order 181440).
    pub fn reproduction() -> Self {
        Caps {
            normal: 200_000,
            ..Caps::default()
        }
    }

    pub fn with_normal(mut self, cap: usize) -> Self {
        self.normal = cap;
        self
    }

    pub fn with_automorphisms(mut self, cap: usize) -> Self {
        self.automorphisms = cap;
        self
    }

    pub fn with_closure(mut self, cap: usize) -> Self {
        self.closure = cap;
        self
    }
}
