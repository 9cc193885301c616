//! Motive tags: a base label plus the functors applied to it.
//!
//! Period symbols are indexed by tags, so a tag must remember how a motive
//! was built (`M^c`, `M^v(1-n)`, `det(M)`, ...). Decorations are stored
//! literally, innermost first. Motive functors use the `*_canonical`
//! helpers, which cancel `c∘c` and `v∘v` and merge adjacent twists.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Decoration {
    /// Realization at the conjugate embedding, `M^c`.
    Conj,
    /// Dual motive, `M^v`.
    Dual,
    /// Tate twist `M(k)`.
    Twist(i64),
    /// Determinant motive `det(M)`.
    Det,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tag {
    base: String,
    decorations: Vec<Decoration>,
    base_rank: Option<usize>,
    /// Conjugate self-dual: `M^c ≅ M^v(1-n)`.
    csd: bool,
    /// The unit motive `Z_K`, whose determinant period is rational.
    unit: bool,
}

impl Tag {
    pub fn new(base: impl Into<String>, rank: usize) -> Self {
        Tag {
            base: base.into(),
            decorations: Vec::new(),
            base_rank: Some(rank),
            csd: false,
            unit: false,
        }
    }

    /// A tag whose rank is not recorded. Rules that need `n` fail on it.
    pub fn unranked(base: impl Into<String>) -> Self {
        Tag {
            base: base.into(),
            decorations: Vec::new(),
            base_rank: None,
            csd: false,
            unit: false,
        }
    }

    /// `Z_K`, rank one.
    pub fn unit() -> Self {
        Tag { unit: true, ..Tag::new("Z", 1) }
    }

    pub fn conjugate_self_dual(mut self, flag: bool) -> Self {
        self.csd = flag;
        self
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn decorations(&self) -> &[Decoration] {
        &self.decorations
    }

    pub fn is_csd(&self) -> bool {
        self.csd
    }

    pub fn is_unit(&self) -> bool {
        self.unit && self.decorations.is_empty()
    }

    pub fn rank(&self) -> Option<usize> {
        let mut rank = self.base_rank?;
        for d in &self.decorations {
            if *d == Decoration::Det {
                rank = 1;
            }
        }
        Some(rank)
    }

    /// Literal push.
    pub fn with(&self, d: Decoration) -> Tag {
        let mut t = self.clone();
        t.decorations.push(d);
        t
    }

    pub fn conj(&self) -> Tag {
        self.with(Decoration::Conj)
    }

    pub fn dual(&self) -> Tag {
        self.with(Decoration::Dual)
    }

    pub fn twist(&self, k: i64) -> Tag {
        self.with(Decoration::Twist(k))
    }

    pub fn det(&self) -> Tag {
        self.with(Decoration::Det)
    }

    /// The outermost decoration and the tag underneath it.
    pub fn peel(&self) -> Option<(Decoration, Tag)> {
        let (last, rest) = self.decorations.split_last()?;
        let mut inner = self.clone();
        inner.decorations = rest.to_vec();
        Some((*last, inner))
    }

    pub(crate) fn conj_canonical(&self) -> Tag {
        self.toggle(Decoration::Conj)
    }

    pub(crate) fn dual_canonical(&self) -> Tag {
        self.toggle(Decoration::Dual)
    }

    pub(crate) fn twist_canonical(&self, k: i64) -> Tag {
        let mut t = self.clone();
        let prev = match t.decorations.last() {
            Some(Decoration::Twist(j)) => {
                let j = *j;
                t.decorations.pop();
                j
            }
            _ => 0,
        };
        if prev + k != 0 {
            t.decorations.push(Decoration::Twist(prev + k));
        }
        t
    }

    fn toggle(&self, d: Decoration) -> Tag {
        let mut t = self.clone();
        if t.decorations.last() == Some(&d) {
            t.decorations.pop();
        } else {
            t.decorations.push(d);
        }
        t
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = self.base.clone();
        for d in &self.decorations {
            s = match d {
                Decoration::Conj => format!("{s}^c"),
                Decoration::Dual => format!("{s}^v"),
                Decoration::Twist(k) => format!("{s}({k})"),
                Decoration::Det => format!("det({s})"),
            };
        }
        f.write_str(&s)
    }
}
