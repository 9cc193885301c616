//! Sparse multivariate Laurent polynomials with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

/// Names of the variables, by slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new(names: Vec<String>) -> Self {
        VarTable { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, slot: usize) -> &str {
        &self.names[slot]
    }

    pub fn slot(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// `Σ c · x^e` over `e ∈ Z^nvars`. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i128>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i128) -> Self {
        Self::monomial(nvars, c, vec![0; nvars])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// `x_slot^exp`.
    pub fn var(nvars: usize, slot: usize, exp: i32) -> Self {
        let mut e = vec![0; nvars];
        e[slot] = exp;
        Self::monomial(nvars, 1, e)
    }

    pub fn monomial(nvars: usize, c: i128, exps: Vec<i32>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector has the wrong length");
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], i128)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    /// The coefficient and exponent if `self` is a single term.
    pub fn as_monomial(&self) -> Option<(i128, &[i32])> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(e, &c)| (c, e.as_slice())),
            _ => None,
        }
    }

    fn accumulate(terms: &mut BTreeMap<Vec<i32>, i128>, e: Vec<i32>, c: i128) {
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).expect("coefficient overflow");
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (e, &c) in &other.terms {
            Self::accumulate(&mut terms, e.clone(), c);
        }
        LaurentPoly { nvars: self.nvars, terms }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i128) -> Self {
        if k == 0 {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| (e.clone(), c.checked_mul(k).expect("coefficient overflow")))
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = BTreeMap::new();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                Self::accumulate(&mut terms, e, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        LaurentPoly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Inverse of a single term with coefficient `±1`.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        (c == 1 || c == -1).then(|| Self::monomial(self.nvars, c, e.iter().map(|x| -x).collect()))
    }

    pub fn display<'a>(&'a self, vars: &'a VarTable) -> impl fmt::Display + 'a {
        Shown { poly: self, vars }
    }
}

struct Shown<'a> {
    poly: &'a LaurentPoly,
    vars: &'a VarTable,
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.poly.terms().enumerate() {
            let mut body = String::new();
            for (slot, &x) in e.iter().enumerate().filter(|(_, x)| **x != 0) {
                if !body.is_empty() {
                    body.push('*');
                }
                body.push_str(self.vars.name(slot));
                if x != 1 {
                    write!(body, "^{x}")?;
                }
            }
            let sign = match (k, c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let abs = c.unsigned_abs();
            match (body.is_empty(), abs) {
                (true, _) => write!(f, "{sign}{abs}")?,
                (false, 1) => write!(f, "{sign}{body}")?,
                (false, _) => write!(f, "{sign}{abs}*{body}")?,
            }
        }
        Ok(())
    }
}
