//! The coefficient matrix `Mat1` of a motivic pair.

use serde::Serialize;

use crate::deligne::PairContext;

use super::laurent::{LaurentPoly, VarTable};

/// Slots of the generic variables for ranks `n`, `n'`:
/// `A_{ia}`, then `B_{jb}`, then `Q_t`, then `Q'_u`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarLayout {
    pub n: usize,
    pub np: usize,
}

impl VarLayout {
    pub fn nvars(&self) -> usize {
        self.n * self.n + self.np * self.np + self.n + self.np
    }

    pub fn a(&self, i: usize, a: usize) -> usize {
        (i - 1) * self.n + (a - 1)
    }

    pub fn b(&self, j: usize, b: usize) -> usize {
        self.n * self.n + (j - 1) * self.np + (b - 1)
    }

    pub fn q(&self, t: usize) -> usize {
        self.n * self.n + self.np * self.np + (t - 1)
    }

    pub fn qp(&self, u: usize) -> usize {
        self.n * self.n + self.np * self.np + self.n + (u - 1)
    }

    pub fn table(&self) -> VarTable {
        let mut names = Vec::with_capacity(self.nvars());
        for i in 1..=self.n {
            for a in 1..=self.n {
                names.push(format!("A[{i},{a}]"));
            }
        }
        for j in 1..=self.np {
            for b in 1..=self.np {
                names.push(format!("B[{j},{b}]"));
            }
        }
        names.extend((1..=self.n).map(|t| format!("Q[{t}]")));
        names.extend((1..=self.np).map(|u| format!("Q'[{u}]")));
        VarTable::new(names)
    }

    pub fn var(&self, slot: usize, exp: i32) -> LaurentPoly {
        LaurentPoly::var(self.nvars(), slot, exp)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Column {
    /// `(a,b) ∉ A`: entries `A_{ia} B_{jb}`.
    OutsideA(usize, usize),
    /// `(t,u) ∉ T`: entries `Q_{n+1-t}^{-1} Q'_{n'+1-u}^{-1} A_{i,n+1-t} B_{j,n'+1-u}`.
    OutsideT(usize, usize),
}

#[derive(Clone, Debug)]
pub struct SymMatrix {
    pub layout: VarLayout,
    /// Row `(i,j)` in lexicographic order.
    pub rows: Vec<(usize, usize)>,
    pub columns: Vec<Column>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl SymMatrix {
    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn is_square(&self) -> bool {
        self.entries.iter().all(|r| r.len() == self.nrows())
    }
}

pub fn build_mat1(ctx: &PairContext) -> SymMatrix {
    let (n, np) = (ctx.n(), ctx.np());
    let layout = VarLayout { n, np };
    let rows: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=np).map(move |j| (i, j))).collect();
    let mut columns: Vec<Column> = ctx.a.complement().into_iter().map(|(a, b)| Column::OutsideA(a, b)).collect();
    columns.extend(ctx.t.complement().into_iter().map(|(t, u)| Column::OutsideT(t, u)));

    let entries = rows
        .iter()
        .map(|&(i, j)| {
            columns
                .iter()
                .map(|&col| match col {
                    Column::OutsideA(a, b) => layout.var(layout.a(i, a), 1).mul(&layout.var(layout.b(j, b), 1)),
                    Column::OutsideT(t, u) => {
                        let (tt, uu) = (n + 1 - t, np + 1 - u);
                        layout
                            .var(layout.q(tt), -1)
                            .mul(&layout.var(layout.qp(uu), -1))
                            .mul(&layout.var(layout.a(i, tt), 1))
                            .mul(&layout.var(layout.b(j, uu), 1))
                    }
                })
                .collect()
        })
        .collect();
    SymMatrix { layout, rows, columns, entries }
}
