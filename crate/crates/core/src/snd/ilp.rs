//! The integer program over class counts and a small exact
//! branch-and-bound for it.
//!
//! Per class `i`: `x_i` vertices of `C_i` are chosen; `w_i` says whether the
//! class touches the chosen set (so its unchosen vertices are on the
//! boundary); `y_i` says whether the class is chosen entirely. The two
//! attack rows are switched off by a big-M term unless `w_i = 1, y_i = 0`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

use serde::Serialize;

use super::partition::{ClassKind, SndPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cmp {
    Ge,
    Le,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Var {
    pub name: String,
    pub lo: i64,
    pub hi: i64,
}

/// `Σ coef·var  (>= | <=)  rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub name: String,
    pub terms: Vec<(usize, i64)>,
    pub cmp: Cmp,
    pub rhs: i64,
}

impl Row {
    fn satisfied(&self, values: &[i64]) -> bool {
        let lhs: i64 = self.terms.iter().map(|&(j, a)| a * values[j]).sum();
        match self.cmp {
            Cmp::Ge => lhs >= self.rhs,
            Cmp::Le => lhs <= self.rhs,
        }
    }
}

/// A minimisation model with integer variables and linear rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IlpModel {
    pub vars: Vec<Var>,
    pub rows: Vec<Row>,
    /// Minimised. Coefficients must be non-negative.
    pub objective: Vec<(usize, i64)>,
    /// Branching order over variable indices.
    pub branch_order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IlpSolution {
    pub values: Vec<i64>,
    pub objective: i64,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IlpOutcome {
    Optimal(IlpSolution),
    Infeasible { nodes: u64 },
}

impl IlpOutcome {
    pub fn optimal(self) -> Option<IlpSolution> {
        match self {
            IlpOutcome::Optimal(s) => Some(s),
            IlpOutcome::Infeasible { .. } => None,
        }
    }
}

/// Variable layout of models built by [`build_oa_ilp`]: `x_i`, `w_i`, `y_i`
/// are variables `i`, `k + i`, `2k + i`.
pub fn x_var(_k: usize, i: usize) -> usize {
    i
}

pub fn w_var(k: usize, i: usize) -> usize {
    k + i
}

pub fn y_var(k: usize, i: usize) -> usize {
    2 * k + i
}

pub fn build_oa_ilp(p: &SndPartition) -> IlpModel {
    let k = p.k();
    let n = p.n as i64;
    let big = 2 * n;
    let size = |i: usize| p.classes[i].len() as i64;
    let mut vars = Vec::with_capacity(3 * k);
    for i in 0..k {
        vars.push(Var { name: format!("x{}", i + 1), lo: 0, hi: size(i) });
    }
    for prefix in ["w", "y"] {
        for i in 0..k {
            vars.push(Var { name: format!("{prefix}{}", i + 1), lo: 0, hi: 1 });
        }
    }
    let (x, w, y) = (|i| x_var(k, i), |i| w_var(k, i), |i| y_var(k, i));
    let mut rows = Vec::new();
    for i in 0..k {
        let pos = p.pos_classes(i);
        let neg = p.neg_classes(i);
        let id = i + 1;

        // (2) Σ_{N-} x - Σ_{N+} x - 2|V| w + 2|V| y >= -2|V|
        let mut terms: Vec<(usize, i64)> = neg.iter().map(|&j| (x(j), 1)).collect();
        terms.extend(pos.iter().map(|&j| (x(j), -1)));
        terms.extend([(w(i), -big), (y(i), big)]);
        rows.push(Row { name: format!("hostility_{id}"), terms: merge(terms), cmp: Cmp::Ge, rhs: -big });

        // (3) Σ_{N-} x + Σ_{N+} x - 2|V| w + 2|V| y >= Σ_{N+} |C_j| + 1 - z - 2|V|
        let mut terms: Vec<(usize, i64)> = neg.iter().map(|&j| (x(j), 1)).collect();
        terms.extend(pos.iter().map(|&j| (x(j), 1)));
        terms.extend([(w(i), -big), (y(i), big)]);
        let rhs = pos.iter().map(|&j| size(j)).sum::<i64>() + 1 - p.z(i) - big;
        rows.push(Row { name: format!("superiority_{id}"), terms: merge(terms), cmp: Cmp::Ge, rhs });

        // (4)/(5) Σ_T x <= |V| w <= |V| Σ_T x, T = neighbouring classes
        // (plus i itself for cliques).
        let mut touch: Vec<usize> = (0..k)
            .filter(|&j| j != i && p.inter_sign[i][j].is_some())
            .collect();
        if p.kinds[i] != ClassKind::I {
            touch.push(i);
        }
        let mut terms: Vec<(usize, i64)> = touch.iter().map(|&j| (x(j), 1)).collect();
        terms.push((w(i), -n));
        rows.push(Row { name: format!("touch_lo_{id}"), terms: merge(terms), cmp: Cmp::Le, rhs: 0 });
        let mut terms: Vec<(usize, i64)> = touch.iter().map(|&j| (x(j), -n)).collect();
        terms.push((w(i), n));
        rows.push(Row { name: format!("touch_hi_{id}"), terms: merge(terms), cmp: Cmp::Le, rhs: 0 });

        // (6) |C_i| y <= x and y >= x - |C_i| + 1
        rows.push(Row {
            name: format!("full_lo_{id}"),
            terms: vec![(y(i), size(i)), (x(i), -1)],
            cmp: Cmp::Le,
            rhs: 0,
        });
        rows.push(Row {
            name: format!("full_hi_{id}"),
            terms: vec![(y(i), 1), (x(i), -1)],
            cmp: Cmp::Ge,
            rhs: 1 - size(i),
        });
    }
    // (7) Σ x >= 1
    rows.push(Row {
        name: "nonempty".into(),
        terms: (0..k).map(|i| (x(i), 1)).collect(),
        cmp: Cmp::Ge,
        rhs: 1,
    });

    // Binaries first, classes by decreasing size, then the counts.
    let mut by_size: Vec<usize> = (0..k).collect();
    by_size.sort_by_key(|&i| (Reverse(size(i)), i));
    let mut branch_order = Vec::with_capacity(3 * k);
    for &i in &by_size {
        branch_order.extend([w(i), y(i)]);
    }
    branch_order.extend(by_size.iter().map(|&i| x(i)));

    IlpModel {
        vars,
        rows,
        objective: (0..k).map(|i| (x(i), 1)).collect(),
        branch_order,
    }
}

/// Combines repeated variables in a row.
fn merge(mut terms: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    terms.sort_by_key(|&(j, _)| j);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(terms.len());
    for (j, a) in terms {
        match out.last_mut() {
            Some((lj, la)) if *lj == j => *la += a,
            _ => out.push((j, a)),
        }
    }
    out.retain(|&(_, a)| a != 0);
    out
}

impl IlpModel {
    pub fn is_feasible(&self, values: &[i64]) -> bool {
        values.len() == self.vars.len()
            && self
                .vars
                .iter()
                .zip(values)
                .all(|(v, &x)| v.lo <= x && x <= v.hi)
            && self.rows.iter().all(|r| r.satisfied(values))
    }

    pub fn objective_value(&self, values: &[i64]) -> i64 {
        self.objective.iter().map(|&(j, c)| c * values[j]).sum()
    }

    /// LP-format text of the model (write-only, for inspection).
    pub fn to_lp(&self) -> String {
        let mut s = String::new();
        let expr = |terms: &[(usize, i64)]| {
            let mut e = String::new();
            for (idx, &(j, a)) in terms.iter().enumerate() {
                match (idx, a < 0) {
                    (0, true) => e.push('-'),
                    (0, false) => {}
                    (_, true) => e.push_str(" - "),
                    (_, false) => e.push_str(" + "),
                }
                if a.abs() != 1 {
                    let _ = write!(e, "{} ", a.abs());
                }
                e.push_str(&self.vars[j].name);
            }
            if e.is_empty() {
                e.push('0');
            }
            e
        };
        let _ = writeln!(s, "Minimize\n obj: {}", expr(&self.objective));
        let _ = writeln!(s, "Subject To");
        for r in &self.rows {
            let op = match r.cmp {
                Cmp::Ge => ">=",
                Cmp::Le => "<=",
            };
            let _ = writeln!(s, " {}: {} {op} {}", r.name, expr(&r.terms), r.rhs);
        }
        let _ = writeln!(s, "Bounds");
        for v in &self.vars {
            let _ = writeln!(s, " {} <= {} <= {}", v.lo, v.name, v.hi);
        }
        let generals: Vec<&str> = self.vars.iter().filter(|v| v.hi > 1).map(|v| v.name.as_str()).collect();
        let binaries: Vec<&str> = self.vars.iter().filter(|v| v.hi <= 1).map(|v| v.name.as_str()).collect();
        let _ = writeln!(s, "Generals\n {}", generals.join(" "));
        let _ = writeln!(s, "Binaries\n {}", binaries.join(" "));
        s.push_str("End\n");
        s
    }
}

/// Best-first branch-and-bound. Node bounds come from the objective at the
/// variables' lower bounds after interval propagation over all rows; all
/// arithmetic is exact.
pub fn solve_ilp(model: &IlpModel) -> IlpOutcome {
    let root: Vec<(i64, i64)> = model.vars.iter().map(|v| (v.lo, v.hi)).collect();
    let mut nodes = 0u64;
    let mut heap = BinaryHeap::new();
    let mut store: Vec<Vec<(i64, i64)>> = Vec::new();
    type Heap = BinaryHeap<Reverse<(i64, usize)>>;
    let push = |mut dom: Vec<(i64, i64)>, heap: &mut Heap, store: &mut Vec<Vec<(i64, i64)>>| {
        if propagate(model, &mut dom) {
            let bound = model.objective.iter().map(|&(j, c)| c * dom[j].0).sum();
            heap.push(Reverse((bound, store.len())));
            store.push(dom);
        }
    };
    push(root, &mut heap, &mut store);
    while let Some(Reverse((_, id))) = heap.pop() {
        nodes += 1;
        let dom = std::mem::take(&mut store[id]);
        let next = model
            .branch_order
            .iter()
            .copied()
            .chain(0..model.vars.len())
            .find(|&j| dom[j].0 < dom[j].1);
        let Some(j) = next else {
            let values: Vec<i64> = dom.iter().map(|d| d.0).collect();
            if model.is_feasible(&values) {
                return IlpOutcome::Optimal(IlpSolution {
                    objective: model.objective_value(&values),
                    values,
                    nodes,
                });
            }
            continue;
        };
        let (lo, hi) = dom[j];
        let mut low = dom.clone();
        low[j] = (lo, lo);
        let mut high = dom;
        high[j] = (lo + 1, hi);
        push(low, &mut heap, &mut store);
        push(high, &mut heap, &mut store);
    }
    IlpOutcome::Infeasible { nodes }
}

/// Tightens `dom` to a fixpoint; `false` if some row becomes unsatisfiable.
fn propagate(model: &IlpModel, dom: &mut [(i64, i64)]) -> bool {
    for _ in 0..64 {
        let mut changed = false;
        for r in &model.rows {
            // Normalise to Σ a x >= b.
            let sign = match r.cmp {
                Cmp::Ge => 1,
                Cmp::Le => -1,
            };
            let b = sign * r.rhs;
            let max: i64 = r
                .terms
                .iter()
                .map(|&(j, a)| {
                    let a = sign * a;
                    if a > 0 { a * dom[j].1 } else { a * dom[j].0 }
                })
                .sum();
            if max < b {
                return false;
            }
            for &(j, a) in &r.terms {
                let a = sign * a;
                let (lo, hi) = dom[j];
                // a·x >= b - (max - best contribution of x)
                if a > 0 {
                    let need = b - (max - a * hi);
                    let new_lo = div_ceil(need, a);
                    if new_lo > lo {
                        dom[j].0 = new_lo;
                        changed = true;
                    }
                } else {
                    let need = b - (max - a * lo);
                    let new_hi = div_floor(need, a);
                    if new_hi < hi {
                        dom[j].1 = new_hi;
                        changed = true;
                    }
                }
                if dom[j].0 > dom[j].1 {
                    return false;
                }
            }
        }
        if !changed {
            break;
        }
    }
    true
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_division() {
        assert_eq!(div_floor(7, 2), 3);
        assert_eq!(div_floor(-7, 2), -4);
        assert_eq!(div_floor(7, -2), -4);
        assert_eq!(div_floor(-7, -2), 3);
        assert_eq!(div_ceil(7, 2), 4);
        assert_eq!(div_ceil(-7, 2), -3);
        assert_eq!(div_ceil(-6, -2), 3);
    }

    #[test]
    fn infeasible_model() {
        let model = IlpModel {
            vars: vec![Var { name: "a".into(), lo: 0, hi: 0 }],
            rows: vec![Row { name: "r".into(), terms: vec![(0, 1)], cmp: Cmp::Ge, rhs: 1 }],
            objective: vec![(0, 1)],
            branch_order: vec![0],
        };
        assert!(matches!(solve_ilp(&model), IlpOutcome::Infeasible { .. }));
    }

    #[test]
    fn small_knapsack_like_model() {
        // min a + b  s.t.  2a + 3b >= 7, a,b in [0,5]  → a=2,b=1 (3)
        let model = IlpModel {
            vars: vec![
                Var { name: "a".into(), lo: 0, hi: 5 },
                Var { name: "b".into(), lo: 0, hi: 5 },
            ],
            rows: vec![Row { name: "r".into(), terms: vec![(0, 2), (1, 3)], cmp: Cmp::Ge, rhs: 7 }],
            objective: vec![(0, 1), (1, 1)],
            branch_order: vec![0, 1],
        };
        let s = solve_ilp(&model).optimal().unwrap();
        assert_eq!(s.objective, 3);
        assert!(model.is_feasible(&s.values));
    }
}
