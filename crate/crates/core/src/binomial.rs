//! Binomial arithmetic: monomial orders, S-pairs, normal form, and a
//! Buchberger completion restricted to binomial ideals.
//!
//! A binomial here is a difference of two monomials with coefficients +1
//! and -1; reducing a binomial by binomials yields another such difference
//! or zero, so the whole engine works on pairs of exponent vectors and no
//! field arithmetic beyond signs ever appears. Global sign is quotiented
//! out: inside the engine a binomial is stored with its leading monomial
//! on the `plus` side of the active order.

use serde::Serialize;
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("exponent vectors have lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("grading weights must be positive")]
    ZeroWeight,
    #[error("exponent overflow during reduction")]
    ExponentOverflow,
    #[error("budget exceeded: {0}")]
    Budget(String),
}

/// `t^plus - t^minus`, not the zero polynomial. Binomials built from
/// cycles additionally have disjoint supports; intermediate values inside
/// the engine need not.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
}

impl Binomial {
    /// `None` when the two sides are equal (the zero polynomial).
    pub fn new(plus: Vec<u32>, minus: Vec<u32>) -> Option<Binomial> {
        assert_eq!(plus.len(), minus.len());
        if plus == minus {
            None
        } else {
            Some(Binomial { plus, minus })
        }
    }

    /// Square-free binomial from two index sets (each exponent 1).
    pub fn from_supports(num_vars: usize, plus: &[usize], minus: &[usize]) -> Binomial {
        let mut p = vec![0u32; num_vars];
        let mut m = vec![0u32; num_vars];
        for &i in plus {
            p[i] += 1;
        }
        for &i in minus {
            m[i] += 1;
        }
        Binomial::new(p, m).expect("sides differ")
    }

    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    pub fn has_disjoint_support(&self) -> bool {
        self.plus
            .iter()
            .zip(&self.minus)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.plus.iter().chain(&self.minus).all(|&e| e <= 1)
    }

    /// Indices occurring on either side.
    pub fn support_union(&self) -> Vec<usize> {
        (0..self.num_vars())
            .filter(|&i| self.plus[i] > 0 || self.minus[i] > 0)
            .collect()
    }

    pub fn degrees(&self) -> (u64, u64) {
        let d = |v: &[u32]| v.iter().map(|&e| e as u64).sum();
        (d(&self.plus), d(&self.minus))
    }

    /// Copy with the leading monomial under `order` on the `plus` side.
    pub fn oriented(&self, order: &MonomialOrder) -> Result<Binomial, AlgebraError> {
        match order.compare(&self.plus, &self.minus)? {
            Ordering::Less => Ok(Binomial {
                plus: self.minus.clone(),
                minus: self.plus.clone(),
            }),
            _ => Ok(self.clone()),
        }
    }

    /// Edge indices with multiplicity, for JSON output.
    pub fn support_with_multiplicity(side: &[u32]) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &e) in side.iter().enumerate() {
            for _ in 0..e {
                out.push(i);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrderKind {
    Lex,
    GradedLex,
    GradedRevLex,
}

/// A monomial well-order: lex, graded lex, or graded reverse lex over a
/// variable priority permutation, with optional positive weights feeding
/// the graded kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// `permutation[0]` is the highest-ranked variable index.
    pub permutation: Vec<usize>,
    pub weights: Option<Vec<u64>>,
}

impl MonomialOrder {
    pub fn lex(permutation: Vec<usize>) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            permutation,
            weights: None,
        }
    }

    pub fn graded_lex(permutation: Vec<usize>) -> Self {
        MonomialOrder {
            kind: OrderKind::GradedLex,
            permutation,
            weights: None,
        }
    }

    pub fn graded_revlex(permutation: Vec<usize>) -> Self {
        MonomialOrder {
            kind: OrderKind::GradedRevLex,
            permutation,
            weights: None,
        }
    }

    pub fn with_weights(mut self, weights: Vec<u64>) -> Result<Self, AlgebraError> {
        if weights.contains(&0) {
            return Err(AlgebraError::ZeroWeight);
        }
        self.weights = Some(weights);
        Ok(self)
    }

    /// Identity-permutation lex order on `n` variables (t1 highest).
    pub fn default_lex(n: usize) -> Self {
        MonomialOrder::lex((0..n).collect())
    }

    fn weighted_degree(&self, a: &[u32]) -> u64 {
        match &self.weights {
            Some(w) => a.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum(),
            None => a.iter().map(|&e| e as u64).sum(),
        }
    }

    /// Total-order comparison of two exponent vectors.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Result<Ordering, AlgebraError> {
        if a.len() != b.len() {
            return Err(AlgebraError::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        debug_assert_eq!(a.len(), self.permutation.len());
        match self.kind {
            OrderKind::Lex => Ok(self.lex_cmp(a, b)),
            OrderKind::GradedLex => Ok(
                match self.weighted_degree(a).cmp(&self.weighted_degree(b)) {
                    Ordering::Equal => self.lex_cmp(a, b),
                    ord => ord,
                },
            ),
            OrderKind::GradedRevLex => {
                Ok(
                    match self.weighted_degree(a).cmp(&self.weighted_degree(b)) {
                        Ordering::Equal => {
                            // last differing variable, reversed comparison
                            for &var in self.permutation.iter().rev() {
                                match a[var].cmp(&b[var]) {
                                    Ordering::Equal => continue,
                                    Ordering::Less => return Ok(Ordering::Greater),
                                    Ordering::Greater => return Ok(Ordering::Less),
                                }
                            }
                            Ordering::Equal
                        }
                        ord => ord,
                    },
                )
            }
        }
    }

    fn lex_cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &var in &self.permutation {
            match a[var].cmp(&b[var]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Caps for the completion and reduction loops. Exceeding one is a
/// distinct error, never a silently wrong answer.
#[derive(Debug, Clone, Copy)]
pub struct EngineLimits {
    pub max_reduction_steps: u64,
    pub max_pairs: u64,
    pub max_basis: usize,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            max_reduction_steps: 10_000_000,
            max_pairs: 1_000_000,
            max_basis: 100_000,
        }
    }
}

fn divides(div: &[u32], m: &[u32]) -> bool {
    div.iter().zip(m).all(|(&d, &e)| d <= e)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

/// m - lead(g) + trail(g), the monomial rewrite step of binomial reduction.
fn rewrite(m: &[u32], g: &Binomial) -> Result<Vec<u32>, AlgebraError> {
    m.iter()
        .zip(&g.plus)
        .zip(&g.minus)
        .map(|((&e, &l), &t)| (e - l).checked_add(t).ok_or(AlgebraError::ExponentOverflow))
        .collect()
}

/// S-polynomial of two binomials; for binomials it is again a binomial,
/// or `None` when it cancels to zero outright.
pub fn s_binomial(
    f: &Binomial,
    g: &Binomial,
    order: &MonomialOrder,
) -> Result<Option<Binomial>, AlgebraError> {
    let f = f.oriented(order)?;
    let g = g.oriented(order)?;
    let lcm: Vec<u32> = f
        .plus
        .iter()
        .zip(&g.plus)
        .map(|(&a, &b)| a.max(b))
        .collect();
    // t^(lcm-a) f - t^(lcm-c) g = t^(lcm-c+d) - t^(lcm-a+b)
    let left: Vec<u32> = lcm
        .iter()
        .zip(&g.plus)
        .zip(&g.minus)
        .map(|((&l, &c), &d)| (l - c).checked_add(d).ok_or(AlgebraError::ExponentOverflow))
        .collect::<Result<_, _>>()?;
    let right: Vec<u32> = lcm
        .iter()
        .zip(&f.plus)
        .zip(&f.minus)
        .map(|((&l, &a), &b)| (l - a).checked_add(b).ok_or(AlgebraError::ExponentOverflow))
        .collect::<Result<_, _>>()?;
    Ok(Binomial::new(left, right))
}

/// Full normal form by the division algorithm: reduce the larger monomial
/// until irreducible, then the smaller one. `Ok(None)` means the remainder
/// is zero. Reduction always picks the first applicable basis element, so
/// the result is deterministic.
pub fn normal_form(
    f: &Binomial,
    basis: &[Binomial],
    order: &MonomialOrder,
    limits: &EngineLimits,
) -> Result<Option<Binomial>, AlgebraError> {
    // rewriting must replace a monomial by a smaller one, so the divisors
    // are re-oriented under the active order before use
    let basis: Vec<Binomial> = basis
        .iter()
        .map(|g| g.oriented(order))
        .collect::<Result<_, _>>()?;
    let oriented = f.oriented(order)?;
    let mut lead = oriented.plus;
    let mut tail = oriented.minus;
    if lead == tail {
        return Ok(None);
    }
    let mut steps = 0u64;
    let spend = |steps: &mut u64| -> Result<(), AlgebraError> {
        *steps += 1;
        if *steps > limits.max_reduction_steps {
            Err(AlgebraError::Budget(format!(
                "normal form exceeded {} reduction steps",
                limits.max_reduction_steps
            )))
        } else {
            Ok(())
        }
    };
    let reducer = |m: &[u32]| basis.iter().find(|g| divides(&g.plus, m));
    // top reduction; a rewrite can push the lead below the tail, in which
    // case the roles swap (global sign is quotiented out)
    while let Some(g) = reducer(&lead) {
        spend(&mut steps)?;
        lead = rewrite(&lead, g)?;
        match order.compare(&lead, &tail)? {
            Ordering::Equal => return Ok(None),
            Ordering::Less => std::mem::swap(&mut lead, &mut tail),
            Ordering::Greater => {}
        }
    }
    // the lead is now irreducible and frozen; tail rewrites strictly
    // decrease, so the two sides can no longer meet
    while let Some(g) = reducer(&tail) {
        spend(&mut steps)?;
        tail = rewrite(&tail, g)?;
    }
    debug_assert_eq!(order.compare(&lead, &tail), Ok(Ordering::Greater));
    Ok(Binomial::new(lead, tail))
}

/// Binomials whose S-pairs all reduce to zero within the set, stored with
/// leading sides first under `order`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub elements: Vec<Binomial>,
    pub order: MonomialOrder,
    /// Tails fully reduced against the other elements.
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn normal_form(
        &self,
        f: &Binomial,
        limits: &EngineLimits,
    ) -> Result<Option<Binomial>, AlgebraError> {
        normal_form(f, &self.elements, &self.order, limits)
    }
}

/// Buchberger completion with the coprimality criterion as the only
/// pruning. Pairwise coprime leading terms therefore come back unchanged.
/// The returned basis is lead-minimal: no element's leading term divides
/// another's.
pub fn buchberger(
    generators: &[Binomial],
    order: &MonomialOrder,
    limits: &EngineLimits,
) -> Result<GroebnerBasis, AlgebraError> {
    let mut elements: Vec<Binomial> = Vec::new();
    for g in generators {
        elements.push(g.oriented(order)?);
    }
    let mut pairs: std::collections::VecDeque<(usize, usize)> = (0..elements.len())
        .flat_map(|i| (i + 1..elements.len()).map(move |j| (i, j)))
        .collect();
    let mut processed = 0u64;
    while let Some((i, j)) = pairs.pop_front() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(AlgebraError::Budget(format!(
                "buchberger exceeded {} pairs",
                limits.max_pairs
            )));
        }
        if coprime(&elements[i].plus, &elements[j].plus) {
            continue; // product criterion
        }
        let Some(s) = s_binomial(&elements[i], &elements[j], order)? else {
            continue;
        };
        if let Some(nf) = normal_form(&s, &elements, order, limits)? {
            let new_index = elements.len();
            if new_index >= limits.max_basis {
                return Err(AlgebraError::Budget(format!(
                    "buchberger exceeded {} basis elements",
                    limits.max_basis
                )));
            }
            pairs.extend((0..new_index).map(|i| (i, new_index)));
            elements.push(nf);
        }
    }
    // Lead-minimalization: drop elements whose lead is divisible by the
    // lead of an earlier survivor (or a strictly-dividing later one).
    let mut keep = vec![true; elements.len()];
    for i in 0..elements.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..elements.len() {
            if i == j || !keep[j] {
                continue;
            }
            if divides(&elements[j].plus, &elements[i].plus)
                && (elements[j].plus != elements[i].plus || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let elements: Vec<Binomial> = elements
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();
    Ok(GroebnerBasis {
        elements,
        order: order.clone(),
        reduced: false,
    })
}

/// Tail-reduce each element against the others, yielding the reduced basis.
pub fn inter_reduce(
    gb: &GroebnerBasis,
    limits: &EngineLimits,
) -> Result<GroebnerBasis, AlgebraError> {
    let mut elements = Vec::with_capacity(gb.elements.len());
    for (i, e) in gb.elements.iter().enumerate() {
        let others: Vec<Binomial> = gb
            .elements
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        // a None remainder marks a redundant element; drop it
        if let Some(r) = normal_form(e, &others, &gb.order, limits)? {
            elements.push(r);
        }
    }
    Ok(GroebnerBasis {
        elements,
        order: gb.order.clone(),
        reduced: true,
    })
}

/// Integer kernel membership: rows . (plus - minus) == 0.
pub fn kernel_member(rows: &[Vec<i64>], b: &Binomial) -> Result<bool, AlgebraError> {
    for row in rows {
        if row.len() != b.num_vars() {
            return Err(AlgebraError::LengthMismatch {
                left: row.len(),
                right: b.num_vars(),
            });
        }
        let dot: i64 = row
            .iter()
            .zip(b.plus.iter().zip(&b.minus))
            .map(|(&a, (&p, &m))| a * (p as i64 - m as i64))
            .sum();
        if dot != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
