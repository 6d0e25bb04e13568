//! The hook-symbol calculus: channels, channel factors, rules, closed-form
//! rules (Pieri, maximal filling, rectangular, rectangular union), the
//! balanced one-term search, k-vectors with their identities, the
//! six-parameter family, and the embedded solution tables.

pub mod sixparam;
pub mod tables;

use crate::exactalg::{AlphaPoly, AlphaRat};
use crate::jack::{JackError, SymbolicCtx};
use crate::shapes::{
    hook_len, is_maximal_filling, lr_tableaux, row_col_maxima, Cell, Hook, Partition, ShapeError,
};
use crate::windows::{window_factor, Window, WindowedPartition};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleError(pub String);

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for RuleError {}

impl From<ShapeError> for RuleError {
    fn from(e: ShapeError) -> Self {
        RuleError(e.0)
    }
}

impl From<JackError> for RuleError {
    fn from(e: JackError) -> Self {
        RuleError(e.to_string())
    }
}

/// An assignment of a hook symbol to every box of mu, nu and lam.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Channel {
    pub mu: BTreeMap<Cell, Hook>,
    pub nu: BTreeMap<Cell, Hook>,
    pub lam: BTreeMap<Cell, Hook>,
}

impl Channel {
    pub fn total(mu: &Partition, nu: &Partition, lam: &Partition, choice: Hook) -> Channel {
        let fill = |p: &Partition| p.cells().map(|b| (b, choice)).collect();
        Channel {
            mu: fill(mu),
            nu: fill(nu),
            lam: fill(lam),
        }
    }

    fn assert_total(&self, mu: &Partition, nu: &Partition, lam: &Partition) -> Result<(), RuleError> {
        let check = |p: &Partition, m: &BTreeMap<Cell, Hook>, name: &str| {
            if p.cells().all(|b| m.contains_key(&b)) && m.len() == p.size() {
                Ok(())
            } else {
                Err(RuleError(format!("partial assignment on {name}")))
            }
        };
        check(mu, &self.mu, "mu")?;
        check(nu, &self.nu, "nu")?;
        check(lam, &self.lam, "lam")
    }

    /// Flip every assignment.
    pub fn conjugate(&self) -> Channel {
        let flip = |m: &BTreeMap<Cell, Hook>| m.iter().map(|(&b, &h)| (b, h.flip())).collect();
        Channel {
            mu: flip(&self.mu),
            nu: flip(&self.nu),
            lam: flip(&self.lam),
        }
    }

    /// Transpose all three assignments onto the conjugate shapes.
    pub fn transpose(&self) -> Channel {
        let t = |m: &BTreeMap<Cell, Hook>| {
            m.iter()
                .map(|(&b, &h)| (Cell::new(b.row, b.col), h))
                .collect()
        };
        Channel {
            mu: t(&self.mu),
            nu: t(&self.nu),
            lam: t(&self.lam),
        }
    }
}

/// The channel factor: numerator hooks over mu and nu, denominator hooks over
/// lam, per the assignment.
pub fn channel_eval(
    phi: &Channel,
    mu: &Partition,
    nu: &Partition,
    lam: &Partition,
) -> Result<AlphaRat, RuleError> {
    phi.assert_total(mu, nu, lam)?;
    let mut num = AlphaPoly::one();
    for (&b, &h) in &phi.mu {
        num = &num * &hook_len(mu, b, h)?;
    }
    for (&b, &h) in &phi.nu {
        num = &num * &hook_len(nu, b, h)?;
    }
    let mut den = AlphaPoly::one();
    for (&b, &h) in &phi.lam {
        den = &den * &hook_len(lam, b, h)?;
    }
    Ok(AlphaRat::reduce(num, den).expect("hook product denominators are nonzero"))
}

/// A polynomial-weighted linear combination of channels.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub terms: Vec<(Channel, AlphaPoly)>,
}

impl Rule {
    pub fn one_term(phi: Channel) -> Rule {
        Rule {
            terms: vec![(phi, AlphaPoly::one())],
        }
    }

    pub fn eval(
        &self,
        mu: &Partition,
        nu: &Partition,
        lam: &Partition,
    ) -> Result<AlphaRat, RuleError> {
        let mut acc = AlphaRat::zero();
        for (phi, c) in &self.terms {
            let g = channel_eval(phi, mu, nu, lam)?;
            acc = &acc + &(&g * &AlphaRat::from_poly(c.clone()));
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// Pieri
// ---------------------------------------------------------------------------

/// True iff `lam/mu` is a horizontal strip of size r.
pub fn is_horizontal_strip(mu: &Partition, r: usize, lam: &Partition) -> bool {
    if !lam.contains(mu) || lam.size() != mu.size() + r {
        return false;
    }
    (0..lam.len()).all(|i| mu.part(i) >= lam.part(i + 1))
}

/// One-term rule for a horizontal r-strip: lower hooks on boxes whose column
/// misses the strip, upper hooks elsewhere, all-upper on the added row.
pub fn pieri_rule(mu: &Partition, r: usize, lam: &Partition) -> Result<Rule, RuleError> {
    if !is_horizontal_strip(mu, r, lam) {
        return Err(RuleError(format!("{lam}/{mu} is not a horizontal {r}-strip")));
    }
    let strip_cols: Vec<bool> = {
        let mut v = vec![false; lam.first_part()];
        for b in lam.skew_cells(mu) {
            v[b.col] = true;
        }
        v
    };
    let assign = |p: &Partition| -> BTreeMap<Cell, Hook> {
        p.cells()
            .map(|b| (b, if strip_cols[b.col] { Hook::U } else { Hook::L }))
            .collect()
    };
    let nu = Partition::new(if r > 0 { vec![r] } else { vec![] });
    let phi = Channel {
        mu: assign(mu),
        nu: nu.cells().map(|b| (b, Hook::U)).collect(),
        lam: assign(lam),
    };
    Ok(Rule::one_term(phi))
}

// ---------------------------------------------------------------------------
// Maximal filling
// ---------------------------------------------------------------------------

/// One-term rule for the unique maximal-filling tableau case. Upper hooks go
/// where the row maximum at the shifted box stays at or below the column
/// maximum (and the column is nonempty), lower hooks elsewhere; the nu boxes
/// are all upper.
pub fn maximal_filling_rule(
    mu: &Partition,
    nu: &Partition,
    lam: &Partition,
) -> Result<Rule, RuleError> {
    let ts = lr_tableaux(lam, mu, nu);
    if ts.len() != 1 {
        return Err(RuleError(format!(
            "maximal filling rule needs a unique tableau, found {}",
            ts.len()
        )));
    }
    let t = &ts[0];
    if !is_maximal_filling(t) {
        return Err(RuleError("tableau lacks the maximal filling property".into()));
    }
    let (rmax, cmax) = row_col_maxima(t);
    let r_at = |row: usize| rmax.get(row).copied().unwrap_or(0);
    // choice at a lam box
    let lam_choice = |b: Cell| -> Hook {
        let cj = cmax[b.col];
        if cj > 0 && r_at(b.row) <= cj {
            Hook::U
        } else {
            Hook::L
        }
    };
    let lam_assign: BTreeMap<Cell, Hook> = lam.cells().map(|b| (b, lam_choice(b))).collect();
    // choice at a mu box is transported from the shifted box (col, row + cmax[col])
    let mu_assign: BTreeMap<Cell, Hook> = mu
        .cells()
        .map(|b| {
            let shifted = Cell::new(b.col, b.row + cmax[b.col]);
            (b, lam_choice(shifted))
        })
        .collect();
    let phi = Channel {
        mu: mu_assign,
        nu: nu.cells().map(|b| (b, Hook::U)).collect(),
        lam: lam_assign,
    };
    Ok(Rule::one_term(phi))
}

// ---------------------------------------------------------------------------
// Rectangular and rectangular union
// ---------------------------------------------------------------------------

/// One-term rule for g_{mu, mu-bar}^{m^n} with mu-bar the reversed complement:
/// all lower hooks on mu, all upper on mu-bar, and on the rectangle a lower
/// hook exactly when the 180-degree rotated box lies in mu.
pub fn rectangular_rule(mu: &Partition, m: usize, n: usize) -> Result<Rule, RuleError> {
    let rect = Partition::rect(m, n);
    if !rect.contains(mu) {
        return Err(RuleError(format!("{mu} does not fit inside {m}^{n}")));
    }
    let bar = mu.rect_complement(m, n);
    let lam_assign: BTreeMap<Cell, Hook> = rect
        .cells()
        .map(|b| {
            let mirrored = Cell::new(b.col, n - 1 - b.row);
            let h = if mu.contains_cell(mirrored) {
                Hook::L
            } else {
                Hook::U
            };
            (b, h)
        })
        .collect();
    let phi = Channel {
        mu: mu.cells().map(|b| (b, Hook::L)).collect(),
        nu: bar.cells().map(|b| (b, Hook::U)).collect(),
        lam: lam_assign,
    };
    Ok(Rule::one_term(phi))
}

/// Data of a rectangular-union instance: lam = mu union m^n, nu the reversed
/// complement of mu inside m^n, and the window where they differ.
pub struct RectUnion {
    pub mu: Partition,
    pub nu: Partition,
    pub lam: Partition,
    pub window: Window,
    pub rule: Rule,
}

/// One-term rule for g_{mu, sigma-bar}^{mu union m^n}: the window factor
/// classes outside the minimal rectangle window, filled inside with the
/// de-windowed rectangular rule.
pub fn rect_union_rule(mu: &Partition, m: usize, n: usize) -> Result<RectUnion, RuleError> {
    let rect = Partition::rect(m, n);
    let lam = mu.union(&rect);
    let sigma = mu.intersect(&rect);
    let nu = sigma.rect_complement(m, n);
    if lam == *mu {
        // m^n inside mu: nu is empty and the rule is trivial
        let phi = Channel {
            mu: mu.cells().map(|b| (b, Hook::U)).collect(),
            nu: BTreeMap::new(),
            lam: mu.cells().map(|b| (b, Hook::U)).collect(),
        };
        return Ok(RectUnion {
            mu: mu.clone(),
            nu,
            lam,
            window: Window::rect(0, 0, 0, 0),
            rule: Rule::one_term(phi),
        });
    }
    let window = Window::bounding_rect_of_skew(&lam, mu).expect("nonempty difference");
    let wf = window_factor(mu, &lam, &window).map_err(|e| RuleError(e.0))?;
    let mu_wp = WindowedPartition::view(mu, &window);
    let lam_wp = WindowedPartition::view(&lam, &window);
    let k = window.cols.len();
    let l = window.rows.len();
    debug_assert_eq!(lam_wp.inner, Partition::rect(k, l));
    debug_assert_eq!(mu_wp.inner.rect_complement(k, l), nu);
    let inner_rule = rectangular_rule(&mu_wp.inner, k, l)?;
    let (inner_phi, _) = &inner_rule.terms[0];

    // assemble the ambient one-term channel: window-factor classes outside
    // (neutral boxes get an upper hook; their mu and lam hooks agree), and
    // the de-windowed inner assignments inside.
    let mut mu_assign: BTreeMap<Cell, Hook> = BTreeMap::new();
    let mut lam_assign: BTreeMap<Cell, Hook> = BTreeMap::new();
    for (b, class) in &wf.classification {
        use crate::windows::OutsideClass::*;
        let h = match class {
            Lower => Hook::L,
            Upper => Hook::U,
            Neutral => Hook::U,
        };
        if mu.contains_cell(*b) {
            mu_assign.insert(*b, h);
        }
        lam_assign.insert(*b, h);
    }
    for (&b, &h) in &inner_phi.mu {
        mu_assign.insert(mu_wp.dewindow_cell(b)?, h);
    }
    for (&b, &h) in &inner_phi.lam {
        lam_assign.insert(lam_wp.dewindow_cell(b)?, h);
    }
    let phi = Channel {
        mu: mu_assign,
        nu: inner_phi.nu.clone(),
        lam: lam_assign,
    };
    Ok(RectUnion {
        mu: mu.clone(),
        nu,
        lam,
        window,
        rule: Rule::one_term(phi),
    })
}

// ---------------------------------------------------------------------------
// balanced one-term search
// ---------------------------------------------------------------------------

/// Exhaustive search for a balanced single channel evaluating to g: upper
/// hooks appear exactly as often in the numerator as in the denominator.
/// Candidates are prefiltered at two rational sample points before the exact
/// comparison. Returns `None` when no balanced channel matches (a finding,
/// not an error).
pub fn strong_stanley_search(
    ctx: &SymbolicCtx,
    mu: &Partition,
    nu: &Partition,
    lam: &Partition,
) -> Result<Option<Channel>, RuleError> {
    let g = ctx.lr_g(mu, nu, lam)?;
    let samples = [crate::exactalg::rat(2, 1), crate::exactalg::rat(1, 3)];
    let g_at: Vec<_> = samples
        .iter()
        .map(|a| g.eval(a).expect("positive alpha avoids poles"))
        .collect();

    let num_cells: Vec<(usize, Cell)> = mu
        .cells()
        .map(|b| (0, b))
        .chain(nu.cells().map(|b| (1, b)))
        .collect();
    let lam_cells: Vec<Cell> = lam.cells().collect();
    let nl = lam_cells.len();
    let nn = num_cells.len();
    if nn != nl {
        return Err(RuleError("strong-Stanley search needs |mu|+|nu| = |lam|".into()));
    }
    // precompute per-cell hook samples
    let hooks_at = |p: &Partition, b: Cell| -> [(crate::exactalg::BigRat, crate::exactalg::BigRat); 2] {
        let u = hook_len(p, b, Hook::U).unwrap();
        let l = hook_len(p, b, Hook::L).unwrap();
        [
            (u.eval(&samples[0]), l.eval(&samples[0])),
            (u.eval(&samples[1]), l.eval(&samples[1])),
        ]
    };
    let num_hooks: Vec<_> = num_cells
        .iter()
        .map(|&(side, b)| hooks_at(if side == 0 { mu } else { nu }, b))
        .collect();
    let den_hooks: Vec<_> = lam_cells.iter().map(|&b| hooks_at(lam, b)).collect();

    // enumerate denominator masks grouped by upper-hook count, then numerator
    // masks of the same count; compare at the samples, then exactly.
    let mut den_by_count: Vec<Vec<(u64, [crate::exactalg::BigRat; 2])>> = vec![Vec::new(); nl + 1];
    for mask in 0u64..(1 << nl) {
        let count = mask.count_ones() as usize;
        let mut v0 = crate::exactalg::int(1);
        let mut v1 = crate::exactalg::int(1);
        for (i, h) in den_hooks.iter().enumerate() {
            let up = mask & (1 << i) != 0;
            v0 *= if up { h[0].0.clone() } else { h[0].1.clone() };
            v1 *= if up { h[1].0.clone() } else { h[1].1.clone() };
        }
        den_by_count[count].push((mask, [v0, v1]));
    }
    for nmask in 0u64..(1 << nn) {
        let count = nmask.count_ones() as usize;
        let mut n0 = crate::exactalg::int(1);
        let mut n1 = crate::exactalg::int(1);
        for (i, h) in num_hooks.iter().enumerate() {
            let up = nmask & (1 << i) != 0;
            n0 *= if up { h[0].0.clone() } else { h[0].1.clone() };
            n1 *= if up { h[1].0.clone() } else { h[1].1.clone() };
        }
        for (dmask, dv) in &den_by_count[count] {
            if &n0 / &dv[0] != g_at[0] || &n1 / &dv[1] != g_at[1] {
                continue;
            }
            // exact confirmation
            let phi = masks_to_channel(mu, nu, lam, &num_cells, &lam_cells, nmask, *dmask);
            if channel_eval(&phi, mu, nu, lam)? == g {
                return Ok(Some(phi));
            }
        }
    }
    Ok(None)
}

fn masks_to_channel(
    _mu: &Partition,
    _nu: &Partition,
    _lam: &Partition,
    num_cells: &[(usize, Cell)],
    lam_cells: &[Cell],
    nmask: u64,
    dmask: u64,
) -> Channel {
    let mut mu_a = BTreeMap::new();
    let mut nu_a = BTreeMap::new();
    for (i, &(side, b)) in num_cells.iter().enumerate() {
        let h = if nmask & (1 << i) != 0 { Hook::U } else { Hook::L };
        if side == 0 {
            mu_a.insert(b, h);
        } else {
            nu_a.insert(b, h);
        }
    }
    let lam_a = lam_cells
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            (b, if dmask & (1 << i) != 0 { Hook::U } else { Hook::L })
        })
        .collect();
    Channel {
        mu: mu_a,
        nu: nu_a,
        lam: lam_a,
    }
}

// ---------------------------------------------------------------------------
// k-vectors
// ---------------------------------------------------------------------------

/// k from the displayed definition: h^A(a) - h^B(b) + h^C(c) on one shape.
pub fn k_vector(
    sigma: &Partition,
    a: Cell,
    b: Cell,
    c: Cell,
    choice: [Hook; 3],
) -> Result<AlphaPoly, RuleError> {
    let ha = hook_len(sigma, a, choice[0])?;
    let hb = hook_len(sigma, b, choice[1])?;
    let hc = hook_len(sigma, c, choice[2])?;
    Ok(&(&ha - &hb) + &hc)
}

/// The sign variants of the canonical k table on the three boxes of 21.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KVariant {
    /// Computed from the displayed definition h(a) - h(b) + h(c).
    Definition,
    /// The eight printed table values (they flip the sign of the definition
    /// exactly on the rows with an even number of upper hooks).
    Table,
    /// The opposite-sign convention -h(a) + h(b) - h(c).
    NegDefinition,
}

/// Canonical k on sigma = 21 with boxes a = (0,1), b = (0,0), c = (1,0),
/// under the chosen sign variant.
pub fn k_canonical(choice: [Hook; 3], variant: KVariant) -> AlphaPoly {
    let sigma: Partition = Partition::new(vec![2, 1]);
    let def = k_vector(
        &sigma,
        Cell::new(0, 1),
        Cell::new(0, 0),
        Cell::new(1, 0),
        choice,
    )
    .unwrap();
    match variant {
        KVariant::Definition => def,
        KVariant::NegDefinition => -&def,
        KVariant::Table => {
            let ups = choice.iter().filter(|&&h| h == Hook::U).count();
            if ups % 2 == 0 {
                -&def
            } else {
                def
            }
        }
    }
}

/// Both-variant check of the eight-term k identity on arbitrary boxes of an
/// arbitrary shape:
/// sum_{A,B,C} h^A(a) h^B(b) h^C(c) k-canonical(flip(A,B,C))
///   = (-k_def(sigma,a,b,c;UUU) + k-canonical(UUU)) beta^3.
/// Returns the truth value per canonical-k variant (Table, Definition).
pub fn k_identity_check(
    sigma: &Partition,
    a: Cell,
    b: Cell,
    c: Cell,
) -> Result<(bool, bool), RuleError> {
    let mut status = [true, true];
    for (vi, variant) in [KVariant::Table, KVariant::Definition].into_iter().enumerate() {
        let mut lhs = AlphaPoly::zero();
        for mask in 0..8u32 {
            let choice = [
                if mask & 1 != 0 { Hook::U } else { Hook::L },
                if mask & 2 != 0 { Hook::U } else { Hook::L },
                if mask & 4 != 0 { Hook::U } else { Hook::L },
            ];
            let flipped = [choice[0].flip(), choice[1].flip(), choice[2].flip()];
            let term = &(&hook_len(sigma, a, choice[0])? * &hook_len(sigma, b, choice[1])?)
                * &hook_len(sigma, c, choice[2])?;
            lhs = &lhs + &(&term * &k_canonical(flipped, variant));
        }
        let k_sigma_uuu = k_vector(sigma, a, b, c, [Hook::U; 3])?;
        let k_uuu = k_canonical([Hook::U; 3], variant);
        let rhs = &(&(-&k_sigma_uuu) + &k_uuu) * &AlphaPoly::beta().pow(3);
        status[vi] = lhs == rhs;
    }
    Ok((status[0], status[1]))
}

// ---------------------------------------------------------------------------
// basic factorization
// ---------------------------------------------------------------------------

/// Witness for the basic factorization identity: per-box hook choices on the
/// numerator (mu) and denominator (the same boxes inside lam) that may differ
/// per box but use upper hooks equally often overall.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationWitness {
    pub mu_choices: Vec<(Cell, Hook)>,
    pub lam_choices: Vec<(Cell, Hook)>,
    pub ratio: AlphaRat,
    pub f_value: AlphaRat,
}

/// Report of `basic_factorization_check`.
#[derive(Debug, Clone, PartialEq)]
pub enum FactorizationReport {
    Witness(FactorizationWitness),
    /// lam/mu has a single component: the identity degenerates to locality.
    DegeneratesToLocality,
    NoWitness,
}

/// Connected components of a skew shape (edge adjacency).
pub fn skew_components(lam: &Partition, mu: &Partition) -> Vec<Vec<Cell>> {
    let cells = lam.skew_cells(mu);
    let mut comps: Vec<Vec<Cell>> = Vec::new();
    let mut seen: Vec<bool> = vec![false; cells.len()];
    for i in 0..cells.len() {
        if seen[i] {
            continue;
        }
        let mut stack = vec![i];
        seen[i] = true;
        let mut comp = Vec::new();
        while let Some(j) = stack.pop() {
            comp.push(cells[j]);
            for (k, &other) in cells.iter().enumerate() {
                if seen[k] {
                    continue;
                }
                let dx = cells[j].col.abs_diff(other.col);
                let dy = cells[j].row.abs_diff(other.row);
                if dx + dy == 1 {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
        comp.sort();
        comps.push(comp);
    }
    comps
}

/// Shift a component of cells back to the origin as a partition (the
/// component of a skew shape with two partition-shaped pieces).
pub fn component_shape(comp: &[Cell]) -> Partition {
    let c0 = comp.iter().map(|b| b.col).min().unwrap();
    let r0 = comp.iter().map(|b| b.row).min().unwrap();
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    for b in comp {
        *rows.entry(b.row - r0).or_insert(0) += 1;
        debug_assert!(b.col >= c0);
    }
    let mut parts: Vec<usize> = rows.values().copied().collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// Search for a balanced hook-choice witness of
/// g_{mu,nu}^{lam} = prod_b h_mu(b) / h_lam(b) * f^{lam1,lam2}_nu
/// for rectangular mu whose removal splits lam/mu into two partition-shaped
/// components.
pub fn basic_factorization_check(
    ctx: &SymbolicCtx,
    mu: &Partition,
    lam: &Partition,
    nu: &Partition,
) -> Result<FactorizationReport, RuleError> {
    // preconditions
    if mu.is_empty() || mu.parts().iter().any(|&p| p != mu.part(0)) {
        return Err(RuleError("mu must be a nonempty rectangle".into()));
    }
    if !lam.contains(mu) {
        return Err(RuleError("mu must be contained in lam".into()));
    }
    let comps = skew_components(lam, mu);
    if comps.len() == 1 {
        return Ok(FactorizationReport::DegeneratesToLocality);
    }
    if comps.len() != 2 {
        return Err(RuleError(format!(
            "lam/mu must have two components, found {}",
            comps.len()
        )));
    }
    let lam1 = component_shape(&comps[0]);
    let lam2 = component_shape(&comps[1]);
    if crate::shapes::lr_count(lam, mu, nu) != 1 {
        return Err(RuleError("needs c_{mu,nu}^{lam} = 1".into()));
    }
    if crate::shapes::lr_count(nu, &lam1, &lam2) != 1 {
        return Err(RuleError("needs c_{lam1,lam2}^{nu} = 1".into()));
    }
    let g = ctx.lr_g(mu, nu, lam)?;
    let f = crate::jack::f_coeff(ctx, &lam1, &lam2, nu)?;
    let target = &g / &f;
    // search balanced (equal upper-hook counts) choice pairs over mu's boxes
    let cells: Vec<Cell> = mu.cells().collect();
    let nb = cells.len();
    for nmask in 0u64..(1 << nb) {
        for dmask in 0u64..(1 << nb) {
            if nmask.count_ones() != dmask.count_ones() {
                continue;
            }
            let mut num = AlphaPoly::one();
            let mut den = AlphaPoly::one();
            for (i, &b) in cells.iter().enumerate() {
                let hn = if nmask & (1 << i) != 0 { Hook::U } else { Hook::L };
                let hd = if dmask & (1 << i) != 0 { Hook::U } else { Hook::L };
                num = &num * &hook_len(mu, b, hn)?;
                den = &den * &hook_len(lam, b, hd)?;
            }
            let ratio = AlphaRat::reduce(num, den).unwrap();
            if ratio == target {
                let mu_choices = cells
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (b, if nmask & (1 << i) != 0 { Hook::U } else { Hook::L }))
                    .collect();
                let lam_choices = cells
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (b, if dmask & (1 << i) != 0 { Hook::U } else { Hook::L }))
                    .collect();
                return Ok(FactorizationReport::Witness(FactorizationWitness {
                    mu_choices,
                    lam_choices,
                    ratio,
                    f_value: f,
                }));
            }
        }
    }
    Ok(FactorizationReport::NoWitness)
}

/// Locality: the window factor for the bounding rectangle of lam/mu times the
/// windowed coefficient. Returns (F, mu_R, lam_R).
pub fn locality_data(
    mu: &Partition,
    lam: &Partition,
) -> Result<(AlphaRat, Partition, Partition), RuleError> {
    let r = Window::bounding_rect_of_skew(lam, mu).map_err(|e| RuleError(e.0))?;
    let f = window_factor(mu, lam, &r).map_err(|e| RuleError(e.0))?;
    let mu_r = WindowedPartition::view(mu, &r).inner;
    let lam_r = WindowedPartition::view(lam, &r).inner;
    Ok((f.value, mu_r, lam_r))
}

/// Window positivity data for a triple: (g * F^{-1} * j_{lam,R}) over the
/// minimal window R of lam/mu. The conjecture asserts it is a polynomial with
/// non-negative integer coefficients.
pub fn window_positivity_certificate(
    ctx: &SymbolicCtx,
    mu: &Partition,
    nu: &Partition,
    lam: &Partition,
) -> Result<AlphaRat, RuleError> {
    let r = Window::closure_of_skew(lam, mu).map_err(|e| RuleError(e.0))?;
    let f = window_factor(mu, lam, &r).map_err(|e| RuleError(e.0))?;
    let g = ctx.lr_g(mu, nu, lam)?;
    let j = crate::windows::j_lam_window(lam, &r);
    Ok(&(&g / &f.value) * &AlphaRat::from_poly(j))
}

pub use sixparam::{
    channel_alternating_sum, channel_redundancy, ram_channel_limits, ram_h4_value,
    six_param_instance, SixParamInstance,
};
pub use tables::{
    evaluate_d20, evaluate_h4, evaluate_h8, h4_regular_limits, solution_tables, SolutionTables,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::jack::JackCtx;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sym() -> SymbolicCtx {
        JackCtx::symbolic()
    }

    fn ar(s: &str) -> AlphaRat {
        s.parse().unwrap()
    }

    #[test]
    fn pieri_small_examples() {
        let ctx = sym();
        let r = pieri_rule(&p("2"), 1, &p("3")).unwrap();
        assert_eq!(r.eval(&p("2"), &p("1"), &p("3")).unwrap(), ar("(1)/(1 + 2*a)"));
        let r = pieri_rule(&p("1"), 1, &p("2")).unwrap();
        assert_eq!(r.eval(&p("1"), &p("1"), &p("2")).unwrap(), ar("(1)/(1 + a)"));
        assert_eq!(
            r.eval(&p("1"), &p("1"), &p("2")).unwrap(),
            ctx.lr_g(&p("1"), &p("1"), &p("2")).unwrap()
        );
        // a single added box is a one-box horizontal strip even when it sits
        // on top of a column, and the rule still evaluates correctly
        let r = pieri_rule(&p("1"), 1, &p("1,1")).unwrap();
        assert_eq!(
            r.eval(&p("1"), &p("1"), &p("1,1")).unwrap(),
            ar("(a)/(1 + a)")
        );
        // a genuinely vertical two-box strip is rejected
        assert!(pieri_rule(&p("1"), 2, &p("1,1,1")).is_err());
    }

    #[test]
    fn pieri_sweep_degree_7() {
        let ctx = sym();
        for n in 2..=7 {
            for lam in crate::shapes::partitions_of(n) {
                for r in 1..n {
                    for mu in crate::shapes::partitions_of(n - r) {
                        if !is_horizontal_strip(&mu, r, &lam) {
                            continue;
                        }
                        let rule = pieri_rule(&mu, r, &lam).unwrap();
                        let nu = Partition::new(vec![r]);
                        assert_eq!(
                            rule.eval(&mu, &nu, &lam).unwrap(),
                            ctx.lr_g(&mu, &nu, &lam).unwrap(),
                            "mu={mu} r={r} lam={lam}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn maximal_filling_g_2_3_32() {
        let ctx = sym();
        let rule = maximal_filling_rule(&p("2"), &p("3"), &p("3,2")).unwrap();
        let got = rule.eval(&p("2"), &p("3"), &p("3,2")).unwrap();
        // 6a^2 / ((1+3a)(1+2a))
        let expect = &ar("6*a^2") / &(&ar("1 + 3*a") * &ar("1 + 2*a"));
        assert_eq!(got, expect);
        assert_eq!(got, ctx.lr_g(&p("2"), &p("3"), &p("3,2")).unwrap());
    }

    #[test]
    fn maximal_filling_reduces_to_pieri() {
        // all-ones fillings are maximal; both rules must agree
        let ctx = sym();
        let (mu, nu, lam) = (p("3,1"), p("2"), p("4,2"));
        let mf = maximal_filling_rule(&mu, &nu, &lam).unwrap();
        let pi = pieri_rule(&mu, 2, &lam).unwrap();
        let v1 = mf.eval(&mu, &nu, &lam).unwrap();
        let v2 = pi.eval(&mu, &nu, &lam).unwrap();
        assert_eq!(v1, v2);
        assert_eq!(v1, ctx.lr_g(&mu, &nu, &lam).unwrap());
    }

    #[test]
    fn rectangular_rule_examples() {
        let ctx = sym();
        // g_{1,1}^{11} via the 1^2 rectangle
        let r = rectangular_rule(&p("1"), 1, 2).unwrap();
        assert_eq!(
            r.eval(&p("1"), &p("1"), &p("1,1")).unwrap(),
            ctx.lr_g(&p("1"), &p("1"), &p("1,1")).unwrap()
        );
        // empty mu: g_{-,m^n}^{m^n} = 1
        let r = rectangular_rule(&Partition::empty(), 2, 2).unwrap();
        assert_eq!(
            r.eval(&Partition::empty(), &p("2,2"), &p("2,2")).unwrap(),
            AlphaRat::one()
        );
        // the 211 inside 3^3 example against the engine
        let r = rectangular_rule(&p("2,1,1"), 3, 3).unwrap();
        assert_eq!(
            r.eval(&p("2,1,1"), &p("2,2,1"), &p("3,3,3")).unwrap(),
            ctx.lr_g(&p("2,1,1"), &p("2,2,1"), &p("3,3,3")).unwrap()
        );
    }

    #[test]
    fn rect_union_example() {
        // mu = 42211 with the 3^4 rectangle: lam = 43331, nu = 211
        let ru = rect_union_rule(&p("4,2,2,1,1"), 3, 4).unwrap();
        assert_eq!(ru.lam, p("4,3,3,3,1"));
        assert_eq!(ru.nu, p("2,1,1"));
        let got = ru.rule.eval(&ru.mu, &ru.nu, &ru.lam).unwrap();
        for a in [rat(1, 2), rat(2, 1), rat(3, 1)] {
            let fctx = JackCtx::fixed(a.clone());
            assert_eq!(
                got.eval(&a).unwrap(),
                fctx.lr_g(&ru.mu, &ru.nu, &ru.lam).unwrap()
            );
        }
        // mu inside the rectangle reduces to the plain rectangular rule
        let ru = rect_union_rule(&p("2,1"), 2, 2).unwrap();
        assert_eq!(ru.lam, p("2,2"));
        assert_eq!(ru.nu, p("1"));
        let plain = rectangular_rule(&p("2,1"), 2, 2).unwrap();
        assert_eq!(
            ru.rule.eval(&ru.mu, &ru.nu, &ru.lam).unwrap(),
            plain.eval(&p("2,1"), &p("1"), &p("2,2")).unwrap()
        );
    }

    #[test]
    fn strong_stanley_base_and_counterexample() {
        let ctx = sym();
        assert!(strong_stanley_search(&ctx, &p("1"), &p("1"), &p("2"))
            .unwrap()
            .is_some());
        assert!(strong_stanley_search(&ctx, &p("1"), &p("1"), &p("1,1"))
            .unwrap()
            .is_some());
        // the Hanlon c = 2 example admits no balanced one-term rule
        assert!(strong_stanley_search(&ctx, &p("3,1"), &p("2,1"), &p("4,2,1"))
            .unwrap()
            .is_none());
    }

    #[test]
    fn channel_eval_displayed_example() {
        // the mixed-shape channel on (21, 1, 32): mu gets U L U, nu gets L,
        // lam gets L at (0,1), L at (1,1), U U L along the bottom row
        use Hook::{L, U};
        let mu = p("2,1");
        let nu = p("1");
        let lam = p("3,2");
        let phi = Channel {
            mu: [(Cell::new(0, 1), U), (Cell::new(0, 0), L), (Cell::new(1, 0), U)]
                .into_iter()
                .collect(),
            nu: [(Cell::new(0, 0), L)].into_iter().collect(),
            lam: [
                (Cell::new(0, 1), L),
                (Cell::new(1, 1), L),
                (Cell::new(0, 0), U),
                (Cell::new(1, 0), U),
                (Cell::new(2, 0), L),
            ]
            .into_iter()
            .collect(),
        };
        let got = channel_eval(&phi, &mu, &nu, &lam).unwrap();
        let expect = &(&ar("a^2") * &ar("2 + a"))
            / &(&(&ar("1 + a") * &ar("1 + 2*a")) * &ar("1 + 3*a"));
        assert_eq!(got, expect);
        // base case: all-upper on (1, 1, 11) gives a/(1+a)
        let phi = Channel::total(&p("1"), &p("1"), &p("1,1"), U);
        assert_eq!(
            channel_eval(&phi, &p("1"), &p("1"), &p("1,1")).unwrap(),
            ar("(a)/(1 + a)")
        );
        // empty shapes give 1
        let phi = Channel::total(&Partition::empty(), &Partition::empty(), &Partition::empty(), U);
        assert_eq!(
            channel_eval(&phi, &Partition::empty(), &Partition::empty(), &Partition::empty())
                .unwrap(),
            AlphaRat::one()
        );
    }

    #[test]
    fn pieri_large_displayed_strip() {
        // the size-21 horizontal strip: rule value equals the engine at
        // sample parameter values
        let mu = p("7,5,4,1,1");
        let lam = p("7,6,4,3,1");
        let rule = pieri_rule(&mu, 3, &lam).unwrap();
        let got = rule.eval(&mu, &p("3"), &lam).unwrap();
        for a in [rat(2, 1), rat(3, 1)] {
            let fctx = JackCtx::fixed(a.clone());
            assert_eq!(
                got.eval(&a).unwrap(),
                fctx.lr_g(&mu, &p("3"), &lam).unwrap()
            );
        }
    }

    #[test]
    fn windowed_stanley_tableau_maxima_drop_zeros() {
        use crate::shapes::{lr_tableaux, row_col_maxima};
        use crate::windows::{Window, WindowedPartition};
        let lam = p("7,6,6,6,5,4,2,1,1");
        let mu = p("7,5,5,3,3,2,2");
        let nu = p("5,4,2");
        let r = Window::closure_of_skew(&lam, &mu).unwrap();
        let mu_r = WindowedPartition::view(&mu, &r).inner;
        let lam_r = WindowedPartition::view(&lam, &r).inner;
        let ts = lr_tableaux(&lam_r, &mu_r, &nu);
        assert_eq!(ts.len(), 1);
        assert!(crate::shapes::is_maximal_filling(&ts[0]));
        let (r_win, c_win) = row_col_maxima(&ts[0]);
        let big = lr_tableaux(&lam, &mu, &nu);
        let (r_big, c_big) = row_col_maxima(&big[0]);
        let drop_zeros = |v: &[usize]| -> Vec<usize> {
            v.iter().copied().filter(|&x| x > 0).collect()
        };
        assert_eq!(drop_zeros(&r_win), drop_zeros(&r_big));
        assert_eq!(drop_zeros(&c_win), drop_zeros(&c_big));
    }

    #[test]
    fn schur_windowing_lemma_counts() {
        // LR tableau counts are invariant under rectangular windowing:
        // c_{mu,nu}^{lam} = c_{mu_R,nu}^{lam_R} for all |lam| <= 7
        use crate::shapes::lr_count;
        use crate::windows::{Window, WindowedPartition};
        for n in 2..=7 {
            for lam in crate::shapes::partitions_of(n) {
                for mu in crate::shapes::subpartitions(&lam) {
                    if mu == lam {
                        continue;
                    }
                    let r = Window::bounding_rect_of_skew(&lam, &mu).unwrap();
                    let mu_r = WindowedPartition::view(&mu, &r).inner;
                    let lam_r = WindowedPartition::view(&lam, &r).inner;
                    for nu in crate::shapes::partitions_of(n - mu.size()) {
                        assert_eq!(
                            lr_count(&lam, &mu, &nu),
                            lr_count(&lam_r, &mu_r, &nu),
                            "lam={lam} mu={mu} nu={nu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn k_vector_values() {
        // definition values on 21: k^{UUU} = -1, k^{LLU} = -1, k^{LUL} = 1-2a,
        // k^{LLL} = -a (the printed table lists +a for the last one)
        use Hook::{L, U};
        assert_eq!(k_canonical([U, U, U], KVariant::Definition), AlphaPoly::from_int(-1));
        assert_eq!(k_canonical([L, L, U], KVariant::Definition), AlphaPoly::from_int(-1));
        assert_eq!(k_canonical([L, U, L], KVariant::Definition), AlphaPoly::lin(1, -2));
        assert_eq!(k_canonical([L, L, L], KVariant::Definition), AlphaPoly::lin(0, -1));
        assert_eq!(k_canonical([L, L, L], KVariant::Table), AlphaPoly::alpha());
        assert_eq!(k_canonical([U, U, U], KVariant::Table), AlphaPoly::from_int(-1));
        assert_eq!(k_canonical([U, L, U], KVariant::Table), AlphaPoly::lin(2, -1));
    }

    #[test]
    fn k_table_symmetry() {
        // -a k^{ABC}(1/a) = k^{flip}(a) for the printed table: as polynomials,
        // the degree <= 1 reversal times -1.
        use Hook::{L, U};
        for mask in 0..8u32 {
            let ch = [
                if mask & 1 != 0 { U } else { L },
                if mask & 2 != 0 { U } else { L },
                if mask & 4 != 0 { U } else { L },
            ];
            let flipped = [ch[0].flip(), ch[1].flip(), ch[2].flip()];
            let k = k_canonical(ch, KVariant::Table);
            let kf = k_canonical(flipped, KVariant::Table);
            // -a k(1/a) for linear k = c0 + c1 a is -(c0 a + c1)
            let rev = AlphaPoly::lin_big(
                -k.coeff(1),
                -k.coeff(0),
            );
            assert_eq!(rev, kf);
        }
    }

    #[test]
    fn k_identity_exhaustive_small() {
        // the eight-term identity holds with the printed-table weights and
        // fails with raw definition weights, over all shapes of size <= 5
        for n in 1..=5 {
            for sigma in crate::shapes::partitions_of(n) {
                let cells: Vec<Cell> = sigma.cells().collect();
                for &a in &cells {
                    for &b in &cells {
                        for &c in &cells {
                            let (table_ok, def_ok) = k_identity_check(&sigma, a, b, c).unwrap();
                            assert!(table_ok, "sigma={sigma} a={a} b={b} c={c}");
                            // definition weights satisfy the identity only by
                            // coincidence on degenerate data; verify they fail
                            // somewhere to keep the adjudication meaningful
                            let _ = def_ok;
                        }
                    }
                }
            }
        }
        // a concrete case where definition-variant weights fail
        let sigma = p("1");
        let cell = Cell::new(0, 0);
        let (t, d) = k_identity_check(&sigma, cell, cell, cell).unwrap();
        assert!(t && !d);
    }

    #[test]
    fn factorization_bravi_gandini_examples() {
        let ctx = sym();
        match basic_factorization_check(&ctx, &p("2"), &p("3,2,1"), &p("2,1,1")).unwrap() {
            FactorizationReport::Witness(w) => {
                // displayed pattern: numerator U L on mu, denominator L U on lam
                use Hook::{L, U};
                assert_eq!(w.mu_choices, vec![(Cell::new(0, 0), U), (Cell::new(1, 0), L)]);
                assert_eq!(w.lam_choices, vec![(Cell::new(0, 0), L), (Cell::new(1, 0), U)]);
            }
            other => panic!("expected witness, got {other:?}"),
        }
        match basic_factorization_check(&ctx, &p("2,2,2"), &p("4,3,2,2,1"), &p("2,2,1,1")).unwrap()
        {
            FactorizationReport::Witness(_) => {}
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn locality_displayed_example() {
        let ctx = sym();
        let (f, mu_r, lam_r) = locality_data(&p("4,2,1"), &p("4,3,2,1")).unwrap();
        assert_eq!(mu_r, p("2,1"));
        assert_eq!(lam_r, p("3,2,1"));
        let lhs = ctx.lr_g(&p("4,2,1"), &p("2,1"), &p("4,3,2,1")).unwrap();
        let rhs = &f * &ctx.lr_g(&p("2,1"), &p("2,1"), &p("3,2,1")).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn channel_involutions_and_transposition_duality() {
        // (phi^T)^T = phi, conj(conj(phi)) = phi; and evaluating the
        // transposed-conjugated channel on conjugate shapes at alpha equals
        // alpha^{|mu|+|nu|-|lam|} times the original at 1/alpha (the power is
        // zero for size-matched triples, asserted by plain equality).
        let ctx = sym();
        let triples = [
            (p("2,1"), p("1"), p("3,1")),
            (p("2"), p("2,1"), p("3,2")),
            (p("1,1"), p("2"), p("2,1,1")),
        ];
        for (mu, nu, lam) in triples {
            let exp = ctx.lr_expand(&mu, &nu).unwrap();
            let _ = exp;
            for seed in 0..7u64 {
                // pseudo-random total assignment
                let mut bits = seed.wrapping_mul(0x9e3779b97f4a7c15);
                let mut assign = |pt: &Partition| -> std::collections::BTreeMap<Cell, Hook> {
                    pt.cells()
                        .map(|b| {
                            bits = bits.rotate_left(7).wrapping_add(0x632be59bd9b4e019);
                            (b, if bits & 1 == 0 { Hook::U } else { Hook::L })
                        })
                        .collect()
                };
                let phi = Channel {
                    mu: assign(&mu),
                    nu: assign(&nu),
                    lam: assign(&lam),
                };
                assert_eq!(phi.transpose().transpose(), phi);
                assert_eq!(phi.conjugate().conjugate(), phi);
                let orig = channel_eval(&phi, &mu, &nu, &lam).unwrap();
                let dual = channel_eval(
                    &phi.transpose().conjugate(),
                    &mu.conjugate(),
                    &nu.conjugate(),
                    &lam.conjugate(),
                )
                .unwrap();
                for a in [rat(2, 1), rat(3, 1), rat(5, 7)] {
                    let inv = rat(1, 1) / &a;
                    assert_eq!(dual.eval(&a).unwrap(), orig.eval(&inv).unwrap());
                }
            }
        }
    }

    #[test]
    fn fixed_alpha_consistency_sweep() {
        // symbolic g evaluated at alpha = 2 equals the fixed-alpha engine for
        // every triple up to degree 6
        let ctx = sym();
        let a = rat(2, 1);
        let fctx = JackCtx::fixed(a.clone());
        for n in 2..=6 {
            for k in 1..n {
                for mu in crate::shapes::partitions_of(k) {
                    for nu in crate::shapes::partitions_of(n - k) {
                        if mu > nu {
                            continue;
                        }
                        let exp = ctx.lr_expand(&mu, &nu).unwrap();
                        for (lam, g) in exp.iter() {
                            assert_eq!(
                                g.eval(&a).unwrap(),
                                fctx.lr_g(&mu, &nu, lam).unwrap(),
                                "mu={mu} nu={nu} lam={lam}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn window_positivity_hanlon_certificate() {
        let ctx = sym();
        let cert = window_positivity_certificate(&ctx, &p("3,1"), &p("2,1"), &p("4,2,1")).unwrap();
        let expect = &ar("4*a^4")
            * &ar("9 + 97*a + 294*a^2 + 321*a^3 + 131*a^4 + 12*a^5");
        assert_eq!(cert, expect);
        assert!(cert.as_poly().unwrap().is_nonneg_integer_poly());
    }
}
