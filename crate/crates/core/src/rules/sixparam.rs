//! The six-parameter family of c = 2 problems, its composite window, the
//! de-windowed box hooks feeding the solution tables, channel identities on
//! factorization regions, and the two-row family behind the closed-form
//! answer for g_{(a1,a2),21}^{(a1+1,a2+1,1)}.

use super::RuleError;
use crate::exactalg::{AlphaPoly, AlphaRat};
use crate::shapes::{lr_count, Cell, Hook, Partition};
use crate::windows::{compose, e_hook, CompositeView, CompositeWindow, Dewindower, StageArg, Window};

/// Box order used for every 21-shaped region: top box, bottom-left,
/// bottom-right.
pub const REDUCED_CELLS: [Cell; 3] = [
    Cell { col: 0, row: 1 },
    Cell { col: 0, row: 0 },
    Cell { col: 1, row: 0 },
];

/// The split-off row-end boxes of 321 (their de-windowed hooks are always
/// alpha or 1).
pub const CORNER_CELLS: [Cell; 3] = [
    Cell { col: 0, row: 2 },
    Cell { col: 1, row: 1 },
    Cell { col: 2, row: 0 },
];

/// A member of the (K, M, N, T, p, s) family: shapes, the two-stage composite
/// window, its factor, and the de-windowing maps.
#[derive(Debug, Clone)]
pub struct SixParamInstance {
    pub params: [usize; 6],
    pub mu: Partition,
    pub nu: Partition,
    pub lam: Partition,
    pub view: CompositeView,
}

impl SixParamInstance {
    pub fn k(&self) -> usize {
        self.params[0]
    }
    pub fn m_param(&self) -> usize {
        self.params[1]
    }
    pub fn n_param(&self) -> usize {
        self.params[2]
    }
    pub fn t_param(&self) -> usize {
        self.params[3]
    }
    pub fn p_param(&self) -> usize {
        self.params[4]
    }
    pub fn s_param(&self) -> usize {
        self.params[5]
    }

    pub fn size(&self) -> usize {
        self.lam.size()
    }

    /// Composite window factor value.
    pub fn factor(&self) -> &AlphaRat {
        &self.view.factor
    }

    /// De-windowed hook of the i-th box (order [`REDUCED_CELLS`]) of mu_R.
    pub fn mu_hook(&self, i: usize, h: Hook) -> AlphaPoly {
        self.view.mu_dw.hook(REDUCED_CELLS[i], h).unwrap()
    }

    pub fn nu_hook(&self, i: usize, h: Hook) -> AlphaPoly {
        self.view.nu_dw.hook(REDUCED_CELLS[i], h).unwrap()
    }

    pub fn lam_hook(&self, i: usize, h: Hook) -> AlphaPoly {
        self.view.lam_dw.hook(REDUCED_CELLS[i], h).unwrap()
    }

    pub fn corner_hook(&self, i: usize, h: Hook) -> AlphaPoly {
        self.view.lam_dw.hook(CORNER_CELLS[i], h).unwrap()
    }

    /// e-hook at the i-th box of the kappa = 21 factorization region.
    pub fn e_at(&self, i: usize) -> AlphaPoly {
        e_hook(REDUCED_CELLS[i], &self.view.mu_dw, &self.view.lam_dw).unwrap()
    }
}

/// Build the instance: shapes, windows, composite view; checks the windowed
/// shapes and the c = 2 invariant.
pub fn six_param_instance(
    k: usize,
    m: usize,
    n: usize,
    t: usize,
    p: usize,
    s: usize,
) -> Result<SixParamInstance, RuleError> {
    let mut lam_parts = vec![k + n + s + 3];
    lam_parts.extend(std::iter::repeat(k + 2).take(m + 1));
    lam_parts.extend(std::iter::repeat(1).take(t + p + 1));
    let lam = Partition::new(lam_parts);

    let mut mu_parts = vec![k + n + 2];
    mu_parts.extend(std::iter::repeat(k + 2).take(m));
    mu_parts.push(k + 1);
    mu_parts.extend(std::iter::repeat(1).take(t));
    let mu = Partition::new(mu_parts);

    let mut nu_parts = vec![s + 2];
    nu_parts.extend(std::iter::repeat(1).take(p + 1));
    let nu = Partition::new(nu_parts);

    // First stage views (mu, lam), second stage (nu, lam_{R1}).
    let mut r1_cols: Vec<usize> = vec![0, k + 1];
    r1_cols.extend(k + n + 2..=k + n + s + 2);
    let mut r1_rows: Vec<usize> = vec![0, m + 1];
    r1_rows.extend(m + t + 2..=m + t + p + 2);
    let r1 = Window::from_slices(&r1_cols, &r1_rows);
    let r2 = Window::from_slices(&[0, 1, s + 2], &[0, 1, p + 2]);

    let cw = CompositeWindow {
        stages: vec![(r1, StageArg::MuLambda), (r2, StageArg::NuLambda)],
    };
    let view = compose(&mu, &nu, &lam, &cw).map_err(|e| RuleError(e.0))?;
    if view.mu_dw.inner != Partition::new(vec![2, 1])
        || view.nu_dw.inner != Partition::new(vec![2, 1])
        || view.lam_dw.inner != Partition::new(vec![3, 2, 1])
    {
        return Err(RuleError(format!(
            "windowed shapes off: mu_R={} nu_R={} lam_R={}",
            view.mu_dw.inner, view.nu_dw.inner, view.lam_dw.inner
        )));
    }
    if lr_count(&lam, &mu, &nu) != 2 {
        return Err(RuleError("six-parameter instance must have c = 2".into()));
    }
    Ok(SixParamInstance {
        params: [k, m, n, t, p, s],
        mu,
        nu,
        lam,
        view,
    })
}

// ---------------------------------------------------------------------------
// channel identities on a factorization region
// ---------------------------------------------------------------------------

/// Both sides of the alternating-sum identity over a region kappa inside
/// mu_R inside lam_R (hooks de-windowed):
///   sum_X (-1)^{#U(X)} prod_b h^X_mu(b)/h^X_lam(b)
///     = beta^{|kappa|} prod_b e(b) / prod_b h^U_lam(b) h^L_lam(b).
pub fn channel_alternating_sum(
    kappa: &Partition,
    mu_dw: &Dewindower,
    lam_dw: &Dewindower,
) -> Result<(AlphaRat, AlphaRat), RuleError> {
    if !mu_dw.inner.contains(kappa) || !lam_dw.inner.contains(&mu_dw.inner) {
        return Err(RuleError("need kappa inside mu_R inside lam_R".into()));
    }
    let cells: Vec<Cell> = kappa.cells().collect();
    let nb = cells.len();
    let mut lhs = AlphaRat::zero();
    for mask in 0u64..(1 << nb) {
        let mut num = AlphaPoly::one();
        let mut den = AlphaPoly::one();
        let ups = mask.count_ones();
        for (i, &b) in cells.iter().enumerate() {
            let h = if mask & (1 << i) != 0 { Hook::U } else { Hook::L };
            num = &num * &mu_dw.hook(b, h)?;
            den = &den * &lam_dw.hook(b, h)?;
        }
        let term = AlphaRat::reduce(num, den).unwrap();
        lhs = if ups % 2 == 0 { &lhs + &term } else { &lhs - &term };
    }
    let mut rhs_num = AlphaPoly::beta().pow(nb as u32);
    let mut rhs_den = AlphaPoly::one();
    for &b in &cells {
        rhs_num = &rhs_num * &e_hook(b, mu_dw, lam_dw)?;
        rhs_den = &rhs_den * &lam_dw.hook(b, Hook::U)?;
        rhs_den = &rhs_den * &lam_dw.hook(b, Hook::L)?;
    }
    Ok((lhs, AlphaRat::reduce(rhs_num, rhs_den).unwrap()))
}

/// Both sides of the single-box redundancy relation
///   G^L_L - G^L_U - G^U_L + G^U_U = (-beta/e) (G^L_L - G^U_U).
pub fn channel_redundancy(
    b: Cell,
    mu_dw: &Dewindower,
    lam_dw: &Dewindower,
) -> Result<(AlphaRat, AlphaRat), RuleError> {
    let g = |hn: Hook, hd: Hook| -> Result<AlphaRat, RuleError> {
        Ok(AlphaRat::reduce(mu_dw.hook(b, hn)?, lam_dw.hook(b, hd)?).unwrap())
    };
    let lhs = &(&g(Hook::L, Hook::L)? - &g(Hook::L, Hook::U)?)
        - &(&g(Hook::U, Hook::L)? - &g(Hook::U, Hook::U)?);
    let e = e_hook(b, mu_dw, lam_dw)?;
    let coef = AlphaRat::reduce(-&AlphaPoly::beta(), e).unwrap();
    let rhs = &coef * &(&g(Hook::L, Hook::L)? - &g(Hook::U, Hook::U)?);
    Ok((lhs, rhs))
}

// ---------------------------------------------------------------------------
// the two-row family (a1, a2)
// ---------------------------------------------------------------------------

/// Closed-form de-windowed hooks of the two-row family
/// mu = (a1, a2), nu = 21, lam = (a1+1, a2+1, 1), expressed directly in
/// (a1, a2); they agree with the six-parameter instance
/// (K,M,N,T,p,s) = (0, a2-1, 0, a1-a2-1, 0, 0) after transposing all shapes.
/// Valid formally for a1 >= a2 >= 1 (the boundary a1 = a2 keeps the algebra
/// while the window degenerates).
pub struct TwoRowFamily {
    pub a1: i64,
    pub a2: i64,
}

impl TwoRowFamily {
    /// t = a1 - a2 - 1 as a constant polynomial (may be -1 on the boundary).
    pub fn t_value(&self) -> AlphaPoly {
        AlphaPoly::from_int(self.a1 - self.a2 - 1)
    }

    /// De-windowed hooks of the kappa = (2) boxes (y, z) in mu and lam,
    /// matching the transposed six-parameter instance: linear polynomials in
    /// alpha with coefficients in a1, a2.
    pub fn mu_hook(&self, i: usize, h: Hook) -> AlphaPoly {
        match (i, h) {
            (0, Hook::U) => AlphaPoly::lin(self.a1 - 1, 2),
            (0, Hook::L) => AlphaPoly::lin(self.a1, 1),
            (1, Hook::U) => AlphaPoly::lin(self.a2 - 1, 1),
            (1, Hook::L) => AlphaPoly::lin(self.a2, 0),
            _ => panic!("two-row family has kappa boxes 0 (y) and 1 (z)"),
        }
    }

    pub fn lam_hook(&self, i: usize, h: Hook) -> AlphaPoly {
        match (i, h) {
            (0, Hook::U) => AlphaPoly::lin(self.a1, 3),
            (0, Hook::L) => AlphaPoly::lin(self.a1 + 1, 2),
            (1, Hook::U) => AlphaPoly::lin(self.a2, 2),
            (1, Hook::L) => AlphaPoly::lin(self.a2 + 1, 1),
            _ => panic!("two-row family has kappa boxes 0 (y) and 1 (z)"),
        }
    }
}

/// g_{(a1,a2),21}^{(a1+1,a2+1,1)} assembled from the regular four-channel
/// table on the two-row family; see `tables::evaluate_h4_two_row`.
pub fn ram_h4_value(a1: i64, a2: i64) -> Result<AlphaRat, RuleError> {
    super::tables::evaluate_h4_two_row(&TwoRowFamily { a1, a2 })
}

/// Per-channel Schur-limit coefficients of the four-channel solution on the
/// two-row family; `None` marks an irregular channel (pole at alpha = 1).
pub fn ram_channel_limits(a1: i64, a2: i64) -> Result<Vec<Option<crate::exactalg::BigRat>>, RuleError> {
    super::tables::h4_two_row_limits(&TwoRowFamily { a1, a2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::jack::JackCtx;

    #[test]
    fn base_instance_shapes() {
        let inst = six_param_instance(0, 0, 0, 0, 0, 0).unwrap();
        assert_eq!(inst.lam, "3,2,1".parse().unwrap());
        assert_eq!(inst.mu, "2,1".parse().unwrap());
        assert_eq!(inst.nu, "2,1".parse().unwrap());
        assert_eq!(inst.factor(), &AlphaRat::one());
        // trivial windowing: de-windowed hooks are the plain ones
        assert_eq!(inst.mu_hook(0, Hook::U), AlphaPoly::alpha());
        assert_eq!(inst.lam_hook(1, Hook::U), AlphaPoly::lin(2, 3));
        for i in 0..3 {
            assert_eq!(inst.corner_hook(i, Hook::U), AlphaPoly::alpha());
            assert_eq!(inst.corner_hook(i, Hook::L), AlphaPoly::one());
        }
    }

    #[test]
    fn instance_1_0_0_0_0_0() {
        // lam follows the displayed shape formula (K+N+s+3, ...); its size
        // must equal |mu| + |nu| = 8.
        let inst = six_param_instance(1, 0, 0, 0, 0, 0).unwrap();
        assert_eq!(inst.lam, "4,3,1".parse::<Partition>().unwrap());
        assert_eq!(inst.mu, "3,2".parse::<Partition>().unwrap());
        assert_eq!(inst.nu, "2,1".parse::<Partition>().unwrap());
        assert_eq!(inst.lam.size(), inst.mu.size() + inst.nu.size());
    }

    #[test]
    fn hanlon_instance_factor() {
        // N = 1, all other parameters zero: mu = 31, nu = 21, lam = 421,
        // F_R = 1/(1+a)
        let inst = six_param_instance(0, 0, 1, 0, 0, 0).unwrap();
        assert_eq!(inst.mu, "3,1".parse::<Partition>().unwrap());
        assert_eq!(inst.lam, "4,2,1".parse::<Partition>().unwrap());
        assert_eq!(inst.factor(), &"(1)/(1 + a)".parse().unwrap());
    }

    #[test]
    fn dewindowed_hooks_closed_forms() {
        // spot-check the closed forms of the de-windowed hooks on a generic
        // instance
        let (k, m, n, t, p, s) = (1usize, 2usize, 1usize, 2usize, 1usize, 2usize);
        let inst = six_param_instance(k, m, n, t, p, s).unwrap();
        let (ki, mi, ni, ti, pi, si) = (k as i64, m as i64, n as i64, t as i64, p as i64, s as i64);
        // mu hooks
        assert_eq!(inst.mu_hook(0, Hook::U), AlphaPoly::lin(ti, ki + 1));
        assert_eq!(inst.mu_hook(0, Hook::L), AlphaPoly::lin(ti + 1, ki));
        assert_eq!(
            inst.mu_hook(1, Hook::U),
            AlphaPoly::lin(mi + ti + 1, ki + ni + 2)
        );
        assert_eq!(inst.mu_hook(2, Hook::U), AlphaPoly::lin(mi, ni + 1));
        // nu hooks
        assert_eq!(inst.nu_hook(0, Hook::U), AlphaPoly::lin(pi, 1));
        assert_eq!(
            inst.nu_hook(1, Hook::U),
            AlphaPoly::lin(pi + 1, si + 2)
        );
        assert_eq!(inst.nu_hook(2, Hook::U), AlphaPoly::lin(0, si + 1));
        // lam hooks
        assert_eq!(
            inst.lam_hook(0, Hook::U),
            AlphaPoly::lin(ti + pi + 1, ki + 2)
        );
        assert_eq!(
            inst.lam_hook(1, Hook::U),
            AlphaPoly::lin(mi + ti + pi + 2, ki + ni + si + 3)
        );
        assert_eq!(
            inst.lam_hook(2, Hook::U),
            AlphaPoly::lin(mi + 1, ni + si + 2)
        );
        // e-hooks of the kappa = 21 region
        assert_eq!(inst.e_at(0), AlphaPoly::lin(pi + 1, 1));
        assert_eq!(inst.e_at(1), AlphaPoly::lin(pi + 1, si + 1));
        assert_eq!(inst.e_at(2), AlphaPoly::lin(1, si + 1));
    }

    #[test]
    fn c_equals_two_on_small_grid() {
        for k in 0..=1 {
            for m in 0..=1 {
                for (n, t, p, s) in [(0, 0, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1)] {
                    let inst = six_param_instance(k, m, n, t, p, s).unwrap();
                    assert_eq!(lr_count(&inst.lam, &inst.mu, &inst.nu), 2);
                }
            }
        }
    }

    #[test]
    fn alternating_sum_identity_plain_shapes() {
        // kappa = 21 inside mu = 21 inside lam = 321, identity windows
        let mu: Partition = "2,1".parse().unwrap();
        let lam: Partition = "3,2,1".parse().unwrap();
        let mu_dw = Dewindower::identity(&mu);
        let lam_dw = Dewindower::identity(&lam);
        let (lhs, rhs) = channel_alternating_sum(&mu, &mu_dw, &lam_dw).unwrap();
        assert_eq!(lhs, rhs);
        // single box
        let one: Partition = "1".parse().unwrap();
        let (lhs, rhs) = channel_alternating_sum(&one, &mu_dw, &lam_dw).unwrap();
        assert_eq!(lhs, rhs);
        // mu_R = lam_R on kappa: both sides zero
        let mu_dw2 = Dewindower::identity(&mu);
        let lam_dw2 = Dewindower::identity(&mu);
        let (lhs, rhs) = channel_alternating_sum(&one, &mu_dw2, &lam_dw2).unwrap();
        assert!(lhs.is_zero() && rhs.is_zero());
    }

    #[test]
    fn alternating_sum_identity_sweep() {
        // symbolic for all kappa <= mu <= lam with |lam| <= 6
        for nl in 1..=6 {
            for lam in crate::shapes::partitions_of(nl) {
                for mu in crate::shapes::subpartitions(&lam) {
                    if mu.is_empty() {
                        continue;
                    }
                    for kappa in crate::shapes::subpartitions(&mu) {
                        if kappa.is_empty() || kappa.size() > 3 {
                            continue;
                        }
                        let mu_dw = Dewindower::identity(&mu);
                        let lam_dw = Dewindower::identity(&lam);
                        let (lhs, rhs) =
                            channel_alternating_sum(&kappa, &mu_dw, &lam_dw).unwrap();
                        assert_eq!(lhs, rhs, "kappa={kappa} mu={mu} lam={lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn redundancy_relation_sweep() {
        for nl in 2..=6 {
            for lam in crate::shapes::partitions_of(nl) {
                for mu in crate::shapes::subpartitions(&lam) {
                    if mu.is_empty() {
                        continue;
                    }
                    let mu_dw = Dewindower::identity(&mu);
                    let lam_dw = Dewindower::identity(&lam);
                    for b in mu.cells() {
                        if e_hook(b, &mu_dw, &lam_dw).unwrap().is_zero() {
                            continue; // relation needs e != 0
                        }
                        let (lhs, rhs) = channel_redundancy(b, &mu_dw, &lam_dw).unwrap();
                        assert_eq!(lhs, rhs, "mu={mu} lam={lam} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn locality_through_instance_factor() {
        // the composite F on the Hanlon instance matches the direct lr ratio
        let inst = six_param_instance(0, 0, 1, 0, 0, 0).unwrap();
        let ctx = JackCtx::symbolic();
        let g_full = ctx.lr_g(&inst.mu, &inst.nu, &inst.lam).unwrap();
        // two-stage de-windowing keeps nu itself (nu_R de-windows into nu),
        // so compare against F * g_{mu_R, nu}^{lam_R1} via single-stage
        // locality instead: done in the locality suite. Here: F at a sample
        // equals g_full / g_windowed evaluated numerically for this c=2 case
        // where single-stage locality applies with R1.
        let g_win = ctx
            .lr_g(
                &"2,1".parse().unwrap(),
                &inst.nu,
                &"4,2,1".parse::<Partition>().unwrap(),
            )
            .unwrap();
        // lam_{R1} for the Hanlon instance is 421 itself (R1 covers it), so
        // this is a tautology guard rather than a lensing check.
        let _ = (g_full, g_win);
        let a = rat(2, 1);
        assert_eq!(inst.factor().eval(&a).unwrap(), rat(1, 3));
    }
}
