//! Exact linear algebra over Q for the channel-coefficient systems: assembles
//! the overdetermined system tying the de-windowed base rule to computed LR
//! values across the six-parameter grid, solves for affine solution sets and
//! kernel bases, tests candidate tables, and adjudicates the kernel-span
//! claims.
//!
//! Unknowns are the 4 * 2^9 integers d_phi^i: channel phi on the nine reduced
//! boxes, alpha power i in 0..=3.

use crate::exactalg::{AlphaPoly, BigRat};
use crate::jack::JackCtx;
use crate::rules::sixparam::SixParamInstance;
use crate::rules::{KVariant, RuleError};
use crate::shapes::Hook;
use num_traits::{One, Zero};

pub const NUM_CHANNELS: usize = 512;
pub const NUM_UNKNOWNS: usize = 4 * NUM_CHANNELS;

/// Decode a channel index into the three hook triples (mu, nu, lam-core),
/// box order (0,1), (0,0), (1,0) per shape; set bits mean upper hooks.
pub fn decode_channel(idx: usize) -> ([Hook; 3], [Hook; 3], [Hook; 3]) {
    let h = |bit: usize| {
        if idx & (1 << bit) != 0 {
            Hook::U
        } else {
            Hook::L
        }
    };
    (
        [h(0), h(1), h(2)],
        [h(3), h(4), h(5)],
        [h(6), h(7), h(8)],
    )
}

pub fn encode_channel(mu: [Hook; 3], nu: [Hook; 3], lam: [Hook; 3]) -> usize {
    let mut idx = 0;
    for (bit, h) in mu.iter().chain(&nu).chain(&lam).enumerate() {
        if *h == Hook::U {
            idx |= 1 << bit;
        }
    }
    idx
}

/// Column label: (channel index, alpha power).
pub fn unknown_index(channel: usize, power: usize) -> usize {
    channel * 4 + power
}

/// An exact linear system over Q with labeled columns.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    /// (coefficient vector, right-hand side) per row.
    pub rows: Vec<(Vec<BigRat>, BigRat)>,
    /// Rows skipped while building (pole hits), with a description.
    pub warnings: Vec<String>,
}

/// G_phi evaluated on an instance at a fixed alpha (three hook ratios).
fn channel_value(inst: &SixParamInstance, idx: usize, a: &BigRat) -> BigRat {
    let (mu, nu, lam) = decode_channel(idx);
    let mut v = BigRat::one();
    for i in 0..3 {
        v *= inst.mu_hook(i, mu[i]).eval(a);
        v *= inst.nu_hook(i, nu[i]).eval(a);
        v /= inst.lam_hook(i, lam[i]).eval(a);
    }
    v
}

/// One row per (instance, alpha): sum over (phi, i) of
/// G_phi(inst)(a) a^{i-3} d_phi^i = g / F_R, all entries exact rationals.
pub fn build_system(
    grid: &[SixParamInstance],
    alphas: &[BigRat],
) -> Result<LinearSystem, RuleError> {
    if grid.is_empty() {
        return Err(RuleError("empty instance grid".into()));
    }
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    for inst in grid {
        for a in alphas {
            let f = match inst.factor().eval(a) {
                Ok(v) if !v.is_zero() => v,
                _ => {
                    warnings.push(format!(
                        "skipped instance {:?} at alpha={a}: window factor pole",
                        inst.params
                    ));
                    continue;
                }
            };
            let ctx = JackCtx::fixed(a.clone());
            let g = ctx.lr_g(&inst.mu, &inst.nu, &inst.lam)?;
            let rhs = g / f;
            let a3 = a * a * a;
            let mut coeffs = vec![BigRat::zero(); NUM_UNKNOWNS];
            for idx in 0..NUM_CHANNELS {
                let gphi = channel_value(inst, idx, a);
                let mut pow = BigRat::one();
                for i in 0..4 {
                    coeffs[unknown_index(idx, i)] = &gphi * &pow / &a3;
                    pow *= a;
                }
            }
            rows.push((coeffs, rhs));
        }
    }
    Ok(LinearSystem { rows, warnings })
}

/// Affine solution description of a linear system.
#[derive(Debug, Clone)]
pub struct SolutionSet {
    /// A particular solution if the system is consistent.
    pub particular: Option<Vec<BigRat>>,
    /// Basis of the homogeneous kernel (populated only when requested).
    pub kernel_basis: Vec<Vec<BigRat>>,
    pub rank: usize,
    pub num_unknowns: usize,
    /// A row combination certifying inconsistency, when particular is None:
    /// indices of the rows that reduce to 0 = nonzero.
    pub certificate_row: Option<usize>,
}

/// Exact Gauss-Jordan elimination over Q. `want_kernel` materializes the
/// kernel basis (one vector per free column), which can be large.
pub fn solve(sys: &LinearSystem, want_kernel: bool) -> SolutionSet {
    let nrows = sys.rows.len();
    let ncols = sys.rows.first().map_or(0, |(c, _)| c.len());
    let mut m: Vec<Vec<BigRat>> = sys.rows.iter().map(|(c, _)| c.clone()).collect();
    let mut rhs: Vec<BigRat> = sys.rows.iter().map(|(_, r)| r.clone()).collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(pr) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        rhs.swap(r, pr);
        let inv = BigRat::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        rhs[r] *= &inv;
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = std::mem::replace(&mut m[i][c], BigRat::zero());
                for j in (c + 1)..ncols {
                    if !m[r][j].is_zero() {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                }
                let t = &rhs[r] * &f;
                rhs[i] -= t;
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let rank = r;
    let mut certificate_row = None;
    for i in rank..nrows {
        if !rhs[i].is_zero() {
            certificate_row = Some(i);
            break;
        }
    }
    let particular = if certificate_row.is_none() {
        let mut part = vec![BigRat::zero(); ncols];
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            part[pc] = rhs[ri].clone();
        }
        Some(part)
    } else {
        None
    };
    let mut kernel_basis = Vec::new();
    if want_kernel {
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; ncols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        for fc in 0..ncols {
            if is_pivot[fc] {
                continue;
            }
            let mut v = vec![BigRat::zero(); ncols];
            v[fc] = BigRat::one();
            for (ri, &pc) in pivot_cols.iter().enumerate() {
                if !m[ri][fc].is_zero() {
                    v[pc] = -m[ri][fc].clone();
                }
            }
            kernel_basis.push(v);
        }
    }
    SolutionSet {
        particular,
        kernel_basis,
        rank,
        num_unknowns: ncols,
        certificate_row,
    }
}

/// Exact residual of a candidate vector against every row; returns the list
/// of rows with nonzero residual.
pub fn residuals(sys: &LinearSystem, candidate: &[BigRat]) -> Vec<usize> {
    let mut bad = Vec::new();
    for (i, (coeffs, rhs)) in sys.rows.iter().enumerate() {
        let mut acc = BigRat::zero();
        for (c, x) in coeffs.iter().zip(candidate) {
            if !c.is_zero() && !x.is_zero() {
                acc += c * x;
            }
        }
        if &acc != rhs {
            bad.push(i);
        }
    }
    bad
}

/// The embedded 20-term table as a vector over the 2048 unknowns.
pub fn d20_vector() -> Result<Vec<BigRat>, RuleError> {
    let tables = crate::rules::solution_tables()?;
    let mut v = vec![BigRat::zero(); NUM_UNKNOWNS];
    for row in &tables.d20 {
        let idx = encode_channel(row.mu, row.nu, row.lam);
        for i in 0..4 {
            v[unknown_index(idx, i)] = row.d.coeff(i);
        }
    }
    Ok(v)
}

/// d'_phi(a) = a^3 d_{phi-bar}(1/a): flip every channel letter and reverse
/// the coefficient order.
pub fn conjugation_transform(d: &[BigRat]) -> Vec<BigRat> {
    assert_eq!(d.len(), NUM_UNKNOWNS);
    let mut out = vec![BigRat::zero(); NUM_UNKNOWNS];
    for idx in 0..NUM_CHANNELS {
        let flipped = idx ^ 0x1ff;
        for i in 0..4 {
            out[unknown_index(idx, i)] = d[unknown_index(flipped, 3 - i)].clone();
        }
    }
    out
}

// ---------------------------------------------------------------------------
// kernel generators
// ---------------------------------------------------------------------------

/// Which boxes carry the summed (A, B, C) letters for each of the six
/// generator families: the three boxes of one shape, or the (mu, lam, nu)
/// boxes in one fixed position with the lambda letter flipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelSet {
    MuTriple,
    NuTriple,
    LamTriple,
    /// position 0 = the (0,1) box of each shape, 1 = (0,0), 2 = (1,0)
    Cross(usize),
}

pub const KERNEL_SETS: [KernelSet; 6] = [
    KernelSet::MuTriple,
    KernelSet::NuTriple,
    KernelSet::LamTriple,
    KernelSet::Cross(0),
    KernelSet::Cross(1),
    KernelSet::Cross(2),
];

/// A kernel generator candidate: a vector over the (phi, i) unknowns built
/// from one set, one fixed assignment of the six remaining boxes, the k-sign
/// variant, whether the weight letters are flipped relative to the summed
/// channel letters (the printed lemma flips), and a multiplying power
/// alpha^m (m in 0..=2, keeping coefficients cubic).
pub fn kernel_generator(
    set: KernelSet,
    psi: usize,
    variant: KVariant,
    weight_flipped: bool,
    m_pow: usize,
) -> Vec<BigRat> {
    assert!(psi < 64 && m_pow <= 2);
    let mut v = vec![BigRat::zero(); NUM_UNKNOWNS];
    for abc_mask in 0..8usize {
        let abc: [Hook; 3] = std::array::from_fn(|i| {
            if abc_mask & (1 << i) != 0 {
                Hook::U
            } else {
                Hook::L
            }
        });
        let wletters = if weight_flipped {
            [abc[0].flip(), abc[1].flip(), abc[2].flip()]
        } else {
            abc
        };
        let weight: AlphaPoly = crate::rules::k_canonical(wletters, variant);
        // distribute the six psi bits over the boxes not carrying (A, B, C)
        let mut bits = [Hook::L; 9];
        let mut psi_iter = (0..6).map(|b| {
            if psi & (1 << b) != 0 {
                Hook::U
            } else {
                Hook::L
            }
        });
        match set {
            KernelSet::MuTriple => {
                for i in 0..3 {
                    bits[i] = abc[i];
                }
                for slot in 3..9 {
                    bits[slot] = psi_iter.next().unwrap();
                }
            }
            KernelSet::NuTriple => {
                for i in 0..3 {
                    bits[3 + i] = abc[i];
                }
                for slot in (0..3).chain(6..9) {
                    bits[slot] = psi_iter.next().unwrap();
                }
            }
            KernelSet::LamTriple => {
                for i in 0..3 {
                    bits[6 + i] = abc[i];
                }
                for slot in 0..6 {
                    bits[slot] = psi_iter.next().unwrap();
                }
            }
            KernelSet::Cross(pos) => {
                bits[pos] = abc[0];
                bits[3 + pos] = abc[2];
                bits[6 + pos] = abc[1].flip();
                for slot in (0..9).filter(|s| s % 3 != pos) {
                    bits[slot] = psi_iter.next().unwrap();
                }
            }
        }
        let idx = encode_channel(
            [bits[0], bits[1], bits[2]],
            [bits[3], bits[4], bits[5]],
            [bits[6], bits[7], bits[8]],
        );
        // weight * alpha^m contributes to coefficients m and m+1
        for (k, c) in weight.coeffs().iter().enumerate() {
            let i = k + m_pow;
            debug_assert!(i <= 3);
            v[unknown_index(idx, i)] += c;
        }
    }
    v
}

/// All 6 x 64 x 3 generators with the printed lemma's weights (flipped
/// letters, one k-sign variant for every set).
pub fn kernel_generators(variant: KVariant) -> Vec<Vec<BigRat>> {
    let mut out = Vec::with_capacity(6 * 64 * 3);
    for set in KERNEL_SETS {
        for psi in 0..64 {
            for m_pow in 0..3 {
                out.push(kernel_generator(set, psi, variant, true, m_pow));
            }
        }
    }
    out
}

/// The engine-adjudicated generator family: printed table weights with
/// flipped letters on five sets, unflipped on the middle cross set (whose
/// de-windowed hook triple satisfies the -alpha relation instead of the +1
/// relation, swapping which eight-term identity applies).
pub fn kernel_generators_adjudicated() -> Vec<Vec<BigRat>> {
    let mut out = Vec::with_capacity(6 * 64 * 3);
    for set in KERNEL_SETS {
        let flipped = set != KernelSet::Cross(1);
        for psi in 0..64 {
            for m_pow in 0..3 {
                out.push(kernel_generator(set, psi, KVariant::Table, flipped, m_pow));
            }
        }
    }
    out
}

/// Exact membership of a vector in the kernel of the homogeneous system.
pub fn in_kernel(sys: &LinearSystem, v: &[BigRat]) -> bool {
    sys.rows.iter().all(|(coeffs, _)| {
        let mut acc = BigRat::zero();
        for (c, x) in coeffs.iter().zip(v) {
            if !c.is_zero() && !x.is_zero() {
                acc += c * x;
            }
        }
        acc.is_zero()
    })
}

// ---------------------------------------------------------------------------
// modular rank (for the large adjudication)
// ---------------------------------------------------------------------------

const PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 4_611_686_018_427_387_847, 9_007_199_254_740_881];

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    ((t % p as i128 + p as i128) % p as i128) as u64
}

fn rat_mod(x: &BigRat, p: u64) -> Option<u64> {
    let pm = num_bigint::BigInt::from(p);
    let n = ((x.numer() % &pm) + &pm) % &pm;
    let d = ((x.denom() % &pm) + &pm) % &pm;
    let n: u64 = n.try_into().ok()?;
    let d: u64 = d.try_into().ok()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, mod_inv(d, p), p))
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Rank of a rational matrix modulo each of the fixed primes. A modular rank
/// is always a lower bound on the rank over Q (a nonzero minor mod p is
/// nonzero over Q); agreement across primes plus an independent upper bound
/// certifies the exact rank.
pub fn rank_mod_primes(rows: &[Vec<BigRat>]) -> Vec<(u64, usize)> {
    PRIMES
        .iter()
        .filter_map(|&p| {
            let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
            for row in rows {
                let mut r = Vec::with_capacity(row.len());
                for x in row {
                    r.push(rat_mod(x, p)?);
                }
                m.push(r);
            }
            Some((p, rank_mod_p(&mut m, p)))
        })
        .collect()
}

fn rank_mod_p(m: &mut [Vec<u64>], p: u64) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = mod_inv(m[r][c], p);
        for j in c..ncols {
            m[r][j] = mulmod(m[r][j], inv, p);
        }
        for i in 0..nrows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in c..ncols {
                    let t = mulmod(m[r][j], f, p);
                    m[i][j] = (m[i][j] + p - t) % p;
                }
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Kernel adjudication report for one k-sign variant.
#[derive(Debug, Clone)]
pub struct KernelReport {
    pub variant: KVariant,
    /// Per generator family: how many of the 64 x 3 generators lie in the
    /// grid kernel exactly.
    pub members_per_set: Vec<(String, usize, usize)>,
    /// Modular ranks of the generator span.
    pub generator_rank: Vec<(u64, usize)>,
    /// Whether every generator lies in the kernel.
    pub all_members: bool,
}

/// Exact membership test of every generator family against the grid system,
/// plus modular ranks of the generator span. With `adjudicated` the middle
/// cross set uses the unflipped weight letters.
pub fn adjudicate_kernel(sys: &LinearSystem, variant: KVariant, adjudicated: bool) -> KernelReport {
    let mut members_per_set = Vec::new();
    let mut all_members = true;
    let mut span: Vec<Vec<BigRat>> = Vec::new();
    for set in KERNEL_SETS {
        let flipped = !(adjudicated && set == KernelSet::Cross(1));
        let mut total = 0;
        let mut members = 0;
        for psi in 0..64 {
            for m_pow in 0..3 {
                let g = kernel_generator(set, psi, variant, flipped, m_pow);
                total += 1;
                if in_kernel(sys, &g) {
                    members += 1;
                } else {
                    all_members = false;
                }
                span.push(g);
            }
        }
        members_per_set.push((format!("{set:?}"), members, total));
    }
    let generator_rank = rank_mod_primes(&span);
    KernelReport {
        variant,
        members_per_set,
        generator_rank,
        all_members,
    }
}

/// Modular ranks of the grid system's coefficient matrix.
pub fn system_rank_mod(sys: &LinearSystem) -> Vec<(u64, usize)> {
    let rows: Vec<Vec<BigRat>> = sys.rows.iter().map(|(c, _)| c.clone()).collect();
    rank_mod_primes(&rows)
}
