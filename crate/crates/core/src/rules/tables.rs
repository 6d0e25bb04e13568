//! The three embedded channel-solution tables for the six-parameter family
//! and their evaluation: the 20-term de-windowed rule (d20), the symmetric
//! eight-channel factorized solution over kappa = 21 (h8), and the regular
//! four-channel solution over kappa = 2 (h4).
//!
//! Tables are checked data: every file carries a checksum over its data
//! lines and loading fails if the data was edited without updating it.

use super::sixparam::{SixParamInstance, TwoRowFamily};
use super::RuleError;
use crate::exactalg::{int, AlphaPoly, AlphaRat, BigRat};
use crate::shapes::{lower_hook_product, Hook};
use num_traits::Zero;
use std::sync::OnceLock;

const D20_DATA: &str = include_str!("../../data/d20.tsv");
const H8_DATA: &str = include_str!("../../data/h8.tsv");
const H4_DATA: &str = include_str!("../../data/h4.tsv");

/// FNV-1a 64-bit checksum used to pin the table data.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Splits a table file into its data lines, verifying the `checksum` header.
fn checked_lines(raw: &'static str, name: &str) -> Result<Vec<&'static str>, RuleError> {
    let mut expected: Option<u64> = None;
    let mut lines = Vec::new();
    for line in raw.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if let Some(rest) = t.strip_prefix("checksum ") {
            expected = Some(
                u64::from_str_radix(rest.trim(), 16)
                    .map_err(|_| RuleError(format!("{name}: bad checksum literal")))?,
            );
            continue;
        }
        lines.push(t);
    }
    let expected =
        expected.ok_or_else(|| RuleError(format!("{name}: missing checksum header")))?;
    let joined = lines.join("\n");
    let got = fnv1a64(joined.as_bytes());
    if got != expected {
        return Err(RuleError(format!(
            "{name}: table transcription checksum mismatch (expected {expected:016x}, data hashes to {got:016x})"
        )));
    }
    Ok(lines)
}

fn parse_hooks<const N: usize>(s: &str, name: &str) -> Result<[Hook; N], RuleError> {
    let v: Vec<Hook> = s.chars().filter_map(Hook::from_char).collect();
    if v.len() != N || s.len() != N {
        return Err(RuleError(format!("{name}: bad hook string {s:?}")));
    }
    Ok(std::array::from_fn(|i| v[i]))
}

// ---------------------------------------------------------------------------
// d20
// ---------------------------------------------------------------------------

/// One row of the 20-term table: a channel on the nine reduced boxes (three
/// per shape, box order (0,1),(0,0),(1,0)) and its cubic coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct D20Row {
    pub mu: [Hook; 3],
    pub nu: [Hook; 3],
    pub lam: [Hook; 3],
    pub d: AlphaPoly,
}

impl D20Row {
    /// phi^T: reverse each shape's letter triple.
    pub fn transpose_channel(&self) -> ([Hook; 3], [Hook; 3], [Hook; 3]) {
        let rev = |a: [Hook; 3]| [a[2], a[1], a[0]];
        (rev(self.mu), rev(self.nu), rev(self.lam))
    }
}

fn parse_d20() -> Result<Vec<D20Row>, RuleError> {
    let mut rows = Vec::new();
    for line in checked_lines(D20_DATA, "d20")? {
        let (chan, coefs) = line
            .split_once('\t')
            .ok_or_else(|| RuleError(format!("d20: bad row {line:?}")))?;
        let (mu, rest) = chan
            .split_once(';')
            .ok_or_else(|| RuleError(format!("d20: bad channel {chan:?}")))?;
        let (nu, lam) = rest
            .split_once('|')
            .ok_or_else(|| RuleError(format!("d20: bad channel {chan:?}")))?;
        let cs: Vec<i64> = coefs
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| RuleError(format!("d20: bad coefficients {coefs:?}")))?;
        if cs.len() != 4 {
            return Err(RuleError("d20: need four coefficients".into()));
        }
        rows.push(D20Row {
            mu: parse_hooks::<3>(mu, "d20")?,
            nu: parse_hooks::<3>(nu, "d20")?,
            lam: parse_hooks::<3>(lam, "d20")?,
            d: AlphaPoly::new(cs.into_iter().map(int).collect()),
        });
    }
    if rows.len() != 20 {
        return Err(RuleError(format!("d20: expected 20 rows, found {}", rows.len())));
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// h8
// ---------------------------------------------------------------------------

/// Symbols available to the eight-channel solution: inverses of de-windowed
/// nu-hooks, the two constant k-values, and beta.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H8Sym {
    HUa,
    HLa,
    HUb,
    HLb,
    HUc,
    HLc,
    KUuu,
    KLll,
    Beta,
}

impl H8Sym {
    fn parse(s: &str) -> Option<H8Sym> {
        Some(match s {
            "hU(a)" => H8Sym::HUa,
            "hL(a)" => H8Sym::HLa,
            "hU(b)" => H8Sym::HUb,
            "hL(b)" => H8Sym::HLb,
            "hU(c)" => H8Sym::HUc,
            "hL(c)" => H8Sym::HLc,
            "kUUU" => H8Sym::KUuu,
            "kLLL" => H8Sym::KLll,
            "beta" => H8Sym::Beta,
            _ => return None,
        })
    }
}

/// One row: the channel letters (applied to both the mu_R numerator and the
/// lam_R denominator over kappa = 21) and the expression H/Z as a sum of
/// integer multiples of symbol inverses.
#[derive(Debug, Clone, PartialEq)]
pub struct H8Row {
    pub channel: [Hook; 3],
    pub terms: Vec<(i64, H8Sym)>,
}

fn parse_h8() -> Result<Vec<H8Row>, RuleError> {
    let mut rows = Vec::new();
    for line in checked_lines(H8_DATA, "h8")? {
        let (chan, expr) = line
            .split_once('\t')
            .ok_or_else(|| RuleError(format!("h8: bad row {line:?}")))?;
        let mut terms = Vec::new();
        for t in expr.split('+') {
            let t = t.trim();
            let (c, sym) = t
                .split_once('/')
                .ok_or_else(|| RuleError(format!("h8: bad term {t:?}")))?;
            let c: i64 = c
                .trim()
                .parse()
                .map_err(|_| RuleError(format!("h8: bad coefficient {c:?}")))?;
            let sym = H8Sym::parse(sym.trim())
                .ok_or_else(|| RuleError(format!("h8: unknown symbol {sym:?}")))?;
            terms.push((c, sym));
        }
        rows.push(H8Row {
            channel: parse_hooks::<3>(chan, "h8")?,
            terms,
        });
    }
    if rows.len() != 8 {
        return Err(RuleError(format!("h8: expected 8 rows, found {}", rows.len())));
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// h4
// ---------------------------------------------------------------------------

/// A linear form c0 + cp p + cs s + ct t + (d0 + dp p + ds s + dt t) alpha in
/// the window parameters, with t = T + K alpha substituted on evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinForm {
    pub c: [i64; 4],
    pub d: [i64; 4],
}

impl LinForm {
    /// Evaluate at integer (p, s) with t as an arbitrary linear polynomial
    /// t0 + t1 alpha.
    pub fn eval(&self, p: i64, s: i64, t0: i64, t1: i64) -> AlphaPoly {
        let cval = self.c[0] + self.c[1] * p + self.c[2] * s + self.c[3] * t0;
        let dval = self.d[0] + self.d[1] * p + self.d[2] * s + self.d[3] * t0 + self.c[3] * t1;
        let d2 = self.d[3] * t1;
        AlphaPoly::new(vec![int(cval), int(dval), int(d2)])
    }

    fn parse(s: &str) -> Result<LinForm, RuleError> {
        // grammar: sum of signed atoms; atom = k | k*p | k*s | k*t | k*a |
        // k*p*a | k*s*a | k*t*a, written like "2", "p", "-s*a", "2*t*a", "a".
        let mut form = LinForm {
            c: [0; 4],
            d: [0; 4],
        };
        let normalized = s.replace('-', "+-");
        for raw in normalized.split('+') {
            let mut atom = raw.trim();
            if atom.is_empty() {
                continue;
            }
            let mut coef: i64 = 1;
            if let Some(rest) = atom.strip_prefix('-') {
                coef = -1;
                atom = rest.trim();
            }
            let mut var = 0usize; // index into c
            let mut alpha = false;
            let mut seen_number = false;
            for piece in atom.split('*') {
                match piece.trim() {
                    "p" => var = 1,
                    "s" => var = 2,
                    "t" => var = 3,
                    "a" => alpha = true,
                    other => {
                        let k: i64 = other
                            .parse()
                            .map_err(|_| RuleError(format!("h4: bad atom {raw:?}")))?;
                        coef *= k;
                        seen_number = true;
                    }
                }
            }
            let _ = seen_number;
            if alpha {
                form.d[var] += coef;
            } else {
                form.c[var] += coef;
            }
        }
        Ok(form)
    }
}

/// One row of the four-channel table: numerator letters on the kappa = 2
/// boxes of mu_R, denominator letters on the same boxes of lam_R, the claimed
/// Schur-limit coefficient, a sign, a power of alpha dividing the expression,
/// and the numerator/denominator factor lists.
#[derive(Debug, Clone, PartialEq)]
pub struct H4Row {
    pub num_hooks: [Hook; 2],
    pub den_hooks: [Hook; 2],
    pub c_limit: i64,
    pub sign: i64,
    pub alpha_den_pow: u32,
    pub num_factors: Vec<LinForm>,
    pub den_factors: Vec<LinForm>,
}

impl H4Row {
    /// H(p, s, t) with t = t0 + t1 alpha.
    pub fn value(&self, p: i64, s: i64, t0: i64, t1: i64) -> AlphaRat {
        let mut num = AlphaPoly::from_int(self.sign);
        for f in &self.num_factors {
            num = &num * &f.eval(p, s, t0, t1);
        }
        let mut den = AlphaPoly::alpha().pow(self.alpha_den_pow);
        for f in &self.den_factors {
            den = &den * &f.eval(p, s, t0, t1);
        }
        AlphaRat::reduce(num, den).expect("nonzero denominator in h4 row")
    }
}

fn parse_h4() -> Result<Vec<H4Row>, RuleError> {
    let mut rows = Vec::new();
    for line in checked_lines(H4_DATA, "h4")? {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 6 {
            return Err(RuleError(format!("h4: bad row {line:?}")));
        }
        let (chan, climit, sign, apow, numf, denf) = (
            fields[0], fields[1], fields[2], fields[3], fields[4], fields[5],
        );
        let (num, den) = chan
            .split_once('/')
            .ok_or_else(|| RuleError(format!("h4: bad channel {chan:?}")))?;
        let parse_factors = |s: &str| -> Result<Vec<LinForm>, RuleError> {
            s.split(';')
                .map(|f| LinForm::parse(f.trim()))
                .collect::<Result<Vec<_>, _>>()
        };
        rows.push(H4Row {
            num_hooks: parse_hooks::<2>(num, "h4")?,
            den_hooks: parse_hooks::<2>(den, "h4")?,
            c_limit: climit
                .parse()
                .map_err(|_| RuleError("h4: bad C column".into()))?,
            sign: sign.parse().map_err(|_| RuleError("h4: bad sign".into()))?,
            alpha_den_pow: apow
                .parse()
                .map_err(|_| RuleError("h4: bad alpha power".into()))?,
            num_factors: parse_factors(numf)?,
            den_factors: parse_factors(denf)?,
        });
    }
    if rows.len() != 4 {
        return Err(RuleError(format!("h4: expected 4 rows, found {}", rows.len())));
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// table access
// ---------------------------------------------------------------------------

pub struct SolutionTables {
    pub d20: Vec<D20Row>,
    pub h8: Vec<H8Row>,
    pub h4: Vec<H4Row>,
}

static TABLES: OnceLock<Result<SolutionTables, RuleError>> = OnceLock::new();

/// The three solution tables, parsed and checksum-verified once.
pub fn solution_tables() -> Result<&'static SolutionTables, RuleError> {
    TABLES
        .get_or_init(|| {
            Ok(SolutionTables {
                d20: parse_d20()?,
                h8: parse_h8()?,
                h4: parse_h4()?,
            })
        })
        .as_ref()
        .map_err(Clone::clone)
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

/// Right side of the 20-term rule on an instance:
/// F_R * sum_phi G_{phi,R} d_phi(a) / a^3.
pub fn evaluate_d20(inst: &SixParamInstance) -> Result<AlphaRat, RuleError> {
    let tables = solution_tables()?;
    let mut acc = AlphaRat::zero();
    for row in &tables.d20 {
        let mut num = row.d.clone();
        for i in 0..3 {
            num = &num * &inst.mu_hook(i, row.mu[i]);
            num = &num * &inst.nu_hook(i, row.nu[i]);
        }
        let mut den = AlphaPoly::alpha().pow(3);
        for i in 0..3 {
            den = &den * &inst.lam_hook(i, row.lam[i]);
        }
        acc = &acc + &AlphaRat::reduce(num, den).unwrap();
    }
    Ok(inst.factor() * &acc)
}

/// The de-windowed Z expression of the eight-channel solution:
/// j_{nu_R} / (k^{UUU} k^{LLL} prod e).
fn h8_z(inst: &SixParamInstance) -> AlphaRat {
    let mut num = AlphaPoly::one();
    for i in 0..3 {
        num = &num * &inst.nu_hook(i, Hook::U);
        num = &num * &inst.nu_hook(i, Hook::L);
    }
    let mut den = &h8_k(inst, Hook::U) * &h8_k(inst, Hook::L);
    for i in 0..3 {
        den = &den * &inst.e_at(i);
    }
    AlphaRat::reduce(num, den).expect("Z denominator vanished")
}

/// k^{AAA}_{nu_R} = -h^A(a) + h^A(b) - h^A(c) on the de-windowed nu hooks.
fn h8_k(inst: &SixParamInstance, h: Hook) -> AlphaPoly {
    &(&inst.nu_hook(1, h) - &inst.nu_hook(0, h)) - &inst.nu_hook(2, h)
}

fn h8_symbol(inst: &SixParamInstance, sym: H8Sym) -> AlphaPoly {
    match sym {
        H8Sym::HUa => inst.nu_hook(0, Hook::U),
        H8Sym::HLa => inst.nu_hook(0, Hook::L),
        H8Sym::HUb => inst.nu_hook(1, Hook::U),
        H8Sym::HLb => inst.nu_hook(1, Hook::L),
        H8Sym::HUc => inst.nu_hook(2, Hook::U),
        H8Sym::HLc => inst.nu_hook(2, Hook::L),
        H8Sym::KUuu => h8_k(inst, Hook::U),
        H8Sym::KLll => h8_k(inst, Hook::L),
        H8Sym::Beta => AlphaPoly::beta(),
    }
}

/// One channel solution H_Phi = Z * sum c / sym.
fn h8_channel_value(inst: &SixParamInstance, row: &H8Row) -> AlphaRat {
    let z = h8_z(inst);
    let mut acc = AlphaRat::zero();
    for &(c, sym) in &row.terms {
        let v = h8_symbol(inst, sym);
        acc = &acc + &AlphaRat::reduce(AlphaPoly::from_int(c), v).unwrap();
    }
    &z * &acc
}

/// Right side of the factorized eight-channel rule:
/// F_R * sum_Phi G^{kappa=21}_Phi H_Phi(p, s).
pub fn evaluate_h8(inst: &SixParamInstance) -> Result<AlphaRat, RuleError> {
    let tables = solution_tables()?;
    let mut acc = AlphaRat::zero();
    for row in &tables.h8 {
        let mut num = AlphaPoly::one();
        let mut den = AlphaPoly::one();
        for i in 0..3 {
            num = &num * &inst.mu_hook(i, row.channel[i]);
            den = &den * &inst.lam_hook(i, row.channel[i]);
        }
        let g = AlphaRat::reduce(num, den).unwrap();
        acc = &acc + &(&g * &h8_channel_value(inst, row));
    }
    Ok(inst.factor() * &acc)
}

/// Right side of the regular four-channel rule over kappa = 2 (the boxes
/// (0,0) and (1,0) of mu_R): F_R * sum_Phi G_Phi H_Phi(p, s, t), t = T + K a.
pub fn evaluate_h4(inst: &SixParamInstance) -> Result<AlphaRat, RuleError> {
    let tables = solution_tables()?;
    let (p, s) = (inst.p_param() as i64, inst.s_param() as i64);
    let (t0, t1) = (inst.t_param() as i64, inst.k() as i64);
    let mut acc = AlphaRat::zero();
    for row in &tables.h4 {
        let mut num = AlphaPoly::one();
        let mut den = AlphaPoly::one();
        for i in 0..2 {
            num = &num * &inst.mu_hook(i + 1, row.num_hooks[i]);
            den = &den * &inst.lam_hook(i + 1, row.den_hooks[i]);
        }
        let g = AlphaRat::reduce(num, den).unwrap();
        acc = &acc + &(&g * &row.value(p, s, t0, t1));
    }
    Ok(inst.factor() * &acc)
}

/// Per-channel local coefficients at alpha -> 1 for the four-channel
/// solution on a real instance: the limit of
/// (H_lam / (H_mu H_nu)) F_R G_Phi H_Phi, or `None` at a pole.
pub fn h4_regular_limits(inst: &SixParamInstance) -> Result<Vec<Option<BigRat>>, RuleError> {
    let tables = solution_tables()?;
    let (p, s) = (inst.p_param() as i64, inst.s_param() as i64);
    let (t0, t1) = (inst.t_param() as i64, inst.k() as i64);
    let hscale = AlphaRat::reduce(
        lower_hook_product(&inst.lam),
        &lower_hook_product(&inst.mu) * &lower_hook_product(&inst.nu),
    )
    .unwrap();
    let mut out = Vec::new();
    for row in &tables.h4 {
        let mut num = AlphaPoly::one();
        let mut den = AlphaPoly::one();
        for i in 0..2 {
            num = &num * &inst.mu_hook(i + 1, row.num_hooks[i]);
            den = &den * &inst.lam_hook(i + 1, row.den_hooks[i]);
        }
        let g = AlphaRat::reduce(num, den).unwrap();
        let c_tilde = &(&hscale * inst.factor()) * &(&g * &row.value(p, s, t0, t1));
        out.push(c_tilde.limit_at_one().ok());
    }
    Ok(out)
}

/// The closed-form window factor of the two-row family
/// (p = s = 0, K = N = 0; t = a1 - a2 - 1 may be -1 on the boundary):
/// a^2 (t + 1 + 2a) / ((t + a)(a1 - 1 + 2a)(a2 - 1 + a)).
fn two_row_factor(fam: &TwoRowFamily) -> AlphaRat {
    let t = fam.a1 - fam.a2 - 1;
    let num = &AlphaPoly::alpha().pow(2) * &AlphaPoly::lin(t + 1, 2);
    let den = &(&AlphaPoly::lin(t, 1) * &AlphaPoly::lin(fam.a1 - 1, 2))
        * &AlphaPoly::lin(fam.a2 - 1, 1);
    AlphaRat::reduce(num, den).expect("two-row factor denominator vanished")
}

/// The four-channel value on the two-row family, valid formally down to the
/// a1 = a2 boundary.
pub fn evaluate_h4_two_row(fam: &TwoRowFamily) -> Result<AlphaRat, RuleError> {
    let tables = solution_tables()?;
    let t = fam.a1 - fam.a2 - 1;
    let mut acc = AlphaRat::zero();
    for row in &tables.h4 {
        let mut num = AlphaPoly::one();
        let mut den = AlphaPoly::one();
        for i in 0..2 {
            num = &num * &fam.mu_hook(i, row.num_hooks[i]);
            den = &den * &fam.lam_hook(i, row.den_hooks[i]);
        }
        let g = AlphaRat::reduce(num, den).unwrap();
        acc = &acc + &(&g * &row.value(0, 0, t, 0));
    }
    Ok(&two_row_factor(fam) * &acc)
}

/// Per-channel Schur-limit coefficients on the two-row family; the shapes
/// mu = (a1, a2), nu = 21, lam = (a1+1, a2+1, 1) exist for every a1 >= a2,
/// so the boundary case is covered.
pub fn h4_two_row_limits(fam: &TwoRowFamily) -> Result<Vec<Option<BigRat>>, RuleError> {
    let tables = solution_tables()?;
    let t = fam.a1 - fam.a2 - 1;
    assert!(fam.a2 >= 1 && fam.a1 >= fam.a2);
    let mu = crate::shapes::Partition::new(
        [fam.a1 as usize, fam.a2 as usize]
            .into_iter()
            .filter(|&x| x > 0)
            .collect(),
    );
    let nu = crate::shapes::Partition::new(vec![2, 1]);
    let lam = crate::shapes::Partition::new(vec![fam.a1 as usize + 1, fam.a2 as usize + 1, 1]);
    let hscale = AlphaRat::reduce(
        lower_hook_product(&lam),
        &lower_hook_product(&mu) * &lower_hook_product(&nu),
    )
    .unwrap();
    let f = two_row_factor(fam);
    let mut out = Vec::new();
    for row in &tables.h4 {
        let mut num = AlphaPoly::one();
        let mut den = AlphaPoly::one();
        for i in 0..2 {
            num = &num * &fam.mu_hook(i, row.num_hooks[i]);
            den = &den * &fam.lam_hook(i, row.den_hooks[i]);
        }
        let g = AlphaRat::reduce(num, den).unwrap();
        let c_tilde = &(&hscale * &f) * &(&g * &row.value(0, 0, t, 0));
        out.push(c_tilde.limit_at_one().ok());
    }
    Ok(out)
}

/// Sum of d_phi(1) over the 20-term table (the Schur LR coefficient of the
/// windowed base problem).
pub fn d20_schur_sum() -> Result<BigRat, RuleError> {
    let tables = solution_tables()?;
    let mut acc = BigRat::zero();
    for row in &tables.d20 {
        acc += row.d.eval(&int(1));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::rules::six_param_instance;
    use crate::shapes::Hook::{L, U};

    #[test]
    fn checksums_pin_the_data() {
        // loading validates every checksum
        let t = solution_tables().unwrap();
        assert_eq!(t.d20.len(), 20);
        assert_eq!(t.h8.len(), 8);
        assert_eq!(t.h4.len(), 4);
        // tampering is caught
        let mut lines: Vec<&str> = D20_DATA
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("checksum"))
            .collect();
        lines[0] = "UUU;UUU|UUU\t1,0,0,0";
        let tampered = lines.join("\n");
        assert_ne!(
            fnv1a64(tampered.as_bytes()),
            fnv1a64(
                D20_DATA
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("checksum"))
                    .collect::<Vec<_>>()
                    .join("\n")
                    .as_bytes()
            )
        );
    }

    #[test]
    fn d20_transpose_symmetry() {
        // d_phi = d_{phi^T}: every row's transpose is in the table with the
        // same coefficient
        let t = solution_tables().unwrap();
        for row in &t.d20 {
            let (tm, tn, tl) = row.transpose_channel();
            let partner = t
                .d20
                .iter()
                .find(|r| r.mu == tm && r.nu == tn && r.lam == tl)
                .unwrap_or_else(|| panic!("missing transpose partner of {:?}", (row.mu, row.nu, row.lam)));
            assert_eq!(partner.d, row.d);
        }
    }

    #[test]
    fn d20_schur_sum_is_two() {
        assert_eq!(d20_schur_sum().unwrap(), int(2));
    }

    #[test]
    fn h8_symmetries() {
        // transpose: reverse the channel letters and swap the a <-> c
        // symbols; conjugation: flip every letter, swap U <-> L symbols and
        // negate the beta term. Both must map the table onto itself.
        let t = solution_tables().unwrap();
        let tsym = |s: H8Sym| match s {
            H8Sym::HUa => H8Sym::HUc,
            H8Sym::HUc => H8Sym::HUa,
            H8Sym::HLa => H8Sym::HLc,
            H8Sym::HLc => H8Sym::HLa,
            other => other,
        };
        let csym = |s: H8Sym| match s {
            H8Sym::HUa => H8Sym::HLa,
            H8Sym::HLa => H8Sym::HUa,
            H8Sym::HUb => H8Sym::HLb,
            H8Sym::HLb => H8Sym::HUb,
            H8Sym::HUc => H8Sym::HLc,
            H8Sym::HLc => H8Sym::HUc,
            H8Sym::KUuu => H8Sym::KLll,
            H8Sym::KLll => H8Sym::KUuu,
            H8Sym::Beta => H8Sym::Beta,
        };
        let norm = |mut terms: Vec<(i64, H8Sym)>| {
            terms.sort_by_key(|&(c, s)| (s as usize, c));
            terms
        };
        for row in &t.h8 {
            let tch = [row.channel[2], row.channel[1], row.channel[0]];
            let texp: Vec<(i64, H8Sym)> =
                row.terms.iter().map(|&(c, s)| (c, tsym(s))).collect();
            let partner = t.h8.iter().find(|r| r.channel == tch).unwrap();
            assert_eq!(
                norm(partner.terms.clone()),
                norm(texp),
                "transpose symmetry at {:?}",
                row.channel
            );
            let cch = [
                row.channel[0].flip(),
                row.channel[1].flip(),
                row.channel[2].flip(),
            ];
            let cexp: Vec<(i64, H8Sym)> = row
                .terms
                .iter()
                .map(|&(c, s)| {
                    if s == H8Sym::Beta {
                        (-c, s)
                    } else {
                        (c, csym(s))
                    }
                })
                .collect();
            let partner = t.h8.iter().find(|r| r.channel == cch).unwrap();
            assert_eq!(
                norm(partner.terms.clone()),
                norm(cexp),
                "conjugation symmetry at {:?}",
                row.channel
            );
        }
    }

    #[test]
    fn h8_channels_are_diagonal_support() {
        // the solution is supported on channels of the form G^X_X by
        // construction; the evaluator pairs the same letters on mu_R and
        // lam_R, so here we just pin the channel set
        let t = solution_tables().unwrap();
        let mut chans: Vec<[Hook; 3]> = t.h8.iter().map(|r| r.channel).collect();
        chans.sort_by_key(|c| c.map(|h| h == U));
        assert_eq!(chans.len(), 8);
    }

    #[test]
    fn h4_c_column() {
        let t = solution_tables().unwrap();
        let cs: Vec<i64> = t.h4.iter().map(|r| r.c_limit).collect();
        assert_eq!(cs, vec![0, 0, 1, 1]);
        assert_eq!(t.h4[0].num_hooks, [U, U]);
        assert_eq!(t.h4[1].num_hooks, [U, L]);
        assert_eq!(t.h4[1].den_hooks, [L, U]);
        assert_eq!(t.h4[3].num_hooks, [L, U]);
    }

    #[test]
    fn base_instance_evaluations_match_engine() {
        let inst = six_param_instance(0, 0, 0, 0, 0, 0).unwrap();
        let ctx = crate::jack::JackCtx::symbolic();
        let g = ctx.lr_g(&inst.mu, &inst.nu, &inst.lam).unwrap();
        assert_eq!(evaluate_d20(&inst).unwrap(), g);
        assert_eq!(evaluate_h8(&inst).unwrap(), g);
        assert_eq!(evaluate_h4(&inst).unwrap(), g);
    }

    #[test]
    fn h8_channel_values_have_simple_poles_at_one() {
        // each channel solution alone has a pole at alpha = 1 (reported as
        // irregular), while the assembled sum does not
        let inst = six_param_instance(0, 0, 1, 0, 0, 0).unwrap();
        let t = solution_tables().unwrap();
        let mut any_pole = false;
        for row in &t.h8 {
            let h = h8_channel_value(&inst, row);
            if h.limit_at_one().is_err() {
                any_pole = true;
            }
        }
        assert!(any_pole, "h8 channel solutions are singular at alpha = 1");
        let total = evaluate_h8(&inst).unwrap();
        assert!(total.limit_at_one().is_ok());
        let _ = rat(1, 2);
    }
}
