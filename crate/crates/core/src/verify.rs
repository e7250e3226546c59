//! Verification suites: every identity the crate implements, checked
//! exactly on the desk-scale systems, as a machine-readable report.
//!
//! Randomized suites draw all their inputs from a single ChaCha8 stream
//! seeded by the caller before any parallel work starts, so a report is a
//! pure function of `(suite, options)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::basis_change::{
    certificate_report, extra_indices, hook_matrix_is_hessenberg, jacobian_determinant,
    jt_character_ga, triangular_solve, Partition,
};
use crate::casimir::{
    c0_rational_eval, constituents, eigenvalue_direct, eigenvalue_via_hc, g0_closed_form,
    g1_closed_form, g_rational_eval, hc_denominator, unit_product_identity_holds, Constituent,
    Engine,
};
use crate::error::{Error, Result};
use crate::exact_arith::{det_bareiss, det_cofactor, rat, QLaurent, Rational};
use crate::root_data::{build_root_system, LieType, RootSystem, Weight};
use crate::weyl_charring::{DenominatorMode, GAElem};

/// The systems every suite covers by default.
pub const DESK_SYSTEMS: [(LieType, usize); 7] = [
    (LieType::B, 2),
    (LieType::B, 3),
    (LieType::B, 4),
    (LieType::C, 3),
    (LieType::C, 4),
    (LieType::D, 4),
    (LieType::D, 5),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Denominator,
    HooksB,
    HooksC,
    HooksD,
    ClosedForms,
    Oracle,
    Hc,
    Eigen,
    Jt,
    Basis,
    Stability,
    Properties,
}

impl Suite {
    pub const EACH: [Suite; 12] = [
        Suite::Denominator,
        Suite::HooksB,
        Suite::HooksC,
        Suite::HooksD,
        Suite::ClosedForms,
        Suite::Oracle,
        Suite::Hc,
        Suite::Eigen,
        Suite::Jt,
        Suite::Basis,
        Suite::Stability,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Denominator => "denominator",
            Suite::HooksB => "hooks-b",
            Suite::HooksC => "hooks-c",
            Suite::HooksD => "hooks-d",
            Suite::ClosedForms => "closed-forms",
            Suite::Oracle => "oracle",
            Suite::Hc => "hc",
            Suite::Eigen => "eigen",
            Suite::Jt => "jt",
            Suite::Basis => "basis",
            Suite::Stability => "stability",
            Suite::Properties => "properties",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl Case {
    fn new(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Case {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn from_result(id: impl Into<String>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((ok, d)) => Case::new(id, ok, d),
            Err(e) => Case::new(id, false, format!("error: {e}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub seed: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(Case::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Systems to cover; `None` means [`DESK_SYSTEMS`].
    pub systems: Option<Vec<(LieType, usize)>>,
    pub seed: u64,
    /// Random points per `(system, k)` in the oracle suite.
    pub points: usize,
    /// Random dominant weights per system in the eigenvalue suite.
    pub weights: usize,
    /// Largest rank compared by the stability suite in types B and C.
    pub max_rank: usize,
    /// Largest rank compared by the stability suite in type D (`k < n` is
    /// required there, so one more rank is needed for the same `k`).
    pub max_rank_d: usize,
    /// Largest `k` compared by the stability suite.
    pub max_k: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            systems: None,
            seed: 0,
            points: 20,
            weights: 10,
            max_rank: 5,
            max_rank_d: 6,
            max_k: 4,
        }
    }
}

impl Options {
    fn systems(&self) -> Vec<(LieType, usize)> {
        self.systems.clone().unwrap_or_else(|| DESK_SYSTEMS.to_vec())
    }
}

/// Runs one suite (or all of them, concatenated with suite-prefixed ids).
pub fn run(suite: Suite, opts: &Options) -> Result<Report> {
    let cases = match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                for mut c in run(s, opts)?.cases {
                    c.id = format!("{s}/{}", c.id);
                    out.push(c);
                }
            }
            out
        }
        Suite::Denominator => denominator(opts)?,
        Suite::HooksB => hooks(opts, LieType::B)?,
        Suite::HooksC => hooks(opts, LieType::C)?,
        Suite::HooksD => hooks(opts, LieType::D)?,
        Suite::ClosedForms => closed_forms(opts)?,
        Suite::Oracle => oracle(opts)?,
        Suite::Hc => hc_divisibility(opts)?,
        Suite::Eigen => eigen(opts)?,
        Suite::Jt => jt(opts)?,
        Suite::Basis => basis(opts)?,
        Suite::Stability => stability(opts)?,
        Suite::Properties => properties(opts)?,
    };
    Ok(Report {
        suite: suite.name().to_string(),
        cases,
        seed: opts.seed,
    })
}

fn engines(opts: &Options, only: Option<LieType>) -> Result<Vec<Engine>> {
    opts.systems()
        .into_iter()
        .filter(|(t, _)| only.is_none_or(|o| o == *t))
        .map(|(t, n)| Engine::new(&build_root_system(t, n)?))
        .collect()
}

fn sys(rs: &RootSystem) -> String {
    format!("{}{}", rs.lie_type, rs.rank)
}

fn eq_detail<T: PartialEq>(a: &T, b: &T, what: &str) -> (bool, String) {
    if a == b {
        (true, String::new())
    } else {
        (false, format!("{what} differ"))
    }
}

// ---------------------------------------------------------------- suites

fn denominator(opts: &Options) -> Result<Vec<Case>> {
    let engs = engines(opts, None)?;
    Ok(engs
        .par_iter()
        .map(|e| {
            let w = e.weyl();
            let r = (|| {
                let p = w.weyl_denominator(DenominatorMode::Product)?;
                let a = w.weyl_denominator(DenominatorMode::Alternant)?;
                Ok(eq_detail(&p, &a, "product and alternant"))
            })();
            Case::from_result(sys(e.root_system()), r)
        })
        .collect())
}

/// `Δ·(hook route) = [q^{−k}Δ] + q^{c_n−1}𝐀(H_{n,k})` and
/// antisymmetrizer route = hook route, for `k = 0…n+2`.
fn hooks(opts: &Options, t: LieType) -> Result<Vec<Case>> {
    let engs = engines(opts, Some(t))?;
    let jobs: Vec<(&Engine, u32)> = engs
        .iter()
        .flat_map(|e| (0..=e.root_system().rank as u32 + 2).map(move |k| (e, k)))
        .collect();
    Ok(jobs
        .par_iter()
        .flat_map_iter(|&(e, k)| {
            let name = sys(e.root_system());
            let hooks = e.ch_g_via_hooks(k);
            let delta = hooks.as_ref().map_err(Clone::clone).and_then(|h| {
                let lhs = e.weyl().multiply_by_delta(&h.body)?;
                Ok(eq_detail(&lhs, &e.delta_times_g(k)?, "both sides of the delta identity"))
            });
            let routes = hooks.and_then(|h| {
                let a = e.ch_g_via_antisym(k)?;
                Ok(eq_detail(&a.body, &h.body, "antisymmetrizer and hook routes"))
            });
            [
                Case::from_result(format!("{name}/k={k}/delta-identity"), delta),
                Case::from_result(format!("{name}/k={k}/routes-agree"), routes),
            ]
        })
        .collect())
}

fn closed_forms(opts: &Options) -> Result<Vec<Case>> {
    let engs = engines(opts, None)?;
    Ok(engs
        .par_iter()
        .flat_map_iter(|e| {
            let rs = e.root_system();
            let g0 = e
                .ch_g_via_antisym(0)
                .map(|g| eq_detail(&g.body, &GAElem::constant(rs.rank, g0_closed_form(rs)), "G0"));
            let g1 = e
                .ch_g_via_antisym(1)
                .map(|g| eq_detail(&g.body, &g1_closed_form(rs), "G1"));
            let unit = unit_product_identity_holds(rs).map(|ok| (ok, String::new()));
            [
                Case::from_result(format!("{}/g0", sys(rs)), g0),
                Case::from_result(format!("{}/g1", sys(rs)), g1),
                Case::from_result(format!("{}/unit-product", sys(rs)), unit),
            ]
        })
        .collect())
}

/// A rational in the open interval `(lo, hi)` with denominator ≤ 12.
fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    let den = rng.random_range(1..=12i64);
    let num = rng.random_range(lo * den + 1..hi * den);
    rat(num, den)
}

/// `n` distinct rationals in `(1, 10)`: never `±1`, never mutually equal or
/// inverse, so no rational form degenerates.
fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut pt: Vec<Rational> = Vec::with_capacity(n);
    while pt.len() < n {
        let x = random_rational(rng, 1, 10);
        if !pt.contains(&x) {
            pt.push(x);
        }
    }
    pt
}

const S_VALUES: [(i64, i64); 3] = [(2, 1), (3, 1), (5, 2)];

fn oracle(opts: &Options) -> Result<Vec<Case>> {
    let engs = engines(opts, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    // (engine, kind, k, s, point); kind 0 = G_k, 1 = C⁰_ℓ
    let mut jobs = Vec::new();
    for e in &engs {
        let n = e.root_system().rank;
        for (kind, range) in [(0u8, 0..=n as u32), (1u8, 1..=n as u32)] {
            for k in range {
                for p in 0..opts.points {
                    let (a, b) = S_VALUES[p % S_VALUES.len()];
                    jobs.push((e, kind, k, rat(a, b), random_point(&mut rng, n)));
                }
            }
        }
    }
    // warm the caches once, sequentially in k, so parallel jobs only read
    for e in &engs {
        for k in 0..=e.root_system().rank as u32 {
            e.ch_g_via_antisym(k)?;
        }
    }
    let mut cases: Vec<Case> = jobs
        .par_iter()
        .map(|(e, kind, k, s, pt)| {
            let rs = e.root_system();
            let r = (|| {
                let (sym, num) = if *kind == 0 {
                    (e.ch_g_via_antisym(*k)?.body.eval_full(s, pt)?, g_rational_eval(rs, *k, s, pt)?)
                } else {
                    let body = e.hc_numerator(*k)?.eval_full(s, pt)?;
                    let den = hc_denominator(*k).eval(s)?;
                    (&body / &den, c0_rational_eval(rs, *k, s, pt)?)
                };
                Ok((sym == num, if sym == num { String::new() } else { format!("symbolic {sym} vs rational form {num}") }))
            })();
            let what = if *kind == 0 { "g" } else { "c0" };
            Case::from_result(format!("{}/{what}/k={k}", sys(rs)), r)
        })
        .collect();
    // one case per (system, kind, k): fold the per-point results
    let mut folded: Vec<Case> = Vec::new();
    for c in cases.drain(..) {
        match folded.last_mut() {
            Some(last) if last.id == c.id => {
                let (ok, total) = parse_tally(&last.detail);
                let ok = ok + usize::from(c.passed());
                if !c.passed() {
                    last.status = Status::Fail;
                }
                last.detail = format!("{ok}/{} exact matches", total + 1);
            }
            _ => folded.push(Case {
                detail: format!("{}/1 exact matches", usize::from(c.passed())),
                ..c
            }),
        }
    }
    Ok(folded)
}

fn parse_tally(s: &str) -> (usize, usize) {
    let head = s.split_whitespace().next().unwrap_or("0/0");
    let mut it = head.split('/').map(|x| x.parse().unwrap_or(0));
    (it.next().unwrap_or(0), it.next().unwrap_or(0))
}

/// `(q⁻¹−q)^ℓ` divides the order-`ℓ` numerator exactly, the quotient being
/// `W`-invariant with integer-grid support, for `ℓ = 1…n`.
fn hc_divisibility(opts: &Options) -> Result<Vec<Case>> {
    let engs = engines(opts, None)?;
    let jobs: Vec<(&Engine, u32)> = engs
        .iter()
        .flat_map(|e| (1..=e.root_system().rank as u32).map(move |l| (e, l)))
        .collect();
    Ok(jobs
        .par_iter()
        .map(|&(e, l)| {
            let id = format!("{}/ell={l}", sys(e.root_system()));
            match e.hc_image(l) {
                Ok(img) => {
                    let inv = e.weyl().is_w_invariant(&img.body);
                    let grid = img.body.has_integer_support();
                    Case::new(id, inv && grid, format!("w-invariant={inv} integer-grid={grid}"))
                }
                Err(err) => Case::new(id, false, err.to_string()),
            }
        })
        .collect())
}

/// A random dominant weight with coordinates of absolute value ≤ 3;
/// spin-type (half-integer) weights in types B and D, and a negative last
/// coordinate in type D, are included.
pub fn random_dominant(rng: &mut ChaCha8Rng, rs: &RootSystem) -> Weight {
    let n = rs.rank;
    let half = matches!(rs.lie_type, LieType::B | LieType::D) && rng.random_bool(0.3);
    let mut d: Vec<i32> = (0..n)
        .map(|_| if half { 2 * rng.random_range(0..=2) + 1 } else { 2 * rng.random_range(0..=3) })
        .collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if rs.lie_type == LieType::D && d[n - 1] != 0 && rng.random_bool(0.5) {
        d[n - 1] = -d[n - 1];
    }
    let w = Weight::from_doubled(d);
    debug_assert!(rs.is_dominant(&w));
    w
}

fn eigen(opts: &Options) -> Result<Vec<Case>> {
    let engs = engines(opts, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut jobs = Vec::new();
    for e in &engs {
        let rs = e.root_system();
        for _ in 0..opts.weights {
            let lam = random_dominant(&mut rng, rs);
            for ell in 0..=rs.rank as u32 {
                for s in [2, 3] {
                    jobs.push((e, lam.clone(), ell, rat(s, 1)));
                }
            }
        }
        for k in 0..=rs.rank as u32 {
            e.ch_g_via_antisym(k)?;
        }
    }
    Ok(jobs
        .par_iter()
        .map(|(e, lam, ell, s)| {
            let rs = e.root_system();
            let r = (|| {
                let a = eigenvalue_direct(rs, lam, *ell, s)?;
                let b = eigenvalue_via_hc(e, lam, *ell, s)?;
                Ok((a == b, if a == b { String::new() } else { format!("direct {a} vs image {b}") }))
            })();
            Case::from_result(format!("{}/lambda=({lam})/ell={ell}/s={s}", sys(rs)), r)
        })
        .collect())
}

/// Partitions checked by the Jacobi–Trudi suite: at most `n` parts and
/// size ≤ 5, plus hooks `(a, 1^r)` with `a ≤ 3`, `r ≤ n−1`.
pub fn jt_partitions(n: usize) -> Vec<Partition> {
    let mut ps = Partition::enumerate(5, n);
    for a in 1..=3 {
        for r in 0..n {
            let h = Partition::hook(a, r);
            if !ps.contains(&h) {
                ps.push(h);
            }
        }
    }
    ps
}

fn jt(opts: &Options) -> Result<Vec<Case>> {
    let engs = engines(opts, None)?;
    let jobs: Vec<(&Engine, Partition)> = engs
        .iter()
        .flat_map(|e| jt_partitions(e.root_system().rank).into_iter().map(move |p| (e, p)))
        .collect();
    let mut cases: Vec<Case> = jobs
        .par_iter()
        .map(|(e, lam)| {
            let rs = e.root_system();
            let r = (|| {
                let jt = jt_character_ga(e.weyl(), lam)?;
                let chi = e.weyl().weyl_character(&lam.to_weight(rs.rank)?)?;
                Ok(eq_detail(&jt, &chi, "determinant and Weyl character"))
            })();
            Case::from_result(format!("{}/lambda={lam}", sys(rs)), r)
        })
        .collect();
    for e in &engs {
        let rs = e.root_system();
        for a in 1..=3 {
            for r in 0..rs.rank {
                let ok = hook_matrix_is_hessenberg(rs, a, r).map(|b| (b, String::new()));
                cases.push(Case::from_result(format!("{}/hook-shape/({a},1^{r})", sys(rs)), ok));
            }
        }
    }
    Ok(cases)
}

fn basis(opts: &Options) -> Result<Vec<Case>> {
    let engs = engines(opts, None)?;
    Ok(engs
        .par_iter()
        .flat_map_iter(|e| basis_cases(e).unwrap_or_else(|err| vec![Case::new(sys(e.root_system()), false, err.to_string())]))
        .collect())
}

fn basis_cases(e: &Engine) -> Result<Vec<Case>> {
    let rs = e.root_system();
    let name = sys(rs);
    let n = rs.rank;
    let mut out = Vec::new();
    let sol = match triangular_solve(e) {
        Ok(s) => s,
        Err(err) => return Ok(vec![Case::new(format!("{name}/solve"), false, err.to_string())]),
    };
    out.push(Case::new(
        format!("{name}/solve"),
        sol.steps.len() == n,
        format!("solved k = 1..={}", sol.steps.len()),
    ));
    for (s, ok) in sol.steps.iter().zip(sol.round_trip()?) {
        let nonzero = s.c.is_nonzero();
        out.push(Case::new(
            format!("{name}/k={}/round-trip", s.k),
            ok && nonzero,
            format!("c_k = ({}) / ({})", s.c.numerator, s.c.denominator),
        ));
    }
    out.push(Case::new(
        format!("{name}/q1-zero"),
        sol.steps[0].q_num.is_zero(),
        String::new(),
    ));
    if rs.lie_type == LieType::B {
        let c1 = &sol.steps[0].c;
        let ok = c1.denominator.is_one() && c1.numerator == QLaurent::q_pow(1 - 2 * n as i32);
        out.push(Case::new(format!("{name}/c1"), ok, format!("c_1 = {}", c1.numerator)));
        for s in &sol.steps {
            let k = s.k as i32;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let expect = (0..k)
                .fold(QLaurent::zero(), |acc, r| acc.add(&QLaurent::q_pow(2 * n as i32 - 2 * r - 1)))
                .scale(&Rational::from_integer(sign));
            out.push(Case::new(
                format!("{name}/k={}/leading", s.k),
                s.leading == expect,
                format!("L_k = {}", s.leading),
            ));
        }
    }
    let jac = jacobian_determinant(&sol)?;
    out.push(Case::new(
        format!("{name}/jacobian"),
        jac.as_ref().is_some_and(|d| !d.is_zero()),
        jac.map(|d| format!("det = {d}")).unwrap_or_else(|| "not triangular".into()),
    ));
    let cert = certificate_report(e)?;
    let failing: Vec<&str> = cert.checks.iter().filter(|c| c.status != crate::basis_change::CheckStatus::Pass).map(|c| c.name.as_str()).collect();
    out.push(Case::new(
        format!("{name}/certificate"),
        failing.is_empty(),
        if failing.is_empty() { format!("{} checks", cert.checks.len()) } else { failing.join(", ") },
    ));
    let extra: Vec<usize> = cert.extra_generators.iter().map(|g| g.index).collect();
    let expect: Vec<usize> = match rs.lie_type {
        LieType::B => vec![n],
        LieType::C => vec![],
        LieType::D => vec![n - 1, n],
    };
    out.push(Case::new(
        format!("{name}/extra-generators"),
        extra == expect && extra == extra_indices(rs),
        format!("{extra:?}"),
    ));
    Ok(out)
}

/// Constituent lists of `Ch G_{n,k}` for every rank in `lo..=hi`.
pub fn stability_table(t: LieType, k: u32, ranks: &[usize]) -> Result<Vec<(usize, Vec<Constituent>)>> {
    ranks
        .iter()
        .map(|&n| {
            let e = Engine::new(&build_root_system(t, n)?)?;
            Ok((n, constituents(&e, k)?))
        })
        .collect()
}

/// Ranks compared for a given `(type, k)`: `n ≥ k` (B, C) or `n > k` (D),
/// from the minimal rank up to `max_rank`.
pub fn stability_ranks(t: LieType, k: u32, max_rank: usize) -> Vec<usize> {
    let lo = t.min_rank().max(if t == LieType::D { k as usize + 1 } else { k as usize });
    (lo..=max_rank).collect()
}

fn stability(opts: &Options) -> Result<Vec<Case>> {
    let mut jobs = Vec::new();
    for t in [LieType::B, LieType::C, LieType::D] {
        for k in 1..=opts.max_k {
            let max = if t == LieType::D { opts.max_rank_d } else { opts.max_rank };
            let ranks = stability_ranks(t, k, max);
            if ranks.len() >= 2 {
                jobs.push((t, k, ranks));
            }
        }
    }
    Ok(jobs
        .par_iter()
        .map(|(t, k, ranks)| {
            let r = stability_table(*t, *k, ranks).map(|tab| {
                let first = &tab[0].1;
                let bad: Vec<usize> = tab.iter().filter(|(_, c)| c != first).map(|(n, _)| *n).collect();
                let ok = bad.is_empty();
                let detail = if ok {
                    format!("{} constituents, ranks {ranks:?}", first.len())
                } else {
                    format!("ranks {bad:?} differ from rank {}", tab[0].0)
                };
                (ok, detail)
            });
            Case::from_result(format!("{t}/k={k}"), r)
        })
        .collect())
}

fn random_ql(rng: &mut ChaCha8Rng, terms: usize) -> QLaurent {
    QLaurent::from_terms((0..terms).map(|_| (rng.random_range(-12..=12), rat(rng.random_range(-5..=5), rng.random_range(1..=3)))))
}

fn random_ga(rng: &mut ChaCha8Rng, n: usize, terms: usize, half: bool) -> GAElem {
    let mut g = GAElem::zero(n);
    for _ in 0..terms {
        let d: Vec<i32> = (0..n)
            .map(|_| if half { rng.random_range(-4..=4) } else { 2 * rng.random_range(-2..=2) })
            .collect();
        g = g.add(&GAElem::monomial(Weight::from_doubled(d), random_ql(rng, 2)));
    }
    g
}

/// Alternation, vanishing of `𝐀(e^λ)` on walls, evaluation as a ring
/// homomorphism, determinant cross-check, `W`-invariance of characters.
fn properties(opts: &Options) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let engs = engines(opts, None)?;
    let mut out = Vec::new();
    for e in engs.iter() {
        let rs = e.root_system();
        let w = e.weyl();
        let name = sys(rs);
        if rs.rank <= 4 {
            let x = random_ga(&mut rng, rs.rank, 3, true);
            let ok = w.antisymmetrize(&x).map(|a| (w.is_alternating(&a), String::new()));
            out.push(Case::from_result(format!("{name}/alternating"), ok));
        }
        // 50 weights on a wall: λ = μ + s_α(μ) has (λ, α) = 0
        let mut vanish = 0;
        for _ in 0..50 {
            let mu = Weight::from_doubled((0..rs.rank).map(|_| 2 * rng.random_range(-3..=3)));
            let alpha = &rs.positive_roots[rng.random_range(0..rs.positive_roots.len())];
            let refl = crate::weyl_charring::SignedPerm::reflection(alpha)?;
            let lam = mu.add(&refl.act_weight(&mu));
            if w.alternant(&lam)?.is_zero() {
                vanish += 1;
            }
        }
        out.push(Case::new(format!("{name}/wall-vanishing"), vanish == 50, format!("{vanish}/50")));
        // evaluation homomorphism
        let (x, y) = (random_ga(&mut rng, rs.rank, 4, true), random_ga(&mut rng, rs.rank, 4, true));
        let pt: Vec<Rational> = random_point(&mut rng, rs.rank);
        let s = rat(3, 2);
        let r = (|| {
            let (ex, ey) = (x.eval(&s, &pt)?, y.eval(&s, &pt)?);
            let ok = x.mul(&y).eval(&s, &pt)? == &ex * &ey && x.add(&y).eval(&s, &pt)? == &ex + &ey;
            Ok((ok, String::new()))
        })();
        out.push(Case::from_result(format!("{name}/eval-homomorphism"), r));
        // W-invariance of characters with coordinates ≤ 2
        let r = (|| {
            let mut ok = true;
            for lam in Partition::enumerate(4, rs.rank) {
                if lam.parts().iter().any(|&p| p > 2) {
                    continue;
                }
                ok &= w.is_w_invariant_full(&w.weyl_character(&lam.to_weight(rs.rank)?)?);
            }
            Ok((ok, String::new()))
        })();
        out.push(Case::from_result(format!("{name}/character-invariance"), r));
    }
    // determinant cross-check on random matrices of Laurent polynomials
    let mut agree = 0;
    let total = 20;
    for i in 0..total {
        let m = 1 + i % 5;
        let mat: Vec<Vec<QLaurent>> = (0..m).map(|_| (0..m).map(|_| random_ql(&mut rng, 2)).collect()).collect();
        if det_cofactor(&mat, &QLaurent::one())? == det_bareiss(&mat, &QLaurent::one())? {
            agree += 1;
        }
    }
    out.push(Case::new("det-cross-check", agree == total, format!("{agree}/{total}")));
    // Laurent evaluation homomorphism
    let (a, b) = (random_ql(&mut rng, 4), random_ql(&mut rng, 4));
    let s = rat(5, 3);
    let ok = a.mul(&b).eval(&s)? == &a.eval(&s)? * &b.eval(&s)? && a.add(&b).eval(&s)? == &a.eval(&s)? + &b.eval(&s)?;
    out.push(Case::new("laurent-eval-homomorphism", ok, String::new()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Options {
        Options {
            systems: Some(vec![(LieType::B, 2), (LieType::C, 3)]),
            seed: 7,
            points: 3,
            weights: 2,
            max_rank: 4,
            max_rank_d: 5,
            max_k: 2,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::EACH) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("thm44".parse::<Suite>().is_err());
    }

    #[test]
    fn deterministic_given_seed() {
        let a = run(Suite::Oracle, &small()).unwrap();
        let b = run(Suite::Oracle, &small()).unwrap();
        assert_eq!(a, b);
        assert!(a.passed(), "{:?}", a.failures().collect::<Vec<_>>());
        assert_eq!(a.cases[0].detail, "3/3 exact matches");
    }

    #[test]
    fn dominant_sampler() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let d5 = build_root_system(LieType::D, 5).unwrap();
        for _ in 0..200 {
            assert!(d5.is_dominant(&random_dominant(&mut rng, &d5)));
        }
    }

    #[test]
    fn stability_rank_ranges() {
        assert_eq!(stability_ranks(LieType::B, 2, 4), vec![2, 3, 4]);
        assert_eq!(stability_ranks(LieType::C, 2, 4), vec![3, 4]);
        assert_eq!(stability_ranks(LieType::D, 4, 6), vec![5, 6]);
    }
}
