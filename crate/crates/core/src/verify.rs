//! The acceptance checks as runnable suites.
//!
//! Every suite compares a construction against an independent oracle
//! (exhaustive enumeration, brute-force pattern filters, transfer matrices or
//! closed forms) and returns a [`Report`]. Suites fan out over `n` and can run
//! concurrently against one shared [`Universe`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Debug};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bijections::elementary::{
    composition_of, compositions, k_class, nw_word, rect_of_composition, rect_of_nw_word, trivial_class,
};
use crate::bijections::strong::{sigma, sigma_inv, tau6, tau6_inv, tau7, tau7_inv, tau8, tau8_inv, yan_lin};
use crate::bijections::weak::{l_labels_in_sw_ne, BinaryTree};
use crate::bijections::{beta, delta, delta_inv, rect_of_tree, tau, tau_inv, tree_of};
use crate::error::{Error, Result};
use crate::gentree::{count_by_tree, count_levels, Realization, Rectangulations, Sequences, Tree};
use crate::invseq::{self, all_ltr_maxima_high, bounce_equals_zeros, theta, AreaClass, InvSeq, PatternWord};
use crate::par::Execution;
use crate::paths::{enumerate_progressive, enumerate_rushed, phi, phi_inv, rushed_count_by_height, strip_path_count};
use crate::patterns::{contains, is_guillotine, Pattern};
use crate::series::{
    catalan, catalan_residual, catalan_series, chebyshev_form, expected_growth_rate, gk_series, growth_rate, q_poly,
    Poly,
};
use crate::universe::{Mode, Universe, UniverseConfig};
use crate::RectDrawing;

/// Largest `n` any suite asks the exhaustive oracle for.
pub const UNIVERSE_CAP: usize = 9;

/// Failures kept per suite; the rest are only counted.
const MAX_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Catalan,
    Equinumerosity,
    MatchingStatistics,
    RoundTrips,
    DirectEqualsTrace,
    PermutationReading,
    BoundaryStatistics,
    RushedPaths,
    Series,
    Elementary,
    Guillotine,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Catalan,
        Suite::Equinumerosity,
        Suite::MatchingStatistics,
        Suite::RoundTrips,
        Suite::DirectEqualsTrace,
        Suite::PermutationReading,
        Suite::BoundaryStatistics,
        Suite::RushedPaths,
        Suite::Series,
        Suite::Elementary,
        Suite::Guillotine,
    ];

    /// 1-based criterion number.
    pub fn id(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Catalan => "catalan",
            Suite::Equinumerosity => "equinumerosity",
            Suite::MatchingStatistics => "matching-statistics",
            Suite::RoundTrips => "round-trips",
            Suite::DirectEqualsTrace => "direct-equals-trace",
            Suite::PermutationReading => "permutation-reading",
            Suite::BoundaryStatistics => "boundary-statistics",
            Suite::RushedPaths => "rushed-paths",
            Suite::Series => "series",
            Suite::Elementary => "elementary",
            Suite::Guillotine => "guillotine",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Catalan => "weak td-avoiders are counted by the Catalan numbers",
            Suite::Equinumerosity => {
                "strong td-avoiders, four inversion-sequence classes and both generating trees agree"
            }
            Suite::MatchingStatistics => "statistic quadruples match between the area classes and I(011,201)",
            Suite::RoundTrips => "every bijection is injective and inverted on its full domain",
            Suite::DirectEqualsTrace => "direct tau7 and sigma equal generating-tree trace replay",
            Suite::PermutationReading => "td-containment iff 213 in beta, and tau = theta . beta",
            Suite::BoundaryStatistics => "boundary-touch counts equal the inversion-sequence statistics",
            Suite::RushedPaths => "strong (tr,tl)-avoiders, rushed and progressive paths and restricted classes agree",
            Suite::Series => "Catalan series, strip generating functions and growth rates",
            Suite::Elementary => "closed-form counts of the elementary classes",
            Suite::Guillotine => "guillotine iff windmill-free; weak td-avoiders are guillotine",
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
        if let Ok(k) = s.parse::<usize>() {
            return k
                .checked_sub(1)
                .and_then(|i| Suite::ALL.get(i).copied())
                .ok_or_else(|| Error::Parse(format!("suite number must be 1..=11, got {k}")));
        }
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyConfig {
    /// Upper bound applied to every size a suite would otherwise use.
    pub max_n: Option<usize>,
    pub exec: Execution,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// One summary line.
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<20} {} checks, {} failed, {:.2?}  {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite.id(),
            self.suite.name(),
            self.checks,
            self.failure_count,
            self.elapsed,
            self.suite.description()
        )
    }
}

/// Accumulates check outcomes; mergeable across parallel work.
#[derive(Debug, Default)]
struct Checker {
    checks: usize,
    failures: Vec<String>,
    failure_count: usize,
    notes: Vec<String>,
}

impl Checker {
    fn ok(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !cond {
            self.fail(what());
        }
    }

    /// `ours` is the construction under test, `oracle` the independent value.
    fn eq<T: PartialEq + Debug>(&mut self, what: &str, ours: T, oracle: T) {
        self.checks += 1;
        if ours != oracle {
            self.fail(format!("{what}: construction {ours:?} != oracle {oracle:?}"));
        }
    }

    fn res<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{what}: {e}"));
                None
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(msg);
        }
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    fn merge(&mut self, other: Checker) {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        let room = MAX_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.notes.extend(other.notes);
    }
}

struct Ctx<'a> {
    cfg: VerifyConfig,
    universe: &'a Universe,
}

impl Ctx<'_> {
    fn lim(&self, nominal: usize) -> usize {
        self.cfg.max_n.map_or(nominal, |m| m.min(nominal))
    }

    /// Run `f` for every `n` in `1..=max` and merge the outcomes.
    fn per_n(&self, max: usize, f: impl Fn(usize, &mut Checker) + Sync + Send) -> Checker {
        let ns: Vec<usize> = (1..=max).collect();
        let parts = self.cfg.exec.map(&ns, |&n| {
            let mut c = Checker::default();
            f(n, &mut c);
            c
        });
        let mut out = Checker::default();
        for p in parts {
            out.merge(p);
        }
        out
    }

    fn class(&self, c: &mut Checker, n: usize, mode: Mode, avoid: &[Pattern]) -> Vec<RectDrawing> {
        c.res(&format!("universe n={n}"), self.universe.class(n, mode, avoid)).unwrap_or_default()
    }

    fn weak(&self, c: &mut Checker, n: usize) -> Vec<RectDrawing> {
        c.res(&format!("universe n={n}"), self.universe.weak(n)).unwrap_or_default()
    }

    fn strong(&self, c: &mut Checker, n: usize) -> Vec<RectDrawing> {
        c.res(&format!("universe n={n}"), self.universe.strong(n)).map(|v| v.to_vec()).unwrap_or_default()
    }
}

fn seqs(c: &mut Checker, n: usize, patterns: &[PatternWord]) -> Vec<InvSeq> {
    c.res(&format!("inversion sequences n={n}"), invseq::enumerate_avoiding(n, patterns)).unwrap_or_default()
}

fn pw(s: &str) -> Vec<PatternWord> {
    invseq::parse_patterns(s).expect("fixed patterns parse")
}

/// A fresh universe able to serve every suite.
pub fn default_universe(exec: Execution) -> Universe {
    Universe::new(UniverseConfig { cap: UNIVERSE_CAP, exec, ..Default::default() })
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig, universe: &Universe) -> Report {
    let start = Instant::now();
    let ctx = Ctx { cfg: *cfg, universe };
    let c = match suite {
        Suite::Catalan => catalan_suite(&ctx),
        Suite::Equinumerosity => equinumerosity(&ctx),
        Suite::MatchingStatistics => matching_statistics(&ctx),
        Suite::RoundTrips => round_trips(&ctx),
        Suite::DirectEqualsTrace => direct_equals_trace(&ctx),
        Suite::PermutationReading => permutation_reading(&ctx),
        Suite::BoundaryStatistics => boundary_statistics(&ctx),
        Suite::RushedPaths => rushed_paths(&ctx),
        Suite::Series => series_suite(&ctx),
        Suite::Elementary => elementary(&ctx),
        Suite::Guillotine => guillotine(&ctx),
    };
    Report {
        suite,
        checks: c.checks,
        failures: c.failures,
        failure_count: c.failure_count,
        notes: c.notes,
        elapsed: start.elapsed(),
    }
}

/// Run the given suites, concurrently when `cfg.exec` allows; reports come
/// back in the order requested.
pub fn run_suites(suites: &[Suite], cfg: &VerifyConfig) -> Vec<Report> {
    let universe = default_universe(cfg.exec);
    cfg.exec.map(suites, |&s| run_suite(s, cfg, &universe))
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<Report> {
    run_suites(&Suite::ALL, cfg)
}

fn catalan_suite(ctx: &Ctx) -> Checker {
    const SMALL: [usize; 6] = [1, 2, 5, 14, 42, 132];
    let universe_max = ctx.lim(6);
    let tree_max = ctx.lim(12);
    let mut c = ctx.per_n(universe_max, |n, c| {
        let count = ctx.class(c, n, Mode::Weak, &[Pattern::TD]).len();
        c.eq(&format!("n={n} weak td count"), BigUint::from(count), catalan(n));
        c.eq(&format!("n={n} weak td count"), count, SMALL[n - 1]);
    });
    let trees = ctx.per_n(tree_max, |n, c| {
        let mut keys = BTreeSet::new();
        for t in BinaryTree::enumerate(n) {
            if let Some(d) = c.res("rect_of_tree", rect_of_tree(&t)) {
                c.ok(!contains(&d, Pattern::TD), || format!("rect_of_tree({t}) contains td"));
                keys.insert(d.weak_key());
            }
        }
        c.eq(&format!("n={n} distinct drawings from binary trees"), BigUint::from(keys.len()), catalan(n));
        let mut keys = BTreeSet::new();
        let nondecreasing = invseq::enumerate_avoiding_capped(n, &pw("10"), tree_max);
        for e in c.res("nondecreasing sequences", nondecreasing).unwrap_or_default() {
            if let Some(d) = c.res("tau_inv", tau_inv(&e)) {
                keys.insert(d.weak_key());
            }
        }
        c.eq(&format!("n={n} distinct drawings from tau preimages"), BigUint::from(keys.len()), catalan(n));
    });
    c.merge(trees);
    c.note(format!("universe n <= {universe_max}, trees and tau preimages n <= {tree_max}"));
    c
}

fn equinumerosity(ctx: &Ctx) -> Checker {
    const SMALL: [usize; 4] = [1, 2, 5, 15];
    let max = ctx.lim(7);
    let dp_max = ctx.lim(100);
    let mut c = ctx.per_n(max, |n, c| {
        let oracle = ctx.class(c, n, Mode::Strong, &[Pattern::TD]).len();
        for class in AreaClass::ALL {
            let k = seqs(c, n, &class.patterns()).len();
            c.eq(&format!("n={n} |{class:?}| vs strong td count"), k, oracle);
        }
        let k = seqs(c, n, &pw("011,201")).len();
        c.eq(&format!("n={n} |I(011,201)| vs strong td count"), k, oracle);
        for tree in [Tree::T1, Tree::T2] {
            c.eq(&format!("n={n} {tree:?} count vs strong td count"), count_by_tree(tree, n), BigUint::from(oracle));
        }
        if let Some(&v) = SMALL.get(n - 1) {
            c.eq(&format!("n={n} hand-derived value"), oracle, v);
        }
    });
    let a = count_levels(Tree::T1, dp_max);
    let b = count_levels(Tree::T2, dp_max);
    c.eq(&format!("tree counts agree for n <= {dp_max}"), a.len(), b.len());
    for (i, (x, y)) in a.iter().zip(&b).enumerate() {
        c.eq(&format!("n={} T1 vs T2", i + 1), x, y);
    }
    c.note(format!("universe n <= {max}, tree DP n <= {dp_max}"));
    c
}

type Quad = (usize, usize, usize, usize);

fn multiset<I: IntoIterator<Item = Quad>>(it: I) -> BTreeMap<Quad, usize> {
    let mut m = BTreeMap::new();
    for q in it {
        *m.entry(q).or_insert(0) += 1;
    }
    m
}

fn matching_statistics(ctx: &Ctx) -> Checker {
    let max = ctx.lim(7);
    let mut c = ctx.per_n(max, |n, c| {
        let target = seqs(c, n, &pw("011,201"));
        let xyzt: Vec<Quad> = target
            .iter()
            .map(|f| {
                let s = f.stats();
                (s.highs, s.zeros, s.rtl_minima, s.bounce)
            })
            .collect();
        let ours = multiset(xyzt.iter().copied());
        let swapped = multiset(xyzt.iter().map(|&(x, y, z, t)| (z, y, x, t)));
        for class in AreaClass::ALL {
            let abcd: Vec<Quad> = seqs(c, n, &class.patterns())
                .iter()
                .map(|e| {
                    let s = e.stats();
                    (s.zeros, s.ltr_maxima, s.bounce, s.highs)
                })
                .collect();
            c.eq(&format!("n={n} {class:?} (a,b,c,d) vs (x,y,z,t)"), multiset(abcd.iter().copied()), ours.clone());
            c.eq(
                &format!("n={n} {class:?} (c,b,a,d) vs (z,y,x,t)"),
                multiset(abcd.iter().map(|&(a, b, cc, d)| (cc, b, a, d))),
                swapped.clone(),
            );
        }
        let target: BTreeSet<InvSeq> = target.into_iter().collect();
        let mut images = BTreeSet::new();
        for e in seqs(c, n, &AreaClass::I7.patterns()) {
            let Some(f) = c.res("yan_lin", yan_lin(&e)) else { continue };
            let (a, b) = (e.stats(), f.stats());
            c.ok(target.contains(&f), || format!("yan_lin({e:?}) = {f:?} leaves I(011,201)"));
            c.eq(
                &format!("yan_lin({e:?}) statistics"),
                (b.highs, b.zeros, b.rtl_minima, b.bounce),
                (a.zeros, a.ltr_maxima, a.bounce, a.highs),
            );
            images.insert(f);
        }
        c.eq(&format!("n={n} yan_lin image size"), images.len(), target.len());
    });
    c.note(format!("n <= {max}"));
    c
}

fn round_trips(ctx: &Ctx) -> Checker {
    let max = ctx.lim(7);
    let phi_max = ctx.lim(9);
    let mut c = ctx.per_n(max, |n, c| {
        let weak_td = ctx.class(c, n, Mode::Weak, &[Pattern::TD]);
        let mut images = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
        for d in &weak_td {
            if let Some(e) = c.res("tau", tau(d)) {
                let back = tau_inv(&e).map(|x| x.weak_key());
                c.ok(back.as_ref().ok() == Some(&d.weak_key()), || format!("tau round trip fails on {d}"));
                images.0.insert(e);
            }
            if let Some(p) = c.res("delta", delta(d)) {
                let back = delta_inv(&p).map(|x| x.weak_key());
                c.ok(back.as_ref().ok() == Some(&d.weak_key()), || format!("delta round trip fails on {d}"));
                images.1.insert(p);
            }
            if let Some(t) = c.res("tree_of", tree_of(d)) {
                let back = rect_of_tree(&t).map(|x| x.weak_key());
                c.ok(back.as_ref().ok() == Some(&d.weak_key()), || format!("tree round trip fails on {d}"));
                images.2.insert(t);
            }
        }
        c.eq(&format!("n={n} tau injective"), images.0.len(), weak_td.len());
        c.eq(&format!("n={n} delta injective"), images.1.len(), weak_td.len());
        c.eq(&format!("n={n} tree_of injective"), images.2.len(), weak_td.len());

        let weak = ctx.weak(c, n);
        let perms: BTreeSet<Vec<u32>> = weak.iter().map(beta).collect();
        c.eq(&format!("n={n} beta injective"), perms.len(), weak.len());

        type Fwd = fn(&RectDrawing) -> Result<InvSeq>;
        type Inv = fn(&InvSeq) -> Result<RectDrawing>;
        let strong_maps: [(&str, Pattern, Fwd, Inv); 4] = [
            ("tau7", Pattern::TD, tau7, tau7_inv),
            ("tau8", Pattern::TD, tau8, tau8_inv),
            ("tau6", Pattern::TD, tau6, tau6_inv),
            ("sigma", Pattern::TU, sigma, sigma_inv),
        ];
        for (name, p, fwd, inv) in strong_maps {
            let class = ctx.class(c, n, Mode::Strong, &[p]);
            let mut images = BTreeSet::new();
            for d in &class {
                let Some(e) = c.res(name, fwd(d)) else { continue };
                let back = inv(&e);
                c.ok(back.as_ref().ok() == Some(&d.canonical()), || format!("{name} round trip fails on {d}"));
                images.insert(e);
            }
            c.eq(&format!("n={n} {name} injective"), images.len(), class.len());
        }

        let cols = ctx.class(c, n, Mode::Weak, &[Pattern::TD, Pattern::TU]);
        let mut images = BTreeSet::new();
        for d in &cols {
            let Some(comp) = c.res("composition_of", composition_of(d)) else { continue };
            let back = rect_of_composition(&comp).map(|x| x.weak_key());
            c.ok(back.as_ref().ok() == Some(&d.weak_key()), || format!("composition round trip fails on {d}"));
            images.insert(comp);
        }
        c.eq(&format!("n={n} composition_of injective"), images.len(), cols.len());

        let nw = ctx.class(c, n, Mode::Strong, &[Pattern::TD, Pattern::TR]);
        let mut images = BTreeSet::new();
        for d in &nw {
            let Some(w) = c.res("nw_word", nw_word(d)) else { continue };
            let back = rect_of_nw_word(&w).map(|x| x.strong_key());
            c.ok(back.as_ref().ok() == Some(&d.strong_key()), || format!("nw_word round trip fails on {d}"));
            images.insert(w);
        }
        c.eq(&format!("n={n} nw_word injective"), images.len(), nw.len());
    });
    let phis = ctx.per_n(phi_max, |n, c| {
        let mut keys = BTreeSet::new();
        let paths = c.res("rushed paths", enumerate_rushed(n + 1)).unwrap_or_default();
        for p in &paths {
            let Some(d) = c.res("phi", phi(p)) else { continue };
            c.eq(&format!("phi_inv(phi({p}))"), phi_inv(&d).ok().as_ref(), Some(p));
            keys.insert(d.strong_key());
        }
        c.eq(&format!("n={n} phi injective"), keys.len(), paths.len());
    });
    c.merge(phis);
    c.note(format!("class maps n <= {max}, phi n <= {phi_max}"));
    c
}

fn direct_equals_trace(ctx: &Ctx) -> Checker {
    let max = ctx.lim(7);
    let mut c = ctx.per_n(max, |n, c| {
        for (tree, p) in [(Tree::T1, Pattern::TD), (Tree::T2, Pattern::TU)] {
            for d in ctx.class(c, n, Mode::Strong, &[p]) {
                let direct = match tree {
                    Tree::T1 => tau7(&d),
                    Tree::T2 => sigma(&d),
                };
                let replay = Rectangulations::trace_of(tree, &d).and_then(|t| Sequences::replay(tree, &t));
                c.ok(matches!((&direct, &replay), (Ok(a), Ok(b)) if a == b), || {
                    format!("{tree:?} on {d}: direct {direct:?} vs trace {replay:?}")
                });
            }
        }
    });
    c.note(format!("n <= {max}"));
    c
}

/// Brute-force 213 containment.
fn has_213(p: &[u32]) -> bool {
    let n = p.len();
    (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| p[j] < p[i] && p[i] < p[k])))
}

fn permutation_reading(ctx: &Ctx) -> Checker {
    const WEAK: [usize; 6] = [1, 2, 6, 22, 92, 422];
    let max = ctx.lim(6);
    let mut c = ctx.per_n(max, |n, c| {
        let weak = ctx.weak(c, n);
        c.eq(&format!("n={n} weak universe size"), weak.len(), WEAK[n - 1]);
        for d in &weak {
            let pi = beta(d);
            let td = contains(d, Pattern::TD);
            c.ok(td == has_213(&pi), || format!("{d}: td={td} but beta={pi:?}"));
            let th = theta(&pi);
            c.ok(th.as_ref().ok() == Some(&l_labels_in_sw_ne(d)), || format!("theta(beta) != L-labels on {d}"));
            if !td {
                c.ok(th.ok() == tau(d).ok(), || format!("theta(beta) != tau on {d}"));
            }
        }
    });
    c.note(format!("n <= {max}"));
    c
}

fn boundary_statistics(ctx: &Ctx) -> Checker {
    let max = ctx.lim(7);
    let mut c = ctx.per_n(max, |n, c| {
        type Fwd = fn(&RectDrawing) -> Result<InvSeq>;
        let taus: [(&str, Fwd); 3] = [("tau7", tau7), ("tau8", tau8), ("tau6", tau6)];
        for d in ctx.class(c, n, Mode::Strong, &[Pattern::TD]) {
            for (name, f) in taus {
                let Some(e) = c.res(name, f(&d)) else { continue };
                let s = e.stats();
                c.eq(
                    &format!("{name} on {d}: [N,E,S,W]"),
                    d.boundary_counts(),
                    [s.ltr_maxima, s.bounce, s.highs, s.zeros],
                );
            }
        }
        for d in ctx.class(c, n, Mode::Strong, &[Pattern::TU]) {
            let Some(e) = c.res("sigma", sigma(&d)) else { continue };
            let s = e.stats();
            c.eq(&format!("sigma on {d}: [N,E,S,W]"), d.boundary_counts(), [s.bounce, s.rtl_minima, s.zeros, s.highs]);
        }
    });
    c.note(format!("n <= {max}"));
    c
}

/// Strong classes whose verticals all span the full height: choose column
/// sizes, then interleave the horizontals along each interior vertical.
pub fn full_height_columns_count(n: usize) -> BigUint {
    use crate::series::binomial;
    compositions(n)
        .into_iter()
        .map(|parts| parts.windows(2).fold(BigUint::from(1u32), |acc, w| acc * binomial(w[0] + w[1] - 2, w[0] - 1)))
        .sum()
}

fn rushed_paths(ctx: &Ctx) -> Checker {
    const SMALL: [usize; 3] = [1, 2, 4];
    let max = ctx.lim(9);
    let restricted_max = ctx.lim(8);
    let mut c = ctx.per_n(max, |n, c| {
        let rushed = c.res("rushed", enumerate_rushed(n + 1)).unwrap_or_default();
        let progressive = c.res("progressive", enumerate_progressive(n + 1)).unwrap_or_default().len();
        let sideways = ctx.class(c, n, Mode::Strong, &[Pattern::TR, Pattern::TL]);
        let upright = ctx.class(c, n, Mode::Strong, &[Pattern::TD, Pattern::TU]);
        c.eq(&format!("n={n} rushed vs strong (tr,tl) count"), rushed.len(), sideways.len());
        c.eq(&format!("n={n} progressive vs strong (tr,tl) count"), progressive, sideways.len());
        c.eq(&format!("n={n} strong (td,tu) vs (tr,tl) count"), upright.len(), sideways.len());
        c.eq(
            &format!("n={n} column interleavings vs universe"),
            full_height_columns_count(n),
            BigUint::from(upright.len()),
        );
        let by_height: BigUint = (1..=n).map(|k| rushed_count_by_height(n, k)).sum();
        c.eq(&format!("n={n} strip counts summed over heights"), by_height, BigUint::from(rushed.len()));
        if let Some(&v) = SMALL.get(n - 1) {
            c.eq(&format!("n={n} hand-derived value"), rushed.len(), v);
        }
        let oracle: BTreeSet<_> = sideways.iter().map(RectDrawing::strong_key).collect();
        let ours: BTreeSet<_> = rushed.iter().filter_map(|p| phi(p).ok()).map(|d| d.strong_key()).collect();
        c.ok(ours == oracle, || format!("n={n}: phi image differs from the strong (tr,tl) class"));
        if n <= restricted_max {
            let i7 = seqs(c, n, &AreaClass::I7.patterns());
            let k = i7.iter().filter(|e| all_ltr_maxima_high(e.values())).count();
            c.eq(&format!("n={n} I7 with all LtR maxima high"), k, rushed.len());
            let j = seqs(c, n, &pw("011,201"));
            let k = j.iter().filter(|e| bounce_equals_zeros(e.values())).count();
            c.eq(&format!("n={n} I(011,201) with bounce = zeros"), k, rushed.len());
        }
    });
    c.note(format!("classes n <= {max}, restricted sequences n <= {restricted_max}"));
    c
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ints(v: &[i64]) -> Poly {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn series_suite(ctx: &Ctx) -> Checker {
    let mut c = Checker::default();
    let order = 100;
    let r = catalan_series(order);
    for (n, v) in r.iter().enumerate().skip(1) {
        c.eq(&format!("Catalan coefficient {n}"), v.clone(), catalan(n));
    }
    c.ok(catalan_residual(&r).iter().all(Zero::is_zero), || "functional equation residual is nonzero".into());

    let closed: [Poly; 6] = [
        ints(&[1, -1]),
        ints(&[1, -2]),
        ints(&[1, -3, 1]),
        poly_mul(&ints(&[1, -1]), &ints(&[1, -3])),
        ints(&[1, -5, 6, -1]),
        poly_mul(&ints(&[1, -2]), &ints(&[1, -4, 2])),
    ];
    for (k, den) in (1..=6).zip(closed) {
        c.eq(&format!("denominator of g_{k}"), q_poly(k + 1), den);
    }
    let terms = 30;
    let ks: Vec<usize> = (1..=8).collect();
    let parts = ctx.cfg.exec.map(&ks, |&k| {
        let mut c = Checker::default();
        c.eq(&format!("q_{} vs Chebyshev sum", k + 1), q_poly(k + 1), chebyshev_form(k + 1));
        if let Some(g) = c.res("gk_series", gk_series(k, terms)) {
            for (m, coef) in g.iter().enumerate() {
                let strip = if m >= k { strip_path_count(2 * m - k, k) } else { BigUint::zero() };
                c.eq(&format!("[x^{m}] g_{k} vs strip paths"), coef.clone(), BigInt::from(strip));
            }
        }
        let (ours, oracle) = (growth_rate(k), expected_growth_rate(k));
        c.ok((ours - oracle).abs() < 1e-9, || format!("growth rate k={k}: {ours} vs {oracle}"));
        c
    });
    for p in parts {
        c.merge(p);
    }
    c.note(format!("Catalan to x^{order}, g_k to x^{terms} for k <= 8"));
    c
}

fn elementary(ctx: &Ctx) -> Checker {
    let max = ctx.lim(7);
    let mut c = ctx.per_n(max, |n, c| {
        let pow = 1usize << (n - 1);
        let cols = ctx.class(c, n, Mode::Weak, &[Pattern::TD, Pattern::TU]).len();
        c.eq(&format!("n={n} weak (td,tu) count"), cols, pow);
        c.eq(&format!("n={n} compositions"), compositions(n).len(), pow);
        for mode in [Mode::Weak, Mode::Strong] {
            let m = mode.name();
            let nw = ctx.class(c, n, mode, &[Pattern::TD, Pattern::TR]).len();
            c.eq(&format!("n={n} {m} (td,tr) count"), nw, pow);
            let three = ctx.class(c, n, mode, &[Pattern::TD, Pattern::TU, Pattern::TR]);
            c.eq(&format!("n={n} {m} (td,tu,tr) count"), three.len(), n);
            let ours: BTreeSet<_> = (0..n).filter_map(|k| k_class(n, k).ok()).map(|d| d.strong_key()).collect();
            c.eq(&format!("n={n} {m} k_class members"), ours, three.iter().map(RectDrawing::strong_key).collect());
            let four = ctx.class(c, n, mode, &[Pattern::TD, Pattern::TU, Pattern::TR, Pattern::TL]);
            c.eq(&format!("n={n} {m} (td,tu,tr,tl) count"), four.len(), if n == 1 { 1 } else { 2 });
            let ours: BTreeSet<_> = trivial_class(n).unwrap_or_default().iter().map(RectDrawing::strong_key).collect();
            c.eq(&format!("n={n} {m} trivial_class members"), ours, four.iter().map(RectDrawing::strong_key).collect());
        }
    });
    c.note(format!("n <= {max}"));
    c
}

fn guillotine(ctx: &Ctx) -> Checker {
    let max = ctx.lim(6);
    let mut c = ctx.per_n(max, |n, c| {
        for d in ctx.strong(c, n) {
            let windmill = contains(&d, Pattern::WM_CW) || contains(&d, Pattern::WM_CCW);
            c.ok(is_guillotine(&d) != windmill, || {
                format!("{d}: guillotine={} windmill={windmill}", is_guillotine(&d))
            });
        }
        for d in ctx.class(c, n, Mode::Weak, &[Pattern::TD]) {
            c.ok(is_guillotine(&d), || format!("weak td-avoider {d} is not guillotine"));
        }
    });
    c.note(format!("n <= {max}"));
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(s.id().to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("12".parse::<Suite>().is_err());
    }

    #[test]
    fn column_interleavings_small() {
        let v: Vec<BigUint> = (1..=4).map(full_height_columns_count).collect();
        assert_eq!(v, [1u32, 2, 4, 9].map(BigUint::from));
    }

    #[test]
    fn small_run_passes() {
        let cfg = VerifyConfig { max_n: Some(4), exec: Execution::Parallel };
        for r in run_all(&cfg) {
            assert!(r.passed(), "{}\n{:#?}", r.line(), r.failures);
        }
    }
}
