//! Claim registry. Each claim restricts a corpus to the graphs its hypothesis
//! covers, computes the quantities its predicate needs, and renders a verdict
//! that depends only on those recorded quantities.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alpha::{alpha, bad_packing, fractional_chromatic, lb_t, FRACTIONAL_CAP};
use crate::critical::is_critical;
use crate::error::{GraphError, Result};
use crate::families::{
    classify_11_30, contains_any_forbidden, enumerate_almost_bad, enumerate_bad, enumerate_dangerous, is_forbidden,
    kappa, Case1130, Catalog,
};
use crate::graph::{complete, Girth, SimpleGraph, Vertex};
use crate::iso::{find_subgraph, is_isomorphic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    Staton,
    FlConnected,
    #[serde(rename = "main_38")]
    Main38,
    TechnicalMain,
    #[serde(rename = "cor_2conn")]
    Cor2conn,
    CorGirth6,
    ThmTriangles,
    CorTriangles,
    FracExplore,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::Staton,
        ClaimId::FlConnected,
        ClaimId::Main38,
        ClaimId::TechnicalMain,
        ClaimId::Cor2conn,
        ClaimId::CorGirth6,
        ClaimId::ThmTriangles,
        ClaimId::CorTriangles,
        ClaimId::FracExplore,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Staton => "staton",
            ClaimId::FlConnected => "fl_connected",
            ClaimId::Main38 => "main_38",
            ClaimId::TechnicalMain => "technical_main",
            ClaimId::Cor2conn => "cor_2conn",
            ClaimId::CorGirth6 => "cor_girth6",
            ClaimId::ThmTriangles => "thm_triangles",
            ClaimId::CorTriangles => "cor_triangles",
            ClaimId::FracExplore => "frac_explore",
        }
    }

    /// Plain statement of the hypothesis each corpus graph is filtered by.
    pub fn restriction(self) -> &'static str {
        match self {
            ClaimId::Staton | ClaimId::FlConnected => "connected triangle-free subcubic",
            ClaimId::Main38 => "triangle-free subcubic",
            ClaimId::Cor2conn => "2-connected triangle-free subcubic",
            ClaimId::CorGirth6 => "subcubic with girth at least 6",
            ClaimId::TechnicalMain => "connected critical triangle-free subcubic",
            ClaimId::ThmTriangles => "connected critical subcubic",
            ClaimId::CorTriangles => "connected subcubic",
            ClaimId::FracExplore => "triangle-free subcubic without forbidden subgraph, n <= 20",
        }
    }

    /// Exploratory claims report violations as findings; they never set the exit code.
    pub fn exploratory(self) -> bool {
        self == ClaimId::FracExplore
    }

    fn needs_triangle_free(self) -> bool {
        !matches!(self, ClaimId::ThmTriangles | ClaimId::CorTriangles)
    }

    fn applies(self, g: &SimpleGraph) -> bool {
        if !g.is_subcubic() || (self.needs_triangle_free() && !g.is_triangle_free()) {
            return false;
        }
        match self {
            ClaimId::Main38 => true,
            ClaimId::Staton | ClaimId::FlConnected | ClaimId::CorTriangles => g.is_connected(),
            ClaimId::Cor2conn => g.is_two_connected(),
            ClaimId::CorGirth6 => g.girth().at_least(6),
            ClaimId::TechnicalMain | ClaimId::ThmTriangles => g.is_connected() && is_critical(g),
            ClaimId::FracExplore => g.n() <= FRACTIONAL_CAP && contains_any_forbidden(g).is_none(),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| GraphError::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "exception-as-predicted")]
    ExceptionAsPredicted,
    #[serde(rename = "FAIL")]
    Fail,
}

/// Everything a predicate reads. Fields a claim does not need stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantities {
    pub alpha: usize,
    pub lb24: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lb_t24: Option<i64>,
    pub kappa: i64,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub connectivity: u8,
    pub degree2: usize,
    pub flags: Flags,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bad_packing: Option<usize>,
    /// `χ_f` as a reduced fraction `p/q`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chi_f: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub critical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bad: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub almost_bad: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dangerous: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bad_subgraph: Option<bool>,
    /// Name of the forbidden graph `G` is isomorphic to.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forbidden: Option<String>,
    /// Name of a forbidden graph contained in `G`, when that was computed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forbidden_subgraph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forbidden_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k4: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k4_subgraph: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<Case1130>,
    /// Informational: the bound holds with equality up to rounding.
    #[serde(default)]
    pub tight: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// A maximum independent set.
    pub independent_set: Vec<Vertex>,
    /// Image of a forbidden or `K4` subgraph that takes the graph outside the hypothesis.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub embedding: Option<Vec<Vertex>>,
    /// Vertex sets of a maximum bad or almost bad packing.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub packing: Option<Vec<Vec<Vertex>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: ClaimId,
    pub graph6: String,
    pub n: usize,
    pub quantities: Quantities,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl ClaimReport {
    /// Re-derives the verdict from the recorded quantities alone.
    pub fn recheck(&self) -> Verdict {
        verdict(self.claim_id, self.n, &self.quantities)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub claim_id: ClaimId,
    pub corpus: usize,
    pub restriction: String,
    pub considered: usize,
    pub pass: usize,
    pub exceptions: usize,
    pub fail: usize,
    pub exploratory: bool,
}

impl Summary {
    /// True when the run should exit nonzero.
    pub fn failed(&self) -> bool {
        self.fail > 0 && !self.exploratory
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub summary: Summary,
    pub reports: Vec<ClaimReport>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

fn exceeds(a: &str, p: i64, q: i64) -> Option<bool> {
    let (num, den) = a.split_once('/').unwrap_or((a, "1"));
    let (num, den): (i64, i64) = (num.parse().ok()?, den.parse().ok()?);
    Some(num * q > p * den)
}

/// The predicate of `claim` over recorded quantities.
pub fn verdict(claim: ClaimId, n: usize, q: &Quantities) -> Verdict {
    use Verdict::*;
    let n = n as i64;
    let a = q.alpha as i64;
    let f = &q.flags;
    let holds = |ok: bool| if ok { Pass } else { Fail };
    match claim {
        ClaimId::Staton => {
            let f14 = matches!(f.forbidden.as_deref(), Some("F14_1" | "F14_2"));
            match (14 * a).cmp(&(5 * n)) {
                std::cmp::Ordering::Less => Fail,
                std::cmp::Ordering::Equal if f14 => ExceptionAsPredicted,
                _ => Pass,
            }
        }
        ClaimId::FlConnected => match f.case {
            Some(Case1130::Other) => holds(q.kappa >= 0),
            Some(case) if case.expected_kappa() == Some(q.kappa) => ExceptionAsPredicted,
            _ => Fail,
        },
        ClaimId::Main38 => match (8 * a >= 3 * n, f.forbidden_subgraph.is_some()) {
            (true, _) => Pass,
            (false, true) => ExceptionAsPredicted,
            (false, false) => Fail,
        },
        ClaimId::Cor2conn => {
            if 8 * a < 3 * n - 2 {
                Fail
            } else if 8 * a >= 3 * n {
                Pass
            } else if f.forbidden.is_some() {
                ExceptionAsPredicted
            } else {
                Fail
            }
        }
        ClaimId::CorGirth6 => holds(8 * a >= 3 * n),
        ClaimId::TechnicalMain => {
            if f.forbidden.is_some() {
                return ExceptionAsPredicted;
            }
            if f.bad == Some(true) {
                return if 24 * a == q.lb24 - 2 { ExceptionAsPredicted } else { Fail };
            }
            let strong = q.degree2 >= 3 && f.dangerous == Some(false) && f.bad_subgraph == Some(false);
            holds(24 * a >= q.lb24 + if strong { 2 } else { 0 })
        }
        ClaimId::ThmTriangles => {
            let Some(lbt) = q.lb_t24 else { return Fail };
            if f.forbidden.is_some() || f.k4 == Some(true) {
                return ExceptionAsPredicted;
            }
            if f.bad == Some(true) || f.almost_bad == Some(true) {
                return if 24 * a == lbt - 2 { ExceptionAsPredicted } else { Fail };
            }
            holds(24 * a >= lbt)
        }
        ClaimId::CorTriangles => {
            let (Some(lbt), Some(b)) = (q.lb_t24, q.bad_packing) else { return Fail };
            let ok = 24 * a >= lbt - 2 * b as i64;
            let outside = f.forbidden_subgraph.is_some() || f.k4_subgraph == Some(true);
            match (ok, outside) {
                (true, _) => Pass,
                (false, true) => ExceptionAsPredicted,
                (false, false) => Fail,
            }
        }
        ClaimId::FracExplore => match q.chi_f.as_deref().and_then(|x| exceeds(x, 8, 3)) {
            Some(false) => Pass,
            _ => Fail,
        },
    }
}

/// Family catalogs shared by all graphs of one check run.
#[derive(Debug, Default)]
pub struct Catalogs {
    pub max_n: usize,
    pub bad: Option<Catalog>,
    pub dangerous: Option<Catalog>,
    pub almost_bad: Option<Catalog>,
}

impl Catalogs {
    pub fn for_claim(claim: ClaimId, max_n: usize) -> Result<Self> {
        let mut c = Catalogs {
            max_n,
            ..Catalogs::default()
        };
        match claim {
            ClaimId::TechnicalMain => {
                c.bad = Some(enumerate_bad(max_n)?);
                c.dangerous = Some(enumerate_dangerous(max_n)?);
            }
            ClaimId::ThmTriangles | ClaimId::CorTriangles => {
                c.bad = Some(enumerate_bad(max_n)?);
                c.almost_bad = Some(enumerate_almost_bad(max_n)?);
            }
            _ => {}
        }
        Ok(c)
    }

    fn bad_or_almost(&self) -> Vec<SimpleGraph> {
        let mut out: Vec<SimpleGraph> = Vec::new();
        for cat in [&self.bad, &self.almost_bad].into_iter().flatten() {
            out.extend(cat.graphs().filter(|h| h.n() <= self.max_n).cloned());
        }
        out
    }
}

fn chi_f_string(x: &BigRational) -> String {
    if x.denom() == &1.into() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Evaluates `claim` on one graph, or `None` when the hypothesis excludes it.
pub fn evaluate(claim: ClaimId, g: &SimpleGraph, cats: &Catalogs) -> Result<Option<ClaimReport>> {
    if !claim.applies(g) {
        return Ok(None);
    }
    let mis = alpha(g);
    let mut q = Quantities {
        alpha: mis.size,
        lb24: g.lb()?.num24(),
        kappa: kappa(g),
        girth: match g.girth() {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
        },
        connectivity: g.connectivity_class().as_u8(),
        degree2: g.vertices_of_degree(2).len(),
        ..Quantities::default()
    };
    let mut witness = Witness {
        independent_set: mis.witness.clone(),
        embedding: None,
        packing: None,
    };
    let f = &mut q.flags;
    let forbidden_sub = |f: &mut Flags, w: &mut Witness| {
        let name = contains_any_forbidden(g);
        if let Some(name) = name {
            let fixture = crate::families::forbidden(name).expect("fixture");
            w.embedding = find_subgraph(fixture, g, false).map(|e| e.image());
        }
        f.forbidden_free = Some(name.is_none());
        f.forbidden_subgraph = name.map(str::to_string);
    };
    let in_cat = |cat: &Option<Catalog>| cat.as_ref().map(|c| c.contains(g));
    match claim {
        ClaimId::Staton => {
            f.forbidden = is_forbidden(g).map(str::to_string);
            f.tight = 14 * q.alpha == 5 * g.n();
        }
        ClaimId::FlConnected => {
            let case = classify_11_30(g)?;
            f.case = Some(case);
            f.forbidden = is_forbidden(g).map(str::to_string);
            f.tight = case == Case1130::Other && (0..30).contains(&q.kappa);
        }
        ClaimId::Main38 => {
            forbidden_sub(f, &mut witness);
            f.tight = 8 * q.alpha == 3 * g.n();
        }
        ClaimId::Cor2conn => {
            f.forbidden = is_forbidden(g).map(str::to_string);
            f.tight = 8 * q.alpha == 3 * g.n();
        }
        ClaimId::CorGirth6 => f.tight = 8 * q.alpha == 3 * g.n(),
        ClaimId::TechnicalMain => {
            f.critical = Some(true);
            f.forbidden = is_forbidden(g).map(str::to_string);
            f.bad = in_cat(&cats.bad);
            f.dangerous = in_cat(&cats.dangerous);
            let bad = cats.bad.as_ref().expect("bad catalog");
            f.bad_subgraph = Some(
                bad.graphs()
                    .filter(|h| h.n() <= g.n())
                    .any(|h| find_subgraph(h, g, false).is_some()),
            );
            f.tight = 24 * q.alpha as i64 == q.lb24;
        }
        ClaimId::ThmTriangles => {
            f.critical = Some(true);
            f.forbidden = is_forbidden(g).map(str::to_string);
            f.k4 = Some(is_isomorphic(g, &complete(4)));
            f.bad = in_cat(&cats.bad);
            f.almost_bad = in_cat(&cats.almost_bad);
            q.lb_t24 = Some(lb_t(g)?.num24());
        }
        ClaimId::CorTriangles => {
            forbidden_sub(f, &mut witness);
            let k4 = find_subgraph(&complete(4), g, false);
            f.k4_subgraph = Some(k4.is_some());
            if let Some(e) = k4 {
                witness.embedding.get_or_insert(e.image());
            }
            q.lb_t24 = Some(lb_t(g)?.num24());
            let packing = bad_packing(g, &cats.bad_or_almost(), cats.max_n)?;
            q.bad_packing = Some(packing.size);
            witness.packing = Some(packing.witness);
        }
        ClaimId::FracExplore => {
            f.forbidden_free = Some(true);
            q.chi_f = Some(chi_f_string(&fractional_chromatic(g)?.value));
        }
    }
    let v = verdict(claim, g.n(), &q);
    Ok(Some(ClaimReport {
        claim_id: claim,
        graph6: g.to_graph6(),
        n: g.n(),
        quantities: q,
        verdict: v,
        witness: (v != Verdict::Pass).then_some(witness),
    }))
}

/// Runs `claim` over `corpus`. Reports keep corpus order whatever the job count.
pub fn check(claim: ClaimId, corpus: &[SimpleGraph], opts: &CheckOptions) -> Result<CheckOutcome> {
    let max_n = corpus.iter().map(SimpleGraph::n).max().unwrap_or(0);
    let run = || -> Result<Vec<Option<ClaimReport>>> {
        let cats = Catalogs::for_claim(claim, max_n)?;
        corpus.par_iter().map(|g| evaluate(claim, g, &cats)).collect()
    };
    let evaluated = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| GraphError::Precondition(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let reports: Vec<ClaimReport> = evaluated.into_iter().flatten().collect();
    if reports.is_empty() && !corpus.is_empty() {
        return Err(GraphError::CorpusMismatch(format!(
            "no corpus graph is {} as {claim} requires",
            claim.restriction()
        )));
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let summary = Summary {
        claim_id: claim,
        corpus: corpus.len(),
        restriction: claim.restriction().to_string(),
        considered: reports.len(),
        pass: count(Verdict::Pass),
        exceptions: count(Verdict::ExceptionAsPredicted),
        fail: count(Verdict::Fail),
        exploratory: claim.exploratory(),
    };
    Ok(CheckOutcome { summary, reports })
}
