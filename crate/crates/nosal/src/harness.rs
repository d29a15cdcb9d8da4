//! Claim-by-claim verification suites, the summary table, and the report
//! formats behind the CLI.
//!
//! Verdict policy: `pass`/`fail` is reserved for exact identities and
//! unconditional floors on certified graphs; order-of-magnitude claims with
//! unspecified constants are `reported-only` with their margins, so
//! asymptotic slack can never redden a build.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{self, ConstructionOutput};
use crate::counting::{self, C4Method};
use crate::dichotomy::{self, DichotomyBranch};
use crate::graph::Graph;
use crate::search::SearchRecord;
use crate::spectral::{self, NosalVerdict};
use crate::weights;

/// Report schema version stamped into every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ReportedOnly,
}

/// One checked claim on one graph (or one suite-level aggregate).
#[derive(Debug, Clone, Serialize)]
pub struct VerificationRow {
    pub claim: String,
    pub graph: String,
    pub observed: f64,
    pub bound: f64,
    pub margin: f64,
    pub verdict: Verdict,
    pub note: String,
}

impl VerificationRow {
    fn new(
        claim: &str,
        graph: &str,
        observed: f64,
        bound: f64,
        pass: Option<bool>,
        note: &str,
    ) -> VerificationRow {
        VerificationRow {
            claim: claim.to_string(),
            graph: graph.to_string(),
            observed,
            bound,
            margin: observed - bound,
            verdict: match pass {
                Some(true) => Verdict::Pass,
                Some(false) => Verdict::Fail,
                None => Verdict::ReportedOnly,
            },
            note: note.to_string(),
        }
    }
}

/// Claim ids every suite run must cover, with one-line descriptions.
pub const CLAIM_MANIFEST: &[(&str, &str)] = &[
    ("Thm1.2", "certified graphs have book size above sqrt(m)/144"),
    ("Thm1.3", "4-cycle density approaches 1/8 on certified graphs"),
    ("Thm1.4", "generalized book size scales like sqrt(m) at the r-threshold"),
    ("Thm1.5", "certified graphs have max degree at most m/2 + m^0.99"),
    ("Thm1.6", "structure dichotomy returns a verified bipartite or small-degree subgraph"),
    ("Lem2.2", "n-vertex graphs over n^2/4 edges have books larger than n/6"),
    ("Lem2.5", "weighted density above 1/4 forces a book edge of mass 1/6"),
    ("Ex2.1", "clique with a triangle-free attachment pins the book ratio"),
    ("Ex2.2", "complete bipartite plus an edge realizes book size about sqrt(m)/2"),
    ("Ex2.3", "prism blowup realizes book ratio about sqrt(m)/3"),
    ("Lem3.2", "dense graphs contain joints (positivity at small n)"),
    ("Thm3.3", "joint size scales like m^{(r-1)/2} above the r-threshold"),
    ("Lem3.6", "weighted joint density above (r-1)/(2r) forces a positive joint edge"),
    ("Cor3.4", "vertex-spectral threshold forces joints"),
    ("Cor3.5", "partite-plus-edge graphs pin the clique count order"),
    ("KruskalKatona", "clique counts are bounded by the shadow bound C(x,t)"),
    ("Ex4.1", "clique plus pendant star pins the 4-cycle count at 3 C(s,4)"),
    ("Ex4.2", "hub pair over an independent set has lambda (1+sqrt(4m-3))/2"),
    ("Lem4.3", "exact 4-cycle identity from walk traces"),
    ("Lem4.4", "degree power is at most Delta m + 4 m^1.7"),
    ("Cor4.5", "degree power stays below (1/2 + o(1)) m^2 on certified graphs"),
    ("Prop4.6", "shifted quadratic form stays below sqrt(m) under the size hypotheses"),
    ("Cor5.2", "certified graphs have more than sqrt(m)/72 triangular edges"),
    ("Cor5.3", "certified graphs contain chordal subgraphs of 2 bk + 1 edges"),
    ("Cor5.4", "K4-free certified graphs have K4-saturating edges"),
    ("Eq5.1", "K_{r+1}-free graphs satisfy sum d^2 <= 2(1-1/r) m n"),
    ("SignlessQ", "K_{r+1}-free graphs satisfy q(G) <= (1-1/r) 2n"),
    ("Cor6.2", "certified graphs carry at least C(ceil(sqrt(m)/144), 2) kites"),
    ("Table1", "summary table reproduces with all statistics populated"),
];

/// Claim ids present in the manifest but missing from `rows`.
pub fn coverage_gaps(rows: &[VerificationRow]) -> Vec<&'static str> {
    CLAIM_MANIFEST
        .iter()
        .map(|(id, _)| *id)
        .filter(|id| !rows.iter().any(|r| r.claim == *id))
        .collect()
}

pub fn has_failures(rows: &[VerificationRow]) -> bool {
    rows.iter().any(|r| r.verdict == Verdict::Fail)
}

/// Construction families the suite can draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    CliquePlusStar,
    KstPlus,
    PrismBlowup,
    BookConstruction,
    BookCore,
    CliqueJointTight,
    KpartitePlusEdge,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::CliquePlusStar,
        Family::KstPlus,
        Family::PrismBlowup,
        Family::BookConstruction,
        Family::BookCore,
        Family::CliqueJointTight,
        Family::KpartitePlusEdge,
    ];

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "clique-plus-star" => Some(Family::CliquePlusStar),
            "k-st-plus" => Some(Family::KstPlus),
            "prism-blowup" => Some(Family::PrismBlowup),
            "book-construction" => Some(Family::BookConstruction),
            "book-core" => Some(Family::BookCore),
            "clique-joint-tight" => Some(Family::CliqueJointTight),
            "kpartite-plus-edge" => Some(Family::KpartitePlusEdge),
            _ => None,
        }
    }

    /// Deterministic feasible instance with edge count near the target.
    pub fn instantiate(self, target_m: u64) -> Option<ConstructionOutput> {
        match self {
            Family::CliquePlusStar => (target_m..target_m + 64)
                .find_map(|m| constructions::clique_plus_star(m).ok()),
            Family::KstPlus => (target_m..target_m + 64)
                .find_map(|m| constructions::k_st_plus_near(m).ok()),
            Family::PrismBlowup => {
                let k = (((target_m.saturating_sub(3)) / 9) as f64).sqrt().round() as u64;
                constructions::prism_blowup(k.max(1)).ok()
            }
            Family::BookConstruction => constructions::book_construction(target_m.max(9)).ok(),
            Family::BookCore => {
                let m = if target_m % 2 == 1 { target_m } else { target_m + 1 };
                constructions::book_core(m.max(3)).ok()
            }
            Family::CliqueJointTight => (target_m..target_m + 64)
                .find_map(|m| constructions::clique_joint_tight(m, 3).ok()),
            Family::KpartitePlusEdge => {
                let r = 3u64;
                let t = (((target_m.saturating_sub(1)) as f64 / 3.0).sqrt()).round() as usize;
                constructions::kpartite_plus_edge(t.max(2), r as usize).ok()
            }
        }
    }

    /// The example claim this family's self-check certifies.
    fn example_claim(self) -> &'static str {
        match self {
            Family::CliquePlusStar => "Ex4.1",
            Family::KstPlus => "Ex2.2",
            Family::PrismBlowup => "Ex2.3",
            Family::BookConstruction | Family::BookCore => "Ex4.2",
            Family::CliqueJointTight => "Thm3.3",
            Family::KpartitePlusEdge => "Cor3.5",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifySpec {
    pub families: Vec<Family>,
    pub m_lo: u64,
    pub m_hi: u64,
    pub seed: u64,
}

impl Default for VerifySpec {
    fn default() -> Self {
        VerifySpec {
            families: Family::ALL.to_vec(),
            m_lo: 100,
            m_hi: 10_000,
            seed: 1,
        }
    }
}

fn m_grid(lo: u64, hi: u64) -> Vec<u64> {
    let mut grid = Vec::new();
    let mut m = lo.max(3);
    while m < hi {
        grid.push(m);
        m = m.saturating_mul(10);
    }
    grid.push(hi.max(lo));
    grid.dedup();
    grid
}

/// Runs every claim against every family instance in the given edge range,
/// plus the suite-level exhaustive and sampled claims. Deterministic for a
/// fixed spec (including across thread counts).
pub fn verify_suite(spec: &VerifySpec) -> Vec<VerificationRow> {
    let mut rows = suite_level_rows(spec.seed);
    let grid = m_grid(spec.m_lo, spec.m_hi);
    let mut instances: Vec<(Family, ConstructionOutput)> = Vec::new();
    for &family in &spec.families {
        for &target in &grid {
            if let Some(out) = family.instantiate(target) {
                if (out.graph.m() as u64) <= spec.m_hi.max(grid[grid.len() - 1] * 2) {
                    instances.push((family, out));
                }
            }
        }
    }
    instances.sort_by_key(|a| a.1.label());
    instances.dedup_by(|a, b| a.1.label() == b.1.label());
    let per_graph: Vec<Vec<VerificationRow>> = instances
        .par_iter()
        .map(|(family, out)| graph_rows(*family, out))
        .collect();
    rows.extend(per_graph.into_iter().flatten());
    // summary table reproduces at the midpoint budget
    let table = table1_report(grid[grid.len() / 2].max(100), spec.seed, &[]);
    rows.push(VerificationRow::new(
        "Table1",
        "summary",
        table.rows.len() as f64,
        8.0,
        Some(table.rows.len() == 8),
        "all summary statistics populated",
    ));
    rows
}

/// All rows for a single construction instance.
fn graph_rows(family: Family, out: &ConstructionOutput) -> Vec<VerificationRow> {
    let g = &out.graph;
    let label = out.label();
    let mut rows = Vec::new();
    let m = g.m() as f64;
    let sqrt_m = m.sqrt();

    let self_check = out.self_check();
    rows.push(VerificationRow::new(
        family.example_claim(),
        &label,
        f64::from(self_check.is_ok()),
        1.0,
        Some(self_check.is_ok()),
        &self_check.err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    if matches!(family, Family::CliquePlusStar) {
        // the same instance witnesses the generic clique-plus-triangle-free
        // attachment: book size comes from the clique alone
        let (bk, _) = counting::book_size(g);
        let s = out.params["s"];
        rows.push(VerificationRow::new(
            "Ex2.1",
            &label,
            bk as f64,
            (s - 2) as f64,
            Some(bk == s - 2),
            "book size of the clique attachment",
        ));
    }

    let certified = matches!(spectral::is_nosal(g), Ok(NosalVerdict::CertifiedYes(_)));
    let cert_flag = |pass: bool| if certified { Some(pass) } else { None };

    let (bk, _) = counting::book_size(g);
    rows.push(VerificationRow::new(
        "Thm1.2",
        &label,
        bk as f64,
        sqrt_m / 144.0,
        cert_flag(bk as f64 > sqrt_m / 144.0),
        if certified { "certified" } else { "not certified; reported" },
    ));

    // wedge-accumulation cost is the degree power; the pair scan behind the
    // walk traces is quadratic in n — both guarded for huge instances
    let wedge_cost = g.degree_power();
    if wedge_cost <= 300_000_000 {
        let c4 = counting::c4_count(g, C4Method::Codegree).expect("codegree counter is total");
        rows.push(VerificationRow::new(
            "Thm1.3",
            &label,
            c4 as f64 / (m * m),
            0.125,
            None,
            "density toward 1/8",
        ));
        if g.n() <= 3000 {
            let walks = counting::c4_count(g, C4Method::Walks).expect("walk counter is total");
            rows.push(VerificationRow::new(
                "Lem4.3",
                &label,
                walks as f64,
                c4 as f64,
                Some(walks == c4),
                "walk-trace identity, exact integers",
            ));
        }
    }

    rows.push(VerificationRow::new(
        "Thm1.5",
        &label,
        dichotomy::max_degree_margin(g),
        0.0,
        cert_flag(dichotomy::max_degree_margin(g) < 0.0),
        "max degree margin (negative passes)",
    ));

    let (l44, c45) = dichotomy::degree_power_margins(g);
    rows.push(VerificationRow::new(
        "Lem4.4",
        &label,
        l44,
        0.0,
        Some(l44 <= 0.0),
        "unconditional degree-power bound",
    ));
    let cor45_asserted = certified && g.m() >= 10_000;
    rows.push(VerificationRow::new(
        "Cor4.5",
        &label,
        c45,
        0.05,
        if cor45_asserted { Some(c45 <= 0.05) } else { None },
        "degree power density minus 1/2",
    ));

    let tri = counting::triangular_edges(g);
    rows.push(VerificationRow::new(
        "Cor5.2",
        &label,
        tri as f64,
        sqrt_m / 72.0,
        cert_flag(tri as f64 > sqrt_m / 72.0),
        "triangular edges",
    ));

    let (chordal, _) = counting::chordal_lower_bound(g);
    rows.push(VerificationRow::new(
        "Cor5.3",
        &label,
        chordal as f64,
        2.0 * sqrt_m / 144.0 + 1.0,
        cert_flag(chordal as f64 >= 2.0 * sqrt_m / 144.0 + 1.0),
        "book-based chordal lower bound",
    ));

    let kites = counting::kite_count(g);
    let kite_floor = {
        let b = (sqrt_m / 144.0).ceil();
        b * (b - 1.0) / 2.0
    };
    rows.push(VerificationRow::new(
        "Cor6.2",
        &label,
        kites as f64,
        kite_floor,
        cert_flag(kites as f64 >= kite_floor),
        "kite floor through the book witness",
    ));

    // heavier enumerations only at moderate size
    if g.m() <= 20_000 {
        if let Ok((gb, _)) = counting::generalized_book(g, 3) {
            rows.push(VerificationRow::new(
                "Thm1.4",
                &label,
                gb as f64 / sqrt_m,
                0.0,
                None,
                "generalized book size over sqrt(m), r = 3",
            ));
        }
        if let Ok((js, _)) = counting::joint_size(g, 3) {
            rows.push(VerificationRow::new(
                "Thm3.3",
                &label,
                js as f64 / m,
                0.0,
                None,
                "joint size over m^{(r-1)/2}, r = 3",
            ));
        }
        if counting::clique_count(g, 4).map(|c| c == 0).unwrap_or(false) {
            let sat = if g.n() <= 2000 {
                Some(counting::k4_saturating_edges(g))
            } else {
                None
            };
            if let Some(sat) = sat {
                rows.push(VerificationRow::new(
                    "Cor5.4",
                    &label,
                    sat as f64 / m,
                    0.0,
                    cert_flag(sat >= 1),
                    "K4-saturating edges over m (K4-free input)",
                ));
            }
        }
        // Kruskal-Katona shadow bound at t = 3: #K3 <= C(x,3), C(x,2) = m
        let k3 = counting::clique_count(g, 3).expect("t=3 valid");
        let x = 0.5 * (1.0 + (1.0 + 8.0 * m).sqrt());
        let bound = x * (x - 1.0) * (x - 2.0) / 6.0;
        rows.push(VerificationRow::new(
            "KruskalKatona",
            &label,
            k3 as f64,
            bound,
            Some((k3 as f64) <= bound + 1e-6),
            "clique shadow bound at t = 3",
        ));
    }
    rows
}

/// Suite-level rows: exhaustive and sampled claims that are not tied to one
/// construction instance.
fn suite_level_rows(seed: u64) -> Vec<VerificationRow> {
    let mut rows = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // dense 6-vertex graphs all carry books of size 2
    let mut min_bk = u64::MAX;
    let mut checked = 0u64;
    for mask in 0u32..(1 << 15) {
        if mask.count_ones() <= 9 {
            continue;
        }
        let g = graph_from_mask(6, mask);
        let (bk, _) = counting::book_size(&g);
        min_bk = min_bk.min(bk);
        checked += 1;
    }
    rows.push(VerificationRow::new(
        "Lem2.2",
        &format!("all {checked} labeled graphs, n=6, e>9"),
        min_bk as f64,
        1.0,
        Some(min_bk > 1),
        "exhaustive book floor",
    ));

    // weighted book lemma on random instances satisfying the density
    // hypothesis
    let mut min_obj = f64::INFINITY;
    let mut tested = 0;
    while tested < 40 {
        let n = rng.random_range(4..=9);
        let wg = random_weighted(&mut rng, n);
        if wg.weighted_edge_density() <= 0.25 {
            continue;
        }
        tested += 1;
        if let Ok((_, val)) = weights::best_weighted_book_edge(&wg) {
            min_obj = min_obj.min(val);
        } else {
            min_obj = 0.0;
        }
    }
    rows.push(VerificationRow::new(
        "Lem2.5",
        "random weighted instances above density 1/4",
        min_obj,
        1.0 / 6.0,
        Some(min_obj >= 1.0 / 6.0 - 1e-9),
        "book edge mass floor",
    ));

    // weighted joint lemma: positivity of the joint objective at r = 3
    let mut min_joint = f64::INFINITY;
    let mut tested = 0;
    while tested < 40 {
        let n = rng.random_range(5..=9);
        let wg = random_weighted(&mut rng, n);
        if wg.weighted_edge_density() <= 1.0 / 3.0 {
            continue;
        }
        tested += 1;
        match weights::best_weighted_joint_edge(&wg, 3) {
            Ok((_, val)) => min_joint = min_joint.min(val),
            Err(_) => min_joint = 0.0,
        }
    }
    rows.push(VerificationRow::new(
        "Lem3.6",
        "random weighted instances above density 1/3",
        min_joint,
        0.0,
        Some(min_joint > 0.0),
        "joint edge mass positivity, r = 3",
    ));

    // joints in dense random graphs
    for r in [2usize, 3] {
        let mut min_js = u64::MAX;
        let mut tested = 0;
        while tested < 60 {
            let n = rng.random_range((r + 2)..=8);
            let g = random_graph(&mut rng, n, 0.8);
            if (g.m() as f64) <= (1.0 - 1.0 / r as f64) * (n * n) as f64 / 2.0 {
                continue;
            }
            tested += 1;
            let (js, _) = counting::joint_size(&g, r).expect("r >= 2");
            min_js = min_js.min(js);
        }
        rows.push(VerificationRow::new(
            "Lem3.2",
            &format!("dense random graphs, r={r}"),
            min_js as f64,
            0.0,
            Some(min_js >= 1),
            "joint positivity beyond the edge threshold",
        ));
    }

    // vertex-spectral threshold forces joints: balanced partite plus an edge
    for r in [2usize, 3] {
        let out = constructions::kpartite_plus_edge(4, r).expect("feasible");
        let g = &out.graph;
        let n = g.n() as f64;
        let lambda = spectral::spectral_radius_default(g).expect("nonempty").lambda;
        let (js, _) = counting::joint_size(g, r).expect("r >= 2");
        let cond = lambda > (1.0 - 1.0 / r as f64) * n;
        rows.push(VerificationRow::new(
            "Cor3.4",
            &out.label(),
            js as f64,
            0.0,
            Some(cond && js >= 1),
            "joints under the vertex-spectral condition",
        ));
    }

    // degree powers and the signless Laplacian radius on K_{r+1}-free
    // subgraph samples
    for r in [2usize, 3, 4] {
        let mut max_ratio = f64::NEG_INFINITY;
        let mut max_q_ratio = f64::NEG_INFINITY;
        let mut ok = true;
        for _ in 0..60 {
            let n = rng.random_range(r + 1..=24);
            let g = random_turan_subgraph(&mut rng, n, r);
            if g.m() == 0 {
                continue;
            }
            let bound = 2.0 * (1.0 - 1.0 / r as f64) * g.m() as f64 * g.n() as f64;
            let ratio = g.degree_power() as f64 / bound;
            max_ratio = max_ratio.max(ratio);
            ok &= g.degree_power() as f64 <= bound + 1e-9;
            let q = spectral::signless_q_default(&g).expect("nonempty");
            let q_bound = (1.0 - 1.0 / r as f64) * 2.0 * g.n() as f64;
            max_q_ratio = max_q_ratio.max(q / q_bound);
            ok &= q <= q_bound + 1e-8;
        }
        rows.push(VerificationRow::new(
            "Eq5.1",
            &format!("Turan subgraph samples, r={r}"),
            max_ratio,
            1.0,
            Some(ok),
            "degree power over its bound (max ratio)",
        ));
        rows.push(VerificationRow::new(
            "SignlessQ",
            &format!("Turan subgraph samples, r={r}"),
            max_q_ratio,
            1.0,
            Some(max_q_ratio <= 1.0 + 1e-8),
            "signless Laplacian radius over its bound (max ratio)",
        ));
    }

    // shifted quadratic form on a sparse instance within the hypotheses
    {
        let m = 400;
        let k = 240;
        let mut g = Graph::empty(k);
        let mut added = 0;
        while added < m - k {
            let u = rng.random_range(0..k);
            let v = rng.random_range(0..k);
            if u != v && g.add_edge(u, v) {
                added += 1;
            }
        }
        let holds = dichotomy::proposition46_check(&g, m).expect("hypotheses met");
        rows.push(VerificationRow::new(
            "Prop4.6",
            &format!("random instance k={k}, m={m}"),
            f64::from(holds),
            1.0,
            Some(holds),
            "quadratic form check",
        ));
    }

    // structure dichotomy predicates on both extremal shapes
    {
        let book = constructions::book_construction(1001).expect("m >= 9");
        let star = constructions::clique_plus_star(2000).expect("feasible");
        let mut all_ok = true;
        let mut min_keep = f64::INFINITY;
        for out in [&book, &star] {
            let res = dichotomy::structural_dichotomy(&out.graph, 0.1).expect("certified input");
            let ok = match &res.branch {
                DichotomyBranch::Bipartite { .. } => res.subgraph.is_bipartite().is_bipartite(),
                DichotomyBranch::SmallDegree { .. } => {
                    res.subgraph.max_degree() as f64 <= 0.1 * out.graph.m() as f64
                }
            };
            all_ok &= ok;
            min_keep = min_keep.min(res.lambda_sub / (out.graph.m() as f64).sqrt());
        }
        rows.push(VerificationRow::new(
            "Thm1.6",
            "book_construction(1001) + clique_plus_star(2000)",
            min_keep,
            0.8,
            Some(all_ok && min_keep >= 0.8),
            "branch predicates verified; spectral retention reported",
        ));
    }

    rows
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_turan_subgraph(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Graph {
    let full = constructions::turan(n, r).expect("n >= r");
    let mut g = Graph::empty(n);
    for (u, v) in full.edges() {
        if rng.random_bool(0.8) {
            g.add_edge(u, v);
        }
    }
    g
}

fn random_weighted(rng: &mut ChaCha8Rng, n: usize) -> weights::WeightedGraph {
    let g = random_graph(rng, n, 0.85);
    let mut w: Vec<f64> = (0..n).map(|_| rng.random_range(0.2..1.0)).collect();
    let total: f64 = w.iter().sum();
    for wi in &mut w {
        *wi /= total;
    }
    // renormalize exactly: push the float slack onto the last vertex
    let slack: f64 = 1.0 - w.iter().sum::<f64>();
    w[n - 1] += slack;
    let entries: Vec<((usize, usize), f64)> = g
        .edges()
        .into_iter()
        .map(|e| (e, rng.random_range(0.5..1.0f64)))
        .collect();
    weights::WeightedGraph::new(g, w, &entries).expect("weights normalized")
}

/// One summary-table row: a statistic on the best-known certified graph,
/// normalized by its scaling.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub statistic: String,
    pub graph: String,
    pub observed: f64,
    pub normalized: f64,
    pub scaling: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1 {
    pub schema_version: u32,
    pub m: u64,
    pub rows: Vec<TableRow>,
}

/// Builds the eight-statistic summary at edge budget about `m`, minimizing
/// each statistic over the certified construction instances (and any search
/// records provided).
pub fn table1_report(m: u64, seed: u64, records: &[SearchRecord]) -> Table1 {
    let _ = seed;
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for family in Family::ALL {
        if let Some(out) = family.instantiate(m) {
            if matches!(
                spectral::is_nosal(&out.graph),
                Ok(NosalVerdict::CertifiedYes(_))
            ) {
                graphs.push((out.label(), out.graph));
            }
        }
    }
    for rec in records {
        if rec.certified {
            graphs.push((format!("search({}, seed={})", rec.objective, rec.seed), rec.best_graph()));
        }
    }
    let mut rows: Vec<TableRow> = Vec::new();
    let mut push_min =
        |name: &str, scaling: &str, values: Vec<Option<(String, f64, f64)>>| {
            let best = values
                .into_iter()
                .flatten()
                .min_by(|a, b| a.2.partial_cmp(&b.2).unwrap());
            if let Some((label, observed, normalized)) = best {
                rows.push(TableRow {
                    statistic: name.to_string(),
                    graph: label,
                    observed,
                    normalized,
                    scaling: scaling.to_string(),
                });
            }
        };

    type Stat = fn(&Graph) -> Option<f64>;
    type Scale = fn(f64) -> f64;
    let stats: Vec<(&str, &str, Stat, Scale)> = vec![
        (
            "triangles",
            "sqrt(m)",
            |g| Some(counting::triangle_count(g) as f64),
            |m| m.sqrt(),
        ),
        (
            "c4",
            "m^2",
            |g| counting::c4_count(g, C4Method::Codegree).ok().map(|v| v as f64),
            |m| m * m,
        ),
        (
            "book_size",
            "sqrt(m)",
            |g| Some(counting::book_size(g).0 as f64),
            |m| m.sqrt(),
        ),
        (
            "max_k2t",
            "sqrt(m)",
            |g| Some(counting::max_k2t(g).0 as f64),
            |m| m.sqrt(),
        ),
        (
            "triangular_edges",
            "sqrt(m)",
            |g| Some(counting::triangular_edges(g) as f64),
            |m| m.sqrt(),
        ),
        (
            "chordal_lb",
            "sqrt(m)",
            |g| Some(counting::chordal_lower_bound(g).0 as f64),
            |m| m.sqrt(),
        ),
        (
            "k4_saturating",
            "m",
            |g| {
                // meaningful only on K4-free graphs of moderate size
                let k4_free = counting::clique_count(g, 4).map(|c| c == 0).unwrap_or(false);
                if g.n() <= 2000 && k4_free {
                    Some(counting::k4_saturating_edges(g) as f64)
                } else {
                    None
                }
            },
            |m| m,
        ),
        (
            "kites",
            "m",
            |g| Some(counting::kite_count(g) as f64),
            |m| m,
        ),
    ];
    for (name, scaling, stat, scale) in stats {
        let values: Vec<Option<(String, f64, f64)>> = graphs
            .iter()
            .map(|(label, g)| {
                stat(g).map(|v| (label.clone(), v, v / scale(g.m() as f64)))
            })
            .collect();
        push_min(name, scaling, values);
    }
    Table1 {
        schema_version: SCHEMA_VERSION,
        m,
        rows,
    }
}

/// Output encodings shared by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<OutputFormat> {
        match s {
            "json" => Some(OutputFormat::Json),
            "csv" => Some(OutputFormat::Csv),
            "text" => Some(OutputFormat::Text),
            _ => None,
        }
    }
}

#[derive(Serialize)]
struct RowsDocument<'a> {
    schema_version: u32,
    rows: &'a [VerificationRow],
}

pub fn rows_to_json(rows: &[VerificationRow]) -> String {
    serde_json::to_string_pretty(&RowsDocument {
        schema_version: SCHEMA_VERSION,
        rows,
    })
    .expect("rows serialize")
}

pub fn rows_to_csv(rows: &[VerificationRow]) -> String {
    let mut out = String::from("claim,graph,observed,bound,margin,verdict,note\n");
    for r in rows {
        let verdict = match r.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ReportedOnly => "reported-only",
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.claim,
            r.graph.replace(',', ";"),
            r.observed,
            r.bound,
            r.margin,
            verdict,
            r.note.replace(',', ";")
        ));
    }
    out
}

pub fn rows_to_text(rows: &[VerificationRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<14} {:<44} {:>14} {:>14} {:>13}  {}\n",
        "claim", "graph", "observed", "bound", "verdict", "note"
    ));
    for r in rows {
        let verdict = match r.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::ReportedOnly => "reported-only",
        };
        out.push_str(&format!(
            "{:<14} {:<44} {:>14.6} {:>14.6} {:>13}  {}\n",
            r.claim,
            truncate(&r.graph, 44),
            r.observed,
            r.bound,
            verdict,
            r.note
        ));
    }
    out
}

pub fn table_to_text(table: &Table1) -> String {
    let mut out = format!("summary at m = {}\n", table.m);
    out.push_str(&format!(
        "{:<18} {:<40} {:>16} {:>12} {:>9}\n",
        "statistic", "graph", "observed", "normalized", "scaling"
    ));
    for r in &table.rows {
        out.push_str(&format!(
            "{:<18} {:<40} {:>16.3} {:>12.6} {:>9}\n",
            r.statistic,
            truncate(&r.graph, 40),
            r.observed,
            r.normalized,
            r.scaling
        ));
    }
    out
}

fn truncate(s: &str, width: usize) -> String {
    if s.len() <= width {
        s.to_string()
    } else {
        format!("{}…", &s[..width.saturating_sub(1)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_ids_are_unique() {
        let mut ids: Vec<&str> = CLAIM_MANIFEST.iter().map(|(id, _)| *id).collect();
        ids.sort_unstable();
        let len = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), len);
    }

    #[test]
    fn small_suite_covers_manifest_and_passes() {
        let spec = VerifySpec {
            families: Family::ALL.to_vec(),
            m_lo: 100,
            m_hi: 1200,
            seed: 3,
        };
        let rows = verify_suite(&spec);
        let gaps = coverage_gaps(&rows);
        assert!(gaps.is_empty(), "uncovered claims: {gaps:?}");
        let failures: Vec<&VerificationRow> =
            rows.iter().filter(|r| r.verdict == Verdict::Fail).collect();
        assert!(failures.is_empty(), "failing rows: {failures:#?}");
    }

    #[test]
    fn suite_is_deterministic() {
        let spec = VerifySpec {
            families: vec![Family::BookCore, Family::PrismBlowup],
            m_lo: 100,
            m_hi: 500,
            seed: 9,
        };
        let a = rows_to_json(&verify_suite(&spec));
        let b = rows_to_json(&verify_suite(&spec));
        assert_eq!(a, b);
    }

    #[test]
    fn corrupted_count_yields_fail_row() {
        // harness self-test: a fabricated bad row must be flagged
        let row = VerificationRow::new("Lem4.3", "fixture", 5.0, 6.0, Some(false), "corrupted");
        assert_eq!(row.verdict, Verdict::Fail);
        assert!(has_failures(&[row]));
    }

    #[test]
    fn table_has_eight_statistics() {
        let t = table1_report(500, 1, &[]);
        assert_eq!(t.rows.len(), 8);
        let text = table_to_text(&t);
        assert!(text.contains("book_size"));
    }

    #[test]
    fn formats_render() {
        let rows = vec![VerificationRow::new(
            "Thm1.2",
            "g",
            2.0,
            1.0,
            Some(true),
            "",
        )];
        assert!(rows_to_json(&rows).contains("\"schema_version\": 1"));
        assert!(rows_to_csv(&rows).starts_with("claim,"));
        assert!(rows_to_text(&rows).contains("pass"));
    }
}
