//! End-to-end analysis pipeline: SCC split, cycle means with certificates,
//! critical sets, bounds, estimates, optional ground-truth enumeration, and
//! the error metrics derived from all of it.
//!
//! Components are processed in ascending order of their smallest node id and
//! every stage is deterministic, so identical inputs produce identical
//! records. Stage timings are recorded but excluded from reports unless
//! explicitly requested, keeping report bytes reproducible.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use ocm_core::{
    critical_subgraph, cycle_mean, decompose_sccs, enumerate_simple_cycles, estimate,
    evaluate_bounds, extremal_cycles, heuristic_error, max_cycle_mean, min_cycle_mean,
    verify_certificate, BoundReport, ComponentGraph, Cycle, CycleMeanCertificate,
    ErrorDenominator, EstimateReport, Rational, WeightedDigraph,
};
use serde::{Deserialize, Serialize};

use crate::weightgen::WeightSpec;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeOptions {
    /// Enumerate all simple cycles per component to establish ground truth.
    pub ground_truth: bool,
    /// Cap on enumerated cycles per component (critical sets and ground
    /// truth alike).
    pub max_cycles: u64,
    /// Wall-clock budget for ground-truth enumeration, per graph.
    pub timeout: Option<Duration>,
    /// Carry stage timings into emitted reports (breaks byte-for-byte
    /// reproducibility across runs).
    pub include_timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            ground_truth: false,
            max_cycles: 1_000_000,
            timeout: None,
            include_timings: false,
        }
    }
}

/// A cycle in report form: 1-based node ids, exact weight and mean.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycleSummary {
    pub weight: Rational,
    pub length: u32,
    pub mean: Rational,
    pub nodes: Vec<u32>,
}

impl CycleSummary {
    fn new(origin: &ComponentGraph, c: &Cycle) -> CycleSummary {
        CycleSummary {
            weight: c.weight(&origin.graph),
            length: c.length(),
            mean: cycle_mean(&origin.graph, c),
            nodes: c
                .nodes(&origin.graph)
                .iter()
                .map(|&local| origin.nodes[local as usize] + 1)
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationStatus {
    /// Ground truth was not requested.
    Skipped,
    Complete { count: u64 },
    /// The per-component cycle cap cut enumeration short.
    Truncated { count: u64 },
    /// The wall-clock budget ran out.
    TimedOut { count: u64 },
}

impl EnumerationStatus {
    pub fn is_complete(&self) -> bool {
        matches!(self, EnumerationStatus::Complete { .. })
    }
}

/// Relative errors of the strict lower bounds against enumerated truth,
/// in percent. Defined in the positive-mean regime.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltaBlock {
    pub w_max_weight: Option<f64>,
    pub len_max_weight: Option<f64>,
    pub w_max_length: Option<f64>,
    pub len_max_length: Option<f64>,
}

/// Heuristic estimator errors against enumerated truth (denominator: the
/// true mean), in percent.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpsilonBlock {
    pub avg_max_weight: Option<f64>,
    pub geo_max_weight: Option<f64>,
    pub avg_max_length: Option<f64>,
    pub geo_max_length: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricBlock {
    pub delta: Option<DeltaBlock>,
    pub epsilon: EpsilonBlock,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroundTruthBlock {
    pub cycle_count: u64,
    pub complete: bool,
    /// L_w, L_l, S_w, S_l.
    pub max_weight: CycleSummary,
    pub max_length: CycleSummary,
    pub min_weight: CycleSummary,
    pub min_length: CycleSummary,
    /// Present iff enumeration completed.
    pub metrics: Option<MetricBlock>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTimings {
    pub solve_us: u128,
    pub critical_us: u128,
    pub bounds_us: u128,
    pub enumeration_us: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentAnalysis {
    pub w_min: Rational,
    pub w_max: Rational,
    pub lambda_min: Rational,
    pub lambda_max: Rational,
    pub witness_min: CycleSummary,
    pub witness_max: CycleSummary,
    pub potentials_min: Vec<Rational>,
    pub potentials_max: Vec<Rational>,
    pub bounds: BoundReport,
    pub estimates: EstimateReport,
    /// Estimator errors in the reference convention that needs no
    /// enumeration: reference and denominator are both `lambda_max`.
    pub eps_avg_vs_lambda_max: Option<f64>,
    pub eps_geo_vs_lambda_max: Option<f64>,
    pub enumeration: EnumerationStatus,
    pub ground_truth: Option<GroundTruthBlock>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentResult {
    Analyzed(Box<ComponentAnalysis>),
    Failed { error: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentRecord {
    /// 1-based component index in smallest-node order.
    pub component: usize,
    pub n: usize,
    pub m: usize,
    pub result: ComponentResult,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<StageTimings>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphAnalysis {
    pub name: String,
    pub nodes: usize,
    pub arcs: usize,
    pub components: usize,
    pub trivial_components: usize,
    pub records: Vec<ComponentRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub options: AnalyzeOptions,
    /// Distribution, range, base seed, and generator name when the run
    /// assigned weights itself (the `bench` pipeline).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weightgen: Option<WeightgenMeta>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightgenMeta {
    pub generator: String,
    pub spec: WeightSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: ReportMeta,
    pub graphs: Vec<GraphAnalysis>,
}

/// Runs the full pipeline on one parsed graph.
///
/// One record per non-trivial SCC; trivial SCCs are counted and skipped.
/// Nothing here is fatal: a component failure lands in its record.
pub fn analyze(g: &WeightedDigraph, name: &str, opts: &AnalyzeOptions) -> GraphAnalysis {
    let deadline = opts.timeout.map(|t| Instant::now() + t);
    let decomposition = decompose_sccs(g);
    let trivial = decomposition
        .components
        .iter()
        .filter(|c| c.trivial)
        .count();

    let mut records = Vec::new();
    for (idx, component) in decomposition.non_trivial() {
        let origin = ComponentGraph::extract(g, component);
        let mut timings = StageTimings::default();
        let result = match analyze_component(&origin, opts, deadline, &mut timings) {
            Ok(analysis) => ComponentResult::Analyzed(Box::new(analysis)),
            Err(err) => ComponentResult::Failed { error: err },
        };
        records.push(ComponentRecord {
            component: idx + 1,
            n: component.nodes.len(),
            m: component.arc_ids.len(),
            result,
            timings: opts.include_timings.then_some(timings),
        });
    }

    GraphAnalysis {
        name: name.to_string(),
        nodes: g.node_count(),
        arcs: g.arc_count(),
        components: decomposition.components.len(),
        trivial_components: trivial,
        records,
    }
}

fn analyze_component(
    origin: &ComponentGraph,
    opts: &AnalyzeOptions,
    deadline: Option<Instant>,
    timings: &mut StageTimings,
) -> Result<ComponentAnalysis, String> {
    let cg = &origin.graph;

    let t0 = Instant::now();
    let lo = min_cycle_mean(cg).map_err(|e| e.to_string())?;
    let hi = max_cycle_mean(cg).map_err(|e| e.to_string())?;
    verify_certificate(cg, &lo).map_err(|e| format!("min certificate: {e:?}"))?;
    verify_certificate(cg, &hi).map_err(|e| format!("max certificate: {e:?}"))?;
    timings.solve_us = t0.elapsed().as_micros();

    let t1 = Instant::now();
    let crit_min = critical_subgraph(cg, &lo, opts.max_cycles);
    let crit_max = critical_subgraph(cg, &hi, opts.max_cycles);
    timings.critical_us = t1.elapsed().as_micros();

    let (w_min, w_max) = cg.weight_bounds().expect("non-trivial component has arcs");

    let t2 = Instant::now();
    let bounds = evaluate_bounds(
        lo.lambda,
        hi.lambda,
        crit_min.summary(cg),
        crit_max.summary(cg),
        w_max,
    )
    .map_err(|e| e.to_string())?;
    let estimates = estimate(lo.lambda, hi.lambda).map_err(|e| e.to_string())?;
    let eps_avg_vs_lambda_max = heuristic_error(
        hi.lambda,
        estimates.lambda_avg.to_f64(),
        ErrorDenominator::LambdaMax,
        hi.lambda,
    );
    let eps_geo_vs_lambda_max = estimates.lambda_geo.and_then(|geo| {
        heuristic_error(hi.lambda, geo, ErrorDenominator::LambdaMax, hi.lambda)
    });
    timings.bounds_us = t2.elapsed().as_micros();

    let (enumeration, ground_truth) = if opts.ground_truth {
        let t3 = Instant::now();
        let gt = ground_truth_block(origin, opts, deadline, &hi, &bounds, &estimates)?;
        timings.enumeration_us = t3.elapsed().as_micros();
        gt
    } else {
        (EnumerationStatus::Skipped, None)
    };

    Ok(ComponentAnalysis {
        w_min,
        w_max,
        lambda_min: lo.lambda,
        lambda_max: hi.lambda,
        witness_min: CycleSummary::new(origin, &lo.witness),
        witness_max: CycleSummary::new(origin, &hi.witness),
        potentials_min: lo.potentials,
        potentials_max: hi.potentials,
        bounds,
        estimates,
        eps_avg_vs_lambda_max,
        eps_geo_vs_lambda_max,
        enumeration,
        ground_truth,
    })
}

fn ground_truth_block(
    origin: &ComponentGraph,
    opts: &AnalyzeOptions,
    deadline: Option<Instant>,
    hi: &CycleMeanCertificate,
    bounds: &BoundReport,
    estimates: &EstimateReport,
) -> Result<(EnumerationStatus, Option<GroundTruthBlock>), String> {
    let cg = &origin.graph;

    // Probe pass with a periodic deadline check folded into the visitor, so
    // a timeout is distinguishable from the cap.
    let mut timed_out = false;
    let mut seen = 0u64;
    if let Some(deadline) = deadline {
        if Instant::now() > deadline {
            return Ok((EnumerationStatus::TimedOut { count: 0 }, None));
        }
        let probe = enumerate_simple_cycles(cg, opts.max_cycles, |_| {
            seen += 1;
            if seen.is_multiple_of(1024) && Instant::now() > deadline {
                timed_out = true;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if timed_out {
            return Ok((EnumerationStatus::TimedOut { count: probe.count }, None));
        }
    }

    let truth = extremal_cycles(cg, opts.max_cycles).map_err(|e| e.to_string())?;

    let status = if truth.complete {
        EnumerationStatus::Complete {
            count: truth.total_cycles,
        }
    } else {
        EnumerationStatus::Truncated {
            count: truth.total_cycles,
        }
    };

    let metrics = truth.complete.then(|| MetricBlock {
        delta: bound_deltas(cg, &truth.max_weight, &truth.max_length, bounds),
        epsilon: epsilon_block(cg, &truth.max_weight, &truth.max_length, hi.lambda, estimates),
    });

    let block = GroundTruthBlock {
        cycle_count: truth.total_cycles,
        complete: truth.complete,
        max_weight: CycleSummary::new(origin, &truth.max_weight),
        max_length: CycleSummary::new(origin, &truth.max_length),
        min_weight: CycleSummary::new(origin, &truth.min_weight),
        min_length: CycleSummary::new(origin, &truth.min_length),
        metrics,
    };
    Ok((status, Some(block)))
}

/// Bound relative errors `(true - bound)/true` in percent; positive-mean
/// regime only, undefined entries on zero denominators.
pub fn bound_deltas(
    g: &WeightedDigraph,
    l_w: &Cycle,
    l_l: &Cycle,
    bounds: &BoundReport,
) -> Option<DeltaBlock> {
    if !bounds.lambda_min.is_positive() {
        return None;
    }
    Some(delta_block(
        bounds,
        l_w.weight(g),
        l_w.length(),
        l_l.weight(g),
        l_l.length(),
    ))
}

/// Recomputes the bound-error block from a record's stored raw fields.
///
/// Requires complete enumeration and a positive minimum mean, matching what
/// the pipeline stored; returns `None` otherwise.
pub fn bound_errors(analysis: &ComponentAnalysis) -> Option<DeltaBlock> {
    let gt = analysis.ground_truth.as_ref()?;
    if !gt.complete || !analysis.lambda_min.is_positive() {
        return None;
    }
    Some(delta_block(
        &analysis.bounds,
        gt.max_weight.weight,
        gt.max_weight.length,
        gt.max_length.weight,
        gt.max_length.length,
    ))
}

fn delta_block(
    bounds: &BoundReport,
    w_lw: Rational,
    len_lw: u32,
    w_ll: Rational,
    len_ll: u32,
) -> DeltaBlock {
    let cmax_len = Rational::from_int(bounds.critical_max.len_max as i128);
    let cmin_w = bounds.critical_min.weight_max;

    let pct = |truth: Rational, bound: Rational| -> Option<f64> {
        if truth.is_zero() {
            None
        } else {
            Some(100.0 * ((truth - bound) / truth).to_f64())
        }
    };

    DeltaBlock {
        w_max_weight: pct(w_lw, cmax_len * bounds.lambda_min),
        len_max_weight: pct(Rational::from_int(len_lw as i128), cmax_len),
        w_max_length: pct(w_ll, cmin_w),
        len_max_length: pct(
            Rational::from_int(len_ll as i128),
            cmin_w / bounds.lambda_max,
        ),
    }
}

fn epsilon_block(
    g: &WeightedDigraph,
    l_w: &Cycle,
    l_l: &Cycle,
    lambda_max: Rational,
    estimates: &EstimateReport,
) -> EpsilonBlock {
    let mean_lw = cycle_mean(g, l_w);
    let mean_ll = cycle_mean(g, l_l);
    let avg = estimates.lambda_avg.to_f64();

    let eps = |reference: Rational, est: Option<f64>| -> Option<f64> {
        est.and_then(|e| heuristic_error(reference, e, ErrorDenominator::TrueMean, lambda_max))
    };

    EpsilonBlock {
        avg_max_weight: eps(mean_lw, Some(avg)),
        geo_max_weight: eps(mean_lw, estimates.lambda_geo),
        avg_max_length: eps(mean_ll, Some(avg)),
        geo_max_length: eps(mean_ll, estimates.lambda_geo),
    }
}
