//! Two-direction traffic-signal simulation driven by an interval-degree
//! decision controller, with a crisp (type-1) reduction for comparison.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::IntervalDegree;

#[derive(Debug, Error, PartialEq)]
pub enum TrafficError {
    #[error("invalid config: {0}")]
    ConfigInvalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Bfdes,
    Fdes,
}

/// Simulation parameters. `bfdes`/`fdes` build the two standard columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrafficConfig {
    pub mode: Mode,
    pub duration_s: u64,
    pub lanes_per_approach: u32,
    /// Support of the maximum green time, seconds. Degenerate in fdes mode.
    pub t_max: (f64, f64),
    pub t_bsc: f64,
    pub t_ext: f64,
    /// Spread band of the demand evaluation. Degenerate in fdes mode.
    pub sigma_range: (f64, f64),
    pub q_max: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    /// Vehicles per hour leaving on green.
    pub saturation_flow: f64,
    /// Seconds at the start of each green with no departures.
    pub lost_time: f64,
    /// Total vehicles per hour over both directions.
    pub arrival_rate: f64,
    pub seed: u64,
}

impl TrafficConfig {
    pub fn bfdes(arrival_rate: f64, seed: u64) -> TrafficConfig {
        TrafficConfig {
            mode: Mode::Bfdes,
            duration_s: 7200,
            lanes_per_approach: 2,
            t_max: (60.0, 80.0),
            t_bsc: 30.0,
            t_ext: 3.0,
            sigma_range: (10.0, 30.0),
            q_max: 90.0,
            gamma1: 1.0,
            gamma2: 1.0,
            saturation_flow: 2880.0,
            lost_time: 4.0,
            arrival_rate,
            seed,
        }
    }

    pub fn fdes(arrival_rate: f64, seed: u64) -> TrafficConfig {
        TrafficConfig {
            mode: Mode::Fdes,
            t_max: (70.0, 70.0),
            sigma_range: (20.0, 20.0),
            ..TrafficConfig::bfdes(arrival_rate, seed)
        }
    }

    pub fn with_mode(mode: Mode, arrival_rate: f64, seed: u64) -> TrafficConfig {
        match mode {
            Mode::Bfdes => TrafficConfig::bfdes(arrival_rate, seed),
            Mode::Fdes => TrafficConfig::fdes(arrival_rate, seed),
        }
    }

    pub fn validate(&self) -> Result<(), TrafficError> {
        let err = |m: &str| Err(TrafficError::ConfigInvalid(m.to_string()));
        if self.duration_s == 0 {
            return err("duration must be positive");
        }
        if !(self.t_max.0 > 0.0 && self.t_max.1 >= self.t_max.0) {
            return err("t_max must be a positive interval");
        }
        if !(self.t_bsc > 0.0 && self.t_bsc < self.t_max.0) {
            return err("t_bsc must be positive and below t_max");
        }
        if self.t_ext <= 0.0 {
            return err("t_ext must be positive");
        }
        if !(self.sigma_range.0 > 0.0 && self.sigma_range.1 >= self.sigma_range.0) {
            return err("sigma_range must be a positive interval");
        }
        if self.q_max <= 0.0 {
            return err("q_max must be positive");
        }
        if self.gamma1 < 0.0 || self.gamma2 < 0.0 {
            return err("weights must be non-negative");
        }
        if self.saturation_flow <= 0.0 {
            return err("saturation_flow must be positive");
        }
        if self.lost_time < 0.0 {
            return err("lost_time must be non-negative");
        }
        if self.arrival_rate < 0.0 {
            return err("arrival_rate must be non-negative");
        }
        Ok(())
    }
}

/// Urgency of switching (first) and extending (second) after `t_grn` seconds
/// of green. The lower bound evaluates the quadratic at the upper end of the
/// `t_max` support, the upper bound at the lower end; the extend urgency is
/// the complement.
pub fn uncontrollability_degree(t_grn: f64, cfg: &TrafficConfig) -> (IntervalDegree, IntervalDegree) {
    let (tl, tu) = cfg.t_max;
    let s1 = if t_grn <= cfg.t_bsc {
        IntervalDegree::zero()
    } else if t_grn >= tu {
        IntervalDegree::one()
    } else {
        let ramp = |t_m: f64| {
            let v = ((t_grn - cfg.t_bsc) / (t_m - cfg.t_bsc)).powi(2);
            v.min(1.0)
        };
        IntervalDegree::new(ramp(tu), ramp(tl)).expect("ramp is monotone in t_m")
    };
    (s1, s1.icomplement())
}

fn evaluate_demand(x: f64, sigma: f64, q_max: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if x >= q_max {
        1.0
    } else {
        (-(x - q_max).powi(2) / (2.0 * sigma * sigma)).exp()
    }
}

/// Right-of-way demand for a sensed queue-length interval (vehicles).
pub fn demand_degree(queue: (f64, f64), cfg: &TrafficConfig) -> IntervalDegree {
    let lo = evaluate_demand(queue.0, cfg.sigma_range.0, cfg.q_max);
    let hi = evaluate_demand(queue.1, cfg.sigma_range.1, cfg.q_max);
    IntervalDegree::new(lo, hi).expect("demand is monotone in queue and sigma")
}

pub type IntervalMatrix = [[IntervalDegree; 2]; 2];

/// Event matrices for the two-state decision model: column 0 is "switch",
/// column 1 is "extend".
pub fn event_matrices(
    d_grn: IntervalDegree,
    d_red: IntervalDegree,
    uc: (IntervalDegree, IntervalDegree),
) -> (IntervalMatrix, IntervalMatrix) {
    let z = IntervalDegree::zero();
    let a = d_grn.imeet(&uc.0);
    let b = d_red.imeet(&uc.1);
    ([[a, z], [a, z]], [[z, b], [z, b]])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Switch,
    Extend,
}

fn compose_row(q: &[IntervalDegree; 2], m: &IntervalMatrix) -> [IntervalDegree; 2] {
    [0, 1].map(|j| q[0].imeet(&m[0][j]).ijoin(&q[1].imeet(&m[1][j])))
}

/// One supervisor decision: next activation pair and the chosen action.
/// Ties rank as "switch".
pub fn decision_step(
    q: &[IntervalDegree; 2],
    sigma1: &IntervalMatrix,
    sigma2: &IntervalMatrix,
    gamma1: f64,
    gamma2: f64,
) -> ([IntervalDegree; 2], Decision) {
    let via1 = compose_row(q, sigma1).map(|d| d.iscale(gamma1));
    let via2 = compose_row(q, sigma2).map(|d| d.iscale(gamma2));
    let next = [via1[0].ijoin(&via2[0]), via1[1].ijoin(&via2[1])];
    let decision = if next[0].icentroid() >= next[1].icentroid() {
        Decision::Switch
    } else {
        Decision::Extend
    };
    (next, decision)
}

/// Sensor model: the exact counts blurred by the mode's disturbance.
pub fn noisy_queues(
    q_grn: u64,
    q_red: u64,
    rng: &mut impl Rng,
    mode: Mode,
) -> ((f64, f64), (f64, f64)) {
    let mut sense = |q: u64| {
        let q = q as f64;
        match mode {
            Mode::Bfdes => {
                let r1: f64 = rng.gen();
                let r2: f64 = rng.gen();
                (q * (1.0 - r1 * 0.1), q * (1.0 + r2 * 0.1))
            }
            Mode::Fdes => {
                let r: f64 = rng.gen_range(-1.0..=1.0);
                let v = q * (1.0 + r * 0.1);
                (v, v)
            }
        }
    };
    (sense(q_grn), sense(q_red))
}

fn initial_activation() -> [IntervalDegree; 2] {
    [IntervalDegree::zero(), IntervalDegree::one()]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimResult {
    /// Mean waiting time per arrived vehicle, seconds.
    pub d_avg: f64,
    /// (cycle index, mean per-direction queue length over the cycle).
    pub per_cycle_queue: Vec<(usize, f64)>,
    pub cycles: usize,
    pub total_arrivals: u64,
    pub total_departures: u64,
    pub final_queues: [u64; 2],
    pub waiting_vehicle_seconds: u64,
}

impl SimResult {
    /// `cycle,avg_queue` rows for external plotting.
    pub fn queue_csv(&self) -> String {
        let mut out = String::from("cycle,avg_queue\n");
        for (i, q) in &self.per_cycle_queue {
            out.push_str(&format!("{i},{q:.4}\n"));
        }
        out
    }
}

/// Second-resolution simulation of the two-direction intersection under the
/// configured controller.
pub fn run_simulation(cfg: &TrafficConfig) -> Result<SimResult, TrafficError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let p_arrival = (cfg.arrival_rate / 2.0) / 3600.0;
    let dep_per_s = cfg.saturation_flow / 3600.0;

    let mut queues: [u64; 2] = [0, 0];
    let mut green: usize = 0;
    let mut t_grn: u64 = 0;
    let mut dep_accum = 0.0_f64;
    let mut activation = initial_activation();

    let mut total_arrivals = 0u64;
    let mut total_departures = 0u64;
    let mut waiting = 0u64;
    let mut cycles = 0usize;
    let mut cycle_queue_sum = 0u64;
    let mut cycle_seconds = 0u64;
    let mut per_cycle_queue = Vec::new();

    let t_bsc = cfg.t_bsc.round() as u64;
    let t_ext = cfg.t_ext.round().max(1.0) as u64;

    for _ in 0..cfg.duration_s {
        for q in &mut queues {
            if rng.gen::<f64>() < p_arrival {
                *q += 1;
                total_arrivals += 1;
            }
        }

        if (t_grn as f64) >= cfg.lost_time {
            dep_accum += dep_per_s;
            let ready = dep_accum.floor() as u64;
            let leaving = ready.min(queues[green]);
            queues[green] -= leaving;
            total_departures += leaving;
            dep_accum -= ready as f64;
        }

        waiting += queues[0] + queues[1];
        cycle_queue_sum += queues[0] + queues[1];
        cycle_seconds += 1;
        t_grn += 1;

        if t_grn >= t_bsc && (t_grn - t_bsc).is_multiple_of(t_ext) {
            let (sensed_grn, sensed_red) =
                noisy_queues(queues[green], queues[1 - green], &mut rng, cfg.mode);
            let d_grn = demand_degree(sensed_grn, cfg);
            let d_red = demand_degree(sensed_red, cfg);
            let uc = uncontrollability_degree(t_grn as f64, cfg);
            // Switching urgency is driven by the waiting direction's demand,
            // extension by the flowing direction's demand.
            let (m1, m2) = event_matrices(d_red, d_grn, uc);
            let (next, decision) = decision_step(&activation, &m1, &m2, cfg.gamma1, cfg.gamma2);
            activation = next;
            if decision == Decision::Switch {
                per_cycle_queue
                    .push((cycles, cycle_queue_sum as f64 / (2.0 * cycle_seconds as f64)));
                cycles += 1;
                cycle_queue_sum = 0;
                cycle_seconds = 0;
                green = 1 - green;
                t_grn = 0;
                dep_accum = 0.0;
                activation = initial_activation();
            }
        }
    }

    let d_avg = if total_arrivals == 0 {
        0.0
    } else {
        waiting as f64 / total_arrivals as f64
    };
    Ok(SimResult {
        d_avg,
        per_cycle_queue,
        cycles,
        total_arrivals,
        total_departures,
        final_queues: queues,
        waiting_vehicle_seconds: waiting,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    pub rate: f64,
    pub bfdes_mean: f64,
    pub bfdes_std: f64,
    pub fdes_mean: f64,
    pub fdes_std: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub rows: Vec<CompareRow>,
    pub seeds: Vec<u64>,
}

impl ComparisonTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rate,bfdes_davg,fdes_davg\n");
        for r in &self.rows {
            out.push_str(&format!("{},{:.4},{:.4}\n", r.rate, r.bfdes_mean, r.fdes_mean));
        }
        out
    }
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Runs both controllers over each rate and seed and aggregates delays.
pub fn compare_controllers(rates: &[f64], seeds: &[u64]) -> Result<ComparisonTable, TrafficError> {
    let mut rows = Vec::new();
    for &rate in rates {
        let mut b = Vec::new();
        let mut f = Vec::new();
        for &seed in seeds {
            b.push(run_simulation(&TrafficConfig::bfdes(rate, seed))?.d_avg);
            f.push(run_simulation(&TrafficConfig::fdes(rate, seed))?.d_avg);
        }
        let (bfdes_mean, bfdes_std) = mean_std(&b);
        let (fdes_mean, fdes_std) = mean_std(&f);
        rows.push(CompareRow { rate, bfdes_mean, bfdes_std, fdes_mean, fdes_std });
    }
    Ok(ComparisonTable { rows, seeds: seeds.to_vec() })
}
