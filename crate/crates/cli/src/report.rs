//! Report types shared by the text and JSON renderers.
//!
//! Floats are written in Rust's shortest round-trip form so reruns are
//! byte-identical and values parse back exactly.

use std::fmt::{Debug, Write};

use serde::Serialize;

/// `key: value` lines, values in `Debug` form.
#[derive(Default)]
pub struct Lines(String);

impl Lines {
    pub fn field(&mut self, key: &str, value: impl Debug) -> &mut Self {
        let _ = writeln!(self.0, "{key}: {value:?}");
        self
    }

    pub fn text(&mut self, line: impl AsRef<str>) -> &mut Self {
        self.0.push_str(line.as_ref());
        self.0.push('\n');
        self
    }

    pub fn matrix(&mut self, key: &str, m: &[[f64; 3]; 3]) -> &mut Self {
        let _ = writeln!(self.0, "{key}:");
        for row in m {
            let _ = writeln!(self.0, "  {row:?}");
        }
        self
    }

    pub fn finish(&mut self) -> String {
        std::mem::take(&mut self.0)
    }
}

pub trait Render: Serialize {
    fn text(&self) -> String;
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ChannelArgs {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub xi: f64,
    pub eta: f64,
    pub lambda: f64,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Affine {
    pub m: [[f64; 3]; 3],
    pub c: [f64; 3],
}

#[derive(Serialize, Debug)]
pub struct AffineReport {
    pub params: ChannelArgs,
    pub tomography: Affine,
    pub analytic: Affine,
    pub max_deviation: f64,
    pub signed_diagonal: [f64; 3],
    pub zero_shift: bool,
}

impl Render for AffineReport {
    fn text(&self) -> String {
        let p = &self.params;
        Lines::default()
            .text(format!(
                "params: alpha={:?} beta={:?} gamma={:?} xi={:?} eta={:?} lambda={:?}",
                p.alpha, p.beta, p.gamma, p.xi, p.eta, p.lambda
            ))
            .matrix("tomography M", &self.tomography.m)
            .field("tomography C", self.tomography.c)
            .matrix("analytic M", &self.analytic.m)
            .field("analytic C", self.analytic.c)
            .field("max deviation", self.max_deviation)
            .field("signed diagonal", self.signed_diagonal)
            .field("zero shift", self.zero_shift)
            .finish()
    }
}

#[derive(Serialize, Debug)]
pub struct SimulableReport {
    pub point: [f64; 3],
    pub in_tetrahedron: bool,
    pub epsilons: [f64; 4],
    pub representative: Option<[f64; 3]>,
    pub simulable: bool,
    pub angles: Option<[f64; 3]>,
}

impl Render for SimulableReport {
    fn text(&self) -> String {
        let mut lines = Lines::default();
        lines
            .field("point", self.point)
            .field("in tetrahedron", self.in_tetrahedron)
            .field("epsilons", self.epsilons);
        match self.representative {
            Some(r) => lines.field("canonical representative", r),
            None => lines.text("canonical representative: none"),
        };
        lines.field("simulable", self.simulable);
        match self.angles {
            Some(a) => lines.field("angles", a),
            None => lines.text("angles: none"),
        };
        lines.finish()
    }
}

#[derive(Serialize, Debug)]
pub struct VolumeReport {
    pub samples: u64,
    pub seed: u64,
    pub in_tetrahedron: u64,
    pub simulable: u64,
    pub fraction: f64,
    pub stderr: f64,
    pub acceptance: f64,
    pub acceptance_stderr: f64,
    pub quadrature_volume: f64,
    pub reference_fraction: f64,
    pub reference_volume: f64,
    pub tetrahedron_volume: f64,
}

impl Render for VolumeReport {
    fn text(&self) -> String {
        Lines::default()
            .field("samples", self.samples)
            .field("seed", self.seed)
            .field("in tetrahedron", self.in_tetrahedron)
            .field("simulable", self.simulable)
            .field("fraction", self.fraction)
            .field("stderr", self.stderr)
            .field("acceptance", self.acceptance)
            .field("acceptance stderr", self.acceptance_stderr)
            .field("quadrature volume", self.quadrature_volume)
            .field("reference fraction", self.reference_fraction)
            .field("reference volume", self.reference_volume)
            .field("tetrahedron volume", self.tetrahedron_volume)
            .finish()
    }
}

#[derive(Serialize, Debug)]
pub struct CrossSectionReport {
    pub z0: f64,
    pub grid: usize,
    pub shaded_cells: usize,
    pub area: f64,
    pub slice_area: f64,
    pub fraction: f64,
    pub svg: String,
}

impl Render for CrossSectionReport {
    fn text(&self) -> String {
        Lines::default()
            .field("z0", self.z0)
            .field("grid", self.grid)
            .field("shaded cells", self.shaded_cells)
            .field("area", self.area)
            .field("slice area", self.slice_area)
            .field("fraction", self.fraction)
            .text(format!("svg: {}", self.svg))
            .finish()
    }
}

#[derive(Serialize, Debug)]
pub struct KappaVerdict {
    pub kappa: f64,
    pub simulable: bool,
}

#[derive(Serialize, Debug)]
pub struct TwoPauliReport {
    pub steps: usize,
    pub verdicts: Vec<KappaVerdict>,
    pub simulable_at_one: bool,
    pub none_below_one: bool,
}

impl TwoPauliReport {
    pub fn new(verdicts: Vec<KappaVerdict>) -> Self {
        let simulable_at_one = verdicts.iter().any(|v| v.kappa == 1.0 && v.simulable);
        let none_below_one = verdicts.iter().all(|v| v.kappa == 1.0 || !v.simulable);
        TwoPauliReport {
            steps: verdicts.len(),
            verdicts,
            simulable_at_one,
            none_below_one,
        }
    }
}

impl Render for TwoPauliReport {
    fn text(&self) -> String {
        let mut lines = Lines::default();
        for v in &self.verdicts {
            let verdict = if v.simulable {
                "simulable"
            } else {
                "not simulable"
            };
            lines.text(format!("kappa {:?}: {verdict}", v.kappa));
        }
        let simulable: Vec<String> = self
            .verdicts
            .iter()
            .filter(|v| v.simulable)
            .map(|v| format!("{:?}", v.kappa))
            .collect();
        let listed = if simulable.is_empty() {
            "none".to_string()
        } else {
            simulable.join(", ")
        };
        lines.text(format!(
            "summary: {} of {} not simulable; simulable at kappa = {listed}; kappa = 1 simulable: {}; no kappa < 1 simulable: {}",
            self.steps - simulable.len(),
            self.steps,
            self.simulable_at_one,
            self.none_below_one
        ));
        lines.finish()
    }
}
