//! Acceptance criteria. Runs as a plain binary so that the per-criterion
//! PASS/FAIL lines always appear in `cargo test` output.

use std::process::ExitCode;
use std::time::Instant;

use hermsym::branching::{integral_points, section_dimension};
use hermsym::okounkov::{
    build_section_space, highest_weight_vector, okounkov_pipeline, resolve_convention, Trivialization,
};
use hermsym::random::seeded;
use hermsym::verify::{
    check_bergman, check_chamber, check_chart_vs_spectral, check_cocycle, check_conjugation,
    check_dimension_identity, check_equivariance, check_fibres, check_general_vs_normal_form,
    check_joint_peirce_rules, check_peirce_rules, check_structure_constant, Check,
};
use hermsym::JordanModel;

const RECT_1_1: JordanModel = JordanModel::Rect { p: 1, q: 1 };
const RECT_1_2: JordanModel = JordanModel::Rect { p: 1, q: 2 };
const RECT_2_2: JordanModel = JordanModel::Rect { p: 2, q: 2 };
const RECT_2_3: JordanModel = JordanModel::Rect { p: 2, q: 3 };

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn record(&mut self, model: JordanModel, c: Check) {
        if c.passed() {
            self.notes.push(format!("{model} {}: {}", c.name, c.detail));
        } else {
            self.failures.push(format!("{model} {}: {}", c.name, c.detail));
        }
    }
}

fn dimension_identity() -> Outcome {
    let mut out = Outcome::new();
    for (model, top) in [(RECT_1_1, 20), (RECT_1_2, 10), (RECT_2_2, 6), (RECT_2_3, 4)] {
        out.record(model, check_dimension_identity(model, top));
    }
    out
}

fn section_rank() -> Outcome {
    let mut out = Outcome::new();
    for (model, top) in [(RECT_1_1, 5), (RECT_2_2, 3)] {
        let triv = Trivialization::new(model).expect("trivialization");
        for k in 1..=top {
            let expected = section_dimension(&triv.parabolic, k).expect("weyl dimension");
            match build_section_space(&triv, k) {
                Ok(s) if expected == s.dimension().into() => {
                    out.notes.push(format!("{model} k={k}: rank {}", s.dimension()))
                }
                Ok(s) => out
                    .failures
                    .push(format!("{model} k={k}: rank {} vs {expected}", s.dimension())),
                Err(e) => out.failures.push(format!("{model} k={k}: {e}")),
            }
        }
    }
    out
}

fn formula_agreement() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = seeded(3);
    for model in [RECT_1_1, RECT_2_2, RECT_2_3] {
        out.record(model, check_chart_vs_spectral(model, 100, 1e-9, &mut rng));
        out.record(model, check_general_vs_normal_form(model, 100, 1e-9, &mut rng));
    }
    out
}

fn equivariance_and_chamber() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = seeded(4);
    for model in [RECT_1_1, RECT_2_2, RECT_2_3] {
        out.record(model, check_equivariance(model, 50, 1e-9, &mut rng));
        out.record(model, check_chamber(model, 50, &mut rng));
    }
    out
}

fn jordan_identities() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = seeded(5);
    let models = [
        RECT_1_1,
        RECT_2_2,
        RECT_2_3,
        JordanModel::Spin { n: 4 },
        JordanModel::Spin { n: 5 },
    ];
    for model in models {
        out.record(model, check_bergman(model, 50, &mut rng));
        out.record(model, check_cocycle(model, 50, &mut rng));
        out.record(model, check_conjugation(model, 50, &mut rng));
        out.record(model, check_structure_constant(model, 50, &mut rng));
        out.record(model, check_peirce_rules(model, 50, &mut rng));
        out.record(model, check_joint_peirce_rules(model, 50, &mut rng));
    }
    out
}

fn kernel_dimension() -> Outcome {
    let mut out = Outcome::new();
    for (model, top) in [(RECT_1_1, 8), (RECT_2_2, 3)] {
        let triv = Trivialization::new(model).expect("trivialization");
        let level_one = build_section_space(&triv, 1).expect("level one");
        let conv = resolve_convention(&triv, &level_one).expect("convention").convention;
        let mut count = 0;
        for k in 1..=top {
            let space = match build_section_space(&triv, k) {
                Ok(s) => s,
                Err(e) => {
                    out.failures.push(format!("{model} k={k}: {e}"));
                    continue;
                }
            };
            for m in integral_points(k, triv.parabolic.rank()) {
                count += 1;
                if let Err(e) = highest_weight_vector(&triv, &space, &m, conv) {
                    out.failures.push(format!("{model} k={k} m={m:?}: {e}"));
                }
            }
        }
        out.notes.push(format!("{model}: {count} kernels"));
    }
    out
}

fn pipeline() -> Outcome {
    let mut out = Outcome::new();
    for model in [RECT_1_1, RECT_2_2] {
        match okounkov_pipeline(model, 2) {
            Ok(d) => out.notes.push(format!(
                "{model}: generators {:?}, vertices {}",
                d.generators,
                d.body_vertices.len()
            )),
            Err(e) => out.failures.push(format!("{model}: {e}")),
        }
    }
    out
}

fn fibre_coherence() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = seeded(8);
    for model in [RECT_1_1, RECT_2_2, RECT_2_3, JordanModel::Spin { n: 5 }] {
        out.record(model, check_fibres(model, 50, 1e-10, 1e-6, &mut rng));
    }
    out
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 dimension identity", dimension_identity),
        ("2 section-space rank", section_rank),
        ("3 moment formula agreement", formula_agreement),
        ("4 equivariance and chamber", equivariance_and_chamber),
        ("5 exact Jordan identities", jordan_identities),
        ("6 kernel dimension one", kernel_dimension),
        ("7 okounkov pipeline", pipeline),
        ("8 fibre coherence", fibre_coherence),
    ];
    let verbose = std::env::var_os("HERMSYM_ACCEPTANCE_VERBOSE").is_some();
    let mut all_ok = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let ok = out.failures.is_empty();
        all_ok &= ok;
        println!("{} criterion {name} ({secs:.2}s)", if ok { "PASS" } else { "FAIL" });
        for f in out.failures.iter().take(5) {
            println!("    {f}");
        }
        if verbose {
            for n in &out.notes {
                println!("    {n}");
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
