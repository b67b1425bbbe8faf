//! Command-line front end: every subcommand reads one algebra spec file,
//! calls into `hopfdom`, and prints a single JSON report.

pub mod spec;

use std::sync::Arc;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use hopfdom::analysis::{
    expected_skew_primitives, growth_dimensions, kernel_of_difference, takeuchi_maps, tangent_dimension, CanonicalSum,
};
use hopfdom::families::{
    chain_stage, is_isomorphic, presentation, random_element, recognize_affine, Family, HopfInstance,
};
use hopfdom::groups::{exp, validate_bdata, Exp};
use hopfdom::hopf::{find_grouplikes, find_skew_primitives, parse_key, verify_axioms, Element};
use hopfdom::linalg::same_span;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use spec::SpecFile;

/// Subcommand to the library operations it exposes. Each operation is
/// reachable from exactly one subcommand.
pub const DISPATCH: &[(&str, &[&str])] = &[
    (
        "construct",
        &[
            "make_group_algebra",
            "make_enveloping",
            "make_a",
            "make_b",
            "make_c",
            "make_affine_a",
            "make_affine_b",
            "make_affine_c",
            "prime_tower",
            "presentation",
        ],
    ),
    ("verify", &["verify_axioms", "validate_bdata"]),
    ("grouplikes", &["find_grouplikes"]),
    ("primitives", &["find_skew_primitives", "expected_skew_primitives"]),
    ("recognize", &["recognize_affine"]),
    ("stage", &["chain_stage"]),
    ("isomorphic", &["is_isomorphic"]),
    ("growth", &["growth_dimensions"]),
    ("tangent", &["tangent_dimension"]),
    ("takeuchi", &["takeuchi_maps", "kernel_of_difference"]),
];

#[derive(Debug, Parser)]
#[command(name = "hopfdom", version, about = "Exact computations with Hopf algebra domains of GK-dimension two")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Algebra spec file (JSON)
    #[arg(long)]
    pub spec: String,
    /// Stage of the directed union to work at
    #[arg(long)]
    pub stage: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the instance and print its presentation
    Construct(Common),
    /// Check the Hopf axioms on generators and seeded random elements
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Grouplike monomials inside a box
    Grouplikes {
        #[command(flatten)]
        common: Common,
        #[arg(long = "box")]
        box_size: Option<u32>,
    },
    /// Skew primitives of a given weight, compared with the classification
    Primitives {
        #[command(flatten)]
        common: Common,
        /// Grouplike weight, e.g. "x^1" or "x^(1/2)"
        #[arg(long)]
        weight: String,
        #[arg(long = "box")]
        box_size: Option<u32>,
    },
    /// Recognition data of an affine type B stage
    Recognize(Common),
    /// The chain stage of a type B instance selected by --stage
    Stage(Common),
    /// Isomorphism test between two type B instances
    Isomorphic {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        spec2: String,
    },
    /// Growth of the generating filtration and its log-log slope
    Growth {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        nmax: Option<u32>,
    },
    /// Dimension of the tangent space m/m^2
    Tangent(Common),
    /// Takeuchi maps for a group algebra over a subalgebra given by --spec2
    Takeuchi {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        spec2: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Construct(_) => "construct",
            Command::Verify { .. } => "verify",
            Command::Grouplikes { .. } => "grouplikes",
            Command::Primitives { .. } => "primitives",
            Command::Recognize(_) => "recognize",
            Command::Stage(_) => "stage",
            Command::Isomorphic { .. } => "isomorphic",
            Command::Growth { .. } => "growth",
            Command::Tangent(_) => "tangent",
            Command::Takeuchi { .. } => "takeuchi",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::Construct(c) | Command::Recognize(c) | Command::Stage(c) | Command::Tangent(c) => c,
            Command::Verify { common, .. }
            | Command::Grouplikes { common, .. }
            | Command::Primitives { common, .. }
            | Command::Isomorphic { common, .. }
            | Command::Growth { common, .. }
            | Command::Takeuchi { common, .. } => common,
        }
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

const EXIT_OK: i32 = 0;
const EXIT_FAILED: i32 = 1;
const EXIT_SPEC: i32 = 2;

const DEFAULT_SAMPLES: usize = 100;
const DEFAULT_BOX: u32 = 4;
const DEFAULT_NMAX: u32 = 32;

pub fn subcommand_names() -> Vec<String> {
    Cli::command().get_subcommands().map(|c| c.get_name().to_string()).collect()
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_SPEC, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    finish(cli.command.name(), execute(&cli.command))
}

fn finish(name: &str, result: Result<(bool, Value), String>) -> Outcome {
    match result {
        Ok((passed, report)) => Outcome {
            code: if passed { EXIT_OK } else { EXIT_FAILED },
            stdout: serde_json::to_string_pretty(&report).expect("report is valid JSON") + "\n",
            stderr: if passed { String::new() } else { format!("{name}: verification failed\n") },
        },
        Err(msg) => Outcome { code: EXIT_SPEC, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn summary(inst: &HopfInstance) -> Value {
    json!({
        "family": inst.tag(),
        "description": inst.describe(),
        "stage": inst.stage(),
        "stage_generator": inst.stage_generator().map(|g| g.to_string()),
    })
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

fn err_text(e: hopfdom::HopfError) -> String {
    e.to_string()
}

/// Runs one subcommand; `Ok((passed, report))`, or `Err` for spec and
/// request errors.
pub fn execute(cmd: &Command) -> Result<(bool, Value), String> {
    let common = cmd.common();
    let file = SpecFile::load(&common.spec)?;
    let stage_flag = if matches!(cmd, Command::Stage(_)) { None } else { common.stage };
    let inst = file.instance(stage_flag)?;
    let plan = &file.plan;
    match cmd {
        Command::Construct(_) => {
            let p = presentation(&inst).map_err(err_text)?;
            let generators: Vec<Value> =
                p.generators.iter().map(|(name, e)| json!({ "name": name, "element": e.to_string() })).collect();
            let relations: Vec<String> = p.relations.iter().map(|r| r.name.clone()).collect();
            Ok((true, json!({ "instance": summary(&inst), "generators": generators, "relations": relations })))
        }
        Command::Verify { samples, seed, .. } => {
            let samples = samples.or(plan.samples).unwrap_or(DEFAULT_SAMPLES);
            let seed = seed.or(plan.seed).unwrap_or(0);
            let axioms = verify_axioms(&inst, samples, seed);
            let mut passed = axioms.passed();
            let mut suites = serde_json::Map::new();
            suites.insert("axioms".into(), to_value(&axioms));
            if let Family::TypeB { group, monoid, chi } = inst.family() {
                let data = validate_bdata(group, monoid, chi);
                passed &= data.passed();
                suites.insert("bdata".into(), to_value(&data));
            }
            Ok((passed, json!({ "instance": summary(&inst), "suites": suites, "passed": passed })))
        }
        Command::Grouplikes { box_size, .. } => {
            let bx = box_size.or(plan.box_size).unwrap_or(DEFAULT_BOX);
            let found: Vec<String> = find_grouplikes(&inst, bx).iter().map(Element::to_string).collect();
            Ok((true, json!({ "instance": summary(&inst), "box": bx, "grouplikes": found })))
        }
        Command::Primitives { weight, box_size, .. } => {
            let bx = box_size.or(plan.box_size).unwrap_or(DEFAULT_BOX);
            let g = parse_key(&inst, weight).map_err(err_text)?;
            let space = find_skew_primitives(&inst, &g, bx).map_err(err_text)?;
            let basis: Vec<String> = space.basis.iter().map(Element::to_string).collect();
            let predicted = expected_skew_primitives(&inst, &g).ok();
            let matches = predicted.as_ref().map(|p| same_span(&space.vectors(), &p.vectors()));
            let predicted_basis: Option<Vec<String>> =
                predicted.map(|p| p.basis.iter().map(Element::to_string).collect());
            Ok((
                true,
                json!({
                    "instance": summary(&inst),
                    "weight": Element::display_key(&inst, &g).to_string(),
                    "box": bx,
                    "dim": space.dim(),
                    "basis": basis,
                    "predicted": predicted_basis,
                    "matches_prediction": matches,
                }),
            ))
        }
        Command::Recognize(_) => {
            let r = recognize_affine(&inst).map_err(err_text)?;
            Ok((true, json!({ "instance": summary(&inst), "recognition": to_value(&r) })))
        }
        Command::Stage(c) => {
            let n = c.stage.ok_or("stage needs --stage N")?;
            let st = chain_stage(&inst, n).map_err(err_text)?;
            Ok((true, json!({ "instance": summary(&inst), "stage": n, "result": summary(&st) })))
        }
        Command::Isomorphic { spec2, .. } => {
            let other = SpecFile::load(spec2)?.instance(common.stage)?;
            let r = is_isomorphic(&inst, &other);
            Ok((
                true,
                json!({
                    "left": summary(&inst),
                    "right": summary(&other),
                    "isomorphic": r.isomorphic,
                    "certificate": r.certificate,
                }),
            ))
        }
        Command::Growth { nmax, .. } => {
            let nmax = nmax.or(plan.nmax).unwrap_or(DEFAULT_NMAX);
            let gens: Vec<Element> =
                presentation(&inst).map_err(err_text)?.generators.into_iter().map(|g| g.1).collect();
            let r = growth_dimensions(&inst, &gens, nmax).map_err(err_text)?;
            Ok((true, json!({ "instance": summary(&inst), "nmax": nmax, "growth": to_value(&r) })))
        }
        Command::Tangent(_) => {
            let r = tangent_dimension(&inst).map_err(err_text)?;
            Ok((true, json!({ "instance": summary(&inst), "tangent": to_value(&r) })))
        }
        Command::Takeuchi { spec2, samples, seed, .. } => {
            let sub = SpecFile::load(spec2)?.instance(common.stage)?;
            let samples = samples.or(plan.samples).unwrap_or(DEFAULT_SAMPLES);
            let seed = seed.or(plan.seed).unwrap_or(0);
            takeuchi_report(&sub, &inst, samples, seed)
        }
    }
}

fn takeuchi_report(
    sub: &Arc<HopfInstance>,
    inst: &Arc<HopfInstance>,
    samples: usize,
    seed: u64,
) -> Result<(bool, Value), String> {
    let maps = takeuchi_maps(sub, inst, inst).map_err(err_text)?;
    let step = inst.stage_generator().ok_or("takeuchi needs a group algebra over Q")?;
    let sub_step = sub.stage_generator().ok_or("takeuchi needs a group algebra over Q")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 2 * *step.denom();
    let pick = |rng: &mut ChaCha8Rng, g: Exp| -> Exp { g * exp(rng.gen_range(-span..=span), 1) };
    let (mut balanced, mut linear, mut round_trip) = (0usize, 0usize, 0usize);
    for _ in 0..samples {
        let h = random_element(inst, &mut rng);
        let v = random_element(inst, &mut rng);
        let a = pick(&mut rng, step);
        let b = pick(&mut rng, sub_step);
        let (l, r) = maps.balanced_pair(a, b, &h);
        balanced += usize::from(maps.tau(&l) == maps.tau(&r));
        let pair = maps.pure(a, &h);
        linear +=
            usize::from(maps.tau(&maps.right_mul_pairs(&pair, &v)) == maps.right_mul_canonical(&maps.tau(&pair), &v));
        let rep = maps.quotient.representative(&a);
        let canon: CanonicalSum = h.terms().iter().map(|(k, c)| ((rep, k.clone()), c.clone())).collect();
        round_trip += usize::from(maps.tau(&maps.mu(&canon)) == canon);
    }
    let grouplikes: Vec<Exp> = (0..samples).map(|_| pick(&mut rng, step)).collect();
    let kernel = kernel_of_difference(sub, inst, &grouplikes).map_err(err_text)?;
    let passed = balanced == samples && linear == samples && round_trip == samples && kernel.passed;
    Ok((
        passed,
        json!({
            "subalgebra": summary(sub),
            "algebra": summary(inst),
            "samples": samples,
            "seed": seed,
            "balanced": balanced,
            "right_linear": linear,
            "round_trip": round_trip,
            "kernel": to_value(&kernel),
            "passed": passed,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_outcome() {
        assert_eq!(finish("verify", Ok((true, json!({})))).code, 0);
        let failed = finish("verify", Ok((false, json!({ "passed": false }))));
        assert_eq!(failed.code, 1);
        assert!(failed.stdout.contains("\"passed\": false"));
        assert_eq!(finish("verify", Err("bad".into())).code, 2);
    }
}
