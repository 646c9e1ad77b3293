//! Command-line front end: parses parameter descriptions, dispatches the
//! library computations, and emits aligned tables or machine-readable JSON.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 when a mathematical
//! assertion fails (a theorem-violation witness, never a usage problem).

mod grammar;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use so2n::algebra::{rat_int, Rational};
use so2n::eisenstein::{kato_report, residual_report, UnramifiedCharacter};
use so2n::endoscopy::{
    disc_levi_gl, disc_twisted_levi, inverse_norm, norm, sample_regular_so,
    verify_character_identity, verify_unramified_trace, NormPair,
};
use so2n::hecke::{
    bound_exponent_so2n_with, bound_so8, conjugate_under_weyl, eigenvalue, epsilon_n,
    residual_hecke_matrix, satake_minimal, trivial_hecke_matrix, BoundMode, DominantWeight,
};
use so2n::lfunctions::{build_intertwining_product, normalized_order_at_s0, s0_point, PoleOrder};
use so2n::params::{
    classify, global_type_count, hecke_matrix_of, packet, section2_local_parameter, validate,
    ArthurBlock, ArthurParameter, BlockCoefficient, CentralizerType, Classification,
};
use so2n::roots::{
    elementary_symmetries, relative_weyl_set, w0_all_blocks_minus, LeviDescriptor, RootSystemD,
    WeylGroupKind,
};
use so2n::singular::degeneracy_theorem_check;

#[derive(Parser)]
#[command(
    name = "so2n",
    version,
    about = "Exact computations for split even special orthogonal groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    let (numer, denom) = match text.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (text, None),
    };
    let n: i64 = numer.trim().parse().map_err(|_| "expected an integer")?;
    let d: i64 = match denom {
        Some(b) => b.trim().parse().map_err(|_| "expected an integer")?,
        None => 1,
    };
    if d <= 0 {
        return Err("denominator must be positive".into());
    }
    Ok(so2n::algebra::rat(n, d))
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, coroots and the half-sum for D_n.
    Roots {
        #[arg(long)]
        n: usize,
    },
    /// The relative Weyl set of the GL2-block Levi.
    Wm {
        #[arg(long)]
        n: usize,
    },
    /// Pole bookkeeping for the intertwining products at the residue point.
    Poles {
        #[arg(long)]
        n: usize,
    },
    /// Kato's criterion for the residual inducing character family.
    Kato {
        #[arg(long)]
        n: usize,
    },
    /// Satake eigenvalue of the minimal-weight Hecke operator.
    Satake {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Satake parameter to evaluate at (only `trivial` is built in).
        #[arg(long, default_value = "trivial")]
        at: String,
    },
    /// Eigenvalue bounds: exponents and the explicit rank-4 bound.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// `log_p |t|` for the inducing datum.
        #[arg(long = "tau-exponent", value_parser = parse_rational, default_value = "7/64")]
        tau_exponent: Rational,
    },
    /// Validate and classify a parameter given in the block grammar.
    Classify {
        #[arg(long)]
        param: String,
        #[arg(long)]
        n: usize,
        /// Also apply the stronger (unproven) spin >= n exclusion.
        #[arg(long)]
        remark_threshold: bool,
    },
    /// Satake parameter synthesized from a parameter description.
    HeckeMatrix {
        #[arg(long)]
        param: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    /// Sampled norm correspondence between the two torus presentations.
    Norm {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Exact verification of the twisted character identity on samples.
    CharCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, value_parser = parse_rational, default_value = "1/4")]
        s: Rational,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Packet data for the two-block parameter family.
    Packet {
        /// One of: triv, eps, unit, abs:<rational>.
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: usize,
    },
    /// Randomized degeneracy check for forms vanishing on the pinned block.
    Degeneracy {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the cross-module property battery.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum CliError {
    Usage(String),
}

struct CommandOutput {
    command: &'static str,
    inputs: Value,
    results: Value,
    citations: &'static [&'static str],
    exit_code: i32,
}

fn require_even(n: usize) -> Result<(), CliError> {
    if n < 2 || n % 2 != 0 {
        Err(CliError::Usage(format!(
            "n must be even and at least 2, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn require_prime(p: u64) -> Result<(), CliError> {
    let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if is_prime {
        Ok(())
    } else {
        Err(CliError::Usage(format!("p must be prime, got {p}")))
    }
}

fn cmd_roots(n: usize) -> Result<CommandOutput, CliError> {
    if n < 2 {
        return Err(CliError::Usage("n must be at least 2".into()));
    }
    let system = RootSystemD::new(n);
    let roots: Vec<String> = system
        .positive_roots()
        .iter()
        .map(|r| r.to_string())
        .collect();
    let coroots: Vec<String> = system
        .positive_roots()
        .iter()
        .map(|r| format!("{:?}", r.coroot_exponents(n)))
        .collect();
    let rho: Vec<String> = system.rho().iter().map(|c| c.to_string()).collect();
    Ok(CommandOutput {
        command: "roots",
        inputs: json!({ "n": n }),
        results: json!({
            "count": roots.len(),
            "positive_roots": roots,
            "coroot_exponents": coroots,
            "rho": rho,
        }),
        citations: &["type-D-root-system", "half-sum-of-positive-roots"],
        exit_code: 0,
    })
}

fn cmd_wm(n: usize) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    let levi = LeviDescriptor::product_gl2(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let set = relative_weyl_set(&levi).map_err(|e| CliError::Usage(e.to_string()))?;
    let gens = elementary_symmetries(&levi).map_err(|e| CliError::Usage(e.to_string()))?;
    let w0 = w0_all_blocks_minus(&levi).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(CommandOutput {
        command: "wm",
        inputs: json!({ "n": n }),
        results: json!({
            "size": set.len(),
            "generators": gens.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "w0": w0.to_string(),
            "contains_w0": set.contains(&w0),
            "elements": set.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        }),
        citations: &["relative-weyl-set", "elementary-symmetries"],
        exit_code: 0,
    })
}

fn cmd_poles(n: usize) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    let levi = LeviDescriptor::product_gl2(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let w0 = w0_all_blocks_minus(&levi).map_err(|e| CliError::Usage(e.to_string()))?;
    let prod =
        build_intertwining_product(&w0, &levi).map_err(|e| CliError::Usage(e.to_string()))?;
    let order = match prod.order_at(&s0_point(n)) {
        PoleOrder::Known { order, .. } => order,
        PoleOrder::Undetermined => return Err(CliError::Usage("order undetermined at s0".into())),
    };
    let normalized =
        normalized_order_at_s0(&prod, n).map_err(|e| CliError::Usage(e.to_string()))?;
    let s0: Vec<String> = so2n::eisenstein::ResiduePoint::new(n)
        .map_err(|e| CliError::Usage(e.to_string()))?
        .coordinates()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let terms: Vec<String> = prod.terms.iter().map(|t| t.to_string()).collect();
    Ok(CommandOutput {
        command: "poles",
        inputs: json!({ "n": n }),
        results: json!({
            "s0": s0,
            "w0_quotient_pairs": prod.quotient_count(),
            "w0_terms": terms,
            "unnormalized_order": order,
            "normalized_order": normalized.order,
            "certified_nonvanishing": normalized.nonvanishing,
        }),
        citations: &["intertwining-quotient-table", "residue-point-normalization"],
        exit_code: 0,
    })
}

fn cmd_kato(n: usize) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    let chi = UnramifiedCharacter::residual_family(n);
    let report = kato_report(&chi).map_err(|e| CliError::Usage(e.to_string()))?;
    let trivial = kato_report(&UnramifiedCharacter::trivial(n))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let residual = residual_report(n).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(CommandOutput {
        command: "kato",
        inputs: json!({ "n": n }),
        results: json!({
            "character": chi.to_string(),
            "e_nonzero": report.e_nonzero,
            "e_inverse_nonzero": report.e_inverse_nonzero,
            "stabilizer_order": report.stabilizer_order,
            "reflection_subgroup_order": report.reflection_subgroup_order,
            "regular": report.regular,
            "spherical_cyclic": report.spherical_cyclic,
            "irreducible": report.irreducible,
            "trivial_character_regular": trivial.regular,
            "square_integrable": residual.square_integrable,
            "multiplicity_one": residual.multiplicity_one,
        }),
        citations: &["kato-irreducibility-criterion", "square-integrability-cone"],
        exit_code: 0,
    })
}

fn cmd_satake(n: usize, p: u64, at: &str) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    require_prime(p)?;
    if at != "trivial" {
        return Err(CliError::Usage(format!(
            "unknown evaluation point '{at}' (only 'trivial' is built in)"
        )));
    }
    let f =
        satake_minimal(&DominantWeight::standard(n)).map_err(|e| CliError::Usage(e.to_string()))?;
    let t = trivial_hecke_matrix(n, p).map_err(|e| CliError::Usage(e.to_string()))?;
    let eig = eigenvalue(&f, &t).map_err(|e| CliError::Usage(e.to_string()))?;
    let value = eig
        .eval_at_prime(p)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(CommandOutput {
        command: "satake",
        inputs: json!({ "n": n, "p": p, "at": at }),
        results: json!({
            "transform": f.to_string(),
            "eigenvalue_symbolic": eig.to_string(),
            "eigenvalue": value.to_string(),
        }),
        citations: &[
            "minimal-weight-satake-transform",
            "trivial-representation-hecke-matrix",
        ],
        exit_code: 0,
    })
}

fn cmd_bounds(n: usize, p: u64, tau_exponent: &Rational) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    require_prime(p)?;
    let eps = epsilon_n(n);
    let lrs = bound_exponent_so2n_with(n, BoundMode::Lrs, &eps);
    let ram = bound_exponent_so2n_with(n, BoundMode::Ramanujan, &eps);
    let refined = bound_exponent_so2n_with(n, BoundMode::Refined, &eps);
    let residual_top = residual_hecke_matrix(n, p).max_log_p_magnitude(&rat_int(0));
    let mut results = json!({
        "epsilon": eps.to_string(),
        "tau_exponent": tau_exponent.to_string(),
        "lrs_exponent": lrs.to_string(),
        "ramanujan_exponent": ram.to_string(),
        "refined_exponent": refined.to_string(),
        "residual_top_exponent": residual_top.to_string(),
        "residual_exceeds_refined": residual_top > refined,
    });
    if n == 4 {
        results["so8_bound"] = json!(bound_so8(p, tau_exponent));
    }
    Ok(CommandOutput {
        command: "bounds",
        inputs: json!({ "n": n, "p": p, "tau_exponent": tau_exponent.to_string() }),
        results,
        citations: &[
            "kim-sarnak-exponent",
            "hecke-eigenvalue-bounds",
            "refined-cuspidal-bound",
        ],
        exit_code: 0,
    })
}

fn parse_param_arg(text: &str, n: usize) -> Result<ArthurParameter, CliError> {
    grammar::parse_parameter(text, 2 * n).map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_classify(param: &str, n: usize, remark: bool) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    let psi = parse_param_arg(param, n)?;
    let report = validate(&psi);
    let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
    let mut results = json!({
        "parameter": psi.to_string(),
        "dimension": psi.total_dimension(),
        "target_dimension": psi.target_dim,
        "valid": report.is_valid(),
        "violations": violations,
        "discrete": psi.is_discrete(),
    });
    if report.is_valid() && psi.is_discrete() {
        let verdict = classify(&psi, n, remark).map_err(|e| CliError::Usage(e.to_string()))?;
        results["classification"] = json!(verdict.to_string());
        results["cuspidal_admissible"] =
            json!(matches!(verdict, Classification::CuspidalAdmissible));
    }
    Ok(CommandOutput {
        command: "classify",
        inputs: json!({ "param": param, "n": n, "remark_threshold": remark }),
        results,
        citations: &["parameter-grammar", "singular-parameter-exclusion"],
        exit_code: 0,
    })
}

fn cmd_hecke_matrix(param: &str, n: usize, p: u64) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    require_prime(p)?;
    let psi = parse_param_arg(param, n)?;
    let report = validate(&psi);
    if !report.is_valid() {
        return Ok(CommandOutput {
            command: "hecke-matrix",
            inputs: json!({ "param": param, "n": n, "p": p }),
            results: json!({
                "parameter": psi.to_string(),
                "valid": false,
                "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            }),
            citations: &["parameter-grammar", "satake-parameter-synthesis"],
            exit_code: 0,
        });
    }
    let t = hecke_matrix_of(&psi, p).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(CommandOutput {
        command: "hecke-matrix",
        inputs: json!({ "param": param, "n": n, "p": p }),
        results: json!({
            "parameter": psi.to_string(),
            "valid": true,
            "entries": t.entries().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "full_multiset": t.full_multiset().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        }),
        citations: &["parameter-grammar", "satake-parameter-synthesis"],
        exit_code: 0,
    })
}

fn cmd_norm(n: usize, p: u64, seed: u64, trials: usize) -> Result<CommandOutput, CliError> {
    if n < 2 {
        return Err(CliError::Usage("n must be at least 2".into()));
    }
    require_prime(p)?;
    let mut samples = Vec::new();
    let mut all_round_trips = true;
    for stream in 0..trials as u64 {
        let so = sample_regular_so(n, p, seed, stream);
        let gl = norm(&so);
        let back = inverse_norm(&gl);
        let ok = back == so;
        all_round_trips &= ok;
        samples.push(json!({
            "so": so.to_string(),
            "gl": gl.to_string(),
            "regular": so.is_regular(),
            "strongly_regular": gl.is_strongly_regular(),
            "round_trip": ok,
        }));
    }
    let exit_code = if all_round_trips { 0 } else { 2 };
    Ok(CommandOutput {
        command: "norm",
        inputs: json!({ "n": n, "p": p, "seed": seed, "trials": trials }),
        results: json!({
            "samples": samples,
            "all_round_trips": all_round_trips,
        }),
        citations: &["split-torus-norm"],
        exit_code,
    })
}

fn cmd_char_check(
    n: usize,
    p: u64,
    s: &Rational,
    trials: usize,
    seed: u64,
) -> Result<CommandOutput, CliError> {
    if n < 2 {
        return Err(CliError::Usage("n must be at least 2".into()));
    }
    require_prime(p)?;
    if p == 2 {
        return Err(CliError::Usage(
            "p = 2 is excluded from the character identity".into(),
        ));
    }
    let mut held = 0usize;
    let mut first_failure: Option<u64> = None;
    for stream in 0..trials as u64 {
        let pair = NormPair::from_so(sample_regular_so(n, p, seed, stream));
        let report =
            verify_character_identity(s, &pair).map_err(|e| CliError::Usage(e.to_string()))?;
        if report.holds {
            held += 1;
        } else if first_failure.is_none() {
            first_failure = Some(stream);
        }
    }
    let exit_code = if held == trials { 0 } else { 2 };
    Ok(CommandOutput {
        command: "char-check",
        inputs: json!({
            "n": n, "p": p, "s": s.to_string(), "trials": trials, "seed": seed
        }),
        results: json!({
            "held": held,
            "trials": trials,
            "summary": format!("{held}/{trials} identities hold exactly"),
            "first_failure_stream": first_failure,
        }),
        citations: &["twisted-character-identity", "transfer-factor-delta-iv"],
        exit_code,
    })
}

fn cmd_packet(mu: &str, n: usize) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    let coefficient = match mu {
        "triv" => BlockCoefficient::TrivialChar,
        "eps" => BlockCoefficient::QuadraticChar,
        "unit" => BlockCoefficient::unit_t(),
        other => match other.strip_prefix("abs:") {
            Some(rest) => BlockCoefficient::AbsValPower {
                s: parse_rational(rest).map_err(CliError::Usage)?,
            },
            None => {
                return Err(CliError::Usage(format!(
                    "unknown mu '{other}': expected triv, eps, unit, or abs:<rational>"
                )))
            }
        },
    };
    let psi = ArthurParameter::new(
        vec![
            ArthurBlock::new(coefficient.clone(), n),
            ArthurBlock::new(coefficient.dual(), n),
        ],
        2 * n,
    );
    let descriptor = packet(&psi).map_err(|e| CliError::Usage(e.to_string()))?;
    let global = global_type_count(&psi).ok();
    let mut results = json!({
        "parameter": psi.to_string(),
        "centralizer": match descriptor.centralizer {
            CentralizerType::Torus1 => "rank-1 torus",
            CentralizerType::Sl2 => "SL2",
        },
        "component_group_order": descriptor.component_group_order,
        "s_psi_signs": descriptor.s_psi_signs,
        "members": descriptor.members.iter().map(|m| json!({
            "label": m.label,
            "multiplicity": m.multiplicity,
            "component_character": m.component_character,
        })).collect::<Vec<_>>(),
    });
    if let Some(g) = global {
        results["global_type_count"] = json!(g.type_count);
        results["cuspidal_of_this_type"] = json!(g.cuspidal_count);
        results["local_unramified_members"] = json!(g.local_unramified_members);
    }
    Ok(CommandOutput {
        command: "packet",
        inputs: json!({ "mu": mu, "n": n }),
        results,
        citations: &["packet-centralizer", "component-group-order"],
        exit_code: 0,
    })
}

fn cmd_degeneracy(n: usize, trials: usize, seed: u64) -> Result<CommandOutput, CliError> {
    require_even(n)?;
    let report = degeneracy_theorem_check(n, trials, seed);
    let exit_code = if report.all_degenerate { 0 } else { 2 };
    Ok(CommandOutput {
        command: "degeneracy",
        inputs: json!({ "n": n, "trials": trials, "seed": seed }),
        results: json!({
            "all_degenerate": report.all_degenerate,
            "max_rank_observed": report.max_rank_observed,
            "pfaffian_identically_zero": report.pfaffian_identically_zero,
        }),
        citations: &["siegel-radical-degeneracy", "pfaffian-vanishing"],
        exit_code,
    })
}

fn cmd_selftest(seed: u64) -> Result<CommandOutput, CliError> {
    let mut checks: Vec<(String, bool)> = Vec::new();

    for n in [4usize, 6, 8] {
        let levi = LeviDescriptor::product_gl2(n).unwrap();
        let w0 = w0_all_blocks_minus(&levi).unwrap();
        let prod = build_intertwining_product(&w0, &levi).unwrap();
        let ok = matches!(
            prod.order_at(&s0_point(n)),
            PoleOrder::Known { order, .. } if order == -((n / 2) as i64)
        ) && normalized_order_at_s0(&prod, n)
            .map(|norm| norm.order == 0 && norm.nonvanishing)
            .unwrap_or(false);
        checks.push((format!("pole bookkeeping at rank {n}"), ok));
    }

    let kato = kato_report(&UnramifiedCharacter::residual_family(4)).unwrap();
    checks.push((
        "Kato criterion for the inducing family".into(),
        kato.regular && kato.spherical_cyclic == Some(true),
    ));

    let f = satake_minimal(&DominantWeight::standard(4)).unwrap();
    let t = trivial_hecke_matrix(4, 2).unwrap();
    let ok = eigenvalue(&f, &t)
        .unwrap()
        .eval_at_prime(2)
        .map(|v| v == rat_int(135))
        .unwrap_or(false);
    checks.push(("minimal-weight eigenvalue value at rank 4".into(), ok));

    let degeneracy = degeneracy_theorem_check(4, 200, seed);
    checks.push((
        "degeneracy of forms vanishing on the pinned block".into(),
        degeneracy.all_degenerate && degeneracy.pfaffian_identically_zero == Some(true),
    ));

    let mut levi_ok = true;
    for stream in 0..100u64 {
        let pair = NormPair::from_so(sample_regular_so(2, 3, seed, stream));
        levi_ok &= disc_twisted_levi(&pair.gl).unwrap() == disc_levi_gl(&pair.so).unwrap();
    }
    checks.push(("Levi discriminant relation on 100 samples".into(), levi_ok));

    let s = so2n::algebra::rat(1, 4);
    let mut identity_ok = true;
    for stream in 0..25u64 {
        let pair = NormPair::from_so(sample_regular_so(2, 3, seed, stream));
        identity_ok &= verify_character_identity(&s, &pair).unwrap().holds;
    }
    checks.push(("character identity on 25 samples".into(), identity_ok));

    let psi = section2_local_parameter(4);
    let phi = so2n::algebra::elementary_symmetric(8, 2);
    checks.push((
        "unramified trace identity for e2".into(),
        verify_unramified_trace(&phi, &psi, 3).unwrap().holds,
    ));

    let mut bound_ok = true;
    for n in [4usize, 6, 8, 10] {
        let top = residual_hecke_matrix(n, 2).max_log_p_magnitude(&rat_int(0));
        bound_ok &= top > so2n::hecke::bound_exponent_so2n(n, BoundMode::Refined);
    }
    checks.push(("residual exponent exceeds refined bound".into(), bound_ok));

    let t_pi = hecke_matrix_of(&psi, 3).unwrap();
    let t_out = t_pi.outer_image();
    let conj_ok = !conjugate_under_weyl(&t_pi, &t_out, WeylGroupKind::D).unwrap()
        && conjugate_under_weyl(&t_pi, &t_out, WeylGroupKind::Extended).unwrap();
    checks.push(("outer twist and Weyl conjugacy".into(), conj_ok));

    let all_ok = checks.iter().all(|(_, ok)| *ok);
    let exit_code = if all_ok { 0 } else { 2 };
    Ok(CommandOutput {
        command: "selftest",
        inputs: json!({ "seed": seed }),
        results: json!({
            "checks": checks.iter().map(|(name, ok)| json!({
                "name": name,
                "ok": ok,
            })).collect::<Vec<_>>(),
            "all_ok": all_ok,
        }),
        citations: &["cross-module-property-battery"],
        exit_code,
    })
}

fn render_table(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_table(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", plain(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_table(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", plain(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", plain(value))),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn emit(format: Format, output: &CommandOutput) -> String {
    let document = json!({
        "schema": 1,
        "command": output.command,
        "inputs": output.inputs,
        "results": output.results,
        "citations": output.citations,
    });
    match format {
        Format::Json => serde_json::to_string_pretty(&document).expect("serializable"),
        Format::Table => {
            let mut text = format!("so2n {}\n", output.command);
            text.push_str("inputs:\n");
            render_table(&output.inputs, 1, &mut text);
            text.push_str("results:\n");
            render_table(&output.results, 1, &mut text);
            text.pop();
            text
        }
    }
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let output = match &cli.command {
        Command::Roots { n } => cmd_roots(*n)?,
        Command::Wm { n } => cmd_wm(*n)?,
        Command::Poles { n } => cmd_poles(*n)?,
        Command::Kato { n } => cmd_kato(*n)?,
        Command::Satake { n, p, at } => cmd_satake(*n, *p, at)?,
        Command::Bounds { n, p, tau_exponent } => cmd_bounds(*n, *p, tau_exponent)?,
        Command::Classify {
            param,
            n,
            remark_threshold,
        } => cmd_classify(param, *n, *remark_threshold)?,
        Command::HeckeMatrix { param, n, p } => cmd_hecke_matrix(param, *n, *p)?,
        Command::Norm { n, p, seed, trials } => cmd_norm(*n, *p, *seed, *trials)?,
        Command::CharCheck {
            n,
            p,
            s,
            trials,
            seed,
        } => cmd_char_check(*n, *p, s, *trials, *seed)?,
        Command::Packet { mu, n } => cmd_packet(mu, *n)?,
        Command::Degeneracy { n, trials, seed } => cmd_degeneracy(*n, *trials, *seed)?,
        Command::Selftest { seed } => cmd_selftest(*seed)?,
    };
    Ok((emit(cli.format, &output), output.exit_code))
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            println!("{text}");
            std::process::exit(code);
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}
