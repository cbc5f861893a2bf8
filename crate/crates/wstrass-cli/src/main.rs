//! `wstrass`: Weierstrass-point data for superelliptic curves and plane
//! quartics, one subcommand per library operation.
//!
//! Exit codes: 0 on success, 1 on domain errors (violated preconditions),
//! 2 on usage or expression parse errors. All rationals are printed as
//! exact `p/q` strings in both output formats; floats never appear.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wstrass::bounds::{
    fixed_point_bound, hurwitz_bound, min_positive_r, riemann_hurwitz_genus, RamificationProfile,
    SearchLimits,
};
use wstrass::curve::{Generator, Place, RootDescriptor, SuperellipticCurve};
use wstrass::error::Error;
use wstrass::expr::{parse_ternary, parse_univariate};
use wstrass::ff::{FunctionField, DEFAULT_PRECISION_CAP};
use wstrass::qdiff::{
    branch_gap_sequence, dimension_dq, enumerate_basis, enumerate_gap_sequences,
    infinite_gap_data, total_weight,
};
use wstrass::quartic::{hessian, inflection_profile, is_smooth, tangent_line_test, PlaneQuartic};
use wstrass::rational::{parse_rat, rat_string, Rat};

#[derive(Parser)]
#[command(name = "wstrass", version, about = "Weierstrass-point computations, exactly")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Genus and basic data of the curve y^n = f(x).
    Genus {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        f: String,
    },
    /// The exponent set of the holomorphic q-differential basis.
    Basis {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        f: String,
        #[arg(long)]
        q: u32,
    },
    /// q-gap sequence and weight at the affine branch points.
    Branch {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        f: String,
        #[arg(long)]
        q: u32,
    },
    /// Semigroup gap sequence and weight at the infinite place (gcd(n,d)=1).
    Infinity {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        f: String,
    },
    /// Principal divisor of a generator: y, dx, dy-form, or x-c:VALUE.
    Divisor {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        f: String,
        #[arg(long)]
        gen: String,
    },
    /// q-Weierstrass weight of the rational point (x0, y0).
    PointWeight {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        f: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// All candidate gap sequences of genus g.
    Gapseqs {
        #[arg(long)]
        g: u32,
    },
    /// Total q-Weierstrass weight of a genus-g curve.
    TotalWeight {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        q: u32,
    },
    /// Plane-quartic inflection computations.
    Quartic {
        #[command(subcommand)]
        command: QuarticCmd,
    },
    /// Ramification and automorphism bounds.
    Bounds {
        #[command(subcommand)]
        command: BoundsCmd,
    },
}

#[derive(Subcommand)]
enum QuarticCmd {
    /// Inflection-point counts by weight.
    Inflections {
        #[arg(long = "F")]
        f: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tangent-line contact test at a rational point "a,b,c".
    TangentTest {
        #[arg(long = "F")]
        f: String,
        #[arg(long)]
        point: String,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Source genus from the Riemann-Hurwitz formula.
    Rh {
        #[arg(long)]
        deg: u64,
        #[arg(long)]
        gy: u64,
        /// Ramification multiplicities, comma-separated.
        #[arg(long, default_value = "")]
        ram: String,
    },
    /// The 84(g-1) automorphism bound.
    Hurwitz {
        #[arg(long)]
        g: u64,
    },
    /// Minimal positive branching quantity R over signatures.
    MinR {
        #[arg(long, default_value_t = SearchLimits::default().max_order)]
        max_order: u64,
        #[arg(long, default_value_t = SearchLimits::default().max_branch_values)]
        max_s: usize,
        #[arg(long, default_value_t = SearchLimits::default().max_target_genus)]
        max_gy: u64,
    },
    /// Fixed-point count bound for an automorphism.
    Fix {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        nonhyperelliptic: bool,
    },
}

/// One command's output: a JSON body plus plain-text lines.
struct Report {
    command: &'static str,
    inputs: Value,
    result: Value,
    text: String,
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Text => println!("{}", report.text.trim_end()),
                Format::Json => {
                    let out = json!({
                        "command": report.command,
                        "inputs": report.inputs,
                        "result": report.result,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).expect("valid json"));
                }
            }
            std::process::exit(0);
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. } => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn run(cmd: &Cmd) -> Result<Report, Error> {
    match cmd {
        Cmd::Genus { n, f } => genus_cmd(*n, f),
        Cmd::Basis { n, f, q } => basis_cmd(*n, f, *q),
        Cmd::Branch { n, f, q } => branch_cmd(*n, f, *q),
        Cmd::Infinity { n, f } => infinity_cmd(*n, f),
        Cmd::Divisor { n, f, gen } => divisor_cmd(*n, f, gen),
        Cmd::PointWeight { n, f, q, x, y } => point_weight_cmd(*n, f, *q, x, y),
        Cmd::Gapseqs { g } => gapseqs_cmd(*g),
        Cmd::TotalWeight { g, q } => total_weight_cmd(*g, *q),
        Cmd::Quartic { command } => match command {
            QuarticCmd::Inflections { f, seed } => inflections_cmd(f, *seed),
            QuarticCmd::TangentTest { f, point } => tangent_cmd(f, point),
        },
        Cmd::Bounds { command } => match command {
            BoundsCmd::Rh { deg, gy, ram } => rh_cmd(*deg, *gy, ram),
            BoundsCmd::Hurwitz { g } => hurwitz_cmd(*g),
            BoundsCmd::MinR { max_order, max_s, max_gy } => minr_cmd(*max_order, *max_s, *max_gy),
            BoundsCmd::Fix { g, order, nonhyperelliptic } => fix_cmd(*g, *order, *nonhyperelliptic),
        },
    }
}

fn curve_from(n: u32, f_src: &str) -> Result<SuperellipticCurve, Error> {
    let f = parse_univariate(f_src, "x")?;
    SuperellipticCurve::new(n, f)
}

fn curve_inputs(curve: &SuperellipticCurve, f_src: &str) -> Value {
    json!({
        "n": curve.cover_degree(),
        "f": f_src,
        "d": curve.f_degree(),
        "gcd_nd": curve.num_infinite_places(),
    })
}

fn genus_cmd(n: u32, f_src: &str) -> Result<Report, Error> {
    let curve = curve_from(n, f_src)?;
    let text = format!(
        "curve y^{} = {}\n  d = {}, gcd(n, d) = {}\n  genus = {}",
        curve.cover_degree(),
        curve.f(),
        curve.f_degree(),
        curve.num_infinite_places(),
        curve.genus()
    );
    Ok(Report {
        command: "genus",
        inputs: curve_inputs(&curve, f_src),
        result: json!({ "genus": curve.genus() }),
        text,
    })
}

fn basis_cmd(n: u32, f_src: &str, q: u32) -> Result<Report, Error> {
    let curve = curve_from(n, f_src)?;
    let basis = enumerate_basis(&curve, q)?;
    let dq = dimension_dq(curve.genus(), q)?;
    let pairs: Vec<Value> = basis
        .iter()
        .map(|p| json!({ "a": p.a, "b": p.b, "order": p.branch_order(curve.cover_degree()) }))
        .collect();
    let mut text = format!("d_q = {dq}\nexponent pairs (a, b), sorted by branch order a*n + b:\n");
    for p in &basis {
        text.push_str(&format!(
            "  ({}, {})  order {}\n",
            p.a,
            p.b,
            p.branch_order(curve.cover_degree())
        ));
    }
    let mut inputs = curve_inputs(&curve, f_src);
    inputs["q"] = json!(q);
    Ok(Report {
        command: "basis",
        inputs,
        result: json!({ "d_q": dq, "pairs": pairs }),
        text,
    })
}

fn branch_cmd(n: u32, f_src: &str, q: u32) -> Result<Report, Error> {
    let curve = curve_from(n, f_src)?;
    let gs = branch_gap_sequence(&curve, q)?;
    let mut inputs = curve_inputs(&curve, f_src);
    inputs["q"] = json!(q);
    Ok(Report {
        command: "branch",
        inputs,
        result: json!({ "gaps": gs.gaps(), "weight": gs.weight() }),
        text: format!(
            "every affine branch point has\n  {q}-gap sequence {:?}\n  weight {}",
            gs.gaps(),
            gs.weight()
        ),
    })
}

fn infinity_cmd(n: u32, f_src: &str) -> Result<Report, Error> {
    let curve = curve_from(n, f_src)?;
    let gs = infinite_gap_data(&curve)?;
    Ok(Report {
        command: "infinity",
        inputs: curve_inputs(&curve, f_src),
        result: json!({ "gaps": gs.gaps(), "weight": gs.weight() }),
        text: format!(
            "the totally ramified infinite place has\n  gap sequence {:?}\n  weight {}",
            gs.gaps(),
            gs.weight()
        ),
    })
}

fn place_json(place: &Place) -> Value {
    match place {
        Place::AffineBranch(RootDescriptor::Rational(r)) => {
            json!({ "kind": "affine-branch", "root": rat_string(r) })
        }
        Place::AffineBranch(RootDescriptor::Algebraic { factor, index }) => {
            json!({ "kind": "affine-branch", "factor": factor.to_string(), "root_index": index })
        }
        Place::Infinite { index } => json!({ "kind": "infinite", "index": index }),
        Place::AffineFiber { c, index } => {
            json!({ "kind": "fiber", "x": rat_string(c), "index": index })
        }
    }
}

fn divisor_cmd(n: u32, f_src: &str, gen: &str) -> Result<Report, Error> {
    let curve = curve_from(n, f_src)?;
    let generator = match gen {
        "y" => Generator::Y,
        "dx" => Generator::Dx,
        "dy-form" => Generator::DxOverYPow,
        other => match other.strip_prefix("x-c:") {
            Some(v) => Generator::XMinusC(parse_rat(v)?),
            None => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!(
                        "unknown generator {other:?}; expected y, dx, dy-form, or x-c:VALUE"
                    ),
                })
            }
        },
    };
    let div = curve.principal_divisor(&generator)?;
    let entries: Vec<Value> = div
        .iter()
        .map(|(place, coeff)| json!({ "place": place_json(place), "coefficient": coeff }))
        .collect();
    let mut text = format!("divisor of {gen}:\n");
    for (place, coeff) in div.iter() {
        text.push_str(&format!("  {coeff:>4}  at {place}\n"));
    }
    text.push_str(&format!("degree = {}", div.degree()));
    let mut inputs = curve_inputs(&curve, f_src);
    inputs["gen"] = json!(gen);
    Ok(Report {
        command: "divisor",
        inputs,
        result: json!({ "entries": entries, "degree": div.degree() }),
        text,
    })
}

fn precision_cap_from_env() -> Result<usize, Error> {
    match std::env::var("WSTRASS_PRECISION_CAP") {
        Err(_) => Ok(DEFAULT_PRECISION_CAP),
        Ok(v) => v.parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("WSTRASS_PRECISION_CAP must be a positive integer, got {v:?}"),
        }),
    }
}

fn point_weight_cmd(n: u32, f_src: &str, q: u32, x: &str, y: &str) -> Result<Report, Error> {
    let curve = curve_from(n, f_src)?;
    let x0 = parse_rat(x)?;
    let y0 = parse_rat(y)?;
    let cap = precision_cap_from_env()?;
    let ff = FunctionField::new(&curve);
    let weight = ff.point_weight_with_cap(q, &x0, &y0, cap)?;
    let mut inputs = curve_inputs(&curve, f_src);
    inputs["q"] = json!(q);
    inputs["x0"] = json!(rat_string(&x0));
    inputs["y0"] = json!(rat_string(&y0));
    Ok(Report {
        command: "point-weight",
        inputs,
        result: json!({ "weight": weight }),
        text: format!(
            "{q}-Weierstrass weight of ({}, {}) = {weight}",
            rat_string(&x0),
            rat_string(&y0)
        ),
    })
}

fn gapseqs_cmd(g: u32) -> Result<Report, Error> {
    let seqs = enumerate_gap_sequences(g)?;
    let list: Vec<Value> = seqs
        .iter()
        .map(|s| json!({ "gaps": s.gaps(), "weight": s.weight() }))
        .collect();
    let mut text = format!("{} candidate gap sequences for genus {g}:\n", seqs.len());
    for s in &seqs {
        text.push_str(&format!("  {:?}  (weight {})\n", s.gaps(), s.weight()));
    }
    Ok(Report {
        command: "gapseqs",
        inputs: json!({ "g": g }),
        result: json!({ "count": seqs.len(), "sequences": list }),
        text,
    })
}

fn total_weight_cmd(g: u32, q: u32) -> Result<Report, Error> {
    let w = total_weight(g, q)?;
    Ok(Report {
        command: "total-weight",
        inputs: json!({ "g": g, "q": q }),
        result: json!({ "total_weight": w }),
        text: format!("total {q}-Weierstrass weight on a genus-{g} curve = {w}"),
    })
}

fn quartic_from(src: &str) -> Result<PlaneQuartic, Error> {
    PlaneQuartic::new(parse_ternary(src, ["x", "y", "z"])?)
}

fn inflections_cmd(f_src: &str, seed: u64) -> Result<Report, Error> {
    let q = quartic_from(f_src)?;
    let profile = inflection_profile(&q, seed)?;
    let weights: Vec<Value> = profile
        .weight_multiset()
        .iter()
        .map(|(w, c)| json!({ "weight": w, "count": c }))
        .collect();
    Ok(Report {
        command: "quartic inflections",
        inputs: json!({ "F": f_src, "seed": seed, "hessian_degree": hessian(&q).degree() }),
        result: json!({
            "distinct_points": profile.distinct_count,
            "weights": weights,
            "total_weight": profile.total,
            "shear_used": profile.shear_used,
        }),
        text: format!(
            "inflection points: {} distinct ({} of weight 1, {} of weight 2), total weight {}",
            profile.distinct_count, profile.flexes, profile.hyperflexes, profile.total
        ),
    })
}

fn parse_point(src: &str) -> Result<[Rat; 3], Error> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("point must be three comma-separated rationals, got {src:?}"),
        });
    }
    Ok([parse_rat(parts[0])?, parse_rat(parts[1])?, parse_rat(parts[2])?])
}

fn tangent_cmd(f_src: &str, point: &str) -> Result<Report, Error> {
    let q = quartic_from(f_src)?;
    let p = parse_point(point)?;
    let w = tangent_line_test(&q, &p)?;
    let kind = match w {
        0 => "ordinary point",
        1 => "flex (weight 1)",
        _ => "hyperflex (weight 2)",
    };
    Ok(Report {
        command: "quartic tangent-test",
        inputs: json!({
            "F": f_src,
            "point": [rat_string(&p[0]), rat_string(&p[1]), rat_string(&p[2])],
            "smooth_curve": is_smooth(&q),
        }),
        result: json!({ "weight": w }),
        text: format!("tangent contact order {} => {kind}", w + 2),
    })
}

fn parse_ram(src: &str) -> Result<Vec<u64>, Error> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    src.split(',')
        .map(|s| {
            s.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("ramification multiplicities must be integers, got {s:?}"),
            })
        })
        .collect()
}

fn rh_cmd(deg: u64, gy: u64, ram: &str) -> Result<Report, Error> {
    let mults = parse_ram(ram)?;
    let profile = RamificationProfile::new(deg, gy, mults.clone())?;
    let g = riemann_hurwitz_genus(&profile)?;
    Ok(Report {
        command: "bounds rh",
        inputs: json!({ "deg": deg, "gy": gy, "ram": mults }),
        result: json!({ "genus": g }),
        text: format!("source genus = {g}"),
    })
}

fn hurwitz_cmd(g: u64) -> Result<Report, Error> {
    let bound = hurwitz_bound(g)?;
    Ok(Report {
        command: "bounds hurwitz",
        inputs: json!({ "g": g }),
        result: json!({ "bound": bound }),
        text: format!("at most {bound} automorphisms in genus {g}"),
    })
}

fn minr_cmd(max_order: u64, max_s: usize, max_gy: u64) -> Result<Report, Error> {
    let sig = min_positive_r(max_order, max_s, max_gy)?;
    Ok(Report {
        command: "bounds min-r",
        inputs: json!({ "max_order": max_order, "max_s": max_s, "max_gy": max_gy }),
        result: json!({
            "target_genus": sig.target_genus,
            "orders": sig.orders,
            "R": rat_string(&sig.r),
        }),
        text: format!(
            "minimal R = {} at target genus {} with orders {:?}",
            rat_string(&sig.r),
            sig.target_genus,
            sig.orders
        ),
    })
}

fn fix_cmd(g: u64, order: u64, nonhyperelliptic: bool) -> Result<Report, Error> {
    let bound = fixed_point_bound(g, order, nonhyperelliptic)?;
    Ok(Report {
        command: "bounds fix",
        inputs: json!({ "g": g, "order": order, "nonhyperelliptic": nonhyperelliptic }),
        result: json!({ "bound": bound }),
        text: format!("an order-{order} automorphism fixes at most {bound} points"),
    })
}
