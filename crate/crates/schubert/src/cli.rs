//! Command-line front end. Every subcommand prints one JSON document on stdout.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cohomology::{
    dual_class_gsp, dual_class_ostar, dual_class_unitary, restrict_levi, restrict_to_lagrangian,
    restrict_to_orthogonal, CohomClass, LeviShape,
};
use crate::error::{Error, ParseError};
use crate::lr::{self, LRKey, SymmetricInscription};
use crate::partition::{Partition, Rectangle};
use crate::shimura::{self, ChernWitness, CompatiblePair, Flavor, HolomorphicParam, Side};
use crate::skewshape::{parse_factors, parse_rectangles, SkewShape};

#[derive(Parser, Debug)]
#[command(
    name = "schubert",
    version,
    about = "Schubert calculus and compatible partition pairs"
)]
struct Cli {
    /// Also draw the relevant Young diagram on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Operations on a single partition.
    Partition(PartitionArgs),
    /// Skew shapes.
    #[command(subcommand)]
    Skew(SkewCmd),
    /// Littlewood-Richardson coefficients and inscriptions.
    #[command(subcommand)]
    Lr(LrCmd),
    /// Cohomology of Grassmannians.
    #[command(subcommand)]
    Cohom(CohomCmd),
    /// Compatible pairs and restriction criteria.
    #[command(subcommand)]
    Shimura(ShimuraCmd),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PartitionOp {
    Conj,
    Comp,
    Plus,
    Bar,
    Minus,
    Check,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    op: PartitionOp,
    #[arg(long, allow_hyphen_values = true)]
    partition: Partition,
    /// Ambient `AxB`, required by `comp`.
    #[arg(long = "box")]
    rect: Option<Rectangle>,
}

#[derive(Subcommand, Debug)]
enum SkewCmd {
    /// Rectangle decomposition of `outer/inner`.
    Decompose {
        #[arg(long)]
        outer: Partition,
        #[arg(long, default_value = "")]
        inner: Partition,
    },
}

#[derive(Subcommand, Debug)]
enum LrCmd {
    /// `c^outer_{inner,nu}`.
    Coeff {
        #[arg(long)]
        outer: Partition,
        #[arg(long)]
        inner: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Multiplicity of `target` in a product of Schur functions.
    Multi {
        #[arg(long)]
        target: Partition,
        /// Factors joined by `*`; each a partition or `AxB`.
        #[arg(long, default_value = "")]
        factors: String,
    },
    /// Whether `nu` inscribes in `outer/inner`.
    Inscribes {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        outer: Partition,
        #[arg(long, default_value = "")]
        inner: Partition,
        #[arg(long, conflicts_with = "antisymmetric")]
        symmetric: bool,
        #[arg(long)]
        antisymmetric: bool,
    },
}

#[derive(Args, Debug)]
struct TwoClasses {
    #[arg(long = "box")]
    rect: Rectangle,
    /// A class document in JSON or a bare partition.
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RestrictTarget {
    Levi,
    Lagrangian,
    Orthogonal,
}

#[derive(Subcommand, Debug)]
enum CohomCmd {
    Product(TwoClasses),
    Pair(TwoClasses),
    Restrict {
        #[arg(long = "box")]
        rect: Rectangle,
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value = "levi")]
        to: RestrictTarget,
        /// Rectangles such as `1x1,1x2`.
        #[arg(long, default_value = "")]
        levi: String,
    },
    DualClass {
        #[arg(long = "box")]
        rect: Option<Rectangle>,
        #[arg(long)]
        levi: Option<String>,
        #[arg(long)]
        gsp: Option<usize>,
        #[arg(long)]
        ostar: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct Ambient {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: Option<usize>,
}

impl Ambient {
    fn rect(&self) -> Result<Rectangle, Error> {
        Rectangle::new(self.p, self.q.unwrap_or(self.p))
    }
}

#[derive(Args, Debug)]
struct PairArgs {
    #[command(flatten)]
    ambient: Ambient,
    #[arg(long, default_value = "")]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long, default_value = "unitary")]
    flavor: Flavor,
}

impl PairArgs {
    fn pair(&self) -> Result<CompatiblePair, Error> {
        CompatiblePair::new(
            self.lambda.clone(),
            self.mu.clone(),
            self.ambient.rect()?,
            self.flavor,
        )
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InjectType {
    Unitary,
    Gsp,
    HolomorphicU,
    HolomorphicGsp,
}

#[derive(Subcommand, Debug)]
enum ShimuraCmd {
    Pairs {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long, default_value = "unitary")]
        flavor: Flavor,
        /// `i,j`
        #[arg(long)]
        bidegree: Option<String>,
    },
    Bidegree(PairArgs),
    ChernAction {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        nu: Partition,
    },
    Inject {
        #[arg(long = "type", value_enum)]
        kind: InjectType,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        mu: Option<Partition>,
        /// Levi rectangles such as `2x1` or `1x1,1x1`.
        #[arg(long, default_value = "")]
        factors: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Row counts `p_i` for `holomorphic-gsp`.
        #[arg(long, default_value = "")]
        rows: String,
    },
    KunnethVanish {
        #[command(flatten)]
        pair: PairArgs,
        /// `AxB:LAMBDA:MU` entries separated by `;`.
        #[arg(long)]
        factor_pairs: String,
    },
    Vanish {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        a: usize,
        #[arg(long, default_value = "Q")]
        side: Side,
    },
    Structure(PairArgs),
    Arthur {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        max_degree: usize,
    },
    Partha {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        l: usize,
    },
    OstarHolo {
        #[arg(long)]
        p: usize,
    },
}

enum Failure {
    Parse(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.0)
    }
}

type Outcome = std::result::Result<Value, Failure>;

/// Runs one invocation; returns `(exit code, stdout, stderr)`.
pub fn run<I, S>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (2, String::new(), text)
            } else {
                (0, text, String::new())
            };
        }
    };
    let mut diagram = String::new();
    match dispatch(&cli.cmd, &mut diagram) {
        Ok(v) => {
            let err = if cli.pretty { diagram } else { String::new() };
            (0, format!("{v}\n"), err)
        }
        Err(Failure::Parse(m)) => (2, String::new(), format!("error: {m}\n")),
        Err(Failure::Domain(e)) => (
            1,
            format!("{}\n", json!({"error": e.code()})),
            format!("error: {e}\n"),
        ),
    }
}

/// Rows of `[ ]`, with blanks for the cells of `inner`.
pub fn render(outer: &Partition, inner: &Partition) -> String {
    let mut s = String::new();
    for i in 0..outer.len() {
        let row = format!(
            "{}{}",
            "   ".repeat(inner.get(i)),
            "[ ]".repeat(outer.get(i) - inner.get(i))
        );
        s.push_str(row.trim_end());
        s.push('\n');
    }
    s
}

fn parse_class(text: &str, rect: Rectangle) -> std::result::Result<CohomClass, Failure> {
    if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(text).map_err(|e| Failure::Parse(e.to_string()))?;
        Ok(CohomClass::from_json(&v)?)
    } else {
        let nu: Partition = text.parse()?;
        Ok(CohomClass::schubert(nu, rect)?)
    }
}

fn parse_bidegree(s: &str) -> std::result::Result<(usize, usize), Failure> {
    let bad = || Failure::Parse(format!("bidegree must be i,j, got {s:?}"));
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        i.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_counts(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Parse(format!("bad count {t:?}")))
        })
        .collect()
}

fn parse_factor_pairs(s: &str) -> std::result::Result<Vec<CompatiblePair>, Failure> {
    let mut out = Vec::new();
    for entry in s.split(';').filter(|e| !e.trim().is_empty()) {
        let fields: Vec<&str> = entry.split(':').collect();
        if fields.len() != 3 {
            return Err(Failure::Parse(format!(
                "factor pair must be AxB:LAMBDA:MU, got {entry:?}"
            )));
        }
        let rect: Rectangle = fields[0].trim().parse()?;
        let lambda: Partition = fields[1].parse()?;
        let mu: Partition = fields[2].parse()?;
        out.push(CompatiblePair::unitary(lambda, mu, rect)?);
    }
    Ok(out)
}

fn pair_json(pair: &CompatiblePair) -> Value {
    let (i, j) = shimura::vz_bidegree(pair);
    json!({
        "lambda": pair.lambda().to_string(),
        "mu": pair.mu().to_string(),
        "chain": pair.chain().to_string(),
        "bidegree": [i, j],
    })
}

fn symmetric_witness_json(w: &SymmetricInscription) -> Value {
    json!({
        "nu0": w.center.to_string(),
        "gamma": w.flanks.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "transposed_target": w.transposed_target,
        "transposed_center": w.transposed_center,
    })
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> std::result::Result<T, Failure> {
    v.clone()
        .ok_or_else(|| Failure::Parse(format!("--{flag} is required")))
}

fn dispatch(cmd: &Cmd, diagram: &mut String) -> Outcome {
    match cmd {
        Cmd::Partition(a) => {
            let lam = &a.partition;
            let out = match a.op {
                PartitionOp::Conj => lam.conjugate(),
                PartitionOp::Comp => {
                    let rect = a
                        .rect
                        .ok_or_else(|| Failure::Parse("--box is required".into()))?;
                    lam.complement(rect)?
                }
                PartitionOp::Plus => lam.plus_part()?,
                PartitionOp::Bar => lam.bar_closure()?,
                PartitionOp::Minus => lam.minus_part()?,
                PartitionOp::Check => lam.check_reduction()?,
            };
            *diagram = render(&out, &Partition::empty());
            Ok(json!({"partition": out.to_string()}))
        }
        Cmd::Skew(SkewCmd::Decompose { outer, inner }) => {
            let s = SkewShape::new(outer.clone(), inner.clone())?;
            *diagram = render(outer, inner);
            let blocks = s.rectangle_decomposition();
            Ok(json!({
                "skew": s.to_string(),
                "compatible": blocks.is_some(),
                "blocks": blocks.map(|c| c.blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>()),
            }))
        }
        Cmd::Lr(c) => lr_cmd(c, diagram),
        Cmd::Cohom(c) => cohom_cmd(c),
        Cmd::Shimura(c) => shimura_cmd(c, diagram),
    }
}

fn lr_cmd(cmd: &LrCmd, diagram: &mut String) -> Outcome {
    match cmd {
        LrCmd::Coeff { outer, inner, nu } => {
            let k = lr::lr_coefficient(&LRKey::new(outer.clone(), inner.clone(), nu.clone()));
            Ok(json!({"coefficient": k}))
        }
        LrCmd::Multi { target, factors } => {
            let fs = parse_factors(factors)?;
            let k = lr::multi_lr(target, &fs);
            Ok(json!({"coefficient": crate::cohomology::biguint_json(&k)}))
        }
        LrCmd::Inscribes {
            nu,
            outer,
            inner,
            symmetric,
            antisymmetric,
        } => {
            let s = SkewShape::new(outer.clone(), inner.clone())?;
            *diagram = render(outer, inner);
            if *symmetric || *antisymmetric {
                let w = if *symmetric {
                    lr::inscribes_symmetric(nu, &s)?
                } else {
                    lr::inscribes_antisymmetric(nu, &s)?
                };
                Ok(match w {
                    Some(w) => json!({"inscribes": true, "witness": symmetric_witness_json(&w)}),
                    None => json!({"inscribes": false}),
                })
            } else {
                Ok(match lr::inscription_witness(nu, &s) {
                    Some(m) => json!({"inscribes": true, "witness": {"mu_prime": m.to_string()}}),
                    None => json!({"inscribes": false}),
                })
            }
        }
    }
}

fn cohom_cmd(cmd: &CohomCmd) -> Outcome {
    match cmd {
        CohomCmd::Product(a) => {
            let x = parse_class(&a.x, a.rect)?;
            let y = parse_class(&a.y, a.rect)?;
            Ok(json!({"class": x.cup(&y)?.to_json()}))
        }
        CohomCmd::Pair(a) => {
            let x = parse_class(&a.x, a.rect)?;
            let y = parse_class(&a.y, a.rect)?;
            let k: BigInt = x.poincare_pair(&y)?;
            Ok(json!({"pairing": crate::cohomology::bigint_json(&k)}))
        }
        CohomCmd::Restrict {
            rect,
            class,
            to,
            levi,
        } => {
            let x = parse_class(class, *rect)?;
            Ok(match to {
                RestrictTarget::Levi => {
                    let l = LeviShape::unitary(parse_rectangles(levi)?);
                    json!({"class": restrict_levi(&x, &l)?.to_json()})
                }
                RestrictTarget::Lagrangian => {
                    json!({"class": restrict_to_lagrangian(&x)?.to_json()})
                }
                RestrictTarget::Orthogonal => {
                    json!({"class": restrict_to_orthogonal(&x)?.to_json()})
                }
            })
        }
        CohomCmd::DualClass {
            rect,
            levi,
            gsp,
            ostar,
        } => {
            let class = match (levi, gsp, ostar) {
                (Some(l), None, None) => {
                    let rect = need(rect, "box")?;
                    dual_class_unitary(&LeviShape::unitary(parse_rectangles(l)?), rect)?
                }
                (None, Some(p), None) => dual_class_gsp(*p)?,
                (None, None, Some(p)) => dual_class_ostar(*p)?,
                _ => {
                    return Err(Failure::Parse(
                        "give exactly one of --levi, --gsp, --ostar".into(),
                    ))
                }
            };
            Ok(json!({"class": class.to_json()}))
        }
    }
}

fn shimura_cmd(cmd: &ShimuraCmd, diagram: &mut String) -> Outcome {
    match cmd {
        ShimuraCmd::Pairs {
            ambient,
            flavor,
            bidegree,
        } => {
            let b = bidegree.as_deref().map(parse_bidegree).transpose()?;
            let pairs = shimura::enumerate_pairs(ambient.rect()?, *flavor, b);
            Ok(json!({"pairs": pairs.iter().map(pair_json).collect::<Vec<_>>()}))
        }
        ShimuraCmd::Bidegree(a) => {
            let pair = a.pair()?;
            *diagram = render(pair.mu(), pair.lambda());
            let (i, j) = shimura::vz_bidegree(&pair);
            Ok(json!({"bidegree": [i, j]}))
        }
        ShimuraCmd::ChernAction { pair, nu } => {
            let pair = pair.pair()?;
            *diagram = render(pair.mu(), pair.lambda());
            Ok(match shimura::chern_action(nu, &pair)? {
                Some(ChernWitness::Plain(m)) => {
                    json!({"nonzero": true, "witness": {"mu_prime": m.to_string()}})
                }
                Some(ChernWitness::Symmetric(w)) => {
                    json!({"nonzero": true, "witness": symmetric_witness_json(&w)})
                }
                None => json!({"nonzero": false}),
            })
        }
        ShimuraCmd::Inject {
            kind,
            p,
            q,
            lambda,
            mu,
            factors,
            r,
            s,
            rows,
        } => {
            let rect = Rectangle::new(*p, q.unwrap_or(*p))?;
            match kind {
                InjectType::Unitary | InjectType::Gsp => {
                    let lam = lambda.clone().unwrap_or_default();
                    let pair = CompatiblePair::unitary(lam, need(mu, "mu")?, rect)?;
                    *diagram = render(pair.mu(), pair.lambda());
                    if let InjectType::Gsp = kind {
                        let inj = shimura::injectivity_gsp(&pair)?;
                        let stair = Partition::staircase(rect.rows - 1);
                        return Ok(
                            match inj
                                .then(|| lr::inscription_witness(&stair, &pair.skew()))
                                .flatten()
                            {
                                Some(m) => {
                                    json!({"injective": true, "witness": {"nu": stair.to_string(), "mu_prime": m.to_string()}})
                                }
                                None => json!({"injective": false}),
                            },
                        );
                    }
                    let levi = LeviShape::unitary(parse_rectangles(factors)?);
                    Ok(match shimura::injectivity_unitary(&pair, &levi)? {
                        Some(nu) => json!({"injective": true, "witness": {"nu": nu.to_string()}}),
                        None => json!({"injective": false}),
                    })
                }
                InjectType::HolomorphicU => {
                    let param = HolomorphicParam {
                        r: need(r, "r")?,
                        s: need(s, "s")?,
                    };
                    let hook = param.fat_hook(rect)?;
                    let levi = LeviShape::unitary(parse_rectangles(factors)?);
                    let inj = shimura::injectivity_holomorphic_u(param, &levi, rect);
                    Ok(json!({"injective": inj, "lambda": hook.to_string()}))
                }
                InjectType::HolomorphicGsp => {
                    let h = shimura::gsp_holomorphic(need(r, "r")?, *p, &parse_counts(rows)?)?;
                    Ok(
                        json!({"injective": h.injective, "constant_class": h.constant_class, "degree": h.degree}),
                    )
                }
            }
        }
        ShimuraCmd::KunnethVanish { pair, factor_pairs } => {
            let pair = pair.pair()?;
            let fs = parse_factor_pairs(factor_pairs)?;
            Ok(json!({"vanishes": shimura::kunneth_vanishing(&pair, &fs)?}))
        }
        ShimuraCmd::Vanish { pair, a, side } => {
            let pair = pair.pair()?;
            Ok(json!({"vanishes": shimura::vanishing_criterion(&pair, *a, *side)?}))
        }
        ShimuraCmd::Structure(a) => {
            let pair = a.pair()?;
            *diagram = render(pair.mu(), pair.lambda());
            Ok(json!({"structure": shimura::low_degree_structure(&pair).to_string()}))
        }
        ShimuraCmd::Arthur {
            ambient,
            max_degree,
        } => {
            let cover = shimura::arthur_cover(ambient.rect()?, *max_degree)?;
            let items: Vec<Value> = cover
                .iter()
                .map(|(pair, s)| {
                    let mut v = pair_json(pair);
                    v["suggestion"] = json!(s.to_string());
                    v
                })
                .collect();
            Ok(json!({"cover": items}))
        }
        ShimuraCmd::Partha { ambient, l } => {
            let set = shimura::partha_decomposition(ambient.rect()?, *l);
            Ok(json!({"vanishes": set.is_empty(), "index_set": set}))
        }
        ShimuraCmd::OstarHolo { p } => {
            let comps = shimura::ostar_holomorphic_components(*p)?;
            let items: Vec<Value> = comps
                .iter()
                .map(|c| {
                    json!({
                        "family": c.family.to_string(),
                        "param": c.param,
                        "degree": c.degree,
                        "lambda": c.lambda.to_string(),
                        "mu": c.mu.to_string(),
                        "same_as": {"family": c.same_as.0.to_string(), "param": c.same_as.1},
                    })
                })
                .collect();
            Ok(json!({"components": items}))
        }
    }
}
