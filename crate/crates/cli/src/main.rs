use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;
use serde_json::json;

use supertrop::congr::{self, CongrError, Congruence, Lattice, RadicalValue, DEFAULT_BOUND};
use supertrop::finite::{FiniteError, FiniteNuSemiring};
use supertrop::locus::{self, Box2, LocusError};
use supertrop::parse::{parse_elem, parse_poly, ParseError};
use supertrop::poly::PolyError;
use supertrop::spectra::{SpectraError, Spectrum};
use supertrop::{random, svg, Factor, RatElem, TropPoly};

#[derive(Parser)]
#[command(name = "supertrop", version, about = "Exact supertropical algebra from the command line")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Args)]
struct Out {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Ring {
    /// A generator name (superboolean, str-chain:N, str-trunc:N), `random`,
    /// or a path to a JSON table.
    #[arg(long, default_value = "superboolean")]
    semiring: String,
    /// Seed used when `--semiring random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest carrier size allowed for congruence enumeration.
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
}

#[derive(Args)]
struct CongSpec {
    /// Generating pairs `a=b,c=d`; the congruence is their closure.
    #[arg(long)]
    pairs: Option<String>,
    /// Elements to ghostify, comma separated.
    #[arg(long)]
    ghostify: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RadKind {
    Crad,
    Srad,
    Grad,
    Jac,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a polynomial at a point.
    Eval { poly: String, point: Vec<String>, #[command(flatten)] out: Out },
    /// Canonical representative of the polynomial function.
    Canon { poly: String, #[command(flatten)] out: Out },
    /// Whether two polynomials define the same function.
    Equal { left: String, right: String },
    /// Factor a univariate polynomial.
    Factor { poly: String, #[command(flatten)] out: Out },
    /// A tangible root of a univariate polynomial.
    Root { poly: String },
    /// Ghost locus of a set of bivariate polynomials.
    Zlocus {
        polys: Vec<String>,
        /// Bounding box `xmin,xmax,ymin,ymax`.
        #[arg(long = "box", allow_hyphen_values = true)]
        bbox: Option<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Check the axioms on a table.
    Validate { #[command(flatten)] ring: Ring },
    /// Enumerate and classify congruences.
    Congs { #[command(flatten)] ring: Ring },
    /// The spectrum of nu-prime congruences.
    Spec { #[command(flatten)] ring: Ring },
    /// Radicals of a congruence or of an element set.
    Radical {
        #[command(flatten)]
        ring: Ring,
        #[command(flatten)]
        cong: CongSpec,
        #[arg(long, value_enum, default_value = "crad")]
        kind: RadKind,
        /// Element set for `srad`, comma separated.
        #[arg(long)]
        elems: Option<String>,
    },
    /// Quotient by a q-congruence.
    Quotient { #[command(flatten)] ring: Ring, #[command(flatten)] cong: CongSpec },
    /// Localization at a tangible monoid.
    Localize {
        #[command(flatten)]
        ring: Ring,
        /// Monoid generators, comma separated; the generated monoid is used.
        #[arg(long, default_value = "")]
        monoid: String,
    },
    /// Sections over the basic open set of an element.
    Sections {
        #[command(flatten)]
        ring: Ring,
        #[arg(long)]
        f: String,
    },
    /// The stalk at a spectrum point, by index.
    Stalk {
        #[command(flatten)]
        ring: Ring,
        #[arg(long)]
        point: usize,
    },
    /// Nullstellensatz check, for one congruence or every q-congruence.
    Nullcheck { #[command(flatten)] ring: Ring, #[command(flatten)] cong: CongSpec },
    /// Krull intersection check.
    Krullcheck { #[command(flatten)] ring: Ring },
}

/// Errors sorted by exit status.
enum Failure {
    Parse(String),
    Precondition(String),
    Bound(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Bound(_) => 4,
            Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Precondition(m) | Failure::Bound(m) | Failure::Io(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<FiniteError> for Failure {
    fn from(e: FiniteError) -> Self {
        match e {
            FiniteError::Structure(_) => Failure::Precondition(e.to_string()),
            _ => Failure::Parse(e.to_string()),
        }
    }
}

impl From<CongrError> for Failure {
    fn from(e: CongrError) -> Self {
        match e {
            CongrError::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            CongrError::Finite(f) => f.into(),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<SpectraError> for Failure {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::Congr(c) => c.into(),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<LocusError> for Failure {
    fn from(e: LocusError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn emit(out: Option<&Out>, text: &str) -> Res<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out.and_then(|o| o.output.as_ref()) {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn load_ring(r: &Ring) -> Res<FiniteNuSemiring> {
    let ring = if r.semiring == "random" {
        let mut rng = StdRng::seed_from_u64(r.seed);
        random::table(&mut rng, &random::table_pool())
    } else if r.semiring.ends_with(".json") || fs::metadata(&r.semiring).is_ok() {
        let text = fs::read_to_string(&r.semiring).map_err(|e| Failure::Io(format!("{}: {e}", r.semiring)))?;
        FiniteNuSemiring::parse_json(&text)?
    } else {
        FiniteNuSemiring::generator(&r.semiring)?
    };
    Ok(ring)
}

/// Loads a table and rejects it unless every axiom holds.
fn load_valid(r: &Ring) -> Res<FiniteNuSemiring> {
    let ring = load_ring(r)?;
    let rep = ring.validate();
    match rep.failures.iter().next() {
        None => Ok(ring),
        Some((axiom, why)) => Err(Failure::Precondition(format!("table fails {axiom}: {why}"))),
    }
}

fn names(r: &FiniteNuSemiring, list: &str) -> Res<BTreeSet<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| r.index_of(s).map_err(Failure::from))
        .collect()
}

fn named(r: &FiniteNuSemiring, set: &BTreeSet<usize>) -> Vec<String> {
    set.iter().map(|&a| r.name(a).to_string()).collect()
}

fn load_cong(r: &FiniteNuSemiring, c: &CongSpec) -> Res<Option<Congruence>> {
    let mut pairs = Vec::new();
    if let Some(text) = &c.pairs {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('=')
                .ok_or_else(|| Failure::Parse(format!("expected `a=b`, found `{item}`")))?;
            pairs.push((r.index_of(a.trim())?, r.index_of(b.trim())?));
        }
    }
    if let Some(text) = &c.ghostify {
        for a in names(r, text)? {
            pairs.push((a, r.nu(a)));
        }
    }
    if c.pairs.is_none() && c.ghostify.is_none() {
        return Ok(None);
    }
    Ok(Some(congr::cong_closure(r, &pairs)))
}

fn poly(text: &str) -> Res<TropPoly> {
    Ok(parse_poly(text)?)
}

fn radical_json(r: &FiniteNuSemiring, v: &RadicalValue) -> serde_json::Value {
    match v {
        RadicalValue::Empty => json!({ "empty": true }),
        RadicalValue::Cong(c) => json!({
            "empty": false,
            "classes": c.to_json(r).classes,
            "i_t": named(r, &c.i_t(r)),
            "i_g": named(r, &c.i_g(r)),
        }),
    }
}

fn run(cmd: Cmd) -> Res<()> {
    match cmd {
        Cmd::Eval { poly: p, point, out } => {
            let f = poly(&p)?;
            let x = point.iter().map(|s| parse_elem(s)).collect::<Result<Vec<_>, _>>()?;
            let v = f.p_eval(&x)?;
            let text = match out.format {
                Format::Json => to_json(&json!({ "value": v.to_string(), "ghost": v.in_ghost_ideal() })),
                _ => v.to_string(),
            };
            emit(Some(&out), &text)
        }
        Cmd::Canon { poly: p, out } => {
            let c = poly(&p)?.canonicalize();
            let text = match out.format {
                Format::Json => {
                    let ess: Vec<_> = c
                        .essentiality
                        .iter()
                        .map(|(e, k)| json!({ "exponent": e, "class": k }))
                        .collect();
                    to_json(&json!({ "canonical": c.poly.to_string(), "terms": ess }))
                }
                _ => c.poly.to_string(),
            };
            emit(Some(&out), &text)
        }
        Cmd::Equal { left, right } => {
            let eq = poly(&left)?.func_equal(&poly(&right)?);
            emit(None, if eq { "true" } else { "false" })
        }
        Cmd::Factor { poly: p, out } => {
            let fs = poly(&p)?.factor_univariate()?;
            // drop a unit constant unless it is the whole answer
            let unit = |f: &Factor| matches!(f, Factor::Monomial { coeff, degree: 0 } if *coeff == RatElem::one());
            let mut parts: Vec<String> = fs.iter().filter(|f| !unit(f)).map(|f| f.to_string()).collect();
            if parts.is_empty() {
                parts.push(RatElem::one().to_string());
            }
            let text = match out.format {
                Format::Json => to_json(&json!({ "factors": parts })),
                _ => parts.join(" * "),
            };
            emit(Some(&out), &text)
        }
        Cmd::Root { poly: p } => {
            let r = poly(&p)?.tangible_root()?;
            emit(None, &r.map_or_else(|| "none".to_string(), |q| q.to_string()))
        }
        Cmd::Zlocus { polys, bbox, out } => {
            let e = polys
                .iter()
                .map(|s| supertrop::parse::parse_poly_in(s, 2))
                .collect::<Result<Vec<_>, _>>()?;
            let b = match bbox {
                None => Box2::default_for(&e),
                Some(s) => {
                    let v = s
                        .split(',')
                        .map(|t| parse_elem(t).ok().and_then(|x| x.value().cloned()))
                        .collect::<Option<Vec<_>>>()
                        .filter(|v| v.len() == 4)
                        .ok_or_else(|| Failure::Parse(format!("bad box `{s}`: expected xmin,xmax,ymin,ymax")))?;
                    let mut it = v.into_iter();
                    let mut next = || it.next().unwrap();
                    Box2::new(next(), next(), next(), next())?
                }
            };
            let l = locus::locus2d(&e, &b)?;
            let text = match out.format {
                Format::Svg => svg::render_svg(&l),
                Format::Json => to_json(&l.to_json()),
                Format::Text => to_json(&l.summary()),
            };
            emit(Some(&out), &text)
        }
        Cmd::Validate { ring } => {
            let r = load_ring(&ring)?;
            let rep = r.validate();
            emit(None, &to_json(&rep))?;
            if rep.ok {
                Ok(())
            } else {
                Err(Failure::Precondition("table fails validation".into()))
            }
        }
        Cmd::Congs { ring } => {
            let r = load_valid(&ring)?;
            let lat = Lattice::new(&r, ring.bound)?;
            let items: Vec<_> = lat
                .all
                .iter()
                .zip(&lat.flags)
                .map(|(c, f)| json!({ "classes": c.to_json(&r).classes, "flags": f }))
                .collect();
            emit(None, &to_json(&json!({ "count": items.len(), "congruences": items })))
        }
        Cmd::Spec { ring } => {
            let r = load_valid(&ring)?;
            emit(None, &to_json(&Spectrum::new(&r, ring.bound)?.to_json()))
        }
        Cmd::Radical { ring, cong, kind, elems } => {
            let r = load_valid(&ring)?;
            let lat = Lattice::new(&r, ring.bound)?;
            let theta = load_cong(&r, &cong)?.unwrap_or_else(|| Congruence::diagonal(r.len()));
            let v = match kind {
                RadKind::Crad => lat.crad(&theta),
                RadKind::Jac => lat.jac(&theta),
                RadKind::Grad => lat.grad(),
                RadKind::Srad => lat.srad(&names(&r, elems.as_deref().unwrap_or(""))?),
            };
            emit(None, &to_json(&radical_json(&r, &v)))
        }
        Cmd::Quotient { ring, cong } => {
            let r = load_valid(&ring)?;
            let theta = load_cong(&r, &cong)?.unwrap_or_else(|| Congruence::diagonal(r.len()));
            let (q, proj) = congr::quotient(&r, &theta)?;
            let map: Vec<_> = r.elements().map(|a| json!([r.name(a), q.name(proj[a])])).collect();
            emit(None, &to_json(&json!({ "semiring": q.to_json(), "projection": map })))
        }
        Cmd::Localize { ring, monoid } => {
            let r = load_valid(&ring)?;
            let mut gens = names(&r, &monoid)?;
            gens.insert(r.one());
            let c = r.monoid_generated(&gens);
            let loc = congr::localize(&r, &c)?;
            let map: Vec<_> = r.elements().map(|a| json!([r.name(a), loc.ring.name(loc.canonical[a])])).collect();
            emit(
                None,
                &to_json(&json!({
                    "monoid": named(&r, &loc.monoid),
                    "semiring": loc.ring.to_json(),
                    "canonical": map,
                    "isomorphic_to_source": loc.ring.is_isomorphic(&r),
                })),
            )
        }
        Cmd::Sections { ring, f } => {
            let r = load_valid(&ring)?;
            let s = Spectrum::new(&r, ring.bound)?;
            let f = r.index_of(&f)?;
            let loc = s.sections(f)?;
            emit(
                None,
                &to_json(&json!({
                    "d_f": s.d_set(f),
                    "s_f": named(&r, &s.s_of_f(f)?),
                    "focal_zone": s.focal_zone(f)?,
                    "nu_strict": s.is_nu_strict(f)?,
                    "sections": loc.ring.to_json(),
                    "isomorphic_to_source": loc.ring.is_isomorphic(&r),
                })),
            )
        }
        Cmd::Stalk { ring, point } => {
            let r = load_valid(&ring)?;
            let s = Spectrum::new(&r, ring.bound)?;
            if point >= s.len() {
                return Err(Failure::Precondition(format!("point {point} out of range; the spectrum has {} points", s.len())));
            }
            let rep = s.stalk_report(point, ring.bound)?;
            let loc = s.stalk(point)?;
            emit(
                None,
                &to_json(&json!({
                    "i_t": named(&r, s.i_t(point)),
                    "report": rep,
                    "stalk": loc.ring.to_json(),
                })),
            )
        }
        Cmd::Nullcheck { ring, cong } => {
            let r = load_valid(&ring)?;
            let s = Spectrum::new(&r, ring.bound)?;
            let targets = match load_cong(&r, &cong)? {
                Some(t) => vec![t],
                None => s.lattice.q_congs(),
            };
            let mut reports = Vec::new();
            let mut pass = true;
            for t in &targets {
                let rep = s.nullstellensatz_check(t)?;
                pass &= rep.pass;
                reports.push(json!({ "congruence": t.to_json(&r).classes, "report": rep }));
            }
            emit(None, &to_json(&json!({ "pass": pass, "checks": reports })))?;
            if pass {
                Ok(())
            } else {
                Err(Failure::Precondition("nullstellensatz mismatch".into()))
            }
        }
        Cmd::Krullcheck { ring } => {
            let r = load_valid(&ring)?;
            let rep = Spectrum::new(&r, ring.bound)?.krull_check();
            emit(None, &to_json(&rep))?;
            if rep.pass {
                Ok(())
            } else {
                Err(Failure::Precondition("krull intersection mismatch".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
