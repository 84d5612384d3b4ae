//! Commands behind the `galois-lcd` binary. Each command takes a parsed code
//! and returns a [`Outcome`]: a serializable report, its plain-text
//! rendering, and optionally a code document to write out.

use std::fmt::Write as _;

use galois_lcd::codefile::{CodeFile, FieldCodeFile, FieldSpec};
use galois_lcd::construct::{self, ConstructOptions, LcdMode};
use galois_lcd::oracle::{self, EnumBudget};
use galois_lcd::rcode::RCodeParams;
use galois_lcd::{Error, Fe, RCode, Ring};
use serde::Serialize;

/// Schema version of every JSON report.
pub const REPORT_VERSION: u32 = 1;

/// Exit status for an oracle disagreement found by `verify`.
pub const EXIT_DISAGREEMENT: i32 = 3;

/// A command's result: report, rendering and optional output document.
pub struct Outcome {
    pub report: serde_json::Value,
    pub text: String,
    pub document: Option<String>,
    pub exit_code: i32,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

fn outcome<T: Serialize>(command: &str, body: T, text: String, document: Option<String>) -> Outcome {
    let report = serde_json::to_value(Envelope {
        version: REPORT_VERSION,
        command,
        body,
    })
    .expect("reports serialize");
    Outcome {
        report,
        text,
        document,
        exit_code: 0,
    }
}

fn fmt_d(d: Option<usize>) -> String {
    d.map_or_else(|| "?".to_string(), |d| d.to_string())
}

fn params_line(p: &RCodeParams) -> String {
    let comps = p
        .components
        .iter()
        .map(|c| format!("[{}, {}, {}]", c.n, c.k, fmt_d(c.d)))
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "[n, k, d_L] = [{}, {}, {}]; components {comps}",
        p.n,
        p.k,
        fmt_d(p.d_lee)
    )
}

fn check_ls(code: &RCode, ls: &[u32]) -> Result<Vec<u32>, Error> {
    let e = code.field().e();
    if ls.is_empty() {
        return Ok((0..e).collect());
    }
    for &l in ls {
        if l >= e {
            return Err(Error::BadL { l, e });
        }
    }
    Ok(ls.to_vec())
}

#[derive(Serialize)]
struct LReport {
    l: u32,
    lcd: bool,
    hull_dims: [usize; 4],
    gram_dets: [u32; 4],
    self_orthogonal: bool,
}

#[derive(Serialize)]
struct AnalyzeReport {
    field: FieldSpec,
    params: RCodeParams,
    by_l: Vec<LReport>,
    self_dual: bool,
    mds: Option<bool>,
    singleton_bound: f64,
}

/// Parameters, LCD and hull data per `l`, self-orthogonality, self-duality
/// and the MDS verdict. An empty `ls` means every `l` in `0..e`.
pub fn analyze(code: &RCode, ls: &[u32], max_enum: u64) -> Result<Outcome, Error> {
    let ls = check_ls(code, ls)?;
    let params = code.params(max_enum);
    let mut by_l = Vec::new();
    for l in ls {
        let lcd = code.is_lcd(l)?;
        by_l.push(LReport {
            l,
            lcd: lcd.lcd,
            hull_dims: code.hull_dims(l)?,
            gram_dets: lcd.components.map(|c| c.det.value()),
            self_orthogonal: code.is_self_orthogonal(l)?,
        });
    }
    let bound = code.singleton_bound();
    let mds = params.d_lee.map(|d| 4 * d + params.k == 4 * params.n + 4);
    let mut text = String::new();
    writeln!(text, "code over GF({}) of length {}", code.field().q(), code.n()).unwrap();
    writeln!(text, "{}", params_line(&params)).unwrap();
    for r in &by_l {
        writeln!(
            text,
            "l = {}: LCD {}, hull dims {:?}, gram dets {:?}, self-orthogonal {}",
            r.l, r.lcd, r.hull_dims, r.gram_dets, r.self_orthogonal
        )
        .unwrap();
    }
    let self_dual = code.is_self_dual();
    writeln!(text, "self-dual: {self_dual}").unwrap();
    writeln!(
        text,
        "MDS: {} (Singleton bound n - k/4 + 1 = {bound})",
        mds.map_or_else(|| "unknown".to_string(), |m| m.to_string())
    )
    .unwrap();
    let body = AnalyzeReport {
        field: FieldSpec::of(code.field()),
        params,
        by_l,
        self_dual,
        mds,
        singleton_bound: bound,
    };
    Ok(outcome("analyze", body, text, None))
}

#[derive(Serialize)]
struct ComponentCert {
    t: i64,
    removed: Vec<usize>,
    minor_det: u32,
    perm: Vec<usize>,
    scaling: Vec<u32>,
    gram_det: u32,
}

#[derive(Serialize)]
struct ConstructReport {
    mode: &'static str,
    l: u32,
    beta: Option<u64>,
    seed: Option<u64>,
    alpha_gamma: Vec<[u32; 4]>,
    alpha_u: Vec<[u32; 4]>,
    components: Vec<ComponentCert>,
    input: RCodeParams,
    output: RCodeParams,
    lcd: bool,
    code: CodeFile,
}

fn values(v: &[Fe]) -> Vec<u32> {
    v.iter().map(|x| x.value()).collect()
}

/// Scales `code` into an equivalent LCD code and reports the certificate.
pub fn construct_lcd(code: &RCode, mode: LcdMode, opts: &ConstructOptions, max_enum: u64) -> Result<Outcome, Error> {
    let out = construct::ring_lcd_equivalent(code, mode, opts)?;
    let ring = Ring::new(code.field());
    let cert = &out.certificate;
    let components: Vec<ComponentCert> = cert
        .components
        .iter()
        .map(|c| ComponentCert {
            t: c.minor.t,
            removed: c.minor.removed.clone(),
            minor_det: c.minor.det.value(),
            perm: c.perm.clone(),
            scaling: values(&c.scaling),
            gram_det: c.gram_det.value(),
        })
        .collect();
    let alpha_gamma: Vec<[u32; 4]> = out.alpha.iter().map(|a| a.0.map(Fe::value)).collect();
    let alpha_u: Vec<[u32; 4]> = out.alpha.iter().map(|&a| ring.to_u_basis(a).map(Fe::value)).collect();
    let input = code.params(max_enum);
    let output = out.code.params(max_enum);
    let lcd = out.code.is_lcd(mode.l())?.lcd;
    let mode_name = match mode {
        LcdMode::Euclidean => "euclid",
        LcdMode::Galois(_) => "galois",
    };

    let mut text = String::new();
    match mode {
        LcdMode::Euclidean => writeln!(text, "Euclidean LCD construction").unwrap(),
        LcdMode::Galois(l) => writeln!(
            text,
            "{l}-Galois LCD construction (beta = {})",
            cert.beta.expect("Galois mode has beta")
        )
        .unwrap(),
    }
    for (i, c) in components.iter().enumerate() {
        writeln!(
            text,
            "component {}: t = {}, deleted {:?}, minor det {}, scaling {:?}, gram det {}",
            i + 1,
            c.t,
            c.removed,
            c.minor_det,
            c.scaling,
            c.gram_det
        )
        .unwrap();
    }
    writeln!(text, "alpha (gamma basis): {alpha_gamma:?}").unwrap();
    writeln!(text, "alpha (u basis):     {alpha_u:?}").unwrap();
    writeln!(text, "input  {}", params_line(&input)).unwrap();
    writeln!(text, "output {}", params_line(&output)).unwrap();
    writeln!(text, "LCD: {lcd}").unwrap();

    let document = galois_lcd::codefile::emit_code_file(&out.code);
    let body = ConstructReport {
        mode: mode_name,
        l: mode.l(),
        beta: cert.beta,
        seed: opts.seed,
        alpha_gamma,
        alpha_u,
        components,
        input,
        output,
        lcd,
        code: CodeFile::from_code(&out.code),
    };
    Ok(outcome("construct-lcd", body, text, Some(document)))
}

#[derive(Serialize)]
struct DualReport {
    l: u32,
    n: usize,
    k: usize,
    dual_k: usize,
    code: CodeFile,
}

/// The l-Galois dual as a code document.
pub fn dual(code: &RCode, l: u32) -> Result<Outcome, Error> {
    let d = code.galois_dual(l)?;
    let text = format!(
        "{l}-Galois dual: length {}, k = {} (input k = {})\n",
        d.n(),
        d.k(),
        code.k()
    );
    let body = DualReport {
        l,
        n: d.n(),
        k: code.k(),
        dual_k: d.k(),
        code: CodeFile::from_code(&d),
    };
    Ok(outcome(
        "dual",
        body,
        text,
        Some(galois_lcd::codefile::emit_code_file(&d)),
    ))
}

#[derive(Serialize)]
struct GrayReport {
    n: usize,
    k: usize,
    code: FieldCodeFile,
}

/// The Gray image as a field-code document.
pub fn gray(code: &RCode) -> Result<Outcome, Error> {
    let g = code.gray();
    let text = format!("Gray image: [{}, {}] code over GF({})\n", g.n(), g.k(), g.field().q());
    let body = GrayReport {
        n: g.n(),
        k: g.k(),
        code: FieldCodeFile::from_code(&g),
    };
    Ok(outcome(
        "gray",
        body,
        text,
        Some(galois_lcd::codefile::emit_field_code_file(&g)),
    ))
}

#[derive(Serialize)]
struct MindistReport {
    max_enum: u64,
    params: RCodeParams,
}

/// Component and Lee distances; fails when a component exceeds `max_enum`.
pub fn mindist(code: &RCode, max_enum: u64) -> Result<Outcome, Error> {
    for c in code.components().iter().filter(|c| c.k() > 0) {
        c.min_dist(max_enum)?;
    }
    let params = code.params(max_enum);
    let text = format!("{}\n", params_line(&params));
    Ok(outcome("mindist", MindistReport { max_enum, params }, text, None))
}

#[derive(Serialize)]
struct Check {
    name: String,
    fast: String,
    oracle: String,
    agree: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    max_enum: u64,
    checks: Vec<Check>,
    skipped: Vec<String>,
    all_agree: bool,
}

struct Suite {
    checks: Vec<Check>,
    skipped: Vec<String>,
}

impl Suite {
    fn record<T: PartialEq + std::fmt::Debug>(
        &mut self,
        name: String,
        fast: T,
        oracle: Result<T, Error>,
    ) -> Result<(), Error> {
        match oracle {
            Ok(o) => {
                self.checks.push(Check {
                    name,
                    agree: fast == o,
                    fast: format!("{fast:?}"),
                    oracle: format!("{o:?}"),
                });
                Ok(())
            }
            Err(Error::CapExceeded { needed, cap }) => {
                self.skipped.push(format!("{name}: needs {needed} words, budget {cap}"));
                Ok(())
            }
            Err(e) => Err(e),
        }
    }
}

/// Runs every fast-path predicate against its brute-force oracle.
pub fn verify(code: &RCode, max_enum: u64) -> Result<Outcome, Error> {
    let budget = EnumBudget::new(max_enum);
    let mut s = Suite {
        checks: Vec::new(),
        skipped: Vec::new(),
    };
    for l in 0..code.field().e() {
        let dual = code.galois_dual(l)?;
        s.record(
            format!("l={l} dual pairs to zero, |C||D| = q^4n"),
            true,
            oracle::bf_ring_dual_check(code, &dual, l, budget),
        )?;
        let hulls = code.hull_dims(l)?;
        for (i, c) in code.components().iter().enumerate() {
            s.record(
                format!("l={l} component {} dual", i + 1),
                true,
                oracle::bf_dual_check(c, dual.component(i), l, budget),
            )?;
            s.record(
                format!("l={l} component {} hull dimension", i + 1),
                hulls[i],
                oracle::bf_hull(c, l, budget),
            )?;
        }
        let lcd = code.is_lcd(l)?.lcd;
        s.record(
            format!("l={l} hull dimension over R"),
            hulls.iter().sum::<usize>(),
            oracle::bf_ring_hull(code, l, budget),
        )?;
        s.record(
            format!("l={l} LCD iff trivial hull"),
            lcd,
            oracle::bf_ring_hull(code, l, budget).map(|h| h == 0),
        )?;
        let g = code.gray();
        s.record(
            format!("l={l} LCD transfers to Gray image"),
            lcd,
            g.is_lcd(l).map(|c| c.lcd),
        )?;
        let gray_dual = dual.gray();
        s.record(
            format!("l={l} Gray image of dual is dual of Gray image"),
            true,
            g.galois_dual(l).map(|d| d == gray_dual),
        )?;
    }
    for (i, c) in code.components().iter().enumerate().filter(|(_, c)| c.k() > 0) {
        let fast = match c.min_dist(max_enum) {
            Ok(d) => d,
            Err(Error::CapExceeded { needed, cap }) => {
                s.skipped.push(format!(
                    "component {} distance: needs {needed} words, budget {cap}",
                    i + 1
                ));
                continue;
            }
            Err(e) => return Err(e),
        };
        s.record(
            format!("component {} minimum distance", i + 1),
            fast,
            oracle::bf_min_dist(c, budget),
        )?;
    }
    if code.k() > 0 {
        if let Some(d) = code.params(max_enum).d_lee {
            s.record("Lee distance".to_string(), d, oracle::bf_lee_distance(code, budget))?;
        }
    }
    s.record(
        "Gray image of every codeword".to_string(),
        true,
        oracle::gray_consistent(code, budget),
    )?;

    let all_agree = s.checks.iter().all(|c| c.agree);
    let mut text = String::new();
    for c in &s.checks {
        let mark = if c.agree { "ok  " } else { "FAIL" };
        writeln!(text, "{mark} {} (fast {}, oracle {})", c.name, c.fast, c.oracle).unwrap();
    }
    for sk in &s.skipped {
        writeln!(text, "skip {sk}").unwrap();
    }
    writeln!(
        text,
        "{} checks, {} skipped: {}",
        s.checks.len(),
        s.skipped.len(),
        if all_agree { "all agree" } else { "DISAGREEMENT" }
    )
    .unwrap();
    let body = VerifyReport {
        max_enum,
        checks: s.checks,
        skipped: s.skipped,
        all_agree,
    };
    let mut out = outcome("verify", body, text, None);
    if !all_agree {
        out.exit_code = EXIT_DISAGREEMENT;
    }
    Ok(out)
}
