use crate::args::*;
use crate::config::{self, PredictSpec};
use crate::summary::*;
use forge_core::chern::{
    chern_coefficients, degree_formula_r3, expected_resolution_general, expected_resolution_theorem5, GenBRSpec,
};
use forge_core::construct::{self, br_run, verify_construction, ConstructionSpec};
use forge_core::io::{parse_ideal, parse_matrix, write_ideal};
use forge_core::liaison::{generalized_br_run, gorenstein_link};
use forge_core::{BettiTable, GorensteinCertificate, GradedMatrix, HilbertReport, Ideal, Resolution, Rng};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub enum CliError {
    /// Bad flags, unreadable or malformed input: exit 1.
    Usage(String),
    Core(forge_core::Error),
}

impl From<forge_core::Error> for CliError {
    fn from(e: forge_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_mathematical() => 2,
            _ => 1,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// What a subcommand produced.
pub struct Report {
    pub text: String,
    pub summary: Summary,
    /// `//` lines for `--protocol`.
    pub protocol: Vec<String>,
    /// Extra files for `--out-dir`.
    pub files: Vec<(PathBuf, String)>,
}

impl Report {
    fn new(text: String, summary: Summary) -> Self {
        Report {
            text,
            summary,
            protocol: Vec::new(),
            files: Vec::new(),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<Ideal> {
    parse_ideal(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<GradedMatrix> {
    parse_matrix(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn seeded(command: &str, seed: u64) -> String {
    format!("# forge {command} seed {seed}\n")
}

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Br(a) => br(a),
        Command::Section(a) => section(a),
        Command::Top(a) => top(a),
        Command::Hilb(a) => hilb(a),
        Command::Res(a) => res(a),
        Command::Minors(a) => minors(a),
        Command::Pfaffians(a) => pfaffians(a),
        Command::Predict(a) => predict(a),
        Command::Link(a) => link(a),
        Command::Genbr(a) => genbr(a),
    }
}

fn verification(ix: &Ideal, spec: &ConstructionSpec) -> Result<Verification> {
    let rep = verify_construction(ix, &spec.twist_spec()?)?;
    Ok(Verification {
        expected_degree: rep.expected_degree.to_string(),
        degree_matches: rep.degree_matches,
        certificate: rep.certificate,
        betti: rep.betti,
        expected_shape: rep.expected_shape,
        shape_equal: rep.shape_equal,
        ghost_pairs: rep.ghost_pairs,
        regularity: rep.regularity,
        arithmetic_genus: ix.hilbert_report().arithmetic_genus(),
    })
}

fn br(a: &BrArgs) -> Result<Report> {
    let matrix = a.matrix.as_deref().map(load_matrix).transpose()?;
    let spec = match &matrix {
        Some(m) => {
            if m.cols() <= m.rows() {
                return Err(CliError::Usage(format!("{}x{} matrix has no positive corank", m.rows(), m.cols())));
            }
            let e = (m.col_twists()[0] - m.row_twists()[0]).max(1) as u32;
            ConstructionSpec::new(m.rows(), m.cols() - m.rows(), e, a.section_degree, m.ring().n())?
                .with_characteristic(m.ring().characteristic() as u64)?
        }
        None => ConstructionSpec::new(
            a.t.unwrap(),
            a.r.unwrap(),
            a.entry_degree.unwrap(),
            a.section_degree,
            a.n.unwrap(),
        )?
        .with_characteristic(a.characteristic)?,
    }
    .with_seed(a.seed);
    let run = br_run(&spec, matrix.as_ref())?;
    let verification = if a.verify {
        Some(verification(&run.top, &run.spec)?)
    } else {
        None
    };
    let mut text = seeded("br", a.seed);
    if let Some(v) = &verification {
        let _ = writeln!(text, "# degree {} (expected {}), {}", run.top.degree(), v.expected_degree, v.betti);
        let _ = writeln!(text, "# predicted {}, equal: {}", v.expected_shape, v.shape_equal);
    }
    text.push_str(&write_ideal(&run.top));
    let summary = Summary::Br {
        seed: a.seed,
        t: run.spec.t,
        r: run.spec.r,
        entry_degree: run.spec.entry_degree,
        section_degree: run.spec.section_degree,
        minors_codimension: run.minors_codimension,
        section_shift: run.section.degree,
        zero_scheme: IdealSummary::of(&run.section.zero_ideal),
        top: IdealSummary::of(&run.top),
        protocol: run.protocol.clone(),
        verification,
    };
    let mut report = Report::new(text, summary);
    if a.protocol {
        report.protocol = run.protocol;
        report.protocol.push("// The vanishing locus Z(j) of the section:".into());
        for (k, g) in run.section.zero_ideal.generators().iter().enumerate() {
            report.protocol.push(format!("// j[{}]={g}", k + 1));
        }
        report.protocol.push("// Its top-dimensional part Z(i):".into());
        for (k, g) in run.top.generators().iter().enumerate() {
            report.protocol.push(format!("// i[{}]={g}", k + 1));
        }
    }
    Ok(report)
}

fn section(a: &SectionArgs) -> Result<Report> {
    let m = load_matrix(&a.matrix)?;
    let s = construct::section(&m, a.deg, &mut Rng::new(a.seed))?;
    let mut text = seeded("section", a.seed);
    let _ = writeln!(text, "# degree {}, regular: {}", s.degree, s.regular);
    text.push_str(&write_ideal(&s.zero_ideal));
    let summary = Summary::Section {
        seed: a.seed,
        degree: s.degree,
        regular: s.regular,
        section: s.section.components.iter().map(|p| p.to_string()).collect(),
        zero_scheme: IdealSummary::of(&s.zero_ideal),
    };
    Ok(Report::new(text, summary))
}

fn top(a: &TopArgs) -> Result<Report> {
    let i = load_ideal(&a.ideal)?;
    let top = i.top_dimensional_part(a.codim, &mut Rng::new(a.seed))?;
    let text = seeded("top", a.seed) + &write_ideal(&top);
    let summary = Summary::Top {
        seed: a.seed,
        codimension: a.codim,
        top: IdealSummary::of(&top),
    };
    Ok(Report::new(text, summary))
}

/// The two numerators, then codimension, dimension and degree, as `//`
/// comment lines.
pub fn hilb_layout(h: &HilbertReport) -> String {
    let mut s = String::new();
    for series in [&h.first_series, &h.second_series] {
        for (k, &c) in series.iter().enumerate() {
            if c != 0 {
                let _ = writeln!(s, "// {c:>9} t^{k}");
            }
        }
        s.push('\n');
    }
    let _ = writeln!(s, "// codimension = {}", h.projective_codimension);
    let _ = writeln!(s, "// dimension   = {}", h.affine_dimension);
    let _ = writeln!(s, "// degree      = {}", h.degree);
    s
}

fn hilb(a: &IdealArg) -> Result<Report> {
    let i = load_ideal(&a.ideal)?;
    let report = i.hilbert_report().clone();
    Ok(Report::new(hilb_layout(&report), Summary::Hilb { report }))
}

fn res(a: &ResArgs) -> Result<Report> {
    let i = load_ideal(&a.ideal)?;
    let r = Resolution::of_ideal(&i, a.minimal)?;
    let betti = r.betti();
    let mut text = format!("# {betti}\n");
    text.push_str(&betti.to_rows());
    text.push_str(&r.dump());
    let (regularity, certificate) = if r.is_minimal() {
        (Some(r.regularity()?), Some(GorensteinCertificate::from_resolution(&i, &r)))
    } else {
        (None, None)
    };
    let summary = Summary::Res {
        minimal: r.is_minimal(),
        betti,
        regularity,
        certificate,
    };
    Ok(Report::new(text, summary))
}

fn minors(a: &MinorsArgs) -> Result<Report> {
    let m = load_matrix(&a.matrix)?;
    let i = construct::minors_ideal(&m, a.t)?;
    // expected codimension of t-minors of a g x f matrix
    let expected = (a.t <= m.rows().min(m.cols()))
        .then(|| ((m.rows() - a.t + 1) * (m.cols() - a.t + 1)) as i64);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "# codimension {} (expected {})",
        i.codimension(),
        expected.map_or("-".into(), |e| e.to_string())
    );
    text.push_str(&write_ideal(&i));
    let summary = Summary::Minors {
        t: a.t,
        expected_codimension: expected,
        ideal: IdealSummary::of(&i),
    };
    Ok(Report::new(text, summary))
}

fn pfaffians(a: &MatrixArg) -> Result<Report> {
    let m = load_matrix(&a.matrix)?;
    let i = construct::pfaffians(&m)?;
    let certificate = forge_core::gorenstein_certificate(&i)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "# degree {}, codimension {}, Gorenstein: {}",
        i.degree(),
        i.codimension(),
        certificate.is_gorenstein
    );
    text.push_str(&write_ideal(&i));
    let summary = Summary::Pfaffians {
        ideal: IdealSummary::of(&i),
        certificate,
    };
    Ok(Report::new(text, summary))
}

fn shape_block(title: &str, table: &BettiTable) -> String {
    let mut s = format!("{title}: {table}\n# step twist rank\n");
    s.push_str(&table.to_rows());
    s
}

fn generalized_summary(spec: &GenBRSpec) -> GenBRSummary {
    GenBRSummary {
        e1: spec.e1.clone(),
        e2: spec.e2.clone(),
        ds: spec.ds,
        l: spec.l,
        d: spec.d,
        n: spec.n,
        alpha: spec.alpha(),
        b: spec.b(),
        generator_degrees: spec.generator_degrees(),
        expected_shape: expected_resolution_theorem5(spec),
        verified_range: spec.is_verified_range(),
    }
}

fn predict(a: &PredictArgs) -> Result<Report> {
    let spec = config::parse(&read(&a.spec)?).map_err(|e| CliError::Usage(format!("{}: {e}", a.spec.display())))?;
    match spec {
        PredictSpec::Twist(t) => {
            let c = chern_coefficients(&t);
            let formula = if t.r() == 3 && t.q() == 1 {
                Some(degree_formula_r3(&t.a, &t.b)?)
            } else {
                None
            };
            let shape = expected_resolution_general(&t);
            let mut text = String::new();
            let _ = writeln!(text, "c1 = {}", c.c1);
            let cs: Vec<String> = c.c.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(text, "c = {}", cs.join(" "));
            let _ = writeln!(text, "degree = {}", c.expected_degree);
            if let Some(f) = &formula {
                let _ = writeln!(text, "degree formula = {f}");
            }
            text.push_str(&shape_block("shape", &shape));
            let chern = ChernSummary {
                c: c.c.iter().map(|x| x.to_string()).collect(),
                c1: c.c1.to_string(),
                expected_degree: c.expected_degree.to_string(),
                degree_formula: formula.map(|f| f.to_string()),
                expected_shape: shape,
            };
            Ok(Report::new(
                text,
                Summary::Predict {
                    chern: Some(chern),
                    generalized: None,
                },
            ))
        }
        PredictSpec::Generalized(g) => {
            let s = generalized_summary(&g);
            let mut text = String::new();
            let _ = writeln!(text, "alpha = {}", s.alpha);
            let _ = writeln!(text, "b = {}", s.b);
            let degs: Vec<String> = s.generator_degrees.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(text, "generator degrees = {}", degs.join(" "));
            if !s.verified_range {
                text.push_str("# the shape is established on P^3 only\n");
            }
            text.push_str(&shape_block("shape", &s.expected_shape));
            Ok(Report::new(
                text,
                Summary::Predict {
                    chern: None,
                    generalized: Some(s),
                },
            ))
        }
    }
}

fn ideal_block(title: &str, i: &Ideal) -> String {
    format!("# {title}\n{}", write_ideal(i))
}

fn link(a: &LinkArgs) -> Result<Report> {
    let phi = load_matrix(&a.phi)?;
    let iv = load_ideal(&a.ideal)?;
    let rec = gorenstein_link(&phi, &iv, a.deg, &mut Rng::new(a.seed))?;
    let zs = &rec.section.zero_scheme;
    let mut text = seeded("link", a.seed);
    let _ = writeln!(text, "# section degree {}", rec.degree);
    text.push_str(&ideal_block("Z(s), saturated", zs));
    text.push_str(&ideal_block(
        &format!("X, Gorenstein: {}, {}", rec.certificate.is_gorenstein, rec.ix_betti),
        &rec.ix,
    ));
    text.push_str(&ideal_block("W = X : V", &rec.iw));
    let summary = Summary::Link {
        seed: a.seed,
        section_degree: rec.degree,
        zero_scheme: IdealSummary::of(zs),
        ix: IdealSummary::of(&rec.ix),
        certificate: rec.certificate.clone(),
        ix_betti: rec.ix_betti.clone(),
        iw: IdealSummary::of(&rec.iw),
    };
    let mut report = Report::new(text, summary);
    if let Some(dir) = &a.out_dir {
        report.files = vec![
            (dir.join("zs.id"), write_ideal(zs)),
            (dir.join("ix.id"), write_ideal(&rec.ix)),
            (dir.join("iw.id"), write_ideal(&rec.iw)),
        ];
    }
    Ok(report)
}

fn genbr(a: &GenbrArgs) -> Result<Report> {
    let ds: [i64; 3] = a
        .ci
        .clone()
        .try_into()
        .map_err(|_| CliError::Usage("--ci needs three degrees".into()))?;
    let ig = load_ideal(&a.gorenstein)?;
    let run = generalized_br_run(&ig, ds, a.l, a.d, &mut Rng::new(a.seed))?;
    let spec = generalized_summary(&run.spec);
    let mut text = seeded("genbr", a.seed);
    let _ = writeln!(text, "# I_G {}", run.ig_betti);
    let _ = writeln!(text, "# I_V {}", run.iv_betti);
    let _ = writeln!(text, "# Z(s) {}", run.betti);
    let _ = writeln!(text, "# predicted {}", run.expected_shape);
    match &run.ghost_pairs {
        Some(p) => {
            let pairs: Vec<String> = p
                .iter()
                .map(|g| format!("{}R(-{}) at steps {},{}", g.count, g.degree, g.step, g.step + 1))
                .collect();
            let _ = writeln!(text, "# ghost pairs: {}", if pairs.is_empty() { "none".into() } else { pairs.join(", ") });
        }
        None => text.push_str("# computed table does not embed into the predicted shape\n"),
    }
    if !run.verified_range {
        text.push_str("# the shape is established on P^3 only\n");
    }
    text.push_str(&ideal_block("V", &run.iv));
    text.push_str(&ideal_block("Z(s), saturated", &run.zero_scheme));
    let summary = Summary::Genbr {
        seed: a.seed,
        spec,
        ig_betti: run.ig_betti.clone(),
        ci: run.ci.generators().iter().map(|g| g.to_string()).collect(),
        iv: IdealSummary::of(&run.iv),
        iv_betti: run.iv_betti.clone(),
        zero_scheme: IdealSummary::of(&run.zero_scheme),
        betti: run.betti.clone(),
        ghost_pairs: run.ghost_pairs.clone(),
    };
    let mut report = Report::new(text, summary);
    if let Some(dir) = &a.out_dir {
        report.files = vec![
            (dir.join("iv.id"), write_ideal(&run.iv)),
            (dir.join("zs.id"), write_ideal(&run.zero_scheme)),
        ];
    }
    Ok(report)
}
