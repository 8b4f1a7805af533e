//! Command implementations. Each returns an [`Outcome`] instead of printing,
//! so the binary and the tests share one code path.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use cornermosaic_core::linkid::is_unknot_free;
use cornermosaic_core::polyomino::{compliant, grow_enumerate};
use cornermosaic_core::transform::{convert, extreme_lines_only_caps, find_caps, verify_bound};
use cornermosaic_core::{
    classify, fingerprint, trace, FillRules, GrowthSeed, LinkClass, Mosaic, MosaicSystem, OccupancyMask, Polyomino,
    SearchReport,
};

use crate::formats::{builtin_masks, load_masks, load_mosaic, serialize_mosaic, LoadError};
use crate::render;
use crate::search::{default_threads, parallel_classification};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, stderr: impl Into<String>) -> Self {
        Outcome { code, stdout, stderr: stderr.into() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome::fail(EXIT_USAGE, String::new(), msg)
    }
}

impl From<LoadError> for Outcome {
    fn from(e: LoadError) -> Self {
        Outcome::usage(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "cornermosaic", version, about = "Edge and corner knot mosaics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that every strand endpoint is matched.
    Validate { file: PathBuf },
    /// Convert an edge mosaic into a corner mosaic with fewer tiles.
    Convert {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// List a maximum set of disjoint caps of an edge mosaic.
    Caps { file: PathBuf },
    /// Name the link a mosaic represents.
    Identify { file: PathBuf },
    /// Grow corner-connected shapes containing an L-triomino.
    Enumerate {
        #[arg(long)]
        cells: usize,
        /// Keep only shapes no forbidden subarray matches.
        #[arg(long)]
        compliant: bool,
        /// Directory of `.mask` files (defaults to the bundled set).
        #[arg(long)]
        masks: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RulesArg::Strict)]
        rules: RulesArg,
        #[arg(long, value_enum, default_value_t = SeedArg::LTriomino)]
        seed: SeedArg,
    },
    /// Fill every compliant shape and classify the unknot-free links found.
    Search {
        #[arg(long = "max-cells")]
        max_cells: usize,
        #[arg(long, value_enum, default_value_t = RulesArg::Strict)]
        rules: RulesArg,
        #[arg(long)]
        masks: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SeedArg::LTriomino)]
        seed: SeedArg,
        /// Worker threads (defaults to the available parallelism).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Draw a mosaic.
    Render {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RulesArg {
    Strict,
    Mandatory,
}

impl RulesArg {
    pub fn rules(self) -> FillRules {
        match self {
            RulesArg::Strict => FillRules::strict(),
            RulesArg::Mandatory => FillRules::mandatory(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeedArg {
    LTriomino,
    Exhaustive,
}

impl SeedArg {
    pub fn seed(self) -> GrowthSeed {
        match self {
            SeedArg::LTriomino => GrowthSeed::LTriomino,
            SeedArg::Exhaustive => GrowthSeed::Exhaustive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Ascii,
    Svg,
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Convert { file, output } => cmd_convert(&file, &output),
        Command::Caps { file } => cmd_caps(&file),
        Command::Identify { file } => cmd_identify(&file),
        Command::Enumerate { cells, compliant, masks, rules, seed } => {
            cmd_enumerate(cells, compliant, masks.as_deref(), rules.rules(), seed.seed())
        }
        Command::Search { max_cells, rules, masks, seed, threads } => cmd_search(
            max_cells,
            rules.rules(),
            masks.as_deref(),
            seed.seed(),
            threads.unwrap_or_else(default_threads),
        ),
        Command::Render { file, format, output } => cmd_render(&file, format, output.as_deref()),
    }
}

fn invalid(m: &Mosaic) -> Option<Outcome> {
    let report = m.validate();
    if report.valid {
        return None;
    }
    let mut out = format!("invalid: {} violation(s)\n", report.violations.len());
    for (loc, reason) in &report.violations {
        let _ = writeln!(out, "  {loc}: {reason}");
    }
    Some(Outcome::fail(EXIT_FAILURE, out, "mosaic is not suitably connected"))
}

fn require_edge(m: &Mosaic, command: &str) -> Option<Outcome> {
    (m.system() != MosaicSystem::Edge).then(|| Outcome::usage(format!("{command} takes an edge mosaic")))
}

pub fn cmd_validate(path: &Path) -> Outcome {
    let m = match load_mosaic(path) {
        Ok(m) => m,
        Err(e) => return e.into(),
    };
    invalid(&m).unwrap_or_else(|| Outcome::ok(format!("valid {} mosaic, {} nonempty tiles\n", m.system(), m.nonempty_count())))
}

pub fn cmd_convert(path: &Path, output: &Path) -> Outcome {
    let m = match load_mosaic(path) {
        Ok(m) => m,
        Err(e) => return e.into(),
    };
    if let Some(o) = require_edge(&m, "convert").or_else(|| invalid(&m)) {
        return o;
    }
    let (out, t) = match convert(&m) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_FAILURE, String::new(), e.to_string()),
    };
    if let Err(e) = fs::write(output, serialize_mosaic(&out)) {
        return Outcome::usage(format!("{}: {e}", output.display()));
    }
    Outcome::ok(format!(
        "input nonempty: {}\ncaps found: {}\npushed: {}\noutput nonempty: {}\n",
        t.input_nonempty, t.caps_found, t.pushed, t.output_nonempty
    ))
}

pub fn cmd_caps(path: &Path) -> Outcome {
    let m = match load_mosaic(path) {
        Ok(m) => m,
        Err(e) => return e.into(),
    };
    if let Some(o) = require_edge(&m, "caps").or_else(|| invalid(&m)) {
        return o;
    }
    let caps = match find_caps(&m) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_FAILURE, String::new(), e.to_string()),
    };
    let mut out = format!("caps: {}\n", caps.len());
    for cap in &caps {
        let ((r0, c0), (r1, c1)) = cap.cells;
        let _ = writeln!(out, "  ({r0}, {c0}) ({r1}, {c1}) opens {:?}", cap.opening);
    }
    let (converted, _) = match convert(&m) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_FAILURE, out, e.to_string()),
    };
    let bound = verify_bound(&m, converted.nonempty_count()).expect("conversion already succeeded");
    let _ = writeln!(
        out,
        "tiles: {}\ncorner tiles after conversion: {}\ntiles - caps >= corner tiles: {}\nextreme lines hold only caps: {}",
        bound.t_upper,
        bound.tc_upper,
        yes_no(bound.inequality_holds),
        yes_no(extreme_lines_only_caps(&m))
    );
    Outcome::ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_identify(path: &Path) -> Outcome {
    let m = match load_mosaic(path) {
        Ok(m) => m,
        Err(e) => return e.into(),
    };
    if let Some(o) = invalid(&m) {
        return o;
    }
    let result = trace(&m).and_then(|d| {
        let f = fingerprint(&d)?;
        let free = is_unknot_free(&d)?;
        Ok((d, f, free))
    });
    match result {
        Ok((d, f, free)) => Outcome::ok(format!(
            "components: {}\ncrossings: {}\nunknot-free: {}\nfingerprint: {f}\n{}\n",
            d.components().total(),
            d.crossing_count(),
            yes_no(free),
            classify(&f).name()
        )),
        Err(e) => Outcome::fail(EXIT_FAILURE, String::new(), e.to_string()),
    }
}

fn masks_from(dir: Option<&Path>) -> Result<Vec<OccupancyMask>, LoadError> {
    let named = match dir {
        Some(d) => load_masks(d)?,
        None => builtin_masks(),
    };
    Ok(named.into_iter().map(|(_, m)| m).collect())
}

pub fn inline(p: &Polyomino) -> String {
    p.to_string().trim_end().replace('\n', "/")
}

/// Largest shape size `enumerate` accepts.
pub const MAX_ENUMERATE_CELLS: usize = 10;

pub fn cmd_enumerate(cells: usize, only_compliant: bool, masks: Option<&Path>, rules: FillRules, seed: GrowthSeed) -> Outcome {
    if !(3..=MAX_ENUMERATE_CELLS).contains(&cells) {
        return Outcome::usage(format!("--cells must lie in 3..={MAX_ENUMERATE_CELLS}"));
    }
    let filter = match masks_from(masks) {
        Ok(m) => cornermosaic_core::fillsearch::shape_filter(&rules, &m),
        Err(e) => return e.into(),
    };
    let shapes: Vec<Polyomino> = grow_enumerate(cells, seed)
        .expect("range checked")
        .into_iter()
        .filter(|p| !only_compliant || compliant(p, &filter))
        .collect();
    let mut out = format!("{} shape(s)\n", shapes.len());
    for p in &shapes {
        out.push_str(&inline(p));
        out.push('\n');
    }
    Outcome::ok(out)
}

/// The unknot-free classes with their corner tile numbers for searches up
/// to `max_cells` cells.
pub fn expected_classification(max_cells: usize) -> BTreeMap<LinkClass, usize> {
    let mut out = BTreeMap::new();
    if max_cells >= 6 {
        out.insert(LinkClass::HopfLink, 6);
    }
    if max_cells >= 8 {
        out.insert(LinkClass::Trefoil, 8);
        out.insert(LinkClass::SolomonsKnot, 8);
    }
    out
}

fn rules_name(r: &FillRules) -> &'static str {
    if *r == FillRules::strict() {
        "strict"
    } else if *r == FillRules::mandatory() {
        "mandatory"
    } else {
        "custom"
    }
}

pub fn format_report(report: &SearchReport) -> String {
    let mut out = format!("max cells: {}, rules: {}\n", report.max_cells, rules_name(&report.rules));
    let counts: Vec<String> = report.compliant_counts.iter().map(|(n, k)| format!("{n}: {k}")).collect();
    let _ = writeln!(out, "compliant shapes by size: {}", counts.join(", "));
    let _ = writeln!(out, "compliant shapes: {}", report.shapes.len());
    for s in &report.shapes {
        let mut named = Vec::new();
        let mut other = 0;
        for (c, k) in &s.classes {
            match c {
                LinkClass::Other(_) => other += k,
                _ => named.push(format!("{} x{k}", c.name())),
            }
        }
        if other > 0 {
            named.push(format!("Other x{other}"));
        }
        let free: Vec<&str> = s.unknot_free.iter().map(LinkClass::name).collect();
        let _ = writeln!(
            out,
            "  {} ({} cells): {} fills [{}] unknot-free: {{{}}}",
            inline(&s.shape),
            s.shape.len(),
            s.fills,
            named.join(", "),
            free.join(", ")
        );
    }
    let minimal: Vec<String> =
        report.minimal_unknot_free().iter().map(|(c, n)| format!("{}@{n}", c.name())).collect();
    let _ = writeln!(out, "unknot-free links: {{{}}}", minimal.join(", "));
    out
}

pub fn cmd_search(max_cells: usize, rules: FillRules, masks: Option<&Path>, seed: GrowthSeed, threads: usize) -> Outcome {
    if !(3..=8).contains(&max_cells) {
        return Outcome::usage("--max-cells must lie in 3..=8");
    }
    let masks = match masks_from(masks) {
        Ok(m) => m,
        Err(e) => return e.into(),
    };
    let report = match parallel_classification(max_cells, rules, &masks, seed, threads) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_FAILURE, String::new(), e.to_string()),
    };
    let mut out = format_report(&report);
    let matches = report.minimal_unknot_free() == expected_classification(max_cells);
    let _ = writeln!(out, "matches expected classification: {}", yes_no(matches));
    if matches {
        Outcome::ok(out)
    } else {
        Outcome::fail(EXIT_FAILURE, out, "classification differs from the expected table")
    }
}

pub fn cmd_render(path: &Path, format: FormatArg, output: Option<&Path>) -> Outcome {
    let m = match load_mosaic(path) {
        Ok(m) => m,
        Err(e) => return e.into(),
    };
    if let Some(o) = invalid(&m) {
        return o;
    }
    let text = match format {
        FormatArg::Ascii => render::ascii(&m),
        FormatArg::Svg => render::svg(&m),
    };
    match output {
        Some(p) => match fs::write(p, &text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::usage(format!("{}: {e}", p.display())),
        },
        None => Outcome::ok(text),
    }
}
