//! Command-line flags and their JSON form.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use geoslice::engine::DEFAULT_CELL_CAP;
use geoslice::verify::SuiteScale;
use geoslice::{SlowRule, Vertex, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    /// The weighted lattice `H_{a,b}`.
    H,
    Grid,
    /// The length-2/length-4 extension.
    Appendix,
    Triangular,
    Hex,
    /// The hexagonal lattice plus its chords, which is the grid again.
    HexCompletion,
    /// The unweighted emulation of `H_{a,b}` over the grid.
    Reduction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Edges,
    Dot,
    Svg,
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Build,
    Dist,
    Slice,
    Count,
    Verify,
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub kind: GraphKind,
    pub p: i64,
    pub a: u64,
    pub b: u64,
    pub rule: SlowRule,
    /// Base-lattice constant of a reduction.
    pub m: u64,
    /// Reduction scale; the smallest admissible one when absent.
    pub n: Option<i64>,
}

/// Everything one invocation needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliConfig {
    pub command: CommandKind,
    pub graph: GraphSpec,
    pub window: Option<Window>,
    pub from: Option<Vertex>,
    pub to: Option<Vertex>,
    pub k: Option<i64>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub cap: u64,
    pub cell_cap: u64,
    pub scale: SuiteScale,
    pub checks: Vec<String>,
    pub golden: Option<PathBuf>,
    pub figure: Option<String>,
}

#[derive(Debug, Parser)]
#[command(name = "geoslice", version, about = "Distances, geodesic slices and checks on extensions of Z^2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Edge list, DOT or SVG of a graph on a window.
    Build(Flags),
    /// Distance between two vertices.
    Dist(Flags),
    /// One slice (with --k) or the full slice profile of a pair.
    Slice(Flags),
    /// Number of geodesics of a pair.
    Count(Flags),
    /// Run the check suite.
    Verify(Flags),
    /// SVG of a graph window or of a named figure.
    Export(Flags),
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    #[arg(long, value_enum, default_value = "h")]
    pub graph: GraphKind,
    #[arg(long, default_value_t = 3)]
    pub p: i64,
    #[arg(long, default_value_t = 1)]
    pub a: u64,
    #[arg(long, default_value_t = 2)]
    pub b: u64,
    /// Slow-edge rule: every-midpoint or coprime-midpoint.
    #[arg(long, default_value = "every-midpoint")]
    pub rule: SlowRule,
    #[arg(long = "M", default_value_t = 1)]
    pub m: u64,
    #[arg(long = "N")]
    pub n: Option<i64>,
    /// "xmin,xmax,ymin,ymax"
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<Window>,
    /// "x,y"
    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<Vertex>,
    /// "x,y"
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<Vertex>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0x6765_6f73)]
    pub seed: u64,
    /// Geodesic cap: enumeration elsewhere, counting for `count` (default unlimited there).
    #[arg(long)]
    pub cap: Option<u64>,
    /// Largest search window, in cells.
    #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
    pub cell_cap: u64,
    #[arg(long, default_value = "quick")]
    pub scale: SuiteScale,
    /// Comma-separated check names; all checks when absent.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
    /// Expected edge list of the appendix graph on [0,36]^2.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    /// blocks, aligned, hex, triangular or appendix.
    #[arg(long)]
    pub figure: Option<String>,
    /// Print the parsed configuration as JSON and exit.
    #[arg(long)]
    pub dump_config: bool,
}

impl Cli {
    pub fn into_config(self) -> (CliConfig, bool) {
        let (command, f) = match self.command {
            Command::Build(f) => (CommandKind::Build, f),
            Command::Dist(f) => (CommandKind::Dist, f),
            Command::Slice(f) => (CommandKind::Slice, f),
            Command::Count(f) => (CommandKind::Count, f),
            Command::Verify(f) => (CommandKind::Verify, f),
            Command::Export(f) => (CommandKind::Export, f),
        };
        let format = f.format.unwrap_or(match command {
            CommandKind::Build => Format::Edges,
            CommandKind::Export => Format::Svg,
            CommandKind::Slice if f.k.is_none() => Format::Csv,
            CommandKind::Verify => Format::Json,
            _ => Format::Text,
        });
        let config = CliConfig {
            command,
            graph: GraphSpec { kind: f.graph, p: f.p, a: f.a, b: f.b, rule: f.rule, m: f.m, n: f.n },
            window: f.window,
            from: f.from,
            to: f.to,
            k: f.k,
            format,
            output: f.output,
            seed: f.seed,
            cap: f.cap.unwrap_or(if command == CommandKind::Count { u64::MAX } else { 100_000 }),
            cell_cap: f.cell_cap,
            scale: f.scale,
            checks: f.checks,
            golden: f.golden,
            figure: f.figure,
        };
        (config, f.dump_config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> CliConfig {
        let mut argv = vec!["geoslice"];
        argv.extend_from_slice(args);
        Cli::try_parse_from(argv).unwrap().into_config().0
    }

    #[test]
    fn json_round_trip() {
        let cases: [&[&str]; 4] = [
            &["dist", "--graph", "h", "--p", "3", "--a", "1", "--b", "2", "--from", "0,0", "--to", "3,0"],
            &["slice", "--graph", "grid", "--from", "-2,-2", "--to", "3,3", "--k", "3", "-o", "/tmp/x"],
            &["verify", "--checks", "baselines,tilings", "--scale", "full", "--rule", "coprime-midpoint"],
            &["export", "--graph", "reduction", "--N", "22", "--M", "1", "--window", "-5,40,-5,40", "--figure", "hex"],
        ];
        for args in cases {
            let cfg = parse(args);
            let json = serde_json::to_string(&cfg).unwrap();
            assert_eq!(serde_json::from_str::<CliConfig>(&json).unwrap(), cfg, "{args:?}");
        }
    }

    #[test]
    fn parsing_and_defaults() {
        let cfg = parse(&["slice", "--graph", "grid", "--from", "-2,-2", "--to", "3,3"]);
        assert_eq!(cfg.from, Some(Vertex::new(-2, -2)));
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(parse(&["slice", "--from", "0,0", "--to", "1,1", "--k", "1"]).format, Format::Text);
        assert_eq!(parse(&["verify"]).format, Format::Json);
        assert_eq!(parse(&["build", "--window", "0,3,0,3"]).window, Some(Window::new(0, 3, 0, 3).unwrap()));
        let v = parse(&["verify", "--checks", "a,b"]);
        assert_eq!(v.checks, vec!["a".to_string(), "b".to_string()]);
        assert_eq!(v.scale, SuiteScale::Quick);
    }

    #[test]
    fn malformed_flags_are_rejected() {
        for args in [
            vec!["geoslice", "dist", "--from", "0;0"],
            vec!["geoslice", "build", "--window", "0,1,2"],
            vec!["geoslice", "dist", "--graph", "torus"],
            vec!["geoslice", "frobnicate"],
        ] {
            assert!(Cli::try_parse_from(args).is_err());
        }
    }
}
