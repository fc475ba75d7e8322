use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dpjordan_cli::{
    cmd_jordan, cmd_lines, cmd_verify, cmd_weyl, render, resolve_settings, FlagOverrides,
    EXIT_USAGE,
};

#[derive(Debug, Parser)]
#[command(name = "dpjordan", version)]
#[command(about = "Finite-group engine: Jordan constants, line configurations, W(D5) actions")]
struct Cli {
    /// Config file with `key = value` lines (keys: element_cap,
    /// subgroup_cap, out, deterministic, only)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Print JSON to stdout instead of human-readable text
    #[arg(long, global = true)]
    json: bool,

    /// Cap on materialized group elements (default 20000)
    #[arg(long, global = true)]
    element_cap: Option<usize>,

    /// Cap on group order for full subgroup enumeration (default 512)
    #[arg(long, global = true)]
    subgroup_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the verification suite and write a JSON report
    Verify {
        /// Run only the check with this id, or a family by prefix
        #[arg(long)]
        only: Option<String>,

        /// Report path (default report.json)
        #[arg(long)]
        out: Option<PathBuf>,

        /// Zero elapsed times so reports are byte-identical across runs
        #[arg(long)]
        deterministic: bool,
    },

    /// Compute the Jordan constant of a group given by a spec
    Jordan {
        /// Group spec, e.g. "s5", "cyclic:12", "ex-dp6:n=5",
        /// "perm:5:(1 2);(1 2 3 4 5)", "product(a5,a5)", "swapwreath(a5)"
        spec: String,
    },

    /// Print the line configuration of a del Pezzo surface of a degree
    Lines {
        /// Surface degree, between 3 and 9
        #[arg(long)]
        degree: usize,
    },

    /// Evaluate one W(D5) element on the 16 lines
    Weyl {
        /// Element, e.g. "(1 2 3 4 5)", "i12", "(1 2 3 4)*i15"
        element: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let mut flags = FlagOverrides {
        element_cap: cli.element_cap,
        subgroup_cap: cli.subgroup_cap,
        ..FlagOverrides::default()
    };
    if let Command::Verify {
        only,
        out,
        deterministic,
    } = &cli.command
    {
        flags.only = only.clone();
        flags.out = out.clone();
        flags.deterministic = *deterministic;
    }

    let settings = match resolve_settings(cli.config.as_deref(), &flags) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };

    let result = match &cli.command {
        Command::Verify { .. } => cmd_verify(&settings),
        Command::Jordan { spec } => cmd_jordan(spec, &settings),
        Command::Lines { degree } => cmd_lines(*degree, &settings),
        Command::Weyl { element } => cmd_weyl(element, &settings),
    };

    match result {
        Ok(output) => {
            println!("{}", render(&output, cli.json));
            ExitCode::from(output.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
