//! Command implementations behind the `dpjordan` binary: group-spec
//! parsing, configuration resolution, the four subcommands, and JSON
//! report emission. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error.

pub mod spec;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use dpjordan_core::jordan::{self, JordanValue};
use dpjordan_core::picard::blowup_config;
use dpjordan_core::report::Status;
use dpjordan_core::verify::{run_all, VerifyConfig};
use dpjordan_core::weyl::{self, SignedPerm};
use dpjordan_core::{Caps, Error, Permutation};

pub use spec::GroupSpec;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Input or usage problem; always maps to exit code 2.
#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    pub fn spec(message: &str) -> CliError {
        CliError {
            message: message.to_string(),
        }
    }

    pub fn message(&self) -> &str {
        &self.message
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError {
            message: e.to_string(),
        }
    }
}

/// Settings resolved from defaults, then the config file, then flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub caps: Caps,
    pub out: PathBuf,
    pub deterministic: bool,
    pub only: Option<String>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            caps: Caps::default(),
            out: PathBuf::from("report.json"),
            deterministic: false,
            only: None,
        }
    }
}

/// Flag values; `None` means "not given on the command line".
#[derive(Debug, Default, Clone)]
pub struct FlagOverrides {
    pub element_cap: Option<usize>,
    pub subgroup_cap: Option<usize>,
    pub out: Option<PathBuf>,
    pub deterministic: bool,
    pub only: Option<String>,
}

/// Applies config-file values and then command-line flags on top of the
/// defaults.
pub fn resolve_settings(
    config_path: Option<&Path>,
    flags: &FlagOverrides,
) -> Result<Settings, CliError> {
    let mut settings = Settings::default();
    if let Some(path) = config_path {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::spec(&format!("cannot read config {}: {e}", path.display())))?;
        apply_config_text(&mut settings, &text)?;
    }
    if let Some(v) = flags.element_cap {
        settings.caps.element_cap = v;
    }
    if let Some(v) = flags.subgroup_cap {
        settings.caps.subgroup_cap = v;
    }
    if let Some(v) = &flags.out {
        settings.out = v.clone();
    }
    if flags.deterministic {
        settings.deterministic = true;
    }
    if let Some(v) = &flags.only {
        settings.only = Some(v.clone());
    }
    Ok(settings)
}

/// Line-oriented `key = value` format with `#` comments.
pub fn apply_config_text(settings: &mut Settings, text: &str) -> Result<(), CliError> {
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::spec(&format!("config line {} is not `key = value`", lineno + 1))
        })?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "element_cap" => {
                settings.caps.element_cap = value
                    .parse()
                    .map_err(|_| CliError::spec(&format!("invalid element_cap `{value}`")))?
            }
            "subgroup_cap" => {
                settings.caps.subgroup_cap = value
                    .parse()
                    .map_err(|_| CliError::spec(&format!("invalid subgroup_cap `{value}`")))?
            }
            "out" => settings.out = PathBuf::from(value),
            "deterministic" => {
                settings.deterministic = value
                    .parse()
                    .map_err(|_| CliError::spec(&format!("invalid deterministic `{value}`")))?
            }
            "only" => {
                settings.only = if value.is_empty() {
                    None
                } else {
                    Some(value.to_string())
                }
            }
            _ => return Err(CliError::spec(&format!("unknown config key `{key}`"))),
        }
    }
    Ok(())
}

/// What a subcommand produced: human text, the JSON equivalent, and the
/// process exit code.
pub struct CmdOutput {
    pub human: String,
    pub json: Value,
    pub exit: u8,
}

pub fn cmd_verify(settings: &Settings) -> Result<CmdOutput, CliError> {
    let cfg = VerifyConfig {
        caps: settings.caps,
        deterministic: settings.deterministic,
        only: settings.only.clone(),
        negative_control: None,
    };
    let mut report = run_all(&cfg);
    if report.checks.is_empty() {
        return Err(CliError::spec(&format!(
            "--only `{}` matches no check; known ids: {}",
            settings.only.as_deref().unwrap_or(""),
            dpjordan_core::verify::check_ids().join(", ")
        )));
    }
    report
        .config
        .insert("out".into(), settings.out.display().to_string());
    let json_text = report.to_json();
    fs::write(&settings.out, &json_text).map_err(|e| {
        CliError::spec(&format!(
            "cannot write report to {}: {e}",
            settings.out.display()
        ))
    })?;

    let mut human = String::new();
    for check in &report.checks {
        let tag = match check.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        };
        human.push_str(&format!("{tag:4}  {}\n", check.check_id));
    }
    human.push_str(&format!(
        "{} passed, {} failed, {} skipped; report written to {}",
        report.summary.pass_count,
        report.summary.fail_count,
        report.summary.skip_count,
        settings.out.display()
    ));
    let exit = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    };
    Ok(CmdOutput {
        human,
        json: serde_json::to_value(&report).expect("report serializes"),
        exit,
    })
}

pub fn cmd_jordan(spec_text: &str, settings: &Settings) -> Result<CmdOutput, CliError> {
    let spec = GroupSpec::parse(spec_text)?;
    let group = spec.build(&settings.caps)?;
    let result = jordan::jordan_constant(&group, &settings.caps);

    let witness_gens: Vec<String> = result
        .witness
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect();
    let jordan_json: Value = match result.jordan {
        JordanValue::Exact { value, .. } => json!(value),
        JordanValue::LowerBoundOnly => json!("lower-bound-only"),
    };
    let json_out = json!({
        "spec": spec.to_string(),
        "group_order": result.group_order,
        "nu": result.nu,
        "jordan": jordan_json,
        "method": result.method_label(),
        "witness_subgroup": {
            "order": result.witness.order(),
            "generators": witness_gens,
        },
    });

    let mut human = String::new();
    human.push_str(&format!("spec: {spec}\n"));
    human.push_str(&format!("group order: {}\n", result.group_order));
    human.push_str(&format!(
        "nu (minimal normal abelian index): {}\n",
        result.nu
    ));
    match result.jordan {
        JordanValue::Exact { value, .. } => {
            human.push_str(&format!(
                "jordan constant: {value} (method: {})\n",
                result.method_label()
            ));
        }
        JordanValue::LowerBoundOnly => {
            human.push_str(&format!(
                "jordan constant: lower-bound-only (J >= {}; subgroup cap {} blocks the sweep)\n",
                result.nu, settings.caps.subgroup_cap
            ));
        }
    }
    human.push_str(&format!(
        "witness subgroup: order {}, generators: {}",
        result.witness.order(),
        if witness_gens.is_empty() {
            "() (trivial)".to_string()
        } else {
            witness_gens.join(", ")
        }
    ));
    Ok(CmdOutput {
        human,
        json: json_out,
        exit: EXIT_OK,
    })
}

pub fn cmd_lines(degree: usize, _settings: &Settings) -> Result<CmdOutput, CliError> {
    if !(3..=9).contains(&degree) {
        return Err(CliError::spec(&format!(
            "degree must be between 3 and 9, got {degree}"
        )));
    }
    let r = 9 - degree;
    let config = blowup_config(r)?;
    let names: Vec<String> = config.names().iter().map(|s| s.to_string()).collect();

    let mut human = String::new();
    human.push_str(&format!("degree: {degree} (blow-up at {r} points)\n"));
    human.push_str(&format!("lines: {}\n", config.line_count()));

    if config.line_count() == 0 {
        human.push_str("dual graph: empty\nautomorphism group order: 1");
        return Ok(CmdOutput {
            human,
            json: json!({
                "degree": degree,
                "blown_up_points": r,
                "line_count": 0,
                "lines": [],
                "gram": [],
                "edges": [],
                "aut_order": 1,
            }),
            exit: EXIT_OK,
        });
    }

    let graph = config.graph()?;
    let autos = graph.automorphisms()?;
    let edges: Vec<(String, String)> = graph
        .edges()
        .into_iter()
        .map(|(i, j)| (names[i].clone(), names[j].clone()))
        .collect();

    human.push_str(&format!("  {}\n", names.join(" ")));
    human.push_str("gram matrix:\n");
    for (i, row) in config.gram().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:2}")).collect();
        human.push_str(&format!("  {:4} [{}]\n", names[i], cells.join(" ")));
    }
    human.push_str(&format!("dual graph edges ({}):\n", edges.len()));
    let edge_text: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
    human.push_str(&format!("  {}\n", edge_text.join(" ")));
    human.push_str(&format!("automorphism group order: {}", autos.order()));

    Ok(CmdOutput {
        human,
        json: json!({
            "degree": degree,
            "blown_up_points": r,
            "line_count": config.line_count(),
            "lines": names,
            "gram": config.gram(),
            "edges": edges,
            "aut_order": autos.order(),
        }),
        exit: EXIT_OK,
    })
}

pub fn cmd_weyl(element_text: &str, _settings: &Settings) -> Result<CmdOutput, CliError> {
    let element = parse_signed_perm(element_text)?;
    let names = weyl::line_names();
    let action = element.line_action();
    let line_cycles = action.cycle_string_with(|i| names[i].clone());
    let fixed = element.fixed_lines();

    let human = format!(
        "element: {element}\nrho: {}\norder: {}\nline action: {line_cycles}\nfixed lines: {}",
        element.rho(),
        element.order(),
        if fixed.is_empty() {
            "none".to_string()
        } else {
            fixed.join(" ")
        }
    );
    Ok(CmdOutput {
        human,
        json: json!({
            "element": element.to_string(),
            "rho": element.rho().to_string(),
            "order": element.order(),
            "line_action": line_cycles,
            "fixed_lines": fixed,
        }),
        exit: EXIT_OK,
    })
}

/// Parses elements like "(1 2 3 4)*i15", "i12", "(1 2 3 4 5)".
///
/// Factors are '*'-separated and multiplied left to right; each factor
/// is either a permutation of 1..5 in cycle form or an `i` followed by
/// the 1-indexed sign support. Odd sign weight is rejected.
pub fn parse_signed_perm(text: &str) -> Result<SignedPerm, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(CliError::spec("empty element"));
    }
    let mut result = SignedPerm::identity();
    for factor in text.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(CliError::spec("empty factor in element"));
        }
        let parsed = if let Some(digits) = factor.strip_prefix('i') {
            let mut support = Vec::new();
            for c in digits.chars() {
                let point = c
                    .to_digit(10)
                    .ok_or_else(|| CliError::spec(&format!("invalid sign index `{c}`")))?
                    as usize;
                if !(1..=5).contains(&point) {
                    return Err(CliError::spec(&format!("sign index {point} outside 1..5")));
                }
                support.push(point - 1);
            }
            SignedPerm::from_parts(Permutation::identity(5), &support).map_err(CliError::from)?
        } else {
            let sigma = spec::parse_cycles(factor, 5)?;
            SignedPerm::from_sigma(sigma).map_err(CliError::from)?
        };
        result = result.mul(&parsed);
    }
    Ok(result)
}

/// Renders either the human text or the JSON form of a command output.
pub fn render(output: &CmdOutput, json_mode: bool) -> String {
    if json_mode {
        serde_json::to_string_pretty(&output.json).expect("command output serializes")
    } else {
        output.human.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_text_overrides_defaults() {
        let mut settings = Settings::default();
        apply_config_text(
            &mut settings,
            "# comment\nsubgroup_cap = 16\nelement_cap=5000\ndeterministic = true\nonly = lemma-iota12\nout = custom.json\n",
        )
        .unwrap();
        assert_eq!(settings.caps.subgroup_cap, 16);
        assert_eq!(settings.caps.element_cap, 5000);
        assert!(settings.deterministic);
        assert_eq!(settings.only.as_deref(), Some("lemma-iota12"));
        assert_eq!(settings.out, PathBuf::from("custom.json"));
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        let mut settings = Settings::default();
        assert!(apply_config_text(&mut settings, "subgruop_cap = 16").is_err());
        assert!(apply_config_text(&mut settings, "just a line").is_err());
    }

    #[test]
    fn flags_beat_config_values() {
        let flags = FlagOverrides {
            subgroup_cap: Some(64),
            ..FlagOverrides::default()
        };
        let mut settings = Settings::default();
        apply_config_text(&mut settings, "subgroup_cap = 16").unwrap();
        // simulate resolve: flags over config
        if let Some(v) = flags.subgroup_cap {
            settings.caps.subgroup_cap = v;
        }
        assert_eq!(settings.caps.subgroup_cap, 64);
    }

    #[test]
    fn signed_perm_parsing_matches_the_grammar() {
        let g = parse_signed_perm("(1 2 3 4)*i15").unwrap();
        assert_eq!(g.to_string(), "(1 2 3 4)*i15");
        assert_eq!(g.rho().to_string(), "(1 2 3 4)");
        let id = parse_signed_perm("()").unwrap();
        assert!(id.rho().is_identity());
        assert!(parse_signed_perm("i1").is_err());
        assert!(parse_signed_perm("i123").is_err());
        assert!(parse_signed_perm("i16").is_err());
        assert!(parse_signed_perm("(1 6)").is_err());
    }

    #[test]
    fn weyl_command_reports_unique_fixed_line() {
        let out = cmd_weyl("(1 2 3 4 5)", &Settings::default()).unwrap();
        assert!(out.human.contains("fixed lines: Q"));
        assert_eq!(out.json["fixed_lines"], json!(["Q"]));
        assert_eq!(out.json["order"], json!(5));
    }

    #[test]
    fn weyl_command_shows_the_e1_e2_swap() {
        let out = cmd_weyl("i12", &Settings::default()).unwrap();
        assert!(out.json["line_action"]
            .as_str()
            .unwrap()
            .contains("(E1 E2)"));
    }

    #[test]
    fn jordan_command_computes_the_s5_constant() {
        let out = cmd_jordan("s5", &Settings::default()).unwrap();
        assert_eq!(out.json["jordan"], json!(120));
        assert_eq!(out.json["method"], json!("fast-path"));
        assert_eq!(out.exit, EXIT_OK);
    }

    #[test]
    fn jordan_command_reports_lower_bound_under_tight_cap() {
        let settings = Settings {
            caps: Caps::default().with_subgroup_cap(16),
            ..Settings::default()
        };
        let out = cmd_jordan("ex-dp6:n=5", &settings).unwrap();
        assert_eq!(out.json["jordan"], json!("lower-bound-only"));
        assert_eq!(out.json["nu"], json!(4));
        assert_eq!(out.exit, EXIT_OK);
        assert!(out.human.contains("lower-bound-only"));
    }

    #[test]
    fn lines_command_handles_the_degenerate_degree_9() {
        let out = cmd_lines(9, &Settings::default()).unwrap();
        assert_eq!(out.json["line_count"], json!(0));
        assert_eq!(out.json["aut_order"], json!(1));
        assert!(cmd_lines(2, &Settings::default()).is_err());
        assert!(cmd_lines(10, &Settings::default()).is_err());
    }

    #[test]
    fn lines_command_reports_the_hexagon() {
        let out = cmd_lines(6, &Settings::default()).unwrap();
        assert_eq!(out.json["line_count"], json!(6));
        assert_eq!(out.json["aut_order"], json!(12));
    }
}
