//! Small built-in instances shipped as spec text, so that every preset goes through
//! the same parser as user files.

use crate::error::{CliError, Result};

const DUAL_NUMBERS_ALGEBRA: &str = "\
[field]
p = 2

[algebra]
vertices = 1
arrows = x: 1 -> 1
relations = x*x
";

const KA2_ALGEBRA: &str = "\
[field]
p = 2

[algebra]
vertices = 1 2
arrows = a: 1 -> 2
";

const GF2_ALGEBRA: &str = "\
[field]
p = 2

[algebra]
vertices = 1
";

/// Two vertices, arrows both ways and one zero relation; exactly one of the
/// vertex idempotents generates a non-stratifying ideal.
const CYCLE_ALGEBRA: &str = "\
[field]
p = 2

[algebra]
vertices = 1 2
arrows = a: 1 -> 2, b: 2 -> 1
relations = a*b
";

const DUAL_NUMBER_MODULES: &str = "
[module k]
dims = 1
x = 0

[module kk]
dims = 2
x = 0 0; 0 0
";

pub const NAMES: &[&str] = &[
    "dualnumbers",
    "kA2",
    "t2-dualnumbers",
    "morn:<n>:<base>",
    "cycle2",
];

fn base_algebra(name: &str) -> Option<(&'static str, &'static str)> {
    match name {
        "dualnumbers" => Some((DUAL_NUMBERS_ALGEBRA, DUAL_NUMBER_MODULES)),
        "kA2" => Some((KA2_ALGEBRA, "")),
        "gf2" => Some((GF2_ALGEBRA, "")),
        "cycle2" => Some((CYCLE_ALGEBRA, "")),
        _ => None,
    }
}

/// Spec text of a preset. `morn:<n>:<base>` takes `base` from
/// `dualnumbers`, `kA2`, `gf2` and `cycle2`.
pub fn preset_text(name: &str) -> Result<String> {
    let unknown = || CliError::UnknownPreset(name.to_string());
    let (algebra, modules, instance) = match name {
        "dualnumbers" => (
            DUAL_NUMBERS_ALGEBRA,
            DUAL_NUMBER_MODULES,
            "kind = idempotent\nidempotent = e1".to_string(),
        ),
        "kA2" => (KA2_ALGEBRA, "", "kind = idempotent\nidempotent = e2".to_string()),
        "t2-dualnumbers" => (
            DUAL_NUMBERS_ALGEBRA,
            DUAL_NUMBER_MODULES,
            "kind = triangular\nbimodule = regular".to_string(),
        ),
        "cycle2" => (CYCLE_ALGEBRA, "", "kind = idempotent\nidempotent = e1".to_string()),
        _ => {
            let rest = name.strip_prefix("morn:").ok_or_else(unknown)?;
            let (n, base) = rest.split_once(':').ok_or_else(unknown)?;
            let n: usize = n.parse().map_err(|_| unknown())?;
            let (algebra, modules) = base_algebra(base).ok_or_else(unknown)?;
            (algebra, modules, format!("kind = morn\nn = {n}"))
        }
    };
    Ok(format!("# preset {name}\n{algebra}\n[instance]\n{instance}\n{modules}"))
}
