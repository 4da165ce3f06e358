//! Command-line front end: validate structure files, build extensions,
//! lift maps, check the universal property, enumerate homomorphisms, and
//! generate fixture files.
//!
//! Exit codes: 0 success or pass, 1 unreadable input (missing file, bad
//! JSON, wrong shape), 2 semantic failure (invalid structure, failed
//! check, rejected map), 3 resource limit (size cap or enumeration
//! budget).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use speclat::extension::DEFAULT_SIZE_LIMIT;
use speclat::io::{read_json, write_json, ExtensionFile, MorphismFile, StructureFile};
use speclat::semilattice::{ClosureSemilattice, SpecSemilattice};
use speclat::{
    build_extension_with_limit, check_universal_property, constructions, enumerate_homomorphisms,
    enumerate_k_homomorphisms, lift_homomorphism, EnumOptions, Error, ExtensionResult, Morphism,
    UniversalFailure,
};

#[derive(Parser)]
#[command(name = "speclat", version, about = "Specialization semilattices and their universal extensions")]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure file against the axioms.
    Validate {
        /// Structure file to check.
        file: PathBuf,
    },
    /// Build the universal extension of a structure.
    Extend {
        /// Structure file to extend.
        file: PathBuf,
        /// Write the extension file here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest carrier the builder accepts.
        #[arg(long, default_value_t = DEFAULT_SIZE_LIMIT)]
        max_size: usize,
    },
    /// Lift a homomorphism through an extension.
    Lift {
        /// Extension file (as written by `extend`).
        ext_file: PathBuf,
        /// Target structure file; a closure table is used when present.
        target_file: PathBuf,
        /// Morphism file with the map out of the extended structure.
        morphism_file: PathBuf,
        /// Write the lifted morphism file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively check the universal property against a target.
    CheckUniversal {
        /// Structure file (extension recomputed) or extension file.
        file: PathBuf,
        /// Target structure file.
        target_file: PathBuf,
        /// Cap on each enumeration's candidate count.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Enumerate homomorphisms between two structures.
    EnumHoms {
        /// Source structure file.
        src: PathBuf,
        /// Target structure file.
        dst: PathBuf,
        /// Keep only closure-compatible homomorphisms.
        #[arg(long)]
        k_only: bool,
        /// Keep only maps carrying zero to zero.
        #[arg(long)]
        zero_preserving: bool,
        /// Cap on the enumeration's candidate count.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Write a named fixture or a seeded random structure.
    Gen {
        /// One of: singleton, chain2, diamond, collapsed-diamond,
        /// dense-chain, nonadditive, n<k>, random.
        id: String,
        /// Seed for `random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size bound for `random`.
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        /// Include the closure table in the output.
        #[arg(long)]
        closure: bool,
        /// Write the structure file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if json {
                let payload = json!({ "status": "error", "message": e.to_string() });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Malformed(_) | Error::Io(_) | Error::Json(_) => 1,
        Error::SizeLimit { .. } | Error::Budget { .. } => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Validate { file } => validate(&file, cli.json),
        Command::Extend { file, out, max_size } => extend(&file, out.as_deref(), max_size, cli.json),
        Command::Lift {
            ext_file,
            target_file,
            morphism_file,
            out,
        } => lift(&ext_file, &target_file, &morphism_file, out.as_deref(), cli.json),
        Command::CheckUniversal {
            file,
            target_file,
            budget,
        } => check_universal(&file, &target_file, budget, cli.json),
        Command::EnumHoms {
            src,
            dst,
            k_only,
            zero_preserving,
            budget,
        } => enum_homs(&src, &dst, k_only, zero_preserving, budget, cli.json),
        Command::Gen {
            id,
            seed,
            max_size,
            closure,
            out,
        } => gen(&id, seed, max_size, closure, out.as_deref(), cli.json),
    }
}

fn validate(path: &Path, json: bool) -> Result<u8, Error> {
    let file: StructureFile = read_json(path)?;
    let s = file.to_raw_spec()?;
    let report = s.validate();
    if !report.is_pass() {
        if json {
            println!("{}", serde_json::to_string_pretty(&report)?);
        } else {
            for v in report.violations() {
                println!("violation: {} at witness {:?}", v.axiom, v.witness);
            }
        }
        return Ok(2);
    }
    if file.k.is_some() {
        // the axioms hold; now hold the closure table to its own laws
        if let Err(e) = file.to_spec() {
            match e {
                Error::Invalid(rep) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&rep)?);
                    } else {
                        for v in rep.violations() {
                            println!("violation: {} at witness {:?}", v.axiom, v.witness);
                        }
                    }
                }
                other => {
                    if json {
                        let payload =
                            json!({ "status": "fail", "message": other.to_string() });
                        println!("{}", serde_json::to_string_pretty(&payload)?);
                    } else {
                        println!("fail: {other}");
                    }
                }
            }
            return Ok(2);
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("valid: {} elements, zero {:?}", s.len(), s.zero());
    }
    Ok(0)
}

fn extend(path: &Path, out: Option<&Path>, max_size: usize, json: bool) -> Result<u8, Error> {
    let file: StructureFile = read_json(path)?;
    let s = file.to_spec()?;
    let ext = build_extension_with_limit(&s, max_size)?;
    let ext_file = ExtensionFile::from_extension(&ext);
    if let Some(out) = out {
        write_json(out, &ext_file)?;
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&ext_file)?);
    } else {
        println!(
            "extension: {} classes over {} elements{}",
            ext.class_count(),
            s.len(),
            if ext.adjoined_zero() { " (zero adjoined)" } else { "" }
        );
        println!("embedding: {:?}", ext.upsilon());
        println!("closures:  {:?}", ext.tilde().closure_table());
    }
    Ok(0)
}

/// Loads a target as a closure semilattice: directly when the file carries
/// a closure table, otherwise by closing a principal structure.
fn load_target(path: &Path) -> Result<ClosureSemilattice, Error> {
    let file: StructureFile = read_json(path)?;
    if file.k.is_some() {
        file.to_closure()
    } else {
        file.to_spec()?.to_closure_semilattice()
    }
}

fn load_extension(path: &Path) -> Result<ExtensionResult, Error> {
    let file: ExtensionFile = read_json(path)?;
    file.to_extension()
}

fn lift(
    ext_path: &Path,
    target_path: &Path,
    morphism_path: &Path,
    out: Option<&Path>,
    json: bool,
) -> Result<u8, Error> {
    let ext = load_extension(ext_path)?;
    let honest = build_extension_with_limit(ext.source(), DEFAULT_SIZE_LIMIT)?;
    if honest != ext {
        return Err(Error::Mismatch(
            "the extension file does not match the extension of its source".into(),
        ));
    }
    let t = load_target(target_path)?;
    let m_file: MorphismFile = read_json(morphism_path)?;
    if let Some(src) = &m_file.source {
        let named: StructureFile = read_json(src)?;
        if named.to_spec()? != *ext.source() {
            return Err(Error::Mismatch(
                "the morphism names a source that is not the extended structure".into(),
            ));
        }
    }
    let t_spec = SpecSemilattice::from_closure_semilattice(&t)?;
    if let Some(dst) = &m_file.target {
        let named: StructureFile = read_json(dst)?;
        if named.to_spec()? != t_spec {
            return Err(Error::Mismatch(
                "the morphism names a target that is not the lift target".into(),
            ));
        }
    }
    let eta = Morphism::new(ext.source().clone(), t_spec, m_file.map.clone())?;
    let lifted = lift_homomorphism(&ext, &t, &eta)?;
    let out_file = MorphismFile {
        source: Some(ext_path.display().to_string()),
        target: Some(target_path.display().to_string()),
        map: lifted.map().to_vec(),
    };
    if let Some(out) = out {
        write_json(out, &out_file)?;
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&out_file)?);
    } else {
        println!("lifted map: {:?}", lifted.map());
    }
    Ok(0)
}

fn check_universal(path: &Path, target_path: &Path, budget: u64, json: bool) -> Result<u8, Error> {
    let value: serde_json::Value = read_json(path)?;
    let ext = if value.get("tilde").is_some() {
        let file: ExtensionFile = serde_json::from_value(value)?;
        file.to_extension()?
    } else {
        let file: StructureFile = serde_json::from_value(value)?;
        build_extension_with_limit(&file.to_spec()?, DEFAULT_SIZE_LIMIT)?
    };
    let t = load_target(target_path)?;
    let check = check_universal_property(&ext, &t, budget)?;
    if json {
        let failure = check.failure.as_ref().map(|f| match f {
            UniversalFailure::NoFactorization { eta } => json!({
                "kind": "no-factorization", "eta": eta,
            }),
            UniversalFailure::MultipleFactorizations { eta, count } => json!({
                "kind": "multiple-factorizations", "eta": eta, "count": count,
            }),
            UniversalFailure::LiftMismatch {
                eta,
                enumerated,
                lifted,
            } => json!({
                "kind": "lift-mismatch", "eta": eta,
                "enumerated": enumerated, "lifted": lifted,
            }),
        });
        let payload = json!({
            "status": if check.passed() { "pass" } else { "fail" },
            "hom_count": check.hom_count,
            "k_hom_count": check.k_hom_count,
            "failure": failure,
        });
        println!("{}", serde_json::to_string_pretty(&payload)?);
    } else if check.passed() {
        println!(
            "pass: {} homomorphisms each factor uniquely ({} closure-compatible maps)",
            check.hom_count, check.k_hom_count
        );
    } else {
        match check.failure.as_ref().unwrap() {
            UniversalFailure::NoFactorization { eta } => {
                println!("fail: {eta:?} does not factor through the embedding");
            }
            UniversalFailure::MultipleFactorizations { eta, count } => {
                println!("fail: {eta:?} factors {count} times");
            }
            UniversalFailure::LiftMismatch {
                eta,
                enumerated,
                lifted,
            } => {
                println!(
                    "fail: for {eta:?} the closed-form lift {lifted:?} differs from the factorization {enumerated:?}"
                );
            }
        }
    }
    Ok(if check.passed() { 0 } else { 2 })
}

fn enum_homs(
    src: &Path,
    dst: &Path,
    k_only: bool,
    zero_preserving: bool,
    budget: u64,
    json: bool,
) -> Result<u8, Error> {
    let s: StructureFile = read_json(src)?;
    let t: StructureFile = read_json(dst)?;
    let s = s.to_spec()?;
    let t = t.to_spec()?;
    let opts = EnumOptions {
        zero_preserving,
        budget,
    };
    let homs = if k_only {
        enumerate_k_homomorphisms(&s, &t, opts)?
    } else {
        enumerate_homomorphisms(&s, &t, opts)?
    };
    if json {
        let maps: Vec<&[usize]> = homs.iter().map(|h| h.map()).collect();
        println!("{}", serde_json::to_string_pretty(&maps)?);
    } else {
        println!("{} maps", homs.len());
        for h in &homs {
            println!("{:?}", h.map());
        }
    }
    Ok(0)
}

fn gen(
    id: &str,
    seed: u64,
    max_size: usize,
    closure: bool,
    out: Option<&Path>,
    json: bool,
) -> Result<u8, Error> {
    let s = if id == "random" {
        constructions::random_structure(seed, max_size)?
    } else {
        constructions::named_structure(id)?
    };
    let file = if closure {
        StructureFile::from_spec_with_closures(&s)?
    } else {
        StructureFile::from_spec(&s)
    };
    if let Some(out) = out {
        write_json(out, &file)?;
    }
    if json || out.is_none() {
        println!("{}", serde_json::to_string_pretty(&file)?);
    } else {
        println!("wrote {} elements", s.len());
    }
    Ok(0)
}
