//! Thin command-line front end. All mathematics lives in the library; this
//! binary parses flags, runs one pipeline per subcommand and formats the
//! result as text, JSON, DOT or CSV.
//!
//! Exit codes: 0 success or verified, 1 verification failed, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use moduli_tilings::bracketings::{self, face_poset, f_vector, PathFrame};
use moduli_tilings::chambers;
use moduli_tilings::circle::{self, count_product_types, CircleFrame, FixedNode};
use moduli_tilings::config::{OutputFormat, RunConfig};
use moduli_tilings::polytopes::{
    build_circle_product, build_interval_simplex, collision_faces, face_lattice,
    iterated_truncation, lattice_dot, polytope_json,
};
use moduli_tilings::tiling::{
    build_complex_with_limit, enumerate_tiles, verify_kapranov, BuildingSet, Space,
};

#[derive(Parser)]
#[command(
    name = "moduli-tilings",
    version,
    about = "Associahedra from bracketings and truncations, and the tilings they glue into"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Key-value config file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format: text, json, dot or csv.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Directory for output files (default: MODULI_TILINGS_OUTDIR or stdout).
    #[arg(long, global = true)]
    outdir: Option<PathBuf>,
    /// Seed for sampling runs.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Numeric tolerance.
    #[arg(long, global = true)]
    epsilon: Option<f64>,
    /// Cap on internal parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Enumeration limit for complex builds and bracketing posets.
    #[arg(long, global = true)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    /// Blown-up projective sphere of the braid arrangement.
    Pv,
    /// Compactified real moduli space of punctured spheres.
    Moduli,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildingArg {
    Minimal,
    Maximal,
}

#[derive(Clone, Copy, ValueEnum)]
enum CutArg {
    Zero,
    One,
    Infinity,
}

#[derive(Subcommand)]
enum Command {
    /// Face counts of the associahedron K_n by codimension.
    Fvector {
        /// The associahedron index n (path with n nodes).
        #[arg(long)]
        k: usize,
        /// Use the fixed-endpoint interval frame with k free nodes instead.
        #[arg(long)]
        fixed_ends: bool,
        /// Print only the facet count.
        #[arg(long)]
        facets_only: bool,
    },
    /// Build a product of simplices, truncate its collision faces and
    /// compare the result with the bracketing poset.
    Truncate {
        /// Free nodes per circle region, e.g. 2,1,0.
        #[arg(long, value_delimiter = ',', num_args = 1..=3)]
        partition: Option<Vec<usize>>,
        /// Truncate the interval simplex with this many free nodes instead.
        #[arg(long)]
        simplex: Option<usize>,
    },
    /// Tile a space and report the glued complex.
    Tile {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "minimal")]
        building_set: BuildingArg,
    },
    /// Verify that the two spaces carry the same cellulation.
    VerifyKapranov {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "minimal")]
        building_set: BuildingArg,
    },
    /// Check the cut bijection between circle and path bracketings.
    Bijection {
        /// Free nodes per circle region, e.g. 2,1,0.
        #[arg(long, value_delimiter = ',', num_args = 1..=3)]
        partition: Vec<usize>,
        #[arg(long, value_enum, default_value = "infinity")]
        cut: CutArg,
    },
    /// Sample the numeric chamber map and report violations.
    Chambers {
        /// Number of particles on the line.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

struct Report {
    text: String,
    json: serde_json::Value,
    dot: Option<String>,
    csv: Option<String>,
    /// `Some(false)` means a verification failed: exit code 1.
    verified: Option<bool>,
    /// Stem for output files when an outdir is configured.
    stem: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut config = RunConfig::default();
    if let Some(path) = &cli.global.config {
        let contents = match std::fs::read_to_string(path) {
            Ok(c) => c,
            Err(err) => {
                eprintln!("error: cannot read config {}: {err}", path.display());
                return ExitCode::from(2);
            }
        };
        if let Err(err) = config.apply_file(&contents) {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    if let Some(format) = &cli.global.format {
        match format.parse() {
            Ok(f) => config.format = f,
            Err(err) => {
                eprintln!("error: {err}");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(outdir) = cli.global.outdir.clone() {
        config.outdir = Some(outdir);
    }
    if let Some(seed) = cli.global.seed {
        config.seed = seed;
    }
    if let Some(epsilon) = cli.global.epsilon {
        config.epsilon = epsilon;
    }
    if let Some(threads) = cli.global.threads {
        config.threads = Some(threads);
    }
    if let Some(max_n) = cli.global.max_n {
        config.max_complex_n = max_n;
        config.max_poset_n = max_n.max(config.max_poset_n);
    }
    if let Some(threads) = config.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }

    match run(&cli.command, &config) {
        Ok(report) => {
            if let Err(err) = emit(&report, &config) {
                eprintln!("error: {err}");
                return ExitCode::from(2);
            }
            match report.verified {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn emit(report: &Report, config: &RunConfig) -> std::io::Result<()> {
    let (contents, extension) = match config.format {
        OutputFormat::Text => (report.text.clone(), "txt"),
        OutputFormat::Json => (format!("{:#}\n", report.json), "json"),
        OutputFormat::Dot => (
            report.dot.clone().unwrap_or_else(|| {
                format!("// no DOT view for this command\n{}", report.text)
            }),
            "dot",
        ),
        OutputFormat::Csv => (
            report.csv.clone().unwrap_or_else(|| report.text.clone()),
            "csv",
        ),
    };
    match &config.outdir {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(format!("{}.{extension}", report.stem));
            std::fs::write(&path, contents)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{contents}");
            if !contents.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn parse_partition(parts: &[usize]) -> (usize, usize, usize) {
    let mut p = [0usize; 3];
    for (i, &v) in parts.iter().enumerate() {
        p[i] = v;
    }
    (p[0], p[1], p[2])
}

fn run(command: &Command, config: &RunConfig) -> Result<Report, String> {
    match command {
        Command::Fvector { k, fixed_ends, facets_only } => {
            if *k > config.max_poset_n {
                return Err(format!(
                    "k = {k} exceeds the poset enumeration limit {} (raise max_poset_n)",
                    config.max_poset_n
                ));
            }
            let frame = if *fixed_ends {
                PathFrame::fixed_ends(*k)
            } else {
                if *k < 2 {
                    return Err("need at least 2 nodes".into());
                }
                PathFrame::free(*k)
            };
            let counts = f_vector(frame);
            let bp = face_poset(frame);
            let text = if *facets_only {
                format!("{}\n", counts.get(1).copied().unwrap_or(0))
            } else {
                counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ") + "\n"
            };
            let mut csv = String::from("codim,count\n");
            for (codim, count) in counts.iter().enumerate() {
                csv.push_str(&format!("{codim},{count}\n"));
            }
            Ok(Report {
                text,
                json: json!({ "k": k, "fixed_ends": fixed_ends, "f_vector": counts,
                              "poset": bracketings::poset_json(&bp) }),
                dot: Some(bracketings::poset_dot(&bp)),
                csv: Some(csv),
                verified: None,
                stem: format!("fvector-k{k}"),
            })
        }

        Command::Truncate { partition, simplex } => {
            let (polytope, label, n) = match (partition, simplex) {
                (Some(parts), None) => {
                    let p = parse_partition(parts);
                    if p.0 + p.1 + p.2 == 0 {
                        return Err("partition must place at least one free node".into());
                    }
                    let n = p.0 + p.1 + p.2 + 2;
                    (build_circle_product(p), format!("{},{},{}", p.0, p.1, p.2), n)
                }
                (None, Some(free)) => {
                    if *free < 1 {
                        return Err("the interval simplex needs at least one free node".into());
                    }
                    (build_interval_simplex(*free), format!("simplex{free}"), free + 2)
                }
                _ => return Err("give exactly one of --partition or --simplex".into()),
            };
            if n > config.max_poset_n {
                return Err(format!(
                    "K_{n} exceeds the poset enumeration limit {} (raise max_poset_n)",
                    config.max_poset_n
                ));
            }
            let schedule = collision_faces(&polytope).map_err(|e| e.to_string())?;
            let truncated = iterated_truncation(&polytope, &schedule).map_err(|e| e.to_string())?;
            let lattice = face_lattice(&truncated);
            let reference = face_poset(PathFrame::free(n));
            let isomorphic = lattice.poset.isomorphism(&reference.poset).is_some();
            let counts = truncated.f_vector();
            let mut text = String::new();
            text.push_str(&format!(
                "start: {polytope}\nschedule: {} faces in {} groups\nresult: {truncated}\n",
                schedule.face_count(),
                schedule.groups.len()
            ));
            text.push_str(&format!(
                "f-vector by codim: {}\n",
                counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            ));
            text.push_str(&format!("isomorphic to K_{n}: {}\n", if isomorphic { "yes" } else { "no" }));
            let mut csv = String::from("codim,count\n");
            for (codim, count) in counts.iter().enumerate() {
                csv.push_str(&format!("{codim},{count}\n"));
            }
            Ok(Report {
                text,
                json: json!({
                    "input": label, "f_vector": counts, "isomorphic": isomorphic,
                    "schedule_faces": schedule.face_count(),
                    "polytope": polytope_json(&truncated),
                }),
                dot: Some(lattice_dot(&truncated)),
                csv: Some(csv),
                verified: Some(isomorphic),
                stem: format!("truncate-{}", label.replace(',', "-")),
            })
        }

        Command::Tile { space, n, building_set } => {
            let space = match space {
                SpaceArg::Pv => Space::ProjectiveSphere,
                SpaceArg::Moduli => Space::Moduli,
            };
            let building = match building_set {
                BuildingArg::Minimal => BuildingSet::Minimal,
                BuildingArg::Maximal => BuildingSet::Maximal,
            };
            let space_name = match space {
                Space::ProjectiveSphere => "pv",
                Space::Moduli => "moduli",
            };
            if building == BuildingSet::Maximal && *n != 2 {
                return Err("the maximal building set is supported at n = 2 only".into());
            }
            let tiles = enumerate_tiles(space, *n);
            let mut text = format!("{} tiles\n", tiles.len());
            let mut verified = None;
            let (json_value, dot, csv) =
                match build_complex_with_limit(space, *n, building, config.max_complex_n) {
                    Ok(complex) => {
                        let fv = complex.f_vector();
                        text.push_str(&format!(
                            "cells by dim: {}\nchi = {}\n",
                            fv.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
                            complex.euler_characteristic()
                        ));
                        if let Some(census) = complex.polygon_size_census() {
                            let parts: Vec<String> = census
                                .iter()
                                .map(|(size, count)| format!("{count} {size}-gons"))
                                .collect();
                            text.push_str(&format!("tiles: {}\n", parts.join(", ")));
                        }
                        let mut surface_json = serde_json::Value::Null;
                        if complex.dim() == 2 {
                            let report = complex.classify_surface().map_err(|e| e.to_string())?;
                            text.push_str(&format!(
                                "surface: closed={} orientable={} chi={}{}\n",
                                report.closed,
                                report.orientable,
                                report.chi,
                                report
                                    .surface_name()
                                    .map(|name| format!(" ({name})"))
                                    .unwrap_or_default()
                            ));
                            verified = Some(report.closed);
                            surface_json = json!({
                                "closed": report.closed,
                                "orientable": report.orientable,
                                "chi": report.chi,
                                "name": report.surface_name(),
                            });
                        }
                        text.push_str(&format!(
                            "right-angled: {}\n",
                            complex.verify_right_angled()
                        ));
                        let mut complex_json = complex.to_json();
                        complex_json["surface"] = surface_json;
                        complex_json["tile_count"] = json!(tiles.len());
                        (
                            complex_json,
                            Some(complex.dual_adjacency_dot()),
                            Some(complex.f_vector_csv()),
                        )
                    }
                    Err(err) => {
                        text.push_str(&format!("complex not built: {err}\n"));
                        (json!({ "tile_count": tiles.len(), "complex": null }), None, None)
                    }
                };
            Ok(Report {
                text,
                json: json_value,
                dot,
                csv,
                verified,
                stem: format!("tile-{space_name}-n{n}"),
            })
        }

        Command::VerifyKapranov { n, building_set } => {
            let building = match building_set {
                BuildingArg::Minimal => BuildingSet::Minimal,
                BuildingArg::Maximal => BuildingSet::Maximal,
            };
            let report = verify_kapranov(*n, building, config.max_complex_n)
                .map_err(|e| e.to_string())?;
            let mut text = format!(
                "top cells: moduli {} vs sphere {}\ncells by dim: {:?} vs {:?}\n",
                report.moduli_top_cells,
                report.sphere_top_cells,
                report.moduli_f_vector,
                report.sphere_f_vector
            );
            text.push_str(&format!(
                "cut map well-defined: {}\nidentical cellulation: {}\noracle agrees: {}\n",
                report.map_well_defined,
                report.isomorphic(),
                report.oracle_agrees()
            ));
            let verified = report.isomorphic() && report.oracle_agrees();
            Ok(Report {
                json: json!({
                    "n": n,
                    "isomorphic": report.isomorphic(),
                    "map_well_defined": report.map_well_defined,
                    "oracle_found": report.oracle_found,
                    "moduli_f_vector": report.moduli_f_vector,
                    "sphere_f_vector": report.sphere_f_vector,
                    "mapping": report.mapping,
                }),
                text,
                dot: None,
                csv: None,
                verified: Some(verified),
                stem: format!("verify-kapranov-n{n}"),
            })
        }

        Command::Bijection { partition, cut } => {
            let p = parse_partition(partition);
            if p.0 + p.1 + p.2 == 0 {
                return Err("partition must place at least one free node".into());
            }
            let cut = match cut {
                CutArg::Zero => FixedNode::Zero,
                CutArg::One => FixedNode::One,
                CutArg::Infinity => FixedNode::Infinity,
            };
            let frame = CircleFrame::new(p);
            let ok = circle::verify_bijection(frame, cut);
            let cp = circle::circle_poset(frame);
            let counts = cp.poset.rank_counts();
            let n = frame.node_count() - 1;
            let types = count_product_types(n);
            let text = format!(
                "partition ({},{},{}): circle poset ranks {:?}\nbijection onto path bracketings: {}\nproduct types for K_{n}: {} enumerated, {} by the printed formula{}\n",
                p.0, p.1, p.2, counts,
                if ok { "verified" } else { "FAILED" },
                types.enumerated, types.formula,
                if types.agrees() { "" } else { " (formula disagrees with the census)" },
            );
            Ok(Report {
                text,
                json: json!({
                    "partition": [p.0, p.1, p.2],
                    "bijection_verified": ok,
                    "rank_counts": counts,
                    "product_types": { "enumerated": types.enumerated, "formula": types.formula },
                    "poset": circle::poset_json(&cp),
                }),
                dot: Some(circle::poset_dot(&cp)),
                csv: None,
                verified: Some(ok),
                stem: format!("bijection-{}-{}-{}", p.0, p.1, p.2),
            })
        }

        Command::Chambers { n, samples } => {
            if *n < 2 {
                return Err("need at least two particles".into());
            }
            let (stats, rows) =
                chambers::sample_chambers(*n, *samples, config.seed, config.epsilon, true);
            let text = format!(
                "{} samples at n = {n}: sum violations {}, norm violations {}, order mismatches {}\ndistinct projective chambers: {}\n",
                stats.samples,
                stats.sum_violations,
                stats.norm_violations,
                stats.order_mismatches,
                stats.distinct_projective_chambers
            );
            Ok(Report {
                text,
                json: json!({
                    "n": n,
                    "samples": stats.samples,
                    "sum_violations": stats.sum_violations,
                    "norm_violations": stats.norm_violations,
                    "order_mismatches": stats.order_mismatches,
                    "distinct_projective_chambers": stats.distinct_projective_chambers,
                }),
                dot: None,
                csv: Some(chambers::sample_csv(&rows)),
                verified: Some(stats.all_clean()),
                stem: format!("chambers-n{n}"),
            })
        }
    }
}
