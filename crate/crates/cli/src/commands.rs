use std::env;
use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use serde::Serialize;
use serde_json::json;

use closurelab::actions::{
    imprimitive_wreath, orbits_on_partitions, orbits_on_tuples, product_action_direct,
    product_action_wreath,
};
use closurelab::catalog::catalog;
use closurelab::closures::closure_chain;
use closurelab::verifier::{
    run_suite, scan_orbit_equivalent_overgroups, verify_direct_product, verify_theorem1,
    verify_theorem2, verify_theorem3, GridSpec, SuiteSummary, TheoremId, TheoremReport,
};
use closurelab::{
    m_closure, partition_closure, ClosureKind, Config, Error, Exec, GroupSpec, PermGroup, Result,
};

use crate::{ChainKind, Cli, Command, GroupArgs, ProductArgs, ProductKind};

const ENV_ELEMS: &str = "CLOSURELAB_BUDGET_ELEMS";
const ENV_SECS: &str = "CLOSURELAB_BUDGET_SECS";
const ENV_CACHE: &str = "CLOSURELAB_CACHE";

fn env_secs() -> Result<Option<f64>> {
    match env::var(ENV_SECS) {
        Ok(v) => v
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|s| s.is_finite() && *s > 0.0)
            .map(Some)
            .ok_or_else(|| {
                Error::Parse(format!("{ENV_SECS} must be a positive number, got {v:?}"))
            }),
        Err(_) => Ok(None),
    }
}

fn config(cli: &Cli) -> Result<Config> {
    let mut cfg = Config::default();
    if cli.sequential {
        cfg.exec = Exec::Sequential;
    }
    if let Ok(v) = env::var(ENV_ELEMS) {
        cfg.budget.max_elements = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{ENV_ELEMS} must be an integer, got {v:?}")))?;
    }
    if let Ok(dir) = env::var(ENV_CACHE) {
        if !dir.is_empty() {
            let dir = PathBuf::from(dir);
            fs::create_dir_all(&dir)?;
            cfg.cache_dir = Some(dir);
        }
    }
    Ok(cfg)
}

/// Applies the wall-clock override to a single computation.
fn with_deadline(mut cfg: Config) -> Result<Config> {
    if let Some(secs) = env_secs()? {
        cfg.budget = cfg.budget.with_time_limit(Duration::from_secs_f64(secs));
    }
    Ok(cfg)
}

fn group(args: &GroupArgs, cfg: &Config) -> Result<(GroupSpec, PermGroup)> {
    let spec = GroupSpec::parse_with_degree(&args.group, args.degree)?;
    let g = spec.build(&cfg.budget)?;
    Ok((spec, g))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output serializes")
    );
}

fn generators_text(g: &PermGroup) -> String {
    if g.generators().is_empty() {
        "()".to_owned()
    } else {
        g.generators()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn run(cli: &Cli) -> Result<u8> {
    let cfg = config(cli)?;
    match &cli.command {
        Command::Orbits(a) => orbits(cli, &with_deadline(cfg)?, a),
        Command::Closure(a) => closure(cli, &with_deadline(cfg)?, a),
        Command::Chain(a) => chain(cli, &with_deadline(cfg)?, a),
        Command::Product(a) => product(cli, &with_deadline(cfg)?, a),
        Command::Verify(a) => verify(cli, cfg, a),
        Command::Explore(a) => explore(cli, &with_deadline(cfg)?, a),
    }
}

fn orbits(cli: &Cli, cfg: &Config, a: &crate::OrbitsArgs) -> Result<u8> {
    let (spec, g) = group(&a.group, cfg)?;
    let (objects, m, coloring) = match (a.tuples, a.partitions) {
        (Some(m), _) => ("tuples", m, orbits_on_tuples(&g, m, &cfg.budget)?),
        (None, Some(m)) => ("partitions", m, orbits_on_partitions(&g, m, &cfg.budget)?),
        (None, None) => unreachable!("clap requires one object kind"),
    };
    let mut orbits = Vec::with_capacity(coloring.orbit_count());
    for (i, &size) in coloring.orbit_sizes().iter().enumerate() {
        let representative = if objects == "tuples" {
            coloring.representative_tuple(i)?.to_string()
        } else {
            coloring.representative_partition(i)?.to_string()
        };
        let points: Option<Vec<u64>> = (objects == "tuples" && m == 1)
            .then(|| coloring.members(i as u32).iter().map(|&p| p + 1).collect());
        orbits.push((representative, size, points));
    }
    if cli.json {
        let list: Vec<_> = orbits
            .iter()
            .map(|(rep, size, points)| {
                let mut o = json!({ "representative": rep, "size": size });
                if let Some(p) = points {
                    o["points"] = json!(p);
                }
                o
            })
            .collect();
        print_json(&json!({
            "group": spec.label(),
            "degree": g.degree(),
            "objects": objects,
            "m": m,
            "orbit_count": coloring.orbit_count(),
            "orbits": list,
        }));
    } else {
        println!(
            "{} on {objects} (m={m}): {} orbits",
            spec.label(),
            coloring.orbit_count()
        );
        for (rep, size, points) in &orbits {
            match points {
                Some(p) => {
                    let set: Vec<String> = p.iter().map(ToString::to_string).collect();
                    println!("  {{{}}}", set.join(","));
                }
                None => println!("  {rep}  size {size}"),
            }
        }
    }
    Ok(0)
}

fn closure(cli: &Cli, cfg: &Config, a: &crate::ClosureArgs) -> Result<u8> {
    let (spec, g) = group(&a.group, cfg)?;
    let result = match (a.m, a.partition) {
        (Some(m), _) => m_closure(&g, m, cfg)?,
        (None, Some(m)) => partition_closure(&g, m, cfg)?,
        (None, None) => unreachable!("clap requires one closure kind"),
    };
    if cli.json {
        let mut value = serde_json::to_value(result.record(cli.timings))?;
        value["group"] = json!(spec.label());
        print_json(&value);
    } else {
        let sym = match result.kind {
            ClosureKind::PointTuple => format!("({})", result.m),
            ClosureKind::Partition => format!("[{}]", result.m),
        };
        println!("{}^{sym}: order {}", spec.label(), result.closure.order());
        println!("generators: {}", generators_text(&result.closure));
        println!("stabilized: {}", result.stabilized);
    }
    Ok(0)
}

fn chain(cli: &Cli, cfg: &Config, a: &crate::ChainArgs) -> Result<u8> {
    let (spec, g) = group(&a.group, cfg)?;
    let kind = match a.kind {
        ChainKind::Tuple => ClosureKind::PointTuple,
        ChainKind::Partition => ClosureKind::Partition,
    };
    let report = closure_chain(&g, kind, a.max_m, cfg)?;
    if cli.json {
        println!("{}", report.to_json(cli.timings));
    } else {
        let orders: Vec<String> = report.orders().iter().map(ToString::to_string).collect();
        println!(
            "{} {} chain orders: {}",
            spec.label(),
            kind.as_str(),
            orders.join(" ")
        );
        match report.stabilization_index {
            Some(m) => println!("stabilizes at m={m}"),
            None => println!("not stabilized up to m={}", report.results.len()),
        }
        if let Some(e) = &report.error {
            println!("truncated: {e}");
        }
    }
    Ok(if report.truncated { 3 } else { 0 })
}

fn product(cli: &Cli, cfg: &Config, a: &ProductArgs) -> Result<u8> {
    let k_spec: GroupSpec = a.k.parse()?;
    let l_spec: GroupSpec = a.l.parse()?;
    let k = k_spec.build(&cfg.budget)?;
    let l = l_spec.build(&cfg.budget)?;
    let (name, g) = match a.kind {
        ProductKind::WreathProductAction => (
            "wreath-product-action",
            product_action_wreath(&k, &l, &cfg.budget)?,
        ),
        ProductKind::Direct => ("direct", product_action_direct(&k, &l, &cfg.budget)?),
        ProductKind::WreathImprimitive => (
            "wreath-imprimitive",
            imprimitive_wreath(&k, &l, &cfg.budget)?,
        ),
    };
    if cli.json {
        let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
        print_json(&json!({
            "kind": name,
            "k": k_spec.label(),
            "l": l_spec.label(),
            "degree": g.degree(),
            "order": g.order(),
            "generators": gens,
            "digest": g.digest(),
        }));
    } else {
        println!(
            "{name} of {} and {}: degree {}, order {}",
            k_spec.label(),
            l_spec.label(),
            g.degree(),
            g.order()
        );
        println!("generators: {}", generators_text(&g));
    }
    Ok(0)
}

fn print_report(cli: &Cli, r: &TheoremReport) {
    if cli.json {
        println!("{}", r.to_json_line(cli.timings));
        return;
    }
    let q = &r.quantities;
    let mut line = format!(
        "{} K={} L={} m={}: {}",
        r.theorem,
        r.instance.k,
        r.instance.l,
        r.instance.m,
        r.verdict.as_str()
    );
    if let (Some(lhs), Some(rhs)) = (q.lhs_order, q.rhs_order) {
        line += &format!(" (lhs {lhs}, rhs {rhs}");
        if let Some(k) = q.k {
            line += &format!(", k={k}");
        }
        line += ")";
    }
    if let Some(note) = &r.note {
        line += &format!(" [{note}]");
    }
    if !r.passed {
        line += " FAILED";
    }
    println!("{line}");
}

fn exit_for(summary: &SuiteSummary) -> u8 {
    if summary.failed > 0 {
        1
    } else if summary.budget_exceeded > 0 {
        3
    } else {
        0
    }
}

fn verify(cli: &Cli, cfg: Config, a: &crate::VerifyArgs) -> Result<u8> {
    let reports = if let Some(path) = &a.suite {
        let text = fs::read_to_string(path)?;
        let mut grid: GridSpec = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        if let Some(secs) = env_secs()? {
            grid.time_budget_s = secs;
        }
        run_suite(&grid, &cfg)?
    } else {
        let (Some(t), Some(k), Some(l), Some(m)) = (&a.theorem, &a.k, &a.l, a.m) else {
            return Err(Error::Parse(
                "verify needs --suite or all of --theorem, --k, --l, --m".into(),
            ));
        };
        let theorem: TheoremId = t.parse()?;
        let k: GroupSpec = k.parse()?;
        let l: GroupSpec = l.parse()?;
        let cfg = with_deadline(cfg)?;
        let verify = match theorem {
            TheoremId::Theorem1 => verify_theorem1,
            TheoremId::Theorem2 => verify_theorem2,
            TheoremId::Theorem3 => verify_theorem3,
            TheoremId::DirectProduct => verify_direct_product,
        };
        vec![verify(&k, &l, m, &cfg)?]
    };
    for r in &reports {
        print_report(cli, r);
    }
    let summary = SuiteSummary::of(&reports);
    if !cli.json && a.suite.is_some() {
        println!(
            "{} instances: {} passed, {} not applicable, {} failed, {} over budget, {} exceptional",
            summary.total,
            summary.passed,
            summary.not_applicable,
            summary.failed,
            summary.budget_exceeded,
            summary.exceptions
        );
    }
    Ok(exit_for(&summary))
}

fn explore(cli: &Cli, cfg: &Config, a: &crate::ExploreArgs) -> Result<u8> {
    let entries = catalog(a.max_degree);
    let hits = scan_orbit_equivalent_overgroups(&entries, cfg);
    if cli.json {
        for h in &hits {
            print_json(h);
        }
    } else {
        println!(
            "{} catalog groups scanned, {} hits",
            entries.len(),
            hits.len()
        );
        for h in &hits {
            println!(
                "  {}: order {}, 2-partition closure order {}",
                h.group, h.order, h.partition_closure_order
            );
        }
    }
    Ok(0)
}
