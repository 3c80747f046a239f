use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use serde_json::{json, Value};
use stabdis_core::disjointness::{
    c_disjoint_collection, code_disjointness, delta_star, verify_collection, witness_c, DisjointCollection,
};
use stabdis_core::families::{check_prop4, check_prop5, concatenate, hypergraph_product, Prop5Status};
use stabdis_core::hierarchy::{level_bound, transversal_level_certificate, OmegaOptions};
use stabdis_core::logical::distance_report;
use stabdis_core::pauli::{logical_basis, ClassLabel, LogicalBasis, LogicalClass, StabilizerCode};
use stabdis_core::reduction::{
    build_graph_code_with_cap, double_graph, verify_lemma3, DEFAULT_QUBIT_CAP,
};
use stabdis_core::{rational_to_json, rational_to_text, Error, Rational};

use crate::input::{
    env_cap, in_file, load_code, load_collection, load_graph, load_matrix, parse_operator, write_file,
    OMEGA_CAP_VAR, QUBIT_CAP_VAR,
};
use crate::{Command, Failure};

pub struct Report {
    pub json: Value,
    pub text: String,
    /// False when a verification came out negative.
    pub holds: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            holds: true,
        }
    }
}

fn j(r: &Rational) -> Value {
    Value::String(rational_to_json(r))
}

fn t(r: &Rational) -> String {
    rational_to_text(r)
}

fn opt_j(r: &Option<Rational>) -> Value {
    r.as_ref().map_or(Value::Null, j)
}

fn opt_t(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "unbounded".to_string(), t)
}

pub fn run(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Validate { file } => validate(file),
        Command::Logicals { file } => logicals(file),
        Command::Distance { file } => distance(file),
        Command::Disjointness { file, class, c } => disjointness(file, class.as_deref(), *c),
        Command::CodeDisjointness { file } => whole_code_disjointness(file),
        Command::Bound { file } => bound(file),
        Command::Omega { file, m, prune } => omega(file, *m as usize, *prune),
        Command::Reduce {
            graph,
            c,
            double,
            labels,
        } => reduce(graph, *c, *double, labels.as_deref()),
        Command::Concat { outer, inner, check } => concat(outer, inner, *check),
        Command::Hgp { h1, h2, check } => hgp(h1, h2, *check),
        Command::VerifyLemma3 { graph, c } => lemma3(graph, *c),
        Command::VerifyCollection {
            file,
            class,
            c,
            collection,
            at_least,
        } => collection_check(file, class, *c, collection, *at_least),
    }
}

fn validate(file: &Path) -> Result<Report, Failure> {
    let code = load_code(file)?;
    Ok(Report::ok(
        json!({"valid": true, "n": code.n(), "k": code.k(), "checks": code.num_generators()}),
        format!(
            "valid [[{}, {}]] stabilizer code with {} independent checks\n",
            code.n(),
            code.k(),
            code.num_generators()
        ),
    ))
}

fn logicals(file: &Path) -> Result<Report, Failure> {
    let code = load_code(file)?;
    let basis = logical_basis(&code);
    let mut text = String::new();
    for (i, (x, z)) in basis.x_ops.iter().zip(&basis.z_ops).enumerate() {
        writeln!(text, "X{} {x}\nZ{} {z}", i + 1, i + 1).unwrap();
    }
    Ok(Report::ok(json!({"x": basis.x_ops, "z": basis.z_ops}), text))
}

fn distance(file: &Path) -> Result<Report, Failure> {
    let code = load_code(file)?;
    let r = distance_report(&code, &logical_basis(&code)).map_err(in_file(file))?;
    let mut text = format!("d_min {}\nd_max {}\n", r.d_min, r.d_max);
    for (label, d) in &r.per_class {
        writeln!(text, "class {label} distance {d}").unwrap();
    }
    Ok(Report::ok(
        json!({"d_min": r.d_min, "d_max": r.d_max, "per_class": r.per_class}),
        text,
    ))
}

fn selected_classes<'a>(
    code: &'a StabilizerCode,
    basis: &LogicalBasis,
    class: Option<&str>,
) -> Result<Vec<LogicalClass<'a>>, Failure> {
    match class {
        Some(s) => {
            let rep = parse_operator(s, code.n())?;
            let cls = LogicalClass::try_new(code, rep).map_err(|e| Failure::from_error(e.into()).context(s))?;
            if cls.is_trivial() {
                return Err(Failure::from_error(Error::TrivialClass).context(s));
            }
            Ok(vec![cls])
        }
        None => {
            if code.k() == 0 {
                return Err(Error::NoLogicalQubits.into());
            }
            Ok(ClassLabel::nontrivial(code.k()).map(|l| code.class(basis, l)).collect())
        }
    }
}

fn disjointness(file: &Path, class: Option<&str>, c: Option<u64>) -> Result<Report, Failure> {
    let code = load_code(file)?;
    let basis = logical_basis(&code);
    let classes = selected_classes(&code, &basis, class)?;
    let mut entries = Vec::new();
    let mut text = String::new();
    for cls in &classes {
        let label = basis.label_of(cls.rep());
        let star = delta_star(cls).map_err(in_file(file))?;
        let c_star = witness_c(&star.solution).map_err(in_file(file))?;
        let mut entry = json!({
            "class": label,
            "representative": cls.rep(),
            "delta_star": j(&star.value),
            "c_star": c_star,
        });
        write!(text, "class {label} ({}) delta* {} c* {c_star}", cls.rep(), t(&star.value)).unwrap();
        if let Some(c) = c {
            let (value, col) = c_disjoint_collection(cls, c).map_err(in_file(file))?;
            entry["c"] = json!(c);
            entry["delta_c"] = j(&value);
            entry["collection"] = json!(col.members);
            write!(text, " delta_{c} {}", t(&value)).unwrap();
            for m in &col.members {
                write!(text, "\n  {m}").unwrap();
            }
        }
        text.push('\n');
        entries.push(entry);
    }
    Ok(Report::ok(json!({ "classes": entries }), text))
}

fn whole_code_disjointness(file: &Path) -> Result<Report, Failure> {
    let code = load_code(file)?;
    let r = code_disjointness(&code, &logical_basis(&code)).map_err(in_file(file))?;
    let mut text = format!("disjointness {}\nminimizing classes {}\n", t(&r.code_delta), r.argmin_classes.len());
    for l in &r.argmin_classes {
        writeln!(text, "  {l}").unwrap();
    }
    for (l, v) in &r.per_class {
        writeln!(text, "class {l} delta* {} c* {}", t(&v.delta_star), v.c_star).unwrap();
    }
    Ok(Report::ok(serde_json::to_value(&r).expect("report serializes"), text))
}

fn bound(file: &Path) -> Result<Report, Failure> {
    let code = load_code(file)?;
    let basis = logical_basis(&code);
    let dist = distance_report(&code, &basis).map_err(in_file(file))?;
    let dis = code_disjointness(&code, &basis).map_err(in_file(file))?;
    let mut json = json!({
        "d_min": dist.d_min,
        "d_max": dist.d_max,
        "delta": j(&dis.code_delta),
    });
    let mut text = format!(
        "d_min {}\nd_max {}\ndisjointness {}\n",
        dist.d_min,
        dist.d_max,
        t(&dis.code_delta)
    );
    match level_bound(dist.d_min as u64, dist.d_max as u64, &dis.code_delta) {
        Ok(b) => {
            json["level"] = json!(b.m_max);
            writeln!(text, "transversal gates lie in level {}", b.m_max).unwrap();
        }
        Err(Error::BoundInapplicable(why)) => {
            json["level"] = Value::Null;
            json["inapplicable"] = json!(why);
            writeln!(text, "no level bound: {why}").unwrap();
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Report::ok(json, text))
}

fn omega(file: &Path, m: usize, prune: bool) -> Result<Report, Failure> {
    let code = load_code(file)?;
    let basis = logical_basis(&code);
    let options = OmegaOptions {
        prune,
        work_cap: env_cap::<u128>(OMEGA_CAP_VAR)?,
    };
    let cert = transversal_level_certificate(&code, &basis, m, &options).map_err(in_file(file))?;
    let mut text = format!("omega_{m} {}\nd_min {}\n", cert.omega.value, cert.d_down);
    for w in &cert.omega.witness {
        writeln!(text, "  class {} via {}", w.class, w.representative).unwrap();
    }
    writeln!(
        text,
        "{}",
        if cert.certified {
            format!("transversal gates lie in level {m}")
        } else {
            format!("no certificate for level {m}")
        }
    )
    .unwrap();
    Ok(Report::ok(serde_json::to_value(&cert).expect("report serializes"), text))
}

fn reduce(graph: &Path, c: u64, double: bool, labels: Option<&Path>) -> Result<Report, Failure> {
    let mut g = load_graph(graph)?;
    if double {
        g = double_graph(&g);
    }
    let cap = env_cap::<usize>(QUBIT_CAP_VAR)?.unwrap_or(DEFAULT_QUBIT_CAP);
    let gc = build_graph_code_with_cap(&g, c, cap).map_err(in_file(graph))?;
    if let Some(path) = labels {
        let map: BTreeMap<usize, _> = gc.labels.iter().enumerate().collect();
        let body = serde_json::to_string_pretty(&map).expect("labels serialize");
        write_file(&path.to_path_buf(), &(body + "\n"))?;
    }
    let text = format!("# logical {}\n{}", gc.logical_rep, gc.code.to_text());
    Ok(Report::ok(
        json!({
            "n": gc.n(),
            "k": gc.code.k(),
            "c": c,
            "checks": gc.code.generators(),
            "logical": gc.logical_rep,
        }),
        text,
    ))
}

fn concat(outer: &Path, inner: &Path, check: bool) -> Result<Report, Failure> {
    let s1 = load_code(outer)?;
    let s2 = load_code(inner)?;
    let b2 = logical_basis(&s2);
    if !check {
        let code = concatenate(&s1, &s2, &b2).map_err(in_file(inner))?;
        return Ok(Report::ok(
            json!({"n": code.n(), "k": code.k(), "checks": code.generators()}),
            code.to_text(),
        ));
    }
    let v = check_prop4(&s1, &s2, &b2)?;
    let opt = |x: Option<u64>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
    let text = format!(
        "outer disjointness {}\ninner disjointness {}\nconcatenated disjointness {}\nproduct bound {}\n\
         level bound {} (factors {})\nlevel check {}\n",
        t(&v.outer_delta),
        t(&v.inner_delta),
        t(&v.concatenated_delta),
        if v.product_holds { "holds" } else { "fails" },
        opt(v.concatenated_level),
        opt(v.m_max),
        if v.level_holds { "holds" } else { "fails" },
    );
    Ok(Report {
        holds: v.product_holds && v.level_holds,
        json: serde_json::to_value(&v).expect("verdict serializes"),
        text,
    })
}

fn hgp(h1: &Path, h2: &Path, check: bool) -> Result<Report, Failure> {
    let m1 = load_matrix(h1)?;
    let m2 = load_matrix(h2)?;
    if !check {
        let hp = hypergraph_product(&m1, &m2)?;
        let code = &hp.css.code;
        return Ok(Report::ok(
            json!({
                "n": code.n(),
                "k": code.k(),
                "removed_rows": hp.removed_rows,
                "checks": code.generators(),
            }),
            format!("# {} dependent rows removed\n{}", hp.removed_rows, code.to_text()),
        ));
    }
    let v = check_prop5(&m1, &m2)?;
    let status = match v.status {
        Prop5Status::Holds => "holds",
        Prop5Status::Violated => "fails",
        Prop5Status::Vacuous => "vacuous (no logical qubits)",
    };
    let text = format!(
        "[[{}, {}]] hypergraph product\ndisjointness {}\nX-type disjointness of H1 {}, of H2 {}\nbound {status}\n",
        v.n,
        v.k,
        v.delta.as_ref().map_or_else(|| "undefined".to_string(), t),
        opt_t(&v.delta_x1),
        opt_t(&v.delta_x2),
    );
    let mut json = serde_json::to_value(&v).expect("verdict serializes");
    json["bound"] = opt_j(&v.bound);
    Ok(Report {
        holds: v.status != Prop5Status::Violated,
        json,
        text,
    })
}

fn lemma3(graph: &Path, c: u64) -> Result<Report, Failure> {
    let g = load_graph(graph)?;
    let v = verify_lemma3(&g, c).map_err(in_file(graph))?;
    let mut text = format!(
        "alpha {}\nb {}\nc-disjointness {}\n(alpha + b)/c {}\n{}\n",
        v.alpha,
        v.b,
        t(&v.c_disjointness),
        t(&v.predicted),
        if v.holds { "equal" } else { "different" }
    );
    if !v.hypothesis_met {
        text.push_str("hypothesis not met (isolated vertex or 2 alpha < 9 c^3); comparison is informative only\n");
    }
    Ok(Report {
        holds: v.holds || !v.hypothesis_met,
        json: serde_json::to_value(&v).expect("verdict serializes"),
        text,
    })
}

fn collection_check(
    file: &Path,
    class: &str,
    c: u64,
    collection: &Path,
    at_least: Option<usize>,
) -> Result<Report, Failure> {
    let code = load_code(file)?;
    let basis = logical_basis(&code);
    let cls = selected_classes(&code, &basis, Some(class))?.remove(0);
    let members = load_collection(collection, code.n())?;
    let v = verify_collection(&DisjointCollection { members, c }, &cls);
    let holds = at_least.map_or(v.valid, |a| v.certifies(a));
    let mut text = format!(
        "{} {c}-disjoint collection of {} representatives\n",
        if v.valid { "valid" } else { "invalid" },
        v.size
    );
    for i in &v.non_representatives {
        writeln!(text, "member {i} does not represent the class").unwrap();
    }
    for (q, load) in &v.overloaded_qubits {
        writeln!(text, "qubit {q} covered {load} times").unwrap();
    }
    if let Some(a) = at_least {
        writeln!(text, "size at least {a}: {}", if v.size >= a { "yes" } else { "no" }).unwrap();
    }
    Ok(Report {
        holds,
        json: serde_json::to_value(&v).expect("verdict serializes"),
        text,
    })
}
