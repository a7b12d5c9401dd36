//! Text and JSON rendering for analyses and verification reports. JSON
//! objects serialize with sorted keys; witnesses are sorted label lists.

use matroid_core::connectivity::{
    connectivities_in, is_k_connected_in, is_minimally_vertically_k_connected,
};
use matroid_core::verify::{witness_small_cocircuit, SmallCocircuitWitness};
use matroid_core::{LinearMatroid, Outcome, SubsetMask, VerificationReport};
use serde_json::{json, Value};

pub fn labels_sorted(m: &LinearMatroid, mask: SubsetMask) -> Vec<String> {
    let mut labels: Vec<String> = mask.elements().map(|e| m.label(e).to_string()).collect();
    labels.sort();
    labels
}

fn label_set(m: &LinearMatroid, mask: SubsetMask) -> String {
    format!("{{{}}}", labels_sorted(m, mask).join(","))
}

struct Analysis {
    circuits: [usize; 4],
    cocircuits: [usize; 6],
    vertical: String,
    tutte: String,
    minimally_4: bool,
    minimally_vertical_4: bool,
    witness: Option<SmallCocircuitWitness>,
}

fn analyze(m: &LinearMatroid) -> Analysis {
    let mut circuits = [0usize; 4];
    for c in m.circuits_up_to(4).iter() {
        circuits[c.len() - 1] += 1;
    }
    let mut cocircuits = [0usize; 6];
    for (i, slot) in cocircuits.iter_mut().enumerate() {
        *slot = m.cocircuits_of_size(i + 1).len();
    }
    let full = m.full_mask().bits();
    let (vertical, tutte) = connectivities_in(m, full);
    let minimally_4 = is_k_connected_in(m, full, 4)
        && (0..m.n()).all(|e| !is_k_connected_in(m, full & !(1 << e), 4));
    Analysis {
        circuits,
        cocircuits,
        vertical: vertical.to_string(),
        tutte: tutte.to_string(),
        minimally_4,
        minimally_vertical_4: is_minimally_vertically_k_connected(m, 4),
        witness: witness_small_cocircuit(m),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analyze_text(m: &LinearMatroid) -> String {
    let a = analyze(m);
    let mut out = String::new();
    out.push_str(&format!("name: {}\n", m.name()));
    out.push_str(&format!("field: GF({})\n", m.field()));
    out.push_str(&format!("elements: {}\n", m.n()));
    out.push_str(&format!("rank: {}\n", m.full_rank()));
    out.push_str(&format!("simple: {}\n", yes_no(m.is_simple())));
    out.push_str(&format!("uniform: {}\n", yes_no(m.is_uniform())));
    let circ: Vec<String> = (1..=4).map(|k| format!("{k}:{}", a.circuits[k - 1])).collect();
    out.push_str(&format!("circuits by size: {}\n", circ.join(" ")));
    let cocirc: Vec<String> = (1..=6)
        .map(|k| format!("{k}:{}", a.cocircuits[k - 1]))
        .collect();
    out.push_str(&format!("cocircuits by size: {}\n", cocirc.join(" ")));
    out.push_str(&format!("vertical connectivity: {}\n", a.vertical));
    out.push_str(&format!("tutte connectivity: {}\n", a.tutte));
    out.push_str(&format!("minimally 4-connected: {}\n", yes_no(a.minimally_4)));
    out.push_str(&format!(
        "minimally vertically 4-connected: {}\n",
        yes_no(a.minimally_vertical_4)
    ));
    let witness = match &a.witness {
        None => "none".to_string(),
        Some(SmallCocircuitWitness::FourCocircuit(c)) => {
            format!("4-cocircuit {}", label_set(m, *c))
        }
        Some(SmallCocircuitWitness::FiveCocircuitWithTriangle { cocircuit, triangle }) => {
            format!(
                "5-cocircuit {} containing triangle {}",
                label_set(m, *cocircuit),
                label_set(m, *triangle)
            )
        }
    };
    out.push_str(&format!("small cocircuit witness: {witness}\n"));
    out
}

pub fn analyze_json(m: &LinearMatroid) -> Value {
    let a = analyze(m);
    let by_size = |counts: &[usize]| -> Value {
        let mut map = serde_json::Map::new();
        for (i, &c) in counts.iter().enumerate() {
            map.insert((i + 1).to_string(), json!(c));
        }
        Value::Object(map)
    };
    let witness = match &a.witness {
        None => Value::Null,
        Some(SmallCocircuitWitness::FourCocircuit(c)) => json!({
            "kind": "four_cocircuit",
            "cocircuit": labels_sorted(m, *c),
        }),
        Some(SmallCocircuitWitness::FiveCocircuitWithTriangle { cocircuit, triangle }) => json!({
            "kind": "five_cocircuit_with_triangle",
            "cocircuit": labels_sorted(m, *cocircuit),
            "triangle": labels_sorted(m, *triangle),
        }),
    };
    json!({
        "name": m.name(),
        "field": m.field(),
        "elements": m.n(),
        "rank": m.full_rank(),
        "simple": m.is_simple(),
        "uniform": m.is_uniform(),
        "circuits_by_size": by_size(&a.circuits),
        "cocircuits_by_size": by_size(&a.cocircuits),
        "vertical_connectivity": a.vertical,
        "tutte_connectivity": a.tutte,
        "minimally_4_connected": a.minimally_4,
        "minimally_vertically_4_connected": a.minimally_vertical_4,
        "small_cocircuit_witness": witness,
    })
}

pub fn report_status(r: &VerificationReport) -> &'static str {
    match &r.outcome {
        Outcome::Satisfied { .. } if r.is_vacuous() => "vacuous",
        Outcome::Satisfied { .. } => "satisfied",
        Outcome::HypothesisFailure { .. } => "hypothesis failure",
        Outcome::Violation { .. } => "VIOLATION",
    }
}

pub fn report_text(m: &LinearMatroid, r: &VerificationReport) -> String {
    let body = match &r.outcome {
        Outcome::Satisfied { .. } if r.is_vacuous() => "vacuous (no qualifying instances)".to_string(),
        Outcome::Satisfied { clause, witnesses, instances } => {
            let w = if witnesses.is_empty() {
                String::new()
            } else {
                let sets: Vec<String> = witnesses.iter().map(|&x| label_set(m, x)).collect();
                format!(" witnesses {}", sets.join(" "))
            };
            format!("satisfied ({clause}){w} instances={instances}")
        }
        Outcome::HypothesisFailure { failed } => {
            format!("hypothesis failure ({})", failed.join("; "))
        }
        Outcome::Violation { detail, witnesses } => {
            let w = if witnesses.is_empty() {
                String::new()
            } else {
                let sets: Vec<String> = witnesses.iter().map(|&x| label_set(m, x)).collect();
                format!(" witnesses {}", sets.join(" "))
            };
            format!("VIOLATION: {detail}{w}")
        }
    };
    format!("[{}] {}: {body}", r.theorem, r.matroid)
}

pub fn report_json(m: &LinearMatroid, r: &VerificationReport) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("theorem".into(), json!(r.theorem));
    map.insert("matroid".into(), json!(r.matroid));
    map.insert(
        "status".into(),
        json!(match report_status(r) {
            "VIOLATION" => "violation",
            "hypothesis failure" => "hypothesis_failure",
            s => s,
        }),
    );
    map.insert("elapsed_ms".into(), json!(r.elapsed.as_secs_f64() * 1000.0));
    match &r.outcome {
        Outcome::Satisfied { clause, witnesses, instances } => {
            map.insert("clause".into(), json!(clause));
            map.insert(
                "witnesses".into(),
                json!(witnesses.iter().map(|&x| labels_sorted(m, x)).collect::<Vec<_>>()),
            );
            map.insert("instances".into(), json!(instances));
        }
        Outcome::HypothesisFailure { failed } => {
            map.insert("failed_hypotheses".into(), json!(failed));
        }
        Outcome::Violation { detail, witnesses } => {
            map.insert("detail".into(), json!(detail));
            map.insert(
                "witnesses".into(),
                json!(witnesses.iter().map(|&x| labels_sorted(m, x)).collect::<Vec<_>>()),
            );
        }
    }
    Value::Object(map)
}
