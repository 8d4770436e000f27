//! The `report` pipeline: every table and figure input in one directory.
//!
//! Output is a pure function of the code, so two runs (at any thread count)
//! produce byte-identical trees.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::json;
use sfc_core::metrics::{
    degrid, dilation, hierarchy_check, preservation_table, scale_trace, write_sweep_csv,
    DilationMode, DistanceForm, Dyadic, ScaleTrace, MAX_ALL_PAIRS_ORDER,
};
use sfc_core::toyset::{dtw_table, Normalize, Shape};
use sfc_core::{CurveKind, CurveMap};

use crate::args::ReportArgs;
use crate::commands::write_toyset;
use crate::output::{create_dir, json_bytes, write_atomic};
use crate::{lib_err, Failure};

const DEGRID_ORDER: u32 = 3;
const DEGRID_K: usize = 2;
const DILATION_ORDERS: std::ops::RangeInclusive<u32> = 2..=6;
const HIERARCHY_ORDERS: std::ops::RangeInclusive<u32> = 1..=8;
const TRACE_PAIRS: [(&str, &str); 3] = [
    ("0", "1048575/1048576"),
    ("1/4", "3/4"),
    ("7/1024", "9/1024"),
];

#[derive(Serialize)]
struct RowBreak {
    order: u32,
    t1: Dyadic,
    t2: Dyadic,
    normalized: f64,
}

#[derive(Serialize)]
struct HierarchyRow {
    kind: CurveKind,
    order: u32,
    violations: u64,
}

pub fn default_dir() -> PathBuf {
    PathBuf::from(chrono::Local::now().format("report-%Y-%m-%d").to_string())
}

pub fn run(a: &ReportArgs) -> Result<(), Failure> {
    let dir = a.out.clone().unwrap_or_else(default_dir);
    create_dir(&dir)?;
    let mut files = Vec::new();
    let mut put = |name: &str, bytes: Vec<u8>| -> Result<(), Failure> {
        write_atomic(&dir.join(name), &bytes)?;
        files.push(name.to_owned());
        Ok(())
    };

    // preservation sweep
    let rows = preservation_table(DEGRID_ORDER, DEGRID_K, DistanceForm::Euclidean, None)
        .map_err(lib_err)?;
    let mut buf = Vec::new();
    write_sweep_csv(&rows, &mut buf).map_err(lib_err)?;
    put("preservation.csv", buf)?;

    // per-curve DeGrid fields and heatmaps
    for kind in CurveKind::SQUARE {
        let m = CurveMap::square(kind, DEGRID_ORDER).map_err(lib_err)?;
        let field = degrid(&m, DEGRID_K).map_err(lib_err)?;
        let mut csv = Vec::new();
        field.write_csv(&m, &mut csv).map_err(lib_err)?;
        let side = 1u32 << DEGRID_ORDER;
        put(&format!("degrid_{kind}_{side}x{side}.csv"), csv)?;
        put(
            &format!("degrid_{kind}_{side}x{side}.pgm"),
            field.heatmap(&m).map_err(lib_err)?,
        )?;
    }

    // dilation ladder
    let mut ladder = Vec::new();
    for kind in CurveKind::SQUARE {
        for n in DILATION_ORDERS {
            let mode = if n <= MAX_ALL_PAIRS_ORDER {
                DilationMode::AllPairs
            } else {
                DilationMode::Adjacent
            };
            let m = CurveMap::square(kind, n).map_err(lib_err)?;
            ladder.push(dilation(&m, mode).map_err(lib_err)?);
        }
    }
    put("dilation.json", json_bytes(&ladder)?)?;

    // scale traces
    let mut traces: Vec<ScaleTrace> = Vec::new();
    for (t1, t2) in TRACE_PAIRS {
        let t1: Dyadic = t1.parse().map_err(lib_err)?;
        let t2: Dyadic = t2.parse().map_err(lib_err)?;
        for kind in CurveKind::SQUARE {
            traces.push(scale_trace(kind, t1, t2, 1, 10).map_err(lib_err)?);
        }
    }
    let mut row_break = Vec::new();
    for n in 1..=10u32 {
        let den = 1u64 << (2 * n);
        let side = 1u64 << n;
        let t1 = Dyadic::new(side - 1, den).map_err(lib_err)?;
        let t2 = Dyadic::new(side, den).map_err(lib_err)?;
        let tr = scale_trace(CurveKind::Zigzag, t1, t2, n, n).map_err(lib_err)?;
        row_break.push(RowBreak {
            order: n,
            t1,
            t2,
            normalized: tr.normalized()[0],
        });
    }
    put(
        "scale_traces.json",
        json_bytes(&json!({"traces": traces, "zigzag_row_break": row_break}))?,
    )?;

    // hierarchy
    let mut hier = Vec::new();
    for kind in CurveKind::SQUARE {
        for n in HIERARCHY_ORDERS {
            hier.push(HierarchyRow {
                kind,
                order: n,
                violations: hierarchy_check(kind, n).map_err(lib_err)?,
            });
        }
    }
    put("hierarchy.json", json_bytes(&hier)?)?;

    // DTW table
    let table = dtw_table(&CurveKind::SQUARE, &Shape::ALL, Normalize::None).map_err(lib_err)?;
    let mut csv = Vec::new();
    table.write_csv(&mut csv).map_err(lib_err)?;
    put("dtw_table.csv", csv)?;

    let toys = write_toyset(&dir.join("toyset"), &Shape::ALL)?;
    files.extend(toys.into_iter().map(|n| format!("toyset/{n}")));

    println!("{}", summary(&dir, &files));
    Ok(())
}

fn summary(dir: &Path, files: &[String]) -> serde_json::Value {
    json!({"command": "report", "output": dir.display().to_string(), "files": files})
}
