use std::path::Path;

use serde_json::json;
use sfc_core::curves::{patch_order, MAX_ORDER};
use sfc_core::io::{csv_writer, read_sequence_csv, write_sequence_csv};
use sfc_core::io::{decode_pgm, encode_p5};
use sfc_core::metrics::{
    degrid_with, dilation, hierarchy_check, log_thresholds, preservation_table, scale_trace,
    write_sweep_csv, DistanceForm,
};
use sfc_core::toyset::{dtw_table, dtw_with, generate_shape, ShapeSpec};
use sfc_core::{build_map, flatten, fold, CurveMap};

use crate::args::*;
use crate::output::{create_dir, emit, json_bytes, read_file, write_atomic};
use crate::{lib_err, Failure};

/// Largest `--order` accepted for materialized grids (4096 x 4096).
const MAX_GRID_ORDER: u32 = 12;

fn check_format(cmd: &str, format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        return Ok(());
    }
    let names: Vec<String> = allowed.iter().map(|f| format_name(*f).to_owned()).collect();
    Err(Failure::Usage(format!(
        "--format {} is not valid for `{cmd}`; expected {}",
        format_name(format),
        names.join(" or ")
    )))
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Csv => "csv",
        Format::Json => "json",
        Format::Pgm => "pgm",
    }
}

fn dims(
    order: Option<u32>,
    width: Option<u32>,
    height: Option<u32>,
) -> Result<(u32, u32), Failure> {
    match (order, width, height) {
        (Some(n), _, _) => {
            if !(1..=MAX_GRID_ORDER).contains(&n) {
                return Err(Failure::Usage(format!(
                    "--order must be in 1..={MAX_GRID_ORDER}, got {n}"
                )));
            }
            Ok((1 << n, 1 << n))
        }
        (None, Some(w), Some(h)) => Ok((w, h)),
        _ => Err(Failure::Usage(
            "grid size missing: pass --order N or --width W --height H".into(),
        )),
    }
}

fn grid_map(grid: &GridArgs) -> Result<CurveMap, Failure> {
    let (w, h) = dims(grid.order, grid.width, grid.height)?;
    build_map(grid.curve, w, h).map_err(lib_err)
}

fn csv_bytes(f: impl FnOnce(&mut Vec<u8>) -> sfc_core::Result<()>) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    f(&mut buf).map_err(lib_err)?;
    Ok(buf)
}

fn form(squared: bool) -> DistanceForm {
    if squared {
        DistanceForm::Squared
    } else {
        DistanceForm::Euclidean
    }
}

pub fn map(a: &MapArgs) -> Result<(), Failure> {
    check_format("map", a.format, &[Format::Csv])?;
    let m = grid_map(&a.grid)?;
    let bytes = csv_bytes(|b| m.write_csv(b))?;
    emit(
        a.out.out.as_deref(),
        &bytes,
        json!({"command": "map", "curve": m.kind(), "width": m.width(), "height": m.height(), "cells": m.len()}),
    )
}

pub fn flatten_cmd(a: &FlattenArgs) -> Result<(), Failure> {
    check_format("flatten", a.format, &[Format::Csv])?;
    let image = decode_pgm(&read_file(&a.input)?)
        .and_then(|p| p.to_gray_image())
        .map_err(lib_err)?;
    let m = build_map(a.curve, image.width(), image.height()).map_err(lib_err)?;
    let seq = flatten(&image, &m).map_err(lib_err)?;
    let bytes = csv_bytes(|b| write_sequence_csv(b, &seq))?;
    emit(
        a.out.out.as_deref(),
        &bytes,
        json!({"command": "flatten", "curve": m.kind(), "width": m.width(), "height": m.height(), "length": seq.len()}),
    )
}

pub fn fold_cmd(a: &FoldArgs) -> Result<(), Failure> {
    check_format("fold", a.format, &[Format::Pgm])?;
    let m = grid_map(&a.grid)?;
    let seq = read_sequence_csv(read_file(&a.input)?.as_slice()).map_err(lib_err)?;
    let image = fold(&seq, &m).map_err(lib_err)?;
    emit(
        Some(&a.out),
        &encode_p5(&image),
        json!({"command": "fold", "curve": m.kind(), "width": m.width(), "height": m.height()}),
    )
}

pub fn patch_order_cmd(a: &PatchOrderArgs) -> Result<(), Failure> {
    check_format("patch-order", a.format, &[Format::Csv])?;
    let (w, h) = dims(a.order, a.width, a.height)?;
    let perm = patch_order(w, h).map_err(lib_err)?;
    let bytes = csv_bytes(|b| {
        let mut wtr = csv_writer(b);
        wtr.write_record(["slot", "raster_index"])?;
        for (slot, r) in perm.iter().enumerate() {
            wtr.write_record([slot.to_string(), r.to_string()])?;
        }
        wtr.flush()?;
        Ok(())
    })?;
    emit(
        a.out.out.as_deref(),
        &bytes,
        json!({"command": "patch-order", "width": w, "height": h, "patches": perm.len()}),
    )
}

pub fn degrid_cmd(a: &DegridArgs) -> Result<(), Failure> {
    check_format("degrid", a.format, &[Format::Csv, Format::Pgm])?;
    let m = grid_map(&a.grid)?;
    let field = degrid_with(&m, a.k, form(a.squared)).map_err(lib_err)?;
    let bytes = match a.format {
        Format::Pgm => field.heatmap(&m).map_err(lib_err)?,
        _ => csv_bytes(|b| field.write_csv(&m, b))?,
    };
    emit(
        a.out.out.as_deref(),
        &bytes,
        json!({
            "command": "degrid", "curve": m.kind(), "width": m.width(), "height": m.height(),
            "k": a.k, "form": field.form, "min": field.min(), "max": field.max(),
        }),
    )
}

pub fn preserve(a: &PreserveArgs) -> Result<(), Failure> {
    check_format("preserve", a.format, &[Format::Csv])?;
    if !(1..=MAX_GRID_ORDER).contains(&a.order) {
        return Err(Failure::Usage(format!(
            "--order must be in 1..={MAX_GRID_ORDER}, got {}",
            a.order
        )));
    }
    let thresholds = match (a.eps_min, a.eps_max) {
        (Some(lo), Some(hi)) => Some(
            log_thresholds(lo, hi, a.eps_steps)
                .map_err(|e| Failure::Usage(format!("--eps-min/--eps-max/--eps-steps: {e}")))?,
        ),
        _ => None,
    };
    let rows = preservation_table(a.order, a.k, form(a.squared), thresholds.as_deref())
        .map_err(lib_err)?;
    let bytes = csv_bytes(|b| write_sweep_csv(&rows, b))?;
    emit(
        a.out.out.as_deref(),
        &bytes,
        json!({"command": "preserve", "order": a.order, "k": a.k, "rows": rows.len()}),
    )
}

pub fn dilation_cmd(a: &DilationArgs) -> Result<(), Failure> {
    check_format("dilation", a.format, &[Format::Json])?;
    let m = grid_map(&a.grid)?;
    let report = dilation(&m, a.mode).map_err(lib_err)?;
    emit(
        a.out.out.as_deref(),
        &json_bytes(&report)?,
        json!({"command": "dilation", "curve": report.kind, "order": report.order, "empirical_max": report.empirical_max}),
    )
}

pub fn scale_trace_cmd(a: &ScaleTraceArgs) -> Result<(), Failure> {
    check_format("scale-trace", a.format, &[Format::Json])?;
    if a.n_max > MAX_ORDER {
        return Err(Failure::Usage(format!(
            "--n-max must be <= {MAX_ORDER}, got {}",
            a.n_max
        )));
    }
    let trace = scale_trace(a.curve, a.t1, a.t2, a.n_min, a.n_max).map_err(lib_err)?;
    emit(
        a.out.out.as_deref(),
        &json_bytes(&trace)?,
        json!({"command": "scale-trace", "curve": trace.kind, "orders": trace.orders.len(), "last_ratio": trace.last_ratio()}),
    )
}

pub fn hierarchy_cmd(a: &HierarchyArgs) -> Result<(), Failure> {
    check_format("hierarchy", a.format, &[Format::Json])?;
    let violations = hierarchy_check(a.curve, a.order).map_err(lib_err)?;
    let body = json!({"kind": a.curve, "order": a.order, "violations": violations});
    emit(
        a.out.out.as_deref(),
        &json_bytes(&body)?,
        json!({"command": "hierarchy", "curve": a.curve, "order": a.order, "violations": violations}),
    )
}

/// Renders the selected shapes into `dir`, returning the file names written.
pub fn write_toyset(
    dir: &Path,
    shapes: &[sfc_core::toyset::Shape],
) -> Result<Vec<String>, Failure> {
    create_dir(dir)?;
    let mut names = Vec::new();
    for spec in ShapeSpec::all()
        .into_iter()
        .filter(|s| shapes.contains(&s.shape))
    {
        let name = spec.file_name();
        write_atomic(&dir.join(&name), &encode_p5(&generate_shape(spec)))?;
        names.push(name);
    }
    Ok(names)
}

pub fn toyset(a: &ToysetArgs) -> Result<(), Failure> {
    check_format("toyset", a.format, &[Format::Pgm])?;
    let names = write_toyset(&a.out, &a.shapes)?;
    println!(
        "{}",
        json!({"command": "toyset", "output": a.out.display().to_string(), "files": names})
    );
    Ok(())
}

pub fn dtw_cmd(a: &DtwArgs) -> Result<(), Failure> {
    check_format("dtw", a.format, &[Format::Json])?;
    let sa = read_sequence_csv(read_file(&a.a)?.as_slice()).map_err(lib_err)?;
    let sb = read_sequence_csv(read_file(&a.b)?.as_slice()).map_err(lib_err)?;
    let cost = dtw_with(&sa, &sb, a.normalize).map_err(lib_err)?;
    let body =
        json!({"cost": cost, "normalize": a.normalize, "len_a": sa.len(), "len_b": sb.len()});
    emit(
        a.out.out.as_deref(),
        &json_bytes(&body)?,
        json!({"command": "dtw", "cost": cost}),
    )
}

pub fn dtw_table_cmd(a: &DtwTableArgs) -> Result<(), Failure> {
    check_format("dtw-table", a.format, &[Format::Csv, Format::Json])?;
    let table = dtw_table(&a.curve, &a.shapes, a.normalize).map_err(lib_err)?;
    let bytes = match a.format {
        Format::Json => json_bytes(&table)?,
        _ => csv_bytes(|b| table.write_csv(b))?,
    };
    emit(
        a.out.out.as_deref(),
        &bytes,
        json!({"command": "dtw-table", "normalize": a.normalize, "cells": table.results.len()}),
    )
}
