use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{dtw_with, generate_shape, Normalize, Scale, Shape, ShapeSpec};
use crate::curves::{build_map, flatten, CurveKind, CurveMap};
use crate::error::{domain, Result};

/// One column group of the DTW table: the two scale/resolution variants of
/// the same shape that get compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub left: (Scale, u32),
    pub right: (Scale, u32),
}

impl Comparison {
    pub fn label(&self) -> String {
        format!(
            "{}{}v{}{}",
            self.left.0.letter(),
            self.left.1,
            self.right.0.letter(),
            self.right.1
        )
    }

    pub fn specs(&self, shape: Shape) -> (ShapeSpec, ShapeSpec) {
        (
            ShapeSpec {
                shape,
                scale: self.left.0,
                resolution: self.left.1,
            },
            ShapeSpec {
                shape,
                scale: self.right.0,
                resolution: self.right.1,
            },
        )
    }
}

pub const COMPARISONS: [Comparison; 6] = [
    Comparison {
        left: (Scale::Large, 32),
        right: (Scale::Small, 32),
    },
    Comparison {
        left: (Scale::Large, 32),
        right: (Scale::Large, 64),
    },
    Comparison {
        left: (Scale::Large, 64),
        right: (Scale::Small, 64),
    },
    Comparison {
        left: (Scale::Large, 64),
        right: (Scale::Large, 128),
    },
    Comparison {
        left: (Scale::Large, 128),
        right: (Scale::Small, 128),
    },
    Comparison {
        left: (Scale::Large, 32),
        right: (Scale::Small, 128),
    },
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DtwResult {
    pub pair: (ShapeSpec, ShapeSpec),
    pub curve: CurveKind,
    pub cost: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DtwTable {
    pub shapes: Vec<Shape>,
    pub curves: Vec<CurveKind>,
    pub normalize: Normalize,
    /// Ordered shape-major, then comparison, then curve.
    pub results: Vec<DtwResult>,
}

impl DtwTable {
    pub fn cost(&self, shape: Shape, comparison: usize, curve: CurveKind) -> Option<f64> {
        let s = self.shapes.iter().position(|&x| x == shape)?;
        let c = self.curves.iter().position(|&x| x == curve)?;
        let idx = (s * COMPARISONS.len() + comparison) * self.curves.len() + c;
        self.results.get(idx).map(|r| r.cost)
    }

    /// Rows are shapes; columns are `<comparison>_<curve>` groups.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut wtr = crate::io::csv_writer(out);
        let mut header = vec!["shape".to_string()];
        for cmp in &COMPARISONS {
            for curve in &self.curves {
                header.push(format!("{}_{}", cmp.label(), curve.short_label()));
            }
        }
        wtr.write_record(&header)?;
        let per_shape = COMPARISONS.len() * self.curves.len();
        for (shape, chunk) in self.shapes.iter().zip(self.results.chunks(per_shape)) {
            let mut row = vec![shape.to_string()];
            row.extend(chunk.iter().map(|r| r.cost.to_string()));
            wtr.write_record(&row)?;
        }
        wtr.flush()?;
        Ok(())
    }
}

/// DTW cost between the two flattened images of every comparison, for every
/// shape and curve. Each image is flattened at its own resolution.
pub fn dtw_table(curves: &[CurveKind], shapes: &[Shape], normalize: Normalize) -> Result<DtwTable> {
    if curves.is_empty() || shapes.is_empty() {
        return Err(domain("DTW table needs at least one curve and one shape"));
    }

    let mut maps: BTreeMap<(CurveKind, u32), CurveMap> = BTreeMap::new();
    let mut sequences: BTreeMap<(ShapeSpec, CurveKind), Vec<f64>> = BTreeMap::new();
    for &shape in shapes {
        for cmp in &COMPARISONS {
            let (l, r) = cmp.specs(shape);
            for spec in [l, r] {
                let image = generate_shape(spec);
                for &curve in curves {
                    if sequences.contains_key(&(spec, curve)) {
                        continue;
                    }
                    let res = spec.resolution;
                    let map = match maps.entry((curve, res)) {
                        Entry::Occupied(e) => e.into_mut(),
                        Entry::Vacant(e) => e.insert(build_map(curve, res, res)?),
                    };
                    let seq = flatten(&image, map)?;
                    sequences.insert((spec, curve), seq);
                }
            }
        }
    }

    let jobs: Vec<(ShapeSpec, ShapeSpec, CurveKind)> = shapes
        .iter()
        .flat_map(|&shape| {
            COMPARISONS.iter().flat_map(move |cmp| {
                let (l, r) = cmp.specs(shape);
                curves.iter().map(move |&c| (l, r, c))
            })
        })
        .collect();

    let results = jobs
        .par_iter()
        .map(|&(l, r, curve)| {
            let cost = dtw_with(&sequences[&(l, curve)], &sequences[&(r, curve)], normalize)?;
            Ok(DtwResult {
                pair: (l, r),
                curve,
                cost,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(DtwTable {
        shapes: shapes.to_vec(),
        curves: curves.to_vec(),
        normalize,
        results,
    })
}
