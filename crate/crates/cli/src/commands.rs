//! Subcommand bodies. Each writes its outputs plus `manifest.txt`.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use templia::io::{self, CsvTable, Palette, RunManifest};
use templia::param::{self, C0Lattice, HybridMode};
use templia::raster::{self, BoxScales};
use templia::{escape_radius, ClassifiedRaster, ComplexPoint, Error, GridSpec, ParameterPair, SymbolicTemplate};

use crate::args::*;

/// Output directory plus the manifest that lists what was written.
struct Run {
    dir: PathBuf,
    manifest: RunManifest,
    started: Instant,
}

impl Run {
    fn new(command: &str, out: &OutArgs) -> Result<Self> {
        fs::create_dir_all(&out.out)
            .with_context(|| format!("creating output directory {}", out.out.display()))?;
        Ok(Self {
            dir: out.out.clone(),
            manifest: RunManifest::new(command),
            started: Instant::now(),
        })
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.join(name)
    }

    fn bytes(&mut self, name: &str, bytes: &[u8]) -> Result<()> {
        let path = self.path(name);
        io::write_bytes(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
        self.manifest.add_output(name);
        Ok(())
    }

    fn table(&mut self, name: &str, table: &CsvTable) -> Result<()> {
        let path = self.path(name);
        table.write(&path).with_context(|| format!("writing {}", path.display()))?;
        self.manifest.add_output(name);
        Ok(())
    }

    fn finish(mut self) -> Result<()> {
        self.manifest.set_wall_clock(self.started.elapsed().as_secs_f64());
        let path = self.path("manifest.txt");
        self.manifest
            .write(&path)
            .with_context(|| format!("writing {}", path.display()))?;
        log::info!("wrote {} outputs to {}", self.manifest.outputs().len(), self.dir.display());
        Ok(())
    }
}

fn palette(name: &str) -> Result<Palette> {
    Palette::by_name(name).ok_or_else(|| {
        let known: Vec<_> = Palette::ALL.iter().map(|p| p.name).collect();
        anyhow!(Error::InvalidArgument(format!(
            "unknown palette {name:?} (known: {})",
            known.join(", ")
        )))
    })
}

fn julia_grid(pair: &ParameterPair, raster: &RasterArgs) -> templia::Result<GridSpec> {
    raster.grid(2.0 * escape_radius(pair) + 0.2)
}

fn slice_grid(raster: &RasterArgs) -> templia::Result<GridSpec> {
    raster.grid(4.0)
}

fn record_raster(m: &mut RunManifest, raster: &RasterArgs, grid: &GridSpec) {
    m.set("template", &raster.template)
        .set("maxIter", raster.iters)
        .set_grid("grid", grid);
}

fn render(pair: &PairArgs, r: &RasterArgs) -> Result<(ParameterPair, GridSpec, ClassifiedRaster)> {
    let pair = ParameterPair::new(pair.c0, pair.c1);
    let grid = julia_grid(&pair, r)?;
    let raster = templia::render_julia(&pair, &r.template, &grid, r.iters)?;
    Ok((pair, grid, raster))
}

pub fn julia(a: JuliaArgs) -> Result<()> {
    let palette = a.palette.as_deref().map(palette).transpose()?;
    let mut run = Run::new("julia", &a.out)?;
    let (pair, grid, raster) = render(&a.pair, &a.raster)?;
    run.manifest.set_pair(&pair);
    record_raster(&mut run.manifest, &a.raster, &grid);
    run.bytes("julia.pgm", &io::raster_pgm(&raster)?)?;
    if let Some(p) = palette {
        run.manifest.set("palette", p.name);
        run.bytes("julia.ppm", &io::raster_ppm(&raster, &p)?)?;
    }
    run.finish()
}

pub fn mandel_slice(a: SliceArgs) -> Result<()> {
    let palette = a.palette.as_deref().map(palette).transpose()?;
    let mut run = Run::new("mandel-slice", &a.out)?;
    let grid = slice_grid(&a.raster)?;
    let slice = param::mandel_slice(&a.raster.template, a.c0, &grid, a.raster.iters)?;
    run.manifest.set("c0", a.c0);
    record_raster(&mut run.manifest, &a.raster, &grid);
    run.bytes("slice.pgm", &io::raster_pgm(&slice)?)?;
    if let Some(p) = palette {
        run.manifest.set("palette", p.name);
        run.bytes("slice.ppm", &io::raster_ppm(&slice, &p)?)?;
    }
    run.finish()
}

pub fn mandel_lattice(a: LatticeArgs) -> Result<()> {
    let mut run = Run::new("mandel-lattice", &a.out)?;
    let grid = slice_grid(&a.raster)?;
    let lattice = C0Lattice { re: a.re, im: a.im };
    run.manifest
        .set("lattice.re", a.re)
        .set("lattice.im", a.im)
        .set("lattice.points", lattice.len());
    record_raster(&mut run.manifest, &a.raster, &grid);

    let slices = param::slice_lattice(&a.raster.template, &lattice, &grid, a.raster.iters)?;
    let mut index = CsvTable::new(["index", "c0_re", "c0_im", "file", "bounded_fraction"]);
    for (k, s) in slices.iter().enumerate() {
        let name = format!("slice_{k:04}.pgm");
        run.bytes(&name, &io::raster_pgm(s)?)?;
        index.push(vec![
            k.to_string(),
            io::format_real(s.fixed_c0.re()),
            io::format_real(s.fixed_c0.im()),
            name,
            io::format_real(s.bounded_count() as f64 / grid.len() as f64),
        ]);
    }
    run.table("lattice.csv", &index)?;
    run.finish()
}

pub fn zoom(a: ZoomArgs) -> Result<()> {
    let mut run = Run::new("zoom", &a.out)?;
    let windows = a
        .windows
        .iter()
        .map(|w| GridSpec::square(w.center, w.width, a.px))
        .collect::<templia::Result<Vec<_>>>()?;
    run.manifest
        .set("c0", a.c0)
        .set("template", &a.template)
        .set("maxIter", a.iters)
        .set("pixels", a.px);
    for (k, w) in a.windows.iter().enumerate() {
        run.manifest.set(format!("window.{k}"), format!("{}:{}", w.center, w.width));
    }

    let levels = param::zoom_sequence(&a.template, a.c0, &windows, a.iters)?;
    let mut summary = CsvTable::new([
        "level", "center_re", "center_im", "width", "boundary_points", "dimension",
    ]);
    for (k, level) in levels.iter().enumerate() {
        run.bytes(&format!("zoom_{k:02}.pgm"), &io::raster_pgm(&level.raster)?)?;
        let dimension = match &level.dimension {
            Ok(est) => {
                run.table(&format!("zoom_{k:02}_boxes.csv"), &CsvTable::from(est))?;
                io::format_real(est.dimension)
            }
            Err(e) => {
                log::warn!("window {k}: no dimension estimate ({e})");
                String::new()
            }
        };
        let g = &level.raster.grid;
        summary.push(vec![
            k.to_string(),
            io::format_real(g.center.re()),
            io::format_real(g.center.im()),
            io::format_real(g.width),
            level.boundary.len().to_string(),
            dimension,
        ]);
    }
    run.table("zoom.csv", &summary)?;
    run.finish()
}

pub fn fixed_map(a: FixedMapArgs) -> Result<()> {
    let mut run = Run::new("fixed-map", &a.out)?;
    let pair = ParameterPair::new(a.pair.c0, a.pair.c1);
    let f = param::fixed_map_f_with(&pair, a.l, a.resolution, a.iters)?;
    run.manifest
        .set_pair(&pair)
        .set("L", a.l)
        .set("resolution", a.resolution)
        .set("maxIter", a.iters);
    run.table("fixed_map.csv", &CsvTable::from(&f))?;
    println!("F = 1 at {} of {} samples", f.ones(), f.samples.len());
    run.finish()
}

pub fn hybrid(a: HybridArgs) -> Result<()> {
    let palette = palette(&a.palette)?;
    let mode = match a.mode {
        HybridModeArg::Exact => HybridMode::Exact,
        HybridModeArg::MonteCarlo => HybridMode::MonteCarlo {
            samples: a.samples,
            seed: a.seed.ok_or_else(|| {
                anyhow!(Error::InvalidArgument("--mode monte-carlo requires --seed".into()))
            })?,
        },
    };
    let mut run = Run::new("hybrid", &a.out)?;
    let grid = GridSpec::square(a.center.unwrap_or(ComplexPoint::ZERO), a.width.unwrap_or(4.0), a.px)?;
    run.manifest
        .set("c0", a.c0)
        .set("L", a.l)
        .set("maxIter", a.l)
        .set("palette", palette.name)
        .set_grid("grid", &grid);
    match mode {
        HybridMode::Exact => run.manifest.set("mode", "exact"),
        HybridMode::MonteCarlo { samples, seed } => run
            .manifest
            .set("mode", "monte-carlo")
            .set("samples", samples)
            .set("seed", seed),
    };

    let h = param::hybrid_mandelbrot(a.c0, &grid, a.l, mode)?;
    run.manifest.set("total", h.total);
    run.bytes("hybrid.ppm", &io::hybrid_ppm(&h, &palette)?)?;
    let mut counts = CsvTable::new(["ix", "iy", "c1_re", "c1_im", "count"]);
    for (i, &c) in h.counts.iter().enumerate() {
        let (ix, iy) = grid.coords(i);
        counts.push(vec![
            ix.to_string(),
            iy.to_string(),
            io::format_real(grid.pixel_re(ix)),
            io::format_real(grid.pixel_im(iy)),
            c.to_string(),
        ]);
    }
    run.table("hybrid_counts.csv", &counts)?;
    run.finish()
}

pub fn error_sweep(a: ErrorSweepArgs) -> Result<()> {
    let mut run = Run::new("error-sweep", &a.out)?;
    let c1 = a.pair.c1;
    let c0 = match a.perturb {
        Some(eps) => ComplexPoint::new(c1.re() + eps.re(), c1.im() + eps.im())?,
        None => a.pair.c0,
    };
    let pair = ParameterPair::new(c0, c1);
    let grid = GridSpec::for_pair(&pair, a.px)?;
    run.manifest
        .set_pair(&pair)
        .set("N", a.n)
        .set("maxIter", a.n)
        .set("positions", join(&a.positions))
        .set_grid("grid", &grid);
    if let Some(eps) = a.perturb {
        run.manifest.set("perturb", eps);
    }
    let rasters = param::error_sweep(c1, c0, &a.positions, a.n, &grid)?;
    for (k, r) in a.positions.iter().zip(&rasters) {
        run.bytes(&format!("error_k{k:04}.pgm"), &io::raster_pgm(r)?)?;
    }
    run.finish()
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn converge(a: ConvergeArgs) -> Result<()> {
    let mut run = Run::new("converge", &a.out)?;
    let pair = ParameterPair::new(a.pair.c0, a.pair.c1);
    let grid = GridSpec::for_pair(&pair, a.px)?;
    run.manifest
        .set_pair(&pair)
        .set("template", &a.template)
        .set("roots", join(&a.roots))
        .set("reference", a.reference)
        .set("maxIter", a.reference)
        .set_grid("grid", &grid);

    let curve = param::convergence_experiment(&pair, &a.template, &a.roots, a.reference, &grid)?;
    run.table("convergence.csv", &CsvTable::from(&curve))?;

    if let Some(root) = a.common_root {
        let SymbolicTemplate::RandomSeeded { seed, len, .. } = a.template else {
            bail!(Error::InvalidArgument("--common-root needs a random: template".into()));
        };
        run.manifest.set("common_root", root);
        let cmp = param::common_root_comparison(&pair, seed, root, len, &grid)?;
        let mut t = CsvTable::new(["comparison", "template", "hausdorff_distance"]);
        t.push(vec![
            "shared_root".into(),
            cmp.partner.to_string(),
            io::format_real(cmp.shared_root_distance),
        ]);
        t.push(vec![
            "first_symbol_flipped".into(),
            cmp.control.to_string(),
            io::format_real(cmp.control_distance),
        ]);
        run.table("common_root.csv", &t)?;
    }
    run.finish()
}

pub fn classify(a: ClassifyArgs) -> Result<()> {
    let mut run = Run::new("classify", &a.out)?;
    let (pair, grid, raster) = render(&a.pair, &a.raster)?;
    run.manifest
        .set_pair(&pair)
        .set("dust_threshold", a.dust_threshold);
    record_raster(&mut run.manifest, &a.raster, &grid);
    let rep = raster::classify_connectivity(&raster, a.dust_threshold)?;
    let mut t = CsvTable::new(["key", "value"]);
    for (k, v) in [
        ("verdict", rep.verdict.to_string()),
        ("component_count", rep.component_count.to_string()),
        ("largest_component_fraction", io::format_real(rep.largest_component_fraction)),
        ("prisoner_pixels", rep.prisoner_pixels.to_string()),
        ("fine_pixels", rep.fine.pixels.to_string()),
        ("fine_components", rep.fine.components.to_string()),
        ("fine_largest", rep.fine.largest.to_string()),
        ("coarse_pixels", rep.coarse.pixels.to_string()),
        ("coarse_components", rep.coarse.components.to_string()),
        ("coarse_largest", rep.coarse.largest.to_string()),
    ] {
        t.push(vec![k.into(), v]);
    }
    run.table("classify.csv", &t)?;
    println!("{}", rep.verdict);
    run.finish()
}

pub fn dimension(a: DimensionArgs) -> Result<()> {
    let mut run = Run::new("dimension", &a.out)?;
    let (pair, grid, raster) = render(&a.pair, &a.raster)?;
    let defaults = raster::default_box_scales(&grid);
    let scales = BoxScales::new(
        a.min_scale.unwrap_or(defaults.min),
        a.max_scale.unwrap_or(defaults.max),
        a.levels,
    )?;
    run.manifest
        .set_pair(&pair)
        .set("box.min", scales.min)
        .set("box.max", scales.max)
        .set("box.levels", scales.levels);
    record_raster(&mut run.manifest, &a.raster, &grid);
    let boundary = raster::extract_boundary(&raster);
    let est = raster::box_counting_dimension(&boundary, scales)?;
    run.manifest.set("dimension", io::format_real(est.dimension));
    run.table("boxes.csv", &CsvTable::from(&est))?;
    println!("{}", est.dimension);
    run.finish()
}

/// Exit status: 2 for invalid input, 1 for failures while running.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::Io(_) | Error::EmptyPointSet | Error::DegenerateRegression { .. }) => 1,
        Some(_) => 2,
        None => 1,
    }
}

