//! Deterministic file output.

mod image;
mod manifest;
mod palette;
mod table;

pub use image::{
    decode_pnm, encode_pgm, encode_ppm, grayscale_value, hybrid_ppm, raster_pgm, raster_ppm,
    write_bytes, DecodedImage,
};
pub use manifest::{RunManifest, WALL_CLOCK_KEY};
pub use palette::Palette;
pub use table::{format_real, CsvTable};
