//! Binary PGM (P5) and PPM (P6) with maxval 255. Row 0 is the top of the
//! window (largest imaginary part).

use std::path::Path;

use super::palette::Palette;
use crate::error::{Error, Result};
use crate::param::HybridRaster;
use crate::raster::EscapeRaster;

/// Prisoner pixels are 0. Escape index `e` maps to
/// `255 - floor(254 * min(e, m - 1) / (m - 1))`, so escapes span 255 (at 0)
/// down to 1 and never collide with prisoners.
pub fn grayscale_value(escape_index: Option<u32>, max_iter: usize) -> u8 {
    match escape_index {
        None => 0,
        Some(_) if max_iter < 2 => 255,
        Some(e) => {
            let top = (max_iter - 1) as u64;
            let e = (e as u64).min(top);
            (255 - (254 * e) / top) as u8
        }
    }
}

fn header(magic: &str, width: usize, height: usize) -> Vec<u8> {
    format!("{magic} {width} {height} 255\n").into_bytes()
}

pub fn encode_pgm(width: usize, height: usize, gray: &[u8]) -> Result<Vec<u8>> {
    if width == 0 || height == 0 || gray.len() != width * height {
        return Err(Error::InvalidArgument(format!(
            "{} gray values for a {width}x{height} image",
            gray.len()
        )));
    }
    let mut out = header("P5", width, height);
    out.extend_from_slice(gray);
    Ok(out)
}

pub fn encode_ppm(width: usize, height: usize, rgb: &[[u8; 3]]) -> Result<Vec<u8>> {
    if width == 0 || height == 0 || rgb.len() != width * height {
        return Err(Error::InvalidArgument(format!(
            "{} pixels for a {width}x{height} image",
            rgb.len()
        )));
    }
    let mut out = header("P6", width, height);
    out.extend(rgb.iter().flatten());
    Ok(out)
}

pub fn raster_pgm<R: EscapeRaster + ?Sized>(raster: &R) -> Result<Vec<u8>> {
    let g = raster.grid();
    let m = raster.max_iter();
    let gray: Vec<u8> = (0..g.len())
        .map(|i| grayscale_value(raster.escape_index(i), m))
        .collect();
    encode_pgm(g.pixels_x, g.pixels_y, &gray)
}

pub fn raster_ppm<R: EscapeRaster + ?Sized>(raster: &R, palette: &Palette) -> Result<Vec<u8>> {
    let g = raster.grid();
    let m = raster.max_iter();
    let rgb: Vec<[u8; 3]> = (0..g.len())
        .map(|i| palette.escape_color(raster.escape_index(i), m))
        .collect();
    encode_ppm(g.pixels_x, g.pixels_y, &rgb)
}

pub fn hybrid_ppm(raster: &HybridRaster, palette: &Palette) -> Result<Vec<u8>> {
    let rgb: Vec<[u8; 3]> = raster
        .counts
        .iter()
        .map(|&c| palette.count_color(c, raster.total))
        .collect();
    encode_ppm(raster.grid.pixels_x, raster.grid.pixels_y, &rgb)
}

pub fn write_bytes(path: impl AsRef<Path>, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(Error::from)
}

/// A decoded P5 or P6 image; `channels` is 1 or 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodedImage {
    pub width: usize,
    pub height: usize,
    pub channels: usize,
    pub data: Vec<u8>,
}

impl DecodedImage {
    /// Prisoner flags of a grayscale escape map (value 0).
    pub fn prisoner_mask(&self) -> Vec<bool> {
        self.data
            .chunks(self.channels)
            .map(|px| px.iter().all(|&v| v == 0))
            .collect()
    }
}

/// Reads back binary netpbm files with maxval 255, including comment lines.
pub fn decode_pnm(bytes: &[u8]) -> Result<DecodedImage> {
    let bad = |why: &str| Error::InvalidArgument(format!("malformed netpbm data: {why}"));
    let mut pos = 0;
    let mut fields = Vec::with_capacity(4);
    while fields.len() < 4 {
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b'#') {
            if bytes[pos] == b'#' {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            } else {
                pos += 1;
            }
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(bad("truncated header"));
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| bad("header"))?);
    }
    pos += 1;
    let channels = match fields[0] {
        "P5" => 1,
        "P6" => 3,
        other => return Err(bad(&format!("magic {other}"))),
    };
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad(s));
    let (width, height, maxval) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
    if maxval != 255 {
        return Err(bad("maxval must be 255"));
    }
    let data = bytes.get(pos..).ok_or_else(|| bad("no pixel data"))?;
    if data.len() != width * height * channels {
        return Err(bad("pixel data length"));
    }
    Ok(DecodedImage {
        width,
        height,
        channels,
        data: data.to_vec(),
    })
}
