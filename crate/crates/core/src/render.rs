//! Deterministic figures: PNG approximations, SVG intercept diagrams, DOT graphs.

use std::fmt::Write;

use crate::budget::Budget;
use crate::digits::DigitSet;
use crate::error::{Error, Result};
use crate::grid::rasterize;
use crate::hata::HataGraph;
use crate::lines::OmegaProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RasterSpec {
    /// Pixels per unit length; must be a multiple of `N^n`.
    pub px_per_unit: u32,
    pub foreground: u8,
    pub background: u8,
    pub margin: u32,
}

impl RasterSpec {
    pub fn new(px_per_unit: u32) -> Self {
        RasterSpec { px_per_unit, foreground: 0, background: 255, margin: 0 }
    }
}

/// An 8-bit grayscale image, rows stored top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raster {
    pub width: u32,
    pub height: u32,
    pub pixels: Vec<u8>,
}

impl Raster {
    pub fn count(&self, value: u8) -> u64 {
        self.pixels.iter().filter(|&&p| p == value).count() as u64
    }

    pub fn get(&self, x: u32, y: u32) -> u8 {
        self.pixels[(y * self.width + x) as usize]
    }

    pub fn to_png(&self) -> Vec<u8> {
        let mut out = Vec::new();
        {
            let mut encoder = png::Encoder::new(&mut out, self.width, self.height);
            encoder.set_color(png::ColorType::Grayscale);
            encoder.set_depth(png::BitDepth::Eight);
            encoder.set_compression(png::Compression::Balanced);
            encoder.set_filter(png::Filter::NoFilter);
            let mut writer = encoder.write_header().expect("writing to a Vec cannot fail");
            writer.write_image_data(&self.pixels).expect("pixel buffer matches the header");
        }
        out
    }
}

/// Rasterizes `K^(n)` with `j` increasing upward.
pub fn raster_approx(digits: &DigitSet, level: u32, spec: &RasterSpec, budget: &Budget) -> Result<Raster> {
    let grid = rasterize(digits, level, budget)?;
    let side = grid.side();
    if spec.px_per_unit == 0 || !(spec.px_per_unit as u64).is_multiple_of(side) {
        return Err(Error::PixelDivisibility { px: spec.px_per_unit, cells: side });
    }
    let dim = spec.px_per_unit as u64 + 2 * spec.margin as u64;
    if dim * dim > budget.max_cells {
        return Err(Error::BudgetExceeded {
            order: digits.order() as u64,
            level,
            required: (dim * dim) as u128,
            budget: budget.max_cells,
        });
    }
    let block = spec.px_per_unit as u64 / side;
    let dim = dim as u32;
    let mut pixels = vec![spec.background; (dim as usize) * (dim as usize)];
    for (i, j) in grid.cells() {
        let x0 = spec.margin as u64 + i * block;
        let y0 = spec.margin as u64 + (side - 1 - j) * block;
        for y in y0..y0 + block {
            let row = (y * dim as u64) as usize;
            pixels[row + x0 as usize..row + (x0 + block) as usize].fill(spec.foreground);
        }
    }
    Ok(Raster { width: dim, height: dim, pixels })
}

/// PNG bytes of `K^(n)`.
pub fn render_approx(digits: &DigitSet, level: u32, spec: &RasterSpec, budget: &Budget) -> Result<Vec<u8>> {
    Ok(raster_approx(digits, level, spec, budget)?.to_png())
}

/// Foreground pixels expected for `K^(n)`: `(#D)^n (px / N^n)^2`.
pub fn expected_foreground(digits: &DigitSet, level: u32, px_per_unit: u32) -> u64 {
    let block = px_per_unit as u64 / (digits.order() as u64).pow(level);
    (digits.len() as u64).pow(level) * block * block
}

/// SVG diagram of `Omega_1` on one period `[0, 1/s]`.
pub fn render_omega(profile: &OmegaProfile) -> String {
    let n = profile.order;
    let unit = 60u32;
    let (left, axis_y) = (20u32, 40u32);
    let width = n * unit + 2 * left;
    let mut out = String::new();
    let _ = writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"80\">");
    let _ = writeln!(
        out,
        "  <text x=\"{left}\" y=\"15\" font-size=\"12\">slope {}, m = {}, q = {}</text>",
        profile.slope, profile.m, profile.q
    );
    for &u in &profile.cells {
        let _ = writeln!(
            out,
            "  <rect x=\"{}\" y=\"{}\" width=\"{unit}\" height=\"10\" fill=\"black\"/>",
            left + u * unit,
            axis_y - 5
        );
    }
    let _ = writeln!(
        out,
        "  <line x1=\"{left}\" y1=\"{axis_y}\" x2=\"{}\" y2=\"{axis_y}\" stroke=\"black\"/>",
        left + n * unit
    );
    for v in 0..=n {
        let x = left + v * unit;
        let _ = writeln!(
            out,
            "  <line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"gray\"/>",
            axis_y - 8,
            axis_y + 8
        );
    }
    for &v in &profile.isolated {
        let fill = if profile.certified_isolated.contains(&v) { "black" } else { "white" };
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{axis_y}\" r=\"4\" fill=\"{fill}\" stroke=\"black\"/>",
            left + v * unit
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Graphviz text of a Hata graph.
pub fn render_hata(graph: &HataGraph) -> String {
    graph.to_dot()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines::{omega1, Slope};

    #[test]
    fn carpet_blocks() {
        let carpet: DigitSet = "111\n101\n111".parse().unwrap();
        let r = raster_approx(&carpet, 1, &RasterSpec::new(81), &Budget::default()).unwrap();
        assert_eq!(r.count(0), 72 * 81);
        assert_eq!(r.get(40, 40), 255);
        assert_eq!(r.get(0, 0), 0);
    }

    #[test]
    fn orientation_is_upward() {
        let d: DigitSet = "N=3; D=(0,0),(1,0)".parse().unwrap();
        let r = raster_approx(&d, 1, &RasterSpec::new(3), &Budget::default()).unwrap();
        assert_eq!(r.get(0, 2), 0);
        assert_eq!(r.get(0, 0), 255);
    }

    #[test]
    fn margin_and_divisibility() {
        let carpet: DigitSet = "111\n101\n111".parse().unwrap();
        let spec = RasterSpec { margin: 4, ..RasterSpec::new(27) };
        let r = raster_approx(&carpet, 2, &spec, &Budget::default()).unwrap();
        assert_eq!(r.width, 35);
        assert_eq!(r.count(0), expected_foreground(&carpet, 2, 27));
        assert!(matches!(
            raster_approx(&carpet, 2, &RasterSpec::new(10), &Budget::default()),
            Err(Error::PixelDivisibility { px: 10, cells: 9 })
        ));
    }

    #[test]
    fn png_is_deterministic() {
        let carpet: DigitSet = "111\n101\n111".parse().unwrap();
        let a = render_approx(&carpet, 2, &RasterSpec::new(27), &Budget::default()).unwrap();
        let b = render_approx(&carpet, 2, &RasterSpec::new(27), &Budget::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(&a[1..4], b"PNG");
    }

    #[test]
    fn omega_diagram() {
        let pair: DigitSet = "N=3; D=(0,0),(2,2)".parse().unwrap();
        let svg = render_omega(&omega1(&pair, Slope::new(0, 1).unwrap()));
        assert!(!svg.contains("<rect"));
        assert!(!svg.contains("<circle"));
    }
}
