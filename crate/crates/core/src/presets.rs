//! Named digit sets used in examples and tests.

use crate::digitop::{digit_operator, RationalLine};
use crate::digits::DigitSet;
use crate::error::Result;
use crate::ExactFraction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
}

pub const PRESETS: [Preset; 8] = [
    Preset { name: "carpet3", description: "Sierpinski carpet, N=3, all cells but the centre" },
    Preset { name: "vicsek3", description: "Vicsek cross, N=3" },
    Preset { name: "ex21", description: "N=3 set whose third approximation has three components" },
    Preset { name: "diag5", description: "diagonal of the 5x5 grid, built from the line x2 = x1" },
    Preset { name: "d0_5", description: "d2_5 without the cell (0,4)" },
    Preset { name: "d2_5", description: "cells met by the orbits of x2 = x1 and x2 = x1 - 1/5" },
    Preset { name: "d3_5", description: "cells met by the orbits of x2 = x1 and x2 = x1 ± 1/5" },
    Preset { name: "product32", description: "columns {0,2} times all rows, N=3" },
];

fn from_lines(lines: &[&str], order: u32) -> Result<DigitSet> {
    let parsed = lines.iter().map(|l| l.parse::<RationalLine<ExactFraction>>()).collect::<Result<Vec<_>>>()?;
    digit_operator(&parsed, order)
}

/// Builds the named preset, or `None` for an unknown name.
pub fn preset(name: &str) -> Option<DigitSet> {
    let built = match name {
        "carpet3" => "111\n101\n111".parse(),
        "vicsek3" => "N=3; D=(1,0),(0,1),(1,1),(2,1),(1,2)".parse(),
        "ex21" => "N=3; D=(1,0),(0,1),(1,1),(2,1),(2,2)".parse(),
        "diag5" => from_lines(&["1/1@0"], 5),
        "d2_5" => from_lines(&["1/1@0", "1/1@-1/5"], 5),
        "d3_5" => from_lines(&["1/1@0", "1/1@-1/5", "1/1@1/5"], 5),
        "d0_5" => {
            let d2 = preset("d2_5")?;
            DigitSet::new(5, d2.digits().iter().copied().filter(|&c| c != (0, 4)))
        }
        "product32" => "N=3; D=(0,0),(0,1),(0,2),(2,0),(2,1),(2,2)".parse(),
        _ => return None,
    };
    Some(built.expect("presets are valid digit sets"))
}
