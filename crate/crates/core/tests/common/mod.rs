//! Brute-force oracles that share no code with the library internals.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use fracsq::lines::Slope;
use fracsq::{DigitSet, Fraction64};

/// `D_n` by the literal recursion `D_n = D + N D_(n-1)`.
pub fn expand_cells(d: &DigitSet, n: u32) -> HashSet<(i64, i64)> {
    let order = d.order() as i64;
    let mut cells: HashSet<(i64, i64)> = [(0, 0)].into_iter().collect();
    for _ in 0..n {
        cells = d
            .digits()
            .iter()
            .flat_map(|&(i, j)| cells.iter().map(move |&(x, y)| (i as i64 + order * x, j as i64 + order * y)))
            .collect();
    }
    cells
}

/// Components of the closed cells of `K^(n)`, by breadth-first search over the 8 neighbours.
pub fn brute_beta0(d: &DigitSet, n: u32) -> u64 {
    let cells = expand_cells(d, n);
    let mut seen = HashSet::new();
    let mut count = 0;
    for &start in &cells {
        if !seen.insert(start) {
            continue;
        }
        count += 1;
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for dx in -1..=1 {
                for dy in -1..=1 {
                    let next = (x + dx, y + dy);
                    if cells.contains(&next) && seen.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    count
}

/// Whether `K^(basis)` and `K^(basis) + offset` share a point, by comparing closed cells.
pub fn brute_overlap(d: &DigitSet, offset: (i64, i64), basis: u32) -> bool {
    let cells = expand_cells(d, basis);
    let side = (d.order() as i64).pow(basis);
    cells.iter().any(|&(x, y)| {
        let (bx, by) = (x - offset.0 * side, y - offset.1 * side);
        (-1..=1).any(|dx| (-1..=1).any(|dy| cells.contains(&(bx + dx, by + dy))))
    })
}

fn candidates(t: Fraction64) -> Vec<i64> {
    let f = t.floor().to_integer();
    if t.is_integer() {
        vec![f - 1, f]
    } else {
        vec![f]
    }
}

/// Whether the point lies in a closed cell of `H_1 = K^(1) + Z^2`.
pub fn point_in_h1(d: &DigitSet, x: Fraction64, y: Fraction64) -> bool {
    let n = d.order() as i64;
    let scale = Fraction64::from_integer(n);
    candidates(x * scale)
        .iter()
        .any(|&i| candidates(y * scale).iter().any(|&j| d.contains(i.rem_euclid(n) as u32, j.rem_euclid(n) as u32)))
}

/// Walks one period of the line and tests the midpoint of every piece between grid crossings.
pub fn line_in_h1(d: &DigitSet, slope: Slope, c: Fraction64) -> bool {
    let n = d.order() as i64;
    let q = |a: i64, b: i64| Fraction64::new(a, b);
    if slope.is_vertical() {
        let ts: Vec<Fraction64> = (0..=n).map(|k| q(k, n)).collect();
        return ts.windows(2).all(|w| point_in_h1(d, c, (w[0] + w[1]) / 2));
    }
    let tau = q(slope.r, slope.s);
    let mut ts: Vec<Fraction64> = (0..=n * slope.s).map(|k| q(k, n)).collect();
    if slope.r != 0 {
        let lo = c.min(c + tau * slope.s);
        let hi = c.max(c + tau * slope.s);
        let (jlo, jhi) = ((lo * n).floor().to_integer(), (hi * n).ceil().to_integer());
        for j in jlo..=jhi {
            let t = (q(j, n) - c) / tau;
            if t >= q(0, 1) && t <= q(slope.s, 1) {
                ts.push(t);
            }
        }
    }
    ts.sort();
    ts.dedup();
    ts.windows(2).all(|w| {
        let x = (w[0] + w[1]) / 2;
        point_in_h1(d, x, tau * x + c)
    })
}

/// `(cells, isolated)` of `Omega_1` in units of `1 / (N s)`, from [`line_in_h1`].
pub fn omega1_oracle(d: &DigitSet, slope: Slope) -> (Vec<u32>, Vec<u32>) {
    let n = d.order() as i64;
    let unit = if slope.is_vertical() { n } else { n * slope.s };
    let cell_in: Vec<bool> = (0..n).map(|u| line_in_h1(d, slope, Fraction64::new(2 * u + 1, 2 * unit))).collect();
    let point_in: Vec<bool> = (0..=n).map(|v| line_in_h1(d, slope, Fraction64::new(v, unit))).collect();
    let cells = (0..n as u32).filter(|&u| cell_in[u as usize]).collect();
    let isolated = (0..=n as u32)
        .filter(|&v| {
            let v = v as usize;
            let left = v > 0 && cell_in[v - 1];
            let right = v < n as usize && cell_in[v];
            point_in[v] && !left && !right
        })
        .collect();
    (cells, isolated)
}

pub mod shadows {
    use fracsq::hata::{overlap_at_basis, FORWARD_OFFSETS};
    use fracsq::lines::{line_bearing_slopes, omega_level, omega_recursion_step, Slope};
    use fracsq::topology::beta0_sequence;
    use fracsq::{Budget, DigitSet};

    type Check = Result<(), String>;

    fn fail(d: &DigitSet, what: String) -> Check {
        Err(format!("{}: {what}", d.to_list_string()))
    }

    /// β₀ of successive approximations never decreases.
    pub fn beta0_monotone(d: &DigitSet, depth: u32) -> Check {
        let seq = beta0_sequence(d, depth, &Budget::default()).map_err(|e| e.to_string())?;
        if seq.windows(2).all(|w| w[0] <= w[1]) {
            Ok(())
        } else {
            fail(d, format!("β₀ {seq:?}"))
        }
    }

    /// Overlaps decided at basis 2 agree with bases 3 and 4 and with the cell oracle.
    pub fn hata_basis_stable(d: &DigitSet) -> Check {
        for offset in FORWARD_OFFSETS {
            let at2 = overlap_at_basis(d, offset, 2);
            if at2 != overlap_at_basis(d, offset, 3) || at2 != overlap_at_basis(d, offset, 4) {
                return fail(d, format!("offset {offset:?} changes with the basis"));
            }
            if at2 != super::brute_overlap(d, offset, 2) {
                return fail(d, format!("offset {offset:?} disagrees with the cell oracle"));
            }
        }
        Ok(())
    }

    /// `Omega_(n+1) ⊆ Omega_n` and `Phi(Omega_(n+1)) ⊆ Omega_n`; with `cells_only` the
    /// recursion check ignores isolated points.
    pub fn omega_nesting(d: &DigitSet, depth: u32, cells_only: bool) -> Check {
        let budget = Budget::default();
        for p in line_bearing_slopes(d) {
            let levels: Vec<_> = (1..=depth).map(|n| omega_level(d, p.slope, n, &budget).unwrap()).collect();
            for n in 0..levels.len() - 1 {
                let (this, next) = (&levels[n], &levels[n + 1]);
                if !next.is_subset(&this.refine()) {
                    return fail(d, format!("slope {}: level {} not nested", p.slope, n + 2));
                }
                if p.m == 0 {
                    continue;
                }
                let image = omega_recursion_step(&p, next).unwrap();
                let target = this.refine_to(n as u32 + 3);
                let contained = if cells_only {
                    image.cell_indices().iter().all(|&k| target.contains_cell(k))
                } else {
                    image.is_subset(&target)
                };
                if !contained {
                    return fail(d, format!("slope {}: Phi(level {}) escapes level {}", p.slope, n + 2, n + 1));
                }
            }
        }
        Ok(())
    }

    /// Every isolated intercept of `Omega_1`, certified or not, stays in `Omega_n` up to `depth`.
    pub fn isolated_points_persist(d: &DigitSet, depth: u32) -> Check {
        let budget = Budget::default();
        for p in fracsq::lines::all_profiles(d) {
            for &v in &p.isolated {
                for n in 1..=depth {
                    let set = omega_level(d, p.slope, n, &budget).unwrap();
                    if !set.contains_point(v as u64 * (d.order() as u64).pow(n - 1)) {
                        return fail(d, format!("slope {}: point {v} lost at level {n}", p.slope));
                    }
                }
            }
        }
        Ok(())
    }

    /// Certified isolated intercepts stay in every `Omega_n` up to `depth`.
    pub fn certified_points_persist(d: &DigitSet, depth: u32) -> Check {
        let budget = Budget::default();
        for p in line_bearing_slopes(d) {
            for &v in &p.certified_isolated {
                for n in 1..=depth {
                    let set = omega_level(d, p.slope, n, &budget).unwrap();
                    if !set.contains_point(v as u64 * (d.order() as u64).pow(n - 1)) {
                        return fail(d, format!("slope {}: point {v} lost at level {n}", p.slope));
                    }
                }
            }
        }
        Ok(())
    }

    /// Reduced slopes with `N <= |r| + s <= N + 2`.
    pub fn wide_slopes(order: u32) -> Vec<Slope> {
        let n = order as i64;
        let mut out = Vec::new();
        for s in 1..=n + 2 {
            for r in -(n + 2)..=n + 2 {
                let w = r.abs() + s;
                if r != 0 && w >= n && w <= n + 2 && num_gcd(r.abs(), s) == 1 {
                    out.push(Slope::new(r, s).unwrap());
                }
            }
        }
        out
    }

    fn num_gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            num_gcd(b, a % b)
        }
    }

    /// With a missing cell, no line of a slope with `|r| + s >= min_width` lies in `H_1`.
    pub fn wide_slopes_empty(d: &DigitSet, min_width: u32) -> Check {
        if d.is_full() {
            return Ok(());
        }
        for slope in wide_slopes(d.order()).into_iter().filter(|s| s.r.unsigned_abs() + s.s as u64 >= min_width as u64)
        {
            let set = omega_level(d, slope, 1, &Budget::default()).unwrap();
            if !set.is_empty() {
                return fail(d, format!("slope {slope}: Omega_1 = {:?}", set.point_indices()));
            }
        }
        Ok(())
    }
}
