//! Sublattices of Z^2 in Hermite normal form.

use num_integer::Integer;

/// A sublattice of `Z^2`, kept as rows `(a, b)` with `a > 0`, `0 <= b < c`,
/// and `(0, c)` with `c > 0`; either row may be absent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Lattice2 {
    first: Option<(i64, i64)>,
    vertical: Option<i64>,
}

impl Lattice2 {
    pub fn is_trivial(&self) -> bool {
        self.first.is_none() && self.vertical.is_none()
    }

    pub fn rank(&self) -> usize {
        self.first.is_some() as usize + self.vertical.is_some() as usize
    }

    pub fn insert(&mut self, v: (i64, i64)) {
        let (x, y) = v;
        if x == 0 {
            self.add_vertical(y);
        } else {
            match self.first {
                None => {
                    let s = x.signum();
                    self.first = Some((x * s, y * s));
                }
                Some((a, b)) => {
                    let e = a.extended_gcd(&x);
                    let (g, u, w) = if e.gcd < 0 { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) };
                    self.first = Some((g, u * b + w * y));
                    self.add_vertical((x / g) * b - (a / g) * y);
                }
            }
        }
        self.reduce();
    }

    fn add_vertical(&mut self, t: i64) {
        if t != 0 {
            self.vertical = Some(self.vertical.map_or(t.abs(), |c| c.gcd(&t)));
        }
    }

    fn reduce(&mut self) {
        if let (Some((a, b)), Some(c)) = (self.first, self.vertical) {
            self.first = Some((a, b.mod_floor(&c)));
        }
    }

    pub fn contains(&self, v: (i64, i64)) -> bool {
        let (mut x, mut y) = v;
        if let Some((a, b)) = self.first {
            if x % a != 0 {
                return false;
            }
            let k = x / a;
            x = 0;
            y -= k * b;
        }
        match self.vertical {
            _ if x != 0 => false,
            Some(c) => y % c == 0,
            None => y == 0,
        }
    }

    /// Basis vectors, each normalized so that `p > 0`, or `p = 0` and `q > 0`.
    pub fn generators(&self) -> Vec<(i64, i64)> {
        self.first.into_iter().chain(self.vertical.map(|c| (0, c))).collect()
    }
}
