//! Inscribed polygons from side lengths: given nonnegative sides satisfying
//! the polygon inequality, there is a unique inscribed polygon, possibly
//! degenerating to collinear points when one side equals the sum of the
//! others. The circumradius is found by bisection.

use crate::error::CritError;

#[derive(Debug, Clone)]
pub enum InscribedPolygon {
    Circular {
        sides: Vec<f64>,
        radius: f64,
        /// Central angles, summing to 2*pi; the longest side takes the
        /// reflex angle when the center lies outside.
        central_angles: Vec<f64>,
        /// Whether the slack was within (1e-12, 1e-9) of degenerate.
        near_degenerate: bool,
    },
    DegenerateLine {
        sides: Vec<f64>,
        /// Vertex positions on the line, walking the boundary.
        positions: Vec<f64>,
    },
}

impl InscribedPolygon {
    pub fn m(&self) -> usize {
        match self {
            InscribedPolygon::Circular { sides, .. } => sides.len(),
            InscribedPolygon::DegenerateLine { sides, .. } => sides.len(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, InscribedPolygon::DegenerateLine { .. })
    }

    pub fn sides(&self) -> &[f64] {
        match self {
            InscribedPolygon::Circular { sides, .. } => sides,
            InscribedPolygon::DegenerateLine { sides, .. } => sides,
        }
    }

    /// Distance between vertices p and q (1-based, cyclic order).
    pub fn chord(&self, p: usize, q: usize) -> f64 {
        match self {
            InscribedPolygon::Circular { radius, central_angles, .. } => {
                let m = central_angles.len();
                assert!(p >= 1 && p <= m && q >= 1 && q <= m);
                if p == q {
                    return 0.0;
                }
                let (a, b) = if p < q { (p, q) } else { (q, p) };
                let half: f64 = central_angles[a - 1..b - 1].iter().sum::<f64>() / 2.0;
                2.0 * radius * half.sin().abs()
            }
            InscribedPolygon::DegenerateLine { positions, .. } => {
                (positions[p - 1] - positions[q - 1]).abs()
            }
        }
    }

    /// Vertex angular positions on the circle (circular case), starting at
    /// zero: the cumulative central angles.
    pub fn vertex_angles(&self) -> Option<Vec<f64>> {
        match self {
            InscribedPolygon::Circular { central_angles, .. } => {
                let mut out = vec![0.0];
                for a in &central_angles[..central_angles.len() - 1] {
                    out.push(out.last().unwrap() + a);
                }
                Some(out)
            }
            InscribedPolygon::DegenerateLine { .. } => None,
        }
    }

    pub fn positions(&self) -> Option<&[f64]> {
        match self {
            InscribedPolygon::DegenerateLine { positions, .. } => Some(positions),
            _ => None,
        }
    }
}

const DEGENERATE_SLACK: f64 = 1e-12;
const NEAR_DEGENERATE_SLACK: f64 = 1e-9;

/// Solves for the unique inscribed polygon with the given side lengths.
///
/// Degenerate branch when some side equals the sum of the others within
/// relative slack 1e-12: vertices on a line at partial-sum positions.
/// Otherwise bisection on the circumradius: if at R = a_max/2 the other
/// sides' half-angles already fill a half-turn, the center lies inside and
/// the full angle equation is solved; else the center lies outside.
pub fn solve_inscribed_polygon(sides: &[f64]) -> Result<InscribedPolygon, CritError> {
    let m = sides.len();
    assert!(m >= 3, "need at least three sides");
    let positive = sides.iter().filter(|&&a| a > 0.0).count();
    assert!(positive >= 2, "need at least two positive sides");
    let total: f64 = sides.iter().sum();
    let (imax, &amax) = sides
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap();
    let rest = total - amax;
    if amax > rest * (1.0 + DEGENERATE_SLACK) {
        return Err(CritError::PolygonInequalityViolated { index: imax + 1 });
    }
    let slack = (rest - amax) / total;
    if slack <= DEGENERATE_SLACK {
        // Collinear: walk forward through the sides before the longest,
        // back along the longest, forward again.
        let mut positions = vec![0.0; m];
        let mut x = 0.0;
        for j in 0..m {
            positions[j] = x;
            if j == imax {
                x -= sides[j];
            } else {
                x += sides[j];
            }
        }
        return Ok(InscribedPolygon::DegenerateLine { sides: sides.to_vec(), positions });
    }

    // Center inside iff the minor arcs of the other sides cover a half turn
    // at the smallest feasible radius.
    let half_sum_at = |r: f64| -> f64 {
        sides
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != imax)
            .map(|(_, &a)| (a / (2.0 * r)).min(1.0).asin())
            .sum()
    };
    let r0 = amax / 2.0;
    let center_inside = half_sum_at(r0) >= std::f64::consts::FRAC_PI_2;

    let eval = |r: f64| -> f64 {
        if center_inside {
            // Sum of all central angles minus a full turn; decreasing in r.
            sides.iter().map(|&a| 2.0 * (a / (2.0 * r)).min(1.0).asin()).sum::<f64>()
                - 2.0 * std::f64::consts::PI
        } else {
            // Other half-angles minus the major side's half-angle.
            half_sum_at(r) - (amax / (2.0 * r)).min(1.0).asin()
        }
    };
    // Bracket: the center-inside equation decreases from a nonnegative
    // value at R = a_max/2 toward -2*pi; the center-outside equation
    // increases from a negative value toward zero from above. Either way
    // the signs at the ends differ.
    let mut lo = r0;
    let mut hi = total;
    let sign_lo = eval(lo) >= 0.0;
    let mut guard = 0;
    while (eval(hi) >= 0.0) == sign_lo && guard < 64 {
        hi *= 2.0;
        guard += 1;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (eval(mid) >= 0.0) == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo) / hi < 1e-15 {
            break;
        }
    }
    let radius = 0.5 * (lo + hi);
    let mut central_angles: Vec<f64> =
        sides.iter().map(|&a| 2.0 * (a / (2.0 * radius)).min(1.0).asin()).collect();
    if !center_inside {
        central_angles[imax] = 2.0 * std::f64::consts::PI
            - central_angles.iter().enumerate().filter(|&(i, _)| i != imax).map(|(_, a)| a).sum::<f64>();
    } else {
        // Renormalize rounding noise so the angles sum to exactly 2*pi.
        let s: f64 = central_angles.iter().sum();
        for a in central_angles.iter_mut() {
            *a *= 2.0 * std::f64::consts::PI / s;
        }
    }
    Ok(InscribedPolygon::Circular {
        sides: sides.to_vec(),
        radius,
        central_angles,
        near_degenerate: slack <= NEAR_DEGENERATE_SLACK,
    })
}

/// The cross-ratio triple (d(p,q) d(t,s) : d(p,t) d(q,s) : d(p,s) d(q,t))
/// of four polygon vertices; for concyclic or collinear points in this
/// cyclic order the middle product equals the sum of the outer two.
pub fn cross_ratio_identities(
    poly: &InscribedPolygon,
    p: usize,
    q: usize,
    t: usize,
    s: usize,
) -> (f64, f64, f64) {
    (
        poly.chord(p, q) * poly.chord(t, s),
        poly.chord(p, t) * poly.chord(q, s),
        poly.chord(p, s) * poly.chord(q, t),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square() {
        let poly = solve_inscribed_polygon(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert!((poly.chord(1, 3) / poly.chord(1, 2) - 2f64.sqrt()).abs() < 1e-12);
        if let InscribedPolygon::Circular { radius, .. } = &poly {
            assert!((radius - 1.0 / 2f64.sqrt()).abs() < 1e-12);
        } else {
            panic!("square is not degenerate");
        }
    }

    #[test]
    fn right_triangle_circumradius() {
        let poly = solve_inscribed_polygon(&[3.0, 4.0, 5.0]).unwrap();
        if let InscribedPolygon::Circular { radius, .. } = &poly {
            assert!((radius - 2.5).abs() < 1e-12, "hypotenuse is a diameter");
        } else {
            panic!("right triangle is not degenerate");
        }
    }

    #[test]
    fn degenerate_forced() {
        let poly = solve_inscribed_polygon(&[1.0, 1.0, 2.0]).unwrap();
        assert!(poly.is_degenerate());
        assert_eq!(poly.positions().unwrap(), &[0.0, 1.0, 2.0]);
        assert!((poly.chord(1, 3) - 2.0).abs() == 0.0);
    }

    #[test]
    fn polygon_inequality_rejected() {
        assert!(matches!(
            solve_inscribed_polygon(&[5.0, 1.0, 1.0]),
            Err(CritError::PolygonInequalityViolated { index: 1 })
        ));
    }

    #[test]
    fn resolve_from_own_sides() {
        let sides = [0.3, 1.1, 0.9, 0.4, 0.8];
        let poly = solve_inscribed_polygon(&sides).unwrap();
        if let InscribedPolygon::Circular { radius, .. } = &poly {
            let again = solve_inscribed_polygon(&sides).unwrap();
            if let InscribedPolygon::Circular { radius: r2, .. } = &again {
                assert!((radius - r2).abs() / radius < 1e-11);
            }
        }
    }

    #[test]
    fn ptolemy_on_collinear() {
        let poly = solve_inscribed_polygon(&[1.0, 1.0, 1.0, 3.0]).unwrap();
        assert!(poly.is_degenerate());
        let (a, b, c) = cross_ratio_identities(&poly, 1, 2, 3, 4);
        assert!((b - a - c).abs() < 1e-12);
    }

    #[test]
    fn ptolemy_on_circular() {
        let poly = solve_inscribed_polygon(&[0.7, 1.0, 0.8, 1.2, 0.5]).unwrap();
        let (a, b, c) = cross_ratio_identities(&poly, 1, 2, 4, 5);
        assert!((b - (a + c)).abs() / b < 1e-9, "Ptolemy equality");
    }
}
