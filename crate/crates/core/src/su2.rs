//! SU(2) as unit quaternions, and word evaluation on representation tuples.
//!
//! The matrix dictionary is `i <-> diag(i, -i)`, `j <-> offdiag(1, -1)`,
//! `k = ij`; a quaternion `w + xi + yj + zk` corresponds to the 2x2 complex
//! matrix `[[w + ix, y + iz], [-y + iz, w - ix]]`. Traceless elements are
//! the pure imaginary unit quaternions, i.e. points of the 2-sphere.
//!
//! The binary-dihedral slice is the great circle `q(t) = cos t * i + sin t * j`.
//! Two identities drive everything the exact solver does on it:
//! `q(a) q(b) = -(cos(a-b) + sin(a-b) k)` and
//! `e^{p k} q(a) e^{-p k} = q(a + 2p)`.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{FreeWord, Sign};

/// Construction-time unit-norm tolerance for group elements.
pub const UNIT_NORM_TOL: f64 = 1e-12;
/// Inputs whose norm has drifted beyond this are rejected.
pub const UNIT_DRIFT_TOL: f64 = 1e-9;
/// Renormalize accumulated products every this many multiplications.
const RENORM_INTERVAL: usize = 16;

#[derive(Debug, Error, PartialEq)]
pub enum Su2Error {
    #[error("quaternion norm {norm} drifted beyond tolerance {tol}")]
    NormDrift { norm: f64, tol: f64 },
    #[error("strand count mismatch: word has {word}, tuple has {tuple}")]
    StrandMismatch { word: usize, tuple: usize },
    #[error("element index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("degenerate element: zero or non-finite norm")]
    Degenerate,
}

/// A quaternion `w + xi + yj + zk`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion { w, x, y, z }
    }

    pub const fn pure(x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(0.0, x, y, z)
    }

    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn normalized(self) -> Quaternion {
        let n = self.norm();
        Quaternion::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    /// Quaternion conjugate; the group inverse for unit quaternions.
    pub fn conjugate(self) -> Quaternion {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    /// `g * self * g^-1` for unit `g`.
    pub fn conjugated_by(self, g: Quaternion) -> Quaternion {
        g * self * g.conjugate()
    }

    /// Trace of the corresponding 2x2 matrix.
    pub fn re_trace(self) -> f64 {
        2.0 * self.w
    }

    pub fn dot(self, rhs: Quaternion) -> f64 {
        self.w * rhs.w + self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    /// Squared chordal distance in R^4.
    pub fn dist_sq(self, rhs: Quaternion) -> f64 {
        (self.w - rhs.w).powi(2)
            + (self.x - rhs.x).powi(2)
            + (self.y - rhs.y).powi(2)
            + (self.z - rhs.z).powi(2)
    }

    fn require_unit(self, tol: f64) -> Result<(), Su2Error> {
        let norm = self.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > tol {
            return Err(Su2Error::NormDrift { norm, tol });
        }
        Ok(())
    }

    /// Group multiplication, rejecting non-unit inputs.
    pub fn checked_mul(self, rhs: Quaternion) -> Result<Quaternion, Su2Error> {
        self.require_unit(UNIT_DRIFT_TOL)?;
        rhs.require_unit(UNIT_DRIFT_TOL)?;
        Ok(self * rhs)
    }

    /// Group inverse, rejecting non-unit inputs.
    pub fn checked_inv(self) -> Result<Quaternion, Su2Error> {
        self.require_unit(UNIT_DRIFT_TOL)?;
        Ok(self.conjugate())
    }

    /// `g * self * g^-1`, rejecting non-unit inputs.
    pub fn checked_conj_by(self, g: Quaternion) -> Result<Quaternion, Su2Error> {
        self.require_unit(UNIT_DRIFT_TOL)?;
        g.require_unit(UNIT_DRIFT_TOL)?;
        Ok(self.conjugated_by(g))
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: Quaternion) -> Quaternion {
        let (a, b, c, d) = (self.w, self.x, self.y, self.z);
        let (e, f, g, h) = (rhs.w, rhs.x, rhs.y, rhs.z);
        Quaternion::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:+.6}{:+.6}i{:+.6}j{:+.6}k",
            self.w, self.x, self.y, self.z
        )
    }
}

/// A traceless SU(2) element: a pure imaginary unit quaternion, stored as
/// its 3-vector of imaginary components.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TracelessSu2 {
    x: f64,
    y: f64,
    z: f64,
}

impl TracelessSu2 {
    pub const I: TracelessSu2 = TracelessSu2 { x: 1.0, y: 0.0, z: 0.0 };

    /// Build from imaginary components, rejecting norm drift beyond the
    /// policy tolerance and renormalizing the rest of the way.
    pub fn new(x: f64, y: f64, z: f64) -> Result<TracelessSu2, Su2Error> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Su2Error::Degenerate);
        }
        if (norm - 1.0).abs() > UNIT_DRIFT_TOL {
            return Err(Su2Error::NormDrift {
                norm,
                tol: UNIT_DRIFT_TOL,
            });
        }
        Ok(TracelessSu2 {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    /// Normalize an arbitrary nonzero 3-vector onto the sphere.
    pub fn from_direction(x: f64, y: f64, z: f64) -> Result<TracelessSu2, Su2Error> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm < 1e-300 {
            return Err(Su2Error::Degenerate);
        }
        Ok(TracelessSu2 {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    /// The slice point `q(t) = cos t * i + sin t * j`.
    pub fn slice_point(theta: f64) -> TracelessSu2 {
        TracelessSu2 {
            x: theta.cos(),
            y: theta.sin(),
            z: 0.0,
        }
    }

    pub fn axis(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn quaternion(self) -> Quaternion {
        Quaternion::pure(self.x, self.y, self.z)
    }

    /// Conjugate by a unit quaternion; the result is again pure, up to
    /// rounding that we project away.
    pub fn conjugated_by(self, g: Quaternion) -> TracelessSu2 {
        let q = self.quaternion().conjugated_by(g);
        TracelessSu2::from_direction(q.x, q.y, q.z).expect("conjugation preserves the sphere")
    }

    /// An orthonormal basis of the tangent plane at this point.
    pub fn tangent_basis(self) -> ([f64; 3], [f64; 3]) {
        let v = self.axis();
        // cross with the axis of smallest component magnitude
        let pick = if v[0].abs() <= v[1].abs() && v[0].abs() <= v[2].abs() {
            [1.0, 0.0, 0.0]
        } else if v[1].abs() <= v[2].abs() {
            [0.0, 1.0, 0.0]
        } else {
            [0.0, 0.0, 1.0]
        };
        let a = cross(v, pick);
        let an = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
        let a = [a[0] / an, a[1] / an, a[2] / an];
        let b = cross(v, a);
        (a, b)
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// An n-tuple of traceless elements: a point of the representation variety
/// cut out by the trace conditions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepTuple {
    strands: usize,
    elements: Vec<TracelessSu2>,
}

impl RepTuple {
    pub fn new(elements: Vec<TracelessSu2>) -> RepTuple {
        RepTuple {
            strands: elements.len(),
            elements,
        }
    }

    /// All elements on the slice circle at the given angles.
    pub fn slice_tuple(angles: &[f64]) -> RepTuple {
        RepTuple::new(angles.iter().map(|&t| TracelessSu2::slice_point(t)).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Element for generator `g` (1-based).
    pub fn element(&self, g: usize) -> TracelessSu2 {
        self.elements[g - 1]
    }

    pub fn elements(&self) -> &[TracelessSu2] {
        &self.elements
    }

    pub fn conjugated_by(&self, g: Quaternion) -> RepTuple {
        RepTuple {
            strands: self.strands,
            elements: self.elements.iter().map(|e| e.conjugated_by(g)).collect(),
        }
    }
}

/// Evaluate a free-group word on a tuple. Inverse letters use the pure-unit
/// identity `X^-1 = -X`; the accumulator is renormalized every
/// `RENORM_INTERVAL` multiplications to bound drift.
pub fn evaluate_word(word: &FreeWord, tuple: &RepTuple) -> Result<Quaternion, Su2Error> {
    if word.strands() != tuple.strands() {
        return Err(Su2Error::StrandMismatch {
            word: word.strands(),
            tuple: tuple.strands(),
        });
    }
    let mut acc = Quaternion::ONE;
    for (count, letter) in word.letters().iter().enumerate() {
        let q = tuple.element(letter.generator).quaternion();
        let factor = match letter.sign {
            Sign::Plus => q,
            Sign::Minus => q.conjugate(),
        };
        acc = acc * factor;
        if (count + 1) % RENORM_INTERVAL == 0 {
            acc = acc.normalized();
        }
    }
    Ok(acc)
}

/// Conjugation-invariant separator: the ordered traces of all elements,
/// all pairs `X_i X_j` (i < j), and all triples `X_i X_j X_k` (i < j < k).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fingerprint(Vec<f64>);

impl Fingerprint {
    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn max_abs_diff(&self, other: &Fingerprint) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold((self.0.len() != other.0.len()) as u8 as f64 * f64::INFINITY, f64::max)
    }

    /// Lexicographic total order for deterministic sorting.
    pub fn total_cmp(&self, other: &Fingerprint) -> std::cmp::Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let ord = a.total_cmp(b);
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

pub fn fingerprint(tuple: &RepTuple) -> Fingerprint {
    let n = tuple.strands();
    let qs: Vec<Quaternion> = tuple.elements().iter().map(|e| e.quaternion()).collect();
    let mut values = Vec::new();
    for q in &qs {
        values.push(q.re_trace());
    }
    for i in 0..n {
        for j in (i + 1)..n {
            values.push((qs[i] * qs[j]).re_trace());
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                values.push((qs[i] * qs[j] * qs[k]).re_trace());
            }
        }
    }
    Fingerprint(values)
}

/// True iff the axes are not all pairwise parallel within `eps`, i.e. the
/// image does not lie in a single U(1).
pub fn is_irreducible(tuple: &RepTuple, eps: f64) -> bool {
    let n = tuple.strands();
    for i in 0..n {
        for j in (i + 1)..n {
            let a = tuple.elements()[i].axis();
            let b = tuple.elements()[j].axis();
            let c = cross(a, b);
            let norm = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
            if norm > eps {
                return true;
            }
        }
    }
    false
}

/// Conjugate the tuple so that element `pin` is exactly `i` and the lowest
/// other element lies on the `i`-`j` circle with nonnegative `j` component.
/// Returns the conjugated tuple and the conjugator `g`.
///
/// If the designated neighbor is parallel to the pinned element the
/// in-plane rotation step is skipped.
pub fn gauge_fix(tuple: &RepTuple, pin: usize) -> Result<(RepTuple, Quaternion), Su2Error> {
    let n = tuple.strands();
    if pin == 0 || pin > n {
        return Err(Su2Error::IndexOutOfRange {
            index: pin,
            strands: n,
        });
    }
    let neighbor = (1..=n).find(|&i| i != pin);

    if in_normal_form(tuple, pin, neighbor) {
        return Ok((tuple.clone(), Quaternion::ONE));
    }

    let g1 = rotation_to_i(tuple.element(pin).axis());
    let g = match neighbor {
        Some(nb) => {
            let u = tuple.element(nb).conjugated_by(g1).axis();
            let r = (u[1] * u[1] + u[2] * u[2]).sqrt();
            if r <= 1e-14 {
                g1
            } else {
                // rotate about i by -psi to land the neighbor at (.., r, 0)
                let psi = u[2].atan2(u[1]);
                let half = 0.5 * psi;
                Quaternion::new(half.cos(), -half.sin(), 0.0, 0.0) * g1
            }
        }
        None => g1,
    };

    let mut elements: Vec<TracelessSu2> = tuple
        .elements()
        .iter()
        .map(|e| e.conjugated_by(g))
        .collect();
    // snap the gauge conditions exactly
    elements[pin - 1] = TracelessSu2::I;
    if let Some(nb) = neighbor {
        let a = elements[nb - 1].axis();
        if a[2].abs() < 1e-9 {
            elements[nb - 1] = TracelessSu2::from_direction(a[0], a[1].abs(), 0.0)?;
        }
    }
    Ok((RepTuple::new(elements), g))
}

fn in_normal_form(tuple: &RepTuple, pin: usize, neighbor: Option<usize>) -> bool {
    let p = tuple.element(pin).axis();
    if (p[0] - 1.0).abs() > UNIT_NORM_TOL || p[1].abs() > UNIT_NORM_TOL || p[2].abs() > UNIT_NORM_TOL
    {
        return false;
    }
    match neighbor {
        Some(nb) => {
            let u = tuple.element(nb).axis();
            u[2].abs() <= UNIT_NORM_TOL && u[1] >= 0.0
        }
        None => true,
    }
}

/// Unit quaternion whose conjugation rotates `v` onto the i-axis.
fn rotation_to_i(v: [f64; 3]) -> Quaternion {
    let c = v[0];
    let s = (v[1] * v[1] + v[2] * v[2]).sqrt();
    if s <= 1e-14 {
        if c > 0.0 {
            return Quaternion::ONE;
        }
        // antipode: half-turn about j
        return Quaternion::J;
    }
    // axis v x e1 = (0, v_z, -v_y), angle atan2(s, c)
    let axis = [0.0, v[2] / s, -v[1] / s];
    let half = 0.5 * s.atan2(c);
    Quaternion::new(half.cos(), 0.0, half.sin() * axis[1], half.sin() * axis[2])
}
