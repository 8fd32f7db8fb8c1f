//! Exact slice calculus: word values on the binary-dihedral circle.
//!
//! With every generator on the circle `q(t) = cos t * i + sin t * j`, the
//! two circle identities close the arithmetic: an odd-length word evaluates
//! to a single circle point `q(sum c_j t_j + m pi)` with integer
//! coefficients, an even-length word to a rotation `e^{p k}`. Folding a
//! word letter by letter alternates between the two states, so the
//! coefficients pick up alternating signs, every inverse letter contributes
//! a half turn, and every length-2 contraction contributes a sign `-1`
//! (one more half turn).

use crate::braid::{FreeWord, Sign};
use crate::fix::{FixError, WordSystem};

/// The value `q(sum coeffs[j] * t_{j+1} + halfturns * pi)` of an odd word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineAngleForm {
    coeffs: Vec<i64>,
    halfturns: i64,
}

impl AffineAngleForm {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Constant term in units of pi, reduced mod 2.
    pub fn halfturns(&self) -> i64 {
        self.halfturns
    }

    /// Evaluate the affine angle at concrete generator angles (radians).
    pub fn angle(&self, thetas: &[f64]) -> f64 {
        let linear: f64 = self
            .coeffs
            .iter()
            .zip(thetas)
            .map(|(&c, &t)| c as f64 * t)
            .sum();
        linear + self.halfturns as f64 * std::f64::consts::PI
    }
}

/// Running fold state: even-length prefixes are rotations `e^{p k}`,
/// odd-length prefixes are circle points `q(a)`.
struct FoldState {
    odd: bool,
    coeffs: Vec<i64>,
    halfturns: i64,
}

/// Evaluate an odd-length word symbolically on the slice.
pub fn slice_evaluate(word: &FreeWord) -> Result<AffineAngleForm, FixError> {
    if word.len() % 2 == 0 {
        return Err(FixError::EvenWord(word.len()));
    }
    let n = word.strands();
    let mut state = FoldState {
        odd: false,
        coeffs: vec![0; n],
        halfturns: 0,
    };
    for letter in word.letters() {
        let extra_half = match letter.sign {
            Sign::Plus => 0,
            Sign::Minus => 1,
        };
        if state.odd {
            // q(a) q(b) = e^{(a - b + pi) k}
            state.coeffs[letter.generator - 1] -= 1;
            state.halfturns += 1 - extra_half;
        } else {
            // e^{p k} q(b) = q(p + b)
            state.coeffs[letter.generator - 1] += 1;
            state.halfturns += extra_half;
        }
        state.odd = !state.odd;
    }
    debug_assert!(state.odd);
    Ok(AffineAngleForm {
        coeffs: state.coeffs,
        halfturns: state.halfturns.rem_euclid(2),
    })
}

/// A column of a congruence system: a free generator angle or, in twisted
/// mode, the conjugation shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceVar {
    /// The angle of generator `g` (1-based).
    Angle(usize),
    /// The twist shift: `2 phi` for a rotation `e^{phi k}`, `2 psi` for a
    /// reflection axis `q(psi)`.
    Shift,
}

/// One congruence `sum coeffs[j] * var_j == rhs * pi (mod 2 pi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceRow {
    pub coeffs: Vec<i64>,
    /// Right-hand side in units of pi, reduced mod 2.
    pub rhs: i64,
}

/// Integer congruence system over the free slice angles, with the pinned
/// generator eliminated (`t_pin = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSystem {
    strands: usize,
    pin: usize,
    vars: Vec<SliceVar>,
    rows: Vec<CongruenceRow>,
}

/// Which conjugations of the slice participate in a twisted solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistBranch {
    /// `g = e^{phi k}` rotates every angle by the same shift.
    Rotation,
    /// `g = q(psi)` reflects every angle through the shift.
    Reflection,
}

impl CongruenceSystem {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn pin(&self) -> usize {
        self.pin
    }

    pub fn vars(&self) -> &[SliceVar] {
        &self.vars
    }

    pub fn rows(&self) -> &[CongruenceRow] {
        &self.rows
    }

    /// Column index of a variable, if present.
    pub fn var_index(&self, var: SliceVar) -> Option<usize> {
        self.vars.iter().position(|&v| v == var)
    }

    /// Eliminate every variable except `keep` using rows with a unit
    /// coefficient, scanning rows last-to-first for pivots. Returns the
    /// surviving rows as `(coefficient, rhs)` pairs over `keep` alone,
    /// canonicalized to a nonnegative coefficient and rhs in {0, 1}, in
    /// original row order. `None` if some variable has no unit pivot.
    pub fn reduce_to_variable(&self, keep: SliceVar) -> Option<Vec<(i64, i64)>> {
        let keep_col = self.var_index(keep)?;
        let mut rows: Vec<(usize, Vec<i64>, i64)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r.coeffs.clone(), r.rhs))
            .collect();
        let mut active: Vec<usize> = (0..self.vars.len()).filter(|&c| c != keep_col).collect();
        while let Some(&col) = active.first() {
            let pivot_pos = rows
                .iter()
                .rposition(|(_, coeffs, _)| coeffs[col].abs() == 1)?;
            let (_, pivot_coeffs, pivot_rhs) = rows.remove(pivot_pos);
            let unit = pivot_coeffs[col];
            for (_, coeffs, rhs) in rows.iter_mut() {
                let factor = coeffs[col] * unit; // coeffs[col] / pivot
                if factor != 0 {
                    for (c, p) in coeffs.iter_mut().zip(&pivot_coeffs) {
                        *c -= factor * p;
                    }
                    *rhs -= factor * pivot_rhs;
                }
            }
            active.remove(0);
        }
        let mut out: Vec<(usize, i64, i64)> = rows
            .into_iter()
            .map(|(i, coeffs, rhs)| (i, coeffs[keep_col], rhs))
            .collect();
        out.sort_by_key(|&(i, _, _)| i);
        Some(
            out.into_iter()
                .map(|(_, c, rhs)| {
                    // negating a row preserves it mod 2 pi since -1 == 1 (mod 2)
                    let c = c.abs();
                    (c, rhs.rem_euclid(2))
                })
                .collect(),
        )
    }
}

/// Reduce the fixed-point equations of a word system to integer
/// congruences on the slice. Each equation `lhs = x_rhs` becomes
/// `sum c_j t_j + m pi == t_rhs (mod 2 pi)`; the pinned angle is set to
/// zero and its column dropped.
pub fn build_congruences(sys: &WordSystem, pin: usize) -> Result<CongruenceSystem, FixError> {
    build_congruences_impl(sys, pin, None)
}

/// Twisted variant: solve `sigma(x_j) = g x_j g^{-1}` with `g` confined to
/// the slice normalizer. The rotation branch adds a shared shift to every
/// right-hand angle; the reflection branch flips its sign through a shared
/// shift.
pub fn build_twisted_congruences(
    sys: &WordSystem,
    pin: usize,
    branch: TwistBranch,
) -> Result<CongruenceSystem, FixError> {
    build_congruences_impl(sys, pin, Some(branch))
}

fn build_congruences_impl(
    sys: &WordSystem,
    pin: usize,
    twist: Option<TwistBranch>,
) -> Result<CongruenceSystem, FixError> {
    let n = sys.strands();
    if pin == 0 || pin > n {
        return Err(FixError::BadPin { pin, strands: n });
    }
    let mut vars: Vec<SliceVar> = (1..=n).filter(|&g| g != pin).map(SliceVar::Angle).collect();
    if twist.is_some() {
        vars.push(SliceVar::Shift);
    }
    let mut rows = Vec::with_capacity(sys.equations().len());
    for eq in sys.equations() {
        let form = slice_evaluate(&eq.lhs)?;
        let mut coeffs = vec![0i64; vars.len()];
        for (col, var) in vars.iter().enumerate() {
            if let SliceVar::Angle(g) = var {
                coeffs[col] = form.coeffs()[g - 1];
            }
        }
        // move the right-hand generator across; the twist shift, when
        // present, enters every equation once
        let rhs_gen = eq.rhs;
        match twist {
            None | Some(TwistBranch::Rotation) => {
                if rhs_gen != pin {
                    let col = vars
                        .iter()
                        .position(|&v| v == SliceVar::Angle(rhs_gen))
                        .expect("rhs generator is a variable");
                    coeffs[col] -= 1;
                }
            }
            Some(TwistBranch::Reflection) => {
                if rhs_gen != pin {
                    let col = vars
                        .iter()
                        .position(|&v| v == SliceVar::Angle(rhs_gen))
                        .expect("rhs generator is a variable");
                    coeffs[col] += 1;
                }
            }
        }
        if twist.is_some() {
            let shift_col = vars.len() - 1;
            coeffs[shift_col] = -1;
        }
        rows.push(CongruenceRow {
            coeffs,
            rhs: form.halfturns().rem_euclid(2),
        });
    }
    Ok(CongruenceSystem {
        strands: n,
        pin,
        vars,
        rows,
    })
}
