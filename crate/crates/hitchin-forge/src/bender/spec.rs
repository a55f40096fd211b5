//! Surface presentations, curve data and the bent representation `rho_B`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::words::Word;
use crate::error::{Error, Result};
use crate::exactnum::{FieldDescriptor, FieldElem, Matrix, Ring};

/// The closed surface group of genus `g` with generators
/// `a1, b1, ..., ag, bg` and relator `[a1,b1] ... [ag,bg]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfacePresentation {
    /// Genus, at least 2.
    pub genus: usize,
}

impl SurfacePresentation {
    /// Validated presentation.
    pub fn new(genus: usize) -> Result<Self> {
        if genus < 2 {
            return Err(Error::Precondition("genus must be at least 2".into()));
        }
        Ok(SurfacePresentation { genus })
    }

    /// The generator names in order.
    pub fn generators(&self) -> Vec<String> {
        (1..=self.genus).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect()
    }

    /// The product of the first `h` handle commutators.
    pub fn partial_relator(&self, h: usize) -> Word {
        Word::product(
            (1..=h)
                .map(|i| Word::Comm(Box::new(Word::Gen(format!("a{i}"))), Box::new(Word::Gen(format!("b{i}")))))
                .collect(),
        )
    }

    /// The relator `[a1,b1] ... [ag,bg]`.
    pub fn relator(&self) -> Word {
        self.partial_relator(self.genus)
    }
}

/// The curve along which the representation is bent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurveSpec {
    /// The curve `[a1,b1]...[ah,bh]` cutting off the first `h` handles.
    Separating {
        /// Handles on the unbent side, `1 <= h < genus`.
        h: usize,
    },
    /// The curve `a_i`; the stable letter is `s = b_i^-1`.
    NonSeparating {
        /// Handle index, `1 <= i <= genus`.
        handle: usize,
    },
}

/// How each generator transforms under bending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// `g -> rho(g)`.
    Fixed,
    /// `g -> B rho(g) B^-1`.
    Conjugated,
    /// `g -> B rho(g)`.
    Stable,
    /// `g -> rho(g) B^-1`, the inverse of a stable letter.
    InverseStable,
}

/// Presentation mode (a closed surface group and a curve) or free mode
/// (finitely many named elements with explicit roles and no relator).
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum BendingMode {
    /// A closed surface group bent along a curve.
    Presentation {
        /// The presentation.
        presentation: SurfacePresentation,
        /// The curve.
        curve: CurveSpec,
    },
    /// Named elements with roles and a designated curve word.
    Free {
        /// Word for the curve class (its image must commute with `B`).
        gamma: String,
        /// Role of each named generator; unnamed generators are fixed.
        roles: BTreeMap<String, Role>,
    },
}

/// A representation given on generators together with a bending matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BendingSpec {
    /// Presentation or free mode.
    pub mode: BendingMode,
    /// Generator images, all `n x n` over one field.
    pub assignment: BTreeMap<String, Matrix<FieldElem>>,
    /// The bending matrix.
    pub b: Matrix<FieldElem>,
    /// Optional 2x2 preimages: `assignment[g] = tau_n(sl2[g])`.
    pub sl2: Option<BTreeMap<String, Matrix<FieldElem>>>,
}

/// The smallest field containing every entry of every matrix.
pub fn common_field<'a>(mats: impl IntoIterator<Item = &'a Matrix<FieldElem>>) -> Result<Arc<FieldDescriptor>> {
    let mut rads: Vec<i64> = Vec::new();
    for m in mats {
        for e in m.entries() {
            rads.extend_from_slice(e.descriptor().radicands());
        }
    }
    rads.sort_unstable();
    rads.dedup();
    Ok(Arc::new(FieldDescriptor::generated_by(&rads)?))
}

fn lift(m: &Matrix<FieldElem>, desc: &Arc<FieldDescriptor>) -> Result<Matrix<FieldElem>> {
    m.try_map(|e| e.lift_to(desc))
}

/// Checks on a spec before evaluating the relator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorReport {
    /// Whether the bent relator evaluates to the identity (vacuously true in free mode).
    pub holds: bool,
    /// Whether `B` commutes with the image of the curve.
    pub commutes_with_gamma: bool,
    /// Whether every assigned matrix has determinant one.
    pub determinants_one: bool,
    /// Whether the spec is in free mode.
    pub free_mode: bool,
}

impl BendingSpec {
    /// Builds a spec, lifting every matrix to a common field and checking shapes
    /// and generator names.
    pub fn new(
        mode: BendingMode,
        assignment: BTreeMap<String, Matrix<FieldElem>>,
        b: Matrix<FieldElem>,
        sl2: Option<BTreeMap<String, Matrix<FieldElem>>>,
    ) -> Result<Self> {
        let n = b.rows();
        if !b.is_square() || n == 0 {
            return Err(Error::Dimension("bending matrix must be square".into()));
        }
        for (g, m) in &assignment {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension(format!("generator {g} is not {n}x{n}")));
            }
        }
        match &mode {
            BendingMode::Presentation { presentation, curve } => {
                let gens = presentation.generators();
                for g in &gens {
                    if !assignment.contains_key(g) {
                        return Err(Error::UnknownGenerator(format!("{g} is not assigned")));
                    }
                }
                if let Some(extra) = assignment.keys().find(|k| !gens.contains(k)) {
                    return Err(Error::UnknownGenerator(format!("{extra} is not a generator of the presentation")));
                }
                match *curve {
                    CurveSpec::Separating { h } if h >= 1 && h < presentation.genus => {}
                    CurveSpec::NonSeparating { handle } if handle >= 1 && handle <= presentation.genus => {}
                    c => return Err(Error::Precondition(format!("invalid curve {c:?} for genus {}", presentation.genus))),
                }
            }
            BendingMode::Free { gamma, roles } => {
                for g in Word::parse(gamma)?.generators().iter().chain(roles.keys()) {
                    if !assignment.contains_key(g) {
                        return Err(Error::UnknownGenerator(g.clone()));
                    }
                }
            }
        }
        let desc = common_field(assignment.values().chain(std::iter::once(&b)))?;
        let assignment = assignment.iter().map(|(k, m)| Ok((k.clone(), lift(m, &desc)?))).collect::<Result<_>>()?;
        let b = lift(&b, &desc)?;
        Ok(BendingSpec { mode, assignment, b, sl2 })
    }

    /// Same spec with another bending matrix.
    pub fn with_b(&self, b: Matrix<FieldElem>) -> Result<Self> {
        BendingSpec::new(self.mode.clone(), self.assignment.clone(), b, self.sl2.clone())
    }

    /// Matrix size.
    pub fn n(&self) -> usize {
        self.b.rows()
    }

    /// The field of the entries.
    pub fn field(&self) -> &Arc<FieldDescriptor> {
        self.b[(0, 0)].descriptor()
    }

    /// The word of the curve class.
    pub fn gamma(&self) -> Result<Word> {
        match &self.mode {
            BendingMode::Presentation { presentation, curve } => Ok(match *curve {
                CurveSpec::Separating { h } => presentation.partial_relator(h),
                CurveSpec::NonSeparating { handle } => Word::Gen(format!("a{handle}")),
            }),
            BendingMode::Free { gamma, .. } => Word::parse(gamma),
        }
    }

    /// The role of a generator (or of the letter `s` in non-separating mode).
    pub fn role(&self, g: &str) -> Role {
        match &self.mode {
            BendingMode::Presentation { curve, .. } => match *curve {
                CurveSpec::Separating { h } => {
                    let idx: usize = g[1..].parse().unwrap_or(0);
                    if idx > h {
                        Role::Conjugated
                    } else {
                        Role::Fixed
                    }
                }
                CurveSpec::NonSeparating { handle } => {
                    if g == "s" {
                        Role::Stable
                    } else if g == format!("b{handle}") {
                        Role::InverseStable
                    } else {
                        Role::Fixed
                    }
                }
            },
            BendingMode::Free { roles, .. } => roles.get(g).copied().unwrap_or(Role::Fixed),
        }
    }

    fn unbent(&self, g: &str) -> Result<(Matrix<FieldElem>, Matrix<FieldElem>)> {
        if g == "s" {
            if let BendingMode::Presentation { curve: CurveSpec::NonSeparating { handle }, .. } = &self.mode {
                let (m, mi) = self.unbent(&format!("b{handle}"))?;
                return Ok((mi, m));
            }
        }
        let m = self.assignment.get(g).ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
        let inv = m.inverse()?;
        Ok((m.clone(), inv))
    }

    /// `rho_B(g)` and its inverse for a single generator.
    pub fn bent_generator(&self, g: &str) -> Result<(Matrix<FieldElem>, Matrix<FieldElem>)> {
        let (m, mi) = self.unbent(g)?;
        let b = &self.b;
        let bi = b.inverse()?;
        Ok(match self.role(g) {
            Role::Fixed => (m, mi),
            Role::Conjugated => (&(b * &m) * &bi, &(b * &mi) * &bi),
            Role::Stable => (b * &m, &mi * &bi),
            Role::InverseStable => (&m * &bi, b * &mi),
        })
    }

    /// The unbent representation on a word.
    pub fn eval_unbent(&self, word: &Word) -> Result<Matrix<FieldElem>> {
        Ok(word.eval(&self.b, &|g| self.unbent(g))?.0)
    }

    /// Invariant checks and the relator test.
    pub fn relator_ok(&self) -> Result<RelatorReport> {
        let gamma = self.eval_unbent(&self.gamma()?)?;
        let commutes = &gamma * &self.b == &self.b * &gamma;
        let determinants_one = self.assignment.values().map(|m| m.det().map(|d| d.is_one_elem())).collect::<Result<Vec<_>>>()?.into_iter().all(|x| x);
        let (holds, free_mode) = match &self.mode {
            BendingMode::Presentation { presentation, .. } => (bend_eval(self, &presentation.relator())?.is_identity(), false),
            BendingMode::Free { .. } => (true, true),
        };
        Ok(RelatorReport { holds, commutes_with_gamma: commutes, determinants_one, free_mode })
    }
}

/// Evaluates the bent representation on a word.
pub fn bend_eval(spec: &BendingSpec, word: &Word) -> Result<Matrix<FieldElem>> {
    Ok(word.eval(&spec.b, &|g| spec.bent_generator(g))?.0)
}

/// [`bend_eval`] on a word given as text.
pub fn bend_eval_str(spec: &BendingSpec, word: &str) -> Result<Matrix<FieldElem>> {
    bend_eval(spec, &Word::parse(word)?)
}

/// Whether the bent relator holds, with the invariant checks.
pub fn relator_ok(spec: &BendingSpec) -> Result<RelatorReport> {
    spec.relator_ok()
}
