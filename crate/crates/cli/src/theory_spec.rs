//! Theory selection from command-line flags.

use aarp::theory::{
    AffineElement, AffineTheory, Permutation, PermutationGroup, ScalingTheory, Theory, TranslationTheory,
    TrivialTheory,
};
use aarp::{Rational, Scalar, Universe};
use clap::ValueEnum;

type Q = Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryName {
    #[value(alias = "identity")]
    Trivial,
    Permutation,
    Scaling,
    Translation,
    Affine,
}

/// A theory name plus whatever parameters it takes.
#[derive(Clone, Debug)]
pub struct TheorySpec {
    pub name: TheoryName,
    pub grid: Option<Vec<Q>>,
    pub generators: Vec<Vec<usize>>,
    pub elements: Vec<AffineElement<Q>>,
}

pub enum AnyTheory {
    Trivial(TrivialTheory),
    Permutation(PermutationGroup<Q>),
    Scaling(ScalingTheory<Q>),
    Translation(TranslationTheory<Q>),
    Affine(AffineTheory<Q>),
}

/// Runs `$body` with `$th` bound to the concrete theory inside an [`AnyTheory`].
#[macro_export]
macro_rules! with_theory {
    ($any:expr, $th:ident => $body:expr) => {
        match $any {
            $crate::theory_spec::AnyTheory::Trivial($th) => $body,
            $crate::theory_spec::AnyTheory::Permutation($th) => $body,
            $crate::theory_spec::AnyTheory::Scaling($th) => $body,
            $crate::theory_spec::AnyTheory::Translation($th) => $body,
            $crate::theory_spec::AnyTheory::Affine($th) => $body,
        }
    };
}

impl AnyTheory {
    pub fn is_finite(&self) -> bool {
        with_theory!(self, t => Theory::<Q>::elements(t).is_some())
    }

    pub fn is_ordered(&self) -> bool {
        with_theory!(self, t => Theory::<Q>::is_ordered(t))
    }

    pub fn name(&self) -> String {
        with_theory!(self, t => Theory::<Q>::name(t).to_string())
    }
}

pub fn parse_rational(s: &str) -> Result<Q, String> {
    Q::parse_exact(s)
}

pub fn parse_grid(s: &str) -> Result<Vec<Q>, String> {
    s.split(',').map(|p| parse_rational(p.trim())).collect()
}

pub fn parse_generator(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("bad permutation image \"{p}\": {e}")))
        .collect()
}

/// `alpha;z1,z2,..` for the mixture `x -> alpha x + (1 - alpha) z`.
pub fn parse_affine(s: &str) -> Result<AffineElement<Q>, String> {
    let (alpha, z) = s
        .split_once(';')
        .ok_or_else(|| format!("affine element \"{s}\" must look like alpha;z1,z2"))?;
    AffineElement::mixture(parse_rational(alpha.trim())?, parse_grid(z)?).map_err(|e| e.to_string())
}

impl TheorySpec {
    /// Build the theory; permutation groups act on `universe`.
    pub fn build(&self, universe: &Universe<Q>) -> Result<AnyTheory, String> {
        let misplaced = |what: &str| format!("{what} does not apply to theory {:?}", self.name);
        if self.grid.is_some() && !matches!(self.name, TheoryName::Scaling | TheoryName::Translation) {
            return Err(misplaced("--grid"));
        }
        if !self.generators.is_empty() && self.name != TheoryName::Permutation {
            return Err(misplaced("--generator"));
        }
        if !self.elements.is_empty() && self.name != TheoryName::Affine {
            return Err(misplaced("--element"));
        }
        Ok(match self.name {
            TheoryName::Trivial => AnyTheory::Trivial(TrivialTheory::new()),
            TheoryName::Permutation => {
                if self.generators.is_empty() {
                    return Err("permutation theory needs at least one --generator".into());
                }
                let gens = self
                    .generators
                    .iter()
                    .map(|g| Permutation::new(g.clone()))
                    .collect::<aarp::Result<Vec<_>>>()
                    .map_err(|e| e.to_string())?;
                AnyTheory::Permutation(PermutationGroup::generate(universe, gens).map_err(|e| e.to_string())?)
            }
            TheoryName::Scaling => AnyTheory::Scaling(match &self.grid {
                Some(g) => ScalingTheory::with_grid(g.iter().cloned()).map_err(|e| e.to_string())?,
                None => ScalingTheory::new(),
            }),
            TheoryName::Translation => AnyTheory::Translation(match &self.grid {
                Some(g) => TranslationTheory::with_grid(g.iter().cloned()),
                None => TranslationTheory::new(),
            }),
            TheoryName::Affine => {
                let dim = self
                    .elements
                    .first()
                    .map(AffineElement::dimension)
                    .ok_or("affine theory needs at least one --element")?;
                AnyTheory::Affine(
                    AffineTheory::new(dim, self.elements.clone()).map_err(|e| e.to_string())?.closed_under_inverse(),
                )
            }
        })
    }
}
