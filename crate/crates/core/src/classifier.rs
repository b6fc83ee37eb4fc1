//! The pseudomorphism classifier `Q T G`: free morphisms of `T²G` together
//! with adjoined isomorphisms `q_w: w → (w_•)`.
//!
//! Equality is decided by evaluating with `δ`, which sends every `q` to an
//! identity.

use std::fmt;

use crate::error::{Error, Result};
use crate::free::{Flavor, FreeMor, FreeMor2, Tuple, Tuple2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QTerm {
    Free(FreeMor2),
    Q(Tuple2),
    QInv(Tuple2),
    Id(Tuple2),
    Compose(Box<QMor>, Box<QMor>),
    Tensor(Box<QMor>, Box<QMor>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMor {
    flavor: Flavor,
    source: Tuple2,
    target: Tuple2,
    term: QTerm,
}

impl QMor {
    pub fn free(u: FreeMor2) -> QMor {
        QMor {
            flavor: u.flavor(),
            source: u.source().clone(),
            target: u.target().clone(),
            term: QTerm::Free(u),
        }
    }

    /// `q_w: w → (w_•)`.
    pub fn q(flavor: Flavor, w: Tuple2) -> QMor {
        QMor {
            flavor,
            target: Tuple2(vec![w.flatten()]),
            source: w.clone(),
            term: QTerm::Q(w),
        }
    }

    pub fn q_inv(flavor: Flavor, w: Tuple2) -> QMor {
        QMor {
            flavor,
            source: Tuple2(vec![w.flatten()]),
            target: w.clone(),
            term: QTerm::QInv(w),
        }
    }

    pub fn id(flavor: Flavor, w: Tuple2) -> QMor {
        QMor {
            flavor,
            source: w.clone(),
            target: w.clone(),
            term: QTerm::Id(w),
        }
    }

    /// `self ∘ other`.
    pub fn compose(self, other: QMor) -> Result<QMor> {
        if self.flavor != other.flavor {
            return Err(Error::Flavor(format!(
                "composing {} after {}",
                self.flavor, other.flavor
            )));
        }
        if self.source != other.target {
            return Err(Error::Composition(format!(
                "{} does not start where {} ends",
                self.source, other.target
            )));
        }
        Ok(QMor {
            flavor: self.flavor,
            source: other.source.clone(),
            target: self.target.clone(),
            term: QTerm::Compose(Box::new(self), Box::new(other)),
        })
    }

    pub fn tensor(self, other: QMor) -> Result<QMor> {
        if self.flavor != other.flavor {
            return Err(Error::Flavor(format!(
                "tensoring {} with {}",
                self.flavor, other.flavor
            )));
        }
        Ok(QMor {
            flavor: self.flavor,
            source: self.source.concat(&other.source),
            target: self.target.concat(&other.target),
            term: QTerm::Tensor(Box::new(self), Box::new(other)),
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn source(&self) -> &Tuple2 {
        &self.source
    }

    pub fn target(&self) -> &Tuple2 {
        &self.target
    }

    pub fn term(&self) -> &QTerm {
        &self.term
    }

    /// `δ`: flatten free parts, send adjoined isomorphisms to identities.
    pub fn delta(&self) -> Result<FreeMor> {
        match &self.term {
            QTerm::Free(u) => u.flatten(),
            QTerm::Q(w) | QTerm::QInv(w) | QTerm::Id(w) => {
                Ok(FreeMor::identity(self.flavor, w.flatten()))
            }
            QTerm::Compose(a, b) => a.delta()?.compose(&b.delta()?),
            QTerm::Tensor(a, b) => a.delta()?.tensor(&b.delta()?),
        }
    }

    pub fn equals(&self, other: &QMor) -> Result<bool> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Incomparable(format!(
                "{} → {} versus {} → {}",
                self.source, self.target, other.source, other.target
            )));
        }
        self.delta()?.equals(&other.delta()?)
    }
}

impl fmt::Display for QMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.term {
            QTerm::Free(u) => write!(f, "free({} → {})", u.source(), u.target()),
            QTerm::Q(w) => write!(f, "q{w}"),
            QTerm::QInv(w) => write!(f, "q^-1{w}"),
            QTerm::Id(w) => write!(f, "id{w}"),
            QTerm::Compose(a, b) => write!(f, "({a} . {b})"),
            QTerm::Tensor(a, b) => write!(f, "({a} ; {b})"),
        }
    }
}

/// `ζ` on objects: the length-one tuple of tuples.
pub fn zeta_obj(x: &Tuple) -> Tuple2 {
    Tuple2(vec![x.clone()])
}

/// `ζ` on morphisms: one block, outer identity.
pub fn zeta(u: &FreeMor) -> QMor {
    QMor::free(FreeMor2::one_block(u.clone()))
}

/// The monoidal constraint of `ζ` at `(x, y)`.
pub fn zeta_constraint(flavor: Flavor, x: &Tuple, y: &Tuple) -> QMor {
    QMor::q(flavor, Tuple2(vec![x.clone(), y.clone()]))
}

/// The unit constraint of `ζ`.
pub fn zeta_unit(flavor: Flavor) -> QMor {
    QMor::q(flavor, Tuple2::empty())
}

/// `ζ♭` on objects: one singleton block per letter.
pub fn zeta_flat_obj(x: &Tuple) -> Tuple2 {
    Tuple2::singletons(x)
}

/// `ζ♭` on morphisms: the outer content acts on singleton blocks.
pub fn zeta_flat(u: &FreeMor) -> QMor {
    QMor::free(FreeMor2::on_singletons(u))
}

pub fn delta_eval(t: &QMor) -> Result<FreeMor> {
    t.delta()
}

/// `Θ♭_w = q_w⁻¹ ∘ q_{ζ♭ w_•}: ζ♭δw → w`.
pub fn theta_flat_component(flavor: Flavor, w: &Tuple2) -> QMor {
    let flat = zeta_flat_obj(&w.flatten());
    QMor::q_inv(flavor, w.clone())
        .compose(QMor::q(flavor, flat))
        .expect("both sides pass through (w_•)")
}

pub fn qmor_equal(s: &QMor, t: &QMor) -> Result<bool> {
    s.equals(t)
}
