//! Cyclic towers `K = L_0 < L_1 < ... < L_t = L` with prime relative degrees,
//! and the descent that peels one cyclic step at a time from the top.
//!
//! At each step of odd prime degree `q` the descent asks whether `q` divides
//! the rank product of `p`. If it does, `q` witnesses the non-coprime
//! alternative. If not, the rank theorem rules out `p` being new at this level,
//! so `p` already divides the class number one level down, with a rank no
//! larger than before. Reaching `K` means `p | h(K)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arithmetic::{gcd, is_prime, multiplicative_order, Factorization};
use crate::congruence::{rank_product, Verdict};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldNode {
    label: String,
    degree: BigUint,
    discriminant: Option<BigInt>,
    class_number: Option<BigUint>,
    class_factorization: Option<Factorization>,
}

impl FieldNode {
    pub fn new(label: impl Into<String>, degree: BigUint) -> Result<Self> {
        if degree.is_zero() {
            return Err(Error::invalid("field degree must be at least 1"));
        }
        Ok(FieldNode {
            label: label.into(),
            degree,
            discriminant: None,
            class_number: None,
            class_factorization: None,
        })
    }

    pub fn with_discriminant(mut self, discriminant: BigInt) -> Result<Self> {
        if discriminant.is_zero() {
            return Err(Error::invalid("discriminant must be nonzero"));
        }
        self.discriminant = Some(discriminant);
        Ok(self)
    }

    pub fn with_class_number(mut self, h: BigUint) -> Result<Self> {
        if h.is_zero() {
            return Err(Error::invalid("class number must be positive"));
        }
        self.class_number = Some(h);
        self.check_class_forms()?;
        Ok(self)
    }

    pub fn with_class_factorization(mut self, factorization: Factorization) -> Result<Self> {
        self.class_factorization = Some(factorization);
        self.check_class_forms()?;
        Ok(self)
    }

    fn check_class_forms(&self) -> Result<()> {
        if let (Some(h), Some(f)) = (&self.class_number, &self.class_factorization) {
            if f.product() != *h {
                return Err(Error::invalid(format!(
                    "class number {h} of {} disagrees with factorization {f}",
                    self.label
                )));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> &BigUint {
        &self.degree
    }

    pub fn discriminant(&self) -> Option<&BigInt> {
        self.discriminant.as_ref()
    }

    /// Class number, from either stored form.
    pub fn class_number(&self) -> Option<BigUint> {
        self.class_number
            .clone()
            .or_else(|| self.class_factorization.as_ref().map(Factorization::product))
    }
}

/// `base = K` of 2-power degree, cyclic steps of odd prime degree listed
/// bottom-up, and `top = L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicTower {
    base: FieldNode,
    steps: Vec<BigUint>,
    top: FieldNode,
}

impl CyclicTower {
    /// Assembles a tower without checking it; see [`validate_tower`].
    pub fn new(base: FieldNode, steps: Vec<BigUint>, top: FieldNode) -> Self {
        CyclicTower { base, steps, top }
    }

    /// Tower with anonymous fields `K` and `L`, the top degree implied by the steps.
    pub fn from_degrees(base_degree: BigUint, steps: Vec<BigUint>) -> Result<Self> {
        let top_degree = steps.iter().fold(base_degree.clone(), |acc, q| acc * q);
        let tower = CyclicTower {
            base: FieldNode::new("K", base_degree)?,
            steps,
            top: FieldNode::new("L", top_degree)?,
        };
        validate_tower(&tower)?;
        Ok(tower)
    }

    /// Parses `"base_degree:q1,q2,..."`, steps bottom-up, e.g. `"2:5,13"`.
    pub fn parse(literal: &str) -> Result<Self> {
        let (base, steps) = literal
            .split_once(':')
            .ok_or_else(|| Error::InvalidTower(format!("expected base:steps, got {literal:?}")))?;
        let parse_int = |s: &str| {
            s.trim()
                .parse::<BigUint>()
                .map_err(|_| Error::InvalidTower(format!("not a nonnegative integer: {s:?}")))
        };
        let base = parse_int(base)?;
        let steps = steps
            .split(',')
            .map(parse_int)
            .collect::<Result<Vec<_>>>()?;
        CyclicTower::from_degrees(base, steps)
    }

    pub fn base(&self) -> &FieldNode {
        &self.base
    }

    pub fn steps(&self) -> &[BigUint] {
        &self.steps
    }

    pub fn top(&self) -> &FieldNode {
        &self.top
    }

    /// Product of the step degrees, the odd part `N1` of the top degree.
    pub fn odd_degree(&self) -> BigUint {
        self.steps.iter().product()
    }
}

impl fmt::Display for CyclicTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.base.degree)?;
        for (i, q) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

/// Checks every tower invariant, reporting the first one violated.
pub fn validate_tower(tower: &CyclicTower) -> Result<()> {
    let base_degree = &tower.base.degree;
    if base_degree.is_zero() || !(base_degree & (base_degree - 1u8)).is_zero() {
        return Err(Error::InvalidTower(format!(
            "base degree {base_degree} is not a power of 2"
        )));
    }
    if tower.steps.is_empty() {
        return Err(Error::InvalidTower("a tower needs at least one step".to_string()));
    }
    for q in &tower.steps {
        if q.is_even() || !is_prime(q) {
            return Err(Error::InvalidTower(format!("step degree {q} is not an odd prime")));
        }
    }
    let expected = base_degree * tower.odd_degree();
    if expected != tower.top.degree {
        return Err(Error::InvalidTower(format!(
            "top degree {} differs from {base_degree} x {} = {expected}",
            tower.top.degree,
            tower.odd_degree()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    WitnessHere,
    PushedDown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    pub q: BigUint,
    /// Order of `p` modulo `q`; absent when `q = p`.
    pub order: Option<BigUint>,
    pub outcome: StepOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTrace {
    pub steps: Vec<DescentStep>,
    pub final_verdict: Verdict,
}

impl fmt::Display for DescentTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            let order = step
                .order
                .as_ref()
                .map_or_else(|| "-".to_string(), ToString::to_string);
            let outcome = match step.outcome {
                StepOutcome::WitnessHere => "witness-here",
                StepOutcome::PushedDown => "pushed-down",
            };
            writeln!(f, "step q={} order={order} {outcome}", step.q)?;
        }
        write!(f, "final: {}", self.final_verdict)
    }
}

/// Walks the tower from the top step down. The rank is held at `r` on every
/// level: lower ranks are at most `r`, and the rank product at `r` is a
/// multiple of the one at any smaller rank.
pub fn descend(tower: &CyclicTower, p: &BigUint, r: u32) -> Result<DescentTrace> {
    validate_tower(tower)?;
    let product = rank_product(p, r)?;
    let mut steps = Vec::with_capacity(tower.steps.len());
    for q in tower.steps.iter().rev() {
        let order = if gcd(p, q).is_one() {
            Some(multiplicative_order(p, q)?)
        } else {
            None
        };
        if (&product % q).is_zero() {
            steps.push(DescentStep {
                q: q.clone(),
                order,
                outcome: StepOutcome::WitnessHere,
            });
            return Ok(DescentTrace {
                steps,
                final_verdict: Verdict::Witness(q.clone()),
            });
        }
        steps.push(DescentStep {
            q: q.clone(),
            order,
            outcome: StepOutcome::PushedDown,
        });
    }
    Ok(DescentTrace {
        steps,
        final_verdict: Verdict::SubfieldDivisibility { confirmed: false },
    })
}
